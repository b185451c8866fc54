//! Comparing two grammars by their languages up to a length bound.

use std::fmt;

use crate::error::Result;
use crate::grammar::Grammar;
use crate::multiplicity::Multiplicity;
use crate::multiset::Multiset;
use crate::semantics::enumerate;
use crate::symbol::SymString;

/// Strongest relation that holds; each level implies the ones after it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EquivalenceLevel {
    MultisetEqual,
    /// Multiplicities agree up to the classes 0, 1 and "two or more".
    StronglyEquivalent,
    /// Same supports.
    Similar,
    Different,
}

impl EquivalenceLevel {
    pub fn as_str(self) -> &'static str {
        match self {
            EquivalenceLevel::MultisetEqual => "multiset-equal",
            EquivalenceLevel::StronglyEquivalent => "strongly-equivalent",
            EquivalenceLevel::Similar => "similar",
            EquivalenceLevel::Different => "different",
        }
    }
}

impl fmt::Display for EquivalenceLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub level: EquivalenceLevel,
    /// Least string on which the multiplicities differ.
    pub first_divergence: Option<(SymString, Multiplicity, Multiplicity)>,
}

impl EquivalenceVerdict {
    pub fn is_equal(&self) -> bool {
        self.level == EquivalenceLevel::MultisetEqual
    }
}

/// Compares two multilanguages.
pub fn compare(a: &Multiset<SymString>, b: &Multiset<SymString>) -> EquivalenceVerdict {
    let mut keys: Vec<&SymString> = a.elements().chain(b.elements()).collect();
    keys.sort();
    keys.dedup();
    let mut level = EquivalenceLevel::MultisetEqual;
    let mut first_divergence = None;
    for w in keys {
        let (x, y) = (a.count(w), b.count(w));
        if x == y {
            continue;
        }
        let here = if x.ambiguity_class() == y.ambiguity_class() {
            EquivalenceLevel::StronglyEquivalent
        } else if x.is_zero() || y.is_zero() {
            EquivalenceLevel::Different
        } else {
            EquivalenceLevel::Similar
        };
        level = level.max(here);
        if first_divergence.is_none() {
            first_divergence = Some((w.clone(), x, y));
        }
    }
    EquivalenceVerdict { level, first_divergence }
}

/// Compares `L(g1)` and `L(g2)` on strings of length at most `max_len`.
pub fn equivalence(g1: &Grammar, g2: &Grammar, max_len: usize) -> Result<EquivalenceVerdict> {
    Ok(compare(&enumerate(g1, max_len)?, &enumerate(g2, max_len)?))
}
