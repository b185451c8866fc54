//! Confining infinite multiplicity: the primed split and co-circular merging.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::One;

use super::{Draft, TransformResult};
use crate::error::Result;
use crate::grammar::Grammar;
use crate::multiset::Multiset;
use crate::semantics::analysis::{circular_nonterminals, cocircular_classes};
use crate::symbol::{SymString, Symbol};

/// `(σ′, σ″)` for one string.
fn split(s: &SymString, circular: &BTreeSet<Symbol>) -> (Vec<SymString>, Vec<SymString>) {
    if s.iter().any(|x| circular.contains(x)) {
        return (vec![s.clone()], Vec::new());
    }
    let positions: Vec<usize> = (0..s.len()).filter(|&i| s.symbols()[i].is_nonterminal()).collect();
    let mut primed = Vec::new();
    for (k, &pk) in positions.iter().enumerate() {
        let v: Vec<Symbol> = s
            .iter()
            .enumerate()
            .map(|(i, x)| {
                if i == pk {
                    x.suffixed("'")
                } else if positions[..k].contains(&i) {
                    x.suffixed("''")
                } else {
                    x.clone()
                }
            })
            .collect();
        primed.push(SymString::new(v));
    }
    let double: SymString = s
        .iter()
        .map(|x| if x.is_nonterminal() { x.suffixed("''") } else { x.clone() })
        .collect();
    (primed, vec![double])
}

impl Draft {
    /// Adds `A′`, `A″` for noncircular `A`, splits the starting strings, and
    /// prefixes the infinite part with a new `Z → Z | ε`.
    pub(crate) fn localize(&mut self) -> Result<Symbol> {
        let circular = circular_nonterminals(&self.grammar()?);
        let plain: Vec<Symbol> = self
            .nonterminals
            .iter()
            .filter(|a| !circular.contains(*a))
            .cloned()
            .collect();
        for a in &plain {
            self.add_nonterminal(a.suffixed("'"))?;
            self.add_nonterminal(a.suffixed("''"))?;
        }
        let z = self.fresh("Z");
        self.add_nonterminal(z.clone())?;

        for a in &plain {
            let own: Vec<(SymString, BigUint, BTreeSet<crate::grammar::Pid>)> = self
                .prods_of(a)
                .map(|p| (p.rhs.clone(), p.copies.clone(), p.origin.clone()))
                .collect();
            for (rhs, k, origin) in &own {
                let (p1, p2) = split(rhs, &circular);
                for s in p1 {
                    self.push(a.suffixed("'"), s, k.clone(), origin.clone());
                }
                for s in p2 {
                    self.push(a.suffixed("''"), s, k.clone(), origin.clone());
                }
            }
        }
        let mut start = Multiset::new();
        for (s, m) in self.start.iter() {
            let (p1, p2) = split(s, &circular);
            for t in p1 {
                let mut v = vec![z.clone()];
                v.extend(t.iter().cloned());
                start.insert(SymString::new(v), m.clone());
            }
            for t in p2 {
                start.insert(t, m.clone());
            }
        }
        self.start = start;
        self.push(z.clone(), SymString::new(vec![z.clone()]), BigUint::one(), BTreeSet::new());
        self.push(z.clone(), SymString::epsilon(), BigUint::one(), BTreeSet::new());
        self.note(format!(
            "localize: split {} noncircular nonterminals, added {z}",
            plain.len()
        ));
        Ok(z)
    }

    /// Replaces each co-circular class by its alphabetically least member.
    pub(crate) fn merge_cocircular(&mut self) -> Result<()> {
        let classes = cocircular_classes(&self.grammar()?);
        let mut rep: BTreeMap<Symbol, Symbol> = BTreeMap::new();
        for class in &classes {
            let least = class.iter().next().expect("nonempty class").clone();
            for b in class.iter().skip(1) {
                rep.insert(b.clone(), least.clone());
                self.note(format!("merge: {b} into {least}"));
            }
        }
        if rep.is_empty() {
            return Ok(());
        }
        let rename = |s: &SymString| -> SymString {
            s.iter().map(|x| rep.get(x).unwrap_or(x).clone()).collect()
        };
        self.start = self.start.map(rename);
        for p in &mut self.prods {
            p.lhs = rep.get(&p.lhs).unwrap_or(&p.lhs).clone();
            p.rhs = rename(&p.rhs);
        }
        self.nonterminals.retain(|n| !rep.contains_key(n));
        Ok(())
    }
}

/// Splits each noncircular `A` into `A′` (strings of infinite multiplicity)
/// and `A″` (finite multiplicity) and routes the infinite part through `Z`.
pub fn localize_circularity(g: &Grammar) -> Result<TransformResult> {
    let mut d = Draft::new(g);
    d.localize()?;
    d.finish()
}

/// Merges mutually derivable circular nonterminals.
pub fn merge_cocircular(g: &Grammar) -> Result<TransformResult> {
    let mut d = Draft::new(g);
    d.merge_cocircular()?;
    d.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::tests::worked_example;
    use crate::grammar::GrammarBuilder;
    use crate::semantics::{enumerate, enumerate_from};

    fn rhs_of(g: &Grammar, lhs: &str) -> Vec<String> {
        let mut v: Vec<String> = g
            .productions()
            .iter()
            .filter(|p| p.lhs.name() == lhs)
            .map(|p| p.rhs.spaced())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn worked_example_split() {
        let g = worked_example();
        let r = localize_circularity(&g).unwrap().grammar;
        assert_eq!(rhs_of(&r, "A'"), ["A' A a", "A'' A' a", "B"]);
        assert_eq!(rhs_of(&r, "A''"), ["A'' A'' a", "_"]);
        assert_eq!(rhs_of(&r, "Z"), ["Z", "_"]);
        let starts: Vec<String> = r.start().elements().map(SymString::spaced).collect();
        assert_eq!(starts, ["A''", "Z A'"]);
        assert_eq!(enumerate(&r, 3).unwrap(), enumerate(&g, 3).unwrap());
        for (_, m) in enumerate_from(&r, &r.parse_string("A'").unwrap(), 3).unwrap().iter() {
            assert!(m.is_infinite());
        }
        for (_, m) in enumerate_from(&r, &r.parse_string("A''").unwrap(), 3).unwrap().iter() {
            assert!(m.is_finite());
        }
    }

    #[test]
    fn circular_and_empty_strings() {
        let circ: BTreeSet<Symbol> = [Symbol::n("B")].into();
        let (p, d) = split(&SymString::new(vec![Symbol::n("B")]), &circ);
        assert_eq!(p.len(), 1);
        assert!(d.is_empty());
        let (p, d) = split(&SymString::epsilon(), &circ);
        assert!(p.is_empty());
        assert_eq!(d, vec![SymString::epsilon()]);
    }

    #[test]
    fn merge_worked_example() {
        let r = merge_cocircular(&worked_example()).unwrap().grammar;
        assert_eq!(rhs_of(&r, "B"), ["B B", "B B", "_"]);
        assert!(r.symbol("C").is_none());
    }

    #[test]
    fn merge_two_cycle() {
        let g = GrammarBuilder::new()
            .terminals(&["a"])
            .nonterminals(&["A", "B"])
            .start("A")
            .rule("A", "B")
            .rule("B", "A")
            .rule("A", "a")
            .build()
            .unwrap();
        let r = merge_cocircular(&g).unwrap().grammar;
        assert_eq!(rhs_of(&r, "A"), ["A", "A", "a"]);
        let l = enumerate(&r, 1).unwrap();
        assert!(l.count(&SymString::terminals("a")).is_infinite());
        assert_eq!(l.distinct_len(), 1);
    }

    #[test]
    fn merge_without_circularity_is_identity() {
        let g = GrammarBuilder::new()
            .terminals(&["a"])
            .nonterminals(&["A"])
            .rule("A", "a")
            .build()
            .unwrap();
        assert_eq!(merge_cocircular(&g).unwrap().grammar, g);
    }
}
