//! Counting derivations by breadth-first expansion of sentential forms.

use crate::error::{Error, Result};
use crate::grammar::Grammar;
use crate::multiplicity::Multiplicity;
use crate::multiset::Multiset;
use crate::symbol::SymString;

/// Number of `n`-step derivations `σ →ⁿ τ` for every `n ≤ max_steps`.
/// Entry `n` of the result counts derivations of exactly `n` steps.
pub fn derivations_by_length(
    g: &Grammar,
    sigma: &SymString,
    tau: &SymString,
    max_steps: usize,
) -> Result<Vec<Multiplicity>> {
    g.check_string(sigma)?;
    g.check_string(tau)?;
    let budget = tau.iter().filter(|s| s.is_terminal()).count();
    let mut frontier = Multiset::singleton(sigma.clone());
    let mut out = Vec::with_capacity(max_steps + 1);
    for step in 0..=max_steps {
        out.push(frontier.count(tau));
        if step == max_steps {
            break;
        }
        let mut next = Multiset::new();
        for (form, m) in frontier.iter() {
            for (f2, k) in g.step(form).iter() {
                // terminals never disappear
                if f2.iter().filter(|s| s.is_terminal()).count() <= budget {
                    next.insert(f2.clone(), m * k);
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// `Σ_{n ≤ max_steps} |{σ →ⁿ τ}|`.
pub fn count_derivations(
    g: &Grammar,
    sigma: &SymString,
    tau: &SymString,
    max_steps: usize,
) -> Result<Multiplicity> {
    if max_steps > 64 {
        return Err(Error::Precondition("step bound above 64".into()));
    }
    Ok(derivations_by_length(g, sigma, tau, max_steps)?.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::GrammarBuilder;

    #[test]
    fn two_orders() {
        let g = GrammarBuilder::new()
            .terminals(&["a", "b"])
            .nonterminals(&["A", "B"])
            .rule("A", "a")
            .rule("B", "b")
            .build()
            .unwrap();
        let sigma = g.parse_string("A B").unwrap();
        let tau = SymString::terminals("ab");
        assert_eq!(count_derivations(&g, &sigma, &tau, 2).unwrap(), 2u64.into());
        assert_eq!(count_derivations(&g, &sigma, &tau, 1).unwrap(), 0u64.into());
    }

    #[test]
    fn zero_steps() {
        let g = GrammarBuilder::new().terminals(&["a"]).build().unwrap();
        let s = SymString::terminals("a");
        assert_eq!(count_derivations(&g, &s, &s, 0).unwrap(), 1u64.into());
    }

    #[test]
    fn per_length_breakdown() {
        let g = GrammarBuilder::new()
            .terminals(&["a"])
            .nonterminals(&["A"])
            .rule("A", "A A")
            .rule("A", "a")
            .build()
            .unwrap();
        let v = derivations_by_length(&g, &g.parse_string("A").unwrap(), &SymString::terminals("aa"), 3).unwrap();
        assert_eq!(v, vec![0u64.into(), 0u64.into(), 0u64.into(), 2u64.into()]);
    }
}
