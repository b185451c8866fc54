//! Left-recursion removal and Greibach normal form.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;

use super::cnf::is_cnf;
use super::{CnfMode, Draft, Site, TransformResult};
use crate::error::{Error, Result};
use crate::grammar::{Grammar, Pid};
use crate::semantics::analysis::{left_corner_edges, left_recursive, nullable_set, Indexed};
use crate::symbol::{SymString, Symbol};

const MAX_ROUNDS: usize = 256;

impl Draft {
    fn remove_left_recursion(&mut self, x: &Symbol, suffix: &str) -> Result<()> {
        if !self.nonterminals.contains(x) {
            return Err(Error::NotNonterminal(x.name().to_owned()));
        }
        let nts: Vec<Symbol> = self.nonterminals.iter().cloned().collect();
        for a in &nts {
            self.add_nonterminal(a.suffixed(suffix))?;
        }
        let old: Vec<super::DProd> = self.prods.clone();
        for p in &old {
            match p.rhs.symbols() {
                [b, c] if b.is_nonterminal() && c.is_nonterminal() => {
                    let rhs = SymString::new(vec![c.clone(), p.lhs.suffixed(suffix)]);
                    self.push(b.suffixed(suffix), rhs, p.copies.clone(), p.origin.clone());
                }
                [a] if a.is_terminal() => {
                    let rhs = SymString::new(vec![a.clone(), p.lhs.suffixed(suffix)]);
                    self.push(x.clone(), rhs, p.copies.clone(), p.origin.clone());
                }
                _ => {}
            }
        }
        self.push(x.suffixed(suffix), SymString::epsilon(), BigUint::one(), BTreeSet::new());
        let original: BTreeSet<Pid> = old.iter().filter(|p| &p.lhs == x).map(|p| p.pid).collect();
        self.prods.retain(|p| !original.contains(&p.pid));
        self.note(format!("left recursion: rebuilt {x} through {x}{suffix}"));
        self.reduce()
    }

    /// A suffix that yields no existing name for any nonterminal.
    fn fresh_suffix(&self) -> String {
        std::iter::once("'".to_owned())
            .chain((1..).map(|i| format!("_{i}")))
            .find(|s| self.nonterminals.iter().all(|n| !self.has_name(&format!("{}{s}", n.name()))))
            .expect("unbounded candidates")
    }

    fn left_corner_order(&self) -> Result<Vec<Symbol>> {
        let g = self.grammar()?;
        let ix = Indexed::new(&g);
        let edges = left_corner_edges(&ix, &nullable_set(&ix));
        let n = ix.len();
        let mut indeg = vec![0usize; n];
        for out in &edges {
            for &b in out {
                indeg[b] += 1;
            }
        }
        let mut ready: BTreeSet<(Symbol, usize)> =
            (0..n).filter(|&a| indeg[a] == 0).map(|a| (ix.nts[a].clone(), a)).collect();
        let mut order = Vec::new();
        while let Some(first) = ready.iter().next().cloned() {
            ready.remove(&first);
            order.push(first.0.clone());
            for &b in &edges[first.1] {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    ready.insert((ix.nts[b].clone(), b));
                }
            }
        }
        if order.len() != n {
            return Err(Error::Internal("left corners still form a cycle".into()));
        }
        Ok(order)
    }

    pub(crate) fn gnf(&mut self) -> Result<()> {
        self.cnf(CnfMode::Strict)?;
        for round in 0.. {
            let lr = left_recursive(&self.grammar()?);
            let Some(x) = lr.into_iter().next() else { break };
            if round == MAX_ROUNDS {
                return Err(Error::Internal("left-recursion removal did not converge".into()));
            }
            let suffix = self.fresh_suffix();
            self.remove_left_recursion(&x, &suffix)?;
            self.cnf(CnfMode::Strict)?;
        }
        let order = self.left_corner_order()?;
        for a in order.iter().rev() {
            loop {
                let lead: Vec<Pid> = self
                    .prods_of(a)
                    .filter(|p| p.rhs.symbols().first().is_some_and(Symbol::is_nonterminal))
                    .map(|p| p.pid)
                    .collect();
                if lead.is_empty() {
                    break;
                }
                for pid in lead {
                    self.expand(&Site::Production(pid), 0)?;
                }
            }
        }
        self.consolidate();
        self.reduce()?;
        if self.prods.iter().any(|p| p.rhs.symbols().first().is_none_or(|s| !s.is_terminal())) {
            return Err(Error::Internal("a production does not start with a terminal".into()));
        }
        Ok(())
    }
}

/// Rebuilds `𝒫(X)` through primed nonterminals so that `X` is no longer
/// left-recursive. The grammar must be in Chomsky normal form.
pub fn remove_left_recursion(g: &Grammar, x: &str) -> Result<TransformResult> {
    let sym = g
        .symbol(x)
        .filter(Symbol::is_nonterminal)
        .ok_or_else(|| Error::NotNonterminal(x.to_owned()))?;
    if !is_cnf(g, true) {
        return Err(Error::Precondition("grammar is not in Chomsky normal form".into()));
    }
    let mut d = Draft::new(g);
    d.remove_left_recursion(&sym, "'")?;
    d.finish()
}

/// Greibach normal form: every production is `A → aA₁…A_k`.
pub fn greibach_normal_form(g: &Grammar) -> Result<TransformResult> {
    let mut d = Draft::new(g);
    d.gnf()?;
    d.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::GrammarBuilder;
    use crate::semantics::enumerate;

    fn xb() -> Grammar {
        GrammarBuilder::new()
            .terminals(&["a", "b"])
            .nonterminals(&["X", "B"])
            .start("X")
            .rule("X", "X B")
            .rule("X", "a")
            .rule("B", "b")
            .build()
            .unwrap()
    }

    fn rhs_of(g: &Grammar, lhs: &str) -> Vec<String> {
        let mut v: Vec<String> =
            g.productions().iter().filter(|p| p.lhs.name() == lhs).map(|p| p.rhs.spaced()).collect();
        v.sort();
        v
    }

    #[test]
    fn left_recursion_example() {
        let g = xb();
        let r = remove_left_recursion(&g, "X").unwrap().grammar;
        assert_eq!(rhs_of(&r, "X"), ["a X'"]);
        assert_eq!(rhs_of(&r, "X'"), ["B X'", "_"]);
        assert_eq!(rhs_of(&r, "B"), ["b"]);
        assert!(left_recursive(&r).is_empty());
        assert_eq!(enumerate(&r, 5).unwrap(), enumerate(&g, 5).unwrap());
    }

    #[test]
    fn ambiguous_left_recursion_keeps_counts() {
        let g = GrammarBuilder::new()
            .terminals(&["a"])
            .nonterminals(&["X"])
            .start("X")
            .rule("X", "X X")
            .rule("X", "a")
            .build()
            .unwrap();
        let r = remove_left_recursion(&g, "X").unwrap().grammar;
        assert_eq!(enumerate(&r, 6).unwrap(), enumerate(&g, 6).unwrap());
    }

    #[test]
    fn requires_cnf() {
        let g = GrammarBuilder::new()
            .terminals(&["a"])
            .nonterminals(&["X"])
            .rule("X", "a a")
            .build()
            .unwrap();
        assert!(remove_left_recursion(&g, "X").is_err());
        assert!(remove_left_recursion(&xb(), "Q").is_err());
    }

    #[test]
    fn greibach_single_expansion() {
        let g = GrammarBuilder::new()
            .terminals(&["b", "c"])
            .nonterminals(&["A", "B", "C"])
            .start("A")
            .rule("A", "B C")
            .rule("B", "b")
            .rule("C", "c")
            .build()
            .unwrap();
        let r = greibach_normal_form(&g).unwrap().grammar;
        assert_eq!(rhs_of(&r, "A"), ["b C"]);
        assert_eq!(rhs_of(&r, "C"), ["c"]);
        assert!(r.symbol("B").is_none());
    }

    #[test]
    fn greibach_of_left_recursive_grammar() {
        let g = xb();
        let r = greibach_normal_form(&g).unwrap().grammar;
        assert_eq!(enumerate(&r, 5).unwrap(), enumerate(&g, 5).unwrap());
        assert!(r.productions().iter().all(|p| p.rhs.symbols()[0].is_terminal()));
    }
}
