//! Chomsky normal form with circularity confined to `Z`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{substitute_all, Draft, Site, TransformResult};
use crate::error::{Error, Result};
use crate::grammar::{Grammar, Pid};
use crate::multiplicity::Multiplicity;
use crate::multiset::Multiset;
use crate::semantics::analysis::{circular_nonterminals, nullable_set, unit_edges, Indexed};
use crate::symbol::{SymString, Symbol};

/// How much of the circular machinery to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CnfMode {
    /// Keeps `Z → Z` and `Z → ε`; the language is unchanged.
    KeepZ,
    /// Drops `Z → Z`; the language keeps its support but loses `∞`.
    Similar,
    /// Also eliminates `Z → ε`: every production is `A → BC` or `A → a`.
    Strict,
}

impl std::str::FromStr for CnfMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "keep-z" | "keepz" | "" => Ok(CnfMode::KeepZ),
            "similar" => Ok(CnfMode::Similar),
            "strict" => Ok(CnfMode::Strict),
            other => Err(Error::Precondition(format!("unknown CNF mode `{other}`"))),
        }
    }
}

impl Draft {
    /// One `Y → a` per terminal appearing in a basic string of length ≥ 2.
    fn isolate_terminals(&mut self) -> Result<()> {
        let mut used: BTreeSet<Symbol> = BTreeSet::new();
        for s in self.prods.iter().map(|p| &p.rhs).chain(self.start.elements()) {
            if s.len() >= 2 {
                used.extend(s.iter().filter(|x| x.is_terminal()).cloned());
            }
        }
        let mut map: BTreeMap<Symbol, Symbol> = BTreeMap::new();
        for a in used {
            let y = self.fresh("Y");
            self.add_nonterminal(y.clone())?;
            map.insert(a, y);
        }
        let sub = |s: &SymString| -> SymString {
            if s.len() < 2 {
                return s.clone();
            }
            s.iter().map(|x| map.get(x).unwrap_or(x).clone()).collect()
        };
        self.start = self.start.map(sub);
        for p in &mut self.prods {
            p.rhs = sub(&p.rhs);
        }
        for (a, y) in &map {
            self.push(y.clone(), SymString::new(vec![a.clone()]), BigUint::one(), BTreeSet::new());
            self.note(format!("isolate: {y} -> {a}"));
        }
        Ok(())
    }

    /// Nonterminals ordered so that unit derivations only go forward; `z`
    /// first, ties broken alphabetically.
    fn unit_order(&self, z: Option<&Symbol>) -> Result<Vec<Symbol>> {
        let g = self.grammar()?;
        let ix = Indexed::new(&g);
        let edges = unit_edges(&ix, &nullable_set(&ix));
        let n = ix.len();
        let mut indeg = vec![0usize; n];
        for (a, out) in edges.iter().enumerate() {
            for &b in out {
                if a != b {
                    indeg[b] += 1;
                }
            }
        }
        let mut ready: BTreeSet<(bool, Symbol, usize)> = (0..n)
            .filter(|&a| indeg[a] == 0)
            .map(|a| (Some(&ix.nts[a]) != z, ix.nts[a].clone(), a))
            .collect();
        let mut order = Vec::with_capacity(n);
        while let Some(first) = ready.iter().next().cloned() {
            ready.remove(&first);
            let a = first.2;
            order.push(ix.nts[a].clone());
            for &b in &edges[a] {
                if a != b {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        ready.insert((Some(&ix.nts[b]) != z, ix.nts[b].clone(), b));
                    }
                }
            }
        }
        if order.len() != n {
            return Err(Error::Internal("unit derivations still contain a cycle".into()));
        }
        Ok(order)
    }

    fn drop_where(&mut self, what: &str, mut pred: impl FnMut(&super::DProd) -> bool) {
        let before = self.prods.len();
        let mut dropped = Vec::new();
        self.prods.retain(|p| {
            let d = pred(p);
            if d {
                dropped.push(format!("{} -> {}", p.lhs, p.rhs.spaced()));
            }
            !d
        });
        if self.prods.len() != before {
            self.note(format!("{what}: dropped {}", dropped.join(", ")));
        }
    }

    fn units_of(&self, a: &Symbol) -> Vec<Pid> {
        self.prods_of(a).filter(|p| p.rhs.len() == 1 && p.rhs.symbols()[0].is_nonterminal()).map(|p| p.pid).collect()
    }

    fn expand_units(&mut self, a: &Symbol) -> Result<()> {
        loop {
            let a2 = a.clone();
            self.drop_where("self-unit", |p| p.lhs == a2 && p.rhs.len() == 1 && p.rhs.symbols()[0] == a2);
            let units = self.units_of(a);
            if units.is_empty() {
                return Ok(());
            }
            for pid in units {
                self.expand(&Site::Production(pid), 0)?;
            }
        }
    }

    /// Eliminates every `a → ε` entry at once.
    fn eliminate_epsilons(&mut self, a: &Symbol) -> BigUint {
        let mut c = BigUint::zero();
        self.prods.retain(|p| {
            if &p.lhs == a && p.rhs.is_empty() {
                c += &p.copies;
                false
            } else {
                true
            }
        });
        if c.is_zero() {
            return c;
        }
        let mut alts = Multiset::singleton(SymString::new(vec![a.clone()]));
        alts.insert(SymString::epsilon(), Multiplicity::Finite(c.clone()));
        self.rewrite(|_, s| {
            if s.contains(a) {
                substitute_all(s, a, &alts)
            } else {
                Multiset::singleton(s.clone())
            }
        });
        self.note(format!("eliminate: {c} * {a} -> _"));
        c
    }

    pub(crate) fn cnf(&mut self, mode: CnfMode) -> Result<()> {
        self.reduce()?;
        let z = if circular_nonterminals(&self.grammar()?).is_empty() {
            None
        } else {
            let z = self.localize()?;
            self.reduce()?;
            Some(z)
        };
        self.merge_cocircular()?;
        self.isolate_terminals()?;
        self.binarize("X")?;
        // a new X -> A B with a nullable side can close a unit cycle
        self.merge_cocircular()?;
        let order = self.unit_order(z.as_ref())?;
        let names: Vec<&str> = order.iter().map(Symbol::name).collect();
        self.note(format!("order: {}", names.join(" ")));

        for k in (0..order.len()).rev() {
            let ak = &order[k];
            if Some(ak) == z.as_ref() {
                continue;
            }
            if !self.eliminate_epsilons(ak).is_zero() {
                let a2 = ak.clone();
                self.drop_where("re-created", |p| {
                    p.lhs == a2 && (p.rhs.is_empty() || (p.rhs.len() == 1 && p.rhs.symbols()[0] == a2))
                });
                for aj in order[k + 1..].iter().rev() {
                    self.expand_units(aj)?;
                }
            }
            self.expand_units(ak)?;
        }

        if let Some(z) = &z {
            if mode != CnfMode::KeepZ {
                let z2 = z.clone();
                self.drop_where("similar", |p| p.lhs == z2 && p.rhs.len() == 1 && p.rhs.symbols()[0] == z2);
            }
            if mode == CnfMode::Strict {
                self.eliminate_epsilons(z);
            }
        }
        self.consolidate();
        if mode == CnfMode::Strict {
            self.reduce()?;
        }
        Ok(())
    }
}

/// Chomsky normal form. With circular input the result keeps a special
/// `Z → Z | ε` unless `mode` asks otherwise.
pub fn chomsky_normal_form(g: &Grammar, mode: CnfMode) -> Result<TransformResult> {
    let mut d = Draft::new(g);
    d.cnf(mode)?;
    d.finish()
}

/// Every production is `A → BC` or `A → a`, apart from `Z → Z`, `Z → ε`.
pub(crate) fn is_cnf(g: &Grammar, z_allowed: bool) -> bool {
    let z = g.symbol("Z");
    g.productions().iter().all(|p| {
        let s = p.rhs.symbols();
        (s.len() == 2 && s.iter().all(Symbol::is_nonterminal))
            || (s.len() == 1 && s[0].is_terminal())
            || (z_allowed && Some(&p.lhs) == z.as_ref() && (s.is_empty() || s == [p.lhs.clone()]))
    })
}
