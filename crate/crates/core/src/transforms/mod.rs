//! Language-preserving grammar rewrites and the normal forms built on them.

mod basic;
mod circularity;
mod cnf;
mod gnf;
mod pipeline;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::grammar::{Grammar, Pid, Production};
use crate::multiplicity::Multiplicity;
use crate::multiset::Multiset;
use crate::symbol::{SymString, Symbol};

pub use basic::{abbreviate, binarize, eliminate, eliminate_all, expand, reduce, Site};
pub use circularity::{localize_circularity, merge_cocircular};
pub use cnf::{chomsky_normal_form, CnfMode};
pub use gnf::{greibach_normal_form, remove_left_recursion};
pub use pipeline::{parse_pipeline, run_pipeline, Step};

/// Output of a transform: the new grammar, where each input production went,
/// and a log of the steps applied.
#[derive(Clone, Debug)]
pub struct TransformResult {
    pub grammar: Grammar,
    /// Input pid → pids of the output productions derived from it.
    pub provenance: BTreeMap<Pid, Multiset<Pid>>,
    pub notes: Vec<String>,
}

impl TransformResult {
    /// Chains provenance through a later transform applied to `self.grammar`.
    pub fn then(self, next: TransformResult) -> TransformResult {
        let mut provenance = BTreeMap::new();
        for (old, mids) in &self.provenance {
            let mut out = Multiset::new();
            for (mid, m) in mids.iter() {
                if let Some(news) = next.provenance.get(mid) {
                    out.extend_from(&news.scale(m));
                }
            }
            provenance.insert(*old, out);
        }
        let mut notes = self.notes;
        notes.extend(next.notes);
        TransformResult {
            grammar: next.grammar,
            provenance,
            notes,
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct DProd {
    pub pid: Pid,
    pub lhs: Symbol,
    pub rhs: SymString,
    pub copies: BigUint,
    pub origin: BTreeSet<Pid>,
}

/// Mutable working copy of a grammar.
#[derive(Clone, Debug)]
pub(crate) struct Draft {
    pub terminals: BTreeSet<Symbol>,
    pub nonterminals: BTreeSet<Symbol>,
    pub start: Multiset<SymString>,
    pub prods: Vec<DProd>,
    pub inputs: Vec<Pid>,
    pub notes: Vec<String>,
    next: usize,
}

impl Draft {
    pub fn new(g: &Grammar) -> Self {
        let prods: Vec<DProd> = g
            .productions()
            .iter()
            .map(|p| DProd {
                pid: p.pid,
                lhs: p.lhs.clone(),
                rhs: p.rhs.clone(),
                copies: p.copies.clone(),
                origin: BTreeSet::from([p.pid]),
            })
            .collect();
        let next = prods.iter().map(|p| p.pid.0 + 1).max().unwrap_or(0);
        Draft {
            terminals: g.terminals().clone(),
            nonterminals: g.nonterminals().clone(),
            start: g.start().clone(),
            inputs: prods.iter().map(|p| p.pid).collect(),
            prods,
            notes: Vec::new(),
            next,
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn push(&mut self, lhs: Symbol, rhs: SymString, copies: BigUint, origin: BTreeSet<Pid>) -> Pid {
        let pid = Pid(self.next);
        self.next += 1;
        self.prods.push(DProd {
            pid,
            lhs,
            rhs,
            copies,
            origin,
        });
        pid
    }

    pub fn has_name(&self, name: &str) -> bool {
        self.terminals.iter().chain(&self.nonterminals).any(|s| s.name() == name)
    }

    /// First of `base`, `base'`, `base''`, … not yet in use.
    pub fn fresh(&self, base: &str) -> Symbol {
        let mut name = base.to_owned();
        while self.has_name(&name) {
            name.push('\'');
        }
        Symbol::n(&name)
    }

    pub fn add_nonterminal(&mut self, s: Symbol) -> Result<()> {
        if self.has_name(s.name()) {
            return Err(Error::NameCollision(s.name().to_owned()));
        }
        self.nonterminals.insert(s);
        Ok(())
    }

    pub fn prods_of<'a>(&'a self, a: &'a Symbol) -> impl Iterator<Item = &'a DProd> + 'a {
        self.prods.iter().filter(move |p| &p.lhs == a)
    }

    pub fn index_of(&self, pid: Pid) -> Result<usize> {
        self.prods
            .iter()
            .position(|p| p.pid == pid)
            .ok_or_else(|| Error::NoSuchProduction(pid.to_string()))
    }

    /// Rewrites every basic string; production entries whose image is a
    /// multiset are split into one entry per distinct string.
    pub fn rewrite(&mut self, mut f: impl FnMut(Option<&Symbol>, &SymString) -> Multiset<SymString>) {
        let mut start = Multiset::new();
        for (s, m) in self.start.iter() {
            start.extend_from(&f(None, s).scale(m));
        }
        self.start = start;
        let old = std::mem::take(&mut self.prods);
        for p in old {
            let image = f(Some(&p.lhs), &p.rhs);
            if image.distinct_len() == 1 && image.contains(&p.rhs) && image.count(&p.rhs) == Multiplicity::one() {
                self.prods.push(p);
                continue;
            }
            for (s, m) in image.iter() {
                let k = m.finite().cloned().expect("finite image");
                self.push(p.lhs.clone(), s.clone(), &p.copies * k, p.origin.clone());
            }
        }
    }

    /// Merges entries with equal sides.
    pub fn consolidate(&mut self) {
        let mut seen: BTreeMap<(Symbol, SymString), usize> = BTreeMap::new();
        let old = std::mem::take(&mut self.prods);
        for p in old {
            let key = (p.lhs.clone(), p.rhs.clone());
            if let Some(&i) = seen.get(&key) {
                let q = &mut self.prods[i];
                q.copies += p.copies;
                q.origin.extend(p.origin);
            } else {
                seen.insert(key, self.prods.len());
                self.prods.push(p);
            }
        }
    }

    pub fn grammar(&self) -> Result<Grammar> {
        Grammar::new(
            self.terminals.clone(),
            self.nonterminals.clone(),
            self.start.clone(),
            self.prods
                .iter()
                .map(|p| Production {
                    pid: p.pid,
                    lhs: p.lhs.clone(),
                    rhs: p.rhs.clone(),
                    copies: p.copies.clone(),
                })
                .collect(),
        )
    }

    pub fn finish(self) -> Result<TransformResult> {
        let grammar = self.grammar()?;
        let mut provenance: BTreeMap<Pid, Multiset<Pid>> =
            self.inputs.iter().map(|p| (*p, Multiset::new())).collect();
        for p in &self.prods {
            for o in &p.origin {
                provenance.entry(*o).or_default().insert_one(p.pid);
            }
        }
        Ok(TransformResult {
            grammar,
            provenance,
            notes: self.notes,
        })
    }
}

/// `D(σ)`: every occurrence of `a` independently stays or is replaced by
/// an alternative. `alts` includes `a` itself when keeping is allowed.
pub(crate) fn substitute_all(s: &SymString, a: &Symbol, alts: &Multiset<SymString>) -> Multiset<SymString> {
    let mut acc: Multiset<SymString> = Multiset::singleton(SymString::epsilon());
    for x in s.iter() {
        let choices = if x == a {
            alts.clone()
        } else {
            Multiset::singleton(SymString::new(vec![x.clone()]))
        };
        let mut next = Multiset::new();
        for (pre, m) in acc.iter() {
            for (c, k) in choices.iter() {
                let mut v = pre.clone().into_vec();
                v.extend(c.iter().cloned());
                next.insert(SymString::new(v), m * k);
            }
        }
        acc = next;
    }
    acc
}
