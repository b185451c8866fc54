//! Reduction, abbreviation, binarization, expansion and elimination.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{substitute_all, Draft, TransformResult};
use crate::error::{Error, Result};
use crate::grammar::{Grammar, Pid};
use crate::multiplicity::Multiplicity;
use crate::multiset::Multiset;
use crate::semantics::analysis::useless;
use crate::symbol::{SymString, Symbol};

/// A basic string: a production entry or a starting string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Site {
    Production(Pid),
    Start(SymString),
}

impl Draft {
    pub(crate) fn reduce(&mut self) -> Result<()> {
        let dead = useless(&self.grammar()?);
        if dead.is_empty() {
            return Ok(());
        }
        let alive = |s: &SymString| !s.iter().any(|x| dead.contains(x));
        self.start = self.start.filter(|s| alive(s));
        self.prods.retain(|p| !dead.contains(&p.lhs) && alive(&p.rhs));
        self.nonterminals.retain(|n| !dead.contains(n));
        let names: Vec<&str> = dead.iter().map(Symbol::name).collect();
        self.note(format!("reduce: removed {}", names.join(" ")));
        Ok(())
    }

    /// Replaces `theta` by `x` leftmost-greedily in every basic string,
    /// then adds `x → theta`.
    pub(crate) fn abbreviate(&mut self, theta: &SymString, x: Symbol) -> Result<Pid> {
        self.abbreviate_within(theta, x, 0)
    }

    /// [`Draft::abbreviate`] restricted to basic strings longer than `min`.
    fn abbreviate_within(&mut self, theta: &SymString, x: Symbol, min: usize) -> Result<Pid> {
        if theta.is_empty() {
            return Err(Error::Precondition("cannot abbreviate the empty string".into()));
        }
        self.add_nonterminal(x.clone())?;
        let replace = |s: &SymString| -> SymString {
            let (v, t) = (s.symbols(), theta.symbols());
            if v.len() <= min {
                return s.clone();
            }
            let mut out = Vec::with_capacity(v.len());
            let mut i = 0;
            while i < v.len() {
                if v[i..].starts_with(t) {
                    out.push(x.clone());
                    i += t.len();
                } else {
                    out.push(v[i].clone());
                    i += 1;
                }
            }
            SymString::new(out)
        };
        self.start = self.start.map(&replace);
        for p in &mut self.prods {
            p.rhs = replace(&p.rhs);
        }
        let pid = self.push(x.clone(), theta.clone(), BigUint::one(), BTreeSet::new());
        self.note(format!("abbreviate: {x} -> {}", theta.spaced()));
        Ok(pid)
    }

    pub(crate) fn binarize(&mut self, base: &str) -> Result<()> {
        loop {
            let long = self
                .prods
                .iter()
                .map(|p| &p.rhs)
                .chain(self.start.elements())
                .find(|s| s.len() > 2)
                .cloned();
            let Some(s) = long else { return Ok(()) };
            let theta = s.slice(s.len() - 2, s.len());
            let x = self.fresh(base);
            self.abbreviate_within(&theta, x, 2)?;
        }
    }

    pub(crate) fn expand(&mut self, site: &Site, pos: usize) -> Result<()> {
        let basic = match site {
            Site::Production(pid) => self.prods[self.index_of(*pid)?].rhs.clone(),
            Site::Start(s) => {
                if !self.start.contains(s) {
                    return Err(Error::NoSuchOccurrence(format!("starting string {}", s.spaced())));
                }
                s.clone()
            }
        };
        let Some(x) = basic.symbols().get(pos).cloned() else {
            return Err(Error::NoSuchOccurrence(format!("position {pos} of {}", basic.spaced())));
        };
        if !x.is_nonterminal() {
            return Err(Error::NoSuchOccurrence(format!("{x} at position {pos} is a terminal")));
        }
        let alts: Vec<(SymString, BigUint, BTreeSet<crate::grammar::Pid>)> = self
            .prods_of(&x)
            .map(|p| (basic.splice(pos, &p.rhs), p.copies.clone(), p.origin.clone()))
            .collect();
        match site {
            Site::Production(pid) => {
                let i = self.index_of(*pid)?;
                let p = self.prods.remove(i);
                for (s, k, origin) in alts {
                    let origin: BTreeSet<_> = p.origin.union(&origin).copied().collect();
                    self.push(p.lhs.clone(), s, &p.copies * k, origin);
                }
            }
            Site::Start(s) => {
                let m = self.start.remove_all(s);
                for (s2, k, _) in alts {
                    self.start.insert(s2, &m * &Multiplicity::Finite(k));
                }
            }
        }
        self.note(format!("expand: {x} at position {pos} of {}", basic.spaced()));
        Ok(())
    }

    /// Deletes `copies` copies of entry `pid` and compensates every basic
    /// string by `D(A) = {A} ⊎ copies·{θ}`.
    pub(crate) fn eliminate(&mut self, pid: Pid, copies: Option<BigUint>) -> Result<()> {
        let i = self.index_of(pid)?;
        let (a, theta) = (self.prods[i].lhs.clone(), self.prods[i].rhs.clone());
        if theta.contains(&a) {
            return Err(Error::Precondition(format!(
                "cannot eliminate {a} -> {}: the right side contains {a}",
                theta.spaced()
            )));
        }
        let c = copies.unwrap_or_else(|| self.prods[i].copies.clone());
        if c.is_zero() || c > self.prods[i].copies {
            return Err(Error::Precondition(format!("entry {pid} has fewer than {c} copies")));
        }
        self.prods[i].copies -= &c;
        if self.prods[i].copies.is_zero() {
            self.prods.remove(i);
        }
        let mut alts = Multiset::singleton(SymString::new(vec![a.clone()]));
        alts.insert(theta.clone(), Multiplicity::Finite(c.clone()));
        self.rewrite(|_, s| {
            if s.contains(&a) {
                substitute_all(s, &a, &alts)
            } else {
                Multiset::singleton(s.clone())
            }
        });
        self.note(format!("eliminate: {c} * {a} -> {}", theta.spaced()));
        Ok(())
    }
}

/// Removes useless nonterminals with their productions and starting strings.
pub fn reduce(g: &Grammar) -> Result<TransformResult> {
    let mut d = Draft::new(g);
    d.reduce()?;
    d.finish()
}

/// Adds `x → θ` and folds every other occurrence of `θ` into `x`.
pub fn abbreviate(g: &Grammar, theta: &SymString, x: &str) -> Result<TransformResult> {
    g.check_string(theta)?;
    let mut d = Draft::new(g);
    d.abbreviate(theta, Symbol::n(x))?;
    d.finish()
}

/// Abbreviates right suffixes until every basic string has length at most 2.
pub fn binarize(g: &Grammar) -> Result<TransformResult> {
    let mut d = Draft::new(g);
    d.binarize("X")?;
    d.finish()
}

/// Replaces the basic string at `site` by `{αθω | θ ∈ 𝒫(X)}`, where `X` is
/// the symbol at position `pos`.
pub fn expand(g: &Grammar, site: &Site, pos: usize) -> Result<TransformResult> {
    let mut d = Draft::new(g);
    d.expand(site, pos)?;
    d.finish()
}

/// Deletes one copy of production `pid` (`A → θ`) and replaces every basic
/// string `σ` by `D(σ)` with `D(A) = {A, θ}`.
pub fn eliminate(g: &Grammar, pid: Pid) -> Result<TransformResult> {
    let mut d = Draft::new(g);
    d.eliminate(pid, Some(BigUint::one()))?;
    d.finish()
}

/// Deletes every copy of entry `pid` at once.
pub fn eliminate_all(g: &Grammar, pid: Pid) -> Result<TransformResult> {
    let mut d = Draft::new(g);
    d.eliminate(pid, None)?;
    d.finish()
}
