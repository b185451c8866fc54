//! Context-free grammars with a starting multiset and identity-tagged
//! productions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multiplicity::Multiplicity;
use crate::multiset::Multiset;
use crate::symbol::{SymString, Symbol, SymbolKind};

/// Production identity. Distinct pids are distinct productions even when
/// their left and right sides agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pid(pub usize);

impl fmt::Display for Pid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}", self.0)
    }
}

/// `lhs → rhs`, present `copies` times.
///
/// An entry with `copies = k` stands for `k` distinct productions with the
/// same sides; parses through different copies are different parses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Production {
    pub pid: Pid,
    pub lhs: Symbol,
    pub rhs: SymString,
    pub copies: BigUint,
}

impl Production {
    pub fn weight(&self) -> Multiplicity {
        Multiplicity::Finite(self.copies.clone())
    }

    pub fn is_epsilon(&self) -> bool {
        self.rhs.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.rhs.len() == 1 && self.rhs.symbols()[0].is_nonterminal()
    }
}

impl fmt::Display for Production {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.copies.is_one() {
            write!(f, "{} * ", self.copies)?;
        }
        write!(f, "{} -> {}", self.lhs, self.rhs.spaced())
    }
}

/// `(T, N, S, P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grammar {
    terminals: BTreeSet<Symbol>,
    nonterminals: BTreeSet<Symbol>,
    start: Multiset<SymString>,
    productions: Vec<Production>,
}

impl Grammar {
    /// Validates and builds a grammar. Production pids must be unique.
    pub fn new(
        terminals: BTreeSet<Symbol>,
        nonterminals: BTreeSet<Symbol>,
        start: Multiset<SymString>,
        productions: Vec<Production>,
    ) -> Result<Self> {
        let g = Grammar {
            terminals,
            nonterminals,
            start,
            productions,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        for t in &self.terminals {
            if !t.is_terminal() {
                return Err(Error::KindConflict(t.name().to_owned()));
            }
        }
        let tnames: BTreeSet<&str> = self.terminals.iter().map(Symbol::name).collect();
        for n in &self.nonterminals {
            if !n.is_nonterminal() || tnames.contains(n.name()) {
                return Err(Error::KindConflict(n.name().to_owned()));
            }
        }
        for (s, m) in self.start.iter() {
            if m.is_infinite() {
                return Err(Error::Precondition(format!(
                    "starting string {} has infinite multiplicity",
                    s.spaced()
                )));
            }
            self.check_string(s)?;
        }
        let mut pids = BTreeSet::new();
        for p in &self.productions {
            if !pids.insert(p.pid) {
                return Err(Error::Precondition(format!("duplicate pid {}", p.pid)));
            }
            if !self.nonterminals.contains(&p.lhs) {
                return Err(Error::NotNonterminal(p.lhs.name().to_owned()));
            }
            if p.copies.is_zero() {
                return Err(Error::Precondition(format!("production {p} has zero copies")));
            }
            self.check_string(&p.rhs)?;
        }
        Ok(())
    }

    /// Fails unless every symbol of `s` belongs to `T ∪ N`.
    pub fn check_string(&self, s: &SymString) -> Result<()> {
        for sym in s {
            if !self.has_symbol(sym) {
                return Err(Error::UnknownSymbol(sym.name().to_owned()));
            }
        }
        Ok(())
    }

    pub fn has_symbol(&self, s: &Symbol) -> bool {
        match s.kind() {
            SymbolKind::Terminal => self.terminals.contains(s),
            SymbolKind::Nonterminal => self.nonterminals.contains(s),
        }
    }

    pub fn terminals(&self) -> &BTreeSet<Symbol> {
        &self.terminals
    }

    pub fn nonterminals(&self) -> &BTreeSet<Symbol> {
        &self.nonterminals
    }

    pub fn start(&self) -> &Multiset<SymString> {
        &self.start
    }

    pub fn productions(&self) -> &[Production] {
        &self.productions
    }

    pub fn production(&self, pid: Pid) -> Option<&Production> {
        self.productions.iter().find(|p| p.pid == pid)
    }

    /// Looks a name up in `T ∪ N`.
    pub fn symbol(&self, name: &str) -> Option<Symbol> {
        let t = Symbol::t(name);
        if self.terminals.contains(&t) {
            return Some(t);
        }
        let n = Symbol::n(name);
        self.nonterminals.contains(&n).then_some(n)
    }

    /// Parses a whitespace-separated (or `_`) string over this grammar's
    /// vocabulary.
    pub fn parse_string(&self, text: &str) -> Result<SymString> {
        let text = text.trim();
        if text.is_empty() || text == "_" {
            return Ok(SymString::epsilon());
        }
        let names: Vec<&str> = if text.contains(char::is_whitespace) {
            text.split_whitespace().collect()
        } else if self.symbol(text).is_some() {
            vec![text]
        } else {
            // compact form: every character is a symbol
            let chars: Vec<&str> = text
                .char_indices()
                .map(|(i, c)| &text[i..i + c.len_utf8()])
                .collect();
            chars
        };
        names
            .into_iter()
            .map(|n| self.symbol(n).ok_or_else(|| Error::UnknownSymbol(n.to_owned())))
            .collect()
    }

    pub fn is_fresh(&self, name: &str) -> bool {
        self.symbol(name).is_none()
    }

    /// `S ⊎ {rhs of every production}`.
    pub fn basic_strings(&self) -> Multiset<SymString> {
        let mut out = self.start.clone();
        for p in &self.productions {
            out.insert(p.rhs.clone(), p.weight());
        }
        out
    }

    /// Total length of all basic strings, counting each production entry
    /// once per copy.
    pub fn basic_length(&self) -> BigUint {
        let mut total = BigUint::zero();
        for (s, m) in self.start.iter() {
            total += m.finite().cloned().unwrap_or_default() * BigUint::from(s.len());
        }
        for p in &self.productions {
            total += &p.copies * BigUint::from(p.rhs.len());
        }
        total
    }

    /// `𝒫(A)`
    pub fn productions_of(&self, lhs: &Symbol) -> Result<Multiset<SymString>> {
        if !self.nonterminals.contains(lhs) {
            return Err(Error::NotNonterminal(lhs.name().to_owned()));
        }
        Ok(self
            .productions
            .iter()
            .filter(|p| &p.lhs == lhs)
            .map(|p| (p.rhs.clone(), p.weight()))
            .fold(Multiset::new(), |mut acc, (s, m)| {
                acc.insert(s, m);
                acc
            }))
    }

    pub fn productions_for<'a>(&'a self, lhs: &'a Symbol) -> impl Iterator<Item = &'a Production> + 'a {
        self.productions.iter().filter(move |p| &p.lhs == lhs)
    }

    /// All one-step successors of `σ`, one entry per (occurrence, production).
    pub fn step(&self, sigma: &SymString) -> Multiset<SymString> {
        let mut out = Multiset::new();
        for (i, sym) in sigma.iter().enumerate() {
            if !sym.is_nonterminal() {
                continue;
            }
            for p in self.productions_for(sym) {
                out.insert(sigma.splice(i, &p.rhs), p.weight());
            }
        }
        out
    }

    /// `𝒫` with identities forgotten, as `(lhs, rhs)` pairs.
    pub fn production_multiset(&self) -> Multiset<(Symbol, SymString)> {
        let mut out = Multiset::new();
        for p in &self.productions {
            out.insert((p.lhs.clone(), p.rhs.clone()), p.weight());
        }
        out
    }

    /// Nonterminals appearing in some basic string or as a left side.
    pub fn used_nonterminals(&self) -> BTreeSet<Symbol> {
        let mut used = BTreeSet::new();
        for (s, _) in self.start.iter() {
            used.extend(s.iter().filter(|x| x.is_nonterminal()).cloned());
        }
        for p in &self.productions {
            used.insert(p.lhs.clone());
            used.extend(p.rhs.iter().filter(|x| x.is_nonterminal()).cloned());
        }
        used
    }

    /// Same grammar with identical productions merged into single entries and
    /// pids renumbered from zero in first-occurrence order.
    pub fn consolidated(&self) -> Grammar {
        let mut order: Vec<(Symbol, SymString)> = Vec::new();
        let mut copies: BTreeMap<(Symbol, SymString), BigUint> = BTreeMap::new();
        for p in &self.productions {
            let key = (p.lhs.clone(), p.rhs.clone());
            if !copies.contains_key(&key) {
                order.push(key.clone());
            }
            *copies.entry(key).or_default() += &p.copies;
        }
        let productions = order
            .into_iter()
            .enumerate()
            .map(|(i, key)| {
                let c = copies[&key].clone();
                Production {
                    pid: Pid(i),
                    lhs: key.0,
                    rhs: key.1,
                    copies: c,
                }
            })
            .collect();
        Grammar {
            productions,
            ..self.clone()
        }
    }

    /// Returns a copy with a different starting multiset.
    pub fn with_start(&self, start: Multiset<SymString>) -> Result<Grammar> {
        Grammar::new(
            self.terminals.clone(),
            self.nonterminals.clone(),
            start,
            self.productions.clone(),
        )
    }
}

/// Incremental construction with sequential pids.
#[derive(Clone, Debug, Default)]
pub struct GrammarBuilder {
    terminals: BTreeSet<Symbol>,
    nonterminals: BTreeSet<Symbol>,
    start: Multiset<SymString>,
    productions: Vec<Production>,
}

impl GrammarBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn terminal(mut self, name: &str) -> Self {
        self.terminals.insert(Symbol::t(name));
        self
    }

    pub fn terminals(mut self, names: &[&str]) -> Self {
        self.terminals.extend(names.iter().map(|n| Symbol::t(n)));
        self
    }

    pub fn nonterminals(mut self, names: &[&str]) -> Self {
        self.nonterminals.extend(names.iter().map(|n| Symbol::n(n)));
        self
    }

    fn classify(&self, text: &str) -> SymString {
        let tnames: BTreeSet<&str> = self.terminals.iter().map(Symbol::name).collect();
        let text = text.trim();
        if text.is_empty() || text == "_" {
            return SymString::epsilon();
        }
        text.split_whitespace()
            .map(|n| {
                if tnames.contains(n) {
                    Symbol::t(n)
                } else {
                    Symbol::n(n)
                }
            })
            .collect()
    }

    /// Adds `k` copies of a starting string written with spaces between
    /// symbols (`_` for ε).
    pub fn start_n(mut self, text: &str, k: u64) -> Self {
        let s = self.classify(text);
        self.start.insert(s, k.into());
        self
    }

    pub fn start(self, text: &str) -> Self {
        self.start_n(text, 1)
    }

    /// Adds a production entry with `k` copies, `rhs` written with spaces
    /// between symbols (`_` for ε).
    pub fn rule_n(mut self, lhs: &str, rhs: &str, k: u64) -> Self {
        let rhs = self.classify(rhs);
        let pid = Pid(self.productions.len());
        self.productions.push(Production {
            pid,
            lhs: Symbol::n(lhs),
            rhs,
            copies: BigUint::from(k),
        });
        self
    }

    pub fn rule(self, lhs: &str, rhs: &str) -> Self {
        self.rule_n(lhs, rhs, 1)
    }

    pub fn build(self) -> Result<Grammar> {
        Grammar::new(self.terminals, self.nonterminals, self.start, self.productions)
    }
}
