//! Images of multilanguages under juxtamorphisms, built at grammar level.

mod family;
mod fst;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;

pub use family::{
    composition_family, empty_language, epsilon_language, eval_family, eval_family_split,
    finite_language, prefix_family, reflection_family, JuxtamorphismFamily, Orientation, Term,
};
pub use fst::{concat_languages, fst_family, parse_transducer, union_languages, FiniteStateTransducer};

use crate::error::{Error, Result};
use crate::grammar::{Grammar, Pid, Production};
use crate::multiset::Multiset;
use crate::semantics::analysis::{nullable_set, Indexed};
use crate::symbol::{SymString, Symbol};

/// Nonterminals whose only productions are `Z → Z` and `Z → ε`.
fn special_nonterminals(g: &Grammar) -> BTreeSet<Symbol> {
    g.nonterminals()
        .iter()
        .filter(|a| {
            let mut ps = g.productions_for(a).peekable();
            ps.peek().is_some()
                && ps.all(|p| p.rhs.is_empty() || (p.rhs.len() == 1 && &p.rhs.symbols()[0] == *a))
        })
        .cloned()
        .collect()
}

struct Builder<'a> {
    fam: &'a JuxtamorphismFamily,
    terminals: BTreeSet<Symbol>,
    nonterminals: BTreeSet<Symbol>,
    productions: Vec<(Symbol, SymString, BigUint)>,
    bases: BTreeMap<(Option<Symbol>, usize), Multiset<SymString>>,
}

impl Builder<'_> {
    fn lifted(&self, a: &Symbol, j: usize) -> Symbol {
        Symbol::n(&format!("{}^{}", a.name(), self.fam.names[j]))
    }

    /// Starting strings of the base language, renamed apart on first use.
    fn base(&mut self, a: Option<&Symbol>, j: usize) -> Multiset<SymString> {
        let key = (a.cloned(), j);
        if let Some(s) = self.bases.get(&key) {
            return s.clone();
        }
        let g = match a {
            None => Some(&self.fam.base_epsilon[j]),
            Some(a) => self.fam.base(a, j),
        };
        let start = match g {
            None => Multiset::new(),
            Some(g) => {
                let prefix = format!("{}.{}.", a.map_or("_", Symbol::name), self.fam.names[j]);
                let r = |s: &Symbol| {
                    if s.is_nonterminal() {
                        Symbol::n(&format!("{prefix}{}", s.name()))
                    } else {
                        s.clone()
                    }
                };
                let rs = |s: &SymString| s.iter().map(r).collect::<SymString>();
                self.terminals.extend(g.terminals().iter().cloned());
                self.nonterminals.extend(g.nonterminals().iter().map(r));
                for p in g.productions() {
                    self.productions.push((r(&p.lhs), rs(&p.rhs), p.copies.clone()));
                }
                g.start().map(rs)
            }
        };
        self.bases.insert(key, start.clone());
        start
    }

    fn lift(&mut self, s: &[Symbol], j: usize) -> Multiset<SymString> {
        match s {
            [] => self.base(None, j),
            [a] if a.is_terminal() => self.base(Some(a), j),
            [a] => Multiset::singleton(SymString::new(vec![self.lifted(a, j)])),
            [first, rest @ ..] => {
                let mut out = Multiset::new();
                for t in self.fam.decomp[j].clone() {
                    let head = std::slice::from_ref(first);
                    let (x, y) = match t.orientation {
                        Orientation::AB => (self.lift(head, t.k), self.lift(rest, t.l)),
                        Orientation::BA => (self.lift(rest, t.k), self.lift(head, t.l)),
                    };
                    out.extend_from(&x.concat(&y));
                }
                out
            }
        }
    }
}

/// A grammar for `L(𝒢)^{F_j}`. Apart from `Z`-style nonterminals (only
/// `Z → Z`, `Z → ε`, used only in starting strings), `𝒢` must be ε-free;
/// both Chomsky modes that keep or eliminate `Z` qualify.
pub fn transduce_grammar(g: &Grammar, fam: &JuxtamorphismFamily, j: usize) -> Result<Grammar> {
    if j >= fam.size() {
        return Err(Error::UndefinedIndex(j.to_string()));
    }
    let special = special_nonterminals(g);
    let ix = Indexed::new(g);
    let nullable = nullable_set(&ix);
    for (i, a) in ix.nts.iter().enumerate() {
        if nullable[i] && !special.contains(a) {
            return Err(Error::Precondition(format!(
                "{a} derives ε; transduce a grammar in Chomsky normal form"
            )));
        }
    }
    for p in g.productions() {
        if !special.contains(&p.lhs) && p.rhs.iter().any(|x| special.contains(x)) {
            return Err(Error::Precondition(format!("{} uses {} on its right side", p.lhs, p.rhs.spaced())));
        }
    }

    let mut b = Builder {
        fam,
        terminals: BTreeSet::new(),
        nonterminals: special.clone(),
        productions: Vec::new(),
        bases: BTreeMap::new(),
    };
    for a in g.nonterminals().iter().filter(|a| !special.contains(*a)) {
        for jj in 0..fam.size() {
            let lifted = b.lifted(a, jj);
            b.nonterminals.insert(lifted);
        }
    }
    for p in g.productions() {
        if special.contains(&p.lhs) {
            b.productions.push((p.lhs.clone(), p.rhs.clone(), p.copies.clone()));
            continue;
        }
        for jj in 0..fam.size() {
            let lhs = b.lifted(&p.lhs, jj);
            for (s, m) in b.lift(p.rhs.symbols(), jj).iter() {
                let k = m.finite().cloned().expect("finite starting multiplicities");
                b.productions.push((lhs.clone(), s.clone(), &p.copies * k));
            }
        }
    }
    let mut start = Multiset::new();
    for (s, m) in g.start().iter() {
        let prefix: Vec<Symbol> = s.iter().filter(|x| special.contains(*x)).cloned().collect();
        let rest: Vec<Symbol> = s.iter().filter(|x| !special.contains(*x)).cloned().collect();
        for (t, k) in b.lift(&rest, j).iter() {
            let mut v = prefix.clone();
            v.extend(t.iter().cloned());
            start.insert(SymString::new(v), m * k);
        }
    }
    let productions = b
        .productions
        .into_iter()
        .enumerate()
        .map(|(i, (lhs, rhs, copies))| Production {
            pid: Pid(i),
            lhs,
            rhs,
            copies,
        })
        .collect();
    Grammar::new(b.terminals, b.nonterminals, start, productions)
}

/// `L(𝒢) ∩· R`, where `R` counts the accepting runs of an acceptor `m`.
pub fn regular_mdot(g: &Grammar, m: &FiniteStateTransducer) -> Result<Grammar> {
    if !m.is_acceptor() {
        return Err(Error::Precondition(
            "transducer must output each input symbol unchanged and ε or nothing at the end".into(),
        ));
    }
    transduce_grammar(g, &fst_family(m), m.single_index(m.start))
}
