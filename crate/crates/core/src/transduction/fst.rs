//! Finite-state transducers and the `(q, q′)` / `q` family they induce.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::family::{empty_language, epsilon_language, finite_language, JuxtamorphismFamily, Term};
use crate::error::{Error, Result};
use crate::format::split_count;
use crate::grammar::{Grammar, Pid, Production};
use crate::multiset::Multiset;
use crate::symbol::{SymString, Symbol};

type Parts = (BTreeSet<Symbol>, Multiset<SymString>, Vec<(Symbol, SymString, num_bigint::BigUint)>);

/// Copies `g` with every nonterminal renamed to `prefix` + name.
fn renamed(g: &Grammar, prefix: &str) -> Parts {
    let r = |s: &Symbol| if s.is_nonterminal() { Symbol::n(&format!("{prefix}{}", s.name())) } else { s.clone() };
    let rs = |s: &SymString| s.iter().map(r).collect::<SymString>();
    (
        g.nonterminals().iter().map(r).collect(),
        g.start().map(rs),
        g.productions().iter().map(|p| (r(&p.lhs), rs(&p.rhs), p.copies.clone())).collect(),
    )
}

fn assemble(
    terminals: BTreeSet<Symbol>,
    nonterminals: BTreeSet<Symbol>,
    start: Multiset<SymString>,
    prods: Vec<(Symbol, SymString, num_bigint::BigUint)>,
) -> Grammar {
    let productions = prods
        .into_iter()
        .enumerate()
        .map(|(i, (lhs, rhs, copies))| Production {
            pid: Pid(i),
            lhs,
            rhs,
            copies,
        })
        .collect();
    Grammar::new(terminals, nonterminals, start, productions).expect("renamed apart")
}

/// A grammar for `L(a)L(b)`.
pub fn concat_languages(a: &Grammar, b: &Grammar) -> Grammar {
    let (na, sa, pa) = renamed(a, "l.");
    let (nb, sb, pb) = renamed(b, "r.");
    let terminals = a.terminals().union(b.terminals()).cloned().collect();
    let nonterminals = na.union(&nb).cloned().collect();
    let prods = pa.into_iter().chain(pb).collect();
    assemble(terminals, nonterminals, sa.concat(&sb), prods)
}

/// A grammar for `⨄ L(g)`.
pub fn union_languages(parts: &[Grammar]) -> Grammar {
    let mut terminals = BTreeSet::new();
    let mut nonterminals = BTreeSet::new();
    let mut start = Multiset::new();
    let mut prods = Vec::new();
    for (i, g) in parts.iter().enumerate() {
        let (n, s, p) = renamed(g, &format!("u{i}."));
        terminals.extend(g.terminals().iter().cloned());
        nonterminals.extend(n);
        start.extend_from(&s);
        prods.extend(p);
    }
    assemble(terminals, nonterminals, start, prods)
}

/// States `0..n`; `next` is `g`, `output` overrides the default `f`.
#[derive(Clone, Debug)]
pub struct FiniteStateTransducer {
    pub states: Vec<String>,
    pub start: usize,
    pub accepting: BTreeSet<usize>,
    pub next: BTreeMap<(usize, Symbol), BTreeSet<usize>>,
    /// `f(q, a)` for `Some(a)`, `f(q, ε)` for `None`.
    pub output: BTreeMap<(usize, Option<Symbol>), Grammar>,
}

impl FiniteStateTransducer {
    pub fn input_alphabet(&self) -> BTreeSet<Symbol> {
        self.next
            .keys()
            .map(|(_, a)| a.clone())
            .chain(self.output.keys().filter_map(|(_, a)| a.clone()))
            .collect()
    }

    /// `f(q, a)`, defaulting to `{a}`.
    pub fn f(&self, q: usize, a: &Symbol) -> Grammar {
        self.output
            .get(&(q, Some(a.clone())))
            .cloned()
            .unwrap_or_else(|| finite_language(Multiset::singleton(SymString::new(vec![a.clone()]))))
    }

    /// `f(q, ε)`, defaulting to `{ε}` at accepting states and `∅` elsewhere.
    pub fn f_eps(&self, q: usize) -> Grammar {
        self.output.get(&(q, None)).cloned().unwrap_or_else(|| {
            if self.accepting.contains(&q) {
                epsilon_language()
            } else {
                empty_language()
            }
        })
    }

    pub fn g(&self, q: usize, a: &Symbol) -> BTreeSet<usize> {
        self.next.get(&(q, a.clone())).cloned().unwrap_or_default()
    }

    pub fn state(&self, name: &str) -> Result<usize> {
        self.states
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::UndefinedIndex(name.to_owned()))
    }

    /// Index of mapping `α^{qq′}` in [`fst_family`].
    pub fn pair_index(&self, q: usize, q2: usize) -> usize {
        q * self.states.len() + q2
    }

    /// Index of mapping `α^q` in [`fst_family`].
    pub fn single_index(&self, q: usize) -> usize {
        self.states.len() * self.states.len() + q
    }

    /// Accepting runs on `τ`, where a run accepts when `f` at its last
    /// state contains `ε`.
    pub fn accepting_paths(&self, tau: &SymString) -> num_bigint::BigUint {
        let n = self.states.len();
        let mut ways = vec![num_bigint::BigUint::zero(); n];
        ways[self.start] = 1u32.into();
        for a in tau {
            let mut next = vec![num_bigint::BigUint::zero(); n];
            for q in 0..n {
                if ways[q].is_zero() {
                    continue;
                }
                for q2 in self.g(q, a) {
                    next[q2] += &ways[q];
                }
            }
            ways = next;
        }
        (0..n)
            .filter(|&q| self.f_eps(q).start().contains(&SymString::epsilon()))
            .map(|q| ways[q].clone())
            .sum()
    }

    /// Whether every `f(q, a)` is `{a}` and every `f(q, ε)` is `{ε}` or `∅`.
    pub fn is_acceptor(&self) -> bool {
        self.output.iter().all(|((_, a), g)| {
            if !g.productions().is_empty() {
                return false;
            }
            let want = match a {
                Some(a) => Multiset::singleton(SymString::new(vec![a.clone()])),
                None => {
                    return g.start().is_empty() || *g.start() == Multiset::singleton(SymString::epsilon())
                }
            };
            *g.start() == want
        })
    }
}

/// Mappings `α^{qq′}` for every pair of states, then `α^q` for every state.
pub fn fst_family(m: &FiniteStateTransducer) -> JuxtamorphismFamily {
    let n = m.states.len();
    let mut names = Vec::new();
    let mut decomp = Vec::new();
    let mut base_eps = Vec::new();
    for q in 0..n {
        for q2 in 0..n {
            names.push(format!("{}-{}", m.states[q], m.states[q2]));
            decomp.push((0..n).map(|q3| Term::ab(m.pair_index(q, q3), m.pair_index(q3, q2))).collect());
            base_eps.push(if q == q2 { epsilon_language() } else { empty_language() });
        }
    }
    for q in 0..n {
        names.push(m.states[q].clone());
        decomp.push((0..n).map(|q2| Term::ab(m.pair_index(q, q2), m.single_index(q2))).collect());
        base_eps.push(m.f_eps(q));
    }
    let mut base = BTreeMap::new();
    for a in m.input_alphabet() {
        for q in 0..n {
            let targets = m.g(q, &a);
            for &q2 in &targets {
                base.insert((a.clone(), m.pair_index(q, q2)), m.f(q, &a));
            }
            let parts: Vec<Grammar> = targets.iter().map(|&q2| concat_languages(&m.f(q, &a), &m.f_eps(q2))).collect();
            if !parts.is_empty() {
                base.insert((a.clone(), m.single_index(q)), union_languages(&parts));
            }
        }
    }
    JuxtamorphismFamily::new(names, decomp, base, base_eps).expect("indices in range")
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_words(line: usize, text: &str) -> Result<Multiset<SymString>> {
    let mut out = Multiset::new();
    if text.trim().is_empty() {
        return Ok(out);
    }
    for entry in text.split('|') {
        let tokens: Vec<&str> = entry.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(perr(line, "empty output entry"));
        }
        let (k, toks) = split_count(line, &tokens)?;
        let word = match toks {
            ["_"] => SymString::epsilon(),
            [] => return Err(perr(line, "missing output string")),
            ts => {
                if ts.contains(&"_") {
                    return Err(perr(line, "`_` must stand alone"));
                }
                ts.iter().map(|t| Symbol::t(t)).collect()
            }
        };
        out.insert(word, k.into());
    }
    Ok(out)
}

/// Parses the transducer text format:
///
/// ```text
/// states: q0 q1
/// start: q0
/// accept: q1
/// q0 a -> q1
/// q0 a => b | 2 * c c
/// q1 _ => _
/// ```
pub fn parse_transducer(text: &str) -> Result<FiniteStateTransducer> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let mut states: Vec<String> = Vec::new();
    for &(_, l) in &lines {
        if let Some(rest) = l.strip_prefix("states:") {
            for s in rest.split_whitespace() {
                if !states.iter().any(|x| x == s) {
                    states.push(s.to_owned());
                }
            }
        }
    }
    if states.is_empty() {
        return Err(perr(1, "no `states:` line"));
    }
    let lookup = |line: usize, s: &str| {
        states
            .iter()
            .position(|x| x == s)
            .ok_or_else(|| perr(line, format!("unknown state `{s}`")))
    };
    let mut m = FiniteStateTransducer {
        states: states.clone(),
        start: 0,
        accepting: BTreeSet::new(),
        next: BTreeMap::new(),
        output: BTreeMap::new(),
    };
    let mut seen_start = false;
    for &(no, l) in &lines {
        if l.starts_with("states:") {
            continue;
        }
        if let Some(rest) = l.strip_prefix("start:") {
            m.start = lookup(no, rest.trim())?;
            seen_start = true;
        } else if let Some(rest) = l.strip_prefix("accept:") {
            for s in rest.split_whitespace() {
                m.accepting.insert(lookup(no, s)?);
            }
        } else if let Some((lhs, rhs)) = l.split_once("=>") {
            let toks: Vec<&str> = lhs.split_whitespace().collect();
            let [q, a] = toks[..] else {
                return Err(perr(no, "expected `q a => outputs`"));
            };
            let q = lookup(no, q)?;
            let a = (a != "_").then(|| Symbol::t(a));
            m.output.insert((q, a), finite_language(parse_words(no, rhs)?));
        } else if let Some((lhs, rhs)) = l.split_once("->") {
            let toks: Vec<&str> = lhs.split_whitespace().collect();
            let [q, a] = toks[..] else {
                return Err(perr(no, "expected `q a -> q'`"));
            };
            if a == "_" {
                return Err(perr(no, "transitions must read a terminal"));
            }
            let (q, q2) = (lookup(no, q)?, lookup(no, rhs.trim())?);
            m.next.entry((q, Symbol::t(a))).or_default().insert(q2);
        } else {
            return Err(perr(no, format!("unrecognized line `{l}`")));
        }
    }
    if !seen_start {
        m.start = 0;
    }
    Ok(m)
}
