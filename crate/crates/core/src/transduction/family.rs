//! Juxtamorphism families as data, and their string-level evaluation.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::grammar::Grammar;
use crate::multiset::Multiset;
use crate::semantics::enumerate;
use crate::symbol::{SymString, Symbol};

/// `AB` gives `α^{F_k} β^{F_l}`, `BA` gives `β^{F_k} α^{F_l}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    AB,
    BA,
}

/// One bilinear term of a decomposition; indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub orientation: Orientation,
    pub k: usize,
    pub l: usize,
}

impl Term {
    pub fn ab(k: usize, l: usize) -> Self {
        Term {
            orientation: Orientation::AB,
            k,
            l,
        }
    }

    pub fn ba(k: usize, l: usize) -> Self {
        Term {
            orientation: Orientation::BA,
            k,
            l,
        }
    }
}

/// A multilanguage given by the starting strings of a grammar.
pub fn finite_language(words: Multiset<SymString>) -> Grammar {
    let terminals: BTreeSet<Symbol> = words.elements().flat_map(|w| w.iter().cloned()).collect();
    Grammar::new(terminals, BTreeSet::new(), words, Vec::new()).expect("terminal strings only")
}

pub fn empty_language() -> Grammar {
    finite_language(Multiset::new())
}

pub fn epsilon_language() -> Grammar {
    finite_language(Multiset::singleton(SymString::epsilon()))
}

/// A family `F_1 … F_r` with `(αβ)^{F_j} = ⨄ terms`, for nonempty `α`, `β`.
#[derive(Clone, Debug)]
pub struct JuxtamorphismFamily {
    pub names: Vec<String>,
    pub decomp: Vec<Vec<Term>>,
    /// `a^{F_j}`; a missing entry means `∅`.
    pub base_terminal: BTreeMap<(Symbol, usize), Grammar>,
    /// `ε^{F_j}`.
    pub base_epsilon: Vec<Grammar>,
}

impl JuxtamorphismFamily {
    pub fn new(
        names: Vec<String>,
        decomp: Vec<Vec<Term>>,
        base_terminal: BTreeMap<(Symbol, usize), Grammar>,
        base_epsilon: Vec<Grammar>,
    ) -> Result<Self> {
        let r = names.len();
        if decomp.len() != r || base_epsilon.len() != r {
            return Err(Error::Precondition(format!(
                "family of size {r} needs {r} decompositions and {r} ε images"
            )));
        }
        for terms in &decomp {
            if let Some(t) = terms.iter().find(|t| t.k >= r || t.l >= r) {
                return Err(Error::UndefinedIndex(format!("term ({}, {})", t.k, t.l)));
            }
        }
        if let Some((_, j)) = base_terminal.keys().find(|(_, j)| *j >= r) {
            return Err(Error::UndefinedIndex(j.to_string()));
        }
        Ok(JuxtamorphismFamily {
            names,
            decomp,
            base_terminal,
            base_epsilon,
        })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UndefinedIndex(name.to_owned()))
    }

    pub fn base(&self, a: &Symbol, j: usize) -> Option<&Grammar> {
        self.base_terminal.get(&(a.clone(), j))
    }

    fn check(&self, j: usize) -> Result<()> {
        if j >= self.size() {
            return Err(Error::UndefinedIndex(j.to_string()));
        }
        Ok(())
    }
}

fn truncate(m: Multiset<SymString>, maxlen: usize) -> Multiset<SymString> {
    m.filter(|w| w.len() <= maxlen)
}

struct Evaluator<'f> {
    fam: &'f JuxtamorphismFamily,
    maxlen: usize,
    bases: BTreeMap<(Option<Symbol>, usize), Multiset<SymString>>,
}

impl Evaluator<'_> {
    fn base(&mut self, a: Option<&Symbol>, j: usize) -> Result<Multiset<SymString>> {
        let key = (a.cloned(), j);
        if let Some(m) = self.bases.get(&key) {
            return Ok(m.clone());
        }
        let m = match a {
            None => enumerate(&self.fam.base_epsilon[j], self.maxlen)?,
            Some(a) => match self.fam.base(a, j) {
                Some(g) => enumerate(g, self.maxlen)?,
                None => Multiset::new(),
            },
        };
        self.bases.insert(key, m.clone());
        Ok(m)
    }

    fn eval(&mut self, j: usize, alpha: &[Symbol], split: Option<usize>) -> Result<Multiset<SymString>> {
        match alpha.len() {
            0 => return self.base(None, j),
            1 => return self.base(Some(&alpha[0]), j),
            _ => {}
        }
        let cut = split.unwrap_or(1);
        let (a, b) = alpha.split_at(cut);
        let mut out = Multiset::new();
        for t in self.fam.decomp[j].clone() {
            let (x, y) = match t.orientation {
                Orientation::AB => (self.eval(t.k, a, None)?, self.eval(t.l, b, None)?),
                Orientation::BA => (self.eval(t.k, b, None)?, self.eval(t.l, a, None)?),
            };
            out.extend_from(&truncate(x.concat(&y), self.maxlen));
        }
        Ok(out)
    }
}

/// `α^{F_j}` restricted to outputs of length `≤ maxlen`, splitting off the
/// first symbol at each level.
pub fn eval_family(
    fam: &JuxtamorphismFamily,
    j: usize,
    alpha: &SymString,
    maxlen: usize,
) -> Result<Multiset<SymString>> {
    fam.check(j)?;
    Evaluator {
        fam,
        maxlen,
        bases: BTreeMap::new(),
    }
    .eval(j, alpha.symbols(), None)
}

/// Like [`eval_family`] but splits `α` at `cut` on the outermost level.
pub fn eval_family_split(
    fam: &JuxtamorphismFamily,
    j: usize,
    alpha: &SymString,
    cut: usize,
    maxlen: usize,
) -> Result<Multiset<SymString>> {
    fam.check(j)?;
    if alpha.len() >= 2 && (cut == 0 || cut >= alpha.len()) {
        return Err(Error::Precondition(format!("split point {cut} leaves an empty side")));
    }
    Evaluator {
        fam,
        maxlen,
        bases: BTreeMap::new(),
    }
    .eval(j, alpha.symbols(), Some(cut))
}

fn singleton_symbol(a: &Symbol) -> Grammar {
    finite_language(Multiset::singleton(SymString::new(vec![a.clone()])))
}

/// `(αβ)^R = β^R α^R`.
pub fn reflection_family(alphabet: &BTreeSet<Symbol>) -> JuxtamorphismFamily {
    let base = alphabet.iter().map(|a| ((a.clone(), 0), singleton_symbol(a))).collect();
    JuxtamorphismFamily::new(vec!["R".into()], vec![vec![Term::ba(0, 0)]], base, vec![epsilon_language()])
        .expect("well-formed")
}

/// `(αβ)^L = α^L β^L` with `a^L = map[a]`.
pub fn composition_family(map: BTreeMap<Symbol, Grammar>) -> JuxtamorphismFamily {
    let base = map.into_iter().map(|(a, g)| ((a, 0), g)).collect();
    JuxtamorphismFamily::new(vec!["L".into()], vec![vec![Term::ab(0, 0)]], base, vec![epsilon_language()])
        .expect("well-formed")
}

/// Prefixes `P`, nonempty prefixes `N`, identity `I` and erasure `E`.
pub fn prefix_family(alphabet: &BTreeSet<Symbol>) -> JuxtamorphismFamily {
    const P: usize = 0;
    const N: usize = 1;
    const I: usize = 2;
    const E: usize = 3;
    let mut base = BTreeMap::new();
    for a in alphabet {
        let one = SymString::new(vec![a.clone()]);
        base.insert(
            (a.clone(), P),
            finite_language([SymString::epsilon(), one.clone()].into_iter().collect()),
        );
        base.insert((a.clone(), N), singleton_symbol(a));
        base.insert((a.clone(), I), singleton_symbol(a));
        base.insert((a.clone(), E), epsilon_language());
    }
    JuxtamorphismFamily::new(
        ["P", "N", "I", "E"].map(String::from).to_vec(),
        vec![
            vec![Term::ab(P, E), Term::ab(I, N)],
            vec![Term::ab(N, E), Term::ab(I, N)],
            vec![Term::ab(I, I)],
            vec![Term::ab(E, E)],
        ],
        base,
        vec![epsilon_language(), empty_language(), epsilon_language(), epsilon_language()],
    )
    .expect("well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> BTreeSet<Symbol> {
        ["a", "b", "c"].iter().map(|s| Symbol::t(s)).collect()
    }

    fn words(ws: &[&str]) -> Multiset<SymString> {
        ws.iter().map(|w| SymString::terminals(w)).collect()
    }

    #[test]
    fn reflection_reverses() {
        let f = reflection_family(&abc());
        let out = eval_family(&f, 0, &SymString::terminals("abc"), 5).unwrap();
        assert_eq!(out, words(&["cba"]));
        let twice = eval_family(&f, 0, &SymString::terminals("cba"), 5).unwrap();
        assert_eq!(twice, words(&["abc"]));
    }

    #[test]
    fn prefixes() {
        let f = prefix_family(&abc());
        let out = eval_family(&f, 0, &SymString::terminals("ab"), 5).unwrap();
        assert_eq!(out, words(&["", "a", "ab"]));
        assert_eq!(eval_family(&f, 0, &SymString::epsilon(), 5).unwrap(), words(&[""]));
        let split = eval_family_split(&f, 0, &SymString::terminals("abca"), 2, 5).unwrap();
        assert_eq!(split, eval_family(&f, 0, &SymString::terminals("abca"), 5).unwrap());
        assert_eq!(split.len(), 5u64.into());
    }

    #[test]
    fn composition_expands() {
        let mut map = BTreeMap::new();
        map.insert(Symbol::t("a"), finite_language(words(&["b", "c"])));
        let f = composition_family(map);
        let out = eval_family(&f, 0, &SymString::terminals("aa"), 4).unwrap();
        assert_eq!(out, words(&["bb", "bc", "cb", "cc"]));
    }

    #[test]
    fn epsilon_uses_base() {
        let f = prefix_family(&abc());
        assert!(eval_family(&f, 1, &SymString::epsilon(), 3).unwrap().is_empty());
        assert!(eval_family(&f, 9, &SymString::epsilon(), 3).is_err());
    }

    #[test]
    fn bad_terms_rejected() {
        let r = JuxtamorphismFamily::new(
            vec!["F".into()],
            vec![vec![Term::ab(0, 1)]],
            BTreeMap::new(),
            vec![epsilon_language()],
        );
        assert!(r.is_err());
    }
}
