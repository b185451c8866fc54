//! Symbols and strings of symbols.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::multiset::Concat;
use crate::multiset::Power;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymbolKind {
    Terminal,
    Nonterminal,
}

/// A named grammar symbol. Names are whitespace-free identifiers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    name: Arc<str>,
    kind: SymbolKind,
}

impl Symbol {
    pub fn new(name: &str, kind: SymbolKind) -> Self {
        assert!(!name.is_empty(), "symbol names are nonempty");
        Symbol {
            name: Arc::from(name),
            kind,
        }
    }

    pub fn t(name: &str) -> Self {
        Self::new(name, SymbolKind::Terminal)
    }

    pub fn n(name: &str) -> Self {
        Self::new(name, SymbolKind::Nonterminal)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> SymbolKind {
        self.kind
    }

    pub fn is_terminal(&self) -> bool {
        self.kind == SymbolKind::Terminal
    }

    pub fn is_nonterminal(&self) -> bool {
        self.kind == SymbolKind::Nonterminal
    }

    /// Same kind, name with `suffix` appended (`A` → `A'`).
    pub fn suffixed(&self, suffix: &str) -> Self {
        Symbol::new(&format!("{}{}", self.name, suffix), self.kind)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// A string over `T ∪ N`; the empty sequence is ε.
///
/// Ordered by length first, then lexicographically by symbol name, which is
/// the canonical order used in every listing.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SymString(Vec<Symbol>);

impl SymString {
    pub fn epsilon() -> Self {
        SymString(Vec::new())
    }

    pub fn new(symbols: Vec<Symbol>) -> Self {
        SymString(symbols)
    }

    /// Terminal string from whitespace-separated names, or from single
    /// characters when there is no whitespace: `"a b"` and `"ab"` agree.
    /// `"_"` and `""` are ε.
    pub fn terminals(text: &str) -> Self {
        Self::parse_with(text, |_| SymbolKind::Terminal)
    }

    /// Parses symbols the same way as [`SymString::terminals`], classifying
    /// each name with `kind_of`.
    pub fn parse_with(text: &str, mut kind_of: impl FnMut(&str) -> SymbolKind) -> Self {
        let text = text.trim();
        if text.is_empty() || text == "_" {
            return SymString::epsilon();
        }
        let names: Vec<String> = if text.contains(char::is_whitespace) {
            text.split_whitespace().map(str::to_owned).collect()
        } else if text.chars().all(|c| c.is_ascii_alphanumeric()) && !text.chars().any(|c| c.is_ascii_uppercase()) {
            text.chars().map(|c| c.to_string()).collect()
        } else {
            vec![text.to_owned()]
        };
        SymString(
            names
                .iter()
                .map(|n| Symbol::new(n, kind_of(n)))
                .collect(),
        )
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_terminal(&self) -> bool {
        self.0.iter().all(Symbol::is_terminal)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Symbol> {
        self.0.iter()
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    pub fn slice(&self, from: usize, to: usize) -> SymString {
        SymString(self.0[from..to].to_vec())
    }

    pub fn reversed(&self) -> SymString {
        SymString(self.0.iter().rev().cloned().collect())
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        self.0.contains(s)
    }

    pub fn occurrences(&self, s: &Symbol) -> usize {
        self.0.iter().filter(|x| *x == s).count()
    }

    /// Replaces the symbol at `pos` by the string `with`.
    pub fn splice(&self, pos: usize, with: &SymString) -> SymString {
        let mut v = self.0[..pos].to_vec();
        v.extend(with.0.iter().cloned());
        v.extend(self.0[pos + 1..].iter().cloned());
        SymString(v)
    }

    pub fn into_vec(self) -> Vec<Symbol> {
        self.0
    }
}

impl From<Vec<Symbol>> for SymString {
    fn from(v: Vec<Symbol>) -> Self {
        SymString(v)
    }
}

impl FromIterator<Symbol> for SymString {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        SymString(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a SymString {
    type Item = &'a Symbol;
    type IntoIter = std::slice::Iter<'a, Symbol>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl PartialOrd for SymString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SymString {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl Concat for SymString {
    fn empty() -> Self {
        SymString::epsilon()
    }
    fn concat(&self, other: &Self) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend(self.0.iter().cloned());
        v.extend(other.0.iter().cloned());
        SymString(v)
    }
    fn length(&self) -> usize {
        self.0.len()
    }
}

impl Power for SymString {
    fn power(&self, n: u32) -> Self {
        let mut v = Vec::with_capacity(self.0.len() * n as usize);
        for _ in 0..n {
            v.extend(self.0.iter().cloned());
        }
        SymString(v)
    }
}

impl fmt::Debug for SymString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SymString {
    /// `_` for ε; symbols run together when every name is one character,
    /// otherwise separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("_");
        }
        let compact = self.0.iter().all(|s| s.name().chars().count() == 1);
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(" ")?;
            }
            f.write_str(s.name())?;
        }
        Ok(())
    }
}

impl SymString {
    /// Space-separated rendering, `_` for ε; always re-parseable.
    pub fn spaced(&self) -> String {
        if self.0.is_empty() {
            return "_".to_owned();
        }
        self.0
            .iter()
            .map(Symbol::name)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_length_then_lex() {
        let mut v = [
            SymString::terminals("b"),
            SymString::terminals("aa"),
            SymString::terminals("a"),
            SymString::epsilon(),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["_", "a", "b", "aa"]);
    }

    #[test]
    fn parsing_compact_and_spaced() {
        assert_eq!(SymString::terminals("ab"), SymString::terminals("a b"));
        assert_eq!(SymString::terminals("_").len(), 0);
        assert_eq!(SymString::terminals("a0 a1").len(), 2);
        assert_eq!(SymString::terminals("a0 a1").to_string(), "a0 a1");
        assert_eq!(SymString::terminals("ab").to_string(), "ab");
    }

    #[test]
    fn splice_replaces_one_position() {
        let s = SymString::new(vec![Symbol::n("A"), Symbol::n("X"), Symbol::t("b")]);
        let r = s.splice(1, &SymString::terminals("cd"));
        assert_eq!(r.spaced(), "A c d b");
        assert_eq!(s.splice(1, &SymString::epsilon()).spaced(), "A b");
    }
}
