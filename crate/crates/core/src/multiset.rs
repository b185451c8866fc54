//! Finite-support multisets with multiplicities in ℕ ∪ {∞}.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::multiplicity::Multiplicity;

/// Binary operation on multiplicities used by [`Multiset::combine`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    /// `max`
    Union,
    /// `min`
    Intersection,
    /// `+`
    Sum,
    /// `·`
    Product,
}

/// A multiset whose support is finite. Entries with multiplicity zero are
/// never stored, so structural equality is multiset equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multiset<T: Ord> {
    entries: BTreeMap<T, Multiplicity>,
}

impl<T: Ord> Default for Multiset<T> {
    fn default() -> Self {
        Multiset {
            entries: BTreeMap::new(),
        }
    }
}

impl<T: Ord + fmt::Debug> fmt::Debug for Multiset<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (x, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}·{x:?}")?;
        }
        f.write_str("}")
    }
}

impl<T: Ord + Clone> Multiset<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(x: T) -> Self {
        let mut s = Self::new();
        s.insert(x, Multiplicity::one());
        s
    }

    /// Multiset from `(element, multiplicity)` pairs; repeated elements add up.
    pub fn from_counts<M: Into<Multiplicity>>(pairs: impl IntoIterator<Item = (T, M)>) -> Self {
        let mut s = Self::new();
        for (x, m) in pairs {
            s.insert(x, m.into());
        }
        s
    }

    /// Adds `m` copies of `x`.
    pub fn insert(&mut self, x: T, m: Multiplicity) {
        if m.is_zero() {
            return;
        }
        *self.entries.entry(x).or_default() += m;
    }

    pub fn insert_one(&mut self, x: T) {
        self.insert(x, Multiplicity::one());
    }

    /// Removes `x` entirely, returning its former multiplicity.
    pub fn remove_all(&mut self, x: &T) -> Multiplicity {
        self.entries.remove(x).unwrap_or_default()
    }

    /// `[x]A`
    pub fn count(&self, x: &T) -> Multiplicity {
        self.entries.get(x).cloned().unwrap_or_default()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.entries.contains_key(x)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct elements.
    pub fn distinct_len(&self) -> usize {
        self.entries.len()
    }

    /// Total number of elements counted with multiplicity.
    pub fn len(&self) -> Multiplicity {
        self.entries.values().cloned().sum()
    }

    /// Entries in canonical (ascending) element order.
    pub fn iter(&self) -> impl Iterator<Item = (&T, &Multiplicity)> {
        self.entries.iter()
    }

    pub fn elements(&self) -> impl Iterator<Item = &T> {
        self.entries.keys()
    }

    pub fn is_set(&self) -> bool {
        self.entries.values().all(|m| *m <= Multiplicity::one())
    }

    /// `A^∩`: the underlying set.
    pub fn support(&self) -> Self {
        Multiset {
            entries: self
                .entries
                .keys()
                .map(|x| (x.clone(), Multiplicity::one()))
                .collect(),
        }
    }

    pub fn combine(&self, other: &Self, mode: CombineMode) -> Self {
        let mut out = Self::new();
        match mode {
            CombineMode::Union | CombineMode::Sum => {
                for x in self.entries.keys().chain(other.entries.keys()) {
                    if out.contains(x) {
                        continue;
                    }
                    let (a, b) = (self.count(x), other.count(x));
                    let m = if mode == CombineMode::Union { a.max(b) } else { a + b };
                    out.insert(x.clone(), m);
                }
            }
            CombineMode::Intersection | CombineMode::Product => {
                for (x, a) in &self.entries {
                    if let Some(b) = other.entries.get(x) {
                        let m = if mode == CombineMode::Intersection {
                            a.clone().min(b.clone())
                        } else {
                            a * b
                        };
                        out.insert(x.clone(), m);
                    }
                }
            }
        }
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, CombineMode::Union)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.combine(other, CombineMode::Intersection)
    }

    /// `A ⊎ B`
    pub fn sum(&self, other: &Self) -> Self {
        self.combine(other, CombineMode::Sum)
    }

    /// `A ∩· B`: pointwise product of multiplicities.
    pub fn product(&self, other: &Self) -> Self {
        self.combine(other, CombineMode::Product)
    }

    /// In-place `⊎`.
    pub fn extend_from(&mut self, other: &Self) {
        for (x, m) in &other.entries {
            self.insert(x.clone(), m.clone());
        }
    }

    /// Every multiplicity multiplied by `k`.
    pub fn scale(&self, k: &Multiplicity) -> Self {
        let mut out = Self::new();
        for (x, m) in &self.entries {
            out.insert(x.clone(), k * m);
        }
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.entries.iter().all(|(x, m)| *m <= other.count(x))
    }

    /// `A ≍ B`
    pub fn is_similar(&self, other: &Self) -> bool {
        self.entries.len() == other.entries.len()
            && self.entries.keys().all(|x| other.entries.contains_key(x))
    }

    /// `{ f(x) | x ∈ A }` with multiplicities carried along.
    pub fn map<U: Ord + Clone>(&self, mut f: impl FnMut(&T) -> U) -> Multiset<U> {
        let mut out = Multiset::new();
        for (x, m) in &self.entries {
            out.insert(f(x), m.clone());
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&T) -> bool) -> Self {
        Multiset {
            entries: self
                .entries
                .iter()
                .filter(|(x, _)| keep(x))
                .map(|(x, m)| (x.clone(), m.clone()))
                .collect(),
        }
    }

    /// `{ op(a, b) | a ∈ A, b ∈ B }` over the index multisets.
    pub fn pairwise<U: Ord + Clone, R: Ord + Clone>(
        &self,
        other: &Multiset<U>,
        mut op: impl FnMut(&T, &U) -> R,
    ) -> Multiset<R> {
        let mut out = Multiset::new();
        for (a, ma) in &self.entries {
            for (b, mb) in &other.entries {
                out.insert(op(a, b), ma * mb);
            }
        }
        out
    }

    /// The n-fold pairwise combination; `n = 0` gives `{identity}`.
    pub fn npower(&self, n: usize, identity: T, mut op: impl FnMut(&T, &T) -> T) -> Self {
        let mut acc = Multiset::singleton(identity);
        for _ in 0..n {
            acc = acc.pairwise(self, &mut op);
        }
        acc
    }

    /// `⊎_{x ∈ A} B_x`; fails when the family is undefined at some index.
    pub fn indexed_sum<U: Ord + Clone>(
        &self,
        mut family: impl FnMut(&T) -> Option<Multiset<U>>,
    ) -> Result<Multiset<U>, Error>
    where
        T: fmt::Debug,
    {
        let mut out = Multiset::new();
        for (x, m) in &self.entries {
            let bx = family(x).ok_or_else(|| Error::UndefinedIndex(format!("{x:?}")))?;
            out.extend_from(&bx.scale(m));
        }
        Ok(out)
    }
}

impl<T: Ord + Clone + Power> Multiset<T> {
    /// `A↑n = { aⁿ | a ∈ A }`
    pub fn elementwise_power(&self, n: u32) -> Self {
        self.map(|x| x.power(n))
    }
}

impl<T: Ord + Clone + Concat> Multiset<T> {
    /// `AB`: elementwise concatenation.
    pub fn concat(&self, other: &Self) -> Self {
        self.pairwise(other, |a, b| a.concat(b))
    }

    /// `A*` restricted to elements of length at most `maxlen`.
    ///
    /// When `A` contains the empty string every element of `A*` occurs
    /// infinitely often.
    pub fn star(&self, maxlen: usize) -> Self {
        let empty = T::empty();
        let has_empty = self.contains(&empty);
        let factors = self.filter(|x| x.length() > 0 && x.length() <= maxlen);
        let mut out = Multiset::singleton(empty.clone());
        let mut level = Multiset::singleton(empty);
        while !level.is_empty() {
            level = level
                .concat(&factors)
                .filter(|x| x.length() <= maxlen);
            out.extend_from(&level);
        }
        if has_empty {
            out.entries
                .values_mut()
                .for_each(|m| *m = Multiplicity::Infinite);
        }
        out
    }
}

impl<T: Ord + Clone> FromIterator<T> for Multiset<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut s = Multiset::new();
        for x in iter {
            s.insert_one(x);
        }
        s
    }
}

impl<T: Ord + fmt::Display> fmt::Display for Multiset<T> {
    /// One `MULTIPLICITY * ELEMENT` line per entry, in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, m) in &self.entries {
            writeln!(f, "{m} * {x}")?;
        }
        Ok(())
    }
}

/// Elements that can be concatenated like strings.
pub trait Concat {
    fn empty() -> Self;
    fn concat(&self, other: &Self) -> Self;
    fn length(&self) -> usize;
}

/// Elements with an n-th power (repetition for strings).
pub trait Power {
    fn power(&self, n: u32) -> Self;
}

impl Concat for String {
    fn empty() -> Self {
        String::new()
    }
    fn concat(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.push_str(other);
        s
    }
    fn length(&self) -> usize {
        self.chars().count()
    }
}

impl Power for String {
    fn power(&self, n: u32) -> Self {
        self.repeat(n as usize)
    }
}

impl Power for i64 {
    fn power(&self, n: u32) -> Self {
        self.pow(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplicity::INF;

    fn ms(items: &[(&str, u64)]) -> Multiset<String> {
        Multiset::from_counts(items.iter().map(|(s, m)| (s.to_string(), *m)))
    }

    fn nums(items: &[i64]) -> Multiset<i64> {
        items.iter().copied().collect()
    }

    #[test]
    fn count_of_listed_elements() {
        let a: Multiset<&str> = ["a", "a", "a", "b", "b"].into_iter().collect();
        assert_eq!(a.count(&"a"), 3u64.into());
        assert_eq!(Multiset::<&str>::new().count(&"a"), 0u64.into());
        let inf = Multiset::from_counts([("a", INF)]);
        assert_eq!(inf.count(&"a"), INF);
    }

    #[test]
    fn support_caps_at_one() {
        let a = Multiset::from_counts([("a", INF), ("b", 1u64.into())]);
        assert_eq!(a.support(), Multiset::from_iter(["a", "b"]));
        assert!(ms(&[("a", 3), ("b", 2)]).support().is_set());
        assert!(Multiset::<String>::new().support().is_empty());
    }

    #[test]
    fn combine_modes() {
        let a = ms(&[("a", 2), ("b", 1)]);
        let b = ms(&[("a", 1), ("b", 3)]);
        assert_eq!(a.union(&b), ms(&[("a", 2), ("b", 3)]));
        assert_eq!(a.intersection(&b), ms(&[("a", 1), ("b", 1)]));
        assert_eq!(a.sum(&b), ms(&[("a", 3), ("b", 4)]));
        assert_eq!(a.product(&b), ms(&[("a", 2), ("b", 3)]));
    }

    #[test]
    fn subset_and_similarity() {
        let a = ms(&[("a", 1)]);
        let aa = ms(&[("a", 2)]);
        assert!(a.is_subset(&aa));
        assert!(!aa.is_subset(&a));
        assert!(Multiset::new().is_subset(&aa));
        assert!(aa.is_similar(&a));
        assert!(!a.is_similar(&ms(&[("b", 1)])));
    }

    #[test]
    fn pairwise_sum_of_numbers() {
        let a = nums(&[2, 2, 3]);
        let b = nums(&[0, 1]);
        let s = a.pairwise(&b, |x, y| x + y);
        assert_eq!(s, nums(&[2, 2, 3, 3, 3, 4]));
        assert_eq!(s.len(), a.len() * b.len());
        let ab = ms(&[("a", 1)]).concat(&ms(&[("b", 1)]));
        assert_eq!(ab, ms(&[("ab", 1)]));
    }

    #[test]
    fn npower_examples() {
        let a = ms(&[("a", 1), ("b", 1)]);
        assert_eq!(
            a.npower(2, String::new(), |x, y| x.concat(y)),
            ms(&[("aa", 1), ("ab", 1), ("ba", 1), ("bb", 1)])
        );
        assert_eq!(nums(&[1, 2]).npower(2, 0, |x, y| x + y), nums(&[2, 3, 3, 4]));
        assert_eq!(a.npower(0, String::new(), |x, y| x.concat(y)), ms(&[("", 1)]));
    }

    #[test]
    fn elementwise_power_differs_from_npower() {
        let a = ms(&[("a", 1), ("b", 1)]);
        assert_eq!(a.elementwise_power(2), ms(&[("aa", 1), ("bb", 1)]));
        assert_eq!(ms(&[("a", 2)]).elementwise_power(3), ms(&[("aaa", 2)]));
        assert!(Multiset::<String>::new().elementwise_power(4).is_empty());
    }

    #[test]
    fn indexed_sum_examples() {
        let a = nums(&[2, 2, 3]);
        let fam = |i: &i64| Some(Multiset::from_counts([("c", *i as u64)]));
        assert_eq!(a.indexed_sum(fam).unwrap(), Multiset::from_counts([("c", 7u64)]));
        let a = nums(&[2, 2, 3, 5, 5, 5]);
        let fam = |i: &i64| Some(Multiset::singleton(*i));
        assert_eq!(a.indexed_sum(fam).unwrap(), a);
        assert!(nums(&[]).indexed_sum(|_| None::<Multiset<i64>>).unwrap().is_empty());
        assert!(nums(&[4]).indexed_sum(|_| None::<Multiset<i64>>).is_err());
    }

    #[test]
    fn mapped_index_example() {
        let a = nums(&[2, 2, 3, 5, 5, 5]);
        let shifted = a.map(|x| x - 1);
        assert_eq!(shifted, nums(&[1, 1, 2, 4, 4, 4]));
        let total: i64 = shifted
            .iter()
            .map(|(x, m)| x * m.to_string().parse::<i64>().unwrap())
            .sum();
        assert_eq!(total, 16);
    }

    #[test]
    fn star_examples() {
        let a = ms(&[("a", 1), ("ab", 1)]);
        assert_eq!(
            a.star(3),
            ms(&[("", 1), ("a", 1), ("aa", 1), ("ab", 1), ("aaa", 1), ("aab", 1), ("aba", 1)])
        );
        assert_eq!(ms(&[("", 1)]).star(0), Multiset::from_counts([(String::new(), INF)]));
        assert_eq!(ms(&[("a", 2)]).star(2), ms(&[("", 1), ("a", 2), ("aa", 4)]));
    }

    #[test]
    fn display_lines() {
        let a = Multiset::from_counts([("x".to_string(), INF), ("y".to_string(), 2u64.into())]);
        assert_eq!(a.to_string(), "inf * x\n2 * y\n");
    }
}
