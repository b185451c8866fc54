//! Brute-force parse counting by height-bounded forest enumeration.
//!
//! `T_h(A, i, j)` counts parse trees of `τ[i..j]` rooted at `A` whose height
//! (internal nodes on the longest root-to-leaf path) is at most `h`. The
//! tables are built bottom-up from `T_0 = 0`; nothing here consults
//! nullability, circularity or unit systems.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grammar::Grammar;
use crate::multiplicity::Multiplicity;
use crate::symbol::{SymString, Symbol};

use super::analysis::{Indexed, Item};

/// `(|τ| + 1) · |N| · (|τ| + 2)`.
pub fn stability_bound(g: &Grammar, tau: &SymString) -> usize {
    (tau.len() + 1) * g.nonterminals().len() * (tau.len() + 2)
}

/// Height-indexed snapshots of the tree-count tables for one `τ`.
pub struct OracleTable {
    ix: Indexed,
    tau: Vec<Symbol>,
    snapshots: BTreeMap<usize, Vec<BigUint>>,
    /// Height after which the tables stopped changing, if reached.
    pub fixpoint: Option<usize>,
}

fn seq(
    items: &[Item],
    tau: &[Symbol],
    tab: &[BigUint],
    n: usize,
    i: usize,
    j: usize,
) -> BigUint {
    let width = j - i + 1;
    let mut f = vec![BigUint::zero(); width];
    f[0] = BigUint::one();
    for it in items {
        let mut g = vec![BigUint::zero(); width];
        for p in 0..width {
            if f[p].is_zero() {
                continue;
            }
            match it {
                Item::T(t) => {
                    if p + 1 < width && tau[i + p] == *t {
                        g[p + 1] += &f[p];
                    }
                }
                Item::N(b) => {
                    for q in p..width {
                        let v = &tab[(b * (n + 1) + i + p) * (n + 1) + i + q];
                        if !v.is_zero() {
                            g[q] += &f[p] * v;
                        }
                    }
                }
            }
        }
        f = g;
    }
    f.pop().unwrap()
}

impl OracleTable {
    /// Builds tables up to the largest requested height, keeping a snapshot
    /// at each requested height.
    pub fn build(g: &Grammar, tau: &SymString, heights: &[usize]) -> Result<Self> {
        g.check_string(tau)?;
        if !tau.is_terminal() {
            return Err(Error::Precondition("target string must be terminal".into()));
        }
        let ix = Indexed::new(g);
        let t: Vec<Symbol> = tau.symbols().to_vec();
        let n = t.len();
        let size = ix.len() * (n + 1) * (n + 1);
        let max_h = heights.iter().copied().max().unwrap_or(0);
        let mut cur = vec![BigUint::zero(); size];
        let mut snapshots = BTreeMap::new();
        let mut fixpoint = None;
        if heights.contains(&0) {
            snapshots.insert(0, cur.clone());
        }
        for h in 1..=max_h {
            let mut next = vec![BigUint::zero(); size];
            for p in &ix.prods {
                let w = match &p.weight {
                    Multiplicity::Finite(k) => k,
                    Multiplicity::Infinite => unreachable!("copies are finite"),
                };
                for i in 0..=n {
                    for j in i..=n {
                        let v = seq(&p.rhs, &t, &cur, n, i, j);
                        if !v.is_zero() {
                            next[(p.lhs * (n + 1) + i) * (n + 1) + j] += w * v;
                        }
                    }
                }
            }
            let stable = next == cur;
            cur = next;
            if stable {
                fixpoint = Some(h - 1);
                for &k in heights.iter().filter(|&&k| k >= h) {
                    snapshots.insert(k, cur.clone());
                }
                break;
            }
            if heights.contains(&h) {
                snapshots.insert(h, cur.clone());
            }
        }
        Ok(OracleTable {
            ix,
            tau: t,
            snapshots,
            fixpoint,
        })
    }

    /// Forests parsing `τ[i..j]` as `σ` with every tree of height `≤ h`.
    /// `h` must be one of the heights passed to [`OracleTable::build`].
    pub fn count(&self, sigma: &SymString, i: usize, j: usize, h: usize) -> BigUint {
        let tab = &self.snapshots[&h];
        seq(&self.ix.items(sigma), &self.tau, tab, self.tau.len(), i, j)
    }
}

/// Forests parsing `τ` as `σ` whose trees all have height at most `bound`.
pub fn oracle_count_parses(
    g: &Grammar,
    sigma: &SymString,
    tau: &SymString,
    bound: usize,
) -> Result<BigUint> {
    g.check_string(sigma)?;
    let t = OracleTable::build(g, tau, &[bound])?;
    Ok(t.count(sigma, 0, tau.len(), bound))
}

/// Height-bounded counts for `h = 0..=max_h`.
pub fn oracle_counts_by_height(
    g: &Grammar,
    sigma: &SymString,
    tau: &SymString,
    max_h: usize,
) -> Result<Vec<BigUint>> {
    g.check_string(sigma)?;
    let hs: Vec<usize> = (0..=max_h).collect();
    let t = OracleTable::build(g, tau, &hs)?;
    Ok(hs.iter().map(|&h| t.count(sigma, 0, tau.len(), h)).collect())
}

/// Whether some split of `τ[i..j]` over `items` has every nonterminal cell
/// in `low`, and, if `high` is given, at least one of them in `high`.
fn exists_seq(
    items: &[Item],
    tau: &[Symbol],
    low: &[bool],
    high: Option<&[bool]>,
    n: usize,
    i: usize,
    j: usize,
) -> bool {
    let width = j - i + 1;
    // f[p][k]: prefix reaches i + p, k = whether a `high` cell was used
    let mut f = vec![[false; 2]; width];
    f[0][0] = true;
    for it in items {
        let mut g = vec![[false; 2]; width];
        for p in 0..width {
            if !f[p][0] && !f[p][1] {
                continue;
            }
            match it {
                Item::T(t) => {
                    if p + 1 < width && tau[i + p] == *t {
                        g[p + 1][0] |= f[p][0];
                        g[p + 1][1] |= f[p][1];
                    }
                }
                Item::N(b) => {
                    for q in p..width {
                        let c = (b * (n + 1) + i + p) * (n + 1) + i + q;
                        if low[c] {
                            g[q][0] |= f[p][0];
                            g[q][1] |= f[p][1];
                        }
                        if high.is_some_and(|h| h[c]) {
                            g[q][1] |= f[p][0];
                        }
                    }
                }
            }
        }
        f = g;
    }
    f[width - 1][usize::from(high.is_some())]
}

/// One height step of a boolean table.
fn step_exists(ix: &Indexed, tau: &[Symbol], low: &[bool], high: Option<&[bool]>) -> Vec<bool> {
    let n = tau.len();
    let mut next = vec![false; low.len()];
    for p in &ix.prods {
        for i in 0..=n {
            for j in i..=n {
                let c = (p.lhs * (n + 1) + i) * (n + 1) + j;
                if !next[c] && exists_seq(&p.rhs, tau, low, high, n, i, j) {
                    next[c] = true;
                }
            }
        }
    }
    next
}

/// Decides `[τ]L(σ)` by brute force. A cell is infinite iff it has a parse
/// tree of height in `(B, 2B]` for the stability bound `B`; finite cells
/// are then counted exactly from trees of height at most `B`, which never
/// pass through an infinite cell.
pub fn oracle_decide(g: &Grammar, sigma: &SymString, tau: &SymString) -> Result<Multiplicity> {
    g.check_string(sigma)?;
    g.check_string(tau)?;
    if !tau.is_terminal() {
        return Err(Error::Precondition("target string must be terminal".into()));
    }
    let b = stability_bound(g, tau).max(1);
    let ix = Indexed::new(g);
    let t: Vec<Symbol> = tau.symbols().to_vec();
    let n = t.len();
    let size = ix.len() * (n + 1) * (n + 1);

    // exists[h]: some tree of height <= h
    let mut exists = vec![vec![false; size]];
    for h in 1..2 * b {
        let next = step_exists(&ix, &t, &exists[h - 1], None);
        exists.push(next);
    }
    // tall: some tree of height in [k, k + b - 1], from k = 1 up to b + 1
    let mut tall = exists[b].clone();
    for k in 2..=b + 1 {
        tall = step_exists(&ix, &t, &exists[k + b - 2], Some(&tall));
    }
    let infinite = tall;

    let mut cur = vec![BigUint::zero(); size];
    for _ in 0..b {
        let mut next = vec![BigUint::zero(); size];
        for p in &ix.prods {
            let w = p.weight.finite().expect("copies are finite");
            for i in 0..=n {
                for j in i..=n {
                    let c = (p.lhs * (n + 1) + i) * (n + 1) + j;
                    if infinite[c] {
                        continue;
                    }
                    let v = seq(&p.rhs, &t, &cur, n, i, j);
                    if !v.is_zero() {
                        next[c] += w * v;
                    }
                }
            }
        }
        if next == cur {
            break;
        }
        cur = next;
    }

    let items = ix.items(sigma);
    if exists_seq(&items, &t, &exists[b], Some(&infinite), n, 0, n) {
        return Ok(Multiplicity::Infinite);
    }
    Ok(seq(&items, &t, &cur, n, 0, n).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::tests::worked_example;
    use crate::grammar::GrammarBuilder;

    fn chain1() -> Grammar {
        GrammarBuilder::new()
            .nonterminals(&["A0", "A1"])
            .rule("A0", "_")
            .rule("A0", "_")
            .rule("A1", "A0 A0")
            .build()
            .unwrap()
    }

    #[test]
    fn chain_height_counts() {
        let g = chain1();
        let a1 = g.parse_string("A1").unwrap();
        let eps = SymString::epsilon();
        assert_eq!(oracle_count_parses(&g, &a1, &eps, 3).unwrap(), 4u32.into());
        assert_eq!(oracle_count_parses(&g, &a1, &eps, 1).unwrap(), 0u32.into());
        let by_h = oracle_counts_by_height(&g, &a1, &eps, 3).unwrap();
        assert_eq!(by_h, [0u32, 0, 4, 4].map(BigUint::from).to_vec());
    }

    #[test]
    fn catalan_by_oracle() {
        let g = GrammarBuilder::new()
            .terminals(&["a"])
            .nonterminals(&["A"])
            .rule("A", "A A")
            .rule("A", "a")
            .build()
            .unwrap();
        let a = g.parse_string("A").unwrap();
        assert_eq!(oracle_decide(&g, &a, &SymString::terminals("aaaa")).unwrap(), 5u64.into());
    }

    #[test]
    fn worked_example_grows() {
        let g = worked_example();
        let a = g.parse_string("A").unwrap();
        assert!(oracle_decide(&g, &a, &SymString::epsilon()).unwrap().is_infinite());
        let v = oracle_counts_by_height(&g, &a, &SymString::epsilon(), 6).unwrap();
        assert_eq!(v, [0u32, 1, 1, 2, 2, 5, 5].map(BigUint::from).to_vec());
    }

    #[test]
    fn fixpoint_is_detected() {
        let g = chain1();
        let t = OracleTable::build(&g, &SymString::epsilon(), &[10]).unwrap();
        assert_eq!(t.fixpoint, Some(2));
        assert_eq!(t.count(&g.parse_string("A1").unwrap(), 0, 0, 10), 4u32.into());
    }
}
