//! Exact parse counting `[τ]L(σ)` over ℕ ∪ {∞}.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::grammar::Grammar;
use crate::multiplicity::Multiplicity;
use crate::symbol::{SymString, Symbol};

use super::analysis::{nullable_counts_indexed, Indexed, Item};

/// Weighted full-span unit relation: `w[A]` lists `(B, w_AB)` where
/// `w_AB = Σ copies · Π e(others)` over productions `A → αBω`.
pub(crate) struct UnitSystem {
    pub w: Vec<Vec<(usize, Multiplicity)>>,
    pub cyclic: Vec<bool>,
}

impl UnitSystem {
    pub fn new(ix: &Indexed, e: &[Multiplicity]) -> Self {
        let n = ix.len();
        let mut acc: Vec<Vec<Multiplicity>> = vec![vec![Multiplicity::zero(); n]; n];
        for p in &ix.prods {
            for (k, it) in p.rhs.iter().enumerate() {
                let Item::N(b) = it else { continue };
                let mut w = p.weight.clone();
                for (m, o) in p.rhs.iter().enumerate() {
                    if m == k {
                        continue;
                    }
                    w = match o {
                        Item::N(c) => &w * &e[*c],
                        Item::T(_) => Multiplicity::zero(),
                    };
                }
                acc[p.lhs][*b] += w;
            }
        }
        let w: Vec<Vec<(usize, Multiplicity)>> = acc
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .enumerate()
                    .filter(|(_, m)| !m.is_zero())
                    .collect()
            })
            .collect();
        let edges: Vec<BTreeSet<usize>> = w
            .iter()
            .map(|row| row.iter().map(|(b, _)| *b).collect())
            .collect();
        let reach = super::analysis::plus_closure(&edges);
        let cyclic = (0..n).map(|a| reach[a][a]).collect();
        UnitSystem { w, cyclic }
    }

    /// Least solution of `x = c + Wx` over ℕ ∪ {∞}.
    pub fn solve(&self, c: &[Multiplicity]) -> Vec<Multiplicity> {
        let n = c.len();
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (a, row) in self.w.iter().enumerate() {
            for (b, _) in row {
                rev[*b].push(a);
            }
        }
        // nodes that reach some positive constant
        let mut live = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&a| !c[a].is_zero()).collect();
        while let Some(a) = stack.pop() {
            if !live[a] {
                live[a] = true;
                stack.extend(rev[a].iter().copied());
            }
        }
        let mut inf = vec![false; n];
        let mut stack: Vec<usize> = (0..n)
            .filter(|&a| {
                live[a]
                    && (c[a].is_infinite()
                        || self.cyclic[a]
                        || self.w[a].iter().any(|(b, w)| live[*b] && w.is_infinite()))
            })
            .collect();
        while let Some(a) = stack.pop() {
            if !inf[a] {
                inf[a] = true;
                stack.extend(rev[a].iter().copied().filter(|&p| live[p]));
            }
        }
        let mut x: Vec<Option<Multiplicity>> = (0..n)
            .map(|a| {
                if !live[a] {
                    Some(Multiplicity::zero())
                } else if inf[a] {
                    Some(Multiplicity::Infinite)
                } else {
                    None
                }
            })
            .collect();
        // remaining live nodes form a DAG under W
        fn eval(a: usize, sys: &UnitSystem, c: &[Multiplicity], x: &mut Vec<Option<Multiplicity>>) -> Multiplicity {
            if let Some(v) = &x[a] {
                return v.clone();
            }
            let mut v = c[a].clone();
            for (b, w) in &sys.w[a] {
                let xb = eval(*b, sys, c, x);
                v += w * &xb;
            }
            x[a] = Some(v.clone());
            v
        }
        (0..n).map(|a| eval(a, self, c, &mut x)).collect()
    }
}

/// Span table of `[τ[i..j]]L(A)` for every nonterminal and nonempty span.
pub(crate) struct SpanTable {
    pub n: usize,
    pub e: Vec<Multiplicity>,
    table: Vec<Multiplicity>,
    nts: usize,
}

impl SpanTable {
    fn at(&self, a: usize, i: usize, j: usize) -> &Multiplicity {
        &self.table[(a * (self.n + 1) + i) * (self.n + 1) + j]
    }

    fn set(&mut self, a: usize, i: usize, j: usize, m: Multiplicity) {
        let n = self.n;
        self.table[(a * (n + 1) + i) * (n + 1) + j] = m;
    }

    /// Counts parses of `tau[i..j]` as the item sequence, optionally
    /// excluding a single nonterminal covering the whole span.
    fn sequence(&self, items: &[Item], tau: &[Symbol], i: usize, j: usize, strict: bool) -> Multiplicity {
        let width = j - i + 1;
        let mut f = vec![Multiplicity::zero(); width];
        f[0] = Multiplicity::one();
        for it in items {
            let mut g = vec![Multiplicity::zero(); width];
            for p in 0..width {
                if f[p].is_zero() {
                    continue;
                }
                match it {
                    Item::T(t) => {
                        if p + 1 < width && tau[i + p] == *t {
                            g[p + 1] += f[p].clone();
                        }
                    }
                    Item::N(b) => {
                        for q in p..width {
                            let v = if q == p {
                                self.e[*b].clone()
                            } else if strict && p == 0 && q == width - 1 {
                                continue;
                            } else {
                                self.at(*b, i + p, i + q).clone()
                            };
                            if !v.is_zero() {
                                g[q] += &f[p] * &v;
                            }
                        }
                    }
                }
            }
            f = g;
        }
        f.pop().unwrap()
    }

    pub fn build(ix: &Indexed, tau: &[Symbol]) -> Self {
        let n = tau.len();
        let e = nullable_counts_indexed(ix);
        let sys = UnitSystem::new(ix, &e);
        let nts = ix.len();
        let mut st = SpanTable {
            n,
            e,
            table: vec![Multiplicity::zero(); nts * (n + 1) * (n + 1)],
            nts,
        };
        for d in 1..=n {
            for i in 0..=n - d {
                let j = i + d;
                let mut c = vec![Multiplicity::zero(); nts];
                for p in &ix.prods {
                    let v = st.sequence(&p.rhs, tau, i, j, true);
                    if !v.is_zero() {
                        c[p.lhs] += &p.weight * &v;
                    }
                }
                for (a, m) in sys.solve(&c).into_iter().enumerate() {
                    st.set(a, i, j, m);
                }
            }
        }
        debug_assert_eq!(st.nts, nts);
        st
    }

    pub fn count(&self, items: &[Item], tau: &[Symbol], i: usize, j: usize) -> Multiplicity {
        self.sequence(items, tau, i, j, false)
    }
}

fn check_terminal(g: &Grammar, tau: &SymString) -> Result<()> {
    g.check_string(tau)?;
    if let Some(s) = tau.iter().find(|s| s.is_nonterminal()) {
        return Err(Error::Precondition(format!(
            "target string contains nonterminal {s}"
        )));
    }
    Ok(())
}

/// `[τ]L(σ)`: the number of parses of the terminal string `τ` as `σ`.
pub fn count_parses(g: &Grammar, sigma: &SymString, tau: &SymString) -> Result<Multiplicity> {
    g.check_string(sigma)?;
    check_terminal(g, tau)?;
    let ix = Indexed::new(g);
    let st = SpanTable::build(&ix, tau.symbols());
    Ok(st.count(&ix.items(sigma), tau.symbols(), 0, tau.len()))
}

/// `[τ]L(𝒢)`: parses of `τ` summed over the starting strings.
pub fn count_in_language(g: &Grammar, tau: &SymString) -> Result<Multiplicity> {
    check_terminal(g, tau)?;
    let ix = Indexed::new(g);
    let st = SpanTable::build(&ix, tau.symbols());
    let mut total = Multiplicity::zero();
    for (s, m) in g.start().iter() {
        total += m * &st.count(&ix.items(s), tau.symbols(), 0, tau.len());
    }
    Ok(total)
}

/// Counts for every substring of `τ` as every nonterminal, from one table.
pub struct SubstringCounts {
    ix: Indexed,
    tau: SymString,
    table: SpanTable,
}

impl SubstringCounts {
    pub fn new(g: &Grammar, tau: &SymString) -> Result<Self> {
        check_terminal(g, tau)?;
        let ix = Indexed::new(g);
        let table = SpanTable::build(&ix, tau.symbols());
        Ok(SubstringCounts {
            ix,
            tau: tau.clone(),
            table,
        })
    }

    /// `[τ[i..j]]L(σ)`.
    pub fn count(&self, sigma: &SymString, i: usize, j: usize) -> Multiplicity {
        self.table.count(&self.ix.items(sigma), self.tau.symbols(), i, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::tests::worked_example;
    use crate::grammar::GrammarBuilder;
    use crate::multiplicity::INF;

    fn aa() -> Grammar {
        GrammarBuilder::new()
            .terminals(&["a"])
            .nonterminals(&["A"])
            .rule("A", "A A")
            .rule("A", "a")
            .build()
            .unwrap()
    }

    fn count(g: &Grammar, sigma: &str, tau: &str) -> Multiplicity {
        count_parses(g, &g.parse_string(sigma).unwrap(), &SymString::terminals(tau)).unwrap()
    }

    #[test]
    fn catalan_counts() {
        let g = aa();
        let expect = [0u64, 1, 1, 2, 5, 14, 42, 132];
        for (n, want) in expect.iter().enumerate() {
            assert_eq!(count(&g, "A", &"a".repeat(n)), (*want).into(), "n={n}");
        }
    }

    #[test]
    fn empty_sigma() {
        let g = aa();
        assert_eq!(count(&g, "_", ""), 1u64.into());
        assert_eq!(count(&g, "_", "a"), 0u64.into());
    }

    #[test]
    fn worked_example_is_infinitely_ambiguous() {
        let g = worked_example();
        assert_eq!(count(&g, "A", ""), INF);
        assert_eq!(count(&g, "A", "a"), INF);
        assert_eq!(count(&g, "B", ""), INF);
    }

    #[test]
    fn unit_chain_counts_finite() {
        let g = GrammarBuilder::new()
            .terminals(&["a"])
            .nonterminals(&["A", "B"])
            .rule("A", "B")
            .rule("A", "B")
            .rule("B", "a")
            .rule("A", "a")
            .build()
            .unwrap();
        assert_eq!(count(&g, "A", "a"), 3u64.into());
    }

    #[test]
    fn unit_cycle_is_infinite() {
        let g = GrammarBuilder::new()
            .terminals(&["a"])
            .nonterminals(&["A", "B"])
            .rule("A", "B")
            .rule("B", "A")
            .rule("B", "a")
            .build()
            .unwrap();
        assert_eq!(count(&g, "A", "a"), INF);
        assert_eq!(count(&g, "A", "aa"), 0u64.into());
    }

    #[test]
    fn nullable_padding_multiplies() {
        let g = GrammarBuilder::new()
            .terminals(&["a"])
            .nonterminals(&["A", "E"])
            .rule("A", "E a E")
            .rule_n("E", "_", 3)
            .build()
            .unwrap();
        assert_eq!(count(&g, "A", "a"), 9u64.into());
    }

    #[test]
    fn copies_weight_counts() {
        let g = GrammarBuilder::new()
            .terminals(&["a"])
            .nonterminals(&["A"])
            .rule_n("A", "a", 2)
            .rule("A", "A A")
            .build()
            .unwrap();
        assert_eq!(count(&g, "A", "aa"), 4u64.into());
    }

    #[test]
    fn language_count_uses_start_multiplicities() {
        let g = GrammarBuilder::new()
            .terminals(&["a"])
            .nonterminals(&["A"])
            .start_n("A", 3)
            .start("a")
            .rule("A", "a")
            .build()
            .unwrap();
        assert_eq!(count_in_language(&g, &SymString::terminals("a")).unwrap(), 4u64.into());
    }

    #[test]
    fn substring_table() {
        let g = aa();
        let t = SubstringCounts::new(&g, &SymString::terminals("aaaa")).unwrap();
        let a = g.parse_string("A").unwrap();
        assert_eq!(t.count(&a, 1, 4), 2u64.into());
        assert_eq!(t.count(&a, 0, 4), 5u64.into());
        assert_eq!(t.count(&g.parse_string("A A").unwrap(), 0, 3), 2u64.into());
    }

    #[test]
    fn nonterminal_target_rejected() {
        let g = aa();
        assert!(count_parses(&g, &g.parse_string("A").unwrap(), &g.parse_string("A").unwrap()).is_err());
    }
}
