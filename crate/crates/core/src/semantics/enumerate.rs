//! The multilanguage restricted to strings of bounded length.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::grammar::Grammar;
use crate::multiplicity::Multiplicity;
use crate::multiset::Multiset;
use crate::symbol::SymString;

use super::analysis::{nullable_counts_indexed, Indexed, Item};
use super::count::UnitSystem;

type Words = BTreeMap<SymString, Multiplicity>;

fn add_into(dst: &mut Words, word: SymString, m: Multiplicity) {
    if m.is_zero() {
        return;
    }
    *dst.entry(word).or_insert_with(Multiplicity::zero) += m;
}

struct Tables {
    e: Vec<Multiplicity>,
    // lang[a][l]: words of length l (l ≥ 1)
    lang: Vec<Vec<Words>>,
}

impl Tables {
    /// Words of length ≤ `max` spelled by the item sequence; when
    /// `exclude` is set, a nonterminal child may not produce all `max`
    /// symbols on its own.
    fn sequence(&self, items: &[Item], max: usize, exclude: Option<usize>) -> Vec<Words> {
        let mut f: Vec<Words> = vec![Words::new(); max + 1];
        f[0].insert(SymString::epsilon(), Multiplicity::one());
        for it in items {
            let mut g: Vec<Words> = vec![Words::new(); max + 1];
            for (p, words) in f.iter().enumerate() {
                for (w, m) in words {
                    match it {
                        Item::T(t) => {
                            if p < max {
                                let mut w2 = w.clone();
                                w2.push(t.clone());
                                add_into(&mut g[p + 1], w2, m.clone());
                            }
                        }
                        Item::N(b) => {
                            add_into(&mut g[p], w.clone(), m * &self.e[*b]);
                            for l in 1..=max - p {
                                if exclude == Some(l) && p == 0 {
                                    continue;
                                }
                                for (v, mv) in &self.lang[*b][l] {
                                    let mut w2 = w.clone().into_vec();
                                    w2.extend(v.iter().cloned());
                                    add_into(&mut g[p + l], SymString::new(w2), m * mv);
                                }
                            }
                        }
                    }
                }
            }
            f = g;
        }
        f
    }
}

/// `L(𝒢)` restricted to strings of length at most `max_len`, with exact
/// multiplicities (possibly `∞`).
pub fn enumerate(g: &Grammar, max_len: usize) -> Result<Multiset<SymString>> {
    let ix = Indexed::new(g);
    let tables = build(&ix, max_len);
    let mut out = Multiset::new();
    for (s, m) in g.start().iter() {
        for words in tables.sequence(&ix.items(s), max_len, None) {
            for (w, c) in words {
                out.insert(w, m * &c);
            }
        }
    }
    Ok(out)
}

/// `L(σ)` restricted to strings of length at most `max_len`.
pub fn enumerate_from(g: &Grammar, sigma: &SymString, max_len: usize) -> Result<Multiset<SymString>> {
    g.check_string(sigma)?;
    let ix = Indexed::new(g);
    let tables = build(&ix, max_len);
    let mut out = Multiset::new();
    for words in tables.sequence(&ix.items(sigma), max_len, None) {
        for (w, c) in words {
            out.insert(w, c);
        }
    }
    Ok(out)
}

fn build(ix: &Indexed, max_len: usize) -> Tables {
    let n = ix.len();
    let e = nullable_counts_indexed(ix);
    let sys = UnitSystem::new(ix, &e);
    let mut tables = Tables {
        e,
        lang: vec![vec![Words::new(); max_len + 1]; n],
    };
    for l in 1..=max_len {
        let mut contrib: Vec<Words> = vec![Words::new(); n];
        for p in &ix.prods {
            let f = tables.sequence(&p.rhs, l, Some(l));
            for (w, m) in &f[l] {
                add_into(&mut contrib[p.lhs], w.clone(), &p.weight * m);
            }
        }
        let mut words: Vec<SymString> = contrib.iter().flat_map(|c| c.keys().cloned()).collect();
        words.sort();
        words.dedup();
        for w in words {
            let c: Vec<Multiplicity> = contrib
                .iter()
                .map(|cw| cw.get(&w).cloned().unwrap_or_else(Multiplicity::zero))
                .collect();
            for (a, m) in sys.solve(&c).into_iter().enumerate() {
                add_into(&mut tables.lang[a][l], w.clone(), m);
            }
        }
    }
    tables
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::tests::worked_example;
    use crate::grammar::GrammarBuilder;
    use crate::multiplicity::INF;

    #[test]
    fn catalan_prefix() {
        let g = GrammarBuilder::new()
            .terminals(&["a"])
            .nonterminals(&["A"])
            .start("A")
            .rule("A", "A A")
            .rule("A", "a")
            .build()
            .unwrap();
        let l = enumerate(&g, 4).unwrap();
        let got: Vec<u64> = (1..=4)
            .map(|n| {
                l.count(&SymString::terminals(&"a".repeat(n)))
                    .finite()
                    .unwrap()
                    .try_into()
                    .unwrap()
            })
            .collect();
        assert_eq!(got, [1, 1, 2, 5]);
        assert_eq!(l.distinct_len(), 4);
    }

    #[test]
    fn worked_example_all_infinite() {
        let l = enumerate(&worked_example(), 3).unwrap();
        assert_eq!(l.distinct_len(), 4);
        for (_, m) in l.iter() {
            assert_eq!(*m, INF);
        }
    }

    #[test]
    fn mixed_alphabet() {
        let g = GrammarBuilder::new()
            .terminals(&["a", "b"])
            .nonterminals(&["S"])
            .start("S")
            .rule("S", "a S b")
            .rule("S", "_")
            .rule("S", "_")
            .build()
            .unwrap();
        let l = enumerate(&g, 4).unwrap();
        assert_eq!(l.count(&SymString::terminals("")), 2u64.into());
        assert_eq!(l.count(&SymString::terminals("aabb")), 2u64.into());
        assert_eq!(l.count(&SymString::terminals("ab")), 2u64.into());
        assert_eq!(l.distinct_len(), 3);
    }
}
