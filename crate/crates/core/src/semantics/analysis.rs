//! Structural analyses: nullability, circularity, left recursion, usefulness.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::grammar::Grammar;
use crate::multiplicity::Multiplicity;
use crate::symbol::Symbol;

/// Right-hand-side symbol with nonterminals replaced by dense indices.
#[derive(Clone, Debug)]
pub(crate) enum Item {
    T(Symbol),
    N(usize),
}

#[derive(Clone, Debug)]
pub(crate) struct IProd {
    pub lhs: usize,
    pub rhs: Vec<Item>,
    pub weight: Multiplicity,
}

/// Dense view of a grammar used by the counting algorithms.
#[derive(Clone, Debug)]
pub(crate) struct Indexed {
    pub nts: Vec<Symbol>,
    pub index: HashMap<Symbol, usize>,
    pub prods: Vec<IProd>,
}

impl Indexed {
    pub fn new(g: &Grammar) -> Self {
        let nts: Vec<Symbol> = g.nonterminals().iter().cloned().collect();
        let index: HashMap<Symbol, usize> = nts.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let prods = g
            .productions()
            .iter()
            .map(|p| IProd {
                lhs: index[&p.lhs],
                rhs: p.rhs.iter().map(|s| item(&index, s)).collect(),
                weight: p.weight(),
            })
            .collect();
        Indexed { nts, index, prods }
    }

    pub fn items(&self, s: &crate::symbol::SymString) -> Vec<Item> {
        s.iter().map(|x| item(&self.index, x)).collect()
    }

    pub fn len(&self) -> usize {
        self.nts.len()
    }
}

fn item(index: &HashMap<Symbol, usize>, s: &Symbol) -> Item {
    if s.is_terminal() {
        Item::T(s.clone())
    } else {
        Item::N(index[s])
    }
}

/// `reach[a][b]`: b is reachable from a in one or more steps.
pub(crate) fn plus_closure(edges: &[BTreeSet<usize>]) -> Vec<Vec<bool>> {
    let n = edges.len();
    let mut reach = vec![vec![false; n]; n];
    for a in 0..n {
        let mut stack: Vec<usize> = edges[a].iter().copied().collect();
        while let Some(b) = stack.pop() {
            if !reach[a][b] {
                reach[a][b] = true;
                stack.extend(edges[b].iter().copied());
            }
        }
    }
    reach
}

pub(crate) fn nullable_set(ix: &Indexed) -> Vec<bool> {
    let mut nullable = vec![false; ix.len()];
    let mut changed = true;
    while changed {
        changed = false;
        for p in &ix.prods {
            if !nullable[p.lhs]
                && p.rhs.iter().all(|it| matches!(it, Item::N(b) if nullable[*b]))
            {
                nullable[p.lhs] = true;
                changed = true;
            }
        }
    }
    nullable
}

pub(crate) fn productive_set(ix: &Indexed) -> Vec<bool> {
    let mut productive = vec![false; ix.len()];
    let mut changed = true;
    while changed {
        changed = false;
        for p in &ix.prods {
            if !productive[p.lhs]
                && p.rhs.iter().all(|it| match it {
                    Item::T(_) => true,
                    Item::N(b) => productive[*b],
                })
            {
                productive[p.lhs] = true;
                changed = true;
            }
        }
    }
    productive
}

/// Edges `A → B` for productions `A → αBω` with `αω ⇒* ε`.
pub(crate) fn unit_edges(ix: &Indexed, nullable: &[bool]) -> Vec<BTreeSet<usize>> {
    let mut edges = vec![BTreeSet::new(); ix.len()];
    for p in &ix.prods {
        for (k, it) in p.rhs.iter().enumerate() {
            if let Item::N(b) = it {
                let others_nullable = p
                    .rhs
                    .iter()
                    .enumerate()
                    .all(|(m, o)| m == k || matches!(o, Item::N(c) if nullable[*c]));
                if others_nullable {
                    edges[p.lhs].insert(*b);
                }
            }
        }
    }
    edges
}

/// Edges `A → B` for productions `A → αBω` with `α ⇒* ε`.
pub(crate) fn left_corner_edges(ix: &Indexed, nullable: &[bool]) -> Vec<BTreeSet<usize>> {
    let mut edges = vec![BTreeSet::new(); ix.len()];
    for p in &ix.prods {
        for it in &p.rhs {
            match it {
                Item::N(b) => {
                    edges[p.lhs].insert(*b);
                    if !nullable[*b] {
                        break;
                    }
                }
                Item::T(_) => break,
            }
        }
    }
    edges
}

pub(crate) fn circular_flags(ix: &Indexed, nullable: &[bool]) -> Vec<bool> {
    let reach = plus_closure(&unit_edges(ix, nullable));
    (0..ix.len()).map(|a| reach[a][a]).collect()
}

/// Exact `[ε]L(A)` for every nonterminal, by index.
pub(crate) fn nullable_counts_indexed(ix: &Indexed) -> Vec<Multiplicity> {
    let n = ix.len();
    let nullable = nullable_set(ix);
    let circular = circular_flags(ix, &nullable);
    // A → B when some all-nullable right side of A contains B
    let mut eps_edges = vec![BTreeSet::new(); n];
    for p in &ix.prods {
        if p.rhs.iter().all(|it| matches!(it, Item::N(b) if nullable[*b])) {
            for it in &p.rhs {
                if let Item::N(b) = it {
                    eps_edges[p.lhs].insert(*b);
                }
            }
        }
    }
    let reach = plus_closure(&eps_edges);
    let infinite: Vec<bool> = (0..n)
        .map(|a| {
            nullable[a]
                && (circular[a] || (0..n).any(|b| reach[a][b] && nullable[b] && circular[b]))
        })
        .collect();

    let mut memo: Vec<Option<Multiplicity>> = vec![None; n];
    fn eval(
        a: usize,
        ix: &Indexed,
        nullable: &[bool],
        infinite: &[bool],
        memo: &mut Vec<Option<Multiplicity>>,
    ) -> Multiplicity {
        if let Some(m) = &memo[a] {
            return m.clone();
        }
        let m = if !nullable[a] {
            Multiplicity::zero()
        } else if infinite[a] {
            Multiplicity::Infinite
        } else {
            let mut total = Multiplicity::zero();
            for p in ix.prods.iter().filter(|p| p.lhs == a) {
                if !p.rhs.iter().all(|it| matches!(it, Item::N(b) if nullable[*b])) {
                    continue;
                }
                let mut prod = p.weight.clone();
                for it in &p.rhs {
                    if let Item::N(b) = it {
                        prod = &prod * &eval(*b, ix, nullable, infinite, memo);
                    }
                }
                total += prod;
            }
            total
        };
        memo[a] = Some(m.clone());
        m
    }
    (0..n)
        .map(|a| eval(a, ix, &nullable, &infinite, &mut memo))
        .collect()
}

/// Nonterminals `A` with `A →⁺ A`.
pub fn circular_nonterminals(g: &Grammar) -> BTreeSet<Symbol> {
    let ix = Indexed::new(g);
    let nullable = nullable_set(&ix);
    circular_flags(&ix, &nullable)
        .into_iter()
        .enumerate()
        .filter(|(_, c)| *c)
        .map(|(i, _)| ix.nts[i].clone())
        .collect()
}

/// Classes of mutually derivable circular nonterminals, each sorted, listed
/// in order of their least member.
pub fn cocircular_classes(g: &Grammar) -> Vec<BTreeSet<Symbol>> {
    let ix = Indexed::new(g);
    let nullable = nullable_set(&ix);
    let reach = plus_closure(&unit_edges(&ix, &nullable));
    let mut seen = vec![false; ix.len()];
    let mut classes = Vec::new();
    for a in 0..ix.len() {
        if seen[a] || !reach[a][a] {
            continue;
        }
        let class: BTreeSet<Symbol> = (0..ix.len())
            .filter(|&b| b == a || (reach[a][b] && reach[b][a]))
            .inspect(|&b| seen[b] = true)
            .map(|b| ix.nts[b].clone())
            .collect();
        classes.push(class);
    }
    classes.sort();
    classes
}

/// `[ε]L(A)` for every nonterminal, `∞` where infinitely many parses exist.
pub fn nullable_counts(g: &Grammar) -> BTreeMap<Symbol, Multiplicity> {
    let ix = Indexed::new(g);
    nullable_counts_indexed(&ix)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (ix.nts[i].clone(), m))
        .collect()
}

/// Nonterminals `X` with `X →⁺ Xω`.
pub fn left_recursive(g: &Grammar) -> BTreeSet<Symbol> {
    let ix = Indexed::new(g);
    let nullable = nullable_set(&ix);
    let reach = plus_closure(&left_corner_edges(&ix, &nullable));
    (0..ix.len())
        .filter(|&a| reach[a][a])
        .map(|a| ix.nts[a].clone())
        .collect()
}

/// Nonterminals with `L(A) = ∅`.
pub fn unproductive(g: &Grammar) -> BTreeSet<Symbol> {
    let ix = Indexed::new(g);
    productive_set(&ix)
        .into_iter()
        .enumerate()
        .filter(|(_, p)| !p)
        .map(|(i, _)| ix.nts[i].clone())
        .collect()
}

/// Nonterminals that occur in no parse of any string of `L(𝒢)`.
pub fn useless(g: &Grammar) -> BTreeSet<Symbol> {
    let ix = Indexed::new(g);
    let productive = productive_set(&ix);
    let ok = |s: &crate::symbol::SymString| {
        s.iter()
            .all(|x| x.is_terminal() || productive[ix.index[x]])
    };
    let mut useful = vec![false; ix.len()];
    let mut stack = Vec::new();
    for (s, _) in g.start().iter() {
        if ok(s) {
            stack.extend(s.iter().filter(|x| x.is_nonterminal()).map(|x| ix.index[x]));
        }
    }
    while let Some(a) = stack.pop() {
        if useful[a] {
            continue;
        }
        useful[a] = true;
        for p in g.productions_for(&ix.nts[a]) {
            if ok(&p.rhs) {
                stack.extend(p.rhs.iter().filter(|x| x.is_nonterminal()).map(|x| ix.index[x]));
            }
        }
    }
    (0..ix.len())
        .filter(|&a| !useful[a])
        .map(|a| ix.nts[a].clone())
        .collect()
}

/// Circularity facts gathered in one place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularityReport {
    pub circular: BTreeSet<Symbol>,
    pub cocircular_classes: Vec<BTreeSet<Symbol>>,
    pub nullable_counts: BTreeMap<Symbol, Multiplicity>,
}

pub fn circularity_report(g: &Grammar) -> CircularityReport {
    CircularityReport {
        circular: circular_nonterminals(g),
        cocircular_classes: cocircular_classes(g),
        nullable_counts: nullable_counts(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::tests::worked_example;
    use crate::grammar::GrammarBuilder;
    use crate::multiplicity::INF;

    fn names(s: &BTreeSet<Symbol>) -> Vec<&str> {
        s.iter().map(Symbol::name).collect()
    }

    pub(crate) fn chain(k: usize) -> Grammar {
        let mut b = GrammarBuilder::new()
            .rule("A0", "_")
            .rule("A0", "_")
            .start(&format!("A{k}"));
        let mut nts = vec!["A0".to_string()];
        for i in 1..=k {
            b = b.rule(&format!("A{i}"), &format!("A{} A{}", i - 1, i - 1));
            nts.push(format!("A{i}"));
        }
        let refs: Vec<&str> = nts.iter().map(String::as_str).collect();
        b.nonterminals(&refs).build().unwrap()
    }

    #[test]
    fn circular_in_worked_example() {
        assert_eq!(names(&circular_nonterminals(&worked_example())), ["B", "C"]);
    }

    #[test]
    fn self_loop_is_circular() {
        let g = GrammarBuilder::new().nonterminals(&["Z"]).rule("Z", "Z").build().unwrap();
        assert_eq!(names(&circular_nonterminals(&g)), ["Z"]);
    }

    #[test]
    fn nullable_context_makes_circular() {
        let g = GrammarBuilder::new()
            .nonterminals(&["A", "B"])
            .rule("A", "A B")
            .rule("B", "_")
            .build()
            .unwrap();
        assert_eq!(names(&circular_nonterminals(&g)), ["A"]);
    }

    #[test]
    fn cocircular_examples() {
        let classes = cocircular_classes(&worked_example());
        assert_eq!(classes.len(), 1);
        assert_eq!(names(&classes[0]), ["B", "C"]);
        let g = GrammarBuilder::new()
            .nonterminals(&["A", "B"])
            .rule("A", "B")
            .rule("B", "A")
            .build()
            .unwrap();
        assert_eq!(names(&cocircular_classes(&g)[0]), ["A", "B"]);
        let acyclic = GrammarBuilder::new()
            .terminals(&["a"])
            .nonterminals(&["A"])
            .rule("A", "a")
            .build()
            .unwrap();
        assert!(cocircular_classes(&acyclic).is_empty());
    }

    #[test]
    fn chain_nullable_counts_are_double_exponential() {
        for k in 0..=4u32 {
            let counts = nullable_counts(&chain(k as usize));
            assert_eq!(counts[&Symbol::n(&format!("A{k}"))], Multiplicity::pow2(1 << k));
        }
    }

    #[test]
    fn two_epsilon_productions() {
        let g = GrammarBuilder::new()
            .nonterminals(&["A"])
            .rule("A", "_")
            .rule("A", "_")
            .build()
            .unwrap();
        assert_eq!(nullable_counts(&g)[&Symbol::n("A")], 2u64.into());
    }

    #[test]
    fn worked_example_nullable_counts() {
        let counts = nullable_counts(&worked_example());
        assert_eq!(counts[&Symbol::n("A")], INF);
        assert_eq!(counts[&Symbol::n("B")], INF);
        assert_eq!(counts[&Symbol::n("C")], INF);
    }

    #[test]
    fn left_recursion_detected_through_nullable_prefix() {
        let g = GrammarBuilder::new()
            .terminals(&["a"])
            .nonterminals(&["X", "E"])
            .rule("X", "E X a")
            .rule("X", "a")
            .rule("E", "_")
            .build()
            .unwrap();
        assert_eq!(names(&left_recursive(&g)), ["X"]);
    }

    #[test]
    fn useless_detection() {
        let g = GrammarBuilder::new()
            .terminals(&["a"])
            .nonterminals(&["A", "D", "U"])
            .start("A")
            .rule("A", "a")
            .rule("D", "a")
            .rule("U", "U a")
            .rule("A", "U")
            .build()
            .unwrap();
        assert_eq!(names(&useless(&g)), ["D", "U"]);
        assert_eq!(names(&unproductive(&g)), ["U"]);
    }
}
