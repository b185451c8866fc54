mod common;

use common::*;
use multilang::semantics::{count_in_language, enumerate, enumerate_from, SubstringCounts};
use multilang::{parse_grammar_text, render_grammar_text, Multiplicity, Multiset, SymString};
use proptest::prelude::*;

fn multiset() -> impl Strategy<Value = Multiset<SymString>> {
    let count = prop_oneof![4 => (1u32..5).prop_map(Multiplicity::from), 1 => Just(Multiplicity::Infinite)];
    proptest::collection::btree_map("[ab]{0,2}", count, 0..4)
        .prop_map(|m| Multiset::from_counts(m.into_iter().map(|(w, k)| (SymString::terminals(&w), k))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn text_format_round_trips(seed in any::<u64>()) {
        let g = random_grammar(&mut TestRng::seed_from_u64(seed));
        let back = parse_grammar_text(&render_grammar_text(&g)).unwrap();
        prop_assert_eq!(back.production_multiset(), g.production_multiset());
        prop_assert_eq!(back.start(), g.start());
    }

    #[test]
    fn counting_agrees_with_enumeration(seed in any::<u64>()) {
        let g = random_grammar(&mut TestRng::seed_from_u64(seed));
        let l = enumerate(&g, 3).unwrap();
        for w in words(3) {
            prop_assert_eq!(count_in_language(&g, &w).unwrap(), l.count(&w));
        }
    }

    #[test]
    fn substring_table_matches_whole_counts(seed in any::<u64>()) {
        let g = random_grammar(&mut TestRng::seed_from_u64(seed));
        let tau = SymString::terminals("abab");
        let table = SubstringCounts::new(&g, &tau).unwrap();
        for a in g.nonterminals() {
            let sigma = SymString::new(vec![a.clone()]);
            let l = enumerate_from(&g, &sigma, 4).unwrap();
            for (i, j) in [(0, 4), (1, 3), (2, 2), (0, 1)] {
                prop_assert_eq!(table.count(&sigma, i, j), l.count(&tau.slice(i, j)));
            }
        }
    }

    #[test]
    fn sum_dominates_union(a in multiset(), b in multiset()) {
        prop_assert!(a.union(&b).is_subset(&a.sum(&b)));
        prop_assert!(a.product(&b).is_similar(&a.intersection(&b)));
        prop_assert_eq!(a.sum(&b).len(), a.len() + b.len());
    }

    #[test]
    fn concatenation_distributes(a in multiset(), b in multiset(), c in multiset()) {
        prop_assert_eq!(a.sum(&b).concat(&c), a.concat(&c).sum(&b.concat(&c)));
    }
}
