//! Families of string mappings that split over concatenation, applied to
//! single strings and to whole grammars.

use std::collections::BTreeMap;

use multilang::semantics::enumerate;
use multilang::transduction::{
    composition_family, eval_family, finite_language, prefix_family, reflection_family, transduce_grammar,
};
use multilang::transforms::{chomsky_normal_form, CnfMode};
use multilang::{parse_grammar_text, Multiset, SymString, Symbol};

fn main() -> multilang::Result<()> {
    let g = parse_grammar_text("terminals: a b\nnonterminals: S\nstart: S\nS -> a S b\nS -> a b\n")?;
    let sigma = g.terminals().clone();
    let cnf = chomsky_normal_form(&g, CnfMode::Strict)?.grammar;

    let reflect = reflection_family(&sigma);
    println!("reflect aab: {}", eval_family(&reflect, 0, &SymString::terminals("aab"), 3)?);
    print!("reflected language:\n{}", enumerate(&transduce_grammar(&cnf, &reflect, 0)?, 6)?);

    let prefix = prefix_family(&sigma);
    print!("\nprefixes, up to length 4:\n{}", enumerate(&transduce_grammar(&cnf, &prefix, 0)?, 4)?);

    let mut map = BTreeMap::new();
    let two: Multiset<SymString> = ["x", "yy"].iter().map(|w| SymString::terminals(w)).collect();
    map.insert(Symbol::t("a"), finite_language(two));
    map.insert(Symbol::t("b"), finite_language(Multiset::singleton(SymString::epsilon())));
    let h = composition_family(map);
    print!("\na -> {{x, yy}}, b -> ε:\n{}", enumerate(&transduce_grammar(&cnf, &h, 0)?, 4)?);
    Ok(())
}
