//! Circularity, co-circular classes and the number of ways to derive ε.

use multilang::parse_grammar_text;
use multilang::semantics::{circularity_report, left_recursive, useless};

fn main() -> multilang::Result<()> {
    let g = parse_grammar_text(include_str!("../grammars/worked.cfg"))?;
    let r = circularity_report(&g);
    println!("circular: {:?}", r.circular.iter().map(|s| s.name()).collect::<Vec<_>>());
    for class in &r.cocircular_classes {
        println!("co-circular class: {:?}", class.iter().map(|s| s.name()).collect::<Vec<_>>());
    }
    println!("left-recursive: {}", left_recursive(&g).len());
    println!("useless: {}", useless(&g).len());
    for (a, m) in &r.nullable_counts {
        println!("{a} =>* ε in {m} ways");
    }

    // each level squares the count
    let chain = parse_grammar_text(include_str!("../grammars/chain3.cfg"))?;
    for (a, m) in circularity_report(&chain).nullable_counts {
        println!("{a}: {m}");
    }
    Ok(())
}
