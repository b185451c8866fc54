//! Comparing languages: equal, strongly equivalent, similar or different.

use multilang::transforms::{chomsky_normal_form, CnfMode};
use multilang::{equivalence, parse_grammar_text};

fn main() -> multilang::Result<()> {
    let g = parse_grammar_text(include_str!("../grammars/worked.cfg"))?;
    for mode in [CnfMode::KeepZ, CnfMode::Similar] {
        let h = chomsky_normal_form(&g, mode)?.grammar;
        let v = equivalence(&g, &h, 4)?;
        println!("{mode:?}: {}", v.level);
        if let Some((w, x, y)) = v.first_divergence {
            println!("  first at {w}: {x} vs {y}");
        }
    }
    let once = parse_grammar_text("terminals: a\nnonterminals: A\nstart: A\nA -> a\n")?;
    let twice = parse_grammar_text("terminals: a\nnonterminals: A\nstart: A\n2 * A -> a\n")?;
    println!("one parse vs two: {}", equivalence(&once, &twice, 2)?.level);
    Ok(())
}
