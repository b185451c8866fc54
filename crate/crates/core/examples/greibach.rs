//! Removing left recursion, then Greibach normal form.

use multilang::semantics::{enumerate, left_recursive};
use multilang::transforms::{chomsky_normal_form, greibach_normal_form, remove_left_recursion, CnfMode};
use multilang::{parse_grammar_text, render_grammar_text};

fn main() -> multilang::Result<()> {
    let g = parse_grammar_text(include_str!("../grammars/left.cfg"))?;
    let cnf = chomsky_normal_form(&g, CnfMode::Strict)?.grammar;
    println!("left-recursive: {:?}", left_recursive(&cnf).iter().map(|s| s.name()).collect::<Vec<_>>());
    let nolr = remove_left_recursion(&cnf, "X")?.grammar;
    print!("{}", render_grammar_text(&nolr));
    assert_eq!(enumerate(&nolr, 5)?, enumerate(&g, 5)?);

    let cat = parse_grammar_text(include_str!("../grammars/catalan.cfg"))?;
    let gnf = greibach_normal_form(&cat)?.grammar;
    print!("\nGreibach form of A -> AA | a:\n{}", render_grammar_text(&gnf));
    print!("{}", enumerate(&gnf, 5)?);
    Ok(())
}
