//! Abbreviation, expansion and elimination, with provenance of productions.

use multilang::semantics::enumerate;
use multilang::transforms::{abbreviate, eliminate, expand, Site};
use multilang::{parse_grammar_text, render_grammar_text, Pid};

fn main() -> multilang::Result<()> {
    let g = parse_grammar_text(
        "terminals: a b\nnonterminals: S E\nstart: S\nS -> a S b\nS -> E\nE -> _\nE -> a b b\n",
    )?;
    let before = enumerate(&g, 5)?;

    let abbr = abbreviate(&g, &g.parse_string("b b")?, "W")?;
    print!("abbreviate W -> b b:\n{}", render_grammar_text(&abbr.grammar));

    let exp = expand(&g, &Site::Production(Pid(1)), 0)?;
    print!("\nexpand E in S -> E:\n{}", render_grammar_text(&exp.grammar));

    let elim = eliminate(&g, Pid(2))?;
    print!("\neliminate E -> _:\n{}", render_grammar_text(&elim.grammar));
    for (old, new) in &elim.provenance {
        println!("  {old} became {:?}", new.elements().map(|p| p.to_string()).collect::<Vec<_>>());
    }

    for t in [&abbr, &exp, &elim] {
        assert_eq!(enumerate(&t.grammar, 5)?, before);
    }
    println!("\nall three keep the language up to length 5");
    Ok(())
}
