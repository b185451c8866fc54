//! Chomsky normal form of a circular grammar in each of the three modes.

use multilang::semantics::enumerate;
use multilang::transforms::{chomsky_normal_form, CnfMode};
use multilang::{parse_grammar_text, render_grammar_text};

fn main() -> multilang::Result<()> {
    let g = parse_grammar_text(include_str!("../grammars/worked.cfg"))?;
    let want = enumerate(&g, 3)?;
    for mode in [CnfMode::KeepZ, CnfMode::Similar, CnfMode::Strict] {
        let r = chomsky_normal_form(&g, mode)?;
        println!("== {mode:?}");
        if mode == CnfMode::KeepZ {
            for n in &r.notes {
                println!("  # {n}");
            }
        }
        print!("{}", render_grammar_text(&r.grammar.consolidated()));
        let got = enumerate(&r.grammar, 3)?;
        println!("same language: {}, similar: {}\n", got == want, got.is_similar(&want));
    }
    Ok(())
}
