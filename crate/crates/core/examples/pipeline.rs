//! Transform pipelines from a spec string, with composed provenance.

use multilang::transforms::{parse_pipeline, run_pipeline};
use multilang::{parse_grammar_text, render_grammar_text};

fn main() -> multilang::Result<()> {
    let g = parse_grammar_text(include_str!("../grammars/left.cfg"))?;
    let steps = parse_pipeline("reduce,cnf:strict,gnf")?;
    let r = run_pipeline(&g, &steps)?;
    print!("{}", render_grammar_text(&r.grammar));
    for (old, new) in &r.provenance {
        let new: Vec<String> = new.iter().map(|(p, k)| format!("{k}*{p}")).collect();
        println!("{old} -> {}", new.join(" "));
    }
    println!("unknown step: {}", parse_pipeline("reduce,shuffle").unwrap_err());
    Ok(())
}
