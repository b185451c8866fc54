//! The brute-force counter: trees of bounded height, and where it stabilises.

use multilang::parse_grammar_text;
use multilang::semantics::{count_parses, oracle_counts_by_height, oracle_decide, stability_bound};

fn main() -> multilang::Result<()> {
    for file in [include_str!("../grammars/catalan.cfg"), include_str!("../grammars/worked.cfg")] {
        let g = parse_grammar_text(file)?;
        let a = g.parse_string("A")?;
        let tau = g.parse_string("a a a")?;
        let by_h = oracle_counts_by_height(&g, &a, &tau, 8)?;
        let shown: Vec<String> = by_h.iter().map(|n| n.to_string()).collect();
        println!("heights 0..8: {}", shown.join(" "));
        println!(
            "bound {}: oracle {} vs table {}",
            stability_bound(&g, &tau),
            oracle_decide(&g, &a, &tau)?,
            count_parses(&g, &a, &tau)?
        );
    }
    Ok(())
}
