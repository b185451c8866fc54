//! Finite-state transducers as families, and counting accepting runs.

use multilang::semantics::enumerate;
use multilang::transduction::{fst_family, parse_transducer, regular_mdot, transduce_grammar};
use multilang::{parse_grammar_text, SymString};

fn main() -> multilang::Result<()> {
    let g = parse_grammar_text(include_str!("../grammars/catalan.cfg"))?;
    let runs = parse_transducer(include_str!("../grammars/two_paths.fst"))?;
    println!("runs on aaa: {}", runs.accepting_paths(&SymString::terminals("aaa")));
    print!("L with each word weighted by its runs:\n{}", enumerate(&regular_mdot(&g, &runs)?, 4)?);

    let ab = parse_grammar_text("terminals: a b\nnonterminals: S\nstart: S\nS -> a b\nS -> b\n")?;
    let swap = parse_transducer(include_str!("../grammars/swap.fst"))?;
    let fam = fst_family(&swap);
    let t = transduce_grammar(&ab, &fam, swap.single_index(swap.start))?;
    print!("\nswapped, optional trailing c:\n{}", enumerate(&t, 4)?);
    println!("acceptor: {}", swap.is_acceptor());
    Ok(())
}
