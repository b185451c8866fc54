//! Building grammars in code or text, and checking a parse forest by hand.

use multilang::{
    parse_grammar_text, render_grammar_text, verify_parse, GrammarBuilder, ParseForest, ParseNode, Pid, Symbol,
};

fn main() -> multilang::Result<()> {
    let g = GrammarBuilder::new()
        .terminals(&["a", "b"])
        .nonterminals(&["A", "B"])
        .start("A B")
        .rule("A", "a")
        .rule_n("B", "b", 2)
        .build()?;
    let text = render_grammar_text(&g);
    print!("{text}");
    assert_eq!(parse_grammar_text(&text)?.production_multiset(), g.production_multiset());

    // two trees, one per root symbol
    let forest = ParseForest {
        roots: vec![
            ParseNode::internal(Symbol::n("A"), Pid(0), vec![ParseNode::leaf(Symbol::t("a"))]),
            ParseNode::internal(Symbol::n("B"), Pid(1), vec![ParseNode::leaf(Symbol::t("b"))]),
        ],
    };
    let s = verify_parse(&g, &forest)?;
    println!("\nforest parses {} as {} in {} steps", s.parsed, s.root.spaced(), s.steps);

    let bad = parse_grammar_text("terminals: a\nnonterminals: A\nA -> a c\n");
    println!("undeclared symbol: {}", bad.unwrap_err());
    Ok(())
}
