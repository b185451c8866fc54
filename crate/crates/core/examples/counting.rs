//! Parses versus derivations, and counts for every substring at once.

use multilang::semantics::{count_derivations, count_in_language, count_parses, enumerate, SubstringCounts};
use multilang::{parse_grammar_text, SymString};

fn main() -> multilang::Result<()> {
    let pair = parse_grammar_text(include_str!("../grammars/pair.cfg"))?;
    let (ab, sigma) = (pair.parse_string("a b")?, pair.parse_string("A B")?);
    println!("parses of ab from AB: {}", count_parses(&pair, &sigma, &ab)?);
    println!("derivations of ab from AB: {}", count_derivations(&pair, &sigma, &ab, 2)?);

    let cat = parse_grammar_text(include_str!("../grammars/catalan.cfg"))?;
    print!("A -> AA | a up to length 6:\n{}", enumerate(&cat, 6)?);
    let tau = SymString::terminals("aaaaa");
    let table = SubstringCounts::new(&cat, &tau)?;
    let a = cat.parse_string("A")?;
    for j in 1..=5 {
        print!("[a^{j}] = {}  ", table.count(&a, 0, j));
    }
    println!();

    let worked = parse_grammar_text(include_str!("../grammars/worked.cfg"))?;
    println!("[aa]L in the circular example: {}", count_in_language(&worked, &SymString::terminals("aa"))?);
    Ok(())
}
