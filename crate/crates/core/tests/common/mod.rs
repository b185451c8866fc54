#![allow(dead_code)]

use multilang::{Grammar, GrammarBuilder, Multiset, SymString};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub const NTS: [&str; 4] = ["A", "B", "C", "D"];
pub const TS: [&str; 2] = ["a", "b"];

fn random_string(rng: &mut TestRng, symbols: &[&str], max_len: usize) -> String {
    let n = rng.gen_range(0..=max_len);
    if n == 0 || symbols.is_empty() {
        return "_".into();
    }
    (0..n).map(|_| *symbols.choose(rng).unwrap()).collect::<Vec<_>>().join(" ")
}

/// Up to 4 nonterminals, 8 productions and right sides of length 3.
pub fn random_grammar(rng: &mut TestRng) -> Grammar {
    let n = rng.gen_range(1..=NTS.len());
    let nts = &NTS[..n];
    let symbols: Vec<&str> = nts.iter().chain(TS.iter()).copied().collect();
    let mut b = GrammarBuilder::new().terminals(&TS).nonterminals(nts);
    for _ in 0..rng.gen_range(1..=8) {
        let lhs = *nts.choose(rng).unwrap();
        let rhs = random_string(rng, &symbols, 3);
        b = b.rule(lhs, &rhs);
    }
    b = b.start(nts[0]);
    if rng.gen_bool(0.3) {
        let extra = random_string(rng, &symbols, 2);
        b = b.start_n(&extra, rng.gen_range(1..=2));
    }
    b.build().unwrap()
}

/// Like [`random_grammar`] but nonterminals only call later ones, so the
/// language is finite. Returns a bound on word length.
pub fn random_finite_grammar(rng: &mut TestRng) -> (Grammar, usize) {
    let n = rng.gen_range(1..=3);
    let nts = &NTS[..n];
    let mut b = GrammarBuilder::new().terminals(&TS).nonterminals(nts);
    let mut longest = vec![0usize; n];
    for i in (0..n).rev() {
        let symbols: Vec<&str> = nts[i + 1..].iter().chain(TS.iter()).copied().collect();
        for _ in 0..rng.gen_range(1..=3) {
            let rhs = random_string(rng, &symbols, 2);
            let len: usize = rhs
                .split_whitespace()
                .map(|s| NTS.iter().position(|x| *x == s).map_or(usize::from(s != "_"), |j| longest[j]))
                .sum();
            longest[i] = longest[i].max(len);
            b = b.rule_n(nts[i], &rhs, rng.gen_range(1..=2));
        }
    }
    (b.start(nts[0]).build().unwrap(), longest[0])
}

/// All terminal strings over `a`, `b` of length at most `n`.
pub fn words(n: usize) -> Vec<SymString> {
    let mut out = vec![SymString::epsilon()];
    let mut layer = vec![String::new()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|w| TS.iter().map(move |t| format!("{w}{t}")))
            .collect();
        out.extend(layer.iter().map(|w| SymString::terminals(w)));
    }
    out
}

pub fn ms(pairs: &[(&str, u32)]) -> Multiset<SymString> {
    Multiset::from_counts(pairs.iter().map(|(w, k)| (SymString::terminals(w), *k)))
}

pub const WORKED: &str = "\
terminals: a
nonterminals: A B C
start: A
A -> A A a
A -> B
A -> _
B -> C C
C -> B B
C -> _
";

pub fn worked() -> Grammar {
    multilang::parse_grammar_text(WORKED).unwrap()
}
