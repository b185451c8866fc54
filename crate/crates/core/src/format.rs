//! The line-oriented grammar text format.
//!
//! ```text
//! # comment
//! terminals: a b
//! nonterminals: A B
//! start: A | 2 * A B | _
//! A -> A a
//! 2 * B -> _
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grammar::{Grammar, Pid, Production};
use crate::multiplicity::Multiplicity;
use crate::multiset::Multiset;
use crate::symbol::{SymString, Symbol};

const RESERVED: [&str; 5] = ["_", "*", "->", "|", "=>"];

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Splits an optional `k *` prefix off a token list.
pub(crate) fn split_count<'a>(line: usize, tokens: &'a [&'a str]) -> Result<(BigUint, &'a [&'a str])> {
    if tokens.len() >= 2 && tokens[1] == "*" {
        let m: Multiplicity = tokens[0]
            .parse()
            .map_err(|e: crate::multiplicity::ParseMultiplicityError| err(line, e.to_string()))?;
        match m {
            Multiplicity::Finite(k) if !k.is_zero() => Ok((k, &tokens[2..])),
            _ => Err(err(line, format!("multiplicity `{}` must be a positive integer", tokens[0]))),
        }
    } else {
        Ok((BigUint::one(), tokens))
    }
}

struct Vocab {
    terminals: BTreeSet<String>,
    nonterminals: BTreeSet<String>,
}

impl Vocab {
    fn string(&self, line: usize, tokens: &[&str]) -> Result<SymString> {
        if tokens == ["_"] {
            return Ok(SymString::epsilon());
        }
        if tokens.is_empty() {
            return Err(err(line, "empty string; write `_` for ε"));
        }
        tokens
            .iter()
            .map(|t| {
                if self.terminals.contains(*t) {
                    Ok(Symbol::t(t))
                } else if self.nonterminals.contains(*t) {
                    Ok(Symbol::n(t))
                } else if *t == "_" {
                    Err(err(line, "`_` must stand alone"))
                } else {
                    Err(err(line, format!("undeclared symbol `{t}`")))
                }
            })
            .collect()
    }
}

/// Parses the grammar text format. Declarations may appear anywhere in the
/// file; each production line gets its own pid.
pub fn parse_grammar_text(text: &str) -> Result<Grammar> {
    let mut vocab = Vocab {
        terminals: BTreeSet::new(),
        nonterminals: BTreeSet::new(),
    };
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();

    for &(no, line) in &lines {
        for (key, set) in [
            ("terminals:", &mut vocab.terminals),
            ("nonterminals:", &mut vocab.nonterminals),
        ] {
            if let Some(rest) = line.strip_prefix(key) {
                for name in rest.split_whitespace() {
                    if RESERVED.contains(&name) {
                        return Err(err(no, format!("`{name}` cannot be a symbol name")));
                    }
                    set.insert(name.to_owned());
                }
            }
        }
    }
    if let Some(both) = vocab.terminals.intersection(&vocab.nonterminals).next() {
        return Err(Error::KindConflict(both.clone()));
    }

    let mut start = Multiset::new();
    let mut productions = Vec::new();
    for &(no, line) in &lines {
        if line.starts_with("terminals:") || line.starts_with("nonterminals:") {
            continue;
        }
        if let Some(rest) = line.strip_prefix("start:") {
            for entry in rest.split('|') {
                let tokens: Vec<&str> = entry.split_whitespace().collect();
                if tokens.is_empty() {
                    if rest.trim().is_empty() {
                        continue;
                    }
                    return Err(err(no, "empty starting-string entry"));
                }
                let (k, toks) = split_count(no, &tokens)?;
                start.insert(vocab.string(no, toks)?, k.into());
            }
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let (k, toks) = split_count(no, &tokens)?;
        if toks.len() < 2 || toks[1] != "->" {
            return Err(err(no, format!("expected `A -> ...`, found `{line}`")));
        }
        if !vocab.nonterminals.contains(toks[0]) {
            return Err(err(no, format!("`{}` is not a declared nonterminal", toks[0])));
        }
        let rhs = vocab.string(no, &toks[2..])?;
        productions.push(Production {
            pid: Pid(productions.len()),
            lhs: Symbol::n(toks[0]),
            rhs,
            copies: k,
        });
    }

    Grammar::new(
        vocab.terminals.iter().map(|t| Symbol::t(t)).collect(),
        vocab.nonterminals.iter().map(|n| Symbol::n(n)).collect(),
        start,
        productions,
    )
}

/// Renders a grammar in the text format; [`parse_grammar_text`] reads it
/// back to an equal grammar up to pid numbering.
pub fn render_grammar_text(g: &Grammar) -> String {
    let mut out = String::new();
    let names = |set: &BTreeSet<Symbol>| {
        set.iter()
            .map(|s| format!(" {}", s.name()))
            .collect::<String>()
    };
    let _ = writeln!(out, "terminals:{}", names(g.terminals()));
    let _ = writeln!(out, "nonterminals:{}", names(g.nonterminals()));
    let entries: Vec<String> = g
        .start()
        .iter()
        .map(|(s, m)| {
            if *m == Multiplicity::one() {
                s.spaced()
            } else {
                format!("{m} * {}", s.spaced())
            }
        })
        .collect();
    if entries.is_empty() {
        out.push_str("start:\n");
    } else {
        let _ = writeln!(out, "start: {}", entries.join(" | "));
    }
    for p in g.productions() {
        let _ = writeln!(out, "{p}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::tests::worked_example;

    const WORKED: &str = "\
# worked example
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

    #[test]
    fn parses_worked_example() {
        let g = parse_grammar_text(WORKED).unwrap();
        assert_eq!(g.productions().len(), 6);
        assert_eq!(g, worked_example());
    }

    #[test]
    fn epsilon_production() {
        let g = parse_grammar_text("nonterminals: A\nA -> _\n").unwrap();
        assert!(g.productions()[0].rhs.is_empty());
    }

    #[test]
    fn repeated_lines_get_distinct_pids() {
        let g = parse_grammar_text("terminals: a\nnonterminals: A\nA -> a\nA -> a\n").unwrap();
        assert_eq!(g.productions()[0].pid, Pid(0));
        assert_eq!(g.productions()[1].pid, Pid(1));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(
            parse_grammar_text("terminals: a\nnonterminals: a\n"),
            Err(Error::KindConflict(_))
        ));
        match parse_grammar_text("terminals: a\nnonterminals: A\n\nA -> b\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
        match parse_grammar_text("nonterminals: A\nx * A -> _\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_grammar_text("nonterminals: A\n0 * A -> _\n").is_err());
    }

    #[test]
    fn multiplicity_prefix_renders() {
        let g = parse_grammar_text("nonterminals: C\nstart: 3 * C | _\n2 * C -> _\n").unwrap();
        let text = render_grammar_text(&g);
        assert!(text.contains("2 * C -> _"), "{text}");
        assert!(text.contains("start: _ | 3 * C"), "{text}");
        assert_eq!(parse_grammar_text(&text).unwrap(), g);
    }

    #[test]
    fn empty_start_renders_bare() {
        let g = parse_grammar_text("terminals: a\n").unwrap();
        let text = render_grammar_text(&g);
        assert!(text.contains("start:\n"));
        assert_eq!(parse_grammar_text(&text).unwrap(), g);
    }

    #[test]
    fn round_trip_worked_example() {
        let g = worked_example();
        assert_eq!(parse_grammar_text(&render_grammar_text(&g)).unwrap(), g);
    }
}
