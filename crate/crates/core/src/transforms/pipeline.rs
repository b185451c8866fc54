//! Comma-separated transform pipelines such as `reduce,cnf:strict,gnf`.

use std::fmt;

use super::*;

/// One pipeline stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Reduce,
    Binarize,
    Merge,
    Localize,
    Cnf(CnfMode),
    NoLeftRecursion(String),
    Gnf,
    Abbreviate { name: String, theta: String },
    Eliminate(Pid),
    EliminateAll(Pid),
    Expand { pid: Pid, pos: usize },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Reduce => write!(f, "reduce"),
            Step::Binarize => write!(f, "binarize"),
            Step::Merge => write!(f, "merge"),
            Step::Localize => write!(f, "localize"),
            Step::Cnf(CnfMode::KeepZ) => write!(f, "cnf:keep-z"),
            Step::Cnf(CnfMode::Similar) => write!(f, "cnf:similar"),
            Step::Cnf(CnfMode::Strict) => write!(f, "cnf:strict"),
            Step::NoLeftRecursion(x) => write!(f, "nolr:{x}"),
            Step::Gnf => write!(f, "gnf"),
            Step::Abbreviate { name, theta } => write!(f, "abbrev:{name}={theta}"),
            Step::Eliminate(p) => write!(f, "eliminate:{p}"),
            Step::EliminateAll(p) => write!(f, "eliminate-all:{p}"),
            Step::Expand { pid, pos } => write!(f, "expand:{pid}@{pos}"),
        }
    }
}

fn parse_pid(s: &str) -> Result<Pid> {
    s.trim()
        .trim_start_matches('p')
        .parse()
        .map(Pid)
        .map_err(|_| Error::Precondition(format!("bad production id `{s}`")))
}

/// Parses `name[:arg]` stages separated by commas.
pub fn parse_pipeline(spec: &str) -> Result<Vec<Step>> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|stage| {
            let (name, arg) = match stage.split_once(':') {
                Some((n, a)) => (n.trim(), Some(a.trim())),
                None => (stage, None),
            };
            let need = |what: &str| {
                arg.ok_or_else(|| Error::Precondition(format!("`{name}` needs {what}")))
            };
            Ok(match name {
                "reduce" => Step::Reduce,
                "binarize" => Step::Binarize,
                "merge" => Step::Merge,
                "localize" => Step::Localize,
                "cnf" => Step::Cnf(arg.unwrap_or("keep-z").parse()?),
                "nolr" => Step::NoLeftRecursion(need("a nonterminal")?.to_owned()),
                "gnf" => Step::Gnf,
                "abbrev" => {
                    let (n, t) = need("`X=θ`")?
                        .split_once('=')
                        .ok_or_else(|| Error::Precondition("abbrev expects `X=θ`".into()))?;
                    Step::Abbreviate {
                        name: n.trim().to_owned(),
                        theta: t.trim().to_owned(),
                    }
                }
                "eliminate" => Step::Eliminate(parse_pid(need("a production id")?)?),
                "eliminate-all" => Step::EliminateAll(parse_pid(need("a production id")?)?),
                "expand" => {
                    let a = need("`PID@POS`")?;
                    let (p, pos) = a.split_once('@').unwrap_or((a, "0"));
                    Step::Expand {
                        pid: parse_pid(p)?,
                        pos: pos
                            .trim()
                            .parse()
                            .map_err(|_| Error::Precondition(format!("bad position `{pos}`")))?,
                    }
                }
                other => return Err(Error::Precondition(format!("unknown transform `{other}`"))),
            })
        })
        .collect()
}

fn apply(g: &Grammar, step: &Step) -> Result<TransformResult> {
    match step {
        Step::Reduce => reduce(g),
        Step::Binarize => binarize(g),
        Step::Merge => merge_cocircular(g),
        Step::Localize => localize_circularity(g),
        Step::Cnf(m) => chomsky_normal_form(g, *m),
        Step::NoLeftRecursion(x) => remove_left_recursion(g, x),
        Step::Gnf => greibach_normal_form(g),
        Step::Abbreviate { name, theta } => abbreviate(g, &g.parse_string(theta)?, name),
        Step::Eliminate(p) => eliminate(g, *p),
        Step::EliminateAll(p) => eliminate_all(g, *p),
        Step::Expand { pid, pos } => expand(g, &Site::Production(*pid), *pos),
    }
}

/// Runs the stages in order, composing provenance.
pub fn run_pipeline(g: &Grammar, steps: &[Step]) -> Result<TransformResult> {
    let mut acc = Draft::new(g).finish()?;
    for step in steps {
        let next = apply(&acc.grammar, step)?;
        acc = acc.then(next);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::tests::worked_example;
    use crate::semantics::enumerate;

    #[test]
    fn parses_and_prints() {
        let steps = parse_pipeline("reduce, cnf:strict,nolr:X,gnf,abbrev:X=A a,eliminate:p3,expand:2@1").unwrap();
        assert_eq!(steps.len(), 7);
        assert_eq!(steps[1], Step::Cnf(CnfMode::Strict));
        assert_eq!(steps[5], Step::Eliminate(Pid(3)));
        assert_eq!(steps[6], Step::Expand { pid: Pid(2), pos: 1 });
        let text: Vec<String> = steps.iter().map(Step::to_string).collect();
        assert_eq!(parse_pipeline(&text.join(",")).unwrap(), steps);
        assert!(parse_pipeline("frobnicate").is_err());
        assert!(parse_pipeline("nolr").is_err());
    }

    #[test]
    fn provenance_composes() {
        let g = worked_example();
        let r = run_pipeline(&g, &parse_pipeline("reduce,cnf").unwrap()).unwrap();
        assert_eq!(enumerate(&r.grammar, 3).unwrap(), enumerate(&g, 3).unwrap());
        assert_eq!(r.provenance.len(), g.productions().len());
        let pids: BTreeSet<Pid> = r.grammar.productions().iter().map(|p| p.pid).collect();
        for news in r.provenance.values() {
            assert!(news.elements().all(|p| pids.contains(p)));
        }
    }
}
