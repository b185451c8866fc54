use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use multilang::semantics::{
    circularity_report, count_in_language, count_parses, derivations_by_length, enumerate, enumerate_from,
    left_recursive, oracle_count_parses, oracle_decide, stability_bound, unproductive, useless,
};
use multilang::transduction::{parse_transducer, prefix_family, reflection_family, transduce_grammar, fst_family};
use multilang::transforms::{chomsky_normal_form, parse_pipeline, run_pipeline, CnfMode};
use multilang::{
    equivalence, parse_grammar_text, render_grammar_text, Error, Grammar, Multiplicity, Multiset, SymString, Symbol,
};

#[derive(Parser)]
#[command(name = "multilang", version, about = "Grammars whose strings are counted once per parse")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a grammar in canonical text form.
    Show {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Useless, circular and left-recursive nonterminals, and ε counts.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The language restricted to strings of bounded length.
    Enumerate {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Enumerate `L(σ)` instead of the language of the starting strings.
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Number of parses of TAU, from σ or from the starting strings.
    Count {
        file: PathBuf,
        tau: String,
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Derivations of TAU from σ, by number of steps.
    Derivations {
        file: PathBuf,
        tau: String,
        #[arg(long)]
        sigma: String,
        #[arg(long, default_value_t = 8)]
        max_steps: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run a comma-separated pipeline such as `reduce,cnf:strict,gnf`.
    Transform {
        file: PathBuf,
        #[arg(long)]
        pipeline: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also print what each step did, to stderr.
        #[arg(long)]
        notes: bool,
    },
    /// Image under `reflect`, `prefix`, or a transducer file.
    Transduce {
        file: PathBuf,
        #[arg(long)]
        family: String,
        /// Mapping to apply; defaults to the family's first, or the start state.
        #[arg(long)]
        index: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare two languages up to a length bound; exit 1 unless equal.
    Equiv {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    #[command(hide = true)]
    OracleCount {
        file: PathBuf,
        tau: String,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        height: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Input(String),
    Contract(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Precondition(_) | Error::Internal(_) | Error::NameCollision(_) => Failure::Contract(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn load(path: &Path) -> Result<Grammar, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_grammar_text(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn count_json(m: &Multiplicity) -> Value {
    Value::String(m.to_string())
}

fn names<'a>(set: impl IntoIterator<Item = &'a Symbol>) -> Vec<String> {
    set.into_iter().map(|s| s.name().to_owned()).collect()
}

fn multiset_json(m: &Multiset<SymString>) -> Value {
    Value::Array(
        m.iter()
            .map(|(s, k)| json!({ "string": s.spaced(), "count": count_json(k) }))
            .collect(),
    )
}

fn grammar_json(g: &Grammar) -> Value {
    json!({
        "terminals": names(g.terminals()),
        "nonterminals": names(g.nonterminals()),
        "start": multiset_json(g.start()),
        "productions": g.productions().iter().map(|p| json!({
            "pid": p.pid.to_string(),
            "lhs": p.lhs.name(),
            "rhs": p.rhs.spaced(),
            "copies": p.copies.to_string(),
        })).collect::<Vec<_>>(),
    })
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Show { file, format } => {
            let g = load(&file)?;
            match format {
                Format::Text => print!("{}", render_grammar_text(&g)),
                Format::Json => print_json(&grammar_json(&g)),
            }
        }
        Command::Analyze { file, format } => {
            let g = load(&file)?;
            let r = circularity_report(&g);
            let (useless, unproductive, lr) = (useless(&g), unproductive(&g), left_recursive(&g));
            match format {
                Format::Text => {
                    let line = |label: &str, v: Vec<String>| println!("{label}: {}", v.join(" "));
                    line("useless", names(&useless));
                    line("unproductive", names(&unproductive));
                    line("circular", names(&r.circular));
                    let classes: Vec<String> =
                        r.cocircular_classes.iter().map(|c| format!("{{{}}}", names(c).join(" "))).collect();
                    line("cocircular", classes);
                    line("left-recursive", names(&lr));
                    println!("nullable:");
                    for (a, m) in &r.nullable_counts {
                        println!("  {m} * {a} -> _");
                    }
                }
                Format::Json => print_json(&json!({
                    "useless": names(&useless),
                    "unproductive": names(&unproductive),
                    "circular": names(&r.circular),
                    "cocircular": r.cocircular_classes.iter().map(names).collect::<Vec<_>>(),
                    "left_recursive": names(&lr),
                    "nullable": r.nullable_counts.iter()
                        .map(|(a, m)| (a.name().to_owned(), count_json(m)))
                        .collect::<serde_json::Map<_, _>>(),
                })),
            }
        }
        Command::Enumerate { file, max_len, sigma, format } => {
            let g = load(&file)?;
            let l = match sigma {
                Some(s) => enumerate_from(&g, &g.parse_string(&s)?, max_len)?,
                None => enumerate(&g, max_len)?,
            };
            match format {
                Format::Text => print!("{l}"),
                Format::Json => print_json(&multiset_json(&l)),
            }
        }
        Command::Count { file, tau, sigma, format } => {
            let g = load(&file)?;
            let tau = g.parse_string(&tau)?;
            let n = match sigma {
                Some(s) => count_parses(&g, &g.parse_string(&s)?, &tau)?,
                None => count_in_language(&g, &tau)?,
            };
            match format {
                Format::Text => println!("{n}"),
                Format::Json => print_json(&json!({ "string": tau.spaced(), "count": count_json(&n) })),
            }
        }
        Command::Derivations { file, tau, sigma, max_steps, format } => {
            let g = load(&file)?;
            if max_steps > 64 {
                return Err(Failure::Usage("--max-steps is at most 64".into()));
            }
            let by = derivations_by_length(&g, &g.parse_string(&sigma)?, &g.parse_string(&tau)?, max_steps)?;
            let total: Multiplicity = by.iter().cloned().sum();
            match format {
                Format::Text => {
                    for (n, m) in by.iter().enumerate().filter(|(_, m)| !m.is_zero()) {
                        println!("{n} steps: {m}");
                    }
                    println!("total: {total}");
                }
                Format::Json => print_json(&json!({
                    "by_steps": by.iter().map(count_json).collect::<Vec<_>>(),
                    "total": count_json(&total),
                })),
            }
        }
        Command::Transform { file, pipeline, out, notes } => {
            let steps = parse_pipeline(&pipeline).map_err(|e| Failure::Usage(e.to_string()))?;
            let g = load(&file)?;
            let r = run_pipeline(&g, &steps)?;
            if notes {
                for n in &r.notes {
                    eprintln!("{n}");
                }
            }
            emit(&render_grammar_text(&r.grammar), out.as_deref())?;
        }
        Command::Transduce { file, family, index, out } => {
            let g = load(&file)?;
            let alphabet = g.terminals().clone();
            let (fam, default) = match family.as_str() {
                "reflect" | "reflection" => (reflection_family(&alphabet), 0),
                "prefix" => (prefix_family(&alphabet), 0),
                path => {
                    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
                    let m = parse_transducer(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
                    let j = m.single_index(m.start);
                    (fst_family(&m), j)
                }
            };
            let j = match index {
                Some(name) => fam.index(&name).map_err(|e| Failure::Usage(e.to_string()))?,
                None => default,
            };
            let t = match transduce_grammar(&g, &fam, j) {
                Err(Error::Precondition(_)) => {
                    let c = chomsky_normal_form(&g, CnfMode::KeepZ)?.grammar;
                    transduce_grammar(&c, &fam, j)?
                }
                r => r?,
            };
            emit(&render_grammar_text(&t), out.as_deref())?;
        }
        Command::Equiv { file1, file2, max_len, format } => {
            let (g1, g2) = (load(&file1)?, load(&file2)?);
            let v = equivalence(&g1, &g2, max_len)?;
            match format {
                Format::Text => {
                    println!("{}", v.level);
                    if let Some((w, a, b)) = &v.first_divergence {
                        println!("first divergence: {w} ({a} vs {b})");
                    }
                }
                Format::Json => print_json(&json!({
                    "level": v.level.as_str(),
                    "first_divergence": v.first_divergence.as_ref().map(|(w, a, b)| json!({
                        "string": w.spaced(),
                        "count1": count_json(a),
                        "count2": count_json(b),
                    })),
                })),
            }
            if !v.is_equal() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::OracleCount { file, tau, sigma, height } => {
            let g = load(&file)?;
            let (sigma, tau) = (g.parse_string(&sigma)?, g.parse_string(&tau)?);
            match height {
                Some(h) => println!("{}", oracle_count_parses(&g, &sigma, &tau, h)?),
                None => {
                    eprintln!("stability bound: {}", stability_bound(&g, &tau));
                    println!("{}", oracle_decide(&g, &sigma, &tau)?);
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Contract(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(4)
        }
    }
}
