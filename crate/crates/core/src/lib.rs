//! Context-free multilanguages: grammars whose languages are multisets of
//! strings, where each string is counted once per parse.

pub mod equiv;
pub mod error;
pub mod forest;
pub mod format;
pub mod grammar;
pub mod multiplicity;
pub mod multiset;
pub mod semantics;
pub mod transduction;
pub mod transforms;
pub mod symbol;

pub use equiv::{compare, equivalence, EquivalenceLevel, EquivalenceVerdict};
pub use error::{Error, Result};
pub use forest::{verify_parse, ParseForest, ParseNode, ParseSummary};
pub use format::{parse_grammar_text, render_grammar_text};
pub use grammar::{Grammar, GrammarBuilder, Pid, Production};
pub use multiplicity::{Multiplicity, INF};
pub use multiset::{CombineMode, Multiset};
pub use symbol::{SymString, Symbol, SymbolKind};
