//! Counting parses and the structural analyses they depend on.

pub mod analysis;
pub mod count;
pub mod derivations;
pub mod enumerate;
pub mod oracle;

pub use analysis::{
    circular_nonterminals, circularity_report, cocircular_classes, left_recursive,
    nullable_counts, unproductive, useless, CircularityReport,
};
pub use count::{count_in_language, count_parses, SubstringCounts};
pub use derivations::{count_derivations, derivations_by_length};
pub use enumerate::{enumerate, enumerate_from};
pub use oracle::{
    oracle_count_parses, oracle_counts_by_height, oracle_decide, stability_bound, OracleTable,
};
