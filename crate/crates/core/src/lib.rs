//! Exact counts of permutations of `{1..n}` in which entries `r` places
//! apart never differ by `s`: `a_{r,s}(n)` when the difference is signed,
//! `b_{r,s}(n)` when it is taken in absolute value.
//!
//! Several independent engines compute the same numbers:
//!
//! - [`oracle`] enumerates permutations outright (small `n` only);
//! - [`inclusion_exclusion`] sums over integer partitions of `n` using the
//!   weight enumerators of [`tilings`];
//! - [`closed_forms`] covers `r = 1` in polynomial time;
//! - [`matsuo`] covers `r = s = 2` in polynomial time.
//!
//! [`recfit`] guesses and checks linear recurrences with polynomial
//! coefficients on the resulting terms, and [`engine`] / [`cli`] tie it all
//! together. The `examples/` directory has one program per capability.

pub mod bfile;
pub mod cli;
pub mod closed_forms;
pub mod engine;
pub mod error;
pub mod inclusion_exclusion;
pub mod math;
pub mod matsuo;
pub mod oracle;
pub mod recfit;
pub mod sequence;
pub mod tilings;

pub use engine::EngineId;
pub use error::{Error, Result};
pub use oracle::{ExceptionSpec, Oracle, ValueRule};
pub use recfit::{FitOutcome, RecurrenceOperator, TermTable, Verdict};
pub use sequence::{Mode, SequenceSpec};
pub use tilings::{PartitionMonomial, RunProfile, TilingPolynomial};
