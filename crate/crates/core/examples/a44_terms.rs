//! The first 30 terms of a_{4,4}(n) by the partition-sum engine.
//!
//!     cargo run --release --example a44_terms [N]

use std::time::Instant;

use gapperms::inclusion_exclusion::PartitionSum;
use gapperms::SequenceSpec;

fn main() -> gapperms::Result<()> {
    let n_max = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("N must be a number"))
        .unwrap_or(30);
    let spec = SequenceSpec::signed(4, 4)?;
    let engine = PartitionSum::new();
    let start = Instant::now();
    for (i, t) in engine.sequence(&spec, n_max).iter().enumerate() {
        println!("{} {}", i + 1, t);
    }
    eprintln!("{spec}: {n_max} terms in {:.2?}", start.elapsed());
    Ok(())
}
