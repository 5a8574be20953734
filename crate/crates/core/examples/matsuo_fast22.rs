//! a_{2,2}(n) and b_{2,2}(n) through Matsuo's relabeling, with a timing
//! comparison against the partition-sum engine.
//!
//!     cargo run --release --example matsuo_fast22 [N]

use std::time::Instant;

use gapperms::inclusion_exclusion::PartitionSum;
use gapperms::matsuo::{fast22_sequence, matsuo_map};
use gapperms::{Mode, SequenceSpec};

fn main() -> gapperms::Result<()> {
    let n_max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("N must be a number"))
        .unwrap_or(100);

    println!("relabeling for n = 9: {:?}", matsuo_map(9)?.image());

    for mode in [Mode::Signed, Mode::Absolute] {
        let start = Instant::now();
        let terms = fast22_sequence(mode, n_max)?;
        let spec = SequenceSpec::new(2, 2, mode)?;
        println!("{spec}: {n_max} terms in {:.2?}", start.elapsed());
        for (i, t) in terms
            .iter()
            .enumerate()
            .filter(|(i, _)| *i < 12 || i + 1 == n_max)
        {
            println!("  {} {}", i + 1, t);
        }
    }

    println!("time per single term, signed:");
    println!("   n   fast22      partition-sum");
    for n in [16, 24, 32, 40] {
        let start = Instant::now();
        let fast = gapperms::matsuo::fast22(n, Mode::Signed)?;
        let t_fast = start.elapsed();
        let start = Instant::now();
        let slow = PartitionSum::new().count(&SequenceSpec::signed(2, 2)?, n);
        let t_slow = start.elapsed();
        assert_eq!(fast, slow);
        println!("  {n:>2}   {t_fast:>10.2?}  {t_slow:>10.2?}");
    }
    Ok(())
}
