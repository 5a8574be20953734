//! The r = 1 engines side by side: Navarrete's sum and recurrence for
//! a_{1,s}, Riordan's recurrence and Robbins' double sum for b_{1,1}, and
//! the run-profile summation that also covers b_{1,s} for any s.
//!
//!     cargo run --release --example r1_engines [N]

use std::time::Instant;

use gapperms::closed_forms::{
    fast_r1, navarrete_recurrence, navarrete_sum, riordan_sequence, robbins,
};
use gapperms::Mode;

fn main() -> gapperms::Result<()> {
    let n_max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("N must be a number"))
        .unwrap_or(12);

    for s in 1..=4 {
        let rec = navarrete_recurrence(s, n_max)?;
        let fast = fast_r1(s, Mode::Signed, n_max);
        for n in 1..=n_max {
            assert_eq!(rec[n - 1], navarrete_sum(s, n));
            assert_eq!(rec[n - 1], fast[n - 1]);
        }
        println!(
            "a_{{1,{s}}}: {:?}",
            rec.iter().map(ToString::to_string).collect::<Vec<_>>()
        );
    }

    let riordan = riordan_sequence(n_max);
    for n in 1..=n_max {
        assert_eq!(riordan[n - 1], robbins(n));
    }
    for s in 1..=4 {
        let b = fast_r1(s, Mode::Absolute, n_max);
        if s == 1 {
            assert_eq!(b, riordan);
        }
        println!(
            "b_{{1,{s}}}: {:?}",
            b.iter().map(ToString::to_string).collect::<Vec<_>>()
        );
    }

    let start = Instant::now();
    let big = fast_r1(3, Mode::Absolute, 200);
    println!(
        "\nb_{{1,3}}(200) has {} digits; 200 terms in {:.2?}",
        big[199].to_string().len(),
        start.elapsed()
    );
    Ok(())
}
