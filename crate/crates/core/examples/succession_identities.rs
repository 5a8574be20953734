//! Brute-force violation profiles and the small identities they satisfy:
//! b(n) = (n-1) a(n-1) for successions, and the three-sequence system
//! behind the fourth-order recurrence for rising-or-falling successions.
//!
//!     cargo run --release --example succession_identities

use gapperms::{Oracle, SequenceSpec};

fn main() -> gapperms::Result<()> {
    let oracle = Oracle::new();
    let signed = SequenceSpec::signed(1, 1)?;
    let abs = SequenceSpec::absolute(1, 1)?;

    println!("n  signed profile                     absolute profile");
    for n in 1..=8 {
        let p = oracle.violation_profile(&signed, n)?;
        let q = oracle.violation_profile(&abs, n)?;
        println!("{n}  {:<34} {:?}", format!("{p:?}"), q);
    }

    println!("\nsingle successions: b(n) vs (n-1) a(n-1)");
    for n in 2..=8 {
        let b = &oracle.violation_profile(&signed, n)?[1];
        let a = oracle.brute_count(&signed, n - 1)?;
        println!("  n={n}: {b} = {}", a * (n - 1));
    }

    println!("\nabsolute mode: a(n), b(n) (one violation), c(n) (one violation at n-1)");
    for n in 2..=8 {
        let a = oracle.brute_count(&abs, n)?;
        let b = &oracle.violation_profile(&abs, n)?[1];
        let c = oracle.single_violation_at(&abs, n, n - 1)?;
        println!("  n={n}: a={a} b={b} c={c}");
    }
    Ok(())
}
