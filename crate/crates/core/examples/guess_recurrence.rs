//! Guessing recurrences with polynomial coefficients from computed terms,
//! then using them to extend the sequence.
//!
//!     cargo run --release --example guess_recurrence

use std::time::Instant;

use gapperms::closed_forms::{navarrete_recurrence, riordan_sequence};
use gapperms::matsuo::fast22_sequence;
use gapperms::recfit::{extend, fit, required_terms, verify};
use gapperms::{FitOutcome, Mode, TermTable};

fn show(label: &str, outcome: &FitOutcome) {
    match outcome {
        FitOutcome::Found(op) => print!("{label}: found\n{op}"),
        other => println!("{label}: {other:?}"),
    }
}

fn main() -> gapperms::Result<()> {
    let a11 = TermTable::new(1, navarrete_recurrence(1, 20)?)?;
    show("a_{1,1}, order 2 degree 1", &fit(&a11, 2, 1, 5)?);

    let b11 = TermTable::new(1, riordan_sequence(40))?;
    let riordan = fit(&b11, 4, 1, 5)?;
    show("b_{1,1}, order 4 degree 1", &riordan);

    if let FitOutcome::Found(op) = &riordan {
        let seeds = TermTable::new(1, b11.values()[..4].to_vec())?;
        let longer = extend(op, &seeds, 60)?;
        println!("extended to n = 60: b(60) = {}", longer.values()[59]);
        println!(
            "check against 60 computed terms: {:?}",
            verify(op, &TermTable::new(1, riordan_sequence(60))?)?
        );
    }

    // Too little data is refused outright.
    let short = TermTable::new(1, a11.values()[..5].to_vec())?;
    println!("\nwith 5 terms: {}", fit(&short, 2, 1, 0).unwrap_err());

    // a_{2,2} has much longer recurrences; the relabeling engine supplies
    // enough terms to pin them down. Pass --full for the order 8, degree 11 one.
    let full = std::env::args().any(|a| a == "--full");
    let (order, degree) = if full { (8, 11) } else { (13, 3) };
    let n_terms = required_terms(order, degree, 5) + 10;
    let a22 = TermTable::new(1, fast22_sequence(Mode::Signed, n_terms)?)?;
    let start = Instant::now();
    let outcome = fit(&a22, order, degree, 5)?;
    println!(
        "\na_{{2,2}} from {n_terms} terms in {:.2?}:",
        start.elapsed()
    );
    show(&format!("order {order} degree {degree}"), &outcome);
    Ok(())
}
