//! Weight enumerators of tilings by gap-r progressions, their coefficients,
//! and the aggregated run profile used by the r = 1 fast path.
//!
//!     cargo run --example tiling_polynomials

use gapperms::tilings::{coefficient, run_profile, tiling_polynomial, tiling_polynomial_direct};
use gapperms::PartitionMonomial;

fn main() -> gapperms::Result<()> {
    for (r, n) in [(3, 5), (3, 7), (2, 6)] {
        let f = tiling_polynomial(r, n);
        println!(
            "f_{{{r},{n}}}: {} monomials, {} tilings",
            f.len(),
            f.total_tilings()
        );
        print!("{f}");
        assert_eq!(*f, tiling_polynomial_direct(r, n));
        println!();
    }

    let alpha = PartitionMonomial::from_parts(&[2, 1, 1, 1]);
    println!("C^(5,3) at {alpha} = {}", coefficient(3, 5, &alpha)?);

    println!("\nrun profile of gap 2 on 6 cells, (tiles, non-singletons) -> count:");
    for ((m, c), g) in run_profile(2, 6).counts() {
        println!("  ({m}, {c}) -> {g}");
    }
    Ok(())
}
