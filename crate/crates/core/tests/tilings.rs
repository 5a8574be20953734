use gapperms::tilings::{
    coefficient, residue_class_sizes, run_profile, tiling_polynomial, tiling_polynomial_direct,
};
use gapperms::{PartitionMonomial, RunProfile};
use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

#[test]
fn golden_dumps() {
    assert_eq!(
        tiling_polynomial(3, 5).to_string(),
        include_str!("golden/f_3_5.txt")
    );
    assert_eq!(
        tiling_polynomial(3, 7).to_string(),
        include_str!("golden/f_3_7.txt")
    );
}

#[test]
fn coefficients_from_the_printed_polynomials() {
    let c = |parts: &[usize]| coefficient(3, 5, &PartitionMonomial::from_parts(parts)).unwrap();
    assert_eq!(c(&[2, 1, 1, 1]), BigUint::from(2u32));
    assert_eq!(c(&[3, 2]), BigUint::from(0u32));
    assert_eq!(c(&[1, 1, 1, 1, 1]), BigUint::one());
    assert!(coefficient(3, 5, &PartitionMonomial::from_parts(&[2, 2])).is_err());
}

#[test]
fn factorization_matches_direct_transfer() {
    for r in 1..=4 {
        for n in 0..=30 {
            assert_eq!(
                *tiling_polynomial(r, n),
                tiling_polynomial_direct(r, n),
                "r={r} n={n}"
            );
        }
    }
}

#[test]
fn gap_one_counts_compositions() {
    for n in 1..=25 {
        assert_eq!(
            tiling_polynomial(1, n).total_tilings(),
            BigUint::one() << (n - 1)
        );
    }
}

#[test]
fn empty_board() {
    let f = tiling_polynomial(2, 0);
    assert_eq!(f.len(), 1);
    assert_eq!(f.to_string(), "1 * 1\n");
}

#[test]
fn run_profile_agrees_with_polynomial() {
    for s in 1..=4 {
        for n in 0..=16 {
            let direct = run_profile(s, n);
            let via_poly = RunProfile::from_polynomial(&tiling_polynomial(s, n));
            assert_eq!(direct, via_poly, "s={s} n={n}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn every_monomial_covers_the_board(r in 1usize..6, n in 0usize..24) {
        let f = tiling_polynomial(r, n);
        for (m, c) in f.terms() {
            prop_assert_eq!(m.board_size(), n);
            prop_assert!(*c > BigUint::from(0u32));
        }
    }

    #[test]
    fn total_tilings_is_product_over_classes(r in 1usize..6, n in 1usize..30) {
        let want = residue_class_sizes(r, n)
            .into_iter()
            .filter(|&m| m > 0)
            .fold(BigUint::one(), |acc, m| acc << (m - 1));
        prop_assert_eq!(tiling_polynomial(r, n).total_tilings(), want);
    }
}
