use gapperms::math::factorial;
use gapperms::{ExceptionSpec, Mode, Oracle, SequenceSpec, ValueRule};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn profiles_partition_all_permutations() {
    let oracle = Oracle::new();
    for r in 1..=3 {
        for s in 1..=3 {
            for mode in [Mode::Signed, Mode::Absolute] {
                let spec = SequenceSpec::new(r, s, mode).unwrap();
                for n in 0..=7 {
                    let p = oracle.violation_profile(&spec, n).unwrap();
                    let total: BigInt = p.iter().sum();
                    assert_eq!(total, BigInt::from(factorial(n)), "{spec} n={n}");
                    assert_eq!(p[0], oracle.brute_count(&spec, n).unwrap());
                }
            }
        }
    }
}

#[test]
fn single_violation_positions_sum_to_profile() {
    let oracle = Oracle::new();
    let spec = SequenceSpec::absolute(1, 1).unwrap();
    for n in 2..=7 {
        let by_pos: BigInt = (1..n)
            .map(|i| oracle.single_violation_at(&spec, n, i).unwrap())
            .sum();
        assert_eq!(by_pos, oracle.violation_profile(&spec, n).unwrap()[1]);
    }
}

#[test]
fn no_exceptions_is_the_plain_count() {
    let oracle = Oracle::new();
    for mode in [Mode::Signed, Mode::Absolute] {
        let spec = SequenceSpec::new(1, 1, mode).unwrap();
        for n in 1..=7 {
            let ex = ExceptionSpec::new(n, [], [], mode).unwrap();
            assert_eq!(
                oracle.count_with_exceptions(&ex).unwrap(),
                oracle.brute_count(&spec, n).unwrap()
            );
        }
    }
}

#[test]
fn leading_and_lower_endpoint_coincide_in_signed_mode() {
    let oracle = Oracle::new();
    for n in 2..=6 {
        for b in 1..=n {
            let base = ExceptionSpec::new(n, [], [b], Mode::Signed).unwrap();
            let lead = oracle
                .count_with_exceptions(&base.clone().with_rule(ValueRule::Leading))
                .unwrap();
            let lower = oracle.count_with_exceptions(&base).unwrap();
            assert_eq!(lead, lower, "n={n} b={b}");
        }
    }
}

#[test]
fn exception_spec_rejects_out_of_range() {
    assert!(ExceptionSpec::new(4, [4], [], Mode::Signed).is_err());
    assert!(ExceptionSpec::new(4, [0], [], Mode::Signed).is_err());
    assert!(ExceptionSpec::new(4, [], [5], Mode::Signed).is_err());
    assert!(ExceptionSpec::new(0, [], [], Mode::Signed).is_err());
}

#[test]
fn cap_is_enforced() {
    let oracle = Oracle::with_cap(5);
    let spec = SequenceSpec::signed(1, 1).unwrap();
    assert!(oracle.brute_count(&spec, 5).is_ok());
    assert!(oracle.brute_count(&spec, 6).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn transposing_gaps_preserves_counts(r in 1usize..5, s in 1usize..5, n in 0usize..8, abs in any::<bool>()) {
        let mode = if abs { Mode::Absolute } else { Mode::Signed };
        let spec = SequenceSpec::new(r, s, mode).unwrap();
        let oracle = Oracle::new();
        prop_assert_eq!(
            oracle.brute_count(&spec, n).unwrap(),
            oracle.brute_count(&spec.transposed(), n).unwrap()
        );
    }

    #[test]
    fn absolute_never_exceeds_signed(r in 1usize..4, s in 1usize..4, n in 0usize..8) {
        let oracle = Oracle::new();
        let a = oracle.brute_count(&SequenceSpec::signed(r, s).unwrap(), n).unwrap();
        let b = oracle.brute_count(&SequenceSpec::absolute(r, s).unwrap(), n).unwrap();
        prop_assert!(b <= a);
    }
}
