use gapperms::closed_forms::fast_r1;
use gapperms::engine::{compute, crosscheck};
use gapperms::inclusion_exclusion::PartitionSum;
use gapperms::matsuo::{fast22_sequence, rin};
use gapperms::{EngineId, Error, ExceptionSpec, Mode, Oracle, SequenceSpec};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn every_applicable_engine_matches_enumeration() {
    let oracle = Oracle::new();
    for r in 1..=3 {
        for s in 1..=3 {
            for mode in [Mode::Signed, Mode::Absolute] {
                let spec = SequenceSpec::new(r, s, mode).unwrap();
                let want = compute(EngineId::Oracle, &spec, 8, &oracle).unwrap();
                for e in EngineId::ALL {
                    if e.check_applicable(&spec).is_ok() {
                        assert_eq!(
                            compute(e, &spec, 8, &oracle).unwrap(),
                            want,
                            "{spec} via {e}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn r1_engines_agree_far_out() {
    let oracle = Oracle::new();
    let b11 = SequenceSpec::absolute(1, 1).unwrap();
    let report = crosscheck(
        &b11,
        60,
        &[EngineId::Riordan, EngineId::Robbins, EngineId::R1fast],
        &oracle,
    )
    .unwrap();
    assert!(report.agrees(), "{:?}", report.mismatch);
    for s in 1..=4 {
        let a1s = SequenceSpec::signed(1, s).unwrap();
        let report = crosscheck(
            &a1s,
            40,
            &[EngineId::Navarrete, EngineId::R1fast, EngineId::Ie],
            &oracle,
        )
        .unwrap();
        assert!(report.agrees(), "s={s}: {:?}", report.mismatch);
    }
}

#[test]
fn r1_fast_path_reaches_two_hundred() {
    let b = fast_r1(2, Mode::Absolute, 200);
    assert_eq!(b.len(), 200);
    assert!(b[199] > BigInt::from(0));
}

#[test]
fn rin_matches_enumeration_for_singletons() {
    let oracle = Oracle::new();
    for mode in [Mode::Signed, Mode::Absolute] {
        for n in 2..=7 {
            for a in 1..n {
                for b in 1..=n {
                    let ex = ExceptionSpec::new(n, [a], [b], mode).unwrap();
                    assert_eq!(
                        rin(n, a, b, mode).unwrap(),
                        oracle.count_with_exceptions(&ex).unwrap(),
                        "{mode} n={n} a={a} b={b}"
                    );
                }
            }
        }
    }
}

#[test]
fn exceptions_only_add_permutations() {
    let oracle = Oracle::new();
    for mode in [Mode::Signed, Mode::Absolute] {
        let spec = SequenceSpec::new(1, 1, mode).unwrap();
        for n in 2..=7 {
            let plain = oracle.brute_count(&spec, n).unwrap();
            for a in 1..n {
                for b in 1..=n {
                    assert!(rin(n, a, b, mode).unwrap() >= plain);
                }
            }
        }
    }
}

#[test]
fn rin_rejects_bad_arguments() {
    assert!(rin(1, 1, 1, Mode::Signed).is_err());
    assert!(rin(4, 4, 1, Mode::Signed).is_err());
    assert!(rin(4, 1, 5, Mode::Absolute).is_err());
}

#[test]
fn relabeling_engine_matches_partition_sum() {
    for mode in [Mode::Signed, Mode::Absolute] {
        let spec = SequenceSpec::new(2, 2, mode).unwrap();
        let ie = PartitionSum::new().sequence(&spec, 24);
        assert_eq!(fast22_sequence(mode, 24).unwrap(), ie, "{mode}");
    }
}

#[test]
fn crosscheck_refuses_inapplicable_engines() {
    let spec = SequenceSpec::signed(3, 2).unwrap();
    let err = crosscheck(&spec, 5, &[EngineId::Ie, EngineId::Matsuo], &Oracle::new()).unwrap_err();
    assert!(matches!(err, Error::EngineNotApplicable { .. }));
}

#[test]
fn oracle_engine_respects_cap() {
    let spec = SequenceSpec::signed(2, 3).unwrap();
    let err = compute(EngineId::Oracle, &spec, 9, &Oracle::with_cap(8)).unwrap_err();
    assert!(matches!(err, Error::OracleCap { .. }));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn partition_sum_is_symmetric_in_the_gaps(r in 1usize..6, s in 1usize..6, n in 0usize..16, abs in any::<bool>()) {
        let mode = if abs { Mode::Absolute } else { Mode::Signed };
        let spec = SequenceSpec::new(r, s, mode).unwrap();
        let ie = PartitionSum::new();
        prop_assert_eq!(ie.count(&spec, n), ie.count(&spec.transposed(), n));
    }

    #[test]
    fn large_gaps_leave_all_permutations(r in 1usize..8, s in 1usize..8, n in 0usize..10) {
        // No constraint can bite when n <= r or n <= s.
        prop_assume!(n <= r.max(s));
        let spec = SequenceSpec::signed(r, s).unwrap();
        prop_assert_eq!(
            PartitionSum::new().count(&spec, n),
            BigInt::from(gapperms::math::factorial(n))
        );
    }
}
