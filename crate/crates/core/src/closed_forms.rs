//! Special-case engines for `r = 1`.
//!
//! - Navarrete's sum and its second-order recurrence for `a_{1,s}`.
//! - Riordan's fourth-order recurrence and Robbins' double sum for `b_{1,1}`.
//! - A polynomial-time run-profile summation for `a_{1,s}` and `b_{1,s}`.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::math::{binomial, factorial, Factorials};
use crate::oracle::Oracle;
use crate::sequence::{Mode, SequenceSpec};
use crate::tilings::weighted_tile_counts;

/// Largest `n` at which recurrence seeds are re-derived by enumeration.
const SEED_CHECK_LIMIT: usize = 8;

/// `a_{1,s}(n) = Σ_{j=0}^{n-s} (-1)^j C(n-s, j) (n-j)!` for `n >= s`, and
/// `n!` below that since no two values of `{1..n}` then differ by `s`.
pub fn navarrete_sum(s: usize, n: usize) -> BigInt {
    if n < s {
        return BigInt::from(factorial(n));
    }
    let facts = Factorials::up_to(n);
    let k = n - s;
    (0..=k).fold(BigInt::zero(), |acc, j| {
        let t = BigInt::from(binomial(k as i64, j as i64) * facts.at(n - j));
        if j % 2 == 1 {
            acc - t
        } else {
            acc + t
        }
    })
}

/// `a_{1,s}(n)` for `n = 1..=n_max` from `a(n) = (n-1) a(n-1) + (n-s-1) a(n-2)`.
///
/// The recurrence only holds from `n = s + 1` on (`n = 2` when `s = 1`);
/// the seeds `a(0..=s) = n!` are checked against the oracle up to
/// `n = 8` before use.
pub fn navarrete_recurrence(s: usize, n_max: usize) -> Result<Vec<BigInt>> {
    if s == 0 {
        return Err(Error::InvalidArgument("s must be positive".into()));
    }
    let spec = SequenceSpec::signed(1, s)?;
    let mut a: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    for n in 0..=s.min(n_max) {
        let seed = BigInt::from(factorial(n));
        if n <= SEED_CHECK_LIMIT {
            check_seed("navarrete", &spec, n, &seed)?;
        }
        a.push(seed);
    }
    for n in (s + 1)..=n_max {
        let next =
            BigInt::from(n - 1) * &a[n - 1] + BigInt::from(n as i64 - s as i64 - 1) * &a[n - 2];
        a.push(next);
    }
    a.remove(0);
    Ok(a)
}

fn check_seed(engine: &'static str, spec: &SequenceSpec, n: usize, seed: &BigInt) -> Result<()> {
    let expected = Oracle::new().brute_count(spec, n)?;
    if &expected != seed {
        return Err(Error::OracleMismatch {
            engine,
            n,
            got: seed.to_string(),
            expected: expected.to_string(),
        });
    }
    Ok(())
}

fn riordan_seeds() -> &'static [BigInt; 4] {
    static SEEDS: OnceLock<[BigInt; 4]> = OnceLock::new();
    SEEDS.get_or_init(|| {
        let spec = SequenceSpec::absolute(1, 1).expect("valid gaps");
        let oracle = Oracle::new();
        [1, 2, 3, 4].map(|n| {
            oracle
                .brute_count(&spec, n)
                .expect("n <= 4 is within any cap")
        })
    })
}

/// `b_{1,1}(n)` for `n = 1..=n_max` from
/// `b(n) = (n+1) b(n-1) - (n-2) b(n-2) - (n-5) b(n-3) + (n-3) b(n-4)`,
/// seeded with `b(1..=4)` enumerated by the oracle.
pub fn riordan_sequence(n_max: usize) -> Vec<BigInt> {
    let mut b: Vec<BigInt> = riordan_seeds().iter().take(n_max).cloned().collect();
    for n in 5..=n_max {
        let k = n as i64;
        let i = n - 1; // b(n) lives at index n - 1
        let next = BigInt::from(k + 1) * &b[i - 1]
            - BigInt::from(k - 2) * &b[i - 2]
            - BigInt::from(k - 5) * &b[i - 3]
            + BigInt::from(k - 3) * &b[i - 4];
        b.push(next);
    }
    b
}

/// Robbins' double sum for `b_{1,1}(n)`,
/// `Σ_{i=0}^{n-1} (-1)^i (n-i)! Σ_{c=1}^{i} C(i-1, i-c) C(n-i, c) 2^c`,
/// with the `i = 0` term taken as `n!` (no chosen events).
pub fn robbins(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let facts = Factorials::up_to(n);
    let mut total = BigInt::from(facts.at(n).clone());
    for i in 1..n {
        let inner: BigUint = (1..=i)
            .map(|c| {
                (binomial(i as i64 - 1, (i - c) as i64) * binomial((n - i) as i64, c as i64)) << c
            })
            .sum();
        let t = BigInt::from(inner * facts.at(n - i));
        if i % 2 == 1 {
            total -= t;
        } else {
            total += t;
        }
    }
    total
}

/// `a_{1,s}(n)` (signed) or `b_{1,s}(n)` (absolute) for `n = 1..=n_max`.
///
/// With `g(m, c)` the gap-`s` run profile of `{1..n}`:
/// signed is `Σ (-1)^{n-m} g(m,c) m!`, absolute is `Σ (-1)^{n-m} 2^c g(m,c) m!`.
/// For `r = 1` the chosen events occupy consecutive positions, so the `m`
/// value tiles are laid out as blocks in any of `m!` orders.
pub fn fast_r1(s: usize, mode: Mode, n_max: usize) -> Vec<BigInt> {
    let w = match mode {
        Mode::Signed => 1,
        Mode::Absolute => 2,
    };
    let facts = Factorials::up_to(n_max);
    (1..=n_max)
        .map(|n| {
            weighted_tile_counts(s, n, w).into_iter().enumerate().fold(
                BigInt::zero(),
                |acc, (m, g)| {
                    let t = BigInt::from(g * facts.at(m));
                    if (n - m) % 2 == 1 {
                        acc - t
                    } else {
                        acc + t
                    }
                },
            )
        })
        .collect()
}
