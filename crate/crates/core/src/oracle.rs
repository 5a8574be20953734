//! Brute-force reference counts.
//!
//! Every permutation of `{1..n}` is generated and checked directly. Nothing
//! here is clever; the other engines are validated against these numbers.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sequence::{Mode, SequenceSpec};

pub const DEFAULT_CAP: usize = 11;

/// Which value test waives a succession in [`Oracle::count_with_exceptions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ValueRule {
    /// The link at `i` is waived when `π_i ∈ B`.
    Leading,
    /// Waived when `π_i ∈ B` or `π_{i+1} ∈ B`.
    EitherEndpoint,
    /// Waived when `min(π_i, π_{i+1}) ∈ B`, i.e. the link joins `b` and `b+1`.
    /// Coincides with `Leading` in signed mode.
    #[default]
    LowerEndpoint,
}

/// `R_{A,B}(n)`: successions (`r = s = 1`) forbidden except at positions in
/// `A` or where the value rule fires for some element of `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionSpec {
    n: usize,
    positions: BTreeSet<usize>,
    values: BTreeSet<usize>,
    mode: Mode,
    rule: ValueRule,
}

impl ExceptionSpec {
    pub fn new(
        n: usize,
        positions: impl IntoIterator<Item = usize>,
        values: impl IntoIterator<Item = usize>,
        mode: Mode,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("exception spec needs n >= 1".into()));
        }
        let positions: BTreeSet<usize> = positions.into_iter().collect();
        let values: BTreeSet<usize> = values.into_iter().collect();
        for &a in &positions {
            if a == 0 || a >= n {
                return Err(Error::OutOfRange {
                    what: "exception position",
                    value: a as i64,
                    lo: 1,
                    hi: n as i64 - 1,
                });
            }
        }
        for &b in &values {
            if b == 0 || b > n {
                return Err(Error::OutOfRange {
                    what: "exception value",
                    value: b as i64,
                    lo: 1,
                    hi: n as i64,
                });
            }
        }
        Ok(ExceptionSpec {
            n,
            positions,
            values,
            mode,
            rule: ValueRule::default(),
        })
    }

    pub fn with_rule(mut self, rule: ValueRule) -> Self {
        self.rule = rule;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn rule(&self) -> ValueRule {
        self.rule
    }

    fn waived(&self, i: usize, lo: usize, hi: usize, first: usize) -> bool {
        if self.positions.contains(&i) {
            return true;
        }
        match self.rule {
            ValueRule::Leading => self.values.contains(&first),
            ValueRule::EitherEndpoint => self.values.contains(&lo) || self.values.contains(&hi),
            ValueRule::LowerEndpoint => self.values.contains(&lo),
        }
    }
}

/// Exhaustive enumerator with a configurable size cap.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Panics if `cap` exceeds 20, where counts stop fitting in a machine word.
    pub fn with_cap(cap: usize) -> Self {
        assert!(
            cap <= 20,
            "enumeration cap {cap} is beyond what the oracle can count"
        );
        Oracle { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check_cap(&self, n: usize) -> Result<()> {
        if n > self.cap {
            Err(Error::OracleCap { n, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// Number of permutations with no violated position.
    pub fn brute_count(&self, spec: &SequenceSpec, n: usize) -> Result<BigInt> {
        Ok(self.violation_profile(spec, n)?.swap_remove(0))
    }

    /// Entry `k` counts the permutations violating the constraint at exactly
    /// `k` indices, for `k = 0..=n-r` (a single entry when `n <= r`).
    pub fn violation_profile(&self, spec: &SequenceSpec, n: usize) -> Result<Vec<BigInt>> {
        self.check_cap(n)?;
        let slots = n.saturating_sub(spec.r()) + 1;
        let counts = fold_permutations(
            n,
            || vec![0u64; slots],
            |acc, p| acc[violations(spec, p)] += 1,
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
        Ok(counts.into_iter().map(BigInt::from).collect())
    }

    /// Permutations with exactly one violation, located at the 1-based index `i`.
    pub fn single_violation_at(&self, spec: &SequenceSpec, n: usize, i: usize) -> Result<BigInt> {
        let r = spec.r();
        if n <= r || i == 0 || i > n - r {
            return Err(Error::OutOfRange {
                what: "violation index",
                value: i as i64,
                lo: 1,
                hi: n as i64 - r as i64,
            });
        }
        self.check_cap(n)?;
        let (s, mode) = (spec.s() as i64, spec.mode());
        let count = fold_permutations(
            n,
            || 0u64,
            |acc, p| {
                let mut hit = None;
                for j in 0..n - r {
                    if mode.hits(p[j + r] as i64 - p[j] as i64, s) {
                        if hit.is_some() {
                            return;
                        }
                        hit = Some(j + 1);
                    }
                }
                if hit == Some(i) {
                    *acc += 1;
                }
            },
            |a, b| a + b,
        );
        Ok(BigInt::from(count))
    }

    /// `R_{A,B}(n)` by enumeration.
    pub fn count_with_exceptions(&self, ex: &ExceptionSpec) -> Result<BigInt> {
        let n = ex.n;
        self.check_cap(n)?;
        let count = fold_permutations(
            n,
            || 0u64,
            |acc, p| {
                for j in 0..n.saturating_sub(1) {
                    let (x, y) = (p[j] as usize, p[j + 1] as usize);
                    if ex.mode.hits(y as i64 - x as i64, 1)
                        && !ex.waived(j + 1, x.min(y), x.max(y), x)
                    {
                        return;
                    }
                }
                *acc += 1;
            },
            |a, b| a + b,
        );
        Ok(BigInt::from(count))
    }
}

fn violations(spec: &SequenceSpec, p: &[u8]) -> usize {
    let (r, s, mode) = (spec.r(), spec.s() as i64, spec.mode());
    (0..p.len().saturating_sub(r))
        .filter(|&j| mode.hits(p[j + r] as i64 - p[j] as i64, s))
        .count()
}

/// Visits every permutation of `1..=n`, split across threads by first entry.
fn fold_permutations<A, I, V, M>(n: usize, init: I, visit: V, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &[u8]) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    if n == 0 {
        let mut acc = init();
        visit(&mut acc, &[]);
        return acc;
    }
    (1..=n as u8)
        .into_par_iter()
        .map(|first| {
            let mut acc = init();
            let mut perm = vec![0u8; n];
            perm[0] = first;
            let used = 1u32 << first;
            walk(&mut perm, 1, used, &mut acc, &visit);
            acc
        })
        .reduce_with(&merge)
        .expect("n >= 1 yields at least one branch")
}

fn walk<A, V: Fn(&mut A, &[u8])>(perm: &mut [u8], depth: usize, used: u32, acc: &mut A, visit: &V) {
    let n = perm.len();
    if depth == n {
        visit(acc, perm);
        return;
    }
    for v in 1..=n as u8 {
        if used & (1 << v) == 0 {
            perm[depth] = v;
            walk(perm, depth + 1, used | (1 << v), acc, visit);
        }
    }
}
