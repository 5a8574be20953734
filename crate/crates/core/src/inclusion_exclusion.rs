//! Signed sum over integer partitions of `n`:
//!
//! ```text
//! a_{r,s}(n) = Σ_α C^{(n,s)}_α C^{(n,r)}_α (-1)^{Σa_i - n} Π a_i!
//! b_{r,s}(n) = same, times 2^{a_2 + a_3 + ...}
//! ```
//!
//! A set of chosen violations tiles the positions with gap-`r` progressions
//! and the values with gap-`s` progressions of matching sizes; `Π a_i!`
//! counts the ways to pair position tiles with value tiles, and in absolute
//! mode every non-singleton pair runs up or down.

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;

use crate::math::Factorials;
use crate::sequence::{Mode, SequenceSpec};
use crate::tilings::{PartitionMonomial, TilingCache, TilingPolynomial};

/// The partition-sum engine. Holds its own tiling cache so that independent
/// instances do not share work (useful for timing).
#[derive(Debug)]
pub struct PartitionSum<'c> {
    cache: CacheRef<'c>,
}

#[derive(Debug)]
enum CacheRef<'c> {
    Owned(TilingCache),
    Shared(&'c TilingCache),
}

impl Default for PartitionSum<'static> {
    fn default() -> Self {
        PartitionSum {
            cache: CacheRef::Owned(TilingCache::new()),
        }
    }
}

impl PartitionSum<'static> {
    /// Engine with a private cache.
    pub fn new() -> Self {
        Self::default()
    }

    /// Engine backed by the process-wide tiling cache.
    pub fn global() -> Self {
        PartitionSum {
            cache: CacheRef::Shared(TilingCache::global()),
        }
    }
}

impl<'c> PartitionSum<'c> {
    pub fn with_cache(cache: &'c TilingCache) -> Self {
        PartitionSum {
            cache: CacheRef::Shared(cache),
        }
    }

    fn cache(&self) -> &TilingCache {
        match &self.cache {
            CacheRef::Owned(c) => c,
            CacheRef::Shared(c) => c,
        }
    }

    pub fn count(&self, spec: &SequenceSpec, n: usize) -> BigInt {
        let fr = self.cache().get(spec.r(), n);
        let fs = if spec.r() == spec.s() {
            Arc::clone(&fr)
        } else {
            self.cache().get(spec.s(), n)
        };
        let factorials = Factorials::up_to(n);
        partition_sum(&fr, &fs, spec.mode(), &factorials)
    }

    /// Terms for `n = 1..=n_max`.
    pub fn sequence(&self, spec: &SequenceSpec, n_max: usize) -> Vec<BigInt> {
        (1..=n_max).map(|n| self.count(spec, n)).collect()
    }
}

fn partition_sum(
    fr: &TilingPolynomial,
    fs: &TilingPolynomial,
    mode: Mode,
    factorials: &Factorials,
) -> BigInt {
    let n = fr.board_size();
    let (sparse, dense) = if fr.len() <= fs.len() {
        (fr, fs)
    } else {
        (fs, fr)
    };
    let support: Vec<(&PartitionMonomial, &BigUint)> = sparse.terms().collect();
    support
        .par_iter()
        .filter_map(|&(alpha, c1)| {
            let c2 = dense.get(alpha)?;
            Some(term(alpha, c1 * c2, n, mode, factorials))
        })
        .reduce(BigInt::zero, |a, b| a + b)
}

fn term(
    alpha: &PartitionMonomial,
    weight: BigUint,
    n: usize,
    mode: Mode,
    factorials: &Factorials,
) -> BigInt {
    let mut magnitude = weight;
    for &a in alpha.frequencies() {
        if a > 1 {
            magnitude *= factorials.at(a as usize);
        }
    }
    if mode == Mode::Absolute {
        magnitude <<= alpha.nonsingleton_parts();
    }
    let value = BigInt::from(magnitude);
    if (n - alpha.parts()) % 2 == 1 {
        -value
    } else {
        value
    }
}

/// `a_{r,s}(n)` or `b_{r,s}(n)` by the partition sum, using the global cache.
pub fn count(spec: &SequenceSpec, n: usize) -> BigInt {
    PartitionSum::global().count(spec, n)
}

/// `count(spec, n)` for `n = 1..=n_max`.
pub fn sequence(spec: &SequenceSpec, n_max: usize) -> Vec<BigInt> {
    PartitionSum::global().sequence(spec, n_max)
}
