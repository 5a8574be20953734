//! Weight enumerators of tilings of the board `{1..n}` by gap-`r`
//! arithmetic progressions `{1}, {1, 1+r}, {1, 1+r, 1+2r}, ...`.
//!
//! A tile with `k` cells has weight `x_k`, a tiling has the product of its
//! tile weights, and [`TilingPolynomial`] collects the tilings of a board by
//! weight. Monomials are integer partitions of `n` in frequency notation.
//!
//! Each gap-`r` tile lives inside one residue class of the board modulo `r`
//! and is an interval there, so the polynomial for gap `r` is the product of
//! the gap-1 polynomials of the residue classes. That factorization is the
//! production path; [`tiling_polynomial_direct`] walks the board cell by
//! cell and is kept as an independent cross-check.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::math::binomial;

/// An integer partition `1^{a_1} 2^{a_2} ...` stored as its frequency vector
/// `(a_1, a_2, ...)` with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PartitionMonomial {
    freq: Vec<u32>,
}

impl PartitionMonomial {
    /// The empty partition of 0.
    pub fn one() -> Self {
        PartitionMonomial::default()
    }

    pub fn from_frequencies(freq: impl Into<Vec<u32>>) -> Self {
        let mut freq = freq.into();
        while freq.last() == Some(&0) {
            freq.pop();
        }
        PartitionMonomial { freq }
    }

    /// Builds the monomial from a list of part sizes, e.g. `[1, 1, 1, 2]` for `1^3 2^1`.
    pub fn from_parts(parts: &[usize]) -> Self {
        let mut m = PartitionMonomial::one();
        for &k in parts.iter().filter(|&&k| k > 0) {
            m.bump(k, 1);
        }
        m
    }

    /// `a_1, a_2, ...`
    pub fn frequencies(&self) -> &[u32] {
        &self.freq
    }

    /// `a_k`, zero past the trimmed end.
    pub fn frequency(&self, k: usize) -> u32 {
        if k == 0 {
            return 0;
        }
        self.freq.get(k - 1).copied().unwrap_or(0)
    }

    /// `Σ i·a_i`, the number being partitioned.
    pub fn board_size(&self) -> usize {
        self.freq
            .iter()
            .enumerate()
            .map(|(i, &a)| (i + 1) * a as usize)
            .sum()
    }

    /// Total number of parts (tiles), `Σ a_i`.
    pub fn parts(&self) -> usize {
        self.freq.iter().map(|&a| a as usize).sum()
    }

    /// Number of parts larger than one, `Σ_{i≥2} a_i`.
    pub fn nonsingleton_parts(&self) -> usize {
        self.parts() - self.frequency(1) as usize
    }

    /// Multiplies by `x_k^times`.
    fn bump(&mut self, k: usize, times: u32) {
        if self.freq.len() < k {
            self.freq.resize(k, 0);
        }
        self.freq[k - 1] += times;
    }

    pub fn times(&self, other: &PartitionMonomial) -> PartitionMonomial {
        let (long, short) = if self.freq.len() >= other.freq.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut freq = long.freq.clone();
        freq.iter_mut().zip(&short.freq).for_each(|(a, b)| *a += b);
        PartitionMonomial { freq }
    }

    /// Display order: descending `a_1`, then descending lexicographic on the rest.
    fn display_cmp(&self, other: &Self) -> Ordering {
        let len = self.freq.len().max(other.freq.len());
        for k in 1..=len {
            match other.frequency(k).cmp(&self.frequency(k)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for PartitionMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.freq.iter().enumerate().filter(|(_, &a)| a > 0) {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "x{}^{}", i + 1, a)?;
            first = false;
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

type Terms = HashMap<PartitionMonomial, BigUint>;

fn multiply_terms(lhs: &Terms, rhs: &Terms) -> Terms {
    let mut out = Terms::with_capacity(lhs.len().max(rhs.len()));
    for (ma, ca) in lhs {
        for (mb, cb) in rhs {
            *out.entry(ma.times(mb)).or_default() += ca * cb;
        }
    }
    out
}

/// `f_{r,n}`: tilings of `{1..n}` by gap-`r` progressions, grouped by weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingPolynomial {
    gap: usize,
    board_size: usize,
    terms: Terms,
}

impl TilingPolynomial {
    pub fn gap(&self) -> usize {
        self.gap
    }

    pub fn board_size(&self) -> usize {
        self.board_size
    }

    /// Number of distinct monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PartitionMonomial, &BigUint)> {
        self.terms.iter()
    }

    pub fn get(&self, m: &PartitionMonomial) -> Option<&BigUint> {
        self.terms.get(m)
    }

    /// `C^{(n,r)}_α`; zero when the monomial never occurs.
    pub fn coefficient(&self, alpha: &PartitionMonomial) -> Result<BigUint> {
        if alpha.board_size() != self.board_size {
            return Err(Error::NotPartition(format!(
                "{alpha} is a partition of {}, not of {}",
                alpha.board_size(),
                self.board_size
            )));
        }
        Ok(self.terms.get(alpha).cloned().unwrap_or_default())
    }

    /// Value at `x_i := 1`: the total number of tilings.
    pub fn total_tilings(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// Terms in display order (descending `a_1`, then lexicographic).
    pub fn sorted_terms(&self) -> Vec<(&PartitionMonomial, &BigUint)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.display_cmp(b.0));
        v
    }
}

/// One term per line, `count * x1^a1 x2^a2 ...`.
impl fmt::Display for TilingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, c) in self.sorted_terms() {
            writeln!(f, "{c} * {m}")?;
        }
        Ok(())
    }
}

/// Sizes of the residue classes of `{1..n}` modulo `r`.
pub fn residue_class_sizes(r: usize, n: usize) -> Vec<usize> {
    (0..r).map(|j| n / r + usize::from(j < n % r)).collect()
}

/// Shared per-process cache of tiling polynomials.
///
/// Results never depend on whether a value came from the cache.
#[derive(Debug, Default)]
pub struct TilingCache {
    compositions: RwLock<Vec<Arc<Terms>>>,
    polys: RwLock<HashMap<(usize, usize), Arc<TilingPolynomial>>>,
}

impl TilingCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static TilingCache {
        static CACHE: OnceLock<TilingCache> = OnceLock::new();
        CACHE.get_or_init(TilingCache::new)
    }

    /// `f_{1,m}`: compositions of `m`, built by `f_{1,m} = Σ_k x_k f_{1,m-k}`.
    fn compositions(&self, m: usize) -> Arc<Terms> {
        if let Some(t) = self.compositions.read().unwrap().get(m) {
            return Arc::clone(t);
        }
        let mut table = self.compositions.write().unwrap();
        if table.is_empty() {
            table.push(Arc::new(Terms::from([(
                PartitionMonomial::one(),
                BigUint::one(),
            )])));
        }
        while table.len() <= m {
            let len = table.len();
            let mut next = Terms::new();
            for k in 1..=len {
                for (mono, c) in table[len - k].iter() {
                    let mut key = mono.clone();
                    key.bump(k, 1);
                    *next.entry(key).or_default() += c;
                }
            }
            table.push(Arc::new(next));
        }
        Arc::clone(&table[m])
    }

    pub fn get(&self, r: usize, n: usize) -> Arc<TilingPolynomial> {
        assert!(r >= 1, "gap must be positive");
        if let Some(p) = self.polys.read().unwrap().get(&(r, n)) {
            return Arc::clone(p);
        }
        let mut terms = Terms::from([(PartitionMonomial::one(), BigUint::one())]);
        let mut sizes = residue_class_sizes(r, n);
        sizes.sort_unstable();
        for m in sizes.into_iter().filter(|&m| m > 0) {
            terms = multiply_terms(&terms, &self.compositions(m));
        }
        let poly = Arc::new(TilingPolynomial {
            gap: r,
            board_size: n,
            terms,
        });
        let mut polys = self.polys.write().unwrap();
        Arc::clone(polys.entry((r, n)).or_insert(poly))
    }
}

/// `f_{r,n}` via the residue-class factorization (cached process-wide).
pub fn tiling_polynomial(r: usize, n: usize) -> Arc<TilingPolynomial> {
    TilingCache::global().get(r, n)
}

/// `C^{(n,r)}_α`.
pub fn coefficient(r: usize, n: usize, alpha: &PartitionMonomial) -> Result<BigUint> {
    if alpha.board_size() != n {
        return Err(Error::NotPartition(format!(
            "{alpha} is a partition of {}, not of {n}",
            alpha.board_size()
        )));
    }
    tiling_polynomial(r, n).coefficient(alpha)
}

/// `f_{r,n}` by a left-to-right sweep over the board.
///
/// The state records, per residue class, the length of the tile the next
/// cell of that class may extend. Exponential in `r`; meant for
/// cross-checking small boards.
pub fn tiling_polynomial_direct(r: usize, n: usize) -> TilingPolynomial {
    assert!(r >= 1, "gap must be positive");
    let mut states: HashMap<Vec<u32>, Terms> = HashMap::new();
    states.insert(
        vec![0; r],
        Terms::from([(PartitionMonomial::one(), BigUint::one())]),
    );
    for cell in 0..n {
        let class = cell % r;
        let mut next: HashMap<Vec<u32>, Terms> = HashMap::new();
        for (state, terms) in states {
            let open = state[class];
            if open > 0 {
                let mut grown = state.clone();
                grown[class] = open + 1;
                let slot = next.entry(grown).or_default();
                for (m, c) in &terms {
                    *slot.entry(m.clone()).or_default() += c;
                }
            }
            let mut fresh = state;
            fresh[class] = 1;
            let slot = next.entry(fresh).or_default();
            for (m, c) in terms {
                let mut m = m;
                if open > 0 {
                    m.bump(open as usize, 1);
                }
                *slot.entry(m).or_default() += c;
            }
        }
        states = next;
    }
    let mut out = Terms::new();
    for (state, terms) in states {
        for (mut m, c) in terms {
            for &len in state.iter().filter(|&&l| l > 0) {
                m.bump(len as usize, 1);
            }
            *out.entry(m).or_default() += c;
        }
    }
    TilingPolynomial {
        gap: r,
        board_size: n,
        terms: out,
    }
}

/// Tilings of `{1..n}` by gap-`s` tiles counted by `(m, c)`: `m` tiles in
/// total, `c` of them with more than one cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunProfile {
    gap: usize,
    board_size: usize,
    counts: BTreeMap<(usize, usize), BigUint>,
}

impl RunProfile {
    pub fn gap(&self) -> usize {
        self.gap
    }

    pub fn board_size(&self) -> usize {
        self.board_size
    }

    pub fn counts(&self) -> &BTreeMap<(usize, usize), BigUint> {
        &self.counts
    }

    pub fn get(&self, m: usize, c: usize) -> BigUint {
        self.counts.get(&(m, c)).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Aggregates a tiling polynomial by `(Σ a_i, Σ_{i≥2} a_i)`.
    pub fn from_polynomial(poly: &TilingPolynomial) -> Self {
        let mut counts = BTreeMap::new();
        for (m, c) in poly.terms() {
            *counts
                .entry((m.parts(), m.nonsingleton_parts()))
                .or_insert_with(BigUint::zero) += c;
        }
        RunProfile {
            gap: poly.gap(),
            board_size: poly.board_size(),
            counts,
        }
    }
}

/// Compositions of an interval of length `len` by `(parts, parts > 1)`.
fn interval_profile(len: usize) -> BTreeMap<(usize, usize), BigUint> {
    let mut out = BTreeMap::new();
    if len == 0 {
        out.insert((0, 0), BigUint::one());
        return out;
    }
    out.insert((len, 0), BigUint::one());
    for m in 1..len {
        // c of the m parts absorb the len - m excess cells, each at least one
        for c in 1..=m.min(len - m) {
            let ways =
                binomial(m as i64, c as i64) * binomial((len - m - 1) as i64, (c - 1) as i64);
            out.insert((m, c), ways);
        }
    }
    out
}

pub fn run_profile(s: usize, n: usize) -> RunProfile {
    assert!(s >= 1, "gap must be positive");
    let mut counts = BTreeMap::from([((0, 0), BigUint::one())]);
    for len in residue_class_sizes(s, n).into_iter().filter(|&l| l > 0) {
        let class = interval_profile(len);
        let mut next: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
        for ((m1, c1), x) in &counts {
            for ((m2, c2), y) in &class {
                *next.entry((m1 + m2, c1 + c2)).or_default() += x * y;
            }
        }
        counts = next;
    }
    RunProfile {
        gap: s,
        board_size: n,
        counts,
    }
}

/// `Σ_c g(m, c) · w^c` for every tile count `m`, where `g` is the run profile
/// of gap `s` on `n` cells. Index `m` of the result.
pub fn weighted_tile_counts(s: usize, n: usize, w: u32) -> Vec<BigUint> {
    assert!(s >= 1, "gap must be positive");
    let mut acc = vec![BigUint::one()];
    let mut by_len: HashMap<usize, Vec<BigUint>> = HashMap::new();
    for len in residue_class_sizes(s, n).into_iter().filter(|&l| l > 0) {
        let class = by_len.entry(len).or_insert_with(|| {
            let mut h = vec![BigUint::zero(); len + 1];
            for ((m, c), ways) in interval_profile(len) {
                h[m] += ways * BigUint::from(w).pow(c as u32);
            }
            h
        });
        let mut next = vec![BigUint::zero(); acc.len() + len];
        for (i, x) in acc.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in class.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                next[i + j] += x * y;
            }
        }
        acc = next;
    }
    acc
}
