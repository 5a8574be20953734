//! Small exact-arithmetic helpers shared by the engines.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Memoized `0!, 1!, ..., n!`.
#[derive(Debug, Clone)]
pub struct Factorials {
    table: Vec<BigUint>,
}

impl Factorials {
    pub fn up_to(n: usize) -> Self {
        let mut table = Vec::with_capacity(n + 1);
        table.push(BigUint::one());
        for k in 1..=n {
            let next = &table[k - 1] * BigUint::from(k);
            table.push(next);
        }
        Factorials { table }
    }

    /// Grows the table if needed and returns `k!`.
    pub fn get(&mut self, k: usize) -> &BigUint {
        while self.table.len() <= k {
            let m = self.table.len();
            let next = &self.table[m - 1] * BigUint::from(m);
            self.table.push(next);
        }
        &self.table[k]
    }

    /// `k!` for `k` already covered by the table.
    pub fn at(&self, k: usize) -> &BigUint {
        &self.table[k]
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from((n - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

/// Rows `0..=n` of Pascal's triangle.
pub fn pascal(n: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigUint::one(); i + 1];
        for j in 1..i {
            row[j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
        }
        rows.push(row);
    }
    rows
}

#[inline]
pub fn signed(x: BigUint, negative: bool) -> BigInt {
    let x = BigInt::from(x);
    if negative {
        -x
    } else {
        x
    }
}
