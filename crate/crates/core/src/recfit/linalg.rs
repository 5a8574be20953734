//! Exact nullspace of an integer matrix by fraction-free Gauss-Jordan
//! elimination. Rows are divided by their content after every update so
//! entries stay small.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn content(row: &[BigInt]) -> BigInt {
    row.iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::zero(), |g, x| g.gcd(x))
}

fn make_primitive(row: &mut [BigInt]) {
    let g = content(row);
    if !g.is_zero() && !g.is_one() {
        row.iter_mut().for_each(|x| *x /= &g);
    }
}

/// Reduced row echelon form (up to per-row scaling). Returns the pivot
/// column of each nonzero row, in order; `rows` is truncated to the rank.
fn reduce(rows: &mut Vec<Vec<BigInt>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(found) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        make_primitive(&mut rows[rank]);
        let pivot_row = rows[rank].clone();
        let p = &pivot_row[col];
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * p - y * &factor;
            }
            make_primitive(row);
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// A basis of `{x : A x = 0}` made of primitive integer vectors, one per
/// free column.
pub fn nullspace(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    debug_assert!(rows.iter().all(|r| r.len() == cols));
    let pivots = reduce(&mut rows, cols);
    let lcm = pivots
        .iter()
        .zip(&rows)
        .fold(BigInt::one(), |acc, (&c, row)| acc.lcm(&row[c].abs()));
    let mut basis = Vec::new();
    let mut pivot_iter = pivots.iter().peekable();
    for free in 0..cols {
        if pivot_iter.peek() == Some(&&free) {
            pivot_iter.next();
            continue;
        }
        let mut v = vec![BigInt::zero(); cols];
        v[free] = lcm.clone();
        for (&c, row) in pivots.iter().zip(&rows) {
            // row[c] * x_c + row[free] * x_free = 0
            v[c] = -(&row[free] * &lcm) / &row[c];
        }
        make_primitive(&mut v);
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().copied().map(BigInt::from).collect())
            .collect()
    }

    fn apply(a: &[Vec<BigInt>], x: &[BigInt]) -> Vec<BigInt> {
        a.iter()
            .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum())
            .collect()
    }

    #[test]
    fn rank_deficient() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, -1]]);
        let ns = nullspace(a.clone(), 3);
        assert_eq!(ns.len(), 1);
        assert!(apply(&a, &ns[0]).iter().all(Zero::is_zero));
        assert_eq!(ns[0], m(&[&[1, -2, 1]])[0]);
    }

    #[test]
    fn full_rank_has_trivial_nullspace() {
        let a = m(&[&[2, 1], &[1, 3], &[5, 5]]);
        assert!(nullspace(a, 2).is_empty());
    }

    #[test]
    fn zero_matrix() {
        let a = m(&[&[0, 0], &[0, 0]]);
        assert_eq!(nullspace(a, 2).len(), 2);
        assert_eq!(nullspace(Vec::new(), 3).len(), 3);
    }

    #[test]
    fn rational_pivots_are_cleared() {
        let a = m(&[&[3, 0, 2], &[0, 5, 1]]);
        let ns = nullspace(a.clone(), 3);
        assert_eq!(ns, m(&[&[-10, -3, 15]]));
        assert!(apply(&a, &ns[0]).iter().all(Zero::is_zero));
    }
}
