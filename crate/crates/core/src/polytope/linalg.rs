//! Exact rank of integer matrices by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Rank over the rationals.
pub(super) fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows.len() && col < cols {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => {
                col += 1;
                continue;
            }
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for r in (rank + 1)..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..cols {
                let val = &rows[r][c] * &lead - &rows[rank][c] * &factor;
                rows[r][c] = val;
            }
            // Keep entries small.
            let mut g = BigInt::zero();
            for c in col..cols {
                g = g.gcd(&rows[r][c]);
            }
            if !g.is_zero() && !g.is_one() {
                for c in col..cols {
                    rows[r][c] = &rows[r][c] / &g;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Number of affinely independent points among `points` (each an integer
/// vector): one more than the rank of the differences to the first point.
pub(super) fn affine_rank(points: &[Vec<BigInt>]) -> usize {
    match points.first() {
        None => 0,
        Some(base) => {
            let rows: Vec<Vec<BigInt>> = points[1..]
                .iter()
                .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            1 + integer_rank(rows)
        }
    }
}
