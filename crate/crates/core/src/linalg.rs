//! Exact rank over the rationals via fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Scale a rational row by the lcm of its denominators so every entry is an integer.
pub fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter()
        .map(|q| q.numer() * (&lcm / q.denom()))
        .collect()
}

/// Rank of an integer matrix given as rows. Rows may have differing lengths; missing
/// entries are zero.
pub fn bareiss_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    for r in &mut rows {
        r.resize(ncols, BigInt::zero());
    }

    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            for j in col..ncols {
                // exact: every entry stays a minor of the original matrix
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev_pivot;
            }
            // columns left of `col` are already zero in rows below the pivot
        }
        prev_pivot = pivot.clone();
        rank += 1;
    }
    rank
}

/// Rank of a rational matrix.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    bareiss_rank(rows.iter().map(|r| clear_denominators(r)).collect())
}
