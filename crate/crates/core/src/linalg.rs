//! Exact linear algebra over the rationals: rank by fraction-free (Bareiss)
//! elimination and a Gauss-Jordan solver.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::lincomb::Rational;

/// Rank of a rational matrix given by rows. Each row is scaled to
/// integers first; elimination then stays in `Z`.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    bareiss_rank(&mut m)
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
}

/// Destroys `m`. Every division in the update is exact.
pub fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                debug_assert!((&v % &prev).is_zero());
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// One solution of `Σ_j x_j · columns[j] = rhs`, or `None` when the
/// system is inconsistent. Free variables are set to zero.
pub fn solve(columns: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = rhs.len();
    let cols = columns.len();
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for v in m[rank].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if m[rank..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::{rat, ratio};

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&q(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&q(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank(&q(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&q(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]])), 2);
        assert_eq!(
            rank(&[vec![ratio(1, 2), ratio(1, 3)], vec![rat(3), rat(2)]]),
            1
        );
        assert_eq!(rank(&[]), 0);
    }

    // Hilbert matrices are nonsingular; a rank drop would expose a broken
    // exact division.
    #[test]
    fn hilbert_full_rank() {
        for n in 1..=8i64 {
            let h: Vec<Vec<Rational>> = (0..n)
                .map(|i| (0..n).map(|j| ratio(1, i + j + 1)).collect())
                .collect();
            assert_eq!(rank(&h), n as usize);
        }
    }

    #[test]
    fn rank_of_product_is_bounded() {
        // 4x4 built as (4x2)(2x4) has rank 2
        let a = [[1, 2], [3, 5], [7, 11], [13, 17]];
        let b = [[1, 0, 2, 3], [0, 1, 5, 7]];
        let prod: Vec<Vec<Rational>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| rat(a[i][0] * b[0][j] + a[i][1] * b[1][j]))
                    .collect()
            })
            .collect();
        assert_eq!(rank(&prod), 2);
    }

    #[test]
    fn solves_and_detects_inconsistency() {
        let cols = q(&[&[1, 0, 1], &[1, 1, 2]]);
        let x = solve(&cols, &[rat(3), rat(2), rat(5)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(2)]);
        assert!(solve(&cols, &[rat(1), rat(1), rat(0)]).is_none());
        let dependent = q(&[&[1, 2], &[2, 4]]);
        let x = solve(&dependent, &[rat(3), rat(6)]).unwrap();
        assert_eq!(x, vec![rat(3), rat(0)]);
    }
}
