//! Exact rational linear algebra: rank and affine solving, enough for
//! weight systems and evaluation ranks.

use crate::ring::Coeff;
use num_traits::Zero;

/// Row-reduce in place; returns the pivot column of each pivot row.
fn row_reduce(m: &mut Vec<Vec<Coeff>>) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone().recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(mut m: Vec<Vec<Coeff>>) -> usize {
    row_reduce(&mut m).len()
}

/// Solutions of `A x = b`: a particular solution with the free variables
/// assigned from `free_values` (cycled), or `None` if inconsistent.
pub fn solve_with_free(
    a: &[Vec<Coeff>],
    b: &[Coeff],
    free_values: &[Coeff],
) -> Option<Vec<Coeff>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<Coeff>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    // inconsistency: pivot in the augmented column
    if pivots.iter().any(|&c| c == cols) {
        return None;
    }
    let mut x = vec![Coeff::zero(); cols];
    let is_pivot = |c: usize| pivots.contains(&c);
    let mut k = 0;
    for c in 0..cols {
        if !is_pivot(c) {
            x[c] = free_values[k % free_values.len()].clone();
            k += 1;
        }
    }
    for (r, &c) in pivots.iter().enumerate() {
        let mut v = aug[r][cols].clone();
        for j in (c + 1)..cols {
            if !aug[r][j].is_zero() {
                let sub = &aug[r][j] * &x[j];
                v = v - sub;
            }
        }
        x[c] = v;
    }
    Some(x)
}

/// Number of free columns of `A x = b` (0 when the solution is unique).
pub fn free_count(a: &[Vec<Coeff>]) -> usize {
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    cols - rank(a.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Coeff {
        Coeff::from(BigInt::from(n))
    }

    #[test]
    fn rank_and_solve() {
        let a = vec![vec![q(3), q(0)], vec![q(0), q(4)], vec![q(3), q(4)]];
        assert_eq!(rank(a.clone()), 2);
        let x = solve_with_free(&a[..2], &[q(1), q(1)], &[q(1)]).unwrap();
        assert_eq!(x[0], Coeff::new(BigInt::from(1), BigInt::from(3)));
        assert_eq!(x[1], Coeff::new(BigInt::from(1), BigInt::from(4)));
        // inconsistent
        assert!(solve_with_free(&a, &[q(1), q(1), q(3)], &[q(1)]).is_none());
    }
}
