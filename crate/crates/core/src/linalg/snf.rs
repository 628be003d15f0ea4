//! Smith normal form diagonal (invariant factors) over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Returns the nonzero diagonal entries of the Smith normal form of `m`,
/// positive and ordered so that each divides the next. The length of the
/// result is the rank of `m`.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();

    for t in 0..rows.min(cols) {
        let Some((pr, pc)) = min_abs_entry(&a, t) else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            // Clear column t below the pivot.
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                sub_row(&mut a, i, t, &q);
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            // Clear row t right of the pivot.
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in 0..rows {
                    let v = &a[i][t] * &q;
                    a[i][j] -= v;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // A smaller remainder appeared in row or column t; pivot on it.
                let (pr, pc) = min_abs_in_cross(&a, t);
                a.swap(t, pr);
                for row in a.iter_mut() {
                    row.swap(t, pc);
                }
                continue;
            }
            // Divisibility: the pivot must divide the whole remaining block.
            let bad = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero())
            });
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn sub_row(a: &mut IntMatrix, target: usize, src: usize, q: &BigInt) {
    let (lo, hi) = a.split_at_mut(target.max(src));
    let (t, s) = if target > src { (&mut hi[0], &lo[src]) } else { (&mut lo[target], &hi[0]) };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        *x -= y * q;
    }
}

fn min_abs_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_abs_in_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let consider = |i: usize, j: usize, best: &mut (usize, usize)| {
        let v = &a[i][j];
        if !v.is_zero() && (a[best.0][best.1].is_zero() || v.abs() < a[best.0][best.1].abs()) {
            *best = (i, j);
        }
    };
    for i in t..a.len() {
        consider(i, t, &mut best);
    }
    for j in t..a[t].len() {
        consider(t, j, &mut best);
    }
    best
}

/// Rank over the rationals.
pub fn rank(m: &IntMatrix) -> usize {
    super::lattice::rank(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::to_big;

    fn factors(rows: &[Vec<i64>]) -> Vec<i64> {
        invariant_factors(&to_big(rows))
            .into_iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect()
    }

    #[test]
    fn diagonal_is_normalised() {
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[vec![4]]), vec![4]);
        assert_eq!(factors(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
    }

    #[test]
    fn classic_example() {
        // Z^3 / rowspace has invariant factors 2, 6, 12.
        let m = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        assert_eq!(factors(&m), vec![2, 6, 12]);
    }

    #[test]
    fn rectangular_and_negative() {
        assert_eq!(factors(&[vec![-1, 1, 0], vec![0, -1, 1]]), vec![1, 1]);
        assert_eq!(factors(&[vec![2, 2], vec![2, 2], vec![0, 0]]), vec![2]);
    }
}
