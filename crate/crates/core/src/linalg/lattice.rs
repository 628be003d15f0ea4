//! Integer lattices: rank, saturated integer kernels, echelon bases and
//! residue systems of full-rank sublattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Rank over the rationals (fraction-free elimination).
pub fn rank(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Brings `rows` into integer row echelon form using unimodular row
/// operations, considering only the first `width` columns for pivots.
/// Returns the pivot columns; rows past `pivots.len()` are zero on those
/// columns.
pub fn integer_echelon(rows: &mut [Vec<BigInt>], width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if r == rows.len() {
            break;
        }
        loop {
            // Smallest nonzero entry in column c at or below r.
            let mut best: Option<usize> = None;
            for i in r..rows.len() {
                if !rows[i][c].is_zero()
                    && best.is_none_or(|b| rows[i][c].abs() < rows[b][c].abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            rows.swap(r, b);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row.iter()) {
                    *x -= y * &q;
                }
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !rows[r][c].is_zero() {
            if rows[r][c].is_negative() {
                for x in rows[r].iter_mut() {
                    *x = -&*x;
                }
            }
            pivots.push(c);
            r += 1;
        }
    }
    pivots
}

/// Basis of the lattice `{x in Z^n : A x = 0}`. The result is saturated (it
/// spans every integer solution) and returned in row echelon form.
pub fn integer_kernel(a: &IntMatrix, n: usize) -> LatticeBasis {
    let m = a.len();
    // Rows are [A^T row i | e_i].
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigInt> = a.iter().map(|eq| eq[i].clone()).collect();
            row.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let rank = integer_echelon(&mut rows, m).len();
    let kernel: Vec<Vec<BigInt>> = rows[rank..].iter().map(|r| r[m..].to_vec()).collect();
    LatticeBasis::new(kernel)
}

/// A lattice basis kept in integer row echelon form.
#[derive(Clone, Debug)]
pub struct LatticeBasis {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl LatticeBasis {
    pub fn new(mut rows: Vec<Vec<BigInt>>) -> Self {
        let width = rows.first().map_or(0, Vec::len);
        let pivots = integer_echelon(&mut rows, width);
        rows.truncate(pivots.len());
        Self { rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is not a lattice
    /// point.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut rem: Vec<BigInt> = v.to_vec();
        let mut coords = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let (q, r) = rem[p].div_rem(&row[p]);
            if !r.is_zero() {
                return None;
            }
            for (x, y) in rem.iter_mut().zip(row) {
                *x -= y * &q;
            }
            coords.push(q);
        }
        rem.iter().all(Zero::is_zero).then_some(coords)
    }
}

/// The half-open fundamental parallelepiped of a full-rank set of lattice
/// vectors, given in lattice coordinates as the columns of a square matrix.
#[derive(Clone, Debug)]
pub struct Parallelepiped {
    inverse: Vec<Vec<BigRational>>,
    diagonal: Vec<BigInt>,
}

impl Parallelepiped {
    /// `generators[j]` is the coordinate vector of generator `j`. Returns
    /// `None` if the generators are linearly dependent.
    pub fn new(generators: &[Vec<BigInt>]) -> Option<Self> {
        let d = generators.len();
        let mut rows = generators.to_vec();
        let pivots = integer_echelon(&mut rows, d);
        if pivots.len() != d {
            return None;
        }
        let diagonal = (0..d).map(|i| rows[i][i].abs()).collect();
        let inverse = rational_inverse(generators)?;
        Some(Self { inverse, diagonal })
    }

    /// Number of lattice points in the half-open parallelepiped, i.e. the
    /// absolute determinant.
    pub fn volume(&self) -> BigInt {
        self.diagonal.iter().product()
    }

    /// Calls `f` with the fractional coefficients (in `[0, 1)`) of every
    /// lattice point of the half-open parallelepiped, origin included.
    pub fn for_each_point(&self, mut f: impl FnMut(&[BigRational])) {
        let d = self.diagonal.len();
        let mut k = vec![BigInt::zero(); d];
        loop {
            // inverse is the inverse of the matrix whose columns are the
            // generators, so coefficients are inverse * k.
            let lambda: Vec<BigRational> = (0..d)
                .map(|j| {
                    let mut s = BigRational::zero();
                    for (i, ki) in k.iter().enumerate() {
                        if !ki.is_zero() {
                            s += &self.inverse[j][i] * BigRational::from_integer(ki.clone());
                        }
                    }
                    &s - s.floor()
                })
                .collect();
            f(&lambda);
            // Odometer over the residue box.
            let mut i = 0;
            loop {
                if i == d {
                    return;
                }
                k[i] += 1;
                if k[i] < self.diagonal[i] {
                    break;
                }
                k[i] = BigInt::zero();
                i += 1;
            }
        }
    }
}

/// Inverse of the square matrix whose columns are `columns`.
fn rational_inverse(columns: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let d = columns.len();
    // a[i][j] = columns[j][i]
    let mut a: Vec<Vec<BigRational>> = (0..d)
        .map(|i| {
            let mut row: Vec<BigRational> =
                (0..d).map(|j| BigRational::from_integer(columns[j][i].clone())).collect();
            row.extend((0..d).map(|j| {
                if i == j { BigRational::one() } else { BigRational::zero() }
            }));
            row
        })
        .collect();
    for c in 0..d {
        let p = (c..d).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..d {
            if i != c && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                let pivot_row = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(pivot_row.iter()) {
                    *x -= y * &factor;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[d..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::to_big;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(&to_big(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]])), 2);
        assert_eq!(rank(&to_big(&[vec![0, 0]])), 0);
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x - 2y = 0 has integer kernel spanned by (1, 1), not (2, 2).
        let k = integer_kernel(&to_big(&[vec![2, -2]]), 2);
        assert_eq!(k.rank(), 1);
        assert_eq!(k.coordinates(&big(&[1, 1])).map(|c| c.len()), Some(1));
        assert!(k.coordinates(&big(&[1, 0])).is_none());
    }

    #[test]
    fn parallelepiped_counts_determinant() {
        // Generators (2, 0) and (1, 3): determinant 6.
        let p = Parallelepiped::new(&[big(&[2, 0]), big(&[1, 3])]).unwrap();
        assert_eq!(p.volume(), BigInt::from(6));
        let mut seen = Vec::new();
        p.for_each_point(|lam| seen.push(lam.to_vec()));
        assert_eq!(seen.len(), 6);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 6);
        assert!(Parallelepiped::new(&[big(&[1, 1]), big(&[2, 2])]).is_none());
    }
}
