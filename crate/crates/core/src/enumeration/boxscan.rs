//! Direct scan of the coordinate box spanned by the extreme rays.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::hilbert::minimal_elements;
use super::EnumerationError;

/// The box `0 <= x_i <= sum_j V_j[i]` over the support of the rays.
pub(crate) struct SearchBox {
    support: Vec<usize>,
    upper: Vec<i128>,
    n: usize,
}

impl SearchBox {
    pub fn new(rays: &[Vec<BigInt>]) -> Result<Self, EnumerationError> {
        let n = rays[0].len();
        let support: Vec<usize> = (0..n).filter(|&i| rays.iter().any(|r| !r[i].is_zero())).collect();
        let upper = support
            .iter()
            .map(|&i| rays.iter().map(|r| &r[i]).sum::<BigInt>().to_i128().ok_or(EnumerationError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(Self { support, upper, n })
    }

    /// Number of integer points in the box.
    pub fn volume(&self) -> BigInt {
        self.upper.iter().map(|&u| BigInt::from(u + 1)).product()
    }

    /// Pointwise-minimal non-zero solutions of `A x = 0` inside the box.
    pub fn fundamentals(&self, rows: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>, EnumerationError> {
        let m = self.support.len();
        let restricted: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| self.support.iter().map(|&i| row[i].clone()).collect())
            .collect();
        let (pivots, eqs) = integer_rref(&restricted, m)?;
        let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();

        let mut found = Vec::new();
        let mut x = vec![0i128; m];
        'scan: loop {
            let mut ok = true;
            for (&p, (d, coeffs)) in pivots.iter().zip(&eqs) {
                let s: i128 = -free.iter().map(|&f| coeffs[f] * x[f]).sum::<i128>();
                if s % d != 0 || s / d < 0 || s / d > self.upper[p] {
                    ok = false;
                    break;
                }
                x[p] = s / d;
            }
            if ok && x.iter().any(|&v| v != 0) {
                let mut full = vec![BigInt::zero(); self.n];
                for (k, &i) in self.support.iter().enumerate() {
                    full[i] = BigInt::from(x[k]);
                }
                found.push(full);
            }
            for &f in &free {
                x[f] += 1;
                if x[f] <= self.upper[f] {
                    continue 'scan;
                }
                x[f] = 0;
            }
            break;
        }
        Ok(minimal_elements(found))
    }
}

/// Reduced row echelon form with each row scaled to integers:
/// `d * x_pivot + sum_f coeffs[f] * x_f = 0` with `d > 0`.
type IntegerRow = (i128, Vec<i128>);

fn integer_rref(rows: &[Vec<BigInt>], m: usize) -> Result<(Vec<usize>, Vec<IntegerRow>), EnumerationError> {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pr = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pr) {
                    *x -= y * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let eqs = (0..pivots.len())
        .map(|i| {
            let lcm = a[i].iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            let d = lcm.to_i128().ok_or(EnumerationError::Overflow)?;
            let coeffs = a[i]
                .iter()
                .enumerate()
                .map(|(c, x)| {
                    if pivots.contains(&c) {
                        Ok(0)
                    } else {
                        (x * BigRational::from_integer(lcm.clone())).to_integer().to_i128().ok_or(EnumerationError::Overflow)
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok((d, coeffs))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((pivots, eqs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::to_big;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn scan_finds_interior_fundamental() {
        let rows = to_big(&[vec![1, 1, -2]]);
        let b = SearchBox::new(&[big(&[0, 2, 1]), big(&[2, 0, 1])]).unwrap();
        assert_eq!(b.volume(), BigInt::from(27));
        let f = b.fundamentals(&rows).unwrap();
        assert_eq!(f, vec![big(&[0, 2, 1]), big(&[1, 1, 1]), big(&[2, 0, 1])]);
    }
}
