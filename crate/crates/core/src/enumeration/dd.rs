//! Double description method for the cone `{x >= 0, A x = 0}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bitset::BitSet;
use crate::linalg::lattice;
use crate::normal::DISK_TYPES;
use crate::par::{self, Execution};

#[derive(Clone, Debug)]
pub(crate) struct Ray {
    pub coords: Vec<BigInt>,
    pub zeros: BitSet,
}

impl Ray {
    fn new(coords: Vec<BigInt>) -> Self {
        let mut zeros = BitSet::new(coords.len());
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                zeros.insert(i);
            }
        }
        Self { coords, zeros }
    }

    fn unit(n: usize, i: usize) -> Self {
        let mut coords = vec![BigInt::zero(); n];
        coords[i] = BigInt::one();
        Self::new(coords)
    }
}

/// At most one quadrilateral coordinate per tetrahedron is non-zero in the
/// union of the supports of `a` and `b`.
pub(crate) fn quad_compatible(a: &BitSet, b: &BitSet, n: usize) -> bool {
    (0..n / DISK_TYPES).all(|t| {
        (0..3)
            .filter(|q| {
                let i = DISK_TYPES * t + 4 + q;
                !a.contains(i) || !b.contains(i)
            })
            .count()
            <= 1
    })
}

fn dot(row: &[BigInt], v: &[BigInt]) -> BigInt {
    row.iter().zip(v).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum()
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

/// Extreme rays of `{x >= 0, A x = 0}` as primitive integer vectors, in
/// lexicographic order. With `admissible_only`, rays that break the
/// quadrilateral condition are discarded as soon as they appear, which
/// yields exactly the admissible extreme rays.
pub(crate) fn extreme_rays(
    rows: &[Vec<BigInt>],
    n: usize,
    admissible_only: bool,
    exec: Execution,
) -> Vec<Vec<BigInt>> {
    let mut rays: Vec<Ray> = (0..n).map(|i| Ray::unit(n, i)).collect();
    let mut processed: Vec<Vec<BigInt>> = Vec::new();
    let mut dim = n;

    for row in rows {
        processed.push(row.clone());
        let new_dim = n - lattice::rank(&processed);
        if new_dim == dim {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.coords)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        let min_common = dim.saturating_sub(2);

        let combined: Vec<Vec<Ray>> = par::map(exec, &pos, |&p| {
            let mut out = Vec::new();
            for &q in &neg {
                let (rp, rq) = (&rays[p], &rays[q]);
                if admissible_only && !quad_compatible(&rp.zeros, &rq.zeros, n) {
                    continue;
                }
                let common = rp.zeros.intersection(&rq.zeros);
                if common.count() < min_common {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(w, r)| w != p && w != q && r.zeros.is_superset(&common));
                if blocked {
                    continue;
                }
                let vp = &values[p];
                let vq = -&values[q];
                let coords = rp.coords.iter().zip(&rq.coords).map(|(a, b)| a * &vq + b * vp).collect();
                out.push(Ray::new(primitive(coords)));
            }
            out
        });

        let mut next: Vec<Ray> =
            (0..rays.len()).filter(|&i| values[i].is_zero()).map(|i| rays[i].clone()).collect();
        next.extend(combined.into_iter().flatten());
        rays = next;
        dim = new_dim;
    }

    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.coords).collect();
    out.sort();
    out.dedup();
    out
}
