//! Fundamental solutions of a face of the solution cone.
//!
//! Every lattice point of a simplicial cone is a non-negative integer
//! combination of its generators plus a point of the half-open fundamental
//! parallelepiped. Triangulating the face with its own extreme rays and
//! collecting these parallelepiped points gives a finite candidate set that
//! contains every fundamental solution of the face; the pointwise-minimal
//! candidates are exactly the fundamental solutions.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::bitset::BitSet;
use crate::linalg::lattice::{self, LatticeBasis, Parallelepiped};
use crate::par::{self, Execution};

/// A face of the cone given by its extreme rays, with a triangulation
/// into simplicial cones.
pub(crate) struct Face {
    rays: Vec<Vec<BigInt>>,
    simplices: Vec<(Vec<usize>, Parallelepiped)>,
}

impl Face {
    pub fn new(rays: Vec<Vec<BigInt>>, rows: &[Vec<BigInt>]) -> Self {
        let support: Vec<usize> =
            (0..rays[0].len()).filter(|&i| rays.iter().any(|r| !r[i].is_zero())).collect();
        let restricted: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| support.iter().map(|&i| row[i].clone()).collect::<Vec<_>>())
            .filter(|row| row.iter().any(|x| !x.is_zero()))
            .collect();
        let basis = if restricted.is_empty() {
            LatticeBasis::new(
                (0..support.len())
                    .map(|i| (0..support.len()).map(|j| BigInt::from(u8::from(i == j))).collect())
                    .collect(),
            )
        } else {
            lattice::integer_kernel(&restricted, support.len())
        };
        let coords: Vec<Vec<BigInt>> = rays
            .iter()
            .map(|r| {
                let local: Vec<BigInt> = support.iter().map(|&i| r[i].clone()).collect();
                basis.coordinates(&local).expect("extreme ray is a lattice point")
            })
            .collect();
        let zeros: Vec<BitSet> = rays
            .iter()
            .map(|r| {
                let mut z = BitSet::new(support.len());
                for (k, &i) in support.iter().enumerate() {
                    if r[i].is_zero() {
                        z.insert(k);
                    }
                }
                z
            })
            .collect();
        let dim = basis.rank();
        let mut pulling = Pulling { zeros: &zeros, coords: &coords, memo: HashMap::new(), width: support.len() };
        let all: Vec<usize> = (0..rays.len()).collect();
        debug_assert_eq!(pulling.rank(&all), dim);
        let simplices = pulling
            .triangulate(all, dim)
            .into_iter()
            .map(|s| {
                let gens: Vec<Vec<BigInt>> = s.iter().map(|&j| coords[j].clone()).collect();
                let p = Parallelepiped::new(&gens).expect("simplex generators are independent");
                (s, p)
            })
            .collect();
        Self { rays, simplices }
    }

    /// Total number of parallelepiped points to visit.
    pub fn volume(&self) -> BigInt {
        self.simplices.iter().map(|(_, p)| p.volume()).sum()
    }

    #[cfg(test)]
    pub fn simplex_count(&self) -> usize {
        self.simplices.len()
    }

    /// Fundamental solutions of this face, unsorted.
    pub fn fundamentals(&self, exec: Execution) -> Vec<Vec<BigInt>> {
        let per_simplex = par::map(exec, &self.simplices, |(s, p)| {
            let mut out = Vec::new();
            p.for_each_point(|lambda| {
                if lambda.iter().all(Zero::is_zero) {
                    return;
                }
                let mut x = vec![BigRational::zero(); self.rays[0].len()];
                for (l, &j) in lambda.iter().zip(s) {
                    if l.is_zero() {
                        continue;
                    }
                    for (xi, ri) in x.iter_mut().zip(&self.rays[j]) {
                        if !ri.is_zero() {
                            *xi += l * BigRational::from_integer(ri.clone());
                        }
                    }
                }
                out.push(x.into_iter().map(|v| {
                    debug_assert!(v.is_integer());
                    v.to_integer()
                }).collect());
            });
            out
        });
        let mut candidates: Vec<Vec<BigInt>> = self.rays.clone();
        candidates.extend(per_simplex.into_iter().flatten());
        minimal_elements(candidates)
    }
}

/// Pointwise-minimal non-zero vectors of a set of non-negative vectors.
pub(crate) fn minimal_elements(mut points: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    points.retain(|p| p.iter().any(|x| x.is_positive()));
    let mut keyed: Vec<(BigInt, Vec<BigInt>)> =
        points.into_iter().map(|p| (p.iter().sum(), p)).collect();
    keyed.sort();
    keyed.dedup();
    let mut minimal: Vec<Vec<BigInt>> = Vec::new();
    for (_, p) in keyed {
        if !minimal.iter().any(|m| m.iter().zip(&p).all(|(a, b)| a <= b)) {
            minimal.push(p);
        }
    }
    minimal
}

/// Pulling triangulation: cone the lowest ray over the triangulated facets
/// not containing it. Faces are identified by their sets of rays.
struct Pulling<'a> {
    zeros: &'a [BitSet],
    coords: &'a [Vec<BigInt>],
    memo: HashMap<Vec<usize>, Vec<Vec<usize>>>,
    width: usize,
}

impl Pulling<'_> {
    fn rank(&self, set: &[usize]) -> usize {
        lattice::rank(&set.iter().map(|&j| self.coords[j].clone()).collect())
    }

    fn facets(&self, set: &[usize], dim: usize) -> Vec<Vec<usize>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for i in 0..self.width {
            let z: Vec<usize> = set.iter().copied().filter(|&j| self.zeros[j].contains(i)).collect();
            if z.len() + 1 < dim || z.len() == set.len() || !seen.insert(z.clone()) {
                continue;
            }
            if self.rank(&z) == dim - 1 {
                out.push(z);
            }
        }
        out
    }

    fn triangulate(&mut self, set: Vec<usize>, dim: usize) -> Vec<Vec<usize>> {
        if set.len() == dim {
            return vec![set];
        }
        if let Some(t) = self.memo.get(&set) {
            return t.clone();
        }
        let apex = set[0];
        let mut out = Vec::new();
        for facet in self.facets(&set, dim) {
            if facet.contains(&apex) {
                continue;
            }
            for mut s in self.triangulate(facet, dim - 1) {
                s.insert(0, apex);
                out.push(s);
            }
        }
        self.memo.insert(set, out.clone());
        out
    }
}
