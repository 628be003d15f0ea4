//! Exact enumeration of vertex and fundamental solutions of the matching
//! equations.
//!
//! Vertex solutions are the extreme rays of the cone `{x >= 0, A x = 0}`,
//! found by the double description method over arbitrary-precision
//! integers. Fundamental solutions are the non-zero solutions that are not
//! the sum of two non-zero solutions; they are found inside the region
//! spanned by the vertex solutions and kept when pointwise minimal.

mod boxscan;
mod dd;
mod hilbert;

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::to_big;
use crate::normal::{satisfies_quad_condition, MatchingSystem, NormalVector, DISK_TYPES};
use crate::par::{self, Execution};
use crate::bitset::BitSet;

/// Default cap on the number of lattice points visited.
pub const DEFAULT_BOX_VOLUME_CAP: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("search volume {volume} exceeds the cap of {cap}")]
    VolumeCapExceeded { volume: String, cap: u64 },
    #[error("coordinate too large for a 64-bit normal vector")]
    Overflow,
}

/// How fundamental solutions are extracted from the region spanned by the
/// vertex solutions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FundamentalMethod {
    /// Triangulate each cone with its vertex solutions and visit the lattice
    /// points of each simplex's half-open parallelepiped.
    #[default]
    Parallelepiped,
    /// Visit every lattice point of the coordinate box
    /// `0 <= x <= sum_j V_j`.
    BoxScan,
}

impl fmt::Display for FundamentalMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Parallelepiped => "parallelepiped",
            Self::BoxScan => "box-scan",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Restrict to solutions satisfying the quadrilateral condition. The
    /// search then runs once per compatible choice of quadrilateral types.
    pub admissible_only: bool,
    /// Upper bound on the number of lattice points the search may visit;
    /// exceeding it is an error.
    pub box_volume_cap: u64,
    pub method: FundamentalMethod,
    pub execution: Execution,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            admissible_only: false,
            box_volume_cap: DEFAULT_BOX_VOLUME_CAP,
            method: FundamentalMethod::default(),
            execution: Execution::default(),
        }
    }
}

impl EnumerationOptions {
    pub fn admissible() -> Self {
        Self { admissible_only: true, ..Self::default() }
    }
}

/// A point of the projective solution space `sum x_i = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalPoint {
    pub numerators: Vec<u64>,
    pub common_denominator: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexSolutionSet {
    /// Primitive integer representatives of the extreme rays, in
    /// lexicographic order.
    pub vertices: Vec<NormalVector>,
    pub admissible_only: bool,
}

impl VertexSolutionSet {
    /// The vertices of the projective solution polytope.
    pub fn projective_points(&self) -> Vec<RationalPoint> {
        self.vertices
            .iter()
            .map(|v| RationalPoint { numerators: v.coords().to_vec(), common_denominator: v.disk_count() })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FundamentalSet {
    /// Fundamental solutions in lexicographic order.
    pub solutions: Vec<NormalVector>,
    /// Indices of the solutions satisfying the quadrilateral condition.
    pub admissible_subset: Vec<usize>,
    pub admissible_only: bool,
    /// Lattice points visited by the search.
    pub search_volume: u64,
}

impl FundamentalSet {
    fn new(mut solutions: Vec<NormalVector>, admissible_only: bool, search_volume: u64) -> Self {
        solutions.sort();
        solutions.dedup();
        let admissible_subset =
            (0..solutions.len()).filter(|&i| satisfies_quad_condition(&solutions[i])).collect();
        Self { solutions, admissible_subset, admissible_only, search_volume }
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn admissible(&self) -> impl Iterator<Item = &NormalVector> {
        self.admissible_subset.iter().map(|&i| &self.solutions[i])
    }
}

fn to_normal(v: &[BigInt]) -> Result<NormalVector, EnumerationError> {
    let coords = v.iter().map(|x| x.to_u64().ok_or(EnumerationError::Overflow)).collect::<Result<_, _>>()?;
    Ok(NormalVector::new(coords).expect("length is a multiple of seven"))
}

fn rays(sys: &MatchingSystem, opts: &EnumerationOptions) -> Vec<Vec<BigInt>> {
    dd::extreme_rays(&to_big(sys.rows()), sys.dimension(), opts.admissible_only, opts.execution)
}

/// Extreme rays of the solution cone, rescaled to primitive integer vectors.
/// With `admissible_only`, only those satisfying the quadrilateral condition.
pub fn vertex_solutions(
    sys: &MatchingSystem,
    opts: &EnumerationOptions,
) -> Result<VertexSolutionSet, EnumerationError> {
    let vertices = rays(sys, opts).iter().map(|r| to_normal(r)).collect::<Result<_, _>>()?;
    Ok(VertexSolutionSet { vertices, admissible_only: opts.admissible_only })
}

/// Groups of extreme rays spanning the faces to search. Without the
/// admissibility restriction this is the whole cone. With it, each group is
/// the set of rays compatible with one choice of quadrilateral type per
/// tetrahedron, keeping only maximal groups.
fn faces(rays: &[Vec<BigInt>], n: usize, admissible_only: bool) -> Vec<Vec<usize>> {
    if rays.is_empty() {
        return Vec::new();
    }
    if !admissible_only {
        return vec![(0..rays.len()).collect()];
    }
    let t = n / DISK_TYPES;
    let quad_of: Vec<Vec<Option<usize>>> = rays
        .iter()
        .map(|r| (0..t).map(|tet| (0..3).find(|q| r[DISK_TYPES * tet + 4 + q] != BigInt::ZERO)).collect())
        .collect();
    let mut out = Vec::new();
    let mut stack = vec![(0usize, (0..rays.len()).collect::<Vec<usize>>())];
    while let Some((tet, set)) = stack.pop() {
        if tet == t {
            out.push(set);
            continue;
        }
        let mut used: Vec<usize> = set.iter().filter_map(|&r| quad_of[r][tet]).collect();
        used.sort_unstable();
        used.dedup();
        if used.len() <= 1 {
            stack.push((tet + 1, set));
            continue;
        }
        for q in used.into_iter().rev() {
            let sub = set.iter().copied().filter(|&r| quad_of[r][tet].is_none_or(|u| u == q)).collect();
            stack.push((tet + 1, sub));
        }
    }
    out.sort();
    out.dedup();
    let sets: Vec<BitSet> = out
        .iter()
        .map(|s| {
            let mut b = BitSet::new(rays.len());
            s.iter().for_each(|&i| b.insert(i));
            b
        })
        .collect();
    (0..out.len())
        .filter(|&i| !(0..out.len()).any(|j| j != i && sets[j].is_superset(&sets[i])))
        .map(|i| out[i].clone())
        .collect()
}

fn check_cap(volume: &BigInt, cap: u64) -> Result<u64, EnumerationError> {
    match volume.to_u64() {
        Some(v) if v <= cap => Ok(v),
        _ => Err(EnumerationError::VolumeCapExceeded { volume: volume.to_string(), cap }),
    }
}

/// All fundamental solutions of the matching equations (only the admissible
/// ones when `admissible_only` is set).
pub fn fundamental_solutions(
    sys: &MatchingSystem,
    opts: &EnumerationOptions,
) -> Result<FundamentalSet, EnumerationError> {
    let rows = to_big(sys.rows());
    let rays = rays(sys, opts);
    let groups = faces(&rays, sys.dimension(), opts.admissible_only);
    let group_rays: Vec<Vec<Vec<BigInt>>> =
        groups.iter().map(|g| g.iter().map(|&i| rays[i].clone()).collect()).collect();

    let (per_face, volume) = match opts.method {
        FundamentalMethod::Parallelepiped => {
            let faces = par::map(opts.execution, &group_rays, |r| hilbert::Face::new(r.clone(), &rows));
            let volume = check_cap(&faces.iter().map(|f| f.volume()).sum(), opts.box_volume_cap)?;
            (par::map(opts.execution, &faces, |f| f.fundamentals(opts.execution)), volume)
        }
        FundamentalMethod::BoxScan => {
            let boxes =
                group_rays.iter().map(|r| boxscan::SearchBox::new(r)).collect::<Result<Vec<_>, _>>()?;
            let volume = check_cap(&boxes.iter().map(|b| b.volume()).sum(), opts.box_volume_cap)?;
            let per_face = par::map(opts.execution, &boxes, |b| b.fundamentals(&rows));
            (per_face.into_iter().collect::<Result<Vec<_>, _>>()?, volume)
        }
    };
    let solutions = per_face.iter().flatten().map(|v| to_normal(v)).collect::<Result<Vec<_>, _>>()?;
    Ok(FundamentalSet::new(solutions, opts.admissible_only, volume))
}

/// Fundamental solutions satisfying the quadrilateral condition.
pub fn admissible_fundamentals(
    sys: &MatchingSystem,
    opts: &EnumerationOptions,
) -> Result<FundamentalSet, EnumerationError> {
    fundamental_solutions(sys, &EnumerationOptions { admissible_only: true, ..*opts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal::matching_system;
    use crate::triangulation::samples::*;

    fn vectors(set: &[NormalVector]) -> Vec<Vec<u64>> {
        set.iter().map(|v| v.coords().to_vec()).collect()
    }

    #[test]
    fn unglued_tetrahedron_gives_unit_vectors() {
        let sys = matching_system(&load(BALL));
        let units: Vec<Vec<u64>> = (0..7).rev().map(|i| NormalVector::unit(1, i).into_coords()).collect();
        let v = vertex_solutions(&sys, &EnumerationOptions::default()).unwrap();
        assert_eq!(vectors(&v.vertices), units);
        for method in [FundamentalMethod::Parallelepiped, FundamentalMethod::BoxScan] {
            let f = fundamental_solutions(&sys, &EnumerationOptions { method, ..Default::default() }).unwrap();
            assert_eq!(vectors(&f.solutions), units);
            assert_eq!(f.admissible_subset.len(), 7);
        }
    }

    #[test]
    fn one_ray_cone() {
        // x0 = x1, all other coordinates forced to zero.
        let mut rows = vec![vec![0i64; 7]; 6];
        rows[0][0] = 1;
        rows[0][1] = -1;
        for (k, row) in rows.iter_mut().enumerate().skip(1) {
            row[k + 1] = 1;
        }
        let sys = MatchingSystem::from_rows(1, rows);
        let v = vertex_solutions(&sys, &EnumerationOptions::default()).unwrap();
        assert_eq!(vectors(&v.vertices), vec![vec![1, 1, 0, 0, 0, 0, 0]]);
        assert_eq!(v.projective_points()[0].common_denominator, 2);
    }

    /// Solid torus and L(4,1) sets as listed by Regina.
    #[test]
    fn one_tetrahedron_samples() {
        let st = matching_system(&load(SOLID_TORUS));
        let f = fundamental_solutions(&st, &EnumerationOptions::default()).unwrap();
        assert_eq!(
            vectors(&f.solutions),
            vec![
                vec![0, 0, 0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 1, 1, 0, 0],
                vec![1, 1, 0, 0, 0, 0, 1],
                vec![1, 1, 1, 1, 0, 0, 0],
            ]
        );
        assert_eq!(f.admissible_subset, vec![0, 2, 3, 4]);
        let a = admissible_fundamentals(&st, &EnumerationOptions::default()).unwrap();
        assert_eq!(a.len(), 4);

        let lens = matching_system(&load(CLOSED));
        let a = admissible_fundamentals(&lens, &EnumerationOptions::default()).unwrap();
        assert_eq!(vectors(&a.solutions), vec![vec![0, 0, 0, 0, 0, 1, 0], vec![1, 1, 1, 1, 0, 0, 0]]);
    }

    #[test]
    fn cap_is_enforced() {
        let st = matching_system(&load(SOLID_TORUS));
        for method in [FundamentalMethod::Parallelepiped, FundamentalMethod::BoxScan] {
            let opts = EnumerationOptions { box_volume_cap: 1, method, ..Default::default() };
            assert!(matches!(
                fundamental_solutions(&st, &opts),
                Err(EnumerationError::VolumeCapExceeded { .. })
            ));
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let sys = matching_system(&load(TREFOIL));
        let seq = EnumerationOptions { execution: Execution::Sequential, ..EnumerationOptions::admissible() };
        let par = EnumerationOptions { execution: Execution::Parallel, ..EnumerationOptions::admissible() };
        assert_eq!(fundamental_solutions(&sys, &seq).unwrap(), fundamental_solutions(&sys, &par).unwrap());
    }
}
