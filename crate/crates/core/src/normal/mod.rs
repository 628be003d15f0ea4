//! Normal surface coordinates.
//!
//! Each tetrahedron carries seven disk types, stored in this order:
//! `[tri_0, tri_1, tri_2, tri_3, quad_01|23, quad_02|13, quad_03|12]`.
//! `tri_v` is the normal triangle cutting off vertex `v`; `quad_ab|cd` is
//! the normal quadrilateral separating edge `ab` from edge `cd`. A normal
//! arc on a face is named by the face vertex it cuts off.

mod matching;
mod measures;
mod reconstruct;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use matching::{matching_system, MatchingSystem, RowOrigin};
pub use measures::{
    euler_characteristic, haken_sum, is_admissible, satisfies_quad_condition, weight, HakenSum,
};
pub use reconstruct::{reconstruct, BoundaryCurve, ComponentReport, SurfaceReport};

/// Number of normal coordinates per tetrahedron.
pub const DISK_TYPES: usize = 7;

/// The two vertex pairs separated by each quadrilateral type. The first pair
/// always contains vertex 0.
pub const QUAD_SIDES: [[[usize; 2]; 2]; 3] =
    [[[0, 1], [2, 3]], [[0, 2], [1, 3]], [[0, 3], [1, 2]]];

/// The quadrilateral type that has `a` and `b` on the same side.
pub fn quad_joining(a: usize, b: usize) -> usize {
    debug_assert!(a != b && a < 4 && b < 4);
    let other = if a == 0 { b } else if b == 0 { a } else { 6 - a - b };
    other - 1
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NormalError {
    #[error("normal vector has {found} coordinates, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vector violates matching equation {row}")]
    MatchingViolated { row: usize },
    #[error("tetrahedron {tet} contains more than one quadrilateral type")]
    QuadConflict { tet: usize },
}

/// A vector of non-negative disk counts, seven per tetrahedron.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NormalVector(Vec<u64>);

impl fmt::Debug for NormalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl NormalVector {
    pub fn new(coords: Vec<u64>) -> Result<Self, NormalError> {
        if !coords.len().is_multiple_of(DISK_TYPES) || coords.is_empty() {
            let expected = coords.len().div_ceil(DISK_TYPES).max(1) * DISK_TYPES;
            return Err(NormalError::LengthMismatch { expected, found: coords.len() });
        }
        Ok(Self(coords))
    }

    pub fn zero(tet_count: usize) -> Self {
        Self(vec![0; DISK_TYPES * tet_count])
    }

    /// The vector with a single disk of type `index`.
    pub fn unit(tet_count: usize, index: usize) -> Self {
        let mut v = Self::zero(tet_count);
        v.0[index] = 1;
        v
    }

    pub fn tet_count(&self) -> usize {
        self.0.len() / DISK_TYPES
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.0
    }

    pub fn triangles(&self, tet: usize, vertex: usize) -> u64 {
        self.0[DISK_TYPES * tet + vertex]
    }

    pub fn quads(&self, tet: usize, quad: usize) -> u64 {
        self.0[DISK_TYPES * tet + 4 + quad]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn disk_count(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn scaled(&self, k: u64) -> Self {
        Self(self.0.iter().map(|x| x * k).collect())
    }

    pub(crate) fn check_len(&self, tet_count: usize) -> Result<(), NormalError> {
        if self.0.len() != DISK_TYPES * tet_count {
            return Err(NormalError::LengthMismatch {
                expected: DISK_TYPES * tet_count,
                found: self.0.len(),
            });
        }
        Ok(())
    }
}

impl std::ops::Add for &NormalVector {
    type Output = NormalVector;

    fn add(self, rhs: &NormalVector) -> NormalVector {
        assert_eq!(self.0.len(), rhs.0.len(), "adding normal vectors of different lengths");
        NormalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quad_joining_matches_sides() {
        for (q, sides) in QUAD_SIDES.iter().enumerate() {
            for [a, b] in sides {
                assert_eq!(quad_joining(*a, *b), q);
                assert_eq!(quad_joining(*b, *a), q);
            }
        }
    }

    #[test]
    fn length_is_checked() {
        assert!(NormalVector::new(vec![0; 6]).is_err());
        assert!(NormalVector::new(vec![]).is_err());
        assert_eq!(NormalVector::new(vec![0; 14]).unwrap().tet_count(), 2);
    }
}
