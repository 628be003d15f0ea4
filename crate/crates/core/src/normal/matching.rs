use serde::Serialize;

use super::{quad_joining, NormalVector, DISK_TYPES};
use crate::triangulation::{Triangulation, FACE_VERTICES};

/// Where a matching equation comes from: the arc type cutting off `vertex`
/// on face `face` of `tet`, matched with its image on the glued face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RowOrigin {
    pub tet: usize,
    pub face: usize,
    pub other_tet: usize,
    pub other_face: usize,
    pub vertex: usize,
}

/// The matching equations `A x = 0`, three per interior face
/// identification. Each row reads `x_i1 + x_i2 - x_i3 - x_i4`, where the
/// first two are the triangle and quadrilateral of one tetrahedron carrying
/// an arc type and the last two those of the glued tetrahedron. When both
/// sides lie in the same tetrahedron, equal coordinates cancel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingSystem {
    tet_count: usize,
    rows: Vec<Vec<i64>>,
    origins: Vec<RowOrigin>,
}

impl MatchingSystem {
    /// Builds a system directly from rows; used for tests and for cones not
    /// coming from a triangulation.
    pub fn from_rows(tet_count: usize, rows: Vec<Vec<i64>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == DISK_TYPES * tet_count));
        Self { tet_count, rows, origins: Vec::new() }
    }

    pub fn tet_count(&self) -> usize {
        self.tet_count
    }

    /// Number of coordinates, `7t`.
    pub fn dimension(&self) -> usize {
        DISK_TYPES * self.tet_count
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn origins(&self) -> &[RowOrigin] {
        &self.origins
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `A x`.
    pub fn evaluate(&self, x: &NormalVector) -> Vec<i64> {
        self.rows
            .iter()
            .map(|row| row.iter().zip(x.coords()).map(|(a, &b)| a * b as i64).sum())
            .collect()
    }

    /// Index of the first violated row, if any.
    pub fn first_violation(&self, x: &NormalVector) -> Option<usize> {
        self.evaluate(x).iter().position(|&v| v != 0)
    }

    pub fn is_satisfied(&self, x: &NormalVector) -> bool {
        x.coords().len() == self.dimension() && self.first_violation(x).is_none()
    }
}

/// Matching equations of a triangulation. Boundary faces contribute no
/// rows. Rows are ordered by identification (smaller face first) and then by
/// the face's canonical vertex order.
pub fn matching_system(tri: &Triangulation) -> MatchingSystem {
    let t = tri.size();
    let mut rows = Vec::new();
    let mut origins = Vec::new();
    for g in tri.gluings() {
        let (_, perm) = tri.neighbour(g.tet, g.face).expect("listed gluing exists");
        for &v in &FACE_VERTICES[g.face] {
            let w = perm.apply(v);
            let mut row = vec![0i64; DISK_TYPES * t];
            row[DISK_TYPES * g.tet + v] += 1;
            row[DISK_TYPES * g.tet + 4 + quad_joining(v, g.face)] += 1;
            row[DISK_TYPES * g.other_tet + w] -= 1;
            row[DISK_TYPES * g.other_tet + 4 + quad_joining(w, g.other_face)] -= 1;
            rows.push(row);
            origins.push(RowOrigin {
                tet: g.tet,
                face: g.face,
                other_tet: g.other_tet,
                other_face: g.other_face,
                vertex: v,
            });
        }
    }
    MatchingSystem { tet_count: t, rows, origins }
}
