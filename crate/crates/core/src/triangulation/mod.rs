//! Triangulated compact 3-manifolds, possibly with boundary.
//!
//! A triangulation is a set of tetrahedra with some pairs of faces glued by
//! affine maps. Faces are numbered by the vertex they are opposite to, and a
//! face's *canonical vertex order* is its three vertices in increasing order.
//! Gluings need not be simplicial: two faces of one tetrahedron may be glued
//! to each other, and tetrahedra may meet along several faces.

mod boundary;
mod homology;
mod skeleton;

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub use boundary::{BoundaryComponent, BoundarySurface, BoundaryTriangle};
pub use homology::{homology_h1, kneser_bound, Coefficients, HomologyResult};
pub use skeleton::{EdgeClass, SkeletonIndex};

/// Vertices of face `f` (the face opposite vertex `f`) in canonical order.
pub const FACE_VERTICES: [[usize; 3]; 4] = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];

/// Endpoints of the six edges of a tetrahedron, lower vertex first.
pub const EDGE_VERTICES: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

/// Index into [`EDGE_VERTICES`] of the edge joining `a` and `b`.
pub fn edge_index(a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => panic!("no edge between vertices {a} and {b}"),
    }
}

/// A permutation of the four vertices of a tetrahedron.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm4([u8; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    pub fn new(images: [u8; 4]) -> Option<Self> {
        let mut seen = [false; 4];
        for &i in &images {
            if i > 3 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(Self(images))
    }

    pub fn apply(self, v: usize) -> usize {
        self.0[v] as usize
    }

    pub fn inverse(self) -> Self {
        let mut inv = [0u8; 4];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img as usize] = i as u8;
        }
        Self(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[other.0[i] as usize]))
    }

    /// Builds the full vertex map of a gluing from face `face` to face
    /// `other_face`, where `map[k]` is the position in `other_face`'s
    /// canonical order of the image of the `k`-th vertex of `face`.
    pub fn from_face_map(face: usize, other_face: usize, map: [u8; 3]) -> Option<Self> {
        let mut img = [0u8; 4];
        img[face] = other_face as u8;
        for k in 0..3 {
            let m = *map.get(k)? as usize;
            img[FACE_VERTICES[face][k]] = *FACE_VERTICES[other_face].get(m)? as u8;
        }
        Self::new(img)
    }

    /// Inverse of [`Perm4::from_face_map`].
    pub fn face_map(self, face: usize) -> [u8; 3] {
        let other = self.apply(face);
        std::array::from_fn(|k| {
            let img = self.apply(FACE_VERTICES[face][k]);
            FACE_VERTICES[other].iter().position(|&v| v == img).expect("face maps to face") as u8
        })
    }
}

/// One face identification as it appears in a triangulation document.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FaceGluing {
    pub tet: usize,
    pub face: usize,
    pub other_tet: usize,
    pub other_face: usize,
    pub map: [u8; 3],
}

/// What went wrong while reading or validating a triangulation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TriangulationError {
    #[error("malformed document: {0}")]
    Syntax(String),
    #[error("triangulation must have at least one tetrahedron")]
    Empty,
    #[error("gluings[{index}]: {kind}")]
    Gluing { index: usize, kind: GluingErrorKind },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GluingErrorKind {
    #[error("tetrahedron {0} out of range")]
    TetOutOfRange(usize),
    #[error("face {0} out of range (faces are 0..3)")]
    FaceOutOfRange(usize),
    #[error("vertex map {0:?} is not a bijection of 0..2")]
    BadVertexMap([u8; 3]),
    #[error("self-glued face ({0}, {1})")]
    SelfGluedFace(usize, usize),
    #[error("face ({0}, {1}) is glued more than once")]
    DuplicateGluing(usize, usize),
    #[error("gluing of ({0}, {1}) disagrees with the listed reverse direction")]
    NonInvolutive(usize, usize),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    tets: usize,
    gluings: Vec<(usize, usize, usize, usize, [u8; 3])>,
}

/// A triangulated compact 3-manifold. Immutable once built; derived data
/// (skeleton, boundary) is computed on first use and cached.
#[derive(Clone)]
pub struct Triangulation {
    adjacency: Vec<[Option<(usize, Perm4)>; 4]>,
    skeleton: OnceLock<SkeletonIndex>,
    boundary: OnceLock<BoundarySurface>,
}

impl fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Triangulation")
            .field("tets", &self.size())
            .field("gluings", &self.gluings())
            .finish()
    }
}

impl PartialEq for Triangulation {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Triangulation {}

impl Triangulation {
    /// Builds and validates a triangulation. Each gluing may be listed in
    /// one direction or both; listed reverse directions must agree.
    pub fn new(tet_count: usize, gluings: &[FaceGluing]) -> Result<Self, TriangulationError> {
        if tet_count == 0 {
            return Err(TriangulationError::Empty);
        }
        let mut adjacency: Vec<[Option<(usize, Perm4)>; 4]> = vec![[None; 4]; tet_count];
        // Which gluing entry first set each face, to tell duplicates from
        // consistent reverse listings.
        let mut origin: Vec<[Option<(usize, bool)>; 4]> = vec![[None; 4]; tet_count];
        for (index, g) in gluings.iter().enumerate() {
            let err = |kind| TriangulationError::Gluing { index, kind };
            for t in [g.tet, g.other_tet] {
                if t >= tet_count {
                    return Err(err(GluingErrorKind::TetOutOfRange(t)));
                }
            }
            for f in [g.face, g.other_face] {
                if f > 3 {
                    return Err(err(GluingErrorKind::FaceOutOfRange(f)));
                }
            }
            if g.tet == g.other_tet && g.face == g.other_face {
                return Err(err(GluingErrorKind::SelfGluedFace(g.tet, g.face)));
            }
            let perm = Perm4::from_face_map(g.face, g.other_face, g.map)
                .ok_or(err(GluingErrorKind::BadVertexMap(g.map)))?;
            let inv = perm.inverse();
            match (adjacency[g.tet][g.face], origin[g.tet][g.face]) {
                (None, _) => {}
                // Set as the implied reverse of an earlier entry: must agree.
                (Some(existing), Some((_, false))) => {
                    if existing != (g.other_tet, perm) {
                        return Err(err(GluingErrorKind::NonInvolutive(g.tet, g.face)));
                    }
                    if adjacency[g.other_tet][g.other_face] != Some((g.tet, inv)) {
                        return Err(err(GluingErrorKind::NonInvolutive(g.tet, g.face)));
                    }
                    origin[g.tet][g.face] = Some((index, true));
                    continue;
                }
                _ => return Err(err(GluingErrorKind::DuplicateGluing(g.tet, g.face))),
            }
            if adjacency[g.other_tet][g.other_face].is_some() {
                return Err(err(GluingErrorKind::DuplicateGluing(g.other_tet, g.other_face)));
            }
            adjacency[g.tet][g.face] = Some((g.other_tet, perm));
            adjacency[g.other_tet][g.other_face] = Some((g.tet, inv));
            origin[g.tet][g.face] = Some((index, true));
            origin[g.other_tet][g.other_face] = Some((index, false));
        }
        Ok(Self { adjacency, skeleton: OnceLock::new(), boundary: OnceLock::new() })
    }

    /// Parses the JSON triangulation format:
    /// `{"tets": t, "gluings": [[tet_a, face_a, tet_b, face_b, [p0, p1, p2]], ...]}`.
    pub fn from_json(text: &str) -> Result<Self, TriangulationError> {
        let doc: Document =
            serde_json::from_str(text).map_err(|e| TriangulationError::Syntax(e.to_string()))?;
        let gluings: Vec<FaceGluing> = doc
            .gluings
            .into_iter()
            .map(|(tet, face, other_tet, other_face, map)| FaceGluing {
                tet,
                face,
                other_tet,
                other_face,
                map,
            })
            .collect();
        Self::new(doc.tets, &gluings)
    }

    /// Canonical JSON form: each identification listed once, from its
    /// lexicographically smaller face.
    pub fn to_json(&self) -> String {
        let doc = Document {
            tets: self.size(),
            gluings: self
                .gluings()
                .into_iter()
                .map(|g| (g.tet, g.face, g.other_tet, g.other_face, g.map))
                .collect(),
        };
        serde_json::to_string(&doc).expect("document serializes")
    }

    /// SHA-256 of [`Triangulation::to_json`], hex encoded. Certificates
    /// carry this so they can be checked against the exact triangulation.
    pub fn checksum(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }

    /// Number of tetrahedra.
    pub fn size(&self) -> usize {
        self.adjacency.len()
    }

    /// The tetrahedron glued to face `face` of `tet`, with the vertex map.
    pub fn neighbour(&self, tet: usize, face: usize) -> Option<(usize, Perm4)> {
        self.adjacency[tet][face]
    }

    pub fn is_boundary_face(&self, tet: usize, face: usize) -> bool {
        self.adjacency[tet][face].is_none()
    }

    /// Interior face identifications, each once, in lexicographic order of
    /// the smaller face.
    pub fn gluings(&self) -> Vec<FaceGluing> {
        let mut out = Vec::new();
        for (tet, faces) in self.adjacency.iter().enumerate() {
            for (face, adj) in faces.iter().enumerate() {
                let Some((other_tet, perm)) = *adj else { continue };
                let other_face = perm.apply(face);
                if (other_tet, other_face) < (tet, face) {
                    continue;
                }
                out.push(FaceGluing { tet, face, other_tet, other_face, map: perm.face_map(face) });
            }
        }
        out
    }

    pub fn boundary_face_count(&self) -> usize {
        self.adjacency.iter().flatten().filter(|a| a.is_none()).count()
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_face_count() == 0
    }

    /// Renumbers tetrahedra: old tetrahedron `i` becomes `order[i]`.
    pub fn relabel(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.size(), "relabel needs one image per tetrahedron");
        let mut adjacency = vec![[None; 4]; self.size()];
        for (old, faces) in self.adjacency.iter().enumerate() {
            for (face, adj) in faces.iter().enumerate() {
                adjacency[order[old]][face] = adj.map(|(t, p)| (order[t], p));
            }
        }
        Self { adjacency, skeleton: OnceLock::new(), boundary: OnceLock::new() }
    }

    /// Identification classes of vertices, edges and faces.
    pub fn skeleton(&self) -> &SkeletonIndex {
        self.skeleton.get_or_init(|| SkeletonIndex::build(self))
    }

    /// The induced triangulation of the boundary.
    pub fn boundary(&self) -> &BoundarySurface {
        self.boundary.get_or_init(|| BoundarySurface::build(self))
    }
}

/// Parses a triangulation document.
pub fn parse_triangulation(text: &str) -> Result<Triangulation, TriangulationError> {
    Triangulation::from_json(text)
}

/// Builds the identification classes of a triangulation.
pub fn build_skeleton(tri: &Triangulation) -> &SkeletonIndex {
    tri.skeleton()
}

/// The boundary surface of a triangulation.
pub fn boundary_surface(tri: &Triangulation) -> &BoundarySurface {
    tri.boundary()
}

#[cfg(test)]
pub(crate) mod samples {
    use super::Triangulation;

    pub const BALL: &str = include_str!("../../../../samples/ball.json");
    pub const SOLID_TORUS: &str = include_str!("../../../../samples/solid_torus.json");
    pub const CLOSED: &str = include_str!("../../../../samples/closed_example.json");
    pub const TREFOIL: &str = include_str!("../../../../samples/trefoil_complement.json");

    pub fn load(text: &str) -> Triangulation {
        Triangulation::from_json(text).expect("sample parses")
    }
}
