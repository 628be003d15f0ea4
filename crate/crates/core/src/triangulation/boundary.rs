use serde::Serialize;

use super::{Triangulation, FACE_VERTICES};
use crate::bitset::BitSet;
use crate::linalg::gf2::{self, Echelon, Gf2Vec};
use crate::unionfind::UnionFind;

/// A boundary face of the 3-manifold, seen as a triangle of the boundary
/// surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryTriangle {
    pub tet: usize,
    pub face: usize,
    /// Vertex classes of the face's canonical vertices `v0 < v1 < v2`.
    pub vertices: [usize; 3],
    /// Edge classes of `v0v1`, `v1v2`, `v0v2`.
    pub edges: [usize; 3],
    /// `+1` if walking `v0 -> v1 -> v2 -> v0` traverses the corresponding
    /// edge along its class orientation, `-1` otherwise.
    pub signs: [i8; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryComponent {
    /// Indices into [`BoundarySurface::triangles`].
    pub triangles: Vec<usize>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub euler: i64,
    pub orientable: bool,
}

/// The triangulated boundary of a 3-manifold: boundary faces glued along
/// boundary edge classes.
#[derive(Clone, Debug)]
pub struct BoundarySurface {
    pub triangles: Vec<BoundaryTriangle>,
    pub components: Vec<BoundaryComponent>,
    edge_local: Vec<Option<usize>>,
    cohomology: Echelon,
    h1_mod2_dim: usize,
}

impl BoundarySurface {
    pub(crate) fn build(tri: &Triangulation) -> Self {
        let sk = tri.skeleton();
        let mut triangles = Vec::new();
        for tet in 0..tri.size() {
            for face in 0..4 {
                if !tri.is_boundary_face(tet, face) {
                    continue;
                }
                let [a, b, c] = FACE_VERTICES[face];
                let vertices = [a, b, c].map(|v| sk.vertex_class(tet, v));
                let mut edges = [0; 3];
                let mut signs = [0i8; 3];
                for (k, (x, y, along)) in [(a, b, 1i8), (b, c, 1), (a, c, -1)].into_iter().enumerate()
                {
                    let (class, reversed) = sk.edge_class(tet, super::edge_index(x, y));
                    edges[k] = class;
                    signs[k] = if reversed { -along } else { along };
                }
                triangles.push(BoundaryTriangle { tet, face, vertices, edges, signs });
            }
        }

        // Incidences of each edge class with boundary triangles.
        let mut incidences: Vec<Vec<(usize, i8)>> = vec![Vec::new(); sk.edge_count()];
        for (i, t) in triangles.iter().enumerate() {
            for k in 0..3 {
                incidences[t.edges[k]].push((i, t.signs[k]));
            }
        }

        let mut uf = UnionFind::new(triangles.len());
        let mut coherent = vec![true; triangles.len()];
        for inc in &incidences {
            if let [(i, si), (j, sj)] = inc[..] {
                // Coherent orientations induce opposite directions on the
                // shared edge: o_i s_i = -o_j s_j.
                let flip = si == sj;
                if !uf.union(i, j, flip) {
                    coherent[i] = false;
                }
            } else {
                for w in inc.windows(2) {
                    uf.union(w[0].0, w[1].0, false);
                }
            }
        }
        let (comp_of, comp_count) = uf.classes();
        let mut components: Vec<BoundaryComponent> = (0..comp_count)
            .map(|_| BoundaryComponent {
                triangles: Vec::new(),
                vertex_count: 0,
                edge_count: 0,
                euler: 0,
                orientable: true,
            })
            .collect();
        let mut comp_vertices = vec![BitSet::new(sk.vertex_count()); comp_count];
        let mut comp_edges = vec![BitSet::new(sk.edge_count()); comp_count];
        for (i, t) in triangles.iter().enumerate() {
            let c = comp_of[i];
            components[c].triangles.push(i);
            components[c].orientable &= coherent[i];
            for v in t.vertices {
                comp_vertices[c].insert(v);
            }
            for e in t.edges {
                comp_edges[c].insert(e);
            }
        }
        for (c, comp) in components.iter_mut().enumerate() {
            comp.vertex_count = comp_vertices[c].count();
            comp.edge_count = comp_edges[c].count();
            comp.euler =
                comp.vertex_count as i64 - comp.edge_count as i64 + comp.triangles.len() as i64;
        }

        // Mod-2 cohomology of the boundary, used to name the class of a
        // curve by the parities of its crossings with boundary edges.
        let mut edge_local = vec![None; sk.edge_count()];
        let mut next = 0;
        for t in &triangles {
            for e in t.edges {
                if edge_local[e].is_none() {
                    edge_local[e] = Some(next);
                    next += 1;
                }
            }
        }
        let edge_total = next;
        let mut vertex_rows: Vec<Gf2Vec> = Vec::new();
        let mut vertex_local = vec![None; sk.vertex_count()];
        for (class, local) in edge_local.iter().enumerate() {
            let Some(local) = *local else { continue };
            let (tet, e) = sk.edge(class).slots[0];
            let [a, b] = super::EDGE_VERTICES[e];
            for v in [sk.vertex_class(tet, a), sk.vertex_class(tet, b)] {
                let row = *vertex_local[v].get_or_insert_with(|| {
                    vertex_rows.push(Gf2Vec::zeros(edge_total));
                    vertex_rows.len() - 1
                });
                vertex_rows[row].flip(local);
            }
        }
        let triangle_rows: Vec<Gf2Vec> = triangles
            .iter()
            .map(|t| {
                let mut row = Gf2Vec::zeros(edge_total);
                for e in t.edges {
                    row.flip(edge_local[e].expect("boundary edge"));
                }
                row
            })
            .collect();
        let cocycles = gf2::kernel(&triangle_rows, edge_total);
        let mut cohomology = Echelon::new(cocycles.len());
        for row in &vertex_rows {
            cohomology.insert(row, BitSet::new(cocycles.len()));
        }
        let mut h1_mod2_dim = 0;
        for z in &cocycles {
            let mut tag = BitSet::new(cocycles.len());
            tag.insert(h1_mod2_dim);
            if cohomology.insert(z, tag) {
                h1_mod2_dim += 1;
            }
        }

        Self { triangles, components, edge_local, cohomology, h1_mod2_dim }
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// Dimension of the first homology of the boundary with mod-2
    /// coefficients.
    pub fn h1_mod2_dim(&self) -> usize {
        self.h1_mod2_dim
    }

    /// Mod-2 homology class of a closed curve on the boundary, given by how
    /// many times it crosses each edge class (indexed by edge class of the
    /// 3-manifold; non-boundary entries are ignored). The class is returned
    /// as coordinates in a fixed basis of `H_1(boundary; Z/2)` and is zero
    /// exactly when the curve separates its boundary component. Returns
    /// `None` if the crossings do not describe a closed curve.
    pub fn mod2_class(&self, crossings: &[u64]) -> Option<Gf2Vec> {
        let mut c = Gf2Vec::zeros(self.edge_local.iter().flatten().count());
        for (class, local) in self.edge_local.iter().enumerate() {
            if let Some(local) = local {
                if crossings.get(class).copied().unwrap_or(0) % 2 == 1 {
                    c.flip(*local);
                }
            }
        }
        let (rem, tag) = self.cohomology.reduce(&c);
        if !rem.is_zero() {
            return None;
        }
        Some(Gf2Vec::from_parities((0..self.h1_mod2_dim).map(|i| u64::from(tag.contains(i)))))
    }
}
