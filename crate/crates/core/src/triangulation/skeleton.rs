use serde::Serialize;

use super::{Triangulation, EDGE_VERTICES, FACE_VERTICES};
use crate::unionfind::UnionFind;

/// One edge of the triangulation after identification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeClass {
    /// `(tet, edge)` slots in lexicographic order; the first is the
    /// representative and fixes the class orientation (lower to higher
    /// vertex of the representative slot).
    pub slots: Vec<(usize, usize)>,
    /// Whether some slot lies in a boundary face.
    pub boundary: bool,
    /// Set when the gluings identify the edge with itself reversed.
    pub self_reversed: bool,
}

/// Identification classes of the vertices, edges and faces of every
/// tetrahedron. Classes are numbered in order of their lexicographically
/// smallest `(tet, slot)` member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonIndex {
    vertex_of: Vec<[usize; 4]>,
    vertex_boundary: Vec<bool>,
    edge_of: Vec<[(usize, bool); 6]>,
    edges: Vec<EdgeClass>,
    face_of: Vec<[usize; 4]>,
    face_slots: Vec<Vec<(usize, usize)>>,
}

impl SkeletonIndex {
    pub(crate) fn build(tri: &Triangulation) -> Self {
        let n = tri.size();
        let mut verts = UnionFind::new(4 * n);
        let mut edges = UnionFind::new(6 * n);
        let mut faces = UnionFind::new(4 * n);
        let mut self_reversed = Vec::new();

        for tet in 0..n {
            for face in 0..4 {
                let Some((other, perm)) = tri.neighbour(tet, face) else { continue };
                faces.union(4 * tet + face, 4 * other + perm.apply(face), false);
                for &v in &FACE_VERTICES[face] {
                    verts.union(4 * tet + v, 4 * other + perm.apply(v), false);
                }
                for (e, &[a, b]) in EDGE_VERTICES.iter().enumerate() {
                    if a == face || b == face {
                        continue;
                    }
                    let (pa, pb) = (perm.apply(a), perm.apply(b));
                    let e2 = super::edge_index(pa, pb);
                    if !edges.union(6 * tet + e, 6 * other + e2, pa > pb) {
                        self_reversed.push(6 * tet + e);
                    }
                }
            }
        }

        let (vertex_ids, _) = verts.classes();
        let (edge_ids, edge_count) = edges.classes();
        let (face_ids, face_count) = faces.classes();

        let mut vertex_of = vec![[0; 4]; n];
        for tet in 0..n {
            for v in 0..4 {
                vertex_of[tet][v] = vertex_ids[4 * tet + v];
            }
        }

        let mut edge_classes: Vec<EdgeClass> = (0..edge_count)
            .map(|_| EdgeClass { slots: Vec::new(), boundary: false, self_reversed: false })
            .collect();
        let mut rep_parity = vec![None; edge_count];
        let mut edge_of = vec![[(0, false); 6]; n];
        for tet in 0..n {
            for e in 0..6 {
                let slot = 6 * tet + e;
                let class = edge_ids[slot];
                let (_, parity) = edges.find(slot);
                let rep = *rep_parity[class].get_or_insert(parity);
                edge_of[tet][e] = (class, parity != rep);
                edge_classes[class].slots.push((tet, e));
            }
        }
        for slot in self_reversed {
            edge_classes[edge_ids[slot]].self_reversed = true;
        }

        let mut face_slots = vec![Vec::new(); face_count];
        let mut face_of = vec![[0; 4]; n];
        for tet in 0..n {
            for f in 0..4 {
                let class = face_ids[4 * tet + f];
                face_of[tet][f] = class;
                face_slots[class].push((tet, f));
            }
        }

        let vertex_count = vertex_ids.iter().copied().max().map_or(0, |m| m + 1);
        let mut vertex_boundary = vec![false; vertex_count];
        for tet in 0..n {
            for face in 0..4 {
                if !tri.is_boundary_face(tet, face) {
                    continue;
                }
                for &v in &FACE_VERTICES[face] {
                    vertex_boundary[vertex_of[tet][v]] = true;
                }
                for (e, &[a, b]) in EDGE_VERTICES.iter().enumerate() {
                    if a != face && b != face {
                        edge_classes[edge_of[tet][e].0].boundary = true;
                    }
                }
            }
        }

        Self { vertex_of, vertex_boundary, edge_of, edges: edge_classes, face_of, face_slots }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_boundary.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.face_slots.len()
    }

    pub fn vertex_class(&self, tet: usize, v: usize) -> usize {
        self.vertex_of[tet][v]
    }

    pub fn is_boundary_vertex(&self, class: usize) -> bool {
        self.vertex_boundary[class]
    }

    /// Edge class of slot `(tet, edge)` and whether the slot's lower-to-higher
    /// direction is opposite to the class orientation.
    pub fn edge_class(&self, tet: usize, edge: usize) -> (usize, bool) {
        self.edge_of[tet][edge]
    }

    pub fn edge(&self, class: usize) -> &EdgeClass {
        &self.edges[class]
    }

    pub fn edges(&self) -> &[EdgeClass] {
        &self.edges
    }

    pub fn face_class(&self, tet: usize, face: usize) -> usize {
        self.face_of[tet][face]
    }

    pub fn face_slots(&self, class: usize) -> &[(usize, usize)] {
        &self.face_slots[class]
    }

    /// Number of face classes with two slots.
    pub fn interior_face_count(&self) -> usize {
        self.face_slots.iter().filter(|s| s.len() == 2).count()
    }
}

#[cfg(test)]
mod tests {
    use super::super::samples::*;
    use super::super::{FaceGluing, Triangulation};

    #[test]
    fn single_tetrahedron_counts() {
        let sk = load(BALL).skeleton().clone();
        assert_eq!((sk.vertex_count(), sk.edge_count(), sk.face_count()), (4, 6, 4));
        assert!(sk.edges().iter().all(|e| e.boundary && e.slots.len() == 1));
    }

    #[test]
    fn two_tetrahedra_sharing_a_face() {
        let tri = Triangulation::new(
            2,
            &[FaceGluing { tet: 0, face: 3, other_tet: 1, other_face: 3, map: [0, 1, 2] }],
        )
        .unwrap();
        let sk = tri.skeleton();
        assert_eq!(sk.face_count(), 7);
        assert_eq!(sk.vertex_count(), 5);
        assert_eq!(sk.edge_count(), 9);
        assert_eq!(sk.interior_face_count(), 1);
    }

    /// Face slots are each counted once: boundary classes hold one slot and
    /// interior classes two.
    #[test]
    fn face_slots_account_for_every_face() {
        for text in [BALL, SOLID_TORUS, CLOSED, TREFOIL] {
            let tri = load(text);
            let sk = tri.skeleton();
            let total: usize = (0..sk.face_count()).map(|c| sk.face_slots(c).len()).sum();
            assert_eq!(total, 4 * tri.size());
            let weighted: usize = (0..sk.face_count())
                .map(|c| if sk.face_slots(c).len() == 1 { 1 } else { 2 })
                .sum();
            assert_eq!(weighted, 4 * tri.size());
        }
    }

    /// Independent recount of edge classes: flood fill over face gluings
    /// without orientation bookkeeping.
    #[test]
    fn edge_classes_match_flood_fill() {
        for text in [BALL, SOLID_TORUS, CLOSED, TREFOIL] {
            let tri = load(text);
            let n = tri.size();
            let mut label = vec![usize::MAX; 6 * n];
            let mut classes = 0;
            for start in 0..6 * n {
                if label[start] != usize::MAX {
                    continue;
                }
                let mut stack = vec![start];
                label[start] = classes;
                while let Some(slot) = stack.pop() {
                    let (tet, e) = (slot / 6, slot % 6);
                    let [a, b] = crate::triangulation::EDGE_VERTICES[e];
                    for face in (0..4).filter(|&f| f != a && f != b) {
                        if let Some((o, p)) = tri.neighbour(tet, face) {
                            let s = 6 * o + crate::triangulation::edge_index(p.apply(a), p.apply(b));
                            if label[s] == usize::MAX {
                                label[s] = classes;
                                stack.push(s);
                            }
                        }
                    }
                }
                classes += 1;
            }
            assert_eq!(tri.skeleton().edge_count(), classes);
            assert!(tri.skeleton().edges().iter().all(|e| !e.self_reversed));
        }
    }
}
