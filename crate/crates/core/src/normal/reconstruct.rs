use serde::Serialize;

use super::measures::{check_admissible, edge_corners, face_arcs};
use super::{quad_joining, NormalError, NormalVector, DISK_TYPES, QUAD_SIDES};
use crate::triangulation::{edge_index, Perm4, Triangulation, FACE_VERTICES};
use crate::unionfind::UnionFind;

/// A connected component of a reconstructed normal surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub euler: i64,
    /// Number of intersection points with the edges of the triangulation.
    pub weight: u64,
    pub disks: u64,
    pub orientable: bool,
    pub boundary_curves: usize,
}

/// A boundary curve of a normal surface, lying on the boundary of the
/// 3-manifold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryCurve {
    pub component: usize,
    /// Number of normal arcs the curve is made of.
    pub arcs: u64,
    /// Intersections with each edge class of the triangulation.
    pub crossings: Vec<u64>,
    /// Coordinates of the curve in `H_1(boundary; Z/2)`.
    pub mod2_class: Vec<u8>,
    /// The curve does not separate its boundary component.
    pub essential: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub euler: i64,
    pub weight: u64,
    pub components: Vec<ComponentReport>,
    pub boundary_curves: Vec<BoundaryCurve>,
}

impl SurfaceReport {
    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    /// A single disk: connected, Euler characteristic one and with boundary.
    pub fn is_disk(&self) -> bool {
        self.is_connected() && self.euler == 1 && self.boundary_curves.len() == 1
    }

    pub fn is_orientable(&self) -> bool {
        self.components.iter().all(|c| c.orientable)
    }
}

struct Layout<'a> {
    x: &'a NormalVector,
    disk_off: Vec<usize>,
    point_off: Vec<usize>,
    arc_off: Vec<usize>,
}

impl<'a> Layout<'a> {
    fn new(x: &'a NormalVector) -> Self {
        let t = x.tet_count();
        let prefix = |counts: Vec<u64>| {
            let mut acc = 0usize;
            let mut off = Vec::with_capacity(counts.len() + 1);
            for c in counts {
                off.push(acc);
                acc += c as usize;
            }
            off.push(acc);
            off
        };
        let disk_off = prefix(x.coords().to_vec());
        let point_off = prefix(
            (0..t)
                .flat_map(|tet| {
                    crate::triangulation::EDGE_VERTICES
                        .iter()
                        .map(move |&[a, b]| edge_corners(x, tet, a, b))
                })
                .collect(),
        );
        let arc_off = prefix(
            (0..t)
                .flat_map(|tet| {
                    (0..4).flat_map(move |f| {
                        FACE_VERTICES[f].iter().map(move |&u| face_arcs(x, tet, f, u))
                    })
                })
                .collect(),
        );
        Self { x, disk_off, point_off, arc_off }
    }

    fn disks(&self) -> usize {
        *self.disk_off.last().unwrap()
    }

    fn points(&self) -> usize {
        *self.point_off.last().unwrap()
    }

    fn arcs(&self) -> usize {
        *self.arc_off.last().unwrap()
    }

    fn disk(&self, tet: usize, kind: usize, copy: u64) -> usize {
        self.disk_off[DISK_TYPES * tet + kind] + copy as usize
    }

    /// The point on edge `ab` at distance `pos` from `a`.
    fn point(&self, tet: usize, a: usize, b: usize, pos: u64) -> usize {
        let e = edge_index(a, b);
        let slot = 6 * tet + e;
        let n = (self.point_off[slot + 1] - self.point_off[slot]) as u64;
        let low = if a < b { pos } else { n - 1 - pos };
        self.point_off[slot] + low as usize
    }

    fn arc(&self, tet: usize, face: usize, u: usize, pos: u64) -> usize {
        let j = FACE_VERTICES[face].iter().position(|&v| v == u).unwrap();
        self.arc_off[(4 * tet + face) * 3 + j] + pos as usize
    }

    /// Position of quad copy `copy` counted from vertex `u`.
    fn quad_pos(&self, tet: usize, q: usize, u: usize, copy: u64) -> u64 {
        let n = self.x.quads(tet, q);
        let rel = if QUAD_SIDES[q][0].contains(&u) { copy } else { n - 1 - copy };
        self.x.triangles(tet, u) + rel
    }

    /// The disk owning the arc at `pos` from `u` on `face`, as
    /// `(disk type, copy)`.
    fn disk_of_arc(&self, tet: usize, face: usize, u: usize, pos: u64) -> (usize, u64) {
        let tri = self.x.triangles(tet, u);
        if pos < tri {
            return (u, pos);
        }
        let q = quad_joining(u, face);
        let n = self.x.quads(tet, q);
        let rel = pos - tri;
        let copy = if QUAD_SIDES[q][0].contains(&u) { rel } else { n - 1 - rel };
        (4 + q, copy)
    }

    /// Arcs of a disk as `(face, cut vertex, position)`.
    fn disk_arcs(&self, tet: usize, kind: usize, copy: u64) -> Vec<(usize, usize, u64)> {
        if kind < 4 {
            (0..4).filter(|&f| f != kind).map(|f| (f, kind, copy)).collect()
        } else {
            let q = kind - 4;
            (0..4)
                .map(|f| {
                    let u = partner(q, f);
                    (f, u, self.quad_pos(tet, q, u, copy))
                })
                .collect()
        }
    }

    /// Corners of a disk as points.
    fn disk_corners(&self, tet: usize, kind: usize, copy: u64) -> Vec<usize> {
        if kind < 4 {
            (0..4).filter(|&o| o != kind).map(|o| self.point(tet, kind, o, copy)).collect()
        } else {
            let [side_a, side_b] = QUAD_SIDES[kind - 4];
            let mut out = Vec::with_capacity(4);
            for &a in &side_a {
                for &b in &side_b {
                    out.push(self.point(tet, a, b, self.x.triangles(tet, a) + copy));
                }
            }
            out
        }
    }
}

/// The vertex on the same side of quad type `q` as `v`.
fn partner(q: usize, v: usize) -> usize {
    let side = QUAD_SIDES[q].iter().find(|s| s.contains(&v)).unwrap();
    if side[0] == v { side[1] } else { side[0] }
}

type Edge = [usize; 2];

fn edge(a: usize, b: usize) -> Edge {
    if a < b { [a, b] } else { [b, a] }
}

/// Direction of the boundary cycle of a disk across its arc on `face`, as
/// the pair of tetrahedron edges the arc runs between. Triangles cutting
/// `u` run through their corners in increasing order of the far vertex;
/// a quad with sides `{a, b}`, `{c, d}` runs `ac, ad, bd, bc`.
fn arc_direction(kind: usize, face: usize) -> (Edge, Edge) {
    if kind < 4 {
        let u = kind;
        let others: Vec<usize> = (0..4).filter(|&o| o != u).collect();
        for i in 0..3 {
            let (x, y) = (others[i], others[(i + 1) % 3]);
            if x != face && y != face {
                return (edge(u, x), edge(u, y));
            }
        }
        unreachable!("triangle arc lies on a face not containing its vertex")
    } else {
        let [[a, b], [c, d]] = QUAD_SIDES[kind - 4];
        let cycle = [edge(a, c), edge(a, d), edge(b, d), edge(b, c)];
        let i = (0..4).find(|&i| !cycle[i].contains(&face) && !cycle[(i + 1) % 4].contains(&face));
        let i = i.unwrap();
        (cycle[i], cycle[(i + 1) % 4])
    }
}

fn map_edge(perm: Perm4, e: Edge) -> Edge {
    edge(perm.apply(e[0]), perm.apply(e[1]))
}

/// Builds the normal surface of an admissible vector and reports its
/// components and boundary curves.
pub fn reconstruct(tri: &Triangulation, x: &NormalVector) -> Result<SurfaceReport, NormalError> {
    check_admissible(tri, x)?;
    let layout = Layout::new(x);
    let mut disks = UnionFind::new(layout.disks());
    let mut points = UnionFind::new(layout.points());
    let mut arcs = UnionFind::new(layout.arcs());
    let mut twisted = Vec::new();

    for g in tri.gluings() {
        let (other, perm) = tri.neighbour(g.tet, g.face).unwrap();
        let other_face = perm.apply(g.face);
        let verts = FACE_VERTICES[g.face];
        for &u in &verts {
            let w = perm.apply(u);
            for pos in 0..face_arcs(x, g.tet, g.face, u) {
                arcs.union(layout.arc(g.tet, g.face, u, pos), layout.arc(other, other_face, w, pos), false);
                let (k1, c1) = layout.disk_of_arc(g.tet, g.face, u, pos);
                let (k2, c2) = layout.disk_of_arc(other, other_face, w, pos);
                let (from, _) = arc_direction(k1, g.face);
                let (from2, _) = arc_direction(k2, other_face);
                let agree = map_edge(perm, from) == from2;
                let d1 = layout.disk(g.tet, k1, c1);
                if !disks.union(d1, layout.disk(other, k2, c2), agree) {
                    twisted.push(d1);
                }
            }
        }
        for i in 0..3 {
            for j in i + 1..3 {
                let (a, b) = (verts[i], verts[j]);
                for pos in 0..edge_corners(x, g.tet, a, b) {
                    points.union(
                        layout.point(g.tet, a, b, pos),
                        layout.point(other, perm.apply(a), perm.apply(b), pos),
                        false,
                    );
                }
            }
        }
    }

    let (disk_comp, comp_count) = disks.classes();
    let mut comps = vec![(0u64, 0u64, 0u64, true, 0usize); comp_count];
    let mut arc_seen = vec![false; layout.arcs()];
    let mut point_seen = vec![false; layout.points()];
    for tet in 0..x.tet_count() {
        for kind in 0..DISK_TYPES {
            for copy in 0..x.coords()[DISK_TYPES * tet + kind] {
                let c = &mut comps[disk_comp[layout.disk(tet, kind, copy)]];
                c.2 += 1;
                for (f, u, pos) in layout.disk_arcs(tet, kind, copy) {
                    let r = arcs.root(layout.arc(tet, f, u, pos));
                    if !arc_seen[r] {
                        arc_seen[r] = true;
                        c.1 += 1;
                    }
                }
                for p in layout.disk_corners(tet, kind, copy) {
                    let r = points.root(p);
                    if !point_seen[r] {
                        point_seen[r] = true;
                        c.0 += 1;
                    }
                }
            }
        }
    }
    for d in twisted {
        comps[disk_comp[d]].3 = false;
    }

    let boundary_curves = boundary_curves(tri, &layout, &mut points, &disk_comp, &mut comps);
    let components: Vec<ComponentReport> = comps
        .into_iter()
        .map(|(v, e, f, orientable, curves)| ComponentReport {
            euler: v as i64 - e as i64 + f as i64,
            weight: v,
            disks: f,
            orientable,
            boundary_curves: curves,
        })
        .collect();
    Ok(SurfaceReport {
        euler: components.iter().map(|c| c.euler).sum(),
        weight: components.iter().map(|c| c.weight).sum(),
        components,
        boundary_curves,
    })
}

fn boundary_curves(
    tri: &Triangulation,
    layout: &Layout<'_>,
    points: &mut UnionFind,
    disk_comp: &[usize],
    comps: &mut [(u64, u64, u64, bool, usize)],
) -> Vec<BoundaryCurve> {
    let x = layout.x;
    let sk = tri.skeleton();
    let mut curves = UnionFind::new(layout.points());
    let mut on_boundary = vec![false; layout.points()];
    let mut arc_count = vec![0u64; layout.points()];
    let mut comp_of = vec![usize::MAX; layout.points()];
    let mut edge_of = vec![usize::MAX; layout.points()];
    let mut arc_points = Vec::new();

    for tet in 0..x.tet_count() {
        for face in (0..4).filter(|&f| tri.is_boundary_face(tet, f)) {
            for &u in &FACE_VERTICES[face] {
                let far: Vec<usize> = FACE_VERTICES[face].iter().copied().filter(|&v| v != u).collect();
                for pos in 0..face_arcs(x, tet, face, u) {
                    let (kind, copy) = layout.disk_of_arc(tet, face, u, pos);
                    let comp = disk_comp[layout.disk(tet, kind, copy)];
                    let ends = far.iter().map(|&v| {
                        let p = layout.point(tet, u, v, pos);
                        (points.root(p), sk.edge_class(tet, edge_index(u, v)).0)
                    });
                    let ends: Vec<(usize, usize)> = ends.collect();
                    for &(r, class) in &ends {
                        on_boundary[r] = true;
                        comp_of[r] = comp;
                        edge_of[r] = class;
                    }
                    curves.union(ends[0].0, ends[1].0, false);
                    arc_points.push(ends[0].0);
                }
            }
        }
    }
    for r in arc_points {
        arc_count[curves.root(r)] += 1;
    }

    let mut index_of = vec![usize::MAX; layout.points()];
    let mut out: Vec<BoundaryCurve> = Vec::new();
    for p in 0..layout.points() {
        if !on_boundary[p] {
            continue;
        }
        let root = curves.root(p);
        if index_of[root] == usize::MAX {
            index_of[root] = out.len();
            out.push(BoundaryCurve {
                component: comp_of[p],
                arcs: arc_count[root],
                crossings: vec![0; sk.edge_count()],
                mod2_class: Vec::new(),
                essential: false,
            });
        }
        out[index_of[root]].crossings[edge_of[p]] += 1;
    }
    for curve in &mut out {
        let class = tri
            .boundary()
            .mod2_class(&curve.crossings)
            .expect("boundary curve of a normal surface is a cycle");
        curve.essential = !class.is_zero();
        curve.mod2_class = class.to_bits();
        comps[curve.component].4 += 1;
    }
    out
}
