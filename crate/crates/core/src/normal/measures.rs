use serde::Serialize;

use super::{matching_system, quad_joining, MatchingSystem, NormalError, NormalVector};
use crate::triangulation::{Triangulation, EDGE_VERTICES, FACE_VERTICES};

/// At most one quadrilateral type is non-zero in every tetrahedron.
pub fn satisfies_quad_condition(x: &NormalVector) -> bool {
    first_quad_conflict(x).is_none()
}

fn first_quad_conflict(x: &NormalVector) -> Option<usize> {
    (0..x.tet_count()).find(|&t| (0..3).filter(|&q| x.quads(t, q) > 0).count() > 1)
}

/// Non-negative, satisfies the matching equations and the quadrilateral
/// condition.
pub fn is_admissible(sys: &MatchingSystem, x: &NormalVector) -> bool {
    sys.is_satisfied(x) && satisfies_quad_condition(x)
}

pub(crate) fn check_admissible(tri: &Triangulation, x: &NormalVector) -> Result<(), NormalError> {
    x.check_len(tri.size())?;
    if let Some(row) = matching_system(tri).first_violation(x) {
        return Err(NormalError::MatchingViolated { row });
    }
    if let Some(tet) = first_quad_conflict(x) {
        return Err(NormalError::QuadConflict { tet });
    }
    Ok(())
}

/// Number of normal disk corners on edge `ab` of `tet`.
pub(crate) fn edge_corners(x: &NormalVector, tet: usize, a: usize, b: usize) -> u64 {
    let joined = quad_joining(a, b);
    x.triangles(tet, a)
        + x.triangles(tet, b)
        + (0..3).filter(|&q| q != joined).map(|q| x.quads(tet, q)).sum::<u64>()
}

/// Number of normal arcs on face `face` of `tet` that cut off `vertex`.
pub(crate) fn face_arcs(x: &NormalVector, tet: usize, face: usize, vertex: usize) -> u64 {
    x.triangles(tet, vertex) + x.quads(tet, quad_joining(vertex, face))
}

/// Total intersection number of the surface with the edges of the
/// triangulation.
pub fn weight(tri: &Triangulation, x: &NormalVector) -> Result<u64, NormalError> {
    x.check_len(tri.size())?;
    Ok(weight_unchecked(tri, x))
}

pub(crate) fn weight_unchecked(tri: &Triangulation, x: &NormalVector) -> u64 {
    tri.skeleton()
        .edges()
        .iter()
        .map(|class| {
            let (tet, e) = class.slots[0];
            let [a, b] = EDGE_VERTICES[e];
            edge_corners(x, tet, a, b)
        })
        .sum()
}

/// Euler characteristic `V - E + F` of the surface, counting normal disks,
/// normal arcs up to face identification and intersection points with
/// edges. Fails unless the vector is admissible.
pub fn euler_characteristic(tri: &Triangulation, x: &NormalVector) -> Result<i64, NormalError> {
    check_admissible(tri, x)?;
    Ok(euler_unchecked(tri, x))
}

pub(crate) fn euler_unchecked(tri: &Triangulation, x: &NormalVector) -> i64 {
    let sk = tri.skeleton();
    let v = weight_unchecked(tri, x) as i64;
    let e: u64 = (0..sk.face_count())
        .map(|class| {
            let (tet, face) = sk.face_slots(class)[0];
            FACE_VERTICES[face].iter().map(|&u| face_arcs(x, tet, face, u)).sum::<u64>()
        })
        .sum();
    let f = x.disk_count();
    v - e as i64 + f as i64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HakenSum {
    pub sum: NormalVector,
    /// Whether the sum still satisfies the quadrilateral condition, i.e. is
    /// realised by an embedded normal surface.
    pub admissible: bool,
}

/// Coordinate-wise sum of two solutions of the matching equations.
pub fn haken_sum(
    sys: &MatchingSystem,
    a: &NormalVector,
    b: &NormalVector,
) -> Result<HakenSum, NormalError> {
    a.check_len(sys.tet_count())?;
    b.check_len(sys.tet_count())?;
    for x in [a, b] {
        if let Some(row) = sys.first_violation(x) {
            return Err(NormalError::MatchingViolated { row });
        }
    }
    let sum = a + b;
    let admissible = satisfies_quad_condition(&sum);
    Ok(HakenSum { sum, admissible })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::samples::*;
    use proptest::prelude::*;

    fn nv(c: &[u64]) -> NormalVector {
        NormalVector::new(c.to_vec()).unwrap()
    }

    /// Reference values for the one-tetrahedron samples, computed
    /// independently with Regina.
    #[test]
    fn reference_surfaces() {
        let st = load(SOLID_TORUS);
        for (coords, chi, w) in [
            ([0, 0, 0, 0, 0, 1, 0], 0, 2),
            ([0, 0, 1, 1, 1, 0, 0], 0, 4),
            ([1, 1, 0, 0, 0, 0, 1], 1, 6),
            ([1, 1, 1, 1, 0, 0, 0], 1, 6),
        ] {
            let x = nv(&coords);
            assert_eq!(euler_characteristic(&st, &x).unwrap(), chi, "{coords:?}");
            assert_eq!(weight(&st, &x).unwrap(), w, "{coords:?}");
        }
        let lens = load(CLOSED);
        for (coords, chi, w) in [([0, 0, 0, 0, 0, 1, 0], 0, 1), ([1, 1, 1, 1, 0, 0, 0], 2, 4)] {
            let x = nv(&coords);
            assert_eq!(euler_characteristic(&lens, &x).unwrap(), chi);
            assert_eq!(weight(&lens, &x).unwrap(), w);
        }
    }

    #[test]
    fn single_disks_in_a_ball() {
        let ball = load(BALL);
        for i in 0..7 {
            let x = NormalVector::unit(1, i);
            assert_eq!(euler_characteristic(&ball, &x).unwrap(), 1);
            assert_eq!(weight(&ball, &x).unwrap(), if i < 4 { 3 } else { 4 });
        }
    }

    #[test]
    fn boundary_vertex_link_is_a_disk() {
        let tri = load(TREFOIL);
        assert_eq!(tri.skeleton().vertex_count(), 1);
        let x = NormalVector::new((0..5).flat_map(|_| [1, 1, 1, 1, 0, 0, 0]).collect()).unwrap();
        assert_eq!(euler_characteristic(&tri, &x).unwrap(), 1);
        // Every edge is a loop at the single vertex and meets its link twice.
        assert_eq!(weight(&tri, &x).unwrap(), 2 * tri.skeleton().edge_count() as u64);
    }

    #[test]
    fn inadmissible_vectors_are_rejected() {
        let st = load(SOLID_TORUS);
        assert!(matches!(
            euler_characteristic(&st, &nv(&[0, 0, 0, 0, 1, 1, 0])),
            Err(NormalError::QuadConflict { tet: 0 }) | Err(NormalError::MatchingViolated { .. })
        ));
        assert!(matches!(
            euler_characteristic(&st, &nv(&[1, 0, 0, 0, 0, 0, 0])),
            Err(NormalError::MatchingViolated { .. })
        ));
        assert!(matches!(
            euler_characteristic(&st, &NormalVector::zero(2)),
            Err(NormalError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn haken_sum_flags_quad_conflicts() {
        let st = load(SOLID_TORUS);
        let sys = matching_system(&st);
        let s = haken_sum(&sys, &nv(&[0, 0, 1, 1, 1, 0, 0]), &nv(&[1, 1, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(s.sum, nv(&[1, 1, 1, 1, 1, 0, 1]));
        assert!(!s.admissible);
        let s = haken_sum(&sys, &nv(&[1, 1, 1, 1, 0, 0, 0]), &nv(&[1, 1, 0, 0, 0, 0, 1])).unwrap();
        assert!(s.admissible);
    }

    fn solid_torus_solution() -> impl Strategy<Value = NormalVector> {
        // Non-negative combinations of the solid torus fundamentals that
        // share the quad type 2 or avoid quads.
        (0u64..5, 0u64..5).prop_map(|(a, b)| {
            let v = &nv(&[1, 1, 1, 1, 0, 0, 0]).scaled(a) + &nv(&[1, 1, 0, 0, 0, 0, 1]).scaled(b);
            v
        })
    }

    proptest! {
        #[test]
        fn euler_and_weight_are_additive(x in solid_torus_solution(), y in solid_torus_solution()) {
            let st = load(SOLID_TORUS);
            let s = &x + &y;
            prop_assert_eq!(
                euler_characteristic(&st, &s).unwrap(),
                euler_characteristic(&st, &x).unwrap() + euler_characteristic(&st, &y).unwrap()
            );
            prop_assert_eq!(weight(&st, &s).unwrap(), weight(&st, &x).unwrap() + weight(&st, &y).unwrap());
        }

        #[test]
        fn matching_is_linear(a in proptest::collection::vec(0u64..4, 35), b in proptest::collection::vec(0u64..4, 35)) {
            let sys = matching_system(&load(TREFOIL));
            let (x, y) = (NormalVector::new(a).unwrap(), NormalVector::new(b).unwrap());
            let lhs = sys.evaluate(&(&x + &y));
            let rhs: Vec<i64> = sys.evaluate(&x).iter().zip(sys.evaluate(&y)).map(|(p, q)| p + q).collect();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
