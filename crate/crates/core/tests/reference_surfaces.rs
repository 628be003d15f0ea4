mod common;

use common::{load, reference, SAMPLES};
use normalcut::normal::{euler_characteristic, matching_system, reconstruct, weight};

#[test]
fn reference_surfaces_are_solutions() {
    for name in SAMPLES {
        let tri = load(name);
        let sys = matching_system(&tri);
        let r = reference(name);
        for s in r.admissible_fundamental.iter().chain(&r.admissible_vertex) {
            assert!(sys.is_satisfied(&s.normal_vector()), "{name} {:?}", s.vector);
        }
    }
}

#[test]
fn measures_agree_with_reference() {
    for name in SAMPLES {
        let tri = load(name);
        for s in reference(name).admissible_fundamental {
            let x = s.normal_vector();
            assert_eq!(euler_characteristic(&tri, &x).unwrap(), s.euler, "{name} {:?}", s.vector);
            assert_eq!(weight(&tri, &x).unwrap(), s.weight, "{name} {:?}", s.vector);
        }
    }
}

#[test]
fn reconstruction_agrees_with_reference() {
    for name in SAMPLES {
        let tri = load(name);
        for s in reference(name).admissible_fundamental {
            let r = reconstruct(&tri, &s.normal_vector()).unwrap();
            let ctx = format!("{name} {:?}", s.vector);
            assert_eq!(r.euler, s.euler, "{ctx}");
            assert_eq!(r.weight, s.weight, "{ctx}");
            assert_eq!(r.is_orientable(), s.orientable, "{ctx}");
            assert_eq!(r.components.len(), s.components, "{ctx}");
            assert_eq!(r.boundary_curves.len(), s.boundary_curves, "{ctx}");
            let compressing = r.is_disk() && r.boundary_curves[0].essential;
            assert_eq!(compressing, s.compressing_disc, "{ctx}");
        }
    }
}

#[test]
fn multiples_split_into_copies() {
    let tri = load("trefoil_complement");
    for s in reference("trefoil_complement").admissible_fundamental {
        let x = s.normal_vector().scaled(3);
        let r = reconstruct(&tri, &x).unwrap();
        assert_eq!(r.euler, 3 * s.euler);
        // One-sided surfaces double to a connected two-sided surface.
        let expected = if s.orientable { 3 } else { 2 };
        assert_eq!(r.components.len(), expected, "{:?}", s.vector);
    }
}
