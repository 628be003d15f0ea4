mod common;

use common::{load, samples_dir, SAMPLES};
use normalcut::normal::{matching_system, reconstruct};
use normalcut::triangulation::{homology_h1, kneser_bound};
use normalcut::unknot::verify_certificate;
use normalcut::wirtinger::{find_noncyclic_rep, parse_pd, verify_assignment, wirtinger_presentation, Perm};
use normalcut::{decide_unknot, Certificate, Coefficients, EnumerationOptions, Verdict};
use proptest::prelude::*;

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn kneser_bound_survives_relabelling(order in permutation(5), sample in 0..SAMPLES.len()) {
        let tri = load(SAMPLES[sample]);
        let order: Vec<usize> = order.into_iter().filter(|&i| i < tri.size()).collect();
        let relabelled = tri.relabel(&order);
        prop_assert_eq!(kneser_bound(&relabelled), kneser_bound(&tri));
        prop_assert_eq!(
            homology_h1(&relabelled, Coefficients::Integers),
            homology_h1(&tri, Coefficients::Integers)
        );
    }

    #[test]
    fn trefoil_verdict_survives_relabelling(order in permutation(5)) {
        let tri = load("trefoil_complement").relabel(&order);
        let v = decide_unknot(&tri, &EnumerationOptions::default()).unwrap();
        prop_assert_eq!(v.verdict, Verdict::Knotted);
        prop_assert_eq!(v.diagnostics.essential_disks, 0);
        prop_assert_eq!(v.diagnostics.min_spanning_genus, Some(1));
    }

    #[test]
    fn conjugating_a_representation_keeps_it_valid(images in permutation(4)) {
        let text = std::fs::read_to_string(samples_dir().join("pd/figure8.json")).unwrap();
        let p = wirtinger_presentation(&parse_pd(&text).unwrap()).unwrap();
        let a = find_noncyclic_rep(&p, 5).unwrap();
        prop_assume!(a.n == 4);
        let h = Perm::from_images(images.into_iter().map(|i| i as u8).collect()).unwrap();
        let mut b = a.clone();
        b.images = a.images.iter().map(|g| h.conjugate(g)).collect();
        prop_assert!(verify_assignment(&p, &b));
    }
}

#[test]
fn diagnostics_are_monotone() {
    for name in ["solid_torus", "trefoil_complement"] {
        let d = decide_unknot(&load(name), &EnumerationOptions::default()).unwrap().diagnostics;
        assert!(d.essential_disks <= d.disks, "{name}");
        assert!(d.disks <= d.admissible, "{name}");
        assert!(d.admissible <= d.fundamental, "{name}");
    }
}

#[test]
fn certificates_reverify_from_scratch() {
    let tri = load("solid_torus");
    let v = decide_unknot(&tri, &EnumerationOptions::default()).unwrap();
    let cert = Certificate::new(&tri, v.certificate.unwrap());
    let json = serde_json::to_string(&cert).unwrap();
    let back: Certificate = serde_json::from_str(&json).unwrap();
    let surface = verify_certificate(&tri, &back).unwrap();
    assert_eq!(surface, reconstruct(&tri, &back.vector).unwrap());
    assert!(matching_system(&tri).is_satisfied(&back.vector));
}
