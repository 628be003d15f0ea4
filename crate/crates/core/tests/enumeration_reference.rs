mod common;

use common::{load, reference, SAMPLES};
use normalcut::enumeration::{
    admissible_fundamentals, fundamental_solutions, vertex_solutions, EnumerationOptions,
};
use normalcut::normal::matching_system;

fn coords(v: &[normalcut::NormalVector]) -> Vec<Vec<u64>> {
    v.iter().map(|x| x.coords().to_vec()).collect()
}

#[test]
fn admissible_sets_match_reference() {
    for name in SAMPLES {
        let sys = matching_system(&load(name));
        let r = reference(name);
        let opts = EnumerationOptions::admissible();
        let v = vertex_solutions(&sys, &opts).unwrap();
        let expected: Vec<Vec<u64>> = r.admissible_vertex.iter().map(|s| s.vector.clone()).collect();
        assert_eq!(coords(&v.vertices), expected, "{name}");
        let f = admissible_fundamentals(&sys, &opts).unwrap();
        let expected: Vec<Vec<u64>> = r.admissible_fundamental.iter().map(|s| s.vector.clone()).collect();
        assert_eq!(coords(&f.solutions), expected, "{name}");
    }
}

#[test]
fn full_cone_sets_match_reference() {
    for name in SAMPLES {
        let sys = matching_system(&load(name));
        let r = reference(name);
        let opts = EnumerationOptions::default();
        let v = vertex_solutions(&sys, &opts).unwrap();
        assert_eq!(coords(&v.vertices), r.full_vertex, "{name}");
        if name == "trefoil_complement" {
            continue;
        }
        let f = fundamental_solutions(&sys, &opts).unwrap();
        assert_eq!(coords(&f.solutions), r.full_fundamental, "{name}");
    }
}

#[test]
#[ignore = "slow: full Hilbert basis of the trefoil complement cone"]
fn trefoil_full_fundamentals_match_reference() {
    let sys = matching_system(&load("trefoil_complement"));
    let opts = EnumerationOptions { box_volume_cap: u64::MAX, ..Default::default() };
    let start = std::time::Instant::now();
    let f = fundamental_solutions(&sys, &opts).unwrap();
    eprintln!("volume {} in {:?}", f.search_volume, start.elapsed());
    assert_eq!(coords(&f.solutions), reference("trefoil_complement").full_fundamental);
}
