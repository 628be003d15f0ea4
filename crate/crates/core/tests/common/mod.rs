#![allow(dead_code)]

use std::path::PathBuf;

use normalcut::normal::NormalVector;
use normalcut::Triangulation;
use serde::Deserialize;

pub const SAMPLES: [&str; 4] = ["ball", "solid_torus", "closed_example", "trefoil_complement"];

pub fn samples_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../samples")
}

pub fn load(name: &str) -> Triangulation {
    let text = std::fs::read_to_string(samples_dir().join(format!("{name}.json"))).unwrap();
    Triangulation::from_json(&text).unwrap()
}

/// A surface as described by an independent normal surface implementation.
#[derive(Debug, Deserialize)]
pub struct ReferenceSurface {
    pub vector: Vec<u64>,
    pub euler: i64,
    pub weight: u64,
    pub orientable: bool,
    pub components: usize,
    pub boundary_curves: usize,
    pub compressing_disc: bool,
    pub vertex_link: bool,
}

impl ReferenceSurface {
    pub fn normal_vector(&self) -> NormalVector {
        NormalVector::new(self.vector.clone()).unwrap()
    }
}

/// Solution sets computed independently with Regina by
/// `scripts/gen_reference.py`.
#[derive(Debug, Deserialize)]
pub struct Reference {
    pub admissible_vertex: Vec<ReferenceSurface>,
    pub admissible_fundamental: Vec<ReferenceSurface>,
    pub full_vertex: Vec<Vec<u64>>,
    pub full_fundamental: Vec<Vec<u64>>,
}

pub fn reference(name: &str) -> Reference {
    let path = samples_dir().join("reference").join(format!("{name}.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}
