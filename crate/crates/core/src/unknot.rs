//! Haken's procedure for deciding whether a triangulated knot complement is
//! a solid torus, i.e. whether the knot is trivial.
//!
//! The knot is trivial exactly when the complement contains a properly
//! embedded disk whose boundary is essential on the boundary torus, and a
//! least-weight such disk can be taken normal and fundamental. The
//! procedure therefore enumerates admissible fundamental solutions and looks
//! for one that is a disk with essential boundary.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumeration::{admissible_fundamentals, EnumerationError, EnumerationOptions};
use crate::normal::{matching_system, reconstruct, NormalError, NormalVector, SurfaceReport};
use crate::par;
use crate::triangulation::{homology_h1, Coefficients, Triangulation};
use crate::SCHEMA_VERSION;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UnknotError {
    #[error("not a knot complement: {0}")]
    NotKnotComplement(String),
    #[error("surface has no boundary")]
    ClosedSurface,
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Normal(#[from] NormalError),
    #[error("certificate was issued for triangulation {expected}, not {found}")]
    ChecksumMismatch { expected: String, found: String },
    #[error("certificate vector is not a disk with essential boundary")]
    NotAnEssentialDisk,
}

/// Why `tri` is not a knot complement, if it is not one: the boundary must
/// be a single torus and `H_1` must be `Z`.
pub fn knot_complement_issue(tri: &Triangulation) -> Option<String> {
    let b = tri.boundary();
    if b.components.len() != 1 {
        return Some(format!("boundary has {} components, expected 1", b.components.len()));
    }
    let c = &b.components[0];
    if c.euler != 0 || !c.orientable {
        return Some(format!(
            "boundary has Euler characteristic {} and is {}, expected a torus",
            c.euler,
            if c.orientable { "orientable" } else { "non-orientable" }
        ));
    }
    let h1 = homology_h1(tri, Coefficients::Integers);
    if h1.free_rank != 1 || !h1.torsion.is_empty() {
        return Some(format!("H_1 is {h1}, expected Z"));
    }
    None
}

pub fn check_knot_complement(tri: &Triangulation) -> bool {
    knot_complement_issue(tri).is_none()
}

/// Whether every boundary curve of the surface is essential on the
/// boundary, i.e. has non-zero mod-2 homology class. Closed surfaces are
/// rejected.
pub fn is_essential_boundary(tri: &Triangulation, x: &NormalVector) -> Result<bool, UnknotError> {
    essential_boundary(&reconstruct(tri, x)?)
}

fn essential_boundary(report: &SurfaceReport) -> Result<bool, UnknotError> {
    if report.boundary_curves.is_empty() {
        return Err(UnknotError::ClosedSurface);
    }
    Ok(report.boundary_curves.iter().all(|c| c.essential))
}

fn is_essential_disk(report: &SurfaceReport) -> bool {
    report.is_disk() && report.boundary_curves[0].essential
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Unknot,
    Knotted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnknotDiagnostics {
    /// Fundamental solutions enumerated. The search is restricted to
    /// admissible solutions, so this equals `admissible`.
    pub fundamental: usize,
    pub admissible: usize,
    /// Admissible fundamental solutions that are disks.
    pub disks: usize,
    pub essential_disks: usize,
    pub search_volume: u64,
    /// Smallest genus among the fundamental surfaces that are connected,
    /// orientable and bounded by one essential curve. Only an upper bound
    /// on the knot genus found within this set; not a genus computation.
    pub min_spanning_genus: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnknotVerdict {
    pub verdict: Verdict,
    /// The lexicographically least essential disk, present iff the verdict
    /// is `Unknot`.
    pub certificate: Option<NormalVector>,
    pub diagnostics: UnknotDiagnostics,
}

/// Decides whether the knot whose complement is `tri` is trivial.
pub fn decide_unknot(tri: &Triangulation, opts: &EnumerationOptions) -> Result<UnknotVerdict, UnknotError> {
    if let Some(issue) = knot_complement_issue(tri) {
        return Err(UnknotError::NotKnotComplement(issue));
    }
    let sys = matching_system(tri);
    let set = admissible_fundamentals(&sys, opts)?;
    log::debug!("{} admissible fundamental solutions", set.len());
    let reports = par::map(opts.execution, &set.solutions, |x| reconstruct(tri, x));
    let reports = reports.into_iter().collect::<Result<Vec<_>, _>>()?;

    let disks = reports.iter().filter(|r| r.is_disk()).count();
    let essential: Vec<usize> = (0..reports.len()).filter(|&i| is_essential_disk(&reports[i])).collect();
    let min_spanning_genus = reports
        .iter()
        .filter(|r| {
            r.is_connected() && r.is_orientable() && r.boundary_curves.len() == 1 && r.boundary_curves[0].essential
        })
        .map(|r| ((1 - r.euler) / 2) as u64)
        .min();
    let certificate = essential.first().map(|&i| set.solutions[i].clone());
    Ok(UnknotVerdict {
        verdict: if certificate.is_some() { Verdict::Unknot } else { Verdict::Knotted },
        certificate,
        diagnostics: UnknotDiagnostics {
            fundamental: set.len(),
            admissible: set.admissible_subset.len(),
            disks,
            essential_disks: essential.len(),
            search_volume: set.search_volume,
            min_spanning_genus,
        },
    })
}

/// A self-contained, re-checkable witness of triviality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub triangulation_sha256: String,
    pub vector: NormalVector,
}

impl Certificate {
    pub fn new(tri: &Triangulation, vector: NormalVector) -> Self {
        Self { schema_version: SCHEMA_VERSION, triangulation_sha256: tri.checksum(), vector }
    }
}

/// Re-verifies a certificate from scratch: the checksum matches, the vector
/// is admissible, and it is a single disk with essential boundary.
pub fn verify_certificate(tri: &Triangulation, cert: &Certificate) -> Result<SurfaceReport, UnknotError> {
    let found = tri.checksum();
    if cert.triangulation_sha256 != found {
        return Err(UnknotError::ChecksumMismatch { expected: cert.triangulation_sha256.clone(), found });
    }
    let report = reconstruct(tri, &cert.vector)?;
    if !is_essential_disk(&report) {
        return Err(UnknotError::NotAnEssentialDisk);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::samples::*;

    #[test]
    fn knot_complement_check() {
        assert!(check_knot_complement(&load(SOLID_TORUS)));
        assert!(check_knot_complement(&load(TREFOIL)));
        assert!(!check_knot_complement(&load(BALL)));
        assert!(!check_knot_complement(&load(CLOSED)));
    }

    #[test]
    fn essential_boundary_cases() {
        let st = load(SOLID_TORUS);
        let meridian = NormalVector::new(vec![1, 1, 0, 0, 0, 0, 1]).unwrap();
        assert!(is_essential_boundary(&st, &meridian).unwrap());
        let link = NormalVector::new(vec![1, 1, 1, 1, 0, 0, 0]).unwrap();
        assert!(!is_essential_boundary(&st, &link).unwrap());
        let lens = load(CLOSED);
        assert_eq!(is_essential_boundary(&lens, &link), Err(UnknotError::ClosedSurface));
    }

    #[test]
    fn solid_torus_is_unknotted() {
        let st = load(SOLID_TORUS);
        let v = decide_unknot(&st, &EnumerationOptions::default()).unwrap();
        assert_eq!(v.verdict, Verdict::Unknot);
        assert_eq!(v.certificate.as_ref().unwrap().coords(), &[1, 1, 0, 0, 0, 0, 1]);
        assert_eq!(v.diagnostics.min_spanning_genus, Some(0));
        let cert = Certificate::new(&st, v.certificate.unwrap());
        assert!(verify_certificate(&st, &cert).is_ok());
    }

    #[test]
    fn bad_certificates_are_rejected() {
        let st = load(SOLID_TORUS);
        let link = Certificate::new(&st, NormalVector::new(vec![1, 1, 1, 1, 0, 0, 0]).unwrap());
        assert_eq!(verify_certificate(&st, &link), Err(UnknotError::NotAnEssentialDisk));
        let mut wrong = Certificate::new(&st, NormalVector::new(vec![1, 1, 0, 0, 0, 0, 1]).unwrap());
        wrong.triangulation_sha256 = "0".repeat(64);
        assert!(matches!(verify_certificate(&st, &wrong), Err(UnknotError::ChecksumMismatch { .. })));
    }

    #[test]
    fn preconditions_are_enforced() {
        for text in [BALL, CLOSED] {
            assert!(matches!(
                decide_unknot(&load(text), &EnumerationOptions::default()),
                Err(UnknotError::NotKnotComplement(_))
            ));
        }
    }

    #[test]
    fn trefoil_is_knotted() {
        let v = decide_unknot(&load(TREFOIL), &EnumerationOptions::default()).unwrap();
        assert_eq!(v.verdict, Verdict::Knotted);
        assert_eq!(v.certificate, None);
        assert_eq!(v.diagnostics.essential_disks, 0);
        assert_eq!(v.diagnostics.min_spanning_genus, Some(1));
    }
}
