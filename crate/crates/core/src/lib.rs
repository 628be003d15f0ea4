//! Normal surface theory on triangulated 3-manifolds.
//!
//! The crate covers four layers:
//!
//! * [`triangulation`]: the combinatorial model of a triangulated compact
//!   3-manifold, its skeleton, boundary surface, first homology and the
//!   Kneser bound.
//! * [`normal`]: normal coordinates, matching equations, the quadrilateral
//!   condition, weight, Euler characteristic and surface reconstruction.
//! * [`enumeration`]: exact enumeration of vertex and fundamental solutions
//!   of the normal surface equations.
//! * [`unknot`] and [`wirtinger`]: Haken's unknot decision procedure with
//!   re-verifiable certificates, and an independent knottedness certifier
//!   based on permutation representations of the knot group.
//!
//! Data-parallel loops run on rayon when the `parallel` feature is enabled
//! (the default); every entry point also accepts [`Execution::Sequential`].

pub mod cli;
pub mod enumeration;
pub mod linalg;
pub mod normal;
pub mod triangulation;
pub mod unknot;
pub mod wirtinger;

mod bitset;
mod par;
mod unionfind;

pub use par::Execution;
pub use enumeration::{EnumerationError, EnumerationOptions, FundamentalMethod, FundamentalSet, VertexSolutionSet};
pub use normal::{NormalError, NormalVector, SurfaceReport};
pub use triangulation::{Coefficients, HomologyResult, SkeletonIndex, Triangulation, TriangulationError};
pub use unknot::{decide_unknot, Certificate, UnknotError, UnknotVerdict, Verdict};
pub use wirtinger::{KnotDiagram, PermutationAssignment, WirtingerError, WirtingerPresentation};

/// Version tag written into every JSON document the crate produces.
pub const SCHEMA_VERSION: u32 = 1;
