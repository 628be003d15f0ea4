use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{Triangulation, EDGE_VERTICES, FACE_VERTICES};
use crate::linalg::gf2::{self, Gf2Vec};
use crate::linalg::{snf, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Coefficients {
    Integers,
    Mod2,
}

/// First homology of a triangulation.
///
/// For integer coefficients `free_rank` is the Betti number, `torsion` the
/// invariant factors greater than one, and `coefficient_field_dim` the
/// dimension over the rationals (equal to `free_rank`). For mod-2
/// coefficients `torsion` is empty and both counts are the dimension over
/// the two-element field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyResult {
    pub coefficients: Coefficients,
    pub free_rank: usize,
    pub torsion: Vec<u64>,
    pub coefficient_field_dim: usize,
}

impl std::fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let ring = match self.coefficients {
            Coefficients::Integers => "Z",
            Coefficients::Mod2 => "Z_2",
        };
        match self.free_rank {
            0 => {}
            1 => parts.push(ring.to_string()),
            r => parts.push(format!("{r} {ring}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z_{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Cellular boundary maps of the quotient cell structure (one cell per
/// identification class). `d1` is `edges x vertices`, `d2` is `faces x
/// edges`, both acting on row vectors.
fn boundary_matrices(tri: &Triangulation) -> (IntMatrix, IntMatrix) {
    let sk = tri.skeleton();
    let mut d1 = vec![vec![BigInt::zero(); sk.vertex_count()]; sk.edge_count()];
    for (class, edge) in sk.edges().iter().enumerate() {
        let (tet, e) = edge.slots[0];
        let [a, b] = EDGE_VERTICES[e];
        d1[class][sk.vertex_class(tet, b)] += 1;
        d1[class][sk.vertex_class(tet, a)] -= 1;
    }
    let mut d2 = vec![vec![BigInt::zero(); sk.edge_count()]; sk.face_count()];
    for (class, row) in d2.iter_mut().enumerate() {
        let (tet, face) = sk.face_slots(class)[0];
        let [a, b, c] = FACE_VERTICES[face];
        for (x, y, sign) in [(b, c, 1i64), (a, c, -1), (a, b, 1)] {
            let (edge, reversed) = sk.edge_class(tet, super::edge_index(x, y));
            row[edge] += if reversed { -sign } else { sign };
        }
    }
    (d1, d2)
}

fn mod2_rows(m: &IntMatrix, width: usize) -> Vec<Gf2Vec> {
    let two = BigInt::from(2);
    m.iter()
        .map(|row| {
            let mut v = Gf2Vec::zeros(width);
            for (i, x) in row.iter().enumerate() {
                if !(x % &two).is_zero() {
                    v.flip(i);
                }
            }
            v
        })
        .collect()
}

/// `H_1` of the underlying cell complex, computed exactly from the boundary
/// matrices via Smith normal form (integers) or elimination over GF(2).
/// For manifolds with boundary this is absolute homology.
pub fn homology_h1(tri: &Triangulation, coeffs: Coefficients) -> HomologyResult {
    let sk = tri.skeleton();
    let (d1, d2) = boundary_matrices(tri);
    let edges = sk.edge_count();
    match coeffs {
        Coefficients::Integers => {
            let rank1 = snf::rank(&d1);
            let factors = snf::invariant_factors(&d2);
            let rank2 = factors.len();
            let torsion = factors
                .into_iter()
                .filter(|f| !f.is_one())
                .map(|f| u64::try_from(f).expect("torsion coefficient fits in u64"))
                .collect();
            let free_rank = edges - rank1 - rank2;
            HomologyResult {
                coefficients: coeffs,
                free_rank,
                torsion,
                coefficient_field_dim: free_rank,
            }
        }
        Coefficients::Mod2 => {
            let rank1 = gf2::rank(&mod2_rows(&d1, sk.vertex_count()));
            let rank2 = gf2::rank(&mod2_rows(&d2, edges));
            let dim = edges - rank1 - rank2;
            HomologyResult {
                coefficients: coeffs,
                free_rank: dim,
                torsion: Vec::new(),
                coefficient_field_dim: dim,
            }
        }
    }
}

/// Kneser's bound `k(M) = dim H_1(M; Z/2) + rank H_1(M; Z) + 6t`. It bounds
/// the number of pieces in a nontrivial decomposition of `M` along
/// 2-spheres, and the number of disjoint, pairwise non-parallel
/// incompressible surfaces in `M`.
pub fn kneser_bound(tri: &Triangulation) -> usize {
    let mod2 = homology_h1(tri, Coefficients::Mod2).coefficient_field_dim;
    let free = homology_h1(tri, Coefficients::Integers).free_rank;
    mod2 + free + 6 * tri.size()
}
