//! Exact linear algebra over the integers, the rationals and the two-element
//! field. Matrices are small (at most a few hundred rows) so everything is
//! dense and row-major.

pub mod gf2;
pub mod lattice;
pub mod snf;

use num_bigint::BigInt;

/// Dense integer matrix stored as a list of rows.
pub type IntMatrix = Vec<Vec<BigInt>>;

/// Converts a matrix of machine integers into an [`IntMatrix`].
pub fn to_big(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
}
