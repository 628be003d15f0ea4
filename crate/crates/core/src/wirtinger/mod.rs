//! Wirtinger presentations of knot groups and a search for permutation
//! representations with non-cyclic image.
//!
//! Diagrams are given in PD notation: each crossing is `[a, b, c, d]`,
//! listing the four edge labels counter-clockwise starting from the
//! incoming under-edge, so `a -> c` is the under-strand and `b`, `d` are
//! the over-strand. Edges are labelled `1..2c` consecutively along the
//! knot's orientation. The over-strand is oriented `d -> b` when `b`
//! follows `d`, otherwise `b -> d`.

mod perm;
mod search;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::snf;
use crate::unionfind::UnionFind;

pub use perm::{class_representative, conjugacy_class, generated_group, is_cyclic, Perm};
pub use search::{find_noncyclic_rep, find_noncyclic_rep_with, verify_assignment, PermutationAssignment};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WirtingerError {
    #[error("invalid PD code: {0}")]
    Syntax(String),
    #[error("PD code has no crossings; use \"unknot\" for the trivial diagram")]
    Empty,
    #[error("edge label {label} appears {count} times, expected 2")]
    LabelCount { label: u32, count: usize },
    #[error("edge labels must be 1..{expected}, found {found}")]
    NonContiguous { expected: usize, found: u32 },
    #[error("crossing {crossing} is not consistent with a single oriented knot")]
    NotAKnot { crossing: usize },
    #[error("abelianization of the presentation is {0}, expected Z")]
    Abelianization(String),
}

/// A validated knot diagram. An empty crossing list is the trivial diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnotDiagram {
    pub crossings: Vec<[u32; 4]>,
    /// Number of edge labels, twice the number of crossings.
    pub edge_count: usize,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PdInput {
    Token(String),
    Crossings(Vec<[u32; 4]>),
}

/// Parses a PD code given as a JSON array of 4-element arrays, or the token
/// `"unknot"`.
pub fn parse_pd(text: &str) -> Result<KnotDiagram, WirtingerError> {
    let input: PdInput = serde_json::from_str(text.trim())
        .map_err(|e| WirtingerError::Syntax(e.to_string()))?;
    let crossings = match input {
        PdInput::Token(t) if t == "unknot" => return Ok(KnotDiagram { crossings: Vec::new(), edge_count: 0 }),
        PdInput::Token(t) => return Err(WirtingerError::Syntax(format!("unknown token {t:?}"))),
        PdInput::Crossings(c) => c,
    };
    if crossings.is_empty() {
        return Err(WirtingerError::Empty);
    }
    let edge_count = 2 * crossings.len();
    let mut counts = vec![0usize; edge_count + 1];
    for &label in crossings.iter().flatten() {
        if label == 0 || label as usize > edge_count {
            return Err(WirtingerError::NonContiguous { expected: edge_count, found: label });
        }
        counts[label as usize] += 1;
    }
    if let Some(label) = (1..=edge_count).find(|&l| counts[l] != 2) {
        return Err(WirtingerError::LabelCount { label: label as u32, count: counts[label] });
    }
    let d = KnotDiagram { crossings, edge_count };
    for (i, &[a, b, c, dd]) in d.crossings.iter().enumerate() {
        if c != d.next(a) || (b != d.next(dd) && dd != d.next(b)) {
            return Err(WirtingerError::NotAKnot { crossing: i });
        }
    }
    Ok(d)
}

impl KnotDiagram {
    fn next(&self, label: u32) -> u32 {
        label % self.edge_count as u32 + 1
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }
}

/// One crossing relation: `out = over^sign * in * over^-sign`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub over: usize,
    pub incoming: usize,
    pub outgoing: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WirtingerPresentation {
    /// One generator per arc; arc `i` is numbered by the order of its
    /// smallest edge label.
    pub generator_count: usize,
    pub relations: Vec<Relation>,
}

impl fmt::Display for WirtingerPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.generator_count).map(|i| format!("x{i}")).collect();
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|r| {
                let (o, inv) = if r.sign > 0 { ("", "^-1") } else { ("^-1", "") };
                format!(
                    "x{} = x{}{o} x{} x{}{inv}",
                    r.outgoing + 1,
                    r.over + 1,
                    r.incoming + 1,
                    r.over + 1
                )
            })
            .collect();
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}

/// Builds the Wirtinger presentation and checks that its abelianization is
/// infinite cyclic.
pub fn wirtinger_presentation(d: &KnotDiagram) -> Result<WirtingerPresentation, WirtingerError> {
    if d.crossings.is_empty() {
        return Ok(WirtingerPresentation { generator_count: 1, relations: Vec::new() });
    }
    let mut arcs = UnionFind::new(d.edge_count);
    for &[_, b, _, dd] in &d.crossings {
        arcs.union(b as usize - 1, dd as usize - 1, false);
    }
    let (arc_of, generator_count) = arcs.classes();
    let relations = d
        .crossings
        .iter()
        .map(|&[a, b, c, dd]| Relation {
            over: arc_of[b as usize - 1],
            incoming: arc_of[a as usize - 1],
            outgoing: arc_of[c as usize - 1],
            sign: if b == d.next(dd) { 1 } else { -1 },
        })
        .collect();
    let p = WirtingerPresentation { generator_count, relations };
    let h1 = abelianization(&p);
    if h1 != "Z" {
        return Err(WirtingerError::Abelianization(h1));
    }
    Ok(p)
}

/// The abelianized group as a string such as `Z` or `Z^2 + Z_3`.
pub fn abelianization(p: &WirtingerPresentation) -> String {
    let rows: Vec<Vec<i64>> = p
        .relations
        .iter()
        .map(|r| {
            let mut row = vec![0i64; p.generator_count];
            row[r.outgoing] += 1;
            row[r.incoming] -= 1;
            row
        })
        .collect();
    let factors = if rows.is_empty() { Vec::new() } else { snf::invariant_factors(&crate::linalg::to_big(&rows)) };
    let rank = factors.len();
    let free = p.generator_count - rank;
    let mut parts = Vec::new();
    match free {
        0 => {}
        1 => parts.push("Z".to_string()),
        k => parts.push(format!("Z^{k}")),
    }
    parts.extend(factors.iter().filter(|f| **f != 1.into()).map(|f| format!("Z_{f}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
pub(crate) mod samples {
    pub const TREFOIL: &str = include_str!("../../../../samples/pd/trefoil.json");
    pub const FIGURE_EIGHT: &str = include_str!("../../../../samples/pd/figure8.json");
    pub const UNKNOT: &str = include_str!("../../../../samples/pd/unknot.json");
}
