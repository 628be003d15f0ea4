//! Vectors and elimination over the two-element field.

use crate::bitset::BitSet;

/// A vector over GF(2).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vec {
    len: usize,
    bits: Vec<u64>,
}

impl Gf2Vec {
    pub fn zeros(len: usize) -> Self {
        Self { len, bits: vec![0; len.div_ceil(64)] }
    }

    pub fn from_parities(values: impl IntoIterator<Item = u64>) -> Self {
        let values: Vec<u64> = values.into_iter().collect();
        let mut v = Self::zeros(values.len());
        for (i, x) in values.into_iter().enumerate() {
            if x % 2 == 1 {
                v.flip(i);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn flip(&mut self, i: usize) {
        self.bits[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &Self) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn leading(&self) -> Option<usize> {
        (0..self.len).find(|&i| self.get(i))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| u8::from(self.get(i))).collect()
    }
}

/// Incrementally built row echelon basis. Each stored row carries a tag
/// recording which inserted generators it is a combination of.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    rows: Vec<(usize, Gf2Vec, BitSet)>,
    tag_len: usize,
}

impl Echelon {
    pub fn new(tag_len: usize) -> Self {
        Self { rows: Vec::new(), tag_len }
    }

    /// Reduces `v` against the basis, returning the remainder and the tag of
    /// the combination that was subtracted.
    pub fn reduce(&self, v: &Gf2Vec) -> (Gf2Vec, BitSet) {
        let mut v = v.clone();
        let mut tag = BitSet::new(self.tag_len);
        for (pivot, row, row_tag) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
                xor_tag(&mut tag, row_tag);
            }
        }
        (v, tag)
    }

    /// Inserts `v` with tag `tag`; returns `false` if it was dependent.
    pub fn insert(&mut self, v: &Gf2Vec, tag: BitSet) -> bool {
        let (rem, used) = self.reduce(v);
        let Some(pivot) = rem.leading() else { return false };
        let mut tag = tag;
        xor_tag(&mut tag, &used);
        // Keep earlier rows reduced at the new pivot so reduce() is one pass.
        for (_, row, row_tag) in self.rows.iter_mut() {
            if row.get(pivot) {
                row.xor_assign(&rem);
                xor_tag(row_tag, &tag);
            }
        }
        self.rows.push((pivot, rem, tag));
        true
    }
}

fn xor_tag(a: &mut BitSet, b: &BitSet) {
    for i in b.iter() {
        if a.contains(i) {
            a.remove(i);
        } else {
            a.insert(i);
        }
    }
}

/// Rank over GF(2) of a list of rows.
pub fn rank(rows: &[Gf2Vec]) -> usize {
    let mut e = Echelon::new(0);
    rows.iter().filter(|r| e.insert(r, BitSet::new(0))).count()
}

/// Basis of `{x : M x = 0}` where `rows` are the rows of `M` and `n` the
/// number of columns.
pub fn kernel(rows: &[Gf2Vec], n: usize) -> Vec<Gf2Vec> {
    // Gauss-Jordan to reduced row echelon form.
    let mut m: Vec<Gf2Vec> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| m[i].get(c)) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i].get(c) {
                let pivot_row = m[r].clone();
                m[i].xor_assign(&pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = Gf2Vec::zeros(n);
            v.flip(f);
            for (ri, &pc) in pivots.iter().enumerate() {
                if m[ri].get(f) {
                    v.flip(pc);
                }
            }
            v
        })
        .collect()
}
