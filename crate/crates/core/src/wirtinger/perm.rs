use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

/// A permutation of `0..n`; the product `p * q` applies `q` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if (i as usize) >= images.len() || std::mem::replace(&mut seen[i as usize], true) {
                return None;
            }
        }
        Some(Self(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn compose(&self, q: &Self) -> Self {
        Self(q.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Self(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `self * x * self^-1`.
    pub fn conjugate(&self, x: &Self) -> Self {
        self.compose(x).compose(&self.inverse())
    }

    pub fn power(&self, k: i32) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::identity(self.degree()), |acc, _| acc.compose(&base))
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in non-increasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, num_integer::lcm)
    }
}

impl fmt::Display for Perm {
    /// Cycle notation on `1..n`, fixed points omitted: `(1 2 3)(4 5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<usize>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Partitions of `n` other than `1 + ... + 1`, largest parts first, in
/// decreasing lexicographic order.
pub fn nontrivial_cycle_types(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.retain(|t| t[0] > 1);
    out
}

/// The permutation with cycle type `t` whose cycles are consecutive runs
/// `(1 .. t0)(t0+1 ..)...`.
pub fn class_representative(t: &[usize]) -> Perm {
    let n: usize = t.iter().sum();
    let mut images: Vec<u8> = (0..n as u8).collect();
    let mut start = 0;
    for &len in t {
        for k in 0..len {
            images[start + k] = (start + (k + 1) % len) as u8;
        }
        start += len;
    }
    Perm(images)
}

/// All permutations of the given cycle type, in lexicographic order of
/// their image arrays.
pub fn conjugacy_class(t: &[usize]) -> Vec<Perm> {
    let n: usize = t.iter().sum();
    let mut out = Vec::new();
    let mut images: Vec<u8> = (0..n as u8).collect();
    permute(&mut images, 0, &mut |p| {
        let perm = Perm(p.to_vec());
        if perm.cycle_type() == t {
            out.push(perm);
        }
    });
    out.sort();
    out
}

fn permute(v: &mut [u8], k: usize, f: &mut impl FnMut(&[u8])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// The subgroup generated by `gens`.
pub fn generated_group(gens: &[Perm]) -> Vec<Perm> {
    let n = gens.first().map_or(0, Perm::degree);
    let id = Perm::identity(n);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.compose(&p);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    let mut out: Vec<Perm> = seen.into_iter().collect();
    out.sort();
    out
}

/// A finite group is cyclic iff it has an element whose order is the group
/// order.
pub fn is_cyclic(group: &[Perm]) -> bool {
    group.iter().any(|g| g.order() == group.len())
}
