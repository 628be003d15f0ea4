/// Union-find over `0..n` that also tracks a parity bit relative to the root,
/// used to carry orientation through identifications.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), parity: vec![false; n], rank: vec![0; n] }
    }

    /// Returns the root of `x` and the parity of `x` relative to it.
    pub fn find(&mut self, x: usize) -> (usize, bool) {
        let mut path = Vec::new();
        let mut cur = x;
        while self.parent[cur] != cur {
            path.push(cur);
            cur = self.parent[cur];
        }
        let root = cur;
        // Compress from the top so each node's parity is relative to the root.
        let mut acc = false;
        for &node in path.iter().rev() {
            acc ^= self.parity[node];
            self.parity[node] = acc;
            self.parent[node] = root;
        }
        (root, if path.is_empty() { false } else { self.parity[x] })
    }

    pub fn root(&mut self, x: usize) -> usize {
        self.find(x).0
    }

    /// Joins `a` and `b` with `parity(a) ^ parity(b) == flip`. Returns `false`
    /// when they were already joined with the opposite parity.
    pub fn union(&mut self, a: usize, b: usize, flip: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == flip;
        }
        let (child, parent) = if self.rank[ra] < self.rank[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[child] = parent;
        self.parity[child] = pa ^ pb ^ flip;
        if self.rank[ra] == self.rank[rb] {
            self.rank[parent] += 1;
        }
        true
    }

    /// Numbers the classes `0..k` in order of their smallest member.
    pub fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut id_of_root = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut next = 0;
        for x in 0..n {
            let r = self.root(x);
            if id_of_root[r] == usize::MAX {
                id_of_root[r] = next;
                next += 1;
            }
            out[x] = id_of_root[r];
        }
        (out, next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_is_tracked_through_chains() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 1, true));
        assert!(uf.union(1, 2, true));
        assert!(uf.union(3, 2, false));
        let (r0, p0) = uf.find(0);
        let (r2, p2) = uf.find(2);
        let (r3, p3) = uf.find(3);
        assert_eq!(r0, r2);
        assert_eq!(r0, r3);
        assert_eq!(p0 ^ p2, false);
        assert_eq!(p2 ^ p3, false);
        assert!(!uf.union(0, 2, true));
        let (ids, k) = uf.classes();
        assert_eq!(k, 2);
        assert_eq!(ids, vec![0, 0, 0, 0, 1]);
    }
}
