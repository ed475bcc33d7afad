//! Constant-time LCA on a rooted tree (Euler tour + sparse-table RMQ).

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lca {
    depth: Vec<usize>,
    first: Vec<usize>,
    euler: Vec<usize>,
    table: Vec<Vec<(usize, usize)>>, // (depth, node) minima
    parent: Vec<Option<usize>>,
}

impl Lca {
    /// `parent[v] = None` exactly for the root.
    pub fn new(parent: &[Option<usize>]) -> Lca {
        let n = parent.len();
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut root = 0;
        for (v, p) in parent.iter().enumerate() {
            match p {
                Some(p) => children[*p].push(v),
                None => root = v,
            }
        }
        let mut depth = vec![0usize; n];
        let mut first = vec![usize::MAX; n];
        let mut euler = Vec::with_capacity(2 * n);
        // iterative euler tour
        let mut stack = vec![(root, 0usize, false)];
        while let Some((v, ci, entered)) = stack.pop() {
            if !entered {
                first[v] = euler.len();
            }
            euler.push(v);
            if ci < children[v].len() {
                let c = children[v][ci];
                depth[c] = depth[v] + 1;
                stack.push((v, ci + 1, true));
                stack.push((c, 0, false));
            }
        }
        let m = euler.len();
        let levels = (usize::BITS - m.leading_zeros()) as usize;
        let mut table = Vec::with_capacity(levels);
        table.push(euler.iter().map(|&v| (depth[v], v)).collect::<Vec<_>>());
        let mut len = 1;
        while 2 * len <= m {
            let prev: &Vec<(usize, usize)> = table.last().unwrap();
            let row: Vec<(usize, usize)> = (0..=m - 2 * len)
                .map(|i| prev[i].min(prev[i + len]))
                .collect();
            table.push(row);
            len *= 2;
        }
        Lca {
            depth,
            first,
            euler,
            table,
            parent: parent.to_vec(),
        }
    }

    pub fn lca(&self, u: usize, v: usize) -> usize {
        let (mut a, mut b) = (self.first[u], self.first[v]);
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        let k = (usize::BITS - 1 - (b - a + 1).leading_zeros()) as usize;
        let x = self.table[k][a];
        let y = self.table[k][b + 1 - (1 << k)];
        x.min(y).1
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.depth[u] + self.depth[v] - 2 * self.depth[self.lca(u, v)]
    }

    /// Is `x` on the tree path between `u` and `v`?
    pub fn on_path(&self, x: usize, u: usize, v: usize) -> bool {
        self.dist(u, x) + self.dist(x, v) == self.dist(u, v)
    }

    pub fn is_ancestor(&self, anc: usize, v: usize) -> bool {
        self.lca(anc, v) == anc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tree() {
        //        0
        //      /   \
        //     1     2
        //    / \     \
        //   3   4     5
        let parent = vec![None, Some(0), Some(0), Some(1), Some(1), Some(2)];
        let lca = Lca::new(&parent);
        assert_eq!(lca.lca(3, 4), 1);
        assert_eq!(lca.lca(3, 5), 0);
        assert_eq!(lca.lca(1, 3), 1);
        assert_eq!(lca.dist(3, 5), 4);
        assert!(lca.on_path(1, 3, 5));
        assert!(!lca.on_path(4, 3, 5));
        assert!(lca.is_ancestor(0, 5));
        assert!(!lca.is_ancestor(1, 5));
    }
}
