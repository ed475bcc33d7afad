//! The hierarchy tree: a rooted tree whose leaves are the graph vertices
//! and whose internal nodes carry Steiner mincut values. Built from the
//! Gomory-Hu tree by repeatedly removing all minimum-weight edges; the
//! value at the LCA of two leaves is their pairwise mincut value.

use serde::{Deserialize, Serialize};

use crate::error::{internal, invalid, Result};
use crate::gomory_hu::GomoryHuTree;
use crate::lca::Lca;

pub type HNode = usize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HierarchyNode {
    pub parent: Option<HNode>,
    pub children: Vec<HNode>,
    /// Steiner mincut value of the leaf set below; None for leaves.
    pub val: Option<usize>,
    /// The graph vertex, for leaves.
    pub vertex: Option<usize>,
    /// Sorted leaf set S(node).
    pub steiner: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HierarchyTree {
    nodes: Vec<HierarchyNode>,
    root: HNode,
    leaf_of: Vec<HNode>,
    lca: Lca,
    /// jump[k][v] = 2^k-th ancestor
    jump: Vec<Vec<HNode>>,
}

impl HierarchyTree {
    pub fn build(ght: &GomoryHuTree) -> Result<HierarchyTree> {
        let n = ght.vertex_count();
        let mut nodes: Vec<HierarchyNode> = Vec::new();
        // recursion over (vertices, remaining GH edges)
        fn construct(
            verts: Vec<usize>,
            edges: Vec<(usize, usize, usize)>,
            nodes: &mut Vec<HierarchyNode>,
        ) -> Result<HNode> {
            if verts.len() == 1 {
                nodes.push(HierarchyNode {
                    parent: None,
                    children: Vec::new(),
                    val: None,
                    vertex: Some(verts[0]),
                    steiner: verts,
                });
                return Ok(nodes.len() - 1);
            }
            let c_min = edges.iter().map(|e| e.2).min().ok_or_else(|| internal("tree/vertex mismatch"))?;
            // components after removing every minimum-weight edge
            let mut idx = std::collections::HashMap::new();
            for (i, &v) in verts.iter().enumerate() {
                idx.insert(v, i);
            }
            let mut dsu: Vec<usize> = (0..verts.len()).collect();
            fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
                if dsu[x] != x {
                    let r = find(dsu, dsu[x]);
                    dsu[x] = r;
                }
                dsu[x]
            }
            for &(u, v, w) in &edges {
                if w > c_min {
                    let (a, b) = (find(&mut dsu, idx[&u]), find(&mut dsu, idx[&v]));
                    dsu[a] = b;
                }
            }
            let mut groups: std::collections::BTreeMap<usize, (Vec<usize>, Vec<(usize, usize, usize)>)> =
                std::collections::BTreeMap::new();
            for &v in &verts {
                groups.entry(find(&mut dsu, idx[&v])).or_default().0.push(v);
            }
            for &(u, v, w) in &edges {
                if w > c_min {
                    groups.get_mut(&find(&mut dsu, idx[&u])).unwrap().1.push((u, v, w));
                }
            }
            let me = nodes.len();
            nodes.push(HierarchyNode {
                parent: None,
                children: Vec::new(),
                val: Some(c_min),
                vertex: None,
                steiner: {
                    let mut s = verts.clone();
                    s.sort_unstable();
                    s
                },
            });
            let mut children = Vec::new();
            for (_, (vs, es)) in groups {
                let c = construct(vs, es, nodes)?;
                nodes[c].parent = Some(me);
                children.push(c);
            }
            if children.len() < 2 {
                return Err(internal("hierarchy node with a single child"));
            }
            nodes[me].children = children;
            Ok(me)
        }
        let root = construct((0..n).collect(), ght.edges().to_vec(), &mut nodes)?;

        let mut leaf_of = vec![usize::MAX; n];
        for (i, nd) in nodes.iter().enumerate() {
            if let Some(v) = nd.vertex {
                leaf_of[v] = i;
            }
        }
        let parents: Vec<Option<usize>> = nodes.iter().map(|nd| nd.parent).collect();
        let lca = Lca::new(&parents);
        // binary lifting for level ancestors
        let levels = (usize::BITS - nodes.len().leading_zeros()) as usize;
        let mut jump = Vec::with_capacity(levels);
        jump.push(
            nodes
                .iter()
                .enumerate()
                .map(|(i, nd)| nd.parent.unwrap_or(i))
                .collect::<Vec<_>>(),
        );
        for k in 1..levels {
            let prev: &Vec<usize> = &jump[k - 1];
            jump.push(prev.iter().map(|&p| prev[p]).collect());
        }
        Ok(HierarchyTree {
            nodes,
            root,
            leaf_of,
            lca,
            jump,
        })
    }

    pub fn root(&self) -> HNode {
        self.root
    }

    pub fn node(&self, x: HNode) -> &HierarchyNode {
        &self.nodes[x]
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn leaf_of(&self, vertex: usize) -> HNode {
        self.leaf_of[vertex]
    }

    pub fn is_leaf(&self, x: HNode) -> bool {
        self.nodes[x].vertex.is_some()
    }

    pub fn depth(&self, x: HNode) -> usize {
        self.lca.depth(x)
    }

    pub fn lca_nodes(&self, a: HNode, b: HNode) -> HNode {
        self.lca.lca(a, b)
    }

    /// LCA of two vertices (as hierarchy node).
    pub fn lca_vertices(&self, s: usize, t: usize) -> HNode {
        self.lca.lca(self.leaf_of[s], self.leaf_of[t])
    }

    /// Ancestor of `x` at the given depth (level-ancestor query).
    pub fn ancestor_at_depth(&self, x: HNode, depth: usize) -> HNode {
        let mut v = x;
        let mut diff = self.lca.depth(x).saturating_sub(depth);
        let mut k = 0;
        while diff > 0 {
            if diff & 1 == 1 {
                v = self.jump[k][v];
            }
            diff >>= 1;
            k += 1;
        }
        v
    }

    /// Child of ancestor `mu` on the path toward leaf-descendant `x`.
    pub fn child_toward(&self, mu: HNode, x: HNode) -> HNode {
        self.ancestor_at_depth(x, self.lca.depth(mu) + 1)
    }

    /// Internal nodes in root-first (BFS) order.
    pub fn internal_nodes(&self) -> Vec<HNode> {
        let mut out = Vec::new();
        let mut queue = std::collections::VecDeque::from([self.root]);
        while let Some(v) = queue.pop_front() {
            if !self.is_leaf(v) {
                out.push(v);
                for &c in &self.nodes[v].children {
                    queue.push_back(c);
                }
            }
        }
        out
    }

    /// val(LCA(s,t)) == c_{s,t}.
    pub fn lookup_mincut_value(&self, s: usize, t: usize) -> Result<usize> {
        if s == t {
            return Err(invalid("endpoints must differ"));
        }
        if s >= self.leaf_of.len() || t >= self.leaf_of.len() {
            return Err(invalid("vertex out of range"));
        }
        let mu = self.lca_vertices(s, t);
        self.nodes[mu]
            .val
            .ok_or_else(|| internal("LCA of distinct vertices is a leaf"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flow::max_flow_value;
    use crate::gen::fixtures;

    #[test]
    fn c4_hierarchy_is_flat() {
        let ght = GomoryHuTree::build(&fixtures::c4()).unwrap();
        let h = HierarchyTree::build(&ght).unwrap();
        let root = h.node(h.root());
        assert_eq!(root.val, Some(2));
        assert_eq!(root.children.len(), 4);
        assert!(root.children.iter().all(|&c| h.is_leaf(c)));
    }

    #[test]
    fn tb_hierarchy_two_levels() {
        let ght = GomoryHuTree::build(&fixtures::tb()).unwrap();
        let h = HierarchyTree::build(&ght).unwrap();
        let root = h.node(h.root());
        assert_eq!(root.val, Some(1));
        assert_eq!(root.children.len(), 2);
        for &c in &root.children {
            let child = h.node(c);
            assert_eq!(child.val, Some(2));
            assert_eq!(child.children.len(), 3);
            assert_eq!(child.steiner.len(), 3);
        }
    }

    #[test]
    fn k2_single_root() {
        let ght = GomoryHuTree::build(&fixtures::k2()).unwrap();
        let h = HierarchyTree::build(&ght).unwrap();
        assert_eq!(h.node(h.root()).val, Some(1));
        assert_eq!(h.node(h.root()).children.len(), 2);
    }

    #[test]
    fn lookup_examples() {
        let h = HierarchyTree::build(&GomoryHuTree::build(&fixtures::c4()).unwrap()).unwrap();
        assert_eq!(h.lookup_mincut_value(0, 2).unwrap(), 2);
        let h = HierarchyTree::build(&GomoryHuTree::build(&fixtures::tb()).unwrap()).unwrap();
        assert_eq!(h.lookup_mincut_value(0, 4).unwrap(), 1); // a1, b2
        assert_eq!(h.lookup_mincut_value(0, 1).unwrap(), 2); // a1, a2
        assert!(h.lookup_mincut_value(1, 1).is_err());
    }

    #[test]
    fn hierarchy_agrees_with_flow_everywhere() {
        for g in crate::gen::corpus(29, 40, 3, 12) {
            let h = HierarchyTree::build(&GomoryHuTree::build(&g).unwrap()).unwrap();
            let n = g.vertex_count();
            for s in 0..n {
                for t in s + 1..n {
                    assert_eq!(
                        h.lookup_mincut_value(s, t).unwrap(),
                        max_flow_value(&g, s, t).unwrap()
                    );
                }
            }
            // structural invariants: >= 2 children, strictly increasing values
            for x in h.internal_nodes() {
                let nd = h.node(x);
                assert!(nd.children.len() >= 2);
                for &c in &nd.children {
                    if let Some(cv) = h.node(c).val {
                        assert!(cv > nd.val.unwrap());
                    }
                }
            }
            // edge-weight accounting: sum over hierarchy edges of parent
            // vals is at most 4m
            let total: usize = h
                .internal_nodes()
                .iter()
                .map(|&x| h.node(x).val.unwrap() * h.node(x).children.len())
                .sum();
            assert!(total <= 4 * g.edge_count());
        }
    }

    #[test]
    fn level_ancestors() {
        let h = HierarchyTree::build(&GomoryHuTree::build(&fixtures::tb()).unwrap()).unwrap();
        let leaf = h.leaf_of(4); // b2
        let root = h.root();
        assert_eq!(h.ancestor_at_depth(leaf, 0), root);
        let mid = h.child_toward(root, leaf);
        assert_eq!(h.node(mid).val, Some(2));
        assert!(h.node(mid).steiner.contains(&4));
    }
}
