//! Gomory-Hu tree via the classical split-and-contract construction.
//!
//! The tree is a genuine cut tree: each tree edge's bipartition (the two
//! components after removing the edge) is a minimum cut between its
//! endpoints in the original graph, and the minimum edge weight on the
//! tree path between any s and t equals the (s,t)-mincut value.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{internal, Error, Result};
use crate::flow::{max_flow, residual_reach};
use crate::graph::Multigraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GomoryHuTree {
    n: usize,
    /// (u, v, weight) tree edges.
    edges: Vec<(usize, usize, usize)>,
}

impl GomoryHuTree {
    pub fn build(g: &Multigraph) -> Result<GomoryHuTree> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = g.vertex_count();
        // supernodes of the partially built tree; tree edges reference
        // supernode indices and carry weights
        let mut supers: Vec<Vec<usize>> = vec![(0..n).collect()];
        let mut tree: Vec<(usize, usize, usize)> = Vec::new();
        loop {
            let Some(xi) = supers.iter().position(|s| s.len() >= 2) else {
                break;
            };
            let (s, t) = (supers[xi][0], supers[xi][1]);

            // contract every subtree hanging off supernode xi
            let adj = tree_adjacency(supers.len(), &tree);
            let comp = components_without(supers.len(), &adj, xi);
            let mut groups: Vec<BTreeSet<usize>> = Vec::new();
            let mut group_of_comp = std::collections::HashMap::new();
            for (si, sup) in supers.iter().enumerate() {
                if si == xi {
                    continue;
                }
                let c = comp[si];
                let gi = *group_of_comp.entry(c).or_insert_with(|| {
                    groups.push(BTreeSet::new());
                    groups.len() - 1
                });
                groups[gi].extend(sup.iter().copied());
            }
            let q = g.contract(&groups)?;
            let qs = q.vertex_of_origin(s).ok_or_else(|| internal("lost vertex"))?;
            let qt = q.vertex_of_origin(t).ok_or_else(|| internal("lost vertex"))?;
            let flow = max_flow(&q, qs, qt)?;
            let reach = residual_reach(&q, &flow, qs);

            // split xi along the minimal s-side
            let (mut xs, mut xt) = (Vec::new(), Vec::new());
            for &v in &supers[xi] {
                let qv = q.vertex_of_origin(v).ok_or_else(|| internal("lost vertex"))?;
                if reach[qv] {
                    xs.push(v);
                } else {
                    xt.push(v);
                }
            }
            if xs.is_empty() || xt.is_empty() {
                return Err(internal("degenerate gomory-hu split"));
            }
            let ti = supers.len();
            supers[xi] = xs;
            supers.push(xt);
            // reattach old edges of xi by cut side
            for e in tree.iter_mut() {
                let (a, b, _) = *e;
                if a != xi && b != xi {
                    continue;
                }
                let nb = if a == xi { b } else { a };
                let rep = supers[nb][0];
                let qrep = q.vertex_of_origin(rep).ok_or_else(|| internal("lost vertex"))?;
                if !reach[qrep] {
                    if a == xi {
                        e.0 = ti;
                    } else {
                        e.1 = ti;
                    }
                }
            }
            tree.push((xi, ti, flow.value));
        }
        // supernodes are singletons now; translate to vertex ids
        let rep: Vec<usize> = supers.iter().map(|s| s[0]).collect();
        let mut edges: Vec<(usize, usize, usize)> = tree
            .into_iter()
            .map(|(a, b, w)| {
                let (u, v) = (rep[a], rep[b]);
                (u.min(v), u.max(v), w)
            })
            .collect();
        edges.sort_unstable();
        Ok(GomoryHuTree { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn weight_sum(&self) -> usize {
        self.edges.iter().map(|e| e.2).sum()
    }

    /// Minimum edge weight on the tree path s..t (== mincut value).
    pub fn path_min(&self, s: usize, t: usize) -> Result<usize> {
        if s == t {
            return Err(crate::error::invalid("endpoints must differ"));
        }
        // BFS on the tree tracking the bottleneck
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n];
        for &(u, v, w) in &self.edges {
            adj[u].push((v, w));
            adj[v].push((u, w));
        }
        let mut best = vec![usize::MAX; self.n];
        let mut seen = vec![false; self.n];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &(w, wt) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    best[w] = best[v].min(wt);
                    stack.push(w);
                }
            }
        }
        if !seen[t] {
            return Err(internal("gomory-hu tree is disconnected"));
        }
        Ok(best[t])
    }
}

fn tree_adjacency(n: usize, edges: &[(usize, usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v, _) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Component index per node after deleting node `skip`.
fn components_without(n: usize, adj: &[Vec<usize>], skip: usize) -> Vec<usize> {
    let mut comp = vec![usize::MAX; n];
    let mut c = 0;
    for start in 0..n {
        if start == skip || comp[start] != usize::MAX {
            continue;
        }
        comp[start] = c;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if w != skip && comp[w] == usize::MAX {
                    comp[w] = c;
                    stack.push(w);
                }
            }
        }
        c += 1;
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flow::max_flow_value;
    use crate::gen::fixtures;

    #[test]
    fn tree_input_stays_a_tree() {
        let p4 = fixtures::p4();
        let ght = GomoryHuTree::build(&p4).unwrap();
        assert_eq!(ght.edges().len(), 3);
        assert!(ght.edges().iter().all(|e| e.2 == 1));
    }

    #[test]
    fn c4_all_weights_two() {
        let c4 = fixtures::c4();
        let ght = GomoryHuTree::build(&c4).unwrap();
        assert_eq!(ght.edges().len(), 3);
        assert!(ght.edges().iter().all(|e| e.2 == 2));
    }

    #[test]
    fn tb_bridge_weight_one() {
        let tb = fixtures::tb();
        let ght = GomoryHuTree::build(&tb).unwrap();
        let weights: Vec<usize> = ght.edges().iter().map(|e| e.2).collect();
        assert_eq!(weights.iter().filter(|&&w| w == 1).count(), 1);
        assert_eq!(weights.iter().filter(|&&w| w == 2).count(), 4);
    }

    #[test]
    fn disconnected_rejected() {
        let g = Multigraph::new(3, &[(0, 1)]).unwrap();
        assert!(GomoryHuTree::build(&g).is_err());
    }

    #[test]
    fn path_min_equals_max_flow_on_corpus() {
        let mut graphs: Vec<Multigraph> = fixtures::all().into_iter().map(|(_, g)| g).collect();
        graphs.extend(crate::gen::corpus(23, 40, 3, 12));
        for g in &graphs {
            let ght = GomoryHuTree::build(g).unwrap();
            let n = g.vertex_count();
            for s in 0..n {
                for t in s + 1..n {
                    assert_eq!(
                        ght.path_min(s, t).unwrap(),
                        max_flow_value(g, s, t).unwrap(),
                        "graph {g:?} pair ({s},{t})"
                    );
                }
            }
            // weight bound: m <= sum of weights <= 2m
            let w = ght.weight_sum();
            assert!(g.edge_count() <= w && w <= 2 * g.edge_count());
        }
    }
}
