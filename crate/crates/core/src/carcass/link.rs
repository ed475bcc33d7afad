//! The link L(P): the skeleton tree with everything hanging off the path P
//! compressed. Two skeleton nodes are separated by some cut through P iff
//! they land in different link nodes.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

use super::skeleton::{Skeleton, SkNode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Link {
    /// link node per skeleton-tree vertex
    pub node_of_stv: Vec<usize>,
    pub link_count: usize,
    /// position of each link node along the path, where defined: path link
    /// nodes get their path index, petals hanging off a cycle get the
    /// position of that cycle's vertex
    pub position: Vec<usize>,
}

impl Link {
    pub fn node_of(&self, stv: usize) -> usize {
        self.node_of_stv[stv]
    }
}

/// Build L(P) for the path between two cactus nodes.
pub fn build_link(sk: &Skeleton, a: SkNode, b: SkNode) -> Result<Link> {
    if a >= sk.node_count() || b >= sk.node_count() {
        return Err(invalid("link path endpoints must be cactus nodes"));
    }
    let stv_count = sk.node_count() + sk.cycle_count();
    let path = sk.walk_stv_path(a, b);
    let on_path = {
        let mut v = vec![false; stv_count];
        for &x in &path {
            v[x] = true;
        }
        v
    };
    let mut node_of = vec![usize::MAX; stv_count];
    let mut position = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); stv_count];
    for &(u, v) in &sk.tree_edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for c in 0..sk.cycle_count() {
        let cstv = sk.stv_cycle(c);
        for &v in &sk.cycles[c] {
            adj[cstv].push(v);
            adj[v].push(cstv);
        }
    }
    let mut link_count = 0;
    let assign_subtree = |node_of: &mut Vec<usize>, root: usize, id: usize| {
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            if node_of[v] != usize::MAX {
                continue;
            }
            node_of[v] = id;
            for &w in &adj[v] {
                if !on_path[w] && node_of[w] == usize::MAX {
                    stack.push(w);
                }
            }
        }
    };
    for (pi, &v) in path.iter().enumerate() {
        if sk.is_cycle_stv(v) {
            // the cycle vertex is its own link node; every off-path
            // neighbour subtree becomes a petal
            node_of[v] = link_count;
            position.push(pi);
            link_count += 1;
            let nbrs = adj[v].clone();
            for w in nbrs {
                if !on_path[w] && node_of[w] == usize::MAX {
                    let id = link_count;
                    position.push(pi);
                    link_count += 1;
                    assign_subtree(&mut node_of, w, id);
                }
            }
        } else {
            // the node plus everything hanging off it
            let id = link_count;
            position.push(pi);
            link_count += 1;
            node_of[v] = id;
            let nbrs = adj[v].clone();
            for w in nbrs {
                if !on_path[w] && node_of[w] == usize::MAX {
                    assign_subtree(&mut node_of, w, id);
                }
            }
        }
    }
    if node_of.iter().any(|&x| x == usize::MAX) {
        return Err(crate::error::internal("link did not cover the skeleton tree"));
    }
    Ok(Link {
        node_of_stv: node_of,
        link_count,
        position,
    })
}
