use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Stable identifier of an edge. Ids survive contraction: a quotient graph
/// keeps the ids of its surviving edges.
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }
}

/// Undirected unweighted multigraph without self-loops.
///
/// Parallel edges are allowed and are distinguished by their [`EdgeId`].
/// Each vertex carries the set of *original* vertices it stands for, so a
/// quotient graph produced by [`Multigraph::contract`] remembers where its
/// vertices came from. Immutable after construction; modified variants are
/// built as fresh copies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
    /// origins[v] = sorted original vertices merged into v.
    origins: Vec<Vec<usize>>,
}

impl Multigraph {
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for (id, &(u, v)) in pairs.iter().enumerate() {
            if u >= n || v >= n {
                return Err(invalid(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(invalid(format!("self-loop at vertex {u}")));
            }
            edges.push(Edge { id, u, v });
        }
        Ok(Multigraph {
            n,
            edges,
            origins: (0..n).map(|v| vec![v]).collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    /// Original vertices represented by current vertex `v`.
    pub fn origins(&self, v: usize) -> &[usize] {
        &self.origins[v]
    }

    /// Number of original vertices (same as `vertex_count` on a base graph).
    pub fn origin_count(&self) -> usize {
        self.origins.iter().map(|s| s.len()).sum()
    }

    /// Current vertex holding original vertex `o`, if any.
    pub fn vertex_of_origin(&self, o: usize) -> Option<usize> {
        self.origins.iter().position(|s| s.binary_search(&o).is_ok())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    /// Adjacency as (edge index into `edges`, neighbor) per vertex.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.u].push((i, e.v));
            adj[e.v].push((i, e.u));
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut cnt = 1;
        while let Some(v) = stack.pop() {
            for &(_, w) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    cnt += 1;
                    stack.push(w);
                }
            }
        }
        cnt == self.n
    }

    /// Number of edges crossing the bipartition (side, complement), with
    /// multiplicity.
    pub fn cut_value(&self, side: &BTreeSet<usize>) -> Result<usize> {
        if side.is_empty() || side.len() >= self.n {
            return Err(invalid("cut side must be nonempty and proper"));
        }
        if let Some(&v) = side.iter().find(|&&v| v >= self.n) {
            return Err(invalid(format!("vertex {v} out of range")));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| side.contains(&e.u) != side.contains(&e.v))
            .count())
    }

    /// Quotient graph: each group is merged into one vertex, self-loops
    /// created by the merge are dropped, surviving edges keep their ids and
    /// origin sets compose. Vertices not mentioned stay as singletons.
    ///
    /// New vertex ids are assigned by ascending smallest member id.
    pub fn contract(&self, groups: &[BTreeSet<usize>]) -> Result<Multigraph> {
        let mut owner = vec![usize::MAX; self.n];
        for (gi, g) in groups.iter().enumerate() {
            for &v in g {
                if v >= self.n {
                    return Err(invalid(format!("vertex {v} out of range")));
                }
                if owner[v] != usize::MAX {
                    return Err(invalid("contraction groups overlap"));
                }
                owner[v] = gi;
            }
        }
        // representatives: min member per merged block, vertex itself otherwise
        let mut blocks: Vec<Vec<usize>> = groups.iter().map(|g| g.iter().copied().collect()).collect();
        for v in 0..self.n {
            if owner[v] == usize::MAX {
                blocks.push(vec![v]);
            }
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_by_key(|b| b[0]);
        let mut new_id = vec![usize::MAX; self.n];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                new_id[v] = i;
            }
        }
        let mut origins: Vec<Vec<usize>> = vec![Vec::new(); blocks.len()];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                origins[i].extend_from_slice(&self.origins[v]);
            }
            origins[i].sort_unstable();
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                let (u, v) = (new_id[e.u], new_id[e.v]);
                (u != v).then_some(Edge { id: e.id, u, v })
            })
            .collect();
        Ok(Multigraph {
            n: blocks.len(),
            edges,
            origins,
        })
    }

    /// Copy with one edge removed (for the reference oracle).
    pub fn without_edge(&self, id: EdgeId) -> Result<Multigraph> {
        let mut g = self.clone();
        let before = g.edges.len();
        g.edges.retain(|e| e.id != id);
        if g.edges.len() == before {
            return Err(invalid(format!("no edge with id {id}")));
        }
        Ok(g)
    }

    /// Copy with an extra (u,v) edge appended (fresh id).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Multigraph> {
        if u >= self.n || v >= self.n {
            return Err(invalid("vertex out of range"));
        }
        if u == v {
            return Err(invalid("self-loop"));
        }
        let mut g = self.clone();
        let id = g.edges.iter().map(|e| e.id + 1).max().unwrap_or(0);
        g.edges.push(Edge { id, u, v });
        Ok(g)
    }

    /// Find an edge id connecting u and v, if one exists.
    pub fn find_edge(&self, u: usize, v: usize) -> Option<EdgeId> {
        self.edges
            .iter()
            .find(|e| (e.u == u && e.v == v) || (e.u == v && e.v == u))
            .map(|e| e.id)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(invalid(format!("vertex {v} out of range for n={}", self.n)));
        }
        Ok(())
    }
}

/// A cut presented as one side of the bipartition plus its value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cut {
    /// One side of the bipartition, in *original* vertex ids.
    pub side: BTreeSet<usize>,
    pub value: usize,
}

impl Cut {
    pub fn new(side: BTreeSet<usize>, value: usize) -> Self {
        Cut { side, value }
    }

    /// Side containing `v`, as a sorted vector (canonical print form).
    pub fn side_containing(&self, v: usize, universe: usize) -> Vec<usize> {
        if self.side.contains(&v) {
            self.side.iter().copied().collect()
        } else {
            (0..universe).filter(|u| !self.side.contains(u)).collect()
        }
    }

    pub fn separates(&self, x: usize, y: usize) -> bool {
        self.side.contains(&x) != self.side.contains(&y)
    }
}

pub(crate) fn err_if(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Err(Error::InvalidArgument(msg.to_string()))
    } else {
        Ok(())
    }
}
