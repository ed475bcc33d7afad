//! Unit-capacity max-flow on undirected multigraphs (Dinic's algorithm).
//!
//! Each undirected edge carries one unit of capacity in either direction;
//! the computed assignment stores a signed net flow per edge. Deterministic:
//! augmentation follows the edge-list order.

use crate::error::{invalid, Result};
use crate::graph::Multigraph;

#[derive(Debug, Clone)]
pub struct Flow {
    pub value: usize,
    pub source: usize,
    pub sink: usize,
    /// Net flow per edge index: +1 along (u -> v), -1 along (v -> u).
    pub net: Vec<i8>,
}

struct Dinic<'a> {
    g: &'a Multigraph,
    adj: Vec<Vec<(usize, usize)>>,
    net: Vec<i8>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl<'a> Dinic<'a> {
    // residual capacity of edge `ei` when traversed from `from`
    fn residual(&self, ei: usize, from: usize) -> i32 {
        let e = &self.g.edges()[ei];
        if from == e.u {
            1 - self.net[ei] as i32
        } else {
            1 + self.net[ei] as i32
        }
    }

    fn push(&mut self, ei: usize, from: usize) {
        let e = &self.g.edges()[ei];
        self.net[ei] += if from == e.u { 1 } else { -1 };
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(-1);
        self.level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let (ei, w) = self.adj[v][i];
                if self.level[w] < 0 && self.residual(ei, v) > 0 {
                    self.level[w] = self.level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, v: usize, t: usize) -> bool {
        if v == t {
            return true;
        }
        while self.iter[v] < self.adj[v].len() {
            let (ei, w) = self.adj[v][self.iter[v]];
            if self.level[w] == self.level[v] + 1 && self.residual(ei, v) > 0 && self.dfs(w, t) {
                self.push(ei, v);
                return true;
            }
            self.iter[v] += 1;
        }
        false
    }
}

pub fn max_flow(g: &Multigraph, s: usize, t: usize) -> Result<Flow> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(invalid("max-flow endpoints must differ"));
    }
    let mut d = Dinic {
        g,
        adj: g.adjacency(),
        net: vec![0; g.edge_count()],
        level: vec![-1; g.vertex_count()],
        iter: vec![0; g.vertex_count()],
    };
    let mut value = 0;
    while d.bfs(s, t) {
        d.iter.fill(0);
        while d.dfs(s, t) {
            value += 1;
        }
    }
    Ok(Flow {
        value,
        source: s,
        sink: t,
        net: d.net,
    })
}

/// Value of a maximum set of edge-disjoint s-t paths (== mincut value).
pub fn max_flow_value(g: &Multigraph, s: usize, t: usize) -> Result<usize> {
    Ok(max_flow(g, s, t)?.value)
}

/// Vertices reachable from `from` in the residual graph of `flow`.
pub fn residual_reach(g: &Multigraph, flow: &Flow, from: usize) -> Vec<bool> {
    residual_search(g, flow, from, false)
}

/// Vertices that can reach `to` in the residual graph (search on reversed
/// residual arcs).
pub fn residual_coreach(g: &Multigraph, flow: &Flow, to: usize) -> Vec<bool> {
    residual_search(g, flow, to, true)
}

fn residual_search(g: &Multigraph, flow: &Flow, start: usize, reversed: bool) -> Vec<bool> {
    let adj = g.adjacency();
    let mut seen = vec![false; g.vertex_count()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &(ei, w) in &adj[v] {
            if seen[w] {
                continue;
            }
            let e = &g.edges()[ei];
            // residual arc v -> w exists iff capacity in that direction remains
            let cap_vw = if v == e.u {
                1 - flow.net[ei] as i32
            } else {
                1 + flow.net[ei] as i32
            };
            let cap = if reversed {
                // arc w -> v
                2 - cap_vw
            } else {
                cap_vw
            };
            if cap > 0 {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}
