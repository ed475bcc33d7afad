//! Proper paths in the cactus, realized as skeleton-tree paths between
//! cactus nodes. All decision queries are O(1) LCA arithmetic; the walking
//! helpers are construction/reporting utilities.

use serde::{Deserialize, Serialize};

use crate::error::{internal, Result};

use super::skeleton::{Skeleton, SkNode, StructEdge};

/// A path between two cactus nodes, stored by its endpoints (the tree path
/// between them is unique). For stretched-unit projections the path is
/// proper: it uses at most one structural edge per cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ProperPath {
    pub a: SkNode,
    pub b: SkNode,
}

impl ProperPath {
    pub fn new(a: SkNode, b: SkNode) -> Self {
        ProperPath {
            a: a.min(b),
            b: a.max(b),
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn endpoints(&self) -> (SkNode, SkNode) {
        (self.a, self.b)
    }
}

impl Skeleton {
    /// The vertex of the tree path x..y closest to z.
    pub fn median(&self, x: usize, y: usize, z: usize) -> usize {
        let a = self.lca.lca(x, y);
        let b = self.lca.lca(x, z);
        let c = self.lca.lca(y, z);
        let mut best = a;
        for v in [b, c] {
            if self.lca.depth(v) > self.lca.depth(best) {
                best = v;
            }
        }
        best
    }

    /// Shared segment of two tree paths, as its two endpoint vertices.
    pub fn shared_segment(&self, p1: (usize, usize), p2: (usize, usize)) -> Option<(usize, usize)> {
        let u = self.median(p1.0, p1.1, p2.0);
        let v = self.median(p1.0, p1.1, p2.1);
        if self.lca.on_path(u, p2.0, p2.1) && self.lca.on_path(v, p2.0, p2.1) {
            Some((u, v))
        } else {
            None
        }
    }

    /// Do two paths intersect at a tree edge or a cycle? (Both arguments
    /// are node-to-node paths.) Degenerate single-node sharing at a
    /// non-cycle vertex does not count.
    pub fn paths_intersect(&self, p1: (SkNode, SkNode), p2: (SkNode, SkNode)) -> bool {
        match self.shared_segment(p1, p2) {
            None => false,
            Some((u, v)) => u != v || self.is_cycle_stv(u),
        }
    }

    /// Does the tree path a..b pass through skeleton-tree vertex `stv` as an
    /// intermediate vertex?
    pub fn path_passes(&self, p: (usize, usize), stv: usize) -> bool {
        stv != p.0 && stv != p.1 && self.lca.on_path(stv, p.0, p.1)
    }

    /// Crossing positions of a cycle vertex on the path (entry toward p.0,
    /// exit toward p.1).
    pub fn crossing_positions(&self, p: (usize, usize), cstv: usize) -> Option<(usize, usize)> {
        if !self.path_passes(p, cstv) {
            return None;
        }
        let cy = self.cycle_of_stv(cstv);
        let n_in = self.neighbor_toward(cstv, p.0);
        let n_out = self.neighbor_toward(cstv, p.1);
        Some((
            self.pos_in_cycle(cy, n_in).expect("cycle neighbor"),
            self.pos_in_cycle(cy, n_out).expect("cycle neighbor"),
        ))
    }

    /// Is structural edge `e` on the *proper* path p? For a cycle edge this
    /// requires the path to cross the cycle at exactly that edge.
    pub fn path_contains_struct_edge(&self, p: (SkNode, SkNode), e: StructEdge) -> bool {
        match e {
            StructEdge::Tree(i) => {
                let (u, v) = self.tree_edges[i];
                self.lca.on_path(u, p.0, p.1)
                    && self.lca.on_path(v, p.0, p.1)
                    && (self.st_parent(u) == Some(v) || self.st_parent(v) == Some(u))
            }
            StructEdge::Cyc { cycle, pos } => {
                let cstv = self.stv_cycle(cycle);
                let Some((i, o)) = self.crossing_positions(p, cstv) else {
                    return false;
                };
                let len = self.cycles[cycle].len();
                // proper crossing uses the single edge between adjacent
                // positions
                let crossing = if (i + 1) % len == o {
                    Some(i)
                } else if (o + 1) % len == i {
                    Some(o)
                } else {
                    None
                };
                crossing == Some(pos)
            }
        }
    }

    /// Does the proper path `p` meet the cut (share a structural edge)?
    pub fn path_meets_cut(&self, p: (SkNode, SkNode), cut: super::skeleton::SkeletonCut) -> bool {
        cut.struct_edges()
            .into_iter()
            .any(|e| self.path_contains_struct_edge(p, e))
    }

    /// Extend the directed proper path (a -> b) to a proper path with it as
    /// prefix and `p2` as suffix; returns the composed endpoints (a, end).
    /// `p2`'s orientation is free, and an uncovered middle segment is
    /// allowed as long as the composition stays proper.
    pub fn extend_directed(
        &self,
        a: SkNode,
        b: SkNode,
        p2: (SkNode, SkNode),
    ) -> Option<(SkNode, SkNode)> {
        for (c, d) in [(p2.0, p2.1), (p2.1, p2.0)] {
            if self.lca.on_path(b, a, d) && self.lca.on_path(c, a, d) && self.path_is_proper_fast(a, d) {
                return Some((a, d));
            }
        }
        None
    }

    /// Skeleton-tree vertices along the path x..y, in order (walking
    /// helper).
    pub fn walk_stv_path(&self, x: usize, y: usize) -> Vec<usize> {
        let l = self.lca.lca(x, y);
        let mut front = Vec::new();
        let mut v = x;
        while v != l {
            front.push(v);
            v = self.st_parent(v).expect("reached root before lca");
        }
        front.push(l);
        let mut back = Vec::new();
        let mut v = y;
        while v != l {
            back.push(v);
            v = self.st_parent(v).expect("reached root before lca");
        }
        front.extend(back.into_iter().rev());
        front
    }

    /// Structural edges of the proper path a..b, in order; errors if the
    /// tree path crosses some cycle at non-adjacent positions (not proper).
    pub fn walk_struct_edges(&self, a: SkNode, b: SkNode) -> Result<Vec<StructEdge>> {
        let stvs = self.walk_stv_path(a, b);
        let mut out = Vec::new();
        let tree_idx: std::collections::HashMap<(SkNode, SkNode), usize> = self
            .tree_edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| ((u.min(v), u.max(v)), i))
            .collect();
        let mut i = 0;
        while i + 1 < stvs.len() {
            let cur = stvs[i];
            let nxt = stvs[i + 1];
            if self.is_cycle_stv(nxt) {
                let cy = self.cycle_of_stv(nxt);
                let exit = stvs[i + 2];
                let len = self.cycles[cy].len();
                let p_in = self.pos_in_cycle(cy, cur).ok_or_else(|| internal("bad cycle entry"))?;
                let p_out = self.pos_in_cycle(cy, exit).ok_or_else(|| internal("bad cycle exit"))?;
                let pos = if (p_in + 1) % len == p_out {
                    p_in
                } else if (p_out + 1) % len == p_in {
                    p_out
                } else {
                    return Err(internal("path crosses a cycle at non-adjacent positions"));
                };
                out.push(StructEdge::Cyc { cycle: cy, pos });
                i += 2;
            } else {
                let key = (cur.min(nxt), cur.max(nxt));
                let idx = *tree_idx.get(&key).ok_or_else(|| internal("missing tree edge"))?;
                out.push(StructEdge::Tree(idx));
                i += 1;
            }
        }
        Ok(out)
    }

    /// Proper-path check by walking (validation helper).
    pub fn path_is_proper(&self, a: SkNode, b: SkNode) -> bool {
        self.walk_struct_edges(a, b).is_ok()
    }

    /// All skeleton cuts separating two cactus nodes, ordered along the
    /// path from `ns`: one cut per tree edge, and per crossed cycle every
    /// edge pair with exactly one edge in each arc.
    pub fn cuts_separating(&self, ns: SkNode, nt: SkNode) -> Result<Vec<super::skeleton::SkeletonCut>> {
        use super::skeleton::SkeletonCut;
        let stvs = self.walk_stv_path(ns, nt);
        let tree_idx: std::collections::HashMap<(SkNode, SkNode), usize> = self
            .tree_edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| ((u.min(v), u.max(v)), i))
            .collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i + 1 < stvs.len() {
            let cur = stvs[i];
            let nxt = stvs[i + 1];
            if self.is_cycle_stv(nxt) {
                let cy = self.cycle_of_stv(nxt);
                let exit = stvs[i + 2];
                let len = self.cycles[cy].len();
                let p_in = self.pos_in_cycle(cy, cur).ok_or_else(|| internal("cycle entry"))?;
                let p_out = self.pos_in_cycle(cy, exit).ok_or_else(|| internal("cycle exit"))?;
                // removing edges k1 < k2 leaves arcs {k1+1..k2} and the
                // rest; the cut separates the crossing iff the positions
                // straddle
                let in_arc = |k1: usize, k2: usize, p: usize| {
                    let mut q = (k1 + 1) % len;
                    loop {
                        if q == p {
                            return true;
                        }
                        if q == k2 {
                            return false;
                        }
                        q = (q + 1) % len;
                    }
                };
                for k1 in 0..len {
                    for k2 in k1 + 1..len {
                        if in_arc(k1, k2, p_in) != in_arc(k1, k2, p_out) {
                            out.push(SkeletonCut::CyclePair { cycle: cy, p1: k1, p2: k2 });
                        }
                    }
                }
                i += 2;
            } else {
                let key = (cur.min(nxt), cur.max(nxt));
                let idx = *tree_idx.get(&key).ok_or_else(|| internal("missing tree edge"))?;
                out.push(SkeletonCut::Tree(idx));
                i += 1;
            }
        }
        Ok(out)
    }
}
