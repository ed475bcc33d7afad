//! Strips derived from the stored carcass: the strip of one skeleton cut's
//! subbunch, and the full (s,t)-strip for Steiner s,t assembled through the
//! link (no flow computation involved).

use std::collections::HashMap;

use crate::error::{internal, invalid, Result};
use crate::graph::Multigraph;
use crate::strip::{Strip, StripEdge};

use super::link::build_link;
use super::project::Placement;
use super::skeleton::SkeletonCut;
use super::Carcass;

impl Carcass {
    /// Strip of the subbunch at a skeleton cut: terminal units merged into
    /// source/sink per the cut sides, free stretched units kept as
    /// non-terminals. Built as a quotient of the stored bunch strip.
    pub fn strip_for_skeleton_cut(&self, cut: SkeletonCut) -> Result<Strip> {
        let &sub_idx = self
            .cut_to_sub
            .get(&cut)
            .ok_or_else(|| invalid(format!("no subbunch at cut {cut:?}")))?;
        self.subbunch_strip(sub_idx)
    }

    pub(crate) fn subbunch_strip(&self, sub_idx: usize) -> Result<Strip> {
        let sub = &self.subbunches[sub_idx];
        let bunch = &self.bunches[sub.bunch];
        let strip = &bunch.strip;
        // map each bunch-strip node to: 0 = near-merged, 1 = far-merged,
        // or its own part (free units)
        let mut part_of_node: Vec<Option<usize>> = vec![None; strip.node_count()];
        let mut parts: Vec<(Vec<usize>, Vec<usize>)> = vec![(Vec::new(), Vec::new()), (Vec::new(), Vec::new())];
        let mut free_nodes: Vec<usize> = Vec::new();
        for (u, pl) in sub.placement.iter().enumerate() {
            let n = self.unit_node_in_bunch[sub.bunch][u];
            match pl {
                Placement::Near => {
                    if part_of_node[n].is_none() {
                        part_of_node[n] = Some(0);
                    }
                }
                Placement::Far => {
                    if part_of_node[n].is_none() {
                        part_of_node[n] = Some(1);
                    }
                }
                Placement::Free => {
                    if part_of_node[n].is_none() {
                        free_nodes.push(n);
                        part_of_node[n] = Some(usize::MAX); // placeholder
                    }
                }
            }
        }
        free_nodes.sort_unstable();
        for (i, &n) in free_nodes.iter().enumerate() {
            part_of_node[n] = Some(2 + i);
            parts.push((Vec::new(), Vec::new()));
        }
        for n in 0..strip.node_count() {
            let p = part_of_node[n].ok_or_else(|| internal("strip node without units"))?;
            parts[p].0.extend(strip.members(n).iter().copied());
            parts[p].1.extend(strip.origin_members(n).iter().copied());
        }
        let cross: Vec<StripEdge> = strip
            .cross_edges()
            .iter()
            .filter_map(|e| {
                let (f, t) = (part_of_node[e.from].unwrap(), part_of_node[e.to].unwrap());
                (f != t).then_some(StripEdge { id: e.id, from: f, to: t })
            })
            .collect();
        Strip::from_parts(
            strip.value(),
            strip.s_vertex(),
            strip.t_vertex(),
            bunch.quotient.vertex_count(),
            parts,
            0,
            1,
            cross,
        )
    }

    /// The full (s,t)-strip for Steiner vertices s,t with c(s,t) = c_S,
    /// assembled from the skeleton, projections and stored bunch strips via
    /// the link of the path between the nodes of s and t.
    pub fn steiner_strip(&self, g: &Multigraph, s: usize, t: usize) -> Result<Strip> {
        let us = self.units.unit_of[s];
        let ut = self.units.unit_of[t];
        if us == ut {
            return Err(invalid("endpoints share a unit"));
        }
        let ns = *self
            .skeleton
            .unit_node
            .get(&us)
            .ok_or_else(|| invalid("s is not in a terminal unit"))?;
        let nt = *self
            .skeleton
            .unit_node
            .get(&ut)
            .ok_or_else(|| invalid("t is not in a terminal unit"))?;
        if ns == nt {
            return Err(invalid("endpoints map to one skeleton node"));
        }
        let link = build_link(&self.skeleton, ns, nt)?;

        // strip parts: one per link node that receives units, plus one per
        // stretched unit whose path endpoints fall in different link nodes
        let mut part_of_link: HashMap<usize, usize> = HashMap::new();
        let mut parts: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        let mut part_of_unit: Vec<usize> = vec![usize::MAX; self.units.units.len()];
        for u in 0..self.units.units.len() {
            let pr = self.proj[u];
            let part = match pr {
                super::project::Proj::Node(n) => {
                    let ln = link.node_of(n);
                    *part_of_link.entry(ln).or_insert_with(|| {
                        parts.push((Vec::new(), Vec::new()));
                        parts.len() - 1
                    })
                }
                super::project::Proj::Path(a, b) => {
                    let (la, lb) = (link.node_of(a), link.node_of(b));
                    if la == lb {
                        *part_of_link.entry(la).or_insert_with(|| {
                            parts.push((Vec::new(), Vec::new()));
                            parts.len() - 1
                        })
                    } else {
                        parts.push((Vec::new(), Vec::new()));
                        parts.len() - 1
                    }
                }
            };
            part_of_unit[u] = part;
            for &v in &self.units.units[u].members {
                parts[part].0.push(v);
                parts[part].1.extend(g.origins(v).iter().copied());
            }
        }
        let source = part_of_unit[us];
        let sink = part_of_unit[ut];
        if source == sink {
            return Err(internal("source and sink parts collide"));
        }

        // the skeleton cuts separating s from t, in deterministic order
        let path_cuts = self.cuts_separating(ns, nt)?;

        // cross edges, oriented through the first separating subbunch in
        // which the edge appears
        let mut cross = Vec::new();
        for e in g.edges() {
            let (ua, ub) = (self.units.unit_of[e.u], self.units.unit_of[e.v]);
            let (pa, pb) = (part_of_unit[ua], part_of_unit[ub]);
            if pa == pb {
                continue;
            }
            let mut oriented = None;
            for &cut in &path_cuts {
                let sub = &self.subbunches[self.cut_to_sub[&cut]];
                let (qa, qb) = (sub.placement[ua], sub.placement[ub]);
                let crosses = match (qa, qb) {
                    (Placement::Near, Placement::Near) | (Placement::Far, Placement::Far) => false,
                    _ => true,
                };
                if !crosses {
                    continue;
                }
                let bunch = &self.bunches[sub.bunch];
                let ce = bunch
                    .strip
                    .cross_edge(e.id)
                    .ok_or_else(|| internal("edge missing from bunch strip"))?;
                let qa_node = bunch.node_of_vertex(g, e.u);
                // direction toward the query sink: the bunch strip's sink
                // side is the subbunch far side; flip when s sits far
                let a_is_tail = ce.from == qa_node;
                let s_near = sub.placement[us] == Placement::Near;
                let toward_t = a_is_tail == s_near;
                oriented = Some(if toward_t {
                    StripEdge { id: e.id, from: pa, to: pb }
                } else {
                    StripEdge { id: e.id, from: pb, to: pa }
                });
                break;
            }
            cross.push(oriented.ok_or_else(|| internal("no separating cut orients an edge"))?);
        }
        Strip::from_parts(self.c_s, s, t, g.vertex_count(), parts, source, sink, cross)
    }

    /// All skeleton cuts separating two cactus nodes, ordered along the
    /// path from `ns`.
    pub fn cuts_separating(&self, ns: usize, nt: usize) -> Result<Vec<SkeletonCut>> {
        self.skeleton.cuts_separating(ns, nt)
    }

}
