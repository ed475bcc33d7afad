//! The quadratic-space sensitivity oracle: the hierarchy tree with one
//! reduced carcass payload (skeleton tree, projections, tau) per internal
//! node, plus the original graph for cut and strip reporting. Value
//! queries cost a constant number of LCA-style primitives; cut reporting
//! is linear.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::carcass::{Carcass, Proj, SkNode, Skeleton, SkeletonCut, Unit, UnitId};
use crate::error::{internal, invalid, Error, Result};
use crate::gomory_hu::GomoryHuTree;
use crate::graph::{Cut, Multigraph};
use crate::hierarchy::{HNode, HierarchyTree};
use crate::strip::{Strip, StripEdge};

/// Primitive-operation counter for the constant-query-time evidence.
#[derive(Debug, Default, Clone, Copy)]
pub struct OpCounter {
    pub ops: u64,
}

impl OpCounter {
    pub fn bump(&mut self) {
        self.ops += 1;
    }
}

/// The per-node payload: skeleton tree, projection mapping of all units,
/// and the tau ordering of stretched units.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NodePayload {
    pub c_s: usize,
    /// Unit holding min(S): the side the tau ordering starts from.
    pub anchor_unit: UnitId,
    pub skeleton: Skeleton,
    pub unit_of: Vec<UnitId>,
    pub units: Vec<Unit>,
    pub proj: Vec<Proj>,
    pub tau: HashMap<UnitId, usize>,
}

impl NodePayload {
    pub fn from_carcass(c: &Carcass) -> NodePayload {
        NodePayload {
            c_s: c.c_s,
            anchor_unit: c.anchor_unit,
            skeleton: c.skeleton.clone(),
            unit_of: c.units.unit_of.clone(),
            units: c.units.units.clone(),
            proj: c.proj.clone(),
            tau: c.tau.clone(),
        }
    }

    fn node_of_unit(&self, u: UnitId) -> Option<SkNode> {
        self.skeleton.unit_node.get(&u).copied()
    }

    /// Projection of the edge (x,y), composed; None when both endpoints
    /// share a unit.
    pub fn edge_projection(
        &self,
        x: usize,
        y: usize,
        ctr: &mut OpCounter,
    ) -> Result<Option<(SkNode, SkNode)>> {
        let ux = self.unit_of[x];
        let uy = self.unit_of[y];
        ctr.bump();
        if ux == uy {
            return Ok(None);
        }
        let sk = &self.skeleton;
        let res = match (self.proj[ux], self.proj[uy]) {
            (Proj::Node(a), Proj::Node(b)) => Some((a, b)),
            (Proj::Path(a, b), Proj::Node(c)) => {
                ctr.bump();
                sk.extend_directed(a, b, (c, c))
                    .or_else(|| sk.extend_directed(b, a, (c, c)))
                    .or_else(|| sk.lca.on_path(c, a, b).then_some((a, b)))
            }
            (Proj::Node(c), Proj::Path(a, b)) => {
                ctr.bump();
                sk.extend_directed(c, c, (a, b))
                    .or_else(|| sk.lca.on_path(c, a, b).then_some((a, b)))
            }
            (Proj::Path(a1, b1), Proj::Path(a2, b2)) => {
                ctr.bump();
                sk.extend_directed(a1, b1, (a2, b2))
                    .or_else(|| sk.extend_directed(b1, a1, (a2, b2)))
            }
        };
        res.map(Some)
            .ok_or_else(|| internal(format!("edge ({x},{y}) has no composed projection")))
    }

    /// Does vertex v lie in the nearest s-to-t mincut? Assumes s,t are
    /// Steiner vertices of this payload separated by a Steiner mincut.
    pub fn in_nearest(&self, s: usize, t: usize, v: usize, ctr: &mut OpCounter) -> Result<bool> {
        let us = self.unit_of[s];
        let ut = self.unit_of[t];
        let uv = self.unit_of[v];
        ctr.bump();
        if uv == us {
            return Ok(true);
        }
        if uv == ut {
            return Ok(false);
        }
        let ns = self
            .node_of_unit(us)
            .ok_or_else(|| internal("query endpoint in a stretched unit"))?;
        let nt = self
            .node_of_unit(ut)
            .ok_or_else(|| internal("query endpoint in a stretched unit"))?;
        if ns == nt {
            return Err(internal("endpoints map to one skeleton node"));
        }
        let (w1, w2) = self.proj[uv].endpoints();
        ctr.bump();
        ctr.bump();
        Ok(self.skeleton.lca.on_path(ns, w1, nt) && self.skeleton.lca.on_path(ns, w2, nt))
    }

    /// Placement of a unit relative to a skeleton cut, from the projection
    /// alone.
    fn place(&self, u: UnitId, cut: SkeletonCut, far: &BTreeSet<SkNode>) -> Result<Place> {
        Ok(match self.proj[u] {
            Proj::Node(n) => {
                if far.contains(&n) {
                    Place::Far
                } else {
                    Place::Near
                }
            }
            Proj::Path(a, b) => {
                if self.skeleton.path_meets_cut((a, b), cut) {
                    Place::Free
                } else if far.contains(&a) {
                    Place::Far
                } else {
                    Place::Near
                }
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Place {
    Near,
    Far,
    Free,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuadraticOracle {
    graph: Multigraph,
    hierarchy: HierarchyTree,
    /// payload per hierarchy node (internal nodes only)
    payloads: Vec<Option<NodePayload>>,
}

impl QuadraticOracle {
    pub fn build(g: &Multigraph) -> Result<QuadraticOracle> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let ght = GomoryHuTree::build(g)?;
        let hierarchy = HierarchyTree::build(&ght)?;
        let mut payloads: Vec<Option<NodePayload>> = vec![None; hierarchy.node_count()];
        for nu in hierarchy.internal_nodes() {
            let steiner = &hierarchy.node(nu).steiner;
            let carc = Carcass::build(g, steiner)?;
            if carc.c_s != hierarchy.node(nu).val.unwrap() {
                return Err(internal("carcass value disagrees with hierarchy"));
            }
            payloads[nu] = Some(NodePayload::from_carcass(&carc));
        }
        Ok(QuadraticOracle {
            graph: g.clone(),
            hierarchy,
            payloads,
        })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn hierarchy(&self) -> &HierarchyTree {
        &self.hierarchy
    }

    pub fn payload(&self, nu: HNode) -> Option<&NodePayload> {
        self.payloads[nu].as_ref()
    }

    fn payload_at_lca(&self, s: usize, t: usize, ctr: &mut OpCounter) -> Result<(HNode, &NodePayload)> {
        self.graph.check_vertex(s)?;
        self.graph.check_vertex(t)?;
        if s == t {
            return Err(invalid("query endpoints must differ"));
        }
        ctr.bump();
        let mu = self.hierarchy.lca_vertices(s, t);
        let p = self.payloads[mu]
            .as_ref()
            .ok_or_else(|| internal("LCA of distinct vertices is a leaf"))?;
        Ok((mu, p))
    }

    /// Does edge (x,y) lie in some (s,t)-mincut?
    pub fn edge_contained(&self, s: usize, t: usize, x: usize, y: usize) -> Result<bool> {
        self.edge_contained_counted(s, t, x, y, &mut OpCounter::default())
    }

    pub fn edge_contained_counted(
        &self,
        s: usize,
        t: usize,
        x: usize,
        y: usize,
        ctr: &mut OpCounter,
    ) -> Result<bool> {
        if self.graph.find_edge(x, y).is_none() {
            return Err(invalid(format!("no edge ({x},{y}) in the graph")));
        }
        let (_, p) = self.payload_at_lca(s, t, ctr)?;
        let Some(p2) = p.edge_projection(x, y, ctr)? else {
            return Ok(false);
        };
        let ns = p
            .node_of_unit(p.unit_of[s])
            .ok_or_else(|| internal("s in stretched unit"))?;
        let nt = p
            .node_of_unit(p.unit_of[t])
            .ok_or_else(|| internal("t in stretched unit"))?;
        ctr.bump();
        Ok(p.skeleton.paths_intersect((ns, nt), p2))
    }

    /// (s,t)-mincut value after failing edge (x,y).
    pub fn ft_mincut_value(&self, s: usize, t: usize, x: usize, y: usize) -> Result<usize> {
        self.ft_mincut_value_counted(s, t, x, y, &mut OpCounter::default())
    }

    pub fn ft_mincut_value_counted(
        &self,
        s: usize,
        t: usize,
        x: usize,
        y: usize,
        ctr: &mut OpCounter,
    ) -> Result<usize> {
        let contained = self.edge_contained_counted(s, t, x, y, ctr)?;
        ctr.bump();
        let c = self.hierarchy.lookup_mincut_value(s, t)?;
        Ok(if contained { c - 1 } else { c })
    }

    /// (s,t)-mincut value after inserting edge (x,y).
    pub fn in_mincut_value(&self, s: usize, t: usize, x: usize, y: usize) -> Result<usize> {
        self.in_mincut_value_counted(s, t, x, y, &mut OpCounter::default())
    }

    pub fn in_mincut_value_counted(
        &self,
        s: usize,
        t: usize,
        x: usize,
        y: usize,
        ctr: &mut OpCounter,
    ) -> Result<usize> {
        if x == y {
            return Err(invalid("insertion endpoints must differ"));
        }
        self.graph.check_vertex(x)?;
        self.graph.check_vertex(y)?;
        let (_, p) = self.payload_at_lca(s, t, ctr)?;
        let grows = (p.in_nearest(s, t, x, ctr)? && p.in_nearest(t, s, y, ctr)?)
            || (p.in_nearest(s, t, y, ctr)? && p.in_nearest(t, s, x, ctr)?);
        ctr.bump();
        let c = self.hierarchy.lookup_mincut_value(s, t)?;
        Ok(if grows { c + 1 } else { c })
    }

    /// An (s,t)-mincut containing the failed edge (x,y).
    pub fn report_ft_cut(&self, s: usize, t: usize, x: usize, y: usize) -> Result<Cut> {
        let mut ctr = OpCounter::default();
        if !self.edge_contained_counted(s, t, x, y, &mut ctr)? {
            return Err(Error::NotContained);
        }
        let (_, p) = self.payload_at_lca(s, t, &mut ctr)?;
        let ns = p.node_of_unit(p.unit_of[s]).unwrap();
        let nt = p.node_of_unit(p.unit_of[t]).unwrap();
        let p2 = p.edge_projection(x, y, &mut ctr)?.ok_or(Error::NotContained)?;
        // first cut along the skeleton path from s that the edge meets
        let cut = p
            .skeleton
            .cuts_separating(ns, nt)?
            .into_iter()
            .find(|&c| p.skeleton.path_meets_cut(p2, c))
            .ok_or(Error::NotContained)?;
        let far = p.skeleton.cut_far_side(cut, ns);
        let ux = p.unit_of[x];
        let uy = p.unit_of[y];
        let px = p.place(ux, cut, &far)?;
        let py = p.place(uy, cut, &far)?;
        let near_side = |p: &NodePayload| -> Result<BTreeSet<usize>> {
            let mut side = BTreeSet::new();
            for (u, unit) in p.units.iter().enumerate() {
                if p.place(u, cut, &far)? == Place::Near {
                    side.extend(unit.members.iter().copied());
                }
            }
            Ok(side)
        };
        let side = if px == Place::Near || py == Place::Near {
            near_side(p)?
        } else {
            // anchor at a free endpoint; if the constructed side fails to
            // exclude the other endpoint, the other unit is the anchor
            let try_anchor = |anchor: UnitId| -> Result<BTreeSet<usize>> {
                self.prefix_side(p, cut, &far, anchor)
            };
            let first = if px == Place::Free { ux } else { uy };
            let side = try_anchor(first)?;
            let other = if first == ux { y } else { x };
            if side.contains(&other) {
                let second = if first == ux { uy } else { ux };
                if p.place(second, cut, &far)? != Place::Free {
                    return Err(internal("no free anchor excludes the edge"));
                }
                try_anchor(second)?
            } else {
                side
            }
        };
        let side: BTreeSet<usize> = side
            .iter()
            .flat_map(|&v| self.graph.origins(v).iter().copied())
            .collect();
        let value = self.hierarchy.lookup_mincut_value(s, t)?;
        Ok(Cut::new(side, value))
    }

    /// Near-fixed units plus the tau-prefix and extendable stretched units
    /// up to the anchor: the transversal of the subbunch whose sink side
    /// starts right after the anchor.
    fn prefix_side(
        &self,
        p: &NodePayload,
        cut: SkeletonCut,
        far: &BTreeSet<SkNode>,
        anchor: UnitId,
    ) -> Result<BTreeSet<usize>> {
        let Proj::Path(a, b) = p.proj[anchor] else {
            return Err(internal("anchor is not stretched"));
        };
        // orient the anchor path near -> far
        let (near_end, far_end) = if far.contains(&a) { (b, a) } else { (a, b) };
        let anchor_tau = *p.tau.get(&anchor).ok_or_else(|| internal("missing tau"))?;
        let mut side = BTreeSet::new();
        for (u, unit) in p.units.iter().enumerate() {
            let include = match p.place(u, cut, far)? {
                Place::Near => true,
                Place::Far => false,
                Place::Free => {
                    let Proj::Path(ua, ub) = p.proj[u] else {
                        return Err(internal("free unit is not stretched"));
                    };
                    let same_path = (ua.min(ub), ua.max(ub)) == (near_end.min(far_end), near_end.max(far_end));
                    if same_path {
                        // tau grows away from the payload anchor unit; the
                        // near side here is the s side
                        if p.place(p.anchor_unit, cut, far)? == Place::Near {
                            p.tau[&u] <= anchor_tau
                        } else {
                            p.tau[&u] >= anchor_tau
                        }
                    } else {
                        // extendable from the anchor path toward the near end
                        p.skeleton
                            .extend_directed(far_end, near_end, (ua, ub))
                            .is_some()
                    }
                }
            };
            if include {
                side.extend(unit.members.iter().copied());
            }
        }
        Ok(side)
    }

    /// An old (s,t)-mincut; when the value does not grow it keeps x and y
    /// on one side.
    pub fn report_in_cut(&self, s: usize, t: usize, x: usize, y: usize) -> Result<Cut> {
        if x == y {
            return Err(invalid("insertion endpoints must differ"));
        }
        let mut ctr = OpCounter::default();
        let grows = self.in_mincut_value_counted(s, t, x, y, &mut ctr)?
            > self.hierarchy.lookup_mincut_value(s, t)?;
        let strip = self.report_strip(s, t)?;
        let side_nodes: BTreeSet<usize> = if grows {
            BTreeSet::from([strip.source()])
        } else {
            let nx = strip.node_of(x);
            let ny = strip.node_of(y);
            if nx != strip.sink() && ny != strip.sink() {
                strip.close_toward_source(&BTreeSet::from([nx, ny]))
            } else if nx != strip.source() && ny != strip.source() {
                BTreeSet::from([strip.source()])
            } else {
                return Err(internal("value should have grown"));
            }
        };
        let side = strip.vertex_side(&side_nodes);
        Ok(Cut::new(side, strip.value()))
    }

    /// The full (s,t)-strip, built from the stored payload; equals the
    /// flow-built strip nodewise.
    pub fn report_strip(&self, s: usize, t: usize) -> Result<Strip> {
        let mut ctr = OpCounter::default();
        let (_, p) = self.payload_at_lca(s, t, &mut ctr)?;
        payload_steiner_strip(p, &self.graph, s, t)
    }
}

/// Assemble the (s,t)-strip from a payload: node structure through the
/// link, edge orientation from placements, tau and extendability.
pub fn payload_steiner_strip(p: &NodePayload, g: &Multigraph, s: usize, t: usize) -> Result<Strip> {
    let us = p.unit_of[s];
    let ut = p.unit_of[t];
    if us == ut {
        return Err(invalid("endpoints share a unit"));
    }
    let ns = p
        .node_of_unit(us)
        .ok_or_else(|| invalid("s is not in a terminal unit"))?;
    let nt = p
        .node_of_unit(ut)
        .ok_or_else(|| invalid("t is not in a terminal unit"))?;
    if ns == nt {
        return Err(invalid("endpoints map to one skeleton node"));
    }
    let link = crate::carcass::build_link(&p.skeleton, ns, nt)?;
    let mut part_of_link: HashMap<usize, usize> = HashMap::new();
    let mut parts: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut part_of_unit: Vec<usize> = vec![usize::MAX; p.units.len()];
    for (u, unit) in p.units.iter().enumerate() {
        let part = match p.proj[u] {
            Proj::Node(n) => {
                let ln = link.node_of(n);
                *part_of_link.entry(ln).or_insert_with(|| {
                    parts.push((Vec::new(), Vec::new()));
                    parts.len() - 1
                })
            }
            Proj::Path(a, b) => {
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
        for &v in &unit.members {
            parts[part].0.push(v);
            parts[part].1.extend(g.origins(v).iter().copied());
        }
    }
    let source = part_of_unit[us];
    let sink = part_of_unit[ut];
    if source == sink {
        return Err(internal("source and sink parts collide"));
    }
    let path_cuts = p.skeleton.cuts_separating(ns, nt)?;
    let far_sides: Vec<BTreeSet<SkNode>> = path_cuts
        .iter()
        .map(|&c| p.skeleton.cut_far_side(c, ns))
        .collect();
    let mut cross = Vec::new();
    for e in g.edges() {
        let (ua, ub) = (p.unit_of[e.u], p.unit_of[e.v]);
        let (pa, pb) = (part_of_unit[ua], part_of_unit[ub]);
        if pa == pb {
            continue;
        }
        let mut oriented = None;
        for (ci, &cut) in path_cuts.iter().enumerate() {
            let far = &far_sides[ci];
            let qa = p.place(ua, cut, far)?;
            let qb = p.place(ub, cut, far)?;
            let toward_t_a_to_b = match (qa, qb) {
                (Place::Near, Place::Near) | (Place::Far, Place::Far) => continue,
                (Place::Near, Place::Far) | (Place::Near, Place::Free) => true,
                (Place::Far, Place::Near) | (Place::Free, Place::Near) => false,
                (Place::Free, Place::Far) => true,
                (Place::Far, Place::Free) => false,
                (Place::Free, Place::Free) => {
                    let (a1, b1) = p.proj[ua].endpoints();
                    let (a2, b2) = p.proj[ub].endpoints();
                    if (a1.min(b1), a1.max(b1)) == (a2.min(b2), a2.max(b2)) {
                        // tau grows away from the anchor unit's side
                        let inc_far = p.place(p.anchor_unit, cut, far)? == Place::Near;
                        (p.tau[&ua] < p.tau[&ub]) == inc_far
                    } else {
                        let (na, fa) = if far.contains(&a1) { (b1, a1) } else { (a1, b1) };
                        let (nb, fb) = if far.contains(&a2) { (b2, a2) } else { (a2, b2) };
                        let a_up = p.skeleton.extend_directed(na, fa, (a2, b2)).is_some();
                        let b_up = p.skeleton.extend_directed(nb, fb, (a1, b1)).is_some();
                        match (a_up, b_up) {
                            (true, false) => true,
                            (false, true) => false,
                            _ => {
                                return Err(internal(format!(
                                    "ambiguous free-free orientation for edge {:?}",
                                    e
                                )))
                            }
                        }
                    }
                }
            };
            // flip when the near side of this cut is the t side
            let s_near = p.place(us, cut, far)? == Place::Near;
            let a_to_b = toward_t_a_to_b == s_near;
            oriented = Some(if a_to_b {
                StripEdge { id: e.id, from: pa, to: pb }
            } else {
                StripEdge { id: e.id, from: pb, to: pa }
            });
            break;
        }
        cross.push(oriented.ok_or_else(|| internal("no separating cut orients an edge"))?);
    }
    Strip::from_parts(p.c_s, s, t, g.vertex_count(), parts, source, sink, cross)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::fixtures;
    use crate::reference;

    #[test]
    fn build_shapes() {
        let o = QuadraticOracle::build(&fixtures::tb()).unwrap();
        let root = o.hierarchy().root();
        let p = o.payload(root).unwrap();
        assert_eq!(p.c_s, 1);
        assert_eq!(p.skeleton.node_count(), 2);
        let kids = o.hierarchy().node(root).children.clone();
        for k in kids {
            let kp = o.payload(k).unwrap();
            assert_eq!(kp.c_s, 2);
        }
        let o = QuadraticOracle::build(&fixtures::k2()).unwrap();
        assert_eq!(o.hierarchy().internal_nodes().len(), 1);

        let o = QuadraticOracle::build(&fixtures::c4()).unwrap();
        let p = o.payload(o.hierarchy().root()).unwrap();
        assert_eq!(p.skeleton.cycles.len(), 1);
        assert_eq!(p.skeleton.cycles[0].len(), 4);
    }

    #[test]
    fn edge_contained_examples() {
        let o = QuadraticOracle::build(&fixtures::c4()).unwrap();
        assert!(o.edge_contained(0, 2, 0, 1).unwrap());
        let o = QuadraticOracle::build(&fixtures::k4()).unwrap();
        assert!(!o.edge_contained(0, 2, 1, 3).unwrap());
        // same unit at the LCA: P(x,y) is empty
        let o = QuadraticOracle::build(&fixtures::tb()).unwrap();
        assert!(!o.edge_contained(0, 1, 3, 4).unwrap());
        assert!(o.edge_contained(0, 1, 0, 1).unwrap());
        // unknown edge
        assert!(o.edge_contained(0, 1, 0, 4).is_err());
    }

    #[test]
    fn value_examples() {
        let o = QuadraticOracle::build(&fixtures::c4()).unwrap();
        assert_eq!(o.ft_mincut_value(0, 2, 0, 1).unwrap(), 1);
        assert_eq!(o.in_mincut_value(0, 2, 1, 3).unwrap(), 2);
        assert_eq!(o.in_mincut_value(0, 2, 0, 2).unwrap(), 3);
        let o = QuadraticOracle::build(&fixtures::k4()).unwrap();
        assert_eq!(o.ft_mincut_value(0, 2, 1, 3).unwrap(), 3);
        let o = QuadraticOracle::build(&fixtures::tb()).unwrap();
        assert_eq!(o.ft_mincut_value(0, 1, 0, 3).unwrap(), 2);
        let o = QuadraticOracle::build(&fixtures::p3()).unwrap();
        assert_eq!(o.in_mincut_value(0, 2, 0, 2).unwrap(), 2);
        assert!(o.in_mincut_value(0, 2, 1, 1).is_err());
    }

    #[test]
    fn report_ft_cut_examples() {
        let p3 = fixtures::p3();
        let o = QuadraticOracle::build(&p3).unwrap();
        let cut = o.report_ft_cut(0, 2, 1, 2).unwrap();
        assert_eq!(cut.side, std::collections::BTreeSet::from([0, 1]));
        assert_eq!(cut.value, 1);

        let c4 = fixtures::c4();
        let o = QuadraticOracle::build(&c4).unwrap();
        let cut = o.report_ft_cut(0, 2, 1, 2).unwrap();
        assert_eq!(c4.cut_value(&cut.side).unwrap(), 2);
        assert!(cut.separates(1, 2));

        let k4 = fixtures::k4();
        let o = QuadraticOracle::build(&k4).unwrap();
        let cut = o.report_ft_cut(0, 2, 0, 1).unwrap();
        assert_eq!(k4.cut_value(&cut.side).unwrap(), 3);
        assert!(cut.separates(0, 1));
        // not contained: error
        assert!(matches!(
            o.report_ft_cut(0, 2, 1, 3),
            Err(crate::error::Error::NotContained)
        ));
    }

    #[test]
    fn report_in_cut_examples() {
        let p3 = fixtures::p3();
        let o = QuadraticOracle::build(&p3).unwrap();
        let cut = o.report_in_cut(0, 2, 0, 2).unwrap();
        assert_eq!(p3.cut_value(&cut.side).unwrap(), 1);

        let c4 = fixtures::c4();
        let o = QuadraticOracle::build(&c4).unwrap();
        let cut = o.report_in_cut(0, 2, 1, 3).unwrap();
        assert_eq!(c4.cut_value(&cut.side).unwrap(), 2);
        assert!(!cut.separates(1, 3));

        let tb = fixtures::tb();
        let o = QuadraticOracle::build(&tb).unwrap();
        let cut = o.report_in_cut(0, 1, 3, 4).unwrap();
        assert_eq!(tb.cut_value(&cut.side).unwrap(), 2);
        assert!(!cut.separates(3, 4));
    }

    #[test]
    fn report_strip_equals_built_strip() {
        for (name, g) in fixtures::all() {
            let o = QuadraticOracle::build(&g).unwrap();
            let n = g.vertex_count();
            for s in 0..n {
                for t in 0..n {
                    if s == t {
                        continue;
                    }
                    let reported = o.report_strip(s, t).unwrap();
                    let built = crate::strip::Strip::build(&g, s, t).unwrap();
                    assert!(reported.same_structure(&built), "{name} pair ({s},{t})");
                }
            }
        }
    }

    #[test]
    fn values_match_bruteforce_on_corpus() {
        for g in crate::gen::corpus(107, 25, 3, 9) {
            let o = QuadraticOracle::build(&g).unwrap();
            let n = g.vertex_count();
            for s in 0..n {
                for t in 0..n {
                    if s == t {
                        continue;
                    }
                    for e in g.edges() {
                        assert_eq!(
                            o.ft_mincut_value(s, t, e.u, e.v).unwrap(),
                            reference::bf_ft(&g, s, t, e.id).unwrap(),
                            "graph {g:?} ft ({s},{t}) edge {e:?}"
                        );
                    }
                    for x in 0..n {
                        for y in x + 1..n {
                            assert_eq!(
                                o.in_mincut_value(s, t, x, y).unwrap(),
                                reference::bf_in(&g, s, t, x, y).unwrap(),
                                "graph {g:?} in ({s},{t}) pair ({x},{y})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reported_cuts_are_valid_on_corpus() {
        for g in crate::gen::corpus(109, 15, 3, 9) {
            let o = QuadraticOracle::build(&g).unwrap();
            let n = g.vertex_count();
            for s in 0..n {
                for t in s + 1..n {
                    let c = o.hierarchy().lookup_mincut_value(s, t).unwrap();
                    for e in g.edges() {
                        if o.edge_contained(s, t, e.u, e.v).unwrap() {
                            let cut = o.report_ft_cut(s, t, e.u, e.v).unwrap();
                            assert_eq!(g.cut_value(&cut.side).unwrap(), c);
                            assert!(cut.separates(e.u, e.v));
                            assert!(cut.separates(s, t));
                        }
                    }
                    for x in 0..n {
                        for y in x + 1..n {
                            let cut = o.report_in_cut(s, t, x, y).unwrap();
                            assert_eq!(g.cut_value(&cut.side).unwrap(), c);
                            assert!(cut.separates(s, t));
                            if o.in_mincut_value(s, t, x, y).unwrap() == c {
                                assert!(!cut.separates(x, y));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn op_count_is_small() {
        for g in crate::gen::corpus(113, 10, 6, 10) {
            let o = QuadraticOracle::build(&g).unwrap();
            let n = g.vertex_count();
            let mut worst = 0;
            for s in 0..n {
                for t in 0..n {
                    if s == t {
                        continue;
                    }
                    for e in g.edges() {
                        let mut ctr = OpCounter::default();
                        o.ft_mincut_value_counted(s, t, e.u, e.v, &mut ctr).unwrap();
                        worst = worst.max(ctr.ops);
                    }
                    let mut ctr = OpCounter::default();
                    o.in_mincut_value_counted(s, t, (s + 1) % n, (t + 1) % n, &mut ctr)
                        .ok();
                    worst = worst.max(ctr.ops);
                }
            }
            assert!(worst <= 64, "query used {worst} primitive ops");
        }
    }
}
