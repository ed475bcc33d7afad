//! The connectivity carcass of a Steiner set S: bunches, units, the cactus
//! skeleton with its tree encoding, the projection mapping and the tau
//! ordering of stretched units. Construction is desk-scale (strips and
//! max-flows per bunch) and validated structurally; the validation is the
//! contract.

pub mod bunch;
pub mod link;
pub mod path;
pub mod project;
pub mod skeleton;
pub mod stripops;
pub mod unit;

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{internal, Result};
use crate::graph::Multigraph;

pub use bunch::{compute_bunches, compute_bunches_exhaustive, steiner_mincut_value, Bunch};
pub use link::{build_link, Link};
pub use path::ProperPath;
pub use project::{Placement, Proj, Subbunch};
pub use skeleton::{validate_skeleton, SkNode, Skeleton, SkeletonCut, StructEdge};
pub use unit::{compute_units, Unit, UnitId, UnitPartition};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Carcass {
    pub steiner: Vec<usize>,
    pub c_s: usize,
    pub anchor_unit: UnitId,
    pub bunches: Vec<Bunch>,
    pub units: UnitPartition,
    /// Strip node of each unit in each bunch strip: [bunch][unit].
    pub unit_node_in_bunch: Vec<Vec<usize>>,
    pub skeleton: Skeleton,
    pub subbunches: Vec<Subbunch>,
    pub cut_to_sub: HashMap<SkeletonCut, usize>,
    /// Projection per unit.
    pub proj: Vec<Proj>,
    /// Tau rank per stretched unit (topological along its path).
    pub tau: HashMap<UnitId, usize>,
}

impl Carcass {
    pub fn build(g: &Multigraph, steiner: &[usize]) -> Result<Carcass> {
        let mut steiner = steiner.to_vec();
        steiner.sort_unstable();
        steiner.dedup();
        let c_s = steiner_mincut_value(g, &steiner)?;
        let bunches = compute_bunches(g, &steiner)?;
        let units = compute_units(g, &steiner, &bunches)?;
        let anchor_unit = units.unit_of[steiner[0]];

        let unit_node_in_bunch: Vec<Vec<usize>> = bunches
            .iter()
            .map(|b| {
                units
                    .units
                    .iter()
                    .map(|u| b.node_of_vertex(g, u.members[0]))
                    .collect()
            })
            .collect();

        let mut subbunches: Vec<Subbunch> = Vec::new();
        for (bi, b) in bunches.iter().enumerate() {
            subbunches.extend(project::enumerate_subbunches(g, bi, b, &units)?);
        }
        subbunches.sort_by(|a, b| a.far_units.cmp(&b.far_units));

        let term_units: Vec<UnitId> = units.terminal_units().collect();
        let family: Vec<BTreeSet<UnitId>> = subbunches.iter().map(|s| s.far_units.clone()).collect();
        let skeleton = skeleton::build_skeleton(&term_units, &family, anchor_unit)?;
        let by_side = validate_skeleton(&skeleton, &family, anchor_unit)?;
        let mut cut_to_sub = HashMap::new();
        for (i, sub) in subbunches.iter_mut().enumerate() {
            let cut = *by_side
                .get(&sub.far_units)
                .ok_or_else(|| internal("subbunch without a skeleton cut"))?;
            sub.cut = Some(cut);
            cut_to_sub.insert(cut, i);
        }

        // projection: terminal units to their node, stretched units to the
        // path recovered from the cuts at which they are free
        let mut proj: Vec<Proj> = Vec::with_capacity(units.units.len());
        for u in 0..units.units.len() {
            if !units.units[u].stretched {
                proj.push(Proj::Node(skeleton.unit_node[&u]));
            } else {
                let free_cuts: Vec<SkeletonCut> = subbunches
                    .iter()
                    .filter(|s| s.placement[u] == Placement::Free)
                    .map(|s| s.cut.unwrap())
                    .collect();
                let (a, b) = project::path_from_free_cuts(&skeleton, &free_cuts)?;
                proj.push(Proj::Path(a, b));
            }
        }

        let mut carcass = Carcass {
            steiner,
            c_s,
            anchor_unit,
            bunches,
            units,
            unit_node_in_bunch,
            skeleton,
            subbunches,
            cut_to_sub,
            proj,
            tau: HashMap::new(),
        };
        carcass.tau = carcass.compute_tau()?;
        Ok(carcass)
    }

    /// Tau: per proper path carrying stretched units, a topological order
    /// of those units in the strip between the path endpoints, realized
    /// through the subbunch strip of the first cut on the path.
    fn compute_tau(&self) -> Result<HashMap<UnitId, usize>> {
        let mut groups: HashMap<(SkNode, SkNode), Vec<UnitId>> = HashMap::new();
        for u in self.units.stretched_units() {
            let Proj::Path(a, b) = self.proj[u] else {
                return Err(internal("stretched unit projected to a node"));
            };
            groups.entry((a, b)).or_default().push(u);
        }
        let mut tau = HashMap::new();
        for ((a, b), mut members) in groups {
            let first_edge = *self
                .skeleton
                .walk_struct_edges(a, b)?
                .first()
                .ok_or_else(|| internal("degenerate stretched path"))?;
            let cut = self.cut_with_edge(first_edge)?;
            let sub_idx = *self
                .cut_to_sub
                .get(&cut)
                .ok_or_else(|| internal("no subbunch at path cut"))?;
            let strip = self.subbunch_strip(sub_idx)?;
            let bunch = self.subbunches[sub_idx].bunch;
            members.sort_unstable();
            // rank members by their node's topological position
            let mut ranked: Vec<(usize, UnitId)> = members
                .iter()
                .map(|&u| {
                    let qv = self.bunches[bunch].strip.members(self.unit_node_in_bunch[bunch][u])[0];
                    (strip.node_of(qv), u)
                })
                .collect();
            ranked.sort_unstable();
            for w in ranked.windows(2) {
                if w[0].0 == w[1].0 {
                    return Err(internal("two path units share a strip node"));
                }
            }
            for (rank, (_, u)) in ranked.into_iter().enumerate() {
                tau.insert(u, rank);
            }
        }
        Ok(tau)
    }

    /// A deterministic skeleton cut containing the given structural edge.
    pub fn cut_with_edge(&self, e: StructEdge) -> Result<SkeletonCut> {
        Ok(match e {
            StructEdge::Tree(i) => SkeletonCut::Tree(i),
            StructEdge::Cyc { cycle, pos } => {
                let len = self.skeleton.cycles[cycle].len();
                let other = (0..len).find(|&p| p != pos).ok_or_else(|| internal("degenerate cycle"))?;
                SkeletonCut::CyclePair {
                    cycle,
                    p1: pos.min(other),
                    p2: pos.max(other),
                }
            }
        })
    }

    /// Projection of unit containing vertex `v`.
    pub fn proj_of_vertex(&self, v: usize) -> Proj {
        self.proj[self.units.unit_of[v]]
    }

    /// Projection of an edge (x,y): empty when both endpoints share a unit,
    /// otherwise the (extended) path between / covering the projections.
    /// Returned as directed endpoints (x-side first).
    pub fn edge_projection(&self, x: usize, y: usize) -> Result<Option<(SkNode, SkNode)>> {
        let ux = self.units.unit_of[x];
        let uy = self.units.unit_of[y];
        if ux == uy {
            return Ok(None);
        }
        let px = self.proj[ux];
        let py = self.proj[uy];
        let res = match (px, py) {
            (Proj::Node(a), Proj::Node(b)) => Some((a, b)),
            (Proj::Path(a, b), Proj::Node(c)) => {
                // extend (toward the y side) so that the path ends at c
                self.skeleton
                    .extend_directed(a, b, (c, c))
                    .or_else(|| self.skeleton.extend_directed(b, a, (c, c)))
                    .or_else(|| {
                        // c lies inside the path
                        self.skeleton.lca.on_path(c, a, b).then_some((a, b))
                    })
            }
            (Proj::Node(c), Proj::Path(a, b)) => self
                .skeleton
                .extend_directed(c, c, (a, b))
                .or_else(|| self.skeleton.lca.on_path(c, a, b).then_some((a, b))),
            (Proj::Path(a1, b1), Proj::Path(a2, b2)) => self
                .skeleton
                .extend_directed(a1, b1, (a2, b2))
                .or_else(|| self.skeleton.extend_directed(b1, a1, (a2, b2))),
        };
        res.map(Some)
            .ok_or_else(|| internal(format!("edge ({x},{y}) has no composed projection")))
    }

    /// Deep structural validation against independently built strips
    /// (test/acceptance use; costs flows).
    pub fn validate_deep(&self, g: &Multigraph) -> Result<()> {
        use crate::strip::Strip;
        // subbunch strips equal strips of the correspondingly contracted
        // graph
        for (i, sub) in self.subbunches.iter().enumerate() {
            let derived = self.subbunch_strip(i)?;
            let near: BTreeSet<usize> = sub
                .placement
                .iter()
                .enumerate()
                .filter(|(_, &p)| p == Placement::Near)
                .flat_map(|(u, _)| self.units.units[u].members.iter().copied())
                .collect();
            let far: BTreeSet<usize> = sub
                .placement
                .iter()
                .enumerate()
                .filter(|(_, &p)| p == Placement::Far)
                .flat_map(|(u, _)| self.units.units[u].members.iter().copied())
                .collect();
            let q = g.contract(&[near.clone(), far.clone()])?;
            let qs = q.vertex_of_origin(g.origins(*near.iter().next().unwrap())[0]).unwrap();
            let qt = q.vertex_of_origin(g.origins(*far.iter().next().unwrap())[0]).unwrap();
            let built = Strip::build(&q, qs, qt)?;
            if !derived.same_structure(&built) {
                return Err(internal(format!("subbunch strip {i} differs from built strip")));
            }
        }
        // freeness matches path/cut incidence
        for u in self.units.stretched_units() {
            let Proj::Path(a, b) = self.proj[u] else { unreachable!() };
            for sub in &self.subbunches {
                let free = sub.placement[u] == Placement::Free;
                let meets = self.skeleton.path_meets_cut((a, b), sub.cut.unwrap());
                if free != meets {
                    return Err(internal(format!(
                        "unit {u} freeness mismatch at cut {:?}",
                        sub.cut
                    )));
                }
            }
        }
        // tau is a topological order in every subbunch strip along the path
        for ((a, b), members) in self.path_groups() {
            for &cut in &self.cuts_separating(a, b)? {
                let sub_idx = self.cut_to_sub[&cut];
                if members
                    .iter()
                    .any(|&u| self.subbunches[sub_idx].placement[u] != Placement::Free)
                {
                    continue;
                }
                let strip = self.subbunch_strip(sub_idx)?;
                let bunch = self.subbunches[sub_idx].bunch;
                for &u in &members {
                    for &v in &members {
                        if self.tau[&u] < self.tau[&v] {
                            let nu = strip.node_of(
                                self.bunches[bunch].strip.members(self.unit_node_in_bunch[bunch][u])[0],
                            );
                            let nv = strip.node_of(
                                self.bunches[bunch].strip.members(self.unit_node_in_bunch[bunch][v])[0],
                            );
                            // u precedes v, so v must not sit in u's source cone
                            let cone = strip.cone_unchecked(nu, crate::strip::Dir::TowardSource);
                            if cone.contains(&nv) && nu != nv {
                                return Err(internal("tau conflicts with subbunch reachability"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn path_groups(&self) -> HashMap<(SkNode, SkNode), Vec<UnitId>> {
        let mut groups: HashMap<(SkNode, SkNode), Vec<UnitId>> = HashMap::new();
        for u in self.units.stretched_units() {
            if let Proj::Path(a, b) = self.proj[u] {
                groups.entry((a, b)).or_default().push(u);
            }
        }
        groups
    }
}
