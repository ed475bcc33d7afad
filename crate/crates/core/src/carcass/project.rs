//! Subbunch enumeration, the projection mapping and the tau ordering.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{internal, Result};
use crate::graph::Multigraph;
use crate::strip::Dir;

use super::bunch::Bunch;
use super::skeleton::{SkeletonCut, StructEdge};
use super::unit::{UnitId, UnitPartition};

/// Placement of a unit relative to a skeleton cut's subbunch: fixed on the
/// side of the anchor unit (near), fixed on the far side, or free (a
/// non-terminal of the subbunch strip).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Placement {
    Near,
    Far,
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subbunch {
    pub bunch: usize,
    /// Terminal units on the far (non-anchor) side: the canonical key.
    pub far_units: BTreeSet<UnitId>,
    /// Placement per unit id.
    pub placement: Vec<Placement>,
    /// Skeleton cut realizing this subbunch (filled after assembly).
    pub cut: Option<SkeletonCut>,
}

/// Enumerate the subbunches of one bunch: the distinct terminal-unit
/// placements over the mincuts of the bunch, as downsets over the strip
/// nodes that carry terminal units.
pub fn enumerate_subbunches(
    g: &Multigraph,
    bunch_idx: usize,
    bunch: &Bunch,
    units: &UnitPartition,
) -> Result<Vec<Subbunch>> {
    let strip = &bunch.strip;
    // strip node of each unit
    let unit_nodes: Vec<usize> = units
        .units
        .iter()
        .map(|u| bunch.node_of_vertex(g, u.members[0]))
        .collect();
    // anchor nodes: strip nodes carrying at least one terminal unit
    let mut anchor_nodes: Vec<usize> = units
        .terminal_units()
        .map(|u| unit_nodes[u])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    anchor_nodes.sort_unstable();
    let anchor_index: HashMap<usize, usize> = anchor_nodes
        .iter()
        .enumerate()
        .map(|(i, &n)| (n, i))
        .collect();
    if !anchor_index.contains_key(&strip.source()) || !anchor_index.contains_key(&strip.sink()) {
        return Err(internal("strip terminals carry no terminal units"));
    }
    // ancestor sets (over anchor indices) per anchor node
    let anc: Vec<BTreeSet<usize>> = anchor_nodes
        .iter()
        .map(|&n| {
            let cone = strip.cone_unchecked(n, Dir::TowardSource);
            anchor_nodes
                .iter()
                .enumerate()
                .filter(|&(_, &m)| m != n && cone.contains(&m))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let src_idx = anchor_index[&strip.source()];
    let snk_idx = anchor_index[&strip.sink()];
    if src_idx != 0 {
        return Err(internal("source is not the smallest anchor"));
    }
    // per-node anchor cones for the freeness test
    let anchors_in_cone: Vec<BTreeSet<usize>> = (0..strip.node_count())
        .map(|n| {
            let cone = strip.cone_unchecked(n, Dir::TowardSource);
            anchor_nodes
                .iter()
                .enumerate()
                .filter(|&(_, &m)| cone.contains(&m))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![vec![src_idx]];
    while let Some(ds) = stack.pop() {
        let t: BTreeSet<usize> = ds.iter().copied().collect();
        // ancestor closure of the chosen anchor nodes
        let chosen: BTreeSet<usize> = ds.iter().map(|&i| anchor_nodes[i]).collect();
        let closure = strip.close_toward_source(&chosen);
        let mut placement = vec![Placement::Near; units.units.len()];
        let mut far_units = BTreeSet::new();
        for (u, unit) in units.units.iter().enumerate() {
            let n = unit_nodes[u];
            placement[u] = if closure.contains(&n) {
                Placement::Near
            } else if anchors_in_cone[n].is_subset(&t) {
                Placement::Free
            } else {
                Placement::Far
            };
            if !unit.stretched && placement[u] == Placement::Far {
                far_units.insert(u);
            }
        }
        // terminal units are never free
        for u in units.terminal_units() {
            if placement[u] == Placement::Free {
                return Err(internal("terminal unit came out free"));
            }
        }
        out.push(Subbunch {
            bunch: bunch_idx,
            far_units,
            placement,
            cut: None,
        });
        let max = *ds.last().unwrap();
        for next in max + 1..anchor_nodes.len() {
            if next == snk_idx {
                continue;
            }
            if anc[next].iter().all(|p| t.contains(p)) {
                let mut nd = ds.clone();
                nd.push(next);
                stack.push(nd);
            }
        }
    }
    Ok(out)
}

/// Projection of a unit: a skeleton node for terminal units, a proper path
/// for stretched ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Proj {
    Node(super::skeleton::SkNode),
    Path(super::skeleton::SkNode, super::skeleton::SkNode),
}

impl Proj {
    /// Path endpoints; a node projects to the degenerate pair.
    pub fn endpoints(&self) -> (usize, usize) {
        match *self {
            Proj::Node(n) => (n, n),
            Proj::Path(a, b) => (a, b),
        }
    }
}

/// Recover the proper path of a stretched unit from the set of skeleton
/// cuts at which it is free.
pub fn path_from_free_cuts(
    sk: &super::skeleton::Skeleton,
    free_cuts: &[SkeletonCut],
) -> Result<(usize, usize)> {
    if free_cuts.is_empty() {
        return Err(internal("stretched unit free at no cut"));
    }
    let mut edges: BTreeSet<StructEdge> = BTreeSet::new();
    let mut by_cycle: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for cut in free_cuts {
        match *cut {
            SkeletonCut::Tree(i) => {
                edges.insert(StructEdge::Tree(i));
            }
            SkeletonCut::CyclePair { cycle, p1, p2 } => {
                by_cycle.entry(cycle).or_default().push((p1, p2));
            }
        }
    }
    for (cycle, pairs) in by_cycle {
        let len = sk.cycles[cycle].len();
        // the path uses one edge of the cycle; the free cuts at this cycle
        // are exactly the pairs containing it
        let mut common: BTreeSet<usize> = BTreeSet::from_iter([pairs[0].0, pairs[0].1]);
        for &(p1, p2) in &pairs[1..] {
            common.retain(|&p| p == p1 || p == p2);
        }
        if common.len() != 1 || pairs.len() != len - 1 {
            return Err(internal("cycle freeness is not a star at one edge"));
        }
        edges.insert(StructEdge::Cyc {
            cycle,
            pos: *common.iter().next().unwrap(),
        });
    }
    // the edges must form a simple path in the cactus
    let mut deg: HashMap<usize, usize> = HashMap::new();
    for &e in &edges {
        let (a, b) = sk.struct_edge_endpoints(e);
        *deg.entry(a).or_default() += 1;
        *deg.entry(b).or_default() += 1;
    }
    let odd: Vec<usize> = deg
        .iter()
        .filter(|&(_, &d)| d == 1)
        .map(|(&v, _)| v)
        .collect();
    if odd.len() != 2 || deg.values().any(|&d| d > 2) {
        return Err(internal("free-cut edges do not form a path"));
    }
    let (a, b) = (odd[0].min(odd[1]), odd[0].max(odd[1]));
    // contiguity and properness: the tree walk must see the same edges
    let walked: BTreeSet<StructEdge> = sk.walk_struct_edges(a, b)?.into_iter().collect();
    if walked != edges {
        return Err(internal("free-cut edges do not match the tree path"));
    }
    Ok((a, b))
}
