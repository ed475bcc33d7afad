//! The skeleton: a cactus over the terminal units whose cuts (tree edges
//! and cycle-edge pairs) realize exactly the subbunch bipartitions.
//!
//! Assembly works on the family of bipartitions alone: crossing-connected
//! classes of two or more cuts are resolved into circular partitions
//! (cycles), the remaining cuts become tree edges, and the pieces are glued
//! recursively along the laminar structure. The construction is validated
//! afterwards against the input family; the validation, not the assembly,
//! is the contract.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{internal, Result};
use crate::lca::Lca;

use super::unit::UnitId;

pub type SkNode = usize;

/// A structural edge of the cactus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StructEdge {
    Tree(usize),
    /// Edge `pos` of cycle `cycle`: between positions pos and pos+1 (mod len).
    Cyc { cycle: usize, pos: usize },
}

/// A cut of the cactus: one tree edge, or two edges of one cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SkeletonCut {
    Tree(usize),
    CyclePair { cycle: usize, p1: usize, p2: usize },
}

impl SkeletonCut {
    pub fn struct_edges(&self) -> Vec<StructEdge> {
        match *self {
            SkeletonCut::Tree(i) => vec![StructEdge::Tree(i)],
            SkeletonCut::CyclePair { cycle, p1, p2 } => vec![
                StructEdge::Cyc { cycle, pos: p1 },
                StructEdge::Cyc { cycle, pos: p2 },
            ],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skeleton {
    /// Terminal unit hosted by each cactus node (at most one).
    pub node_unit: Vec<Option<UnitId>>,
    /// Cactus node of each terminal unit.
    pub unit_node: HashMap<UnitId, SkNode>,
    pub tree_edges: Vec<(SkNode, SkNode)>,
    /// Cycles as circular node lists, normalized to start at the smallest
    /// node id and run toward its smaller neighbor.
    pub cycles: Vec<Vec<SkNode>>,
    /// Skeleton tree parents: vertices 0..n are cactus nodes, n..n+c are
    /// cycle vertices.
    st_parent: Vec<Option<usize>>,
    pub lca: Lca,
    jump: Vec<Vec<usize>>,
    /// Per cycle: node -> position.
    cycle_pos: Vec<HashMap<SkNode, usize>>,
    /// Deepest cycle vertex on the root path whose climb crossing is
    /// non-adjacent (depth; 0 = none). Lets properness checks run in O(1).
    brk: Vec<usize>,
}

impl Skeleton {
    pub fn node_count(&self) -> usize {
        self.node_unit.len()
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Skeleton-tree vertex of a cactus node.
    pub fn stv_node(&self, v: SkNode) -> usize {
        v
    }

    /// Skeleton-tree vertex of a cycle.
    pub fn stv_cycle(&self, c: usize) -> usize {
        self.node_count() + c
    }

    pub fn is_cycle_stv(&self, stv: usize) -> bool {
        stv >= self.node_count()
    }

    pub fn cycle_of_stv(&self, stv: usize) -> usize {
        stv - self.node_count()
    }

    pub fn struct_edge_endpoints(&self, e: StructEdge) -> (SkNode, SkNode) {
        match e {
            StructEdge::Tree(i) => self.tree_edges[i],
            StructEdge::Cyc { cycle, pos } => {
                let cy = &self.cycles[cycle];
                (cy[pos], cy[(pos + 1) % cy.len()])
            }
        }
    }

    /// All cactus cuts.
    pub fn all_cuts(&self) -> Vec<SkeletonCut> {
        let mut out: Vec<SkeletonCut> = (0..self.tree_edges.len()).map(SkeletonCut::Tree).collect();
        for (c, cy) in self.cycles.iter().enumerate() {
            for p1 in 0..cy.len() {
                for p2 in p1 + 1..cy.len() {
                    out.push(SkeletonCut::CyclePair { cycle: c, p1, p2 });
                }
            }
        }
        out
    }

    /// Node bipartition of a cut: the side not containing `anchor_node`.
    pub fn cut_far_side(&self, cut: SkeletonCut, anchor_node: SkNode) -> BTreeSet<SkNode> {
        let removed: HashSet<(SkNode, SkNode)> = cut
            .struct_edges()
            .iter()
            .map(|&e| {
                let (a, b) = self.struct_edge_endpoints(e);
                (a.min(b), a.max(b))
            })
            .collect();
        let mut adj: Vec<Vec<SkNode>> = vec![Vec::new(); self.node_count()];
        let mut push = |a: SkNode, b: SkNode| {
            if !removed.contains(&(a.min(b), a.max(b))) {
                adj[a].push(b);
                adj[b].push(a);
            }
        };
        for &(a, b) in &self.tree_edges {
            push(a, b);
        }
        for cy in &self.cycles {
            for i in 0..cy.len() {
                push(cy[i], cy[(i + 1) % cy.len()]);
            }
        }
        let mut seen = vec![false; self.node_count()];
        seen[anchor_node] = true;
        let mut stack = vec![anchor_node];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        (0..self.node_count()).filter(|&v| !seen[v]).collect()
    }

    /// Terminal units on the far side of a cut (canonical bipartition key).
    pub fn cut_far_units(&self, cut: SkeletonCut, anchor_node: SkNode) -> BTreeSet<UnitId> {
        self.cut_far_side(cut, anchor_node)
            .iter()
            .filter_map(|&v| self.node_unit[v])
            .collect()
    }

    pub(crate) fn st_parent(&self, stv: usize) -> Option<usize> {
        self.st_parent[stv]
    }

    /// Step from skeleton-tree vertex `x` toward `target` (x != target).
    pub fn neighbor_toward(&self, x: usize, target: usize) -> usize {
        if self.lca.is_ancestor(x, target) {
            // level ancestor of target at depth(x)+1
            let mut v = target;
            let mut diff = self.lca.depth(target) - self.lca.depth(x) - 1;
            let mut k = 0;
            while diff > 0 {
                if diff & 1 == 1 {
                    v = self.jump[k][v];
                }
                diff >>= 1;
                k += 1;
            }
            v
        } else {
            self.st_parent[x].expect("root is an ancestor of everything")
        }
    }

    pub fn pos_in_cycle(&self, cycle: usize, node: SkNode) -> Option<usize> {
        self.cycle_pos[cycle].get(&node).copied()
    }

    pub fn cycle_adjacent(&self, cycle: usize, pos1: usize, pos2: usize) -> bool {
        let len = self.cycles[cycle].len();
        (pos1 + 1) % len == pos2 || (pos2 + 1) % len == pos1
    }

    /// Is the tree path x..y a proper cactus path (at most one structural
    /// edge per crossed cycle)? O(1) via the precomputed break depths.
    pub fn path_is_proper_fast(&self, x: usize, y: usize) -> bool {
        let l = self.lca.lca(x, y);
        if self.brk[x] > self.lca.depth(l) || self.brk[y] > self.lca.depth(l) {
            return false;
        }
        if self.is_cycle_stv(l) && l != x && l != y {
            let cy = self.cycle_of_stv(l);
            let n1 = self.neighbor_toward(l, x);
            let n2 = self.neighbor_toward(l, y);
            let p1 = self.pos_in_cycle(cy, n1).expect("cycle neighbor");
            let p2 = self.pos_in_cycle(cy, n2).expect("cycle neighbor");
            if !self.cycle_adjacent(cy, p1, p2) {
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone)]
struct Element {
    /// Blocks over ground elements (unit ids and markers); circular order
    /// for cycles, two blocks for tree cuts.
    blocks: Vec<BTreeSet<u64>>,
    is_cycle: bool,
}

/// Build the cactus for the given family of terminal-unit bipartitions.
/// `sides` are canonical (not containing `anchor_unit`), deduplicated.
pub fn build_skeleton(
    term_units: &[UnitId],
    sides: &[BTreeSet<UnitId>],
    anchor_unit: UnitId,
) -> Result<Skeleton> {
    if sides.is_empty() {
        return Err(internal("empty subbunch family"));
    }
    let ground: BTreeSet<u64> = term_units.iter().map(|&u| u as u64).collect();
    let fam: Vec<BTreeSet<u64>> = sides
        .iter()
        .map(|s| s.iter().map(|&u| u as u64).collect())
        .collect();

    // crossing components
    let cross = |a: &BTreeSet<u64>, b: &BTreeSet<u64>| -> bool {
        let inter = a.intersection(b).count();
        let a_only = a.len() - inter;
        let b_only = b.len() - inter;
        // the side not containing the anchor; the fourth corner holds it
        inter > 0 && a_only > 0 && b_only > 0
    };
    let mut comp: Vec<usize> = (0..fam.len()).collect();
    fn find(comp: &mut Vec<usize>, x: usize) -> usize {
        if comp[x] != x {
            let r = find(comp, comp[x]);
            comp[x] = r;
        }
        comp[x]
    }
    for i in 0..fam.len() {
        for j in i + 1..fam.len() {
            if cross(&fam[i], &fam[j]) {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a] = b;
            }
        }
    }
    let mut classes: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..fam.len() {
        let r = find(&mut comp, i);
        classes.entry(r).or_default().push(i);
    }
    let mut class_list: Vec<Vec<usize>> = classes.into_values().collect();
    class_list.sort_by_key(|c| *c.iter().min().unwrap());

    let mut cycle_elements: Vec<Element> = Vec::new();
    let mut singleton_sides: Vec<&BTreeSet<u64>> = Vec::new();
    for class in &class_list {
        if class.len() >= 2 {
            let blocks = circular_partition(&ground, &fam, class, &cross)?;
            cycle_elements.push(Element {
                blocks,
                is_cycle: true,
            });
        } else {
            singleton_sides.push(&fam[class[0]]);
        }
    }
    // tree cuts are the singletons not already represented as an arc of a
    // circular partition
    let mut elements = cycle_elements;
    for side in singleton_sides {
        let represented = elements
            .iter()
            .filter(|e| e.is_cycle)
            .any(|e| arc_of(&e.blocks, side).is_some());
        if !represented {
            elements.push(Element {
                blocks: vec![side.clone(), ground.difference(side).copied().collect()],
                is_cycle: false,
            });
        }
    }

    // recursive assembly over the laminar structure
    let mut builder = Builder {
        members: Vec::new(),
        tree_edges: Vec::new(),
        cycles: Vec::new(),
        merged: Vec::new(),
        next_marker: (term_units.iter().max().copied().unwrap_or(0) as u64) + 1,
    };
    assemble(&ground, elements, &mut builder)?;
    builder.finish(term_units, anchor_unit)
}

/// Circular partition of a crossing-connected class, by inserting the cuts
/// in crossing-BFS order into an initially 4-block circle.
fn circular_partition(
    ground: &BTreeSet<u64>,
    fam: &[BTreeSet<u64>],
    class: &[usize],
    cross: &dyn Fn(&BTreeSet<u64>, &BTreeSet<u64>) -> bool,
) -> Result<Vec<BTreeSet<u64>>> {
    // BFS order over the crossing graph, starting from the smallest index
    let mut order = vec![class[0]];
    let mut seen: HashSet<usize> = HashSet::from([class[0]]);
    let mut qi = 0;
    while qi < order.len() {
        let cur = order[qi];
        qi += 1;
        for &other in class {
            if !seen.contains(&other) && cross(&fam[cur], &fam[other]) {
                seen.insert(other);
                order.push(other);
            }
        }
    }
    if order.len() != class.len() {
        return Err(internal("crossing class is not crossing-connected"));
    }
    let a = &fam[order[0]];
    let b = &fam[order[1]];
    let mut blocks: Vec<BTreeSet<u64>> = vec![
        a.intersection(b).copied().collect(),
        a.difference(b).copied().collect(),
        ground
            .iter()
            .filter(|x| !a.contains(x) && !b.contains(x))
            .copied()
            .collect(),
        b.difference(a).copied().collect(),
    ];
    for &ci in &order[2..] {
        insert_cut(&mut blocks, &fam[ci])?;
    }
    // all class cuts must be arcs of the final circle
    for &ci in class {
        if arc_of(&blocks, &fam[ci]).is_none() {
            return Err(internal("crossing class is not circularly representable"));
        }
    }
    Ok(blocks)
}

#[derive(Clone, Copy, PartialEq)]
enum Pat {
    In,
    Out,
    Split,
}

fn insert_cut(blocks: &mut Vec<BTreeSet<u64>>, side: &BTreeSet<u64>) -> Result<()> {
    let k = blocks.len();
    let pat: Vec<Pat> = blocks
        .iter()
        .map(|b| {
            let inter = b.intersection(side).count();
            if inter == 0 {
                Pat::Out
            } else if inter == b.len() {
                Pat::In
            } else {
                Pat::Split
            }
        })
        .collect();
    let active = |i: usize| pat[i] != Pat::Out;
    let act_count = (0..k).filter(|&i| active(i)).count();
    if act_count == 0 || act_count == k {
        return Err(internal("cut does not split the circular partition"));
    }
    // the active blocks must form one circular run
    let mut start = usize::MAX;
    for i in 0..k {
        if active(i) && !active((i + k - 1) % k) {
            if start != usize::MAX {
                return Err(internal("cut is not a circular arc"));
            }
            start = i;
        }
    }
    if start == usize::MAX {
        return Err(internal("cut is not a circular arc"));
    }
    for off in 0..act_count {
        if !active((start + off) % k) {
            return Err(internal("cut is not a circular arc"));
        }
    }
    let end = (start + act_count - 1) % k; // last active block
    if start == end && pat[start] == Pat::Split {
        // a cut whose complement hides inside one block crosses nothing
        // already inserted; BFS order rules this out
        return Err(internal("ambiguous cut insertion"));
    }
    for off in 0..act_count {
        let i = (start + off) % k;
        if pat[i] == Pat::Split && i != start && i != end {
            return Err(internal("cut splits an interior block"));
        }
    }
    // rebuild the circle with boundary blocks split; within the run the
    // in-part faces inward
    let mut next: Vec<BTreeSet<u64>> = Vec::with_capacity(k + 2);
    for off in 0..k {
        let i = (start + off) % k;
        let inb: BTreeSet<u64> = blocks[i].intersection(side).copied().collect();
        let outb: BTreeSet<u64> = blocks[i].difference(side).copied().collect();
        match pat[i] {
            Pat::In | Pat::Out => next.push(blocks[i].clone()),
            Pat::Split => {
                if i == start {
                    // out-part first, toward the preceding out region
                    next.push(outb);
                    next.push(inb);
                } else {
                    next.push(inb);
                    next.push(outb);
                }
            }
        }
    }
    *blocks = next;
    Ok(())
}

/// If `side` is a union of consecutive blocks, return the run as
/// (start, len) over block indices.
fn arc_of(blocks: &[BTreeSet<u64>], side: &BTreeSet<u64>) -> Option<(usize, usize)> {
    let k = blocks.len();
    let mut inside = vec![false; k];
    for (i, b) in blocks.iter().enumerate() {
        let inter = b.intersection(side).count();
        if inter == b.len() {
            inside[i] = true;
        } else if inter != 0 {
            return None; // partially covered block
        }
    }
    let cnt = inside.iter().filter(|&&x| x).count();
    if cnt == 0 || cnt == k {
        return None;
    }
    let covered: usize = (0..k).filter(|&i| inside[i]).map(|i| blocks[i].len()).sum();
    if covered != side.len() {
        return None;
    }
    let mut start = usize::MAX;
    for i in 0..k {
        if inside[i] && !inside[(i + k - 1) % k] {
            if start != usize::MAX {
                return None;
            }
            start = i;
        }
    }
    if start == usize::MAX {
        return None;
    }
    for off in 0..cnt {
        if !inside[(start + off) % k] {
            return None;
        }
    }
    Some((start, cnt))
}

struct Builder {
    members: Vec<BTreeSet<u64>>,
    tree_edges: Vec<(usize, usize)>,
    cycles: Vec<Vec<usize>>,
    merged: Vec<usize>,
    next_marker: u64,
}

impl Builder {
    fn new_node(&mut self, members: BTreeSet<u64>) -> usize {
        self.members.push(members);
        self.merged.push(self.members.len() - 1);
        self.members.len() - 1
    }

    fn find(&mut self, x: usize) -> usize {
        if self.merged[x] != x {
            let r = self.find(self.merged[x]);
            self.merged[x] = r;
        }
        self.merged[x]
    }

    fn merge(&mut self, from: usize, into: usize) {
        let (f, i) = (self.find(from), self.find(into));
        if f == i {
            return;
        }
        let moved = std::mem::take(&mut self.members[f]);
        self.members[i].extend(moved);
        self.merged[f] = i;
    }

    fn finish(mut self, term_units: &[UnitId], anchor_unit: UnitId) -> Result<Skeleton> {
        let unit_set: HashSet<u64> = term_units.iter().map(|&u| u as u64).collect();
        // compact ids
        let mut remap: HashMap<usize, usize> = HashMap::new();
        let ids: Vec<usize> = (0..self.members.len()).collect();
        let mut node_unit: Vec<Option<UnitId>> = Vec::new();
        for id in ids {
            let r = self.find(id);
            if remap.contains_key(&r) {
                continue;
            }
            let units: Vec<u64> = self.members[r]
                .iter()
                .copied()
                .filter(|x| unit_set.contains(x))
                .collect();
            if units.len() > 1 {
                return Err(internal("cactus node hosts two terminal units"));
            }
            remap.insert(r, node_unit.len());
            node_unit.push(units.first().map(|&u| u as UnitId));
        }
        let resolve = |b: &mut Builder, x: usize| {
            let r = b.find(x);
            remap[&r]
        };
        let tree_edges: Vec<(usize, usize)> = {
            let raw = self.tree_edges.clone();
            raw.into_iter()
                .map(|(a, b)| {
                    let (x, y) = (resolve(&mut self, a), resolve(&mut self, b));
                    (x.min(y), x.max(y))
                })
                .collect()
        };
        let mut cycles: Vec<Vec<usize>> = {
            let raw = self.cycles.clone();
            raw.into_iter()
                .map(|cy| cy.into_iter().map(|v| resolve(&mut self, v)).collect())
                .collect()
        };
        // normalize cycle orders: start at the smallest node id, run toward
        // its smaller neighbor
        for cy in cycles.iter_mut() {
            let k = cy.len();
            let (mi, _) = cy.iter().enumerate().min_by_key(|&(_, v)| v).unwrap();
            let mut rot: Vec<usize> = (0..k).map(|i| cy[(mi + i) % k]).collect();
            if rot[1] > rot[k - 1] {
                rot[1..].reverse();
            }
            *cy = rot;
        }
        cycles.sort();
        let mut tree_edges = tree_edges;
        tree_edges.sort_unstable();

        let unit_node: HashMap<UnitId, SkNode> = node_unit
            .iter()
            .enumerate()
            .filter_map(|(i, u)| u.map(|u| (u, i)))
            .collect();

        // skeleton tree
        let n = node_unit.len();
        let stv_count = n + cycles.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); stv_count];
        for &(a, b) in &tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for (c, cy) in cycles.iter().enumerate() {
            for &v in cy {
                adj[n + c].push(v);
                adj[v].push(n + c);
            }
        }
        let root = *unit_node
            .get(&anchor_unit)
            .ok_or_else(|| internal("anchor unit missing from skeleton"))?;
        let mut st_parent: Vec<Option<usize>> = vec![None; stv_count];
        let mut seen = vec![false; stv_count];
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    st_parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(internal("skeleton is not connected"));
        }
        let lca = Lca::new(&st_parent);
        let levels = (usize::BITS - stv_count.leading_zeros()) as usize;
        let mut jump = Vec::with_capacity(levels);
        jump.push(
            st_parent
                .iter()
                .enumerate()
                .map(|(i, p)| p.unwrap_or(i))
                .collect::<Vec<_>>(),
        );
        for k in 1..levels {
            let prev: &Vec<usize> = &jump[k - 1];
            jump.push(prev.iter().map(|&p| prev[p]).collect());
        }
        let cycle_pos: Vec<HashMap<SkNode, usize>> = cycles
            .iter()
            .map(|cy| cy.iter().enumerate().map(|(i, &v)| (v, i)).collect())
            .collect();
        // break depths for O(1) properness tests: passing child -> cycle ->
        // parent at non-adjacent positions breaks properness
        let mut brk = vec![0usize; stv_count];
        let mut order: Vec<usize> = vec![root];
        let mut qi = 0;
        while qi < order.len() {
            let v = order[qi];
            qi += 1;
            for &w in &adj[v] {
                if st_parent[w] == Some(v) {
                    order.push(w);
                }
            }
        }
        for &v in &order {
            let Some(p) = st_parent[v] else { continue };
            brk[v] = brk[p];
            if p >= n {
                // parent is a cycle vertex: crossing v -> p -> parent(p)
                if let Some(g) = st_parent[p] {
                    let cy = p - n;
                    let pv = cycle_pos[cy][&v];
                    let pg = cycle_pos[cy][&g];
                    let len = cycles[cy].len();
                    let adjacent = (pv + 1) % len == pg || (pg + 1) % len == pv;
                    if !adjacent {
                        brk[v] = brk[v].max(lca.depth(p));
                    }
                }
            }
        }
        Ok(Skeleton {
            node_unit,
            unit_node,
            tree_edges,
            cycles,
            st_parent,
            lca,
            jump,
            cycle_pos,
            brk,
        })
    }
}

fn assemble(ground: &BTreeSet<u64>, mut elements: Vec<Element>, builder: &mut Builder) -> Result<HashMap<u64, usize>> {
    if elements.is_empty() {
        let id = builder.new_node(ground.clone());
        return Ok(ground.iter().map(|&e| (e, id)).collect());
    }
    // deterministic pick: smallest serialized block signature
    elements.sort_by_key(|e| e.blocks.clone());
    let e0 = elements.remove(0);
    let k = e0.blocks.len();
    let piece: Vec<usize> = (0..k).map(|_| builder.new_node(BTreeSet::new())).collect();
    if e0.is_cycle {
        builder.cycles.push(piece.clone());
    } else {
        builder.tree_edges.push((piece[0], piece[1]));
    }
    // route the remaining elements into the block hosting them
    let mut per_block: Vec<Vec<(Element, usize)>> = vec![Vec::new(); k];
    for el in elements {
        let mut host = None;
        for (i, b) in e0.blocks.iter().enumerate() {
            let inside = el.blocks.iter().filter(|blk| blk.is_subset(b)).count();
            if inside == el.blocks.len() - 1 {
                host = Some((i, el.blocks.iter().position(|blk| !blk.is_subset(b)).unwrap()));
                break;
            }
        }
        let (host, outlier) =
            host.ok_or_else(|| internal("element does not fit the laminar structure"))?;
        per_block[host].push((el, outlier));
    }
    let mut map = HashMap::new();
    for (i, block) in e0.blocks.iter().enumerate() {
        let marker = builder.next_marker;
        builder.next_marker += 1;
        let mut sub_ground: BTreeSet<u64> = block.clone();
        sub_ground.insert(marker);
        let sub_elements: Vec<Element> = per_block[i]
            .drain(..)
            .map(|(mut el, outlier)| {
                let mut nb: BTreeSet<u64> =
                    el.blocks[outlier].intersection(block).copied().collect();
                nb.insert(marker);
                el.blocks[outlier] = nb;
                el
            })
            .collect();
        let submap = assemble(&sub_ground, sub_elements, builder)?;
        let attach = submap[&marker];
        builder.merge(attach, piece[i]);
        for (kk, v) in submap {
            if kk != marker {
                map.insert(kk, v);
            }
        }
    }
    Ok(map)
}

/// Check the cut family of the built skeleton against the subbunch family:
/// both inclusions, plus distinctness of cut bipartitions.
pub fn validate_skeleton(
    sk: &Skeleton,
    sides: &[BTreeSet<UnitId>],
    anchor_unit: UnitId,
) -> Result<HashMap<BTreeSet<UnitId>, SkeletonCut>> {
    let anchor_node = sk.unit_node[&anchor_unit];
    let mut by_side: HashMap<BTreeSet<UnitId>, SkeletonCut> = HashMap::new();
    for cut in sk.all_cuts() {
        let far = sk.cut_far_units(cut, anchor_node);
        if far.is_empty() {
            return Err(internal(format!("skeleton cut {cut:?} does not split the terminal units")));
        }
        if by_side.insert(far.clone(), cut).is_some() {
            return Err(internal(format!("duplicate skeleton cut bipartition {far:?}")));
        }
    }
    for side in sides {
        if !by_side.contains_key(side) {
            return Err(internal(format!("subbunch {side:?} not realized by any skeleton cut")));
        }
    }
    for key in by_side.keys() {
        if !sides.contains(key) {
            return Err(internal(format!("skeleton cut side {key:?} is not a subbunch")));
        }
    }
    // cycles pairwise share at most one node
    for i in 0..sk.cycles.len() {
        for j in i + 1..sk.cycles.len() {
            let a: HashSet<_> = sk.cycles[i].iter().collect();
            let shared = sk.cycles[j].iter().filter(|v| a.contains(v)).count();
            if shared > 1 {
                return Err(internal("two cycles share more than one node"));
            }
        }
    }
    Ok(by_side)
}
