//! The strip: a DAG-shaped quotient graph holding all (s,t)-mincuts.
//!
//! Nodes are the equivalence classes of "never separated by any
//! (s,t)-mincut"; the source node is the nearest mincut from s, the sink
//! node the nearest from t. Every edge between two nodes is saturated by a
//! maximum flow and is stored with its flow orientation; the side-s /
//! side-t inherent partition of a non-terminal falls out of that
//! orientation. A mincut side corresponds exactly to a transversal: a node
//! set containing the source, avoiding the sink, and closed under flow
//! predecessors.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{internal, invalid, Result};
use crate::flow::{max_flow, residual_coreach, residual_reach};
use crate::graph::{Cut, EdgeId, Multigraph};

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripEdge {
    pub id: EdgeId,
    /// Flow tail (side of the source).
    pub from: NodeId,
    /// Flow head (side of the sink).
    pub to: NodeId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    TowardSource,
    TowardSink,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Strip {
    value: usize,
    s_vertex: usize,
    t_vertex: usize,
    /// vertex (of the graph the strip was built on) -> node; nodes are
    /// numbered in topological order: source = 0, sink = last.
    node_of: Vec<NodeId>,
    members: Vec<Vec<usize>>,
    origin_members: Vec<Vec<usize>>,
    cross: Vec<StripEdge>,
    preds: Vec<Vec<NodeId>>,
    succs: Vec<Vec<NodeId>>,
}

impl Strip {
    /// Build the strip of all (s,t)-mincuts from a maximum flow: source
    /// node = residual reach of s, sink node = residual co-reach of t,
    /// remaining nodes = strongly connected components of the residual
    /// graph, ordered topologically (ties by smallest original vertex id).
    pub fn build(g: &Multigraph, s: usize, t: usize) -> Result<Strip> {
        g.check_vertex(s)?;
        g.check_vertex(t)?;
        if s == t {
            return Err(invalid("strip endpoints must differ"));
        }
        let n = g.vertex_count();
        let flow = max_flow(g, s, t)?;
        let reach = residual_reach(g, &flow, s);
        let coreach = residual_coreach(g, &flow, t);
        if (0..n).any(|v| reach[v] && coreach[v]) {
            return Err(internal("residual reach and co-reach overlap"));
        }

        // group middle vertices by residual SCC
        let scc = residual_scc(g, &flow);
        let mut raw_of = vec![usize::MAX; n];
        let mut raw_members: Vec<Vec<usize>> = vec![Vec::new(), Vec::new()];
        for v in 0..n {
            if reach[v] {
                raw_of[v] = 0;
            } else if coreach[v] {
                raw_of[v] = 1;
            }
        }
        let mut scc_node = std::collections::HashMap::new();
        for v in 0..n {
            if raw_of[v] != usize::MAX {
                continue;
            }
            let id = *scc_node.entry(scc[v]).or_insert_with(|| {
                raw_members.push(Vec::new());
                raw_members.len() - 1
            });
            raw_of[v] = id;
        }
        for v in 0..n {
            raw_members[raw_of[v]].push(v);
        }

        // flow-oriented cross edges
        let mut raw_cross = Vec::new();
        for (i, e) in g.edges().iter().enumerate() {
            let (a, b) = (raw_of[e.u], raw_of[e.v]);
            if a == b {
                continue;
            }
            let (from, to) = match flow.net[i] {
                1 => (a, b),
                -1 => (b, a),
                _ => return Err(internal("unsaturated edge crosses strip nodes")),
            };
            raw_cross.push((e.id, from, to));
        }

        // topological numbering by Kahn's algorithm, tie-break on the
        // smallest original vertex contained in a node
        let node_count = raw_members.len();
        let mut indeg = vec![0usize; node_count];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); node_count];
        for &(_, from, to) in &raw_cross {
            indeg[to] += 1;
            out[from].push(to);
        }
        let min_origin: Vec<usize> = raw_members
            .iter()
            .map(|ms| ms.iter().flat_map(|&v| g.origins(v)).copied().min().unwrap())
            .collect();
        let mut heap = std::collections::BinaryHeap::new();
        for v in 0..node_count {
            if indeg[v] == 0 {
                heap.push(std::cmp::Reverse((min_origin[v], v)));
            }
        }
        let mut order = Vec::with_capacity(node_count);
        while let Some(std::cmp::Reverse((_, v))) = heap.pop() {
            order.push(v);
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(std::cmp::Reverse((min_origin[w], w)));
                }
            }
        }
        if order.len() != node_count || order[0] != 0 || *order.last().unwrap() != 1 {
            return Err(internal("strip DAG is not source-to-sink ordered"));
        }
        let mut rank = vec![0usize; node_count];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }

        let node_of: Vec<NodeId> = raw_of.iter().map(|&r| rank[r]).collect();
        let mut members = vec![Vec::new(); node_count];
        let mut origin_members = vec![Vec::new(); node_count];
        for (raw, ms) in raw_members.into_iter().enumerate() {
            let nid = rank[raw];
            origin_members[nid] = ms.iter().flat_map(|&v| g.origins(v)).copied().collect();
            origin_members[nid].sort_unstable();
            members[nid] = ms;
        }
        let mut cross: Vec<StripEdge> = raw_cross
            .into_iter()
            .map(|(id, f, t)| StripEdge {
                id,
                from: rank[f],
                to: rank[t],
            })
            .collect();
        cross.sort_by_key(|e| e.id);

        let mut strip = Strip {
            value: flow.value,
            s_vertex: s,
            t_vertex: t,
            node_of,
            members,
            origin_members,
            cross,
            preds: Vec::new(),
            succs: Vec::new(),
        };
        strip.rebuild_adjacency();
        strip.check_balance()?;
        Ok(strip)
    }

    fn rebuild_adjacency(&mut self) {
        let nc = self.members.len();
        let mut preds = vec![BTreeSet::new(); nc];
        let mut succs = vec![BTreeSet::new(); nc];
        for e in &self.cross {
            preds[e.to].insert(e.from);
            succs[e.from].insert(e.to);
        }
        self.preds = preds.into_iter().map(|s| s.into_iter().collect()).collect();
        self.succs = succs.into_iter().map(|s| s.into_iter().collect()).collect();
    }

    fn check_balance(&self) -> Result<()> {
        for x in self.non_terminals() {
            if self.side_edges(x, Dir::TowardSource).len() != self.side_edges(x, Dir::TowardSink).len() {
                return Err(internal(format!("unbalanced inherent partition at node {x}")));
            }
        }
        Ok(())
    }

    pub fn value(&self) -> usize {
        self.value
    }

    pub fn source(&self) -> NodeId {
        0
    }

    pub fn sink(&self) -> NodeId {
        self.members.len() - 1
    }

    pub fn node_count(&self) -> usize {
        self.members.len()
    }

    pub fn s_vertex(&self) -> usize {
        self.s_vertex
    }

    pub fn t_vertex(&self) -> usize {
        self.t_vertex
    }

    pub fn non_terminals(&self) -> impl Iterator<Item = NodeId> + '_ {
        1..self.sink()
    }

    pub fn is_terminal(&self, x: NodeId) -> bool {
        x == self.source() || x == self.sink()
    }

    pub fn node_of(&self, vertex: usize) -> NodeId {
        self.node_of[vertex]
    }

    /// Vertices (of the build graph) in node `x`.
    pub fn members(&self, x: NodeId) -> &[usize] {
        &self.members[x]
    }

    /// Original vertices represented by node `x`.
    pub fn origin_members(&self, x: NodeId) -> &[usize] {
        &self.origin_members[x]
    }

    pub fn cross_edges(&self) -> &[StripEdge] {
        &self.cross
    }

    pub fn cross_edge(&self, id: EdgeId) -> Option<&StripEdge> {
        self.cross.iter().find(|e| e.id == id)
    }

    /// An edge lies in some (s,t)-mincut iff its endpoints map to
    /// different nodes.
    pub fn edge_in_some_mincut(&self, u: usize, v: usize) -> bool {
        self.node_of[u] != self.node_of[v]
    }

    /// Edge ids of one side of the inherent partition of node `x`:
    /// `TowardSource` lists edges whose flow enters `x`.
    pub fn side_edges(&self, x: NodeId, dir: Dir) -> Vec<EdgeId> {
        self.cross
            .iter()
            .filter(|e| match dir {
                Dir::TowardSource => e.to == x,
                Dir::TowardSink => e.from == x,
            })
            .map(|e| e.id)
            .collect()
    }

    /// Which side of node `x`'s inherent partition edge `id` lies on, if it
    /// is incident on `x` at all.
    pub fn side_of_edge(&self, x: NodeId, id: EdgeId) -> Option<Dir> {
        let e = self.cross_edge(id)?;
        if e.to == x {
            Some(Dir::TowardSource)
        } else if e.from == x {
            Some(Dir::TowardSink)
        } else {
            None
        }
    }

    /// A node set containing the source and avoiding the sink is a
    /// transversal iff it is closed under flow predecessors; its vertices
    /// then define an (s,t)-mincut.
    pub fn is_transversal(&self, side: &BTreeSet<NodeId>) -> Result<bool> {
        if !side.contains(&self.source()) || side.contains(&self.sink()) {
            return Err(invalid("side must contain the source node and avoid the sink node"));
        }
        if side.iter().any(|&x| x >= self.node_count()) {
            return Err(invalid("node id out of range"));
        }
        Ok(self
            .cross
            .iter()
            .all(|e| !side.contains(&e.to) || side.contains(&e.from)))
    }

    /// Reachability cone of a non-terminal along coherent paths leaving on
    /// the given side. Toward the source this is the ancestor closure in
    /// the flow DAG; it always contains the corresponding terminal.
    pub fn reachability_cone(&self, x: NodeId, dir: Dir) -> Result<BTreeSet<NodeId>> {
        if self.is_terminal(x) {
            return Err(invalid("reachability cone of a terminal node"));
        }
        Ok(self.cone_unchecked(x, dir))
    }

    pub(crate) fn cone_unchecked(&self, x: NodeId, dir: Dir) -> BTreeSet<NodeId> {
        let mut seen = BTreeSet::from([x]);
        let mut stack = vec![x];
        while let Some(v) = stack.pop() {
            let nexts = match dir {
                Dir::TowardSource => &self.preds[v],
                Dir::TowardSink => &self.succs[v],
            };
            for &w in nexts {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Ancestor closure of a node set (always adds the source).
    pub fn close_toward_source(&self, nodes: &BTreeSet<NodeId>) -> BTreeSet<NodeId> {
        let mut seen: BTreeSet<NodeId> = nodes.clone();
        seen.insert(self.source());
        let mut stack: Vec<NodeId> = seen.iter().copied().collect();
        while let Some(v) = stack.pop() {
            for &w in &self.preds[v] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Topological order of the nodes; the canonical numbering already is
    /// one, so rank(x) == x.
    pub fn topological_order(&self) -> Vec<usize> {
        (0..self.node_count()).collect()
    }

    /// Mincut from the topological prefix up to node `x` (inclusive).
    pub fn cut_from_prefix(&self, x: NodeId) -> Result<Cut> {
        if x == self.sink() {
            return Err(invalid("prefix cut may not include the sink"));
        }
        if x >= self.node_count() {
            return Err(invalid("node id out of range"));
        }
        let side = (0..=x)
            .flat_map(|v| self.origin_members[v].iter().copied())
            .collect();
        Ok(Cut::new(side, self.value))
    }

    /// Original vertices covered by a node set.
    pub fn vertex_side(&self, nodes: &BTreeSet<NodeId>) -> BTreeSet<usize> {
        nodes
            .iter()
            .flat_map(|&x| self.origin_members[x].iter().copied())
            .collect()
    }

    /// All transversals (exponential; reference/test use only).
    pub fn enumerate_transversals(&self) -> Result<Vec<BTreeSet<NodeId>>> {
        let middles: Vec<NodeId> = self.non_terminals().collect();
        if middles.len() > 20 {
            return Err(crate::error::Error::Capacity {
                what: "strip transversal enumeration",
                limit: 20,
                actual: middles.len(),
            });
        }
        let mut out = Vec::new();
        for mask in 0u32..(1 << middles.len()) {
            let mut side: BTreeSet<NodeId> = BTreeSet::from([self.source()]);
            for (i, &x) in middles.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    side.insert(x);
                }
            }
            if self.is_transversal(&side)? {
                out.push(side);
            }
        }
        Ok(out)
    }

    /// Quotient strip with a transversal merged into the source node: the
    /// result holds exactly the mincuts enclosing the merged side.
    pub fn merge_into_source(&self, absorb: &BTreeSet<NodeId>) -> Result<Strip> {
        if !self.is_transversal(absorb)? {
            return Err(invalid("merged side must be a transversal"));
        }
        let mut map = vec![usize::MAX; self.node_count()];
        let mut next = 1;
        for x in 0..self.node_count() {
            if absorb.contains(&x) {
                map[x] = 0;
            } else {
                map[x] = next;
                next += 1;
            }
        }
        let mut members = vec![Vec::new(); next];
        let mut origin_members = vec![Vec::new(); next];
        for x in 0..self.node_count() {
            members[map[x]].extend_from_slice(&self.members[x]);
            origin_members[map[x]].extend_from_slice(&self.origin_members[x]);
        }
        for m in members.iter_mut().chain(origin_members.iter_mut()) {
            m.sort_unstable();
        }
        let cross: Vec<StripEdge> = self
            .cross
            .iter()
            .filter_map(|e| {
                let (f, t) = (map[e.from], map[e.to]);
                (f != t).then_some(StripEdge { id: e.id, from: f, to: t })
            })
            .collect();
        let node_of = self.node_of.iter().map(|&x| map[x]).collect();
        let mut strip = Strip {
            value: self.value,
            s_vertex: self.s_vertex,
            t_vertex: self.t_vertex,
            node_of,
            members,
            origin_members,
            cross,
            preds: Vec::new(),
            succs: Vec::new(),
        };
        strip.rebuild_adjacency();
        Ok(strip)
    }

    /// Structure equality up to node renaming: same source/sink vertex
    /// sets, and the same set of (members, side-s, side-t) triples for
    /// non-terminals, all in original vertex ids / edge ids.
    pub fn same_structure(&self, other: &Strip) -> bool {
        if self.origin_members[self.source()] != other.origin_members[other.source()] {
            return false;
        }
        if self.origin_members[self.sink()] != other.origin_members[other.sink()] {
            return false;
        }
        let sig = |s: &Strip| {
            let mut v: Vec<(Vec<usize>, Vec<EdgeId>, Vec<EdgeId>)> = s
                .non_terminals()
                .map(|x| {
                    let mut ss = s.side_edges(x, Dir::TowardSource);
                    let mut st = s.side_edges(x, Dir::TowardSink);
                    ss.sort_unstable();
                    st.sort_unstable();
                    (s.origin_members(x).to_vec(), ss, st)
                })
                .collect();
            v.sort();
            v
        };
        sig(self) == sig(other)
    }

    /// Construct a strip directly from parts (used by the carcass, which
    /// derives strips from stored structures rather than from a flow).
    /// Nodes are renumbered canonically; `parts` lists per node its build
    /// vertices, `origin` its original vertices.
    pub(crate) fn from_parts(
        value: usize,
        s_vertex: usize,
        t_vertex: usize,
        vertex_count: usize,
        parts: Vec<(Vec<usize>, Vec<usize>)>,
        source: usize,
        sink: usize,
        cross: Vec<StripEdge>,
    ) -> Result<Strip> {
        let count = parts.len();
        // topological order over the flow DAG
        let mut indeg = vec![0usize; count];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); count];
        for e in &cross {
            indeg[e.to] += 1;
            out[e.from].push(e.to);
        }
        let min_origin: Vec<usize> = parts
            .iter()
            .map(|(_, o)| o.iter().copied().min().unwrap_or(usize::MAX))
            .collect();
        let mut heap = std::collections::BinaryHeap::new();
        for v in 0..count {
            if indeg[v] == 0 {
                heap.push(std::cmp::Reverse((min_origin[v], v)));
            }
        }
        let mut order = Vec::with_capacity(count);
        while let Some(std::cmp::Reverse((_, v))) = heap.pop() {
            order.push(v);
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(std::cmp::Reverse((min_origin[w], w)));
                }
            }
        }
        if order.len() != count || order[0] != source || *order.last().unwrap() != sink {
            return Err(internal("derived strip is not a source-to-sink DAG"));
        }
        let mut rank = vec![0usize; count];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }
        let mut node_of = vec![usize::MAX; vertex_count];
        let mut members = vec![Vec::new(); count];
        let mut origin_members = vec![Vec::new(); count];
        for (i, (vs, os)) in parts.into_iter().enumerate() {
            for &v in &vs {
                node_of[v] = rank[i];
            }
            members[rank[i]] = vs;
            origin_members[rank[i]] = os;
        }
        for m in members.iter_mut().chain(origin_members.iter_mut()) {
            m.sort_unstable();
        }
        let mut cross: Vec<StripEdge> = cross
            .into_iter()
            .map(|e| StripEdge {
                id: e.id,
                from: rank[e.from],
                to: rank[e.to],
            })
            .collect();
        cross.sort_by_key(|e| e.id);
        let mut strip = Strip {
            value,
            s_vertex,
            t_vertex,
            node_of,
            members,
            origin_members,
            cross,
            preds: Vec::new(),
            succs: Vec::new(),
        };
        strip.rebuild_adjacency();
        strip.check_balance()?;
        Ok(strip)
    }
}

/// SCC ids of the residual digraph (Kosaraju, iterative).
fn residual_scc(g: &Multigraph, flow: &crate::flow::Flow) -> Vec<usize> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let arc = |v: usize, ei: usize, rev: bool| -> bool {
        let e = &g.edges()[ei];
        let cap_fwd = if v == e.u {
            1 - flow.net[ei] as i32
        } else {
            1 + flow.net[ei] as i32
        };
        if rev {
            2 - cap_fwd > 0
        } else {
            cap_fwd > 0
        }
    };
    // first pass: finish order
    let mut finish = Vec::with_capacity(n);
    let mut state = vec![0u8; n];
    for start in 0..n {
        if state[start] != 0 {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        state[start] = 1;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < adj[v].len() {
                let (ei, w) = adj[v][*i];
                *i += 1;
                if state[w] == 0 && arc(v, ei, false) {
                    state[w] = 1;
                    stack.push((w, 0));
                }
            } else {
                state[v] = 2;
                finish.push(v);
                stack.pop();
            }
        }
    }
    // second pass: reversed arcs in reverse finish order
    let mut comp = vec![usize::MAX; n];
    let mut c = 0;
    for &start in finish.iter().rev() {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = c;
        while let Some(v) = stack.pop() {
            for &(ei, w) in &adj[v] {
                if comp[w] == usize::MAX && arc(v, ei, true) {
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
    use crate::gen::fixtures;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn p3_strip() {
        let p3 = fixtures::p3();
        let st = Strip::build(&p3, 0, 2).unwrap();
        assert_eq!(st.node_count(), 3);
        assert_eq!(st.origin_members(st.source()), &[0]);
        assert_eq!(st.origin_members(st.sink()), &[2]);
        assert_eq!(st.side_edges(1, Dir::TowardSource), vec![0]);
        assert_eq!(st.side_edges(1, Dir::TowardSink), vec![1]);
    }

    #[test]
    fn c4_strip() {
        let c4 = fixtures::c4();
        let st = Strip::build(&c4, 0, 2).unwrap();
        assert_eq!(st.node_count(), 4);
        // non-terminals {v2} and {v4}, each with one edge per side;
        // tie-break places {v2}(=vertex 1) before {v4}(=vertex 3)
        assert_eq!(st.origin_members(1), &[1]);
        assert_eq!(st.origin_members(2), &[3]);
        for x in [1, 2] {
            assert_eq!(st.side_edges(x, Dir::TowardSource).len(), 1);
            assert_eq!(st.side_edges(x, Dir::TowardSink).len(), 1);
        }
    }

    #[test]
    fn k4_strip() {
        let k4 = fixtures::k4();
        let st = Strip::build(&k4, 0, 2).unwrap();
        assert_eq!(st.node_count(), 3);
        assert_eq!(st.origin_members(1), &[1, 3]); // {v2,v4} as one node
        let mut ss = st.side_edges(1, Dir::TowardSource);
        ss.sort_unstable();
        assert_eq!(ss, vec![0, 2]); // (v1,v2), (v1,v4)
        let mut ts = st.side_edges(1, Dir::TowardSink);
        ts.sort_unstable();
        assert_eq!(ts, vec![3, 5]); // (v2,v3), (v4,v3)
        // chord (v1,v3) runs source -> sink
        let chord = st.cross_edge(1).unwrap();
        assert_eq!((chord.from, chord.to), (st.source(), st.sink()));
    }

    #[test]
    fn transversals() {
        let c4 = fixtures::c4();
        let st = Strip::build(&c4, 0, 2).unwrap();
        assert!(st.is_transversal(&set(&[0])).unwrap());
        // {source, node-of-v2} is a transversal with cut {v1,v2}
        let nv2 = st.node_of(1);
        assert!(st.is_transversal(&set(&[0, nv2])).unwrap());
        assert!(st.is_transversal(&set(&[0, 1, 2])).unwrap());
        assert!(st.is_transversal(&set(&[])).is_err());
        let k4 = fixtures::k4();
        let st = Strip::build(&k4, 0, 2).unwrap();
        assert!(st.is_transversal(&set(&[0, 1])).unwrap()); // {v1,v2,v4}
    }

    #[test]
    fn cones() {
        let p3 = fixtures::p3();
        let st = Strip::build(&p3, 0, 2).unwrap();
        assert_eq!(st.reachability_cone(1, Dir::TowardSource).unwrap(), set(&[0, 1]));
        assert!(st.reachability_cone(0, Dir::TowardSource).is_err());

        let c4 = fixtures::c4();
        let st = Strip::build(&c4, 0, 2).unwrap();
        let nv2 = st.node_of(1);
        assert_eq!(
            st.reachability_cone(nv2, Dir::TowardSource).unwrap(),
            set(&[st.source(), nv2])
        );

        let k4 = fixtures::k4();
        let st = Strip::build(&k4, 0, 2).unwrap();
        assert_eq!(st.reachability_cone(1, Dir::TowardSource).unwrap(), set(&[0, 1]));
    }

    #[test]
    fn prefix_cuts() {
        let p3 = fixtures::p3();
        let st = Strip::build(&p3, 0, 2).unwrap();
        let cut = st.cut_from_prefix(1).unwrap();
        assert_eq!(cut.side, set(&[0, 1]));
        assert_eq!(cut.value, 1);

        let c4 = fixtures::c4();
        let st = Strip::build(&c4, 0, 2).unwrap();
        let cut = st.cut_from_prefix(1).unwrap();
        assert_eq!(cut.side, set(&[0, 1])); // {v1,v2} after tie-break
        assert_eq!(c4.cut_value(&cut.side).unwrap(), 2);

        let k4 = fixtures::k4();
        let st = Strip::build(&k4, 0, 2).unwrap();
        let cut = st.cut_from_prefix(1).unwrap();
        assert_eq!(cut.side, set(&[0, 1, 3]));
        assert_eq!(k4.cut_value(&cut.side).unwrap(), 3);
        assert!(st.cut_from_prefix(st.sink()).is_err());
    }

    #[test]
    fn topological_order_terminals() {
        for (_, g) in fixtures::all() {
            let st = Strip::build(&g, 0, g.vertex_count() - 1).unwrap();
            let tau = st.topological_order();
            assert_eq!(tau[st.source()], 0);
            assert_eq!(tau[st.sink()], st.node_count() - 1);
            for e in st.cross_edges() {
                assert!(tau[e.from] < tau[e.to]);
            }
        }
    }

    #[test]
    fn merge_into_source_keeps_enclosing_cuts() {
        let c4 = fixtures::c4();
        let st = Strip::build(&c4, 0, 2).unwrap();
        let nv2 = st.node_of(1);
        let merged = st.merge_into_source(&set(&[0, nv2])).unwrap();
        assert_eq!(merged.node_count(), 3);
        assert_eq!(merged.origin_members(0), &[0, 1]);
        let tr = merged.enumerate_transversals().unwrap();
        assert_eq!(tr.len(), 2); // {v1,v2} and {v1,v2,v4}
    }
}
