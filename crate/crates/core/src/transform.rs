//! Query transformation over a fixed mincut: the strip of all mincuts
//! enclosing a side A, rewriting an edge bundle at a vertex beyond A into
//! an equivalent bundle on A's boundary, and lifting cuts back.

use std::collections::BTreeSet;

use crate::error::{internal, invalid, Result};
use crate::flow::max_flow_value;
use crate::graph::{Cut, EdgeId, Multigraph};
use crate::strip::{Dir, NodeId, Strip};

/// A set of edges sharing one endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeBundle {
    pub anchor: usize,
    pub edges: BTreeSet<EdgeId>,
}

impl EdgeBundle {
    pub fn new(g: &Multigraph, anchor: usize, edges: BTreeSet<EdgeId>) -> Result<EdgeBundle> {
        if edges.is_empty() {
            return Err(invalid("empty edge bundle"));
        }
        for &id in &edges {
            let e = g.edge(id).ok_or_else(|| invalid(format!("no edge {id}")))?;
            if !e.touches(anchor) {
                return Err(invalid(format!("edge {id} misses the anchor {anchor}")));
            }
        }
        Ok(EdgeBundle { anchor, edges })
    }

    pub fn all_at(g: &Multigraph, anchor: usize) -> Result<EdgeBundle> {
        let edges: BTreeSet<EdgeId> = g
            .edges()
            .iter()
            .filter(|e| e.touches(anchor))
            .map(|e| e.id)
            .collect();
        EdgeBundle::new(g, anchor, edges)
    }
}

/// The strip of all (A,t)-mincuts enclosing a mincut side A, on the
/// quotient with A contracted. The source node is exactly A.
#[derive(Debug, Clone)]
pub struct StripAbove {
    pub quotient: Multigraph,
    pub strip: Strip,
    pub a_origins: BTreeSet<usize>,
}

impl StripAbove {
    pub fn node_of_vertex(&self, g: &Multigraph, v: usize) -> NodeId {
        let origin = g.origins(v)[0];
        let qv = self
            .quotient
            .vertex_of_origin(origin)
            .expect("vertex lost in quotient");
        self.strip.node_of(qv)
    }
}

/// Build the strip of all (s,t)-mincuts whose side encloses `a_side`
/// (which must itself define a mincut toward t).
pub fn build_strip_above(g: &Multigraph, a_side: &BTreeSet<usize>, t: usize) -> Result<StripAbove> {
    g.check_vertex(t)?;
    if a_side.contains(&t) {
        return Err(invalid("t lies inside A"));
    }
    if a_side.is_empty() {
        return Err(invalid("empty A side"));
    }
    let q = g.contract(&[a_side.clone()])?;
    let a_rep = g.origins(*a_side.iter().next().unwrap())[0];
    let qa = q.vertex_of_origin(a_rep).ok_or_else(|| internal("A lost"))?;
    let qt = q
        .vertex_of_origin(g.origins(t)[0])
        .ok_or_else(|| internal("t lost"))?;
    let boundary = g.cut_value(a_side)?;
    if max_flow_value(&q, qa, qt)? != boundary {
        return Err(invalid("A does not define a mincut toward t"));
    }
    let strip = Strip::build(&q, qa, qt)?;
    if strip.members(strip.source()) != [qa] {
        return Err(internal("source node exceeds A"));
    }
    let a_origins = a_side
        .iter()
        .flat_map(|&v| g.origins(v).iter().copied())
        .collect();
    Ok(StripAbove {
        quotient: q,
        strip,
        a_origins,
    })
}

/// Outcome of rewriting a bundle beyond A onto A's boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transformed {
    /// No mincut on the A side can contain the bundle.
    Infeasible,
    /// Equivalent bundle: boundary edges of A, plus the reachability cone
    /// that produced them.
    Bundle {
        edges: BTreeSet<EdgeId>,
        cone: BTreeSet<NodeId>,
    },
}

/// Rewrite a bundle at y (beyond A) into an equivalent bundle incident on
/// A, following the reachability-cone construction in the strip above A.
pub fn transform_edge_bundle(
    g: &Multigraph,
    sa: &StripAbove,
    bundle: &EdgeBundle,
) -> Result<Transformed> {
    let y = bundle.anchor;
    if g.origins(y).iter().any(|o| sa.a_origins.contains(o)) {
        return Err(invalid("bundle anchor lies inside A"));
    }
    let strip = &sa.strip;
    let node_y = sa.node_of_vertex(g, y);
    if node_y == strip.source() {
        return Err(internal("anchor fell into the source node"));
    }
    // all bundle edges must cross out of y's node, on one side
    let mut side: Option<Dir> = None;
    for &id in &bundle.edges {
        match strip.side_of_edge(node_y, id) {
            None => return Ok(Transformed::Infeasible), // inside a node
            Some(d) => {
                if node_y != strip.sink() {
                    match side {
                        None => side = Some(d),
                        Some(prev) if prev != d => return Ok(Transformed::Infeasible),
                        _ => {}
                    }
                }
            }
        }
    }
    let cone: BTreeSet<NodeId> = if node_y == strip.sink() {
        // treat as the sink-side case with the whole far side as the cone
        (1..strip.node_count()).collect()
    } else {
        match side.ok_or_else(|| internal("empty bundle slipped through"))? {
            Dir::TowardSink => {
                let mut c = strip.reachability_cone(node_y, Dir::TowardSource)?;
                c.remove(&strip.source());
                c
            }
            Dir::TowardSource => {
                let mut c = BTreeSet::new();
                for &id in &bundle.edges {
                    let e = strip.cross_edge(id).ok_or_else(|| internal("missing cross edge"))?;
                    let other = if e.from == node_y { e.to } else { e.from };
                    if other == strip.source() {
                        continue; // the edge lands in A directly
                    }
                    c.extend(strip.reachability_cone(other, Dir::TowardSource)?);
                }
                c.remove(&strip.source());
                c
            }
        }
    };
    // boundary edges of the cone into the source, plus the bundle edges
    // already incident on A
    let mut edges: BTreeSet<EdgeId> = strip
        .cross_edges()
        .iter()
        .filter(|e| e.from == strip.source() && cone.contains(&e.to))
        .map(|e| e.id)
        .collect();
    for &id in &bundle.edges {
        let e = strip.cross_edge(id).ok_or_else(|| internal("missing cross edge"))?;
        if e.from == strip.source() || e.to == strip.source() {
            edges.insert(id);
        }
    }
    Ok(Transformed::Bundle { edges, cone })
}

/// Given a mincut (between the same pair as the transform) containing all
/// of the transformed bundle, produce one of equal value containing the
/// original bundle: add the cone to the side away from t.
pub fn lift_cut(
    g: &Multigraph,
    sa: &StripAbove,
    m: &Cut,
    bundle: &EdgeBundle,
) -> Result<Cut> {
    let tr = transform_edge_bundle(g, sa, bundle)?;
    let Transformed::Bundle { edges, cone } = tr else {
        return Err(invalid("bundle is infeasible; nothing to lift"));
    };
    for &id in &edges {
        let e = g.edge(id).ok_or_else(|| internal("edge lost"))?;
        let (ou, ov) = (g.origins(e.u)[0], g.origins(e.v)[0]);
        if m.side.contains(&ou) == m.side.contains(&ov) {
            return Err(invalid(format!("cut misses transformed edge {id}")));
        }
    }
    // normalize so the working side avoids the strip's sink vertices
    let sink_origin = sa.strip.origin_members(sa.strip.sink())[0];
    let base: BTreeSet<usize> = if m.side.contains(&sink_origin) {
        let all: BTreeSet<usize> = (0..g.origin_count()).collect();
        all.difference(&m.side).copied().collect()
    } else {
        m.side.clone()
    };
    let mut side = base;
    for &n in &cone {
        side.extend(sa.strip.origin_members(n).iter().copied());
    }
    let value = {
        let gside: BTreeSet<usize> = (0..g.vertex_count())
            .filter(|&v| g.origins(v).iter().any(|o| side.contains(o)))
            .collect();
        g.cut_value(&gside)?
    };
    Ok(Cut::new(side, value))
}

/// The side-s edge set of y's node in the strip above A: the second
/// condition of the nearest-mincut test. `contained` decides whether some
/// mincut between the fixed pair contains a given edge set.
pub fn nearest_check_local(
    g: &Multigraph,
    sa: &StripAbove,
    y: usize,
    nearest_in_quotient: bool,
    contained: impl FnOnce(&BTreeSet<EdgeId>) -> Result<bool>,
) -> Result<bool> {
    if g.origins(y).iter().any(|o| sa.a_origins.contains(o)) {
        // y inside A: trivially on the near side
        return Ok(true);
    }
    if !nearest_in_quotient {
        return Ok(false);
    }
    let strip = &sa.strip;
    let node_y = sa.node_of_vertex(g, y);
    let side_s: BTreeSet<EdgeId> = if node_y == strip.sink() {
        strip
            .cross_edges()
            .iter()
            .filter(|e| e.from == strip.source())
            .map(|e| e.id)
            .collect()
    } else {
        strip.side_edges(node_y, Dir::TowardSource).into_iter().collect()
    };
    Ok(!contained(&side_s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::fixtures;
    use crate::reference;
    use rand::Rng;
    use rand::SeedableRng;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn strip_above_h1() {
        let h1 = fixtures::h1();
        let sa = build_strip_above(&h1, &set(&[0, 1]), 3).unwrap();
        assert_eq!(sa.strip.node_count(), 3);
        assert_eq!(sa.strip.origin_members(sa.strip.source()), &[0, 1]);
        assert_eq!(sa.strip.origin_members(1), &[2]); // {y}
        assert_eq!(sa.strip.origin_members(sa.strip.sink()), &[3]);
    }

    #[test]
    fn strip_above_p3_and_c4() {
        let p3 = fixtures::p3();
        let sa = build_strip_above(&p3, &set(&[0]), 2).unwrap();
        assert_eq!(sa.strip.node_count(), 3);

        let c4 = fixtures::c4();
        let sa = build_strip_above(&c4, &set(&[0, 1]), 2).unwrap();
        // mincuts enclosing {v1,v2}: itself and {v1,v2,v4}
        assert_eq!(sa.strip.node_count(), 3);
        assert_eq!(sa.strip.origin_members(1), &[3]);
        // a non-mincut side is rejected
        assert!(build_strip_above(&c4, &set(&[0, 2]), 3).is_err());
    }

    #[test]
    fn transform_h1_examples() {
        let h1 = fixtures::h1();
        let sa = build_strip_above(&h1, &set(&[0, 1]), 3).unwrap();
        // E_y = {(y,t)} (edge 3), side-t of y: E_A = {(s,y)} (edge 2)
        let b = EdgeBundle::new(&h1, 2, set(&[3])).unwrap();
        let Transformed::Bundle { edges, cone } = transform_edge_bundle(&h1, &sa, &b).unwrap()
        else {
            panic!("feasible")
        };
        assert_eq!(edges, set(&[2]));
        assert_eq!(cone, set(&[1]));
        // E_y = {(s,y)} (edge 2), side-s: already incident on A
        let b = EdgeBundle::new(&h1, 2, set(&[2])).unwrap();
        let Transformed::Bundle { edges, cone } = transform_edge_bundle(&h1, &sa, &b).unwrap()
        else {
            panic!("feasible")
        };
        assert_eq!(edges, set(&[2]));
        assert!(cone.is_empty());
        // both edges of y straddle its inherent partition
        let b = EdgeBundle::new(&h1, 2, set(&[2, 3])).unwrap();
        assert_eq!(transform_edge_bundle(&h1, &sa, &b).unwrap(), Transformed::Infeasible);
    }

    #[test]
    fn lift_h1_example() {
        let h1 = fixtures::h1();
        let sa = build_strip_above(&h1, &set(&[0, 1]), 3).unwrap();
        let bundle = EdgeBundle::new(&h1, 2, set(&[3])).unwrap();
        // B = side {s}: a 3-edge (r,s)-mincut containing E_A = {(s,y)}
        let m = Cut::new(set(&[0]), 3);
        let lifted = lift_cut(&h1, &sa, &m, &bundle).unwrap();
        assert_eq!(lifted.side, set(&[0, 2]));
        assert_eq!(lifted.value, 3);
        // lifted cut contains (y,t)
        assert!(lifted.separates(2, 3));
    }

    #[test]
    fn nearest_check_h1() {
        let h1 = fixtures::h1();
        // A = {s,r} is an (s,t)-mincut side; is y in the nearest s-to-r
        // mincut? side-s of y is {(s,y)}, and cut({s}) contains it
        let sa = build_strip_above(&h1, &set(&[0, 1]), 3).unwrap();
        let got = nearest_check_local(&h1, &sa, 2, true, |edges| {
            reference::bf_edge_contained(&h1, 0, 1, &edges.iter().copied().collect::<Vec<_>>())
        })
        .unwrap();
        assert!(!got);
        assert_eq!(reference::bf_nearest_side(&h1, 0, 1).unwrap(), set(&[0]));
        // y = s is trivially near
        assert!(nearest_check_local(&h1, &sa, 0, true, |_| Ok(false)).unwrap());
    }

    /// Sample (A, B, s, r, t) instances meeting the three-vertex lemma
    /// hypotheses and check its assertions.
    #[test]
    fn three_vertex_lemma_sampling() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(127);
        let mut checked = 0;
        for g in crate::gen::corpus(131, 60, 4, 10) {
            let n = g.vertex_count();
            let s = rng.gen_range(0..n);
            let t = (s + 1 + rng.gen_range(0..n - 1)) % n;
            if s == t {
                continue;
            }
            let sides = reference::all_mincut_sides(&g, s, t).unwrap();
            for a in &sides {
                for r in a.iter().copied() {
                    if r == s {
                        continue;
                    }
                    let csr = max_flow_value(&g, s, r).unwrap();
                    let cst = g.cut_value(a).unwrap();
                    if csr < cst {
                        continue;
                    }
                    for b in reference::all_mincut_sides(&g, r, s).unwrap() {
                        // orient: b holds r, t must avoid both a and b
                        if a.contains(&t) || b.contains(&t) {
                            continue;
                        }
                        checked += 1;
                        let inter: BTreeSet<usize> = a.intersection(&b).copied().collect();
                        // (1) no edges between (not-A and B) and (A and not-B)
                        let crossing = g
                            .edges()
                            .iter()
                            .filter(|e| {
                                let u_side = !a.contains(&e.u) && b.contains(&e.u);
                                let v_side = a.contains(&e.v) && !b.contains(&e.v);
                                let u_side2 = a.contains(&e.u) && !b.contains(&e.u);
                                let v_side2 = !a.contains(&e.v) && b.contains(&e.v);
                                (u_side && v_side) || (u_side2 && v_side2)
                            })
                            .count();
                        assert_eq!(crossing, 0);
                        // (2) A and B defines an (r,s)-mincut
                        if !inter.is_empty() && inter.len() < n {
                            assert!(inter.contains(&r) && !inter.contains(&s));
                            assert_eq!(g.cut_value(&inter).unwrap(), csr);
                        }
                        // (3) complement of (A or B) defines both mincuts
                        let rest: BTreeSet<usize> = (0..n)
                            .filter(|v| !a.contains(v) && !b.contains(v))
                            .collect();
                        if !rest.is_empty() && rest.len() < n {
                            let comp: BTreeSet<usize> =
                                (0..n).filter(|v| !rest.contains(v)).collect();
                            assert_eq!(g.cut_value(&comp).unwrap(), cst);
                            assert_eq!(
                                max_flow_value(&g, r, t).unwrap(),
                                g.cut_value(&comp).unwrap()
                            );
                        }
                        if checked > 300 {
                            return;
                        }
                    }
                }
            }
        }
        assert!(checked >= 100, "only {checked} samples");
    }

    /// Transformation equivalence: a mincut containing E_y exists iff one
    /// containing E_A exists.
    #[test]
    fn transform_equivalence_sampling() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(137);
        let mut checked = 0;
        'outer: for g in crate::gen::corpus(139, 80, 4, 9) {
            let n = g.vertex_count();
            let s = rng.gen_range(0..n);
            let t = (s + 1 + rng.gen_range(0..n - 1)) % n;
            if s == t {
                continue;
            }
            for a in reference::all_mincut_sides(&g, s, t).unwrap() {
                for r in a.iter().copied().filter(|&r| r != s) {
                    if max_flow_value(&g, s, r).unwrap() < g.cut_value(&a).unwrap() {
                        continue;
                    }
                    let sa = build_strip_above(&g, &a, t).unwrap();
                    for y in 0..n {
                        if a.contains(&y) {
                            continue;
                        }
                        let at_y: Vec<EdgeId> = g
                            .edges()
                            .iter()
                            .filter(|e| e.touches(y))
                            .map(|e| e.id)
                            .collect();
                        // random nonempty subset
                        let mut edges = BTreeSet::new();
                        for &id in &at_y {
                            if rng.gen_bool(0.6) {
                                edges.insert(id);
                            }
                        }
                        if edges.is_empty() {
                            edges.insert(at_y[0]);
                        }
                        let bundle = EdgeBundle::new(&g, y, edges.clone()).unwrap();
                        let ey: Vec<EdgeId> = edges.iter().copied().collect();
                        let has_ey = reference::bf_edge_contained(&g, r, s, &ey).unwrap();
                        match transform_edge_bundle(&g, &sa, &bundle).unwrap() {
                            Transformed::Infeasible => assert!(
                                !has_ey,
                                "infeasible but a mincut contains E_y: {g:?} A={a:?} r={r} y={y} E={ey:?}"
                            ),
                            Transformed::Bundle { edges: ea, .. } => {
                                let ea: Vec<EdgeId> = ea.iter().copied().collect();
                                let has_ea =
                                    reference::bf_edge_contained(&g, r, s, &ea).unwrap();
                                assert_eq!(
                                    has_ey, has_ea,
                                    "equivalence broke: {g:?} A={a:?} r={r} s={s} y={y} E={ey:?} EA={ea:?}"
                                );
                                // lift when both exist
                                if has_ea {
                                    let m_side = reference::all_mincut_sides(&g, r, s)
                                        .unwrap()
                                        .into_iter()
                                        .find(|side| {
                                            ea.iter().all(|&id| {
                                                let e = g.edge(id).unwrap();
                                                side.contains(&e.u) != side.contains(&e.v)
                                            })
                                        })
                                        .unwrap();
                                    let val = g.cut_value(&m_side).unwrap();
                                    let lifted = lift_cut(
                                        &g,
                                        &sa,
                                        &Cut::new(m_side, val),
                                        &bundle,
                                    )
                                    .unwrap();
                                    assert_eq!(lifted.value, val);
                                    for &id in &ey {
                                        let e = g.edge(id).unwrap();
                                        assert!(lifted.separates(e.u, e.v));
                                    }
                                }
                            }
                        }
                        checked += 1;
                        if checked >= 400 {
                            break 'outer;
                        }
                    }
                }
            }
        }
        assert!(checked >= 200, "only {checked} samples");
    }
}
