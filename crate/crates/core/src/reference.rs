//! Brute-force ground truth for every query type. Exponential enumerations
//! are bounded by explicit caps; exceeding a cap is a capacity error, not
//! a wrong answer.

use std::collections::BTreeSet;

use crate::error::{invalid, Error, Result};
use crate::flow::max_flow_value;
use crate::graph::{Cut, EdgeId, Multigraph};

/// Default cap on exhaustive bipartition enumeration.
pub const BIPARTITION_CAP: usize = 12;

fn check_cap(n: usize, cap: usize, what: &'static str) -> Result<()> {
    if n > cap {
        return Err(Error::Capacity {
            what,
            limit: cap,
            actual: n,
        });
    }
    Ok(())
}

/// All (s,t)-mincut sides containing `s`, by exhaustive bipartition
/// enumeration (n <= cap).
pub fn all_mincut_sides(g: &Multigraph, s: usize, t: usize) -> Result<Vec<BTreeSet<usize>>> {
    let n = g.vertex_count();
    check_cap(n, BIPARTITION_CAP, "bipartition enumeration")?;
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(invalid("endpoints must differ"));
    }
    let others: Vec<usize> = (0..n).filter(|&v| v != s && v != t).collect();
    let mut best = usize::MAX;
    let mut sides = Vec::new();
    for mask in 0u64..(1 << others.len()) {
        let mut side = BTreeSet::from([s]);
        for (i, &v) in others.iter().enumerate() {
            if mask >> i & 1 == 1 {
                side.insert(v);
            }
        }
        let val = g.cut_value(&side)?;
        match val.cmp(&best) {
            std::cmp::Ordering::Less => {
                best = val;
                sides = vec![side];
            }
            std::cmp::Ordering::Equal => sides.push(side),
            std::cmp::Ordering::Greater => {}
        }
    }
    Ok(sides)
}

/// (s,t)-mincut value after deleting edge `e`.
pub fn bf_ft(g: &Multigraph, s: usize, t: usize, e: EdgeId) -> Result<usize> {
    let g2 = g.without_edge(e)?;
    max_flow_value(&g2, s, t)
}

/// (s,t)-mincut value after inserting edge (x,y).
pub fn bf_in(g: &Multigraph, s: usize, t: usize, x: usize, y: usize) -> Result<usize> {
    let g2 = g.with_edge(x, y)?;
    max_flow_value(&g2, s, t)
}

/// Does some (s,t)-mincut contain every edge of `bundle`?
pub fn bf_edge_contained(g: &Multigraph, s: usize, t: usize, bundle: &[EdgeId]) -> Result<bool> {
    let sides = all_mincut_sides(g, s, t)?;
    for side in &sides {
        let all_cut = bundle.iter().all(|&id| {
            g.edge(id)
                .map(|e| side.contains(&e.u) != side.contains(&e.v))
                .unwrap_or(false)
        });
        if all_cut {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The nearest mincut from s to t: intersection of all mincut sides
/// containing s.
pub fn bf_nearest_side(g: &Multigraph, s: usize, t: usize) -> Result<BTreeSet<usize>> {
    let sides = all_mincut_sides(g, s, t)?;
    let mut iter = sides.into_iter();
    let first = iter.next().ok_or_else(|| invalid("no cut exists"))?;
    Ok(iter.fold(first, |acc, side| acc.intersection(&side).copied().collect()))
}

/// A graph change for affected-pairs queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Change {
    FailEdge(EdgeId),
    InsertEdge(usize, usize),
}

/// All unordered pairs whose mincut value changes under `change`.
pub fn bf_affected_pairs(g: &Multigraph, change: Change) -> Result<Vec<(usize, usize)>> {
    let g2 = match change {
        Change::FailEdge(e) => g.without_edge(e)?,
        Change::InsertEdge(x, y) => g.with_edge(x, y)?,
    };
    let n = g.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if max_flow_value(g, u, v)? != max_flow_value(&g2, u, v)? {
                out.push((u, v));
            }
        }
    }
    Ok(out)
}

/// A minimum cut side (containing s) of minimum value; unique only in
/// value, used where any old mincut is acceptable.
pub fn bf_any_mincut(g: &Multigraph, s: usize, t: usize) -> Result<Cut> {
    let side = bf_nearest_side(g, s, t)?;
    let value = g.cut_value(&side)?;
    Ok(Cut::new(side, value))
}
