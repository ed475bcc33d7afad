//! Bunches: equivalence classes of Steiner mincuts by the bipartition they
//! induce on S, each carrying the strip of all mincuts realizing it.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::flow::max_flow_value;
use crate::graph::Multigraph;
use crate::strip::Strip;

/// Default cap on |S| for the exhaustive bipartition sweep.
pub const BUNCH_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bunch {
    /// The side of the S-bipartition containing min(S), sorted.
    pub s_side: Vec<usize>,
    /// The other side, sorted.
    pub t_side: Vec<usize>,
    /// Strip of all mincuts realizing the bipartition; built on the
    /// quotient with s_side and t_side each contracted, source on the
    /// s_side vertex.
    pub strip: Strip,
    /// Quotient the strip lives on.
    pub quotient: Multigraph,
}

impl Bunch {
    /// Strip node of graph vertex `v` (any vertex of the graph the
    /// carcass is built on).
    pub fn node_of_vertex(&self, g: &Multigraph, v: usize) -> usize {
        let origin = g.origins(v)[0];
        let qv = self.quotient.vertex_of_origin(origin).expect("vertex lost in quotient");
        self.strip.node_of(qv)
    }
}

/// Steiner mincut value: min over t of c(r,t), r = min(S).
pub fn steiner_mincut_value(g: &Multigraph, steiner: &[usize]) -> Result<usize> {
    if steiner.len() < 2 {
        return Err(invalid("Steiner set needs at least two vertices"));
    }
    let r = steiner[0];
    let mut best = usize::MAX;
    for &t in &steiner[1..] {
        best = best.min(max_flow_value(g, r, t)?);
    }
    Ok(best)
}

fn build_bunch(g: &Multigraph, s_side: Vec<usize>, t_side: Vec<usize>) -> Result<Bunch> {
    let groups = [
        s_side.iter().copied().collect::<BTreeSet<_>>(),
        t_side.iter().copied().collect::<BTreeSet<_>>(),
    ];
    let q = g.contract(&groups)?;
    let qs = q
        .vertex_of_origin(g.origins(s_side[0])[0])
        .expect("source lost");
    let qt = q
        .vertex_of_origin(g.origins(t_side[0])[0])
        .expect("sink lost");
    let strip = Strip::build(&q, qs, qt)?;
    Ok(Bunch {
        s_side,
        t_side,
        strip,
        quotient: q,
    })
}

/// All bunches of (g, S), found by enumerating the distinct S-bipartitions
/// induced by the strips D(r,t) over t in S. Polynomial in the number of
/// bunches; used by the oracle builds.
pub fn compute_bunches(g: &Multigraph, steiner: &[usize]) -> Result<Vec<Bunch>> {
    if steiner.len() < 2 {
        return Err(invalid("Steiner set needs at least two vertices"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let c_s = steiner_mincut_value(g, steiner)?;
    let r = steiner[0];
    let sset: BTreeSet<usize> = steiner.iter().copied().collect();

    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut biparts: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for &t in &steiner[1..] {
        if max_flow_value(g, r, t)? != c_s {
            continue;
        }
        let strip = Strip::build(g, r, t)?;
        // nodes carrying Steiner vertices, in topological (= id) order
        let snodes: Vec<usize> = (0..strip.node_count())
            .filter(|&x| strip.members(x).iter().any(|v| sset.contains(v)))
            .collect();
        // ancestors of each S-node within the S-node set
        let anc: Vec<BTreeSet<usize>> = snodes
            .iter()
            .map(|&x| {
                let cone = if strip.is_terminal(x) {
                    BTreeSet::from([x])
                } else {
                    strip.cone_unchecked(x, crate::strip::Dir::TowardSource)
                };
                snodes
                    .iter()
                    .enumerate()
                    .filter(|(_, &y)| y != x && cone.contains(&y))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let sink_idx = snodes
            .iter()
            .position(|&x| x == strip.sink())
            .expect("sink holds a Steiner vertex");
        // enumerate downsets of the S-node poset containing index 0
        // (the source) and excluding the sink
        let mut stack: Vec<Vec<usize>> = vec![vec![0]];
        while let Some(ds) = stack.pop() {
            // record the induced bipartition
            let side: Vec<usize> = ds
                .iter()
                .flat_map(|&i| strip.members(snodes[i]).iter().copied())
                .filter(|v| sset.contains(v))
                .collect();
            let mut key: Vec<usize> = side.clone();
            key.sort_unstable();
            if seen.insert(key.clone()) {
                let t_side: Vec<usize> = steiner
                    .iter()
                    .copied()
                    .filter(|v| !key.contains(v))
                    .collect();
                biparts.push((key, t_side));
            }
            let max = *ds.last().unwrap();
            for next in max + 1..snodes.len() {
                if next == sink_idx {
                    continue;
                }
                if anc[next].iter().all(|p| ds.contains(p)) {
                    let mut nd = ds.clone();
                    nd.push(next);
                    stack.push(nd);
                }
            }
        }
    }
    biparts.sort();
    biparts
        .into_iter()
        .map(|(s_side, t_side)| build_bunch(g, s_side, t_side))
        .collect()
}

/// Brute-force bunch enumeration over all 2-partitions of S, one max-flow
/// each (test oracle; capped).
pub fn compute_bunches_exhaustive(
    g: &Multigraph,
    steiner: &[usize],
    cap: usize,
) -> Result<Vec<Bunch>> {
    if steiner.len() < 2 {
        return Err(invalid("Steiner set needs at least two vertices"));
    }
    if steiner.len() > cap {
        return Err(Error::Capacity {
            what: "bunch enumeration",
            limit: cap,
            actual: steiner.len(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let rest = &steiner[1..];
    let mut best = usize::MAX;
    let mut biparts = Vec::new();
    for mask in 0u64..(1 << rest.len()) {
        let mut s_side = vec![steiner[0]];
        let mut t_side = Vec::new();
        for (i, &v) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                t_side.push(v);
            } else {
                s_side.push(v);
            }
        }
        if t_side.is_empty() {
            continue;
        }
        let q = g.contract(&[
            s_side.iter().copied().collect(),
            t_side.iter().copied().collect(),
        ])?;
        let qs = q.vertex_of_origin(g.origins(s_side[0])[0]).unwrap();
        let qt = q.vertex_of_origin(g.origins(t_side[0])[0]).unwrap();
        let val = max_flow_value(&q, qs, qt)?;
        match val.cmp(&best) {
            std::cmp::Ordering::Less => {
                best = val;
                biparts = vec![(s_side, t_side)];
            }
            std::cmp::Ordering::Equal => biparts.push((s_side, t_side)),
            std::cmp::Ordering::Greater => {}
        }
    }
    biparts.sort();
    biparts
        .into_iter()
        .map(|(s, t)| build_bunch(g, s, t))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::fixtures;
    use rand::Rng;
    use rand::SeedableRng;

    fn bipartitions(bunches: &[Bunch]) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut v: Vec<_> = bunches
            .iter()
            .map(|b| (b.s_side.clone(), b.t_side.clone()))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn c4_full_steiner_has_six_bunches() {
        let c4 = fixtures::c4();
        let bs = compute_bunches(&c4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(bs.len(), 6);
        let parts = bipartitions(&bs);
        // four singleton splits and the two adjacent-pair splits
        assert!(parts.contains(&(vec![0], vec![1, 2, 3])));
        assert!(parts.contains(&(vec![0, 1], vec![2, 3])));
        assert!(parts.contains(&(vec![0, 3], vec![1, 2])));
        assert!(parts.contains(&(vec![0, 2, 3], vec![1])));
    }

    #[test]
    fn p3_pair_steiner() {
        let p3 = fixtures::p3();
        let bs = compute_bunches(&p3, &[0, 2]).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].strip.node_count(), 3); // {a} is a non-terminal
    }

    #[test]
    fn tb_full_steiner_single_bunch() {
        let tb = fixtures::tb();
        let bs = compute_bunches(&tb, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].s_side, vec![0, 1, 2]);
        assert_eq!(bs[0].t_side, vec![3, 4, 5]);
    }

    #[test]
    fn small_steiner_rejected() {
        let p3 = fixtures::p3();
        assert!(compute_bunches(&p3, &[0]).is_err());
        assert!(compute_bunches_exhaustive(&p3, &(0..20).collect::<Vec<_>>(), 16).is_err());
    }

    #[test]
    fn strip_based_matches_exhaustive() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for g in crate::gen::corpus(43, 30, 3, 9) {
            let n = g.vertex_count();
            let k = rng.gen_range(2..=n.min(6));
            let mut s: Vec<usize> = (0..n).collect();
            for i in 0..k {
                let j = rng.gen_range(i..n);
                s.swap(i, j);
            }
            let mut steiner: Vec<usize> = s[..k].to_vec();
            steiner.sort_unstable();
            let fast = compute_bunches(&g, &steiner).unwrap();
            let slow = compute_bunches_exhaustive(&g, &steiner, 16).unwrap();
            assert_eq!(
                bipartitions(&fast),
                bipartitions(&slow),
                "graph {g:?} steiner {steiner:?}"
            );
        }
    }
}
