//! Units: maximal vertex sets never separated by any Steiner mincut.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{internal, Result};
use crate::graph::Multigraph;

use super::bunch::Bunch;

pub type UnitId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Unit {
    pub members: Vec<usize>,
    pub steiner: bool,
    pub stretched: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitPartition {
    pub unit_of: Vec<UnitId>,
    pub units: Vec<Unit>,
}

impl UnitPartition {
    pub fn unit(&self, id: UnitId) -> &Unit {
        &self.units[id]
    }

    pub fn terminal_units(&self) -> impl Iterator<Item = UnitId> + '_ {
        (0..self.units.len()).filter(|&u| !self.units[u].stretched)
    }

    pub fn stretched_units(&self) -> impl Iterator<Item = UnitId> + '_ {
        (0..self.units.len()).filter(|&u| self.units[u].stretched)
    }
}

/// Two vertices share a unit iff they share a node in every bunch strip;
/// a unit is stretched iff its node is a non-terminal in some bunch strip.
pub fn compute_units(g: &Multigraph, steiner: &[usize], bunches: &[Bunch]) -> Result<UnitPartition> {
    let n = g.vertex_count();
    let mut label: Vec<usize> = vec![0; n];
    for b in bunches {
        let mut remap: HashMap<(usize, usize), usize> = HashMap::new();
        let mut next = 0;
        for v in 0..n {
            let node = b.node_of_vertex(g, v);
            let key = (label[v], node);
            let l = *remap.entry(key).or_insert_with(|| {
                next += 1;
                next - 1
            });
            label[v] = l;
        }
    }
    // renumber units by smallest member vertex
    let mut members: HashMap<usize, Vec<usize>> = HashMap::new();
    for v in 0..n {
        members.entry(label[v]).or_default().push(v);
    }
    let mut blocks: Vec<Vec<usize>> = members.into_values().collect();
    blocks.sort_by_key(|b| b[0]);
    let mut unit_of = vec![0usize; n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            unit_of[v] = i;
        }
    }
    let mut units: Vec<Unit> = blocks
        .into_iter()
        .map(|members| Unit {
            steiner: members.iter().any(|v| steiner.contains(v)),
            stretched: false,
            members,
        })
        .collect();
    for b in bunches {
        for u in units.iter_mut() {
            let node = b.node_of_vertex(g, u.members[0]);
            if !b.strip.is_terminal(node) {
                u.stretched = true;
            }
        }
    }
    for u in &units {
        if u.steiner && u.stretched {
            return Err(internal("a Steiner unit came out stretched"));
        }
    }
    Ok(UnitPartition { unit_of, units })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carcass::bunch::compute_bunches;
    use crate::gen::fixtures;

    fn units_for(g: &Multigraph, s: &[usize]) -> UnitPartition {
        let bunches = compute_bunches(g, s).unwrap();
        compute_units(g, s, &bunches).unwrap()
    }

    #[test]
    fn tb_full_steiner_two_terminal_units() {
        let up = units_for(&fixtures::tb(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(up.units.len(), 2);
        assert!(up.units.iter().all(|u| !u.stretched));
        assert_eq!(up.units[0].members, vec![0, 1, 2]);
        assert_eq!(up.units[1].members, vec![3, 4, 5]);
    }

    #[test]
    fn c4_pair_steiner_stretched_units() {
        let up = units_for(&fixtures::c4(), &[0, 2]);
        assert_eq!(up.units.len(), 4);
        assert!(!up.units[up.unit_of[0]].stretched);
        assert!(!up.units[up.unit_of[2]].stretched);
        assert!(up.units[up.unit_of[1]].stretched);
        assert!(up.units[up.unit_of[3]].stretched);
    }

    #[test]
    fn c4_full_steiner_singletons() {
        let up = units_for(&fixtures::c4(), &[0, 1, 2, 3]);
        assert_eq!(up.units.len(), 4);
        assert!(up.units.iter().all(|u| u.members.len() == 1 && !u.stretched));
    }

    #[test]
    fn unit_soundness_on_corpus() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(47);
        for g in crate::gen::corpus(53, 20, 3, 9) {
            let n = g.vertex_count();
            let k = rng.gen_range(2..=n.min(5));
            let mut s: Vec<usize> = (0..n).collect();
            for i in 0..k {
                let j = rng.gen_range(i..n);
                s.swap(i, j);
            }
            let mut steiner = s[..k].to_vec();
            steiner.sort_unstable();
            let bunches = compute_bunches(&g, &steiner).unwrap();
            let up = compute_units(&g, &steiner, &bunches).unwrap();
            // every pair in one unit maps to one node in every bunch strip
            for u in &up.units {
                for b in &bunches {
                    let node = b.node_of_vertex(&g, u.members[0]);
                    for &v in &u.members {
                        assert_eq!(b.node_of_vertex(&g, v), node);
                    }
                }
            }
        }
    }
}
