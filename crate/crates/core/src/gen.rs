//! Test fixtures and seeded random graph generation.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Multigraph;

/// Named fixtures used throughout the tests and the verification corpus.
pub mod fixtures {
    use super::*;

    /// Path s(0) - a(1) - t(2).
    pub fn p3() -> Multigraph {
        Multigraph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    /// Path v1(0) - v2(1) - v3(2) - v4(3).
    pub fn p4() -> Multigraph {
        Multigraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    /// 4-cycle v1(0) v2(1) v3(2) v4(3).
    pub fn c4() -> Multigraph {
        Multigraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    /// Complete graph on v1(0)..v4(3).
    pub fn k4() -> Multigraph {
        Multigraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Two triangles a1a2a3 (0,1,2) and b1b2b3 (3,4,5) joined by bridge (a1,b1).
    pub fn tb() -> Multigraph {
        Multigraph::new(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3)],
        )
        .unwrap()
    }

    /// s(0), r(1), y(2), t(3) with edges (s,r) x2, (s,y), (y,t), (r,t).
    pub fn h1() -> Multigraph {
        Multigraph::new(4, &[(0, 1), (0, 1), (0, 2), (2, 3), (1, 3)]).unwrap()
    }

    /// Single edge graph.
    pub fn k2() -> Multigraph {
        Multigraph::new(2, &[(0, 1)]).unwrap()
    }

    pub fn all() -> Vec<(&'static str, Multigraph)> {
        vec![
            ("P3", p3()),
            ("P4", p4()),
            ("C4", c4()),
            ("K4", k4()),
            ("TB", tb()),
            ("H1", h1()),
        ]
    }
}

/// Random connected multigraph: a random spanning tree plus extra edges
/// (parallel edges allowed), `m` capped at `max_m`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, max_m: usize) -> Multigraph {
    assert!(n >= 2);
    let mut pairs = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        pairs.push((u, v));
    }
    let extra = if max_m > pairs.len() {
        rng.gen_range(0..=max_m - pairs.len())
    } else {
        0
    };
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n);
        while v == u {
            v = rng.gen_range(0..n);
        }
        pairs.push((u.min(v), u.max(v)));
    }
    Multigraph::new(n, &pairs).unwrap()
}

/// Seeded corpus of random connected multigraphs with n in [n_lo, n_hi]
/// and m <= 3n.
pub fn corpus(seed: u64, count: usize, n_lo: usize, n_hi: usize) -> Vec<Multigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_lo..=n_hi);
            random_connected(&mut rng, n, 3 * n)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_connected_and_deterministic() {
        let a = corpus(1, 20, 3, 10);
        let b = corpus(1, 20, 3, 10);
        assert_eq!(a.len(), 20);
        for (ga, gb) in a.iter().zip(&b) {
            assert_eq!(ga, gb);
            assert!(ga.is_connected());
            assert!(ga.edge_count() <= 3 * ga.vertex_count());
        }
    }
}
