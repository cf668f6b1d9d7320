//! Seeded random instance generators shared by the integration tests.

#![allow(dead_code)]

use enumfpt::closest_string::{BinaryString, StringInstance};
use enumfpt::cnf::CnfFormula;
use enumfpt::graph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` on vertices `1..=n`, with `p` itself drawn at random.
pub fn random_graph(rng: &mut ChaCha8Rng, max_n: u32) -> Graph {
    let n = rng.gen_range(2..=max_n);
    let p: f64 = rng.gen_range(0.15..0.85);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Disjoint cliques of sizes drawn from `sizes`, then `noise` random edge
/// toggles.
pub fn planted_clusters(rng: &mut ChaCha8Rng, n: u32, sizes: std::ops::RangeInclusive<u32>, noise: usize) -> Graph {
    let mut g = Graph::empty(n);
    let mut start = 1;
    while start <= n {
        let end = (start + rng.gen_range(sizes.clone()) - 1).min(n);
        for u in start..=end {
            for v in u + 1..=end {
                g.add_edge(u, v);
            }
        }
        start = end + 1;
    }
    for _ in 0..noise {
        let u = rng.gen_range(1..=n);
        let mut v = rng.gen_range(1..=n);
        while v == u {
            v = rng.gen_range(1..=n);
        }
        if !g.remove_edge(u, v) {
            g.add_edge(u, v);
        }
    }
    g
}

/// Two to four strings of length at most `max_n`, near a common center so
/// that solutions exist reasonably often.
pub fn random_strings(rng: &mut ChaCha8Rng, max_n: usize, max_d: usize) -> StringInstance {
    let n = rng.gen_range(1..=max_n);
    let count = rng.gen_range(2..=4);
    let center: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let spread = rng.gen_range(0..=n.min(max_d + 1));
    let strings = (0..count)
        .map(|_| {
            let mut s = center.clone();
            let mut idx: Vec<usize> = (0..n).collect();
            idx.shuffle(rng);
            for &i in idx.iter().take(rng.gen_range(0..=spread)) {
                s[i] = !s[i];
            }
            let text: String = s.iter().map(|&b| if b { '1' } else { '0' }).collect();
            text.parse::<BinaryString>().unwrap()
        })
        .collect();
    StringInstance::new(strings, rng.gen_range(0..=max_d)).unwrap()
}

/// A 3CNF formula over at most `max_vars` variables.
pub fn random_cnf(rng: &mut ChaCha8Rng, max_vars: u32) -> CnfFormula {
    let n = rng.gen_range(1..=max_vars);
    let m = rng.gen_range(0..=2 * n as usize);
    let vars: Vec<i32> = (1..=n as i32).collect();
    let clauses: Vec<Vec<i32>> = (0..m)
        .map(|_| {
            let width = rng.gen_range(1..=3.min(n as usize));
            vars.choose_multiple(rng, width)
                .map(|&v| if rng.gen_bool(0.5) { v } else { -v })
                .collect()
        })
        .collect();
    let refs: Vec<&[i32]> = clauses.iter().map(Vec::as_slice).collect();
    CnfFormula::from_ints(n, &refs).unwrap()
}
