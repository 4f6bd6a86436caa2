#![allow(dead_code, clippy::needless_range_loop)]

use dual_cheeger::{build_graphon, is_connected, Graphon, GridFunction, WeightedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Symmetric kernel with entries in [0, 1], about a third of them zero.
pub fn random_kernel(rng: &mut ChaCha8Rng, m: usize, loopless: bool) -> Vec<Vec<f64>> {
    let mut k = vec![vec![0.0; m]; m];
    for i in 0..m {
        for j in i..m {
            if i == j && loopless {
                continue;
            }
            let v = if rng.gen_bool(0.3) { 0.0 } else { rng.gen_range(0.0..=1.0) };
            k[i][j] = v;
            k[j][i] = v;
        }
    }
    k
}

/// Connected random step graphon with `m` drawn from `sizes`; even draws
/// have zero diagonal.
pub fn random_connected_graphon(rng: &mut ChaCha8Rng, sizes: std::ops::RangeInclusive<usize>) -> Graphon {
    loop {
        let m = rng.gen_range(sizes.clone());
        let loopless = m > 1 && rng.gen_bool(0.5);
        let w = build_graphon(&random_kernel(rng, m, loopless)).unwrap();
        if is_connected(&w) {
            return w;
        }
    }
}

/// Loopless connected graph with weights from {0, 0.1, ..., 1.0}.
pub fn random_loopless_graph(rng: &mut ChaCha8Rng, sizes: std::ops::RangeInclusive<usize>) -> WeightedGraph {
    loop {
        let n = rng.gen_range(sizes.clone());
        let mut w = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let v = rng.gen_range(0..=10) as f64 / 10.0;
                w[i][j] = v;
                w[j][i] = v;
            }
        }
        let g = WeightedGraph::new(&w).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_function(rng: &mut ChaCha8Rng, m: usize) -> GridFunction {
    loop {
        let f: Vec<f64> = (0..m)
            .map(|_| if rng.gen_bool(0.15) { 0.0 } else { rng.gen_range(-1.0..=1.0) })
            .collect();
        if f.iter().any(|&v| v != 0.0) {
            return GridFunction::new(f);
        }
    }
}

pub fn random_partition_labels(rng: &mut ChaCha8Rng, m: usize) -> Vec<u8> {
    loop {
        let l: Vec<u8> = (0..m).map(|_| rng.gen_range(0..3u8)).collect();
        if l.iter().any(|&x| x != 0) {
            return l;
        }
    }
}
