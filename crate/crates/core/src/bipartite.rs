//! Bipartiteness ratios.
//!
//! For disjoint cell sets `L`, `R` with `S = L ∪ R`,
//!
//! ```text
//! β(L, R) = [2η(L×L) + 2η(R×R) + η(S×S^c)] / 2η(S×I)
//! ```
//!
//! and `β_W` is its infimum. The graph analogue replaces `η` by edge
//! weight sums `e_G`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphon::{eta_mass, is_connected, FractionalBipartition, Graphon, SignedPartition, WeightedGraph};
use crate::grid::GridFunction;
use crate::spectral::{antidirichlet, inner_v};

/// Largest size the `3^m` enumeration accepts.
pub const EXHAUSTIVE_LIMIT: usize = 12;

/// Ratios closer than this are ties and fall back to the deterministic key.
const TIE_TOL: f64 = 1e-12;

/// Minimum improvement for a coordinate-descent move.
const DESCENT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioReport {
    pub beta: f64,
    pub witness: SignedPartition,
    /// Threshold `t` that produced the witness, for sweep rounding.
    pub threshold: Option<f64>,
}

fn all_cells(m: usize) -> Vec<usize> {
    (0..m).collect()
}

fn complement(support: &[usize], m: usize) -> Vec<usize> {
    (0..m).filter(|i| support.binary_search(i).is_err()).collect()
}

/// `β_W(L, R)`, evaluated through `η`.
pub fn beta_partition(w: &Graphon, p: &SignedPartition) -> Result<f64> {
    if !is_connected(w) {
        return Err(Error::NotConnected);
    }
    ratio_unchecked(w, p)
}

fn ratio_unchecked(w: &Graphon, p: &SignedPartition) -> Result<f64> {
    let m = w.m();
    p.check_range(m)?;
    let support = p.support();
    let outside = complement(&support, m);
    let num = 2.0 * eta_mass(w, p.left(), p.left())
        + 2.0 * eta_mass(w, p.right(), p.right())
        + eta_mass(w, &support, &outside);
    let den = 2.0 * eta_mass(w, &support, &all_cells(m));
    if !(den > 0.0) {
        return Err(Error::NotConnected);
    }
    Ok(num / den)
}

/// `β_G(A, B)` with edge sums.
pub fn beta_graph_partition(g: &WeightedGraph, p: &SignedPartition) -> Result<f64> {
    let n = g.n();
    p.check_range(n)?;
    let support = p.support();
    let outside = complement(&support, n);
    let num = 2.0 * g.edge_mass(p.left(), p.left())
        + 2.0 * g.edge_mass(p.right(), p.right())
        + g.edge_mass(&support, &outside);
    let den = 2.0 * g.edge_mass(&support, &all_cells(n));
    if !(den > 0.0) {
        return Err(Error::NotConnected);
    }
    Ok(num / den)
}

/// The `{-1, 0, 1}` function that is `-1` on `L` and `1` on `R`.
pub fn signed_indicator(p: &SignedPartition, m: usize) -> Result<GridFunction> {
    p.check_range(m)?;
    let mut values = vec![0.0; m];
    p.left().iter().for_each(|&i| values[i] = -1.0);
    p.right().iter().for_each(|&i| values[i] = 1.0);
    Ok(GridFunction::new(values))
}

/// Ratio for a label vector (0 = outside, 1 = left, 2 = right) on a
/// row-major weight matrix. Scale factors cancel, so this serves graphs and
/// step graphons alike.
fn label_ratio(n: usize, weights: &[f64], row_sums: &[f64], labels: &[u8]) -> Option<f64> {
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..n {
        let li = labels[i];
        if li == 0 {
            continue;
        }
        den += row_sums[i];
        let row = &weights[i * n..(i + 1) * n];
        for (j, &wij) in row.iter().enumerate() {
            let lj = labels[j];
            if lj == li {
                num += 2.0 * wij;
            } else if lj == 0 {
                num += wij;
            }
        }
    }
    (den > 0.0).then(|| num / (2.0 * den))
}

/// Minimum of `label_ratio` over all `3^n - 1` nonzero labelings; ties go
/// to the lexicographically smallest `(left, right)`.
fn exhaustive_min(n: usize, weights: &[f64]) -> Result<(f64, SignedPartition)> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::TooLarge { size: n, limit: EXHAUSTIVE_LIMIT });
    }
    let row_sums: Vec<f64> = weights.chunks(n).map(|r| r.iter().sum()).collect();
    let mut labels = vec![0u8; n];
    let mut best: Option<(f64, SignedPartition)> = None;
    loop {
        // Odometer step; stops after the all-2 labeling wraps around.
        let mut pos = 0;
        while pos < n && labels[pos] == 2 {
            labels[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
        labels[pos] += 1;

        let Some(value) = label_ratio(n, weights, &row_sums, &labels) else {
            continue;
        };
        let better = match &best {
            None => true,
            Some((b, _)) if value < b - TIE_TOL => true,
            Some((b, _)) if value > b + TIE_TOL => false,
            Some((_, key)) => {
                let cand = SignedPartition::from_labels(&labels)?;
                cand < *key
            }
        };
        if better {
            best = Some((value, SignedPartition::from_labels(&labels)?));
        }
    }
    best.ok_or(Error::NotConnected)
}

/// Exact ratio over cell-aligned partitions (`beta_cell_exact`). For
/// kernels with zero diagonal this equals `β_W`; with positive diagonal
/// cells it is only an upper bound.
pub fn beta_exhaustive(w: &Graphon) -> Result<RatioReport> {
    if !is_connected(w) {
        return Err(Error::NotConnected);
    }
    let (beta, witness) = exhaustive_min(w.m(), w.kernel())?;
    Ok(RatioReport { beta, witness, threshold: None })
}

/// Exact `β_G` by enumeration.
pub fn beta_graph_exact(g: &WeightedGraph) -> Result<RatioReport> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let (beta, witness) = exhaustive_min(g.n(), g.weights())?;
    Ok(RatioReport { beta, witness, threshold: None })
}

/// Fractional relaxation `β̃_G(α, γ)`.
pub fn beta_tilde(g: &WeightedGraph, fb: &FractionalBipartition) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.n();
    if fb.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: fb.len() });
    }
    let (alpha, gamma) = (fb.alpha(), fb.gamma());
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..n {
        let si = alpha[i] + gamma[i];
        for j in 0..n {
            let wij = g.weight(i, j);
            let sj = alpha[j] + gamma[j];
            num += (2.0 * alpha[i] * alpha[j] + 2.0 * gamma[i] * gamma[j] + si * (1.0 - sj)) * wij;
            den += si * wij;
        }
    }
    if !(den > 0.0) {
        return Err(Error::ZeroFractionalMass);
    }
    Ok(num / (2.0 * den))
}

fn labels_to_fractional(labels: &[u8]) -> Result<FractionalBipartition> {
    let alpha = labels.iter().map(|&l| if l == 1 { 1.0 } else { 0.0 }).collect();
    let gamma = labels.iter().map(|&l| if l == 2 { 1.0 } else { 0.0 }).collect();
    FractionalBipartition::new(alpha, gamma)
}

fn fractional_to_labels(fb: &FractionalBipartition) -> Vec<u8> {
    // Largest coordinate wins; ties and near-empty coordinates round to
    // the nearest triangle vertex.
    fb.alpha()
        .iter()
        .zip(fb.gamma())
        .map(|(&a, &g)| {
            let rest = 1.0 - a - g;
            if a >= g && a > rest {
                1
            } else if g > a && g > rest {
                2
            } else {
                0
            }
        })
        .collect()
}

/// Single-vertex corner moves until none improves.
fn single_moves(n: usize, w: &[f64], row_sums: &[f64], labels: &mut [u8], mut current: f64) -> f64 {
    loop {
        let mut moved = false;
        for i in 0..n {
            let keep = labels[i];
            let mut best = (current, keep);
            for cand in 0..3u8 {
                if cand == keep {
                    continue;
                }
                labels[i] = cand;
                if let Some(v) = label_ratio(n, w, row_sums, labels) {
                    if v < best.0 - DESCENT_TOL {
                        best = (v, cand);
                    }
                }
            }
            labels[i] = best.1;
            if best.1 != keep {
                current = best.0;
                moved = true;
            }
        }
        if !moved {
            return current;
        }
    }
}

/// First improving joint relabeling of `size` vertices, if any. Labels are
/// left unchanged when nothing improves.
fn joint_move(n: usize, w: &[f64], row_sums: &[f64], labels: &mut [u8], current: f64, size: usize) -> Option<f64> {
    fn recurse(
        ctx: (usize, &[f64], &[f64], f64),
        labels: &mut [u8],
        start: usize,
        left: usize,
    ) -> Option<f64> {
        let (n, w, row_sums, current) = ctx;
        if left == 0 {
            return label_ratio(n, w, row_sums, labels).filter(|&v| v < current - DESCENT_TOL);
        }
        for i in start..n {
            let keep = labels[i];
            for cand in 0..3u8 {
                if cand == keep {
                    continue;
                }
                labels[i] = cand;
                if let Some(v) = recurse(ctx, labels, i + 1, left - 1) {
                    return Some(v);
                }
            }
            labels[i] = keep;
        }
        None
    }
    recurse((n, w, row_sums, current), labels, 0, size)
}

/// Largest number of vertices relabeled together in one descent move.
const MAX_JOINT_MOVE: usize = 3;

/// Local search over triangle corners from one starting labeling:
/// single-vertex moves first, larger joint moves only when those stall.
fn descend(g: &WeightedGraph, row_sums: &[f64], labels: &mut [u8]) -> f64 {
    let n = g.n();
    let w = g.weights();
    let mut current = label_ratio(n, w, row_sums, labels).unwrap_or(f64::INFINITY);
    'outer: loop {
        current = single_moves(n, w, row_sums, labels, current);
        for size in 2..=MAX_JOINT_MOVE.min(n) {
            if let Some(v) = joint_move(n, w, row_sums, labels, current, size) {
                current = v;
                continue 'outer;
            }
        }
        return current;
    }
}

/// Upper bound on `β_{W_G}` by minimizing `β̃_G` with coordinate descent.
///
/// With `w_ii = 0`, `β̃_G` is linear-fractional in each pair
/// `(α_i, γ_i)`, so the best move for one vertex is a corner of the
/// triangle `α_i, γ_i >= 0, α_i + γ_i <= 1`. Descent starts from every
/// single-edge split `({i}, {j})` plus `restarts` seeded random labelings.
pub fn beta_wg_search(g: &WeightedGraph, restarts: usize, seed: u64) -> Result<(f64, FractionalBipartition)> {
    beta_wg_search_from(g, restarts, seed, &[])
}

/// As [`beta_wg_search`], additionally descending from each warm start
/// (rounded to the nearest triangle vertices).
pub fn beta_wg_search_from(
    g: &WeightedGraph,
    restarts: usize,
    seed: u64,
    warm_starts: &[FractionalBipartition],
) -> Result<(f64, FractionalBipartition)> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if !g.is_loopless() {
        return Err(Error::NotLoopless);
    }
    let n = g.n();
    let row_sums: Vec<f64> = (0..n).map(|i| g.vol(i)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut starts: Vec<Vec<u8>> = warm_starts
        .iter()
        .filter(|fb| fb.len() == n)
        .map(fractional_to_labels)
        .filter(|l| l.iter().any(|&x| x != 0))
        .collect();
    // Every single-edge split ({i}, {j}) is a deterministic start.
    for i in 0..n {
        for j in (i + 1)..n {
            if g.weight(i, j) > 0.0 {
                let mut labels = vec![0u8; n];
                labels[i] = 1;
                labels[j] = 2;
                starts.push(labels);
            }
        }
    }
    for _ in 0..restarts {
        let labels = loop {
            let cand: Vec<u8> = (0..n).map(|_| rng.gen_range(0..3u8)).collect();
            if cand.iter().any(|&x| x != 0) {
                break cand;
            }
        };
        starts.push(labels);
    }
    if starts.is_empty() {
        return Err(Error::BadParameters("need at least one restart or warm start".into()));
    }

    let mut best: Option<(f64, Vec<u8>)> = None;
    for mut labels in starts {
        let value = descend(g, &row_sums, &mut labels);
        if best.as_ref().is_none_or(|(b, _)| value < b - TIE_TOL) {
            best = Some((value, labels));
        }
    }
    let (_, labels) = best.expect("at least one start");
    let fb = labels_to_fractional(&labels)?;
    Ok((beta_tilde(g, &fb)?, fb))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepPoint {
    pub t: f64,
    pub beta: f64,
    pub partition: SignedPartition,
}

/// Distinct nonzero `|f[i]|`, ascending.
fn thresholds(f: &GridFunction) -> Vec<f64> {
    let mut ts: Vec<f64> = f.values().iter().map(|v| v.abs()).filter(|&v| v > 0.0).collect();
    ts.sort_by(f64::total_cmp);
    ts.dedup();
    ts
}

fn level_sets(f: &GridFunction, t: f64) -> Result<SignedPartition> {
    let left = (0..f.len()).filter(|&i| f[i] <= -t).collect();
    let right = (0..f.len()).filter(|&i| f[i] >= t).collect();
    SignedPartition::new(left, right)
}

/// `β(L_t, R_t)` for `L_t = {f <= -t}`, `R_t = {f >= t}` at every attained
/// `|f|` value. Between consecutive attained values the sets do not change.
pub fn threshold_sweep(w: &Graphon, f: &GridFunction) -> Result<Vec<SweepPoint>> {
    if !is_connected(w) {
        return Err(Error::NotConnected);
    }
    if f.len() != w.m() {
        return Err(Error::LengthMismatch { expected: w.m(), got: f.len() });
    }
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    thresholds(f)
        .into_iter()
        .map(|t| {
            let partition = level_sets(f, t)?;
            let beta = ratio_unchecked(w, &partition)?;
            Ok(SweepPoint { t, beta, partition })
        })
        .collect()
}

/// Best level-set partition of `f`; ties go to the smallest `t`.
pub fn threshold_rounding(w: &Graphon, f: &GridFunction) -> Result<RatioReport> {
    let sweep = threshold_sweep(w, f)?;
    let mut best: Option<&SweepPoint> = None;
    for point in &sweep {
        if best.is_none_or(|b| point.beta < b.beta - TIE_TOL) {
            best = Some(point);
        }
    }
    let best = best.ok_or(Error::ZeroFunction)?;
    Ok(RatioReport { beta: best.beta, witness: best.partition.clone(), threshold: Some(best.t) })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepIntegrals {
    pub num_lhs: f64,
    pub num_rhs: f64,
    pub den_lhs: f64,
    pub den_rhs: f64,
}

/// Both sides of the level-set integral estimates behind threshold
/// rounding:
///
/// ```text
/// ∫ 2t [2η(L_t×L_t) + 2η(R_t×R_t) + η(S_t×S_t^c)] dt <= 2 (∫∫(f(x)+f(y))²W)^½ (∫∫f(x)²W)^½
/// ∫ 2t [2η(S_t×I)] dt = 2 ∫∫ f(x)² W
/// ```
///
/// The integrands are constant on each `(t_{k-1}, t_k]`, so each segment
/// contributes `(t_k² - t_{k-1}²)` times its value.
pub fn sweep_integral_check(w: &Graphon, f: &GridFunction) -> Result<SweepIntegrals> {
    if f.len() != w.m() {
        return Err(Error::LengthMismatch { expected: w.m(), got: f.len() });
    }
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let m = w.m();
    let all = all_cells(m);
    let mut num_lhs = 0.0;
    let mut den_lhs = 0.0;
    let mut prev = 0.0;
    for t in thresholds(f) {
        let p = level_sets(f, t)?;
        let support = p.support();
        let outside = complement(&support, m);
        let num = 2.0 * eta_mass(w, p.left(), p.left())
            + 2.0 * eta_mass(w, p.right(), p.right())
            + eta_mass(w, &support, &outside);
        let den = 2.0 * eta_mass(w, &support, &all);
        let weight = t * t - prev * prev;
        num_lhs += weight * num;
        den_lhs += weight * den;
        prev = t;
    }
    let norm = inner_v(w, f, f)?;
    let anti = antidirichlet(w, f)?;
    Ok(SweepIntegrals {
        num_lhs,
        num_rhs: 2.0 * anti.sqrt() * norm.sqrt(),
        den_lhs,
        den_rhs: 2.0 * norm,
    })
}

fn check_dyadic(m: usize, level: usize) -> Result<usize> {
    let levels = (level + 1) as u32;
    let parts = 1usize.checked_shl(levels).filter(|&p| p > 0 && m.is_multiple_of(p));
    match parts {
        Some(p) => Ok(m / p),
        None => Err(Error::GridMisaligned { m, levels }),
    }
}

/// Preimages of `L = [0, ½)` and `R = [½, 1)` under the `level`-th iterate
/// of the doubling map `x ↦ 2x mod 1`, as cell sets on an `m`-cell grid.
pub fn doubling_partition(level: usize, m: usize) -> Result<SignedPartition> {
    let block = check_dyadic(m, level)?;
    let (left, right) = (0..m).partition(|c| (c / block) % 2 == 0);
    SignedPartition::new(left, right)
}

/// `β(L_n, R_n)` for `n = 0..=levels`.
pub fn mixing_sequence(w: &Graphon, levels: usize) -> Result<Vec<f64>> {
    check_dyadic(w.m(), levels)?;
    if !is_connected(w) {
        return Err(Error::NotConnected);
    }
    (0..=levels)
        .map(|n| ratio_unchecked(w, &doubling_partition(n, w.m())?))
        .collect()
}

/// Ratio of the partition that puts the left half of every cell in `L`
/// and the right half in `R`. The witness lives on the grid refined by 2.
/// Its ratio is exactly ½ for every graphon, so it certifies `β_W <= ½`
/// even when cell-aligned partitions cannot.
pub fn split_cell_bound(w: &Graphon) -> Result<RatioReport> {
    if !is_connected(w) {
        return Err(Error::NotConnected);
    }
    let fine = w.refine(2)?;
    let m = fine.m();
    let witness = SignedPartition::new((0..m).step_by(2).collect(), (1..m).step_by(2).collect())?;
    let beta = ratio_unchecked(&fine, &witness)?;
    Ok(RatioReport { beta, witness, threshold: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphon::{associated_graphon, build_graphon, family, GraphonFamily};

    fn part(l: &[usize], r: &[usize]) -> SignedPartition {
        SignedPartition::new(l.to_vec(), r.to_vec()).unwrap()
    }

    fn bip_block(m: usize) -> Graphon {
        let spec = GraphonFamily::Sbm {
            block_sizes: vec![0.5, 0.5],
            block_matrix: vec![vec![0.0, 1.0], vec![1.0, 0.0]],
        };
        family(&spec, m).unwrap()
    }

    fn graphon_of(g: &WeightedGraph) -> Graphon {
        associated_graphon(g, 1).unwrap()
    }

    #[test]
    fn beta_partition_examples() {
        let w = family(&GraphonFamily::Constant { c: 0.4 }, 6).unwrap();
        let b = beta_partition(&w, &part(&[0, 1, 2], &[3, 4, 5])).unwrap();
        assert!((b - 0.5).abs() < 1e-15);

        assert_eq!(beta_partition(&bip_block(4), &part(&[0, 1], &[2, 3])).unwrap(), 0.0);

        let k3 = graphon_of(&WeightedGraph::complete(3).unwrap());
        assert!((beta_partition(&k3, &part(&[0], &[1])).unwrap() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn beta_partition_errors() {
        let split = build_graphon(&[vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(beta_partition(&split, &part(&[0], &[])), Err(Error::NotConnected)));
        let w = bip_block(4);
        assert!(matches!(beta_partition(&w, &part(&[7], &[])), Err(Error::CellOutOfRange { .. })));
    }

    #[test]
    fn signed_indicator_examples() {
        assert_eq!(signed_indicator(&part(&[0], &[1]), 3).unwrap().values(), &[-1.0, 1.0, 0.0]);
        assert_eq!(signed_indicator(&part(&[], &[0, 1]), 2).unwrap().values(), &[1.0, 1.0]);
        assert_eq!(signed_indicator(&part(&[0, 1], &[]), 2).unwrap().values(), &[-1.0, -1.0]);
    }

    #[test]
    fn beta_exhaustive_examples() {
        let k2 = graphon_of(&WeightedGraph::complete(2).unwrap());
        let r = beta_exhaustive(&k2).unwrap();
        assert_eq!(r.beta, 0.0);
        assert_eq!(r.witness, part(&[0], &[1]));

        let k3 = graphon_of(&WeightedGraph::complete(3).unwrap());
        assert!((beta_exhaustive(&k3).unwrap().beta - 0.25).abs() < 1e-15);

        let c5 = graphon_of(&WeightedGraph::cycle(5).unwrap());
        let r = beta_exhaustive(&c5).unwrap();
        assert!((r.beta - 0.125).abs() < 1e-15);
        assert_eq!(r.witness, part(&[0, 2], &[1, 3]));
    }

    #[test]
    fn exhaustive_limits() {
        let w = family(&GraphonFamily::Constant { c: 0.5 }, 13).unwrap();
        assert!(matches!(beta_exhaustive(&w), Err(Error::TooLarge { size: 13, .. })));
    }

    #[test]
    fn beta_graph_exact_examples() {
        assert_eq!(beta_graph_exact(&WeightedGraph::complete(2).unwrap()).unwrap().beta, 0.0);
        let r = beta_graph_exact(&WeightedGraph::complete(3).unwrap()).unwrap();
        assert_eq!(r.beta, 0.25);
        assert_eq!(r.witness, part(&[0], &[1]));
        let r = beta_graph_exact(&WeightedGraph::cycle(4).unwrap()).unwrap();
        assert_eq!(r.beta, 0.0);
        assert_eq!(r.witness, part(&[0, 2], &[1, 3]));
    }

    #[test]
    fn beta_tilde_examples() {
        let k3 = WeightedGraph::complete(3).unwrap();
        let half = FractionalBipartition::new(vec![0.5; 3], vec![0.5; 3]).unwrap();
        assert!((beta_tilde(&k3, &half).unwrap() - 0.5).abs() < 1e-15);
        let c5 = WeightedGraph::cycle(5).unwrap();
        let half5 = FractionalBipartition::new(vec![0.5; 5], vec![0.5; 5]).unwrap();
        assert!((beta_tilde(&c5, &half5).unwrap() - 0.5).abs() < 1e-15);

        let fb = FractionalBipartition::new(vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]).unwrap();
        assert_eq!(beta_tilde(&k3, &fb).unwrap(), 0.25);

        // All vertices on one side: every edge is uncut, ratio 1.
        let fb = FractionalBipartition::new(vec![1.0; 3], vec![0.0; 3]).unwrap();
        assert_eq!(beta_tilde(&k3, &fb).unwrap(), 1.0);
    }

    #[test]
    fn beta_wg_search_examples() {
        let (v, fb) = beta_wg_search(&WeightedGraph::complete(2).unwrap(), 5, 9).unwrap();
        assert_eq!(v, 0.0);
        let ends = (fb.alpha().to_vec(), fb.gamma().to_vec());
        assert!(ends == (vec![1.0, 0.0], vec![0.0, 1.0]) || ends == (vec![0.0, 1.0], vec![1.0, 0.0]));

        let (v, _) = beta_wg_search(&WeightedGraph::complete(3).unwrap(), 20, 42).unwrap();
        assert_eq!(v, 0.25);
        let (v, _) = beta_wg_search(&WeightedGraph::cycle(5).unwrap(), 20, 42).unwrap();
        assert_eq!(v, 0.125);
    }

    #[test]
    fn beta_wg_search_rejects_loops() {
        let g = WeightedGraph::new(&[vec![0.5, 1.0], vec![1.0, 0.0]]).unwrap();
        assert!(matches!(beta_wg_search(&g, 3, 0), Err(Error::NotLoopless)));
    }

    #[test]
    fn threshold_rounding_examples() {
        let r = threshold_rounding(&bip_block(4), &GridFunction::new(vec![1.0, 1.0, -1.0, -1.0])).unwrap();
        assert_eq!(r.beta, 0.0);
        assert_eq!(r.threshold, Some(1.0));

        let k3 = graphon_of(&WeightedGraph::complete(3).unwrap());
        let f = GridFunction::new(vec![1.0, -1.0, 0.0]);
        let r = threshold_rounding(&k3, &f).unwrap();
        assert!((r.beta - 0.25).abs() < 1e-15);
        let bound = (antidirichlet(&k3, &f).unwrap() / inner_v(&k3, &f, &f).unwrap()).sqrt();
        assert!((bound - 1.0).abs() < 1e-15);

        let w = family(&GraphonFamily::Constant { c: 0.3 }, 2).unwrap();
        let f = GridFunction::new(vec![1.0, -1.0]);
        let r = threshold_rounding(&w, &f).unwrap();
        assert!((r.beta - 0.5).abs() < 1e-15);
        let bound = (antidirichlet(&w, &f).unwrap() / inner_v(&w, &f, &f).unwrap()).sqrt();
        assert!((bound - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn threshold_rounding_prefers_smallest_t_on_ties() {
        let k3 = graphon_of(&WeightedGraph::complete(3).unwrap());
        // Both thresholds give the single-cell partitions {1} / {0}.
        let f = GridFunction::new(vec![2.0, -2.0, 0.0]);
        let r = threshold_rounding(&k3, &f).unwrap();
        assert_eq!(r.threshold, Some(2.0));
        let f = GridFunction::new(vec![0.5, -0.5, 0.0]);
        assert_eq!(threshold_rounding(&k3, &f).unwrap().threshold, Some(0.5));
        assert!(matches!(
            threshold_rounding(&k3, &GridFunction::constant(0.0, 3)),
            Err(Error::ZeroFunction)
        ));
    }

    #[test]
    fn sweep_integral_examples() {
        let k3 = graphon_of(&WeightedGraph::complete(3).unwrap());
        let s = sweep_integral_check(&k3, &GridFunction::new(vec![1.0, -1.0, 0.0])).unwrap();
        assert!((s.den_lhs - 8.0 / 9.0).abs() < 1e-15);
        assert!((s.den_rhs - 8.0 / 9.0).abs() < 1e-15);
        assert!(s.num_lhs <= s.num_rhs);

        let w = family(&GraphonFamily::Constant { c: 0.8 }, 4).unwrap();
        let s = sweep_integral_check(&w, &GridFunction::new(vec![1.0, -1.0, -1.0, 1.0])).unwrap();
        assert_eq!(s.den_lhs, s.den_rhs);
    }

    #[test]
    fn sweep_integrals_match_quadrature() {
        // Independent route: midpoint quadrature in t over [0, max|f|].
        let w = build_graphon(&[
            vec![0.2, 0.9, 0.4],
            vec![0.9, 0.0, 0.6],
            vec![0.4, 0.6, 0.7],
        ])
        .unwrap();
        let f = GridFunction::new(vec![0.8, -0.3, 0.5]);
        let s = sweep_integral_check(&w, &f).unwrap();
        let steps = 200_000;
        let top = f.max_abs();
        let h = top / steps as f64;
        let (mut num, mut den) = (0.0, 0.0);
        for k in 0..steps {
            let t = (k as f64 + 0.5) * h;
            let p = level_sets(&f, t).unwrap();
            let support = p.support();
            let outside = complement(&support, 3);
            let n_val = 2.0 * eta_mass(&w, p.left(), p.left())
                + 2.0 * eta_mass(&w, p.right(), p.right())
                + eta_mass(&w, &support, &outside);
            let d_val = 2.0 * eta_mass(&w, &support, &[0, 1, 2]);
            num += 2.0 * t * n_val * h;
            den += 2.0 * t * d_val * h;
        }
        assert!((num - s.num_lhs).abs() < 1e-6);
        assert!((den - s.den_lhs).abs() < 1e-6);
    }

    #[test]
    fn doubling_partition_examples() {
        assert_eq!(doubling_partition(0, 2).unwrap(), part(&[0], &[1]));
        assert_eq!(doubling_partition(1, 4).unwrap(), part(&[0, 2], &[1, 3]));
        assert_eq!(doubling_partition(2, 8).unwrap(), part(&[0, 2, 4, 6], &[1, 3, 5, 7]));
        assert_eq!(doubling_partition(1, 8).unwrap(), part(&[0, 1, 4, 5], &[2, 3, 6, 7]));
        assert!(matches!(doubling_partition(2, 12), Err(Error::GridMisaligned { .. })));
    }

    #[test]
    fn mixing_sequence_examples() {
        let w = family(&GraphonFamily::Constant { c: 0.7 }, 32).unwrap();
        let seq = mixing_sequence(&w, 4).unwrap();
        assert_eq!(seq.len(), 5);
        assert!(seq.iter().all(|&b| (b - 0.5).abs() < 1e-15));

        let spec = GraphonFamily::Sbm {
            block_sizes: vec![0.5, 0.5],
            block_matrix: vec![vec![0.9, 0.1], vec![0.1, 0.9]],
        };
        let seq = mixing_sequence(&family(&spec, 64).unwrap(), 4).unwrap();
        // Level 0 is the block split itself: all mass stays inside L or R.
        assert!((seq[0] - 0.9).abs() < 1e-12);
        assert!(seq[1..].iter().all(|&b| (b - 0.5).abs() < 1e-12));
    }

    #[test]
    fn split_cell_bound_is_half() {
        let w = build_graphon(&[vec![1.0, 0.01], vec![0.01, 1.0]]).unwrap();
        // Cell-aligned partitions cannot get below ½ on this kernel.
        assert!(beta_exhaustive(&w).unwrap().beta > 0.9);
        let r = split_cell_bound(&w).unwrap();
        assert!((r.beta - 0.5).abs() < 1e-15);
        assert_eq!(r.witness.left(), &[0, 2]);
    }
}
