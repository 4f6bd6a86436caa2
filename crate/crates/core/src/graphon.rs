//! Weighted graphs, step graphons and the graph-to-graphon embedding.
//!
//! A [`Graphon`] is always a step function: `kernel[i][j]` is the constant
//! value of `W` on the cell `P_i x P_j` with `P_i = [i/m, (i+1)/m)`. Every
//! integral used downstream (degrees, edge measures, inner products) is a
//! finite sum over cells and carries no quadrature error.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::GridFunction;

/// Largest asymmetry repaired by averaging; anything above is rejected.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Boundary tolerance when checking that sbm blocks land on cell edges.
const ALIGN_TOL: f64 = 1e-9;

/// Flattens a row-major square matrix after checking range and symmetry.
fn symmetric_unit_matrix(rows: &[Vec<f64>]) -> Result<(usize, Vec<f64>)> {
    let n = rows.len();
    for (row, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NonSquare { rows: n, row, len: r.len() });
        }
        for (col, &value) in r.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::OutOfRange { row, col, value });
            }
        }
    }
    let mut flat = vec![0.0; n * n];
    for i in 0..n {
        flat[i * n + i] = rows[i][i];
        for j in (i + 1)..n {
            let (a, b) = (rows[i][j], rows[j][i]);
            let delta = (a - b).abs();
            if delta > SYMMETRY_TOL {
                return Err(Error::AsymmetryTooLarge { row: i, col: j, delta });
            }
            let v = if delta == 0.0 { a } else { 0.5 * (a + b) };
            flat[i * n + j] = v;
            flat[j * n + i] = v;
        }
    }
    Ok((n, flat))
}

/// Breadth-first search over the positive entries of a row-major matrix.
fn support_spans(n: usize, entries: &[f64]) -> bool {
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if !seen[j] && entries[i * n + j] > 0.0 {
                seen[j] = true;
                reached += 1;
                queue.push_back(j);
            }
        }
    }
    reached == n
}

/// Proper 2-colouring of the support, or `None` when an odd cycle or a
/// self-loop exists. Colour 0 is assigned to the lowest index of each
/// component.
fn two_colouring(n: usize, entries: &[f64]) -> Option<Vec<u8>> {
    if (0..n).any(|i| entries[i * n + i] > 0.0) {
        return None;
    }
    let mut colour: Vec<Option<u8>> = vec![None; n];
    for start in 0..n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let ci = colour[i].unwrap_or(0);
            for j in 0..n {
                if entries[i * n + j] <= 0.0 {
                    continue;
                }
                match colour[j] {
                    None => {
                        colour[j] = Some(1 - ci);
                        queue.push_back(j);
                    }
                    Some(cj) if cj == ci => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(colour.into_iter().map(|c| c.unwrap_or(0)).collect())
}

/// Symmetric nonnegative weights on `n >= 2` vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    weights: Vec<f64>,
    loopless: bool,
}

impl WeightedGraph {
    pub fn new(weights: &[Vec<f64>]) -> Result<Self> {
        let (n, weights) = symmetric_unit_matrix(weights)?;
        if n < 2 {
            return Err(Error::BadParameters(format!(
                "a weighted graph needs at least 2 vertices, got {n}"
            )));
        }
        let loopless = (0..n).all(|i| weights[i * n + i] == 0.0);
        Ok(Self { n, weights, loopless })
    }

    /// Unweighted graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut rows = vec![vec![0.0; n]; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::BadParameters(format!("edge ({a}, {b}) out of range")));
            }
            rows[a][b] = 1.0;
            rows[b][a] = 1.0;
        }
        Self::new(&rows)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|a| (a, (a + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_loopless(&self) -> bool {
        self.loopless
    }

    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.weights[i * self.n + j]
    }

    /// Row-major weights.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.weights.chunks(self.n).map(<[f64]>::to_vec).collect()
    }

    pub fn vol(&self, i: usize) -> f64 {
        self.weights[i * self.n..(i + 1) * self.n].iter().sum()
    }

    /// `e_G(A, B)`: total weight over ordered pairs `i in A`, `j in B`.
    pub fn edge_mass(&self, a: &[usize], b: &[usize]) -> f64 {
        a.iter()
            .map(|&i| b.iter().map(|&j| self.weight(i, j)).sum::<f64>())
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        support_spans(self.n, &self.weights)
    }

    pub fn is_bipartite(&self) -> bool {
        two_colouring(self.n, &self.weights).is_some()
    }
}

/// Step graphon on the uniform `m x m` grid of `[0,1]^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Graphon {
    m: usize,
    kernel: Vec<f64>,
    degrees: Vec<f64>,
}

impl Graphon {
    fn from_flat(m: usize, kernel: Vec<f64>) -> Self {
        let mf = m as f64;
        let degrees = kernel.chunks(m).map(|row| row.iter().sum::<f64>() / mf).collect();
        Self { m, kernel, degrees }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.kernel[i * self.m + j]
    }

    /// Row-major kernel values.
    pub fn kernel(&self) -> &[f64] {
        &self.kernel
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.kernel.chunks(self.m).map(<[f64]>::to_vec).collect()
    }

    /// Cell degrees `d[i] = (1/m) sum_j kernel[i][j]`.
    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    pub fn min_degree(&self) -> f64 {
        self.degrees.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.m).any(|i| self.value(i, i) > 0.0)
    }

    /// Same step function on a grid `factor` times finer.
    pub fn refine(&self, factor: usize) -> Result<Self> {
        if factor == 0 {
            return Err(Error::BadParameters("refinement factor must be >= 1".into()));
        }
        let m = self.m * factor;
        let mut kernel = vec![0.0; m * m];
        for a in 0..m {
            for b in 0..m {
                kernel[a * m + b] = self.value(a / factor, b / factor);
            }
        }
        Ok(Self::from_flat(m, kernel))
    }
}

/// Validates a square kernel and repairs sub-tolerance asymmetry.
pub fn build_graphon(kernel: &[Vec<f64>]) -> Result<Graphon> {
    let (m, flat) = symmetric_unit_matrix(kernel)?;
    if m == 0 {
        return Err(Error::BadParameters("kernel must have at least one cell".into()));
    }
    Ok(Graphon::from_flat(m, flat))
}

/// The graphon `W_G` equal to `w_ij` on `P_i x P_j`, with every vertex
/// spread over `cells_per_vertex` consecutive cells.
pub fn associated_graphon(graph: &WeightedGraph, cells_per_vertex: usize) -> Result<Graphon> {
    if cells_per_vertex == 0 {
        return Err(Error::BadParameters("cells per vertex must be >= 1".into()));
    }
    let k = cells_per_vertex;
    let m = graph.n() * k;
    let mut kernel = vec![0.0; m * m];
    for a in 0..m {
        for b in 0..m {
            kernel[a * m + b] = graph.weight(a / k, b / k);
        }
    }
    Ok(Graphon::from_flat(m, kernel))
}

/// Named graphon families, as read from JSON input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum GraphonFamily {
    Constant { c: f64 },
    Sbm { block_sizes: Vec<f64>, block_matrix: Vec<Vec<f64>> },
    /// `W(x, y) = x y`.
    Separable,
    Grid { kernel: Vec<Vec<f64>> },
}

impl GraphonFamily {
    /// Resolution the family carries on its own, if any.
    pub fn native_resolution(&self) -> Option<usize> {
        match self {
            GraphonFamily::Grid { kernel } => Some(kernel.len()),
            _ => None,
        }
    }
}

/// Discretizes a family on `m` cells by exact cell averages. A `grid`
/// kernel is refined by replication when `m` is a multiple of its size.
pub fn family(spec: &GraphonFamily, m: usize) -> Result<Graphon> {
    if m == 0 {
        return Err(Error::BadParameters("grid resolution must be >= 1".into()));
    }
    match spec {
        GraphonFamily::Constant { c } => {
            if !(0.0..=1.0).contains(c) {
                return Err(Error::BadParameters(format!("constant {c} outside [0, 1]")));
            }
            Ok(Graphon::from_flat(m, vec![*c; m * m]))
        }
        GraphonFamily::Sbm { block_sizes, block_matrix } => sbm(block_sizes, block_matrix, m),
        GraphonFamily::Separable => {
            // Average of x over cell i is (i + 1/2)/m, and the cell average
            // of xy factorizes.
            let mf = m as f64;
            let mid: Vec<f64> = (0..m).map(|i| (i as f64 + 0.5) / mf).collect();
            let kernel = mid
                .iter()
                .flat_map(|&x| mid.iter().map(move |&y| x * y))
                .collect();
            Ok(Graphon::from_flat(m, kernel))
        }
        GraphonFamily::Grid { kernel } => {
            let base = build_graphon(kernel)?;
            if !m.is_multiple_of(base.m()) {
                return Err(Error::BlockBoundaryMisaligned {
                    boundary: 1.0 / base.m() as f64,
                    m,
                });
            }
            base.refine(m / base.m())
        }
    }
}

fn sbm(block_sizes: &[f64], block_matrix: &[Vec<f64>], m: usize) -> Result<Graphon> {
    let blocks = block_sizes.len();
    if blocks == 0 || block_matrix.len() != blocks {
        return Err(Error::BadParameters(format!(
            "{blocks} block sizes but a {}-row block matrix",
            block_matrix.len()
        )));
    }
    if block_sizes.iter().any(|&s| !(s > 0.0)) {
        return Err(Error::BadParameters("block sizes must be positive".into()));
    }
    let total: f64 = block_sizes.iter().sum();
    if (total - 1.0).abs() > ALIGN_TOL {
        return Err(Error::BadParameters(format!("block sizes sum to {total}, not 1")));
    }
    let (_, values) = symmetric_unit_matrix(block_matrix)?;

    // Block index of every cell, with each boundary snapped to a cell edge.
    let mut block_of = Vec::with_capacity(m);
    let mut cumulative = 0.0;
    let mut start = 0usize;
    for (b, &size) in block_sizes.iter().enumerate() {
        cumulative += size;
        let edge = cumulative * m as f64;
        let end = edge.round();
        if (edge - end).abs() > ALIGN_TOL * m as f64 {
            return Err(Error::BlockBoundaryMisaligned { boundary: cumulative, m });
        }
        let end = end as usize;
        if end <= start {
            return Err(Error::BlockBoundaryMisaligned { boundary: cumulative, m });
        }
        block_of.extend(std::iter::repeat_n(b, end - start));
        start = end;
    }
    debug_assert_eq!(block_of.len(), m);

    let mut kernel = vec![0.0; m * m];
    for i in 0..m {
        for j in 0..m {
            kernel[i * m + j] = values[block_of[i] * blocks + block_of[j]];
        }
    }
    Ok(Graphon::from_flat(m, kernel))
}

/// `d_W` as a grid function.
pub fn degree(w: &Graphon) -> GridFunction {
    GridFunction::new(w.degrees().to_vec())
}

/// `eta(A x B) = (1/m^2) sum_{i in A, j in B} kernel[i][j]`.
pub fn eta_mass(w: &Graphon, a: &[usize], b: &[usize]) -> f64 {
    let m = w.m();
    let sum = compensated_sum(a.iter().flat_map(|&i| b.iter().map(move |&j| w.value(i, j))));
    sum / (m * m) as f64
}

/// Neumaier summation: keeps ratios of large equal-valued sums (such as
/// the constant graphon's ½) exact instead of drifting by many ulps.
fn compensated_sum(values: impl Iterator<Item = f64>) -> f64 {
    let (mut sum, mut carry) = (0.0f64, 0.0f64);
    for v in values {
        let t = sum + v;
        carry += if sum.abs() >= v.abs() { (sum - t) + v } else { (v - t) + sum };
        sum = t;
    }
    sum + carry
}

/// Connected in the measure sense. For a step graphon this is: no
/// zero-degree cell, and the support graph (self-loops included) is connected.
pub fn is_connected(w: &Graphon) -> bool {
    if w.degrees().iter().any(|&d| !(d > 0.0)) {
        return false;
    }
    support_spans(w.m(), w.kernel())
}

/// Bipartiteness of the support, with the colouring as a witness covering
/// every cell.
pub fn is_bipartite_graphon(w: &Graphon) -> (bool, Option<SignedPartition>) {
    match two_colouring(w.m(), w.kernel()) {
        Some(colour) => {
            let left = (0..w.m()).filter(|&i| colour[i] == 0).collect();
            let right = (0..w.m()).filter(|&i| colour[i] == 1).collect();
            // Colour 0 always covers cell 0, so the union is nonempty.
            let witness = SignedPartition::new(left, right).ok();
            (true, witness)
        }
        None => (false, None),
    }
}

pub fn graph_is_connected(g: &WeightedGraph) -> bool {
    g.is_connected()
}

/// Disjoint cell sets `(L, R)` with a nonempty union, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignedPartition {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl SignedPartition {
    pub fn new(mut left: Vec<usize>, mut right: Vec<usize>) -> Result<Self> {
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        if left.is_empty() && right.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if left.iter().any(|i| right.binary_search(i).is_ok()) {
            return Err(Error::EmptyPartition);
        }
        Ok(Self { left, right })
    }

    /// From a label per cell: 1 = left, 2 = right, anything else = neither.
    pub fn from_labels(labels: &[u8]) -> Result<Self> {
        let pick = |tag| labels.iter().enumerate().filter(|(_, &l)| l == tag).map(|(i, _)| i).collect();
        Self::new(pick(1), pick(2))
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    /// `L ∪ R`, sorted.
    pub fn support(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.left.iter().chain(&self.right).copied().collect();
        all.sort_unstable();
        all
    }

    pub fn check_range(&self, m: usize) -> Result<()> {
        match self.left.iter().chain(&self.right).find(|&&i| i >= m) {
            Some(&index) => Err(Error::CellOutOfRange { index, m }),
            None => Ok(()),
        }
    }
}

/// Fractional assignment of each vertex to the left (`alpha`) and right
/// (`gamma`) side.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FractionalBipartition {
    alpha: Vec<f64>,
    gamma: Vec<f64>,
}

impl FractionalBipartition {
    pub fn new(alpha: Vec<f64>, gamma: Vec<f64>) -> Result<Self> {
        if alpha.len() != gamma.len() {
            return Err(Error::LengthMismatch { expected: alpha.len(), got: gamma.len() });
        }
        let unit = |v: f64| (0.0..=1.0).contains(&v);
        let feasible = alpha
            .iter()
            .zip(&gamma)
            .all(|(&a, &g)| unit(a) && unit(g) && a + g <= 1.0 + 1e-15);
        let positive = alpha.iter().zip(&gamma).any(|(&a, &g)| a + g > 0.0);
        if !feasible || !positive {
            return Err(Error::ZeroFractionalMass);
        }
        Ok(Self { alpha, gamma })
    }

    /// Integral point matching a signed partition of `n` vertices.
    pub fn from_partition(p: &SignedPartition, n: usize) -> Result<Self> {
        p.check_range(n)?;
        let mut alpha = vec![0.0; n];
        let mut gamma = vec![0.0; n];
        p.left().iter().for_each(|&i| alpha[i] = 1.0);
        p.right().iter().for_each(|&i| gamma[i] = 1.0);
        Self::new(alpha, gamma)
    }

    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> WeightedGraph {
        WeightedGraph::complete(2).unwrap()
    }

    #[test]
    fn build_graphon_examples() {
        let w = build_graphon(&[vec![0.5]]).unwrap();
        assert_eq!(w.m(), 1);
        assert_eq!(w.value(0, 0), 0.5);

        let w = build_graphon(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert_eq!(w.rows(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);

        let err = build_graphon(&[vec![0.0, 0.3], vec![0.31, 0.0]]).unwrap_err();
        assert!(matches!(err, Error::AsymmetryTooLarge { .. }));
    }

    #[test]
    fn build_graphon_rejects_bad_shapes_and_values() {
        assert!(matches!(
            build_graphon(&[vec![0.0, 1.0], vec![1.0]]),
            Err(Error::NonSquare { .. })
        ));
        assert!(matches!(build_graphon(&[vec![1.5]]), Err(Error::OutOfRange { .. })));
        assert!(matches!(build_graphon(&[vec![f64::NAN]]), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn tiny_asymmetry_is_averaged() {
        let w = build_graphon(&[vec![0.0, 0.3], vec![0.3 + 5e-13, 0.0]]).unwrap();
        assert_eq!(w.value(0, 1), w.value(1, 0));
        assert!((w.value(0, 1) - 0.3).abs() < 1e-12);
    }

    #[test]
    fn associated_graphon_examples() {
        let w = associated_graphon(&k2(), 1).unwrap();
        assert_eq!(w.rows(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);

        let w = associated_graphon(&k2(), 2).unwrap();
        let expected = vec![
            vec![0.0, 0.0, 1.0, 1.0],
            vec![0.0, 0.0, 1.0, 1.0],
            vec![1.0, 1.0, 0.0, 0.0],
            vec![1.0, 1.0, 0.0, 0.0],
        ];
        assert_eq!(w.rows(), expected);

        let k3 = WeightedGraph::complete(3).unwrap();
        let w = associated_graphon(&k3, 1).unwrap();
        assert_eq!(
            w.rows(),
            vec![vec![0.0, 1.0, 1.0], vec![1.0, 0.0, 1.0], vec![1.0, 1.0, 0.0]]
        );
    }

    #[test]
    fn family_examples() {
        let w = family(&GraphonFamily::Constant { c: 0.7 }, 2).unwrap();
        assert!(w.kernel().iter().all(|&v| v == 0.7));

        let spec = GraphonFamily::Sbm {
            block_sizes: vec![0.5, 0.5],
            block_matrix: vec![vec![0.0, 1.0], vec![1.0, 0.0]],
        };
        let w = family(&spec, 4).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expected = if (i < 2) == (j < 2) { 0.0 } else { 1.0 };
                assert_eq!(w.value(i, j), expected);
            }
        }

        let w = family(&GraphonFamily::Separable, 2).unwrap();
        assert_eq!(w.value(0, 0), 0.0625);
    }

    #[test]
    fn separable_cells_match_midpoint_quadrature() {
        // Independent check of the closed-form cell average of xy.
        let m = 5;
        let w = family(&GraphonFamily::Separable, m).unwrap();
        let sub = 200;
        for i in 0..m {
            for j in 0..m {
                let mut acc = 0.0;
                for a in 0..sub {
                    for b in 0..sub {
                        let x = (i as f64 + (a as f64 + 0.5) / sub as f64) / m as f64;
                        let y = (j as f64 + (b as f64 + 0.5) / sub as f64) / m as f64;
                        acc += x * y;
                    }
                }
                acc /= (sub * sub) as f64;
                assert!((acc - w.value(i, j)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn family_errors() {
        let spec = GraphonFamily::Sbm {
            block_sizes: vec![0.3, 0.7],
            block_matrix: vec![vec![1.0, 0.0], vec![0.0, 1.0]],
        };
        assert!(matches!(family(&spec, 4), Err(Error::BlockBoundaryMisaligned { .. })));
        assert!(family(&spec, 10).is_ok());

        let spec = GraphonFamily::Sbm {
            block_sizes: vec![0.5, 0.6],
            block_matrix: vec![vec![1.0, 0.0], vec![0.0, 1.0]],
        };
        assert!(matches!(family(&spec, 4), Err(Error::BadParameters(_))));
        assert!(matches!(
            family(&GraphonFamily::Constant { c: 1.2 }, 4),
            Err(Error::BadParameters(_))
        ));
        let grid = GraphonFamily::Grid { kernel: vec![vec![0.0, 1.0], vec![1.0, 0.0]] };
        assert!(matches!(family(&grid, 3), Err(Error::BlockBoundaryMisaligned { .. })));
        assert_eq!(family(&grid, 6).unwrap().m(), 6);
    }

    #[test]
    fn degree_examples() {
        let w = family(&GraphonFamily::Constant { c: 0.7 }, 4).unwrap();
        assert!(degree(&w).values().iter().all(|&d| (d - 0.7).abs() < 1e-15));

        let w = associated_graphon(&k2(), 1).unwrap();
        assert_eq!(degree(&w).values(), &[0.5, 0.5]);

        let spec = GraphonFamily::Sbm {
            block_sizes: vec![0.5, 0.5],
            block_matrix: vec![vec![0.0, 1.0], vec![1.0, 0.0]],
        };
        let w = family(&spec, 4).unwrap();
        assert_eq!(degree(&w).values(), &[0.5; 4]);
    }

    #[test]
    fn eta_mass_examples() {
        let c = 0.35;
        let w = family(&GraphonFamily::Constant { c }, 6).unwrap();
        let all: Vec<usize> = (0..6).collect();
        assert!((eta_mass(&w, &all, &all) - c).abs() < 1e-15);
        assert_eq!(eta_mass(&w, &[], &all), 0.0);

        let w = associated_graphon(&k2(), 1).unwrap();
        assert_eq!(eta_mass(&w, &[0], &[1]), 0.25);
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(&family(&GraphonFamily::Constant { c: 0.7 }, 3).unwrap()));
        let split = GraphonFamily::Sbm {
            block_sizes: vec![0.5, 0.5],
            block_matrix: vec![vec![1.0, 0.0], vec![0.0, 1.0]],
        };
        assert!(!is_connected(&family(&split, 4).unwrap()));
        assert!(is_connected(&associated_graphon(&k2(), 1).unwrap()));

        assert!(!is_connected(&build_graphon(&[vec![0.0]]).unwrap()));
        assert!(is_connected(&build_graphon(&[vec![0.2]]).unwrap()));
        // A zero-degree cell disconnects.
        let w = build_graphon(&[vec![1.0, 0.0], vec![0.0, 0.0]]).unwrap();
        assert!(!is_connected(&w));
    }

    #[test]
    fn bipartite_examples() {
        let spec = GraphonFamily::Sbm {
            block_sizes: vec![0.5, 0.5],
            block_matrix: vec![vec![0.0, 1.0], vec![1.0, 0.0]],
        };
        let (bip, witness) = is_bipartite_graphon(&family(&spec, 4).unwrap());
        assert!(bip);
        let witness = witness.unwrap();
        assert_eq!(witness.left(), &[0, 1]);
        assert_eq!(witness.right(), &[2, 3]);

        let (bip, witness) = is_bipartite_graphon(&family(&GraphonFamily::Constant { c: 0.7 }, 2).unwrap());
        assert!(!bip && witness.is_none());

        let c5 = WeightedGraph::cycle(5).unwrap();
        assert!(!is_bipartite_graphon(&associated_graphon(&c5, 1).unwrap()).0);
    }

    #[test]
    fn graph_connectivity_examples() {
        assert!(graph_is_connected(&WeightedGraph::complete(3).unwrap()));
        let two_edges = WeightedGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!graph_is_connected(&two_edges));
        let p3 = WeightedGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(graph_is_connected(&p3));
    }

    #[test]
    fn partition_validation() {
        assert!(matches!(SignedPartition::new(vec![], vec![]), Err(Error::EmptyPartition)));
        assert!(matches!(SignedPartition::new(vec![1], vec![1, 2]), Err(Error::EmptyPartition)));
        let p = SignedPartition::new(vec![3, 1, 1], vec![0]).unwrap();
        assert_eq!(p.left(), &[1, 3]);
        assert_eq!(p.support(), vec![0, 1, 3]);
        assert!(p.check_range(3).is_err());
    }

    #[test]
    fn fractional_validation() {
        assert!(FractionalBipartition::new(vec![0.6], vec![0.6]).is_err());
        assert!(FractionalBipartition::new(vec![0.0, 0.0], vec![0.0, 0.0]).is_err());
        assert!(FractionalBipartition::new(vec![0.5, 0.0], vec![0.5, 0.0]).is_ok());
    }
}
