//! Exact k-dispersion on weighted complete graphs.
//!
//! The optimum is the largest weight `r` whose threshold graph (edges of
//! weight `>= r`) contains a `k`-clique. Clique existence is monotone in `r`,
//! so a binary search over the distinct input weights finds it. Each probe
//! splits `k` into three near-equal parts, lists the small cliques of each
//! size, and looks for a triangle in the tripartite compatibility graph with
//! boolean matrix products.

use crate::bitset::{bool_matrix_multiply, iter_ones, BitMatrix};
use crate::error::{DispersionError, Result};
use crate::exact::check_k;
use crate::geom::{Dist2, PairWitness, PointSet};
use crate::result::{Algo, DispersionResult, Status};
use crate::scalar::{cmp_scalar, Scalar};

/// Symmetric `n × n` weight matrix; the diagonal is ignored.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedCompleteGraph<T> {
    n: usize,
    weights: Vec<T>,
}

impl<T: Scalar> WeightedCompleteGraph<T> {
    /// Validates symmetry (exact equality) and strictly positive, finite off-diagonal weights.
    pub fn new(n: usize, weights: Vec<T>) -> Result<Self> {
        if weights.len() != n * n {
            return Err(DispersionError::InvalidGraph(format!(
                "expected {} weights for n={n}, got {}",
                n * n,
                weights.len()
            )));
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let w = weights[i * n + j];
                if !w.is_finite_value() || w <= T::zero() {
                    return Err(DispersionError::InvalidGraph(format!(
                        "weight ({i}, {j}) = {w} is not positive"
                    )));
                }
                if w != weights[j * n + i] {
                    return Err(DispersionError::InvalidGraph(format!(
                        "weights ({i}, {j}) = {w} and ({j}, {i}) = {} differ",
                        weights[j * n + i]
                    )));
                }
            }
        }
        Ok(WeightedCompleteGraph { n, weights })
    }

    /// Squared-distance graph of a point set. Coincident points give zero-weight edges.
    pub fn from_points(points: &PointSet<T>) -> Self {
        let n = points.len();
        let mut weights = vec![T::zero(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let d = points.sq_dist(i, j);
                weights[i * n + j] = d;
                weights[j * n + i] = d;
            }
        }
        WeightedCompleteGraph { n, weights }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> T {
        self.weights[i * self.n + j]
    }

    /// Distinct off-diagonal weights, ascending.
    pub fn distinct_weights(&self) -> Vec<T> {
        let mut w: Vec<T> = (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .map(|(i, j)| self.weight(i, j))
            .collect();
        w.sort_by(|a, b| cmp_scalar(*a, *b));
        w.dedup();
        w
    }
}

/// Undirected simple graph with bitset adjacency rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdGraph {
    adjacency: BitMatrix,
}

impl ThresholdGraph {
    /// Graph from an explicit edge list; self-loops are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = BitMatrix::zeros(n, n);
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(DispersionError::IndexOutOfRange {
                    index: i.max(j),
                    len: n,
                });
            }
            if i != j {
                adjacency.set(i, j, true);
                adjacency.set(j, i, true);
            }
        }
        Ok(ThresholdGraph { adjacency })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.rows()
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency.get(i, j)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.count_ones() / 2
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adjacency
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(x, &a)| {
            a < self.n()
                && vertices[x + 1..]
                    .iter()
                    .all(|&b| a != b && self.has_edge(a, b))
        })
    }
}

/// Edge `{i, j}` present iff `weight(i, j) >= r`.
pub fn build_threshold_graph<T: Scalar>(graph: &WeightedCompleteGraph<T>, r: T) -> ThresholdGraph {
    let n = graph.n();
    let adjacency = BitMatrix::from_fn(n, n, |i, j| i != j && graph.weight(i, j) >= r);
    ThresholdGraph { adjacency }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueConfig {
    /// Largest number of small cliques allowed in any one part.
    pub max_part_cliques: usize,
    /// Largest auxiliary matrix, in bits.
    pub max_matrix_bits: usize,
}

impl Default for CliqueConfig {
    fn default() -> Self {
        CliqueConfig {
            max_part_cliques: 2_000_000,
            max_matrix_bits: 1 << 33,
        }
    }
}

/// Part sizes `(⌊k/3⌋, ⌊(k+1)/3⌋, rest)`; each is `⌊k/3⌋` or `⌈k/3⌉`.
pub fn part_sizes(k: usize) -> (usize, usize, usize) {
    let k1 = k / 3;
    let k2 = (k + 1) / 3;
    (k1, k2, k - k1 - k2)
}

pub fn has_k_clique(graph: &ThresholdGraph, k: usize) -> Result<bool> {
    Ok(find_k_clique(graph, k, &CliqueConfig::default())?.is_some())
}

/// A `k`-clique (sorted vertex list) if one exists.
pub fn find_k_clique(
    graph: &ThresholdGraph,
    k: usize,
    cfg: &CliqueConfig,
) -> Result<Option<Vec<usize>>> {
    let n = graph.n();
    if k > n {
        return Ok(None);
    }
    match k {
        0 => return Ok(Some(Vec::new())),
        1 => return Ok(Some(vec![0])),
        2 => {
            return Ok((0..n).find_map(|i| {
                graph
                    .adjacency
                    .row_ones(i)
                    .find(|&j| j > i)
                    .map(|j| vec![i, j])
            }));
        }
        _ => {}
    }

    let (k1, k2, k3) = part_sizes(k);
    let small = list_cliques(graph, k1, cfg)?;
    let large = if k3 == k1 {
        None
    } else {
        Some(list_cliques(graph, k3, cfg)?)
    };
    let part1 = &small;
    let part2 = if k2 == k1 {
        &small
    } else {
        large.as_ref().expect("k2 = k3 when k2 > k1")
    };
    let part3 = if k3 == k1 {
        &small
    } else {
        large.as_ref().expect("k3 > k1")
    };
    if part1.is_empty() || part2.is_empty() || part3.is_empty() {
        return Ok(None);
    }

    let a12 = compatibility(part1, part2, cfg)?;
    let a23 = compatibility(part2, part3, cfg)?;
    let a13 = compatibility(part1, part3, cfg)?;
    let paths = bool_matrix_multiply(&a12, &a23)?;
    let closed = paths.and(&a13)?;

    for x in 0..closed.rows() {
        if let Some(z) = closed.row_ones(x).next() {
            let y = a12.row_ones(x).find(|&y| a23.get(y, z)).ok_or_else(|| {
                DispersionError::Internal("triangle without middle vertex".into())
            })?;
            let mut clique: Vec<usize> =
                [part1.vertices(x), part2.vertices(y), part3.vertices(z)].concat();
            clique.sort_unstable();
            return Ok(Some(clique));
        }
    }
    Ok(None)
}

/// All cliques of one size, each stored as a member mask and the mask of
/// vertices adjacent to every member.
struct CliqueList {
    size: usize,
    stride: usize,
    members: Vec<usize>,
    member_masks: Vec<u64>,
    common_masks: Vec<u64>,
}

impl CliqueList {
    fn len(&self) -> usize {
        if self.size == 0 {
            0
        } else {
            self.members.len() / self.size
        }
    }

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn vertices(&self, c: usize) -> &[usize] {
        &self.members[c * self.size..(c + 1) * self.size]
    }

    fn member_mask(&self, c: usize) -> &[u64] {
        &self.member_masks[c * self.stride..(c + 1) * self.stride]
    }

    fn common_mask(&self, c: usize) -> &[u64] {
        &self.common_masks[c * self.stride..(c + 1) * self.stride]
    }
}

fn list_cliques(graph: &ThresholdGraph, size: usize, cfg: &CliqueConfig) -> Result<CliqueList> {
    let n = graph.n();
    let stride = n.div_ceil(64);
    let mut list = CliqueList {
        size,
        stride,
        members: Vec::new(),
        member_masks: Vec::new(),
        common_masks: Vec::new(),
    };

    let mut all = vec![0u64; stride];
    for v in 0..n {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut stack = Vec::with_capacity(size);
    let mut member = vec![0u64; stride];
    extend_cliques(
        graph,
        size,
        &all,
        &mut stack,
        &mut member,
        &all,
        &mut list,
        cfg,
    )?;
    Ok(list)
}

/// Depth-first listing in increasing vertex order; `candidates` holds the
/// vertices above the last member that are adjacent to every member.
#[allow(clippy::too_many_arguments)]
fn extend_cliques(
    graph: &ThresholdGraph,
    size: usize,
    candidates: &[u64],
    stack: &mut Vec<usize>,
    member: &mut [u64],
    common: &[u64],
    list: &mut CliqueList,
    cfg: &CliqueConfig,
) -> Result<()> {
    if stack.len() == size {
        if list.len() >= cfg.max_part_cliques {
            return Err(DispersionError::Resource(format!(
                "more than {} cliques of size {size}; use the exact solver instead",
                cfg.max_part_cliques
            )));
        }
        list.members.extend_from_slice(stack);
        list.member_masks.extend_from_slice(member);
        list.common_masks.extend_from_slice(common);
        return Ok(());
    }
    let need = size - stack.len();
    let ones: Vec<usize> = iter_ones(candidates).collect();
    for (pos, &v) in ones.iter().enumerate() {
        if ones.len() - pos < need {
            break;
        }
        let row = graph.adjacency.row(v);
        let next_common: Vec<u64> = common.iter().zip(row).map(|(a, b)| a & b).collect();
        let mut next_candidates: Vec<u64> =
            candidates.iter().zip(row).map(|(a, b)| a & b).collect();
        // keep only vertices above v
        for (wi, w) in next_candidates.iter_mut().enumerate() {
            let lo = wi * 64;
            if lo + 64 <= v + 1 {
                *w = 0;
            } else if lo <= v {
                let keep = v + 1 - lo;
                *w &= !((1u64 << keep) - 1);
            }
        }
        stack.push(v);
        member[v / 64] |= 1 << (v % 64);
        extend_cliques(
            graph,
            size,
            &next_candidates,
            stack,
            member,
            &next_common,
            list,
            cfg,
        )?;
        member[v / 64] &= !(1 << (v % 64));
        stack.pop();
    }
    Ok(())
}

/// `M[x][y]` set iff clique `y` of `right` lies in the common neighbourhood
/// of clique `x` of `left` (which also forces the two to be disjoint).
fn compatibility(left: &CliqueList, right: &CliqueList, cfg: &CliqueConfig) -> Result<BitMatrix> {
    let bits = left.len().saturating_mul(right.len());
    if bits > cfg.max_matrix_bits {
        return Err(DispersionError::Resource(format!(
            "auxiliary matrix {}x{} exceeds {} bits; use the exact solver instead",
            left.len(),
            right.len(),
            cfg.max_matrix_bits
        )));
    }
    let mut m = BitMatrix::zeros(left.len(), right.len());
    for x in 0..left.len() {
        let common = left.common_mask(x);
        for y in 0..right.len() {
            let inside = right
                .member_mask(y)
                .iter()
                .zip(common)
                .all(|(mm, c)| mm & !c == 0);
            if inside {
                m.set(x, y, true);
            }
        }
    }
    Ok(m)
}

pub fn solve_graph_dispersion<T: Scalar>(
    graph: &WeightedCompleteGraph<T>,
    k: usize,
) -> Result<DispersionResult<T>> {
    solve_graph_dispersion_with(graph, k, &CliqueConfig::default())
}

/// Largest threshold admitting a `k`-clique, found by binary search over the
/// distinct input weights.
pub fn solve_graph_dispersion_with<T: Scalar>(
    graph: &WeightedCompleteGraph<T>,
    k: usize,
    cfg: &CliqueConfig,
) -> Result<DispersionResult<T>> {
    let n = graph.n();
    check_k(k, n, 2)?;
    let candidates = graph.distinct_weights();

    // the smallest weight gives the complete graph, which has a k-clique
    let mut lo = 0usize;
    let mut hi = candidates.len() - 1;
    let mut witness = find_k_clique(&build_threshold_graph(graph, candidates[lo]), k, cfg)?
        .ok_or_else(|| {
            DispersionError::Internal("complete threshold graph has no k-clique".into())
        })?;
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        match find_k_clique(&build_threshold_graph(graph, candidates[mid]), k, cfg)? {
            Some(clique) => {
                lo = mid;
                witness = clique;
            }
            None => hi = mid - 1,
        }
    }
    let r = candidates[lo];

    if !build_threshold_graph(graph, r).is_clique(&witness) || witness.len() != k {
        return Err(DispersionError::Internal(
            "clique witness failed verification".into(),
        ));
    }
    let mut closest: Option<PairWitness<T>> = None;
    for (x, &a) in witness.iter().enumerate() {
        for &b in &witness[x + 1..] {
            let w = graph.weight(a, b);
            if closest.map_or(true, |c| w < c.dist2) {
                closest = Some(PairWitness::new(a, b, w));
            }
        }
    }
    let value = closest.expect("k >= 2").dist2;
    if value != r {
        return Err(DispersionError::Internal(
            "witness minimum differs from threshold".into(),
        ));
    }
    Ok(DispersionResult {
        k,
        indices: witness,
        value2: Dist2::Finite(value),
        closest_pair: closest,
        algo: Algo::Clique,
        status: Status::Exact,
    })
}

/// Point-set dispersion through the squared-distance graph; `value2` is a squared distance.
pub fn solve_point_dispersion<T: Scalar>(
    points: &PointSet<T>,
    k: usize,
) -> Result<DispersionResult<T>> {
    solve_point_dispersion_with(points, k, &CliqueConfig::default())
}

pub fn solve_point_dispersion_with<T: Scalar>(
    points: &PointSet<T>,
    k: usize,
    cfg: &CliqueConfig,
) -> Result<DispersionResult<T>> {
    check_k(k, points.len(), 2)?;
    solve_graph_dispersion_with(&WeightedCompleteGraph::from_points(points), k, cfg)
}
