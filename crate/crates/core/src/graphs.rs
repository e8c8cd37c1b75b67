//! Simple graphs, graph-state generators, local complementation and
//! graph-state distance.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;

use crate::algebra::{BinaryMatrix, BinaryVector};
use crate::error::{Error, Result};
use crate::params::Distance;
use crate::pauli::PauliOperator;

/// Largest graph for which the full `2^n` Gray-code sweep is used.
pub const FULL_ENUMERATION_LIMIT: usize = 28;

/// Undirected simple graph stored as a symmetric zero-diagonal adjacency
/// matrix. Row `i` is the neighbourhood `r_i` of vertex `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BinaryMatrix,
}

/// Named graph families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeSpec {
    Edgeless { n: usize },
    Ring { n: usize },
    Circulant { n: usize, offsets: Vec<usize> },
    SquareTorus { lx: usize, ly: usize },
    TriangularTorus { lx: usize, ly: usize },
    /// Open-boundary square grid, vertices indexed row-major.
    SquareFragment { lx: usize, ly: usize },
}

impl LatticeSpec {
    pub fn build(&self) -> Result<Graph> {
        build_graph(self)
    }
}

pub fn build_graph(spec: &LatticeSpec) -> Result<Graph> {
    match spec {
        LatticeSpec::Edgeless { n } => Ok(Graph::edgeless(*n)),
        LatticeSpec::Ring { n } => Graph::ring(*n),
        LatticeSpec::Circulant { n, offsets } => Graph::circulant(*n, offsets),
        LatticeSpec::SquareTorus { lx, ly } => Graph::torus(*lx, *ly, false),
        LatticeSpec::TriangularTorus { lx, ly } => Graph::torus(*lx, *ly, true),
        LatticeSpec::SquareFragment { lx, ly } => Graph::square_fragment(*lx, *ly),
    }
}

fn check_dims(lx: usize, ly: usize) -> Result<()> {
    if lx == 0 || ly == 0 {
        return Err(Error::InvalidArgument(format!("lattice dimensions {lx}x{ly} must be positive")));
    }
    Ok(())
}

impl Graph {
    /// Validates symmetry and the zero diagonal.
    pub fn from_adjacency(adj: BinaryMatrix) -> Result<Self> {
        if adj.num_rows() != adj.num_cols() {
            return Err(Error::InvalidGraph(format!(
                "{}x{} adjacency matrix is not square",
                adj.num_rows(),
                adj.num_cols()
            )));
        }
        if let Some(i) = (0..adj.num_rows()).find(|&i| adj.get(i, i)) {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {i}")));
        }
        if !adj.is_symmetric() {
            return Err(Error::InvalidGraph("adjacency matrix is not symmetric".into()));
        }
        Ok(Graph { adj })
    }

    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let m = BinaryMatrix::from_strs(rows)?;
        if m.num_rows() != rows.len() || (m.num_cols() != rows.len()) {
            return Err(Error::InvalidGraph("adjacency rows must form a square matrix".into()));
        }
        Self::from_adjacency(m)
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::edgeless(n);
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange(x, n));
                }
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            g.adj.set(a, b, true);
            g.adj.set(b, a, true);
        }
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Self {
        Graph {
            adj: BinaryMatrix::zeros(n, n),
        }
    }

    pub fn ring(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("ring needs at least one vertex".into()));
        }
        if n <= 2 {
            return Self::from_edges(n, (n == 2).then_some((0, 1)));
        }
        Self::circulant(n, &[1, n - 1])
    }

    /// Vertex `i` is joined to `i + o mod n` for every offset `o`; the
    /// offset set must be closed under `o -> n - o`.
    pub fn circulant(n: usize, offsets: &[usize]) -> Result<Self> {
        let set: HashSet<usize> = offsets.iter().copied().collect();
        if set.iter().any(|&o| o == 0 || o >= n || !set.contains(&(n - o))) {
            return Err(Error::AsymmetricOffsets(n));
        }
        Self::from_edges(n, (0..n).flat_map(|i| set.iter().map(move |&o| (i, (i + o) % n))))
    }

    /// Square torus, optionally with the `(+1, +1)` diagonal that makes it
    /// triangular. Vertex `(x, y)` has index `y * lx + x`.
    pub fn torus(lx: usize, ly: usize, diagonal: bool) -> Result<Self> {
        check_dims(lx, ly)?;
        let idx = |x: usize, y: usize| (y % ly) * lx + (x % lx);
        let mut steps = vec![(1, 0), (0, 1)];
        if diagonal {
            steps.push((1, 1));
        }
        let edges = (0..ly)
            .flat_map(|y| (0..lx).map(move |x| (x, y)))
            .flat_map(|(x, y)| steps.iter().map(move |&(dx, dy)| (idx(x, y), idx(x + dx, y + dy))))
            .filter(|(a, b)| a != b)
            .collect::<Vec<_>>();
        Self::from_edges(lx * ly, edges)
    }

    pub fn square_fragment(lx: usize, ly: usize) -> Result<Self> {
        check_dims(lx, ly)?;
        let mut edges = Vec::new();
        for y in 0..ly {
            for x in 0..lx {
                let i = y * lx + x;
                if x + 1 < lx {
                    edges.push((i, i + 1));
                }
                if y + 1 < ly {
                    edges.push((i, i + lx));
                }
            }
        }
        Self::from_edges(lx * ly, edges)
    }

    /// Disjoint union with `extra` isolated vertices appended.
    pub fn with_isolated(&self, extra: usize) -> Self {
        let n = self.n() + extra;
        let mut adj = BinaryMatrix::zeros(n, n);
        for i in 0..self.n() {
            for j in self.neighbors(i) {
                adj.set(i, j, true);
            }
        }
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.num_rows()
    }

    pub fn adjacency(&self) -> &BinaryMatrix {
        &self.adj
    }

    pub fn row(&self, i: usize) -> &BinaryVector {
        self.adj.row(i)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj.get(a, b)
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.row(i).ones_iter()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj.row(i).weight()
    }

    pub fn num_edges(&self) -> usize {
        (0..self.n()).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let r = if self.n() == 0 { 0 } else { self.degree(0) };
        (0..self.n()).all(|i| self.degree(i) == r).then_some(r)
    }

    /// Vertex `i` becomes vertex `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArgument("relabeling must be a permutation".into()));
        }
        let mut rows = vec![BinaryVector::zeros(n); n];
        for i in 0..n {
            rows[perm[i]] = self.row(i).permute(perm);
        }
        Ok(Graph {
            adj: BinaryMatrix::new(n, rows)?,
        })
    }

    /// Toggles every edge inside the neighbourhood of `vtx`.
    pub fn local_complement(&self, vtx: usize) -> Result<Self> {
        let n = self.n();
        if vtx >= n {
            return Err(Error::VertexOutOfRange(vtx, n));
        }
        let nb = self.row(vtx).clone();
        let mut rows = self.adj.rows().to_vec();
        for a in nb.ones_iter() {
            rows[a] ^= &nb;
            rows[a].flip(a);
        }
        Ok(Graph {
            adj: BinaryMatrix::new(n, rows)?,
        })
    }

    /// `S_i = X_i Z^{r_i}`.
    pub fn generator(&self, i: usize) -> PauliOperator {
        PauliOperator::new(BinaryVector::unit(self.n(), i), self.row(i).clone()).expect("square adjacency")
    }

    pub fn generators(&self) -> Vec<PauliOperator> {
        (0..self.n()).map(|i| self.generator(i)).collect()
    }

    /// Weights of the generators, `deg(i) + 1`.
    pub fn generator_weights(&self) -> Vec<usize> {
        (0..self.n()).map(|i| self.degree(i) + 1).collect()
    }

    /// Graph image `u + sum_i v_i r_i`.
    pub fn cl(&self, e: &PauliOperator) -> Result<BinaryVector> {
        if e.num_qubits() != self.n() {
            return Err(Error::LengthMismatch(e.num_qubits(), self.n()));
        }
        let mut out = e.z_part().clone();
        out ^= &self.adj.vec_mul(e.x_part());
        Ok(out)
    }

    /// The stabilizer element `prod_{i in a} S_i` up to phase.
    pub fn stabilizer_element(&self, a: &BinaryVector) -> PauliOperator {
        PauliOperator::new(a.clone(), self.adj.vec_mul(a)).expect("square adjacency")
    }

    pub fn rows_u128(&self) -> Result<Vec<u128>> {
        if self.n() > 128 {
            return Err(Error::TooLarge(format!("{} vertices exceeds the 128-vertex word limit", self.n())));
        }
        Ok(self.adj.rows().iter().map(|r| r.to_u128()).collect())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, rows=[", self.n())?;
        for (i, r) in self.adj.rows().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("])")
    }
}

pub fn graph_generators(g: &Graph) -> Vec<PauliOperator> {
    g.generators()
}

pub fn cl_map(g: &Graph, e: &PauliOperator) -> Result<BinaryVector> {
    g.cl(e)
}

pub fn local_complement(g: &Graph, vtx: usize) -> Result<Graph> {
    g.local_complement(vtx)
}

/// Breadth-first LC closure.
#[derive(Clone, Debug)]
pub struct LcOrbit {
    /// Members in discovery order; the seed comes first.
    pub graphs: Vec<Graph>,
    /// True when the closure stopped at the cap with unexplored members.
    pub truncated: bool,
}

/// Closes `g` under local complementation, deduplicating by adjacency
/// matrix. Stops after `cap` distinct graphs.
pub fn lc_orbit(g: &Graph, cap: usize) -> Result<LcOrbit> {
    if cap == 0 {
        return Err(Error::InvalidArgument("orbit cap must be at least 1".into()));
    }
    let mut seen: HashSet<Graph> = HashSet::new();
    let mut graphs = vec![g.clone()];
    seen.insert(g.clone());
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        let cur = graphs[idx].clone();
        for v in 0..cur.n() {
            let next = cur.local_complement(v)?;
            if seen.contains(&next) {
                continue;
            }
            if graphs.len() == cap {
                return Ok(LcOrbit { graphs, truncated: true });
            }
            seen.insert(next.clone());
            queue.push_back(graphs.len());
            graphs.push(next);
        }
    }
    Ok(LcOrbit { graphs, truncated: false })
}

/// Minimum-weight nontrivial graph-stabilizer element.
#[derive(Clone, Debug)]
pub struct GraphDistance {
    pub distance: Distance,
    /// A minimal element; absent when the search stopped at its cap.
    pub witness: Option<PauliOperator>,
}

/// `d'(G)`: minimum weight of a nontrivial product of graph generators.
/// Uses the full Gray-code sweep for small graphs and a stratified search
/// over `|a|` otherwise. `cap` bounds the weights examined by the stratified
/// route; the full sweep is always exact.
pub fn graph_state_distance(g: &Graph, cap: Option<usize>) -> Result<Distance> {
    Ok(graph_state_min_element(g, cap)?.distance)
}

pub fn graph_state_min_element(g: &Graph, cap: Option<usize>) -> Result<GraphDistance> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument("graph has no vertices".into()));
    }
    if g.n() <= FULL_ENUMERATION_LIMIT {
        graph_distance_full(g)
    } else {
        graph_distance_stratified(g, cap.unwrap_or(g.n()))
    }
}

fn element_from_mask(g: &Graph, a: u128) -> PauliOperator {
    g.stabilizer_element(&BinaryVector::from_u128(g.n(), a))
}

/// Gray-code sweep of all `2^n - 1` nonzero row sets.
pub fn graph_distance_full(g: &Graph) -> Result<GraphDistance> {
    let n = g.n();
    if n > FULL_ENUMERATION_LIMIT {
        return Err(Error::TooLarge(format!("full enumeration limited to {FULL_ENUMERATION_LIMIT} vertices")));
    }
    let rows: Vec<u64> = g.rows_u128()?.into_iter().map(|r| r as u64).collect();
    let high = n.min(8);
    let low = n - high;
    let best = (0u64..1 << high)
        .into_par_iter()
        .map(|prefix| {
            let mut a = prefix << low;
            let mut ar = (low..n).filter(|&i| a >> i & 1 == 1).fold(0u64, |acc, i| acc ^ rows[i]);
            let mut best = (usize::MAX, u64::MAX);
            let mut consider = |a: u64, ar: u64| {
                if a != 0 {
                    let w = (a | ar).count_ones() as usize;
                    if (w, a) < best {
                        best = (w, a);
                    }
                }
            };
            consider(a, ar);
            for step in 1u64..1 << low {
                let bit = step.trailing_zeros() as usize;
                a ^= 1 << bit;
                ar ^= rows[bit];
                consider(a, ar);
            }
            best
        })
        .min()
        .expect("at least one prefix");
    Ok(GraphDistance {
        distance: Distance::Exact(best.0),
        witness: Some(element_from_mask(g, best.1 as u128)),
    })
}

fn stratum_min(rows: &[u128], t: usize) -> (usize, u128) {
    fn dfs(rows: &[u128], start: usize, left: usize, a: u128, ar: u128, best: &mut (usize, u128)) {
        if left == 0 {
            let w = (a | ar).count_ones() as usize;
            if (w, a) < *best {
                *best = (w, a);
            }
            return;
        }
        for i in start..=rows.len() - left {
            dfs(rows, i + 1, left - 1, a | 1 << i, ar ^ rows[i], best);
        }
    }
    let n = rows.len();
    (0..=n - t)
        .into_par_iter()
        .map(|i| {
            let mut best = (usize::MAX, 0);
            dfs(rows, i + 1, t - 1, 1 << i, rows[i], &mut best);
            best
        })
        .min()
        .unwrap_or((usize::MAX, 0))
}

/// Enumerates row sets by increasing size `t`. An element built from `t`
/// rows has weight at least `t`, so the search stops once `t` reaches the
/// best weight found or `cap` is exhausted.
pub fn graph_distance_stratified(g: &Graph, cap: usize) -> Result<GraphDistance> {
    let rows = g.rows_u128()?;
    let n = rows.len();
    let mut best = (usize::MAX, 0u128);
    let mut t = 1;
    while t <= n && t < best.0 {
        if t > cap {
            return Ok(GraphDistance {
                distance: Distance::AtLeast(cap + 1),
                witness: None,
            });
        }
        best = best.min(stratum_min(&rows, t));
        t += 1;
    }
    Ok(GraphDistance {
        distance: Distance::Exact(best.0),
        witness: Some(element_from_mask(g, best.1)),
    })
}
