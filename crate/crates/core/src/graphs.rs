//! Weighted graphs, random-walk Laplacians and the vertex-collapse update.
//!
//! Vertices are labeled `1..=n`. Collapsing a vertex `v` with incident weights
//! `α_{iv}` and total `s = Σ_i α_{iv} > 0` isolates it and reconnects its
//! neighbours:
//!
//! ```text
//! α'_ij = α_ij + α_iv α_jv / s        (i, j ≠ v)
//! ```
//!
//! This is the Schur complement (Kron reduction) of the Laplacian onto the
//! remaining vertices, and `L(α) = L(α') + β βᵀ / s` with
//! `β = Σ_i α_iv (e_i - e_v)`, so the two spectra interlace.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectral;

/// A dense symmetric matrix; only the lower triangle is stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymmetricMatrix { dim, data: vec![0.0; dim * (dim + 1) / 2] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Rejects inputs whose asymmetry exceeds `tol · (1 + max|entry|)`; the
    /// lower triangle is kept.
    pub fn from_dense(m: &DMatrix<f64>, tol: f64) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::SizeMismatch { expected: m.nrows(), found: m.ncols() });
        }
        let scale = 1.0 + m.amax();
        let asym = (m - m.transpose()).amax();
        if asym > tol * scale {
            return Err(Error::NotSymmetric(asym));
        }
        let dim = m.nrows();
        let mut out = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..=i {
                out.set(i, j, m[(i, j)]);
            }
        }
        Ok(out)
    }

    #[inline]
    fn idx(i: usize, j: usize) -> usize {
        let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
        hi * (hi + 1) / 2 + lo
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[Self::idx(i, j)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[Self::idx(i, j)] = v;
    }

    #[inline]
    pub fn add(&mut self, i: usize, j: usize, v: f64) {
        self.data[Self::idx(i, j)] += v;
    }

    pub fn max_norm(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn scaled(&self, c: f64) -> Self {
        SymmetricMatrix { dim: self.dim, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// `self + c · other`.
    pub fn add_scaled(&mut self, c: f64, other: &SymmetricMatrix) {
        assert_eq!(self.dim, other.dim);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += c * b;
        }
    }

    /// `max |self - other|` entrywise.
    pub fn max_abs_diff(&self, other: &SymmetricMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data.iter().zip(&other.data).fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn max_off_diagonal(&self) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..i {
                m = m.max(self.get(i, j).abs());
            }
        }
        m
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.get(i, j)).sum()).collect()
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j))
    }
}

/// Anything that supplies symmetric edge weights on `1..=order()`.
pub trait EdgeWeights {
    fn order(&self) -> usize;
    /// `(i, j, α_ij)` with `1 ≤ i < j ≤ order()`.
    fn weighted_edges(&self) -> Vec<(usize, usize, f64)>;
}

/// A simple undirected graph with nonnegative edge weights. Serializes as
/// `{"n": 3, "edges": [[1, 2, 0.5], …]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "GraphFile", try_from = "GraphFile")]
pub struct WeightedGraph {
    n: usize,
    weights: BTreeMap<(usize, usize), f64>,
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
}

impl From<WeightedGraph> for GraphFile {
    fn from(g: WeightedGraph) -> Self {
        GraphFile { n: g.n, edges: g.edges().collect() }
    }
}

impl TryFrom<GraphFile> for WeightedGraph {
    type Error = Error;
    fn try_from(f: GraphFile) -> Result<Self> {
        WeightedGraph::from_edges(f.n, f.edges)
    }
}

impl WeightedGraph {
    /// The edgeless graph on `n ≥ 1` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        Ok(WeightedGraph { n, weights: BTreeMap::new() })
    }

    /// Rejects self-loops, duplicates (in either orientation), out-of-range
    /// endpoints and negative or non-finite weights.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize, f64)>) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for (i, j, w) in edges {
            g.check_vertex(i)?;
            g.check_vertex(j)?;
            if i == j {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {i}")));
            }
            if !w.is_finite() || w < 0.0 {
                return Err(Error::InvalidGraph(format!("weight {w} on edge ({i},{j}) must be finite and nonnegative")));
            }
            if g.weights.insert(key(i, j), w).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate edge ({i},{j})")));
            }
        }
        Ok(g)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(s)?;
        file.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return 0.0;
        }
        self.weights.get(&key(i, j)).copied().unwrap_or(0.0)
    }

    /// Stored edges `(i, j, w)`, `i < j`, in lexicographic order; zero weights included.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.weights.iter().map(|(&(i, j), &w)| (i, j, w))
    }

    pub fn positive_edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.edges().filter(|e| e.2 > 0.0)
    }

    pub fn num_edges(&self) -> usize {
        self.weights.len()
    }

    pub fn num_positive_edges(&self) -> usize {
        self.positive_edges().count()
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.values().sum()
    }

    pub fn incident_weight(&self, v: usize) -> f64 {
        (1..=self.n).map(|i| self.weight(i, v)).sum()
    }

    /// Neighbours joined to `v` by a strictly positive weight.
    pub fn positive_neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.n).filter(|&i| self.weight(i, v) > 0.0).collect()
    }

    pub fn positive_degree(&self, v: usize) -> usize {
        self.positive_neighbors(v).len()
    }

    /// Returns a copy with `α_ij = w`, inserting the edge if needed.
    pub fn with_weight(&self, i: usize, j: usize, w: f64) -> Result<Self> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j || !w.is_finite() || w < 0.0 {
            return Err(Error::InvalidGraph(format!("cannot set weight {w} on ({i},{j})")));
        }
        let mut g = self.clone();
        g.weights.insert(key(i, j), w);
        Ok(g)
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::from_edges(self.n, self.edges().map(|(i, j, w)| (i, j, w * c)))
    }

    /// Relabels vertex `v` as `perm[v - 1]` (a 1-based bijection).
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: perm.len() });
        }
        Self::from_edges(self.n, self.edges().map(|(i, j, w)| (perm[i - 1], perm[j - 1], w)))
    }

    /// Connectivity along strictly positive edges.
    pub fn is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                (p[y], y) = (r, p[y]);
            }
            r
        }
        let mut components = self.n;
        for (i, j, _) in self.positive_edges() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components == 1
    }

    /// Applies the collapse update at `v` but keeps all `n` vertices, leaving
    /// `v` isolated. If `v` is already isolated the graph is returned unchanged.
    pub fn isolate_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let s = self.incident_weight(v);
        let mut weights: BTreeMap<(usize, usize), f64> =
            self.weights.iter().filter(|(&(i, j), _)| i != v && j != v).map(|(&k, &w)| (k, w)).collect();
        if s > 0.0 {
            let nbrs: Vec<(usize, f64)> =
                (1..=self.n).filter(|&i| i != v).map(|i| (i, self.weight(i, v))).filter(|e| e.1 > 0.0).collect();
            for (a, &(i, wi)) in nbrs.iter().enumerate() {
                for &(j, wj) in &nbrs[a + 1..] {
                    *weights.entry(key(i, j)).or_insert(0.0) += wi * wj / s;
                }
            }
        }
        Ok(WeightedGraph { n: self.n, weights })
    }
}

impl EdgeWeights for WeightedGraph {
    fn order(&self) -> usize {
        self.n
    }
    fn weighted_edges(&self) -> Vec<(usize, usize, f64)> {
        self.edges().collect()
    }
}

#[inline]
fn key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// `L = Σ_{i<j} α_ij (e_i - e_j)(e_i - e_j)ᵀ` for any edge weights (signed allowed).
pub fn laplacian_of<G: EdgeWeights + ?Sized>(g: &G) -> SymmetricMatrix {
    let mut l = SymmetricMatrix::zeros(g.order());
    for (i, j, w) in g.weighted_edges() {
        let (a, b) = (i - 1, j - 1);
        l.add(a, a, w);
        l.add(b, b, w);
        l.add(a, b, -w);
    }
    l
}

/// The random-walk Laplacian: `-α_ij` off the diagonal, incident weight on it.
pub fn rw_laplacian(g: &WeightedGraph) -> SymmetricMatrix {
    laplacian_of(g)
}

/// A collapsed graph on `n - 1` vertices plus the label map back to the input.
#[derive(Clone, Debug, PartialEq)]
pub struct Collapse {
    pub graph: WeightedGraph,
    /// `labels[k]` is the input label of output vertex `k + 1`.
    pub labels: Vec<usize>,
}

/// Collapses vertex `v`: relabel `v ↔ n`, apply the weight update, drop vertex `n`.
///
/// So output vertex `v` is the former vertex `n` when `v < n`; the mapping is
/// recorded in [`Collapse::labels`]. A vertex with zero incident weight is
/// simply removed.
pub fn collapse_last_vertex(g: &WeightedGraph, v: usize) -> Result<Collapse> {
    let n = g.n();
    if n < 2 {
        return Err(Error::BadParameter("collapse needs n >= 2".into()));
    }
    let isolated = g.isolate_vertex(v)?;
    // new label of each old vertex except v
    let relabel = |x: usize| if x == n { v } else { x };
    let graph = WeightedGraph::from_edges(
        n - 1,
        isolated.edges().map(|(i, j, w)| (relabel(i), relabel(j), w)),
    )?;
    let labels = (1..n).map(|k| if k == v { n } else { k }).collect();
    Ok(Collapse { graph, labels })
}

/// Entrywise check of `L(α) = L(α') + β βᵀ / s` where `collapsed` is the
/// `n`-vertex graph with vertex `n` isolated, `β = Σ_i α_in (e_i - e_n)`,
/// `s = Σ_i α_in`.
pub fn rank1_identity_holds(g: &WeightedGraph, collapsed: &WeightedGraph, tol: f64) -> Result<bool> {
    let n = g.n();
    if collapsed.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: collapsed.n() });
    }
    let s = g.incident_weight(n);
    if s <= 0.0 {
        return Err(Error::ZeroIncidentWeight { vertex: n });
    }
    let lhs = rw_laplacian(g);
    let mut rhs = rw_laplacian(collapsed);
    let mut beta = vec![0.0; n];
    for i in 1..n {
        beta[i - 1] = g.weight(i, n);
    }
    beta[n - 1] = -s;
    for a in 0..n {
        for b in 0..=a {
            rhs.add(a, b, beta[a] * beta[b] / s);
        }
    }
    let scale = 1.0 + lhs.max_norm().max(rhs.max_norm());
    Ok(lhs.max_abs_diff(&rhs) <= tol * scale)
}

/// Rank-one identity for the collapse of the last vertex.
pub fn rank1_identity_check(g: &WeightedGraph, tol: f64) -> Result<bool> {
    let collapsed = g.isolate_vertex(g.n())?;
    rank1_identity_holds(g, &collapsed, tol)
}

/// Spectra of the rw-Laplacian while the highest-index vertex is collapsed
/// repeatedly: lengths `n, n-1, …, 1`, last entry `[0]`.
pub fn gt_pattern(g: &WeightedGraph) -> Vec<Vec<f64>> {
    let mut out = Vec::with_capacity(g.n());
    let mut cur = g.clone();
    loop {
        out.push(spectral::eigenvalues(&rw_laplacian(&cur)).values);
        if cur.n() == 1 {
            break;
        }
        cur = collapse_last_vertex(&cur, cur.n()).expect("n >= 2").graph;
    }
    out
}

/// Standard families. Unit weights unless a [`WeightSpec`] says otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum GraphKind {
    /// `1 - 2 - … - n`.
    Path { n: usize },
    /// `1 - 2 - … - n - 1`, `n ≥ 3`.
    Cycle { n: usize },
    /// Hub `1` joined to `2..=n`.
    Star { n: usize },
    Complete { n: usize },
    /// `W_n`: hub `1` joined to the rim cycle `2 - 3 - … - n - 2`, `n ≥ 4`.
    Wheel { n: usize },
    /// `T_{D,N}`: start from the triangle `{1,2,3}`; every triangle created at
    /// level `i` receives `N` new level-`(i+1)` vertices joined to its three
    /// corners. Labels increase with level.
    NestedTriangulation { depth: usize, branching: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub enum WeightSpec {
    Unit,
    /// Independent `Uniform[0.1, 2.0)` weights from a ChaCha8 stream.
    Seeded(u64),
    /// One weight per edge, in lexicographic edge order.
    Explicit(Vec<f64>),
}

/// Range for seeded random weights.
pub const RANDOM_WEIGHT_RANGE: std::ops::Range<f64> = 0.1..2.0;

pub fn generate(kind: &GraphKind, weights: &WeightSpec) -> Result<WeightedGraph> {
    let bad = |m: &str| Err(Error::BadParameter(m.to_string()));
    let (n, edges): (usize, Vec<(usize, usize)>) = match *kind {
        GraphKind::Path { n } => {
            if n < 1 {
                return bad("path needs n >= 1");
            }
            (n, (1..n).map(|i| (i, i + 1)).collect())
        }
        GraphKind::Cycle { n } => {
            if n < 3 {
                return bad("cycle needs n >= 3");
            }
            let mut e: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
            e.push((1, n));
            (n, e)
        }
        GraphKind::Star { n } => {
            if n < 1 {
                return bad("star needs n >= 1");
            }
            (n, (2..=n).map(|i| (1, i)).collect())
        }
        GraphKind::Complete { n } => {
            if n < 1 {
                return bad("complete graph needs n >= 1");
            }
            (n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect())
        }
        GraphKind::Wheel { n } => {
            if n < 4 {
                return bad("wheel needs n >= 4");
            }
            let mut e: Vec<_> = (2..=n).map(|i| (1, i)).collect();
            e.extend((2..n).map(|i| (i, i + 1)));
            e.push((2, n));
            (n, e)
        }
        GraphKind::NestedTriangulation { depth, branching } => {
            if branching < 1 {
                return bad("nested triangulation needs N >= 1");
            }
            nested_triangulation_edges(depth, branching)
        }
    };
    let mut edges = edges;
    for e in edges.iter_mut() {
        *e = key(e.0, e.1);
    }
    edges.sort_unstable();
    let ws: Vec<f64> = match weights {
        WeightSpec::Unit => vec![1.0; edges.len()],
        WeightSpec::Seeded(seed) => {
            let mut rng = seeded_rng(*seed);
            edges.iter().map(|_| rng.random_range(RANDOM_WEIGHT_RANGE)).collect()
        }
        WeightSpec::Explicit(w) => {
            if w.len() != edges.len() {
                return Err(Error::SizeMismatch { expected: edges.len(), found: w.len() });
            }
            w.clone()
        }
    };
    WeightedGraph::from_edges(n, edges.into_iter().zip(ws).map(|((i, j), w)| (i, j, w)))
}

fn nested_triangulation_edges(depth: usize, branching: usize) -> (usize, Vec<(usize, usize)>) {
    let mut edges = vec![(1, 2), (1, 3), (2, 3)];
    let mut fresh = vec![[1, 2, 3]];
    let mut n = 3;
    for _ in 0..depth {
        let mut next = Vec::with_capacity(fresh.len() * branching * 3);
        for tri in &fresh {
            for _ in 0..branching {
                n += 1;
                for &c in tri {
                    edges.push((c, n));
                }
                let [a, b, c] = *tri;
                next.extend([[a, b, n], [a, c, n], [b, c, n]]);
            }
        }
        fresh = next;
    }
    (n, edges)
}

/// The deterministic generator used for every seeded construction.
pub fn seeded_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

/// A connected graph on `n` vertices: a uniform random labeled spanning tree
/// (Prüfer code) plus each remaining pair with probability `extra_edge_prob`;
/// weights from [`RANDOM_WEIGHT_RANGE`].
pub fn random_connected<R: Rng + ?Sized>(n: usize, extra_edge_prob: f64, rng: &mut R) -> WeightedGraph {
    assert!(n >= 1);
    let mut pairs = random_tree_edges(n, rng);
    for i in 1..=n {
        for j in i + 1..=n {
            if !pairs.contains(&(i, j)) && rng.random_bool(extra_edge_prob) {
                pairs.push((i, j));
            }
        }
    }
    pairs.sort_unstable();
    let edges: Vec<_> = pairs.into_iter().map(|(i, j)| (i, j, rng.random_range(RANDOM_WEIGHT_RANGE))).collect();
    WeightedGraph::from_edges(n, edges).expect("valid random graph")
}

/// Arbitrary nonnegative weights (some exactly zero) on a random pattern;
/// may be disconnected.
pub fn random_graph<R: Rng + ?Sized>(n: usize, edge_prob: f64, rng: &mut R) -> WeightedGraph {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.random_bool(edge_prob) {
                let w = if rng.random_bool(0.1) { 0.0 } else { rng.random_range(RANDOM_WEIGHT_RANGE) };
                edges.push((i, j, w));
            }
        }
    }
    WeightedGraph::from_edges(n, edges).expect("valid random graph")
}

fn random_tree_edges<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(1, 2)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(1..=n)).collect();
    let mut degree = vec![1usize; n + 1];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (1..=n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push(key(leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    edges.push(key(rest[0], rest[1]));
    edges
}

/// One representative of every isomorphism class of trees on `n` vertices,
/// with unit weights. Counts: 1, 1, 1, 2, 3, 6, 11, 23 for `n = 1..=8`.
pub fn nonisomorphic_trees(n: usize) -> Vec<WeightedGraph> {
    assert!(n >= 1);
    // grow by attaching a leaf anywhere, dedupe by canonical code
    let mut layer: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
    layer.insert(tree_code(1, &[]), Vec::new());
    for m in 2..=n {
        let mut next = BTreeMap::new();
        for edges in layer.values() {
            for v in 1..m {
                let mut e = edges.clone();
                e.push((v, m));
                next.entry(tree_code(m, &e)).or_insert(e);
            }
        }
        layer = next;
    }
    layer
        .into_values()
        .map(|e| WeightedGraph::from_edges(n, e.into_iter().map(|(i, j)| (i, j, 1.0))).expect("tree"))
        .collect()
}

/// AHU canonical code of a free tree, rooted at its center(s).
fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n + 1];
    for &(i, j) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = n;
    let mut leaves: Vec<usize> = (1..=n).filter(|&v| deg[v] <= 1).collect();
    let mut removed = vec![false; n + 1];
    while alive > 2 {
        let mut next = Vec::new();
        for &l in &leaves {
            removed[l] = true;
            alive -= 1;
            for &u in &adj[l] {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        leaves = next;
    }
    fn encode(v: usize, parent: usize, adj: &[Vec<usize>]) -> String {
        let mut kids: Vec<String> = adj[v].iter().filter(|&&u| u != parent).map(|&u| encode(u, v, adj)).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    (1..=n).filter(|&v| !removed[v]).map(|c| encode(c, 0, &adj)).min().expect("a center exists")
}
