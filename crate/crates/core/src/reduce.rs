//! Graph reductions and elimination certificates.
//!
//! [`reduce_to_edge`] searches for a sequence of degree-one, series,
//! parallel and Y-Δ steps turning an unweighted skeleton into a single
//! edge. [`certify_elimination`] searches for a vertex order in which every
//! vertex, at the moment it is collapsed, has at most `K - 1` positive
//! neighbours; collapses may add fill-in edges among those neighbours.
//!
//! Both searches are depth-first with a memo of visited states and a node
//! budget. Collapsing a set of vertices gives the same graph in any order,
//! so elimination states are keyed by the set of remaining vertices.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{collapse_last_vertex, WeightedGraph};

/// Node budget used when none is given.
pub const DEFAULT_BUDGET: usize = 100_000;

/// An unweighted multigraph on a subset of the labels `1..=n`. Serializes
/// as `{"vertices": [...], "edges": [[i, j, multiplicity], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "SkeletonFile", try_from = "SkeletonFile")]
pub struct Skeleton {
    vertices: BTreeSet<usize>,
    /// Multiplicity of each unordered pair `(i, j)`, `i < j`; never zero.
    edges: BTreeMap<(usize, usize), usize>,
}

#[derive(Serialize, Deserialize)]
struct SkeletonFile {
    vertices: Vec<usize>,
    edges: Vec<(usize, usize, usize)>,
}

impl From<Skeleton> for SkeletonFile {
    fn from(s: Skeleton) -> Self {
        SkeletonFile { vertices: s.vertices().collect(), edges: s.edges().collect() }
    }
}

impl TryFrom<SkeletonFile> for Skeleton {
    type Error = Error;
    fn try_from(f: SkeletonFile) -> Result<Self> {
        let vertices: BTreeSet<usize> = f.vertices.into_iter().collect();
        let mut edges = BTreeMap::new();
        for (i, j, m) in f.edges {
            if i == j || m == 0 || !vertices.contains(&i) || !vertices.contains(&j) {
                return Err(Error::InvalidGraph(format!("bad skeleton edge ({i},{j}) x{m}")));
            }
            *edges.entry(key(i, j)).or_insert(0) += m;
        }
        Ok(Skeleton { vertices, edges })
    }
}

fn key(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

impl Skeleton {
    /// Vertices `1..=n` and the given edges, repeated pairs adding multiplicity.
    pub fn from_edges(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut s = Skeleton { vertices: (1..=n).collect(), edges: BTreeMap::new() };
        for (i, j) in pairs {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::InvalidVertex { vertex: i.max(j), n });
            }
            if i == j {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {i}")));
            }
            s.add_edge(i, j);
        }
        Ok(s)
    }

    /// The strictly positive edges of `g`.
    pub fn from_graph(g: &WeightedGraph) -> Self {
        Self::from_edges(g.n(), g.positive_edges().map(|(i, j, _)| (i, j))).expect("graph edges are valid")
    }

    fn add_edge(&mut self, i: usize, j: usize) {
        *self.edges.entry(key(i, j)).or_insert(0) += 1;
    }

    fn remove_edge(&mut self, i: usize, j: usize) {
        let k = key(i, j);
        let m = self.edges.get_mut(&k).expect("edge present");
        *m -= 1;
        if *m == 0 {
            self.edges.remove(&k);
        }
    }

    fn remove_vertex(&mut self, v: usize) {
        self.vertices.remove(&v);
        self.edges.retain(|&(i, j), _| i != v && j != v);
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter().copied()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Edge count with multiplicity.
    pub fn num_edges(&self) -> usize {
        self.edges.values().sum()
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        self.edges.get(&key(i, j)).copied().unwrap_or(0)
    }

    /// `(i, j, multiplicity)`, `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edges.iter().map(|(&(i, j), &m)| (i, j, m))
    }

    /// Degree counting multiplicity.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|(&(i, j), _)| i == v || j == v).map(|(_, &m)| m).sum()
    }

    /// Distinct neighbours, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .keys()
            .filter_map(|&(i, j)| if i == v { Some(j) } else if j == v { Some(i) } else { None })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_single_edge(&self) -> bool {
        self.vertices.len() == 2 && self.num_edges() == 1
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    /// Every step applicable now, in priority order: degree-one, parallel,
    /// series, Y-Δ; ties by vertex label.
    pub fn applicable_steps(&self) -> Vec<Step> {
        let mut degree_one = Vec::new();
        let mut series = Vec::new();
        let mut y_delta = Vec::new();
        for v in self.vertices() {
            let nb = self.neighbors(v);
            let simple = nb.iter().all(|&u| self.multiplicity(u, v) == 1);
            match (self.degree(v), nb.len()) {
                (1, 1) if self.vertices.len() > 2 => degree_one.push(Step::DegreeOne { v }),
                (2, 2) if simple => series.push(Step::Series { v, i: nb[0], j: nb[1] }),
                (3, 3) if simple => y_delta.push(Step::YDelta { v, i: nb[0], j: nb[1], l: nb[2] }),
                _ => {}
            }
        }
        let parallel = self.edges().filter(|e| e.2 >= 2).map(|(i, j, _)| Step::Parallel { i, j });
        degree_one.into_iter().chain(parallel).chain(series).chain(y_delta).collect()
    }

    /// Applies one step, or reports why it does not apply.
    pub fn apply(&self, step: &Step) -> Result<Skeleton> {
        let bad = || Error::RuleNotApplicable(format!("{step:?}"));
        let alive = |v: usize| self.vertices.contains(&v);
        let mut out = self.clone();
        match *step {
            Step::DegreeOne { v } => {
                if !alive(v) || self.degree(v) != 1 || self.vertices.len() <= 2 {
                    return Err(bad());
                }
                out.remove_vertex(v);
            }
            Step::Series { v, i, j } => {
                let nb = self.neighbors(v);
                if !alive(v) || self.degree(v) != 2 || nb != [i.min(j), i.max(j)] {
                    return Err(bad());
                }
                out.remove_vertex(v);
                out.add_edge(i, j);
            }
            Step::Parallel { i, j } => {
                if self.multiplicity(i, j) < 2 {
                    return Err(bad());
                }
                out.remove_edge(i, j);
            }
            Step::YDelta { v, i, j, l } => {
                let mut want = [i, j, l];
                want.sort_unstable();
                if !alive(v) || self.degree(v) != 3 || self.neighbors(v) != want {
                    return Err(bad());
                }
                out.remove_vertex(v);
                out.add_edge(i, j);
                out.add_edge(i, l);
                out.add_edge(j, l);
            }
        }
        Ok(out)
    }
}

/// One reduction rule application. Neighbour labels are ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Step {
    /// Delete a vertex of degree one with its edge.
    DegreeOne { v: usize },
    /// Delete a degree-two vertex `v` with neighbours `i`, `j`; add `(i, j)`.
    Series { v: usize, i: usize, j: usize },
    /// Delete one copy of a repeated edge `(i, j)`.
    Parallel { i: usize, j: usize },
    /// Replace a degree-three vertex `v` by the triangle on `i`, `j`, `l`.
    YDelta { v: usize, i: usize, j: usize, l: usize },
}

pub fn apply_rule(s: &Skeleton, step: &Step) -> Result<Skeleton> {
    s.apply(step)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReductionCertificate {
    pub input: Skeleton,
    pub steps: Vec<Step>,
    pub terminal: Skeleton,
}

impl ReductionCertificate {
    /// Re-applies every step from `input`; true iff it ends at `terminal`
    /// and `terminal` is a single edge.
    pub fn replay(&self) -> bool {
        let mut cur = self.input.clone();
        for step in &self.steps {
            match cur.apply(step) {
                Ok(next) => cur = next,
                Err(_) => return false,
            }
        }
        cur == self.terminal && cur.is_single_edge()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ReductionOutcome {
    Certified(ReductionCertificate),
    /// No rule applies to the input, which is not a single edge.
    NoApplicableRule,
    /// Every reachable skeleton was explored without reaching an edge.
    SearchExhausted { explored: usize },
    /// Inconclusive.
    BudgetExhausted { explored: usize },
}

impl ReductionOutcome {
    pub fn certificate(&self) -> Option<&ReductionCertificate> {
        match self {
            ReductionOutcome::Certified(c) => Some(c),
            _ => None,
        }
    }

    /// True when the rules provably cannot reduce the input.
    pub fn is_irreducible(&self) -> bool {
        matches!(self, ReductionOutcome::NoApplicableRule | ReductionOutcome::SearchExhausted { .. })
    }
}

enum Search<T> {
    Found(T),
    DeadEnd,
    OutOfBudget,
}

/// Reduces a connected skeleton on at least two vertices to a single edge.
pub fn reduce_to_edge(s: &Skeleton, budget: usize) -> Result<ReductionOutcome> {
    if s.num_vertices() < 2 {
        return Err(Error::BadParameter("a skeleton needs at least two vertices".into()));
    }
    if !s.is_connected() {
        return Err(Error::Disconnected);
    }
    if s.is_single_edge() {
        return Ok(ReductionOutcome::Certified(ReductionCertificate {
            input: s.clone(),
            steps: Vec::new(),
            terminal: s.clone(),
        }));
    }
    if s.applicable_steps().is_empty() {
        return Ok(ReductionOutcome::NoApplicableRule);
    }
    let mut visited = HashSet::new();
    let mut explored = 0;
    let mut path = Vec::new();
    match dfs_reduce(s, budget, &mut visited, &mut explored, &mut path) {
        Search::Found(terminal) => {
            Ok(ReductionOutcome::Certified(ReductionCertificate { input: s.clone(), steps: path, terminal }))
        }
        Search::DeadEnd => Ok(ReductionOutcome::SearchExhausted { explored }),
        Search::OutOfBudget => Ok(ReductionOutcome::BudgetExhausted { explored }),
    }
}

fn dfs_reduce(
    s: &Skeleton,
    budget: usize,
    visited: &mut HashSet<Skeleton>,
    explored: &mut usize,
    path: &mut Vec<Step>,
) -> Search<Skeleton> {
    if s.is_single_edge() {
        return Search::Found(s.clone());
    }
    if !visited.insert(s.clone()) {
        return Search::DeadEnd;
    }
    if *explored >= budget {
        return Search::OutOfBudget;
    }
    *explored += 1;
    let mut out_of_budget = false;
    for step in s.applicable_steps() {
        let next = s.apply(&step).expect("listed steps apply");
        path.push(step);
        match dfs_reduce(&next, budget, visited, explored, path) {
            Search::Found(t) => return Search::Found(t),
            Search::DeadEnd => {}
            Search::OutOfBudget => out_of_budget = true,
        }
        path.pop();
        if out_of_budget {
            break;
        }
    }
    if out_of_budget {
        visited.remove(s);
        Search::OutOfBudget
    } else {
        Search::DeadEnd
    }
}

/// One collapse in an elimination order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EliminationStep {
    /// Label in the graph the step is applied to.
    pub vertex: usize,
    /// Label in the input graph.
    pub original: usize,
    pub positive_degree: usize,
}

/// `graphs[m + 1] = collapse_last_vertex(graphs[m], steps[m].vertex)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EliminationCertificate {
    pub k: usize,
    pub steps: Vec<EliminationStep>,
    pub graphs: Vec<WeightedGraph>,
}

impl EliminationCertificate {
    /// Recomputes every collapse and checks degrees, weights (to `tol`,
    /// relative) and the stopping size.
    pub fn replay(&self, tol: f64) -> bool {
        if self.graphs.len() != self.steps.len() + 1 || self.k < 2 {
            return false;
        }
        for (m, step) in self.steps.iter().enumerate() {
            let g = &self.graphs[m];
            if step.vertex == 0 || step.vertex > g.n() {
                return false;
            }
            let deg = g.positive_degree(step.vertex);
            if deg != step.positive_degree || deg + 1 > self.k {
                return false;
            }
            let Ok(c) = collapse_last_vertex(g, step.vertex) else {
                return false;
            };
            if !graphs_close(&c.graph, &self.graphs[m + 1], tol) {
                return false;
            }
        }
        self.graphs.last().is_some_and(|g| g.n() <= 2)
    }
}

fn graphs_close(a: &WeightedGraph, b: &WeightedGraph, tol: f64) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let scale = 1.0 + a.edges().chain(b.edges()).map(|e| e.2).fold(0.0, f64::max);
    (1..=a.n()).all(|i| (i + 1..=a.n()).all(|j| (a.weight(i, j) - b.weight(i, j)).abs() <= tol * scale))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum EliminationOutcome {
    Certified(EliminationCertificate),
    /// No order exists: every reachable vertex set was explored.
    SearchExhausted { explored: usize },
    /// Inconclusive.
    BudgetExhausted { explored: usize },
}

impl EliminationOutcome {
    pub fn certificate(&self) -> Option<&EliminationCertificate> {
        match self {
            EliminationOutcome::Certified(c) => Some(c),
            _ => None,
        }
    }
}

/// Searches for an order collapsing `g` down to two vertices with at most
/// `K - 1` positive neighbours per collapsed vertex. Candidates are tried by
/// smallest positive degree, then smallest input label.
pub fn certify_elimination(g: &WeightedGraph, k: usize, budget: usize) -> Result<EliminationOutcome> {
    if k < 2 {
        return Err(Error::BadParameter(format!("K must be at least 2, got {k}")));
    }
    let labels: Vec<usize> = (1..=g.n()).collect();
    let mut visited = HashSet::new();
    let mut explored = 0;
    let mut steps = Vec::new();
    let mut graphs = vec![g.clone()];
    match dfs_eliminate(g, &labels, k, budget, &mut visited, &mut explored, &mut steps, &mut graphs) {
        Search::Found(()) => Ok(EliminationOutcome::Certified(EliminationCertificate { k, steps, graphs })),
        Search::DeadEnd => Ok(EliminationOutcome::SearchExhausted { explored }),
        Search::OutOfBudget => Ok(EliminationOutcome::BudgetExhausted { explored }),
    }
}

#[allow(clippy::too_many_arguments)]
fn dfs_eliminate(
    g: &WeightedGraph,
    labels: &[usize],
    k: usize,
    budget: usize,
    visited: &mut HashSet<Vec<usize>>,
    explored: &mut usize,
    steps: &mut Vec<EliminationStep>,
    graphs: &mut Vec<WeightedGraph>,
) -> Search<()> {
    if g.n() <= 2 {
        return Search::Found(());
    }
    let mut remaining = labels.to_vec();
    remaining.sort_unstable();
    if !visited.insert(remaining.clone()) {
        return Search::DeadEnd;
    }
    if *explored >= budget {
        visited.remove(&remaining);
        return Search::OutOfBudget;
    }
    *explored += 1;
    let mut candidates: Vec<(usize, usize, usize)> = (1..=g.n())
        .map(|v| (g.positive_degree(v), labels[v - 1], v))
        .filter(|c| c.0 < k)
        .collect();
    candidates.sort_unstable();
    for (deg, original, v) in candidates {
        let c = collapse_last_vertex(g, v).expect("n > 2");
        let next_labels: Vec<usize> = c.labels.iter().map(|&l| labels[l - 1]).collect();
        steps.push(EliminationStep { vertex: v, original, positive_degree: deg });
        graphs.push(c.graph.clone());
        match dfs_eliminate(&c.graph, &next_labels, k, budget, visited, explored, steps, graphs) {
            Search::Found(()) => return Search::Found(()),
            Search::DeadEnd => {}
            Search::OutOfBudget => {
                visited.remove(&remaining);
                return Search::OutOfBudget;
            }
        }
        steps.pop();
        graphs.pop();
    }
    Search::DeadEnd
}
