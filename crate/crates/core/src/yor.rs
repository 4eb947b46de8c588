//! Young's orthogonal representation of `S_n`.
//!
//! Basis vectors are the standard Young tableaux of shape `λ` in dictionary
//! order. The adjacent transposition `s_i = (i i+1)` acts on tableau `t` by
//!
//! * `+1` if `i` and `i+1` share a row of `t`,
//! * `-1` if they share a column,
//! * otherwise a 2×2 rotation-reflection block on `{t, s}` with `s` the
//!   tableau with `i`, `i+1` exchanged:
//!   `[[1/r, √(1-1/r²)], [√(1-1/r²), -1/r]]`, `r = c^t_{i+1} - c^t_i`.
//!
//! The first two rules are the `r = ±1` instances of the third, so each
//! generator is stored as a diagonal plus at most one partner per row.
//! Arbitrary transpositions are built by conjugating along the adjacent
//! chain `(i j) = s_i s_{i+1} ⋯ s_{j-2} s_{j-1} s_{j-2} ⋯ s_i`.

use std::collections::{BTreeMap, HashMap};

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{EdgeWeights, SymmetricMatrix};
use crate::perm::Permutation;
use crate::symfun::{Partition, StandardTableau};

/// A representation matrix `ρ^λ_σ` in the dictionary-ordered tableau basis.
#[derive(Clone, Debug, PartialEq)]
pub struct IrrepMatrix {
    pub shape: Partition,
    pub matrix: DMatrix<f64>,
}

impl IrrepMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// `max |MᵀM - I|`.
    pub fn orthogonality_defect(&self) -> f64 {
        let d = self.dim();
        (self.matrix.transpose() * &self.matrix - DMatrix::identity(d, d)).amax()
    }

    pub fn symmetry_defect(&self) -> f64 {
        (&self.matrix - self.matrix.transpose()).amax()
    }

    /// `max |M² - I|`.
    pub fn involution_defect(&self) -> f64 {
        let d = self.dim();
        (&self.matrix * &self.matrix - DMatrix::identity(d, d)).amax()
    }

    /// `V = I - ρ`.
    pub fn complement(&self) -> DMatrix<f64> {
        let d = self.dim();
        DMatrix::identity(d, d) - &self.matrix
    }

    /// CSV with a `#` header naming the tableau order, then one row per line.
    pub fn to_csv(&self) -> String {
        let names: Vec<String> = self.shape.enumerate_syt().iter().map(|t| t.to_string()).collect();
        let mut out = format!("# shape {}; rows/cols: standard tableaux in dictionary order: {}\n", self.shape, names.join(";"));
        for r in 0..self.dim() {
            let row: Vec<String> = (0..self.dim()).map(|c| format!("{:.16e}", self.matrix[(r, c)] + 0.0)).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Sparse form of `ρ(s_i)`: `diag[t]` plus `off[t]` at column `partner[t]`.
#[derive(Clone, Debug)]
struct AdjacentGenerator {
    diag: Vec<f64>,
    partner: Vec<Option<usize>>,
    off: Vec<f64>,
}

impl AdjacentGenerator {
    fn dense(&self) -> DMatrix<f64> {
        let d = self.diag.len();
        let mut m = DMatrix::zeros(d, d);
        for t in 0..d {
            m[(t, t)] = self.diag[t];
            if let Some(p) = self.partner[t] {
                m[(t, p)] = self.off[t];
            }
        }
        m
    }

    /// `G · M`
    fn apply_left(&self, m: &DMatrix<f64>) -> DMatrix<f64> {
        let mut out = m.clone();
        for t in 0..self.diag.len() {
            let mut row = m.row(t) * self.diag[t];
            if let Some(p) = self.partner[t] {
                row += m.row(p) * self.off[t];
            }
            out.set_row(t, &row);
        }
        out
    }

    /// `M · G` (G is symmetric)
    fn apply_right(&self, m: &DMatrix<f64>) -> DMatrix<f64> {
        let mut out = m.clone();
        for t in 0..self.diag.len() {
            let mut col = m.column(t) * self.diag[t];
            if let Some(p) = self.partner[t] {
                col += m.column(p) * self.off[t];
            }
            out.set_column(t, &col);
        }
        out
    }
}

/// Tableau basis and adjacent generators for one shape; build once, reuse
/// for every transposition, permutation and Laplacian of that shape.
#[derive(Clone, Debug)]
pub struct YoungBasis {
    shape: Partition,
    tableaux: Vec<StandardTableau>,
    generators: Vec<AdjacentGenerator>,
}

impl YoungBasis {
    pub fn new(shape: &Partition) -> Self {
        let tableaux = shape.enumerate_syt();
        let index: HashMap<Vec<usize>, usize> =
            tableaux.iter().enumerate().map(|(k, t)| (t.reading_word(), k)).collect();
        let contents: Vec<Vec<i64>> = tableaux.iter().map(StandardTableau::contents).collect();
        let n = shape.n();
        let d = tableaux.len();
        let generators = (1..n)
            .map(|i| {
                let mut g = AdjacentGenerator { diag: vec![0.0; d], partner: vec![None; d], off: vec![0.0; d] };
                for (t, tab) in tableaux.iter().enumerate() {
                    let r = (contents[t][i] - contents[t][i - 1]) as f64;
                    g.diag[t] = 1.0 / r;
                    if r.abs() > 1.0 {
                        let s = tab.swap_adjacent(i).expect("axial distance > 1 keeps the swap standard");
                        g.partner[t] = Some(index[&s.reading_word()]);
                        g.off[t] = (1.0 - 1.0 / (r * r)).sqrt();
                    }
                }
                g
            })
            .collect();
        YoungBasis { shape: shape.clone(), tableaux, generators }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    fn wrap(&self, matrix: DMatrix<f64>) -> IrrepMatrix {
        IrrepMatrix { shape: self.shape.clone(), matrix }
    }

    /// `ρ(i i+1)`, `1 ≤ i < n`.
    pub fn adjacent(&self, i: usize) -> Result<IrrepMatrix> {
        if i == 0 || i >= self.n() {
            return Err(Error::IndexOutOfRange { index: i, expected: format!("1..{}", self.n()) });
        }
        Ok(self.wrap(self.generators[i - 1].dense()))
    }

    /// `ρ(i j)`, `1 ≤ i < j ≤ n`.
    pub fn transposition(&self, i: usize, j: usize) -> Result<IrrepMatrix> {
        Ok(self.wrap(self.transposition_dense(i, j)?))
    }

    fn transposition_dense(&self, i: usize, j: usize) -> Result<DMatrix<f64>> {
        let n = self.n();
        if i == 0 || i >= j || j > n {
            return Err(Error::IndexOutOfRange { index: j, expected: format!("1 <= i < j <= {n}, got ({i},{j})") });
        }
        let mut m = self.generators[j - 2].dense();
        for k in (i..j - 1).rev() {
            let g = &self.generators[k - 1];
            m = g.apply_right(&g.apply_left(&m));
        }
        Ok(m)
    }

    /// `ρ_σ` from the bubble-sort factorization of `σ`.
    pub fn sigma(&self, sigma: &Permutation) -> Result<IrrepMatrix> {
        if sigma.n() != self.n() {
            return Err(Error::SizeMismatch { expected: self.n(), found: sigma.n() });
        }
        let d = self.dim();
        let mut m = DMatrix::identity(d, d);
        for a in sigma.adjacent_decomposition().into_iter().rev() {
            m = self.generators[a - 1].apply_left(&m);
        }
        Ok(self.wrap(m))
    }

    /// `L^λ(α) = Σ_{i<j} α_ij (I - ρ_ij)`; weights may be negative.
    pub fn laplacian<G: EdgeWeights + ?Sized>(&self, g: &G) -> Result<SymmetricMatrix> {
        if g.order() != self.n() {
            return Err(Error::SizeMismatch { expected: self.n(), found: g.order() });
        }
        let d = self.dim();
        let mut acc = DMatrix::<f64>::zeros(d, d);
        for (i, j, w) in g.weighted_edges() {
            if w != 0.0 {
                let rho = self.transposition_dense(i, j)?;
                acc += (DMatrix::identity(d, d) - rho) * w;
            }
        }
        Ok(symmetrize(&acc))
    }

    /// `X_j = Σ_{i<j} ρ_ij`, `2 ≤ j ≤ n`; diagonal with entries `c^t_j`.
    pub fn jucys_murphy(&self, j: usize) -> Result<SymmetricMatrix> {
        if j < 2 || j > self.n() {
            return Err(Error::IndexOutOfRange { index: j, expected: format!("2..={}", self.n()) });
        }
        let d = self.dim();
        let mut acc = DMatrix::<f64>::zeros(d, d);
        for i in 1..j {
            acc += self.transposition_dense(i, j)?;
        }
        Ok(symmetrize(&acc))
    }
}

fn symmetrize(m: &DMatrix<f64>) -> SymmetricMatrix {
    let d = m.nrows();
    let mut out = SymmetricMatrix::zeros(d);
    for r in 0..d {
        for c in 0..=r {
            out.set(r, c, 0.5 * (m[(r, c)] + m[(c, r)]));
        }
    }
    out
}

pub fn rho_adjacent(shape: &Partition, i: usize) -> Result<IrrepMatrix> {
    YoungBasis::new(shape).adjacent(i)
}

pub fn rho_transposition(shape: &Partition, i: usize, j: usize) -> Result<IrrepMatrix> {
    YoungBasis::new(shape).transposition(i, j)
}

pub fn rho_sigma(shape: &Partition, sigma: &Permutation) -> Result<IrrepMatrix> {
    YoungBasis::new(shape).sigma(sigma)
}

pub fn irrep_laplacian<G: EdgeWeights + ?Sized>(shape: &Partition, g: &G) -> Result<SymmetricMatrix> {
    YoungBasis::new(shape).laplacian(g)
}

pub fn jucys_murphy(shape: &Partition, j: usize) -> Result<SymmetricMatrix> {
    YoungBasis::new(shape).jucys_murphy(j)
}

/// Edge weights of either sign.
#[derive(Clone, Debug, PartialEq)]
pub struct SignedWeightedGraph {
    n: usize,
    weights: BTreeMap<(usize, usize), f64>,
}

impl SignedWeightedGraph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize, f64)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let mut weights = BTreeMap::new();
        for (i, j, w) in edges {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::InvalidVertex { vertex: i.max(j), n });
            }
            if i == j || !w.is_finite() {
                return Err(Error::InvalidGraph(format!("bad signed edge ({i},{j},{w})")));
            }
            let k = (i.min(j), i.max(j));
            if weights.insert(k, w).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate edge ({i},{j})")));
            }
        }
        Ok(SignedWeightedGraph { n, weights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.weights.get(&(i.min(j), i.max(j))).copied().unwrap_or(0.0)
    }
}

impl EdgeWeights for SignedWeightedGraph {
    fn order(&self) -> usize {
        self.n
    }
    fn weighted_edges(&self) -> Vec<(usize, usize, f64)> {
        self.weights.iter().map(|(&(i, j), &w)| (i, j, w)).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchingReport {
    pub holds: bool,
    /// `witness[t]` is the row of tableau `t` after regrouping.
    pub witness: Vec<usize>,
    /// Shapes `λ' ↗ λ` in block order, with each block's first row.
    pub blocks: Vec<(Partition, usize)>,
    pub max_deviation: f64,
}

/// Restricting `ρ^λ_ij` (`i < j < n`) to `S_{n-1}`: regroup tableaux by the
/// shape left after removing `n` (blocks in [`Partition::covers_below`]
/// order), then by dictionary order of the restricted tableau, and compare
/// with `⊕_{λ'↗λ} ρ^{λ'}_ij`.
pub fn branching_check(shape: &Partition, i: usize, j: usize, tol: f64) -> Result<BranchingReport> {
    let n = shape.n();
    if i == 0 || i >= j || j >= n {
        return Err(Error::IndexOutOfRange { index: j, expected: format!("1 <= i < j < {n}, got ({i},{j})") });
    }
    let big = YoungBasis::new(shape);
    let rho = big.transposition_dense(i, j)?;

    let mut blocks = Vec::new();
    let mut offsets: HashMap<Partition, (usize, HashMap<Vec<usize>, usize>)> = HashMap::new();
    let mut block_mats = Vec::new();
    let mut offset = 0;
    for sub in shape.covers_below() {
        let basis = YoungBasis::new(&sub);
        let idx = basis.tableaux().iter().enumerate().map(|(k, t)| (t.reading_word(), k)).collect();
        blocks.push((sub.clone(), offset));
        offsets.insert(sub.clone(), (offset, idx));
        block_mats.push((offset, basis.transposition_dense(i, j)?));
        offset += basis.dim();
    }
    let witness: Vec<usize> = big
        .tableaux()
        .iter()
        .map(|t| {
            let r = t.restrict().expect("n >= 2");
            let (off, idx) = &offsets[r.shape()];
            off + idx[&r.reading_word()]
        })
        .collect();

    let d = big.dim();
    let mut direct_sum = DMatrix::<f64>::zeros(d, d);
    for (off, m) in &block_mats {
        direct_sum.view_mut((*off, *off), (m.nrows(), m.ncols())).copy_from(m);
    }
    let mut regrouped = DMatrix::<f64>::zeros(d, d);
    for a in 0..d {
        for b in 0..d {
            regrouped[(witness[a], witness[b])] = rho[(a, b)];
        }
    }
    let max_deviation = (regrouped - direct_sum).amax();
    Ok(BranchingReport { holds: max_deviation <= tol, witness, blocks, max_deviation })
}

/// Whether `ρ = I - vvᵀ` or `ρ = -I + vvᵀ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ReflectionSign {
    IdentityMinus,
    NegIdentityPlus,
}

/// A tabulated vector `v^λ_ij` for `S_4`.
#[derive(Clone, Debug, Serialize)]
pub struct HouseholderVector {
    pub shape: Partition,
    pub i: usize,
    pub j: usize,
    pub v: Vec<f64>,
    pub sign: ReflectionSign,
}

impl HouseholderVector {
    pub fn rho(&self) -> DMatrix<f64> {
        let d = self.v.len();
        let v = nalgebra::DVector::from_column_slice(&self.v);
        let vvt = &v * v.transpose();
        match self.sign {
            ReflectionSign::IdentityMinus => DMatrix::identity(d, d) - vvt,
            ReflectionSign::NegIdentityPlus => vvt - DMatrix::identity(d, d),
        }
    }

    pub fn outer(&self) -> DMatrix<f64> {
        let v = nalgebra::DVector::from_column_slice(&self.v);
        &v * v.transpose()
    }
}

/// The 18 vectors describing `ρ^λ_ij` for `λ ∈ {(3,1), (2,2), (2,1²)}`,
/// `1 ≤ i < j ≤ 4`, in the dictionary-ordered tableau basis. For `(2,1²)`
/// the matrix is `ρ = -I + vvᵀ`; for the other two shapes `ρ = I - vvᵀ`.
pub fn s4_reflection_vectors() -> Vec<HouseholderVector> {
    let s = f64::sqrt;
    let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    let t31: [Vec<f64>; 6] = [
        vec![0.0, 0.0, s(2.0)],
        vec![0.0, s(1.5), s(0.5)],
        vec![s(4.0 / 3.0), s(1.0 / 6.0), s(0.5)],
        vec![0.0, s(1.5), -s(0.5)],
        vec![s(4.0 / 3.0), s(1.0 / 6.0), -s(0.5)],
        vec![s(4.0 / 3.0), -s(2.0 / 3.0), 0.0],
    ];
    let t22: [Vec<f64>; 6] = [
        vec![0.0, s(2.0)],
        vec![s(1.5), s(0.5)],
        vec![s(1.5), -s(0.5)],
        vec![s(1.5), -s(0.5)],
        vec![s(1.5), s(0.5)],
        vec![0.0, s(2.0)],
    ];
    let t211: [Vec<f64>; 6] = [
        vec![s(2.0), 0.0, 0.0],
        vec![s(0.5), -s(1.5), 0.0],
        vec![s(0.5), -s(1.0 / 6.0), s(4.0 / 3.0)],
        vec![-s(0.5), -s(1.5), 0.0],
        vec![-s(0.5), -s(1.0 / 6.0), s(4.0 / 3.0)],
        vec![0.0, s(2.0 / 3.0), s(4.0 / 3.0)],
    ];
    let mut out = Vec::with_capacity(18);
    for (shape, table, sign) in [
        ("3,1", t31, ReflectionSign::IdentityMinus),
        ("2,2", t22, ReflectionSign::IdentityMinus),
        ("2,1,1", t211, ReflectionSign::NegIdentityPlus),
    ] {
        let shape: Partition = shape.parse().expect("literal partition");
        for (&(i, j), v) in pairs.iter().zip(table) {
            out.push(HouseholderVector { shape: shape.clone(), i, j, v, sign });
        }
    }
    out
}

/// Looks up `v^λ_ij` in [`s4_reflection_vectors`].
pub fn householder_vector(shape: &Partition, i: usize, j: usize) -> Option<Vec<f64>> {
    s4_reflection_vectors().into_iter().find(|h| &h.shape == shape && h.i == i && h.j == j).map(|h| h.v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::is_psd;
    use crate::symfun::enumerate_partitions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn one_dimensional_irreps() {
        for i in 1..4 {
            assert_eq!(rho_adjacent(&Partition::row(4), i).unwrap().matrix[(0, 0)], 1.0);
            assert_eq!(rho_adjacent(&Partition::column(4), i).unwrap().matrix[(0, 0)], -1.0);
        }
        for (i, j) in [(1, 3), (2, 4), (1, 4)] {
            assert!((rho_transposition(&Partition::column(4), i, j).unwrap().matrix[(0, 0)] + 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn adjacent_21() {
        // tableaux 12/3 and 13/2: 1,2 share a row in the first, a column in the second
        let m = rho_adjacent(&p("2,1"), 1).unwrap().matrix;
        assert_eq!(m, DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]));
        let m = rho_adjacent(&p("2,1"), 2).unwrap().matrix;
        let h = (0.75f64).sqrt();
        let expect = DMatrix::from_row_slice(2, 2, &[-0.5, h, h, 0.5]);
        assert!((m - expect).amax() < 1e-15);
    }

    #[test]
    fn index_errors() {
        assert!(rho_adjacent(&p("3,1"), 0).is_err());
        assert!(rho_adjacent(&p("3,1"), 4).is_err());
        assert!(rho_transposition(&p("3,1"), 2, 2).is_err());
        assert!(rho_transposition(&p("3,1"), 3, 5).is_err());
        assert!(jucys_murphy(&p("3,1"), 1).is_err());
        assert!(jucys_murphy(&p("3,1"), 5).is_err());
        assert!(branching_check(&p("3,1"), 1, 4, 1e-10).is_err());
        assert!(rho_sigma(&p("3,1"), &Permutation::identity(3)).is_err());
        let g = SignedWeightedGraph::from_edges(3, [(1, 2, 1.0)]).unwrap();
        assert!(irrep_laplacian(&p("3,1"), &g).is_err());
    }

    #[test]
    fn transposition_chain_matches_adjacent() {
        let lam = p("3,2");
        for i in 1..5 {
            let a = rho_adjacent(&lam, i).unwrap();
            let t = rho_transposition(&lam, i, i + 1).unwrap();
            assert_eq!(a, t);
        }
    }

    #[test]
    fn tabulated_s4_vectors_match_construction() {
        let tables = s4_reflection_vectors();
        assert_eq!(tables.len(), 18);
        for h in &tables {
            let built = rho_transposition(&h.shape, h.i, h.j).unwrap().matrix;
            assert!((built - h.rho()).amax() < 1e-12, "{} ({},{})", h.shape, h.i, h.j);
        }
        assert_eq!(householder_vector(&p("3,1"), 1, 2).unwrap(), vec![0.0, 0.0, 2f64.sqrt()]);
        assert_eq!(householder_vector(&p("2,2"), 3, 4).unwrap(), vec![0.0, 2f64.sqrt()]);
        let v = householder_vector(&p("2,2"), 1, 4).unwrap();
        assert!((v[0] - 1.5f64.sqrt()).abs() < 1e-15 && (v[1] + 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn difference_relation_for_31() {
        // v_ij = v_i4 - v_j4 for i < j ≤ 3
        let lam = p("3,1");
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            let vij = householder_vector(&lam, i, j).unwrap();
            let vi4 = householder_vector(&lam, i, 4).unwrap();
            let vj4 = householder_vector(&lam, j, 4).unwrap();
            for k in 0..3 {
                assert!((vij[k] - (vi4[k] - vj4[k])).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn sigma_examples() {
        let lam = p("3,2");
        let basis = YoungBasis::new(&lam);
        let id = basis.sigma(&Permutation::identity(5)).unwrap();
        assert_eq!(id.matrix, DMatrix::identity(5, 5));
        let t = Permutation::transposition(5, 1, 2).unwrap();
        let tt = basis.sigma(&t.compose(&t)).unwrap();
        assert_eq!(tt.matrix, DMatrix::identity(5, 5));
        for (i, j) in [(1, 3), (2, 5), (1, 5)] {
            let via_sigma = basis.sigma(&Permutation::transposition(5, i, j).unwrap()).unwrap();
            let via_chain = basis.transposition(i, j).unwrap();
            assert!((via_sigma.matrix - via_chain.matrix).amax() < 1e-12);
        }
    }

    #[test]
    fn irrep_laplacian_examples() {
        let g = crate::graphs::random_connected(5, 0.5, &mut crate::graphs::seeded_rng(2));
        assert_eq!(irrep_laplacian(&Partition::row(5), &g).unwrap().max_norm(), 0.0);
        let k5 = crate::graphs::generate(&crate::graphs::GraphKind::Complete { n: 5 }, &crate::graphs::WeightSpec::Unit).unwrap();
        let l = irrep_laplacian(&Partition::column(5), &k5).unwrap();
        assert!((l.get(0, 0) - 20.0).abs() < 1e-12);
        for lam in enumerate_partitions(5).unwrap() {
            let l = irrep_laplacian(&lam, &g).unwrap();
            assert!(is_psd(&l, 1e-10));
        }
    }

    #[test]
    fn jucys_murphy_examples() {
        for k in 2..=6 {
            for j in 2..=k {
                let row = jucys_murphy(&Partition::row(k), j).unwrap();
                assert!((row.get(0, 0) - (j as f64 - 1.0)).abs() < 1e-12);
                let col = jucys_murphy(&Partition::column(k), j).unwrap();
                assert!((col.get(0, 0) + (j as f64 - 1.0)).abs() < 1e-12);
            }
        }
        let x4 = jucys_murphy(&p("2,2"), 4).unwrap();
        assert!(x4.max_norm() < 1e-12);
    }

    #[test]
    fn branching_examples() {
        let r = branching_check(&Partition::row(4), 1, 2, 1e-10).unwrap();
        assert!(r.holds);
        assert_eq!(r.blocks, vec![(Partition::row(3), 0)]);
        let r = branching_check(&p("3,1"), 1, 2, 1e-10).unwrap();
        assert!(r.holds);
        assert_eq!(r.blocks.iter().map(|b| b.0.to_string()).collect::<Vec<_>>(), ["(2,1)", "(3)"]);
        let r = branching_check(&p("2,2"), 1, 3, 1e-10).unwrap();
        assert!(r.holds);
        assert_eq!(r.blocks.len(), 1);
    }

    #[test]
    fn signed_graph_validation() {
        assert!(SignedWeightedGraph::from_edges(3, [(1, 2, -0.5), (2, 3, 1.0)]).is_ok());
        assert!(SignedWeightedGraph::from_edges(3, [(1, 1, 1.0)]).is_err());
        assert!(SignedWeightedGraph::from_edges(3, [(1, 2, 1.0), (2, 1, 1.0)]).is_err());
        assert!(SignedWeightedGraph::from_edges(3, [(1, 4, 1.0)]).is_err());
        assert!(SignedWeightedGraph::from_edges(3, [(1, 2, f64::NAN)]).is_err());
    }

    #[test]
    fn csv_dump_header_and_shape() {
        let m = rho_sigma(&p("3,1"), &Permutation::from_cycles(4, "(14)").unwrap()).unwrap();
        let csv = m.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with('#') && lines[0].contains("123/4;124/3;134/2"));
        assert_eq!(lines[1].split(',').count(), 3);
    }
}
