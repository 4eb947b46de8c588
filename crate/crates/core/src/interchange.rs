//! The interchange process on `S_n`.
//!
//! State `σ` jumps to `(ij)σ` at rate `α_ij`; in one-line notation this swaps
//! the values `i` and `j`. States are indexed by lexicographic rank.
//! Its Laplacian splits over the irreducible representations: `L^λ(α)`
//! appears `f^λ` times, so the spectrum can be read off per partition
//! without ever building the `n! × n!` matrix.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{rw_laplacian, WeightedGraph};
use crate::par::{self, Exec};
use crate::spectral::{eigenvalues_only, lanczos_smallest, LanczosOptions};
use crate::symfun::{enumerate_partitions, Partition};
use crate::yor::YoungBasis;

pub use crate::perm::Permutation;

/// Largest `n` for which [`interchange_laplacian`] builds `L^I` by default.
pub const DEFAULT_N_CAP: usize = 8;

/// Largest `n!` solved densely by [`gap_interchange`]; beyond it, Lanczos.
pub const DENSE_LIMIT: usize = 720;

/// Symmetric sparse matrix: upper-triangle triplets plus a full CSR copy
/// for products.
#[derive(Clone, Debug)]
pub struct SparseSymmetricMatrix {
    dim: usize,
    entries: Vec<(usize, usize, f64)>,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<f64>,
}

impl SparseSymmetricMatrix {
    /// Builds from triplets with `row ≤ col`; rejects duplicates.
    pub fn from_upper(dim: usize, mut entries: Vec<(usize, usize, f64)>) -> Result<Self> {
        entries.sort_by_key(|e| (e.0, e.1));
        for w in entries.windows(2) {
            if (w[0].0, w[0].1) == (w[1].0, w[1].1) {
                return Err(Error::BadParameter(format!("duplicate entry ({}, {})", w[0].0, w[0].1)));
            }
        }
        let mut rows: Vec<Vec<(usize, f64)>> = vec![Vec::new(); dim];
        for &(r, c, v) in &entries {
            if r > c || c >= dim {
                return Err(Error::IndexOutOfRange { index: c, expected: format!("row <= col < {dim}") });
            }
            rows[r].push((c, v));
            if r != c {
                rows[c].push((r, v));
            }
        }
        let mut row_ptr = Vec::with_capacity(dim + 1);
        let mut cols = Vec::new();
        let mut vals = Vec::new();
        row_ptr.push(0);
        for mut row in rows {
            row.sort_by_key(|e| e.0);
            for (c, v) in row {
                cols.push(c);
                vals.push(v);
            }
            row_ptr.push(cols.len());
        }
        Ok(SparseSymmetricMatrix { dim, entries, row_ptr, cols, vals })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Upper-triangle triplets, sorted.
    pub fn entries(&self) -> &[(usize, usize, f64)] {
        &self.entries
    }

    /// Stored entries of the full symmetric pattern.
    pub fn nnz(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        let range = self.row_ptr[r]..self.row_ptr[r + 1];
        match self.cols[range.clone()].binary_search(&c) {
            Ok(k) => self.vals[range.start + k],
            Err(_) => 0.0,
        }
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.dim).map(|r| self.vals[self.row_ptr[r]..self.row_ptr[r + 1]].iter().sum()).collect()
    }

    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        self.matvec_with(Exec::default(), x, y)
    }

    pub fn matvec_with(&self, exec: Exec, x: &[f64], y: &mut [f64]) {
        par::fill_rows(exec, y, |r| {
            (self.row_ptr[r]..self.row_ptr[r + 1]).map(|k| self.vals[k] * x[self.cols[k]]).sum()
        });
    }

    pub fn to_dense(&self) -> crate::graphs::SymmetricMatrix {
        let mut m = crate::graphs::SymmetricMatrix::zeros(self.dim);
        for &(r, c, v) in &self.entries {
            m.set(r, c, v);
        }
        m
    }
}

fn check_order(g: &WeightedGraph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::BadParameter("the interchange process needs n >= 2".into()));
    }
    Ok(())
}

/// `L^I`: diagonal `Σ α`, entry `-α_ij` between `σ` and `(ij)σ`.
pub fn interchange_laplacian(g: &WeightedGraph) -> Result<SparseSymmetricMatrix> {
    interchange_laplacian_capped(g, DEFAULT_N_CAP)
}

pub fn interchange_laplacian_capped(g: &WeightedGraph, cap: usize) -> Result<SparseSymmetricMatrix> {
    check_order(g)?;
    let n = g.n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let edges: Vec<(usize, usize, f64)> = g.positive_edges().collect();
    let diag = g.total_weight();
    let mut entries = Vec::with_capacity(crate::perm::factorial(n) * (1 + edges.len()) / 2 + 1);
    for sigma in Permutation::all(n) {
        let r = sigma.rank();
        entries.push((r, r, diag));
        for &(i, j, w) in &edges {
            let c = sigma.left_transpose(i, j).rank();
            if r < c {
                entries.push((r, c, -w));
            }
        }
    }
    SparseSymmetricMatrix::from_upper(crate::perm::factorial(n), entries)
}

/// Full ascending spectrum of `L^I` by dense eigensolve.
pub fn interchange_spectrum(g: &WeightedGraph) -> Result<Vec<f64>> {
    interchange_spectrum_capped(g, DEFAULT_N_CAP)
}

pub fn interchange_spectrum_capped(g: &WeightedGraph, cap: usize) -> Result<Vec<f64>> {
    Ok(eigenvalues_only(&interchange_laplacian_capped(g, cap)?.to_dense()))
}

/// Second-smallest eigenvalue of `L^I`, from the explicit matrix.
pub fn gap_interchange(g: &WeightedGraph) -> Result<f64> {
    gap_interchange_with(g, DEFAULT_N_CAP, Exec::default())
}

pub fn gap_interchange_with(g: &WeightedGraph, cap: usize, exec: Exec) -> Result<f64> {
    let l = interchange_laplacian_capped(g, cap)?;
    let dim = l.dim();
    if dim <= DENSE_LIMIT {
        return Ok(eigenvalues_only(&l.to_dense())[1]);
    }
    let ones = vec![1.0 / (dim as f64).sqrt(); dim];
    let opts = LanczosOptions { max_iter: 600, ..LanczosOptions::default() };
    lanczos_smallest(|x, y| l.matvec_with(exec, x, y), dim, &[ones], &opts)
}

/// Spectrum of one `L^λ(α)`, repeated `multiplicity = f^λ` times in `L^I`.
#[derive(Clone, Debug, Serialize)]
pub struct IrrepBlock {
    #[serde(serialize_with = "display")]
    pub shape: Partition,
    pub multiplicity: usize,
    pub values: Vec<f64>,
}

fn display<S: serde::Serializer, T: std::fmt::Display>(x: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

#[derive(Clone, Debug, Serialize)]
pub struct IrrepSpectrum {
    pub n: usize,
    pub blocks: Vec<IrrepBlock>,
}

impl IrrepSpectrum {
    /// Every eigenvalue of `L^I` with multiplicity, ascending.
    pub fn multiset(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .blocks
            .iter()
            .flat_map(|b| b.values.iter().flat_map(move |&v| std::iter::repeat_n(v, b.multiplicity)))
            .collect();
        out.sort_by(f64::total_cmp);
        out
    }

    pub fn block(&self, shape: &Partition) -> Option<&IrrepBlock> {
        self.blocks.iter().find(|b| &b.shape == shape)
    }
}

pub fn spectrum_via_irreps(g: &WeightedGraph) -> Result<IrrepSpectrum> {
    spectrum_via_irreps_with(g, Exec::default())
}

/// One task per partition of `n`; blocks come back in reverse-lex order.
pub fn spectrum_via_irreps_with(g: &WeightedGraph, exec: Exec) -> Result<IrrepSpectrum> {
    check_order(g)?;
    let shapes = enumerate_partitions(g.n())?;
    let blocks = par::map(exec, &shapes, |lam| -> Result<IrrepBlock> {
        let basis = YoungBasis::new(lam);
        let values = eigenvalues_only(&basis.laplacian(g)?);
        Ok(IrrepBlock { shape: lam.clone(), multiplicity: basis.dim(), values })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(IrrepSpectrum { n: g.n(), blocks })
}

/// `μ₁` of `L^{(n-1,1)}`: the random-walk gap.
pub fn gap_rw(g: &WeightedGraph) -> Result<f64> {
    check_order(g)?;
    Ok(eigenvalues_only(&YoungBasis::new(&Partition::hook_n1(g.n())).laplacian(g)?)[0])
}

/// Second-smallest eigenvalue of the plain graph Laplacian.
pub fn gap_rw_direct(g: &WeightedGraph) -> Result<f64> {
    check_order(g)?;
    Ok(eigenvalues_only(&rw_laplacian(g))[1])
}

#[derive(Clone, Debug, Serialize)]
pub struct AldousReport {
    pub gap_interchange: f64,
    pub gap_rw: f64,
    pub argmin_partition: String,
    /// Every `λ ≠ (n)` whose smallest eigenvalue is within tolerance of the gap.
    pub ties: Vec<String>,
    pub pass: bool,
}

pub fn aldous_check(g: &WeightedGraph, tol: f64) -> Result<AldousReport> {
    aldous_check_with(g, tol, Exec::default())
}

/// Passes iff `min_{λ≠(n)} μ₁^λ` is attained at `(n-1,1)` within
/// `tol · (1 + gap_rw)`.
pub fn aldous_check_with(g: &WeightedGraph, tol: f64, exec: Exec) -> Result<AldousReport> {
    let spec = spectrum_via_irreps_with(g, exec)?;
    let trivial = Partition::row(g.n());
    let hook = Partition::hook_n1(g.n());
    let minima: Vec<(&Partition, f64)> =
        spec.blocks.iter().filter(|b| b.shape != trivial).map(|b| (&b.shape, b.values[0])).collect();
    let (argmin, gap_i) = minima
        .iter()
        .copied()
        .min_by(|a, b| a.1.total_cmp(&b.1).then_with(|| (a.0 != &hook).cmp(&(b.0 != &hook))))
        .expect("n >= 2 has a non-trivial partition");
    let gap_r = spec.block(&hook).expect("hook partition present").values[0];
    let eps = tol * (1.0 + gap_r.abs());
    let ties = minima.iter().filter(|m| m.1 <= gap_i + eps).map(|m| m.0.to_string()).collect();
    Ok(AldousReport {
        gap_interchange: gap_i,
        gap_rw: gap_r,
        argmin_partition: argmin.to_string(),
        ties,
        pass: gap_r <= gap_i + eps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{generate, random_connected, seeded_rng, GraphKind, WeightSpec};
    use crate::spectral::multiset_equal;
    use proptest::prelude::*;

    fn unit(kind: GraphKind) -> WeightedGraph {
        generate(&kind, &WeightSpec::Unit).unwrap()
    }

    #[test]
    fn two_vertices() {
        let g = WeightedGraph::from_edges(2, [(1, 2, 0.7)]).unwrap();
        let l = interchange_laplacian(&g).unwrap();
        assert_eq!(l.to_dense().to_dense(), nalgebra::DMatrix::from_row_slice(2, 2, &[0.7, -0.7, -0.7, 0.7]));
        assert!((gap_interchange(&g).unwrap() - 1.4).abs() < 1e-12);
        assert!((gap_rw(&g).unwrap() - 1.4).abs() < 1e-12);
        let spec = spectrum_via_irreps(&g).unwrap();
        assert!(multiset_equal(&spec.multiset(), &[0.0, 1.4], 1e-12));
        let r = aldous_check(&g, 1e-9).unwrap();
        assert!(r.pass);
        assert_eq!(r.argmin_partition, "(1^2)");
    }

    #[test]
    fn triangle_by_hand() {
        let g = unit(GraphKind::Complete { n: 3 });
        let l = interchange_laplacian(&g).unwrap();
        assert_eq!(l.dim(), 6);
        assert_eq!(l.nnz(), 6 * 4);
        // σ = [1,2,3]: (12)σ = [2,1,3] rank 2, (13)σ = [3,2,1] rank 5, (23)σ = [1,3,2] rank 1
        for c in [1, 2, 5] {
            assert_eq!(l.get(0, c), -1.0);
        }
        assert_eq!(l.get(0, 3), 0.0);
        assert!(l.row_sums().iter().all(|s| s.abs() < 1e-15));
        assert!((0..6).all(|r| l.get(r, r) == 3.0));
        assert!((gap_interchange(&g).unwrap() - 3.0).abs() < 1e-10);
        assert!((gap_rw_direct(&g).unwrap() - 3.0).abs() < 1e-10);
    }

    #[test]
    fn complete_graph_rw_gap() {
        for n in 2..=7 {
            let g = unit(GraphKind::Complete { n });
            assert!((gap_rw(&g).unwrap() - n as f64).abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_small_and_large() {
        assert!(interchange_laplacian(&WeightedGraph::empty(1).unwrap()).is_err());
        let g = unit(GraphKind::Path { n: 9 });
        assert!(matches!(interchange_laplacian(&g), Err(Error::CapExceeded { n: 9, cap: 8 })));
        assert!(gap_rw(&WeightedGraph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn disconnected_has_multiple_zeros() {
        let g = WeightedGraph::from_edges(4, [(1, 2, 1.0), (3, 4, 2.0)]).unwrap();
        let spec = interchange_spectrum(&g).unwrap();
        assert!(spec.iter().filter(|v| v.abs() < 1e-9).count() > 1);
        assert!(gap_interchange(&g).unwrap().abs() < 1e-9);
        let r = aldous_check(&g, 1e-9).unwrap();
        assert!(r.pass && r.gap_rw.abs() < 1e-9);
    }

    #[test]
    fn connected_has_simple_zero() {
        let g = random_connected(5, 0.3, &mut seeded_rng(11));
        let spec = interchange_spectrum(&g).unwrap();
        assert_eq!(spec.iter().filter(|v| v.abs() < 1e-9).count(), 1);
    }

    #[test]
    fn decomposition_matches_direct() {
        let mut rng = seeded_rng(4);
        for n in 3..=5 {
            let g = random_connected(n, 0.4, &mut rng);
            let direct = interchange_spectrum(&g).unwrap();
            let spec = spectrum_via_irreps(&g).unwrap();
            assert_eq!(spec.multiset().len(), crate::perm::factorial(n));
            assert!(multiset_equal(&direct, &spec.multiset(), 1e-8));
        }
    }

    #[test]
    fn rw_gap_two_ways() {
        let mut rng = seeded_rng(9);
        for n in 2..=8 {
            let g = random_connected(n, 0.3, &mut rng);
            assert!((gap_rw(&g).unwrap() - gap_rw_direct(&g).unwrap()).abs() < 1e-9);
        }
    }

    #[test]
    fn wheel_and_k4_pass() {
        assert!(aldous_check(&unit(GraphKind::Wheel { n: 7 }), 1e-9).unwrap().pass);
        let k4 = generate(&GraphKind::Complete { n: 4 }, &WeightSpec::Seeded(3)).unwrap();
        let r = aldous_check(&k4, 1e-9).unwrap();
        assert!(r.pass);
        assert!(r.ties.contains(&"(3,1)".to_string()));
    }

    #[test]
    fn lanczos_path_agrees_with_irreps() {
        let g = random_connected(7, 0.2, &mut seeded_rng(21));
        let direct = gap_interchange(&g).unwrap();
        let r = aldous_check(&g, 1e-9).unwrap();
        assert!((direct - r.gap_interchange).abs() < 1e-7 * (1.0 + direct), "{direct} vs {}", r.gap_interchange);
    }

    #[test]
    fn sparse_validation() {
        assert!(SparseSymmetricMatrix::from_upper(2, vec![(0, 1, 1.0), (0, 1, 2.0)]).is_err());
        assert!(SparseSymmetricMatrix::from_upper(2, vec![(1, 0, 1.0)]).is_err());
        let m = SparseSymmetricMatrix::from_upper(2, vec![(0, 0, 2.0), (0, 1, -1.0)]).unwrap();
        let mut y = vec![0.0; 2];
        m.matvec(&[1.0, 1.0], &mut y);
        assert_eq!(y, vec![1.0, -1.0]);
        assert_eq!(m.nnz(), 3);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn gap_scales_and_relabels(seed in any::<u64>(), c in 0.1f64..5.0) {
            let g = random_connected(5, 0.4, &mut seeded_rng(seed));
            let gap = gap_interchange(&g).unwrap();
            let scaled = gap_interchange(&g.scaled(c).unwrap()).unwrap();
            prop_assert!((scaled - c * gap).abs() < 1e-8 * (1.0 + c * gap));
            let relabeled = gap_interchange(&g.relabeled(&[3, 1, 5, 2, 4]).unwrap()).unwrap();
            prop_assert!((relabeled - gap).abs() < 1e-8 * (1.0 + gap));
        }

        #[test]
        fn laplacian_structure(seed in any::<u64>()) {
            let g = random_connected(4, 0.5, &mut seeded_rng(seed));
            let l = interchange_laplacian(&g).unwrap();
            prop_assert_eq!(l.nnz(), 24 * (1 + g.num_positive_edges()));
            prop_assert!(l.row_sums().iter().all(|s| s.abs() < 1e-12));
            prop_assert!(crate::spectral::is_psd(&l.to_dense(), 1e-10));
        }

        #[test]
        fn gap_multiplicity_at_least_hook_dim(seed in any::<u64>()) {
            let g = random_connected(4, 0.5, &mut seeded_rng(seed));
            let r = aldous_check(&g, 1e-9).unwrap();
            prop_assert!(r.pass);
            let spec = interchange_spectrum(&g).unwrap();
            let mult = spec.iter().filter(|v| (*v - r.gap_interchange).abs() < 1e-7 * (1.0 + r.gap_interchange)).count();
            prop_assert!(mult >= 3);
        }
    }
}
