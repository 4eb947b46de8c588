//! Symmetric eigenvalue utilities.
//!
//! Dense problems go through nalgebra's symmetric QR solver. Large sparse
//! Laplacians use [`lanczos_smallest`], a Lanczos iteration with full
//! reorthogonalization that can project out known kernel vectors.
//!
//! Every tolerance here is relative: a quantity `x` is "zero" when
//! `|x| ≤ tol · (1 + scale)` with `scale` the largest magnitude involved.

use nalgebra::{DMatrix, SymmetricEigen};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{collapse_last_vertex, rw_laplacian, SymmetricMatrix, WeightedGraph};

/// Ascending eigenvalues with the worst residual `max ‖Mv - μv‖`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub values: Vec<f64>,
    pub residual: f64,
    pub dim: usize,
}

impl SpectrumReport {
    pub fn min(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    /// Second-smallest eigenvalue.
    pub fn gap(&self) -> Option<f64> {
        self.values.get(1).copied()
    }
}

pub fn eigenvalues(m: &SymmetricMatrix) -> SpectrumReport {
    eigen_dense(m.to_dense())
}

/// Same as [`eigenvalues`] but checks symmetry of a general dense input.
pub fn eigenvalues_checked(m: &DMatrix<f64>, tol: f64) -> Result<SpectrumReport> {
    let sym = SymmetricMatrix::from_dense(m, tol)?;
    Ok(eigenvalues(&sym))
}

fn eigen_dense(a: DMatrix<f64>) -> SpectrumReport {
    let dim = a.nrows();
    if dim == 0 {
        return SpectrumReport { values: Vec::new(), residual: 0.0, dim };
    }
    let eig = SymmetricEigen::new(a.clone());
    let av = &a * &eig.eigenvectors;
    let mut residual: f64 = 0.0;
    for k in 0..dim {
        let r = (av.column(k) - eig.eigenvectors.column(k) * eig.eigenvalues[k]).norm();
        residual = residual.max(r);
    }
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    SpectrumReport { values, residual, dim }
}

/// Eigenvalues only, ascending; skips eigenvectors and the residual.
pub fn eigenvalues_only(m: &SymmetricMatrix) -> Vec<f64> {
    let mut values: Vec<f64> = m.to_dense().symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values
}

pub fn is_psd(m: &SymmetricMatrix, tol: f64) -> bool {
    if m.dim() == 0 {
        return true;
    }
    eigenvalues_only(m)[0] >= -tol * (1.0 + m.max_norm())
}

fn scale_of(xs: &[f64]) -> f64 {
    xs.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}

/// Interlacing `a₁ ≤ b₁ ≤ a₂ ≤ b₂ ≤ … ≤ a_n ≤ b_n` of two ascending lists of
/// equal length, where `b` is `a` plus a PSD rank-one term. Unequal lengths
/// return `false`.
pub fn interlace_check(a: &[f64], b: &[f64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let eps = tol * (1.0 + scale_of(a).max(scale_of(b)));
    (0..a.len()).all(|k| a[k] <= b[k] + eps && (k + 1 == a.len() || b[k] <= a[k + 1] + eps))
}

/// Upper bound on `μ_k(α) - μ_k(α')` for the collapse of vertex `n`:
/// `2 Σ_{i≤j<n} α_in α_jn / Σ_i α_in`.
pub fn shift_bound(g: &WeightedGraph) -> Result<f64> {
    let n = g.n();
    let s = g.incident_weight(n);
    if s <= 0.0 {
        return Err(Error::ZeroIncidentWeight { vertex: n });
    }
    let a: Vec<f64> = (1..n).map(|i| g.weight(i, n)).collect();
    let mut acc = 0.0;
    for i in 0..a.len() {
        for j in i..a.len() {
            acc += a[i] * a[j];
        }
    }
    Ok(2.0 * acc / s)
}

/// Checks every eigenvalue shift against [`shift_bound`].
pub fn shift_bound_check(g: &WeightedGraph, tol: f64) -> Result<bool> {
    let bound = shift_bound(g)?;
    let after = eigenvalues_only(&rw_laplacian(&g.isolate_vertex(g.n())?));
    let before = eigenvalues_only(&rw_laplacian(g));
    let eps = tol * (1.0 + scale_of(&before));
    Ok(before.iter().zip(&after).all(|(b, a)| b - a <= bound + eps))
}

/// Collapse-and-compare in one step: spectra of `α'` (with the isolated zero)
/// and `α` for the last vertex.
pub fn collapse_spectra(g: &WeightedGraph) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut after = eigenvalues_only(&rw_laplacian(&collapse_last_vertex(g, g.n())?.graph));
    after.push(0.0);
    after.sort_by(f64::total_cmp);
    Ok((after, eigenvalues_only(&rw_laplacian(g))))
}

/// Sorted elementwise comparison, tolerance relative to the largest magnitude.
pub fn multiset_equal(a: &[f64], b: &[f64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let eps = tol * (1.0 + scale_of(&a).max(scale_of(&b)));
    a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= eps)
}

/// One value per line, ascending, 17 significant digits.
pub fn spectrum_csv(values: &[f64]) -> String {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    v.iter().map(|x| format!("{x:.16e}\n")).collect()
}

#[derive(Clone, Debug)]
pub struct LanczosOptions {
    pub max_iter: usize,
    /// Stop when the Ritz residual is below `tol · (1 + |θ|)`.
    pub tol: f64,
    pub seed: u64,
    /// Convergence is tested every `check_every` steps.
    pub check_every: usize,
}

impl Default for LanczosOptions {
    fn default() -> Self {
        LanczosOptions { max_iter: 400, tol: 1e-10, seed: 0x5eed, check_every: 8 }
    }
}

/// Smallest eigenvalue of a symmetric operator restricted to the orthogonal
/// complement of `deflate` (orthonormal vectors spanning an invariant
/// subspace, e.g. the normalized all-ones kernel of a Laplacian).
pub fn lanczos_smallest<F>(apply: F, dim: usize, deflate: &[Vec<f64>], opts: &LanczosOptions) -> Result<f64>
where
    F: Fn(&[f64], &mut [f64]),
{
    if dim <= deflate.len() {
        return Err(Error::BadParameter("nothing left after deflation".into()));
    }
    let project = |x: &mut [f64]| {
        for d in deflate {
            let c = dot(d, x);
            axpy(-c, d, x);
        }
    };
    let mut rng = crate::graphs::seeded_rng(opts.seed);
    let mut q: Vec<f64> = (0..dim).map(|_| rng.random_range(-1.0..1.0)).collect();
    project(&mut q);
    project(&mut q);
    normalize(&mut q);

    let mut basis: Vec<Vec<f64>> = vec![q];
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    let mut w = vec![0.0; dim];
    let max_iter = opts.max_iter.min(dim - deflate.len());
    let mut last_theta = f64::NAN;

    for m in 0..max_iter {
        apply(&basis[m], &mut w);
        project(&mut w);
        let a = dot(&basis[m], &w);
        alphas.push(a);
        // full reorthogonalization against the basis and the deflated space, two passes
        for _ in 0..2 {
            for q in deflate.iter().chain(&basis) {
                let c = dot(q, &w);
                axpy(-c, q, &mut w);
            }
        }
        let b = norm(&w);
        let converge_step = (m + 1) % opts.check_every == 0 || m + 1 == max_iter || b < 1e-12;
        if converge_step {
            let (theta, last) = tridiagonal_min(&alphas, &betas);
            last_theta = theta;
            if b * last.abs() <= opts.tol * (1.0 + theta.abs()) || b < 1e-12 {
                return Ok(theta);
            }
        }
        betas.push(b);
        let mut next = w.clone();
        for x in next.iter_mut() {
            *x /= b;
        }
        basis.push(next);
    }
    Err(Error::NoConvergence(format!("Lanczos after {max_iter} steps, last Ritz value {last_theta}")))
}

/// Smallest eigenvalue of the tridiagonal matrix and the last component of
/// its eigenvector.
fn tridiagonal_min(alphas: &[f64], betas: &[f64]) -> (f64, f64) {
    let m = alphas.len();
    let t = DMatrix::from_fn(m, m, |i, j| {
        if i == j {
            alphas[i]
        } else if i + 1 == j {
            betas[i]
        } else if j + 1 == i {
            betas[j]
        } else {
            0.0
        }
    });
    let eig = SymmetricEigen::new(t);
    let (k, theta) = eig
        .eigenvalues
        .iter()
        .copied()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("nonempty");
    (theta, eig.eigenvectors[(m - 1, k)])
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(c: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += c * xi;
    }
}

fn norm(x: &[f64]) -> f64 {
    dot(x, x).sqrt()
}

fn normalize(x: &mut [f64]) {
    let n = norm(x);
    for v in x.iter_mut() {
        *v /= n;
    }
}
