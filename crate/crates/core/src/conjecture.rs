//! The star-versus-clique Dirichlet inequality on `S_k`.
//!
//! For nonnegative `γ_1, …, γ_{k-1}` and every `g: S_k → ℝ`,
//!
//! ```text
//! Σ_σ Σ_{i<k} γ_i (g(σ) - g((ik)σ))²  ≥  Σ_σ Σ_{i<j<k} (γ_iγ_j / Σγ) (g(σ) - g((ij)σ))².
//! ```
//!
//! Three independent routes are provided:
//!
//! * [`dirichlet_gap_matrix`]: the `k! × k!` form `Q` with `gᵀQg = LHS - RHS`;
//! * [`conjecture_matrix`]: the per-irrep matrices `D^λ`, with `Q ≅ ⊕ 2D^λ`;
//! * closed forms for `k = 4` ([`k4_closed_forms`]) and for equal weights
//!   ([`equal_gamma_min_eig`]).

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::SymmetricMatrix;
use crate::par::{self, Exec};
use crate::perm::{factorial, Permutation};
use crate::spectral::eigenvalues_only;
use crate::symfun::{enumerate_partitions, Partition};
use crate::yor::{householder_vector, SignedWeightedGraph, YoungBasis};

/// Largest `k` accepted by [`dirichlet_gap_matrix`].
pub const DIRICHLET_K_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GammaVector {
    k: usize,
    gamma: Vec<f64>,
}

impl GammaVector {
    pub fn new(k: usize, gamma: Vec<f64>) -> Result<Self> {
        if k < 2 {
            return Err(Error::BadParameter(format!("k must be at least 2, got {k}")));
        }
        if gamma.len() != k - 1 {
            return Err(Error::SizeMismatch { expected: k - 1, found: gamma.len() });
        }
        if let Some(g) = gamma.iter().find(|g| !g.is_finite() || **g < 0.0) {
            return Err(Error::BadParameter(format!("gamma entries must be finite and nonnegative, got {g}")));
        }
        Ok(GammaVector { k, gamma })
    }

    /// `γ ≡ 1`.
    pub fn ones(k: usize) -> Result<Self> {
        Self::new(k, vec![1.0; k.saturating_sub(1)])
    }

    /// Parses `"1,2,3"` as `γ` for `k = len + 1`.
    pub fn parse(k: usize, s: &str) -> Result<Self> {
        let gamma = s
            .split(',')
            .map(|t| t.trim().parse::<f64>().map_err(|_| Error::BadParameter(format!("cannot parse gamma entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(k, gamma)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }

    pub fn sum(&self) -> f64 {
        self.gamma.iter().sum()
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(self.k, self.gamma.iter().map(|g| g * c).collect())
    }

    /// `(vertex pair, weight)` list: `+γ_i` on `(i,k)`, `-γ_iγ_j/Σγ` on `(i,j)`.
    fn signed_edges(&self) -> Result<Vec<(usize, usize, f64)>> {
        let k = self.k;
        let s = self.sum();
        if k >= 3 && s <= 0.0 {
            return Err(Error::BadParameter("gamma is identically zero".into()));
        }
        let mut edges: Vec<(usize, usize, f64)> = (1..k).map(|i| (i, k, self.gamma[i - 1])).collect();
        for i in 1..k {
            for j in i + 1..k {
                edges.push((i, j, -self.gamma[i - 1] * self.gamma[j - 1] / s));
            }
        }
        Ok(edges)
    }
}

/// `Q` on `ℝ^{k!}` (rows indexed by lexicographic rank), assembled from the
/// per-state squared differences of the inequality.
pub fn dirichlet_gap_matrix(gamma: &GammaVector) -> Result<SymmetricMatrix> {
    let k = gamma.k();
    if k > DIRICHLET_K_CAP {
        return Err(Error::CapExceeded { n: k, cap: DIRICHLET_K_CAP });
    }
    let edges = gamma.signed_edges()?;
    let mut q = SymmetricMatrix::zeros(factorial(k));
    for sigma in Permutation::all(k) {
        let a = sigma.rank();
        for &(i, j, w) in &edges {
            let b = sigma.left_transpose(i, j).rank();
            // w (e_a - e_b)(e_a - e_b)ᵀ
            q.add(a, a, w);
            q.add(b, b, w);
            q.add(a, b, -w);
        }
    }
    Ok(q)
}

/// `D^λ = Σ_i γ_i V_ik - Σ_{i<j<k} (γ_iγ_j/Σγ) V_ij`, `V = I - ρ^λ`.
pub fn conjecture_matrix(shape: &Partition, gamma: &GammaVector) -> Result<SymmetricMatrix> {
    if shape.n() != gamma.k() {
        return Err(Error::SizeMismatch { expected: gamma.k(), found: shape.n() });
    }
    let g = SignedWeightedGraph::from_edges(gamma.k(), gamma.signed_edges()?)?;
    YoungBasis::new(shape).laplacian(&g)
}

#[derive(Clone, Debug, Serialize)]
pub struct LambdaResult {
    pub lambda: String,
    pub min_eig: f64,
    /// `|min_eig|` within tolerance of zero.
    pub boundary: bool,
    pub psd: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub k: usize,
    pub gamma: Vec<f64>,
    pub per_lambda: Vec<LambdaResult>,
    pub pass: bool,
}

impl ConjectureReport {
    pub fn min_eig(&self) -> f64 {
        self.per_lambda.iter().map(|r| r.min_eig).fold(f64::INFINITY, f64::min)
    }
}

pub fn check_conjecture(k: usize, gamma: &GammaVector, tol: f64) -> Result<ConjectureReport> {
    check_conjecture_with(k, gamma, tol, Exec::default())
}

/// PSD test of every `D^λ`, `λ ⊢ k`: `min_eig ≥ -tol·(1 + ‖D‖_max)`.
pub fn check_conjecture_with(k: usize, gamma: &GammaVector, tol: f64, exec: Exec) -> Result<ConjectureReport> {
    if gamma.k() != k {
        return Err(Error::SizeMismatch { expected: k, found: gamma.k() });
    }
    gamma.signed_edges()?;
    let shapes = enumerate_partitions(k)?;
    let per_lambda = par::map(exec, &shapes, |lam| -> Result<LambdaResult> {
        let d = conjecture_matrix(lam, gamma)?;
        let min_eig = eigenvalues_only(&d)[0];
        let eps = tol * (1.0 + d.max_norm());
        Ok(LambdaResult { lambda: lam.to_string(), min_eig, boundary: min_eig.abs() <= eps, psd: min_eig >= -eps })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let pass = per_lambda.iter().all(|r| r.psd);
    Ok(ConjectureReport { k, gamma: gamma.gamma().to_vec(), per_lambda, pass })
}

/// Diagonal of `(k-1)·D^λ` at `γ ≡ 1`, one integer per tableau:
/// `½k(k-1) + Σ_i c^t_i - k c^t_k`.
pub fn equal_gamma_diagonal(shape: &Partition) -> Vec<i64> {
    let k = shape.n() as i64;
    shape
        .enumerate_syt()
        .iter()
        .map(|t| {
            let c = t.contents();
            k * (k - 1) / 2 + c.iter().sum::<i64>() - k * c[c.len() - 1]
        })
        .collect()
}

/// Smallest eigenvalue of `(k-1)·D^λ` at `γ ≡ 1`. The entry `k` of a
/// tableau sits in a removable corner, and every corner is reachable, so
/// the minimum uses the largest corner content.
pub fn equal_gamma_min_eig(shape: &Partition) -> Result<i64> {
    let k = shape.n() as i64;
    if k < 2 {
        return Err(Error::BadParameter("need k >= 2".into()));
    }
    Ok(k * (k - 1) / 2 + shape.content_sum() - k * shape.max_corner_content())
}

/// `Σ_{j≥2} (j-1) λ_j (λ_j - 1)`, a lower bound for [`equal_gamma_min_eig`].
pub fn equal_gamma_lower_bound(shape: &Partition) -> i64 {
    shape
        .parts()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, &l)| (j as i64) * (l as i64) * (l as i64 - 1))
        .sum()
}

/// Per-irrep identities at `k = 4`, checked against [`conjecture_matrix`].
/// Matrices are compared after scaling by `Σγ`.
#[derive(Clone, Debug, Serialize)]
pub struct K4Report {
    pub gamma: [f64; 3],
    /// `max |Σγ·D^{(3,1)} - ββᵀ|`, `β = Σ γ_i v_i4`.
    pub rank_one_31_deviation: f64,
    /// `max |Σγ·D^{(2,2)} - (Σ_{i<j} b_ij b_ijᵀ - Σ γ_i² V_i4)|`.
    pub decomposition_22_deviation: f64,
    pub min_eig_22: f64,
    /// `-1 + (wᵀu)²/‖u‖²`; `None` when `u = 0`.
    pub bound_22: Option<f64>,
    /// `bound_22 · λ_min(Σ γ_i² v_i4 v_i4ᵀ)`, invariant under scaling `γ`.
    pub scaled_bound_22: Option<f64>,
    pub min_eig_211: f64,
    pub scalar_1111_deviation: f64,
    pub scalar_4_norm: f64,
    pub pass: bool,
}

fn outer(v: &DVector<f64>) -> DMatrix<f64> {
    v * v.transpose()
}

fn min_eig_dense(m: &DMatrix<f64>) -> f64 {
    m.clone().symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min)
}

pub fn k4_closed_forms(gamma: [f64; 3], tol: f64) -> Result<K4Report> {
    let gv = GammaVector::new(4, gamma.to_vec())?;
    let s = gv.sum();
    if s <= 0.0 {
        return Err(Error::BadParameter("gamma is identically zero".into()));
    }
    let lam = |t: &str| -> Partition { t.parse().expect("literal partition") };
    let v4 = |shape: &Partition| -> [DVector<f64>; 3] {
        [1, 2, 3].map(|i| DVector::from_vec(householder_vector(shape, i, 4).expect("tabulated")))
    };
    let scaled = |shape: &Partition| -> Result<DMatrix<f64>> { Ok(conjecture_matrix(shape, &gv)?.to_dense() * s) };
    let g = gamma;

    let p31 = lam("3,1");
    let v = v4(&p31);
    let beta = &v[0] * g[0] + &v[1] * g[1] + &v[2] * g[2];
    let rank_one_31_deviation = (scaled(&p31)? - outer(&beta)).amax();

    let p22 = lam("2,2");
    let v = v4(&p22);
    let m22 = scaled(&p22)?;
    let b12 = &v[0] * g[0] + &v[1] * g[1];
    let b13 = &v[0] * g[0] - &v[2] * g[2];
    let b23 = &v[1] * g[1] + &v[2] * g[2];
    let gram = outer(&v[0]) * g[0].powi(2) + outer(&v[1]) * g[1].powi(2) + outer(&v[2]) * g[2].powi(2);
    let rhs = outer(&b12) + outer(&b13) + outer(&b23) - &gram;
    let decomposition_22_deviation = (&m22 - rhs).amax();
    let min_eig_22 = min_eig_dense(&m22);
    let u = [g[0] * g[1], -g[0] * g[2], g[1] * g[2]];
    let uu: f64 = u.iter().map(|x| x * x).sum();
    let wu = u[0] - u[1] + u[2];
    let bound_22 = (uu > 0.0).then(|| -1.0 + wu * wu / uu);
    let scaled_bound_22 = bound_22.map(|b| b * min_eig_dense(&gram));

    let min_eig_211 = min_eig_dense(&scaled(&lam("2,1,1"))?);
    let sq: f64 = g.iter().map(|x| x * x).sum();
    let cross = g[0] * g[1] + g[0] * g[2] + g[1] * g[2];
    let d1111 = conjecture_matrix(&Partition::column(4), &gv)?.get(0, 0);
    let scalar_1111_deviation = (d1111 - 2.0 * (sq + cross) / s).abs();
    let scalar_4_norm = conjecture_matrix(&Partition::row(4), &gv)?.max_norm();

    let scale = 1.0 + s * s;
    let pass = rank_one_31_deviation <= tol * scale
        && decomposition_22_deviation <= tol * scale
        && scaled_bound_22.is_none_or(|b| min_eig_22 >= b - tol * scale)
        && min_eig_211.abs() <= tol * scale
        && scalar_1111_deviation <= tol * (1.0 + s)
        && scalar_4_norm <= tol;
    Ok(K4Report {
        gamma,
        rank_one_31_deviation,
        decomposition_22_deviation,
        min_eig_22,
        bound_22,
        scaled_bound_22,
        min_eig_211,
        scalar_1111_deviation,
        scalar_4_norm,
        pass,
    })
}
