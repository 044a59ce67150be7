//! Eigen-residuals, eigenvalues of the truncated matrix and the
//! left/right pairing at finite truncation.

use liouville_core::spectrum::EigenLabel;
use liouville_core::C64;
use nalgebra::{DMatrix, DVector};

use super::basis::BasisConfig;
use super::error::{Result, VerifyError};
use super::expand::StateVector;
use super::matrix::OperatorMatrix;

/// `‖K f − λ f‖₂ / ‖f‖₂`.
pub fn residual(k: &OperatorMatrix, f: &StateVector, lambda: C64) -> Result<f64> {
    let norm = f.norm();
    if norm == 0.0 {
        return Err(VerifyError::ZeroVector);
    }
    let kf = k.matvec(&f.coeffs)?;
    Ok((kf - &f.coeffs * lambda).norm() / norm)
}

/// Basis indices grouped by total Hermite degree `j + k`.
pub fn degree_blocks(cfg: &BasisConfig) -> Vec<Vec<usize>> {
    let mut blocks = vec![Vec::new(); cfg.n_q + cfg.n_r - 1];
    for j in 0..cfg.n_q {
        for k in 0..cfg.n_r {
            blocks[j + k].push(cfg.index(j, k));
        }
    }
    blocks
}

/// Largest entry mapping a lower-degree basis function to a higher degree,
/// relative to the largest entry. Zero when every space of functions of
/// degree `≤ d` is invariant, i.e. the matrix is block upper-triangular.
pub fn lower_coupling(k: &OperatorMatrix, cfg: &BasisConfig) -> f64 {
    let deg = |i: usize| {
        let (j, l) = cfg.pair(i);
        j + l
    };
    let max = k.max_abs().max(f64::MIN_POSITIVE);
    k.entries().filter(|(i, j, _)| deg(*i) > deg(*j)).map(|(_, _, v)| v.norm()).fold(0.0, f64::max) / max
}

/// Relative size below which lower couplings count as zero.
pub const TRIANGULAR_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixEigenvalue {
    pub value: C64,
    /// Total degree of the diagonal block it came from (`None` for the dense
    /// fallback).
    pub degree: Option<usize>,
    /// Whether that block lies entirely inside the truncation box.
    pub complete_block: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSpectrum {
    pub eigenvalues: Vec<MatrixEigenvalue>,
    pub triangular: bool,
    pub lower_coupling: f64,
}

fn dense_eigenvalues(m: DMatrix<C64>) -> Vec<C64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let schur = nalgebra::Schur::new(m);
    let (_, t) = schur.unpack();
    (0..t.nrows()).map(|i| t[(i, i)]).collect()
}

/// Eigenvalues of the truncated matrix. When the matrix is block
/// upper-triangular in degree they are the eigenvalues of the diagonal
/// blocks; otherwise the full matrix is diagonalized.
pub fn truncated_spectrum(k: &OperatorMatrix, cfg: &BasisConfig) -> TruncatedSpectrum {
    let coupling = lower_coupling(k, cfg);
    let triangular = coupling <= TRIANGULAR_TOL;
    let eigenvalues = if triangular {
        let complete = cfg.n_q.min(cfg.n_r);
        degree_blocks(cfg)
            .iter()
            .enumerate()
            .flat_map(|(d, idx)| {
                dense_eigenvalues(k.dense_submatrix(idx))
                    .into_iter()
                    .map(move |value| MatrixEigenvalue { value, degree: Some(d), complete_block: d < complete })
            })
            .collect()
    } else {
        dense_eigenvalues(k.to_dense())
            .into_iter()
            .map(|value| MatrixEigenvalue { value, degree: None, complete_block: false })
            .collect()
    };
    TruncatedSpectrum { eigenvalues, triangular, lower_coupling: coupling }
}

/// `±inω₀ + (m − n/2)γ` for every `(m, n, ±)` with modulus `≤ bound`.
pub fn predicted_eigenvalues(omega0: f64, gamma: f64, bound: f64) -> Vec<C64> {
    let mut out = Vec::new();
    let mut m = 0u32;
    // Re λ ≥ mγ/2 and |Im λ| ≤ mω₀, so m > 2·bound/γ cannot contribute.
    while (m as f64) * gamma / 2.0 <= bound && m <= 10_000 {
        for n in 0..=m {
            for s in [1.0, -1.0] {
                if n == 0 && s < 0.0 {
                    continue;
                }
                let z = C64::new((m as f64 - n as f64 / 2.0) * gamma, s * n as f64 * omega0);
                if z.norm() <= bound {
                    out.push(z);
                }
            }
        }
        if gamma == 0.0 {
            break;
        }
        m += 1;
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumMatch {
    pub window: f64,
    /// Matrix eigenvalues inside the window.
    pub in_window: usize,
    /// Largest distance from an in-window matrix eigenvalue to the closest
    /// predicted one.
    pub max_distance: f64,
    /// In-window matrix eigenvalues farther than `tol` from every prediction.
    pub unmatched: Vec<C64>,
    /// Predicted eigenvalues (strictly inside the window) with no matrix
    /// eigenvalue within `tol`.
    pub missing: Vec<C64>,
}

/// Compares the truncated spectrum inside `|λ| ≤ window` with the
/// closed-form eigenvalues.
pub fn match_spectrum(spec: &TruncatedSpectrum, omega0: f64, gamma: f64, window: f64, tol: f64) -> SpectrumMatch {
    let predicted = predicted_eigenvalues(omega0, gamma, window + 1.0);
    let inside: Vec<C64> = spec.eigenvalues.iter().map(|e| e.value).filter(|z| z.norm() <= window).collect();
    let closest = |z: &C64, set: &[C64]| set.iter().map(|p| (p - z).norm()).fold(f64::INFINITY, f64::min);
    let mut max_distance: f64 = 0.0;
    let mut unmatched = Vec::new();
    for z in &inside {
        let d = closest(z, &predicted);
        max_distance = max_distance.max(d);
        if d > tol {
            unmatched.push(*z);
        }
    }
    let all: Vec<C64> = spec.eigenvalues.iter().map(|e| e.value).collect();
    let missing = predicted
        .iter()
        .filter(|p| p.norm() < window - tol)
        .filter(|p| closest(p, &all) > tol)
        .copied()
        .collect();
    SpectrumMatch { window, in_window: inside.len(), max_distance, unmatched, missing }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GramReport {
    pub labels: Vec<EigenLabel>,
    /// Matrix eigenvalue paired with each label.
    pub matrix_eigenvalues: Vec<C64>,
    /// `G_ab = y_aᴴ f_b / y_aᴴ f_a` for left eigenvectors `y_a`.
    pub gram: DMatrix<C64>,
    pub max_off_diagonal: f64,
    pub max_eigenvalue_distance: f64,
    /// Dimension of the leading invariant subspace used.
    pub subspace_dim: usize,
}

/// Pairs left eigenvectors of the truncated matrix with the given right
/// eigenfunctions. When the matrix is block upper-triangular, the left
/// eigenvector components on the degrees occupied by the right
/// eigenfunctions are exactly those of the leading principal block, which is
/// what is computed.
pub fn biorthogonality_check(
    k: &OperatorMatrix,
    cfg: &BasisConfig,
    modes: &[(EigenLabel, StateVector, C64)],
    tol: f64,
) -> Result<GramReport> {
    let max_degree = modes
        .iter()
        .flat_map(|(_, f, _)| f.support(1e-13).into_iter().map(|(j, l)| j + l))
        .max()
        .unwrap_or(0);
    let idx: Vec<usize> = if lower_coupling(k, cfg) <= TRIANGULAR_TOL {
        degree_blocks(cfg).into_iter().take(max_degree + 1).flatten().collect()
    } else {
        (0..cfg.dim()).collect()
    };
    let a = k.dense_submatrix(&idx);
    let eig = dense_eigenvalues(a.clone());
    let n = modes.len();
    let mut lefts: Vec<DVector<C64>> = Vec::with_capacity(n);
    let mut matrix_eigenvalues = Vec::with_capacity(n);
    let mut max_eigenvalue_distance: f64 = 0.0;
    for (_, _, lambda) in modes {
        let (mu, dist) = eig
            .iter()
            .map(|z| (*z, (z - lambda).norm()))
            .fold((C64::new(f64::NAN, 0.0), f64::INFINITY), |best, c| if c.1 < best.1 { c } else { best });
        if !(dist <= 10.0 * tol) {
            return Err(VerifyError::PairingFailure { re: lambda.re, im: lambda.im, tol: 10.0 * tol, distance: dist });
        }
        max_eigenvalue_distance = max_eigenvalue_distance.max(dist);
        matrix_eigenvalues.push(mu);
        // yᴴ(A − μ) = 0  ⇔  (A − μ)ᴴ y = 0: right singular vector of the
        // smallest singular value of (A − μ)ᴴ.
        let shifted = (&a - DMatrix::<C64>::identity(idx.len(), idx.len()) * mu).adjoint();
        let svd = nalgebra::SVD::new(shifted, false, true);
        let v_t = svd.v_t.expect("requested");
        let (imin, _) = svd
            .singular_values
            .iter()
            .enumerate()
            .fold((0, f64::INFINITY), |b, (i, s)| if *s < b.1 { (i, *s) } else { b });
        lefts.push(v_t.row(imin).adjoint());
    }
    let restricted: Vec<DVector<C64>> =
        modes.iter().map(|(_, f, _)| DVector::from_iterator(idx.len(), idx.iter().map(|&i| f.coeffs[i]))).collect();
    let mut gram = DMatrix::from_fn(n, n, |a, b| lefts[a].dotc(&restricted[b]));
    let mut max_off: f64 = 0.0;
    for a in 0..n {
        let d = gram[(a, a)];
        for b in 0..n {
            gram[(a, b)] /= d;
            if a != b {
                max_off = max_off.max(gram[(a, b)].norm());
            }
        }
    }
    Ok(GramReport {
        labels: modes.iter().map(|(l, _, _)| *l).collect(),
        matrix_eigenvalues,
        gram,
        max_off_diagonal: max_off,
        max_eigenvalue_distance,
        subspace_dim: idx.len(),
    })
}
