//! Orthonormal Hermite functions, their ladder matrices, Gauss-Hermite
//! quadrature and the tensor basis configuration.

use liouville_core::{CoordinateFrame, GaussianState};
use nalgebra::DMatrix;
use std::f64::consts::{PI, SQRT_2};

use super::error::{Result, VerifyError};

/// `(X, D)`: multiplication by `u` and `d/du` on `ψ_0, …, ψ_{n-1}`, with
/// `X[j-1, j] = X[j, j-1] = √(j/2)`, `D[j-1, j] = √(j/2)`, `D[j, j-1] = -√(j/2)`.
pub fn ladder_matrices(n: usize) -> (DMatrix<f64>, DMatrix<f64>) {
    let mut x = DMatrix::zeros(n, n);
    let mut d = DMatrix::zeros(n, n);
    for j in 1..n {
        let s = (j as f64 / 2.0).sqrt();
        x[(j - 1, j)] = s;
        x[(j, j - 1)] = s;
        d[(j - 1, j)] = s;
        d[(j, j - 1)] = -s;
    }
    (x, d)
}

/// Gauss-Hermite rule for the weight `e^{-x²}`: `∫ e^{-x²} p(x) dx = Σ wᵢ p(xᵢ)`
/// exactly for polynomials of degree `< 2n`. Newton iteration on the
/// orthonormal recurrence; nodes in decreasing order.
pub fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    let pim4 = PI.powf(-0.25);
    let mut z = 0.0f64;
    for i in 0..(n + 1) / 2 {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * x[0],
            3 => 1.91 * z - 0.91 * x[1],
            _ => 2.0 * z - x[i - 2],
        };
        let mut pp = 0.0;
        for _ in 0..100 {
            let (mut p1, mut p2) = (pim4, 0.0);
            for j in 1..=n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
            }
            pp = (2.0 * nf).sqrt() * p2;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-15 * z.abs().max(1.0) {
                break;
            }
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

/// Polynomial parts `h_j(u)` of `ψ_j(u) = h_j(u) e^{-u²/2}`, `j < n`.
pub fn hermite_function_polys(n: usize, u: f64) -> Vec<f64> {
    let mut h = vec![0.0; n];
    if n == 0 {
        return h;
    }
    h[0] = PI.powf(-0.25);
    if n > 1 {
        h[1] = SQRT_2 * u * h[0];
    }
    for j in 1..n.saturating_sub(1) {
        let jf = j as f64;
        h[j + 1] = (2.0 / (jf + 1.0)).sqrt() * u * h[j] - (jf / (jf + 1.0)).sqrt() * h[j - 1];
    }
    h
}

/// `ψ_j(u)` for `j < n`.
pub fn hermite_functions(n: usize, u: f64) -> Vec<f64> {
    let g = (-0.5 * u * u).exp();
    hermite_function_polys(n, u).into_iter().map(|h| h * g).collect()
}

/// Tensor basis `φ_jk(Q, r) = e^{-iκ_c Q r} ψ_j(√2 Q̄) ψ_k(√2 r̄)` with
/// `Q̄ = Q/q_scale`, `r̄ = r_scale·r`, flattened as `j·n_r + k`.
///
/// The chirp `κ_c` lets the basis absorb the imaginary cross term of a
/// stationary Gaussian, so that every polynomial×stationary function is a
/// finite combination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisConfig {
    pub n_q: usize,
    pub n_r: usize,
    pub frame: CoordinateFrame,
    pub chirp: f64,
}

pub const DEFAULT_BASIS_N: usize = 48;

impl BasisConfig {
    pub fn new(n_q: usize, n_r: usize, frame: CoordinateFrame) -> Result<Self> {
        if n_q < 4 || n_r < 4 {
            return Err(VerifyError::BasisSize { n_q, n_r });
        }
        Ok(BasisConfig { n_q, n_r, frame, chirp: 0.0 })
    }

    pub fn with_chirp(self, chirp: f64) -> Self {
        BasisConfig { chirp, ..self }
    }

    /// Basis in which `s` is `ψ_0 ⊗ ψ_0` up to normalization.
    pub fn adapted_to(s: &GaussianState, n_q: usize, n_r: usize) -> Result<Self> {
        Ok(Self::new(n_q, n_r, s.normalized_frame()?)?.with_chirp(s.kappa))
    }

    pub fn dim(&self) -> usize {
        self.n_q * self.n_r
    }

    pub fn index(&self, j: usize, k: usize) -> usize {
        j * self.n_r + k
    }

    pub fn pair(&self, idx: usize) -> (usize, usize) {
        (idx / self.n_r, idx % self.n_r)
    }

    /// Physical length of one unit of `u`: `Q = a_q u`.
    pub fn a_q(&self) -> f64 {
        self.frame.q_scale / SQRT_2
    }

    /// Physical length of one unit of `v`: `r = a_r v`.
    pub fn a_r(&self) -> f64 {
        1.0 / (SQRT_2 * self.frame.r_scale)
    }

    /// `(u, v)` of a physical point.
    pub fn to_basis(&self, q: f64, r: f64) -> (f64, f64) {
        (q / self.a_q(), r / self.a_r())
    }

    /// Quadrature order used for expansions.
    pub fn quadrature_order(&self) -> usize {
        2 * self.n_q.max(self.n_r) + 8
    }
}
