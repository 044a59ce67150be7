//! Coefficients of polynomial×Gaussian functions in the tensor basis.

use liouville_core::spectrum::BivariatePoly;
use liouville_core::{AppliedEigenfunction, GaussianState, C64};
use nalgebra::{DMatrix, DVector};

use super::basis::{gauss_hermite, hermite_function_polys, hermite_functions, BasisConfig};

/// `P(Q, r)·g(Q, r)` with `P` in physical coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyGaussian {
    pub poly: BivariatePoly,
    pub gaussian: GaussianState,
}

impl From<&AppliedEigenfunction> for PolyGaussian {
    fn from(f: &AppliedEigenfunction) -> Self {
        PolyGaussian { poly: f.density_polynomial(), gaussian: f.gaussian }
    }
}

impl From<&GaussianState> for PolyGaussian {
    fn from(s: &GaussianState) -> Self {
        PolyGaussian { poly: BivariatePoly::one(), gaussian: *s }
    }
}

impl PolyGaussian {
    pub fn evaluate(&self, q: f64, r: f64) -> C64 {
        self.poly.evaluate(q, r) * self.gaussian.evaluate(q, r)
    }
}

/// Coefficients over `φ_jk`, index `j·n_r + k`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    pub coeffs: DVector<C64>,
    pub cfg: BasisConfig,
    /// Set when the expanded Gaussian differs from the basis frame; the
    /// expansion is then a quadrature approximation rather than exact.
    pub frame_mismatch: bool,
}

impl StateVector {
    pub fn new(coeffs: DVector<C64>, cfg: BasisConfig) -> Self {
        StateVector { coeffs, cfg, frame_mismatch: false }
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.norm()
    }

    pub fn get(&self, j: usize, k: usize) -> C64 {
        self.coeffs[self.cfg.index(j, k)]
    }

    /// `f(Q, r) = e^{-iκ_c Q r} Σ c_jk ψ_j(u) ψ_k(v)`.
    pub fn evaluate(&self, q: f64, r: f64) -> C64 {
        let (u, v) = self.cfg.to_basis(q, r);
        let pq = hermite_functions(self.cfg.n_q, u);
        let pr = hermite_functions(self.cfg.n_r, v);
        let mut sum = C64::new(0.0, 0.0);
        for j in 0..self.cfg.n_q {
            let inner: C64 = (0..self.cfg.n_r).map(|k| self.get(j, k) * pr[k]).sum();
            sum += inner * pq[j];
        }
        sum * C64::new(0.0, -self.cfg.chirp * q * r).exp()
    }

    /// Indices whose coefficients exceed `tol` relative to the largest.
    pub fn support(&self, tol: f64) -> Vec<(usize, usize)> {
        let max = self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        (0..self.coeffs.len())
            .filter(|&i| self.coeffs[i].norm() > tol * max)
            .map(|i| self.cfg.pair(i))
            .collect()
    }
}

/// Tensor Gauss-Hermite projection of `G(u, v)·e^{-(u²+v²)/2}` where the
/// caller supplies `G` at the nodes.
fn project(cfg: &BasisConfig, g: impl Fn(f64, f64, f64, f64) -> C64) -> DVector<C64> {
    let (nodes, weights) = gauss_hermite(cfg.quadrature_order());
    let nn = nodes.len();
    let hq = DMatrix::from_fn(nn, cfg.n_q, |a, j| hermite_function_polys(cfg.n_q, nodes[a])[j] * weights[a]);
    let hr = DMatrix::from_fn(nn, cfg.n_r, |b, k| hermite_function_polys(cfg.n_r, nodes[b])[k] * weights[b]);
    let (aq, ar) = (cfg.a_q(), cfg.a_r());
    let gm = DMatrix::from_fn(nn, nn, |a, b| g(nodes[a], nodes[b], aq * nodes[a], ar * nodes[b]));
    let hq = hq.map(|x| C64::new(x, 0.0));
    let hr = hr.map(|x| C64::new(x, 0.0));
    let c = hq.transpose() * gm * hr;
    DVector::from_fn(cfg.dim(), |i, _| {
        let (j, k) = cfg.pair(i);
        c[(j, k)]
    })
}

/// Exact (to rounding) when the Gaussian matches the basis frame and chirp.
pub fn expand(f: impl Into<PolyGaussian>, cfg: &BasisConfig) -> StateVector {
    let f: PolyGaussian = f.into();
    let s = f.gaussian;
    let (aq, ar) = (cfg.a_q(), cfg.a_r());
    let cq = 2.0 * s.mu * aq * aq;
    let cr = 0.5 * s.mu_plus_nu() * ar * ar;
    let mismatch = (cq - 0.5).abs() > 1e-12 || (cr - 0.5).abs() > 1e-12 || (s.kappa - cfg.chirp).abs() > 1e-12 * (1.0 + s.kappa.abs());
    let norm = s.normalization();
    let dk = s.kappa - cfg.chirp;
    let coeffs = project(cfg, |u, v, q, r| {
        // exponent of g·e^{iκ_c Qr}·e^{(u²+v²)/2}; zero when the frame matches
        let e = C64::new((0.5 - cq) * u * u + (0.5 - cr) * v * v, -dk * q * r);
        f.poly.evaluate(q, r) * e.exp() * norm
    });
    StateVector { coeffs, cfg: *cfg, frame_mismatch: mismatch }
}

/// Quadrature expansion of an arbitrary function; accurate when
/// `f·e^{iκ_c Qr}` decays like the basis Gaussian.
pub fn expand_fn(f: impl Fn(f64, f64) -> C64, cfg: &BasisConfig) -> StateVector {
    let chirp = cfg.chirp;
    let coeffs = project(cfg, |u, v, q, r| f(q, r) * C64::new(0.5 * (u * u + v * v), chirp * q * r).exp());
    StateVector { coeffs, cfg: *cfg, frame_mismatch: false }
}
