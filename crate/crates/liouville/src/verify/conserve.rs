//! Trace and hermiticity of a represented density kernel.

use liouville_core::C64;

use super::basis::{gauss_hermite, hermite_function_polys, hermite_functions, BasisConfig};
use super::expand::StateVector;

/// `∫ ψ_j(u) du` for `j < n`, exact by Gauss-Hermite after `u = √2 s`.
pub fn hermite_function_integrals(n: usize) -> Vec<f64> {
    let (x, w) = gauss_hermite(n / 2 + 2);
    let mut out = vec![0.0; n];
    for (xa, wa) in x.iter().zip(&w) {
        let h = hermite_function_polys(n, std::f64::consts::SQRT_2 * xa);
        for j in 0..n {
            out[j] += std::f64::consts::SQRT_2 * wa * h[j];
        }
    }
    out
}

/// Trace functional `f ↦ ∫ f(Q, 0) dQ` as a coefficient vector.
pub fn trace_weights(cfg: &BasisConfig) -> Vec<f64> {
    let iq = hermite_function_integrals(cfg.n_q);
    let pr0 = hermite_functions(cfg.n_r, 0.0);
    let aq = cfg.a_q();
    (0..cfg.dim())
        .map(|i| {
            let (j, k) = cfg.pair(i);
            aq * iq[j] * pr0[k]
        })
        .collect()
}

pub fn trace(f: &StateVector) -> C64 {
    trace_weights(&f.cfg).iter().zip(f.coeffs.iter()).map(|(w, c)| c * *w).sum()
}

/// Grid (in basis units `u, v ∈ [−4, 4]`) on which hermiticity is sampled.
pub const HERMITICITY_GRID: usize = 17;

/// `(∫ f(Q, 0) dQ, max |f(Q, −r) − conj f(Q, r)|)` over a sample grid.
pub fn trace_and_hermiticity(f: &StateVector) -> (C64, f64) {
    let cfg = f.cfg;
    let mut defect: f64 = 0.0;
    let g = HERMITICITY_GRID;
    for a in 0..g {
        for b in 0..g {
            let u = -4.0 + 8.0 * a as f64 / (g - 1) as f64;
            let v = -4.0 + 8.0 * b as f64 / (g - 1) as f64;
            let (q, r) = (u * cfg.a_q(), v * cfg.a_r());
            defect = defect.max((f.evaluate(q, -r) - f.evaluate(q, r).conj()).norm());
        }
    }
    (trace(f), defect)
}
