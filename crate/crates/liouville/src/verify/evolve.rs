//! `f(t) = exp(−K t) f(0)`.

use liouville_core::C64;
use nalgebra::{DMatrix, DVector};

use super::error::{Result, VerifyError};
use super::expand::StateVector;
use super::matrix::OperatorMatrix;
use super::spectral::{degree_blocks, lower_coupling, TRIANGULAR_TOL};

/// Coefficients below this fraction of the largest one are treated as
/// quadrature noise when choosing the invariant subspace.
const SUPPORT_TOL: f64 = 1e-15;

/// Dense `exp(A)` by scaling and squaring of a Taylor polynomial.
pub fn expm(a: &DMatrix<C64>) -> DMatrix<C64> {
    let n = a.nrows();
    let norm1 = (0..n).map(|j| a.column(j).iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max);
    let mut s = 0;
    while norm1 / 2f64.powi(s) > 0.5 {
        s += 1;
    }
    let scaled = a / C64::new(2f64.powi(s), 0.0);
    let id = DMatrix::<C64>::identity(n, n);
    let mut out = id.clone();
    for k in (1..=20).rev() {
        out = &id + &scaled * out / C64::new(k as f64, 0.0);
    }
    for _ in 0..s {
        out = &out * &out;
    }
    out
}

/// Propagator for a fixed initial state. When `K` is block upper-triangular
/// in degree, the state's occupied degrees span an invariant subspace and
/// the exponential is taken there exactly; otherwise the full matrix is
/// integrated with a Taylor stepper.
pub struct Propagator<'a> {
    k: &'a OperatorMatrix,
    f0: StateVector,
    subspace: Option<(Vec<usize>, DMatrix<C64>)>,
}

impl<'a> Propagator<'a> {
    pub fn new(k: &'a OperatorMatrix, f0: &StateVector) -> Result<Self> {
        if f0.coeffs.len() != k.dim() {
            return Err(VerifyError::Dimension { expected: k.dim(), got: f0.coeffs.len() });
        }
        let subspace = if lower_coupling(k, &f0.cfg) <= TRIANGULAR_TOL {
            let d = f0.support(SUPPORT_TOL).iter().map(|(j, l)| j + l).max().unwrap_or(0);
            let idx: Vec<usize> = degree_blocks(&f0.cfg).into_iter().take(d + 1).flatten().collect();
            let a = k.dense_submatrix(&idx);
            Some((idx, a))
        } else {
            None
        };
        Ok(Propagator { k, f0: f0.clone(), subspace })
    }

    pub fn at(&self, t: f64) -> Result<StateVector> {
        if !(t >= 0.0) {
            return Err(VerifyError::NegativeTime { t });
        }
        let coeffs = match &self.subspace {
            Some((idx, a)) => {
                let e = expm(&(a * C64::new(-t, 0.0)));
                let x = DVector::from_iterator(idx.len(), idx.iter().map(|&i| self.f0.coeffs[i]));
                let y = e * x;
                let mut out = DVector::zeros(self.k.dim());
                for (p, &i) in idx.iter().enumerate() {
                    out[i] = y[p];
                }
                out
            }
            None => taylor_steps(self.k, &self.f0.coeffs, t)?,
        };
        Ok(StateVector { coeffs, cfg: self.f0.cfg, frame_mismatch: self.f0.frame_mismatch })
    }
}

fn taylor_steps(k: &OperatorMatrix, x0: &DVector<C64>, t: f64) -> Result<DVector<C64>> {
    let norm_inf = (0..k.dim()).map(|i| k.row(i).map(|(_, v)| v.norm()).sum::<f64>()).fold(0.0, f64::max);
    let steps = ((t * norm_inf / 0.5).ceil() as usize).max(1);
    let dt = t / steps as f64;
    let mut x = x0.clone();
    for _ in 0..steps {
        let mut term = x.clone();
        let mut acc = x.clone();
        for j in 1..=30 {
            term = k.matvec(&term)? * C64::new(-dt / j as f64, 0.0);
            acc += &term;
            if term.norm() <= 1e-17 * acc.norm() {
                break;
            }
        }
        x = acc;
    }
    Ok(x)
}

/// `exp(−K t) f0`.
pub fn evolve(k: &OperatorMatrix, f0: &StateVector, t: f64) -> Result<StateVector> {
    Propagator::new(k, f0)?.at(t)
}
