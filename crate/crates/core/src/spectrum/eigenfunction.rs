use alloc::vec::Vec;

use super::label::{eigenvalue, EigenLabel};
use super::poly::{pi_polynomial, BivariatePoly};
use crate::algebra::{conjugate_linear, CoordinateFrame, LinearPhaseOperator, LiouvillianCoeffs, PhasePolyOperator};
use crate::error::{Error, Result};
use crate::gauss::{transport_gaussian, GaussianState};
use crate::reduction::{ReductionPlan, Step, REPLAY_TOL};
use crate::C64;

/// `poly(q_op, r_op) g`, where `q_op`, `r_op` are commuting first-order
/// operators and `g` a normalized Gaussian.
#[derive(Debug, Clone, PartialEq)]
pub struct AppliedEigenfunction {
    /// `Π̃±mn` in the abstract variables `(Q̂′, r̂′)`.
    pub poly: BivariatePoly,
    pub q_op: LinearPhaseOperator,
    pub r_op: LinearPhaseOperator,
    pub gaussian: GaussianState,
    /// Normalized frame of the Gaussian (for display and numerical bases).
    pub frame: CoordinateFrame,
    pub label: EigenLabel,
    pub eigenvalue: C64,
}

impl AppliedEigenfunction {
    /// `[Q̂′, r̂′]`, which vanishes for every valid eigenfunction.
    pub fn operator_commutator(&self) -> C64 {
        self.q_op.commutator(&self.r_op)
    }

    /// Polynomial `P(Q, r)` in physical coordinates with `f = P·g`.
    pub fn density_polynomial(&self) -> BivariatePoly {
        let max_j = self.poly.terms().map(|(&(j, _), _)| j).max().unwrap_or(0);
        let max_k = self.poly.terms().map(|(&(_, k), _)| k).max().unwrap_or(0);
        // q_pows[j] = Q̂′^j · 1; the operators commute, so r̂′^k is applied last.
        let mut q_pows = Vec::with_capacity(max_j as usize + 1);
        q_pows.push(BivariatePoly::one());
        for j in 0..max_j as usize {
            let next = apply_linear(&self.q_op, &q_pows[j], &self.gaussian);
            q_pows.push(next);
        }
        let mut out = BivariatePoly::zero();
        for (j, base) in q_pows.iter().enumerate() {
            let mut cur = base.clone();
            for k in 0..=max_k {
                let c = self.poly.coeff(j as u32, k);
                if c != C64::new(0.0, 0.0) {
                    out = out.add(&cur.scale(c));
                }
                if k < max_k {
                    cur = apply_linear(&self.r_op, &cur, &self.gaussian);
                }
            }
        }
        out
    }

    pub fn evaluate(&self, q: f64, r: f64) -> C64 {
        self.density_polynomial().evaluate(q, r) * self.gaussian.evaluate(q, r)
    }

    /// Samples `f` at many points while expanding the polynomial only once.
    pub fn evaluator(&self) -> impl Fn(f64, f64) -> C64 + '_ {
        let p = self.density_polynomial();
        move |q, r| p.evaluate(q, r) * self.gaussian.evaluate(q, r)
    }
}

/// `L (P g) = (L P + P·(log-derivative terms)) g` for a first-order `L`.
fn apply_linear(l: &LinearPhaseOperator, p: &BivariatePoly, g: &GaussianState) -> BivariatePoly {
    let i = C64::new(0.0, 1.0);
    let mut out = p.shift(1, 0).scale(l.q).add(&p.shift(0, 1).scale(l.r));
    if l.dq != C64::new(0.0, 0.0) {
        // ∂_Q g = (-4μQ - iκr) g
        let d = p
            .d_x()
            .add(&p.shift(1, 0).scale(C64::new(-4.0 * g.mu, 0.0)))
            .add(&p.shift(0, 1).scale(-i * g.kappa));
        out = out.add(&d.scale(l.dq));
    }
    if l.dr != C64::new(0.0, 0.0) {
        // ∂_r g = (-iκQ - (μ+ν)r) g
        let d = p
            .d_y()
            .add(&p.shift(1, 0).scale(-i * g.kappa))
            .add(&p.shift(0, 1).scale(C64::new(-g.mu_plus_nu(), 0.0)));
        out = out.add(&d.scale(l.dr));
    }
    out
}

/// Density polynomial of `A (P g)` for a normal-ordered operator `A`:
/// derivatives act first, then the multiplications.
pub fn apply_operator(a: &PhasePolyOperator, p: &BivariatePoly, g: &GaussianState) -> BivariatePoly {
    let dq = LinearPhaseOperator::d_q(1.0);
    let dr = LinearPhaseOperator::d_r(1.0);
    let mut out = BivariatePoly::zero();
    for (m, c) in a.terms() {
        let mut cur = p.clone();
        for _ in 0..m.dr {
            cur = apply_linear(&dr, &cur, g);
        }
        for _ in 0..m.dq {
            cur = apply_linear(&dq, &cur, g);
        }
        out = out.add(&cur.shift(m.q, m.r).scale(*c));
    }
    out
}

/// `Π̃±mn(Q̃, r̃) f_KL` with `Q̃ = Q/√(2b)`, `r̃ = √(b/2) r`.
pub fn kl_eigenfunction(label: &EigenLabel, b: f64, omega0: f64, gamma: f64) -> Result<AppliedEigenfunction> {
    if !(b >= 0.5) || !b.is_finite() {
        return Err(Error::InvalidParameter { name: "b", value: b });
    }
    let frame = CoordinateFrame::thermal(b)?;
    Ok(AppliedEigenfunction {
        poly: pi_polynomial(label),
        q_op: LinearPhaseOperator::q(1.0 / frame.q_scale),
        r_op: LinearPhaseOperator::r(frame.r_scale),
        gaussian: GaussianState::thermal(b)?,
        frame,
        label: *label,
        eigenvalue: eigenvalue(label, omega0, gamma),
    })
}

/// Steps of `S = R⁻¹` for the plan `R`, in application order.
pub fn inverse_steps(plan: &ReductionPlan) -> Vec<Step> {
    plan.steps.iter().rev().map(|s| Step::new(s.generator, -s.param)).collect()
}

/// Eigenfunction of `source` obtained by carrying the KL eigenfunction of
/// the plan's target back through the inverse plan.
///
/// Intermediate Gaussians may be non-positive kernels; only the final one
/// has to be normalizable.
pub fn transformed_eigenfunction(
    plan: &ReductionPlan,
    label: &EigenLabel,
    source: &LiouvillianCoeffs,
) -> Result<AppliedEigenfunction> {
    let residual = plan.replay_residual(source);
    let scale = source.to_array().iter().fold(1.0f64, |a, x| a.max(x.abs()));
    if residual > REPLAY_TOL * scale {
        return Err(Error::ReplayMismatch { residual });
    }
    let kl = kl_eigenfunction(label, plan.b, plan.omega0, source.gamma)?;
    let steps = inverse_steps(plan);
    let conj = |l: LinearPhaseOperator| steps.iter().fold(l, |acc, s| conjugate_linear(s.generator, s.param, &acc));
    let gaussian = transport_gaussian(&steps, &kl.gaussian)?;
    Ok(AppliedEigenfunction {
        poly: kl.poly,
        q_op: conj(kl.q_op),
        r_op: conj(kl.r_op),
        gaussian,
        frame: gaussian.normalized_frame()?,
        label: *label,
        eigenvalue: kl.eigenvalue,
    })
}
