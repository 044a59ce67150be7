//! Normalized two-coordinate Gaussians
//! `f(Q, r) = √(2μ/π) exp(-2μQ² - iκQr - (μ+ν)r²/2)` and their images under
//! the seven exponentiated generators.
//!
//! `transform_gaussian(id, p, s)` returns the parameters of `exp(p·G) f_s`;
//! the normalization `∫ f(x, 0) dx = 1` is preserved by every generator, so
//! only `(μ, κ, ν)` are tracked.

use crate::algebra::{conjugate_linear, CoordinateFrame, GeneratorId, LinearPhaseOperator};
use crate::error::{Error, Result};
use crate::models::ModelPreset;
use crate::reduction::Step;
use crate::C64;

/// Slack applied to closed window endpoints and to `ν ≥ 0`.
const WINDOW_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianState {
    pub mu: f64,
    pub kappa: f64,
    pub nu: f64,
}

impl GaussianState {
    /// Requires finite parameters and `μ > 0`; `ν` may be negative (a
    /// normalizable but non-positive kernel) as long as `μ + ν > 0`.
    pub fn new(mu: f64, kappa: f64, nu: f64) -> Result<Self> {
        let ok = mu.is_finite() && kappa.is_finite() && nu.is_finite() && mu > 0.0 && mu + nu > 0.0;
        if !ok {
            return Err(Error::InvalidGaussian { mu, kappa, nu });
        }
        Ok(GaussianState { mu, kappa, nu })
    }

    /// Stationary state of KL with temperature parameter `b`:
    /// `μ = 1/(4b)`, `κ = 0`, `μ + ν = b`.
    pub fn thermal(b: f64) -> Result<Self> {
        Self::from_widths(1.0 / (4.0 * b), 0.0, b)
    }

    /// Builds the state from `μ`, `κ` and the `r²` width `μ + ν`.
    pub fn from_widths(mu: f64, kappa: f64, mu_plus_nu: f64) -> Result<Self> {
        Self::new(mu, kappa, mu_plus_nu - mu)
    }

    pub fn mu_plus_nu(&self) -> f64 {
        self.mu + self.nu
    }

    /// Positive semidefinite kernel: `μ > 0` and `ν ≥ 0` (up to rounding).
    pub fn is_physical(&self) -> bool {
        self.mu > 0.0 && self.nu >= -WINDOW_SLACK * (1.0 + self.mu.abs())
    }

    /// Frame `(1/√(2μ), √((μ+ν)/2))` in which the state reads
    /// `√(2μ/π) e^{-Q̄² - r̄²}` when `κ = 0`.
    pub fn normalized_frame(&self) -> Result<CoordinateFrame> {
        CoordinateFrame::new(libm::sqrt(0.5 / self.mu), libm::sqrt(self.mu_plus_nu() / 2.0))
    }

    pub fn normalization(&self) -> f64 {
        libm::sqrt(2.0 * self.mu / core::f64::consts::PI)
    }

    /// Exponent `-2μQ² - iκQr - (μ+ν)r²/2`.
    pub fn exponent(&self, q: f64, r: f64) -> C64 {
        C64::new(-2.0 * self.mu * q * q - 0.5 * self.mu_plus_nu() * r * r, -self.kappa * q * r)
    }

    pub fn evaluate(&self, q: f64, r: f64) -> C64 {
        self.exponent(q, r).exp() * self.normalization()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.mu - other.mu).abs().max((self.kappa - other.kappa).abs()).max((self.nu - other.nu).abs())
    }
}

/// `Δ = 4μ(μ+ν) + κ²`.
pub fn delta(s: &GaussianState) -> f64 {
    4.0 * s.mu * s.mu_plus_nu() + s.kappa * s.kappa
}

/// Closed parameter interval within which `exp(p·G)` keeps the physical
/// state `s` physical. Unbounded sides are infinite.
pub fn positivity_window(id: GeneratorId, s: &GaussianState) -> (f64, f64) {
    let (mu, kappa) = (s.mu, s.kappa);
    let nu = s.nu.max(0.0);
    let d = delta(s);
    match id {
        GeneratorId::IL0 | GeneratorId::IM1 | GeneratorId::IM2 => (f64::NEG_INFINITY, f64::INFINITY),
        GeneratorId::O0MI => (0.5 * libm::log(mu / s.mu_plus_nu()), f64::INFINITY),
        GeneratorId::OPLUS => {
            let root = libm::sqrt(((1.0 + d) * (1.0 + d) - 16.0 * mu * nu).max(0.0));
            ((-(1.0 + d) + root) / (4.0 * mu), f64::INFINITY)
        }
        GeneratorId::L1PLUS => {
            let root = libm::sqrt((1.0 - d) * (1.0 - d) + 16.0 * mu * nu);
            (((1.0 - d) - root) / (4.0 * mu), ((1.0 - d) + root) / (4.0 * mu))
        }
        GeneratorId::L2PLUS => {
            let root = libm::sqrt(kappa * kappa + 4.0 * mu * nu);
            ((kappa - root) / (2.0 * mu), (kappa + root) / (2.0 * mu))
        }
    }
}

fn inside(p: f64, window: (f64, f64)) -> bool {
    let tol = |x: f64| if x.is_finite() { WINDOW_SLACK * (1.0 + x.abs()) } else { 0.0 };
    p >= window.0 - tol(window.0) && p <= window.1 + tol(window.1)
}

/// Parameter map of `exp(p·G)` without any positivity check; only the
/// denominators are required to stay positive.
fn map_unchecked(id: GeneratorId, p: f64, s: &GaussianState) -> Result<GaussianState> {
    let (mu, kappa, w) = (s.mu, s.kappa, s.mu_plus_nu());
    let d = delta(s);
    let degenerate = |denominator: f64| Error::DegenerateDenominator { generator: id, param: p, denominator };
    let (mu_p, kappa_p, w_p) = match id {
        GeneratorId::IL0 => {
            let (s2, c2) = (libm::sin(p / 2.0), libm::cos(p / 2.0));
            let den = (c2 + kappa * s2) * (c2 + kappa * s2) + 4.0 * mu * w * s2 * s2;
            if !(den > 0.0) {
                return Err(degenerate(den));
            }
            let k = kappa * libm::cos(p) - 0.5 * (1.0 - d) * libm::sin(p);
            (mu / den, k / den, w / den)
        }
        GeneratorId::IM1 => {
            let (s2, c2) = (libm::sinh(p / 2.0), libm::cosh(p / 2.0));
            let den = (c2 - kappa * s2) * (c2 - kappa * s2) + 4.0 * mu * w * s2 * s2;
            if !(den > 0.0) {
                return Err(degenerate(den));
            }
            let k = kappa * libm::cosh(p) - 0.5 * (1.0 + d) * libm::sinh(p);
            (mu / den, k / den, w / den)
        }
        GeneratorId::IM2 => {
            let e = libm::exp(-p);
            (mu * e, kappa * e, w * e)
        }
        GeneratorId::O0MI => (mu * libm::exp(-p), kappa, w * libm::exp(p)),
        GeneratorId::OPLUS => {
            let den = 1.0 + 2.0 * mu * p;
            if !(den > 0.0) {
                return Err(degenerate(den));
            }
            (mu / den, kappa / den, (w + 0.5 * (1.0 + d) * p + mu * p * p) / den)
        }
        GeneratorId::L1PLUS => {
            let den = 1.0 - 2.0 * mu * p;
            if !(den > 0.0) {
                return Err(degenerate(den));
            }
            (mu / den, kappa / den, (w + 0.5 * (1.0 - d) * p - mu * p * p) / den)
        }
        GeneratorId::L2PLUS => (mu, kappa - 2.0 * mu * p, w + kappa * p - mu * p * p),
    };
    Ok(GaussianState { mu: mu_p, kappa: kappa_p, nu: w_p - mu_p })
}

/// Parameters of `exp(p·G) f_s`. A physical input must stay physical: the
/// parameter is checked against [`positivity_window`].
pub fn transform_gaussian(id: GeneratorId, param: f64, s: &GaussianState) -> Result<GaussianState> {
    if s.is_physical() {
        let window = positivity_window(id, s);
        if !inside(param, window) {
            return Err(Error::PositivityViolation { step: None, generator: Some(id), param, window });
        }
    }
    map_unchecked(id, param, s)
}

/// Left fold of [`transform_gaussian`]; a violation reports the index of the
/// offending step.
pub fn apply_plan_gaussian(steps: &[Step], s: &GaussianState) -> Result<GaussianState> {
    steps.iter().enumerate().try_fold(*s, |acc, (i, step)| {
        transform_gaussian(step.generator, step.param, &acc).map_err(|e| match e {
            Error::PositivityViolation { generator, param, window, .. } => {
                Error::PositivityViolation { step: Some(i), generator, param, window }
            }
            other => other,
        })
    })
}

/// Like [`apply_plan_gaussian`] but without positivity requirements on the
/// intermediate states: the annihilators `A1 = ∂Q + 4μQ + iκr` and
/// `A2 = ∂r + iκQ + (μ+ν)r` of `s` are conjugated through all steps at once
/// and the square is completed only at the end. Step-by-step maps can pass
/// through a vanishing denominator even when the composite is regular.
///
/// Used for eigenfunctions of similar Liouvillians, whose intermediate
/// Gaussians are not density matrices in general. The final state must be
/// normalizable (`μ > 0`, `μ + ν > 0`).
pub fn transport_gaussian(steps: &[Step], s: &GaussianState) -> Result<GaussianState> {
    let i = C64::new(0.0, 1.0);
    let zero = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let a1 = LinearPhaseOperator::new(C64::new(4.0 * s.mu, 0.0), i * s.kappa, one, zero);
    let a2 = LinearPhaseOperator::new(i * s.kappa, C64::new(s.mu_plus_nu(), 0.0), zero, one);
    let conj = |l: LinearPhaseOperator| steps.iter().fold(l, |acc, st| conjugate_linear(st.generator, st.param, &acc));
    let (b1, b2) = (conj(a1), conj(a2));
    // [B1; B2] = D·[∂Q + ..; ∂r + ..]: new exponent matrix is D⁻¹X.
    let det = b1.dq * b2.dr - b1.dr * b2.dq;
    let scale = b1.max_abs_diff(&LinearPhaseOperator::q(0.0)).max(b2.max_abs_diff(&LinearPhaseOperator::q(0.0)));
    if !(det.norm() > 1e-14 * scale * scale) {
        let generator = steps.last().map_or(GeneratorId::IM2, |st| st.generator);
        return Err(Error::DegenerateDenominator { generator, param: f64::NAN, denominator: det.norm() });
    }
    let m = |row: usize, col: usize| {
        let (xq, xr) = ([b1.q, b2.q], [b1.r, b2.r]);
        let x = if col == 0 { xq } else { xr };
        if row == 0 {
            (b2.dr * x[0] - b1.dr * x[1]) / det
        } else {
            (b1.dq * x[1] - b2.dq * x[0]) / det
        }
    };
    let (mqq, mqr, mrq, mrr) = (m(0, 0), m(0, 1), m(1, 0), m(1, 1));
    let mu = mqq.re / 4.0;
    let kappa = (mqr / i).re;
    let width = mrr.re;
    let size = mqq.norm() + mqr.norm() + mrr.norm();
    let imaginary = (mqq.im / 4.0).abs().max(mqr.re.abs()).max(mrr.im.abs()).max((mqr - mrq).norm());
    if imaginary > 1e-9 * size {
        return Err(Error::InvalidGaussian { mu, kappa, nu: width - mu });
    }
    GaussianState::from_widths(mu, kappa, width)
}

/// Stationary Gaussian of a model preset and its normalized frame, in which
/// the state reads `e^{-Q̄² - r̄²}/√(2π b+)`.
pub fn stationary_preset(model: &ModelPreset) -> Result<(GaussianState, CoordinateFrame)> {
    model.validate()?;
    let (b_plus, b_minus) = model.widths();
    let mu = 1.0 / (4.0 * b_plus);
    let nu = b_minus - mu;
    if !(nu >= 0.0) {
        return Err(Error::PositivityViolation {
            step: None,
            generator: None,
            param: nu,
            window: (0.0, f64::INFINITY),
        });
    }
    let state = GaussianState::new(mu, 0.0, nu)?;
    let frame = CoordinateFrame::new(libm::sqrt(2.0 * b_plus), libm::sqrt(b_minus / 2.0))?;
    Ok((state, frame))
}
