//! Similarity reduction of a generic Liouvillian to KL form.
//!
//! Step 1 rotates the unitary part `(h0, h1, h2)` onto `(2ω₀, 0, 0)` with
//! `U0(θ)` followed by `U1(φ)`. Step 2 translates the diffusion vector with
//! the mutually commuting `O+`, `L1+`, `L2+` so that it lands on
//! `(-2γb, 0, 0)`. The relaxation constant `γ` is never touched.

use alloc::vec::Vec;

use crate::algebra::{conjugate_coefficients, GeneratorId, LiouvillianCoeffs};
use crate::error::{Error, Result};
use crate::linalg;

pub const REPLAY_TOL: f64 = 1e-10;
pub const DEFAULT_B_TARGET: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UFamily {
    U0,
    U1,
    U2,
}

impl UFamily {
    pub fn generator(self) -> GeneratorId {
        match self {
            UFamily::U0 => GeneratorId::IL0,
            UFamily::U1 => GeneratorId::IM1,
            UFamily::U2 => GeneratorId::IM2,
        }
    }
}

/// Action of an ordinary transformation on `(h0, h1, h2)` or `(g+, g1, g2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UMatrix(pub [[f64; 3]; 3]);

impl UMatrix {
    pub fn identity() -> Self {
        UMatrix([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    }

    pub fn apply(&self, v: &[f64; 3]) -> [f64; 3] {
        linalg::matvec3(&self.0, v)
    }

    pub fn mul(&self, other: &UMatrix) -> UMatrix {
        let mut out = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = (0..3).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        UMatrix(out)
    }

    pub fn det(&self) -> f64 {
        linalg::det3(&self.0)
    }
}

pub fn u_matrix(which: UFamily, param: f64) -> UMatrix {
    let p = param;
    match which {
        UFamily::U0 => {
            let (s, c) = (libm::sin(p), libm::cos(p));
            UMatrix([[1.0, 0.0, 0.0], [0.0, c, s], [0.0, -s, c]])
        }
        UFamily::U1 => {
            let (s, c) = (libm::sinh(p), libm::cosh(p));
            UMatrix([[c, 0.0, s], [0.0, 1.0, 0.0], [s, 0.0, c]])
        }
        UFamily::U2 => {
            let (s, c) = (libm::sinh(p), libm::cosh(p));
            UMatrix([[c, -s, 0.0], [-s, c, 0.0], [0.0, 0.0, 1.0]])
        }
    }
}

/// `h0² - h1² - h2²`.
pub fn minkowski_norm(h: &[f64; 3]) -> f64 {
    h[0] * h[0] - h[1] * h[1] - h[2] * h[2]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Step1 {
    /// Parameter of the `U0` conjugation, applied first.
    pub theta: f64,
    /// Parameter of the `U1` conjugation, applied second.
    pub phi: f64,
    pub omega0: f64,
}

fn step1_validate(h: &[f64; 3]) -> Result<f64> {
    let disc = minkowski_norm(h);
    if h.iter().all(|x| *x == 0.0) {
        return Ok(0.0);
    }
    if disc < 0.0 {
        return Err(Error::Overdamped { discriminant: disc });
    }
    if disc == 0.0 {
        return Err(Error::CriticalDamping);
    }
    if h[0] <= 0.0 {
        return Err(Error::NonPositiveH0 { h0: h[0] });
    }
    Ok(disc)
}

/// Parameters `(θ, φ)` with `U1(φ)·U0(θ)·h = (2ω₀, 0, 0)`.
///
/// The angle and rapidity are fixed only up to sign and a π shift by their
/// defining tangents; the four combinations are tried in turn and the first
/// one that lands on the target (checked by applying the matrices) wins.
pub fn step1_solve(h: &[f64; 3]) -> Result<Step1> {
    let disc = step1_validate(h)?;
    if disc == 0.0 {
        return Ok(Step1 { theta: 0.0, phi: 0.0, omega0: 0.0 });
    }
    let omega0 = 0.5 * libm::sqrt(disc);
    let rho = libm::hypot(h[1], h[2]);
    let base_theta = if h[2] != 0.0 {
        libm::atan(-h[1] / h[2])
    } else if h[1] != 0.0 {
        core::f64::consts::FRAC_PI_2
    } else {
        0.0
    };
    let rapidity = libm::atanh(rho / h[0]);
    let target = [2.0 * omega0, 0.0, 0.0];
    let scale = h.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    let theta_candidates = [base_theta, base_theta + core::f64::consts::PI];
    let phi_candidates = [rapidity, -rapidity];
    let mut best: Option<(f64, Step1)> = None;
    for &theta in &theta_candidates {
        for &phi in &phi_candidates {
            let out = u_matrix(UFamily::U1, phi).apply(&u_matrix(UFamily::U0, theta).apply(h));
            let err = (0..3).map(|k| (out[k] - target[k]).abs()).fold(0.0, f64::max);
            if best.map_or(true, |(e, _)| err < e) {
                best = Some((err, Step1 { theta, phi, omega0 }));
            }
            if err <= 1e-12 * scale {
                return Ok(Step1 { theta, phi, omega0 });
            }
        }
    }
    // Rounding near the light cone; keep the closest candidate.
    Ok(best.expect("four candidates were tried").1)
}

/// Translation matrix of step 2: `g' = g + G·η` for `η = (η0, η1, η2)`
/// driving `O+`, `L1+`, `L2+`.
pub fn g_matrix(h: &[f64; 3], gamma: f64) -> [[f64; 3]; 3] {
    let [h0, h1, h2] = *h;
    [[-gamma, h2, -h1], [h2, -gamma, -h0], [-h1, h0, -gamma]]
}

/// Closed form `-γ(h0² - h1² - h2² + γ²)`.
pub fn g_matrix_det(h: &[f64; 3], gamma: f64) -> f64 {
    -gamma * (minkowski_norm(h) + gamma * gamma)
}

/// `η = G⁻¹(g_target - g_u)` with `h = (2ω₀, 0, 0)`.
pub fn step2_solve(omega0: f64, gamma: f64, g_u: &[f64; 3], g_target: &[f64; 3]) -> Result<[f64; 3]> {
    let h = [2.0 * omega0, 0.0, 0.0];
    let det = g_matrix_det(&h, gamma);
    if gamma == 0.0 || det == 0.0 {
        return Err(Error::SingularG { det });
    }
    let delta = [g_target[0] - g_u[0], g_target[1] - g_u[1], g_target[2] - g_u[2]];
    linalg::solve3(&g_matrix(&h, gamma), &delta).ok_or(Error::SingularG { det })
}

/// `α = ln(2γb / (-g+))`, so that `G0(α)` maps `g+` to `-2γb`.
pub fn rescale_b(gplus: f64, gamma: f64, b_target: f64) -> Result<f64> {
    if gplus >= 0.0 {
        return Err(Error::Sign { gplus });
    }
    if !(gamma > 0.0) {
        return Err(Error::InvalidParameter { name: "gamma", value: gamma });
    }
    if !(b_target > 0.0) {
        return Err(Error::InvalidParameter { name: "b_target", value: b_target });
    }
    Ok(libm::log(2.0 * gamma * b_target / -gplus))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Step {
    pub generator: GeneratorId,
    pub param: f64,
}

impl Step {
    pub fn new(generator: GeneratorId, param: f64) -> Self {
        Step { generator, param }
    }
}

/// Ordered conjugations `K → exp(pG) K exp(-pG)`; applying them in order to
/// the source coefficients yields `target`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionPlan {
    pub steps: Vec<Step>,
    pub omega0: f64,
    pub b: f64,
    pub target: LiouvillianCoeffs,
}

impl ReductionPlan {
    pub fn replay(&self, source: &LiouvillianCoeffs) -> LiouvillianCoeffs {
        replay(&self.steps, source)
    }

    pub fn replay_residual(&self, source: &LiouvillianCoeffs) -> f64 {
        self.replay(source).max_abs_diff(&self.target)
    }

    /// Appends a `G0` step moving the KL temperature parameter to `b`.
    pub fn retarget(&self, b: f64) -> Result<ReductionPlan> {
        let gamma = self.target.gamma;
        let alpha = rescale_b(self.target.g[0], gamma, b)?;
        let mut steps = self.steps.clone();
        if alpha != 0.0 {
            steps.push(Step::new(GeneratorId::O0MI, alpha));
        }
        let target = LiouvillianCoeffs::kl(self.omega0, gamma, b);
        Ok(ReductionPlan { steps, omega0: self.omega0, b, target })
    }
}

pub fn replay(steps: &[Step], source: &LiouvillianCoeffs) -> LiouvillianCoeffs {
    steps.iter().fold(*source, |c, s| conjugate_coefficients(s.generator, s.param, &c))
}

/// Builds the plan taking `c` to `(2ω₀, 0, 0; γ; -2γ·b_target, 0, 0)`.
/// Steps with a zero parameter are omitted.
pub fn reduce_to_kl(c: &LiouvillianCoeffs, b_target: f64) -> Result<ReductionPlan> {
    if !(b_target >= 0.5) {
        return Err(Error::InvalidParameter { name: "b_target", value: b_target });
    }
    let s1 = step1_solve(&c.h)?;
    if c.gamma <= 0.0 {
        return Err(Error::SingularG { det: g_matrix_det(&[2.0 * s1.omega0, 0.0, 0.0], c.gamma) });
    }
    let mut steps = Vec::new();
    let push = |steps: &mut Vec<Step>, g, p: f64| {
        if p != 0.0 {
            steps.push(Step::new(g, p));
        }
    };
    push(&mut steps, GeneratorId::IL0, s1.theta);
    push(&mut steps, GeneratorId::IM1, s1.phi);
    let after1 = replay(&steps, c);
    let g_target = [-2.0 * c.gamma * b_target, 0.0, 0.0];
    let eta = step2_solve(s1.omega0, c.gamma, &after1.g, &g_target)?;
    push(&mut steps, GeneratorId::OPLUS, eta[0]);
    push(&mut steps, GeneratorId::L1PLUS, eta[1]);
    push(&mut steps, GeneratorId::L2PLUS, eta[2]);
    let target = LiouvillianCoeffs::kl(s1.omega0, c.gamma, b_target);
    let plan = ReductionPlan { steps, omega0: s1.omega0, b: b_target, target };
    let residual = plan.replay_residual(c);
    let scale = c.to_array().iter().fold(1.0f64, |a, x| a.max(x.abs()));
    if residual > REPLAY_TOL * scale {
        return Err(Error::ReplayMismatch { residual });
    }
    Ok(plan)
}
