//! Closed-form eigenfunctions of the CL and Markovian HPZ models for the
//! lowest modes, written in each model's normalized frame
//! `Q̄ = Q/√(2b+)`, `r̄ = √(b-/2) r`. They are independent of the reduction
//! machinery and serve as regression fixtures.

use super::eigenfunction::AppliedEigenfunction;
use super::label::{eigenvalue, EigenLabel, Sign};
use super::poly::BivariatePoly;
use crate::algebra::LinearPhaseOperator;
use crate::error::{Error, Result};
use crate::gauss::stationary_preset;
use crate::models::ModelPreset;
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureForm {
    /// CL modes written with the rapidity `φ` (`sinh φ = -γ/(2ω₀)`).
    Hyperbolic,
    /// Modes written with the eigenvalues `λ±11 = ±iω₀ + γ/2`.
    Spectral,
}

pub fn closed_form_fixture(model: &ModelPreset, label: &EigenLabel, form: FixtureForm) -> Result<AppliedEigenfunction> {
    let supported = matches!((label.m, label.n), (1, 1) | (1, 0));
    if !supported {
        return Err(Error::UnsupportedLabel { m: label.m, n: label.n });
    }
    let (gaussian, frame) = stationary_preset(model)?;
    let omega0 = model.omega0()?;
    let gamma = model.gamma();
    let poly = match (*model, form) {
        (ModelPreset::Cl { .. }, FixtureForm::Hyperbolic) => cl_hyperbolic(label, omega0, gamma),
        (ModelPreset::Cl { omega0_prime, .. }, FixtureForm::Spectral) => {
            hpz_spectral(label, omega0_prime, omega0, gamma, 1.0, 1.0)
        }
        (ModelPreset::Hpz { omega0_prime, .. }, FixtureForm::Spectral) => {
            let (bp, bm) = model.widths();
            hpz_spectral(label, omega0_prime, omega0, gamma, bp, bm)
        }
        _ => return Err(Error::UnsupportedModel),
    };
    Ok(AppliedEigenfunction {
        poly,
        q_op: LinearPhaseOperator::q(1.0 / frame.q_scale),
        r_op: LinearPhaseOperator::r(frame.r_scale),
        gaussian,
        frame,
        label: *label,
        eigenvalue: eigenvalue(label, omega0, gamma),
    })
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `Π̄±11 = √coshφ (-[sinh(φ/2) ± i cosh(φ/2)] Q̄ + [±sinh(φ/2) - i cosh(φ/2)] r̄)`,
/// `Π̄10 = coshφ [coshφ (½ - Q̄² + r̄²) - 2i sinhφ Q̄ r̄]`.
fn cl_hyperbolic(label: &EigenLabel, omega0: f64, gamma: f64) -> BivariatePoly {
    let sinh_phi = -gamma / (2.0 * omega0);
    let phi = libm::asinh(sinh_phi);
    let cosh_phi = libm::cosh(phi);
    let (sh2, ch2) = (libm::sinh(phi / 2.0), libm::cosh(phi / 2.0));
    if label.n == 1 {
        let s = label.sign.factor();
        let pre = libm::sqrt(cosh_phi);
        BivariatePoly::from_terms([
            ((1, 0), c(-sh2, -s * ch2) * pre),
            ((0, 1), c(s * sh2, -ch2) * pre),
        ])
    } else {
        BivariatePoly::from_terms([
            ((0, 0), c(0.5 * cosh_phi * cosh_phi, 0.0)),
            ((2, 0), c(-cosh_phi * cosh_phi, 0.0)),
            ((0, 2), c(cosh_phi * cosh_phi, 0.0)),
            ((1, 1), c(0.0, -2.0 * sinh_phi * cosh_phi)),
        ])
    }
}

/// HPZ modes with `b± = b_HPZ + {d/(2ω₀′), 0}`; CL is the case `b+ = b-`,
/// passed as `(1, 1)` since only ratios enter.
///
/// `Π̄+11 = √(iω₀′)/ω₀ √(b+ + b-) (i√(λ-/(2b+)) Q̄ + √(λ+/(2b-)) r̄)`,
/// `Π̄-11 = √(iω₀′)/ω₀ √(b+ + b-) (√(λ+/(2b+)) Q̄ - i√(λ-/(2b-)) r̄)`,
/// `Π̄10 = (ω₀′/ω₀)(b+ + b-)/(2b+) [(ω₀′/ω₀)(½ - Q̄² + (b+/b-) r̄²) + i(γ/ω₀)√(b+/b-) Q̄ r̄]`.
fn hpz_spectral(label: &EigenLabel, omega0_prime: f64, omega0: f64, gamma: f64, bp: f64, bm: f64) -> BivariatePoly {
    let i = c(0.0, 1.0);
    let lp = eigenvalue(&EigenLabel { m: 1, n: 1, sign: Sign::Plus }, omega0, gamma);
    let lm = eigenvalue(&EigenLabel { m: 1, n: 1, sign: Sign::Minus }, omega0, gamma);
    if label.n == 1 {
        let pre = (i * omega0_prime).sqrt() / omega0 * libm::sqrt(bp + bm);
        let (q, r) = match label.sign {
            Sign::Plus => (i * (lm / (2.0 * bp)).sqrt(), (lp / (2.0 * bm)).sqrt()),
            Sign::Minus => ((lp / (2.0 * bp)).sqrt(), -i * (lm / (2.0 * bm)).sqrt()),
        };
        BivariatePoly::from_terms([((1, 0), q * pre), ((0, 1), r * pre)])
    } else {
        let w = omega0_prime / omega0;
        let pre = w * (bp + bm) / (2.0 * bp);
        BivariatePoly::from_terms([
            ((0, 0), c(pre * w * 0.5, 0.0)),
            ((2, 0), c(-pre * w, 0.0)),
            ((0, 2), c(pre * w * bp / bm, 0.0)),
            ((1, 1), c(0.0, pre * gamma / omega0 * libm::sqrt(bp / bm))),
        ])
    }
}
