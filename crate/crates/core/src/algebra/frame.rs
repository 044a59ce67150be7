use super::operator::{Monomial, PhasePolyOperator};
use crate::error::{Error, Result};
use crate::C64;

/// Scaled coordinates `Qs = Q / q_scale`, `rs = r_scale · r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoordinateFrame {
    pub q_scale: f64,
    pub r_scale: f64,
}

impl CoordinateFrame {
    pub const IDENTITY: CoordinateFrame = CoordinateFrame { q_scale: 1.0, r_scale: 1.0 };

    pub fn new(q_scale: f64, r_scale: f64) -> Result<Self> {
        if !(q_scale > 0.0 && q_scale.is_finite()) {
            return Err(Error::InvalidParameter { name: "q_scale", value: q_scale });
        }
        if !(r_scale > 0.0 && r_scale.is_finite()) {
            return Err(Error::InvalidParameter { name: "r_scale", value: r_scale });
        }
        Ok(CoordinateFrame { q_scale, r_scale })
    }

    /// `(√(2b), √(b/2))`, in which `e^{-Q²/(2b) - b r²/2} = e^{-Qs² - rs²}`.
    pub fn thermal(b: f64) -> Result<Self> {
        Self::new(libm::sqrt(2.0 * b), libm::sqrt(b / 2.0))
    }

    pub fn to_scaled(&self, q: f64, r: f64) -> (f64, f64) {
        (q / self.q_scale, r * self.r_scale)
    }

    pub fn to_physical(&self, qs: f64, rs: f64) -> (f64, f64) {
        (qs * self.q_scale, rs / self.r_scale)
    }
}

/// Rewrites `a` in scaled coordinates: `Q → sQ·Qs`, `∂_Q → ∂_Qs / sQ`,
/// `r → rs / sr`, `∂_r → sr·∂_rs`.
pub fn rescale_coordinates(a: &PhasePolyOperator, frame: &CoordinateFrame) -> PhasePolyOperator {
    PhasePolyOperator::from_terms(a.terms().map(|(m, c)| {
        let factor = libm::pow(frame.q_scale, m.q as f64 - m.dq as f64)
            * libm::pow(frame.r_scale, m.dr as f64 - m.r as f64);
        (Monomial::new(m.q, m.r, m.dq, m.dr), c * C64::new(factor, 0.0))
    }))
}
