//! Model presets: Kossakowski-Lindblad (KL), Caldeira-Leggett (CL) and the
//! Markovian Hu-Paz-Zhang (HPZ) master equation.

use crate::algebra::{CoordinateFrame, LiouvillianCoeffs};
use crate::error::{Error, Result};
use crate::gauss::{stationary_preset, GaussianState};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelPreset {
    /// `(2ω₀, 0, 0; γ; -2γb, 0, 0)`.
    Kl { omega0: f64, gamma: f64, b: f64 },
    /// `(2ω₀′, 0, -γ; γ; -2γb_CL, -2γb_CL, 0)` with bare frequency `ω₀′`.
    Cl { omega0_prime: f64, gamma: f64, b_cl: f64 },
    /// CL with `b_CL → b_HPZ` plus the anomalous diffusion `g2 = -d`.
    Hpz { omega0_prime: f64, gamma: f64, b_hpz: f64, d: f64 },
}

impl ModelPreset {
    /// CL model at the same temperature as the KL model with parameter `b`:
    /// `b_CL = b·ω₀/ω₀′`.
    pub fn cl_from_kl_temperature(omega0_prime: f64, gamma: f64, b: f64) -> Result<Self> {
        let omega0 = renormalized_frequency(omega0_prime, gamma)?;
        let m = ModelPreset::Cl { omega0_prime, gamma, b_cl: b * omega0 / omega0_prime };
        m.validate()?;
        Ok(m)
    }

    pub fn name(&self) -> &'static str {
        match self {
            ModelPreset::Kl { .. } => "kl",
            ModelPreset::Cl { .. } => "cl",
            ModelPreset::Hpz { .. } => "hpz",
        }
    }

    pub fn gamma(&self) -> f64 {
        match *self {
            ModelPreset::Kl { gamma, .. } | ModelPreset::Cl { gamma, .. } | ModelPreset::Hpz { gamma, .. } => gamma,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let finite = |name: &'static str, x: f64| {
            if x.is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidParameter { name, value: x })
            }
        };
        let gamma = self.gamma();
        finite("gamma", gamma)?;
        if gamma < 0.0 {
            return Err(Error::InvalidParameter { name: "gamma", value: gamma });
        }
        match *self {
            ModelPreset::Kl { omega0, b, .. } => {
                finite("omega0", omega0)?;
                finite("b", b)?;
                if omega0 <= 0.0 {
                    return Err(Error::NonPositiveH0 { h0: 2.0 * omega0 });
                }
                if b < 0.5 {
                    return Err(Error::InvalidParameter { name: "b", value: b });
                }
            }
            ModelPreset::Cl { omega0_prime, b_cl, .. } => {
                finite("omega0_prime", omega0_prime)?;
                finite("b_cl", b_cl)?;
                renormalized_frequency(omega0_prime, gamma)?;
                if b_cl <= 0.0 {
                    return Err(Error::InvalidParameter { name: "b_cl", value: b_cl });
                }
            }
            ModelPreset::Hpz { omega0_prime, b_hpz, d, .. } => {
                finite("omega0_prime", omega0_prime)?;
                finite("b_hpz", b_hpz)?;
                finite("d", d)?;
                renormalized_frequency(omega0_prime, gamma)?;
                if b_hpz <= 0.0 {
                    return Err(Error::InvalidParameter { name: "b_hpz", value: b_hpz });
                }
                if b_hpz + d / (2.0 * omega0_prime) <= 0.0 {
                    return Err(Error::InvalidParameter { name: "d", value: d });
                }
            }
        }
        Ok(())
    }

    pub fn coefficients(&self) -> LiouvillianCoeffs {
        match *self {
            ModelPreset::Kl { omega0, gamma, b } => LiouvillianCoeffs::kl(omega0, gamma, b),
            ModelPreset::Cl { omega0_prime, gamma, b_cl } => LiouvillianCoeffs {
                h: [2.0 * omega0_prime, 0.0, -gamma],
                gamma,
                g: [-2.0 * gamma * b_cl, -2.0 * gamma * b_cl, 0.0],
            },
            ModelPreset::Hpz { omega0_prime, gamma, b_hpz, d } => LiouvillianCoeffs {
                h: [2.0 * omega0_prime, 0.0, -gamma],
                gamma,
                g: [-2.0 * gamma * b_hpz, -2.0 * gamma * b_hpz, -d],
            },
        }
    }

    /// Renormalized frequency `ω₀` (`√(ω₀′² - γ²/4)` for CL and HPZ).
    pub fn omega0(&self) -> Result<f64> {
        match *self {
            ModelPreset::Kl { omega0, .. } => Ok(omega0),
            ModelPreset::Cl { omega0_prime, gamma, .. } | ModelPreset::Hpz { omega0_prime, gamma, .. } => {
                renormalized_frequency(omega0_prime, gamma)
            }
        }
    }

    /// `(b+, b-)`: the stationary state is `e^{-Q²/(2b+) - b- r²/2}/√(2π b+)`.
    pub fn widths(&self) -> (f64, f64) {
        match *self {
            ModelPreset::Kl { b, .. } => (b, b),
            ModelPreset::Cl { b_cl, .. } => (b_cl, b_cl),
            ModelPreset::Hpz { omega0_prime, b_hpz, d, .. } => (b_hpz + d / (2.0 * omega0_prime), b_hpz),
        }
    }

    pub fn stationary(&self) -> Result<GaussianState> {
        stationary_preset(self).map(|(s, _)| s)
    }

    pub fn frame(&self) -> Result<CoordinateFrame> {
        stationary_preset(self).map(|(_, f)| f)
    }
}

/// `ω₀ = √(ω₀′² - γ²/4)`; requires `ω₀′ > γ/2`.
pub fn renormalized_frequency(omega0_prime: f64, gamma: f64) -> Result<f64> {
    if omega0_prime <= 0.0 {
        return Err(Error::NonPositiveH0 { h0: 2.0 * omega0_prime });
    }
    let disc = 4.0 * omega0_prime * omega0_prime - gamma * gamma;
    if disc < 0.0 {
        return Err(Error::Overdamped { discriminant: disc });
    }
    if disc == 0.0 {
        return Err(Error::CriticalDamping);
    }
    Ok(0.5 * libm::sqrt(disc))
}
