use core::fmt;

use crate::algebra::GeneratorId;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// `h0² - h1² - h2² < 0`: no real renormalized frequency.
    Overdamped { discriminant: f64 },
    /// `h0² - h1² - h2² = 0` with `h ≠ 0`.
    CriticalDamping,
    NonPositiveH0 { h0: f64 },
    /// The step-2 translation matrix is not invertible (`γ = 0`).
    SingularG { det: f64 },
    /// `g+` cannot be rescaled to the requested sign.
    Sign { gplus: f64 },
    Label { m: i64, n: i64 },
    Index { what: &'static str },
    UnsupportedLabel { m: u32, n: u32 },
    UnsupportedModel,
    /// A transformation parameter left the positivity window of a physical
    /// Gaussian, or a preset produced a non-physical state.
    PositivityViolation {
        step: Option<usize>,
        generator: Option<GeneratorId>,
        param: f64,
        window: (f64, f64),
    },
    DegenerateDenominator { generator: GeneratorId, param: f64, denominator: f64 },
    InvalidGaussian { mu: f64, kappa: f64, nu: f64 },
    InvalidParameter { name: &'static str, value: f64 },
    /// An operator is not a combination of the seven generators.
    NotInSpan { residual: f64 },
    ReplayMismatch { residual: f64 },
}

impl Error {
    /// Stable machine-readable name.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Overdamped { .. } => "OverdampedError",
            Error::CriticalDamping => "CriticalDampingError",
            Error::NonPositiveH0 { .. } => "NonPositiveH0Error",
            Error::SingularG { .. } => "SingularGError",
            Error::Sign { .. } => "SignError",
            Error::Label { .. } => "LabelError",
            Error::Index { .. } => "IndexError",
            Error::UnsupportedLabel { .. } => "UnsupportedLabel",
            Error::UnsupportedModel => "UnsupportedModel",
            Error::PositivityViolation { .. } => "PositivityViolation",
            Error::DegenerateDenominator { .. } => "DegenerateDenominator",
            Error::InvalidGaussian { .. } => "InvalidGaussian",
            Error::InvalidParameter { .. } => "InvalidParameter",
            Error::NotInSpan { .. } => "NotInSpan",
            Error::ReplayMismatch { .. } => "ReplayMismatch",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Overdamped { discriminant } => {
                write!(f, "overdamped Liouvillian: h0^2 - h1^2 - h2^2 = {discriminant} < 0")
            }
            Error::CriticalDamping => {
                write!(f, "critically damped Liouvillian: h0^2 - h1^2 - h2^2 = 0 with h != 0")
            }
            Error::NonPositiveH0 { h0 } => write!(f, "h0 = {h0} must be positive"),
            Error::SingularG { det } => {
                write!(f, "translation matrix is singular (det = {det}); gamma must be positive")
            }
            Error::Sign { gplus } => {
                write!(f, "g+ = {gplus} must be negative to be rescaled to -2 gamma b")
            }
            Error::Label { m, n } => write!(f, "invalid eigen label (m = {m}, n = {n}); need 0 <= n <= m"),
            Error::Index { what } => write!(f, "index out of range: {what}"),
            Error::UnsupportedLabel { m, n } => {
                write!(f, "no closed-form fixture for label (m = {m}, n = {n})")
            }
            Error::UnsupportedModel => write!(f, "operation not available for this model"),
            Error::PositivityViolation { step, generator, param, window } => {
                write!(f, "positivity violated")?;
                if let Some(step) = step {
                    write!(f, " at step {step}")?;
                }
                if let Some(g) = generator {
                    write!(f, " by {}", g.name())?;
                }
                write!(f, ": parameter {param} outside [{}, {}]", window.0, window.1)
            }
            Error::DegenerateDenominator { generator, param, denominator } => write!(
                f,
                "{} with parameter {param} gives non-positive denominator {denominator}",
                generator.name()
            ),
            Error::InvalidGaussian { mu, kappa, nu } => {
                write!(f, "invalid Gaussian (mu = {mu}, kappa = {kappa}, nu = {nu})")
            }
            Error::InvalidParameter { name, value } => write!(f, "invalid parameter {name} = {value}"),
            Error::NotInSpan { residual } => {
                write!(f, "operator is not in the span of the seven generators (residual {residual})")
            }
            Error::ReplayMismatch { residual } => {
                write!(f, "plan does not reduce the source to its target (residual {residual})")
            }
        }
    }
}

impl core::error::Error for Error {}
