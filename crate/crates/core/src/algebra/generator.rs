use super::operator::{Monomial, PhasePolyOperator};
use crate::C64;

/// The seven trace and hermiticity preserving quadratic generators.
///
/// The discriminant order is also the order of the coefficient vector
/// `(h0, h1, h2, γ, g+, g1, g2)` of a Liouvillian.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorId {
    /// `iL0 = (i/2)(-∂²/∂Q∂r + Qr)`
    IL0,
    /// `iM1 = (i/2)(∂²/∂Q∂r + Qr)`
    IM1,
    /// `iM2 = -½(∂_Q Q + r ∂_r)`
    IM2,
    /// `O0 - I/2 = -½(∂_Q Q - r ∂_r)`
    O0MI,
    /// `O+ = ¼(∂²_Q - r²)`
    OPLUS,
    /// `L1+ = -¼(∂²_Q + r²)`
    L1PLUS,
    /// `L2+ = -(i/2) r ∂_Q`
    L2PLUS,
}

impl GeneratorId {
    pub const ALL: [GeneratorId; 7] = [
        GeneratorId::IL0,
        GeneratorId::IM1,
        GeneratorId::IM2,
        GeneratorId::O0MI,
        GeneratorId::OPLUS,
        GeneratorId::L1PLUS,
        GeneratorId::L2PLUS,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            GeneratorId::IL0 => "IL0",
            GeneratorId::IM1 => "IM1",
            GeneratorId::IM2 => "IM2",
            GeneratorId::O0MI => "O0MI",
            GeneratorId::OPLUS => "OPLUS",
            GeneratorId::L1PLUS => "L1PLUS",
            GeneratorId::L2PLUS => "L2PLUS",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|g| g.name().eq_ignore_ascii_case(name))
    }

    /// The three generators of ordinary (unitary) transformations.
    pub fn is_ordinary(self) -> bool {
        matches!(self, GeneratorId::IL0 | GeneratorId::IM1 | GeneratorId::IM2)
    }
}

const fn m(q: u32, r: u32, dq: u32, dr: u32) -> Monomial {
    Monomial::new(q, r, dq, dr)
}

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn im(x: f64) -> C64 {
    C64::new(0.0, x)
}

/// The generator as a normal-ordered differential operator. The identity
/// inside `O0 - I/2` (and `∂_Q Q` in `iM2`) shows up as a constant term.
pub fn generator(id: GeneratorId) -> PhasePolyOperator {
    let terms: &[(Monomial, C64)] = match id {
        GeneratorId::IL0 => &[(m(0, 0, 1, 1), im(-0.5)), (m(1, 1, 0, 0), im(0.5))],
        GeneratorId::IM1 => &[(m(0, 0, 1, 1), im(0.5)), (m(1, 1, 0, 0), im(0.5))],
        GeneratorId::IM2 => &[
            (m(1, 0, 1, 0), re(-0.5)),
            (Monomial::ONE, re(-0.5)),
            (m(0, 1, 0, 1), re(-0.5)),
        ],
        GeneratorId::O0MI => &[
            (m(1, 0, 1, 0), re(-0.5)),
            (Monomial::ONE, re(-0.5)),
            (m(0, 1, 0, 1), re(0.5)),
        ],
        GeneratorId::OPLUS => &[(m(0, 0, 2, 0), re(0.25)), (m(0, 2, 0, 0), re(-0.25))],
        GeneratorId::L1PLUS => &[(m(0, 0, 2, 0), re(-0.25)), (m(0, 2, 0, 0), re(-0.25))],
        GeneratorId::L2PLUS => &[(m(0, 1, 1, 0), im(-0.5))],
    };
    PhasePolyOperator::from_terms(terms.iter().copied())
}
