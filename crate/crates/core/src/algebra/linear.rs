use super::generator::{generator, GeneratorId};
use super::operator::{commutator, Monomial, PhasePolyOperator};
use crate::linalg::{self, CMat};
use crate::C64;

/// `cQ·Q + cr·r + cdQ·∂_Q + cdr·∂_r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearPhaseOperator {
    pub q: C64,
    pub r: C64,
    pub dq: C64,
    pub dr: C64,
}

const ZERO: C64 = C64::new(0.0, 0.0);

impl LinearPhaseOperator {
    pub const fn new(q: C64, r: C64, dq: C64, dr: C64) -> Self {
        LinearPhaseOperator { q, r, dq, dr }
    }

    /// Multiplication by `scale·Q`.
    pub fn q(scale: f64) -> Self {
        Self::new(C64::new(scale, 0.0), ZERO, ZERO, ZERO)
    }

    /// Multiplication by `scale·r`.
    pub fn r(scale: f64) -> Self {
        Self::new(ZERO, C64::new(scale, 0.0), ZERO, ZERO)
    }

    pub fn d_q(scale: f64) -> Self {
        Self::new(ZERO, ZERO, C64::new(scale, 0.0), ZERO)
    }

    pub fn d_r(scale: f64) -> Self {
        Self::new(ZERO, ZERO, ZERO, C64::new(scale, 0.0))
    }

    pub fn to_array(self) -> [C64; 4] {
        [self.q, self.r, self.dq, self.dr]
    }

    pub fn from_array(a: [C64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_operator(self) -> PhasePolyOperator {
        PhasePolyOperator::from_terms([
            (Monomial::new(1, 0, 0, 0), self.q),
            (Monomial::new(0, 1, 0, 0), self.r),
            (Monomial::new(0, 0, 1, 0), self.dq),
            (Monomial::new(0, 0, 0, 1), self.dr),
        ])
    }

    /// Reads the degree-one part of an operator; `None` if anything else is
    /// present.
    pub fn from_operator(op: &PhasePolyOperator) -> Option<Self> {
        let mut out = Self::new(ZERO, ZERO, ZERO, ZERO);
        for (m, c) in op.terms() {
            match (m.q, m.r, m.dq, m.dr) {
                (1, 0, 0, 0) => out.q = *c,
                (0, 1, 0, 0) => out.r = *c,
                (0, 0, 1, 0) => out.dq = *c,
                (0, 0, 0, 1) => out.dr = *c,
                _ => return None,
            }
        }
        Some(out)
    }

    /// `[self, other]`, a multiple of the identity.
    pub fn commutator(&self, other: &Self) -> C64 {
        self.dq * other.q - other.dq * self.q + self.dr * other.r - other.dr * self.r
    }

    pub fn scale(self, s: C64) -> Self {
        Self::new(self.q * s, self.r * s, self.dq * s, self.dr * s)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.to_array()
            .iter()
            .zip(other.to_array().iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Matrix of `ad(G) = [G, ·]` on span(Q, r, ∂_Q, ∂_r); column `j` holds
/// `[G, e_j]`.
pub fn linear_adjoint(id: GeneratorId) -> CMat<4> {
    let g = generator(id);
    let basis = [
        LinearPhaseOperator::q(1.0),
        LinearPhaseOperator::r(1.0),
        LinearPhaseOperator::d_q(1.0),
        LinearPhaseOperator::d_r(1.0),
    ];
    let mut out = [[ZERO; 4]; 4];
    for (j, e) in basis.iter().enumerate() {
        let bracket = commutator(&g, &e.to_operator());
        let col = LinearPhaseOperator::from_operator(&bracket)
            .expect("a quadratic generator maps linear operators to linear operators")
            .to_array();
        for i in 0..4 {
            out[i][j] = col[i];
        }
    }
    out
}

/// `exp(p·G) L exp(-p·G)`.
///
/// For `L2PLUS` acting on `Q` this gives `Q - (iη/2) r`: the series
/// terminates after the first bracket, so the shift carries the parameter.
pub fn conjugate_linear(id: GeneratorId, param: f64, l: &LinearPhaseOperator) -> LinearPhaseOperator {
    let mut ad = linear_adjoint(id);
    for row in ad.iter_mut() {
        for x in row.iter_mut() {
            *x *= param;
        }
    }
    let e = linalg::expm(&ad);
    LinearPhaseOperator::from_array(linalg::matvec(&e, &l.to_array()))
}

/// Operator-level conjugation `exp(p·G) A exp(-p·G)`, obtained by
/// substituting the conjugated `Q, r, ∂_Q, ∂_r` into every normal-ordered
/// monomial of `A`.
pub fn conjugate_operator(id: GeneratorId, param: f64, a: &PhasePolyOperator) -> PhasePolyOperator {
    let images = [
        conjugate_linear(id, param, &LinearPhaseOperator::q(1.0)).to_operator(),
        conjugate_linear(id, param, &LinearPhaseOperator::r(1.0)).to_operator(),
        conjugate_linear(id, param, &LinearPhaseOperator::d_q(1.0)).to_operator(),
        conjugate_linear(id, param, &LinearPhaseOperator::d_r(1.0)).to_operator(),
    ];
    let mut out = PhasePolyOperator::zero();
    for (m, c) in a.terms() {
        let product = images[0]
            .pow(m.q)
            .compose(&images[1].pow(m.r))
            .compose(&images[2].pow(m.dq))
            .compose(&images[3].pow(m.dr));
        out = &out + &product.scale(*c);
    }
    out
}
