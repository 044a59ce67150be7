use super::generator::{generator, GeneratorId};
use super::operator::{commutator, Monomial, PhasePolyOperator};
use crate::error::{Error, Result};
use crate::linalg::{self, CMat};
use crate::C64;

/// Real coefficients of `K = h0 iL0 + h1 iM1 + h2 iM2 + γ(O0 - I/2)
/// + g+ O+ + g1 L1+ + g2 L2+`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiouvillianCoeffs {
    pub h: [f64; 3],
    pub gamma: f64,
    pub g: [f64; 3],
}

impl LiouvillianCoeffs {
    /// Checks `γ ≥ 0` and finiteness.
    pub fn new(h: [f64; 3], gamma: f64, g: [f64; 3]) -> Result<Self> {
        let c = LiouvillianCoeffs { h, gamma, g };
        if let Some(bad) = c.to_array().into_iter().find(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter { name: "coefficient", value: bad });
        }
        if gamma < 0.0 {
            return Err(Error::InvalidParameter { name: "gamma", value: gamma });
        }
        Ok(c)
    }

    /// KL form `(2ω₀, 0, 0; γ; -2γb, 0, 0)`.
    pub fn kl(omega0: f64, gamma: f64, b: f64) -> Self {
        LiouvillianCoeffs { h: [2.0 * omega0, 0.0, 0.0], gamma, g: [-2.0 * gamma * b, 0.0, 0.0] }
    }

    /// `(h0, h1, h2, γ, g+, g1, g2)`, indexed like [`GeneratorId`].
    pub fn to_array(&self) -> [f64; 7] {
        [self.h[0], self.h[1], self.h[2], self.gamma, self.g[0], self.g[1], self.g[2]]
    }

    pub fn from_array(a: [f64; 7]) -> Self {
        LiouvillianCoeffs { h: [a[0], a[1], a[2]], gamma: a[3], g: [a[4], a[5], a[6]] }
    }

    /// `h0² - h1² - h2²`, preserved by ordinary transformations.
    pub fn metric(&self) -> f64 {
        self.h[0] * self.h[0] - self.h[1] * self.h[1] - self.h[2] * self.h[2]
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.to_array()
            .iter()
            .zip(other.to_array().iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

pub fn assemble_liouvillian(c: &LiouvillianCoeffs) -> PhasePolyOperator {
    GeneratorId::ALL
        .iter()
        .zip(c.to_array())
        .fold(PhasePolyOperator::zero(), |acc, (id, x)| &acc + &generator(*id).scale(C64::new(x, 0.0)))
}

/// Closed-form coefficients of `exp(p·G) K exp(-p·G)`.
pub fn conjugate_coefficients(id: GeneratorId, param: f64, c: &LiouvillianCoeffs) -> LiouvillianCoeffs {
    let [h0, h1, h2] = c.h;
    let [gp, g1, g2] = c.g;
    let gamma = c.gamma;
    let p = param;
    let (h, g) = match id {
        GeneratorId::IL0 => {
            let (s, co) = (libm::sin(p), libm::cos(p));
            ([h0, h1 * co + h2 * s, h2 * co - h1 * s], [gp, g1 * co + g2 * s, g2 * co - g1 * s])
        }
        GeneratorId::IM1 => {
            let (sh, ch) = (libm::sinh(p), libm::cosh(p));
            ([h0 * ch + h2 * sh, h1, h2 * ch + h0 * sh], [gp * ch + g2 * sh, g1, g2 * ch + gp * sh])
        }
        GeneratorId::IM2 => {
            let (sh, ch) = (libm::sinh(p), libm::cosh(p));
            ([h0 * ch - h1 * sh, h1 * ch - h0 * sh, h2], [gp * ch - g1 * sh, g1 * ch - gp * sh, g2])
        }
        GeneratorId::O0MI => {
            let e = libm::exp(p);
            (c.h, [e * gp, e * g1, e * g2])
        }
        GeneratorId::OPLUS => (c.h, [gp - p * gamma, g1 + p * h2, g2 - p * h1]),
        GeneratorId::L1PLUS => (c.h, [gp + p * h2, g1 - p * gamma, g2 + p * h0]),
        GeneratorId::L2PLUS => (c.h, [gp - p * h1, g1 - p * h0, g2 - p * gamma]),
    };
    LiouvillianCoeffs { h, gamma, g }
}

/// Expresses a degree-two operator in the basis of the seven generators.
///
/// The identity only enters through `O0 - I/2` and `iM2`; anything outside
/// the span (including `O-`, `L1-`, `L2-` components) is reported.
pub fn decompose_generators(op: &PhasePolyOperator) -> Result<[C64; 7]> {
    let get = |q, r, dq, dr| op.coeff(Monomial::new(q, r, dq, dr));
    let i = C64::new(0.0, 1.0);
    let qr = get(1, 1, 0, 0);
    let dqdr = get(0, 0, 1, 1);
    let qdq = get(1, 0, 1, 0);
    let rdr = get(0, 1, 0, 1);
    let dq2 = get(0, 0, 2, 0);
    let r2 = get(0, 2, 0, 0);
    let rdq = get(0, 1, 1, 0);
    // (i/2)(h1 - h0) = dqdr, (i/2)(h0 + h1) = qr
    let h0 = (qr - dqdr) / i;
    let h1 = (qr + dqdr) / i;
    // -½(h2 + γ) = qdq, ½(γ - h2) = rdr
    let gamma = rdr - qdq;
    let h2 = -qdq - rdr;
    // ¼(g+ - g1) = dq2, -¼(g+ + g1) = r2
    let gp = 2.0 * (dq2 - r2);
    let g1 = -2.0 * (dq2 + r2);
    let g2 = rdq / C64::new(0.0, -0.5);
    let coeffs = [h0, h1, h2, gamma, gp, g1, g2];
    let rebuilt = GeneratorId::ALL
        .iter()
        .zip(coeffs)
        .fold(PhasePolyOperator::zero(), |acc, (id, x)| &acc + &generator(*id).scale(x));
    let residual = rebuilt.max_abs_diff(op);
    let scale = op.terms().map(|(_, c)| c.norm()).fold(1.0, f64::max);
    if residual > 1e-12 * scale {
        return Err(Error::NotInSpan { residual });
    }
    Ok(coeffs)
}

/// Structure-constant matrix of `ad(G)` on the seven-dimensional coefficient
/// space, built from [`commutator`]. Column `j` holds the coefficients of
/// `[G, G_j]`.
pub fn structure_matrix(id: GeneratorId) -> [[f64; 7]; 7] {
    let g = generator(id);
    let mut out = [[0.0; 7]; 7];
    for (j, other) in GeneratorId::ALL.iter().enumerate() {
        let col = decompose_generators(&commutator(&g, &generator(*other)))
            .expect("the seven generators are closed under commutators");
        for i in 0..7 {
            debug_assert!(col[i].im.abs() < 1e-14);
            out[i][j] = col[i].re;
        }
    }
    out
}

/// Independent route to [`conjugate_coefficients`]: `exp(p·ad(G))` applied
/// to the coefficient vector.
pub fn adjoint_conjugate_coefficients(id: GeneratorId, param: f64, c: &LiouvillianCoeffs) -> LiouvillianCoeffs {
    let ad = structure_matrix(id);
    let mut scaled: CMat<7> = [[C64::new(0.0, 0.0); 7]; 7];
    for i in 0..7 {
        for j in 0..7 {
            scaled[i][j] = C64::new(param * ad[i][j], 0.0);
        }
    }
    let e = linalg::expm(&scaled);
    let v = c.to_array().map(|x| C64::new(x, 0.0));
    let out = linalg::matvec(&e, &v);
    LiouvillianCoeffs::from_array(out.map(|z| z.re))
}
