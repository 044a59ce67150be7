use alloc::collections::BTreeMap;

use super::hermite::hermite_coefficients;
use super::label::{c_coefficient, EigenLabel};
use crate::C64;

/// Complex polynomial `Σ c_jk x^j y^k` with finite support.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), C64>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(0, 0, C64::new(1.0, 0.0))
    }

    pub fn term(j: u32, k: u32, c: C64) -> Self {
        let mut p = Self::zero();
        p.add_term(j, k, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), C64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((j, k), c) in terms {
            p.add_term(j, k, c);
        }
        p
    }

    /// Adds `c x^j y^k`; exact cancellations are removed.
    pub fn add_term(&mut self, j: u32, k: u32, c: C64) {
        let entry = self.terms.entry((j, k)).or_insert(C64::new(0.0, 0.0));
        *entry += c;
        if *entry == C64::new(0.0, 0.0) {
            self.terms.remove(&(j, k));
        }
    }

    pub fn coeff(&self, j: u32, k: u32) -> C64 {
        self.terms.get(&(j, k)).copied().unwrap_or(C64::new(0.0, 0.0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &C64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree `max(j + k)`; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|(j, k)| j + k).max().unwrap_or(0)
    }

    pub fn evaluate(&self, x: f64, y: f64) -> C64 {
        self.terms
            .iter()
            .map(|(&(j, k), c)| c * (libm::pow(x, j as f64) * libm::pow(y, k as f64)))
            .sum()
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::from_terms(self.terms.iter().map(|(jk, c)| (*jk, c * s)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(j, k), c) in other.terms() {
            out.add_term(j, k, *c);
        }
        out
    }

    /// Multiplication by `x^dj y^dk`.
    pub fn shift(&self, dj: u32, dk: u32) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(j, k), c)| ((j + dj, k + dk), *c)))
    }

    pub fn d_x(&self) -> Self {
        Self::from_terms(
            self.terms.iter().filter(|((j, _), _)| *j > 0).map(|(&(j, k), c)| ((j - 1, k), c * j as f64)),
        )
    }

    pub fn d_y(&self) -> Self {
        Self::from_terms(
            self.terms.iter().filter(|((_, k), _)| *k > 0).map(|(&(j, k), c)| ((j, k - 1), c * k as f64)),
        )
    }

    /// Substitutes `x → sx·x`, `y → sy·y`.
    pub fn rescale(&self, sx: f64, sy: f64) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(j, k), c)| {
            ((j, k), c * (libm::pow(sx, j as f64) * libm::pow(sy, k as f64)))
        }))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.terms
            .keys()
            .chain(other.terms.keys())
            .map(|&(j, k)| (self.coeff(j, k) - other.coeff(j, k)).norm())
            .fold(0.0, f64::max)
    }

    /// Drops coefficients of modulus `≤ tol`.
    pub fn pruned(&self, tol: f64) -> Self {
        Self::from_terms(self.terms.iter().filter(|(_, c)| c.norm() > tol).map(|(jk, c)| (*jk, *c)))
    }
}

/// `Π̃±mn(Q̃, r̃) = Σ c^{±μνσ}_{mn} Q̃^{2(μ-ν)+n-σ} H_{2ν+σ}(r̃)` expanded into
/// monomials `Q̃^j r̃^k`.
pub fn pi_polynomial(label: &EigenLabel) -> BivariatePoly {
    let (m, n) = (label.m, label.n);
    let mut out = BivariatePoly::zero();
    for mu in 0..=(m - n) {
        for nu in 0..=mu {
            for sigma in 0..=n {
                let c = c_coefficient(m, n, mu, nu, sigma, label.sign).expect("indices are in range");
                let q_power = 2 * (mu - nu) + n - sigma;
                for (k, h) in hermite_coefficients(2 * nu + sigma).into_iter().enumerate() {
                    if h != 0.0 {
                        out.add_term(q_power, k as u32, c * h);
                    }
                }
            }
        }
    }
    out
}
