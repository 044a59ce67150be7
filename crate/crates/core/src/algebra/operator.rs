use alloc::collections::BTreeMap;
use core::ops::{Add, Mul, Neg, Sub};

use crate::C64;

/// Exponents of `Q^q r^r ∂_Q^dq ∂_r^dr`, multiplications to the left of
/// derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub q: u32,
    pub r: u32,
    pub dq: u32,
    pub dr: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial::new(0, 0, 0, 0);

    pub const fn new(q: u32, r: u32, dq: u32, dr: u32) -> Self {
        Monomial { q, r, dq, dr }
    }

    pub fn degree(&self) -> u32 {
        self.q + self.r + self.dq + self.dr
    }
}

/// Polynomial differential operator in `(Q, r, ∂_Q, ∂_r)` with complex
/// coefficients, kept in normal order. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PhasePolyOperator {
    terms: BTreeMap<Monomial, C64>,
}

impl PhasePolyOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::term(Monomial::ONE, C64::new(1.0, 0.0))
    }

    pub fn term(m: Monomial, coeff: C64) -> Self {
        let mut out = Self::zero();
        out.add_term(m, coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C64)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    /// Multiplication by `Q`.
    pub fn q() -> Self {
        Self::term(Monomial::new(1, 0, 0, 0), C64::new(1.0, 0.0))
    }

    pub fn r() -> Self {
        Self::term(Monomial::new(0, 1, 0, 0), C64::new(1.0, 0.0))
    }

    pub fn d_q() -> Self {
        Self::term(Monomial::new(0, 0, 1, 0), C64::new(1.0, 0.0))
    }

    pub fn d_r() -> Self {
        Self::term(Monomial::new(0, 0, 0, 1), C64::new(1.0, 0.0))
    }

    pub fn add_term(&mut self, m: Monomial, coeff: C64) {
        if coeff == C64::new(0.0, 0.0) {
            return;
        }
        let entry = self.terms.entry(m).or_insert(C64::new(0.0, 0.0));
        *entry += coeff;
        if *entry == C64::new(0.0, 0.0) {
            self.terms.remove(&m);
        }
    }

    pub fn coeff(&self, m: Monomial) -> C64 {
        self.terms.get(&m).copied().unwrap_or(C64::new(0.0, 0.0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total degree; 0 for the zero operator.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, c * s)))
    }

    /// Drops coefficients with modulus at most `tol`.
    pub fn pruned(&self, tol: f64) -> Self {
        Self::from_terms(self.terms.iter().filter(|(_, c)| c.norm() > tol).map(|(m, c)| (*m, *c)))
    }

    /// Largest coefficient modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self - other).terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Normal-ordered composition `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let q_part = reorder_1d(ma.q, ma.dq, mb.q, mb.dq);
                let r_part = reorder_1d(ma.r, ma.dr, mb.r, mb.dr);
                for &(q, dq, cq) in &q_part {
                    for &(r, dr, cr) in &r_part {
                        out.add_term(Monomial::new(q, r, dq, dr), ca * cb * (cq * cr));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| acc.compose(self))
    }
}

/// `x^a ∂^c x^b ∂^d = Σ_k C(c,k) b!/(b-k)! x^(a+b-k) ∂^(c-k+d)`.
fn reorder_1d(a: u32, c: u32, b: u32, d: u32) -> alloc::vec::Vec<(u32, u32, f64)> {
    let mut out = alloc::vec::Vec::new();
    let mut binom = 1.0;
    let mut falling = 1.0;
    for k in 0..=c.min(b) {
        out.push((a + b - k, c - k + d, binom * falling));
        // advance to k+1
        binom = binom * (c - k) as f64 / (k + 1) as f64;
        falling *= (b - k) as f64;
    }
    out
}

/// `[a, b] = ab - ba`.
pub fn commutator(a: &PhasePolyOperator, b: &PhasePolyOperator) -> PhasePolyOperator {
    &a.compose(b) - &b.compose(a)
}

impl Add for &PhasePolyOperator {
    type Output = PhasePolyOperator;
    fn add(self, rhs: &PhasePolyOperator) -> PhasePolyOperator {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, *c);
        }
        out
    }
}

impl Add for PhasePolyOperator {
    type Output = PhasePolyOperator;
    fn add(self, rhs: PhasePolyOperator) -> PhasePolyOperator {
        &self + &rhs
    }
}

impl Sub for &PhasePolyOperator {
    type Output = PhasePolyOperator;
    fn sub(self, rhs: &PhasePolyOperator) -> PhasePolyOperator {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Sub for PhasePolyOperator {
    type Output = PhasePolyOperator;
    fn sub(self, rhs: PhasePolyOperator) -> PhasePolyOperator {
        &self - &rhs
    }
}

impl Neg for &PhasePolyOperator {
    type Output = PhasePolyOperator;
    fn neg(self) -> PhasePolyOperator {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl Mul for &PhasePolyOperator {
    type Output = PhasePolyOperator;
    fn mul(self, rhs: &PhasePolyOperator) -> PhasePolyOperator {
        self.compose(rhs)
    }
}

impl Mul<C64> for &PhasePolyOperator {
    type Output = PhasePolyOperator;
    fn mul(self, rhs: C64) -> PhasePolyOperator {
        self.scale(rhs)
    }
}

impl Mul<f64> for &PhasePolyOperator {
    type Output = PhasePolyOperator;
    fn mul(self, rhs: f64) -> PhasePolyOperator {
        self.scale(C64::new(rhs, 0.0))
    }
}
