use crate::error::{Error, Result};
use crate::C64;

/// Largest supported `m`; `m!` stays exact in `u128` and finite in `f64`.
pub const MAX_M: u32 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// `(m, n, ±)` with `0 ≤ n ≤ m ≤ MAX_M`. For `n = 0` both signs label the
/// same eigenfunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EigenLabel {
    pub m: u32,
    pub n: u32,
    pub sign: Sign,
}

impl EigenLabel {
    pub fn new(m: i64, n: i64, sign: Sign) -> Result<Self> {
        if n < 0 || m < 0 || n > m || m > MAX_M as i64 {
            return Err(Error::Label { m, n });
        }
        Ok(EigenLabel { m: m as u32, n: n as u32, sign })
    }

    /// Every label with `m ≤ m_max`; `n = 0` appears once (with `+`).
    pub fn all_up_to(m_max: u32) -> alloc::vec::Vec<EigenLabel> {
        let mut out = alloc::vec::Vec::new();
        for m in 0..=m_max.min(MAX_M) {
            for n in 0..=m {
                out.push(EigenLabel { m, n, sign: Sign::Plus });
                if n > 0 {
                    out.push(EigenLabel { m, n, sign: Sign::Minus });
                }
            }
        }
        out
    }

    /// The same mode with the opposite sign.
    pub fn conjugate(&self) -> EigenLabel {
        let sign = match self.sign {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        };
        EigenLabel { sign, ..*self }
    }
}

impl core::fmt::Display for EigenLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.n == 0 {
            write!(f, "({},0)", self.m)
        } else {
            write!(f, "({},{},{})", self.m, self.n, self.sign.symbol())
        }
    }
}

/// `±inω₀ + (m - n/2)γ`.
pub fn eigenvalue(label: &EigenLabel, omega0: f64, gamma: f64) -> C64 {
    let n = label.n as f64;
    C64::new((label.m as f64 - n / 2.0) * gamma, label.sign.factor() * n * omega0)
}

fn factorial(k: u32) -> u128 {
    (1..=k as u128).product()
}

fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// `(±1)^{n+σ} (-1)^{μ+ν} / (iⁿ 2^{2ν+σ} μ!) · √((m-n)!/m!) · C(m, n+μ) C(μ, ν) C(n, σ)`.
pub fn c_coefficient(m: u32, n: u32, mu: u32, nu: u32, sigma: u32, sign: Sign) -> Result<C64> {
    if m > MAX_M || n > m {
        return Err(Error::Index { what: "need 0 <= n <= m <= 32" });
    }
    if mu > m - n {
        return Err(Error::Index { what: "need 0 <= mu <= m - n" });
    }
    if nu > mu {
        return Err(Error::Index { what: "need 0 <= nu <= mu" });
    }
    if sigma > n {
        return Err(Error::Index { what: "need 0 <= sigma <= n" });
    }
    let sign_factor = if (n + sigma) % 2 == 1 { sign.factor() } else { 1.0 };
    let parity = if (mu + nu) % 2 == 1 { -1.0 } else { 1.0 };
    let binomials = binomial(m, n + mu) as f64 * binomial(mu, nu) as f64 * binomial(n, sigma) as f64;
    let magnitude = libm::sqrt(factorial(m - n) as f64 / factorial(m) as f64) * binomials
        / (libm::pow(2.0, (2 * nu + sigma) as f64) * factorial(mu) as f64);
    // 1/iⁿ = (-i)ⁿ
    let phase = match n % 4 {
        0 => C64::new(1.0, 0.0),
        1 => C64::new(0.0, -1.0),
        2 => C64::new(-1.0, 0.0),
        _ => C64::new(0.0, 1.0),
    };
    Ok(phase * (sign_factor * parity * magnitude))
}
