//! Eigenvalues `λ±mn = ±inω₀ + (m - n/2)γ` and right eigenfunctions of KL and
//! of every Liouvillian similar to it.
//!
//! A KL eigenfunction is `Π̃±mn(Q̃, r̃) f_KL` with `Q̃ = Q/√(2b)`, `r̃ = √(b/2) r`.
//! For a Liouvillian `K = S K_KL S⁻¹` the eigenfunction is
//! `Π̃±mn(S Q̃ S⁻¹, S r̃ S⁻¹) S f_KL`: the two conjugated coordinates are
//! commuting first-order operators and `S f_KL` is again a Gaussian.

mod eigenfunction;
mod fixtures;
mod hermite;
mod label;
mod poly;

pub use eigenfunction::{apply_operator, inverse_steps, kl_eigenfunction, transformed_eigenfunction, AppliedEigenfunction};
pub use fixtures::{closed_form_fixture, FixtureForm};
pub use hermite::{hermite, hermite_coefficients};
pub use label::{c_coefficient, eigenvalue, EigenLabel, Sign, MAX_M};
pub use poly::{pi_polynomial, BivariatePoly};
