//! Quadratic Markovian master equations of a damped harmonic oscillator.
//!
//! A Liouvillian `K` (with `dρ/dt = -Kρ`) that is quadratic in the center and
//! relative coordinates `(Q, r)` is a real combination of seven trace and
//! hermiticity preserving generators. This crate provides
//!
//! - [`algebra`]: the generators as normal-ordered differential operators,
//!   commutators, conjugation of Liouvillian coefficients and of linear
//!   phase-space operators, coordinate rescaling;
//! - [`reduction`]: the similarity transformation that brings any underdamped
//!   generic Liouvillian to Kossakowski-Lindblad (KL) form;
//! - [`spectrum`]: the eigenvalues `±inω₀ + (m - n/2)γ` and the right
//!   eigenfunctions of KL and of every similar Liouvillian;
//! - [`gauss`]: Gaussian states, their transformation under the seven
//!   exponentiated generators, positivity windows, stationary states;
//! - [`models`]: the KL, Caldeira-Leggett and Markovian Hu-Paz-Zhang presets.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod gauss;
pub mod linalg;
pub mod models;
pub mod reduction;
pub mod spectrum;

pub use num_complex::Complex64 as C64;

pub use algebra::{
    adjoint_conjugate_coefficients, assemble_liouvillian, commutator, conjugate_coefficients,
    conjugate_linear, conjugate_operator, generator, rescale_coordinates, CoordinateFrame,
    GeneratorId, LinearPhaseOperator, LiouvillianCoeffs, Monomial, PhasePolyOperator,
};
pub use error::{Error, Result};
pub use gauss::{
    apply_plan_gaussian, delta, positivity_window, stationary_preset, transform_gaussian,
    transport_gaussian, GaussianState,
};
pub use models::ModelPreset;
pub use reduction::{
    reduce_to_kl, rescale_b, step1_solve, step2_solve, u_matrix, ReductionPlan, Step, Step1,
    UFamily, UMatrix,
};
pub use spectrum::{
    closed_form_fixture, c_coefficient, eigenvalue, hermite, kl_eigenfunction, pi_polynomial,
    transformed_eigenfunction, AppliedEigenfunction, BivariatePoly, EigenLabel, FixtureForm,
    Sign,
};
