//! Numerical verification and command-line driver for quadratic Markovian
//! master equations of a damped harmonic oscillator.
//!
//! The analytic side (generators, reduction to KL form, spectra, Gaussian
//! states) lives in [`liouville_core`], re-exported here as [`core`]. This
//! crate adds
//!
//! - [`verify`]: an independent truncated Hermite-function oracle;
//! - [`cli`]: configuration, the subcommands and deterministic output.

pub use liouville_core as core;

pub mod cli;
pub mod verify;
