//! Independent numerical oracle: operators as sparse matrices in a truncated
//! tensor basis of Hermite functions, eigen-residuals, time evolution,
//! conservation checks and the left/right eigenvector pairing.

mod basis;
mod conserve;
mod error;
mod evolve;
mod expand;
mod matrix;
mod spectral;

pub use basis::{
    gauss_hermite, hermite_function_polys, hermite_functions, ladder_matrices, BasisConfig, DEFAULT_BASIS_N,
};
pub use conserve::{hermite_function_integrals, trace, trace_and_hermiticity, trace_weights};
pub use error::{Result, VerifyError};
pub use evolve::{evolve, expm, Propagator};
pub use expand::{expand, expand_fn, PolyGaussian, StateVector};
pub use matrix::{assemble_matrix, basis_operator, chirp_conjugate, OperatorMatrix, MAX_OPERATOR_DEGREE};
pub use spectral::{
    biorthogonality_check, degree_blocks, lower_coupling, match_spectrum, predicted_eigenvalues, residual,
    truncated_spectrum, GramReport, MatrixEigenvalue, SpectrumMatch, TruncatedSpectrum, TRIANGULAR_TOL,
};
