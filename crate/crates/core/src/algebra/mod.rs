//! Quadratic superoperator generators as differential operators in the
//! center and relative coordinates `Q = (x + x̃)/2`, `r = x - x̃`.

mod coeffs;
mod frame;
mod generator;
mod linear;
mod operator;

pub use coeffs::{
    adjoint_conjugate_coefficients, assemble_liouvillian, conjugate_coefficients, decompose_generators,
    structure_matrix, LiouvillianCoeffs,
};
pub use frame::{rescale_coordinates, CoordinateFrame};
pub use generator::{generator, GeneratorId};
pub use linear::{conjugate_linear, conjugate_operator, linear_adjoint, LinearPhaseOperator};
pub use operator::{commutator, Monomial, PhasePolyOperator};
