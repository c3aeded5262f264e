//! The Koszul–Brylinski differential and the operators derived from it.

pub mod classifier;
pub mod diagonal;
pub mod differential;
pub mod ideal;

pub use classifier::{
    acyclicity_classifier, apply_homotopy, hamiltonian_contraction, slice_coefficients, slice_formula_differential,
    AcyclicityVerdict, SliceCoefficients,
};
pub use diagonal::{adjoint_and_laplacian, euler_cocontraction, euler_contraction, LogCanonical};
pub use differential::{decomposable_differential, poisson_differential};
pub use ideal::{hamiltonian, jacobiator, jacobiator_mod_ideal, poisson_bracket_mod_ideal, OrbitIdeal};
