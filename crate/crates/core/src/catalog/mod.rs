//! Poisson structures, vector fields, one-forms and algebra maps on the
//! cotangent space, the holomorphic chart and the Schubert cell.

pub mod action;
pub mod forms;
pub mod homogenize;
pub mod propositions;
pub mod structures;

pub use action::{
    chevalley_failures, check_lift, lift_generator, moment_map, select_lift, sl_action_fields, ActionField,
    ActionVariant, LiftCheck, LiftPlacement,
};
pub use forms::{eigen_status, eigenvalue, quotient_by_form, recursion_operator, symplectic_lowering, EigenStatus, OneFormBasis};
pub use homogenize::{balanced_monomials, homogenize, pencil_bracket, pencil_bracket_exact, HomogenizationMap};
pub use propositions::{
    hamiltonian_is_pencil_casimir, homogenization_bijection, homogenization_equivariance, multiplicative_on,
    pencil_compatible_on, sample_balanced, BijectionCheck, EquivarianceCheck,
};
pub use structures::{build_structure, schouten_status, weight_split, SchoutenStatus, StructureId, StructureKind};
