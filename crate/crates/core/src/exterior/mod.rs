//! Exterior algebra of polynomial forms and multivector fields.

pub mod calculus;
pub mod element;

pub use calculus::{
    apply_vector_field, bivector_form_pairing, contract_one_form, differential, exterior_derivative,
    interior_product, lie_derivative, poisson_bracket, schouten_bracket, wedge_product,
};
pub use element::{Exterior, FormKind, GeneratorKind, PolyForm, PolyVector, TermKey, VectorKind};
