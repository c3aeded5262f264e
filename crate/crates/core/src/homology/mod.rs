//! Slices, exact linear algebra and homology dimensions.

pub mod basis;
pub mod complex;
pub mod matrix;
pub mod orbit;
pub mod table;

pub use basis::{compositions, enumerate_slice_basis, monomial_terms, SliceConstraint, SliceFilter, SliceSpec};
pub use complex::{assemble_matrix, assemble_on_bases, express_in_basis, truncate_to, FormOperator, SliceComplex, TermIndex};
pub use matrix::{Echelon, ExactMatrix, SparseVec};
pub use orbit::{balanced_multidegrees, check_classifier, orbit_slice, ClassifierCheck};
pub use table::{harmonic_kernel, harmonic_kernel_for, homology_table, homology_table_for, HomologyTable, SliceRecord};
