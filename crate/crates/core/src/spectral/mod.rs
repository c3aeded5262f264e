//! Weight filtration, the first page of its spectral sequence and the
//! closed lifts of first-page classes.

pub mod convergence;
pub mod filtration;
pub mod sigma;

pub use convergence::{convergence_check, ConvergenceReport, PageEntry};
pub use filtration::{default_filters, e1_page, e1_page_for, filtration_decompose, FiltrationLevel};
pub use sigma::{
    canonical_cocycles, pairing_identity, sigma_cocycle_suite, sigma_independence, IndependenceEntry, IndependenceReport, SigmaCheck,
    SigmaCocycle, SigmaReport,
};
