//! Frobenius detection, certificates, connected graded Frobenius algebras
//! and the lift from `gr(A)` to `A`.

pub mod certificate;
pub mod detect;
pub mod graded;

pub use certificate::{FrobeniusCertificate, Mode, Refutation, Verdict, Witness};
pub use detect::{
    certify_with_form, copairing_check, frobenius_detect, frobenius_form_predicates, gram_matrix,
    largest_ideal_in_kernel, module_iso_check, refutation_threshold, DetectOptions, ModeChoice,
    ModuleIsoCheck,
};
pub use graded::{bongale_lift, graded_frobenius_structure_check, GradedFrobeniusReport, LiftResult};
