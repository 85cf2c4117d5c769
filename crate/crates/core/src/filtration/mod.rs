//! Finite monic filtrations, the associated graded functor, and quotients.

pub mod filtered;
pub mod graded;
pub mod quotient;

pub use filtered::{
    check_filtered_algebra, connectedness_failure, induced_filtration, is_connected,
    is_filtered_map, tensor_filtered, FilteredAlg, FilteredObj,
};
pub use graded::{
    check_graded_algebra, gr, gr2, gr_mor, gr_mor_total, gr_obj, gr_well_defined, is_graded_iso,
    trivial_filtration, GradedAlg, GrPieces, GrResult,
};
pub use quotient::{
    check_filtered_ideal, graded_from_degrees, graded_quotient_commutes, FilteredIdeal,
    QuotientComparison,
};
