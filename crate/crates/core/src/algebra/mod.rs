//! Algebras, modules, weak ideals, quotients, tensor products, `End(V)` and
//! induction inside `Rep(H)`.

pub mod alg;
pub mod end;
pub mod ideal;
pub mod induce;

pub use alg::{check_algebra, is_algebra_map, is_commutative, tensor_algebra_of, AlgObj, Coalgebra};
pub use end::{end_algebra, end_algebra_projective, matrix_unit_structure};
pub use ideal::{
    check_module, check_weak_ideal, complement_projection, ideal_generated, quotient_algebra,
    ModuleObj, Side, WeakIdeal,
};
pub use induce::{induce, restrict_algebra};
