//! The ambient symmetric category `Rep(H)` for a triangular Hopf algebra `H`.

pub mod group;
pub mod hopf;
pub mod obj;
pub(crate) mod wedge;

pub use group::Group;
pub use hopf::{group_algebra, lambda_smash, super_hopf, validate_hopf, HopfData, SuperGroup};
pub use obj::{
    braiding, dual_obj, flip_matrix, hom_invariants, hom_space, is_morphism, snake_identities,
    DualData, Mor, Obj,
};
pub use wedge::exterior_basis;
