//! Concrete algebras: exterior and Clifford algebras, truncated polynomial
//! rings, matrix algebras and the representing algebras of module categories.

pub mod builtins;
pub mod clifford;
pub mod representing;
pub mod small;

pub use builtins::{builtin, builtin_corpus, Builtin, BUILTIN_PATTERNS};
pub use clifford::{clifford_algebra, exterior_algebra, odd_space, BilinearFormData, Clifford, Exterior};
pub use representing::{
    etingof_ostrik_min, representing_algebra, representing_dim8, RepresentingAlgebra, RepresentingInput,
};
pub use small::{deformed_poly, matrix_frobenius, truncated_poly, upper_triangular_2, vec_hopf};
