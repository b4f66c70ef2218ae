//! Finite-dimensional basic algebras in pointed-basis form: bound quiver
//! algebras, endomorphism algebras and opposites.

mod core;
mod endo;
mod path;
mod quiver;
mod spec;

pub use self::core::{Algebra, AlgebraParts};
pub use endo::{
    endomorphism_algebra, hom_functor, in_add, is_local_module, local_split_check, AddClosure, AlgebraMap,
    LocalSplit,
};
pub use path::{linear_a, path_algebra, path_algebra_from_strs, truncated_polynomial, MAX_PATHS};
pub use quiver::{parse_relation, Arrow, Quiver, RelationExpr};
pub use spec::AlgebraSpec;
