//! Finite-dimensional right modules: Hom spaces, standard modules, duality,
//! covers and envelopes, isomorphism and add-membership tests.

mod hom;
mod iso;
mod module;
mod spec;
mod standard;

pub use crate::algebra::{in_add, AddClosure};
pub use hom::{hom_dim, hom_space, HomBasis};
pub use iso::{
    default_seed, find_iso, is_injective, is_isomorphic, is_projective, is_stably_isomorphic, set_default_seed,
    split_summand, strip_injectives, strip_projectives, strip_summands, ISO_TRIALS,
};
pub use module::{ModMap, Module};
pub use spec::ModuleSpec;
pub use standard::{
    dual, full_spaces, injective, injective_envelope, injectives, map_from_projectives, projective, projective_cover,
    projectives, radical, simple, simples, socle, top, top_generators, top_radical_socle, InjectiveEnvelope,
    ProjectiveCover, TopRadSocle,
};
