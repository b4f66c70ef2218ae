//! Minimal resolutions and the invariants built from them: Ext, Tor, the
//! tensor product, syzygies, the duality `(−)*`, transposes, translates and
//! homological dimensions, plus checks of the standard exact sequences.

mod checks;
mod derived;
mod resolution;
mod transpose;

pub use checks::{
    ab_sequence_check, is_second_syzygy, left_proj_approx, phi_sequence_check, torsion_dim, AbReport, LeftApprox,
    PhiReport,
};
pub use derived::{
    coboundary, ext, ext_dims, ext_from_resolution, ext_module, ext_module_from_resolution, ext_via_injectives,
    tensor, tensor_boundary, tor, tor_ext_duality_check, tor_from_resolution, DualityReport, DualityRow, ExtModule,
    ExtValue, TensorProduct,
};
pub use resolution::{
    cosyzygy, domdim, gldim, idim, min_inj_coresolution, min_proj_resolution, pdim, proj_sum,
    projective_injective_vertices, syzygy, DimValue, ProjMap, Resolution, ResolutionKind, DEFAULT_CAP,
};
pub use transpose::{
    star, star_with_bases, tau, tau_d, tau_d_inverse, tau_d_inverse_with, tau_inverse, transpose,
    transpose_from_resolution, transpose_k, TauInverseOrder,
};
