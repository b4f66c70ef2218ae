//! Executable forms of the higher Auslander correspondence: candidates,
//! rigidity and `dℤ` checks, the `d`-Auslander test, base recovery, the
//! Ω-conditions and the type-A tower.

mod candidate;
mod correspondence;
mod tower;

pub use candidate::{
    auslander_algebra, is_d_rigid, is_dz_cluster_tilting, is_tau_d_closed, CTCandidate, DzReport,
};
pub use correspondence::{
    cartan_matrix, check_correspondence, hom_dim_matrix, injectives_check, matching_permutation,
    omega_condition_check, omega_condition_check_op, recover_base, roundtrip_check, verify_d_auslander, with_dz,
    CorrespondenceReport, InjectivesReport, OmegaReport, OmegaRow, RoundtripReport,
};
pub use tower::{
    d_kernel_sequence, tower_candidate, tower_candidate_with, type_a_tower, type_a_tower_over, KernelSequence,
    TowerLevel, DEFAULT_ORBIT_CAP,
};
