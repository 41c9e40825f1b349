//! `(P, ω)`-partition generating functions and their `psi` expansions.

mod kfunction;
mod ktilde;
mod pointed;
mod zigzag;

pub use kfunction::{k_generating_function, k_generating_function_by_extensions};
pub use ktilde::{k_tilde, sigma_weight};
pub use pointed::{
    enumerate_pointed_partitions, psi_expansion_pointed, rooted_diagnosis, Mark, RootedDiagnosis,
    StarredPartition,
};
pub use zigzag::{
    apply_f_s, apply_g_s, count_t, count_zigzag_labelings, enumerate_t, enumerate_zigzag_labelings,
    is_irreducible_natural, is_pi_sigma_labeling, is_zigzag_labeling, zigzag_count_formula,
    zigzag_type, Irreducibility,
};
