//! Structural matrices and the closed-form orthogonal projections onto the
//! pure-potential, nonstrategic, pure-harmonic, potential and harmonic
//! subspaces.

mod group_inverse;
mod set;
mod structure;
mod subset_poly;

pub use group_inverse::{
    algorithm1_coefficients, closed_form_coefficients, complement_sum_poly, group_inverse_algorithm1,
    group_inverse_closed_form, MAX_SUBSET_SOLVE_VARS,
};
pub use set::{dimension, ProjectorSet, SubspaceKind};
pub use structure::{
    build_b_n, build_b_n_pinv, build_b_p, build_complement_sum, build_deviation_selector, build_e, build_e_matrix,
    build_e_set, build_p_n, build_potential_factor, nonstrategic_dim,
};
pub use subset_poly::{ordered_subsets, SubsetPoly};

use std::sync::Arc;

use crate::error::Result;
use crate::game::GameSpace;

/// The projector set for `space`, built once per process and shared.
pub fn build_projectors(space: &GameSpace) -> Result<Arc<ProjectorSet>> {
    ProjectorSet::cached(space)
}
