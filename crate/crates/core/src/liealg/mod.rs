//! Exact sparse linear algebra over Gaussian rationals: concrete generator
//! sets (su(d) natural, bosonic symmetric, so(d) natural), diagonal actions
//! on N parties, the joint-kernel (trivial subspace) solver and the LME
//! verification machinery.

pub mod density;
pub mod groups;
pub mod kernel;
pub mod scalar;
pub mod sparse;
pub mod states;

pub use density::{is_lme, is_lme_weighted, reduced_density, reduced_density_weighted};
pub use groups::{
    boson_basis, boson_basis_weights, boson_dim, bosonic_all_mode_ops, bosonic_generator_ops,
    bosonic_mode_op, so_simple_root_ops, so_weight_transform, su_all_root_ops,
    su_simple_root_ops,
};
pub use kernel::{trivial_subspace, trivial_subspace_conjugated, KernelOptions};
pub use scalar::GaussianRational;
pub use sparse::{
    decode_index, diagonal_action, encode_index, LieError, SparseOperator, StateVector,
};
pub use states::{antisym_state, paper_boson_state, so_n4_states, PaperBosonState};

/// Trivial subspace for the natural SO(d) representation on N parties,
/// solved in the per-party weight basis (where the simple root operators
/// are graded) and mapped back to the |s⟩ basis.
pub fn so_trivial_subspace(
    d: usize,
    n_parties: usize,
    opts: &KernelOptions,
) -> Result<Vec<StateVector>, LieError> {
    let gens = so_simple_root_ops(d)?;
    let (t, t_inv) = so_weight_transform(d);
    trivial_subspace_conjugated(&gens, n_parties, &t, &t_inv, opts)
}
