//! Frobenius subalgebras of `B(so(M))`: nondegenerate forms, stationary
//! subalgebras and degree-2 Lie algebra cohomology.

mod forms;
mod subalgebra;

pub use forms::{
    carrier_subalgebra, cocycle_tests, gen_form_functional, gram_and_nondegeneracy, h_star, omega_forms,
    stationary_and_transitivity, LinearFunctional, Stationary, TwoCochain,
};
pub use subalgebra::{lkm_dim, lkm_split, subalgebra_lkm, SubalgebraBasis};
