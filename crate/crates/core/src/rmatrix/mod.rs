//! Quantum and classical R-matrices, the semiclassical limit, and the
//! twisted Yangian `R(u)`.

mod classical;
mod quantum;
mod semiclassical;
mod yangian;

pub use classical::{classical_r_build, cybe_check, cybe_check_matrix, ClassicalLink, ClassicalR};
pub use quantum::{legs3, r_from_chain, r_from_twist, tensor_root, unitarity_check, ybe_check, RMatrix};
pub use semiclassical::{expected_classical_r, scaled_params, semiclassical_extract, Semiclassical, KAPPA};
pub use yangian::{
    passing_k_conventions, spectral_ybe_check, yangian_polynomiality_check, yangian_r, YangianTwist, LOCKED_K,
};
