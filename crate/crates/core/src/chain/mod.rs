//! Chains of twists: construction, evaluation on `V⊗V`, and verification.

mod carrier;
mod spec;
mod verify;

pub use carrier::{carrier_basis, Carrier};
pub use spec::{
    build_chain, chain_inverse, chain_matrix, ChainParams, ChainSpec, ChainStyle, LinkParams, ReshetikhinTerm,
    SigmaName,
};
pub use verify::{
    coproduct_table_check, e_minus_is_primitive, extended_table, jordanian_table, link_prefix, primitivity_and_so_g3,
    twisted_coproduct, verify_twist_equation, CoproductIdentity, LinkStage, TwistedCoproduct,
};
