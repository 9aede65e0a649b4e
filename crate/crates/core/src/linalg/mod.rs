//! Exact scalar arithmetic and sparse matrix algebra.

pub mod elim;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod sparse;
pub mod tensor;

pub use elim::{exact_rank_det, rank};
pub use poly::{poly_interpolate, Poly};
pub use scalar::{format_rational, parse_rational, Scalar};
pub use series::{exp_nilpotent, log1p_nilpotent, nilpotent_series, pow1p_nilpotent, SeriesKind};
pub use sparse::{mat_ops, MatOp, SparseMat};
pub use tensor::{flip_and_k, leg_embed, swap_legs, TransposeForm};
