//! Root data, realizations and link frames of `so(M)`.

mod frame;
mod grading;
mod model;
mod realization;

pub use frame::{block_generators, has_terminal_so3, link_frame, max_links, Invariant, InvariantKind, LinkFrame};
pub use grading::{gradation_and_pmax, p_max_formula, GradedPiece, Gradation};
pub use model::{a_matrix, build_algebra, matrix_unit, positive_roots, root_system, AlgebraModel, Gen, Root, Series};
pub use realization::{m_realization, realization_check, Decomposer};
