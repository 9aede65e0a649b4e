//! Matrix documents, chain configuration files, text rendering and golden
//! comparison.

mod config;
mod golden;
mod matrix;
mod render;

pub use config::{AlgebraSection, ChainConfig, LinkSection, ReshetikhinSection, TerminalSection};
pub use golden::{golden_compare, load_golden, Erratum, GoldenDiff, GoldenDocument, Mismatch};
pub use matrix::{emit_matrix, parse_matrix, MatrixDocument, MATRIX_SCHEMA};
pub use render::{render_text, unit_label};
