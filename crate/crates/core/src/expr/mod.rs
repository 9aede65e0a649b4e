//! Expressions in `U(so(M))` and two-leg tensors, evaluated in the defining
//! representation, under the primitive coproduct, or under the counit.

mod factor;
mod tensor;
mod uexpr;

pub use factor::{deformed_generator, deformed_generator_rev, factor_exponent, FactorKind, SigmaRef, TwistFactor};
pub use tensor::{tensor_eval, tensor_rep, TensorExpr, TensorTerm};
pub use uexpr::{coproduct_eval, counit_eval, eval_in_rep, Evaluator, Hom, Node, UExpr};
