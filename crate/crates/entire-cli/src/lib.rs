//! Internals of the `entire` binary: the expression grammar, evaluation
//! into ring elements, JSON tensor input, and failure reporting. Exposed
//! as a library so the integration tests can drive the parser directly.

pub mod eval;
pub mod expr;
pub mod lie_io;
pub mod output;
