//! Arbitrary-precision evaluation of constants, Euler sums and double values.

mod context;
mod double;
mod float;
mod harmonic;
mod oracle;

pub use context::{
    eval_atom, eval_double_value, eval_euler_sum, EvalContext, Evaluation, DEFAULT_DIGITS, DEFAULT_GUARD,
};
pub use float::{MpFloat, MIN_BITS};
pub use harmonic::HarmonicState;
pub use oracle::{eval_double_oracle, tail_bound, OracleKind, OracleValue};

#[cfg(test)]
mod tests;
