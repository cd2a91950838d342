//! Symbolic constants, Euler-sum index combinations and the closed forms
//! built from them.

mod atom;
pub mod builders;
mod expr;
mod known;
mod lambda;
mod registry;
mod sums;

pub use atom::Atom;
pub use expr::{even_zeta_pi_coefficient, ConstExpr, Monomial, NormalForm};
pub use known::{known_evaluations, KnownEvaluation};
pub use lambda::{lambda_op, Linear};
pub use registry::{lhs_spec, rhs_spec};
pub use sums::{SumCombo, SumFamily, SumIndex};
