//! Linear Euler-sum variants `T`, `S̄`, `R`, double t/T-values, their
//! symmetric closed forms, and the exact Bernoulli/Genocchi convolution
//! identities, with a verifier that checks them at high precision.

pub mod error;
pub mod exact;
pub mod identity;
pub mod numeric;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{IntPoly, RatSeries, Rational};
pub use identity::{IdentityId, Params};
pub use numeric::{EvalContext, Evaluation, MpFloat};
pub use ring::{Atom, ConstExpr, SumCombo, SumFamily, SumIndex};
pub use verify::{Grid, Summary, VerificationRecord};
