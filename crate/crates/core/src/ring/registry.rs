use super::builders::*;
use super::expr::ConstExpr;
use super::known::known_evaluations;
use super::sums::{SumCombo, SumFamily, SumIndex};
use crate::error::{Error, Result};
use crate::identity::{IdentityId, Params};

fn args(id: IdentityId, params: &Params) -> Result<Vec<u32>> {
    id.validate(params)?;
    if id.is_exact() {
        return Err(Error::invalid(id.as_str(), "exact identity has no Euler-sum side"));
    }
    Ok(params.values())
}

/// Left-hand side of a numeric identity as a weighted list of Euler sums.
pub fn lhs_spec(id: IdentityId, params: &Params) -> Result<SumCombo> {
    let v = args(id, params)?;
    match id {
        IdentityId::SymTs => lhs_sym_ts(v[0], v[1], v[2]),
        IdentityId::Ts1q => lhs_sym_ts(1, 1, v[0]),
        IdentityId::TsQ1q => lhs_sym_ts(v[0], 1, v[0]),
        IdentityId::TsQ3q => lhs_sym_ts(v[0], 3, v[0]),
        IdentityId::TsQ5q => lhs_sym_ts(v[0], 5, v[0]),
        IdentityId::TsQeqCoeff => lhs_sym_ts(v[1], v[0], v[1]),
        IdentityId::TsQeqEven => lhs_sym_ts(v[0], 2 * v[1], v[0]),
        IdentityId::Ts2e2 => lhs_ts2e2(v[0]),
        IdentityId::TsQ345 => lhs_ts_q345(v[0], v[1]),
        IdentityId::SymTtv => lhs_sym_ttv(v[0], v[1], v[2]),
        IdentityId::SymR => lhs_sym_r(v[0], v[1], v[2]),
        IdentityId::R1q => Ok(SumCombo::single(SumIndex::new(SumFamily::R, 1, v[0]))),
        IdentityId::LaR => lhs_la_r(v[0], v[1]),
        IdentityId::SymT => lhs_sym_t(v[0], v[1], v[2]),
        IdentityId::LaT => lhs_la_t(v[0], v[1]),
        IdentityId::KnownEval => Ok(SumCombo::single(known_evaluations()[v[0] as usize].index)),
        _ => unreachable!("exact identities rejected above"),
    }
}

/// Closed-form right-hand side of a numeric identity.
pub fn rhs_spec(id: IdentityId, params: &Params) -> Result<ConstExpr> {
    let v = args(id, params)?;
    match id {
        IdentityId::SymTs | IdentityId::SymTtv => rhs_sym_ts(v[0], v[1], v[2]),
        IdentityId::Ts1q => rhs_ts1q(v[0]),
        IdentityId::TsQ1q => rhs_ts_q1q(v[0]),
        IdentityId::TsQ3q => rhs_ts_q3q(v[0]),
        IdentityId::TsQ5q => rhs_ts_q5q(v[0]),
        IdentityId::TsQeqCoeff => rhs_ts_qeq_coeff(v[0], v[1]),
        IdentityId::TsQeqEven => rhs_ts_qeq_even(v[0], v[1]),
        IdentityId::Ts2e2 => rhs_ts2e2(v[0]),
        IdentityId::TsQ345 => rhs_ts_q345(v[0], v[1]),
        IdentityId::SymR => rhs_sym_r(v[0], v[1], v[2]),
        IdentityId::R1q => rhs_r1q(v[0]),
        IdentityId::LaR => rhs_la_r(v[0], v[1]),
        IdentityId::SymT => rhs_sym_t(v[0], v[1], v[2]),
        IdentityId::LaT => rhs_la_t(v[0], v[1]),
        IdentityId::KnownEval => Ok(known_evaluations()[v[0] as usize].value.clone()),
        _ => unreachable!("exact identities rejected above"),
    }
}
