use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;

use super::examples::{displayed_examples, DisplayedExample};
use super::grid::Grid;
use super::record::VerificationRecord;
use crate::error::Result;
use crate::exact::{
    check_linearization, compose_poly_tanh, conv_bg_gg_sides, conv_egg_ebg_sides, derivative_poly, pn_coefficient,
    Rational,
};
use crate::identity::{IdentityId, Params};
use crate::numeric::{EvalContext, MpFloat};
use crate::ring::{known_evaluations, lhs_spec, rhs_spec, ConstExpr, NormalForm, SumCombo};

/// Digits printed for the residual.
const RESIDUAL_DIGITS: usize = 6;

/// Pass threshold `10^-(digits-10)` for a context working at `digits`.
pub fn tolerance(digits: u32, bits: usize) -> MpFloat {
    let k = digits.saturating_sub(10).max(1);
    MpFloat::from_i64(10, bits).powi(-i64::from(k))
}

struct NumericOutcome {
    lhs: MpFloat,
    rhs: MpFloat,
    residual: MpFloat,
}

fn eval_pair(lhs: &SumCombo, rhs: &ConstExpr, ctx: &mut EvalContext) -> Result<NumericOutcome> {
    let l = ctx.eval_combo(lhs)?.value;
    let r = ctx.eval_const(rhs)?;
    let residual = &l - &r;
    Ok(NumericOutcome {
        lhs: l,
        rhs: r,
        residual,
    })
}

fn fill_numeric(
    mut rec: VerificationRecord,
    lhs: &SumCombo,
    rhs: &ConstExpr,
    ctx: &mut EvalContext,
) -> Result<VerificationRecord> {
    let digits = ctx.digits();
    let tol = tolerance(digits, ctx.bits());
    let first = eval_pair(lhs, rhs, ctx);
    let (out, bits) = match first {
        Ok(out) if out.residual.abs() < tol => (out, ctx.bits()),
        _ => {
            let mut hi = EvalContext::with_guard(2 * digits, ctx.guard());
            rec.retried = true;
            (eval_pair(lhs, rhs, &mut hi)?, hi.bits())
        }
    };
    let res = out.residual.abs();
    rec.passed = res < tol;
    rec.marginal = rec.passed && res.mul_i64(10) >= tol;
    rec.lhs = Some(out.lhs.to_decimal_string(digits as usize));
    rec.rhs = Some(out.rhs.to_decimal_string(digits as usize));
    rec.residual = Some(out.residual.to_decimal_string(RESIDUAL_DIGITS));
    rec.tolerance = Some(tol.to_decimal_string(1));
    rec.precision_bits = Some(bits);
    Ok(rec)
}

fn fill_exact(
    mut rec: VerificationRecord,
    lhs: Option<Rational>,
    rhs: Option<Rational>,
    residual: Rational,
) -> VerificationRecord {
    rec.passed = residual.is_zero();
    rec.lhs = lhs.map(|v| v.to_string());
    rec.rhs = rhs.map(|v| v.to_string());
    rec.residual = Some(residual.to_string());
    rec.tolerance = Some("0".to_string());
    rec
}

fn exact_record(id: IdentityId, params: &Params) -> Result<VerificationRecord> {
    let v = params.values();
    let rec = VerificationRecord::new(id, params.clone());
    Ok(match id {
        IdentityId::ConvEgg => {
            let (l, r) = conv_egg_ebg_sides(v[0], v[1], v[2], v[3], v[4])?;
            let res = &l - &r;
            fill_exact(rec, Some(l), Some(r), res)
        }
        IdentityId::ConvBgg => {
            let (l, r) = conv_bg_gg_sides(v[0], v[1])?;
            let res = &l - &r;
            fill_exact(rec, Some(l), Some(r), res)
        }
        IdentityId::PnGenocchi => {
            let (n, k) = (v[0], v[1]);
            let series = compose_poly_tanh(&derivative_poly(n as usize), k as usize);
            let l = series.coeff(k as usize)?.clone();
            let r = pn_coefficient(n, k);
            let res = &l - &r;
            fill_exact(rec, Some(l), Some(r), res)
        }
        IdentityId::Pmpn => fill_exact(rec, None, None, check_linearization(v[0], v[1], v[2])),
        _ => unreachable!("numeric identities handled by the caller"),
    })
}

/// Checks one identity instance.
///
/// Numeric identities compare the Euler-sum side against the closed form at
/// the precision of `ctx`; a failing comparison is rerun once at twice the
/// digits. Exact identities must have a zero rational residual.
pub fn verify_one(id: IdentityId, params: &Params, ctx: &mut EvalContext) -> Result<VerificationRecord> {
    id.validate(params)?;
    let start = Instant::now();
    let mut rec = if id.is_exact() {
        exact_record(id, params)?
    } else {
        let lhs = lhs_spec(id, params)?;
        let rhs = rhs_spec(id, params)?;
        let mut rec = VerificationRecord::new(id, params.clone());
        rec.label = Some(if id == IdentityId::KnownEval {
            let k = &known_evaluations()[params.values()[0] as usize];
            format!("{} = {}", k.label(), k.value)
        } else {
            format!("{lhs} = {}", rhs.normalize(NormalForm::PiForm))
        });
        fill_numeric(rec, &lhs, &rhs, ctx)?
    };
    rec.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    Ok(rec)
}

/// Checks a displayed example verbatim.
pub fn verify_example(ex: &DisplayedExample, ctx: &mut EvalContext) -> Result<VerificationRecord> {
    let params = Params::for_id(ex.id, ex.params)?;
    let lhs: SumCombo = ex.lhs.parse()?;
    let rhs: ConstExpr = ex.rhs.parse()?;
    let start = Instant::now();
    let mut rec = VerificationRecord::new(ex.id, params);
    rec.label = Some(format!("{} = {}", ex.lhs, ex.rhs));
    let mut rec = fill_numeric(rec, &lhs, &rhs, ctx)?;
    rec.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    Ok(rec)
}

fn catch(id: IdentityId, params: &Params, r: Result<VerificationRecord>) -> VerificationRecord {
    r.unwrap_or_else(|e| VerificationRecord::failure(id, params.clone(), &e))
}

/// Runs every point of `grid`, in parallel on the current rayon pool, and
/// returns the records in the grid's canonical order. Failed points are
/// recorded, not propagated.
pub fn verify_grid(grid: &Grid, template: &EvalContext) -> Vec<VerificationRecord> {
    let id = grid.id();
    grid.points()
        .par_iter()
        .map_init(|| template.fresh(), |ctx, p| catch(id, p, verify_one(id, p, ctx)))
        .collect()
}

/// Every displayed example followed by the eight known evaluations.
pub fn verify_examples(template: &EvalContext) -> Vec<VerificationRecord> {
    let mut out: Vec<VerificationRecord> = displayed_examples()
        .par_iter()
        .map_init(
            || template.fresh(),
            |ctx, ex| {
                verify_example(ex, ctx).unwrap_or_else(|e| {
                    let params = Params::new(ex.id.schema().iter().copied().zip(ex.params.iter().copied()));
                    let mut r = VerificationRecord::failure(ex.id, params, &e);
                    r.label = Some(format!("{} = {}", ex.lhs, ex.rhs));
                    r
                })
            },
        )
        .collect();
    let known = Grid::new(IdentityId::KnownEval);
    out.extend(verify_grid(&known, template));
    out
}

/// Default grids of every registered identity, in registry order.
pub fn verify_all(max_weight: u32, template: &EvalContext) -> Vec<VerificationRecord> {
    IdentityId::ALL
        .iter()
        .flat_map(|&id| verify_grid(&Grid::new(id).with_max_weight(max_weight), template))
        .collect()
}

/// Numeric agreement of the two closed forms for the same left side:
/// `TS_QEQ_COEFF (p, q)` against `SYM_TS (q, p, q)`, for odd `p`.
#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub same_lhs: bool,
    pub rhs_difference: MpFloat,
}

pub fn cross_check_qeq(p: u32, q: u32, ctx: &mut EvalContext) -> Result<CrossCheck> {
    let coeff = Params::for_id(IdentityId::TsQeqCoeff, &[p, q])?;
    let sym = Params::for_id(IdentityId::SymTs, &[q, p, q])?;
    let same_lhs = lhs_spec(IdentityId::TsQeqCoeff, &coeff)? == lhs_spec(IdentityId::SymTs, &sym)?;
    let a = ctx.eval_const(&rhs_spec(IdentityId::TsQeqCoeff, &coeff)?)?;
    let b = ctx.eval_const(&rhs_spec(IdentityId::SymTs, &sym)?)?;
    Ok(CrossCheck {
        same_lhs,
        rhs_difference: (a - b).abs(),
    })
}
