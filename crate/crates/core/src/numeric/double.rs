//! Double sums `D = sum_{n>=1} (n - beta)^{-q} A_n`, `A_n = sum_{k=1}^{n-1+delta} (k - alpha)^{-p}`,
//! with `alpha, beta` in `{0, 1/2}`.
//!
//! The first `N` outer terms are summed directly. For the rest,
//! `sum_{n>N} b_n A_n = A_N zeta(q, N+1-beta) + sum_{k>=N+delta} (k-alpha)^{-p} zeta(q, k-alpha+c)`
//! with `c = 1 - delta - beta + alpha`, and the inner Hurwitz zeta is replaced
//! by its asymptotic expansion in `z = k - alpha`,
//! `zeta(q, z+c) ~ sum_r (-1)^r B_r(c) (q)_{r-1} / r! z^{1-q-r}`,
//! which turns the second piece into `sum_r e_r zeta(p+q-1+r, N+delta-alpha)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::context::{EvalContext, Evaluation};
use super::float::MpFloat;
use super::harmonic::HarmonicState;
use crate::error::{Error, Result};
use crate::exact::{bernoulli, pow2, Rational};
use crate::ring::{SumFamily, SumIndex};

const MAX_TAIL_TERMS: u32 = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct DoubleSpec {
    /// Inner exponent `p`.
    pub inner: u32,
    /// Outer exponent `q`.
    pub outer: u32,
    pub alpha_half: bool,
    pub beta_half: bool,
    pub delta: u32,
}

impl DoubleSpec {
    pub fn linear(idx: SumIndex) -> Result<Self> {
        idx.validate()?;
        let (alpha_half, beta_half, delta) = match idx.family {
            SumFamily::T => (true, true, 0),
            SumFamily::SBar => (true, false, 1),
            SumFamily::R => (false, true, 0),
            _ => return Err(Error::invalid(idx.to_string(), "not a linear Euler sum")),
        };
        Ok(DoubleSpec {
            inner: idx.p,
            outer: idx.q,
            alpha_half,
            beta_half,
            delta,
        })
    }

    pub fn zeta(s1: u32, s2: u32) -> Result<Self> {
        if s1 < 2 || s2 < 1 {
            return Err(Error::invalid(
                format!("zeta({s1},{s2})"),
                "requires s1 >= 2 and s2 >= 1",
            ));
        }
        Ok(DoubleSpec {
            inner: s2,
            outer: s1,
            alpha_half: false,
            beta_half: false,
            delta: 0,
        })
    }

    fn c(&self) -> Rational {
        let half = |b: bool| {
            if b {
                Rational::new(1.into(), 2.into())
            } else {
                Rational::zero()
            }
        };
        Rational::from_integer((1 - self.delta as i64).into()) - half(self.beta_half) + half(self.alpha_half)
    }
}

/// `B_r(c)` for `c` in `{1/2, 1}`.
fn bernoulli_poly_at(r: usize, c: &Rational) -> Rational {
    if c.is_one() {
        if r == 1 {
            Rational::new(1.into(), 2.into())
        } else {
            bernoulli(r)
        }
    } else {
        debug_assert_eq!(c, &Rational::new(1.into(), 2.into()));
        let scale = Rational::new(BigInt::one(), pow2(r as u32)) * Rational::from_integer(2.into()) - Rational::one();
        bernoulli(r) * scale
    }
}

/// Offset `x - 1/2` or `x` as an exact float.
fn shifted(ctx: &EvalContext, n: u64, half: bool) -> MpFloat {
    if half {
        ctx.int(2 * n as i64 - 1).mul_pow2(-1)
    } else {
        ctx.int(n as i64)
    }
}

pub(crate) fn eval_double(spec: &DoubleSpec, ctx: &mut EvalContext) -> Result<Evaluation> {
    let (p, q) = (spec.inner, spec.outer);
    let bits = ctx.bits();
    let n_direct = (bits / 3 + 10) as u64;
    let delta = u64::from(spec.delta);

    let mut state = HarmonicState::new(&[p], bits);
    let mut direct = MpFloat::zero(bits);
    let inner = |s: &HarmonicState| {
        if spec.alpha_half {
            s.odd(p).clone()
        } else {
            s.big(p).clone()
        }
    };
    for n in 1..=n_direct {
        while state.n() < n - 1 + delta {
            state.advance();
        }
        let b = shifted(ctx, n, spec.beta_half).powi(-i64::from(q));
        direct += b * inner(&state);
    }
    let a_n = inner(&state);

    let first = shifted(ctx, n_direct + 1, spec.beta_half);
    let tail1 = a_n * ctx.hurwitz(q, &first)?;
    let mut total = direct + tail1;

    let z0 = shifted(ctx, n_direct + delta, spec.alpha_half);
    let c = spec.c();
    let eps = ctx.eps() * total.abs();
    // ratio = (q)_{r-1} / r!
    let mut ratio = Rational::one() / Rational::from_integer((q as i64 - 1).into());
    let mut last = MpFloat::zero(bits);
    let mut prev_mag: Option<MpFloat> = None;
    let mut converged = false;
    for r in 0..=MAX_TAIL_TERMS {
        if r == 1 {
            ratio = Rational::one();
        } else if r >= 2 {
            ratio *= Rational::new((q + r - 2).into(), r.into());
        }
        let b = bernoulli_poly_at(r as usize, &c);
        if b.is_zero() {
            continue;
        }
        let e = if r % 2 == 0 { b * &ratio } else { -b * &ratio };
        let term = ctx.rational(&e) * ctx.hurwitz(p + q - 1 + r, &z0)?;
        let mag = term.abs();
        total += &term;
        if mag < eps {
            last = mag;
            converged = true;
            break;
        }
        if let Some(prev) = &prev_mag {
            if r > 8 && mag > *prev {
                break;
            }
        }
        prev_mag = Some(mag);
    }
    if !converged {
        return Err(Error::PrecisionUnreachable(format!(
            "tail expansion for the double sum (p={p}, q={q}) did not reach 2^-{bits}"
        )));
    }
    let rounding = total.abs().to_f64() * 2f64.powi(-(bits as i32)) * (4 * n_direct + 64) as f64;
    Ok(Evaluation {
        value: total,
        error_bound: 2.0 * last.to_f64() + rounding,
        terms: n_direct as usize,
    })
}
