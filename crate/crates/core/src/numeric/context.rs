use std::collections::HashMap;

use num_traits::{One, Zero};

use super::double::{eval_double, DoubleSpec};
use super::float::MpFloat;
use crate::error::{Error, Result};
use crate::exact::{bernoulli, factorial, Rational};
use crate::ring::{Atom, ConstExpr, SumCombo, SumFamily, SumIndex};

pub const DEFAULT_DIGITS: u32 = 50;
pub const DEFAULT_GUARD: u32 = 15;

/// A numeric value together with a bound on its truncation error.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub value: MpFloat,
    /// Upper bound on `|value - exact|` from truncation and rounding.
    pub error_bound: f64,
    /// Number of directly summed outer terms.
    pub terms: usize,
}

/// Working precision plus per-context caches of atoms and Euler sums.
/// A context is meant to be owned by one task; results depend only on the
/// precision, so separate contexts with equal settings agree bit for bit.
#[derive(Clone, Debug)]
pub struct EvalContext {
    digits: u32,
    guard: u32,
    bits: usize,
    atoms: HashMap<Atom, MpFloat>,
    zetas: HashMap<u32, MpFloat>,
    sums: HashMap<SumIndex, Evaluation>,
    em: Vec<MpFloat>,
}

impl Default for EvalContext {
    fn default() -> Self {
        EvalContext::new(DEFAULT_DIGITS)
    }
}

impl EvalContext {
    pub fn new(digits: u32) -> Self {
        EvalContext::with_guard(digits, DEFAULT_GUARD)
    }

    pub fn with_guard(digits: u32, guard: u32) -> Self {
        let bits = ((digits + guard) as f64 * std::f64::consts::LOG2_10).ceil() as usize + 8;
        EvalContext {
            digits,
            guard,
            bits: bits.max(super::float::MIN_BITS),
            atoms: HashMap::new(),
            zetas: HashMap::new(),
            sums: HashMap::new(),
            em: Vec::new(),
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    /// A fresh context at the same settings, with empty caches.
    pub fn fresh(&self) -> Self {
        EvalContext::with_guard(self.digits, self.guard)
    }

    pub fn int(&self, n: i64) -> MpFloat {
        MpFloat::from_i64(n, self.bits)
    }

    pub fn rational(&self, r: &Rational) -> MpFloat {
        MpFloat::from_rational(r, self.bits)
    }

    /// `2^-bits`, the relative rounding unit.
    pub fn eps(&self) -> MpFloat {
        self.int(1).mul_pow2(-(self.bits as isize))
    }

    /// `B_{2k} / (2k)!` for `k = 1..=k_max`.
    pub(crate) fn em_coefficient(&mut self, k: usize) -> &MpFloat {
        while self.em.len() < k {
            let j = self.em.len() + 1;
            let c = bernoulli(2 * j) / Rational::from_integer(factorial(2 * j as u32));
            self.em.push(MpFloat::from_rational(&c, self.bits));
        }
        &self.em[k - 1]
    }

    /// Hurwitz zeta `zeta(s, x) = sum_{n>=0} (n + x)^{-s}` for `s >= 2`, `x > 0`,
    /// by Euler-Maclaurin summation after shifting `x` past a safe threshold.
    pub fn hurwitz(&mut self, s: u32, x: &MpFloat) -> Result<MpFloat> {
        if s < 2 {
            return Err(Error::invalid("hurwitz", "requires s >= 2"));
        }
        let threshold = (0.12 * self.bits as f64 + f64::from(s) / 2.0 + 8.0).ceil();
        let mut head = MpFloat::zero(self.bits);
        let mut x = x.with_bits(self.bits);
        let shift = (threshold - x.to_f64()).ceil();
        if shift > 0.0 {
            for _ in 0..shift as u64 {
                head += x.powi(-i64::from(s));
                x += self.int(1);
            }
        }
        let inv = x.recip();
        let inv2 = &inv * &inv;
        let xs = x.powi(-i64::from(s));
        let mut acc = &xs * &x / self.int(i64::from(s) - 1) + xs.mul_pow2(-1);
        let eps = self.eps() * acc.abs();
        // term_k = B_{2k}/(2k)! * (s)_{2k-1} * x^{-s-2k+1}
        let mut rising = self.int(i64::from(s));
        let mut power = &xs * &inv;
        let mut last: Option<MpFloat> = None;
        for k in 1.. {
            if k > 1 {
                let a = i64::from(s) + 2 * k as i64 - 3;
                rising = rising.mul_i64(a * (a + 1));
                power = power * &inv2;
            }
            let term = self.em_coefficient(k).clone() * &rising * &power;
            let mag = term.abs();
            if let Some(prev) = &last {
                if mag > *prev {
                    return Err(Error::PrecisionUnreachable(format!(
                        "Euler-Maclaurin series for zeta({s}, x) stopped converging"
                    )));
                }
            }
            acc += term;
            if mag < eps {
                break;
            }
            last = Some(mag);
        }
        Ok(head + acc)
    }

    /// Riemann `zeta(s)`, `s >= 2`.
    pub fn zeta(&mut self, s: u32) -> Result<MpFloat> {
        if let Some(v) = self.zetas.get(&s) {
            return Ok(v.clone());
        }
        let v = self.hurwitz(s, &self.int(1))?;
        self.zetas.insert(s, v.clone());
        Ok(v)
    }

    fn pi(&self) -> MpFloat {
        // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
        let atan_inv = |n: i64| {
            let x = self.int(n).recip();
            let x2 = &x * &x;
            let eps = self.eps();
            let mut power = x;
            let mut acc = MpFloat::zero(self.bits);
            let mut k = 0i64;
            loop {
                let term = power.div_i64(2 * k + 1);
                if term.abs() < eps {
                    break;
                }
                acc = if k % 2 == 0 { acc + term } else { acc - term };
                power = power * &x2;
                k += 1;
            }
            acc
        };
        atan_inv(5).mul_i64(16) - atan_inv(239).mul_i64(4)
    }

    fn li4_half(&self) -> MpFloat {
        let eps = self.eps();
        let mut acc = MpFloat::zero(self.bits);
        for n in 1i64.. {
            let term = self.int(1).mul_pow2(-(n as isize)).div_i64(n * n * n * n);
            acc += &term;
            if term < eps {
                break;
            }
        }
        acc
    }

    /// `zeta(s1, s2) = sum_{n > k >= 1} n^{-s1} k^{-s2}`.
    pub fn double_zeta(&mut self, s1: u32, s2: u32) -> Result<Evaluation> {
        eval_double(&DoubleSpec::zeta(s1, s2)?, self)
    }

    /// Alternating `zeta(-s, 1) = sum_{n > k} (-1)^n n^{-s} k^{-1}`, through the
    /// split of `n` by parity:
    /// `2^{-s-1} (zeta(s,1) + Sbar_{1,s} - R_{1,s} - T_{1,s})`.
    pub fn alt_zeta_bar1(&mut self, s: u32) -> Result<Evaluation> {
        let z = self.double_zeta(s, 1)?;
        let sb = self.euler_sum(SumIndex::new(SumFamily::SBar, 1, s))?;
        let r = self.euler_sum(SumIndex::new(SumFamily::R, 1, s))?;
        let t = self.euler_sum(SumIndex::new(SumFamily::T, 1, s))?;
        let v = (z.value + sb.value - r.value - t.value).mul_pow2(-(s as isize) - 1);
        let err = (z.error_bound + sb.error_bound + r.error_bound + t.error_bound) * 2f64.powi(-(s as i32) - 1);
        Ok(Evaluation {
            value: v,
            error_bound: err,
            terms: z.terms,
        })
    }

    /// Value of one atom at working precision (cached).
    pub fn atom(&mut self, a: Atom) -> Result<MpFloat> {
        if let Some(v) = self.atoms.get(&a) {
            return Ok(v.clone());
        }
        let v = match a {
            Atom::Zeta(s) => self.zeta(s)?,
            Atom::TBar(s) => {
                let z = self.zeta(s)?;
                z * self.int(1).mul_pow2(s as isize) - self.zeta(s)?
            }
            Atom::Ln2 => self.int(2).ln(),
            Atom::Pi => self.pi(),
            Atom::Li4Half => self.li4_half(),
            Atom::AltZeta51 => self.alt_zeta_bar1(5)?.value,
            Atom::AltZeta71 => self.alt_zeta_bar1(7)?.value,
            Atom::Zeta62 => self.double_zeta(6, 2)?.value,
        };
        self.atoms.insert(a, v.clone());
        Ok(v)
    }

    /// Numeric value of a symbolic constant.
    pub fn eval_const(&mut self, e: &ConstExpr) -> Result<MpFloat> {
        let mut acc = MpFloat::zero(self.bits);
        for (m, c) in e.terms() {
            let mut prod = self.rational(c);
            for &(a, k) in m.factors() {
                prod = prod * self.atom(a)?.powi(i64::from(k));
            }
            acc += prod;
        }
        Ok(acc)
    }

    /// One Euler sum or double value (cached).
    pub fn euler_sum(&mut self, idx: SumIndex) -> Result<Evaluation> {
        if let Some(v) = self.sums.get(&idx) {
            return Ok(v.clone());
        }
        idx.validate()?;
        let v = match idx.family {
            SumFamily::T | SumFamily::SBar | SumFamily::R => eval_double(&DoubleSpec::linear(idx)?, self)?,
            SumFamily::SmallT | SumFamily::BigT => {
                let (s1, s2) = (idx.p, idx.q);
                let (fam, shift) = match idx.family {
                    SumFamily::SmallT => (SumFamily::T, -((s1 + s2) as isize)),
                    _ => (SumFamily::SBar, 2 - (s1 + s2) as isize),
                };
                let e = self.euler_sum(SumIndex::new(fam, s2, s1))?;
                Evaluation {
                    value: e.value.mul_pow2(shift),
                    error_bound: e.error_bound * 2f64.powi(shift as i32),
                    terms: e.terms,
                }
            }
        };
        self.sums.insert(idx, v.clone());
        Ok(v)
    }

    /// Value of a rational combination of Euler sums, with the summed error bound.
    pub fn eval_combo(&mut self, c: &SumCombo) -> Result<Evaluation> {
        let mut acc = MpFloat::zero(self.bits);
        let mut err = 0.0;
        let mut terms = 0;
        for (idx, coeff) in c.terms() {
            let e = self.euler_sum(*idx)?;
            err += e.error_bound * rational_abs_f64(coeff);
            terms = terms.max(e.terms);
            acc += self.rational(coeff) * e.value;
        }
        Ok(Evaluation {
            value: acc,
            error_bound: err,
            terms,
        })
    }
}

fn rational_abs_f64(r: &Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let v = MpFloat::from_rational(r, 64).to_f64().abs();
    if r.denom().is_one() {
        v
    } else {
        v * (1.0 + 1e-15)
    }
}

/// `eval_atom(a, ctx)`: numeric value of an atom.
pub fn eval_atom(a: Atom, ctx: &mut EvalContext) -> Result<MpFloat> {
    ctx.atom(a)
}

/// Numeric value of a linear Euler sum (`T`, `Sbar`, `R`) or double value.
pub fn eval_euler_sum(idx: SumIndex, ctx: &mut EvalContext) -> Result<Evaluation> {
    ctx.euler_sum(idx)
}

/// `t(s1,s2) = 2^{-s1-s2} T_{s2,s1}` and `T(s1,s2) = 2^{2-s1-s2} Sbar_{s2,s1}`.
pub fn eval_double_value(idx: SumIndex, ctx: &mut EvalContext) -> Result<Evaluation> {
    match idx.family {
        SumFamily::SmallT | SumFamily::BigT => ctx.euler_sum(idx),
        _ => Err(Error::invalid(idx.to_string(), "not a double t- or T-value")),
    }
}
