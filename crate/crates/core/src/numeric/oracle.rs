//! Slow double-precision oracle: literal summation of the defining double
//! series, used only to cross-check the fast path at about 15 digits.

use super::float::MpFloat;
use crate::error::{Error, Result};
use crate::ring::SumFamily;

const MAX_TERMS: u64 = 10_000_000_000;
const ZETA2_UP: f64 = 1.65;

/// The double series the oracle can sum, named by their arguments `(s1, s2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    /// `t(s1,s2) = sum over odd n1 > n2 >= 1 of n1^{-s1} n2^{-s2}`.
    SmallT,
    /// `T(s1,s2) = 4 sum over n1 > n2 >= 1 of (2n1-2)^{-s1} (2n2-1)^{-s2}`.
    BigT,
    /// `zeta(s1,s2) = sum_{n>k} n^{-s1} k^{-s2}`.
    Zeta,
    /// `zeta(-s1,s2) = sum_{n>k} (-1)^n n^{-s1} k^{-s2}`.
    AltZeta,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleValue {
    pub value: MpFloat,
    /// Bound on truncation plus floating-point error.
    pub bound: f64,
    pub terms: u64,
}

#[derive(Default)]
struct Kahan {
    sum: f64,
    c: f64,
    abs: f64,
}

impl Kahan {
    fn add(&mut self, x: f64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
        self.abs += x.abs();
    }
}

/// `int_a^inf A(y) y^{-s} dy` where `A(y) = 2 + ln(8y)` when `log_inner`,
/// otherwise `A = c_inner`.
fn integral(a: f64, s: u32, log_inner: bool, c_inner: f64) -> f64 {
    let s1 = f64::from(s) - 1.0;
    let head = a.powf(-s1);
    if log_inner {
        head * ((2.0 + (8.0 * a).ln()) / s1 + 1.0 / (s1 * s1))
    } else {
        head * c_inner / s1
    }
}

fn check_terms(n: u64) -> Result<()> {
    if n > MAX_TERMS {
        return Err(Error::PrecisionUnreachable(format!(
            "{n} terms exceed the oracle cap of {MAX_TERMS}"
        )));
    }
    Ok(())
}

/// Provable bound on the discarded tail after `n` outer terms.
///
/// For `T`, `Sbar`, `R` the indices are `(p, q)` of the linear sum and the
/// tail is `sum_{m>n}`. For `SmallT` and `BigT` they are the arguments
/// `(s1, s2)` and the tail is the part of the oracle's outer sum beyond its
/// `n`-th term.
pub fn tail_bound(family: SumFamily, p: u32, q: u32, n: u64) -> Result<MpFloat> {
    if n < 2 {
        return Err(Error::invalid("tail_bound", "requires N >= 2"));
    }
    check_terms(n)?;
    let nf = n as f64;
    let b = match family {
        SumFamily::T | SumFamily::SBar | SumFamily::R => {
            if q < 2 {
                return Err(Error::invalid("tail_bound", "requires q >= 2"));
            }
            let beta = if family == SumFamily::SBar { 0.0 } else { 0.5 };
            let inner = match (family, p) {
                (_, 1) => None,
                (SumFamily::R, _) => Some(ZETA2_UP),
                _ => Some((2f64.powi(p as i32) - 1.0) * ZETA2_UP),
            };
            integral(nf - beta, q, inner.is_none(), inner.unwrap_or(0.0))
        }
        SumFamily::SmallT => oracle_tail(OracleKind::SmallT, p, q, n),
        SumFamily::BigT => oracle_tail(OracleKind::BigT, p, q, n),
    };
    Ok(MpFloat::from_f64(b, 64))
}

fn oracle_tail(kind: OracleKind, s1: u32, s2: u32, n: u64) -> f64 {
    let log_inner = s2 == 1;
    let nf = n as f64;
    match kind {
        OracleKind::SmallT => 0.5 * integral(2.0 * nf - 1.0, s1, log_inner, ZETA2_UP),
        OracleKind::BigT => 2.0 * integral(2.0 * nf, s1, log_inner, ZETA2_UP),
        OracleKind::Zeta => integral(nf, s1, log_inner, ZETA2_UP),
        OracleKind::AltZeta => unreachable!("alternating tail is computed from the next term"),
    }
}

/// Literal double summation over `terms` outer indices, with running
/// prefix sums for the inner index and compensated addition.
pub fn eval_double_oracle(kind: OracleKind, s1: u32, s2: u32, terms: u64) -> Result<OracleValue> {
    if terms < 10 {
        return Err(Error::invalid("eval_double_oracle", "requires at least 10 terms"));
    }
    if s2 < 1 || (s1 < 2 && kind != OracleKind::AltZeta) || s1 < 1 {
        return Err(Error::invalid("eval_double_oracle", "divergent arguments"));
    }
    check_terms(terms)?;
    let (e1, e2) = (-(s1 as i32), -(s2 as i32));
    let mut outer = Kahan::default();
    let mut inner = Kahan::default();
    let mut bound;
    match kind {
        OracleKind::SmallT => {
            // odd n1 = 2j - 1; inner sum over odd n2 < n1
            for j in 1..=terms {
                let n1 = (2 * j - 1) as f64;
                outer.add(inner.sum * n1.powi(e1));
                inner.add(n1.powi(e2));
            }
            bound = oracle_tail(kind, s1, s2, terms);
        }
        OracleKind::BigT => {
            // even m1 = 2n1 - 2 > odd m2 = 2n2 - 1
            for n1 in 2..=terms + 1 {
                let m2 = (2 * n1 - 3) as f64;
                inner.add(m2.powi(e2));
                let m1 = (2 * n1 - 2) as f64;
                outer.add(4.0 * inner.sum * m1.powi(e1));
            }
            bound = oracle_tail(kind, s1, s2, terms);
        }
        OracleKind::Zeta => {
            for n in 1..=terms {
                let nf = n as f64;
                outer.add(inner.sum * nf.powi(e1));
                inner.add(nf.powi(e2));
            }
            bound = oracle_tail(kind, s1, s2, terms);
        }
        OracleKind::AltZeta => {
            let term = |n: u64, h: f64| {
                let v = h * (n as f64).powi(e1);
                if n.is_multiple_of(2) {
                    v
                } else {
                    -v
                }
            };
            for n in 1..=terms {
                outer.add(term(n, inner.sum));
                inner.add((n as f64).powi(e2));
            }
            // average of two consecutive partial sums
            let next = term(terms + 1, inner.sum);
            let avg = outer.sum + next / 2.0;
            let next2 = (inner.sum + ((terms + 1) as f64).powi(e2)) * ((terms + 2) as f64).powi(e1);
            bound = (next.abs() + next2.abs()) / 2.0;
            outer.sum = avg;
        }
    }
    bound += 2.0 * f64::from(s1 + s2 + 8) * f64::EPSILON * outer.abs;
    Ok(OracleValue {
        value: MpFloat::from_f64(outer.sum, 64),
        bound,
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_2_1_is_zeta_3() {
        let v = eval_double_oracle(OracleKind::Zeta, 2, 1, 1_000_000).unwrap();
        let z3 = 1.2020569031595942;
        assert!(
            (v.value.to_f64() - z3).abs() <= v.bound,
            "{} vs {z3}, bound {}",
            v.value.to_f64(),
            v.bound
        );
        assert!(v.bound < 1e-4);
    }

    #[test]
    fn frozen_double_zetas() {
        let v = eval_double_oracle(OracleKind::Zeta, 6, 2, 20_000).unwrap();
        assert!((v.value.to_f64() - 0.017819740416835988).abs() < 1e-15);
        let v = eval_double_oracle(OracleKind::AltZeta, 5, 1, 100_000).unwrap();
        assert!((v.value.to_f64() - 0.026399148793116947).abs() < 1e-15);
        assert!(v.bound < 1e-15);
        let v = eval_double_oracle(OracleKind::AltZeta, 7, 1, 100_000).unwrap();
        assert!((v.value.to_f64() - 0.007_217_895_875_394_202).abs() < 1e-15);
    }

    #[test]
    fn tail_bounds() {
        let b = tail_bound(SumFamily::SBar, 1, 5, 1_000_000).unwrap().to_f64();
        assert!(b < 1e-20 && b > 0.0);
        assert!(tail_bound(SumFamily::T, 1, 2, 1).is_err());
        assert!(tail_bound(SumFamily::T, 1, 2, 100_000_000_000).is_err());
        // q >= 3: bound below summand(N) * N / (q - 2) with summand ~ (2 + ln 4N) N^-q
        let n = 100_000u64;
        let b = tail_bound(SumFamily::T, 1, 4, n).unwrap().to_f64();
        let nf = n as f64;
        assert!(b < (2.0 + (4.0 * nf).ln()) * nf.powi(-4) * nf / 2.0 * 1.1);
    }
}
