//! Integer polynomials and truncated rational power series.

use std::fmt;
use std::ops::{Add, Mul};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::numbers::{factorial, genocchi, pow2, Rational};
use crate::error::{Error, Result};

/// Dense polynomial with integer coefficients; `coeffs[i]` multiplies `y^i`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * i).collect())
    }

    pub fn eval_rational(&self, y: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * y + Rational::from_integer(c.clone()))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

/// Renders highest degree first, e.g. `2*y^3 - 2*y`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("y")?,
                _ => write!(f, "y^{i}")?,
            }
        }
        Ok(())
    }
}

fn derivative_poly_table() -> &'static RwLock<Vec<IntPoly>> {
    static TABLE: OnceLock<RwLock<Vec<IntPoly>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![IntPoly::from_i64(&[0, 1])]))
}

/// Derivative polynomial `P_n` of the hyperbolic tangent:
/// `P_0(y) = y`, `P_{n+1}(y) = (1 - y^2) P_n'(y)`, so that
/// `P_n(tanh t)` is the n-th derivative of `tanh t`.
pub fn derivative_poly(n: usize) -> IntPoly {
    {
        let table = derivative_poly_table().read().expect("poly table poisoned");
        if let Some(p) = table.get(n) {
            return p.clone();
        }
    }
    let mut table = derivative_poly_table().write().expect("poly table poisoned");
    let one_minus_y2 = IntPoly::from_i64(&[1, 0, -1]);
    while table.len() <= n {
        let next = &one_minus_y2 * &table.last().expect("seeded").derivative();
        table.push(next);
    }
    table[n].clone()
}

/// Power series in `t` known exactly through `t^order`.
///
/// Coefficients past the truncation order are never materialized; asking
/// for one is an error rather than a silent zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatSeries {
    coeffs: Vec<Rational>,
    order: usize,
}

impl RatSeries {
    /// Builds a series valid through `t^order`; missing coefficients are zero,
    /// extra ones are dropped.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        RatSeries { coeffs, order }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Result<&Rational> {
        self.coeffs.get(k).ok_or(Error::BeyondTruncation {
            requested: k,
            order: self.order,
        })
    }

    /// Term-wise derivative; loses one order of validity.
    pub fn derivative(&self) -> Result<RatSeries> {
        if self.order == 0 {
            return Err(Error::BeyondTruncation { requested: 1, order: 0 });
        }
        let coeffs = (1..=self.order)
            .map(|k| &self.coeffs[k] * Rational::from_integer(k.into()))
            .collect();
        Ok(RatSeries::new(coeffs, self.order - 1))
    }

    /// Evaluates `p(self)`. Valid through the same order as `self`, since
    /// products of series valid through `t^N` are valid through `t^N`.
    pub fn compose_poly(&self, p: &IntPoly) -> RatSeries {
        let mut acc = RatSeries::constant(Rational::zero(), self.order);
        for c in p.coeffs().iter().rev() {
            acc = &acc * self;
            acc.coeffs[0] += Rational::from_integer(c.clone());
        }
        acc
    }
}

impl Add for &RatSeries {
    type Output = RatSeries;

    fn add(self, rhs: &RatSeries) -> RatSeries {
        let order = self.order.min(rhs.order);
        RatSeries::new((0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(), order)
    }
}

impl Mul for &RatSeries {
    type Output = RatSeries;

    fn mul(self, rhs: &RatSeries) -> RatSeries {
        let order = self.order.min(rhs.order);
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        RatSeries::new(out, order)
    }
}

/// `tanh t = -sum_{n>=1} G_{2n} (2t)^{2n-1} / (2n)!`, truncated at `t^order`.
pub fn tanh_series(order: usize) -> Result<RatSeries> {
    if order < 1 {
        return Err(Error::invalid("tanh_series", "order must be at least 1"));
    }
    let mut coeffs = vec![Rational::zero(); order + 1];
    for n in 1.. {
        let k = 2 * n - 1;
        if k > order {
            break;
        }
        let scale = Rational::new(pow2(k as u32), factorial(2 * n as u32));
        coeffs[k] = -genocchi(2 * n) * scale;
    }
    Ok(RatSeries::new(coeffs, order))
}

/// Truncated series of `P(tanh t)` through `t^order`.
pub fn compose_poly_tanh(p: &IntPoly, order: usize) -> RatSeries {
    let tanh = tanh_series(order.max(1)).expect("order >= 1");
    let composed = tanh.compose_poly(p);
    RatSeries::new(composed.coeffs[..=order].to_vec(), order)
}
