use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use dashu_base::{BitTest, Sign, UnsignedAbs};
use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::exact::Rational;
use crate::ring::Linear;

pub(crate) type Float = FBig<HalfEven, 2>;

pub const MIN_BITS: usize = 64;

/// Binary floating-point number with an explicit working precision.
///
/// Arithmetic between two values runs at the larger of the two precisions.
#[derive(Clone, Debug, PartialEq)]
pub struct MpFloat(pub(crate) Float);

pub(crate) fn to_ibig(n: &BigInt) -> IBig {
    IBig::from_le_bytes(&n.to_signed_bytes_le())
}

impl MpFloat {
    pub fn zero(bits: usize) -> Self {
        MpFloat(Float::ZERO.with_precision(bits.max(MIN_BITS)).value())
    }

    pub fn from_i64(n: i64, bits: usize) -> Self {
        MpFloat(Float::from(n).with_precision(bits.max(MIN_BITS)).value())
    }

    pub fn from_bigint(n: &BigInt, bits: usize) -> Self {
        MpFloat(Float::from(to_ibig(n)).with_precision(bits.max(MIN_BITS)).value())
    }

    pub fn from_rational(r: &Rational, bits: usize) -> Self {
        let num = MpFloat::from_bigint(r.numer(), bits);
        if r.denom() == &BigInt::from(1) {
            num
        } else {
            num / MpFloat::from_bigint(r.denom(), bits)
        }
    }

    /// Exact conversion of an `f64` (which has at most 53 significant bits).
    pub fn from_f64(x: f64, bits: usize) -> Self {
        let v = Float::try_from(x).expect("finite f64");
        MpFloat(v.with_precision(bits.max(MIN_BITS)).value())
    }

    pub fn bits(&self) -> usize {
        self.0.precision()
    }

    pub fn with_bits(&self, bits: usize) -> Self {
        MpFloat(self.0.clone().with_precision(bits.max(MIN_BITS)).value())
    }

    pub fn is_zero(&self) -> bool {
        self.0.repr().is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.sign() == Sign::Negative && !self.is_zero()
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    /// `log2 |x|` rounded down; `None` for zero.
    pub fn log2_floor(&self) -> Option<isize> {
        if self.is_zero() {
            return None;
        }
        let repr = self.0.repr();
        let bits = repr.significand().unsigned_abs().bit_len() as isize;
        Some(repr.exponent() + bits - 1)
    }

    /// `x^n` for any integer `n`; `x` must be nonzero when `n < 0`.
    pub fn powi(&self, n: i64) -> Self {
        MpFloat(self.0.powi(IBig::from(n)))
    }

    pub fn recip(&self) -> Self {
        MpFloat::from_i64(1, self.bits()) / self.clone()
    }

    pub fn ln(&self) -> Self {
        MpFloat(self.0.ln())
    }

    pub fn sqrt(&self) -> Self {
        use dashu_base::SquareRoot;
        MpFloat(self.0.sqrt())
    }

    pub fn mul_i64(&self, n: i64) -> Self {
        self.clone() * MpFloat::from_i64(n, self.bits())
    }

    pub fn div_i64(&self, n: i64) -> Self {
        self.clone() / MpFloat::from_i64(n, self.bits())
    }

    /// Multiplies by `2^e` exactly.
    pub fn mul_pow2(&self, e: isize) -> Self {
        let (sig, exp) = self.0.repr().clone().into_parts();
        MpFloat(Float::from_parts(sig, exp + e).with_precision(self.bits()).value())
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let dec = self.0.to_decimal().value().with_precision(digits).value();
        let (sig, exp) = dec.repr().clone().into_parts();
        let neg = sig.sign() == Sign::Negative;
        let mut s = sig.unsigned_abs().to_string();
        let mut exp = exp;
        while s.len() > 1 && s.ends_with('0') {
            s.pop();
            exp += 1;
        }
        // value = s * 10^exp; scientific exponent of the leading digit
        let sci = exp + s.len() as isize - 1;
        let body = if (-6..=20).contains(&sci) {
            if exp >= 0 {
                format!("{s}{}", "0".repeat(exp as usize))
            } else {
                let point = s.len() as isize + exp;
                if point > 0 {
                    format!("{}.{}", &s[..point as usize], &s[point as usize..])
                } else {
                    format!("0.{}{s}", "0".repeat((-point) as usize))
                }
            }
        } else if s.len() == 1 {
            format!("{s}e{sci}")
        } else {
            format!("{}.{}e{sci}", &s[..1], &s[1..])
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }

    /// `|self| < 10^-digits`.
    pub fn below_ten_pow(&self, digits: u32) -> bool {
        match self.log2_floor() {
            None => true,
            Some(l) if l < -1100 => true,
            Some(_) => self.abs().to_f64() < 10f64.powi(-(digits as i32)),
        }
    }
}

impl fmt::Display for MpFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f
            .precision()
            .unwrap_or_else(|| (self.bits() as f64 / std::f64::consts::LOG2_10) as usize);
        f.write_str(&self.to_decimal_string(digits))
    }
}

impl Serialize for MpFloat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl PartialOrd for MpFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr for MpFloat {
            type Output = MpFloat;
            fn $m(self, rhs: MpFloat) -> MpFloat {
                MpFloat($tr::$m(self.0, rhs.0))
            }
        }
        impl $tr<&MpFloat> for &MpFloat {
            type Output = MpFloat;
            fn $m(self, rhs: &MpFloat) -> MpFloat {
                MpFloat($tr::$m(&self.0, &rhs.0))
            }
        }
        impl $tr<&MpFloat> for MpFloat {
            type Output = MpFloat;
            fn $m(self, rhs: &MpFloat) -> MpFloat {
                MpFloat($tr::$m(self.0, &rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl AddAssign<&MpFloat> for MpFloat {
    fn add_assign(&mut self, rhs: &MpFloat) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for MpFloat {
    fn add_assign(&mut self, rhs: MpFloat) {
        self.0 += rhs.0;
    }
}

impl Neg for MpFloat {
    type Output = MpFloat;
    fn neg(self) -> MpFloat {
        MpFloat(-self.0)
    }
}

impl Linear for MpFloat {
    fn scaled(self, c: &Rational) -> Self {
        let bits = self.bits();
        self * MpFloat::from_rational(c, bits)
    }

    fn plus(self, rhs: Self) -> Self {
        self + rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_rendering() {
        let third = MpFloat::from_i64(1, 128) / MpFloat::from_i64(3, 128);
        assert_eq!(third.to_decimal_string(10), "0.3333333333");
        assert_eq!(MpFloat::from_i64(-1234, 64).to_decimal_string(10), "-1234");
        let tiny = MpFloat::from_i64(1, 128).mul_pow2(-200);
        assert_eq!(tiny.to_decimal_string(5), "6.223e-61");
        assert_eq!(MpFloat::zero(64).to_decimal_string(5), "0");
    }

    #[test]
    fn rational_conversion() {
        let r = Rational::new(BigInt::from(-7), BigInt::from(8));
        assert_eq!(MpFloat::from_rational(&r, 64).to_f64(), -0.875);
        let big = Rational::from_integer(BigInt::from(10).pow(40));
        assert_eq!(MpFloat::from_rational(&big, 200).to_decimal_string(50), "1e40");
    }

    #[test]
    fn magnitude_tests() {
        let x = MpFloat::from_i64(1, 256).mul_pow2(-140);
        assert!(x.below_ten_pow(40));
        assert!(!x.below_ten_pow(43));
        assert_eq!(MpFloat::from_i64(8, 64).log2_floor(), Some(3));
        assert_eq!(MpFloat::from_i64(-9, 64).log2_floor(), Some(3));
    }
}
