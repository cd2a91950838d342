//! Bernoulli and Genocchi numbers, binomials and factorials in exact arithmetic.
//!
//! Bernoulli numbers follow the generating function `t/(e^t - 1)`, so
//! `B_1 = -1/2`. That sign is what makes `G_n = 2(1 - 2^n) B_n` hold at
//! `n = 1` (`G_1 = 1`).

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational value type used throughout the exact kernel.
pub type Rational = BigRational;

/// `C(a, b)`, defined as zero whenever `b < 0` or `b > a` (and for `a < 0`).
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Same as [`binomial`] but as an exact rational.
pub fn binomial_q(a: i64, b: i64) -> Rational {
    Rational::from_integer(binomial(a, b))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn pow2(n: u32) -> BigInt {
    BigInt::one() << n as usize
}

fn bernoulli_table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// `B_n` with `B_1 = -1/2`, from `sum_{k=0}^{n} C(n+1, k) B_k = 0`.
///
/// Values are memoized in a process-wide table that only ever grows; every
/// entry is written once under the write lock, so readers on any thread see
/// the same values a fresh computation would produce.
pub fn bernoulli(n: usize) -> Rational {
    {
        let table = bernoulli_table().read().expect("bernoulli table poisoned");
        if let Some(b) = table.get(n) {
            return b.clone();
        }
    }
    let mut table = bernoulli_table().write().expect("bernoulli table poisoned");
    while table.len() <= n {
        let m = table.len();
        if m >= 3 && m % 2 == 1 {
            table.push(Rational::zero());
            continue;
        }
        let mut acc = Rational::zero();
        for (k, bk) in table.iter().enumerate() {
            if bk.is_zero() {
                continue;
            }
            acc += bk * binomial_q(m as i64 + 1, k as i64);
        }
        let bm = -acc / Rational::from_integer(BigInt::from(m + 1));
        table.push(bm);
    }
    table[n].clone()
}

/// Genocchi number `G_n = 2 (1 - 2^n) B_n`.
pub fn genocchi(n: usize) -> Rational {
    let factor = BigInt::from(2) * (BigInt::one() - pow2(n as u32));
    bernoulli(n) * Rational::from_integer(factor)
}

/// Largest absolute value in a list of rationals, zero for an empty list.
pub fn max_abs<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values
        .into_iter()
        .map(|v| v.abs())
        .fold(Rational::zero(), |a, b| if b > a { b } else { a })
}
