//! Linearization coefficients and the Bernoulli/Genocchi convolution identities
//! derived from products of derivative polynomials of `tanh`.
//!
//! Every `check_*` function returns `LHS - RHS` (or the largest coefficient
//! residual) as an exact rational, so zero means the identity holds.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::numbers::{bernoulli, binomial, binomial_q, factorial, genocchi, max_abs, pow2, Rational};
use super::poly::{compose_poly_tanh, derivative_poly};
use crate::error::{Error, Result};

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Linearization coefficient `rho_{m,n}^{(k)}`.
///
/// `k = 0`: `m! n! / (m+n+1)!`; `k >= 1`:
/// `(-1)^m C(n, m+n+1-2k) + (-1)^n C(m, m+n+1-2k)` with out-of-range
/// binomials equal to zero.
pub fn rho(m: u32, n: u32, k: u32) -> Rational {
    if k == 0 {
        return Rational::new(factorial(m) * factorial(n), factorial(m + n + 1));
    }
    let b = i64::from(m) + i64::from(n) + 1 - 2 * i64::from(k);
    let sign = |e: u32| {
        if e.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    Rational::from_integer(sign(m) * binomial(n.into(), b) + sign(n) * binomial(m.into(), b))
}

/// Closed form of `[t^k] P_n(tanh t)`:
/// `-G_{k+n+1}/(k+n+1) * 2^{k+n}/k!`, plus one when `n = k = 0`.
pub fn pn_coefficient(n: u32, k: u32) -> Rational {
    let s = k + n + 1;
    let mut c = -genocchi(s as usize) / int(s.into()) * Rational::new(pow2(k + n), factorial(k));
    if n == 0 && k == 0 {
        c += Rational::one();
    }
    c
}

/// Largest `|[t^k] P_n(tanh t) - closed form|` over `k <= order`.
pub fn check_pn_coefficients(n: u32, order: u32) -> Rational {
    let series = compose_poly_tanh(&derivative_poly(n as usize), order as usize);
    let residuals: Vec<Rational> = (0..=order)
        .map(|k| series.coeffs()[k as usize].clone() - pn_coefficient(n, k))
        .collect();
    max_abs(&residuals)
}

/// Closed form of `[t^l] P_m(tanh t) P_n(tanh t)` from the linearization of
/// `P_m P_n` in the basis `P_j`.
pub fn linearization_coefficient(m: u32, n: u32, l: u32) -> Rational {
    let s = l + m + n;
    let mut bracket = rho(m, n, 0) * genocchi(s as usize + 2) / int(i64::from(s) + 2);
    for k in 1..=(m + n) / 2 {
        let idx = s + 2 - 2 * k;
        bracket += rho(m, n, k) * bernoulli(2 * k as usize) * genocchi(idx as usize)
            / (int(2 * i64::from(k)) * int(idx.into()));
    }
    let mut c = bracket * Rational::new(pow2(s + 1), factorial(l));
    if l == 0 && m == 0 && n == 0 {
        c += Rational::one();
    }
    c
}

/// Largest coefficient residual of the linearization identity through `t^order`.
pub fn check_linearization(m: u32, n: u32, order: u32) -> Rational {
    let order_us = order as usize;
    let pm = compose_poly_tanh(&derivative_poly(m as usize), order_us);
    let pn = compose_poly_tanh(&derivative_poly(n as usize), order_us);
    let product = &pm * &pn;
    let residuals: Vec<Rational> = (0..=order)
        .map(|l| product.coeffs()[l as usize].clone() - linearization_coefficient(m, n, l))
        .collect();
    max_abs(&residuals)
}

/// Residual of the even/odd Genocchi convolution
///
/// `sum_k C(2n+2-d-e, 2k+1-d) G_{2k+2a+2}/(k+a+1) * G_{2n-2k+2g+2}/(n-k+g+1)`
/// against `4 rho^{(0)} G_{2n+2a+2g+4}/(n+a+g+2)
/// + 2 sum_{k=1}^{a+g+[(d+e)/2]} rho^{(k)} B_{2k}/k * G_{2n-2k+2a+2g+4}/(n-k+a+g+2)`,
/// where `rho` is taken at `(2a+d, 2g+e)`.
pub fn check_conv_egg_ebg(n: u32, alpha: u32, gamma: u32, delta: u32, epsilon: u32) -> Result<Rational> {
    let (lhs, rhs) = conv_egg_ebg_sides(n, alpha, gamma, delta, epsilon)?;
    Ok(lhs - rhs)
}

/// Both sides of the even/odd Genocchi convolution, see [`check_conv_egg_ebg`].
pub fn conv_egg_ebg_sides(n: u32, alpha: u32, gamma: u32, delta: u32, epsilon: u32) -> Result<(Rational, Rational)> {
    if delta > 1 || epsilon > 1 {
        return Err(Error::invalid("check_conv_egg_ebg", "delta and epsilon must be 0 or 1"));
    }
    let (n, a, g, d, e) = (n as i64, alpha as i64, gamma as i64, delta as i64, epsilon as i64);
    let gq = |i: i64| genocchi(i as usize);

    let mut lhs = Rational::zero();
    for k in 0..=n {
        lhs += binomial_q(2 * n + 2 - d - e, 2 * k + 1 - d) * gq(2 * k + 2 * a + 2) / int(k + a + 1)
            * gq(2 * n - 2 * k + 2 * g + 2)
            / int(n - k + g + 1);
    }

    let (rm, rn) = ((2 * a + d) as u32, (2 * g + e) as u32);
    let mut rhs = int(4) * rho(rm, rn, 0) * gq(2 * n + 2 * a + 2 * g + 4) / int(n + a + g + 2);
    for k in 1..=(a + g + (d + e) / 2) {
        rhs += int(2) * rho(rm, rn, k as u32) * bernoulli(2 * k as usize) / int(k)
            * gq(2 * n - 2 * k + 2 * a + 2 * g + 4)
            / int(n - k + a + g + 2);
    }
    Ok((lhs, rhs))
}

/// Residual of the Bernoulli/Genocchi convolution
///
/// `sum_{i<q} C(q-1,i) B_{q+i} G_{2n+q-i}/((q+i)(2n+q-i))
/// + 1/4 sum_{i<=2n} (-1)^i C(2n,i) G_{q+i} G_{2n+q-i}/((q+i)(2n+q-i))`
/// against `(-1)^q / (q C(2q,q)) * G_{2n+2q}/(2n+2q)`. Requires `q >= 2`.
pub fn check_conv_bg_gg(n: u32, q: u32) -> Result<Rational> {
    let (lhs, rhs) = conv_bg_gg_sides(n, q)?;
    Ok(lhs - rhs)
}

/// Both sides of the Bernoulli/Genocchi convolution, see [`check_conv_bg_gg`].
pub fn conv_bg_gg_sides(n: u32, q: u32) -> Result<(Rational, Rational)> {
    if q < 2 {
        return Err(Error::invalid(
            "check_conv_bg_gg",
            format!("q must be at least 2, got {q}"),
        ));
    }
    let (n, q) = (n as i64, q as i64);
    let mut lhs = Rational::zero();
    for i in 0..q {
        let j = 2 * n + q - i;
        lhs += binomial_q(q - 1, i) * bernoulli((q + i) as usize) * genocchi(j as usize) / (int(q + i) * int(j));
    }
    let mut conv = Rational::zero();
    for i in 0..=2 * n {
        let j = 2 * n + q - i;
        let term = binomial_q(2 * n, i) * genocchi((q + i) as usize) * genocchi(j as usize) / (int(q + i) * int(j));
        if i % 2 == 0 {
            conv += term;
        } else {
            conv -= term;
        }
    }
    lhs += conv / int(4);
    let sign = if q % 2 == 0 { int(1) } else { int(-1) };
    let rhs = sign / (int(q) * binomial_q(2 * q, q)) * genocchi((2 * n + 2 * q) as usize) / int(2 * n + 2 * q);
    Ok((lhs, rhs))
}
