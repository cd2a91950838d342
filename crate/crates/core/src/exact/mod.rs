//! Exact big-rational kernel: Bernoulli/Genocchi numbers, derivative
//! polynomials of `tanh`, truncated series and the convolution identities
//! built on them.

mod convolution;
mod numbers;
mod poly;

pub use convolution::{
    check_conv_bg_gg, check_conv_egg_ebg, check_linearization, check_pn_coefficients, conv_bg_gg_sides,
    conv_egg_ebg_sides, linearization_coefficient, pn_coefficient, rho,
};
pub use numbers::{bernoulli, binomial, binomial_q, factorial, genocchi, max_abs, pow2, Rational};
pub use poly::{compose_poly_tanh, derivative_poly, tanh_series, IntPoly, RatSeries};
