//! Closed-form right-hand sides and explicit left-hand sides of the
//! symmetric Euler-sum identities.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::expr::ConstExpr;
use super::lambda::lambda_op;
use super::sums::{SumCombo, SumFamily, SumIndex};
use crate::error::{Error, Result};
use crate::exact::{binomial, binomial_q, factorial, genocchi, pow2, Rational};

fn sign(n: u32) -> Rational {
    if n.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

fn z(s: u32) -> ConstExpr {
    ConstExpr::zeta(s)
}

fn tb(s: u32) -> ConstExpr {
    ConstExpr::tbar(s)
}

fn fam(f: SumFamily) -> impl Fn(u32, u32) -> SumCombo {
    move |a, b| SumCombo::single(SumIndex::new(f, a, b))
}

fn fam_swapped(f: SumFamily) -> impl Fn(u32, u32) -> SumCombo {
    move |a, b| SumCombo::single(SumIndex::new(f, b, a))
}

fn need(cond: bool, ctx: &str, why: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::invalid(ctx, why))
    }
}

fn check_mpq(ctx: &str, m: u32, p: u32, q: u32) -> Result<()> {
    need(m >= 1 && p >= 1, ctx, "requires m, p >= 1")?;
    need(q >= 2, ctx, "requires q >= 2")
}

/// `(-1)^{m-1} lambda_p(T_{m,q}) + (-1)^{p-1} lambda_m(Sbar_{p,q})`.
pub fn lhs_sym_ts(m: u32, p: u32, q: u32) -> Result<SumCombo> {
    check_mpq("lhs_sym_ts", m, p, q)?;
    let t = lambda_op(p, m, q, fam(SumFamily::T))?.scale(&sign(m - 1));
    let s = lambda_op(m, p, q, fam(SumFamily::SBar))?.scale(&sign(p - 1));
    Ok(t + s)
}

/// `(-1)^m lambda_p((-1)^m tbar(m) tbar(q)) + (-1)^p lambda_m((-1)^p tbar(p) zeta(q))
///  - lambda_q(zeta(m) tbar(p))`.
pub fn rhs_sym_ts(m: u32, p: u32, q: u32) -> Result<ConstExpr> {
    check_mpq("rhs_sym_ts", m, p, q)?;
    let a = lambda_op(p, m, q, |a, b| (tb(a) * tb(b)).scale(&sign(a)))?.scale(&sign(m));
    let b = lambda_op(m, p, q, |a, b| (tb(a) * z(b)).scale(&sign(a)))?.scale(&sign(p));
    let c = lambda_op(q, m, p, |a, b| z(a) * tb(b))?;
    Ok(a + b - c)
}

/// The closed form with explicit Genocchi coefficient, valid for odd `p`;
/// equals `rhs_sym_ts(q, p, q)`.
pub fn rhs_ts_qeq_coeff(p: u32, q: u32) -> Result<ConstExpr> {
    need(p % 2 == 1, "rhs_ts_qeq_coeff", "requires odd p")?;
    need(q >= 2, "rhs_ts_qeq_coeff", "requires q >= 2")?;
    let (pi, qi) = (i64::from(p), i64::from(q));
    let mut out = ConstExpr::zero();
    for i in 0..p {
        if (q + i) % 2 == 1 {
            let ii = i64::from(i);
            let c = big(binomial(qi + ii - 1, ii) * binomial(pi + qi - 2 - ii, pi - 1 - ii));
            out += (tb(q + i) * tb(p + q - 1 - i)).scale(&c);
        }
    }
    out = out.scale(&sign(q - 1));
    let w = p - 1 + 2 * q;
    let c = sign((p - 1) / 2) * big(binomial(pi - 2 + 2 * qi, pi - 1)) * genocchi(w as usize) / big(factorial(w))
        * big(pow2(w))
        / int(8);
    Ok(out + ConstExpr::pi_pow(w).scale(&c))
}

/// `-2 sum_{i+j=q-1, i odd} C(2n+i-1, i) C(q+j-1, j) tbar(2n+i) zeta(q+j)`;
/// equals `rhs_sym_ts(q, 2n, q)`.
pub fn rhs_ts_qeq_even(q: u32, n: u32) -> Result<ConstExpr> {
    need(q >= 2 && n >= 1, "rhs_ts_qeq_even", "requires q >= 2 and n >= 1")?;
    let mut out = ConstExpr::zero();
    for i in (1..q).step_by(2) {
        let j = q - 1 - i;
        let c = binomial_q(i64::from(2 * n + i) - 1, i.into()) * binomial_q(i64::from(q + j) - 1, j.into());
        out += (tb(2 * n + i) * z(q + j)).scale(&(c * int(-2)));
    }
    Ok(out)
}

/// `1/2 sum_{i+j=2n-1} (i+1)(j+1) T_{i+2,j+2} + n Sbar_{2n+1,2} + Sbar_{2n,3}`.
pub fn lhs_ts2e2(n: u32) -> Result<SumCombo> {
    need(n >= 1, "lhs_ts2e2", "requires n >= 1")?;
    let mut out = SumCombo::default();
    for i in 0..2 * n {
        let j = 2 * n - 1 - i;
        out.add_term(
            SumIndex::new(SumFamily::T, i + 2, j + 2),
            Rational::new(((i + 1) * (j + 1)).into(), 2.into()),
        );
    }
    out.add_term(SumIndex::new(SumFamily::SBar, 2 * n + 1, 2), int(n.into()));
    out.add_term(SumIndex::new(SumFamily::SBar, 2 * n, 3), Rational::one());
    Ok(out)
}

/// `n (2^{2n+1} - 1) / 3 * pi^2 zeta(2n+1)`.
pub fn rhs_ts2e2(n: u32) -> Result<ConstExpr> {
    need(n >= 1, "rhs_ts2e2", "requires n >= 1")?;
    let c = big(BigInt::from(n) * (pow2(2 * n + 1) - 1)) / int(3);
    Ok((ConstExpr::pi_pow(2) * z(2 * n + 1)).scale(&c))
}

/// `lambda_{2n}(T_{q,q}) + (-1)^q lambda_q(Sbar_{2n,q})` for `q` in 3..=5.
pub fn lhs_ts_q345(q: u32, n: u32) -> Result<SumCombo> {
    need(
        (3..=5).contains(&q) && n >= 1,
        "lhs_ts_q345",
        "requires q in {3, 4, 5} and n >= 1",
    )?;
    Ok(lhs_sym_ts(q, 2 * n, q)?.scale(&sign(q - 1)))
}

pub fn rhs_ts_q345(q: u32, n: u32) -> Result<ConstExpr> {
    need(
        (3..=5).contains(&q) && n >= 1,
        "rhs_ts_q345",
        "requires q in {3, 4, 5} and n >= 1",
    )?;
    let nn = i64::from(n);
    let cubic = (2 * nn + 2) * (2 * nn + 1) * (2 * nn);
    let e = match q {
        3 => (z(4) * tb(2 * n + 1)).scale(&int(-12 * nn)),
        4 => {
            (z(6) * tb(2 * n + 1)).scale(&int(40 * nn))
                + (z(4) * tb(2 * n + 3)).scale(&Rational::new(cubic.into(), 3.into()))
        }
        _ => {
            (z(8) * tb(2 * n + 1)).scale(&int(-140 * nn))
                + (z(6) * tb(2 * n + 3)).scale(&Rational::new((-5 * cubic).into(), 3.into()))
        }
    };
    Ok(e)
}

/// `2 ln2 tbar(q) - sum_{j=1}^{q-2} zeta(q-j) tbar(j+1)`, the value of `T_{1,q} + Sbar_{1,q}`.
pub fn rhs_ts1q(q: u32) -> Result<ConstExpr> {
    need(q >= 2, "rhs_ts1q", "requires q >= 2")?;
    let mut out = (ConstExpr::ln2() * tb(q)).scale(&int(2));
    for j in 1..q.saturating_sub(1) {
        out = out - z(q - j) * tb(j + 1);
    }
    Ok(out)
}

fn even_tail(q: u32, weight: impl Fn(u32) -> Rational, shift: u32) -> ConstExpr {
    let mut out = ConstExpr::zero();
    for k in 1..=q / 2 {
        let c = weight(k) * binomial_q(i64::from(2 * q - 1 - 2 * k), i64::from(q - 2 * k)) * int(-2);
        out += (tb(2 * k + shift) * z(2 * q - 2 * k)).scale(&c);
    }
    out
}

/// Value of `(-1)^{q-1} T_{q,q} + lambda_q(Sbar_{1,q})`.
pub fn rhs_ts_q1q(q: u32) -> Result<ConstExpr> {
    need(q >= 2, "rhs_ts_q1q", "requires q >= 2")?;
    Ok(tb(q).pow(2) + even_tail(q, |_| Rational::one(), 0))
}

/// Value of `(-1)^{q-1} lambda_3(T_{q,q}) + lambda_q(Sbar_{3,q})`.
pub fn rhs_ts_q3q(q: u32) -> Result<ConstExpr> {
    need(q >= 2, "rhs_ts_q3q", "requires q >= 2")?;
    let qq = i64::from(q);
    let head = (tb(q) * tb(q + 2)).scale(&int(qq * (qq + 1))) - tb(q + 1).pow(2).scale(&int(qq * qq));
    Ok(head + even_tail(q, |k| binomial_q(i64::from(2 * k + 1), 2), 2))
}

/// Value of `(-1)^{q-1} lambda_5(T_{q,q}) + lambda_q(Sbar_{5,q})`.
pub fn rhs_ts_q5q(q: u32) -> Result<ConstExpr> {
    need(q >= 2, "rhs_ts_q5q", "requires q >= 2")?;
    let qq = i64::from(q);
    let c1 = binomial_q(qq + 3, 4) * int(2);
    let c2 = binomial_q(qq + 2, 3) * int(-2 * qq);
    let c3 = binomial_q(qq + 1, 2) * binomial_q(qq + 1, 2);
    let head = (tb(q) * tb(q + 4)).scale(&c1) + (tb(q + 1) * tb(q + 3)).scale(&c2) + tb(q + 2).pow(2).scale(&c3);
    Ok(head + even_tail(q, |k| binomial_q(i64::from(2 * k + 3), 4), 4))
}

/// `(-1)^{m-1} 2^{m+p+q-1} lambda_p(t(q,m)) + (-1)^{p-1} 2^{m+p+q-3} lambda_m(T(q,p))`.
pub fn lhs_sym_ttv(m: u32, p: u32, q: u32) -> Result<SumCombo> {
    check_mpq("lhs_sym_ttv", m, p, q)?;
    let w = m + p + q;
    let t = lambda_op(p, m, q, fam_swapped(SumFamily::SmallT))?.scale(&(sign(m - 1) * big(pow2(w - 1))));
    let s = lambda_op(m, p, q, fam_swapped(SumFamily::BigT))?.scale(&(sign(p - 1) * big(pow2(w - 3))));
    Ok(t + s)
}

/// `(-1)^{m-1} lambda_p(R_{m,q}) + (-1)^{p-1} lambda_m(R_{p,q})`.
pub fn lhs_sym_r(m: u32, p: u32, q: u32) -> Result<SumCombo> {
    check_mpq("lhs_sym_r", m, p, q)?;
    let a = lambda_op(p, m, q, fam(SumFamily::R))?.scale(&sign(m - 1));
    let b = lambda_op(m, p, q, fam(SumFamily::R))?.scale(&sign(p - 1));
    Ok(a + b)
}

fn sym_r_like(m: u32, p: u32, q: u32, even_only: bool) -> Result<ConstExpr> {
    let inner = |a: u32, b: u32| {
        let c = if even_only {
            if a.is_multiple_of(2) {
                int(2)
            } else {
                Rational::zero()
            }
        } else {
            sign(a)
        };
        (z(a) * tb(b)).scale(&c)
    };
    let w = m + p + q;
    let head = tb(w - 1).scale(&big(binomial(i64::from(w) - 2, i64::from(q) - 1)));
    let a = lambda_op(p, m, q, inner)?.scale(&sign(m));
    let b = lambda_op(m, p, q, inner)?.scale(&sign(p));
    let c = lambda_op(q, m, p, |a, b| tb(a) * tb(b))?;
    Ok(head + a + b - c)
}

pub fn rhs_sym_r(m: u32, p: u32, q: u32) -> Result<ConstExpr> {
    check_mpq("rhs_sym_r", m, p, q)?;
    sym_r_like(m, p, q, false)
}

/// Value of `R_{1,q}`.
pub fn rhs_r1q(q: u32) -> Result<ConstExpr> {
    need(q >= 2, "rhs_r1q", "requires q >= 2")?;
    let mut out = tb(q + 1).scale(&Rational::new(q.into(), 2.into())) - (ConstExpr::ln2() * tb(q)).scale(&int(2));
    for j in 1..q.saturating_sub(1) {
        out = out - (tb(q - j) * tb(j + 1)).scale(&Rational::new(1.into(), 2.into()));
    }
    Ok(out)
}

/// `lambda_p(R_{p,q})` for `p, q >= 2`.
pub fn lhs_la_r(p: u32, q: u32) -> Result<SumCombo> {
    need(p >= 2 && q >= 2, "lhs_la_r", "requires p, q >= 2")?;
    lambda_op(p, p, q, fam(SumFamily::R))
}

pub fn rhs_la_r(p: u32, q: u32) -> Result<ConstExpr> {
    need(p >= 2 && q >= 2, "rhs_la_r", "requires p, q >= 2")?;
    let w = 2 * p + q;
    let bracket =
        tb(w - 1).scale(&big(binomial(i64::from(w) - 2, i64::from(q) - 1))) - lambda_op(q, p, p, |a, b| tb(a) * tb(b))?;
    let half = sign(p - 1) / int(2);
    let tail = lambda_op(p, p, q, |a, b| (z(a) * tb(b)).scale(&sign(a)))?;
    Ok(bracket.scale(&half) - tail)
}

/// `2^{m+p+q-3} ((-1)^m lambda_p(T(m,q)) + (-1)^p lambda_m(T(p,q)))`.
pub fn lhs_sym_t(m: u32, p: u32, q: u32) -> Result<SumCombo> {
    need(m >= 2 && p >= 2 && q >= 2, "lhs_sym_t", "requires m, p, q >= 2")?;
    let scale = big(pow2(m + p + q - 3));
    let a = lambda_op(p, m, q, fam(SumFamily::BigT))?.scale(&sign(m));
    let b = lambda_op(m, p, q, fam(SumFamily::BigT))?.scale(&sign(p));
    Ok((a + b).scale(&scale))
}

pub fn rhs_sym_t(m: u32, p: u32, q: u32) -> Result<ConstExpr> {
    need(m >= 2 && p >= 2 && q >= 2, "rhs_sym_t", "requires m, p, q >= 2")?;
    sym_r_like(m, p, q, true)
}

/// `lambda_p(T(p,q))` for `p, q >= 2`.
pub fn lhs_la_t(p: u32, q: u32) -> Result<SumCombo> {
    need(p >= 2 && q >= 2, "lhs_la_t", "requires p, q >= 2")?;
    lambda_op(p, p, q, fam(SumFamily::BigT))
}

pub fn rhs_la_t(p: u32, q: u32) -> Result<ConstExpr> {
    need(p >= 2 && q >= 2, "rhs_la_t", "requires p, q >= 2")?;
    let w = 2 * p + q;
    let bracket =
        tb(w - 1).scale(&big(binomial(i64::from(w) - 2, i64::from(q) - 1))) - lambda_op(q, p, p, |a, b| tb(a) * tb(b))?;
    let head = bracket.scale(&(sign(p) / big(pow2(w - 2))));
    let tail = lambda_op(p, p, q, |a, b| {
        let c = if a % 2 == 0 { int(2) } else { Rational::zero() };
        (z(a) * tb(b)).scale(&c)
    })?;
    Ok(head + tail.scale(&(Rational::one() / big(pow2(w - 3)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::NormalForm;

    fn pi(e: &ConstExpr) -> ConstExpr {
        e.normalize(NormalForm::PiForm)
    }

    fn expr(s: &str) -> ConstExpr {
        s.parse().unwrap()
    }

    fn combo(s: &str) -> SumCombo {
        s.parse().unwrap()
    }

    /// The displayed examples are rescalings of the theorem's left-hand side;
    /// both sides must carry the same factor.
    fn assert_display(lhs: SumCombo, rhs: ConstExpr, shown_lhs: &str, shown_rhs: &str) {
        let shown = combo(shown_lhs);
        let (idx, c) = shown.terms().next().unwrap();
        let (_, c0) = lhs.terms().find(|(i, _)| *i == idx).unwrap();
        let factor = c0 / c;
        assert_eq!(lhs, shown.scale(&factor), "{shown_lhs}");
        assert_eq!(pi(&rhs), expr(shown_rhs).scale(&factor), "{shown_rhs}");
    }

    #[test]
    fn sym_ts_examples() {
        assert_eq!(pi(&rhs_sym_ts(1, 1, 2).unwrap()), expr("pi^2*ln2"));
        assert_eq!(pi(&rhs_sym_ts(1, 1, 3).unwrap()), expr("14*ln2*z(3) - 1/12*pi^4"));
        assert_eq!(pi(&rhs_sym_ts(2, 1, 2).unwrap()), expr("1/12*pi^4"));
        let cases = [
            ((2, 1, 2), "T[2,2] - 2*S[1,3] - S[2,2]", "-1/12*pi^4"),
            ((2, 2, 2), "T[2,3] + T[3,2] + S[2,3] + S[3,2]", "7/3*pi^2*z(3)"),
            (
                (3, 3, 3),
                "2*T[3,5] + 3*T[4,4] + 2*T[5,3] + 2*S[3,5] + 3*S[4,4] + 2*S[5,3]",
                "868*z(3)*z(5) - 17/180*pi^8",
            ),
            (
                (2, 3, 2),
                "3*T[2,4] + 4*T[3,3] + 3*T[4,2] - 2*S[3,3] - 3*S[4,2]",
                "196*z(3)^2 - 1/3*pi^6",
            ),
            (
                (4, 2, 4),
                "T[4,5] + T[5,4] + 5*S[2,7] + 5*S[3,6] + 3*S[4,5] + S[5,4]",
                "31/45*pi^4*z(5) + 2/27*pi^6*z(3)",
            ),
        ];
        for ((m, p, q), l, r) in cases {
            assert_display(lhs_sym_ts(m, p, q).unwrap(), rhs_sym_ts(m, p, q).unwrap(), l, r);
        }
    }

    #[test]
    fn sym_ts_lhs_expansion() {
        assert_eq!(lhs_sym_ts(1, 1, 2).unwrap(), combo("T[1,2] + S[1,2]"));
        assert_eq!(lhs_sym_ts(2, 1, 3).unwrap(), combo("-T[2,3] + 3*S[1,4] + S[2,3]"));
    }

    #[test]
    fn sym_r_examples() {
        assert_eq!(
            pi(&rhs_sym_r(1, 1, 2).unwrap()).scale(&Rational::new(1.into(), 2.into())),
            expr("7*z(3) - pi^2*ln2")
        );
        assert_eq!(lhs_sym_r(2, 2, 3).unwrap(), combo("-6*R[2,4] - 4*R[3,3]"));
        assert_display(
            lhs_sym_r(2, 2, 3).unwrap(),
            rhs_sym_r(2, 2, 3).unwrap(),
            "3*R[2,4] + 2*R[3,3]",
            "112*z(3)^2 - 1/6*pi^6",
        );
        assert_display(
            lhs_sym_r(4, 5, 6).unwrap(),
            rhs_sym_r(4, 5, 6).unwrap(),
            "42*R[4,10] + 56*R[5,9] + 35*R[6,8] + 10*R[7,7]",
            "1802808*z(5)*z(9) + 1614170*z(7)^2 - 5461/14175*pi^14",
        );
        assert_display(
            lhs_sym_r(2, 3, 8).unwrap(),
            rhs_sym_r(2, 3, 8).unwrap(),
            "9*R[2,10] + 2*R[3,9]",
            "58254*z(3)*z(9) + 94488*z(5)*z(7) - 691/3780*pi^12",
        );
    }

    #[test]
    fn sym_t_examples() {
        assert_display(
            lhs_sym_t(5, 4, 2).unwrap(),
            rhs_sym_t(5, 4, 2).unwrap(),
            "5*TT(4,6) + 12*TT(5,5) + 15*TT(6,4) + 10*TT(7,3)",
            "-961/64*z(5)^2 + 1/4608*pi^10",
        );
        assert_display(
            lhs_sym_t(5, 6, 2).unwrap(),
            rhs_sym_t(5, 6, 2).unwrap(),
            "3*TT(5,7) + 10*TT(6,6) + 18*TT(7,5) + 21*TT(8,4) + 14*TT(9,3)",
            "11811/1024*z(5)*z(7) - 1/92160*pi^12",
        );
    }

    #[test]
    fn qeq_coeff_matches_symmetric_form() {
        for p in (1..=9).step_by(2) {
            for q in 2..=8 {
                let a = pi(&rhs_ts_qeq_coeff(p, q).unwrap());
                let b = pi(&rhs_sym_ts(q, p, q).unwrap());
                assert_eq!(a, b, "p={p} q={q}");
            }
        }
        assert_eq!(pi(&rhs_ts_qeq_coeff(1, 3).unwrap()), expr("49*z(3)^2 - 1/30*pi^6"));
        assert_eq!(pi(&rhs_ts_qeq_coeff(3, 2).unwrap()), expr("-196*z(3)^2 + 1/3*pi^6"));
        assert!(rhs_ts_qeq_coeff(2, 3).is_err());
    }

    #[test]
    fn qeq_even_collapse() {
        for q in 2..=8 {
            for n in 1..=4 {
                assert_eq!(
                    pi(&rhs_ts_qeq_even(q, n).unwrap()),
                    pi(&rhs_sym_ts(q, 2 * n, q).unwrap()),
                    "q={q} n={n}"
                );
            }
        }
    }

    #[test]
    fn corollaries_agree_with_theorems() {
        for q in 2..=9 {
            assert_eq!(pi(&rhs_ts1q(q).unwrap()), pi(&rhs_sym_ts(1, 1, q).unwrap()));
            assert_eq!(pi(&rhs_ts_q1q(q).unwrap()), pi(&rhs_sym_ts(q, 1, q).unwrap()));
            assert_eq!(pi(&rhs_ts_q3q(q).unwrap()), pi(&rhs_sym_ts(q, 3, q).unwrap()));
            assert_eq!(pi(&rhs_ts_q5q(q).unwrap()), pi(&rhs_sym_ts(q, 5, q).unwrap()));
            let r = rhs_sym_r(1, 1, q).unwrap().scale(&Rational::new(1.into(), 2.into()));
            assert_eq!(pi(&rhs_r1q(q).unwrap()), pi(&r));
        }
        for n in 1..=4 {
            let s = rhs_sym_ts(2, 2 * n, 2)
                .unwrap()
                .scale(&Rational::new((-1).into(), 2.into()));
            assert_eq!(pi(&rhs_ts2e2(n).unwrap()), pi(&s));
            assert_eq!(
                lhs_ts2e2(n).unwrap(),
                lhs_sym_ts(2, 2 * n, 2)
                    .unwrap()
                    .scale(&Rational::new((-1).into(), 2.into()))
            );
            for q in 3..=5 {
                let s = rhs_sym_ts(q, 2 * n, q).unwrap().scale(&sign(q - 1));
                assert_eq!(pi(&rhs_ts_q345(q, n).unwrap()), pi(&s), "q={q} n={n}");
            }
        }
        for p in 2..=5 {
            for q in 2..=6 {
                let half = Rational::new(1.into(), 2.into()) * sign(p - 1);
                assert_eq!(
                    pi(&rhs_la_r(p, q).unwrap()),
                    pi(&rhs_sym_r(p, p, q).unwrap().scale(&half))
                );
                assert_eq!(lhs_la_r(p, q).unwrap(), lhs_sym_r(p, p, q).unwrap().scale(&half));
                let t = sign(p) / big(pow2(2 * p + q - 2));
                assert_eq!(pi(&rhs_la_t(p, q).unwrap()), pi(&rhs_sym_t(p, p, q).unwrap().scale(&t)));
                assert_eq!(lhs_la_t(p, q).unwrap(), lhs_sym_t(p, p, q).unwrap().scale(&t));
            }
        }
    }

    #[test]
    fn weight_grading() {
        for m in 1..=5 {
            for p in 1..=5 {
                for q in 2..=5 {
                    let w = m + p + q - 1;
                    for e in [rhs_sym_ts(m, p, q).unwrap(), rhs_sym_r(m, p, q).unwrap()] {
                        for form in [e.clone(), e.normalize(NormalForm::Raw), pi(&e)] {
                            assert!(form.weights().iter().all(|&x| x == w), "({m},{p},{q})");
                        }
                    }
                    assert_eq!(lhs_sym_ts(m, p, q).unwrap().weight(), Some(w));
                }
            }
        }
    }

    #[test]
    fn sym_t_parity_factor_taken_at_shifted_index() {
        let e = rhs_sym_t(3, 3, 2).unwrap();
        let expect =
            tb(7).scale(&int(6)) - (z(4) * tb(3)).scale(&int(24)) - lambda_op(2, 3, 3, |a, b| tb(a) * tb(b)).unwrap();
        assert_eq!(e, expect);
    }

    #[test]
    fn symmetric_under_swap() {
        for m in 1..=4 {
            for p in 1..=4 {
                for q in 2..=4 {
                    assert_eq!(lhs_sym_r(m, p, q).unwrap(), lhs_sym_r(p, m, q).unwrap());
                    assert_eq!(pi(&rhs_sym_r(m, p, q).unwrap()), pi(&rhs_sym_r(p, m, q).unwrap()));
                }
            }
        }
    }

    #[test]
    fn ttv_lhs_matches_bridge_scaling() {
        let l = lhs_sym_ttv(1, 1, 2).unwrap();
        assert_eq!(l, combo("8*t(2,1) + 2*TT(2,1)"));
    }

    #[test]
    fn rejects_out_of_domain() {
        assert!(rhs_sym_ts(1, 1, 1).is_err());
        assert!(rhs_sym_t(1, 2, 2).is_err());
        assert!(lhs_la_r(1, 2).is_err());
    }
}
