use num_traits::One;

use super::expr::ConstExpr;
use crate::error::{Error, Result};
use crate::exact::{binomial_q, Rational};

/// Values the lambda operator can act on: anything closed under rational
/// scaling and addition.
pub trait Linear: Sized {
    fn scaled(self, c: &Rational) -> Self;
    fn plus(self, rhs: Self) -> Self;
}

impl Linear for ConstExpr {
    fn scaled(self, c: &Rational) -> Self {
        self.scale(c)
    }

    fn plus(self, rhs: Self) -> Self {
        self + rhs
    }
}

/// `lambda_m(W_{p,q}) = sum_{i+j=m-1} C(p+i-1, i) C(q+j-1, j) W_{p+i, q+j}`.
///
/// `family(a, b)` supplies `W_{a,b}`; the first index is shifted by `i`
/// and the second by `j`, so any sign factor the family carries is taken at
/// the shifted index. `lambda_1` is the identity.
pub fn lambda_op<V: Linear>(m: u32, p: u32, q: u32, mut family: impl FnMut(u32, u32) -> V) -> Result<V> {
    if m == 0 {
        return Err(Error::invalid("lambda_op", "m must be at least 1"));
    }
    if p == 0 || q == 0 {
        return Err(Error::invalid("lambda_op", "family indices must be positive"));
    }
    let mut acc: Option<V> = None;
    for i in 0..m {
        let j = m - 1 - i;
        let c = binomial_q(i64::from(p + i) - 1, i.into()) * binomial_q(i64::from(q + j) - 1, j.into());
        let term = family(p + i, q + j);
        let term = if c.is_one() { term } else { term.scaled(&c) };
        acc = Some(match acc {
            None => term,
            Some(a) => a.plus(term),
        });
    }
    Ok(acc.expect("m >= 1 gives at least one term"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{SumCombo, SumFamily, SumIndex};

    fn family(f: SumFamily) -> impl FnMut(u32, u32) -> SumCombo {
        move |a, b| SumCombo::single(SumIndex::new(f, a, b))
    }

    #[test]
    fn lambda_one_is_identity() {
        let v = lambda_op(1, 3, 4, family(SumFamily::T)).unwrap();
        assert_eq!(v.to_string(), "T[3,4]");
    }

    #[test]
    fn lambda_two_on_generic_family() {
        let v = lambda_op(2, 2, 2, family(SumFamily::T)).unwrap();
        assert_eq!(v, "2*T[3,2] + 2*T[2,3]".parse().unwrap());
    }

    #[test]
    fn lambda_three_on_diagonal() {
        let v = lambda_op(3, 2, 2, family(SumFamily::T)).unwrap();
        assert_eq!(v, "3*T[2,4] + 4*T[3,3] + 3*T[4,2]".parse().unwrap());
    }

    #[test]
    fn rejects_m_zero() {
        assert!(lambda_op(0, 2, 2, family(SumFamily::T)).is_err());
    }
}
