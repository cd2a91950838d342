use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::lambda::Linear;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// The Euler-sum and double-value families the numeric engine evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SumFamily {
    /// `T_{p,q} = sum_n h_{n-1}^{(p)} / (n - 1/2)^q`.
    T,
    /// `Sbar_{p,q} = sum_n h_n^{(p)} / n^q`.
    SBar,
    /// `R_{p,q} = sum_n H_{n-1}^{(p)} / (n - 1/2)^q`.
    R,
    /// Hoffman's double t-value `t(s1, s2)` over odd `n1 > n2`.
    SmallT,
    /// Kaneko-Tsumura double T-value `T(s1, s2)` (even `n1` > odd `n2`, prefactor 4).
    BigT,
}

/// One Euler sum or double value. For [`SumFamily::SmallT`] and
/// [`SumFamily::BigT`], `p` and `q` are the arguments `(s1, s2)` in order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SumIndex {
    pub family: SumFamily,
    pub p: u32,
    pub q: u32,
}

impl SumIndex {
    pub fn new(family: SumFamily, p: u32, q: u32) -> Self {
        SumIndex { family, p, q }
    }

    /// Checks the convergence domain: `p >= 1, q >= 2` for the linear sums,
    /// `s1 >= 2, s2 >= 1` for the double values.
    pub fn validate(&self) -> Result<()> {
        let ok = match self.family {
            SumFamily::T | SumFamily::SBar | SumFamily::R => self.p >= 1 && self.q >= 2,
            SumFamily::SmallT | SumFamily::BigT => self.p >= 2 && self.q >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::invalid(self.to_string(), "outside the convergence domain"))
        }
    }

    pub fn weight(&self) -> u32 {
        self.p + self.q
    }
}

impl fmt::Display for SumIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = (self.p, self.q);
        match self.family {
            SumFamily::T => write!(f, "T[{p},{q}]"),
            SumFamily::SBar => write!(f, "S[{p},{q}]"),
            SumFamily::R => write!(f, "R[{p},{q}]"),
            SumFamily::SmallT => write!(f, "t({p},{q})"),
            SumFamily::BigT => write!(f, "TT({p},{q})"),
        }
    }
}

impl FromStr for SumIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad sum index `{s}`"));
        let open = s.find(['[', '(']).ok_or_else(bad)?;
        let family = match &s[..open] {
            "T" => SumFamily::T,
            "S" => SumFamily::SBar,
            "R" => SumFamily::R,
            "t" => SumFamily::SmallT,
            "TT" => SumFamily::BigT,
            _ => return Err(bad()),
        };
        let inner = &s[open + 1..s.len() - 1];
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let idx = SumIndex::new(
            family,
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        );
        idx.validate()?;
        Ok(idx)
    }
}

/// Rational linear combination of Euler sums; the left-hand side of an
/// identity in a form the numeric engine can evaluate term by term.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SumCombo {
    terms: BTreeMap<SumIndex, Rational>,
}

impl SumCombo {
    pub fn single(idx: SumIndex) -> Self {
        SumCombo::term(Rational::one(), idx)
    }

    pub fn term(c: Rational, idx: SumIndex) -> Self {
        let mut out = SumCombo::default();
        out.add_term(idx, c);
        out
    }

    pub fn add_term(&mut self, idx: SumIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(idx).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SumIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn to_vec(&self) -> Vec<(Rational, SumIndex)> {
        self.terms.iter().map(|(i, c)| (c.clone(), *i)).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(mut self, c: &Rational) -> Self {
        if c.is_zero() {
            return SumCombo::default();
        }
        for v in self.terms.values_mut() {
            *v *= c;
        }
        self
    }

    /// Largest weight among the terms (all terms share it for the built-in identities).
    pub fn weight(&self) -> Option<u32> {
        self.terms.keys().map(SumIndex::weight).max()
    }
}

impl Linear for SumCombo {
    fn scaled(self, c: &Rational) -> Self {
        self.scale(c)
    }

    fn plus(mut self, rhs: Self) -> Self {
        for (i, c) in rhs.terms {
            self.add_term(i, c);
        }
        self
    }
}

impl std::ops::Add for SumCombo {
    type Output = SumCombo;

    fn add(self, rhs: SumCombo) -> SumCombo {
        self.plus(rhs)
    }
}

impl fmt::Display for SumCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (idx, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                if mag.is_integer() {
                    write!(f, "{}*", mag.numer())?;
                } else {
                    write!(f, "{}/{}*", mag.numer(), mag.denom())?;
                }
            }
            write!(f, "{idx}")?;
        }
        Ok(())
    }
}

/// Parses `coeff*F[a,b] +/- ...`, e.g. `3*R[2,4] + 2*R[3,3]`.
impl FromStr for SumCombo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = SumCombo::default();
        let mut sign = Rational::one();
        let mut rest = s.trim();
        if rest == "0" {
            return Ok(out);
        }
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r.trim_start();
        }
        loop {
            let end = rest
                .char_indices()
                .find(|&(_, c)| c == '+' || c == '-')
                .map(|(i, _)| i)
                .unwrap_or(rest.len());
            let token = rest[..end].trim();
            let (coeff, idx) = match token.split_once('*') {
                Some((c, i)) => (
                    c.trim()
                        .parse::<Rational>()
                        .map_err(|_| Error::Parse(format!("bad coefficient in `{token}`")))?,
                    i,
                ),
                None => (Rational::one(), token),
            };
            out.add_term(idx.parse()?, coeff * &sign);
            if end == rest.len() {
                break;
            }
            sign = if rest[end..].starts_with('-') {
                -Rational::one()
            } else {
                Rational::one()
            };
            rest = rest[end + 1..].trim_start();
        }
        Ok(out)
    }
}
