use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use super::atom::Atom;
use crate::error::{Error, Result};
use crate::exact::{bernoulli, factorial, pow2, Rational};

/// Product of atoms with positive exponents, kept sorted by atom.
/// The empty monomial is the constant 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Atom, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn atom(a: Atom, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(a, exp)])
        }
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Atom, u32)>) -> Self {
        let mut map: BTreeMap<Atom, u32> = BTreeMap::new();
        for (a, e) in factors {
            *map.entry(a).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn factors(&self) -> &[(Atom, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|&(a, e)| a.weight() * e).sum()
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial::from_factors(self.0.iter().chain(rhs.0.iter()).copied())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (a, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match e {
                1 => write!(f, "{a}")?,
                _ => write!(f, "{a}^{e}")?,
            }
        }
        Ok(())
    }
}

/// Which basis [`ConstExpr::normalize`] rewrites into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalForm {
    /// `tbar(s)` becomes `(2^s - 1) zeta(s)`.
    Raw,
    /// As `Raw`, and every `zeta(2k)` becomes its rational multiple of `pi^(2k)`.
    PiForm,
}

/// Finite rational linear combination of monomials. Zero coefficients are
/// never stored, so structural equality is equality of expressions in the
/// free algebra over the atoms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConstExpr {
    terms: BTreeMap<Monomial, Rational>,
}

impl ConstExpr {
    pub fn zero() -> Self {
        ConstExpr::default()
    }

    pub fn one() -> Self {
        ConstExpr::rational(Rational::one())
    }

    pub fn rational(c: Rational) -> Self {
        ConstExpr::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        ConstExpr::rational(Rational::from_integer(c.into()))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ConstExpr { terms }
    }

    pub fn atom(a: Atom) -> Self {
        ConstExpr::term(Rational::one(), Monomial::atom(a, 1))
    }

    /// `zeta(s)` for `s >= 1`, with `zeta(1) := -2 ln 2`.
    pub fn zeta(s: u32) -> Self {
        match s {
            0 => panic!("zeta(0) is outside the atom set"),
            1 => ConstExpr::term(Rational::from_integer((-2).into()), Monomial::atom(Atom::Ln2, 1)),
            _ => ConstExpr::atom(Atom::Zeta(s)),
        }
    }

    /// `tbar(s)` for `s >= 1`, with `tbar(1) := 0`.
    pub fn tbar(s: u32) -> Self {
        match s {
            0 => panic!("tbar(0) is outside the atom set"),
            1 => ConstExpr::zero(),
            _ => ConstExpr::atom(Atom::TBar(s)),
        }
    }

    pub fn ln2() -> Self {
        ConstExpr::atom(Atom::Ln2)
    }

    pub fn pi_pow(k: u32) -> Self {
        ConstExpr::term(Rational::one(), Monomial::atom(Atom::Pi, k))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> ConstExpr {
        if c.is_zero() {
            return ConstExpr::zero();
        }
        ConstExpr {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> ConstExpr {
        (0..e).fold(ConstExpr::one(), |acc, _| &acc * self)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Distinct weights of the monomials (empty for zero).
    pub fn weights(&self) -> std::collections::BTreeSet<u32> {
        self.terms.keys().map(Monomial::weight).collect()
    }

    /// Rewrites into the requested basis. Idempotent.
    pub fn normalize(&self, mode: NormalForm) -> ConstExpr {
        let mut out = ConstExpr::zero();
        for (m, c) in &self.terms {
            let mut prod = ConstExpr::rational(c.clone());
            for &(a, e) in m.factors() {
                prod = &prod * &substitute(a, mode).pow(e);
            }
            out += prod;
        }
        out
    }

    /// Canonical JSON value: `[{"monomial": [["z(3)", 2]], "coeff": "49"}, ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("ConstExpr serializes")
    }
}

fn substitute(a: Atom, mode: NormalForm) -> ConstExpr {
    match a {
        Atom::TBar(s) => {
            let factor = Rational::from_integer(pow2(s) - BigInt::one());
            ConstExpr::zeta(s).scale(&factor).normalize(mode)
        }
        Atom::Zeta(s) if mode == NormalForm::PiForm && s % 2 == 0 => {
            ConstExpr::pi_pow(s).scale(&even_zeta_pi_coefficient(s / 2))
        }
        _ => ConstExpr::atom(a),
    }
}

/// `zeta(2k) / pi^(2k) = (-1)^(k+1) B_{2k} 2^(2k) / (2 (2k)!)`.
pub fn even_zeta_pi_coefficient(k: u32) -> Rational {
    let c = bernoulli(2 * k as usize) * Rational::new(pow2(2 * k), BigInt::from(2) * factorial(2 * k));
    if k % 2 == 1 {
        c
    } else {
        -c
    }
}

impl AddAssign for ConstExpr {
    fn add_assign(&mut self, rhs: ConstExpr) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl AddAssign<&ConstExpr> for ConstExpr {
    fn add_assign(&mut self, rhs: &ConstExpr) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for ConstExpr {
    type Output = ConstExpr;

    fn add(mut self, rhs: ConstExpr) -> ConstExpr {
        self += rhs;
        self
    }
}

impl Add for &ConstExpr {
    type Output = ConstExpr;

    fn add(self, rhs: &ConstExpr) -> ConstExpr {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for ConstExpr {
    type Output = ConstExpr;

    fn neg(self) -> ConstExpr {
        ConstExpr {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &ConstExpr {
    type Output = ConstExpr;

    fn neg(self) -> ConstExpr {
        -self.clone()
    }
}

impl Sub for ConstExpr {
    type Output = ConstExpr;

    fn sub(self, rhs: ConstExpr) -> ConstExpr {
        self + (-rhs)
    }
}

impl Sub for &ConstExpr {
    type Output = ConstExpr;

    fn sub(self, rhs: &ConstExpr) -> ConstExpr {
        self.clone() + (-rhs)
    }
}

impl Mul for &ConstExpr {
    type Output = ConstExpr;

    fn mul(self, rhs: &ConstExpr) -> ConstExpr {
        let mut out = ConstExpr::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma * mb, ca * cb);
            }
        }
        out
    }
}

impl Mul for ConstExpr {
    type Output = ConstExpr;

    fn mul(self, rhs: ConstExpr) -> ConstExpr {
        &self * &rhs
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text form, e.g. `868*z(3)*z(5) - 17/180*pi^8`.
impl fmt::Display for ConstExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in `{}`", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.err("expected integer"))
    }

    fn factor(&mut self) -> Result<ConstExpr> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.eat('/') { self.integer()? } else { BigInt::one() };
                if den.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                Ok(ConstExpr::rational(Rational::new(num, den)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                    self.pos += 1;
                }
                if self.peek() == Some('(') {
                    while let Some(c) = self.peek() {
                        self.pos += 1;
                        if c == ')' {
                            break;
                        }
                    }
                }
                let atom: Atom = self.src[start..self.pos].parse()?;
                let exp = if self.eat('^') {
                    u32::try_from(self.integer()?).map_err(|_| self.err("exponent too large"))?
                } else {
                    1
                };
                Ok(ConstExpr::term(Rational::one(), Monomial::atom(atom, exp)))
            }
            _ => Err(self.err("expected number or atom")),
        }
    }

    fn term(&mut self) -> Result<ConstExpr> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn expr(&mut self) -> Result<ConstExpr> {
        let negate = self.eat('-');
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            if self.eat('+') {
                acc += self.term()?;
            } else if self.eat('-') {
                acc += -self.term()?;
            } else {
                break;
            }
        }
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(self.err("trailing input"));
        }
        Ok(acc)
    }
}

/// Parses the canonical text form (and any sum of products of rationals and
/// atoms written the same way).
impl FromStr for ConstExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(ConstExpr::zero());
        }
        Parser { src: s, pos: 0 }.expr()
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    monomial: Vec<(String, u32)>,
    coeff: String,
}

impl Serialize for ConstExpr {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|(m, c)| JsonTerm {
                monomial: m.factors().iter().map(|(a, e)| (a.to_string(), *e)).collect(),
                coeff: format!("{}/{}", c.numer(), c.denom()),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ConstExpr {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(deserializer)?;
        let mut out = ConstExpr::zero();
        for t in terms {
            let factors = t
                .monomial
                .iter()
                .map(|(a, e)| a.parse::<Atom>().map(|a| (a, *e)))
                .collect::<Result<Vec<_>>>()
                .map_err(de::Error::custom)?;
            let coeff: Rational = t.coeff.parse().map_err(de::Error::custom)?;
            out.add_term(Monomial::from_factors(factors), coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn e(s: &str) -> ConstExpr {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_examples() {
        let tb2 = ConstExpr::tbar(2);
        assert_eq!(tb2.normalize(NormalForm::Raw), ConstExpr::zeta(2).scale(&q(3, 1)));
        assert_eq!(tb2.normalize(NormalForm::PiForm), e("1/2*pi^2"));
        assert_eq!(ConstExpr::zeta(3).normalize(NormalForm::PiForm), ConstExpr::zeta(3));
        let tb4 = ConstExpr::tbar(4);
        assert_eq!(tb4.normalize(NormalForm::Raw), e("15*z(4)"));
        assert_eq!(tb4.normalize(NormalForm::PiForm), e("1/6*pi^4"));
    }

    #[test]
    fn even_zeta_coefficients() {
        assert_eq!(even_zeta_pi_coefficient(1), q(1, 6));
        assert_eq!(even_zeta_pi_coefficient(2), q(1, 90));
        assert_eq!(even_zeta_pi_coefficient(3), q(1, 945));
        assert_eq!(even_zeta_pi_coefficient(6), q(691, 638512875));
    }

    #[test]
    fn conventions_at_one() {
        assert_eq!(ConstExpr::zeta(1), e("-2*ln2"));
        assert!(ConstExpr::tbar(1).is_zero());
    }

    #[test]
    fn display_is_canonical() {
        let x = &ConstExpr::zeta(3) * &ConstExpr::zeta(5);
        let expr = x.scale(&q(868, 1)) - ConstExpr::pi_pow(8).scale(&q(17, 180));
        assert_eq!(expr.to_string(), "868*z(3)*z(5) - 17/180*pi^8");
        assert_eq!(e(&expr.to_string()), expr);
        assert_eq!(ConstExpr::zero().to_string(), "0");
        assert_eq!(e("-1/2 + pi^2*ln2").to_string(), "-1/2 + ln2*pi^2");
    }

    #[test]
    fn json_round_trip() {
        let expr = e("-16*Li4(1/2) - 2/3*ln2^4 + 2/3*pi^2*ln2^2 + 23/360*pi^4");
        let json = serde_json::to_string(&expr).unwrap();
        let back: ConstExpr = serde_json::from_str(&json).unwrap();
        assert_eq!(back, expr);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn parse_errors() {
        assert!("3*".parse::<ConstExpr>().is_err());
        assert!("z(1)".parse::<ConstExpr>().is_err());
        assert!("1/0".parse::<ConstExpr>().is_err());
        assert!("pi pi".parse::<ConstExpr>().is_err());
    }
}
