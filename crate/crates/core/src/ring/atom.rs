use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// An opaque constant a monomial is built from.
///
/// `Zeta` and `TBar` always carry an argument of at least 2; the values at 1
/// (`zeta(1) := -2 ln 2`, `tbar(1) := 0`) are substituted when an expression
/// is built, see [`super::ConstExpr::zeta`] and [`super::ConstExpr::tbar`].
/// The extended atoms (`Li4(1/2)` and the three double zeta values) are
/// treated as independent symbols with no relations among them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// Riemann `zeta(s)`.
    Zeta(u32),
    /// `tbar(s) = (2^s - 1) zeta(s)`.
    TBar(u32),
    Ln2,
    Pi,
    /// `Li_4(1/2)`.
    Li4Half,
    /// Alternating double zeta `zeta(-5, 1) = sum_{n>k} (-1)^n / (n^5 k)`.
    AltZeta51,
    /// Alternating double zeta `zeta(-7, 1)`.
    AltZeta71,
    /// Double zeta `zeta(6, 2) = sum_{n>k} 1 / (n^6 k^2)`.
    Zeta62,
}

impl Atom {
    /// Weight grading: `zeta(s)`, `tbar(s)` weigh `s`, `pi` and `ln 2` weigh 1.
    pub fn weight(self) -> u32 {
        match self {
            Atom::Zeta(s) | Atom::TBar(s) => s,
            Atom::Ln2 | Atom::Pi => 1,
            Atom::Li4Half => 4,
            Atom::AltZeta51 => 6,
            Atom::AltZeta71 | Atom::Zeta62 => 8,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Zeta(s) => write!(f, "z({s})"),
            Atom::TBar(s) => write!(f, "tb({s})"),
            Atom::Ln2 => f.write_str("ln2"),
            Atom::Pi => f.write_str("pi"),
            Atom::Li4Half => f.write_str("Li4(1/2)"),
            Atom::AltZeta51 => f.write_str("z(5b,1)"),
            Atom::AltZeta71 => f.write_str("z(7b,1)"),
            Atom::Zeta62 => f.write_str("z(6,2)"),
        }
    }
}

impl FromStr for Atom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let atom = match s {
            "ln2" => Atom::Ln2,
            "pi" => Atom::Pi,
            "Li4(1/2)" => Atom::Li4Half,
            "z(5b,1)" => Atom::AltZeta51,
            "z(7b,1)" => Atom::AltZeta71,
            "z(6,2)" => Atom::Zeta62,
            _ => {
                let (ctor, arg): (fn(u32) -> Atom, &str) = if let Some(rest) = s.strip_prefix("z(") {
                    (Atom::Zeta, rest)
                } else if let Some(rest) = s.strip_prefix("tb(") {
                    (Atom::TBar, rest)
                } else {
                    return Err(Error::Parse(format!("unknown atom `{s}`")));
                };
                let arg = arg
                    .strip_suffix(')')
                    .and_then(|a| a.parse::<u32>().ok())
                    .filter(|&a| a >= 2)
                    .ok_or_else(|| Error::Parse(format!("bad atom argument in `{s}`")))?;
                ctor(arg)
            }
        };
        Ok(atom)
    }
}
