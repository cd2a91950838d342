//! Registry of identity families: names, parameter schemas and validity domains.

use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    /// Symmetric T/Sbar sum reduced to ln 2 and zeta values.
    SymTs,
    /// `T_{1,q} + Sbar_{1,q}`.
    Ts1q,
    /// `m = q`, `p = 1`.
    TsQ1q,
    /// `m = q`, `p = 3`.
    TsQ3q,
    /// `m = q`, `p = 5`.
    TsQ5q,
    /// `m = q`, `p` odd, coefficients through Genocchi numbers.
    TsQeqCoeff,
    /// `m = q`, `p = 2n`.
    TsQeqEven,
    /// `m = q = 2`, `p = 2n`.
    Ts2e2,
    /// `m = q` in `{3, 4, 5}`, `p = 2n`.
    TsQ345,
    /// Symmetric sum on double t- and T-values.
    SymTtv,
    /// Symmetric R sum.
    SymR,
    /// `R_{1,q}`.
    R1q,
    /// `lambda_p(R_{p,q})`.
    LaR,
    /// Symmetric sum on double T-values.
    SymT,
    /// `lambda_p(T(p,q))`.
    LaT,
    /// Individually evaluated sums over the extended atom set.
    KnownEval,
    /// Even/odd Genocchi convolution.
    ConvEgg,
    /// Bernoulli/Genocchi convolution.
    ConvBgg,
    /// Coefficients of `P_n(tanh t)`.
    PnGenocchi,
    /// Linearization of `P_m(tanh t) P_n(tanh t)`.
    Pmpn,
}

impl IdentityId {
    pub const ALL: [IdentityId; 20] = [
        IdentityId::SymTs,
        IdentityId::Ts1q,
        IdentityId::TsQ1q,
        IdentityId::TsQ3q,
        IdentityId::TsQ5q,
        IdentityId::TsQeqCoeff,
        IdentityId::TsQeqEven,
        IdentityId::Ts2e2,
        IdentityId::TsQ345,
        IdentityId::SymTtv,
        IdentityId::SymR,
        IdentityId::R1q,
        IdentityId::LaR,
        IdentityId::SymT,
        IdentityId::LaT,
        IdentityId::KnownEval,
        IdentityId::ConvEgg,
        IdentityId::ConvBgg,
        IdentityId::PnGenocchi,
        IdentityId::Pmpn,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::SymTs => "SYM_TS",
            IdentityId::Ts1q => "TS1Q",
            IdentityId::TsQ1q => "TS_Q1Q",
            IdentityId::TsQ3q => "TS_Q3Q",
            IdentityId::TsQ5q => "TS_Q5Q",
            IdentityId::TsQeqCoeff => "TS_QEQ_COEFF",
            IdentityId::TsQeqEven => "TS_QEQ_EVEN",
            IdentityId::Ts2e2 => "TS2E2",
            IdentityId::TsQ345 => "TS_Q345",
            IdentityId::SymTtv => "SYM_TTV",
            IdentityId::SymR => "SYM_R",
            IdentityId::R1q => "R1Q",
            IdentityId::LaR => "LA_R",
            IdentityId::SymT => "SYM_T",
            IdentityId::LaT => "LA_T",
            IdentityId::KnownEval => "KNOWN_EVAL",
            IdentityId::ConvEgg => "CONV_EGG",
            IdentityId::ConvBgg => "CONV_BGG",
            IdentityId::PnGenocchi => "PN_GENOCCHI",
            IdentityId::Pmpn => "PMPN",
        }
    }

    /// Parameter names, in canonical order.
    pub fn schema(self) -> &'static [&'static str] {
        match self {
            IdentityId::SymTs | IdentityId::SymTtv | IdentityId::SymR | IdentityId::SymT => &["m", "p", "q"],
            IdentityId::Ts1q | IdentityId::TsQ1q | IdentityId::TsQ3q | IdentityId::TsQ5q | IdentityId::R1q => &["q"],
            IdentityId::TsQeqCoeff | IdentityId::LaR | IdentityId::LaT => &["p", "q"],
            IdentityId::TsQeqEven | IdentityId::TsQ345 => &["q", "n"],
            IdentityId::Ts2e2 => &["n"],
            IdentityId::KnownEval => &["index"],
            IdentityId::ConvEgg => &["n", "alpha", "gamma", "delta", "epsilon"],
            IdentityId::ConvBgg => &["n", "q"],
            IdentityId::PnGenocchi => &["n", "k"],
            IdentityId::Pmpn => &["m", "n", "order"],
        }
    }

    /// Identities checked in exact rational arithmetic (zero residual required).
    pub fn is_exact(self) -> bool {
        matches!(
            self,
            IdentityId::ConvEgg | IdentityId::ConvBgg | IdentityId::PnGenocchi | IdentityId::Pmpn
        )
    }

    /// Checks `params` against the schema and the identity's validity domain.
    pub fn validate(self, params: &Params) -> Result<()> {
        let names: Vec<&str> = params.0.keys().map(String::as_str).collect();
        if names != self.schema() {
            return Err(Error::invalid(
                self.as_str(),
                format!("expected parameters {:?}, got {:?}", self.schema(), names),
            ));
        }
        let v = |name: &str| params.get(name).expect("schema checked");
        let fail = |why: &str| Err(Error::invalid(format!("{} {params}", self.as_str()), why.to_string()));
        match self {
            IdentityId::SymTs | IdentityId::SymTtv | IdentityId::SymR => {
                if v("m") < 1 || v("p") < 1 || v("q") < 2 {
                    return fail("requires m, p >= 1 and q >= 2");
                }
            }
            IdentityId::SymT => {
                if v("m") < 2 || v("p") < 2 || v("q") < 2 {
                    return fail("requires m, p, q >= 2");
                }
            }
            IdentityId::Ts1q | IdentityId::TsQ1q | IdentityId::TsQ3q | IdentityId::TsQ5q | IdentityId::R1q => {
                if v("q") < 2 {
                    return fail("requires q >= 2");
                }
            }
            IdentityId::TsQeqCoeff => {
                if v("p") % 2 == 0 || v("q") < 2 {
                    return fail("requires odd p >= 1 and q >= 2");
                }
            }
            IdentityId::LaR | IdentityId::LaT => {
                if v("p") < 2 || v("q") < 2 {
                    return fail("requires p, q >= 2");
                }
            }
            IdentityId::TsQeqEven => {
                if v("q") < 2 || v("n") < 1 {
                    return fail("requires q >= 2 and n >= 1");
                }
            }
            IdentityId::TsQ345 => {
                if !(3..=5).contains(&v("q")) || v("n") < 1 {
                    return fail("requires q in {3, 4, 5} and n >= 1");
                }
            }
            IdentityId::Ts2e2 => {
                if v("n") < 1 {
                    return fail("requires n >= 1");
                }
            }
            IdentityId::KnownEval => {
                if v("index") as usize >= crate::ring::known_evaluations().len() {
                    return fail("index out of range");
                }
            }
            IdentityId::ConvEgg => {
                if v("delta") > 1 || v("epsilon") > 1 {
                    return fail("delta and epsilon must be 0 or 1");
                }
            }
            IdentityId::ConvBgg => {
                if v("q") < 2 {
                    return fail("requires q >= 2");
                }
            }
            IdentityId::PnGenocchi | IdentityId::Pmpn => {}
        }
        Ok(())
    }

    /// Weight of the Euler sums on the left-hand side, for numeric identities.
    pub fn weight(self, params: &Params) -> Option<u32> {
        let v = |name: &str| params.get(name).unwrap_or(0);
        let w = match self {
            IdentityId::SymTs | IdentityId::SymTtv | IdentityId::SymR | IdentityId::SymT => {
                v("m") + v("p") + v("q") - 1
            }
            IdentityId::Ts1q | IdentityId::R1q => v("q") + 1,
            IdentityId::TsQ1q => 2 * v("q"),
            IdentityId::TsQ3q => 2 * v("q") + 2,
            IdentityId::TsQ5q => 2 * v("q") + 4,
            IdentityId::TsQeqCoeff => v("p") + 2 * v("q") - 1,
            IdentityId::TsQeqEven | IdentityId::TsQ345 => 2 * v("n") + 2 * v("q") - 1,
            IdentityId::Ts2e2 => 2 * v("n") + 3,
            IdentityId::LaR | IdentityId::LaT => 2 * v("p") + v("q") - 1,
            IdentityId::KnownEval => {
                let known = crate::ring::known_evaluations();
                return known.get(v("index") as usize).map(|k| k.index.weight());
            }
            IdentityId::ConvEgg | IdentityId::ConvBgg | IdentityId::PnGenocchi | IdentityId::Pmpn => return None,
        };
        Some(w)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Named integer parameters of one identity instance, in schema order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Params(IndexMap<String, u32>);

impl Params {
    pub fn new<'a>(pairs: impl IntoIterator<Item = (&'a str, u32)>) -> Self {
        Params(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
    }

    /// Zips an identity's schema with positional values.
    pub fn for_id(id: IdentityId, values: &[u32]) -> Result<Self> {
        if values.len() != id.schema().len() {
            return Err(Error::invalid(
                id.as_str(),
                format!("expected {} parameters, got {}", id.schema().len(), values.len()),
            ));
        }
        let params = Params::new(id.schema().iter().copied().zip(values.iter().copied()));
        id.validate(&params)?;
        Ok(params)
    }

    pub fn get(&self, name: &str) -> Option<u32> {
        self.0.get(name).copied()
    }

    pub fn values(&self) -> Vec<u32> {
        self.0.values().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.as_str()));
        }
        assert!(matches!("NOPE".parse::<IdentityId>(), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn validity_domains() {
        assert!(Params::for_id(IdentityId::SymTs, &[1, 1, 2]).is_ok());
        assert!(Params::for_id(IdentityId::SymTs, &[1, 1, 1]).is_err());
        assert!(Params::for_id(IdentityId::TsQeqCoeff, &[2, 3]).is_err());
        assert!(Params::for_id(IdentityId::SymT, &[2, 1, 2]).is_err());
        assert!(Params::for_id(IdentityId::ConvBgg, &[0, 1]).is_err());
        assert!(Params::for_id(IdentityId::ConvEgg, &[0, 0, 0, 2, 0]).is_err());
        assert!(Params::for_id(IdentityId::Ts1q, &[2, 3]).is_err());
    }

    #[test]
    fn weights() {
        let p = Params::for_id(IdentityId::SymTs, &[3, 3, 3]).unwrap();
        assert_eq!(IdentityId::SymTs.weight(&p), Some(8));
        let p = Params::for_id(IdentityId::ConvBgg, &[0, 2]).unwrap();
        assert_eq!(IdentityId::ConvBgg.weight(&p), None);
    }
}
