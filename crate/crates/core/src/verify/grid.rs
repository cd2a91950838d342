use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::identity::{IdentityId, Params};

/// Cap on `m + p + q` (weight plus one) for the default numeric grids.
pub const DEFAULT_MAX_WEIGHT: u32 = 12;

/// Parameter ranges for one identity.
///
/// Unset parameters take the identity's default range. Numeric points are
/// kept when their weight plus one is at most the cap, which for the
/// symmetric theorems is the condition `m + p + q <= cap`. Exact identities
/// ignore the cap. Points outside the validity domain are skipped.
#[derive(Clone, Debug)]
pub struct Grid {
    id: IdentityId,
    ranges: Vec<Option<RangeInclusive<u32>>>,
    max_weight: u32,
}

impl Grid {
    pub fn new(id: IdentityId) -> Self {
        Grid {
            id,
            ranges: vec![None; id.schema().len()],
            max_weight: DEFAULT_MAX_WEIGHT,
        }
    }

    pub fn id(&self) -> IdentityId {
        self.id
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn with_max_weight(mut self, cap: u32) -> Self {
        self.max_weight = cap;
        self
    }

    pub fn with_range(mut self, name: &str, range: RangeInclusive<u32>) -> Result<Self> {
        let i = self
            .id
            .schema()
            .iter()
            .position(|&n| n == name)
            .ok_or_else(|| Error::invalid(self.id.as_str(), format!("no parameter named `{name}`")))?;
        self.ranges[i] = Some(range);
        Ok(self)
    }

    fn default_range(&self, name: &str) -> RangeInclusive<u32> {
        let cap = self.max_weight;
        match (self.id, name) {
            (IdentityId::ConvEgg, "n") => 0..=30,
            (IdentityId::ConvEgg, "alpha" | "gamma") => 0..=10,
            (IdentityId::ConvEgg, _) => 0..=1,
            (IdentityId::ConvBgg, "n") => 0..=40,
            (IdentityId::ConvBgg, _) => 2..=40,
            (IdentityId::PnGenocchi, _) => 0..=15,
            (IdentityId::Pmpn, "order") => 20..=20,
            (IdentityId::Pmpn, _) => 0..=10,
            (IdentityId::KnownEval, _) => 0..=(crate::ring::known_evaluations().len() as u32 - 1),
            (IdentityId::TsQ345, "q") => 3..=5,
            (_, "q") => 2..=cap.max(2),
            (IdentityId::SymT | IdentityId::LaR | IdentityId::LaT, _) => 2..=cap.max(2),
            _ => 1..=cap.max(1),
        }
    }

    /// Grid points in lexicographic order of the schema's parameters.
    pub fn points(&self) -> Vec<Params> {
        let schema = self.id.schema();
        let ranges: Vec<RangeInclusive<u32>> = schema
            .iter()
            .zip(&self.ranges)
            .map(|(name, r)| r.clone().unwrap_or_else(|| self.default_range(name)))
            .collect();
        let mut out = Vec::new();
        if ranges.iter().any(|r| r.is_empty()) {
            return out;
        }
        let mut cur: Vec<u32> = ranges.iter().map(|r| *r.start()).collect();
        loop {
            let params = Params::new(schema.iter().copied().zip(cur.iter().copied()));
            let in_cap = match self.id.weight(&params) {
                Some(w) if !self.id.is_exact() => w < self.max_weight,
                _ => true,
            };
            if in_cap && self.id.validate(&params).is_ok() {
                out.push(params);
            }
            // odometer increment, last parameter fastest
            let mut i = cur.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < *ranges[i].end() {
                    cur[i] += 1;
                    break;
                }
                cur[i] = *ranges[i].start();
            }
        }
    }
}

/// A parameter range written `a`, `a..b` or `a..=b`; both forms of the
/// range are inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamRange(pub RangeInclusive<u32>);

impl FromStr for ParamRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid range `{s}`, expected `a`, `a..b` or `a..=b`"));
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        let s = s.trim();
        let r = match s.split_once("..") {
            None => {
                let v = num(s)?;
                v..=v
            }
            Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        };
        if r.is_empty() {
            return Err(bad());
        }
        Ok(ParamRange(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym_ts_grid_respects_cap_and_domain() {
        let pts = Grid::new(IdentityId::SymTs).with_max_weight(6).points();
        assert!(pts
            .iter()
            .all(|p| p.get("m").unwrap() + p.get("p").unwrap() + p.get("q").unwrap() <= 6));
        assert!(pts.iter().all(|p| p.get("q").unwrap() >= 2));
        // m + p + q' <= 4 with q' = q - 2 >= 0 and m, p >= 1
        assert_eq!(pts.len(), 10);
        assert_eq!(pts[0].values(), vec![1, 1, 2]);
        let mut sorted = pts.clone();
        sorted.sort_by_key(|p| p.values());
        assert_eq!(sorted, pts);
    }

    #[test]
    fn exact_default_grids_match_suite_sizes() {
        assert_eq!(Grid::new(IdentityId::ConvBgg).points().len(), 41 * 39);
        assert_eq!(Grid::new(IdentityId::ConvEgg).points().len(), 31 * 11 * 11 * 4);
        assert_eq!(Grid::new(IdentityId::Pmpn).points().len(), 121);
    }

    #[test]
    fn qeq_coeff_skips_even_p() {
        let pts = Grid::new(IdentityId::TsQeqCoeff).points();
        assert!(!pts.is_empty());
        assert!(pts.iter().all(|p| p.get("p").unwrap() % 2 == 1));
    }

    #[test]
    fn explicit_ranges() {
        let g = Grid::new(IdentityId::ConvBgg)
            .with_range("n", 0..=2)
            .unwrap()
            .with_range("q", 5..=5)
            .unwrap();
        assert_eq!(g.points().len(), 3);
        assert!(Grid::new(IdentityId::ConvBgg).with_range("m", 0..=1).is_err());
    }

    #[test]
    fn range_syntax() {
        assert_eq!("0..40".parse::<ParamRange>().unwrap().0, 0..=40);
        assert_eq!("2..=5".parse::<ParamRange>().unwrap().0, 2..=5);
        assert_eq!("7".parse::<ParamRange>().unwrap().0, 7..=7);
        assert!("5..2".parse::<ParamRange>().is_err());
        assert!("x".parse::<ParamRange>().is_err());
    }
}
