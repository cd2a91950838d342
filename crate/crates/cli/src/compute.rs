use eulersum::exact::{bernoulli, derivative_poly, genocchi, pn_coefficient, rho};
use eulersum::{Atom, EvalContext, MpFloat, SumFamily, SumIndex};

pub const TARGET_USAGE: &str = "targets: T p q | S p q | R p q | t s1 s2 | TT s1 s2 | zeta s | tbar s | dzeta s1 s2 | \
altzeta s | ln2 | pi | li4half | bernoulli n | genocchi n | dpoly n | pn n k | rho m n k";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Sum(SumIndex),
    Atom(Atom),
    DoubleZeta(u32, u32),
    AltZeta(u32),
    Bernoulli(u32),
    Genocchi(u32),
    Dpoly(u32),
    PnCoeff(u32, u32),
    Rho(u32, u32, u32),
}

pub enum Computed {
    Numeric { value: MpFloat, error_bound: Option<f64> },
    Exact(String),
}

fn nums<const N: usize>(name: &str, args: &[String]) -> Result<[u32; N], String> {
    if args.len() != N {
        return Err(format!("`{name}` takes {N} integer argument(s), got {}", args.len()));
    }
    let mut out = [0u32; N];
    for (slot, a) in out.iter_mut().zip(args) {
        *slot = a.parse().map_err(|_| format!("`{a}` is not a nonnegative integer"))?;
    }
    Ok(out)
}

pub fn parse_target(words: &[String]) -> Result<Target, String> {
    let (head, args) = words.split_first().ok_or("empty target")?;
    let sum = |family| -> Result<Target, String> {
        let [p, q] = nums::<2>(head, args)?;
        let idx = SumIndex::new(family, p, q);
        idx.validate().map_err(|e| e.to_string())?;
        Ok(Target::Sum(idx))
    };
    // `t` and `T` differ only in case
    match head.as_str() {
        "T" => return sum(SumFamily::T),
        "t" => return sum(SumFamily::SmallT),
        "TT" => return sum(SumFamily::BigT),
        _ => {}
    }
    let at_least = |v: u32, min: u32| {
        if v < min {
            Err(format!("`{head}` requires an argument of at least {min}"))
        } else {
            Ok(v)
        }
    };
    Ok(match head.to_ascii_lowercase().as_str() {
        "s" | "sbar" => return sum(SumFamily::SBar),
        "r" => return sum(SumFamily::R),
        "zeta" | "z" => Target::Atom(Atom::Zeta(at_least(nums::<1>(head, args)?[0], 2)?)),
        "tbar" | "tb" => Target::Atom(Atom::TBar(at_least(nums::<1>(head, args)?[0], 2)?)),
        "dzeta" => {
            let [s1, s2] = nums::<2>(head, args)?;
            Target::DoubleZeta(at_least(s1, 2)?, at_least(s2, 1)?)
        }
        "altzeta" => Target::AltZeta(at_least(nums::<1>(head, args)?[0], 2)?),
        "ln2" => {
            nums::<0>(head, args)?;
            Target::Atom(Atom::Ln2)
        }
        "pi" => {
            nums::<0>(head, args)?;
            Target::Atom(Atom::Pi)
        }
        "li4half" => {
            nums::<0>(head, args)?;
            Target::Atom(Atom::Li4Half)
        }
        "bernoulli" => Target::Bernoulli(nums::<1>(head, args)?[0]),
        "genocchi" => Target::Genocchi(nums::<1>(head, args)?[0]),
        "dpoly" => Target::Dpoly(nums::<1>(head, args)?[0]),
        "pn" => {
            let [n, k] = nums::<2>(head, args)?;
            Target::PnCoeff(n, k)
        }
        "rho" => {
            let [m, n, k] = nums::<3>(head, args)?;
            Target::Rho(m, n, k)
        }
        _ => return Err(format!("unknown target `{head}`")),
    })
}

impl Target {
    pub fn label(&self) -> String {
        match self {
            Target::Sum(idx) => idx.to_string(),
            Target::Atom(a) => a.to_string(),
            Target::DoubleZeta(s1, s2) => format!("z({s1},{s2})"),
            Target::AltZeta(s) => format!("z({s}b,1)"),
            Target::Bernoulli(n) => format!("B_{n}"),
            Target::Genocchi(n) => format!("G_{n}"),
            Target::Dpoly(n) => format!("P_{n}(y)"),
            Target::PnCoeff(n, k) => format!("[t^{k}] P_{n}(tanh t)"),
            Target::Rho(m, n, k) => format!("rho_{{{m},{n}}}^({k})"),
        }
    }

    pub fn compute(&self, ctx: &mut EvalContext) -> eulersum::Result<Computed> {
        let numeric = |e: eulersum::Evaluation| Computed::Numeric {
            value: e.value,
            error_bound: Some(e.error_bound),
        };
        Ok(match *self {
            Target::Sum(idx) => numeric(ctx.euler_sum(idx)?),
            Target::Atom(a) => Computed::Numeric {
                value: ctx.atom(a)?,
                error_bound: None,
            },
            Target::DoubleZeta(s1, s2) => numeric(ctx.double_zeta(s1, s2)?),
            Target::AltZeta(s) => numeric(ctx.alt_zeta_bar1(s)?),
            Target::Bernoulli(n) => Computed::Exact(bernoulli(n as usize).to_string()),
            Target::Genocchi(n) => Computed::Exact(genocchi(n as usize).to_string()),
            Target::Dpoly(n) => Computed::Exact(derivative_poly(n as usize).to_string()),
            Target::PnCoeff(n, k) => Computed::Exact(pn_coefficient(n, k).to_string()),
            Target::Rho(m, n, k) => Computed::Exact(rho(m, n, k).to_string()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn grammar() {
        assert_eq!(
            parse_target(&words("T 1 2")).unwrap(),
            Target::Sum(SumIndex::new(SumFamily::T, 1, 2))
        );
        assert_eq!(
            parse_target(&words("t 2 1")).unwrap(),
            Target::Sum(SumIndex::new(SumFamily::SmallT, 2, 1))
        );
        assert_eq!(parse_target(&words("zeta 3")).unwrap(), Target::Atom(Atom::Zeta(3)));
        assert_eq!(parse_target(&words("Genocchi 6")).unwrap(), Target::Genocchi(6));
        assert!(parse_target(&words("zeta 1")).is_err());
        assert!(parse_target(&words("T 1")).is_err());
        assert!(parse_target(&words("T 1 1")).is_err());
        assert!(parse_target(&words("gamma 2")).is_err());
        assert!(parse_target(&words("pi 2")).is_err());
    }
}
