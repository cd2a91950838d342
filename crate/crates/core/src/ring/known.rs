use std::sync::OnceLock;

use super::expr::ConstExpr;
use super::sums::{SumFamily, SumIndex};

/// A single Euler sum with its evaluation over the extended atom set.
#[derive(Clone, Debug, PartialEq)]
pub struct KnownEvaluation {
    pub index: SumIndex,
    pub value: ConstExpr,
}

impl KnownEvaluation {
    pub fn label(&self) -> String {
        self.index.to_string()
    }
}

const TABLE: [(SumFamily, u32, u32, &str); 8] = [
    (
        SumFamily::T,
        1,
        3,
        "-16*Li4(1/2) - 2/3*ln2^4 + 2/3*pi^2*ln2^2 + 23/360*pi^4",
    ),
    (
        SumFamily::T,
        1,
        5,
        "-32*z(5b,1) + 62*ln2*z(5) + 17/2*z(3)^2 - 73/1260*pi^6",
    ),
    (
        SumFamily::SBar,
        1,
        3,
        "16*Li4(1/2) + 14*ln2*z(3) + 2/3*ln2^4 - 2/3*pi^2*ln2^2 - 53/360*pi^4",
    ),
    (SumFamily::SBar, 1, 5, "32*z(5b,1) - 31/2*z(3)^2 + 31/1260*pi^6"),
    (SumFamily::R, 2, 4, "128*z(5b,1) + z(3)^2 - 1/210*pi^6"),
    (SumFamily::R, 3, 3, "-192*z(5b,1) + 109/2*z(3)^2 - 8/105*pi^6"),
    (
        SumFamily::R,
        2,
        6,
        "768*z(7b,1) + 289*z(6,2) - 864*z(3)*z(5) + 59/525*pi^8",
    ),
    (
        SumFamily::R,
        3,
        5,
        "-1920*z(7b,1) - 1445/2*z(6,2) + 3059*z(3)*z(5) - 2011/5040*pi^8",
    ),
];

/// The individually evaluated sums `T_{1,3}, T_{1,5}, Sbar_{1,3}, Sbar_{1,5},
/// R_{2,4}, R_{3,3}, R_{2,6}, R_{3,5}`.
pub fn known_evaluations() -> &'static [KnownEvaluation] {
    static CELL: OnceLock<Vec<KnownEvaluation>> = OnceLock::new();
    CELL.get_or_init(|| {
        TABLE
            .iter()
            .map(|&(f, p, q, s)| KnownEvaluation {
                index: SumIndex::new(f, p, q),
                value: s.parse().expect("table entries parse"),
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_is_weight_homogeneous() {
        for k in known_evaluations() {
            let w = k.index.weight();
            assert_eq!(
                k.value.weights().into_iter().collect::<Vec<_>>(),
                vec![w],
                "{}",
                k.label()
            );
        }
        assert_eq!(known_evaluations().len(), 8);
    }
}
