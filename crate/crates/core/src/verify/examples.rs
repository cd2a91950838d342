//! Displayed example identities, replayed verbatim as a regression set.

use crate::identity::IdentityId;

/// One displayed identity: `lhs` is a [`SumCombo`](crate::ring::SumCombo)
/// string, `rhs` a [`ConstExpr`](crate::ring::ConstExpr) string. `id` and
/// `params` name the theorem instance the display specializes.
#[derive(Clone, Copy, Debug)]
pub struct DisplayedExample {
    pub id: IdentityId,
    pub params: &'static [u32],
    pub lhs: &'static str,
    pub rhs: &'static str,
}

const fn ex(id: IdentityId, params: &'static [u32], lhs: &'static str, rhs: &'static str) -> DisplayedExample {
    DisplayedExample { id, params, lhs, rhs }
}

use IdentityId::*;

static EXAMPLES: &[DisplayedExample] = &[
    ex(Ts1q, &[2], "T[1,2] + S[1,2]", "pi^2*ln2"),
    ex(Ts1q, &[3], "T[1,3] + S[1,3]", "14*ln2*z(3) - 1/12*pi^4"),
    ex(Ts1q, &[4], "T[1,4] + S[1,4]", "-5/3*pi^2*z(3) + 1/3*pi^4*ln2"),
    ex(Ts1q, &[5], "T[1,5] + S[1,5]", "62*ln2*z(5) - 7*z(3)^2 - 1/30*pi^6"),
    ex(TsQ1q, &[2], "T[2,2] - 2*S[1,3] - S[2,2]", "-1/12*pi^4"),
    ex(
        TsQ1q,
        &[3],
        "T[3,3] + 6*S[1,5] + 3*S[2,4] + S[3,3]",
        "49*z(3)^2 - 1/30*pi^6",
    ),
    ex(
        TsQ1q,
        &[4],
        "T[4,4] - 20*S[1,7] - 10*S[2,6] - 4*S[3,5] - S[4,4]",
        "-17/1260*pi^8",
    ),
    ex(
        TsQ1q,
        &[5],
        "T[5,5] + 70*S[1,9] + 35*S[2,8] + 15*S[3,7] + 5*S[4,6] + S[5,5]",
        "961*z(5)^2 - 31/5670*pi^10",
    ),
    ex(
        TsQ1q,
        &[6],
        "T[6,6] - 252*S[1,11] - 126*S[2,10] - 56*S[3,9] - 21*S[4,8] - 6*S[5,7] - S[6,6]",
        "-691/311850*pi^12",
    ),
    ex(
        TsQ3q,
        &[2],
        "3*T[2,4] + 4*T[3,3] + 3*T[4,2] - 2*S[3,3] - 3*S[4,2]",
        "196*z(3)^2 - 1/3*pi^6",
    ),
    ex(
        TsQ3q,
        &[3],
        "2*T[3,5] + 3*T[4,4] + 2*T[5,3] + 2*S[3,5] + 3*S[4,4] + 2*S[5,3]",
        "868*z(3)*z(5) - 17/180*pi^8",
    ),
    ex(
        TsQ3q,
        &[4],
        "5*T[4,6] + 8*T[5,5] + 5*T[6,4] - 10*S[3,7] - 15*S[4,6] - 12*S[5,5] - 5*S[6,4]",
        "7688*z(5)^2 - 31/315*pi^10",
    ),
    ex(
        TsQ5q,
        &[2],
        "5*T[2,6] + 8*T[3,5] + 9*T[4,4] + 8*T[5,3] + 5*T[6,2] - 2*S[5,3] - 5*S[6,2]",
        "3472*z(3)*z(5) - 17/36*pi^8",
    ),
    ex(
        TsQ5q,
        &[3],
        "5*T[3,7] + 10*T[4,6] + 12*T[5,5] + 10*T[6,4] + 5*T[7,3] + 2*S[5,5] + 5*S[6,4] + 5*S[7,3]",
        "8890*z(3)*z(7) + 11532*z(5)^2 - 31/135*pi^10",
    ),
    ex(SymTs, &[2, 1, 3], "T[2,3] - 3*S[1,4] - S[2,3]", "-5/6*pi^2*z(3)"),
    ex(
        SymTs,
        &[3, 1, 2],
        "T[3,2] + 3*S[1,4] + 2*S[2,3] + S[3,2]",
        "19/6*pi^2*z(3)",
    ),
    ex(Ts2e2, &[1], "T[2,3] + T[3,2] + S[2,3] + S[3,2]", "7/3*pi^2*z(3)"),
    ex(
        Ts2e2,
        &[2],
        "2*T[2,5] + 3*T[3,4] + 3*T[4,3] + 2*T[5,2] + S[4,3] + 2*S[5,2]",
        "62/3*pi^2*z(5)",
    ),
    ex(
        Ts2e2,
        &[3],
        "3*T[2,7] + 5*T[3,6] + 6*T[4,5] + 6*T[5,4] + 5*T[6,3] + 3*T[7,2] + S[6,3] + 3*S[7,2]",
        "127*pi^2*z(7)",
    ),
    ex(
        TsQ345,
        &[3, 1],
        "T[3,4] + T[4,3] - 2*S[2,5] - 2*S[3,4] - S[4,3]",
        "-14/45*pi^4*z(3)",
    ),
    ex(
        TsQ345,
        &[3, 2],
        "5*T[3,6] + 9*T[4,5] + 9*T[5,4] + 5*T[6,3] - 3*S[4,5] - 6*S[5,4] - 5*S[6,3]",
        "-62/15*pi^4*z(5)",
    ),
    ex(
        TsQ345,
        &[4, 1],
        "T[4,5] + T[5,4] + 5*S[2,7] + 5*S[3,6] + 3*S[4,5] + S[5,4]",
        "31/45*pi^4*z(5) + 2/27*pi^6*z(3)",
    ),
    ex(
        TsQ345,
        &[5, 1],
        "T[5,6] + T[6,5] - 14*S[2,9] - 14*S[3,8] - 9*S[4,7] - 4*S[5,6] - S[6,5]",
        "-248/945*pi^6*z(5) - 14/675*pi^8*z(3)",
    ),
    ex(R1q, &[2], "R[1,2]", "7*z(3) - pi^2*ln2"),
    ex(R1q, &[3], "R[1,3]", "-14*ln2*z(3) + 1/8*pi^4"),
    ex(R1q, &[4], "R[1,4]", "62*z(5) - 7/2*pi^2*z(3) - 1/3*pi^4*ln2"),
    ex(R1q, &[5], "R[1,5]", "-62*ln2*z(5) - 49/2*z(3)^2 + 1/12*pi^6"),
    ex(LaR, &[2, 3], "3*R[2,4] + 2*R[3,3]", "112*z(3)^2 - 1/6*pi^6"),
    ex(LaR, &[2, 5], "5*R[2,6] + 2*R[3,5]", "1798*z(3)*z(5) - 17/72*pi^8"),
    ex(
        LaR,
        &[3, 5],
        "5*R[3,7] + 5*R[4,6] + 2*R[5,5]",
        "-3810*z(3)*z(7) - 5704*z(5)^2 + 31/270*pi^10",
    ),
    ex(
        LaR,
        &[4, 5],
        "7*R[4,8] + 12*R[5,7] + 10*R[6,6] + 4*R[7,5]",
        "64640*z(5)*z(7) - 691/9450*pi^12",
    ),
    ex(
        SymR,
        &[5, 4, 2],
        "5*R[4,6] + 12*R[5,5] + 15*R[6,4] + 10*R[7,3]",
        "70*z(3)*z(7) + 4216*z(5)^2 - 31/630*pi^10",
    ),
    ex(
        SymR,
        &[5, 6, 2],
        "3*R[5,7] + 10*R[6,6] + 18*R[7,5] + 21*R[8,4] + 14*R[9,3]",
        "-10872*z(5)*z(7) + 98*z(3)*z(9) + 691/56700*pi^12",
    ),
    ex(
        SymR,
        &[2, 3, 8],
        "9*R[2,10] + 2*R[3,9]",
        "58254*z(3)*z(9) + 94488*z(5)*z(7) - 691/3780*pi^12",
    ),
    ex(
        SymR,
        &[4, 5, 6],
        "42*R[4,10] + 56*R[5,9] + 35*R[6,8] + 10*R[7,7]",
        "1802808*z(5)*z(9) + 1614170*z(7)^2 - 5461/14175*pi^14",
    ),
    ex(
        SymT,
        &[5, 4, 2],
        "5*TT(4,6) + 12*TT(5,5) + 15*TT(6,4) + 10*TT(7,3)",
        "-961/64*z(5)^2 + 1/4608*pi^10",
    ),
    ex(
        SymT,
        &[5, 6, 2],
        "3*TT(5,7) + 10*TT(6,6) + 18*TT(7,5) + 21*TT(8,4) + 14*TT(9,3)",
        "11811/1024*z(5)*z(7) - 1/92160*pi^12",
    ),
];

/// Every displayed closed-form identity, in order of appearance. The eight
/// individual sum evaluations are served separately by
/// [`known_evaluations`](crate::ring::known_evaluations).
pub fn displayed_examples() -> &'static [DisplayedExample] {
    EXAMPLES
}
