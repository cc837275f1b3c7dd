//! Block covariances of type B.
//!
//! With `N_{≤d}`, `O_{≤d}`, `P_{≤d}` the roots of each form up to height
//! `d`, the variance of `X_{Φ_inv^d}` splits as
//! `Cov(N,N) + 2Cov(P,N) + 2Cov(N,O) + 2Cov(P,O) + Cov(P,P) + Cov(O,O)`.
//! `Cov(N,N)` is the type-A inversion variance at `min(d, n−1)`.
//!
//! `2Cov(N,O)` and `Cov(O,O)` are given only for `d ≤ n`; past that both
//! blocks are complete, so `d` is clamped to `n`.

use serde::Serialize;

use super::variance::table as variance_table;
use super::{eval_table, even, Branch, Statistic, Term};
use crate::exact::Rational;
use crate::rootsys::Family;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockCovariances {
    #[serde(serialize_with = "ser_rational")]
    pub two_cov_pn: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub two_cov_no: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub two_cov_po: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub cov_pp: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub cov_oo: Rational,
    /// `Cov(N,N)`, not part of the proposition but needed for the sum.
    #[serde(serialize_with = "ser_rational")]
    pub cov_nn: Rational,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::exact::to_string(r))
}

impl BlockCovariances {
    /// The full variance `Var(X_{Φ_inv^d})` of type B.
    pub fn total(&self) -> Rational {
        &self.cov_nn
            + &self.two_cov_pn
            + &self.two_cov_no
            + &self.two_cov_po
            + &self.cov_pp
            + &self.cov_oo
    }
}

pub fn block_covariances_b(n: u32, d: u32) -> Result<BlockCovariances> {
    if n < 2 || d < 1 || d > 2 * n - 1 {
        return Err(Error::Range {
            what: "d",
            detail: format!("type B blocks need n >= 2 and 1 <= d <= 2n-1, got n={n} d={d}"),
        });
    }
    let (n, d) = (n as i64, d as i64);
    let v = |t: &[Branch], d: i64, what: &str| eval_table(t, n, d, what).map(|x| x.value);
    Ok(BlockCovariances {
        two_cov_pn: v(PN, d, "2Cov(P,N)")?,
        two_cov_no: v(NO, d.min(n), "2Cov(N,O)")?,
        two_cov_po: v(PO, d, "2Cov(P,O)")?,
        cov_pp: v(PP, d, "Cov(P,P)")?,
        cov_oo: v(OO, d.min(n), "Cov(O,O)")?,
        cov_nn: v(
            variance_table(Family::A, Statistic::Inversions),
            d.min(n - 1).max(1),
            "Cov(N,N)",
        )?,
    })
}

static PN: &[Branch] = &[
    Branch {
        label: "d<=n/2, d even",
        applies: |n, d| 2 * d <= n && even(d),
        terms: &[Term(-1, 18, 0, 3), Term(1, 16, 0, 2), Term(7, 72, 0, 1)],
    },
    Branch {
        label: "d<=n/2, d odd",
        applies: |n, d| 2 * d <= n && !even(d),
        terms: &[
            Term(-1, 18, 0, 3),
            Term(1, 16, 0, 2),
            Term(1, 18, 0, 1),
            Term(-1, 16, 0, 0),
        ],
    },
    Branch {
        label: "n/2<=d<=2n/3, d even",
        applies: |n, d| 2 * d >= n && 3 * d <= 2 * n && even(d),
        terms: &[
            Term(1, 6, 0, 3),
            Term(-1, 3, 1, 2),
            Term(1, 16, 0, 2),
            Term(1, 6, 2, 1),
            Term(1, 24, 0, 1),
            Term(-1, 36, 3, 0),
            Term(1, 36, 1, 0),
        ],
    },
    Branch {
        label: "n/2<=d<=2n/3, d odd",
        applies: |n, d| 2 * d >= n && 3 * d <= 2 * n && !even(d),
        terms: &[
            Term(1, 6, 0, 3),
            Term(-1, 3, 1, 2),
            Term(1, 16, 0, 2),
            Term(1, 6, 2, 1),
            Term(-1, 36, 3, 0),
            Term(1, 36, 1, 0),
            Term(-1, 16, 0, 0),
        ],
    },
    Branch {
        label: "2n/3<=d<=n, d even",
        applies: |n, d| 3 * d >= 2 * n && d <= n && even(d),
        terms: &[
            Term(1, 6, 0, 3),
            Term(-1, 3, 1, 2),
            Term(-1, 8, 0, 2),
            Term(1, 6, 2, 1),
            Term(1, 4, 1, 1),
            Term(-1, 12, 0, 1),
            Term(-1, 36, 3, 0),
            Term(-1, 12, 2, 0),
            Term(1, 9, 1, 0),
        ],
    },
    Branch {
        label: "2n/3<=d<=n, d odd",
        applies: |n, d| 3 * d >= 2 * n && d <= n && !even(d),
        terms: &[
            Term(1, 6, 0, 3),
            Term(-1, 3, 1, 2),
            Term(-1, 8, 0, 2),
            Term(1, 6, 2, 1),
            Term(1, 4, 1, 1),
            Term(-1, 36, 3, 0),
            Term(-1, 12, 2, 0),
            Term(1, 36, 1, 0),
            Term(-1, 24, 0, 0),
        ],
    },
    Branch {
        label: "n<=d, d even",
        applies: |n, d| n <= d && even(d),
        terms: &[
            Term(-1, 18, 0, 3),
            Term(1, 4, 1, 2),
            Term(1, 24, 0, 2),
            Term(-1, 3, 2, 1),
            Term(-1, 6, 1, 1),
            Term(-1, 36, 0, 1),
            Term(1, 9, 3, 0),
            Term(1, 6, 2, 0),
            Term(1, 18, 1, 0),
        ],
    },
    // erratum: constant +n²/6 (stated −n²/6)
    Branch {
        label: "n<=d, d odd",
        applies: |n, d| n <= d && !even(d),
        terms: &[
            Term(-1, 18, 0, 3),
            Term(1, 4, 1, 2),
            Term(1, 24, 0, 2),
            Term(-1, 3, 2, 1),
            Term(-1, 6, 1, 1),
            Term(1, 18, 0, 1),
            Term(1, 9, 3, 0),
            Term(1, 6, 2, 0),
            Term(-1, 36, 1, 0),
            Term(-1, 24, 0, 0),
        ],
    },
];

static NO: &[Branch] = &[
    Branch {
        label: "d<=n/2",
        applies: |n, d| 2 * d <= n,
        terms: &[Term(-1, 8, 0, 2), Term(-1, 8, 0, 1)],
    },
    Branch {
        label: "n/2<=d<=n",
        applies: |n, d| 2 * d >= n && d <= n,
        terms: &[
            Term(3, 8, 0, 2),
            Term(-1, 2, 1, 1),
            Term(1, 8, 0, 1),
            Term(1, 8, 2, 0),
            Term(-1, 8, 1, 0),
        ],
    },
];

static PO: &[Branch] = &[
    Branch {
        label: "d<=n, d even",
        applies: |n, d| d <= n && even(d),
        terms: &[Term(1, 8, 0, 2), Term(-1, 4, 0, 1)],
    },
    Branch {
        label: "d<=n, d odd",
        applies: |n, d| d <= n && !even(d),
        terms: &[Term(1, 8, 0, 2), Term(-1, 4, 0, 1), Term(1, 8, 0, 0)],
    },
    Branch {
        label: "n<=d, d even",
        applies: |n, d| n <= d && even(d),
        terms: &[
            Term(-1, 8, 0, 2),
            Term(1, 2, 1, 1),
            Term(-1, 4, 2, 0),
            Term(-1, 4, 1, 0),
        ],
    },
    Branch {
        label: "n<=d, d odd",
        applies: |n, d| n <= d && !even(d),
        terms: &[
            Term(-1, 8, 0, 2),
            Term(1, 2, 1, 1),
            Term(-1, 4, 2, 0),
            Term(-1, 4, 1, 0),
            Term(1, 8, 0, 0),
        ],
    },
];

static PP: &[Branch] = &[
    Branch {
        label: "d<=n, d even",
        applies: |n, d| d <= n && even(d),
        terms: &[Term(1, 36, 0, 3), Term(-1, 12, 0, 2), Term(1, 18, 0, 1)],
    },
    Branch {
        label: "d<=n, d odd",
        applies: |n, d| d <= n && !even(d),
        terms: &[
            Term(1, 36, 0, 3),
            Term(-1, 12, 0, 2),
            Term(7, 72, 0, 1),
            Term(-1, 24, 0, 0),
        ],
    },
    Branch {
        label: "n<=d, d even",
        applies: |n, d| n <= d && even(d),
        terms: &[
            Term(-1, 36, 0, 3),
            Term(1, 12, 1, 2),
            Term(1, 24, 0, 2),
            Term(-1, 6, 1, 1),
            Term(-1, 72, 0, 1),
            Term(-1, 36, 3, 0),
            Term(1, 24, 2, 0),
            Term(5, 72, 1, 0),
        ],
    },
    // erratum: linear coefficient −n/6 + 1/36 (stated −n/6 − 1/36)
    Branch {
        label: "n<=d, d odd",
        applies: |n, d| n <= d && !even(d),
        terms: &[
            Term(-1, 36, 0, 3),
            Term(1, 12, 1, 2),
            Term(1, 24, 0, 2),
            Term(-1, 6, 1, 1),
            Term(1, 36, 0, 1),
            Term(-1, 36, 3, 0),
            Term(1, 24, 2, 0),
            Term(5, 72, 1, 0),
            Term(-1, 24, 0, 0),
        ],
    },
];

static OO: &[Branch] = &[Branch {
    label: "d<=n",
    applies: |n, d| d <= n,
    terms: &[Term(1, 4, 0, 1)],
}];
