//! Branch tables of the variance theorems.
//!
//! Terms are `Term(num, den, n_exp, d_exp)`. Predicates follow the stated
//! inequalities and parity splits. Rows marked `erratum` differ from the
//! stated coefficient; each was established by exhaustive enumeration of
//! the Weyl group and is re-checked by the acceptance suite.

use super::{even, Branch, Statistic, Term};
use crate::rootsys::Family;

pub(super) fn table(family: Family, stat: Statistic) -> &'static [Branch] {
    match (family, stat) {
        (Family::A, Statistic::Descents) => A_DES,
        (Family::A, Statistic::Inversions) => A_INV,
        (Family::B, Statistic::Descents) => B_DES,
        (Family::B, Statistic::Inversions) => B_INV,
        (Family::C, Statistic::Descents) => C_DES,
        (Family::C, Statistic::Inversions) => C_INV,
        (Family::D, Statistic::Descents) => D_DES,
        (Family::D, Statistic::Inversions) => D_INV,
        (Family::G2, _) => unreachable!("G2 is rejected before table lookup"),
    }
}

static A_DES: &[Branch] = &[
    Branch {
        label: "2d<=n",
        applies: |n, d| 2 * d <= n,
        terms: &[Term(1, 12, 1, 0), Term(1, 12, 0, 1)],
    },
    Branch {
        label: "2d>=n",
        applies: |n, d| 2 * d >= n,
        terms: &[Term(1, 4, 1, 0), Term(-1, 4, 0, 1)],
    },
];

static A_INV: &[Branch] = &[
    Branch {
        label: "2d<=n",
        applies: |n, d| 2 * d <= n,
        terms: &[
            Term(1, 18, 0, 3),
            Term(1, 24, 0, 2),
            Term(1, 12, 1, 1),
            Term(-1, 72, 0, 1),
        ],
    },
    Branch {
        label: "2d>=n",
        applies: |n, d| 2 * d >= n,
        terms: &[
            Term(-1, 6, 0, 3),
            Term(1, 3, 1, 2),
            Term(-7, 24, 0, 2),
            Term(-1, 6, 2, 1),
            Term(5, 12, 1, 1),
            Term(-1, 8, 0, 1),
            Term(1, 36, 3, 0),
            Term(-1, 12, 2, 0),
            Term(1, 18, 1, 0),
        ],
    },
];

static B_DES: &[Branch] = &[
    Branch {
        label: "d<=n/2, d even",
        applies: |n, d| 2 * d <= n && even(d),
        terms: &[Term(1, 24, 0, 1), Term(1, 12, 1, 0), Term(1, 12, 0, 0)],
    },
    Branch {
        label: "d<=n/2, d odd",
        applies: |n, d| 2 * d <= n && !even(d),
        terms: &[Term(1, 24, 0, 1), Term(1, 12, 1, 0), Term(1, 24, 0, 0)],
    },
    Branch {
        label: "n/2<d<=2n/3, d even",
        applies: |n, d| 2 * d > n && 3 * d <= 2 * n && even(d),
        terms: &[Term(1, 24, 0, 1), Term(1, 12, 1, 0), Term(1, 6, 0, 0)],
    },
    Branch {
        label: "n/2<d<=2n/3, d odd",
        applies: |n, d| 2 * d > n && 3 * d <= 2 * n && !even(d),
        terms: &[Term(1, 24, 0, 1), Term(1, 12, 1, 0), Term(1, 8, 0, 0)],
    },
    Branch {
        label: "2n/3<d<=n, d even",
        applies: |n, d| 3 * d > 2 * n && d <= n && even(d),
        terms: &[Term(1, 24, 0, 1), Term(1, 12, 1, 0)],
    },
    Branch {
        label: "2n/3<=d<=n, d odd",
        applies: |n, d| 3 * d >= 2 * n && d <= n && !even(d),
        terms: &[Term(1, 24, 0, 1), Term(1, 12, 1, 0), Term(1, 8, 0, 0)],
    },
    Branch {
        label: "n<=d, d even",
        applies: |n, d| n <= d && even(d),
        terms: &[Term(-1, 8, 0, 1), Term(1, 4, 1, 0)],
    },
    Branch {
        label: "n<=d, d odd",
        applies: |n, d| n <= d && !even(d),
        terms: &[Term(-1, 8, 0, 1), Term(1, 4, 1, 0), Term(1, 8, 0, 0)],
    },
];

static B_INV: &[Branch] = &[
    Branch {
        label: "d<=n/2, d even",
        applies: |n, d| 2 * d <= n && even(d),
        terms: &[
            Term(1, 36, 0, 3),
            Term(1, 48, 0, 2),
            Term(1, 12, 1, 1),
            Term(1, 72, 0, 1),
        ],
    },
    Branch {
        label: "d<=n/2, d odd",
        applies: |n, d| 2 * d <= n && !even(d),
        terms: &[
            Term(1, 36, 0, 3),
            Term(1, 48, 0, 2),
            Term(1, 12, 1, 1),
            Term(1, 72, 0, 1),
            Term(1, 48, 0, 0),
        ],
    },
    Branch {
        label: "n/2<=d<=2n/3, d even",
        applies: |n, d| 2 * d >= n && 3 * d <= 2 * n && even(d),
        terms: &[
            Term(1, 36, 0, 3),
            Term(3, 16, 0, 2),
            Term(-1, 12, 1, 1),
            Term(7, 72, 0, 1),
            Term(1, 24, 2, 0),
            Term(-1, 24, 1, 0),
        ],
    },
    Branch {
        label: "n/2<=d<2n/3, d odd",
        applies: |n, d| 2 * d >= n && 3 * d < 2 * n && !even(d),
        terms: &[
            Term(1, 36, 0, 3),
            Term(3, 16, 0, 2),
            Term(-1, 12, 1, 1),
            Term(7, 72, 0, 1),
            Term(1, 24, 2, 0),
            Term(-1, 24, 1, 0),
            Term(1, 48, 0, 0),
        ],
    },
    Branch {
        label: "2n/3<=d<=n, d even",
        applies: |n, d| 3 * d >= 2 * n && d <= n && even(d),
        terms: &[
            Term(1, 36, 0, 3),
            Term(1, 6, 1, 1),
            Term(-1, 36, 0, 1),
            Term(-1, 24, 2, 0),
            Term(1, 24, 1, 0),
        ],
    },
    Branch {
        label: "2n/3<=d<=n, d odd",
        applies: |n, d| 3 * d >= 2 * n && d <= n && !even(d),
        terms: &[
            Term(1, 36, 0, 3),
            Term(1, 6, 1, 1),
            Term(7, 72, 0, 1),
            Term(-1, 24, 2, 0),
            Term(-1, 24, 1, 0),
            Term(1, 24, 0, 0),
        ],
    },
    Branch {
        label: "n<=d, d even",
        applies: |n, d| n <= d && even(d),
        terms: &[
            Term(-1, 12, 0, 3),
            Term(1, 3, 1, 2),
            Term(-1, 24, 0, 2),
            Term(-1, 3, 2, 1),
            Term(1, 6, 1, 1),
            Term(-1, 24, 0, 1),
            Term(1, 9, 3, 0),
            Term(1, 18, 1, 0),
        ],
    },
    Branch {
        label: "n<=d, d odd",
        applies: |n, d| n <= d && !even(d),
        terms: &[
            Term(-1, 12, 0, 3),
            Term(1, 3, 1, 2),
            Term(-1, 24, 0, 2),
            Term(-1, 3, 2, 1),
            Term(1, 6, 1, 1),
            Term(1, 12, 0, 1),
            Term(1, 9, 3, 0),
            Term(-1, 36, 1, 0),
            Term(1, 24, 0, 0),
        ],
    },
];

static C_DES: &[Branch] = &[
    Branch {
        label: "d<=2n/3, d even",
        applies: |n, d| 3 * d <= 2 * n && even(d),
        terms: &[Term(1, 24, 0, 1), Term(1, 12, 1, 0)],
    },
    // erratum: stated as "d <= n/2", which leaves n/2 < d <= 2n/3 odd uncovered
    Branch {
        label: "d<=2n/3, d odd",
        applies: |n, d| 3 * d <= 2 * n && !even(d),
        terms: &[Term(1, 24, 0, 1), Term(1, 12, 1, 0), Term(1, 24, 0, 0)],
    },
    Branch {
        label: "2n/3<=d<=n, d even",
        applies: |n, d| 3 * d >= 2 * n && d <= n && even(d),
        terms: &[Term(1, 24, 0, 1), Term(1, 12, 1, 0)],
    },
    Branch {
        label: "2n/3<d<=n, d odd",
        applies: |n, d| 3 * d > 2 * n && d <= n && !even(d),
        terms: &[Term(1, 24, 0, 1), Term(1, 12, 1, 0), Term(1, 8, 0, 0)],
    },
    Branch {
        label: "n<=d, d even",
        applies: |n, d| n <= d && even(d),
        terms: &[Term(-1, 8, 0, 1), Term(1, 4, 1, 0)],
    },
    Branch {
        label: "n<=d, d odd",
        applies: |n, d| n <= d && !even(d),
        terms: &[Term(-1, 8, 0, 1), Term(1, 4, 1, 0), Term(1, 8, 0, 0)],
    },
];

static C_INV: &[Branch] = &[
    Branch {
        label: "d<=2n/3, d even",
        applies: |n, d| 3 * d <= 2 * n && even(d),
        terms: &[
            Term(1, 36, 0, 3),
            Term(1, 48, 0, 2),
            Term(1, 12, 1, 1),
            Term(1, 72, 0, 1),
        ],
    },
    Branch {
        label: "d<=2n/3, d odd",
        applies: |n, d| 3 * d <= 2 * n && !even(d),
        terms: &[
            Term(1, 36, 0, 3),
            Term(1, 48, 0, 2),
            Term(1, 12, 1, 1),
            Term(1, 72, 0, 1),
            Term(1, 48, 0, 0),
        ],
    },
    // erratum: constant n²/24 − n/24 (stated n²/24 − 1/24)
    Branch {
        label: "2n/3<=d<=n, d even",
        applies: |n, d| 3 * d >= 2 * n && d <= n && even(d),
        terms: &[
            Term(1, 36, 0, 3),
            Term(11, 96, 0, 2),
            Term(-1, 24, 1, 1),
            Term(11, 144, 0, 1),
            Term(1, 24, 2, 0),
            Term(-1, 24, 1, 0),
        ],
    },
    Branch {
        label: "2n/3<d<=n, d odd",
        applies: |n, d| 3 * d > 2 * n && d <= n && !even(d),
        terms: &[
            Term(1, 36, 0, 3),
            Term(11, 96, 0, 2),
            Term(-1, 24, 1, 1),
            Term(5, 36, 0, 1),
            Term(1, 24, 2, 0),
            Term(-1, 12, 1, 0),
            Term(5, 96, 0, 0),
        ],
    },
    Branch {
        label: "n<=d, d even",
        applies: |n, d| n <= d && even(d),
        terms: &[
            Term(-1, 12, 0, 3),
            Term(1, 3, 1, 2),
            Term(-13, 96, 0, 2),
            Term(-1, 3, 2, 1),
            Term(11, 24, 1, 1),
            Term(-1, 16, 0, 1),
            Term(1, 9, 3, 0),
            Term(-5, 24, 2, 0),
            Term(7, 72, 1, 0),
        ],
    },
    // erratum: linear coefficient −n²/3 + 11n/24 (stated with an extra −1/16)
    Branch {
        label: "n<=d, d odd",
        applies: |n, d| n <= d && !even(d),
        terms: &[
            Term(-1, 12, 0, 3),
            Term(1, 3, 1, 2),
            Term(-13, 96, 0, 2),
            Term(-1, 3, 2, 1),
            Term(11, 24, 1, 1),
            Term(1, 9, 3, 0),
            Term(-5, 24, 2, 0),
            Term(1, 18, 1, 0),
            Term(5, 96, 0, 0),
        ],
    },
];

static D_DES: &[Branch] = &[
    Branch {
        label: "d<n/2, d even",
        applies: |n, d| 2 * d < n && even(d),
        terms: &[Term(1, 24, 0, 1), Term(1, 12, 1, 0), Term(1, 6, 0, 0)],
    },
    Branch {
        label: "d<n/2, d odd",
        applies: |n, d| 2 * d < n && !even(d),
        terms: &[Term(1, 24, 0, 1), Term(1, 12, 1, 0), Term(1, 8, 0, 0)],
    },
    Branch {
        label: "n/2<=d<2n/3, d even",
        applies: |n, d| 2 * d >= n && 3 * d < 2 * n && even(d),
        terms: &[Term(1, 24, 0, 1), Term(1, 12, 1, 0), Term(1, 3, 0, 0)],
    },
    Branch {
        label: "n/2<=d<=2n/3, d odd",
        applies: |n, d| 2 * d >= n && 3 * d <= 2 * n && !even(d),
        terms: &[Term(1, 24, 0, 1), Term(1, 12, 1, 0), Term(7, 24, 0, 0)],
    },
    Branch {
        label: "2n/3<=d<n, d even",
        applies: |n, d| 3 * d >= 2 * n && d < n && even(d),
        terms: &[Term(1, 24, 0, 1), Term(1, 12, 1, 0), Term(1, 6, 0, 0)],
    },
    Branch {
        label: "2n/3<=d<n, d odd",
        applies: |n, d| 3 * d >= 2 * n && d < n && !even(d),
        terms: &[Term(1, 24, 0, 1), Term(1, 12, 1, 0), Term(7, 24, 0, 0)],
    },
    Branch {
        label: "n<=d, d even",
        applies: |n, d| n <= d && even(d),
        terms: &[Term(-1, 8, 0, 1), Term(1, 4, 1, 0), Term(-1, 4, 0, 0)],
    },
    Branch {
        label: "n<=d, d odd",
        applies: |n, d| n <= d && !even(d),
        terms: &[Term(-1, 8, 0, 1), Term(1, 4, 1, 0), Term(-1, 8, 0, 0)],
    },
];

static D_INV: &[Branch] = &[
    // erratum: linear coefficient n/12 + 1/18 (stated n/12 + 1/72)
    Branch {
        label: "d<n/2, d even",
        applies: |n, d| 2 * d < n && even(d),
        terms: &[
            Term(1, 36, 0, 3),
            Term(1, 48, 0, 2),
            Term(1, 12, 1, 1),
            Term(1, 18, 0, 1),
        ],
    },
    Branch {
        label: "d<n/2, d odd",
        applies: |n, d| 2 * d < n && !even(d),
        terms: &[
            Term(1, 36, 0, 3),
            Term(1, 48, 0, 2),
            Term(1, 12, 1, 1),
            Term(1, 18, 0, 1),
            Term(1, 16, 0, 0),
        ],
    },
    Branch {
        label: "n/2<=d<2n/3, d even",
        applies: |n, d| 2 * d >= n && 3 * d < 2 * n && even(d),
        terms: &[
            Term(1, 36, 0, 3),
            Term(17, 48, 0, 2),
            Term(-1, 4, 1, 1),
            Term(5, 9, 0, 1),
            Term(1, 12, 2, 0),
            Term(-1, 4, 1, 0),
            Term(1, 6, 0, 0),
        ],
    },
    Branch {
        label: "n/2<=d<2n/3, d odd",
        applies: |n, d| 2 * d >= n && 3 * d < 2 * n && !even(d),
        terms: &[
            Term(1, 36, 0, 3),
            Term(17, 48, 0, 2),
            Term(-1, 4, 1, 1),
            Term(5, 9, 0, 1),
            Term(1, 12, 2, 0),
            Term(-1, 4, 1, 0),
            Term(11, 48, 0, 0),
        ],
    },
    Branch {
        label: "2n/3<=d<n, d even",
        applies: |n, d| 3 * d >= 2 * n && d < n && even(d),
        terms: &[Term(1, 36, 0, 3), Term(1, 6, 0, 2), Term(13, 72, 0, 1)],
    },
    // erratum: constant −n/12 + 1/6 (stated −n/12 − 1/6)
    Branch {
        label: "2n/3<=d<n, d odd",
        applies: |n, d| 3 * d >= 2 * n && d < n && !even(d),
        terms: &[
            Term(1, 36, 0, 3),
            Term(1, 6, 0, 2),
            Term(11, 36, 0, 1),
            Term(-1, 12, 1, 0),
            Term(1, 6, 0, 0),
        ],
    },
    Branch {
        label: "n<=d, d even",
        applies: |n, d| n <= d && even(d),
        terms: &[
            Term(-1, 12, 0, 3),
            Term(1, 3, 1, 2),
            Term(-5, 12, 0, 2),
            Term(-1, 3, 2, 1),
            Term(1, 1, 1, 1),
            Term(-17, 24, 0, 1),
            Term(1, 9, 3, 0),
            Term(-5, 12, 2, 0),
            Term(13, 18, 1, 0),
            Term(-5, 12, 0, 0),
        ],
    },
    Branch {
        label: "n<=d, d odd",
        applies: |n, d| n <= d && !even(d),
        terms: &[
            Term(-1, 12, 0, 3),
            Term(1, 3, 1, 2),
            Term(-5, 12, 0, 2),
            Term(-1, 3, 2, 1),
            Term(1, 1, 1, 1),
            Term(-7, 12, 0, 1),
            Term(1, 9, 3, 0),
            Term(-5, 12, 2, 0),
            Term(23, 36, 1, 0),
            Term(-1, 4, 0, 0),
        ],
    },
];
