//! Closed forms in exact rational arithmetic.
//!
//! - [`cov_closed`] and [`cov_closed_angle`]: the pairwise covariance of
//!   inversion indicators from the reflection order and from the angle.
//! - [`var_descents`] and [`var_inversions`]: piecewise polynomial
//!   variances of `X_{Φ_des^d}` and `X_{Φ_inv^d}` for types A to D.
//! - [`blocks`]: the N/O/P block covariances of type B.
//! - [`interaction`]: index-match counts between root classes.
//! - [`var_lower_bound`]: the three-regime lower bound on the variance.
//!
//! Classical formulas take the conventional `n`: `A_{n-1}` is keyed by `n`,
//! the other types by their rank.
//!
//! A piecewise formula is a list of branches, each a predicate on `(n, d)`
//! and a polynomial. Every branch whose predicate holds is evaluated; the
//! values must agree, otherwise [`Error::ConflictingBranches`] is returned.

pub mod blocks;
pub mod interaction;
mod variance;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::exact::{int, ratio, Rational};
use crate::rootsys::{Family, RootId, RootSystem};
use crate::{Error, Result};

pub use blocks::{block_covariances_b, BlockCovariances};
pub use interaction::{interaction_count, Pattern, RootClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Descents,
    Inversions,
}

impl std::str::FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "descents" | "des" => Ok(Statistic::Descents),
            "inversions" | "inv" => Ok(Statistic::Inversions),
            _ => Err(Error::Parse {
                what: "statistic",
                input: s.to_string(),
                reason: "expected descents or inversions".to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VarianceQuery {
    pub family: Family,
    pub n: u32,
    pub d: u32,
    pub statistic: Statistic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarianceValue {
    pub value: Rational,
    pub branch: &'static str,
}

/// One term `coeff · n^np · d^dp`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Term(pub i64, pub i64, pub u32, pub u32);

#[derive(Debug)]
pub(crate) struct Branch {
    pub label: &'static str,
    pub applies: fn(i64, i64) -> bool,
    pub terms: &'static [Term],
}

pub(crate) fn poly(terms: &[Term], n: i64, d: i64) -> Rational {
    terms
        .iter()
        .fold(Rational::zero(), |acc, &Term(num, den, np, dp)| {
            acc + ratio(num, den) * int(n.pow(np) * d.pow(dp))
        })
}

/// Evaluates every applicable branch and checks that they agree.
pub(crate) fn eval_table(table: &[Branch], n: i64, d: i64, what: &str) -> Result<VarianceValue> {
    let mut found: Option<VarianceValue> = None;
    for b in table.iter().filter(|b| (b.applies)(n, d)) {
        let v = poly(b.terms, n, d);
        match &found {
            None => {
                found = Some(VarianceValue {
                    value: v,
                    branch: b.label,
                })
            }
            Some(prev) if prev.value != v => {
                return Err(Error::ConflictingBranches {
                    first: prev.branch,
                    second: b.label,
                    at: format!("{what} n={n} d={d}"),
                })
            }
            Some(_) => {}
        }
    }
    found.ok_or_else(|| Error::NoBranch(format!("{what} n={n} d={d}")))
}

pub(crate) fn even(d: i64) -> bool {
    d % 2 == 0
}

/// Largest height in the classical system keyed by `n`.
pub fn max_height(family: Family, n: u32) -> Result<u32> {
    let min_n = match family {
        Family::A | Family::B | Family::C | Family::D => 2,
        Family::G2 => return Err(Error::Unsupported("closed-form variances for G2".into())),
    };
    if n < min_n {
        return Err(Error::Range {
            what: "n",
            detail: format!("type {family} formulas need n >= {min_n}, got {n}"),
        });
    }
    Ok(match family {
        Family::A => n - 1,
        Family::B | Family::C => 2 * n - 1,
        Family::D => 2 * n - 3,
        Family::G2 => unreachable!(),
    })
}

fn check_query(q: &VarianceQuery) -> Result<()> {
    let top = max_height(q.family, q.n)?;
    if q.d < 1 || q.d > top {
        return Err(Error::Range {
            what: "d",
            detail: format!(
                "type {} with n={} needs 1 <= d <= {top}, got {}",
                q.family, q.n, q.d
            ),
        });
    }
    Ok(())
}

/// `Var(X_{Φ_des^d})`.
pub fn var_descents(q: &VarianceQuery) -> Result<VarianceValue> {
    check_query(q)?;
    let table = variance::table(q.family, Statistic::Descents);
    eval_table(
        table,
        q.n as i64,
        q.d as i64,
        &format!("{} descents", q.family),
    )
}

/// `Var(X_{Φ_inv^d})`.
pub fn var_inversions(q: &VarianceQuery) -> Result<VarianceValue> {
    check_query(q)?;
    let table = variance::table(q.family, Statistic::Inversions);
    eval_table(
        table,
        q.n as i64,
        q.d as i64,
        &format!("{} inversions", q.family),
    )
}

/// Dispatches on `q.statistic`.
pub fn variance(q: &VarianceQuery) -> Result<VarianceValue> {
    match q.statistic {
        Statistic::Descents => var_descents(q),
        Statistic::Inversions => var_inversions(q),
    }
}

/// `Cov(X_β, X_γ)`: `1/4` on the diagonal, otherwise
/// `sign⟨β,γ⟩ (1/4 − 1/(2 ord(β,γ)))`, which vanishes for orthogonal roots.
pub fn cov_closed(rs: &RootSystem, beta: RootId, gamma: RootId) -> Rational {
    if beta == gamma {
        return ratio(1, 4);
    }
    let ip = rs.inner_product_int(beta, gamma);
    if ip == 0 {
        return Rational::zero();
    }
    let ord = rs.reflection_order(beta, gamma) as i64;
    let mag = ratio(1, 4) - ratio(1, 2 * ord);
    if ip > 0 {
        mag
    } else {
        -mag
    }
}

/// Acute or obtuse angle between two distinct roots as a rational multiple
/// of π.
pub fn angle_over_pi(rs: &RootSystem, beta: RootId, gamma: RootId) -> Rational {
    let four_cos_sq = rs.four_cos_sq(beta, gamma);
    let acute = match four_cos_sq {
        0 => return ratio(1, 2),
        1 => ratio(1, 3),
        2 => ratio(1, 4),
        3 => ratio(1, 6),
        _ => panic!(
            "unclassifiable angle between {} and {}",
            rs.render(beta),
            rs.render(gamma)
        ),
    };
    if rs.inner_product_int(beta, gamma) > 0 {
        acute
    } else {
        int(1) - acute
    }
}

/// `Cov(X_β, X_γ) = (3π − 6φ)/(12π)` for distinct roots at angle `φ`.
pub fn cov_closed_angle(rs: &RootSystem, beta: RootId, gamma: RootId) -> Rational {
    assert_ne!(beta, gamma, "the angle form applies to distinct roots");
    ratio(1, 4) - angle_over_pi(rs, beta, gamma) / int(2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LowerBoundCase {
    /// `r ≤ d`: bound `ε r³`.
    #[serde(rename = "r<=d")]
    RankAtMostD,
    /// `d ≤ r ≤ d²`: bound `ε d³`.
    #[serde(rename = "d<=r<=d^2")]
    Intermediate,
    /// `d² < r`: bound `ε r d`.
    #[serde(rename = "d^2<=r")]
    RankAboveDSquared,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBound {
    pub case: LowerBoundCase,
    pub bound: Rational,
}

pub fn default_epsilon() -> Rational {
    ratio(1, 100)
}

/// Lower bound on `Var(X_{Φ_inv^d})` for an irreducible classical system of
/// rank `r`. Cases are tested in the order `r ≤ d`, `d ≤ r ≤ d²`, `d² < r`.
pub fn var_lower_bound(r: u64, d: u64, eps: &Rational) -> LowerBound {
    let (r_i, d_i) = (r as i64, d as i64);
    let (case, base) = if r <= d {
        (LowerBoundCase::RankAtMostD, r_i.pow(3))
    } else if r <= d * d {
        (LowerBoundCase::Intermediate, d_i.pow(3))
    } else {
        (LowerBoundCase::RankAboveDSquared, r_i * d_i)
    };
    LowerBound {
        case,
        bound: eps * int(base),
    }
}

/// Mean of `X_Ψ`, which is `|Ψ|/2` for every root set.
pub fn mean(k: usize) -> Rational {
    ratio(k as i64, 2)
}

/// `24 · Cov(X_β, X_γ)`, an integer.
pub fn cov_units24(rs: &RootSystem, beta: RootId, gamma: RootId) -> i64 {
    if beta == gamma {
        return 6;
    }
    let ip = rs.inner_product_int(beta, gamma);
    if ip == 0 {
        return 0;
    }
    let mag = 6 - 12 / rs.reflection_order(beta, gamma) as i64;
    mag * ip.signum()
}

/// Sum of [`cov_closed`] over all ordered pairs of `psi`, which is
/// `Var(X_Ψ)`. Accumulated as an integer in units of `1/24`.
pub fn variance_by_pairs(rs: &RootSystem, psi: &[RootId]) -> Rational {
    let mut units: i64 = 0;
    for (k, &a) in psi.iter().enumerate() {
        units += 6;
        for &b in &psi[k + 1..] {
            units += 2 * cov_units24(rs, a, b);
        }
    }
    ratio(units, 24)
}

/// Variance of `X_{Φ_des^d}` or `X_{Φ_inv^d}` over a possibly reducible
/// system: the sum of the per-component closed forms. G2 components and
/// other inputs outside the tables fall back to [`variance_by_pairs`] on
/// that component.
pub fn system_variance(rs: &RootSystem, d: u32, stat: Statistic) -> Result<Rational> {
    let mut total = Rational::zero();
    for (c, comp) in rs.spec().components().iter().enumerate() {
        let n = comp.formula_n() as u32;
        let top = comp.max_height();
        let closed = match comp.family {
            Family::G2 => None,
            f => match stat {
                Statistic::Descents if d > top => Some(Rational::zero()),
                _ => Some(
                    variance(&VarianceQuery {
                        family: f,
                        n,
                        d: d.min(top),
                        statistic: stat,
                    })?
                    .value,
                ),
            },
        };
        total += match closed {
            Some(v) => v,
            None => {
                let roots: Vec<RootId> = rs
                    .component_range(c)
                    .map(|k| RootId(k as u32))
                    .filter(|&r| match stat {
                        Statistic::Descents => rs.height(r) == d,
                        Statistic::Inversions => rs.height(r) <= d,
                    })
                    .collect();
                variance_by_pairs(rs, &roots)
            }
        };
    }
    debug_assert!(!total.is_negative());
    Ok(total)
}
