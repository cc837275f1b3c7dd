//! Empirical normality checks: standardization, Kolmogorov distance to the
//! standard normal law, Janson's dependency-graph criterion, and the
//! rank/height regimes for generalized inversions.
//!
//! The normal CDF is `Φ(x) = erfc(−x/√2)/2` with `erfc` from `statrs`
//! (rational approximations with relative error near machine precision);
//! it is tested against tabulated reference values to `1e-10`.

use num_traits::Signed;
use serde::Serialize;

use crate::depgraph::build_graph;
use crate::exact::{int, to_f64, to_string, Rational};
use crate::formulas::{self, Statistic};
use crate::rootsys::RootSystem;
use crate::stats::{mc_values, RootSelection};
use crate::{Error, Result};

pub fn normal_cdf(x: f64) -> f64 {
    0.5 * statrs::function::erf::erfc(-x / std::f64::consts::SQRT_2)
}

/// `(x − mean)/√variance` for every sample.
pub fn standardize(values: &[u32], mean: &Rational, variance: &Rational) -> Result<Vec<f64>> {
    if !variance.is_positive() {
        return Err(Error::NonPositiveVariance(to_string(variance)));
    }
    let (m, sd) = (to_f64(mean), to_f64(variance).sqrt());
    Ok(values.iter().map(|&v| (v as f64 - m) / sd).collect())
}

/// `sup_x |F_emp(x) − Φ(x)|`, evaluated on both sides of every jump of the
/// empirical CDF (tied samples form a single jump).
pub fn ks_distance(samples: &[f64]) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut xs = samples.to_vec();
    xs.sort_by(f64::total_cmp);
    let m = xs.len() as f64;
    let mut best = 0f64;
    let mut i = 0;
    while i < xs.len() {
        let mut j = i + 1;
        while j < xs.len() && xs[j] == xs[i] {
            j += 1;
        }
        let phi = normal_cdf(xs[i]);
        best = best
            .max((i as f64 / m - phi).abs())
            .max((j as f64 / m - phi).abs());
        i = j;
    }
    Ok(best)
}

/// `k · max(δ,1)^{m−1} / Var^{m/2}`. A degree of 0 is treated as 1 so that
/// edgeless graphs do not produce a vacuous zero.
pub fn janson_criterion(k: usize, delta: usize, variance: f64, m: u32) -> f64 {
    assert!(m >= 2, "the criterion is defined for m >= 2");
    let delta = delta.max(1) as f64;
    k as f64 * delta.powi(m as i32 - 1) / variance.powf(m as f64 / 2.0)
}

/// Exact check of `k δ² / Var^{3/2} ≤ 9 · 12^{3/2} · k^{−1/2}` (with
/// `δ ↦ max(δ, 1)`), in the squared form `k³ δ⁴ ≤ 81 · 1728 · Var³`.
pub fn antichain_rate_bound_holds(k: usize, delta: usize, variance: &Rational) -> bool {
    let d = int(delta.max(1) as i64);
    let k = int(k as i64);
    let lhs = &k * &k * &k * &d * &d * &d * &d;
    let rhs = int(81 * 1728) * variance * variance * variance;
    lhs <= rhs
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Regime {
    /// Components of rank below `d`.
    A,
    /// Components with `d ≤ rank ≤ d²`.
    B,
    /// Components of rank above `d²`.
    C,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegimeReport {
    pub d: u64,
    pub rank: u64,
    pub r_a: u64,
    pub r_b: u64,
    pub r_c: u64,
    /// Regime holding the largest share of the rank (ties resolved A, B, C).
    pub dominant: Regime,
    /// `r^{−1/2}`.
    pub rate_a: f64,
    /// `r · d^{−3/2}`.
    pub rate_b: f64,
    /// `r^{−1/2} · d^{3/2}`.
    pub rate_c: f64,
    /// `d ≳ r^{2/3}`, evaluated as `d³ ≥ r²`.
    pub condition_b: bool,
    /// `d ≲ r^{1/3}`, evaluated as `d³ ≤ r`.
    pub condition_c: bool,
}

pub fn classify_regime(ranks: &[u64], d: u64) -> RegimeReport {
    let (mut r_a, mut r_b, mut r_c) = (0, 0, 0);
    for &r in ranks {
        if r < d {
            r_a += r;
        } else if r <= d * d {
            r_b += r;
        } else {
            r_c += r;
        }
    }
    let rank = r_a + r_b + r_c;
    let dominant = [(r_a, Regime::A), (r_b, Regime::B), (r_c, Regime::C)]
        .into_iter()
        .fold(
            (0, Regime::A),
            |best, cur| if cur.0 > best.0 { cur } else { best },
        )
        .1;
    let (r, df) = (rank as f64, d as f64);
    let (d3, r2) = (
        d as u128 * d as u128 * d as u128,
        rank as u128 * rank as u128,
    );
    RegimeReport {
        d,
        rank,
        r_a,
        r_b,
        r_c,
        dominant,
        rate_a: r.powf(-0.5),
        rate_b: r * df.powf(-1.5),
        rate_c: r.powf(-0.5) * df.powf(1.5),
        condition_b: d3 >= r2,
        condition_c: d3 <= rank as u128,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CltReport {
    pub spec: String,
    pub psi: String,
    pub d: Option<u32>,
    pub rank: usize,
    pub k: usize,
    pub delta: usize,
    pub variance: String,
    pub variance_decimal: f64,
    pub samples: usize,
    pub seed: u64,
    pub ks_distance: f64,
    pub janson_m3: f64,
    /// Whether the exact antichain inequality holds for the measured
    /// `(k, δ, Var)`; only reported when `Ψ` is an antichain.
    pub antichain_bound: Option<bool>,
    pub regime: Option<RegimeReport>,
}

impl CltReport {
    pub const CSV_HEADER: [&'static str; 7] = ["n", "d", "k", "delta", "variance", "ks", "bound"];

    pub fn csv_row(&self) -> [String; 7] {
        [
            self.rank.to_string(),
            self.d.map(|d| d.to_string()).unwrap_or_default(),
            self.k.to_string(),
            self.delta.to_string(),
            self.variance.clone(),
            format!("{:.6}", self.ks_distance),
            format!("{:.6}", self.janson_m3),
        ]
    }
}

/// Exact variance of `X_Ψ` for a selection: closed forms per component for
/// `Φ_des^d` and `Φ_inv^d`, the closed pair sum otherwise.
pub fn selection_variance(rs: &RootSystem, selection: &RootSelection) -> Result<Rational> {
    match selection {
        RootSelection::Descents(d) => formulas::system_variance(rs, *d, Statistic::Descents),
        RootSelection::Inversions(d) => formulas::system_variance(rs, *d, Statistic::Inversions),
        RootSelection::Explicit(_) => Ok(formulas::variance_by_pairs(rs, &selection.resolve(rs))),
    }
}

/// Sample, standardize with the exact moments, and measure.
pub fn clt_report(
    rs: &RootSystem,
    selection: &RootSelection,
    n_samples: usize,
    seed: u64,
) -> Result<CltReport> {
    if n_samples == 0 {
        return Err(Error::EmptySample);
    }
    let psi = selection.resolve(rs);
    let variance = selection_variance(rs, selection)?;
    if !variance.is_positive() {
        return Err(Error::NonPositiveVariance(to_string(&variance)));
    }
    let mean = formulas::mean(psi.len());
    let values = mc_values(rs, &psi, n_samples, seed);
    let z = standardize(&values, &mean, &variance)?;
    let ks = ks_distance(&z)?;
    let graph = build_graph(rs, &psi);
    let delta = graph.max_degree();
    let d = match selection {
        RootSelection::Descents(d) | RootSelection::Inversions(d) => Some(*d),
        RootSelection::Explicit(_) => None,
    };
    let regime = match selection {
        RootSelection::Inversions(d) => {
            let ranks: Vec<u64> = rs
                .spec()
                .components()
                .iter()
                .map(|c| c.rank as u64)
                .collect();
            Some(classify_regime(&ranks, *d as u64))
        }
        _ => None,
    };
    let antichain_bound = rs
        .is_antichain(&psi)
        .then(|| antichain_rate_bound_holds(psi.len(), delta, &variance));
    Ok(CltReport {
        spec: rs.spec().to_string(),
        psi: selection.describe(rs),
        d,
        rank: rs.spec().rank(),
        k: psi.len(),
        delta,
        variance: to_string(&variance),
        variance_decimal: to_f64(&variance),
        samples: n_samples,
        seed,
        ks_distance: ks,
        janson_m3: janson_criterion(psi.len(), delta, to_f64(&variance), 3),
        antichain_bound,
        regime,
    })
}

/// Whether `x` lies in `[0, 1]`; used by report invariants.
pub fn is_probability(x: f64) -> bool {
    (0.0..=1.0).contains(&x)
}
