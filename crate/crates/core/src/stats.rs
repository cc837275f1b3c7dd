//! The indicator variables `X_β(w) = [w(β) ∈ Φ⁻]` and their sums `X_Ψ`
//! under the uniform distribution on `W`.
//!
//! Exact quantities come from a full pass over the group (in parallel
//! index ranges, merged with integer addition). Monte Carlo runs draw
//! samples in blocks of [`SAMPLE_BLOCK`](crate::rng::SAMPLE_BLOCK), block
//! `b` using stream `b` of the seed, so results do not depend on the number
//! of worker threads.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::exact::{ratio, to_string, Rational};
use crate::rng::{stream_rng, BOOTSTRAP_STREAM_OFFSET, SAMPLE_BLOCK};
use crate::rootsys::{RootId, RootSystem};
use crate::weyl::{sample_into, Enumerator, WeylElement};
use crate::{Error, Result};

/// Group elements handled by one parallel work unit.
const ENUM_CHUNK: u128 = 4096;

/// Resamples used by [`bootstrap_variance_se`].
pub const BOOTSTRAP_RESAMPLES: usize = 200;

/// Largest `|Ψ| + |Ψ′|` accepted by [`exact_joint_distribution`].
pub const JOINT_LIMIT: usize = 20;

/// Which roots make up `Ψ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSelection {
    /// `Φ_des^d`.
    Descents(u32),
    /// `Φ_inv^d`.
    Inversions(u32),
    Explicit(Vec<RootId>),
}

impl RootSelection {
    pub fn resolve(&self, rs: &RootSystem) -> Vec<RootId> {
        match self {
            RootSelection::Descents(d) => rs.roots_of_height(*d),
            RootSelection::Inversions(d) => rs.roots_up_to_height(*d),
            RootSelection::Explicit(v) => {
                let mut v = v.clone();
                v.sort_unstable();
                v.dedup();
                v
            }
        }
    }

    pub fn describe(&self, rs: &RootSystem) -> String {
        match self {
            RootSelection::Descents(d) => format!("des:{d}"),
            RootSelection::Inversions(d) => format!("inv:{d}"),
            RootSelection::Explicit(_) => format!("{{{}}}", rs.render_list(&self.resolve(rs))),
        }
    }
}

/// Folds `step` over every group element. Accumulators of disjoint index
/// ranges are combined with `merge`, which must be associative and
/// commutative for the result to be independent of scheduling.
pub fn fold_group<A, I, S, M>(rs: &RootSystem, cap: u128, init: I, step: S, merge: M) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    S: Fn(&mut A, &WeylElement) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let e = Enumerator::new(rs, cap)?;
    let chunks = e.order().div_ceil(ENUM_CHUNK) as u64;
    Ok((0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut acc = init();
            let start = c as u128 * ENUM_CHUNK;
            let end = (start + ENUM_CHUNK).min(e.order());
            let mut w = e.element(start);
            for idx in start..end {
                e.fill(idx, &mut w);
                step(&mut acc, &w);
            }
            acc
        })
        .reduce(&init, &merge))
}

fn add_vec(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Histogram of `X_Ψ` over `W`: value → number of elements.
pub fn exact_distribution(
    rs: &RootSystem,
    psi: &[RootId],
    cap: u128,
) -> Result<BTreeMap<u32, u64>> {
    let k = psi.len();
    let counts = fold_group(
        rs,
        cap,
        || vec![0u64; k + 1],
        |acc, w| {
            let x = psi
                .iter()
                .filter(|&&b| w.is_inversion_unchecked(rs, b))
                .count();
            acc[x] += 1;
        },
        add_vec,
    )?;
    Ok(counts
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(v, c)| (v as u32, c))
        .collect())
}

/// `E[X_Ψ]` from the histogram.
pub fn exact_mean(rs: &RootSystem, psi: &[RootId], cap: u128) -> Result<Rational> {
    let hist = exact_distribution(rs, psi, cap)?;
    Ok(moments_of_histogram(&hist).0)
}

/// `Var(X_Ψ)` from the histogram.
pub fn exact_variance(rs: &RootSystem, psi: &[RootId], cap: u128) -> Result<Rational> {
    let hist = exact_distribution(rs, psi, cap)?;
    Ok(moments_of_histogram(&hist).1)
}

/// Mean and population variance of a histogram.
pub fn moments_of_histogram(hist: &BTreeMap<u32, u64>) -> (Rational, Rational) {
    let (mut n, mut s1, mut s2) = (0u128, 0u128, 0u128);
    for (&v, &c) in hist {
        n += c as u128;
        s1 += c as u128 * v as u128;
        s2 += c as u128 * (v as u128) * (v as u128);
    }
    if n == 0 {
        return (Rational::zero(), Rational::zero());
    }
    let big = |x: u128| Rational::from_integer(x.into());
    let mean = big(s1) / big(n);
    let var = big(s2) / big(n) - &mean * &mean;
    (mean, var)
}

/// Sizes of `W^(εδ)(β, γ)`: `p` means `w(·) ∈ Φ⁺`, `m` means `w(·) ∈ Φ⁻`;
/// the first letter refers to `β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WPartitionCounts {
    pub pp: u64,
    pub pm: u64,
    pub mp: u64,
    pub mm: u64,
}

impl WPartitionCounts {
    pub fn total(&self) -> u64 {
        self.pp + self.pm + self.mp + self.mm
    }

    /// `Cov(X_β, X_γ) = |W^(−−)|/|W| − 1/4`.
    pub fn covariance(&self) -> Rational {
        ratio(self.mm as i64, self.total() as i64) - ratio(1, 4)
    }
}

pub fn wpartition_counts(
    rs: &RootSystem,
    beta: RootId,
    gamma: RootId,
    cap: u128,
) -> Result<WPartitionCounts> {
    let c = fold_group(
        rs,
        cap,
        || [0u64; 4],
        |acc, w| {
            let x = w.is_inversion_unchecked(rs, beta) as usize;
            let y = w.is_inversion_unchecked(rs, gamma) as usize;
            acc[2 * x + y] += 1;
        },
        |mut a, b| {
            for k in 0..4 {
                a[k] += b[k];
            }
            a
        },
    )?;
    Ok(WPartitionCounts {
        pp: c[0],
        pm: c[1],
        mp: c[2],
        mm: c[3],
    })
}

pub fn exact_cov(rs: &RootSystem, beta: RootId, gamma: RootId, cap: u128) -> Result<Rational> {
    Ok(wpartition_counts(rs, beta, gamma, cap)?.covariance())
}

/// W-partition counts of every ordered pair of `psi` in one pass over `W`;
/// entry `[a][b]` belongs to `(psi[a], psi[b])`.
pub fn all_wpartition_counts(
    rs: &RootSystem,
    psi: &[RootId],
    cap: u128,
) -> Result<Vec<Vec<WPartitionCounts>>> {
    let k = psi.len();
    let order = Enumerator::new(rs, cap)?.order() as u64;
    // singles[a] followed by the upper triangle of joint inversion counts
    let acc = fold_group(
        rs,
        cap,
        || vec![0u64; k + k * k],
        |acc, w| {
            let inv: Vec<usize> = (0..k)
                .filter(|&a| w.is_inversion_unchecked(rs, psi[a]))
                .collect();
            for (p, &a) in inv.iter().enumerate() {
                acc[a] += 1;
                for &b in &inv[p..] {
                    acc[k + a * k + b] += 1;
                }
            }
        },
        add_vec,
    )?;
    let single = |a: usize| acc[a];
    let both = |a: usize, b: usize| acc[k + a.min(b) * k + a.max(b)];
    Ok((0..k)
        .map(|a| {
            (0..k)
                .map(|b| {
                    let mm = both(a, b);
                    let mp = single(a) - mm;
                    let pm = single(b) - mm;
                    WPartitionCounts {
                        pp: order - mm - mp - pm,
                        pm,
                        mp,
                        mm,
                    }
                })
                .collect()
        })
        .collect())
}

/// Joint counts of the indicator vectors of `psi` and `psi2`. Each vector
/// is a bitmask whose bit `t` is `X` of the `t`-th root of the set in
/// catalog order.
pub fn exact_joint_distribution(
    rs: &RootSystem,
    psi: &[RootId],
    psi2: &[RootId],
    cap: u128,
) -> Result<BTreeMap<(u32, u32), u64>> {
    if psi.len() + psi2.len() > JOINT_LIMIT {
        return Err(Error::OutcomeSpaceTooLarge(psi.len() + psi2.len()));
    }
    let sorted = |s: &[RootId]| {
        let mut v = s.to_vec();
        v.sort_unstable();
        v
    };
    let (x, y) = (sorted(psi), sorted(psi2));
    let mask = |w: &WeylElement, s: &[RootId]| {
        s.iter()
            .enumerate()
            .filter(|&(_, &r)| w.is_inversion_unchecked(rs, r))
            .fold(0u32, |m, (t, _)| m | 1 << t)
    };
    fold_group(
        rs,
        cap,
        BTreeMap::new,
        |acc: &mut BTreeMap<(u32, u32), u64>, w| {
            *acc.entry((mask(w, &x), mask(w, &y))).or_default() += 1;
        },
        |mut a, b| {
            for (key, c) in b {
                *a.entry(key).or_default() += c;
            }
            a
        },
    )
}

/// A seeded Monte Carlo record of `X_Ψ`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleRun {
    pub spec: String,
    pub psi: String,
    pub psi_size: usize,
    pub seed: u64,
    pub values: Vec<u32>,
    pub sample_mean: Rational,
    /// Unbiased (`n − 1`) sample variance; zero for a single sample.
    pub sample_variance: Rational,
}

impl SampleRun {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn histogram(&self) -> BTreeMap<u32, u64> {
        let mut h = BTreeMap::new();
        for &v in &self.values {
            *h.entry(v).or_default() += 1;
        }
        h
    }

    /// JSON record `{spec, psi, seed, n, values?, moments}`.
    pub fn to_json(&self, include_values: bool) -> serde_json::Value {
        let mut v = json!({
            "spec": self.spec,
            "psi": self.psi,
            "seed": self.seed,
            "n": self.n(),
            "moments": {
                "mean": to_string(&self.sample_mean),
                "variance": to_string(&self.sample_variance),
                "mean_decimal": crate::exact::to_f64(&self.sample_mean),
                "variance_decimal": crate::exact::to_f64(&self.sample_variance),
            },
        });
        if include_values {
            v["values"] = json!(self.values);
        }
        v
    }
}

/// `X_Ψ` of `n_samples` uniform draws from `seed`.
pub fn mc_values(rs: &RootSystem, psi: &[RootId], n_samples: usize, seed: u64) -> Vec<u32> {
    let blocks = n_samples.div_ceil(SAMPLE_BLOCK);
    (0..blocks)
        .into_par_iter()
        .flat_map_iter(|b| {
            let mut rng = stream_rng(seed, b as u64);
            let len = SAMPLE_BLOCK.min(n_samples - b * SAMPLE_BLOCK);
            let mut w = WeylElement::identity(rs);
            let mut out = Vec::with_capacity(len);
            for _ in 0..len {
                sample_into(rs, &mut rng, &mut w);
                out.push(
                    psi.iter()
                        .filter(|&&r| w.is_inversion_unchecked(rs, r))
                        .count() as u32,
                );
            }
            out
        })
        .collect()
}

pub fn mc_run(
    rs: &RootSystem,
    selection: &RootSelection,
    n_samples: usize,
    seed: u64,
) -> Result<SampleRun> {
    if n_samples == 0 {
        return Err(Error::EmptySample);
    }
    let psi = selection.resolve(rs);
    let values = mc_values(rs, &psi, n_samples, seed);
    let (sample_mean, sample_variance) = sample_moments(&values);
    Ok(SampleRun {
        spec: rs.spec().to_string(),
        psi: selection.describe(rs),
        psi_size: psi.len(),
        seed,
        values,
        sample_mean,
        sample_variance,
    })
}

/// Exact sample mean and unbiased sample variance.
pub fn sample_moments(values: &[u32]) -> (Rational, Rational) {
    let n = values.len() as u128;
    if n == 0 {
        return (Rational::zero(), Rational::zero());
    }
    let s1: u128 = values.iter().map(|&v| v as u128).sum();
    let s2: u128 = values.iter().map(|&v| (v as u128) * (v as u128)).sum();
    let big = |x: u128| Rational::from_integer(x.into());
    let mean = big(s1) / big(n);
    if n == 1 {
        return (mean, Rational::zero());
    }
    // (Σx² − (Σx)²/n) / (n − 1)
    let var = (big(s2) - big(s1) * big(s1) / big(n)) / big(n - 1);
    (mean, var)
}

/// Bootstrap standard error of the unbiased sample variance, from
/// [`BOOTSTRAP_RESAMPLES`] resamples on streams above
/// [`BOOTSTRAP_STREAM_OFFSET`].
pub fn bootstrap_variance_se(values: &[u32], seed: u64) -> Result<f64> {
    use rand::Rng;
    let n = values.len();
    if n < 2 {
        return Err(Error::EmptySample);
    }
    let vars: Vec<f64> = (0..BOOTSTRAP_RESAMPLES)
        .into_par_iter()
        .map(|r| {
            let mut rng = stream_rng(seed, BOOTSTRAP_STREAM_OFFSET + r as u64);
            let (mut s1, mut s2) = (0f64, 0f64);
            for _ in 0..n {
                let v = values[rng.random_range(0..n)] as f64;
                s1 += v;
                s2 += v * v;
            }
            (s2 - s1 * s1 / n as f64) / (n as f64 - 1.0)
        })
        .collect();
    let m = vars.iter().sum::<f64>() / vars.len() as f64;
    let ss = vars.iter().map(|v| (v - m) * (v - m)).sum::<f64>();
    Ok((ss / (vars.len() as f64 - 1.0)).sqrt())
}

/// Mean of `X_Ψ` in closed form: `|Ψ|/2`.
pub fn mean_closed(psi: &[RootId]) -> Rational {
    ratio(psi.len() as i64, 2)
}

/// `Σ_{β,γ ∈ Ψ} Cov(X_β, X_γ)` with each covariance from its own W-partition
/// count, i.e. the enumeration-side counterpart of the closed pair sum.
pub fn exact_variance_by_pairs(rs: &RootSystem, psi: &[RootId], cap: u128) -> Result<Rational> {
    let table = all_wpartition_counts(rs, psi, cap)?;
    let mut total = Rational::zero();
    for row in &table {
        for c in row {
            total += c.covariance();
        }
    }
    Ok(total)
}
