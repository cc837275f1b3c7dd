//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness and exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use weylstat::clt::{ks_distance, standardize};
use weylstat::depgraph::check_antichain_degree;
use weylstat::exact::{ratio, to_f64, to_string, Rational};
use weylstat::formulas::{
    self, block_covariances_b, interaction_count, Pattern, RootClass, Statistic, VarianceQuery,
};
use weylstat::stats::{self, mc_values};
use weylstat::{Family, RootForm, RootId, RootSystem, DEFAULT_CAP};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn sys(s: &str) -> RootSystem {
    RootSystem::build(&s.parse().unwrap()).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn query(family: Family, n: u32, d: u32, statistic: Statistic) -> VarianceQuery {
    VarianceQuery {
        family,
        n,
        d,
        statistic,
    }
}

const COV_SYSTEMS: [&str; 5] = ["A5", "B4", "C4", "D4", "G2"];

fn c1_covariance_theorem() -> Outcome {
    let mut pairs = 0;
    for s in COV_SYSTEMS {
        let rs = sys(s);
        for b in rs.ids() {
            for g in rs.ids() {
                let closed = formulas::cov_closed(&rs, b, g);
                let exact = stats::exact_cov(&rs, b, g, DEFAULT_CAP).map_err(|e| e.to_string())?;
                ensure(closed == exact, || {
                    format!(
                        "{s} ({}, {}): closed {} vs enumeration {}",
                        rs.render(b),
                        rs.render(g),
                        to_string(&closed),
                        to_string(&exact)
                    )
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs equal"))
}

fn c2_wpartition() -> Outcome {
    let mut pairs = 0;
    for s in COV_SYSTEMS {
        let rs = sys(s);
        for b in rs.ids() {
            for g in rs.ids() {
                let c =
                    stats::wpartition_counts(&rs, b, g, DEFAULT_CAP).map_err(|e| e.to_string())?;
                let tag = || format!("{s} ({}, {}): {c:?}", rs.render(b), rs.render(g));
                ensure(c.pp == c.mm && c.pm == c.mp, tag)?;
                if b != g {
                    let ord = rs.reflection_order(b, g) as u64;
                    let ip = rs.inner_product_int(b, g);
                    if ip >= 0 {
                        ensure(c.pp == (ord - 1) * c.pm, tag)?;
                    }
                    if ip <= 0 {
                        ensure(c.pm == (ord - 1) * c.pp, tag)?;
                    }
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

/// Variance of `X_{Φ_des^d}` and `X_{Φ_inv^d}` for every `d`, from one
/// pass over `W` recording the inversion count at each height.
fn enumerated_variances(rs: &RootSystem) -> Result<BTreeMap<(u32, Statistic), Rational>, String> {
    let top = rs.max_height() as usize;
    let mut des: Vec<BTreeMap<u32, u64>> = vec![BTreeMap::new(); top + 1];
    let mut inv: Vec<BTreeMap<u32, u64>> = vec![BTreeMap::new(); top + 1];
    for w in weylstat::weyl::enumerate(rs, DEFAULT_CAP).map_err(|e| e.to_string())? {
        let mut per_height = vec![0u32; top + 1];
        for r in w.inversion_set(rs).map_err(|e| e.to_string())? {
            per_height[rs.height(r) as usize] += 1;
        }
        let mut running = 0;
        for h in 1..=top {
            running += per_height[h];
            *des[h].entry(per_height[h]).or_default() += 1;
            *inv[h].entry(running).or_default() += 1;
        }
    }
    let mut out = BTreeMap::new();
    for h in 1..=top {
        out.insert(
            (h as u32, Statistic::Descents),
            stats::moments_of_histogram(&des[h]).1,
        );
        out.insert(
            (h as u32, Statistic::Inversions),
            stats::moments_of_histogram(&inv[h]).1,
        );
    }
    Ok(out)
}

fn c3_variance_formulas() -> Outcome {
    let mut cases: Vec<(Family, u32, String)> = Vec::new();
    for n in 2..=8 {
        cases.push((Family::A, n, format!("A{}", n - 1)));
    }
    for n in 2..=5 {
        cases.push((Family::B, n, format!("B{n}")));
        cases.push((Family::C, n, format!("C{n}")));
    }
    for n in 4..=6 {
        cases.push((Family::D, n, format!("D{n}")));
    }
    let mut checked = 0;
    for (family, n, label) in cases {
        let rs = sys(&label);
        let enumerated = enumerated_variances(&rs)?;
        let top = formulas::max_height(family, n).map_err(|e| e.to_string())?;
        ensure(top == rs.max_height(), || {
            format!("{label}: height mismatch")
        })?;
        for d in 1..=top {
            for stat in [Statistic::Descents, Statistic::Inversions] {
                let v =
                    formulas::variance(&query(family, n, d, stat)).map_err(|e| e.to_string())?;
                let e = &enumerated[&(d, stat)];
                ensure(&v.value == e, || {
                    format!(
                        "{label} d={d} {stat:?} [{}]: formula {} vs enumeration {}",
                        v.branch,
                        to_string(&v.value),
                        to_string(e)
                    )
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (family, n, d, statistic) cases equal"))
}

fn c4_checkpoints() -> Outcome {
    for n in 2..=8i64 {
        let des = formulas::var_descents(&query(Family::A, n as u32, 1, Statistic::Descents))
            .map_err(|e| e.to_string())?;
        ensure(des.value == ratio(n + 1, 12), || {
            format!("descents n={n}: {}", to_string(&des.value))
        })?;
        let inv = formulas::var_inversions(&query(
            Family::A,
            n as u32,
            n as u32 - 1,
            Statistic::Inversions,
        ))
        .map_err(|e| e.to_string())?;
        ensure(inv.value == ratio(n * (n - 1) * (2 * n + 5), 72), || {
            format!("inversions n={n}: {}", to_string(&inv.value))
        })?;
        // n = 2 has d = 1 = n/2, where both branches apply and agree
        ensure(inv.branch == "2d>=n" || n == 2, || {
            format!("inversions n={n} used branch {}", inv.branch)
        })?;
    }
    Ok("n = 2..8".into())
}

fn c5_interaction_counts() -> Outcome {
    let mut checked = 0;
    for n in 2..=8u32 {
        let rs = sys(&format!("B{n}"));
        let top = rs.max_height();
        // (class, height, index list) for every root, read off the catalog
        let members: Vec<(RootClass, u32, Vec<u32>, RootId)> = rs
            .ids()
            .map(|r| {
                let (class, idx) = match rs.root(r).form {
                    RootForm::N(i, j) => (RootClass::N, vec![i, j]),
                    RootForm::O(i) => (RootClass::O, vec![i]),
                    RootForm::P(i, j) => (RootClass::P, vec![i, j]),
                    RootForm::G2(_) => unreachable!(),
                };
                (class, rs.height(r), idx, r)
            })
            .collect();
        for x in [RootClass::N, RootClass::O, RootClass::P] {
            for y in [RootClass::N, RootClass::O, RootClass::P] {
                for a in 1..=top {
                    for b in 1..=top {
                        for pat in Pattern::ALL {
                            let (p, q) = match pat {
                                Pattern::IK => (0, 0),
                                Pattern::IL => (0, 1),
                                Pattern::JK => (1, 0),
                                Pattern::JL => (1, 1),
                            };
                            let got = interaction_count(Family::B, n, x, a, y, b, pat);
                            let arity = |c: RootClass| if c == RootClass::O { 1 } else { 2 };
                            if p >= arity(x) || q >= arity(y) {
                                ensure(got.is_err(), || {
                                    format!("n={n} {x:?}{a} {y:?}{b} {pat:?} should be unsupported")
                                })?;
                                continue;
                            }
                            let same_position_nn = x == RootClass::N && y == RootClass::N && p == q;
                            let mut brute = 0u64;
                            for (c1, h1, i1, r1) in &members {
                                if *c1 != x || *h1 != a {
                                    continue;
                                }
                                for (c2, h2, i2, r2) in &members {
                                    if *c2 == y
                                        && *h2 == b
                                        && i1[p] == i2[q]
                                        && !(same_position_nn && r1 == r2)
                                    {
                                        brute += 1;
                                    }
                                }
                            }
                            let got = got.map_err(|e| e.to_string())?;
                            ensure(got == brute, || {
                                format!("n={n} {x:?}{a} {y:?}{b} {pat:?}: {got} vs {brute}")
                            })?;
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    for n in 2..=5u32 {
        for d in 1..=2 * n - 1 {
            let blocks = block_covariances_b(n, d).map_err(|e| e.to_string())?;
            let var = formulas::var_inversions(&query(Family::B, n, d, Statistic::Inversions))
                .map_err(|e| e.to_string())?;
            ensure(blocks.total() == var.value, || {
                format!(
                    "B n={n} d={d}: blocks {} vs {}",
                    to_string(&blocks.total()),
                    to_string(&var.value)
                )
            })?;
        }
    }
    Ok(format!(
        "{checked} counts equal brute force; block sums equal for n <= 5"
    ))
}

fn c6_independence() -> Outcome {
    let mut orthogonal = 0;
    let mut dependent = 0;
    for s in ["B4", "D4"] {
        let rs = sys(s);
        let order =
            weylstat::weyl::checked_order(&rs, DEFAULT_CAP).map_err(|e| e.to_string())? as u64;
        let ids: Vec<RootId> = rs.ids().collect();
        let mut sets: Vec<Vec<RootId>> = ids.iter().map(|&r| vec![r]).collect();
        for (k, &a) in ids.iter().enumerate() {
            for &b in &ids[k + 1..] {
                sets.push(vec![a, b]);
            }
        }
        for x in &sets {
            for y in &sets {
                let orth = x
                    .iter()
                    .all(|&a| y.iter().all(|&b| rs.inner_product_int(a, b) == 0));
                let joint = stats::exact_joint_distribution(&rs, x, y, DEFAULT_CAP)
                    .map_err(|e| e.to_string())?;
                let mut mx: BTreeMap<u32, u64> = BTreeMap::new();
                let mut my: BTreeMap<u32, u64> = BTreeMap::new();
                for (&(u, v), &c) in &joint {
                    *mx.entry(u).or_default() += c;
                    *my.entry(v).or_default() += c;
                }
                let product = mx.iter().all(|(&u, &cu)| {
                    my.iter().all(|(&v, &cv)| {
                        joint.get(&(u, v)).copied().unwrap_or(0) * order == cu * cv
                    })
                });
                let tag = || format!("{s} {{{}}} vs {{{}}}", rs.render_list(x), rs.render_list(y));
                if orth {
                    ensure(product, || {
                        format!("orthogonal sets do not factorize: {}", tag())
                    })?;
                    orthogonal += 1;
                } else {
                    ensure(!product, || {
                        format!("non-orthogonal sets factorize: {}", tag())
                    })?;
                    dependent += 1;
                }
            }
        }
    }
    Ok(format!(
        "{orthogonal} orthogonal pairs factorize, {dependent} non-orthogonal pairs do not"
    ))
}

fn c7_antichains() -> Outcome {
    let mut systems = Vec::new();
    for r in 1..=5 {
        systems.push(format!("A{r}"));
    }
    for r in 2..=5 {
        systems.extend([format!("B{r}"), format!("C{r}"), format!("D{r}")]);
    }
    systems.push("G2".into());
    let mut count = 0;
    for s in &systems {
        let rs = sys(s);
        for psi in rs.antichains(1_000_000).map_err(|e| e.to_string())? {
            if psi.is_empty() {
                continue;
            }
            let deg = check_antichain_degree(&rs, &psi).map_err(|e| e.to_string())?;
            ensure(deg.is_antichain, || format!("{s}: not an antichain"))?;
            let var = stats::exact_variance(&rs, &psi, DEFAULT_CAP).map_err(|e| e.to_string())?;
            let k = psi.len() as i64;
            ensure(ratio(k, 12) <= var && var <= ratio(k, 4), || {
                format!(
                    "{s} {{{}}}: Var = {}",
                    rs.render_list(&psi),
                    to_string(&var)
                )
            })?;
            count += 1;
        }
    }
    Ok(format!(
        "{count} non-empty antichains in {} systems",
        systems.len()
    ))
}

fn c8_uniform_example() -> Outcome {
    for n in 2..=7u32 {
        let rs = sys(&format!("A{}", n - 1));
        let psi: Vec<RootId> = (2..=n)
            .map(|j| rs.parse_root(&format!("N[1,{j}]")).unwrap())
            .collect();
        let hist = stats::exact_distribution(&rs, &psi, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let per_value = (1..n as u64).product::<u64>();
        let expected: BTreeMap<u32, u64> = (0..n).map(|v| (v, per_value)).collect();
        ensure(hist == expected, || format!("n={n}: {hist:?}"))?;
    }
    Ok("n = 2..7 uniform on {0..n-1}".into())
}

fn c9_monotonicity_and_lower_bound() -> Outcome {
    let eps = formulas::default_epsilon();
    let mut checked = 0;
    for family in [Family::A, Family::B, Family::C, Family::D] {
        for n in 2..=200u32 {
            let top = formulas::max_height(family, n).map_err(|e| e.to_string())?;
            let rank = if family == Family::A { n - 1 } else { n } as u64;
            let mut prev: Option<Rational> = None;
            for d in 1..=top {
                let v = formulas::var_inversions(&query(family, n, d, Statistic::Inversions))
                    .map_err(|e| e.to_string())?
                    .value;
                if let Some(p) = &prev {
                    ensure(&v >= p, || format!("{family} n={n}: decreases at d={d}"))?;
                }
                let lb = formulas::var_lower_bound(rank, d as u64, &eps);
                ensure(v >= lb.bound, || {
                    format!(
                        "{family} n={n} d={d}: Var {} < bound {} ({:?})",
                        to_string(&v),
                        to_string(&lb.bound),
                        lb.case
                    )
                })?;
                prev = Some(v);
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (family, n, d) points, eps = 1/100"))
}

fn c10_monte_carlo() -> Outcome {
    const N: usize = 100_000;
    const SEEDS: [u64; 8] = [1001, 1002, 1003, 1004, 2001, 2002, 2003, 2004];
    let cases = [
        (Family::A, "A49", 1),
        (Family::A, "A49", 5),
        (Family::A, "A49", 25),
        (Family::A, "A49", 49),
        (Family::B, "B50", 1),
        (Family::B, "B50", 10),
        (Family::B, "B50", 50),
        (Family::B, "B50", 99),
    ];
    let mut worst: f64 = 0.0;
    for (&(family, label, d), &seed) in cases.iter().zip(&SEEDS) {
        let rs = sys(label);
        let psi = rs.roots_up_to_height(d);
        let formula = formulas::var_inversions(&query(family, 50, d, Statistic::Inversions))
            .map_err(|e| e.to_string())?
            .value;
        let values = mc_values(&rs, &psi, N, seed);
        let (_, sample_var) = stats::sample_moments(&values);
        let se = stats::bootstrap_variance_se(&values, seed).map_err(|e| e.to_string())?;
        let z = (to_f64(&sample_var) - to_f64(&formula)).abs() / se;
        worst = worst.max(z);
        ensure(z <= 3.0, || {
            format!(
                "{label} d={d}: sample {:.4} vs formula {:.4}, {z:.2} bootstrap SE",
                to_f64(&sample_var),
                to_f64(&formula)
            )
        })?;
    }
    Ok(format!("8 cases within 3 bootstrap SE (worst {worst:.2})"))
}

fn ks_for(
    label: &str,
    psi_of: impl Fn(&RootSystem) -> Vec<RootId>,
    var: Rational,
    seed: u64,
) -> Result<f64, String> {
    let rs = sys(label);
    let psi = psi_of(&rs);
    let values = mc_values(&rs, &psi, 200_000, seed);
    let z = standardize(&values, &formulas::mean(psi.len()), &var).map_err(|e| e.to_string())?;
    ks_distance(&z).map_err(|e| e.to_string())
}

fn c11_clt_regression() -> Outcome {
    let mut ks = Vec::new();
    for n in [10u32, 100, 500] {
        let var = ratio(n as i64 + 1, 12);
        ks.push(ks_for(
            &format!("A{}", n - 1),
            |rs| rs.roots_of_height(1),
            var,
            11_000 + n as u64,
        )?);
    }
    let inv_var = formulas::var_inversions(&query(Family::A, 200, 3, Statistic::Inversions))
        .map_err(|e| e.to_string())?
        .value;
    let ks_inv = ks_for("A199", |rs| rs.roots_up_to_height(3), inv_var, 12_003)?;
    let detail = format!(
        "KS des^1 n=10,100,500: {:.4}, {:.4}, {:.4}; KS inv^3 n=200: {:.4}",
        ks[0], ks[1], ks[2], ks_inv
    );
    ensure(ks[0] > ks[1] && ks[1] > ks[2], || {
        format!("not decreasing: {detail}")
    })?;
    ensure(ks[2] < 0.02, || format!("KS(n=500) >= 0.02: {detail}"))?;
    ensure(ks_inv < 0.05, || {
        format!("KS(inv^3, n=200) >= 0.05: {detail}")
    })?;
    Ok(detail)
}

fn c12_determinism() -> Outcome {
    let one = common::transcript(1);
    let eight = common::transcript(8);
    ensure(one == eight, || {
        "1-thread and 8-thread transcripts differ".into()
    })?;
    let golden = std::fs::read_to_string(common::golden_dir().join("script.out"))
        .map_err(|e| e.to_string())?;
    ensure(one == golden, || {
        "transcript differs from tests/golden/script.out".into()
    })?;
    Ok(format!(
        "{} commands byte-identical",
        common::script().len()
    ))
}

fn main() {
    let criteria: [Criterion; 12] = [
        (
            1,
            "covariance theorem, closed form = enumeration",
            c1_covariance_theorem,
        ),
        (2, "W-partition identities", c2_wpartition),
        (3, "variance formulas = enumeration", c3_variance_formulas),
        (4, "classical checkpoints", c4_checkpoints),
        (
            5,
            "interaction counts and type B blocks",
            c5_interaction_counts,
        ),
        (6, "independence of orthogonal root sets", c6_independence),
        (7, "antichain degree and variance bounds", c7_antichains),
        (8, "uniform example", c8_uniform_example),
        (
            9,
            "monotonicity and lower bound",
            c9_monotonicity_and_lower_bound,
        ),
        (10, "Monte Carlo consistency", c10_monte_carlo),
        (11, "CLT regression", c11_clt_regression),
        (12, "CLI determinism", c12_determinism),
    ];
    let filter: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    for (id, name, check) in criteria {
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {id:>2}: {name} ({detail}) [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {id:>2}: {name} ({detail}) [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
