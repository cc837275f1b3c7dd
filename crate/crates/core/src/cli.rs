//! The `weylstat` command line.
//!
//! Exit status is 0 on success, 2 on usage errors (bad arguments, system
//! strings, or root lists) and 1 on domain errors, whose message is the
//! library error verbatim.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::clt::clt_report;
use crate::depgraph::{build_graph, check_antichain_degree, degree_bound_phi_d};
use crate::exact::{to_decimal, to_string, Rational};
use crate::formulas::{self, Statistic, VarianceQuery};
use crate::rootsys::{Family, FamilySpec, RootId, RootSystem};
use crate::stats::{self, RootSelection};
use crate::{Error, DEFAULT_CAP};

#[derive(Debug, Parser)]
#[command(
    name = "weylstat",
    version,
    about = "Inversion and descent statistics on Weyl groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Human)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest group order enumerated exactly.
    #[arg(long, global = true, env = "WEYLSTAT_CAP", default_value_t = DEFAULT_CAP)]
    cap: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Enumerate,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StatArg {
    Descents,
    Inversions,
}

impl From<StatArg> for Statistic {
    fn from(s: StatArg) -> Self {
        match s {
            StatArg::Descents => Statistic::Descents,
            StatArg::Inversions => Statistic::Inversions,
        }
    }
}

#[derive(Debug, Args)]
struct SelectionArgs {
    /// Height parameter of `Φ_des^d` or `Φ_inv^d`.
    #[arg(short = 'd', long = "height", conflicts_with = "psi")]
    d: Option<u32>,
    /// Which height-`d` root set to use.
    #[arg(long = "stat", value_enum, default_value_t = StatArg::Inversions)]
    stat: StatArg,
    /// Explicit root list, e.g. "N[1,2],P[3,4]".
    #[arg(long)]
    psi: Option<String>,
}

impl SelectionArgs {
    fn resolve(&self, rs: &RootSystem) -> Result<RootSelection, CliError> {
        match (&self.psi, self.d) {
            (Some(list), _) => Ok(RootSelection::Explicit(rs.parse_root_list(list)?)),
            (None, Some(d)) => Ok(match self.stat {
                StatArg::Descents => RootSelection::Descents(d),
                StatArg::Inversions => RootSelection::Inversions(d),
            }),
            (None, None) => Err(CliError::Usage("one of -d or --psi is required".into())),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List positive roots, optionally only those of height d.
    Roots {
        #[arg(value_parser = parse_spec)]
        system: FamilySpec,
        #[arg(short = 'd', long = "height")]
        d: Option<u32>,
    },
    /// Cover relations of the root poset, or its antichains.
    Poset {
        #[arg(value_parser = parse_spec)]
        system: FamilySpec,
        #[arg(long)]
        antichains: bool,
    },
    /// Cov(X_β, X_γ) for two positive roots.
    Cov {
        #[arg(value_parser = parse_spec)]
        system: FamilySpec,
        beta: String,
        gamma: String,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Sizes of the four sign classes of W for a pair of roots.
    Wpartition {
        #[arg(value_parser = parse_spec)]
        system: FamilySpec,
        beta: String,
        gamma: String,
    },
    /// Variance of the d-descent or d-inversion statistic.
    Var {
        #[arg(value_parser = parse_spec)]
        system: FamilySpec,
        #[arg(long = "stat", value_enum)]
        stat: StatArg,
        #[arg(short = 'd', long = "height")]
        d: u32,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Exact distribution of X_Ψ by enumeration.
    Dist {
        #[arg(value_parser = parse_spec)]
        system: FamilySpec,
        #[command(flatten)]
        selection: SelectionArgs,
    },
    /// Seeded Monte Carlo sample of X_Ψ.
    Sample {
        #[arg(value_parser = parse_spec)]
        system: FamilySpec,
        #[command(flatten)]
        selection: SelectionArgs,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include the raw values in JSON output.
        #[arg(long)]
        values: bool,
    },
    /// Sample, standardize, and measure the distance to the normal law.
    Clt {
        #[arg(value_parser = parse_spec)]
        system: FamilySpec,
        #[command(flatten)]
        selection: SelectionArgs,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dependency graph of Ψ.
    Depgraph {
        #[arg(value_parser = parse_spec)]
        system: FamilySpec,
        #[command(flatten)]
        selection: SelectionArgs,
    },
}

fn parse_spec(s: &str) -> Result<FamilySpec, String> {
    s.parse::<FamilySpec>().map_err(|e| e.to_string())
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => CliError::Usage(e.to_string()),
            e => CliError::Domain(e),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = match cli.threads {
        Some(k) => match rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
        {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(CliError::Io(e.to_string())),
        },
        None => dispatch(&cli),
    };
    let emitted = result.and_then(|text| match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(CliError::from),
        None => stdout.write_all(text.as_bytes()).map_err(CliError::from),
    });
    match emitted {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(CliError::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
        Err(CliError::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn dispatch(cli: &Cli) -> Result<String, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Roots { system, d } => roots(&build(system)?, *d, f),
        Command::Poset { system, antichains } => poset(&build(system)?, *antichains, cli.cap, f),
        Command::Cov {
            system,
            beta,
            gamma,
            method,
        } => cov(&build(system)?, beta, gamma, *method, cli.cap, f),
        Command::Wpartition {
            system,
            beta,
            gamma,
        } => wpartition(&build(system)?, beta, gamma, cli.cap, f),
        Command::Var {
            system,
            stat,
            d,
            method,
        } => var(&build(system)?, (*stat).into(), *d, *method, cli.cap, f),
        Command::Dist { system, selection } => {
            let rs = build(system)?;
            let sel = selection.resolve(&rs)?;
            dist(&rs, &sel, cli.cap, f)
        }
        Command::Sample {
            system,
            selection,
            samples,
            seed,
            values,
        } => {
            let rs = build(system)?;
            let sel = selection.resolve(&rs)?;
            sample(&rs, &sel, *samples, *seed, *values, f)
        }
        Command::Clt {
            system,
            selection,
            samples,
            seed,
        } => {
            let rs = build(system)?;
            let sel = selection.resolve(&rs)?;
            clt(&rs, &sel, *samples, *seed, f)
        }
        Command::Depgraph { system, selection } => {
            let rs = build(system)?;
            let sel = selection.resolve(&rs)?;
            depgraph(&rs, &sel, f)
        }
    }
}

fn build(spec: &FamilySpec) -> Result<RootSystem, CliError> {
    Ok(RootSystem::build(spec)?)
}

fn no_format(f: Format, what: &str) -> CliError {
    let name = format!("{f:?}").to_lowercase();
    CliError::Usage(format!("format {name} is not available for {what}"))
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn csv_text<R: AsRef<[u8]>>(
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<R>>,
) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("CSV of UTF-8 fields"))
}

fn exact_json(r: &Rational) -> Value {
    json!({ "exact": to_string(r), "decimal": to_decimal(r, 20) })
}

fn roots(rs: &RootSystem, d: Option<u32>, f: Format) -> Result<String, CliError> {
    let ids: Vec<RootId> = match d {
        Some(d) => rs.roots_of_height(d),
        None => rs.ids().collect(),
    };
    Ok(match f {
        Format::Human => ids
            .iter()
            .map(|&r| format!("{}\t{}\n", rs.render(r), rs.height(r)))
            .collect(),
        Format::Json => json_text(&Value::Array(
            ids.iter()
                .map(|&r| json!({ "root": rs.render(r), "height": rs.height(r) }))
                .collect(),
        )),
        Format::Csv => csv_text(
            &["root", "height"],
            ids.iter()
                .map(|&r| vec![rs.render(r), rs.height(r).to_string()]),
        )?,
        Format::Dot => return Err(no_format(f, "roots")),
    })
}

fn poset(rs: &RootSystem, antichains: bool, cap: u128, f: Format) -> Result<String, CliError> {
    if antichains {
        let all = rs.antichains(usize::try_from(cap).unwrap_or(usize::MAX))?;
        let lists: Vec<String> = all
            .iter()
            .map(|a| format!("{{{}}}", rs.render_list(a)))
            .collect();
        return Ok(match f {
            Format::Human => {
                let mut s = format!("antichains: {}\n", all.len());
                for l in &lists {
                    s.push_str(l);
                    s.push('\n');
                }
                s
            }
            Format::Json => json_text(&json!({ "count": all.len(), "antichains": lists })),
            Format::Csv => csv_text(
                &["size", "antichain"],
                all.iter()
                    .zip(&lists)
                    .map(|(a, l)| vec![a.len().to_string(), l.clone()]),
            )?,
            Format::Dot => return Err(no_format(f, "antichains")),
        });
    }
    let covers = rs.cover_pairs();
    Ok(match f {
        Format::Human => covers
            .iter()
            .map(|&(a, b)| format!("{} < {}\n", rs.render(a), rs.render(b)))
            .collect(),
        Format::Json => json_text(&json!({
            "roots": rs.ids().map(|r| rs.render(r)).collect::<Vec<_>>(),
            "covers": covers.iter().map(|&(a, b)| [rs.render(a), rs.render(b)]).collect::<Vec<_>>(),
        })),
        Format::Csv => csv_text(
            &["lower", "upper"],
            covers
                .iter()
                .map(|&(a, b)| vec![rs.render(a), rs.render(b)]),
        )?,
        Format::Dot => {
            let mut s = String::from("digraph poset {\n  rankdir=BT;\n");
            for r in rs.ids() {
                s.push_str(&format!("  \"{}\";\n", rs.render(r)));
            }
            for &(a, b) in &covers {
                s.push_str(&format!(
                    "  \"{}\" -> \"{}\";\n",
                    rs.render(a),
                    rs.render(b)
                ));
            }
            s.push_str("}\n");
            s
        }
    })
}

fn cov(
    rs: &RootSystem,
    beta: &str,
    gamma: &str,
    method: Method,
    cap: u128,
    f: Format,
) -> Result<String, CliError> {
    let (b, g) = (rs.parse_root(beta)?, rs.parse_root(gamma)?);
    let formula =
        matches!(method, Method::Formula | Method::Both).then(|| formulas::cov_closed(rs, b, g));
    let enumerated = match method {
        Method::Enumerate | Method::Both => Some(stats::exact_cov(rs, b, g, cap)?),
        Method::Formula => None,
    };
    if let (Some(x), Some(y)) = (&formula, &enumerated) {
        if x != y {
            return Err(Error::PropertyViolation(format!(
                "closed form {} and enumeration {} disagree",
                to_string(x),
                to_string(y)
            ))
            .into());
        }
    }
    let (rb, rg) = (rs.render(b), rs.render(g));
    let ord = rs.reflection_order(b, g);
    Ok(match f {
        Format::Human => {
            let mut s = String::new();
            match (&formula, &enumerated) {
                (Some(x), None) | (None, Some(x)) => s.push_str(&format!("{}\n", to_string(x))),
                (Some(x), Some(y)) => s.push_str(&format!(
                    "formula: {}\nenumerate: {}\n",
                    to_string(x),
                    to_string(y)
                )),
                (None, None) => unreachable!("a method is always selected"),
            }
            s
        }
        Format::Json => json_text(&json!({
            "system": rs.spec().to_string(),
            "beta": rb,
            "gamma": rg,
            "ord": ord,
            "formula": formula.as_ref().map(to_string),
            "enumerate": enumerated.as_ref().map(to_string),
        })),
        Format::Csv => csv_text(
            &["beta", "gamma", "ord", "formula", "enumerate"],
            [vec![
                rb,
                rg,
                ord.to_string(),
                formula.as_ref().map(to_string).unwrap_or_default(),
                enumerated.as_ref().map(to_string).unwrap_or_default(),
            ]],
        )?,
        Format::Dot => return Err(no_format(f, "cov")),
    })
}

fn wpartition(
    rs: &RootSystem,
    beta: &str,
    gamma: &str,
    cap: u128,
    f: Format,
) -> Result<String, CliError> {
    let (b, g) = (rs.parse_root(beta)?, rs.parse_root(gamma)?);
    let c = stats::wpartition_counts(rs, b, g, cap)?;
    let ord = rs.reflection_order(b, g);
    let cov = to_string(&c.covariance());
    Ok(match f {
        Format::Human => format!(
            "pp={} pm={} mp={} mm={}\nord={ord}\ncov={cov}\n",
            c.pp, c.pm, c.mp, c.mm
        ),
        Format::Json => json_text(&json!({
            "beta": rs.render(b),
            "gamma": rs.render(g),
            "pp": c.pp, "pm": c.pm, "mp": c.mp, "mm": c.mm,
            "ord": ord,
            "cov": cov,
        })),
        Format::Csv => csv_text(
            &["pp", "pm", "mp", "mm", "ord", "cov"],
            [vec![
                c.pp.to_string(),
                c.pm.to_string(),
                c.mp.to_string(),
                c.mm.to_string(),
                ord.to_string(),
                cov,
            ]],
        )?,
        Format::Dot => return Err(no_format(f, "wpartition")),
    })
}

/// Closed-form variance with the branch label of each component; an
/// irreducible classical system is looked up with the family's own `n`.
fn var_formula(rs: &RootSystem, stat: Statistic, d: u32) -> Result<(Rational, String), CliError> {
    let comps = rs.spec().components();
    if let [comp] = comps {
        if comp.family != Family::G2 {
            let v = formulas::variance(&VarianceQuery {
                family: comp.family,
                n: comp.formula_n() as u32,
                d,
                statistic: stat,
            })?;
            return Ok((v.value, v.branch.to_string()));
        }
    }
    if d == 0 || d > rs.max_height() {
        return Err(Error::Range {
            what: "d",
            detail: format!("d={d} outside 1..={} for {}", rs.max_height(), rs.spec()),
        }
        .into());
    }
    let value = formulas::system_variance(rs, d, stat)?;
    let labels: Vec<String> = comps
        .iter()
        .map(|c| {
            let label = match c.family {
                Family::G2 => "pair sum".to_string(),
                _ if stat == Statistic::Descents && d > c.max_height() => "empty".to_string(),
                fam => formulas::variance(&VarianceQuery {
                    family: fam,
                    n: c.formula_n() as u32,
                    d: d.min(c.max_height()),
                    statistic: stat,
                })
                .map(|v| v.branch.to_string())
                .unwrap_or_else(|_| "pair sum".to_string()),
            };
            format!("{}: {label}", c.label())
        })
        .collect();
    Ok((value, labels.join("; ")))
}

fn var(
    rs: &RootSystem,
    stat: Statistic,
    d: u32,
    method: Method,
    cap: u128,
    f: Format,
) -> Result<String, CliError> {
    let formula = match method {
        Method::Formula | Method::Both => Some(var_formula(rs, stat, d)?),
        Method::Enumerate => None,
    };
    let enumerated = match method {
        Method::Enumerate | Method::Both => {
            let psi = match stat {
                Statistic::Descents => rs.roots_of_height(d),
                Statistic::Inversions => rs.roots_up_to_height(d),
            };
            Some(stats::exact_variance(rs, &psi, cap)?)
        }
        Method::Formula => None,
    };
    if let (Some((x, _)), Some(y)) = (&formula, &enumerated) {
        if x != y {
            return Err(Error::PropertyViolation(format!(
                "closed form {} and enumeration {} disagree",
                to_string(x),
                to_string(y)
            ))
            .into());
        }
    }
    let value = formula
        .as_ref()
        .map(|p| &p.0)
        .or(enumerated.as_ref())
        .expect("a method is selected");
    let branch = formula.as_ref().map(|p| p.1.clone());
    Ok(match f {
        Format::Human => {
            let mut s = format!("{}\n{}\n", to_string(value), to_decimal(value, 20));
            if let Some(b) = &branch {
                s.push_str(&format!("branch: {b}\n"));
            }
            if let Some(e) = &enumerated {
                s.push_str(&format!("enumerate: {}\n", to_string(e)));
            }
            s
        }
        Format::Json => json_text(&json!({
            "system": rs.spec().to_string(),
            "statistic": stat,
            "d": d,
            "variance": exact_json(value),
            "branch": branch,
            "enumerate": enumerated.as_ref().map(to_string),
        })),
        Format::Csv => csv_text(
            &["system", "statistic", "d", "variance", "decimal", "branch"],
            [vec![
                rs.spec().to_string(),
                format!("{stat:?}").to_lowercase(),
                d.to_string(),
                to_string(value),
                to_decimal(value, 20),
                branch.unwrap_or_default(),
            ]],
        )?,
        Format::Dot => return Err(no_format(f, "var")),
    })
}

fn dist(rs: &RootSystem, sel: &RootSelection, cap: u128, f: Format) -> Result<String, CliError> {
    let psi = sel.resolve(rs);
    let hist = stats::exact_distribution(rs, &psi, cap)?;
    let (mean, variance) = stats::moments_of_histogram(&hist);
    Ok(match f {
        Format::Human => {
            let mut s = format!("psi: {}\n", sel.describe(rs));
            for (v, c) in &hist {
                s.push_str(&format!("{v}\t{c}\n"));
            }
            s.push_str(&format!(
                "mean: {}\nvariance: {}\n",
                to_string(&mean),
                to_string(&variance)
            ));
            s
        }
        Format::Json => json_text(&json!({
            "system": rs.spec().to_string(),
            "psi": sel.describe(rs),
            "distribution": hist.iter().map(|(v, c)| [*v as u64, *c]).collect::<Vec<_>>(),
            "mean": exact_json(&mean),
            "variance": exact_json(&variance),
        })),
        Format::Csv => csv_text(
            &["value", "count"],
            hist.iter().map(|(v, c)| vec![v.to_string(), c.to_string()]),
        )?,
        Format::Dot => return Err(no_format(f, "dist")),
    })
}

fn sample(
    rs: &RootSystem,
    sel: &RootSelection,
    n: usize,
    seed: u64,
    values: bool,
    f: Format,
) -> Result<String, CliError> {
    let run = stats::mc_run(rs, sel, n, seed)?;
    Ok(match f {
        Format::Human => {
            let mut s = format!(
                "system: {}\npsi: {}\nseed: {}\nsamples: {}\nmean: {} ({})\nvariance: {} ({})\n",
                run.spec,
                run.psi,
                run.seed,
                run.n(),
                to_string(&run.sample_mean),
                to_decimal(&run.sample_mean, 10),
                to_string(&run.sample_variance),
                to_decimal(&run.sample_variance, 10),
            );
            for (v, c) in run.histogram() {
                s.push_str(&format!("{v}\t{c}\n"));
            }
            s
        }
        Format::Json => json_text(&run.to_json(values)),
        Format::Csv => csv_text(
            &["value", "count"],
            run.histogram()
                .into_iter()
                .map(|(v, c)| vec![v.to_string(), c.to_string()]),
        )?,
        Format::Dot => return Err(no_format(f, "sample")),
    })
}

fn clt(
    rs: &RootSystem,
    sel: &RootSelection,
    n: usize,
    seed: u64,
    f: Format,
) -> Result<String, CliError> {
    let report = clt_report(rs, sel, n, seed)?;
    Ok(match f {
        Format::Human => {
            let mut s = format!(
                "system: {}\npsi: {}\nk: {}\ndelta: {}\nvariance: {}\nsamples: {}\nseed: {}\nks: {:.6}\njanson_m3: {:.6}\n",
                report.spec,
                report.psi,
                report.k,
                report.delta,
                report.variance,
                report.samples,
                report.seed,
                report.ks_distance,
                report.janson_m3
            );
            if let Some(b) = report.antichain_bound {
                s.push_str(&format!("antichain_bound: {b}\n"));
            }
            if let Some(r) = &report.regime {
                s.push_str(&format!(
                    "regime: {:?} (r_A={}, r_B={}, r_C={})\n",
                    r.dominant, r.r_a, r.r_b, r.r_c
                ));
            }
            s
        }
        Format::Json => json_text(&serde_json::to_value(&report).expect("report serializes")),
        Format::Csv => csv_text(
            &crate::clt::CltReport::CSV_HEADER,
            [report.csv_row().to_vec()],
        )?,
        Format::Dot => return Err(no_format(f, "clt")),
    })
}

fn depgraph(rs: &RootSystem, sel: &RootSelection, f: Format) -> Result<String, CliError> {
    let psi = sel.resolve(rs);
    let g = build_graph(rs, &psi);
    Ok(match f {
        Format::Csv => g.to_csv(rs),
        Format::Dot => g.to_dot(rs),
        Format::Human | Format::Json => {
            let antichain = check_antichain_degree(rs, &psi)?;
            let bound = match sel {
                RootSelection::Inversions(d) => Some(degree_bound_phi_d(rs, *d)?),
                _ => None,
            };
            if f == Format::Json {
                json_text(&json!({
                    "psi": sel.describe(rs),
                    "vertices": g.vertices().len(),
                    "edges": g.edge_count(),
                    "max_degree": g.max_degree(),
                    "components": g.component_sizes(),
                    "antichain": antichain,
                    "degree_bound": bound,
                }))
            } else {
                let mut s = format!(
                    "psi: {}\nvertices: {}\nedges: {}\nmax_degree: {}\ncomponents: {:?}\nantichain: {}\n",
                    sel.describe(rs),
                    g.vertices().len(),
                    g.edge_count(),
                    g.max_degree(),
                    g.component_sizes(),
                    antichain.is_antichain
                );
                if let Some(b) = bound {
                    s.push_str(&format!("degree_bound: {} <= {}\n", b.max_degree, b.bound));
                }
                s
            }
        }
    })
}
