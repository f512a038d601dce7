//! The `gencert` command line: `verify`, `sweep` and `classify`.
//!
//! Exit codes: 0 when everything asked for is certified, 1 when a bound is
//! inconclusive (or a sweep point expected to certify does not), 2 for
//! input errors.

pub mod classify;
pub mod config;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    evaluate, expected_certified, q25_bound_psp4, q2_bound_with, q2p_bound_psl34, BoundOptions, BoundReport, Verdict,
};
use crate::catalog::{catalog_entry, checksum};
use crate::error::{Error, Result};
use crate::exactnum::{approx_f64, format_rat, prime_power};
use crate::grouporders::{Family, GroupSpec};
use config::Config;

pub const EXIT_CERTIFIED: i32 = 0;
pub const EXIT_INCONCLUSIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

const GENERATOR: &str = concat!("gencert ", env!("CARGO_PKG_VERSION"));

#[derive(Parser, Debug)]
#[command(
    name = "gencert",
    version,
    about = "Certify (2,r)-generation bounds for finite simple classical groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the bound for one group and emit a certificate.
    Verify(VerifyArgs),
    /// Evaluate a grid of groups.
    Sweep(SweepArgs),
    /// Report which argument covers a named simple group.
    Classify(ClassifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Emit {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        <Emit as ValueEnum>::from_str(s, true)
    }
}

#[derive(Args, Debug, Default)]
struct Refinements {
    /// Use the small-dimensional evaluator (the default for the groups it covers).
    #[arg(long, conflicts_with = "generic")]
    small_n: bool,
    /// Force the generic evaluator even for small-dimensional groups.
    #[arg(long)]
    generic: bool,
    /// Keep the `S`-subgroup term even when no socle is compatible with `r`.
    #[arg(long)]
    keep_sigma0: bool,
    /// Never retry with the class-size denominator.
    #[arg(long)]
    no_class_size_fallback: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// psl, psu, psp, omega+, omega-, omega-odd
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    q: Option<u64>,
    /// Evaluate the Q_{2,5} bound for PSp_4(2^a).
    #[arg(long)]
    q25: bool,
    #[arg(long, value_enum)]
    emit: Option<Emit>,
    /// Write the certificate here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// `key = value` file with defaults for these flags.
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    refine: Refinements,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    family: Option<String>,
    /// Dimensions: `9..20`, `9..=20`, `12` or `12,14,16`.
    #[arg(long)]
    n: Option<String>,
    /// Field sizes: a list `2,3,4` or a range `2..25` (prime powers in it).
    #[arg(long)]
    q: Option<String>,
    #[arg(long, value_enum)]
    emit: Option<Emit>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write one JSON certificate per point into this directory.
    #[arg(long)]
    certificates: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    refine: Refinements,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    /// e.g. `PSL3(4)`, `PSp4(9)`, `POmega+8(2)`, `A7`, `M23`, `Sz(8)`.
    name: String,
    #[arg(long, value_enum, default_value = "text")]
    emit: Emit,
}

/// Machine-readable record of one evaluation. Contains no timestamp, so
/// re-running the same command reproduces it byte for byte.
#[derive(Serialize)]
pub struct Certificate<'a> {
    pub generator: &'static str,
    #[serde(flatten)]
    pub report: &'a BoundReport,
    pub catalog_checksum: String,
}

impl<'a> Certificate<'a> {
    pub fn new(report: &'a BoundReport) -> Self {
        Certificate {
            generator: GENERATOR,
            report,
            catalog_checksum: checksum(&catalog_entry(&report.spec, &report.witness)),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_CERTIFIED };
        }
    };
    let outcome = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Sweep(a) => sweep(a),
        Command::Classify(a) => classify_cmd(a),
    };
    outcome.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        EXIT_INPUT
    })
}

fn load_config(path: &Option<PathBuf>) -> Result<Config> {
    path.as_deref().map_or_else(|| Ok(Config::default()), Config::load)
}

fn write_output(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_family(s: &str) -> Result<Family> {
    s.parse()
}

struct Resolved {
    small_n: bool,
    generic: bool,
    opts: BoundOptions,
}

fn resolve_refinements(r: &Refinements, cfg: &Config) -> Result<Resolved> {
    let small_n = cfg.switch(r.small_n, "small-n")?;
    let generic = cfg.switch(r.generic, "generic")?;
    if small_n && generic {
        return Err(Error::Input("small-n and generic exclude each other".into()));
    }
    Ok(Resolved {
        small_n,
        generic,
        opts: BoundOptions {
            drop_infeasible_sigma0: !cfg.switch(r.keep_sigma0, "keep-sigma0")?,
            class_size_fallback: !cfg.switch(r.no_class_size_fallback, "no-class-size-fallback")?,
            ..BoundOptions::default()
        },
    })
}

fn evaluate_resolved(spec: &GroupSpec, how: &Resolved) -> Result<BoundReport> {
    if how.generic {
        q2_bound_with(spec, &how.opts)
    } else if how.small_n {
        crate::bounds::q2_bound_small_n_with(spec, &how.opts)
    } else {
        evaluate(spec, &how.opts)
    }
}

fn exit_for(v: Verdict) -> i32 {
    match v {
        Verdict::Certified => EXIT_CERTIFIED,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn verify(a: VerifyArgs) -> Result<i32> {
    let cfg = load_config(&a.config)?;
    let family = cfg
        .pick(a.family, "family")?
        .ok_or_else(|| Error::Input("--family is required".into()))?;
    let family = parse_family(&family)?;
    let n = cfg
        .pick(a.n, "n")?
        .ok_or_else(|| Error::Input("--n is required".into()))?;
    let q = cfg
        .pick(a.q, "q")?
        .ok_or_else(|| Error::Input("--q is required".into()))?;
    let emit = cfg.pick(a.emit, "emit")?.unwrap_or(Emit::Json);
    let out = cfg.pick(a.out, "out")?;
    let spec = GroupSpec::new(family, n, q)?;

    if cfg.switch(a.q25, "q25")? {
        if family != Family::Symplectic || n != 4 {
            return Err(Error::Input("--q25 applies to --family psp --n 4 only".into()));
        }
        let b = q25_bound_psp4(q)?;
        let text = match emit {
            Emit::Json | Emit::Csv => serde_json::to_string_pretty(&b).expect("serializes") + "\n",
            Emit::Text => {
                let mut s = format!(
                    "PSp_4({q}): Q_(2,5) <= {}  (~{:.6e})\n",
                    format_rat(&b.assembled),
                    approx_f64(&b.assembled)
                );
                for t in &b.terms {
                    let _ = writeln!(s, "  {:<18} {:.6e}", t.name, approx_f64(&t.contribution));
                }
                let _ = writeln!(
                    s,
                    "  closed form ~{:.6e}, gap to the closed form ~{:.6e}",
                    b.displayed.midpoint_f64(),
                    b.gap.midpoint_f64()
                );
                let _ = writeln!(s, "verdict: {}", verdict_text(b.verdict));
                s
            }
        };
        write_output(&text, out.as_deref())?;
        return Ok(exit_for(b.verdict));
    }
    if (family, n, q) == (Family::Linear, 3, 4) {
        let v = q2p_bound_psl34();
        let verdict = Verdict::from_total(&v);
        let text = match emit {
            Emit::Text => format!(
                "PSL_3(4): Q_(2,7) <= {}\nverdict: {}\n",
                format_rat(&v),
                verdict_text(verdict)
            ),
            _ => format!(
                "{}\n",
                serde_json::json!({"generator": GENERATOR, "group": "PSL_3(4)", "p": 7, "total": format_rat(&v), "verdict": verdict})
            ),
        };
        write_output(&text, out.as_deref())?;
        return Ok(exit_for(verdict));
    }

    let how = resolve_refinements(&a.refine, &cfg)?;
    let report = evaluate_resolved(&spec, &how)?;
    let text = match emit {
        Emit::Json => Certificate::new(&report).to_json() + "\n",
        Emit::Csv => report.to_csv(),
        Emit::Text => report_text(&report),
    };
    write_output(&text, out.as_deref())?;
    Ok(exit_for(report.verdict))
}

fn verdict_text(v: Verdict) -> &'static str {
    match v {
        Verdict::Certified => "certified (bound < 1)",
        Verdict::Inconclusive => "inconclusive (bound >= 1: this method does not decide the group)",
    }
}

fn report_text(r: &BoundReport) -> String {
    let mut s = format!(
        "{}  e = {}, r = {}  [{:?} evaluator, {:?} denominator]\n",
        r.spec, r.witness.e, r.witness.r, r.method, r.denominator
    );
    for t in &r.terms {
        let _ = writeln!(
            s,
            "  sigma_{} {:<28} {:.6e}",
            t.sigma,
            t.label,
            approx_f64(&t.contribution)
        );
    }
    for (k, v) in &r.sigmas {
        if !v.is_zero() {
            let _ = writeln!(s, "  sigma_{k} = {:.6e}", approx_f64(v));
        }
    }
    let _ = writeln!(s, "  total = {}  (~{})", format_rat(&r.total), r.total_approx);
    let _ = writeln!(s, "verdict: {}", verdict_text(r.verdict));
    s
}

/// Parses `9..20`, `9..=20`, `12` or `12,14`.
pub fn parse_u64_set(s: &str) -> Result<Vec<u64>> {
    let bad = || Error::Input(format!("malformed range or list: {s:?}"));
    let s = s.trim();
    let values: Vec<u64> = if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let (lo, hi): (u64, u64) = (
            lo.trim().parse().map_err(|_| bad())?,
            hi.trim().parse().map_err(|_| bad())?,
        );
        (lo..=hi).collect()
    } else {
        s.split(',')
            .map(|v| v.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?
    };
    if values.is_empty() {
        return Err(bad());
    }
    Ok(values)
}

/// Field sizes: ranges keep their prime powers, lists must consist of them.
pub fn parse_q_set(s: &str) -> Result<Vec<u64>> {
    let values = parse_u64_set(s)?;
    if s.contains("..") {
        let kept: Vec<u64> = values.into_iter().filter(|&q| prime_power(q).is_some()).collect();
        if kept.is_empty() {
            return Err(Error::Input(format!("no prime powers in {s:?}")));
        }
        Ok(kept)
    } else {
        match values.iter().find(|&&q| prime_power(q).is_none()) {
            Some(&q) => Err(Error::NotPrimePower(q)),
            None => Ok(values),
        }
    }
}

/// One line of a sweep summary.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub group: String,
    pub family: String,
    pub n: u32,
    pub q: u64,
    pub e: Option<u32>,
    pub r: Option<String>,
    pub method: Option<crate::bounds::Method>,
    pub sigmas: Option<std::collections::BTreeMap<String, String>>,
    pub total: Option<String>,
    pub total_approx: Option<String>,
    /// `certified`, `inconclusive` or `error: ...`.
    pub verdict: String,
    pub expected_certified: bool,
}

impl SweepRow {
    fn failed(&self) -> bool {
        self.expected_certified && self.verdict != "certified"
    }
}

fn sweep(a: SweepArgs) -> Result<i32> {
    let cfg = load_config(&a.config)?;
    let family = parse_family(
        &cfg.pick(a.family, "family")?
            .ok_or_else(|| Error::Input("--family is required".into()))?,
    )?;
    let ns = parse_u64_set(
        &cfg.pick(a.n, "n")?
            .ok_or_else(|| Error::Input("--n is required".into()))?,
    )?;
    let qs = parse_q_set(
        &cfg.pick(a.q, "q")?
            .ok_or_else(|| Error::Input("--q is required".into()))?,
    )?;
    let emit = cfg.pick(a.emit, "emit")?.unwrap_or(Emit::Csv);
    let out = cfg.pick(a.out, "out")?;
    let cert_dir = cfg.pick(a.certificates, "certificates")?;
    let how = resolve_refinements(&a.refine, &cfg)?;

    let mut specs = Vec::new();
    for &n in &ns {
        let n = u32::try_from(n).map_err(|_| Error::Input(format!("dimension {n} too large")))?;
        for &q in &qs {
            // Dimensions of the wrong parity are skipped; anything else invalid is an input error.
            match GroupSpec::new(family, n, q) {
                Ok(s) => specs.push(s),
                Err(Error::InvalidGroup(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    if specs.is_empty() {
        return Err(Error::Input("the grid contains no valid group".into()));
    }
    specs.sort();
    if let Some(dir) = &cert_dir {
        std::fs::create_dir_all(dir).map_err(|e| Error::Input(format!("cannot create {}: {e}", dir.display())))?;
    }

    let rows: Vec<(SweepRow, Option<String>)> = specs
        .par_iter()
        .map(|spec| {
            let base = SweepRow {
                group: spec.to_string(),
                family: spec.family.flag().to_string(),
                n: spec.n,
                q: spec.q,
                e: None,
                r: None,
                method: None,
                sigmas: None,
                total: None,
                total_approx: None,
                verdict: String::new(),
                expected_certified: expected_certified(spec),
            };
            match evaluate_resolved(spec, &how) {
                Ok(r) => {
                    let cert = cert_dir.as_ref().map(|_| Certificate::new(&r).to_json() + "\n");
                    let row = SweepRow {
                        e: Some(r.witness.e),
                        r: Some(r.witness.r.to_string()),
                        method: Some(r.method),
                        sigmas: Some(
                            r.sigmas
                                .iter()
                                .map(|(k, v)| (format!("sigma_{k}"), format_rat(v)))
                                .collect(),
                        ),
                        total: Some(format_rat(&r.total)),
                        total_approx: Some(r.total_approx.clone()),
                        verdict: r.verdict.to_string(),
                        ..base
                    };
                    (row, cert)
                }
                Err(e) => (
                    SweepRow {
                        verdict: format!("error: {e}"),
                        ..base
                    },
                    None,
                ),
            }
        })
        .collect();

    if let Some(dir) = &cert_dir {
        for (row, cert) in &rows {
            if let Some(c) = cert {
                let path = dir.join(format!("{}_{}_{}.json", row.family, row.n, row.q));
                std::fs::write(&path, c).map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
            }
        }
    }
    let rows: Vec<SweepRow> = rows.into_iter().map(|(r, _)| r).collect();
    let text = match emit {
        Emit::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
        Emit::Csv => sweep_csv(&rows),
        Emit::Text => sweep_text(&rows),
    };
    write_output(&text, out.as_deref())?;
    Ok(if rows.iter().any(SweepRow::failed) {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_CERTIFIED
    })
}

const SIGMA_KEYS: [&str; 6] = ["sigma_1", "sigma_2", "sigma_3", "sigma_6", "sigma_8", "sigma_0"];

fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["group", "family", "n", "q", "e", "r", "method"];
    header.extend(SIGMA_KEYS);
    header.extend(["total", "total_approx", "verdict", "expected_certified"]);
    w.write_record(&header).expect("in-memory write");
    for row in rows {
        let opt = |v: &Option<String>| v.clone().unwrap_or_default();
        let mut rec = vec![
            row.group.clone(),
            row.family.clone(),
            row.n.to_string(),
            row.q.to_string(),
            row.e.map(|e| e.to_string()).unwrap_or_default(),
            opt(&row.r),
            row.method.map(|m| format!("{m:?}").to_lowercase()).unwrap_or_default(),
        ];
        for k in SIGMA_KEYS {
            rec.push(row.sigmas.as_ref().and_then(|s| s.get(k).cloned()).unwrap_or_default());
        }
        rec.extend([
            opt(&row.total),
            opt(&row.total_approx),
            row.verdict.clone(),
            row.expected_certified.to_string(),
        ]);
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn sweep_text(rows: &[SweepRow]) -> String {
    let mut s = String::new();
    for row in rows {
        let _ = writeln!(
            s,
            "{:<18} r = {:<8} total ~ {:<12} {}{}",
            row.group,
            row.r.as_deref().unwrap_or("-"),
            row.total_approx.as_deref().unwrap_or("-"),
            row.verdict,
            if row.failed() { "  [expected certified]" } else { "" }
        );
    }
    let failed = rows.iter().filter(|r| r.failed()).count();
    let _ = writeln!(
        s,
        "{} points, {} expected-certified points not certified",
        rows.len(),
        failed
    );
    s
}

fn classify_cmd(a: ClassifyArgs) -> Result<i32> {
    let c = classify::classify(&a.name)?;
    let text = match a.emit {
        Emit::Json | Emit::Csv => serde_json::to_string_pretty(&c).expect("serializes") + "\n",
        Emit::Text => {
            let e = c.e.map(|e| format!(", e = {e}")).unwrap_or_default();
            format!("{}: {:?}, (2,{})-generated{e}\n", c.group, c.case, c.p)
        }
    };
    write_output(&text, None)?;
    Ok(EXIT_CERTIFIED)
}
