//! Command-line front end for the `coiso` binary.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage
//! errors (bad flags, unknown Cartan types, malformed words or subspaces,
//! short roots passed where a long root is required).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bialgebra::{parse_cartan_subspace, rank_pi, CandidateReport, Double};
use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::linalg::format_rational;
use crate::rootsys::RootSystem;
use crate::verify::{verify, VerifyOptions, VerifyReport, DEFAULT_SWEEP_LIMIT};
use crate::weyl::{WeylGroup, DEFAULT_WEYL_CAP};
use crate::zambon::{zambon_report, ZambonReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum RecipeKind {
    L,
    S,
    Z,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Subcommand)]
#[serde(tag = "name", rename_all = "lowercase")]
pub enum Command {
    /// List the roots with height and length class.
    Roots {
        #[arg(value_name = "TYPE")]
        cartan_type: String,
    },
    /// Tabulate every ordered pair (u, v) of Weyl group elements.
    Pairs {
        #[arg(value_name = "TYPE")]
        cartan_type: String,
    },
    /// Build one Lagrangian subalgebra and decide coisotropy.
    Coiso {
        #[arg(value_name = "TYPE")]
        cartan_type: String,
        /// Subspace of h: 0, full, Htheta, H<i>, or rows like "1,0;0,1/2".
        #[arg(long = "V", default_value = "0")]
        v_space: String,
        #[arg(long, default_value = "e")]
        u: String,
        #[arg(long, default_value = "e")]
        v: String,
        #[arg(long, value_enum, default_value = "l")]
        recipe: RecipeKind,
    },
    /// Compute u_{±β} for a positive long root β.
    Zambon {
        #[arg(value_name = "TYPE")]
        cartan_type: String,
        /// Root label (a1+a2), coordinates (1,1), highest, long-simple, or #index.
        #[arg(long, default_value = "highest")]
        beta: String,
        /// + or -.
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
    },
    /// Run every verification suite.
    Verify {
        #[arg(value_name = "TYPE")]
        cartan_type: String,
        /// Candidate sweeps are skipped when |W| exceeds this.
        #[arg(long, default_value_t = DEFAULT_SWEEP_LIMIT)]
        sweep_limit: usize,
    },
}

impl Command {
    pub fn cartan_type(&self) -> &str {
        match self {
            Command::Roots { cartan_type }
            | Command::Pairs { cartan_type }
            | Command::Coiso { cartan_type, .. }
            | Command::Zambon { cartan_type, .. }
            | Command::Verify { cartan_type, .. } => cartan_type,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "coiso",
    version,
    about = "Coisotropic subalgebras of complex semisimple Lie algebras"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: OutputFormat,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_WEYL_CAP, global = true)]
    weyl_cap: usize,
    #[arg(long, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

/// A fully parsed invocation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub cartan_type: String,
    pub command: Command,
    pub output_format: OutputFormat,
    pub seed: u64,
    pub weyl_cap: usize,
    pub out: Option<String>,
}

impl RunConfig {
    /// Parses command-line arguments (including the program name).
    pub fn from_args<I, T>(args: I) -> std::result::Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        Ok(RunConfig {
            cartan_type: cli.command.cartan_type().to_string(),
            command: cli.command,
            output_format: cli.format,
            seed: cli.seed,
            weyl_cap: cli.weyl_cap,
            out: cli.out,
        })
    }
}

/// Rendered output and whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    /// Printed to stderr; used for CSV summaries.
    pub summary: Option<String>,
    pub success: bool,
}

fn group_for(rs: Arc<RootSystem>, cap: usize) -> Result<WeylGroup> {
    WeylGroup::enumerate(rs, cap)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn to_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn to_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            let _ = write!(s, "{c:<w$}");
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn table(format: OutputFormat, header: &[&str], rows: &[Vec<String>]) -> String {
    match format {
        OutputFormat::Csv => to_csv(header, rows),
        _ => to_text(header, rows),
    }
}

#[derive(Serialize)]
struct RootRow {
    index: usize,
    label: String,
    coords: Vec<i64>,
    height: i64,
    positive: bool,
    length: &'static str,
    norm: String,
}

fn cmd_roots(cfg: &RunConfig, rs: &RootSystem) -> Outcome {
    let rows: Vec<RootRow> = (0..rs.num_roots())
        .map(|i| RootRow {
            index: i,
            label: rs.root_label(i),
            coords: rs.root(i).coords().to_vec(),
            height: rs.root(i).height(),
            positive: rs.is_positive_index(i),
            length: if rs.is_long_index(i) { "long" } else { "short" },
            norm: format_rational(rs.norm(i)),
        })
        .collect();
    let output = match cfg.output_format {
        OutputFormat::Json => to_json(&serde_json::json!({
            "type": rs.cartan_type().to_string(),
            "rank": rs.rank(),
            "roots": rows,
        })),
        f => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.index.to_string(),
                        r.label.clone(),
                        r.coords
                            .iter()
                            .map(i64::to_string)
                            .collect::<Vec<_>>()
                            .join(" "),
                        r.height.to_string(),
                        r.positive.to_string(),
                        r.length.to_string(),
                        r.norm.clone(),
                    ]
                })
                .collect();
            table(
                f,
                &[
                    "index", "label", "coords", "height", "positive", "length", "norm",
                ],
                &body,
            )
        }
    };
    Outcome {
        output,
        summary: None,
        success: true,
    }
}

#[derive(Serialize)]
struct PairRow {
    u: String,
    v: String,
    len_u: usize,
    len_v: usize,
    disjoint: bool,
    rank_pi: usize,
    weak_leq_v_w0: bool,
}

fn cmd_pairs(cfg: &RunConfig, group: &WeylGroup) -> Outcome {
    let w0 = group.long_element();
    let rows: Vec<PairRow> = group
        .ids()
        .flat_map(|u| group.ids().map(move |v| (u, v)))
        .map(|(u, v)| PairRow {
            u: group.word_string(u),
            v: group.word_string(v),
            len_u: group.length(u),
            len_v: group.length(v),
            disjoint: group.disjoint_inversions(u, v),
            rank_pi: rank_pi(group, u, v),
            weak_leq_v_w0: group.weak_leq(u, group.multiply(v, w0)),
        })
        .collect();
    let disjoint = rows.iter().filter(|r| r.disjoint).count();
    let consistent = rows
        .iter()
        .all(|r| r.disjoint == (r.rank_pi == 0) && r.disjoint == r.weak_leq_v_w0);
    let summary = format!("{} pairs, {} disjoint", rows.len(), disjoint);
    let (output, summary) = match cfg.output_format {
        OutputFormat::Json => (
            to_json(&serde_json::json!({
                "type": group.root_system().cartan_type().to_string(),
                "weyl_order": group.order(),
                "pairs": rows,
                "pair_count": rows.len(),
                "disjoint_pairs": disjoint,
            })),
            None,
        ),
        f => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.u.clone(),
                        r.v.clone(),
                        r.len_u.to_string(),
                        r.len_v.to_string(),
                        r.disjoint.to_string(),
                        r.rank_pi.to_string(),
                        r.weak_leq_v_w0.to_string(),
                    ]
                })
                .collect();
            let t = table(
                f,
                &[
                    "u",
                    "v",
                    "len_u",
                    "len_v",
                    "disjoint",
                    "rank_pi",
                    "weak_leq_v_w0",
                ],
                &body,
            );
            if f == OutputFormat::Csv {
                (t, Some(summary))
            } else {
                (format!("{t}{summary}\n"), None)
            }
        }
    };
    Outcome {
        output,
        summary,
        success: consistent,
    }
}

fn parse_sign(s: &str) -> Result<i8> {
    match s.trim() {
        "+" | "1" | "+1" | "plus" => Ok(1),
        "-" | "-1" | "minus" => Ok(-1),
        _ => Err(Error::InvalidRootSpec(format!("sign `{s}`"))),
    }
}

fn opt(s: &Option<Vec<Vec<String>>>) -> String {
    match s {
        Some(rows) => rows
            .iter()
            .map(|r| r.join(","))
            .collect::<Vec<_>>()
            .join(";"),
        None => String::new(),
    }
}

fn render_candidate(format: OutputFormat, r: &CandidateReport) -> String {
    match format {
        OutputFormat::Json => to_json(r),
        f => {
            let header = [
                "type",
                "recipe",
                "V",
                "u",
                "v",
                "lagrangian",
                "coisotropic",
                "dim_m",
                "m_basis",
                "rank_pi",
            ];
            let row = vec![
                r.cartan_type.clone(),
                r.recipe.kind.clone(),
                opt(&r.recipe.v_basis),
                r.recipe.u_word.clone().unwrap_or_default(),
                r.recipe.v_word.clone().unwrap_or_default(),
                r.lagrangian.to_string(),
                r.coisotropic.to_string(),
                r.m_basis
                    .as_ref()
                    .map(|m| m.len().to_string())
                    .unwrap_or_default(),
                opt(&r.m_basis),
                r.rank_pi.to_string(),
            ];
            table(f, &header, &[row])
        }
    }
}

fn render_zambon(format: OutputFormat, r: &ZambonReport) -> String {
    match format {
        OutputFormat::Json => to_json(r),
        f => {
            let header = [
                "type",
                "beta",
                "sign",
                "dim",
                "closed_form_match",
                "leading_coefficient",
                "as_l",
                "as_l_match",
                "coisotropic",
            ];
            let row = vec![
                r.cartan_type.clone(),
                r.beta_label.clone(),
                if r.sign > 0 { "+" } else { "-" }.to_string(),
                r.dim.to_string(),
                r.closed_form_match.to_string(),
                r.leading_coefficient.clone().unwrap_or_default(),
                format!(
                    "l(V={}, u={}, v={})",
                    opt(&r.as_l.v_basis),
                    r.as_l.u_word.clone().unwrap_or_default(),
                    r.as_l.v_word.clone().unwrap_or_default()
                ),
                r.as_l_match.to_string(),
                r.coisotropic.to_string(),
            ];
            table(f, &header, &[row])
        }
    }
}

fn render_verify(format: OutputFormat, r: &VerifyReport) -> (String, Option<String>) {
    let summary = format!(
        "{} dim {} |W| {}: {}",
        r.cartan_type,
        r.dim,
        r.weyl_order,
        if r.passed {
            "all suites passed"
        } else {
            "FAILED"
        }
    );
    match format {
        OutputFormat::Json => (to_json(r), None),
        f => {
            let body: Vec<Vec<String>> = r
                .suites
                .iter()
                .map(|s| {
                    vec![
                        s.name.clone(),
                        serde_json::to_value(s.status)
                            .ok()
                            .and_then(|v| v.as_str().map(str::to_string))
                            .unwrap_or_default(),
                        s.checks.to_string(),
                        s.failures.to_string(),
                        s.note.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            let t = table(f, &["suite", "status", "checks", "failures", "note"], &body);
            if f == OutputFormat::Csv {
                (t, Some(summary))
            } else {
                let mut out = t;
                for s in r.suites.iter().filter(|s| !s.failed.is_empty()) {
                    for msg in &s.failed {
                        let _ = writeln!(out, "  {}: {msg}", s.name);
                    }
                }
                let _ = writeln!(out, "{summary}");
                (out, None)
            }
        }
    }
}

/// Runs a parsed command and renders its output.
pub fn execute(cfg: &RunConfig) -> Result<Outcome> {
    let rs = Arc::new(RootSystem::parse(cfg.command.cartan_type())?);
    match &cfg.command {
        Command::Roots { .. } => Ok(cmd_roots(cfg, &rs)),
        Command::Pairs { .. } => {
            let group = group_for(rs, cfg.weyl_cap)?;
            Ok(cmd_pairs(cfg, &group))
        }
        Command::Coiso {
            v_space,
            u,
            v,
            recipe,
            ..
        } => {
            let group = group_for(rs.clone(), cfg.weyl_cap)?;
            let vs = parse_cartan_subspace(&rs, v_space)?;
            let (u, v) = (group.parse_word(u)?, group.parse_word(v)?);
            let d = Double::new(Arc::new(ChevalleyAlgebra::new(rs)));
            let cand = match recipe {
                RecipeKind::L => d.build_l(&group, &vs, u, v)?,
                RecipeKind::S => d.build_s(&group, &vs, u, v)?,
                RecipeKind::Z => d.build_z(&group, u, v)?,
            };
            let rep = d.report(&group, &cand)?;
            Ok(Outcome {
                output: render_candidate(cfg.output_format, &rep),
                summary: None,
                success: rep.lagrangian,
            })
        }
        Command::Zambon { beta, sign, .. } => {
            let b = rs.resolve_root(beta)?;
            let sign = parse_sign(sign)?;
            let group = group_for(rs.clone(), cfg.weyl_cap)?;
            let d = Double::new(Arc::new(ChevalleyAlgebra::new(rs)));
            let rep = zambon_report(&d, &group, b, sign)?;
            let ok = rep.closed_form_match && rep.as_l_match && rep.coisotropic;
            Ok(Outcome {
                output: render_zambon(cfg.output_format, &rep),
                summary: None,
                success: ok,
            })
        }
        Command::Verify { sweep_limit, .. } => {
            let opts = VerifyOptions {
                seed: cfg.seed,
                weyl_cap: cfg.weyl_cap,
                sweep_limit: *sweep_limit,
            };
            let rep = verify((*rs).clone(), opts)?;
            let (output, summary) = render_verify(cfg.output_format, &rep);
            Ok(Outcome {
                output,
                summary,
                success: rep.passed,
            })
        }
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::from_args(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
        }
    };
    let outcome = match execute(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &outcome.output),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(outcome.output.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    if let Some(s) = &outcome.summary {
        eprintln!("{s}");
    }
    if outcome.success {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> RunConfig {
        RunConfig::from_args(std::iter::once("coiso").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn config_round_trips() {
        for args in [
            vec!["roots", "G2", "--format", "csv"],
            vec!["--seed", "9", "verify", "A2", "--sweep-limit", "10"],
            vec![
                "coiso", "A2", "--V", "1,0", "--u", "s1", "--v", "e", "--recipe", "z",
            ],
            vec!["zambon", "B2", "--beta", "long-simple", "--sign", "-"],
        ] {
            let c = cfg(&args);
            let json = serde_json::to_string(&c).unwrap();
            assert_eq!(serde_json::from_str::<RunConfig>(&json).unwrap(), c);
        }
    }

    #[test]
    fn roots_tables() {
        let out = execute(&cfg(&["roots", "A2", "--format", "json"])).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.output).unwrap();
        assert_eq!(v["roots"].as_array().unwrap().len(), 6);
        let csv = execute(&cfg(&["roots", "G2", "--format", "csv"]))
            .unwrap()
            .output;
        assert_eq!(csv.lines().count(), 13);
        assert!(csv.lines().next().unwrap().contains("length"));
        assert_eq!(csv.lines().filter(|l| l.contains(",long,")).count(), 6);
    }

    #[test]
    fn bad_type_is_usage_error() {
        assert!(execute(&cfg(&["roots", "Z9"])).is_err());
        assert_eq!(main_with_args(["coiso", "roots", "Z9"]), EXIT_USAGE);
        assert_eq!(main_with_args(["coiso", "frobnicate"]), EXIT_USAGE);
    }

    #[test]
    fn pairs_counts() {
        let a1 = execute(&cfg(&["pairs", "A1", "--format", "json"])).unwrap();
        let v: serde_json::Value = serde_json::from_str(&a1.output).unwrap();
        assert_eq!(v["pair_count"], 4);
        assert_eq!(v["disjoint_pairs"], 3);
        let a2 = execute(&cfg(&["pairs", "A2", "--format", "csv"])).unwrap();
        assert_eq!(a2.output.lines().count(), 37);
        assert_eq!(a2.summary.as_deref(), Some("36 pairs, 17 disjoint"));
        assert!(a2.success);
    }

    #[test]
    fn coiso_examples() {
        let run = |args: &[&str]| -> serde_json::Value {
            let mut a = args.to_vec();
            a.extend(["--format", "json"]);
            serde_json::from_str(&execute(&cfg(&a)).unwrap().output).unwrap()
        };
        let v = run(&[
            "coiso", "A2", "--V", "0", "--u", "e", "--v", "e", "--recipe", "l",
        ]);
        assert_eq!(v["coisotropic"], true);
        assert_eq!(v["m_basis"].as_array().unwrap().len(), 0);
        let v = run(&[
            "coiso", "A1", "--V", "full", "--u", "s1", "--v", "s1", "--recipe", "l",
        ]);
        assert_eq!(
            (v["lagrangian"].clone(), v["coisotropic"].clone()),
            (true.into(), false.into())
        );
        assert!(v["m_basis"].is_null());
        let v = run(&["coiso", "A2", "--u", "s1*s2", "--v", "e", "--recipe", "z"]);
        assert_eq!(v["coisotropic"], false);
        assert!(execute(&cfg(&["coiso", "A2", "--u", "s3"])).is_err());
        assert!(execute(&cfg(&["coiso", "A2", "--V", "1,2,3"])).is_err());
    }

    #[test]
    fn zambon_examples() {
        let dim = |args: &[&str]| -> u64 {
            let mut a = args.to_vec();
            a.extend(["--format", "json"]);
            let v: serde_json::Value =
                serde_json::from_str(&execute(&cfg(&a)).unwrap().output).unwrap();
            assert_eq!(v["closed_form_match"], true);
            v["dim"].as_u64().unwrap()
        };
        assert_eq!(dim(&["zambon", "A1", "--beta", "a1"]), 2);
        assert_eq!(dim(&["zambon", "A2", "--beta", "highest"]), 4);
        assert_eq!(
            dim(&["zambon", "A2", "--beta", "highest", "--sign", "-"]),
            4
        );
        let err = execute(&cfg(&["zambon", "B2", "--beta", "short-simple"])).unwrap_err();
        assert!(err.to_string().contains("not a long root"));
    }

    #[test]
    fn verify_text_and_csv() {
        let t = execute(&cfg(&["verify", "A1"])).unwrap();
        assert!(t.success);
        assert!(t.output.contains("all suites passed"));
        let c = execute(&cfg(&["verify", "A1", "--format", "csv"])).unwrap();
        assert!(c.output.starts_with("suite,status,checks,failures,note"));
        assert!(c.summary.is_some());
    }
}
