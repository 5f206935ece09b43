//! Command-line front end. Parsing, dispatch and rendering live here so the
//! `burr` binary stays a one-liner and the output bytes can be tested.

use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::asymptotics::{record_hypothesis_test, run_experiment, Variant};
use crate::distributions::{cdf, quantile, sf, MemberId, Params};
use crate::error::BurrError;
use crate::evt::{classify, probe_gamma};
use crate::expansions::{exact_quantity, expand_quantile, remainder};
use crate::records::simulate_records;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Canonical,
    Alternative,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Canonical => Variant::Canonical,
            VariantArg::Alternative => Variant::Alternative,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "burr",
    version,
    about = "Burr distribution family: quantiles, tail expansions, domain classification and record-value laws",
    after_help = "Members: I..XII, Xa, singh-maddala, dagum, topp-leone-dagum (case-insensitive).\n\
                  Parameters are passed as --param key=value with keys k, c, r, a, b, d, f.\n\
                  Exit codes: 0 success, 1 numeric failure, 2 usage error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for replication loops. Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Debug, Args)]
struct MemberArgs {
    /// Distribution member, e.g. XII or xa.
    #[arg(long)]
    member: MemberId,
    /// Parameter assignment key=value (repeatable).
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Quantile F^{-1}(p).
    #[command(after_help = "Example:\n  burr quantile --member I --p 0.3\n  burr quantile --member XII --param r=2 --param c=1 --p 0.5 --p 0.99 --format csv\n\nCSV columns: p,value")]
    Quantile {
        #[command(flatten)]
        member: MemberArgs,
        /// Probability level (repeatable).
        #[arg(long, required = true)]
        p: Vec<f64>,
    },
    /// Distribution and survival functions at x.
    #[command(after_help = "Example:\n  burr cdf --member III --param k=2 --param r=1 --x 1.5\n\nCSV columns: x,cdf,sf")]
    Cdf {
        #[command(flatten)]
        member: MemberArgs,
        /// Point (repeatable).
        #[arg(long, required = true, allow_negative_numbers = true)]
        x: Vec<f64>,
    },
    /// Two-term expansion of F^{-1}(1-u) with its remainder.
    #[command(after_help = "Example:\n  burr expand --member XII --param r=2 --param c=1 --u 1e-4\n\nCSV columns: u,leading,correction,value,exact,remainder")]
    Expand {
        #[command(flatten)]
        member: MemberArgs,
        /// Upper tail probability (repeatable).
        #[arg(long, required = true)]
        u: Vec<f64>,
    },
    /// Extreme-value index, upper endpoint and numeric probes.
    #[command(after_help = "Example:\n  burr classify --member IV --param c=2 --param r=1\n\nCSV columns: member,gamma,uep,transform,u,kind,estimate,target")]
    Classify {
        #[command(flatten)]
        member: MemberArgs,
        /// Probe ratio λ.
        #[arg(long, default_value_t = 2.0)]
        lambda: f64,
        /// Probe tail probabilities (repeatable).
        #[arg(long, default_values_t = [1e-4, 1e-5, 1e-6])]
        u: Vec<f64>,
    },
    /// Simulated n-th record values.
    #[command(after_help = "Example:\n  burr records --member II --param r=1 --n 50 --m 10 --seed 7 --format csv\n\nCSV columns: replication,n,s_n,s_star,value")]
    Records {
        #[command(flatten)]
        member: MemberArgs,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Monte Carlo check of the standardized record statistic against its limit law.
    #[command(after_help = "Example:\n  burr experiment --member II --param r=1 --n 1000 --m 5000 --seed 42\n\nCSV columns: index,statistic")]
    Experiment {
        #[command(flatten)]
        member: MemberArgs,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = VariantArg::Canonical)]
        variant: VariantArg,
    },
    /// Two-sided z-test that an observed value is a plausible n-th record.
    #[command(after_help = "Example:\n  burr test --member X --param r=1 --x 31.7 --n 1000\n\nCSV columns: statistic,z,pvalue,reject,flag")]
    Test {
        #[command(flatten)]
        member: MemberArgs,
        /// Observed record value.
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 0.05)]
        significance: f64,
        #[arg(long, value_enum, default_value_t = VariantArg::Canonical)]
        variant: VariantArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubcommandName {
    Quantile,
    Cdf,
    Expand,
    Classify,
    Records,
    Experiment,
    Test,
}

/// A validated invocation. `out` and `threads` are not echoed in output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub subcommand: SubcommandName,
    pub member: MemberId,
    pub params: Params,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub p: Vec<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub u: Vec<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub x: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<Variant>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub significance: Option<f64>,
    pub format: Format,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub threads: Option<usize>,
}

fn usage(msg: String) -> clap::Error {
    Cli::command().error(ErrorKind::ValueValidation, msg)
}

fn resolve_member(args: &MemberArgs) -> Result<(MemberId, Params), clap::Error> {
    let mut params = Params::new();
    for a in &args.params {
        params = params.assign(a).map_err(|e| usage(format!("--param {a}: {e}")))?;
    }
    args.member.require(&params).map_err(|e| usage(e.to_string()))?;
    Ok((args.member, params))
}

/// Parses and validates `argv` (including the program name).
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let matches = Cli::command().try_get_matches_from(argv)?;
    let cli = Cli::from_arg_matches(&matches)?;
    let base = |subcommand, (member, params)| RunConfig {
        subcommand,
        member,
        params,
        p: vec![],
        u: vec![],
        x: vec![],
        n: None,
        m: None,
        seed: None,
        variant: None,
        lambda: None,
        significance: None,
        format: cli.format,
        out: cli.out.clone(),
        threads: cli.threads,
    };
    let cfg = match &cli.command {
        Command::Quantile { member, p } => {
            if let Some(bad) = p.iter().find(|v| !(**v > 0.0 && **v < 1.0)) {
                return Err(usage(format!("--p must lie in (0, 1), got {bad}")));
            }
            RunConfig { p: p.clone(), ..base(SubcommandName::Quantile, resolve_member(member)?) }
        }
        Command::Cdf { member, x } => RunConfig { x: x.clone(), ..base(SubcommandName::Cdf, resolve_member(member)?) },
        Command::Expand { member, u } => {
            if let Some(bad) = u.iter().find(|v| !(**v > 0.0 && **v < 1.0)) {
                return Err(usage(format!("--u must lie in (0, 1), got {bad}")));
            }
            RunConfig { u: u.clone(), ..base(SubcommandName::Expand, resolve_member(member)?) }
        }
        Command::Classify { member, lambda, u } => RunConfig {
            u: u.clone(),
            lambda: Some(*lambda),
            ..base(SubcommandName::Classify, resolve_member(member)?)
        },
        Command::Records { member, n, m, seed } => RunConfig {
            n: Some(*n),
            m: Some(*m),
            seed: Some(*seed),
            ..base(SubcommandName::Records, resolve_member(member)?)
        },
        Command::Experiment { member, n, m, seed, variant } => RunConfig {
            n: Some(*n),
            m: Some(*m),
            seed: Some(*seed),
            variant: Some((*variant).into()),
            ..base(SubcommandName::Experiment, resolve_member(member)?)
        },
        Command::Test { member, x, n, significance, variant } => {
            if !(*significance > 0.0 && *significance < 1.0) {
                return Err(usage(format!("--significance must lie in (0, 1), got {significance}")));
            }
            RunConfig {
                x: vec![*x],
                n: Some(*n),
                significance: Some(*significance),
                variant: Some((*variant).into()),
                ..base(SubcommandName::Test, resolve_member(member)?)
            }
        }
    };
    Ok(cfg)
}

/// Exit code and the document to emit.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub bytes: Vec<u8>,
}

enum Body {
    Json(Value),
    Csv(Vec<String>, Vec<Vec<String>>),
}

fn num(x: f64) -> String {
    x.to_string()
}

fn compute(cfg: &RunConfig) -> Result<Body, BurrError> {
    let (member, p) = (cfg.member, &cfg.params);
    let csv = cfg.format == Format::Csv;
    let body = match cfg.subcommand {
        SubcommandName::Quantile => {
            let rows: Vec<(f64, f64)> = cfg.p.iter().map(|&pr| Ok((pr, quantile(member, p, pr)?))).collect::<Result<_, BurrError>>()?;
            if csv {
                Body::Csv(vec!["p".into(), "value".into()], rows.iter().map(|r| vec![num(r.0), num(r.1)]).collect())
            } else {
                Body::Json(json!({ "results": rows.iter().map(|r| json!({"p": r.0, "value": r.1})).collect::<Vec<_>>() }))
            }
        }
        SubcommandName::Cdf => {
            let rows: Vec<[f64; 3]> = cfg.x.iter().map(|&x| Ok([x, cdf(member, p, x)?, sf(member, p, x)?])).collect::<Result<_, BurrError>>()?;
            if csv {
                Body::Csv(vec!["x".into(), "cdf".into(), "sf".into()], rows.iter().map(|r| r.iter().map(|v| num(*v)).collect()).collect())
            } else {
                Body::Json(json!({ "results": rows.iter().map(|r| json!({"x": r[0], "cdf": r[1], "sf": r[2]})).collect::<Vec<_>>() }))
            }
        }
        SubcommandName::Expand => {
            let mut rows = Vec::new();
            for &u in &cfg.u {
                let e = expand_quantile(member, p, u)?;
                rows.push((e, exact_quantity(member, p, u)?, remainder(member, p, u)?));
            }
            if csv {
                let header = ["u", "leading", "correction", "value", "exact", "remainder"].map(String::from).to_vec();
                Body::Csv(
                    header,
                    rows.iter().map(|(e, ex, rem)| [e.u, e.leading, e.correction, e.value, *ex, *rem].map(num).to_vec()).collect(),
                )
            } else {
                Body::Json(json!({
                    "results": rows.iter().map(|(e, ex, rem)| json!({
                        "u": e.u, "leading": e.leading, "correction": e.correction, "value": e.value,
                        "exact": ex, "remainder": rem, "frame": e.frame, "remainder_order": e.remainder_spec,
                    })).collect::<Vec<_>>()
                }))
            }
        }
        SubcommandName::Classify => {
            let class = classify(member, p)?;
            let probes = probe_gamma(member, p, cfg.lambda.unwrap_or(2.0), &cfg.u)?;
            if csv {
                let header = ["member", "gamma", "uep", "transform", "u", "kind", "estimate", "target"].map(String::from).to_vec();
                let transform = serde_json::to_value(class.transform).unwrap().as_str().unwrap().to_string();
                let rows = probes
                    .iter()
                    .map(|e| {
                        let kind = serde_json::to_value(e.kind).unwrap().as_str().unwrap().to_string();
                        vec![member.to_string(), num(class.gamma), num(class.uep), transform.clone(), num(e.u), kind, num(e.estimate), num(e.target)]
                    })
                    .collect();
                Body::Csv(header, rows)
            } else {
                Body::Json(json!({
                    "member": member, "params": p, "gamma": class.gamma, "uep": class.uep,
                    "transform": class.transform, "probe_estimates": probes,
                }))
            }
        }
        SubcommandName::Records => {
            let (n, m) = (cfg.n.unwrap(), cfg.m.unwrap());
            let draws = simulate_records(member, p, n, m, cfg.seed.unwrap())?;
            if csv {
                let header = ["replication", "n", "s_n", "s_star", "value"].map(String::from).to_vec();
                let rows = draws
                    .iter()
                    .enumerate()
                    .map(|(i, d)| vec![i.to_string(), d.n.to_string(), num(d.s_n), num(d.s_star), num(d.value)])
                    .collect();
                Body::Csv(header, rows)
            } else {
                Body::Json(json!({ "draws": draws }))
            }
        }
        SubcommandName::Experiment => {
            let report = run_experiment(member, p, cfg.n.unwrap(), cfg.m.unwrap(), cfg.seed.unwrap(), cfg.variant.unwrap())?;
            if csv {
                let rows = report.statistics.iter().enumerate().map(|(i, s)| vec![i.to_string(), num(*s)]).collect();
                Body::Csv(vec!["index".into(), "statistic".into()], rows)
            } else {
                Body::Json(json!({ "report": report }))
            }
        }
        SubcommandName::Test => {
            let t = record_hypothesis_test(cfg.x[0], cfg.n.unwrap(), member, p, cfg.significance.unwrap(), cfg.variant.unwrap())?;
            let flag = t.flag.map(|f| serde_json::to_value(f).unwrap().as_str().unwrap().to_string());
            if csv {
                let header = ["statistic", "z", "pvalue", "reject", "flag"].map(String::from).to_vec();
                let row = vec![num(t.statistic), num(t.z), num(t.pvalue), t.reject.to_string(), flag.unwrap_or_default()];
                Body::Csv(header, vec![row])
            } else {
                Body::Json(json!({ "test": t }))
            }
        }
    };
    Ok(body)
}

fn render(cfg: &RunConfig, body: Body) -> Vec<u8> {
    match body {
        Body::Json(v) => {
            let mut doc = json!({ "tool_version": TOOL_VERSION, "seed": cfg.seed, "config": cfg });
            if let (Value::Object(d), Value::Object(extra)) = (&mut doc, v) {
                d.extend(extra);
            }
            let mut bytes = serde_json::to_vec_pretty(&doc).expect("serializable document");
            bytes.push(b'\n');
            bytes
        }
        Body::Csv(header, rows) => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header).expect("in-memory write");
            for r in rows {
                w.write_record(&r).expect("in-memory write");
            }
            w.into_inner().expect("in-memory flush")
        }
    }
}

/// Runs a validated config and renders its document.
pub fn run(cfg: &RunConfig) -> Outcome {
    let go = || compute(cfg);
    let result = match cfg.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(go),
            Err(e) => Err(BurrError::Invalid(format!("thread pool: {e}"))),
        },
        None => go(),
    };
    match result {
        Ok(body) => Outcome { code: 0, bytes: render(cfg, body) },
        Err(e) => {
            let doc = json!({
                "tool_version": TOOL_VERSION,
                "error": e.to_string(),
                "context": { "subcommand": cfg.subcommand, "member": cfg.member, "params": cfg.params },
            });
            let mut bytes = serde_json::to_vec_pretty(&doc).expect("serializable document");
            bytes.push(b'\n');
            Outcome { code: 1, bytes }
        }
    }
}

/// Entry point for the binary: parse, run, write. Returns the exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match parse_args(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    let outcome = run(&cfg);
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &outcome.bytes),
        None => std::io::stdout().write_all(&outcome.bytes),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return 1;
    }
    outcome.code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_style_invocations() {
        let c = parse_args(["burr", "expand", "--member", "XII", "--param", "r=2", "--param", "c=1", "--u", "1e-4"]).unwrap();
        assert_eq!((c.subcommand, c.member, c.u.clone()), (SubcommandName::Expand, MemberId::XII, vec![1e-4]));
        let c = parse_args([
            "burr", "experiment", "--member", "II", "--param", "r=1", "--n", "1000", "--m", "5000", "--seed", "42", "--format", "json",
        ])
        .unwrap();
        assert_eq!((c.n, c.m, c.seed, c.format), (Some(1000), Some(5000), Some(42), Format::Json));
    }

    #[test]
    fn usage_errors_name_the_problem() {
        let e = parse_args(["burr", "classify", "--member", "IV"]).unwrap_err();
        assert!(e.to_string().contains("c"), "{e}");
        let e = parse_args(["burr", "quantile", "--member", "I", "--param", "z=1", "--p", "0.5"]).unwrap_err();
        assert!(e.to_string().contains("unknown parameter"), "{e}");
        assert!(parse_args(["burr", "quantile", "--member", "XIII", "--p", "0.5"]).is_err());
        assert!(parse_args(["burr", "quantile", "--member", "I"]).is_err());
    }

    #[test]
    fn quantile_of_uniform() {
        let c = parse_args(["burr", "quantile", "--member", "i", "--p", "0.3", "--format", "csv"]).unwrap();
        let o = run(&c);
        assert_eq!(o.code, 0);
        assert_eq!(String::from_utf8(o.bytes).unwrap(), "p,value\n0.3,0.3\n");
    }
}
