//! Command-line flags, the optional key/value config file, and the merged
//! [`Request`].

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(name = "monge", version, about = "Parabolic geometries of Monge type, computed exactly")]
pub struct Cli {
    /// Plain-text `key = value` file; flags given on the command line win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Root system summary.
    Roots(#[command(flatten)] Opts),
    /// Σ-grading dimensions.
    Grade(#[command(flatten)] Opts),
    /// Monge test for one Σ, or all Monge gradings with --enumerate.
    Monge(#[command(flatten)] Opts),
    /// Kostant classes of H^q(𝔤₋, 𝔤).
    Cohomology(#[command(flatten)] Opts),
    /// Graded nilpotent realization of a case.
    Realize(#[command(flatten)] Opts),
    /// Maurer–Cartan forms, standard Pfaffian system and normal form of a case.
    Mc(#[command(flatten)] Opts),
    /// Infinitesimal symmetries of a case.
    Sym(#[command(flatten)] Opts),
    /// Regenerate every table and compare with the golden copies.
    ReproduceTables(#[command(flatten)] Opts),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Roots(_) => "roots",
            Command::Grade(_) => "grade",
            Command::Monge(_) => "monge",
            Command::Cohomology(_) => "cohomology",
            Command::Realize(_) => "realize",
            Command::Mc(_) => "mc",
            Command::Sym(_) => "sym",
            Command::ReproduceTables(_) => "reproduce-tables",
        }
    }

    pub fn opts(&self) -> &Opts {
        match self {
            Command::Roots(o)
            | Command::Grade(o)
            | Command::Monge(o)
            | Command::Cohomology(o)
            | Command::Realize(o)
            | Command::Mc(o)
            | Command::Sym(o)
            | Command::ReproduceTables(o) => o,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Markdown,
    Text,
}

/// Every option, shared by all commands; each command reads what it needs.
#[derive(Args, Debug, Clone, PartialEq, Eq, Default)]
pub struct Opts {
    #[arg(long)]
    pub family: Option<char>,
    /// A single rank.
    #[arg(long)]
    pub rank: Option<usize>,
    /// Lowest rank of a range (with --rank-max).
    #[arg(long)]
    pub rank_min: Option<usize>,
    #[arg(long)]
    pub rank_max: Option<usize>,
    /// Σ as comma-separated 1-based indices.
    #[arg(long)]
    pub sigma: Option<String>,
    /// Case label such as IIIa or Va.
    #[arg(long, value_parser = parse_case)]
    pub case: Option<CaseArg>,
    /// r of the signature (r, s) for IIIa and IVa.
    #[arg(long)]
    pub sig_r: Option<usize>,
    #[arg(long)]
    pub sig_s: Option<usize>,
    /// Grade bound of the generic symmetry solver.
    #[arg(long, allow_hyphen_values = true)]
    pub bound: Option<i64>,
    /// Total degree of the determining-equation ansatz.
    #[arg(long)]
    pub degree: Option<u32>,
    /// Cohomology degree, 1 or 2.
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub enumerate: bool,
    /// Only labels and homogeneity weights.
    #[arg(long)]
    pub weights: bool,
    /// Use the 7-coordinate restriction of IIIc.
    #[arg(long)]
    pub restricted: bool,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Worker threads; default is the available parallelism.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseArg(pub monge_core::cases::CaseId);

fn parse_case(s: &str) -> Result<CaseArg, String> {
    monge_core::cases::CaseId::parse(s).map(CaseArg).map_err(|e| e.to_string())
}

/// The merged request, echoed in every report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Request {
    pub command: String,
    pub family: Option<char>,
    pub rank: Option<usize>,
    pub rank_min: Option<usize>,
    pub rank_max: Option<usize>,
    pub sigma: Option<Vec<usize>>,
    pub case: Option<String>,
    pub signature: Option<(usize, usize)>,
    pub bound: Option<i64>,
    pub degree: Option<u32>,
    pub q: Option<usize>,
    pub enumerate: bool,
    pub weights: bool,
    pub restricted: bool,
    pub format: Format,
    pub jobs: Option<usize>,
}

/// `key = value` lines; `#` starts a comment; keys use the long flag names.
pub fn read_config(path: &Path) -> Result<BTreeMap<String, String>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_config(&text)
}

pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut out = BTreeMap::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("config line {}: expected key = value", n + 1))?;
        out.insert(k.trim().replace('_', "-"), v.trim().to_string());
    }
    Ok(out)
}

fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad index {t:?} in {s:?}")))
        .collect()
}

fn num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, String> {
    v.parse().map_err(|_| format!("bad value {v:?} for {key}"))
}

fn flag(key: &str, v: &str) -> Result<bool, String> {
    match v {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(format!("bad value {v:?} for {key}")),
    }
}

/// Merges config values under the flags.
pub fn build_request(command: &Command, file: &BTreeMap<String, String>) -> Result<Request, String> {
    let o = command.opts();
    let get = |k: &str| file.get(k).map(String::as_str);
    for k in file.keys() {
        if !KEYS.contains(&k.as_str()) {
            return Err(format!("unknown config key {k:?}"));
        }
    }
    let family = match (o.family, get("family")) {
        (Some(f), _) => Some(f),
        (None, Some(v)) => v.chars().next(),
        _ => None,
    };
    let opt_num = |flag: Option<usize>, k: &str| -> Result<Option<usize>, String> {
        match (flag, get(k)) {
            (Some(v), _) => Ok(Some(v)),
            (None, Some(v)) => num(k, v).map(Some),
            _ => Ok(None),
        }
    };
    let case = match (o.case, get("case")) {
        (Some(c), _) => Some(c.0.label().to_string()),
        (None, Some(v)) => Some(parse_case(v)?.0.label().to_string()),
        _ => None,
    };
    let sigma = match (o.sigma.as_deref(), get("sigma")) {
        (Some(s), _) | (None, Some(s)) => Some(parse_list(s)?),
        _ => None,
    };
    let sig_r = opt_num(o.sig_r, "sig-r")?;
    let sig_s = opt_num(o.sig_s, "sig-s")?;
    let signature = match (sig_r, sig_s) {
        (Some(r), Some(s)) => Some((r, s)),
        (None, None) => None,
        _ => return Err("give both --sig-r and --sig-s".into()),
    };
    let format = match (o.format, get("format")) {
        (Some(f), _) => f,
        (None, Some(v)) => Format::from_str(v, true)?,
        _ => Format::Json,
    };
    let bound = match (o.bound, get("bound")) {
        (Some(b), _) => Some(b),
        (None, Some(v)) => Some(num("bound", v)?),
        _ => None,
    };
    let degree = match (o.degree, get("degree")) {
        (Some(d), _) => Some(d),
        (None, Some(v)) => Some(num("degree", v)?),
        _ => None,
    };
    let bool_opt = |flag_set: bool, k: &str| -> Result<bool, String> {
        match (flag_set, get(k)) {
            (true, _) => Ok(true),
            (false, Some(v)) => flag(k, v),
            _ => Ok(false),
        }
    };
    Ok(Request {
        command: command.name().into(),
        family,
        rank: opt_num(o.rank, "rank")?,
        rank_min: opt_num(o.rank_min, "rank-min")?,
        rank_max: opt_num(o.rank_max, "rank-max")?,
        sigma,
        case,
        signature,
        bound,
        degree,
        q: opt_num(o.q, "q")?,
        enumerate: bool_opt(o.enumerate, "enumerate")?,
        weights: bool_opt(o.weights, "weights")?,
        restricted: bool_opt(o.restricted, "restricted")?,
        format,
        jobs: opt_num(o.jobs, "jobs")?,
    })
}

const KEYS: [&str; 16] = [
    "family", "rank", "rank-min", "rank-max", "sigma", "case", "sig-r", "sig-s", "bound", "degree", "q", "enumerate",
    "weights", "restricted", "format", "jobs",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_lines() {
        let m = parse_config("# batch\nrank_min = 2\nrank-max=8 # inclusive\n\nformat = markdown\n").unwrap();
        assert_eq!(m["rank-min"], "2");
        assert_eq!(m["rank-max"], "8");
        assert!(parse_config("rank 3").is_err());
    }

    #[test]
    fn flags_override_file() {
        let file = parse_config("rank = 5\nfamily = B\nsigma = 1,2\nformat = text").unwrap();
        let cmd = Command::Grade(Opts {
            rank: Some(3),
            sigma: Some("2,3".into()),
            ..Default::default()
        });
        let r = build_request(&cmd, &file).unwrap();
        assert_eq!(r.rank, Some(3));
        assert_eq!(r.family, Some('B'));
        assert_eq!(r.sigma, Some(vec![2, 3]));
        assert_eq!(r.format, Format::Text);
    }

    #[test]
    fn unknown_key_rejected() {
        let file = parse_config("colour = red").unwrap();
        assert!(build_request(&Command::Roots(Opts::default()), &file).is_err());
    }
}
