//! Command-line front end.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classenum::{enumerate_classes, EnumQuery};
use crate::error::{Error, Result};
use crate::exactmath::text::format_poly;
use crate::exactmath::MultiPoly;
use crate::families::{
    absolute_witness, analyze_surface_with, compose_maps, find_families_on, inverse_stereographic, AnalysisOptions,
    FamilyQuery, RationalMap, Surface,
};
use crate::json::{classes_to_json, families_to_json, parse_map_file, surface_to_json, FamiliesJson, MapInput};
use crate::nslattice::DivClass;

/// Environment variable overriding the random seed of the basepoint analysis.
pub const SEED_ENV: &str = "NSFAM_SEED";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "nsfam", version, about = "Curves and families of curves on rational surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Map file (JSON).
    #[arg(short, long)]
    pub input: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = crate::linser::DEFAULT_DEPTH_CAP)]
    pub depth_cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Analyze the map even when the file lists basepoints.
    #[arg(long)]
    pub ignore_basepoints: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Basepoints and lattice of the parametrized surface.
    Analyze(Common),
    /// Classes with given degree and self-intersection.
    Classes {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_negative_numbers = true)]
        alpha: i64,
        #[arg(long, allow_negative_numbers = true)]
        beta: i64,
        /// Class h as `3e0-e1-e2` or `[3,-1,-1]`; replaces the map file.
        #[arg(long)]
        h: Option<String>,
    },
    /// Complete families of given degree, h0 and genus.
    Families {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        alpha: i64,
        #[arg(long)]
        nu: i64,
        #[arg(long)]
        rho: i64,
        /// Keep only classes fixed by complex conjugation.
        #[arg(long)]
        real: bool,
    },
    /// Real circles: families on the stereographic image in the sphere.
    Circles {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        alpha: i64,
        #[arg(long, default_value_t = 1)]
        nu: i64,
        #[arg(long, default_value_t = 0)]
        rho: i64,
        /// The map already lands on the sphere; skip the projection.
        #[arg(long)]
        on_sphere: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Analyze,
    Classes,
    Families,
    Circles { on_sphere: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JobQuery {
    None,
    Enum { h: Option<DivClass>, alpha: i64, beta: i64 },
    Family(FamilyQuery),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobOptions {
    pub depth_cap: usize,
    pub format: Format,
    pub seed: u64,
    pub use_basepoints: bool,
}

/// A fully parsed invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: CommandKind,
    pub input: Option<MapInput>,
    pub query: JobQuery,
    pub options: JobOptions,
}

pub fn seed_from_env() -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| Error::Parse(format!("{SEED_ENV} must be an unsigned integer"))),
        Err(_) => Ok(crate::linser::DEFAULT_SEED),
    }
}

impl JobSpec {
    /// Reads the map file and checks that the query fits the command.
    pub fn from_cli(cli: &Cli, seed: u64) -> Result<(Self, Option<PathBuf>)> {
        let (common, command, query) = match &cli.command {
            Command::Analyze(c) => (c, CommandKind::Analyze, JobQuery::None),
            Command::Classes { common, alpha, beta, h } => {
                let h = h.as_deref().map(str::parse::<DivClass>).transpose()?;
                (common, CommandKind::Classes, JobQuery::Enum { h, alpha: *alpha, beta: *beta })
            }
            Command::Families { common, alpha, nu, rho, real } => {
                let mut q = FamilyQuery::new(*alpha, *nu, *rho)?;
                q.real_only = *real;
                (common, CommandKind::Families, JobQuery::Family(q))
            }
            Command::Circles { common, alpha, nu, rho, on_sphere } => {
                let q = FamilyQuery::new(*alpha, *nu, *rho)?.real();
                (common, CommandKind::Circles { on_sphere: *on_sphere }, JobQuery::Family(q))
            }
        };
        let input = common.input.as_deref().map(parse_map_file).transpose()?;
        let needs_map = !matches!(query, JobQuery::Enum { h: Some(_), .. });
        if needs_map && input.is_none() {
            return Err(Error::Parse("missing -i/--input map file".into()));
        }
        let options = JobOptions {
            depth_cap: common.depth_cap,
            format: common.format,
            seed,
            use_basepoints: !common.ignore_basepoints,
        };
        Ok((JobSpec { command, input, query, options }, common.output.clone()))
    }
}

/// Process exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Json(_) | Error::ReducibleMinpoly(_) => 2,
        Error::UnsupportedField(_) | Error::ExtensionRequest(_) | Error::FixedComponent(_) | Error::UnsupportedClass(_) => 3,
        Error::DepthCap(_) => 4,
        _ => 1,
    }
}

/// Short machine-readable error kind.
pub fn error_kind(e: &Error) -> &'static str {
    match exit_code(e) {
        2 => "parse",
        3 => "unsupported",
        4 => "depth-cap",
        _ => "error",
    }
}

fn surface_of(map: &RationalMap, input: &MapInput, opts: &JobOptions, allow_override: bool) -> Result<Surface> {
    match (&input.basepoints, allow_override && opts.use_basepoints) {
        (Some(locus), true) => Surface::from_locus(map, locus.clone()),
        _ => analyze_surface_with(map, AnalysisOptions { depth_cap: opts.depth_cap, seed: opts.seed }),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn surface_text(s: &Surface) -> String {
    let mut out = String::new();
    let field = s.locus.field.minpoly_string().map(|m| format!("Q[t]/({m})")).unwrap_or_else(|| "Q".into());
    writeln!(out, "field {field}").unwrap();
    writeln!(out, "h = {}", s.lattice.h).unwrap();
    writeln!(out, "k = {}", s.lattice.k).unwrap();
    let swaps: Vec<String> = (1..s.lattice.sigma.len())
        .filter(|&i| s.lattice.sigma[i] > i)
        .map(|i| format!("({} {})", i, s.lattice.sigma[i]))
        .collect();
    writeln!(out, "sigma = {}", if swaps.is_empty() { "identity".into() } else { swaps.join("") }).unwrap();
    for (p, m) in s.locus.tree.points().iter().zip(&s.locus.mults) {
        let at = match p.parent {
            None => format!("patch x{} = 1", p.patch),
            Some(par) => format!("chart {} over p{par}", p.chart.as_str()),
        };
        writeln!(out, "p{} ({}, {}) {at}, mult {m}", p.id, p.coords[0], p.coords[1]).unwrap();
    }
    out
}

fn families_text(doc: &FamiliesJson) -> String {
    let mut out = String::new();
    let q = &doc.query;
    writeln!(out, "query alpha={} nu={} rho={}{}", q.alpha, q.nu, q.rho, if q.real { " real" } else { "" }).unwrap();
    writeln!(out, "candidates {}", doc.candidates.len()).unwrap();
    writeln!(out, "accepted {}", doc.accepted.len()).unwrap();
    for a in &doc.accepted {
        let mut line = format!("  {} degree {} dim {} genus {}", a.name, a.degree, a.dimension, a.genus);
        match &a.series {
            Some(s) => write!(line, " series ({})", s.basis.join(", ")).unwrap(),
            None => line.push_str(" unreachable"),
        }
        if let Some(w) = &a.witness {
            write!(line, " [{w}]").unwrap();
        }
        writeln!(out, "{line}").unwrap();
    }
    writeln!(out, "rejected {}", doc.rejected.len()).unwrap();
    for r in &doc.rejected {
        writeln!(out, "  {} {}: {}", r.name, r.reason, r.detail).unwrap();
    }
    out
}

/// Pads a map into `P^3` with a zero coordinate so it lands in `P^4`.
fn into_p4(m: &RationalMap) -> Option<RationalMap> {
    match m.components.len() {
        5 => Some(m.clone()),
        4 => {
            let mut comps = m.components.clone();
            comps.push(MultiPoly::zero(m.nvars()));
            Some(RationalMap { components: comps, field: m.field.clone() })
        }
        _ => None,
    }
}

/// Runs a job and returns the report document.
pub fn run(job: &JobSpec) -> Result<String> {
    let opts = &job.options;
    let text = opts.format == Format::Text;
    match (&job.command, &job.query) {
        (CommandKind::Analyze, _) => {
            let input = job.input.as_ref().expect("checked in from_cli");
            let s = surface_of(&input.map, input, opts, true)?;
            if text {
                Ok(surface_text(&s))
            } else {
                to_json(&surface_to_json(&s))
            }
        }
        (CommandKind::Classes, JobQuery::Enum { h, alpha, beta }) => {
            let h = match (h, &job.input) {
                (Some(h), _) => h.clone(),
                (None, Some(input)) => surface_of(&input.map, input, opts, true)?.lattice.h,
                (None, None) => return Err(Error::Parse("classes needs --h or a map file".into())),
            };
            let classes = enumerate_classes(&EnumQuery::new(h, *alpha, *beta)?)?;
            if text {
                Ok(classes.iter().map(|c| format!("{c}\n")).collect())
            } else {
                to_json(&classes_to_json(classes))
            }
        }
        (CommandKind::Families | CommandKind::Circles { .. }, JobQuery::Family(q)) => {
            let input = job.input.as_ref().expect("checked in from_cli");
            let (map, allow_override, euclidean) = match job.command {
                CommandKind::Circles { on_sphere: false } => {
                    let n = input.map.components.len() - 1;
                    let composed = compose_maps(&inverse_stereographic(n)?, &input.map)?;
                    (composed, false, into_p4(&input.map))
                }
                _ => (input.map.clone(), true, None),
            };
            let s = surface_of(&map, input, opts, allow_override)?;
            let outcome = find_families_on(&s, q, opts.depth_cap)?;
            let witnesses: Option<Vec<String>> = euclidean.map(|e| {
                outcome
                    .accepted
                    .iter()
                    .map(|r| match &r.series {
                        Some(ser) if ser.dim() == 1 => absolute_witness(&e, &ser.basis[0]).as_str().to_string(),
                        _ => "inconclusive".to_string(),
                    })
                    .collect()
            });
            let doc = families_to_json(&s, &outcome, &input.names, witnesses.as_deref());
            if text {
                Ok(surface_text(&s) + &families_text(&doc))
            } else {
                to_json(&doc)
            }
        }
        _ => Err(Error::InvalidQuery("query does not fit the command".into())),
    }
}

/// Entry point shared by the binary: returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = seed_from_env()
        .and_then(|seed| JobSpec::from_cli(&cli, seed))
        .and_then(|(job, output)| run(&job).map(|doc| (doc, output)))
        .and_then(|(doc, output)| match output {
            Some(path) => std::fs::write(path, doc).map_err(Error::from),
            None => {
                print!("{doc}");
                Ok(())
            }
        });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let body = serde_json::json!({ "error": error_kind(&e), "message": e.to_string() });
            eprintln!("{body}");
            exit_code(&e)
        }
    }
}

/// Formats a polynomial with the map file's variable names.
pub fn show(p: &MultiPoly, input: &MapInput) -> String {
    format_poly(p, &input.names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Parse("x".into())), 2);
        assert_eq!(exit_code(&Error::UnsupportedField("x".into())), 3);
        assert_eq!(exit_code(&Error::DepthCap(8)), 4);
        assert_eq!(exit_code(&Error::InvalidQuery("x".into())), 1);
    }

    #[test]
    fn classes_from_h_flag() {
        let cli = Cli::try_parse_from(["nsfam", "classes", "--alpha", "1", "--beta", "-1", "--h", "3e0-e1-e2-e3-e4-e5", "--format", "text"]).unwrap();
        let (job, _) = JobSpec::from_cli(&cli, 0).unwrap();
        let out = run(&job).unwrap();
        assert_eq!(out.lines().count(), 16);
        assert!(out.lines().any(|l| l == "2e0-e1-e2-e3-e4-e5"));
    }

    #[test]
    fn missing_input() {
        let cli = Cli::try_parse_from(["nsfam", "analyze"]).unwrap();
        assert!(matches!(JobSpec::from_cli(&cli, 0), Err(Error::Parse(_))));
        assert_eq!(main_with_args(["nsfam", "families", "--alpha", "1"]), 2);
    }
}
