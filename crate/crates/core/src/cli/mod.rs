//! The `normalcut` command line.
//!
//! Exit codes: 0 for a definitive positive answer (valid input, unknot), 1
//! for a definitive negative one (invalid input, knotted), 2 for
//! operational errors. `certify-knotted` exits 1 when it finds a
//! certificate and 0 when the search is inconclusive.

mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::enumeration::{FundamentalMethod, DEFAULT_BOX_VOLUME_CAP};

#[derive(Debug, Parser)]
#[command(name = "normalcut", version, about = "Normal surfaces, unknot recognition and knot group certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest symmetric group degree tried by the knot group search.
    #[arg(long, global = true, default_value_t = 5, value_parser = clap::value_parser!(u8).range(3..=8))]
    pub n_max: u8,
    /// Cap on the number of lattice points visited by enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_BOX_VOLUME_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    pub box_cap: u64,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "NORMALCUT_JOBS")]
    pub jobs: Option<usize>,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a triangulation or PD file (and optionally an unknot certificate).
    Validate {
        file: PathBuf,
        /// Certificate produced by `unknot --json`, checked against FILE.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Skeleton, boundary, homology and Kneser bound of a triangulation.
    Analyze { file: PathBuf },
    /// List vertex or fundamental solutions of the normal surface equations.
    Enumerate {
        file: PathBuf,
        /// List vertex solutions.
        #[arg(long, conflicts_with = "fundamental")]
        vertex: bool,
        /// List fundamental solutions (the default).
        #[arg(long)]
        fundamental: bool,
        /// Only solutions satisfying the quadrilateral condition.
        #[arg(long)]
        admissible: bool,
        #[arg(long, value_enum, default_value_t = MethodArg::Parallelepiped)]
        method: MethodArg,
    },
    /// Decide whether a triangulated knot complement is the unknot.
    Unknot {
        file: PathBuf,
        /// PD code of the same knot; runs the knot group search alongside.
        #[arg(long)]
        pd: Option<PathBuf>,
    },
    /// Look for a representation of the knot group onto a non-cyclic
    /// subgroup of a symmetric group.
    CertifyKnotted { pd: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Parallelepiped,
    BoxScan,
}

impl From<MethodArg> for FundamentalMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Parallelepiped => FundamentalMethod::Parallelepiped,
            MethodArg::BoxScan => FundamentalMethod::BoxScan,
        }
    }
}

/// Result of one invocation: exit code and the report text.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

/// Parses arguments and runs the command without touching the process
/// state, except for the thread pool size and `--out`.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome { code, output: e.render().to_string() };
        }
    };
    match execute(&cli) {
        Ok(outcome) => outcome,
        Err(e) if cli.global.json => {
            let doc = serde_json::json!({ "schema_version": crate::SCHEMA_VERSION, "error": format!("{e:#}") });
            Outcome { code: 2, output: format!("{doc:#}\n") }
        }
        Err(e) => Outcome { code: 2, output: format!("error: {e:#}\n") },
    }
}

fn execute(cli: &Cli) -> anyhow::Result<Outcome> {
    configure_threads(cli.global.jobs);
    let outcome = commands::dispatch(cli)?;
    if let Some(path) = &cli.global.out {
        write_atomic(path, outcome.output.as_bytes())?;
        return Ok(Outcome { code: outcome.code, output: String::new() });
    }
    Ok(outcome)
}

fn configure_threads(jobs: Option<usize>) {
    #[cfg(feature = "parallel")]
    if let Some(n) = jobs.filter(|&n| n > 0) {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            log::debug!("thread pool already configured: {e}");
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = jobs;
}

/// Writes via a temporary file in the same directory and a rename, so an
/// interrupted run never leaves a partial report.
fn write_atomic(path: &Path, bytes: &[u8]) -> anyhow::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().context("output path has no file name")?;
    let tmp = dir.join(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    let result = (|| {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
        std::fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = std::fs::remove_file(&tmp);
    }
    result.with_context(|| format!("writing {}", path.display()))
}

/// Entry point for the binary.
pub fn main_entry() -> i32 {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let outcome = run(std::env::args_os());
    if outcome.code == 2 {
        eprint!("{}", outcome.output);
    } else {
        print!("{}", outcome.output);
    }
    outcome.code
}
