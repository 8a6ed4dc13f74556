use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use yangw::config::{CheckKind, ParamSet, RunConfig};
use yangw::dump::{dump, DumpSelector};
use yangw::error::{ConfigError, RunError};
use yangw::run::{dims, run, summary};

#[derive(Parser)]
#[command(name = "yangw", version, about = "Verify the truncated super Yangian / rectangular W-superalgebra isomorphism")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Clone)]
struct Rect {
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Number of columns.
    #[arg(long)]
    ell: Option<usize>,
    /// Parity sequence of `d`/`e` letters; defaults to d^m e^n.
    #[arg(long)]
    seq: Option<String>,
    /// Extra parameter sets as `m,n,l[,seq]`; repeatable.
    #[arg(long = "params")]
    params: Vec<String>,
}

impl Rect {
    /// Explicit sets, or the default sweep when none are given.
    fn param_sets(&self) -> Result<Vec<ParamSet>, ConfigError> {
        let mut out = Vec::new();
        match (self.m, self.n, self.ell) {
            (Some(m), Some(n), Some(l)) => out.push(match &self.seq {
                Some(s) => ParamSet::new(m, n, l, s.clone()),
                None => ParamSet::standard(m, n, l),
            }),
            (None, None, None) if self.seq.is_none() => {}
            _ => return Err(ConfigError::BadParamSet("--m, --n and --ell go together".into())),
        }
        for p in &self.params {
            out.push(p.parse()?);
        }
        if out.is_empty() {
            out = RunConfig::default_sweep();
        }
        Ok(out)
    }

    fn single(&self) -> Result<ParamSet, ConfigError> {
        let sets = self.param_sets()?;
        match sets.as_slice() {
            [p] => Ok(p.clone()),
            _ => Err(ConfigError::BadParamSet("exactly one rectangle expected".into())),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks and write a JSON report.
    Verify {
        #[command(flatten)]
        rect: Rect,
        /// Maximal degree for span and dimension checks.
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// Comma-separated suites; all by default. `none` selects nothing.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Omit wall times so that reports are reproducible.
        #[arg(long)]
        no_timing: bool,
        #[arg(long, default_value_t = 4000)]
        max_monomials: u64,
        /// Print the JSON report instead of the summary.
        #[arg(long)]
        json: bool,
    },
    /// Tabulate pbw_count against sym_dim.
    Dims {
        #[command(flatten)]
        rect: Rect,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump a rectangle or a generator family as JSON.
    Dump {
        #[command(flatten)]
        rect: Rect,
        #[arg(value_enum)]
        what: DumpSelector,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn write_json(value: &impl serde::Serialize, out: &Option<PathBuf>) -> Result<(), RunError> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{}", text),
    }
    Ok(())
}

fn parse_checks(names: &[String]) -> Result<Vec<CheckKind>, ConfigError> {
    if names.is_empty() {
        return Ok(CheckKind::ALL.to_vec());
    }
    names
        .iter()
        .filter(|s| s.as_str() != "none")
        .map(|s| s.parse())
        .collect()
}

fn execute(cli: Cli) -> Result<bool, RunError> {
    match cli.cmd {
        Command::Verify {
            rect,
            degree,
            checks,
            jobs,
            out,
            no_timing,
            max_monomials,
            json,
        } => {
            let mut cfg = RunConfig::new(rect.param_sets()?)
                .with_checks(parse_checks(&checks)?)
                .with_degree(degree);
            cfg.jobs = jobs;
            cfg.out = out;
            cfg.timing = !no_timing;
            cfg.budget.max_monomials = max_monomials;
            let report = run(&cfg)?;
            if json {
                write_json(&report, &None)?;
            } else {
                print!("{}", summary(&report));
            }
            Ok(report.all_pass)
        }
        Command::Dims { rect, degree, out } => {
            let mut docs = Vec::new();
            for p in rect.param_sets()? {
                docs.push(dims(&p, degree)?);
            }
            let ok = docs.iter().all(|d| d.rows.iter().all(|r| r.equal));
            if docs.len() == 1 {
                write_json(&docs[0], &out)?;
            } else {
                write_json(&docs, &out)?;
            }
            Ok(ok)
        }
        Command::Dump { rect, what, out } => {
            let v = dump(&rect.single()?, what)?;
            write_json(&v, &out)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(RunError::Config(e)) => {
            eprintln!("configuration error: {}", e);
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(3)
        }
    }
}
