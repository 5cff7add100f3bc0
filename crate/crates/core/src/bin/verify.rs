use clap::Parser;
use gaudin_duality::runner::{self, Limits, Mode, SpecFile, Status};
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

/// Exact verification of Gaudin-model dualities from a JSON spec file or a built-in preset.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    /// Spec file: {"instances": [...]}.
    spec: Option<PathBuf>,
    /// Built-in suite: paper-core or neumann.
    #[arg(long, conflicts_with = "spec")]
    preset: Option<String>,
    /// Rank for the neumann preset.
    #[arg(long = "M")]
    m: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Keep canonical variables symbolic (default).
    #[arg(long, conflicts_with = "sampled")]
    symbolic: bool,
    /// Substitute seeded random rationals for canonical variables.
    #[arg(long)]
    sampled: bool,
    /// Write the JSON-lines report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest accepted M or N.
    #[arg(long, default_value_t = Limits::default().max_rank)]
    max_rank: usize,
    /// Abort an instance whose spectral polynomial exceeds this many terms.
    #[arg(long, default_value_t = Limits::default().max_terms)]
    max_terms: usize,
}

fn load(args: &Args) -> Result<SpecFile, String> {
    match (&args.spec, &args.preset) {
        (Some(path), None) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        (None, Some(name)) => runner::preset(name, args.m).ok_or_else(|| format!("unknown preset {name:?}")),
        _ => Err("give a spec file or --preset".into()),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let spec = match load(&args) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let limits = Limits { max_rank: args.max_rank, max_terms: args.max_terms };
    let prepared = match runner::prepare_all(&spec, &limits) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("validation error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(j) = args.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mode = if args.sampled { Mode::Sampled } else { Mode::Symbolic };
    let start = Instant::now();
    let reports = runner::run_all(&spec, &prepared, mode, &limits);

    let mut lines = String::new();
    for r in &reports {
        lines.push_str(&serde_json::to_string(r).expect("serializable"));
        lines.push('\n');
    }
    let written = match &args.out {
        Some(path) => fs::write(path, &lines).map_err(|e| format!("{}: {e}", path.display())),
        None => io::stdout().write_all(lines.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }

    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let (pass, fail, error) = (count(Status::Pass), count(Status::Fail), count(Status::Error));
    for r in reports.iter().filter(|r| r.status != Status::Pass) {
        eprintln!("{:?} #{} {:?}: {}", r.status, r.index, r.instance.kind, r.witness.as_deref().unwrap_or(""));
    }
    eprintln!(
        "{} instances: {pass} pass, {fail} fail, {error} error in {:.2}s",
        reports.len(),
        start.elapsed().as_secs_f64()
    );
    if pass == reports.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
