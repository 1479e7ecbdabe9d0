//! `morita`: run manifests of exact computations and replay certificates.

mod cert;
mod manifest;
mod tasks;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use manifest::{Manifest, SCHEMA_VERSION};
use tasks::{TaskReport, Verdict};

const EXIT_FAIL: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(name = "morita", version, about = "Exact computations for Morita rings and Gorenstein-projective modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every task in a manifest and print the JSON report.
    Run {
        manifest: PathBuf,
        /// Directory for `report.json` and certificates.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run only the task with this id.
        #[arg(long)]
        task: Option<String>,
        /// Omit the timestamp so reports are byte-for-byte reproducible.
        #[arg(long)]
        no_timestamp: bool,
    },
    /// Load and validate a manifest without running its tasks.
    Check { manifest: PathBuf },
    /// Replay a window certificate.
    Verify { certificate: PathBuf },
}

#[derive(Serialize)]
struct Report<'a> {
    schema_version: u32,
    manifest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    timestamp: Option<u64>,
    reports: &'a [TaskReport],
}

fn exit_code(reports: &[TaskReport]) -> u8 {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        EXIT_FAIL
    } else if reports.iter().any(|r| r.verdict == Verdict::Inconclusive) {
        EXIT_INCONCLUSIVE
    } else {
        0
    }
}

fn load(path: &Path) -> Result<Manifest, u8> {
    Manifest::load(path).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_ERROR
    })
}

fn run(path: &Path, task: Option<&str>, out: Option<&Path>, no_timestamp: bool) -> Result<u8, u8> {
    let mut m = load(path)?;
    if let Some(id) = task {
        m.tasks.retain(|t| t.id == id);
        if m.tasks.is_empty() {
            eprintln!("error: unknown task '{id}'");
            return Err(EXIT_ERROR);
        }
    }
    let dir = out.unwrap_or(Path::new("."));
    if let Some(o) = out {
        std::fs::create_dir_all(o).map_err(|e| {
            eprintln!("error: cannot create {}: {e}", o.display());
            EXIT_ERROR
        })?;
    }
    let reports = tasks::run_all(&m, dir);
    let timestamp = (!no_timestamp).then(|| {
        std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0)
    });
    let report = Report {
        schema_version: SCHEMA_VERSION,
        manifest: path.display().to_string(),
        timestamp,
        reports: &reports,
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    match out {
        Some(o) => std::fs::write(o.join("report.json"), &text).map_err(|e| {
            eprintln!("error: cannot write report: {e}");
            EXIT_ERROR
        })?,
        None => print!("{text}"),
    }
    for r in &reports {
        eprintln!("{}: {:?} ({})", r.task, r.verdict, r.message);
    }
    Ok(exit_code(&reports))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { 0 });
        }
    };
    let code = match cli.command {
        Command::Run {
            manifest,
            task,
            out,
            no_timestamp,
        } => run(&manifest, task.as_deref(), out.as_deref(), no_timestamp).unwrap_or_else(|c| c),
        Command::Check { manifest } => match load(&manifest) {
            Ok(m) => {
                println!("ok: {} tasks", m.tasks.len());
                0
            }
            Err(c) => c,
        },
        Command::Verify { certificate } => match cert::verify_file(&certificate) {
            cert::VerifyOutcome::Pass => {
                println!("pass");
                0
            }
            cert::VerifyOutcome::Fail(reason) => {
                println!("fail: {reason}");
                EXIT_FAIL
            }
            cert::VerifyOutcome::Unreadable(reason) => {
                eprintln!("error: {reason}");
                EXIT_ERROR
            }
        },
    };
    ExitCode::from(code)
}
