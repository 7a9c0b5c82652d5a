use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use realgap::commands::{EXIT_ERROR, Options};
use realgap::{parse, run, Command};

/// Vanishing-ideal checks, ideal augmentation and moment/SOS relaxations.
#[derive(Parser)]
#[command(name = "realgap", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Append the cylindrical decomposition of all input polynomials.
    #[arg(long, global = true)]
    dump_cad: bool,
    /// Write one SDPA file per relaxation order into this directory.
    #[arg(long, global = true, value_name = "DIR")]
    sdpa: Option<PathBuf>,
    /// Solver tolerance.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Highest relaxation order.
    #[arg(long, global = true)]
    max_order: Option<u32>,
    /// Tab-separated table for relaxation values.
    #[arg(long, global = true)]
    tsv: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Is the ideal real, I(V(I)) = I?
    CheckReal { file: PathBuf },
    /// Does the vanishing ideal of the feasible set equal I?
    CheckIk { file: PathBuf },
    /// Enlarge I until it is the vanishing ideal of the feasible set.
    Augment { file: PathBuf },
    /// Build the relaxations and summarize their block structure.
    Relax { file: PathBuf },
    /// Solve the relaxations order by order.
    Solve { file: PathBuf },
    /// Equality check, augmentation, relaxation values and the no-gap guarantee.
    Report { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR as u8 } else { 0 });
        }
    };
    let (cmd, file) = match &cli.command {
        Cmd::CheckReal { file } => (Command::CheckReal, file),
        Cmd::CheckIk { file } => (Command::CheckIk, file),
        Cmd::Augment { file } => (Command::Augment, file),
        Cmd::Relax { file } => (Command::Relax, file),
        Cmd::Solve { file } => (Command::Solve, file),
        Cmd::Report { file } => (Command::Report, file),
    };
    let fail = |stage: &str, msg: String| {
        eprintln!("error [{stage}]: {msg}");
        ExitCode::from(EXIT_ERROR as u8)
    };
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return fail("read", format!("{}: {e}", file.display())),
    };
    let problem = match parse(&text) {
        Ok(p) => p,
        Err(e) => return fail("parse", format!("{}: {e}", file.display())),
    };
    let opts = Options {
        tol: cli.tol,
        max_order: cli.max_order,
        dump_cad: cli.dump_cad,
        sdpa: cli.sdpa.clone(),
        tsv: cli.tsv,
        name: stem(file),
    };
    match run(cmd, &problem, &opts) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code as u8)
        }
        Err(e) => fail(e.stage, e.message),
    }
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "problem".into())
}
