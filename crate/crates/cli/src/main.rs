use std::io::Read;
use std::process::ExitCode;

use clap::Parser;
use jetforge_cli::{budget, error_kind, exit_code, parse_input, run, Options};
use serde_json::json;

/// Jet schemes of affine varieties.
///
/// The session is `ring Q[x,y]; ideal (x^2 - y^3); <command> [flags]`, given
/// as an argument, a file, or on standard input.
#[derive(Parser, Debug)]
#[command(name = "jetforge", version)]
struct Cli {
    /// Session text.
    session: Option<String>,
    /// Read the session from a file.
    #[arg(long, short, conflicts_with = "session")]
    file: Option<String>,
    #[command(flatten)]
    options: Options,
}

fn emit(value: &impl serde::Serialize, pretty: bool) {
    let out = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    println!("{}", out.expect("reports serialize"));
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("JETFORGE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("JETFORGE_THREADS must be a positive integer, got `{raw}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(1);
    }
    let text = match (&cli.session, &cli.file) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: cannot read {path}: {e}");
                return ExitCode::from(1);
            }
        },
        (None, None) => {
            let mut t = String::new();
            if let Err(e) = std::io::stdin().read_to_string(&mut t) {
                eprintln!("error: cannot read standard input: {e}");
                return ExitCode::from(1);
            }
            t
        }
    };
    let session = match parse_input(&text) {
        Ok(s) => s,
        Err(d) => {
            eprintln!("error: {d}");
            emit(
                &json!({"error": {"kind": "syntax", "message": d.message, "line": d.line, "column": d.column}}),
                cli.options.pretty,
            );
            return ExitCode::from(1);
        }
    };
    let pretty = cli.options.pretty || session.invocation.options.pretty;
    let budget = budget(&session.invocation.options, &cli.options);
    match run(&session, &budget) {
        Ok(report) => {
            emit(&report, pretty);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            emit(
                &json!({"command": session.command_text, "error": {"kind": error_kind(&e), "message": e.to_string()}}),
                pretty,
            );
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
