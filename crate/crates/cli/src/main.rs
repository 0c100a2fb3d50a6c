use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use photomom_cli::{run, CliError, Command, Config, Format};

/// Polariton kinematics, cavity photon numbers and optical forces.
#[derive(Debug, Parser)]
#[command(name = "photomom", version)]
struct Cli {
    command: Command,
    /// TOML config, or a JSON result whose embedded config is rerun.
    #[arg(long)]
    config: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Defaults to json for a `.json` output path, csv otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Evaluate rows on one thread.
    #[arg(long)]
    serial: bool,
    /// `key=value` or `section.key=value`; wins over the config file.
    overrides: Vec<String>,
}

fn report(err: &CliError) -> ExitCode {
    let line = serde_json::json!({
        "error": err.kind(),
        "exit_code": err.exit_code(),
        "message": err.to_string(),
    });
    eprintln!("{line}");
    ExitCode::from(err.exit_code() as u8)
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    let config = Config::load(&cli.config, &cli.overrides, cli.command)?;
    let table = run(cli.command, &config, !cli.serial)?;
    let format = cli.format.unwrap_or_else(|| match &cli.out {
        Some(p) if p.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) => Format::Json,
        _ => Format::Csv,
    });
    let text = table.render(format, &config)?;
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            return report(&CliError::Config(first.trim_start_matches("error: ").to_string()));
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => report(&e),
    }
}
