use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use fracspec::cli::{run, CliError, RunConfig};

fn write_output(config: &RunConfig, data: &str) -> Result<(), CliError> {
    match &config.output {
        Some(path) => std::fs::write(path, data)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(data.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let result = run(&config).and_then(|out| {
        for note in &out.notes {
            eprintln!("{note}");
        }
        write_output(&config, &out.csv)?;
        out.failure.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
