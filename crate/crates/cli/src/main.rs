use std::io::{ErrorKind, Write};
use std::process::ExitCode;

use clap::Parser;
use yokonuma_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| {
        let text = serde_json::to_string_pretty(&out.value).expect("JSON values serialise");
        match &cli.output {
            Some(path) => std::fs::write(path, text + "\n").map_err(CliError::from)?,
            None => match writeln!(std::io::stdout().lock(), "{text}") {
                Err(e) if e.kind() != ErrorKind::BrokenPipe => return Err(e.into()),
                _ => {}
            },
        }
        Ok(out.success)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
