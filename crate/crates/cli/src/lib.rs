//! Command-line front end for `peres-core`, plus the puzzle document and
//! the static server that hands it to the browser board.

pub mod args;
pub mod commands;
pub mod error;
pub mod input;
pub mod puzzle;
pub mod serve;

use std::io::Write;

use args::{Cli, Command};
use commands::Report;
use error::CliResult;

/// Runs a parsed command. `serve` blocks until the server stops and
/// prints its address as soon as it is listening.
pub fn run(cli: Cli) -> CliResult<Report> {
    match cli.command {
        Command::Rays(f) => commands::rays(f.format()),
        Command::Bases(f) => commands::bases(f.format()),
        Command::Structures { kind, format } => commands::structures(kind, format.format()),
        Command::Proofs {
            kind,
            method,
            verify_cross,
            format,
        } => commands::proofs(kind, method, verify_cross, format.format()),
        Command::Verify { bases, json } => commands::verify(&bases, json.json),
        Command::Classify { bases, json } => commands::classify(&bases, json.json),
        Command::Color { bases, rays, json } => commands::color(&bases, &rays, json.json),
        Command::Mermin { trace, json } => commands::mermin(trace, json.json),
        Command::Symmetry(json) => commands::symmetry(json.json),
        Command::Export {
            puzzle,
            include_proofs,
        } => commands::export(&puzzle, include_proofs),
        Command::Validate { path } => commands::validate(&path),
        Command::Serve {
            port,
            host,
            dir,
            include_proofs,
        } => {
            let document = puzzle::PuzzleDocument::build(include_proofs)?.to_canonical_json();
            let handle = serve::start(serve::ServeConfig {
                host,
                port,
                dir,
                document,
            })?;
            let mut stdout = std::io::stdout();
            let _ = writeln!(stdout, "serving http://{}", handle.addr());
            let _ = stdout.flush();
            handle.join();
            Ok(Report {
                text: String::new(),
                ok: true,
            })
        }
    }
}
