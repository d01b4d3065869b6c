use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Explore the 24 Peres rays and the parity proofs hidden in them.
#[derive(Debug, Parser)]
#[command(name = "peres", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct FormatArgs {
    /// Emit JSON instead of text.
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV instead of text.
    #[arg(long)]
    pub csv: bool,
}

impl FormatArgs {
    pub fn format(&self) -> Format {
        match (self.json, self.csv) {
            (true, _) => Format::Json,
            (_, true) => Format::Csv,
            _ => Format::Text,
        }
    }
}

#[derive(Debug, Args)]
pub struct JsonArg {
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StructureKind {
    Lines,
    Hexagons,
    Tridents,
    Squares,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindFilter {
    #[value(name = "18-9")]
    R18B9,
    #[value(name = "20-11")]
    R20B11,
    #[value(name = "20-11A")]
    R20B11A,
    #[value(name = "20-11B")]
    R20B11B,
    #[value(name = "22-13")]
    R22B13,
    #[value(name = "24-15")]
    R24B15,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Scan all 2^24 basis subsets.
    Brute,
    /// Odd-weight vectors of the GF(2) null space.
    Kernel,
    /// Geometric constructions and their complements.
    Construct,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the 24 rays.
    Rays(FormatArgs),
    /// List the 24 bases.
    Bases(FormatArgs),
    /// List lines, Hexagons, Tridents or Squares.
    Structures {
        #[arg(long, value_enum)]
        kind: StructureKind,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Enumerate parity proofs with a census.
    Proofs {
        #[arg(long, value_enum)]
        kind: Option<KindFilter>,
        #[arg(long, value_enum, default_value = "kernel")]
        method: Method,
        /// Also run a second method and fail unless both agree.
        #[arg(long)]
        verify_cross: bool,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Check whether a set of bases is a parity proof.
    Verify {
        /// Bases as ray 4-tuples (`1,2,15,16`) or ids.
        #[arg(required = true)]
        bases: Vec<String>,
        #[command(flatten)]
        json: JsonArg,
    },
    /// Kind, criticality and reduction of a parity proof.
    Classify {
        /// Bases as ray 4-tuples (`1,2,15,16`) or ids.
        #[arg(required = true)]
        bases: Vec<String>,
        #[command(flatten)]
        json: JsonArg,
    },
    /// Find a 0/1 assignment or report UNSAT.
    Color {
        /// `all`, or bases as ray 4-tuples or ids separated by spaces or `;`.
        #[arg(long, num_args = 1.., required_unless_present = "rays", conflicts_with = "rays")]
        bases: Vec<String>,
        /// `all`, or ray ids.
        #[arg(long, num_args = 1..)]
        rays: Vec<String>,
        #[command(flatten)]
        json: JsonArg,
    },
    /// The Peres-Mermin square.
    Mermin {
        /// Show the propagation from a 2x2 seed back to the start cell.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        json: JsonArg,
    },
    /// Count the permutations of the rays that preserve the bases.
    Symmetry(JsonArg),
    /// Write the puzzle document.
    Export {
        #[arg(long, value_name = "PATH")]
        puzzle: PathBuf,
        /// Include all 512 proofs with their kinds.
        #[arg(long)]
        include_proofs: bool,
    },
    /// Check a puzzle document against the computed geometry.
    Validate { path: PathBuf },
    /// Serve the puzzle document and the UI directory over HTTP.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        /// Directory holding the built UI.
        #[arg(long)]
        dir: Option<PathBuf>,
        #[arg(long)]
        include_proofs: bool,
    },
}
