use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kkwcas::cli::{run, Command, ReportFormat};

#[derive(Parser)]
#[command(name = "kkwcas", version, about = "Exact boundary residues and heat coefficients of modified Novikov operators")]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an expression, e.g. "tr( c(dxn) * c(dxn) )".
    Eval {
        expr: String,
        #[arg(long, default_value_t = 4)]
        dim: usize,
    },
    /// Run a verification suite; exit 0 iff every record matches.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long = "report", value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Also compare against a golden snapshot file.
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Worker threads for the suite.
        #[arg(long)]
        parallel: Option<usize>,
        /// Fault injection: flip the sign of b0^2.
        #[arg(long, hide = true)]
        flip_b02: bool,
    },
    /// Compare all suites with the golden snapshots, or rewrite them with --write.
    Goldens {
        #[arg(long)]
        write: bool,
        /// Golden directory (default: $KKW_GOLDEN_DIR, then the crate's goldens/).
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let cmd = match args.cmd {
        Cmd::Eval { expr, dim } => Command::Eval { expr, dim },
        Cmd::Verify { suite, dim, format, golden, parallel, flip_b02 } => {
            Command::Verify { suite, dim, format, golden, parallel, flip_b02 }
        }
        Cmd::Goldens { write, dir } => Command::Goldens { write, dir },
    };
    let mut stdout = std::io::stdout().lock();
    match run(&cmd, &mut stdout) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
