use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use colfan_cli::{render, run_command, Command, Inputs};

#[derive(Clone, Copy, ValueEnum)]
enum Cmd {
    /// Check C1-C4 on every member, F1 and F2, and the action if given
    Validate,
    /// Decide quasiprojectivity and print the witness forms
    Quasiproj,
    /// Decide whether the fan admits a k-form under the action
    Kform,
    /// Check that the single cone of the fan file is a monoid cone
    Monoid,
    /// Decide whether the monoid cone admits a k-form
    MonoidKform,
    /// Check that the morphism maps the fan into its target fan
    Morphism,
    /// Check a candidate involution against a highest weight
    Lined,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Validate => Command::Validate,
            Cmd::Quasiproj => Command::Quasiproj,
            Cmd::Kform => Command::Kform,
            Cmd::Monoid => Command::Monoid,
            Cmd::MonoidKform => Command::MonoidKform,
            Cmd::Morphism => Command::Morphism,
            Cmd::Lined => Command::Lined,
        }
    }
}

/// Exact checks on colored fans of spherical embeddings.
///
/// Exit status: 0 check passed, 1 check failed, 2 input error.
#[derive(Parser)]
#[command(name = "colfan", version)]
struct Cli {
    #[arg(value_enum)]
    command: Cmd,
    /// Spherical datum (TOML)
    #[arg(long)]
    datum: Option<PathBuf>,
    /// Fan given by its maximal colored cones (TOML)
    #[arg(long)]
    fan: Option<PathBuf>,
    /// Galois action generators (TOML)
    #[arg(long)]
    action: Option<PathBuf>,
    /// Morphism with inline target datum and fan (TOML)
    #[arg(long)]
    morphism: Option<PathBuf>,
    /// Highest weight as comma-separated integers
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Candidate involution (TOML)
    #[arg(long)]
    theta: Option<PathBuf>,
    /// Run the orbit-fan LP as a cross-check in monoid-kform
    #[arg(long)]
    force_lp: bool,
    /// Emit the structured report as JSON
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let inputs = Inputs {
        datum: cli.datum,
        fan: cli.fan,
        action: cli.action,
        morphism: cli.morphism,
        lambda: cli.lambda,
        theta: cli.theta,
        force_lp: cli.force_lp,
    };
    let outcome = run_command(cli.command.into(), &inputs);
    let (text, code) = render(&outcome, cli.json);
    if outcome.is_ok() {
        print!("{text}");
    } else {
        eprint!("{text}");
    }
    ExitCode::from(code as u8)
}
