//! `gamedecomp`: decompose, classify and analyse finite normal-form games
//! given as JSON documents.

mod commands;
mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gamedecomp::game::{game_from_json, DEFAULT_SPACE_CAP};
use gamedecomp::linalg::parse_rational;
use gamedecomp::{Game, GameSpace, Rational, SubspaceKind};
use serde_json::Value;

use crate::commands::Outcome;
use crate::render::{write_csv, Render, DEFAULT_CSV_DIGITS};

#[derive(Parser, Debug)]
#[command(name = "gamedecomp", version, about = "Exact decomposition of finite normal-form games")]
struct Cli {
    /// Output format. CSV is only available for `project`.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Print numbers as decimals rounded to this many places (approximate).
    #[arg(long, value_name = "DIGITS", global = true)]
    decimal: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Split a game into pure-potential, nonstrategic and pure-harmonic parts.
    Decompose(GameArgs),
    /// Report membership in all five subspaces.
    Classify(GameArgs),
    /// Potential function of a potential game.
    Potential {
        #[command(flatten)]
        game: GameArgs,
        /// Constant added to the canonical (zero-sum) potential, e.g. -9/8.
        #[arg(long, value_name = "P/Q", allow_hyphen_values = true)]
        shift: Option<String>,
        /// Also print the raw block vector, defined for every game.
        #[arg(long)]
        experimental_raw: bool,
    },
    /// Print the orthogonal projection onto a subspace of a game space.
    Project {
        /// Game space as n:k1,k2,...
        #[arg(long)]
        space: String,
        #[arg(long, value_parser = parse_kind)]
        kind: SubspaceKind,
    },
    /// Pure equilibria and the uniform mixed profile check.
    Nash(GameArgs),
    /// Run every cross-check on a game and its space.
    Verify(GameArgs),
}

#[derive(Args, Debug)]
struct GameArgs {
    /// Game document, or `-` for standard input.
    file: PathBuf,
    /// Read the payoffs in this space (n:k1,k2,...) instead of the one the
    /// document declares.
    #[arg(long)]
    space: Option<String>,
}

fn parse_kind(s: &str) -> std::result::Result<SubspaceKind, String> {
    s.parse().map_err(|e: gamedecomp::Error| e.to_string())
}

fn parse_space(s: &str) -> Result<GameSpace> {
    let space: GameSpace = s.parse()?;
    warn_trivial_players(&space);
    Ok(space)
}

fn warn_trivial_players(space: &GameSpace) {
    for (i, &k) in space.strategy_counts().iter().enumerate() {
        if k == 1 {
            eprintln!("warning: player {} has a single strategy", i + 1);
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).context("reading standard input")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_game(args: &GameArgs) -> Result<Game> {
    let text = read_input(&args.file)?;
    let mut value: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", args.file.display()))?;
    if let Some(text) = &args.space {
        let space: GameSpace = text.parse()?;
        let Some(obj) = value.as_object_mut() else {
            bail!("{}: top level must be an object", args.file.display());
        };
        obj.insert("players".into(), space.players().into());
        obj.insert("strategies".into(), space.strategy_counts().into());
    }
    let game = game_from_json(&value, DEFAULT_SPACE_CAP).with_context(|| format!("loading {}", args.file.display()))?;
    warn_trivial_players(game.space());
    Ok(game)
}

fn run(cli: &Cli) -> Result<Outcome> {
    let r = Render::new(cli.decimal);
    if cli.format == Format::Csv && !matches!(cli.command, Command::Project { .. }) {
        bail!("--format csv is only available for the project command");
    }
    match &cli.command {
        Command::Decompose(args) => commands::decompose(&load_game(args)?, r),
        Command::Classify(args) => commands::classify(&load_game(args)?),
        Command::Potential { game, shift, experimental_raw } => {
            let shift = match shift {
                Some(text) => parse_rational(text)?,
                None => Rational::default(),
            };
            commands::potential(&load_game(game)?, &shift, *experimental_raw, r)
        }
        Command::Project { space, kind } => {
            let space = parse_space(space)?;
            let m = commands::project(&space, *kind)?;
            if cli.format == Format::Csv {
                let digits = cli.decimal.unwrap_or(DEFAULT_CSV_DIGITS);
                eprintln!("note: CSV entries are decimals rounded to {digits} places (approximate)");
                let mut out = io::stdout().lock();
                write_csv(&mut out, &m, digits)?;
                return Ok(Outcome { doc: Value::Null, failure: None });
            }
            Ok(Outcome { doc: commands::project_json(&space, *kind, &m, r), failure: None })
        }
        Command::Nash(args) => commands::nash(&load_game(args)?),
        Command::Verify(args) => commands::verify(&load_game(args)?),
    }
}

fn emit(doc: &Value) -> io::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, doc)?;
    writeln!(out)?;
    out.flush()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if !outcome.doc.is_null() {
                match emit(&outcome.doc) {
                    Err(e) if e.kind() == io::ErrorKind::BrokenPipe => return ExitCode::SUCCESS,
                    Err(e) => {
                        eprintln!("error: writing output: {e}");
                        return ExitCode::FAILURE;
                    }
                    Ok(()) => {}
                }
            }
            match outcome.failure {
                Some(message) => {
                    eprintln!("error: {message}");
                    ExitCode::FAILURE
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
