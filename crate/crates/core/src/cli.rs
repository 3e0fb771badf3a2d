//! Command-line front end. [`run`] is pure apart from reading input files
//! and honoring `--output`, so it is tested in-process.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::constellation::{parse_constellation, Constellation};
use crate::error::Error;
use crate::hurwitz::{
    apply_braid_word, bundle_tuple, hurwitz_orbit, monodromy_movie, BraidWord, DEFAULT_ORBIT_CAP,
};
use crate::ledger::{leaf_euler_check, LedgerReport};
use crate::pipeline::{belyi_pipeline, quad_pipeline};
use crate::surface::{
    barycentric_subdivide, dessin_constellation, dual_matching, edge_flip, extract_dessin,
    merge_to_hexagons, parse_map, validate_quadrangulation, MapFile,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: u8,
    pub stdout_payload: String,
    pub diagnostics: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome {
            exit_code: EXIT_OK,
            stdout_payload: stdout,
            diagnostics: String::new(),
        }
    }

    fn fail(code: u8, stdout: String, diagnostics: String) -> Self {
        CommandOutcome {
            exit_code: code,
            stdout_payload: stdout,
            diagnostics,
        }
    }

    fn from_error(e: &Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::CycleNotation(_) => EXIT_INPUT,
            _ => EXIT_INVALID,
        };
        Self::fail(code, String::new(), format!("error: {e}\n"))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "branchcover",
    version,
    about = "Branched covers of surfaces as permutation data"
)]
struct Cli {
    /// Write the payload to this file instead of standard out.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a constellation or map file.
    Validate { file: PathBuf },
    /// Print the genus of a constellation or map.
    Genus { file: PathBuf },
    /// Emit the surface-bundle fiber constellation of the given degree.
    Bundle {
        #[arg(long)]
        degree: usize,
    },
    /// Apply a braid word to a constellation.
    Braid {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Enumerate the Hurwitz orbit of a constellation up to conjugation.
    Orbit {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        cap: usize,
    },
    /// Braid the bundle constellation letter by letter.
    Movie {
        #[arg(long)]
        degree: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        word: String,
    },
    /// Plumb new sheets onto a constellation.
    Plumb {
        file: PathBuf,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        anchor: usize,
    },
    /// Belyi monodromy of a map's barycentric subdivision, with its ledger.
    Belyi { file: PathBuf },
    /// Barycentric subdivision with vertex types 0, 1, 2.
    Subdivide { file: PathBuf },
    /// Flip the edge containing the given dart of a triangulated map.
    Flip {
        file: PathBuf,
        #[arg(long)]
        edge: usize,
    },
    /// Check a {0,1}-labeled quadrangulation.
    Quads { file: PathBuf },
    /// Perfect matching of the faces of a quadrangulation.
    Match { file: PathBuf },
    /// Fuse matched quadrilaterals into hexagons.
    Merge { file: PathBuf },
    /// Evaluate the counting identities for a constellation or map.
    Ledger {
        file: PathBuf,
        /// Tab-separated output.
        #[arg(long)]
        tsv: bool,
    },
}

enum Input {
    Constellation(Constellation),
    Map(MapFile),
}

fn read(path: &Path) -> Result<String, CommandOutcome> {
    std::fs::read_to_string(path).map_err(|e| {
        CommandOutcome::fail(
            EXIT_INPUT,
            String::new(),
            format!("error: cannot read {}: {e}\n", path.display()),
        )
    })
}

fn load(path: &Path) -> Result<Input, CommandOutcome> {
    let text = read(path)?;
    let header = text
        .lines()
        .map(crate::constellation::content)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let parsed = match header {
        "constellation" => parse_constellation(&text).map(Input::Constellation),
        "map" => parse_map(&text).map(Input::Map),
        other => Err(Error::parse(
            1,
            format!("expected 'constellation' or 'map', found {other:?}"),
        )),
    };
    parsed.map_err(|e| CommandOutcome::from_error(&e))
}

fn load_constellation(path: &Path) -> Result<Constellation, CommandOutcome> {
    match load(path)? {
        Input::Constellation(c) => Ok(c),
        Input::Map(_) => Err(CommandOutcome::fail(
            EXIT_INPUT,
            String::new(),
            "error: expected a constellation file\n".into(),
        )),
    }
}

fn load_map(path: &Path) -> Result<MapFile, CommandOutcome> {
    match load(path)? {
        Input::Map(m) => Ok(m),
        Input::Constellation(_) => Err(CommandOutcome::fail(
            EXIT_INPUT,
            String::new(),
            "error: expected a map file\n".into(),
        )),
    }
}

fn load_labeled(path: &Path) -> Result<crate::surface::LabeledMap, CommandOutcome> {
    match load_map(path)? {
        MapFile::Labeled(lm) => Ok(lm),
        MapFile::Plain(_) => Err(CommandOutcome::fail(
            EXIT_INVALID,
            String::new(),
            "error: the map carries no vertex labels\n".into(),
        )),
    }
}

fn ledger_outcome(mut out: String, ledger: &LedgerReport, tsv: bool) -> CommandOutcome {
    out.push_str(&if tsv {
        ledger.to_tsv()
    } else {
        ledger.to_string()
    });
    if ledger.all_passed {
        CommandOutcome::ok(out)
    } else {
        CommandOutcome::fail(EXIT_INVALID, out, "error: ledger identity failed\n".into())
    }
}

/// Comment-prefixed ledger, so the payload stays a valid constellation file.
fn commented(ledger: &LedgerReport) -> String {
    ledger.lines.iter().map(|l| format!("# {l}\n")).collect()
}

fn execute(command: Command) -> Result<CommandOutcome, CommandOutcome> {
    let err = |e: Error| CommandOutcome::from_error(&e);
    Ok(match command {
        Command::Validate { file } => match load(&file)? {
            Input::Constellation(c) => {
                let r = c.validate();
                if r.is_valid() {
                    CommandOutcome::ok(r.to_string())
                } else {
                    CommandOutcome::fail(
                        EXIT_INVALID,
                        r.to_string(),
                        "error: invalid constellation\n".into(),
                    )
                }
            }
            Input::Map(m) => {
                let r = m.map().validate();
                let mut out = r.to_string();
                if let Some(lm) = m.labeled() {
                    let [a, b, c] = lm.label_counts();
                    let _ = writeln!(out, "labels 0:{a} 1:{b} 2:{c}");
                }
                if r.is_valid() {
                    CommandOutcome::ok(out)
                } else {
                    CommandOutcome::fail(EXIT_INVALID, out, "error: invalid map\n".into())
                }
            }
        },
        Command::Genus { file } => {
            let chi = match load(&file)? {
                Input::Constellation(c) => c.euler_characteristic().map_err(err)?,
                Input::Map(m) => m.map().euler_characteristic().map_err(err)?,
            };
            if chi.rem_euclid(2) != 0 {
                return Err(CommandOutcome::fail(
                    EXIT_INVALID,
                    String::new(),
                    format!("error: odd euler characteristic {chi}\n"),
                ));
            }
            CommandOutcome::ok(format!("{}\n", (2 - chi) / 2))
        }
        Command::Bundle { degree } => {
            CommandOutcome::ok(bundle_tuple(degree).map_err(err)?.to_file_string())
        }
        Command::Braid { file, word } => {
            let c = load_constellation(&file)?;
            let word: BraidWord = word.parse().map_err(err)?;
            CommandOutcome::ok(apply_braid_word(&c, &word).map_err(err)?.to_file_string())
        }
        Command::Orbit { file, cap } => {
            let c = load_constellation(&file)?;
            let orbit = hurwitz_orbit(&c, cap).map_err(err)?;
            let mut out = format!(
                "# orbit size {}\n# truncated {}\n",
                orbit.size,
                if orbit.truncated { "yes" } else { "no" }
            );
            for r in &orbit.representatives {
                out.push_str(&r.to_file_string());
            }
            if orbit.truncated {
                CommandOutcome::fail(
                    EXIT_CAP,
                    out,
                    format!("error: orbit exceeds the cap of {cap} forms\n"),
                )
            } else {
                CommandOutcome::ok(out)
            }
        }
        Command::Movie { degree, word } => {
            let word: BraidWord = word.parse().map_err(err)?;
            let movie = monodromy_movie(degree, &word).map_err(err)?;
            let mut out = format!(
                "# frames {}\n# closes up {}\n",
                movie.frames.len(),
                if movie.closes_up { "yes" } else { "no" }
            );
            for (i, f) in movie.frames.iter().enumerate() {
                let _ = writeln!(out, "# frame {i}");
                out.push_str(&f.to_file_string());
            }
            out.push_str("# final canonical form\n");
            out.push_str(&movie.final_canonical.to_file_string());
            CommandOutcome::ok(out)
        }
        Command::Plumb {
            file,
            count,
            anchor,
        } => {
            let c = load_constellation(&file)?;
            CommandOutcome::ok(c.plumb(count, anchor).map_err(err)?.to_file_string())
        }
        Command::Belyi { file } => {
            let m = load_map(&file)?;
            let outcome = belyi_pipeline(m.map()).map_err(err)?;
            let out = outcome.constellation.to_file_string() + &commented(&outcome.ledger);
            if outcome.ledger.all_passed {
                CommandOutcome::ok(out)
            } else {
                CommandOutcome::fail(EXIT_INVALID, out, "error: ledger identity failed\n".into())
            }
        }
        Command::Subdivide { file } => {
            let m = load_map(&file)?;
            CommandOutcome::ok(
                barycentric_subdivide(m.map())
                    .map_err(err)?
                    .to_file_string(),
            )
        }
        Command::Flip { file, edge } => {
            let m = load_map(&file)?;
            CommandOutcome::ok(edge_flip(m.map(), edge).map_err(err)?.to_file_string())
        }
        Command::Quads { file } => {
            let lm = load_labeled(&file)?;
            let r = validate_quadrangulation(&lm);
            if r.valid && r.identity_holds {
                CommandOutcome::ok(r.to_string())
            } else {
                CommandOutcome::fail(
                    EXIT_INVALID,
                    r.to_string(),
                    "error: not a valid quadrangulation\n".into(),
                )
            }
        }
        Command::Match { file } => {
            let lm = load_labeled(&file)?;
            CommandOutcome::ok(dual_matching(&lm).map_err(err)?.to_string())
        }
        Command::Merge { file } => {
            let lm = load_labeled(&file)?;
            let m = dual_matching(&lm).map_err(err)?;
            CommandOutcome::ok(merge_to_hexagons(&lm, &m).map_err(err)?.to_file_string())
        }
        Command::Ledger { file, tsv } => match load(&file)? {
            Input::Constellation(c) => {
                let mut ledger = LedgerReport::default();
                ledger.push(leaf_euler_check(&c).map_err(err)?);
                ledger.push(c.parity_check().map_err(err)?);
                ledger_outcome(String::new(), &ledger, tsv)
            }
            Input::Map(MapFile::Plain(m)) => {
                let outcome = belyi_pipeline(&m).map_err(err)?;
                ledger_outcome(String::new(), &outcome.ledger, tsv)
            }
            Input::Map(MapFile::Labeled(lm)) => {
                if lm.label_counts()[2] > 0 {
                    let c =
                        dessin_constellation(&extract_dessin(&lm).map_err(err)?).map_err(err)?;
                    let mut ledger = LedgerReport::default();
                    ledger.push(leaf_euler_check(&c).map_err(err)?);
                    ledger.push(c.parity_check().map_err(err)?);
                    ledger_outcome(String::new(), &ledger, tsv)
                } else {
                    let outcome = quad_pipeline(&lm).map_err(err)?;
                    ledger_outcome(String::new(), &outcome.ledger, tsv)
                }
            }
        },
    })
}

/// Parses `args` (program name first) and runs one command.
pub fn run<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandOutcome::ok(text),
                _ => CommandOutcome::fail(EXIT_INPUT, String::new(), text),
            };
        }
    };
    let mut outcome = execute(cli.command).unwrap_or_else(|o| o);
    if let Some(path) = cli.output {
        if let Err(e) = std::fs::write(&path, &outcome.stdout_payload) {
            return CommandOutcome::fail(
                EXIT_INPUT,
                String::new(),
                format!("error: cannot write {}: {e}\n", path.display()),
            );
        }
        outcome.stdout_payload.clear();
    }
    outcome
}
