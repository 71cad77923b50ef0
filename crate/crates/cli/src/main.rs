//! `epsilon`: command-line front end for the L₁ prover and the Blass translation.
//!
//! Formula arguments use the library grammar; an argument `@path` is read
//! from a file. Structured output is JSON on stdout, diagnostics go to
//! stderr. Exit status is 2 for usage and parse errors and 1 for failed
//! preconditions or round-trip mismatches.

use std::fs;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use epsilon_core::chains::analyze;
use epsilon_core::corpus::{enumerate_l1, faithfulness_mismatches, names, random_l1};
use epsilon_core::kripke::{
    audit_variant, countermodel_k, countermodel_variant, forces_at_star, FrameVariant, KripkeModel,
};
use epsilon_core::syntax::{parse_l1, parse_modal, L1Formula, ModalFormula};
use epsilon_core::tableau::{build_normal_tableau, first_hintikka_formula, is_hintikka};
use epsilon_core::translate::{blass, ModalityRendering, SchemeTag, TranslationScheme};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "epsilon",
    version,
    about = "Decide Leśniewski's L1 and translate it into modal logic K"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Blass,
    Naive,
}

#[derive(Clone, Copy, ValueEnum)]
enum Render {
    Box,
    #[value(name = "O", alias = "o")]
    O,
}

#[derive(Subcommand)]
enum Command {
    /// Decide L1 provability with the normal tableau.
    Prove {
        formula: String,
        /// Also print the tableau as JSON.
        #[arg(long)]
        trace: bool,
    },
    /// Print the modal image of an L1 formula.
    Translate {
        formula: String,
        #[arg(long, value_enum, default_value = "blass")]
        scheme: Scheme,
        #[arg(long, value_enum, default_value = "box")]
        render: Render,
    },
    /// Print a Kripke model falsifying the Blass image of an unprovable formula.
    Countermodel {
        formula: String,
        /// Frame variant (see `audit-frames`); defaults to the base frame.
        #[arg(long, default_value = "base")]
        variant: FrameVariant,
    },
    /// Print the chain analysis of a Hintikka formula.
    Chains {
        formula: String,
        /// Analyse the first Hintikka leaf of the formula's tableau instead.
        #[arg(long)]
        reduce: bool,
    },
    /// Evaluate a formula at the star world of a model file.
    Check {
        model: String,
        formula: String,
        /// Read the formula as L1 and check its Blass image.
        #[arg(long)]
        l1: bool,
    },
    /// Compare L1 provability with K-validity of the Blass image over a corpus.
    Roundtrip {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        max_size: usize,
        /// Sample randomly with this seed instead of enumerating.
        #[arg(long)]
        seed: Option<u64>,
        /// Number of random samples when `--seed` is given.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Print the frame and its audited properties for a variant.
    AuditFrames {
        #[arg(long)]
        variant: FrameVariant,
        #[arg(long)]
        n: usize,
    },
}

/// Errors tagged with the exit status they map to.
enum Failure {
    Usage(anyhow::Error),
    Precondition(anyhow::Error),
}

impl Failure {
    fn usage(e: impl Into<anyhow::Error>) -> Self {
        Failure::Usage(e.into())
    }

    fn precondition(e: impl Into<anyhow::Error>) -> Self {
        Failure::Precondition(e.into())
    }
}

fn read_arg(arg: &str) -> Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .with_context(|| format!("cannot read formula file {path}"))
            .map(|s| s.trim().to_string())
            .map_err(Failure::usage),
        None => Ok(arg.to_string()),
    }
}

fn l1_arg(arg: &str) -> Result<L1Formula, Failure> {
    let text = read_arg(arg)?;
    parse_l1(&text).map_err(|e| Failure::usage(anyhow!("{e} in {text:?}")))
}

fn modal_arg(arg: &str) -> Result<ModalFormula, Failure> {
    let text = read_arg(arg)?;
    parse_modal(&text).map_err(|e| Failure::usage(anyhow!("{e} in {text:?}")))
}

fn print_json(value: &impl serde::Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(Failure::precondition)?;
    println!("{text}");
    Ok(())
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Prove { formula, trace } => {
            let phi = l1_arg(&formula)?;
            let tableau = build_normal_tableau(&phi);
            println!(
                "{}",
                if tableau.is_closed() {
                    "PROVABLE"
                } else {
                    "UNPROVABLE"
                }
            );
            if trace {
                print_json(&tableau.root.trace())?;
            }
        }
        Command::Translate {
            formula,
            scheme,
            render,
        } => {
            let phi = l1_arg(&formula)?;
            let scheme = TranslationScheme {
                tag: match scheme {
                    Scheme::Blass => SchemeTag::Blass,
                    Scheme::Naive => SchemeTag::Naive,
                },
                rendering: match render {
                    Render::Box => ModalityRendering::Box,
                    Render::O => ModalityRendering::O,
                },
            };
            println!("{}", scheme.render(&scheme.translate(&phi)));
        }
        Command::Countermodel { formula, variant } => {
            let phi = l1_arg(&formula)?;
            let leaf = first_hintikka_formula(&phi).ok_or_else(|| {
                Failure::precondition(anyhow!(
                    "{} is provable; no countermodel exists",
                    phi.pretty()
                ))
            })?;
            eprintln!("Hintikka leaf: {}", leaf.pretty());
            let model = if variant == FrameVariant::Base {
                countermodel_k(&leaf)
            } else {
                countermodel_variant(&leaf, variant)
            }
            .map_err(Failure::precondition)?;
            print_json(&model)?;
        }
        Command::Chains { formula, reduce } => {
            let phi = l1_arg(&formula)?;
            let psi = if reduce {
                first_hintikka_formula(&phi).ok_or_else(|| {
                    Failure::precondition(anyhow!(
                        "{} is provable; it has no Hintikka leaf",
                        phi.pretty()
                    ))
                })?
            } else if is_hintikka(&phi) {
                phi
            } else {
                return Err(Failure::precondition(anyhow!(
                    "{} is not a Hintikka formula (use --reduce)",
                    phi.pretty()
                )));
            };
            print_json(&analyze(&psi).map_err(Failure::precondition)?)?;
        }
        Command::Check { model, formula, l1 } => {
            let text = fs::read_to_string(&model)
                .with_context(|| format!("cannot read model file {model}"))
                .map_err(Failure::usage)?;
            let m: KripkeModel = serde_json::from_str(&text)
                .with_context(|| format!("invalid model file {model}"))
                .map_err(Failure::usage)?;
            let f = if l1 {
                blass(&l1_arg(&formula)?)
            } else {
                modal_arg(&formula)?
            };
            println!("{}", forces_at_star(&m, &f).map_err(Failure::precondition)?);
        }
        Command::Roundtrip {
            vars,
            max_size,
            seed,
            samples,
        } => {
            if !(1..=26).contains(&vars) || max_size == 0 {
                return Err(Failure::usage(anyhow!(
                    "need 1 <= vars <= 26 and max-size >= 1"
                )));
            }
            let ns = names(vars);
            let corpus = match seed {
                Some(seed) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    (0..samples)
                        .map(|_| random_l1(&mut rng, &ns, max_size))
                        .collect()
                }
                None => enumerate_l1(&ns, max_size),
            };
            let mismatches = faithfulness_mismatches(&corpus);
            if mismatches.is_empty() {
                println!("OK: {} formulas, 0 mismatches", corpus.len());
            } else {
                print_json(&mismatches)?;
                eprintln!(
                    "FAIL: {} formulas, {} mismatches",
                    corpus.len(),
                    mismatches.len()
                );
                return Ok(ExitCode::from(1));
            }
        }
        Command::AuditFrames { variant, n } => print_json(&audit_variant(variant, n))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
