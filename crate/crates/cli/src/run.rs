//! Subcommand dispatch. Exit codes: 0 success (including UNREALIZABLE
//! verdicts), 1 domain error, 2 parse error.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use smale_flows::{
    alexander_from_presentation, alexander_of_flow, branch_line_order, compose_split,
    compose_sum, count_closed_orbits, enumerate_orbits, fixed_point_variant, invariants_of,
    linking_attractor_repeller, linking_number, realize_any_knot, validate,
    validate_simple_flow_linking_matrix, FlowDescriptor, KnotType, LaurentPoly, OrbitWord,
};

use crate::doc::{ar_link_label, parse_document, Document, FlowDoc};

#[derive(Debug)]
pub enum CliError {
    /// Malformed input text or document (exit 2).
    Parse(String),
    /// Well-formed input describing invalid mathematics (exit 1).
    Domain(String),
}

impl CliError {
    pub fn domain(e: impl Display) -> Self {
        Self::Domain(e.to_string())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Parse(_) => 2,
            Self::Domain(_) => 1,
        }
    }
}

impl Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Parse(m) | Self::Domain(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "smale-flows",
    version,
    about = "Knot-theoretic invariants of nonsingular Smale flows on the 3-sphere"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List (or count) the closed orbits of a template document up to a period
    Orbits {
        /// Template document (kind = template)
        #[arg(long)]
        input: PathBuf,
        /// Largest period to enumerate
        #[arg(long, default_value_t = 1)]
        max_period: usize,
        /// Print "period count" lines instead of the orbit words
        #[arg(long)]
        count_only: bool,
    },
    /// Linking number of two orbit words on the standard Lorenz template
    Link {
        /// First orbit word, e.g. xy
        word1: String,
        /// Second orbit word, e.g. xxy
        word2: String,
    },
    /// Alexander polynomial from a linking matrix, a group presentation, or a knot expression
    Alex {
        /// Saddle, presentation, or knot document
        #[arg(long, conflicts_with = "knot")]
        input: Option<PathBuf>,
        /// Knot expression, e.g. "torus(2,3) # torus(2,3)"
        knot: Option<String>,
        /// Print the raw determinant instead of the normalized polynomial
        #[arg(long)]
        raw: bool,
        /// For saddle documents: use the repeller linking matrix
        #[arg(long)]
        repeller: bool,
    },
    /// Decide realizability of a Lorenz-Smale configuration proposal
    Classify {
        /// Proposal document (kind = proposal)
        #[arg(long)]
        input: PathBuf,
    },
    /// Build new flow descriptors from old ones
    Compose {
        #[command(subcommand)]
        operation: ComposeOp,
    },
    /// Attractor-repeller linking number product from structure matrices
    Franks {
        /// Flow, saddle, or template document
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum ComposeOp {
    /// Connected-sum move: attractor k1 # k2
    Sum {
        /// Two flow documents
        #[arg(long = "input", num_args = 1, required = true)]
        inputs: Vec<PathBuf>,
        /// Verify that the Alexander polynomial multiplies (reported on stderr)
        #[arg(long)]
        check_alexander: bool,
    },
    /// Split move: attractor k1, repeller k2, linking number one
    Split {
        /// Two flow documents
        #[arg(long = "input", num_args = 1, required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Simple flow with the given attractor knot and meridianal repeller
    Realize {
        /// Knot expression, e.g. "torus(2,3)"
        knot: String,
    },
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_document(path: &Path) -> Result<Document, CliError> {
    parse_document(&read_file(path)?)
        .map_err(|e| match e {
            CliError::Parse(m) => CliError::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
}

fn parse_word(s: &str) -> Result<OrbitWord, CliError> {
    s.parse().map_err(CliError::domain)
}

pub fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Orbits {
            input,
            max_period,
            count_only,
        } => cmd_orbits(&input, max_period, count_only),
        Command::Link { word1, word2 } => cmd_link(&word1, &word2),
        Command::Alex {
            input,
            knot,
            raw,
            repeller,
        } => cmd_alex(input.as_deref(), knot.as_deref(), raw, repeller),
        Command::Classify { input } => cmd_classify(&input),
        Command::Compose { operation } => cmd_compose(operation),
        Command::Franks { input } => cmd_franks(&input),
    }
}

fn cmd_orbits(input: &Path, max_period: usize, count_only: bool) -> Result<(), CliError> {
    let doc = load_document(input)?;
    let Document::Template(template) = doc else {
        return Err(CliError::Parse("orbits expects a template document".into()));
    };
    let a = template.incidence_matrix()?;
    if max_period == 0 {
        return Err(CliError::Domain("--max-period must be at least 1".into()));
    }
    for n in 1..=max_period {
        if count_only {
            let count = count_closed_orbits(&a, n).map_err(CliError::domain)?;
            println!("{n} {count}");
        } else {
            for orbit in enumerate_orbits(&a, n).map_err(CliError::domain)? {
                println!("{orbit}");
            }
        }
    }
    Ok(())
}

fn cmd_link(word1: &str, word2: &str) -> Result<(), CliError> {
    let w1 = parse_word(word1)?;
    let w2 = parse_word(word2)?;
    // Surfaced only to validate the words against the branch line; the
    // linking call re-derives the order internally.
    branch_line_order(&[w1.clone(), w2.clone()]).map_err(CliError::domain)?;
    let lk = linking_number(&w1, &w2).map_err(CliError::domain)?;
    println!("{lk}");
    Ok(())
}

fn cmd_alex(
    input: Option<&Path>,
    knot: Option<&str>,
    raw: bool,
    repeller: bool,
) -> Result<(), CliError> {
    let poly: LaurentPoly = match (input, knot) {
        (Some(path), None) => match load_document(path)? {
            Document::Saddle(saddle) => {
                let l = if repeller {
                    saddle.linking_repeller()?
                } else {
                    saddle.linking_attractor()?
                };
                if raw {
                    l.det_i_minus()
                } else {
                    validate_simple_flow_linking_matrix(&l).map_err(CliError::domain)?
                }
            }
            Document::Presentation(p) => {
                let (pres, phi) = p.resolve()?;
                alexander_from_presentation(&pres, &phi).map_err(CliError::domain)?
            }
            Document::Knot(k) => {
                let knot: KnotType = k.knot.parse().map_err(CliError::domain)?;
                let delta = knot.alexander().map_err(CliError::domain)?;
                if raw {
                    delta
                } else {
                    delta.normalized()
                }
            }
            Document::Flow(f) => {
                let flow = f.descriptor()?;
                alexander_of_flow(&flow).map_err(CliError::domain)?
            }
            _ => {
                return Err(CliError::Parse(
                    "alex expects a saddle, presentation, knot, or flow document".into(),
                ))
            }
        },
        (None, Some(expr)) => {
            let knot: KnotType = expr.parse().map_err(CliError::domain)?;
            let delta = knot.alexander().map_err(CliError::domain)?;
            if raw {
                delta
            } else {
                delta.normalized()
            }
        }
        _ => {
            return Err(CliError::Parse(
                "alex needs either --input FILE or a knot expression".into(),
            ))
        }
    };
    println!("{poly}");
    Ok(())
}

fn cmd_classify(input: &Path) -> Result<(), CliError> {
    let Document::Proposal(doc) = load_document(input)? else {
        return Err(CliError::Parse("classify expects a proposal document".into()));
    };
    let proposal = doc.proposal()?;
    let verdict = if doc.fixed_points {
        fixed_point_variant(&proposal)
    } else {
        validate(&proposal)
    };
    match verdict {
        Ok(config) => {
            println!("REALIZABLE {config}");
            let inv = invariants_of(&config);
            println!("ar_link: {}", ar_link_label(&inv.ar_link));
            println!("|lk(a,r)|: {}", inv.lk_abs);
            println!("Delta_a: {}", inv.delta_attractor);
            println!("Delta_r: {}", inv.delta_repeller);
        }
        Err(reason) => {
            println!("UNREALIZABLE {reason}");
        }
    }
    Ok(())
}

fn load_flow(path: &Path) -> Result<FlowDescriptor, CliError> {
    match load_document(path)? {
        Document::Flow(f) => f.descriptor(),
        _ => Err(CliError::Parse(format!(
            "{}: expected a flow document",
            path.display()
        ))),
    }
}

fn emit_flow(flow: &FlowDescriptor) -> Result<(), CliError> {
    let doc = Document::Flow(FlowDoc::from_descriptor(flow));
    let text = serde_json::to_string_pretty(&doc)
        .map_err(|e| CliError::Domain(format!("cannot serialize flow: {e}")))?;
    println!("{text}");
    Ok(())
}

fn two_inputs(inputs: &[PathBuf]) -> Result<(&Path, &Path), CliError> {
    match inputs {
        [a, b] => Ok((a, b)),
        _ => Err(CliError::Parse(format!(
            "expected exactly two --input files, got {}",
            inputs.len()
        ))),
    }
}

fn cmd_compose(op: ComposeOp) -> Result<(), CliError> {
    match op {
        ComposeOp::Sum {
            inputs,
            check_alexander,
        } => {
            let (a, b) = two_inputs(&inputs)?;
            let f1 = load_flow(a)?;
            let f2 = load_flow(b)?;
            let sum = compose_sum(&f1, &f2).map_err(CliError::domain)?;
            emit_flow(&sum)?;
            if check_alexander {
                let lhs = alexander_of_flow(&sum).map_err(CliError::domain)?;
                let rhs = &alexander_of_flow(&f1).map_err(CliError::domain)?
                    * &alexander_of_flow(&f2).map_err(CliError::domain)?;
                if lhs.equal_up_to_units(&rhs) {
                    eprintln!("check-alexander: PASS");
                } else {
                    eprintln!("check-alexander: FAIL ({lhs} vs {rhs})");
                    return Err(CliError::Domain(
                        "Alexander polynomial failed to multiply under the sum".into(),
                    ));
                }
            }
            Ok(())
        }
        ComposeOp::Split { inputs } => {
            let (a, b) = two_inputs(&inputs)?;
            let split = compose_split(&load_flow(a)?, &load_flow(b)?).map_err(CliError::domain)?;
            emit_flow(&split)
        }
        ComposeOp::Realize { knot } => {
            let k: KnotType = knot.parse().map_err(CliError::domain)?;
            emit_flow(&realize_any_knot(&k))
        }
    }
}

fn cmd_franks(input: &Path) -> Result<(), CliError> {
    let product = match load_document(input)? {
        Document::Flow(f) => f.descriptor()?.lk_ar_abs().clone(),
        Document::Saddle(s) => {
            let data = s.saddle_data()?;
            linking_attractor_repeller([&data])
        }
        Document::Template(t) => {
            let structure = t.structure_matrix()?;
            let l = smale_flows::LinkingMatrix::unlinked(structure);
            l.det_i_minus()
                .as_constant()
                .expect("constant determinant")
                .magnitude()
                .clone()
        }
        _ => {
            return Err(CliError::Parse(
                "franks expects a flow, saddle, or template document".into(),
            ))
        }
    };
    println!("{product}");
    Ok(())
}
