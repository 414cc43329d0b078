//! `tropmat`: a batch command-line front end for exact tropical linear
//! algebra on valuated matroids.  Every invocation reads JSON files, runs
//! one library operation, and prints a single report object to standard
//! output — canonically formatted, so identical inputs produce identical
//! bytes.  Exit codes: 0 success, 2 validation failure (with a structured
//! error object), 64 usage, 66 unreadable input.

mod failure;
mod run;
mod selftest;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use tropmat_core::json;

#[derive(Parser)]
#[command(
    name = "tropmat",
    version,
    about = "Exact tropical linear algebra on valuated matroids",
    propagate_version = true
)]
struct Cli {
    /// Output format; JSON is canonical, text is a human-readable sketch.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Matroids given by their bases: validation and invariants.
    #[command(subcommand)]
    Matroid(MatroidOp),
    /// Valuated matroids: weights, weak automorphisms, equivalence.
    #[command(subcommand)]
    Vm(VmOp),
    /// The tropical linear space of a valuated matroid.
    #[command(subcommand)]
    Space(SpaceOp),
    /// Tropical-linear equation systems and their partition subspaces.
    #[command(subcommand)]
    Linsub(LinsubOp),
    /// Finitely presented modules over the Boolean semifield.
    #[command(subcommand)]
    Bmod(BmodOp),
    /// Monomial actions of finite groups: classification and normal forms.
    #[command(subcommand)]
    Group(GroupOp),
    /// Pointed rational cones and their realizable ray symmetries.
    #[command(subcommand)]
    Cone(ConeOp),
    /// Seeded randomized self-checks (seed from TROPMAT_SEED, default 0).
    Selftest,
}

#[derive(Subcommand)]
pub enum MatroidOp {
    /// Check the basis-exchange axiom and report basic invariants.
    Validate {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// The automorphism group of the matroid.
    Aut {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// All hyperplanes (flats of corank one).
    Hyperplanes {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// All circuits (minimal dependent sets).
    Circuits {
        #[arg(short, long)]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
pub enum VmOp {
    /// Check the value-exchange condition on the weights.
    Validate {
        #[arg(short, long)]
        input: PathBuf,
        /// Skip the exchange check (weights still must cover the bases).
        #[arg(long = "skip-dw")]
        skip_dw: bool,
    },
    /// Decide whether a permutation is a weak automorphism.
    Waut {
        #[arg(short, long)]
        input: PathBuf,
        /// Cycle notation "(1 3)(2 4)" or a 1-based image array [3,4,1,2].
        #[arg(long)]
        sigma: String,
    },
    /// The full weak automorphism group.
    Wautgroup {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Projective equivalence of two valuated matroids (give -i twice).
    Projeq {
        #[arg(short, long, required = true)]
        input: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
pub enum SpaceOp {
    /// The canonical generating set, one generator per hyperplane.
    Gens {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Membership of a vector, with a combination witness when inside.
    Member {
        #[arg(short, long)]
        input: PathBuf,
        /// Vector file: ["0", "-inf", "3/2", ...].
        #[arg(short = 'x', long = "vector")]
        vector: PathBuf,
    },
    /// The partition subspace of diagonal symmetries.
    Stab {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// The semidirect decomposition H ⋉ V with a multiplicative section.
    Autstructure {
        #[arg(short, long)]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
pub enum LinsubOp {
    /// The partition whose subspace equals the solution group.
    Partition {
        #[arg(short, long)]
        input: PathBuf,
        /// Cap on the ambient dimension for partition enumeration.
        #[arg(long = "max-n")]
        max_n: Option<usize>,
    },
}

#[derive(Subcommand)]
pub enum BmodOp {
    /// Congruence closure of a presentation; classes and representatives.
    Closure {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// The Boolean shadow of a valuated matroid's coordinate module.
    Qm {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Quasi-freeness (all join-irreducibles atomic) of a presentation.
    Quasifree {
        #[arg(short, long)]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
pub enum GroupOp {
    /// Classify homomorphisms into a weak automorphism group.
    Subreps {
        /// Group file: Cayley table or permutation generators.
        #[arg(short, long)]
        group: PathBuf,
        /// Valuated matroid file fixing the target group.
        #[arg(short = 'i', long = "input", short_alias = 'm')]
        input: PathBuf,
    },
    /// Conjugate a finite monomial group to a pure permutation group.
    Monomialize {
        /// Monomial map list: [{"sigma": "(1 2)", "c": ["3","-3"]}, ...].
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Find a diagonal conjugator between two monomial actions.
    Conjugator {
        /// Problem file: {"classes": [[...]], "alpha": [...], "beta": [...]}.
        #[arg(short, long)]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
pub enum ConeOp {
    /// The group of ray permutations realizable by linear symmetries.
    Perms {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// The partition subspace of diagonal (per-ray scaling) symmetries.
    Stab {
        #[arg(short, long)]
        input: PathBuf,
    },
}

impl Cmd {
    fn echo(&self) -> String {
        match self {
            Cmd::Matroid(op) => format!("matroid {}", op.name()),
            Cmd::Vm(op) => format!("vm {}", op.name()),
            Cmd::Space(op) => format!("space {}", op.name()),
            Cmd::Linsub(op) => format!("linsub {}", op.name()),
            Cmd::Bmod(op) => format!("bmod {}", op.name()),
            Cmd::Group(op) => format!("group {}", op.name()),
            Cmd::Cone(op) => format!("cone {}", op.name()),
            Cmd::Selftest => "selftest".to_string(),
        }
    }
}

impl MatroidOp {
    fn name(&self) -> &'static str {
        match self {
            MatroidOp::Validate { .. } => "validate",
            MatroidOp::Aut { .. } => "aut",
            MatroidOp::Hyperplanes { .. } => "hyperplanes",
            MatroidOp::Circuits { .. } => "circuits",
        }
    }
}

impl VmOp {
    fn name(&self) -> &'static str {
        match self {
            VmOp::Validate { .. } => "validate",
            VmOp::Waut { .. } => "waut",
            VmOp::Wautgroup { .. } => "wautgroup",
            VmOp::Projeq { .. } => "projeq",
        }
    }
}

impl SpaceOp {
    fn name(&self) -> &'static str {
        match self {
            SpaceOp::Gens { .. } => "gens",
            SpaceOp::Member { .. } => "member",
            SpaceOp::Stab { .. } => "stab",
            SpaceOp::Autstructure { .. } => "autstructure",
        }
    }
}

impl LinsubOp {
    fn name(&self) -> &'static str {
        match self {
            LinsubOp::Partition { .. } => "partition",
        }
    }
}

impl BmodOp {
    fn name(&self) -> &'static str {
        match self {
            BmodOp::Closure { .. } => "closure",
            BmodOp::Qm { .. } => "qm",
            BmodOp::Quasifree { .. } => "quasifree",
        }
    }
}

impl GroupOp {
    fn name(&self) -> &'static str {
        match self {
            GroupOp::Subreps { .. } => "subreps",
            GroupOp::Monomialize { .. } => "monomialize",
            GroupOp::Conjugator { .. } => "conjugator",
        }
    }
}

impl ConeOp {
    fn name(&self) -> &'static str {
        match self {
            ConeOp::Perms { .. } => "perms",
            ConeOp::Stab { .. } => "stab",
        }
    }
}

/// The report envelope: command echo, input digest, payload, exactness
/// flag, and version.  Keys sort on output, so the bytes are reproducible.
fn envelope(command: &str, digest: &str, key: &'static str, payload: Value) -> Value {
    json::object(vec![
        ("command", json!(command)),
        ("exact", json!(true)),
        ("input_digest", json!(digest)),
        (key, payload),
        ("version", json!(env!("CARGO_PKG_VERSION"))),
    ])
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let command = cli.cmd.echo();
    let mut ctx = run::Ctx::new();
    let (key, payload, code) = match run::dispatch(cli.cmd, &mut ctx) {
        Ok(result) => ("result", result, 0),
        Err(f) if f.exit == failure::EXIT_VALIDATION => ("error", f.object(), f.exit),
        Err(f) => {
            eprintln!("tropmat: {}", f.detail);
            return ExitCode::from(f.exit);
        }
    };
    let report = envelope(&command, &ctx.digest(), key, payload);
    match cli.format {
        Format::Json => print!("{}", json::to_canonical_string(&report)),
        Format::Text => {
            let mut out = String::new();
            render_text(&report, 0, &mut out);
            print!("{out}");
        }
    }
    ExitCode::from(code)
}

// ---------------------------------------------------------------------
// Text rendering: an indented sketch of the same report, for humans.

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Short values render on the key's own line; everything else nests.
fn inline_text(v: &Value) -> Option<String> {
    if is_scalar(v) {
        return Some(scalar_text(v));
    }
    match v {
        Value::Array(items) if items.iter().all(is_scalar) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match inline_text(val) {
                    Some(line) => out.push_str(&format!("{pad}{k}: {line}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(val, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match inline_text(item) {
                    Some(line) => out.push_str(&format!("{pad}- {line}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(item, indent + 1, out);
                    }
                }
            }
        }
        scalar => out.push_str(&format!("{pad}{}\n", scalar_text(scalar))),
    }
}
