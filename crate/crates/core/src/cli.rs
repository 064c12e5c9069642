//! Command-line front end. `run` returns the text to print and the exit code
//! so the binary stays a thin wrapper.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::affine::{AffineElement, Convention, ElementJson};
use crate::cartan::RootSystem;
use crate::chains::{decompose_chain, decomposition_json};
use crate::context::Context;
use crate::error::{invalid, Error, Result};
use crate::ktheory::{ideal_in_structure, round_trip};
use crate::mobius::{mobius_deodhar, mobius_oracle, mobius_superregular};
use crate::qbg::{DualUntwisted, QuantumBruhatGraph, Untwisted};
use crate::regularity::{min_root_pairing, Profile, RegularityConfig, Scope};
use crate::verify::{verify_theorem, BoxCoordinates, LambdaBox, SweepOptions};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_DISAGREEMENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REGULARITY: i32 = 3;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "affgrass", version, about = "Quantum Bruhat graphs and the Möbius function on affine Grassmannian elements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Quantum Bruhat graph utilities.
    Qbg {
        #[command(subcommand)]
        command: QbgCommand,
    },
    /// The Möbius function μ̃(x, y) on W⁰.
    Mobius(MobiusArgs),
    /// Saturated chain utilities.
    Chain {
        #[command(subcommand)]
        command: ChainCommand,
    },
    /// Compare all three Möbius computations over a box of translations.
    VerifyTheorem(VerifyArgs),
    /// K-theory basis changes.
    Ktheory {
        #[command(subcommand)]
        command: KtheoryCommand,
    },
    /// Regularity bounds.
    Regularity {
        #[command(subcommand)]
        command: RegularityCommand,
    },
}

#[derive(Args, Debug, Clone)]
pub struct TypeArgs {
    /// Named type such as A2, C3, G2.
    #[arg(long = "type", value_name = "TYPE", required_unless_present = "cartan_file")]
    pub type_label: Option<String>,
    /// JSON file {"cartan": [[...]], "label": "..."} used instead of --type.
    #[arg(long, conflicts_with = "type_label")]
    pub cartan_file: Option<PathBuf>,
    #[arg(long, default_value = "untwisted")]
    pub convention: Convention,
}

impl TypeArgs {
    fn root_system(&self) -> Result<RootSystem> {
        match (&self.type_label, &self.cartan_file) {
            (_, Some(path)) => {
                let text = std::fs::read_to_string(path).map_err(|e| invalid!("cannot read {}: {e}", path.display()))?;
                RootSystem::from_json_str(&text)
            }
            (Some(t), None) => RootSystem::named(t),
            (None, None) => Err(invalid!("either --type or --cartan-file is required")),
        }
    }

    fn context(&self) -> Result<Context> {
        Context::new(self.root_system()?, self.convention)
    }
}

#[derive(Args, Debug, Clone)]
pub struct RegularityArgs {
    #[arg(long, default_value = "milicevic")]
    pub regularity_profile: Profile,
    /// per-cover uses k alone; per-chain uses k + (m−1)j for a length gap m.
    #[arg(long, default_value = "per-chain")]
    pub regularity_scope: Scope,
}

impl RegularityArgs {
    fn config(&self, ctx: &Context) -> Result<RegularityConfig> {
        Ok(RegularityConfig::new(ctx.weyl(), self.regularity_profile)?.with_scope(self.regularity_scope))
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum QbgCommand {
    Export {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value = "dot")]
        format: GraphFormat,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum MethodArg {
    Oracle,
    Deodhar,
    Superregular,
    All,
}

#[derive(Args, Debug)]
pub struct MobiusArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    #[arg(long)]
    pub x: String,
    #[arg(long)]
    pub y: String,
    #[arg(long, default_value = "all")]
    pub method: MethodArg,
    #[command(flatten)]
    pub regularity: RegularityArgs,
}

#[derive(Subcommand, Debug)]
pub enum ChainCommand {
    Decompose {
        #[command(flatten)]
        ty: TypeArgs,
        /// JSON list of elements, bottom first, as objects or compact strings.
        #[arg(long)]
        chain_file: PathBuf,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// λ coordinate range, "lo..hi" for every coordinate or one range per coordinate.
    #[arg(long = "box", value_name = "RANGE", allow_hyphen_values = true)]
    pub lambda_box: String,
    /// Read the box in simple coroot coordinates or as pairings ⟨λ, αᵢ⟩.
    #[arg(long, default_value = "coroot")]
    pub box_coordinates: BoxCoordinates,
    /// Window for λ′ − λ, each coordinate in 0..=window.
    #[arg(long, default_value_t = 4)]
    pub window: i32,
    /// Restrict the classical part of y to these reduced words, e.g. "[1,2]".
    #[arg(long = "top")]
    pub tops: Vec<String>,
    /// Compare on uncertified tops instead of refusing.
    #[arg(long)]
    pub allow_uncertified: bool,
    #[command(flatten)]
    pub regularity: RegularityArgs,
}

#[derive(Subcommand, Debug)]
pub enum KtheoryCommand {
    IdealExpansion {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        y: String,
        /// Also expand back into the I basis above this length and report the collapse.
        #[arg(long)]
        round_trip_floor: Option<u32>,
        #[command(flatten)]
        regularity: RegularityArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum RegularityCommand {
    Report {
        #[command(flatten)]
        ty: TypeArgs,
        /// Element whose translation is tested.
        #[arg(long)]
        y: Option<String>,
        /// Length gap m for the chain bound.
        #[arg(long, default_value_t = 1)]
        gap: u32,
        #[command(flatten)]
        regularity: RegularityArgs,
    },
}

/// Exit code and text for a failed command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::RegularityViolation(_) => EXIT_REGULARITY,
        Error::Internal(_) => EXIT_DISAGREEMENT,
        _ => EXIT_USAGE,
    }
}

fn pretty<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| Error::Internal(e.to_string()))
}

fn profile_json(cfg: &RegularityConfig) -> Value {
    json!({"profile": cfg.profile, "scope": cfg.scope, "k": cfg.k, "j": cfg.j})
}

fn parse_chain(ctx: &Context, text: &str) -> Result<Vec<AffineElement>> {
    let items: Vec<Value> = serde_json::from_str(text).map_err(|e| invalid!("chain file is not a JSON list: {e}"))?;
    items
        .into_iter()
        .map(|v| match v {
            Value::String(s) => ctx.group().parse(&s),
            other => {
                let e: ElementJson = serde_json::from_value(other).map_err(|e| invalid!("bad element: {e}"))?;
                ctx.group().from_json(&e)
            }
        })
        .collect()
}

/// Runs a parsed command, returning (exit code, stdout text).
pub fn execute(cli: &Cli) -> Result<(i32, String)> {
    match &cli.command {
        Command::Qbg { command: QbgCommand::Export { ty, format } } => {
            let rs = ty.root_system()?;
            let text = match (ty.convention, format) {
                (Convention::Untwisted, GraphFormat::Dot) => QuantumBruhatGraph::<Untwisted>::from_root_system(rs)?.to_dot(),
                (Convention::Dual, GraphFormat::Dot) => QuantumBruhatGraph::<DualUntwisted>::from_root_system(rs)?.to_dot(),
                (Convention::Untwisted, GraphFormat::Json) => {
                    pretty(&QuantumBruhatGraph::<Untwisted>::from_root_system(rs)?.to_json())?
                }
                (Convention::Dual, GraphFormat::Json) => {
                    pretty(&QuantumBruhatGraph::<DualUntwisted>::from_root_system(rs)?.to_json())?
                }
            };
            Ok((EXIT_PASS, text))
        }
        Command::Mobius(a) => {
            let ctx = a.ty.context()?;
            let g = ctx.group();
            let (x, y) = (g.parse(&a.x)?, g.parse(&a.y)?);
            let cfg = a.regularity.config(&ctx)?;
            let mut out = json!({
                "tool_version": VERSION,
                "x": g.format(&x),
                "y": g.format(&y),
                "regularity": profile_json(&cfg),
            });
            let mut values = Vec::new();
            let want = |m: MethodArg| a.method == m || a.method == MethodArg::All;
            if want(MethodArg::Oracle) {
                let v = mobius_oracle(&ctx, &x, &y)?;
                out["oracle"] = json!(v);
                values.push(v);
            }
            if want(MethodArg::Deodhar) {
                let r = mobius_deodhar(&ctx, &x, &y)?;
                out["deodhar"] = json!(r.value);
                out["deodhar_witness"] = json!(r.witness);
                values.push(r.value);
            }
            if want(MethodArg::Superregular) {
                match mobius_superregular(&ctx, &x, &y, &cfg) {
                    Ok(r) => {
                        out["superregular"] = json!(r.value);
                        values.push(r.value);
                    }
                    Err(e @ Error::RegularityViolation(_)) if a.method == MethodArg::All => {
                        out["superregular"] = Value::Null;
                        out["superregular_refused"] = json!(e.to_string());
                    }
                    Err(e) => return Err(e),
                }
            }
            let agree = values.windows(2).all(|w| w[0] == w[1]);
            out["agree"] = json!(agree);
            Ok((if agree { EXIT_PASS } else { EXIT_DISAGREEMENT }, pretty(&out)?))
        }
        Command::Chain { command: ChainCommand::Decompose { ty, chain_file } } => {
            let ctx = ty.context()?;
            let text = std::fs::read_to_string(chain_file).map_err(|e| invalid!("cannot read {}: {e}", chain_file.display()))?;
            let chain = parse_chain(&ctx, &text)?;
            let d = decompose_chain(&ctx, &chain)?;
            let mut out = serde_json::to_value(decomposition_json(&ctx, &d)?).map_err(|e| Error::Internal(e.to_string()))?;
            out["tool_version"] = json!(VERSION);
            Ok((EXIT_PASS, pretty(&out)?))
        }
        Command::VerifyTheorem(a) => {
            let ctx = a.ty.context()?;
            let cfg = a.regularity.config(&ctx)?;
            let tops = if a.tops.is_empty() {
                None
            } else {
                Some(
                    a.tops
                        .iter()
                        .map(|t| {
                            crate::weyl::parse_int_list(t)?
                                .into_iter()
                                .map(|i| usize::try_from(i).map_err(|_| invalid!("bad word {t:?}")))
                                .collect::<Result<Vec<usize>>>()
                        })
                        .collect::<Result<_>>()?,
                )
            };
            let opts = SweepOptions {
                lambdas: LambdaBox::parse(&a.lambda_box, ctx.group().rank())?.with_coordinates(a.box_coordinates),
                window: a.window,
                tops,
                regularity: cfg,
                allow_uncertified: a.allow_uncertified,
            };
            let report = verify_theorem(&ctx, &opts)?;
            let code = if report.passed() { EXIT_PASS } else { EXIT_DISAGREEMENT };
            Ok((code, pretty(&report)?))
        }
        Command::Ktheory { command: KtheoryCommand::IdealExpansion { ty, y, round_trip_floor, regularity } } => {
            let ctx = ty.context()?;
            let g = ctx.group();
            let y = g.parse(y)?;
            let cfg = regularity.config(&ctx)?;
            let sum = ideal_in_structure(&ctx, &y, &cfg)?;
            let mut out = json!({
                "tool_version": VERSION,
                "y": g.format(&y),
                "regularity": profile_json(&cfg),
                "terms": sum.to_json(g),
            });
            let mut code = EXIT_PASS;
            if let Some(floor) = round_trip_floor {
                let rt = round_trip(&ctx, &y, &cfg, *floor)?;
                out["round_trip"] = json!({
                    "floor": rt.floor,
                    "truncated": rt.truncated,
                    "collapsed": rt.collapsed,
                    "terms": rt.result.to_json(g),
                });
                if !rt.collapsed {
                    code = EXIT_DISAGREEMENT;
                }
            }
            Ok((code, pretty(&out)?))
        }
        Command::Regularity { command: RegularityCommand::Report { ty, y, gap, regularity } } => {
            let ctx = ty.context()?;
            let cfg = regularity.config(&ctx)?;
            let mut out = json!({
                "tool_version": VERSION,
                "type": ctx.group().label(),
                "regularity": profile_json(&cfg),
                "gap": gap,
                "chain_bound": cfg.chain_bound(*gap),
                "required": cfg.required(*gap),
                "theorem_bound": cfg.theorem_bound(ctx.weyl().order()),
            });
            if let Some(y) = y {
                let y = ctx.group().parse(y)?;
                let have = min_root_pairing(ctx.root_system(), &y.lambda);
                out["y"] = json!(ctx.group().format(&y));
                out["min_root_pairing"] = json!(have);
                out["superregular"] = json!(have >= cfg.required(*gap));
            }
            Ok((EXIT_PASS, pretty(&out)?))
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            return (code, e.render().to_string());
        }
    };
    match execute(&cli) {
        Ok(r) => r,
        Err(e) => (exit_code(&e), format!("error: {e}")),
    }
}
