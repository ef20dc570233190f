use clap::{Args, Parser, Subcommand, ValueEnum};

use wrm_core::{Rational, RecurrenceParams, SequenceSpec, WrmSpec};

use crate::verify::Suite;

#[derive(Debug, Parser)]
#[command(name = "wrm", version, about = "Exact weighted recurrence matrices: build, factor, act, and verify")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the n x n weighted recurrence matrix.
    Gen(GenArgs),
    /// Factor the matrix as Pascal-like · middle · (Pascal-like)ᵗ and verify the product.
    Factor(FactorArgs),
    /// Evaluate the determinant.
    Det(DetArgs),
    /// Apply a group element on the left or right.
    Act(ActArgs),
    /// Run seeded randomized checks of every identity.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct WrmArgs {
    /// Recurrence weights `x,y,z`.
    #[arg(long, value_parser = parse_params, allow_hyphen_values = true)]
    pub params: RecurrenceParams,
    /// First column: `geom:c,q` | `arith:a,d` | `const:c` | `list:v0,v1,...` | `delta:k`.
    #[arg(long, value_parser = parse_sequence, allow_hyphen_values = true)]
    pub alpha: SequenceSpec,
    /// First row, same grammar as --alpha.
    #[arg(long, value_parser = parse_sequence, allow_hyphen_values = true)]
    pub beta: SequenceSpec,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub wrm: WrmArgs,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    pub out: OutFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FactorMode {
    Unifying,
    Toeplitz,
    Tan,
    Mp,
}

#[derive(Debug, Args)]
pub struct FactorArgs {
    #[arg(long, value_enum, default_value_t = FactorMode::Toeplitz)]
    pub mode: FactorMode,
    #[command(flatten)]
    pub wrm: WrmArgs,
    /// Group elements `r,s,v,w` for --mode unifying; defaults to `1,z,y+xz,x`.
    #[arg(long, value_parser = parse_rsvw, allow_hyphen_values = true)]
    pub rsvw: Option<[Rational; 4]>,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    pub out: OutFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DetMethod {
    Bareiss,
    Eq11,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
}

#[derive(Debug, Args)]
pub struct DetArgs {
    #[arg(long, value_enum, default_value_t = DetMethod::Bareiss)]
    pub method: DetMethod,
    #[command(flatten)]
    pub wrm: WrmArgs,
    /// Emit a report with both the chosen value and the Bareiss value.
    #[arg(long, value_enum)]
    pub report: Option<ReportFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ActKind {
    /// Left: `g⁻¹ · P`. Right: `P · gᵗ`.
    Action,
    /// Left: `g · P`. Right: `P · gᵗ`.
    Mul,
}

#[derive(Debug, Args)]
pub struct ActArgs {
    #[arg(long, value_enum)]
    pub side: Side,
    /// Group element `v,w` with v != 0.
    #[arg(long, value_parser = parse_group, allow_hyphen_values = true)]
    pub g: [Rational; 2],
    /// Matrix as `x,y,z;alpha-spec;beta-spec`.
    #[arg(long, value_parser = parse_wrm_spec, allow_hyphen_values = true)]
    pub desc: WrmSpec,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = ActKind::Action)]
    pub kind: ActKind,
    /// Also compare against the explicit matrix product.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    /// Master seed; falls back to $WRM_SEED, then to a fixed default.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Restrict to these suites (repeatable).
    #[arg(long = "suite", value_enum)]
    pub suites: Vec<Suite>,
    /// Re-run a single trial with this per-trial seed (as printed on failure).
    #[arg(long)]
    pub trial_seed: Option<u64>,
    /// Trial index to pair with --trial-seed; some suites cycle special cases by index.
    #[arg(long, default_value_t = 0, requires = "trial_seed")]
    pub trial: u64,
    /// Bound on random numerators: drawn from [-B, B].
    #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(i64).range(1..))]
    pub num_bound: i64,
    /// Bound on random denominators: drawn from [1, B].
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(i64).range(1..))]
    pub den_bound: i64,
    #[arg(long, value_enum, default_value_t = VerifyFormat::Text)]
    pub out: VerifyFormat,
}

fn parse_params(s: &str) -> Result<RecurrenceParams, String> {
    s.parse().map_err(|e: wrm_core::WrmError| e.to_string())
}

fn parse_sequence(s: &str) -> Result<SequenceSpec, String> {
    s.parse().map_err(|e: wrm_core::WrmError| e.to_string())
}

fn parse_group(s: &str) -> Result<[Rational; 2], String> {
    parse_rationals(s, "v,w")
}

fn parse_wrm_spec(s: &str) -> Result<WrmSpec, String> {
    s.parse().map_err(|e: wrm_core::WrmError| e.to_string())
}

fn parse_rsvw(s: &str) -> Result<[Rational; 4], String> {
    parse_rationals(s, "r,s,v,w")
}

fn parse_rationals<const N: usize>(s: &str, shape: &str) -> Result<[Rational; N], String> {
    let parts = s
        .split(',')
        .map(str::parse)
        .collect::<Result<Vec<Rational>, _>>()
        .map_err(|e| e.to_string())?;
    <[Rational; N]>::try_from(parts).map_err(|_| format!("expected {shape}, got {s:?}"))
}
