use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Collective emission of qubits coupled to a one-dimensional waveguide.
///
/// Times are in units of 1/Γ and frequencies in units of Γ, so the qubit
/// frequency is Ω = 1/(Γ/Ω).
#[derive(Debug, Parser)]
#[command(name = "wgqed", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Populations of named final states against time.
    Probabilities(TimeArgs),
    /// Emission spectrum S(ω, t) of photons travelling in the +k direction.
    Spectrum(SpectrumArgs),
    /// Emission rate W(t) into the +k direction.
    EmissionRate(TimeArgs),
    /// One-photon field mean ⟨a_k(t)⟩ at a fixed frequency.
    PhotonMean(PhotonArgs),
    /// Closed-form spectrum against the quadrature spectrum on one grid.
    CrossCheck(CrossCheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    ClosedForm,
    Ode,
    Quadrature,
    Oracle,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Self::ClosedForm => "closed-form",
            Self::Ode => "ode",
            Self::Quadrature => "quadrature",
            Self::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Phase {
    Resonant,
    Dispersive,
}

/// Which branch of the discretized bath the oracle spectrum reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Forward,
    Backward,
    Total,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Self::Forward => "forward",
            Self::Backward => "backward",
            Self::Total => "total",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SystemArgs {
    /// Number of qubits.
    #[arg(long = "n", default_value_t = 2)]
    pub n: usize,

    /// Phase separation k0·d of neighbouring qubits (required for n ≥ 2).
    #[arg(long, allow_negative_numbers = true)]
    pub k0d: Option<f64>,

    /// Decay rate over qubit frequency.
    #[arg(long, default_value_t = 0.05, allow_negative_numbers = true)]
    pub gamma_over_omega: f64,

    /// Initial state: a tag (e, g, s for one qubit; E, S, A, eg, ge, s1g2,
    /// s1e2, s1s2 for two), a product label such as `egg`, or a JSON file.
    #[arg(long)]
    pub initial: String,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output file; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct TimeArgs {
    #[command(flatten)]
    pub system: SystemArgs,

    #[arg(long, value_enum, default_value_t = Engine::ClosedForm)]
    pub engine: Engine,

    /// Final time.
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    pub t_max: f64,

    /// Spacing of the output rows.
    #[arg(long, default_value_t = 0.01, allow_negative_numbers = true)]
    pub t_step: f64,

    /// Integration step of the numeric engines.
    #[arg(long, default_value_t = 1e-3, allow_negative_numbers = true)]
    pub dt: f64,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct FrequencyArgs {
    /// Lower end of the frequency window (default Ω - 30).
    #[arg(long, allow_negative_numbers = true)]
    pub omega_min: Option<f64>,

    /// Upper end of the frequency window (default Ω + 30).
    #[arg(long, allow_negative_numbers = true)]
    pub omega_max: Option<f64>,

    /// Number of frequencies in the window.
    #[arg(long, default_value_t = 4001)]
    pub omega_count: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub system: SystemArgs,

    #[arg(long, value_enum, default_value_t = Engine::ClosedForm)]
    pub engine: Engine,

    /// Observation time (default twelve lifetimes of the slowest decaying
    /// channel).
    #[arg(long, allow_negative_numbers = true)]
    pub t_max: Option<f64>,

    /// Long-time limit of the closed form instead of a finite time.
    #[arg(long)]
    pub stationary: bool,

    /// Integration step of the numeric engines.
    #[arg(long, default_value_t = 1e-3, allow_negative_numbers = true)]
    pub dt: f64,

    #[command(flatten)]
    pub frequencies: FrequencyArgs,

    /// Wave number in the interference phases of the quadrature engine.
    #[arg(long, value_enum, default_value_t = Phase::Resonant)]
    pub phase: Phase,

    /// Bath branch reported by the oracle engine.
    #[arg(long, value_enum, default_value_t = Direction::Forward)]
    pub direction: Direction,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct PhotonArgs {
    #[command(flatten)]
    pub time: TimeArgs,

    /// Mode frequency (default Ω).
    #[arg(long, allow_negative_numbers = true)]
    pub omega: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct CrossCheckArgs {
    #[command(flatten)]
    pub system: SystemArgs,

    /// Observation time (default as for `spectrum`).
    #[arg(long, allow_negative_numbers = true)]
    pub t_max: Option<f64>,

    /// Integration step of the quadrature.
    #[arg(long, default_value_t = 1e-3, allow_negative_numbers = true)]
    pub dt: f64,

    #[command(flatten)]
    pub frequencies: FrequencyArgs,

    /// Largest accepted relative deviation at the closed-form peak.
    #[arg(long, default_value_t = 1e-3, allow_negative_numbers = true)]
    pub tolerance: f64,

    #[command(flatten)]
    pub output: OutputArgs,
}
