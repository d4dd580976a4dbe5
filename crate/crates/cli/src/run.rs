//! Command dispatch: builds the system, runs the selected engine and fills
//! a [`Table`].

use wgqed_closed_form::two_qubit::{self, FinalState, SpectrumTime};
use wgqed_closed_form::{OneQubit, OneQubitTag, TwoQubitParams};
use wgqed_core::basis::product_label;
use wgqed_core::{
    build_generator, pairwise_rates, BellLabel, CVector, StateVector, SystemConfig,
    TransitionOperatorField, C64,
};
use wgqed_dynamics::{
    emission_rate_series, evolve_field_with, long_time, photon_mean_numeric, spectrum_quadrature,
    EvolveOptions, PhaseConvention, QuadratureOptions, Stepper,
};
use wgqed_oracle::{evolve_bath, oracle_spectrum, BathConfig, BathRun};

use crate::args::{
    Command, CrossCheckArgs, Direction, Engine, FrequencyArgs, Phase, PhotonArgs, SpectrumArgs,
    SystemArgs, TimeArgs,
};
use crate::error::CliError;
use crate::initial::{parse_initial, Initial, Named};
use crate::output::Table;

/// Largest register accepted. The generator has `4^N` rows.
pub const MAX_QUBITS: usize = 4;

/// Result of one command.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub table: Table,
    /// Line for the terminal, printed in addition to the table.
    pub summary: Option<String>,
    /// False when a `cross-check` exceeded its tolerance.
    pub passed: bool,
}

impl Outcome {
    fn table(table: Table) -> Self {
        Self {
            table,
            summary: None,
            passed: true,
        }
    }
}

struct System {
    config: SystemConfig,
    initial: Initial,
    k0d: Option<f64>,
    gamma_over_omega: f64,
}

impl System {
    fn new(args: &SystemArgs) -> Result<Self, CliError> {
        let n = args.n;
        if !(1..=MAX_QUBITS).contains(&n) {
            return Err(CliError::usage(
                "--n",
                format!("expected 1 to {MAX_QUBITS} qubits, got {n}"),
            ));
        }
        let ratio = args.gamma_over_omega;
        if !(ratio.is_finite() && ratio > 0.0) {
            return Err(CliError::usage(
                "--gamma-over-omega",
                format!("must be positive, got {ratio}"),
            ));
        }
        let (omega, gamma) = (1.0 / ratio, 1.0);
        let config = match (n, args.k0d) {
            (1, _) => SystemConfig::one_qubit(omega, gamma),
            (_, None) => return Err(CliError::usage("--k0d", format!("required for --n {n}"))),
            (_, Some(k)) if !k.is_finite() => {
                return Err(CliError::usage("--k0d", format!("must be finite, got {k}")))
            }
            (2, Some(k)) => SystemConfig::two_qubit(omega, gamma, k),
            (_, Some(k)) => SystemConfig::chain(n, omega, gamma, k),
        }
        .map_err(|e| CliError::usage("--gamma-over-omega", e.to_string()))?;
        Ok(Self {
            initial: parse_initial(&args.initial, n)?,
            k0d: if n == 1 { None } else { args.k0d },
            gamma_over_omega: ratio,
            config,
        })
    }

    fn n(&self) -> usize {
        self.config.n_qubits
    }

    fn one_qubit(&self) -> Result<OneQubit, CliError> {
        OneQubit::new(self.config.omega, self.config.gamma)
            .map_err(|e| CliError::closed_form(e, "--gamma-over-omega"))
    }

    fn two_qubit(&self) -> Result<TwoQubitParams, CliError> {
        TwoQubitParams::from_config(&self.config).map_err(|e| CliError::closed_form(e, "--k0d"))
    }

    /// `ρ_ee` of a single qubit.
    fn excited_population(&self) -> f64 {
        self.initial.density.matrix()[(1, 1)].re
    }

    /// `⟨e|ρ|g⟩` of a single qubit.
    fn coherence(&self) -> C64 {
        self.initial.density.matrix()[(1, 0)]
    }

    /// Puts the system parameters ahead of any engine-specific header keys.
    fn describe(&self, table: &mut Table, command: &str, engine: Engine) {
        let specific = std::mem::take(&mut table.header);
        table.set("command", command);
        table.set("engine", engine.name());
        table.set("n", self.n());
        table.set("initial", &self.initial.label);
        if let Some(k) = self.k0d {
            table.set("k0d", k);
        }
        table.set("gamma_over_omega", self.gamma_over_omega);
        table.set("omega", self.config.omega);
        table.set("gamma", self.config.gamma);
        let phases: Vec<String> = self.config.phases.iter().map(f64::to_string).collect();
        table.set("phases", phases.join(";"));
        table.set("units", "time in 1/gamma; frequency in gamma; v_g = 1");
        table.set("version", env!("CARGO_PKG_VERSION"));
        for (k, v) in specific {
            table.set(&k, v);
        }
    }

    fn generator_field(
        &self,
        t_max: f64,
        dt: f64,
        every: usize,
    ) -> Result<TransitionOperatorField, CliError> {
        let gen = build_generator(&self.config, &pairwise_rates(&self.config))
            .map_err(|e| CliError::usage("--n", e.to_string()))?;
        let opts = EvolveOptions {
            stepper: Stepper::Rk4,
            record_every: every,
            ..Default::default()
        };
        evolve_field_with(&gen, t_max, dt, opts).map_err(|e| CliError::dynamics(e, "--t-max"))
    }

    fn pure_state(&self) -> Result<&StateVector, CliError> {
        self.initial.state.as_ref().ok_or_else(|| {
            CliError::usage(
                "--initial",
                "the oracle engine needs a pure state (a tag or an amplitudes file)",
            )
        })
    }

    fn oracle_run(&self, t_max: f64, dt: f64) -> Result<BathRun, CliError> {
        let state = self.pure_state()?;
        evolve_bath(&self.config, &BathConfig::default(), state, t_max, dt)
            .map_err(CliError::oracle)
    }
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    let outcome = match command {
        Command::Probabilities(a) => probabilities(a)?,
        Command::Spectrum(a) => spectrum(a)?,
        Command::EmissionRate(a) => emission_rate(a)?,
        Command::PhotonMean(a) => photon_mean(a)?,
        Command::CrossCheck(a) => cross_check(a)?,
    };
    if let Some((row, column)) = outcome.table.first_non_finite() {
        return Err(CliError::Numerical(format!(
            "non-finite value in column '{column}' at row {row}"
        )));
    }
    Ok(outcome)
}

/// `a / b` as a whole number, or a usage error naming `flag`.
fn ratio(a: f64, b: f64, flag: &'static str, unit: &str) -> Result<usize, CliError> {
    let x = a / b;
    let n = x.round();
    if !x.is_finite() || (x - n).abs() > 1e-6 {
        return Err(CliError::usage(
            flag,
            format!("{a} is not a multiple of {unit} = {b}"),
        ));
    }
    Ok(n as usize)
}

fn positive(v: f64, flag: &'static str) -> Result<f64, CliError> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(CliError::usage(flag, format!("must be positive, got {v}")))
    }
}

/// Row count and the number of integration steps per row.
struct TimeGrid {
    rows: usize,
    every: usize,
    t_step: f64,
}

impl TimeGrid {
    fn new(a: &TimeArgs) -> Result<Self, CliError> {
        if !(a.t_max.is_finite() && a.t_max >= 0.0) {
            return Err(CliError::usage(
                "--t-max",
                format!("must be non-negative, got {}", a.t_max),
            ));
        }
        let t_step = positive(a.t_step, "--t-step")?;
        positive(a.dt, "--dt")?;
        Ok(Self {
            rows: ratio(a.t_max, t_step, "--t-max", "--t-step")?,
            every: ratio(t_step, a.dt, "--t-step", "--dt")?,
            t_step,
        })
    }

    fn time(&self, k: usize) -> f64 {
        k as f64 * self.t_step
    }

    fn describe(&self, table: &mut Table, a: &TimeArgs) {
        table.set("t_max", a.t_max);
        table.set("t_step", self.t_step);
        if a.engine != Engine::ClosedForm {
            table.set("dt", a.dt);
        }
    }
}

fn closed_form_only_small(n: usize) -> CliError {
    CliError::usage(
        "--engine",
        format!("closed forms exist for one and two qubits, not {n}"),
    )
}

/// Labels and product-basis vectors of the reported final states.
fn final_states(n: usize) -> Vec<(String, CVector)> {
    match n {
        1 => OneQubitTag::NAMED
            .iter()
            .map(|t| {
                (
                    t.name().to_string(),
                    t.state().expect("named").amplitudes().clone(),
                )
            })
            .collect(),
        2 => ["G", "E", "S", "A", "gg", "ge", "eg", "ee"]
            .iter()
            .map(|s| {
                let f = FinalState::parse(s).expect("known label");
                (s.to_string(), f.product_vector().expect("two-qubit vector"))
            })
            .collect(),
        _ => (0..1usize << n)
            .map(|i| {
                (
                    product_label(i, n),
                    StateVector::basis_state(1 << n, i).amplitudes().clone(),
                )
            })
            .collect(),
    }
}

fn with_time_column(labels: &[String]) -> Table {
    let mut cols: Vec<&str> = vec!["t"];
    cols.extend(labels.iter().map(String::as_str));
    Table::new(&cols)
}

fn probabilities(a: &TimeArgs) -> Result<Outcome, CliError> {
    let sys = System::new(&a.system)?;
    let grid = TimeGrid::new(a)?;
    let n = sys.n();
    let mut table = match a.engine {
        Engine::ClosedForm => {
            let finals = final_states(n);
            let labels: Vec<String> = finals.iter().map(|f| f.0.clone()).collect();
            let mut table = with_time_column(&labels);
            match n {
                1 => {
                    let q = sys.one_qubit()?;
                    let from = sys.initial.one_qubit_tag();
                    for k in 0..=grid.rows {
                        let t = grid.time(k);
                        let mut row = vec![t];
                        for to in OneQubitTag::NAMED {
                            row.push(
                                q.probability(&from, &to, t)
                                    .map_err(|e| CliError::closed_form(e, "--initial"))?,
                            );
                        }
                        table.push(row);
                    }
                }
                2 => {
                    let p = sys.two_qubit()?;
                    let from = sys.initial.two_qubit_tag();
                    let targets: Vec<FinalState> = labels
                        .iter()
                        .map(|s| FinalState::parse(s).expect("known label"))
                        .collect();
                    for k in 0..=grid.rows {
                        let t = grid.time(k);
                        let mut row = vec![t];
                        for f in &targets {
                            row.push(
                                two_qubit::probability(&p, &from, f, t)
                                    .map_err(|e| CliError::closed_form(e, "--initial"))?,
                            );
                        }
                        table.push(row);
                    }
                }
                _ => return Err(closed_form_only_small(n)),
            }
            table
        }
        Engine::Ode => {
            let finals = final_states(n);
            let labels: Vec<String> = finals.iter().map(|f| f.0.clone()).collect();
            let mut table = with_time_column(&labels);
            let field = sys.generator_field(a.t_max, a.dt, grid.every)?;
            let rho = sys.initial.density.matrix();
            for (k, c) in field.snapshots().iter().enumerate() {
                let mut row = vec![grid.time(k)];
                row.extend(finals.iter().map(|(_, v)| c.probability(rho, v)));
                table.push(row);
            }
            table
        }
        Engine::Oracle => oracle_probabilities(&sys, a, &grid)?,
        Engine::Quadrature => {
            return Err(CliError::usage(
                "--engine",
                "quadrature applies to spectrum and photon-mean; use ode for probabilities",
            ))
        }
    };
    sys.describe(&mut table, "probabilities", a.engine);
    grid.describe(&mut table, a);
    table.set(
        "basis",
        "product labels name qubit 1 first; g = ground, e = excited",
    );
    Ok(Outcome::table(table))
}

/// `|⟨v|β(t)⟩|²` for the ground state, every single-excitation product
/// state and, for two qubits, `S` and `A`.
fn oracle_probabilities(sys: &System, a: &TimeArgs, grid: &TimeGrid) -> Result<Table, CliError> {
    let n = sys.n();
    ratio(a.t_max, a.dt, "--t-max", "--dt")?;
    let run = sys.oracle_run(a.t_max, a.dt)?;
    let mut labels = vec!["g".repeat(n)];
    let mut vectors: Vec<Vec<C64>> = Vec::new();
    for q in 0..n {
        let mut label = vec!['g'; n];
        label[q] = 'e';
        labels.push(label.into_iter().collect());
        let mut v = vec![C64::new(0.0, 0.0); n];
        v[q] = C64::new(1.0, 0.0);
        vectors.push(v);
    }
    if n == 2 {
        for b in [BellLabel::S, BellLabel::A] {
            labels.push(b.name().to_string());
            vectors.push(
                wgqed_oracle::single_excitation_amplitudes(&b.state()).map_err(CliError::oracle)?,
            );
        }
    }
    let projected: Vec<Vec<C64>> = vectors.iter().map(|v| run.projected(v)).collect();
    let mut table = with_time_column(&labels);
    for k in 0..=grid.rows {
        let step = k * grid.every;
        let excited: f64 = run.qubit_amplitudes[step]
            .iter()
            .map(|b| b.norm_sqr())
            .sum();
        let mut row = vec![run.times[step], 1.0 - excited];
        row.extend(projected.iter().map(|p| p[step].norm_sqr()));
        table.push(row);
    }
    describe_bath(&mut table, &run);
    Ok(table)
}

fn describe_bath(table: &mut Table, run: &BathRun) {
    table.set("band_halfwidth", run.bath.band_halfwidth);
    table.set("mode_spacing", run.bath.mode_spacing);
    table.set("modes_per_branch", run.bath.modes());
    table.set("max_norm_drift", format!("{:e}", run.max_norm_drift));
}

fn emission_rate(a: &TimeArgs) -> Result<Outcome, CliError> {
    let sys = System::new(&a.system)?;
    let grid = TimeGrid::new(a)?;
    let n = sys.n();
    let mut table = Table::new(&["t", "value"]);
    match a.engine {
        Engine::ClosedForm => {
            for k in 0..=grid.rows {
                let t = grid.time(k);
                let w = match n {
                    1 => sys.one_qubit()?.emission_rate(t, sys.excited_population()),
                    2 => {
                        let p = sys.two_qubit()?;
                        match &sys.initial.named {
                            Named::Two(tag) => two_qubit::emission_rate(&p, tag, t),
                            _ => two_qubit::emission_rate_density(&p, &sys.initial.density, t),
                        }
                    }
                    _ => return Err(closed_form_only_small(n)),
                }
                .map_err(|e| CliError::closed_form(e, "--initial"))?;
                table.push(vec![t, w]);
            }
        }
        Engine::Ode => {
            let field = sys.generator_field(a.t_max, a.dt, grid.every)?;
            let series = emission_rate_series(&field, &sys.initial.density, &sys.config)
                .map_err(|e| CliError::dynamics(e, "--initial"))?;
            for (k, w) in series.values.into_iter().enumerate() {
                table.push(vec![grid.time(k), w]);
            }
        }
        Engine::Quadrature | Engine::Oracle => {
            return Err(CliError::usage(
                "--engine",
                "emission-rate needs closed-form or ode",
            ));
        }
    }
    sys.describe(&mut table, "emission-rate", a.engine);
    grid.describe(&mut table, a);
    table.set("direction", "+k");
    Ok(Outcome::table(table))
}

fn photon_mean(a: &PhotonArgs) -> Result<Outcome, CliError> {
    let ta = &a.time;
    let sys = System::new(&ta.system)?;
    let grid = TimeGrid::new(ta)?;
    let n = sys.n();
    let w = a.omega.unwrap_or(sys.config.omega);
    if !w.is_finite() {
        return Err(CliError::usage(
            "--omega",
            format!("must be finite, got {w}"),
        ));
    }
    let mut table = Table::new(&["t", "re", "im"]);
    match ta.engine {
        Engine::ClosedForm => {
            for k in 0..=grid.rows {
                let t = grid.time(k);
                let z = match n {
                    1 => sys
                        .one_qubit()?
                        .photon_means(w, t, sys.coherence())
                        .map(|(a, _)| a),
                    2 => {
                        let p = sys.two_qubit()?;
                        match &sys.initial.named {
                            Named::Two(tag) => two_qubit::photon_mean(&p, tag, w, t),
                            _ => two_qubit::photon_mean_density(&p, &sys.initial.density, w, t),
                        }
                    }
                    _ => return Err(closed_form_only_small(n)),
                }
                .map_err(|e| CliError::closed_form(e, "--initial"))?;
                table.push(vec![t, z.re, z.im]);
            }
        }
        Engine::Quadrature => {
            let field = sys.generator_field(ta.t_max, ta.dt, 1)?;
            for k in 0..=grid.rows {
                let t = grid.time(k);
                let z = photon_mean_numeric(&field, &sys.initial.density, w, t, &sys.config)
                    .map_err(|e| CliError::dynamics(e, "--t-max"))?;
                table.push(vec![t, z.re, z.im]);
            }
        }
        Engine::Ode | Engine::Oracle => {
            return Err(CliError::usage(
                "--engine",
                "photon-mean needs closed-form or quadrature",
            ));
        }
    }
    sys.describe(&mut table, "photon-mean", ta.engine);
    grid.describe(&mut table, ta);
    table.set("mode_frequency", w);
    table.set("field_units", "mode coupling");
    Ok(Outcome::table(table))
}

fn frequency_grid(f: &FrequencyArgs, config: &SystemConfig) -> Result<Vec<f64>, CliError> {
    let lo = f.omega_min.unwrap_or(config.omega - 30.0 * config.gamma);
    let hi = f.omega_max.unwrap_or(config.omega + 30.0 * config.gamma);
    if !lo.is_finite() {
        return Err(CliError::usage(
            "--omega-min",
            format!("must be finite, got {lo}"),
        ));
    }
    if !(hi.is_finite() && hi > lo) {
        return Err(CliError::usage(
            "--omega-max",
            format!("must exceed --omega-min = {lo}, got {hi}"),
        ));
    }
    if f.omega_count < 2 {
        return Err(CliError::usage(
            "--omega-count",
            format!("need at least 2 points, got {}", f.omega_count),
        ));
    }
    let step = (hi - lo) / (f.omega_count - 1) as f64;
    Ok((0..f.omega_count).map(|k| lo + k as f64 * step).collect())
}

/// Explicit `--t-max`, or twelve lifetimes of the slowest decaying channel
/// rounded up to a whole number of steps.
fn observation_time(t_max: Option<f64>, dt: f64, config: &SystemConfig) -> Result<f64, CliError> {
    positive(dt, "--dt")?;
    match t_max {
        Some(t) if t.is_finite() && t >= 0.0 => Ok(t),
        Some(t) => Err(CliError::usage(
            "--t-max",
            format!("must be non-negative, got {t}"),
        )),
        None => {
            let t = long_time(config).map_err(|e| CliError::dynamics(e, "--n"))?;
            Ok((t / dt - 1e-9).ceil() * dt)
        }
    }
}

/// Closed-form spectrum of a one- or two-qubit system.
fn closed_form_spectrum(
    sys: &System,
    omegas: &[f64],
    time: SpectrumTime,
) -> Result<Vec<f64>, CliError> {
    match sys.n() {
        1 => {
            let q = sys.one_qubit()?;
            let pop = sys.excited_population();
            omegas
                .iter()
                .map(|&w| match time {
                    SpectrumTime::Finite(t) => q
                        .spectrum(w, t, pop)
                        .map_err(|e| CliError::closed_form(e, "--t-max")),
                    SpectrumTime::Infinite => Ok(q.spectral_density(w, pop)),
                })
                .collect()
        }
        2 => {
            let p = sys.two_qubit()?;
            let Named::Two(tag) = &sys.initial.named else {
                return Err(CliError::usage(
                    "--initial",
                    "two-qubit closed-form spectra exist for named states only; use --engine quadrature",
                ));
            };
            omegas
                .iter()
                .map(|&w| {
                    two_qubit::spectrum(&p, tag, w, time)
                        .map_err(|e| CliError::closed_form(e, "--t-max"))
                })
                .collect()
        }
        n => Err(closed_form_only_small(n)),
    }
}

fn quadrature_options(dt: f64, phase: Phase) -> QuadratureOptions {
    QuadratureOptions {
        dt,
        stepper: Stepper::Rk4,
        phase: match phase {
            Phase::Resonant => PhaseConvention::Resonant,
            Phase::Dispersive => PhaseConvention::Dispersive,
        },
    }
}

fn spectrum(a: &SpectrumArgs) -> Result<Outcome, CliError> {
    let sys = System::new(&a.system)?;
    if a.stationary && a.engine != Engine::ClosedForm {
        return Err(CliError::usage(
            "--stationary",
            "only the closed-form engine has a long-time limit",
        ));
    }
    let omegas = frequency_grid(&a.frequencies, &sys.config)?;
    let t = observation_time(a.t_max, a.dt, &sys.config)?;
    let mut table = Table::new(&["omega", "value"]);
    match a.engine {
        Engine::ClosedForm => {
            let time = if a.stationary {
                SpectrumTime::Infinite
            } else {
                SpectrumTime::Finite(t)
            };
            let values = closed_form_spectrum(&sys, &omegas, time)?;
            table.rows = omegas
                .iter()
                .zip(values)
                .map(|(w, v)| vec![*w, v])
                .collect();
            table.set(
                "t_max",
                if a.stationary {
                    "infinite".to_string()
                } else {
                    t.to_string()
                },
            );
        }
        Engine::Quadrature => {
            let grid = spectrum_quadrature(
                &sys.config,
                &sys.initial.density,
                &omegas,
                t,
                quadrature_options(a.dt, a.phase),
            )
            .map_err(|e| CliError::dynamics(e, "--t-max"))?;
            table.rows = grid
                .omegas
                .iter()
                .zip(grid.values)
                .map(|(w, v)| vec![*w, v])
                .collect();
            table.set("t_max", t);
            table.set("dt", a.dt);
            table.set("phase", quadrature_options(a.dt, a.phase).phase.name());
        }
        Engine::Oracle => {
            ratio(t, a.dt, "--t-max", "--dt")?;
            let run = sys.oracle_run(t, a.dt)?;
            let s = oracle_spectrum(&run);
            let values = match a.direction {
                Direction::Forward => &s.forward,
                Direction::Backward => &s.backward,
                Direction::Total => &s.total,
            };
            let (lo, hi) = (omegas[0], omegas[omegas.len() - 1]);
            table.rows = s
                .omegas
                .iter()
                .zip(values)
                .filter(|(w, _)| (lo..=hi).contains(*w))
                .map(|(w, v)| vec![*w, *v])
                .collect();
            table.set("t_max", t);
            table.set("dt", a.dt);
            table.set("direction", a.direction.name());
            table.set("photon_number", s.photon_number);
            describe_bath(&mut table, &run);
        }
        Engine::Ode => {
            return Err(CliError::usage(
                "--engine",
                "spectrum needs closed-form, quadrature or oracle",
            ));
        }
    }
    sys.describe(&mut table, "spectrum", a.engine);
    if a.engine == Engine::Oracle {
        table.set("omega_grid", "bath modes inside the window");
    } else {
        table.set("omega_count", omegas.len());
    }
    table.set("omega_min", omegas[0]);
    table.set("omega_max", omegas[omegas.len() - 1]);
    Ok(Outcome::table(table))
}

fn cross_check(a: &CrossCheckArgs) -> Result<Outcome, CliError> {
    let sys = System::new(&a.system)?;
    let tol = positive(a.tolerance, "--tolerance")?;
    let omegas = frequency_grid(&a.frequencies, &sys.config)?;
    let t = observation_time(a.t_max, a.dt, &sys.config)?;
    let exact = closed_form_spectrum(&sys, &omegas, SpectrumTime::Finite(t))?;
    let numeric = spectrum_quadrature(
        &sys.config,
        &sys.initial.density,
        &omegas,
        t,
        quadrature_options(a.dt, Phase::Resonant),
    )
    .map_err(|e| CliError::dynamics(e, "--t-max"))?
    .values;
    let max_abs = exact
        .iter()
        .zip(&numeric)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    let (ipk, peak) =
        exact.iter().enumerate().fold(
            (0, f64::MIN),
            |b, (i, v)| if *v > b.1 { (i, *v) } else { b },
        );
    // A dark state has no peak to normalize by; fall back to the absolute
    // deviation.
    let peak_dev = if peak > 0.0 {
        (numeric[ipk] - peak).abs() / peak
    } else {
        max_abs
    };
    let passed = peak_dev < tol;

    let mut table = Table::new(&["omega", "closed_form", "quadrature"]);
    for ((w, x), y) in omegas.iter().zip(&exact).zip(&numeric) {
        table.push(vec![*w, *x, *y]);
    }
    sys.describe(&mut table, "cross-check", Engine::Quadrature);
    table.set("engine", "closed-form,quadrature");
    table.set("t_max", t);
    table.set("dt", a.dt);
    table.set("omega_count", omegas.len());
    table.set("omega_min", omegas[0]);
    table.set("omega_max", omegas[omegas.len() - 1]);
    table.set("peak_omega", omegas[ipk]);
    table.set("peak_deviation", format!("{peak_dev:e}"));
    table.set("max_abs_deviation", format!("{max_abs:e}"));
    table.set("tolerance", tol);
    table.set("passed", passed);
    let summary = format!(
        "max relative closed-form/quadrature peak deviation {peak_dev:.3e} at omega = {} (tolerance {tol:e}): {}",
        omegas[ipk],
        if passed { "pass" } else { "FAIL" }
    );
    Ok(Outcome {
        table,
        summary: Some(summary),
        passed,
    })
}
