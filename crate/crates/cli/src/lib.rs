// Copyright 2026 The qutrit-se Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end: curve tables, threshold reports, Haar moment
//! checks and a self-validation run.
//!
//! Time values are printed in the dimensionless unit `A1 t`.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use qutrit_se_core::analysis::{self, Crossing, QUBIT_THRESHOLD, QUTRIT_THRESHOLD, RNG_NAME};
use qutrit_se_core::channels::{self, ChannelParams, KrausChannel};
use qutrit_se_core::states::{self, WernerParams};
use qutrit_se_core::{su, Complex64, ComplexMatrix};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] qutrit_se_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// s, fidelity and negativity curves as CSV
    Curves,
    /// crossing times and the preservation verdict
    Threshold,
    /// qubit vs qutrit channel fidelity as CSV
    Compare,
    /// Haar second-moment check
    Haar,
    /// run the invariant suite
    Validate,
}

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(name = "qutrit-se", version, about = "Spontaneous-emission decoherence of qubit and qutrit Werner states")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub a1: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub a2: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub a3: f64,
    /// Werner weight
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub p: f64,
    /// Weight of the subsystem-A branch of the symmetric channel
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub q: f64,
    /// End of the time axis, in units of 1/A1
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    pub t_max: f64,
    #[arg(long, default_value_t = 500)]
    pub steps: usize,
    /// Qutrit sample count for `haar`; the qubit check uses half
    #[arg(long, default_value_t = 200_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Write here instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            command: Command::Curves,
            a1: 1.0,
            a2: 1.0,
            a3: 1.0,
            p: 1.0,
            q: 0.5,
            t_max: 5.0,
            steps: 500,
            samples: 200_000,
            seed: 42,
            output: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let usage = |msg: &str| Err(CliError::Usage(msg.to_string()));
        if self.steps < 2 {
            return usage("--steps must be at least 2");
        }
        if !(self.t_max > 0.0 && self.t_max.is_finite()) {
            return usage("--t-max must be positive");
        }
        if !(0.0..=1.0).contains(&self.p) {
            return usage("--p must lie in [0, 1]");
        }
        if !(0.0..=1.0).contains(&self.q) {
            return usage("--q must lie in [0, 1]");
        }
        if self.samples == 0 {
            return usage("--samples must be at least 1");
        }
        let uses_rates = matches!(self.command, Command::Curves | Command::Threshold | Command::Compare);
        let positive = |x: f64| x > 0.0 && x.is_finite();
        if uses_rates && !(positive(self.a1) && positive(self.a2) && positive(self.a3)) {
            return usage("decay rates --a1, --a2, --a3 must be positive");
        }
        Ok(())
    }

    fn params(&self) -> Result<ChannelParams, CliError> {
        Ok(ChannelParams::new(self.a1, self.a2, self.a3, 0.0, self.q)?)
    }
}

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    ValidationFailed,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::ValidationFailed => 1,
        }
    }
}

/// Builder for the qutrit Kraus set used by `validate`.
pub type QutritKrausBuilder = fn(&ChannelParams) -> qutrit_se_core::Result<KrausChannel>;

/// Swappable pieces of the validation run.
#[derive(Debug, Clone, Copy)]
pub struct ValidateHooks {
    pub qutrit_kraus: QutritKrausBuilder,
}

impl Default for ValidateHooks {
    fn default() -> Self {
        Self { qutrit_kraus: channels::se_kraus_qutrit }
    }
}

/// Validates `cfg`, runs its command and writes to `--output` or `out`.
pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> Result<Status, CliError> {
    run_with_hooks(cfg, ValidateHooks::default(), out)
}

pub fn run_with_hooks(cfg: &RunConfig, hooks: ValidateHooks, out: &mut dyn Write) -> Result<Status, CliError> {
    cfg.validate()?;
    let mut text = String::new();
    let status = match cfg.command {
        Command::Curves => {
            run_curves(cfg, &mut text)?;
            Status::Success
        }
        Command::Threshold => {
            run_threshold(cfg, &mut text)?;
            Status::Success
        }
        Command::Compare => {
            run_compare(cfg, &mut text)?;
            Status::Success
        }
        Command::Haar => {
            run_haar(cfg, &mut text)?;
            Status::Success
        }
        Command::Validate => run_validate(cfg, hooks, &mut text)?,
    };
    match &cfg.output {
        Some(path) => std::fs::write(path, text.as_bytes())?,
        None => {
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(status)
}

/// Like C's `%.9g`.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..9).contains(&exp) {
        trim_zeros(format!("{x:.*}", (8 - exp) as usize))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn time_axis(cfg: &RunConfig) -> impl Iterator<Item = (f64, f64)> + '_ {
    (0..=cfg.steps).map(move |k| {
        let scaled = cfg.t_max * k as f64 / cfg.steps as f64;
        (scaled, scaled / cfg.a1)
    })
}

pub fn run_curves(cfg: &RunConfig, out: &mut String) -> Result<(), CliError> {
    let params = cfg.params()?;
    out.push_str("t,s_qubit,s_qutrit,F_qubit,F_qutrit,neg_qubit,neg_qutrit\n");
    for (scaled, t) in time_axis(cfg) {
        let at = params.at(t);
        let row = [
            scaled,
            analysis::s_qubit_closed(cfg.p, &at)?,
            analysis::s_qutrit_closed(cfg.p, &at)?,
            analysis::fidelity_closed(2, &at)?,
            analysis::fidelity_closed(3, &at)?,
            analysis::negativity(&analysis::evolve_werner(2, cfg.p, &at)?, 2, 2)?,
            analysis::negativity(&analysis::evolve_werner(3, cfg.p, &at)?, 3, 3)?,
        ];
        push_csv_row(out, &row);
    }
    Ok(())
}

pub fn run_compare(cfg: &RunConfig, out: &mut String) -> Result<(), CliError> {
    let params = cfg.params()?;
    out.push_str("t,F_qubit,F_qutrit,F_gap\n");
    for (scaled, t) in time_axis(cfg) {
        let at = params.at(t);
        let fb = analysis::fidelity_closed(2, &at)?;
        let ft = analysis::fidelity_closed(3, &at)?;
        push_csv_row(out, &[scaled, fb, ft, fb - ft]);
    }
    Ok(())
}

fn push_csv_row(out: &mut String, values: &[f64]) {
    let cells: Vec<String> = values.iter().map(|&v| format_number(v)).collect();
    out.push_str(&cells.join(","));
    out.push('\n');
}

fn push_kv(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key}={value}");
}

fn crossing_text(c: Crossing, a1: f64) -> String {
    match c {
        Crossing::SeparableAtStart => "separable at t=0".to_string(),
        Crossing::At(t) => format_number(a1 * t),
        Crossing::NotWithin(_) => "none".to_string(),
    }
}

fn longer(qutrit_longer: bool) -> &'static str {
    if qutrit_longer {
        "qutrit"
    } else {
        "qubit"
    }
}

pub fn run_threshold(cfg: &RunConfig, out: &mut String) -> Result<(), CliError> {
    let params = cfg.params()?;
    let qubit = analysis::qubit_crossing(cfg.p, &params)?;
    let qutrit = analysis::qutrit_crossing(cfg.p, &params)?;
    for (key, v) in [("p", cfg.p), ("a1", cfg.a1), ("a2", cfg.a2), ("a3", cfg.a3)] {
        push_kv(out, key, format_number(v));
    }
    push_kv(out, "t_cross_qubit", crossing_text(qubit, cfg.a1));
    push_kv(out, "t_cross_qutrit", crossing_text(qutrit, cfg.a1));
    match analysis::t_qubit_closed(cfg.p, cfg.a1) {
        Some(t) => push_kv(out, "t_qubit_closed", format_number(cfg.a1 * t)),
        None => push_kv(out, "t_qubit_closed", "separable at t=0"),
    }
    if cfg.p <= QUTRIT_THRESHOLD {
        push_kv(out, "preserved_longer", "neither");
        push_kv(out, "preservation_inequality", "n/a");
        return Ok(());
    }
    let by_crossing = analysis::qutrit_outlasts(qutrit, qubit);
    let by_inequality = analysis::preservation_inequality(cfg.p, params.a21(), params.a31())?;
    push_kv(out, "preserved_longer", longer(by_crossing));
    push_kv(out, "preservation_inequality", longer(by_inequality));
    push_kv(out, "verdicts_agree", by_crossing == by_inequality);
    Ok(())
}

const HAAR_QUTRIT_TOL: f64 = 0.005;
const HAAR_QUBIT_TOL: f64 = 0.01;

fn haar_lines(out: &mut String, samples: usize, seed: u64, prefix: &str) -> Result<bool, CliError> {
    let mut all = true;
    for (name, d, n, diag, tol) in
        [("qubit", 2, (samples / 2).max(1), 1.0 / 3.0, HAAR_QUBIT_TOL), ("qutrit", 3, samples, 1.0 / 8.0, HAAR_QUTRIT_TOL)]
    {
        let m = analysis::haar_moment_check(d, n, seed)?;
        let dev = m.max_deviation(diag);
        let mean_diag = (1..=m.size()).map(|i| m.get(i, i)).sum::<f64>() / m.size() as f64;
        let ok = dev <= tol;
        all &= ok;
        push_kv(out, &format!("{prefix}{name}_samples"), n);
        push_kv(out, &format!("{prefix}{name}_mean_diagonal"), format_number(mean_diag));
        push_kv(out, &format!("{prefix}{name}_max_deviation"), format_number(dev));
        push_kv(out, &format!("{prefix}{name}_pass"), ok);
    }
    Ok(all)
}

pub fn run_haar(cfg: &RunConfig, out: &mut String) -> Result<(), CliError> {
    push_kv(out, "rng", RNG_NAME);
    push_kv(out, "seed", cfg.seed);
    haar_lines(out, cfg.samples, cfg.seed, "")?;
    Ok(())
}

const COMPLETENESS_TOL: f64 = 1e-12;
const AFFINE_TOL: f64 = 1e-10;
const LINDBLAD_TOL: f64 = 1e-6;
const ROUND_TRIP_TOL: f64 = 1e-12;
const PPT_TOL: f64 = 1e-4;
const VALIDATE_HAAR_SAMPLES: usize = 20_000;

struct Checks<'a> {
    out: &'a mut String,
    failed: usize,
}

impl Checks<'_> {
    fn record(&mut self, name: &str, defect: f64, tol: f64) {
        let ok = defect <= tol;
        if !ok {
            self.failed += 1;
        }
        let _ = writeln!(self.out, "{name}: {} defect={defect:.3e} tol={tol:e}", if ok { "pass" } else { "FAIL" });
    }
}

fn ppt_threshold(d: usize) -> Result<f64, CliError> {
    let (mut lo, mut hi) = (0.0, 1.0);
    while hi - lo > 1e-7 {
        let mid = 0.5 * (lo + hi);
        let w = states::werner(&WernerParams::new(d, mid)?)?;
        if analysis::negativity(&w, d, d)? > 1e-13 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

pub fn run_validate(cfg: &RunConfig, hooks: ValidateHooks, out: &mut String) -> Result<Status, CliError> {
    let mut checks = Checks { out, failed: 0 };
    let rate_sets = [(1.0, 1.0), (2.0, 1.0), (0.5, 3.0)];

    let mut completeness: f64 = 0.0;
    for t in [0.0, 0.1, 1.0, 10.0] {
        for (a2, a3) in rate_sets {
            let p = ChannelParams::new(a2, a2, a3, t, 0.5)?;
            completeness = completeness.max((hooks.qutrit_kraus)(&p)?.completeness_defect());
            completeness = completeness.max(channels::se_kraus_qubit(&p)?.completeness_defect());
        }
    }
    checks.record("kraus_completeness", completeness, COMPLETENESS_TOL);

    let mut rng = analysis::seeded_rng(cfg.seed);
    let (mut affine, mut lindblad): (f64, f64) = (0.0, 0.0);
    for k in 0..12 {
        let rho0 = analysis::random_mixed_state(3, 3, &mut rng);
        let (a2, a3) = rate_sets[k % rate_sets.len()];
        let t = 0.25 * (k + 1) as f64;
        let p = ChannelParams::new(1.0, a2, a3, t, 0.5)?;
        let kraus = channels::apply_kraus(&rho0, &(hooks.qutrit_kraus)(&p)?)?;
        let via_affine = channels::se_affine_map(&p)?.apply_to_density(&rho0)?;
        let steps = (t * 1e3 * f64::max(a2, a3).max(1.0)).ceil() as usize;
        let via_lindblad = channels::lindblad_evolve(&rho0, &p, steps)?;
        affine = affine.max(kraus.max_abs_diff(&via_affine));
        lindblad = lindblad.max(kraus.max_abs_diff(&via_lindblad));
    }
    checks.record("kraus_vs_affine", affine, AFFINE_TOL);
    checks.record("kraus_vs_lindblad", lindblad, LINDBLAD_TOL);

    let mut bloch: f64 = 0.0;
    for _ in 0..200 {
        let rho = analysis::random_mixed_state(3, 2, &mut rng);
        bloch = bloch.max(su::bloch_to_density(&su::density_to_bloch(&rho)?).max_abs_diff(&rho));
    }
    let d12 = Complex64::new(0.1, -0.05);
    let d13 = Complex64::new(-0.02, 0.07);
    let d23 = Complex64::new(0.03, 0.01);
    let atom: ComplexMatrix = su::atom_vars_to_density(0.3, 0.2, d12, d13, d23)?;
    let atom_defect = su::density_to_bloch(&atom)?.max_abs_diff(&su::atom_vars_to_bloch(0.3, 0.2, d12, d13, d23)?);
    checks.record("bloch_round_trip", bloch.max(atom_defect), ROUND_TRIP_TOL);

    checks.record("ppt_threshold_qubit", (ppt_threshold(2)? - QUBIT_THRESHOLD).abs(), PPT_TOL);
    checks.record("ppt_threshold_qutrit", (ppt_threshold(3)? - QUTRIT_THRESHOLD).abs(), PPT_TOL);

    for (name, d, diag, tol) in [("haar_qubit", 2, 1.0 / 3.0, HAAR_QUBIT_TOL), ("haar_qutrit", 3, 1.0 / 8.0, HAAR_QUTRIT_TOL)] {
        let m = analysis::haar_moment_check(d, VALIDATE_HAAR_SAMPLES, cfg.seed)?;
        checks.record(name, m.max_deviation(diag), tol);
    }

    let failed = checks.failed;
    let _ = writeln!(checks.out, "summary: {} failed", failed);
    Ok(if failed == 0 { Status::Success } else { Status::ValidationFailed })
}
