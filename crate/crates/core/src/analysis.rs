// Copyright 2026 The qutrit-se Authors
// SPDX-License-Identifier: Apache-2.0

//! Separability and fidelity of Werner states sent through the SE channel.
//!
//! A qubit (qutrit) Werner state is certified separable while its
//! separability function `s(t)` is at most 1/3 (1/4). The functions come in
//! two routes: closed forms in the rates and time, and a state route that
//! reads the diagonal correlations off an evolved density matrix. The PPT
//! negativity is an independent necessary condition.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::channels::{self, BipartiteMode, ChannelParams};
use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix, Side, DEFAULT_EIG_TOL};
use crate::states::{self, WernerParams};
use crate::su;

/// Separability threshold on `s_qutrit`.
pub const QUTRIT_THRESHOLD: f64 = 0.25;
/// Separability threshold on `s_qubit`.
pub const QUBIT_THRESHOLD: f64 = 1.0 / 3.0;
/// Generator behind [`haar_moment_check`] and the other seeded samplers.
pub const RNG_NAME: &str = "ChaCha8Rng";

const CROSSING_TOL: f64 = 1e-10;
const CROSSING_MAX_ITER: usize = 200;

fn check_weight(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::BadParams("Werner weight p must lie in [0, 1]"))
    }
}

/// `(p/8)(e^{-A2 t} + e^{-A3 t} + 2e^{-A2 t/2} + 2e^{-A3 t/2} + 2e^{-(A2+A3) t/2})`.
pub fn s_qutrit_closed(p: f64, params: &ChannelParams) -> Result<f64> {
    check_weight(p)?;
    params.validate()?;
    let t = params.t;
    let (a2, a3) = (params.a2, params.a3);
    let sum = libm::exp(-a2 * t)
        + libm::exp(-a3 * t)
        + 2.0 * libm::exp(-0.5 * a2 * t)
        + 2.0 * libm::exp(-0.5 * a3 * t)
        + 2.0 * libm::exp(-0.5 * (a2 + a3) * t);
    Ok(p * sum / 8.0)
}

/// `(p/3)(2e^{-A1 t/2} + e^{-A1 t})`.
pub fn s_qubit_closed(p: f64, params: &ChannelParams) -> Result<f64> {
    check_weight(p)?;
    params.validate()?;
    let x = libm::exp(-0.5 * params.a1 * params.t);
    Ok(p * (2.0 * x + x * x) / 3.0)
}

fn check_pair(rho: &ComplexMatrix, d: usize) -> Result<()> {
    if d != 2 && d != 3 {
        return Err(Error::BadDimension(d));
    }
    if rho.dim() != d * d {
        return Err(Error::DimensionMismatch { expected: d * d, actual: rho.dim() });
    }
    Ok(())
}

/// Separability function read off a two-party state.
///
/// Qubits: `(1/3) sum_j |Tr[rho (sigma_j ⊗ sigma_j)]|`.
/// Qutrits: `(1/12) sum_j |c_jj|` with `c_jj = (9/4) Tr[rho (lambda_j ⊗ lambda_j)]`.
pub fn s_from_state(rho_t: &ComplexMatrix, d: usize) -> Result<f64> {
    check_pair(rho_t, d)?;
    let diag_sum = |gens: &[ComplexMatrix], scale: f64| -> f64 {
        gens.iter()
            .map(|g| (scale * rho_t.trace_product(&linalg::kron(g, g)).re).abs())
            .sum()
    };
    Ok(if d == 2 {
        diag_sum(&su::pauli_matrices(), 1.0) / 3.0
    } else {
        diag_sum(&su::gell_mann_matrices(), 2.25) / 12.0
    })
}

/// Channel fidelity for a maximally entangled input.
///
/// Qubits: `((1 + e^{-A1 t/2}) / 2)^2`. Qutrits: `((1 + e^{-A2 t/2} + e^{-A3 t/2}) / 3)^2`.
pub fn fidelity_closed(d: usize, params: &ChannelParams) -> Result<f64> {
    params.validate()?;
    let t = params.t;
    match d {
        2 => {
            let x = 0.5 * (1.0 + libm::exp(-0.5 * params.a1 * t));
            Ok(x * x)
        }
        3 => {
            let x = (1.0 + libm::exp(-0.5 * params.a2 * t) + libm::exp(-0.5 * params.a3 * t)) / 3.0;
            Ok(x * x)
        }
        other => Err(Error::BadDimension(other)),
    }
}

/// `<Psi| rho_t |Psi>` for the maximally entangled `|Psi>` of local dimension `d`.
pub fn fidelity_from_state(rho_t: &ComplexMatrix, d: usize) -> Result<f64> {
    check_pair(rho_t, d)?;
    Ok(rho_t.expectation(&states::max_entangled_ket(d)?).re)
}

/// First time a nonincreasing `f` falls to `threshold`, by bisection on `[0, t_hi]`.
///
/// Returns `Ok(None)` when `f(0) <= threshold` (nothing to cross) and
/// `NotBracketed` when `f(t_hi)` is still above the threshold.
pub fn crossing_time(f: impl Fn(f64) -> f64, threshold: f64, t_hi: f64) -> Result<Option<f64>> {
    if f(0.0) <= threshold {
        return Ok(None);
    }
    if f(t_hi) > threshold {
        return Err(Error::NotBracketed { threshold, t_hi });
    }
    let (mut lo, mut hi) = (0.0, t_hi);
    let mut mid = 0.5 * (lo + hi);
    for _ in 0..CROSSING_MAX_ITER {
        mid = 0.5 * (lo + hi);
        let v = f(mid);
        if (v - threshold).abs() <= CROSSING_TOL {
            break;
        }
        if v > threshold {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some(mid))
}

/// Closed-form time at which `s_qubit` reaches 1/3: `-(2/A1) ln(sqrt(1 + 1/p) - 1)`.
///
/// `None` when `p <= 1/3`, i.e. the state starts out separable.
pub fn t_qubit_closed(p: f64, a1: f64) -> Option<f64> {
    if p <= QUBIT_THRESHOLD || a1 <= 0.0 {
        return None;
    }
    Some(-2.0 / a1 * libm::log(qubit_alpha(p)))
}

/// `sqrt(1 + 1/p) - 1`, the value of `e^{-A1 t/2}` when `s_qubit` hits its threshold.
pub fn qubit_alpha(p: f64) -> f64 {
    libm::sqrt(1.0 + 1.0 / p) - 1.0
}

/// True when the qutrit Werner state stays entangled at least as long as
/// the qubit one: `(u/2)(u + 2) >= 1/p` with `u = alpha^A21 + alpha^A31`.
pub fn preservation_inequality(p: f64, a21: f64, a31: f64) -> Result<bool> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::BadParams("p must lie in (0, 1]"));
    }
    if !(a21 > 0.0 && a31 > 0.0) || !a21.is_finite() || !a31.is_finite() {
        return Err(Error::BadParams("rate ratios must be positive"));
    }
    let alpha = qubit_alpha(p);
    let u = libm::pow(alpha, a21) + libm::pow(alpha, a31);
    Ok(0.5 * u * (u + 2.0) >= 1.0 / p)
}

/// Sum of the absolute negative eigenvalues of the partial transpose.
pub fn negativity(rho: &ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<f64> {
    let pt = linalg::partial_transpose(rho, dim_a, dim_b, Side::B)?;
    let ev = linalg::hermitian_eigenvalues(&pt, DEFAULT_EIG_TOL)?;
    Ok(ev.iter().filter(|&&x| x < 0.0).map(|x| -x).sum())
}

/// Outcome of searching for a threshold crossing of `s(t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Crossing {
    /// `s(0)` is already at or below the threshold.
    SeparableAtStart,
    /// `s` reaches the threshold at this time.
    At(f64),
    /// Still above the threshold at the given horizon; for example a qutrit
    /// with one decay channel switched off.
    NotWithin(f64),
}

impl Crossing {
    pub fn time(&self) -> Option<f64> {
        match *self {
            Crossing::At(t) => Some(t),
            _ => None,
        }
    }

    /// Time during which the state is not certified separable.
    fn lifetime(&self) -> f64 {
        match *self {
            Crossing::SeparableAtStart => 0.0,
            Crossing::At(t) => t,
            Crossing::NotWithin(_) => f64::INFINITY,
        }
    }
}

/// Bisection with a doubling search for the upper bracket.
pub fn find_crossing(f: impl Fn(f64) -> f64, threshold: f64, initial_t_hi: f64) -> Crossing {
    if f(0.0) <= threshold {
        return Crossing::SeparableAtStart;
    }
    let mut t_hi = initial_t_hi.max(f64::MIN_POSITIVE);
    for _ in 0..64 {
        if f(t_hi) <= threshold {
            return match crossing_time(&f, threshold, t_hi) {
                Ok(Some(t)) => Crossing::At(t),
                _ => Crossing::NotWithin(t_hi),
            };
        }
        t_hi *= 2.0;
    }
    Crossing::NotWithin(t_hi)
}

/// Crossing of `s_qubit` for a Werner weight `p`.
pub fn qubit_crossing(p: f64, params: &ChannelParams) -> Result<Crossing> {
    s_qubit_closed(p, params)?;
    let rate = params.a1.max(f64::MIN_POSITIVE);
    Ok(find_crossing(|t| s_qubit_closed(p, &params.at(t)).unwrap_or(0.0), QUBIT_THRESHOLD, 1.0 / rate))
}

/// Crossing of `s_qutrit` for a Werner weight `p`.
pub fn qutrit_crossing(p: f64, params: &ChannelParams) -> Result<Crossing> {
    s_qutrit_closed(p, params)?;
    let rate = params.a2.max(params.a3).max(f64::MIN_POSITIVE);
    Ok(find_crossing(|t| s_qutrit_closed(p, &params.at(t)).unwrap_or(0.0), QUTRIT_THRESHOLD, 1.0 / rate))
}

/// True when the qutrit Werner state stays uncertified at least as long as the qubit one.
pub fn qutrit_outlasts(qutrit: Crossing, qubit: Crossing) -> bool {
    match (qutrit, qubit) {
        (Crossing::SeparableAtStart, _) => false,
        (_, Crossing::SeparableAtStart) => true,
        _ => qutrit.lifetime() >= qubit.lifetime(),
    }
}

/// `Φ2(werner(d, p))` at `params.t`, with the qubit channel for `d = 2`.
pub fn evolve_werner(d: usize, p: f64, params: &ChannelParams) -> Result<ComplexMatrix> {
    let rho = states::werner(&WernerParams::new(d, p)?)?;
    let ch = match d {
        2 => channels::se_kraus_qubit(params)?,
        _ => channels::se_kraus_qutrit(params)?,
    };
    channels::bipartite_channel(&rho, &ch, BipartiteMode::Symmetric(params.q))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparabilityRow {
    pub t: f64,
    pub s_qubit: f64,
    pub s_qutrit: f64,
    pub f_qubit: f64,
    pub f_qutrit: f64,
    pub neg_qubit: f64,
    pub neg_qutrit: f64,
}

/// Time series of separability, fidelity and negativity for one parameter set.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparabilityReport {
    pub params: ChannelParams,
    pub p: f64,
    pub grid: Vec<SeparabilityRow>,
    pub t_cross_qubit: Crossing,
    pub t_cross_qutrit: Crossing,
    pub qutrit_preserves_longer: bool,
}

/// Samples `steps + 1` equally spaced times on `[0, t_end]`.
///
/// `s` and fidelities come from the closed forms; negativities from the
/// Kraus route applied to Werner states through the symmetric channel.
pub fn separability_report(p: f64, params: &ChannelParams, t_end: f64, steps: usize) -> Result<SeparabilityReport> {
    check_weight(p)?;
    params.validate()?;
    if steps == 0 || t_end.is_nan() || t_end <= 0.0 || !t_end.is_finite() {
        return Err(Error::BadParams("need steps >= 1 and a positive time span"));
    }
    let mut grid = Vec::with_capacity(steps + 1);
    for k in 0..=steps {
        let at = params.at(t_end * k as f64 / steps as f64);
        grid.push(SeparabilityRow {
            t: at.t,
            s_qubit: s_qubit_closed(p, &at)?,
            s_qutrit: s_qutrit_closed(p, &at)?,
            f_qubit: fidelity_closed(2, &at)?,
            f_qutrit: fidelity_closed(3, &at)?,
            neg_qubit: negativity(&evolve_werner(2, p, &at)?, 2, 2)?,
            neg_qutrit: negativity(&evolve_werner(3, p, &at)?, 3, 3)?,
        });
    }
    let t_cross_qubit = qubit_crossing(p, params)?;
    let t_cross_qutrit = qutrit_crossing(p, params)?;
    Ok(SeparabilityReport {
        params: *params,
        p,
        grid,
        t_cross_qubit,
        t_cross_qutrit,
        qutrit_preserves_longer: qutrit_outlasts(t_cross_qutrit, t_cross_qubit),
    })
}

/// Haar-random pure state of dimension `d`: normalized i.i.d. complex Gaussians.
pub fn haar_pure_state<R: RngCore + ?Sized>(d: usize, rng: &mut R) -> Vec<Complex64> {
    loop {
        let mut ket: Vec<Complex64> = (0..d)
            .map(|_| {
                let re: f64 = StandardNormal.sample(rng);
                let im: f64 = StandardNormal.sample(rng);
                Complex64::new(re, im)
            })
            .collect();
        let norm = libm::sqrt(ket.iter().map(|z| z.norm_sqr()).sum::<f64>());
        if norm > 0.0 {
            for z in &mut ket {
                *z /= norm;
            }
            return ket;
        }
    }
}

/// Random mixture of `components` Haar pure states with flat-simplex weights.
pub fn random_mixed_state<R: RngCore + ?Sized>(d: usize, components: usize, rng: &mut R) -> ComplexMatrix {
    let weights: Vec<f64> = (0..components.max(1)).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = weights.iter().sum();
    let mut rho = ComplexMatrix::zeros(d);
    for w in weights {
        let psi = haar_pure_state(d, rng);
        rho = &rho + &ComplexMatrix::outer(&psi).scale_real(w / total);
    }
    rho
}

/// Seeded generator used by every sampler in this crate.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Empirical second moments `M_ij = E[n_i n_j]` of Bloch vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct SecondMoments {
    size: usize,
    entries: Vec<f64>,
}

impl SecondMoments {
    pub fn size(&self) -> usize {
        self.size
    }

    /// `M_ij`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[(i - 1) * self.size + (j - 1)]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// `max_ij |M_ij - diagonal * delta_ij|`.
    pub fn max_deviation(&self, diagonal: f64) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 1..=self.size {
            for j in 1..=self.size {
                let want = if i == j { diagonal } else { 0.0 };
                worst = worst.max((self.get(i, j) - want).abs());
            }
        }
        worst
    }
}

/// Mean of `n_i n_j` over `samples` Haar-random pure states; deterministic in `seed`.
pub fn haar_moment_check(d: usize, samples: usize, seed: u64) -> Result<SecondMoments> {
    let size = match d {
        2 => 3,
        3 => 8,
        other => return Err(Error::BadDimension(other)),
    };
    if samples == 0 {
        return Err(Error::BadParams("samples must be at least 1"));
    }
    let mut rng = seeded_rng(seed);
    let mut acc = vec![0.0; size * size];
    for _ in 0..samples {
        let n = su::density_to_bloch(&ComplexMatrix::outer(&haar_pure_state(d, &mut rng)))?;
        let x = n.components();
        for i in 0..size {
            for j in 0..size {
                acc[i * size + j] += x[i] * x[j];
            }
        }
    }
    let inv = 1.0 / samples as f64;
    Ok(SecondMoments { size, entries: acc.into_iter().map(|v| v * inv).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn rates(a1: f64, a2: f64, a3: f64, t: f64) -> ChannelParams {
        ChannelParams::new(a1, a2, a3, t, 0.5).unwrap()
    }

    // Hand-solved crossings at p = 1 with unit rates:
    // qubit  x^2 + 2x = 1   => x = sqrt(2) - 1
    // qutrit x^2 + x = 1/2  => x = (sqrt(3) - 1)/2
    // with x = e^{-t/2}.
    fn qubit_cross() -> f64 {
        -2.0 * libm::log(core::f64::consts::SQRT_2 - 1.0)
    }

    fn qutrit_cross() -> f64 {
        -2.0 * libm::log((libm::sqrt(3.0) - 1.0) / 2.0)
    }

    #[test]
    fn s_at_zero_time_is_p() {
        for p in [0.0, 0.3, 1.0] {
            assert_abs_diff_eq!(s_qutrit_closed(p, &rates(1.0, 2.0, 0.5, 0.0)).unwrap(), p, epsilon = 1e-15);
            assert_abs_diff_eq!(s_qubit_closed(p, &rates(1.0, 2.0, 0.5, 0.0)).unwrap(), p, epsilon = 1e-15);
        }
    }

    #[test]
    fn closed_forms_vanish_at_late_times() {
        assert!(s_qutrit_closed(1.0, &rates(1.0, 1.0, 1.0, 200.0)).unwrap() < 1e-40);
        assert_eq!(s_qubit_closed(0.0, &rates(1.0, 1.0, 1.0, 3.0)).unwrap(), 0.0);
    }

    #[test]
    fn closed_forms_at_hand_solved_crossings() {
        assert_abs_diff_eq!(s_qubit_closed(1.0, &rates(1.0, 1.0, 1.0, qubit_cross())).unwrap(), 1.0 / 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(s_qutrit_closed(1.0, &rates(1.0, 1.0, 1.0, qutrit_cross())).unwrap(), 0.25, epsilon = 1e-14);
        assert_abs_diff_eq!(qubit_cross(), 1.76275, epsilon = 1e-5);
        assert_abs_diff_eq!(qutrit_cross(), 2.0101, epsilon = 1e-4);
    }

    #[test]
    fn closed_forms_reject_bad_weight() {
        assert!(s_qutrit_closed(1.2, &ChannelParams::default()).is_err());
        assert!(s_qubit_closed(-0.5, &ChannelParams::default()).is_err());
    }

    #[test]
    fn s_from_state_examples() {
        let w = states::werner(&WernerParams::new(3, 0.37).unwrap()).unwrap();
        assert_abs_diff_eq!(s_from_state(&w, 3).unwrap(), 0.37, epsilon = 1e-12);
        assert_abs_diff_eq!(s_from_state(&states::max_entangled(2).unwrap(), 2).unwrap(), 1.0, epsilon = 1e-12);

        let at = rates(1.0, 1.0, 1.0, 0.5);
        let evolved = evolve_werner(3, 0.8, &at).unwrap();
        assert_abs_diff_eq!(s_from_state(&evolved, 3).unwrap(), s_qutrit_closed(0.8, &at).unwrap(), epsilon = 1e-10);
        assert!(s_from_state(&evolved, 2).is_err());
    }

    #[test]
    fn fidelity_examples() {
        for d in [2, 3] {
            assert_abs_diff_eq!(fidelity_closed(d, &rates(1.0, 1.0, 1.0, 0.0)).unwrap(), 1.0, epsilon = 1e-15);
        }
        let late = rates(1.0, 1.0, 1.0, 100.0);
        assert_abs_diff_eq!(fidelity_closed(3, &late).unwrap(), 1.0 / 9.0, epsilon = 1e-12);
        assert_abs_diff_eq!(fidelity_closed(2, &late).unwrap() - fidelity_closed(3, &late).unwrap(), 5.0 / 36.0, epsilon = 1e-12);
        assert!(fidelity_closed(4, &late).is_err());

        let psi = states::max_entangled(3).unwrap();
        assert_abs_diff_eq!(fidelity_from_state(&psi, 3).unwrap(), 1.0, epsilon = 1e-12);
        let mixed = ComplexMatrix::identity(9).scale_real(1.0 / 9.0);
        assert_abs_diff_eq!(fidelity_from_state(&mixed, 3).unwrap(), 1.0 / 9.0, epsilon = 1e-12);

        let at = rates(1.0, 1.0, 1.0, 1.0);
        let out = evolve_werner(3, 1.0, &at).unwrap();
        let want = (1.0 + 2.0 * libm::exp(-0.5)) * (1.0 + 2.0 * libm::exp(-0.5)) / 9.0;
        assert_abs_diff_eq!(want, 0.544_182_267, epsilon = 1e-9);
        assert_abs_diff_eq!(fidelity_from_state(&out, 3).unwrap(), want, epsilon = 1e-10);
    }

    #[test]
    fn crossing_time_examples() {
        let qb = |t: f64| s_qubit_closed(1.0, &rates(1.0, 1.0, 1.0, t)).unwrap();
        let t = crossing_time(qb, QUBIT_THRESHOLD, 10.0).unwrap().unwrap();
        assert_abs_diff_eq!(t, 1.76275, epsilon = 1e-5);
        assert_abs_diff_eq!(t, t_qubit_closed(1.0, 1.0).unwrap(), epsilon = 1e-8);

        let qt = |t: f64| s_qutrit_closed(1.0, &rates(1.0, 1.0, 1.0, t)).unwrap();
        let t = crossing_time(qt, QUTRIT_THRESHOLD, 10.0).unwrap().unwrap();
        assert_abs_diff_eq!(t, 2.0101, epsilon = 1e-4);
        assert_abs_diff_eq!(t, qutrit_cross(), epsilon = 1e-8);

        let below = |t: f64| s_qutrit_closed(0.2, &rates(1.0, 1.0, 1.0, t)).unwrap();
        assert_eq!(crossing_time(below, QUTRIT_THRESHOLD, 10.0).unwrap(), None);

        assert!(matches!(crossing_time(qt, QUTRIT_THRESHOLD, 1.0), Err(Error::NotBracketed { .. })));
    }

    #[test]
    fn closed_t_qubit_matches_bisection_for_several_weights() {
        for p in [0.4, 0.55, 0.8, 1.0] {
            for a1 in [0.5, 1.0, 3.0] {
                let f = |t: f64| s_qubit_closed(p, &rates(a1, 1.0, 1.0, t)).unwrap();
                let t = crossing_time(f, QUBIT_THRESHOLD, 100.0).unwrap().unwrap();
                assert_abs_diff_eq!(t, t_qubit_closed(p, a1).unwrap(), epsilon = 1e-8);
            }
        }
        assert_eq!(t_qubit_closed(0.3, 1.0), None);
    }

    #[test]
    fn preservation_examples() {
        assert!(preservation_inequality(1.0, 1.0, 1.0).unwrap());
        assert!(!preservation_inequality(1.0, 10.0, 10.0).unwrap());
        assert!(preservation_inequality(0.0, 1.0, 1.0).is_err());
        assert!(preservation_inequality(1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn negativity_examples() {
        assert_abs_diff_eq!(negativity(&states::max_entangled(2).unwrap(), 2, 2).unwrap(), 0.5, epsilon = 1e-12);
        let w = states::werner(&WernerParams::new(3, 0.25).unwrap()).unwrap();
        assert!(negativity(&w, 3, 3).unwrap() <= 1e-10);
        let prod = linalg::kron(&ComplexMatrix::diag(&[0.2, 0.8]), &ComplexMatrix::diag(&[0.1, 0.6, 0.3]));
        assert_eq!(negativity(&prod, 2, 3).unwrap(), 0.0);
        assert!(negativity(&prod, 3, 3).is_err());
    }

    #[test]
    fn find_crossing_handles_all_outcomes() {
        assert_eq!(qubit_crossing(0.2, &ChannelParams::default()).unwrap(), Crossing::SeparableAtStart);
        let t = qubit_crossing(1.0, &ChannelParams::default()).unwrap().time().unwrap();
        assert_abs_diff_eq!(t, qubit_cross(), epsilon = 1e-8);
        // |3> never decays: s_qutrit(inf) = 3p/8 > 1/4 for p = 1
        let stuck = rates(1.0, 1.0, 0.0, 0.0);
        assert!(matches!(qutrit_crossing(1.0, &stuck).unwrap(), Crossing::NotWithin(_)));
    }

    #[test]
    fn haar_is_deterministic_and_normalized() {
        let a = haar_moment_check(3, 500, 7).unwrap();
        let b = haar_moment_check(3, 500, 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, haar_moment_check(3, 500, 8).unwrap());
        let mut rng = seeded_rng(1);
        let psi = haar_pure_state(3, &mut rng);
        assert_abs_diff_eq!(psi.iter().map(|z| z.norm_sqr()).sum::<f64>(), 1.0, epsilon = 1e-14);
        assert!(haar_moment_check(4, 10, 0).is_err());
    }

    #[test]
    fn report_has_increasing_grid_and_bounded_values() {
        let r = separability_report(1.0, &ChannelParams::default(), 5.0, 50).unwrap();
        assert_eq!(r.grid.len(), 51);
        assert!(r.grid.windows(2).all(|w| w[1].t > w[0].t));
        for row in &r.grid {
            for v in [row.s_qubit, row.s_qutrit, row.f_qubit, row.f_qutrit] {
                assert!((0.0..=1.0 + 1e-12).contains(&v));
            }
        }
        assert!(r.qutrit_preserves_longer);
        assert_abs_diff_eq!(r.grid[0].neg_qubit, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(r.grid[0].neg_qutrit, 1.0, epsilon = 1e-12);
    }
}
