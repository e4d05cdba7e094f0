// Copyright 2026 The qutrit-se Authors
// SPDX-License-Identifier: Apache-2.0

//! The spontaneous-emission (SE) channel of a V-configuration qutrit, and
//! its two-level counterpart.
//!
//! Three equivalent forms are available for the qutrit:
//!
//! - [`se_affine_map`]: `n(t) = D n(0) + T(t)` on the 8-component Bloch vector;
//! - [`se_kraus_qutrit`]: three Kraus operators `K0, K1, K2`;
//! - [`lindblad_evolve`]: RK4 integration of the master equation with jump
//!   operators `L1 = sqrt(A2) |1><2|` and `L2 = sqrt(A3) |1><3|`.
//!
//! All dynamics are in the rotating frame; level energies never enter.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix};
use crate::states;
use crate::su::{self, BlochVector};

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Decay rates, elapsed time and two-sided mixing weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    /// Qubit Einstein coefficient.
    pub a1: f64,
    /// Qutrit decay rate `|2> -> |1>`.
    pub a2: f64,
    /// Qutrit decay rate `|3> -> |1>`.
    pub a3: f64,
    pub t: f64,
    /// Weight of the A-side branch of the symmetric channel.
    pub q: f64,
}

impl Default for ChannelParams {
    fn default() -> Self {
        Self { a1: 1.0, a2: 1.0, a3: 1.0, t: 0.0, q: 0.5 }
    }
}

impl ChannelParams {
    pub fn new(a1: f64, a2: f64, a3: f64, t: f64, q: f64) -> Result<Self> {
        let params = Self { a1, a2, a3, t, q };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        let nonneg = |x: f64| x.is_finite() && x >= 0.0;
        if !(nonneg(self.a1) && nonneg(self.a2) && nonneg(self.a3)) {
            return Err(Error::BadParams("decay rates must be finite and nonnegative"));
        }
        if !nonneg(self.t) {
            return Err(Error::BadParams("time must be finite and nonnegative"));
        }
        if !(0.0..=1.0).contains(&self.q) {
            return Err(Error::BadParams("q must lie in [0, 1]"));
        }
        Ok(())
    }

    pub fn at(self, t: f64) -> Self {
        Self { t, ..self }
    }

    /// `A2 / A1`.
    pub fn a21(&self) -> f64 {
        self.a2 / self.a1
    }

    /// `A3 / A1`.
    pub fn a31(&self) -> f64 {
        self.a3 / self.a1
    }
}

/// Affine action `n -> D n + T` of the qutrit SE channel at time `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineBlochMap {
    damping: [[f64; 8]; 8],
    shift: [f64; 8],
    t: f64,
}

impl AffineBlochMap {
    pub fn identity() -> Self {
        let mut damping = [[0.0; 8]; 8];
        for (i, row) in damping.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self { damping, shift: [0.0; 8], t: 0.0 }
    }

    /// `D_ij`, 1-based.
    pub fn damping(&self, i: usize, j: usize) -> f64 {
        self.damping[i - 1][j - 1]
    }

    pub fn damping_matrix(&self) -> &[[f64; 8]; 8] {
        &self.damping
    }

    pub fn shift(&self) -> &[f64; 8] {
        &self.shift
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn apply(&self, n: &BlochVector) -> Result<BlochVector> {
        if n.len() != 8 {
            return Err(Error::BadDimension(n.len()));
        }
        let x = n.components();
        let out = (0..8)
            .map(|i| self.shift[i] + (0..8).map(|j| self.damping[i][j] * x[j]).sum::<f64>())
            .collect();
        BlochVector::new(out)
    }

    /// Density-matrix route: Bloch vector, affine step, back to a density matrix.
    pub fn apply_to_density(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        let n = su::density_to_bloch(rho)?;
        Ok(su::bloch_to_density(&self.apply(&n)?))
    }

    /// The map "`self`, then `later`".
    pub fn then(&self, later: &Self) -> Self {
        let mut damping = [[0.0; 8]; 8];
        let mut shift = later.shift;
        for i in 0..8 {
            for j in 0..8 {
                damping[i][j] = (0..8).map(|k| later.damping[i][k] * self.damping[k][j]).sum();
                shift[i] += later.damping[i][j] * self.shift[j];
            }
        }
        Self { damping, shift, t: self.t + later.t }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..8 {
            worst = worst.max((self.shift[i] - other.shift[i]).abs());
            for j in 0..8 {
                worst = worst.max((self.damping[i][j] - other.damping[i][j]).abs());
            }
        }
        worst
    }
}

pub fn se_affine_map(params: &ChannelParams) -> Result<AffineBlochMap> {
    params.validate()?;
    let t = params.t;
    let e2 = libm::exp(-params.a2 * t);
    let e3 = libm::exp(-params.a3 * t);
    let h2 = libm::exp(-0.5 * params.a2 * t);
    let h3 = libm::exp(-0.5 * params.a3 * t);
    let h23 = libm::exp(-0.5 * (params.a2 + params.a3) * t);

    let mut damping = [[0.0; 8]; 8];
    for (i, v) in [h2, h2, e2, h3, h3, h23, h23, e3].into_iter().enumerate() {
        damping[i][i] = v;
    }
    damping[2][7] = (e3 - e2) / SQRT3;

    let mut shift = [0.0; 8];
    shift[2] = (3.0 - e3 - 2.0 * e2) / (2.0 * SQRT3);
    shift[7] = 0.5 * (1.0 - e3);
    Ok(AffineBlochMap { damping, shift, t })
}

/// Ordered Kraus operators of a channel at time `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    dim: usize,
    operators: Vec<ComplexMatrix>,
    t: f64,
}

impl KrausChannel {
    pub fn new(operators: Vec<ComplexMatrix>, t: f64) -> Result<Self> {
        let dim = operators.first().map(ComplexMatrix::dim).ok_or(Error::BadParams("empty Kraus set"))?;
        if let Some(op) = operators.iter().find(|k| k.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, actual: op.dim() });
        }
        Ok(Self { dim, operators, t })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// `max |(sum_i K_i^dagger K_i - I)_jk|`.
    pub fn completeness_defect(&self) -> f64 {
        let mut sum = ComplexMatrix::zeros(self.dim);
        for k in &self.operators {
            sum = &sum + &(&k.adjoint() * k);
        }
        sum.max_abs_diff(&ComplexMatrix::identity(self.dim))
    }

    /// Choi state: the channel applied to side A of the maximally entangled pair.
    pub fn choi_state(&self) -> Result<ComplexMatrix> {
        let psi = states::max_entangled(self.dim)?;
        bipartite_channel(&psi, self, BipartiteMode::OneSidedA)
    }
}

/// Coefficients of the qutrit SE Kraus operators in the Gell-Mann basis:
///
/// `K0 = k00 I + k03 λ3 + k08 λ8`, `K1 = k11 λ1 + k12 λ2`, `K2 = k24 λ4 + k25 λ5`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QutritKrausCoefficients {
    pub k00: f64,
    pub k03: f64,
    pub k08: f64,
    pub k11: Complex64,
    pub k12: Complex64,
    pub k24: Complex64,
    pub k25: Complex64,
}

impl QutritKrausCoefficients {
    pub fn at(params: &ChannelParams) -> Result<Self> {
        params.validate()?;
        let t = params.t;
        let h2 = libm::exp(-0.5 * params.a2 * t);
        let h3 = libm::exp(-0.5 * params.a3 * t);
        let r2 = 0.5 * libm::sqrt(-libm::expm1(-params.a2 * t));
        let r3 = 0.5 * libm::sqrt(-libm::expm1(-params.a3 * t));
        Ok(Self {
            k00: (1.0 + h2 + h3) / 3.0,
            k03: 0.5 * (1.0 - h2),
            k08: (1.0 + h2 - 2.0 * h3) / (2.0 * SQRT3),
            k11: Complex64::new(r2, 0.0),
            k12: Complex64::new(0.0, r2),
            k24: Complex64::new(r3, 0.0),
            k25: Complex64::new(0.0, r3),
        })
    }

    pub fn operators(&self) -> [ComplexMatrix; 3] {
        let l = su::gell_mann_matrices();
        let re = |x: f64| Complex64::new(x, 0.0);
        let k0 = &(&ComplexMatrix::identity(3).scale_real(self.k00) + &l[2].scale(re(self.k03)))
            + &l[7].scale(re(self.k08));
        let k1 = &l[0].scale(self.k11) + &l[1].scale(self.k12);
        let k2 = &l[3].scale(self.k24) + &l[4].scale(self.k25);
        [k0, k1, k2]
    }
}

/// Kraus set `(K0, K1, K2)` of the qutrit SE channel.
pub fn se_kraus_qutrit(params: &ChannelParams) -> Result<KrausChannel> {
    let ops = QutritKrausCoefficients::at(params)?.operators();
    KrausChannel::new(ops.into(), params.t)
}

/// Kraus set `(K0, K1)` of the qubit SE channel with rate `a1`.
pub fn se_kraus_qubit(params: &ChannelParams) -> Result<KrausChannel> {
    params.validate()?;
    let h = libm::exp(-0.5 * params.a1 * params.t);
    let r = 0.5 * libm::sqrt(-libm::expm1(-params.a1 * params.t));
    let [s1, s2, s3] = su::pauli_matrices();
    let k0 = &ComplexMatrix::identity(2).scale_real(0.5 * (1.0 + h)) + &s3.scale_real(0.5 * (1.0 - h));
    let k1 = (&s1 + &s2.scale(Complex64::new(0.0, 1.0))).scale_real(r);
    KrausChannel::new([k0, k1].into(), params.t)
}

/// `sum_i K_i rho K_i^dagger`.
pub fn apply_kraus(rho: &ComplexMatrix, ch: &KrausChannel) -> Result<ComplexMatrix> {
    if rho.dim() != ch.dim {
        return Err(Error::DimensionMismatch { expected: ch.dim, actual: rho.dim() });
    }
    let mut out = ComplexMatrix::zeros(rho.dim());
    for k in &ch.operators {
        out = &out + &k.sandwich(rho);
    }
    Ok(out)
}

/// Jump operators `L1 = (sqrt(A2)/2)(λ1 + iλ2)`, `L2 = (sqrt(A3)/2)(λ4 + iλ5)`.
pub fn jump_operators(params: &ChannelParams) -> [ComplexMatrix; 2] {
    let l = su::gell_mann_matrices();
    let i = Complex64::new(0.0, 1.0);
    let l1 = (&l[0] + &l[1].scale(i)).scale_real(0.5 * libm::sqrt(params.a2));
    let l2 = (&l[3] + &l[4].scale(i)).scale_real(0.5 * libm::sqrt(params.a3));
    [l1, l2]
}

/// Right-hand side `sum_k (L rho L^dagger - {rho, L^dagger L}/2)`.
pub fn lindblad_rhs(rho: &ComplexMatrix, jumps: &[ComplexMatrix]) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(rho.dim());
    for l in jumps {
        let ldl = &l.adjoint() * l;
        let anti = &(rho * &ldl) + &(&ldl * rho);
        out = &out + &(&l.sandwich(rho) - &anti.scale_real(0.5));
    }
    out
}

/// Integrates the qutrit master equation from 0 to `params.t` with `steps`
/// classical RK4 steps of size `t / steps`.
pub fn lindblad_evolve(rho0: &ComplexMatrix, params: &ChannelParams, steps: usize) -> Result<ComplexMatrix> {
    params.validate()?;
    if steps == 0 {
        return Err(Error::BadParams("steps must be at least 1"));
    }
    if rho0.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, actual: rho0.dim() });
    }
    let jumps = jump_operators(params);
    let h = params.t / steps as f64;
    let mut rho = rho0.clone();
    for _ in 0..steps {
        let k1 = lindblad_rhs(&rho, &jumps);
        let k2 = lindblad_rhs(&(&rho + &k1.scale_real(0.5 * h)), &jumps);
        let k3 = lindblad_rhs(&(&rho + &k2.scale_real(0.5 * h)), &jumps);
        let k4 = lindblad_rhs(&(&rho + &k3.scale_real(h)), &jumps);
        let incr = &(&k1 + &k2.scale_real(2.0)) + &(&k3.scale_real(2.0) + &k4);
        rho = &rho + &incr.scale_real(h / 6.0);
    }
    Ok(rho)
}

/// How a single-site channel acts on a pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BipartiteMode {
    OneSidedA,
    OneSidedB,
    /// `q Φ_A + (1 - q) Φ_B`.
    Symmetric(f64),
}

fn one_sided(rho: &ComplexMatrix, ch: &KrausChannel, side: linalg::Side) -> ComplexMatrix {
    let id = ComplexMatrix::identity(ch.dim);
    let mut out = ComplexMatrix::zeros(rho.dim());
    for k in &ch.operators {
        let lifted = match side {
            linalg::Side::A => linalg::kron(k, &id),
            linalg::Side::B => linalg::kron(&id, k),
        };
        out = &out + &lifted.sandwich(rho);
    }
    out
}

pub fn bipartite_channel(rho: &ComplexMatrix, ch: &KrausChannel, mode: BipartiteMode) -> Result<ComplexMatrix> {
    let d2 = ch.dim * ch.dim;
    if rho.dim() != d2 {
        return Err(Error::DimensionMismatch { expected: d2, actual: rho.dim() });
    }
    Ok(match mode {
        BipartiteMode::OneSidedA => one_sided(rho, ch, linalg::Side::A),
        BipartiteMode::OneSidedB => one_sided(rho, ch, linalg::Side::B),
        BipartiteMode::Symmetric(q) => {
            if !(0.0..=1.0).contains(&q) {
                return Err(Error::BadParams("q must lie in [0, 1]"));
            }
            let a = one_sided(rho, ch, linalg::Side::A).scale_real(q);
            let b = one_sided(rho, ch, linalg::Side::B).scale_real(1.0 - q);
            &a + &b
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{correlation_matrix, max_entangled, validate_density, werner, WernerParams};
    use approx::assert_abs_diff_eq;

    fn params(a2: f64, a3: f64, t: f64) -> ChannelParams {
        ChannelParams::new(1.0, a2, a3, t, 0.5).unwrap()
    }

    fn ket_projector(d: usize, k: usize) -> ComplexMatrix {
        let mut v = alloc::vec![0.0; d];
        v[k] = 1.0;
        ComplexMatrix::diag(&v)
    }

    #[test]
    fn params_validation() {
        assert!(ChannelParams::new(1.0, -1.0, 1.0, 0.0, 0.5).is_err());
        assert!(ChannelParams::new(1.0, 1.0, 1.0, -0.1, 0.5).is_err());
        assert!(ChannelParams::new(1.0, 1.0, 1.0, 0.0, 1.5).is_err());
        assert!(ChannelParams::new(1.0, 1.0, f64::NAN, 0.0, 0.5).is_err());
        let p = ChannelParams::new(2.0, 4.0, 1.0, 0.0, 0.5).unwrap();
        assert_eq!((p.a21(), p.a31()), (2.0, 0.5));
        assert_eq!(ChannelParams::default().q, 0.5);
    }

    #[test]
    fn affine_map_at_zero_is_identity() {
        let m = se_affine_map(&params(1.3, 0.4, 0.0)).unwrap();
        assert_eq!(m.max_abs_diff(&AffineBlochMap::identity()), 0.0);
    }

    #[test]
    fn affine_map_flows_to_ground_state() {
        let (a2, a3) = (2.0, 0.5);
        let m = se_affine_map(&params(a2, a3, 1e3 / 0.5)).unwrap();
        for i in 1..=8 {
            for j in 1..=8 {
                assert!(m.damping(i, j).abs() < 1e-12);
            }
        }
        let mut want = [0.0; 8];
        want[2] = SQRT3 / 2.0;
        want[7] = 0.5;
        for (got, w) in m.shift().iter().zip(want) {
            assert_abs_diff_eq!(*got, w, epsilon = 1e-12);
        }
    }

    #[test]
    fn affine_map_structure() {
        let m = se_affine_map(&params(1.7, 0.6, 0.8)).unwrap();
        for i in 1..=8 {
            for j in 1..=8 {
                if i != j && (i, j) != (3, 8) {
                    assert_eq!(m.damping(i, j), 0.0);
                }
            }
        }
        assert!(m.damping(3, 8) != 0.0);
        let sym = se_affine_map(&params(0.9, 0.9, 0.8)).unwrap();
        assert_eq!(sym.damping(3, 8), 0.0);
    }

    #[test]
    fn affine_map_rejects_dimension() {
        let m = AffineBlochMap::identity();
        assert!(m.apply(&BlochVector::zero(3).unwrap()).is_err());
    }

    #[test]
    fn qutrit_kraus_operators_expand_entrywise() {
        let p = params(1.2, 0.7, 0.9);
        let ch = se_kraus_qutrit(&p).unwrap();
        let ops = ch.operators();
        assert_eq!(ops.len(), 3);
        let k0 = ComplexMatrix::diag(&[1.0, libm::exp(-0.54), libm::exp(-0.315)]);
        assert!(ops[0].max_abs_diff(&k0) < 1e-14);
        let mut k1 = ComplexMatrix::zeros(3);
        k1[(0, 1)] = Complex64::new(libm::sqrt(1.0 - libm::exp(-1.08)), 0.0);
        assert!(ops[1].max_abs_diff(&k1) < 1e-14);
        let mut k2 = ComplexMatrix::zeros(3);
        k2[(0, 2)] = Complex64::new(libm::sqrt(1.0 - libm::exp(-0.63)), 0.0);
        assert!(ops[2].max_abs_diff(&k2) < 1e-14);
        assert!(ch.completeness_defect() < 1e-12);
    }

    #[test]
    fn kraus_at_zero_time() {
        let ch = se_kraus_qutrit(&params(1.0, 2.0, 0.0)).unwrap();
        assert_eq!(ch.operators()[0], ComplexMatrix::identity(3));
        assert_eq!(ch.operators()[1].max_abs(), 0.0);
        assert_eq!(ch.operators()[2].max_abs(), 0.0);

        let qb = se_kraus_qubit(&ChannelParams::default()).unwrap();
        assert_eq!(qb.operators()[0], ComplexMatrix::identity(2));
        assert_eq!(qb.operators()[1].max_abs(), 0.0);
    }

    #[test]
    fn qubit_kraus_examples() {
        let p = ChannelParams::new(1.0, 1.0, 1.0, libm::log(4.0), 0.5).unwrap();
        let ch = se_kraus_qubit(&p).unwrap();
        assert!(ch.operators()[0].max_abs_diff(&ComplexMatrix::diag(&[1.0, 0.5])) < 1e-15);
        let mut k1 = ComplexMatrix::zeros(2);
        k1[(0, 1)] = Complex64::new(SQRT3 / 2.0, 0.0);
        assert!(ch.operators()[1].max_abs_diff(&k1) < 1e-15);
        assert!(ch.completeness_defect() < 1e-12);
    }

    #[test]
    fn qubit_excited_population_decays_exponentially() {
        for t in [0.1, 0.5, 1.0, 3.0] {
            let p = ChannelParams::new(1.7, 1.0, 1.0, t, 0.5).unwrap();
            let out = apply_kraus(&ket_projector(2, 1), &se_kraus_qubit(&p).unwrap()).unwrap();
            assert_abs_diff_eq!(out[(1, 1)].re, libm::exp(-1.7 * t), epsilon = 1e-12);
            assert_abs_diff_eq!(out[(0, 0)].re, 1.0 - libm::exp(-1.7 * t), epsilon = 1e-12);
        }
    }

    #[test]
    fn ground_state_is_fixed_and_top_level_decays() {
        let ground = ket_projector(3, 0);
        for t in [0.0, 0.3, 2.0, 40.0] {
            let out = apply_kraus(&ground, &se_kraus_qutrit(&params(1.0, 2.0, t)).unwrap()).unwrap();
            assert!(out.max_abs_diff(&ground) < 1e-15);
        }
        let out = apply_kraus(&ket_projector(3, 2), &se_kraus_qutrit(&params(1.0, 2.0, 50.0)).unwrap()).unwrap();
        assert!(out.max_abs_diff(&ground) < 1e-12);
        assert!(validate_density(&out).passed());
    }

    #[test]
    fn apply_kraus_checks_dimension() {
        let ch = se_kraus_qutrit(&params(1.0, 1.0, 1.0)).unwrap();
        assert!(matches!(
            apply_kraus(&ComplexMatrix::identity(2), &ch),
            Err(Error::DimensionMismatch { expected: 3, actual: 2 })
        ));
    }

    #[test]
    fn jump_operators_are_lowering_maps() {
        let [l1, l2] = jump_operators(&params(4.0, 9.0, 0.0));
        let mut want1 = ComplexMatrix::zeros(3);
        want1[(0, 1)] = Complex64::new(2.0, 0.0);
        let mut want2 = ComplexMatrix::zeros(3);
        want2[(0, 2)] = Complex64::new(3.0, 0.0);
        assert!(l1.max_abs_diff(&want1) < 1e-15);
        assert!(l2.max_abs_diff(&want2) < 1e-15);
    }

    #[test]
    fn lindblad_examples() {
        let mixed = ComplexMatrix::identity(3).scale_real(1.0 / 3.0);
        let out = lindblad_evolve(&mixed, &params(0.0, 0.0, 2.0), 100).unwrap();
        assert!(out.max_abs_diff(&mixed) < 1e-15);

        let out = lindblad_evolve(&ket_projector(3, 1), &params(1.0, 0.0, 1.0), 1000).unwrap();
        assert_abs_diff_eq!(out[(1, 1)].re, 0.367_879_441_171_442_3, epsilon = 1e-6);
        assert_abs_diff_eq!(out.trace().re, 1.0, epsilon = 1e-10);
    }

    #[test]
    fn lindblad_rejects_zero_steps() {
        let rho = ket_projector(3, 1);
        assert!(matches!(lindblad_evolve(&rho, &params(1.0, 1.0, 1.0), 0), Err(Error::BadParams(_))));
    }

    #[test]
    fn bipartite_identity_at_zero_time() {
        let ch = se_kraus_qutrit(&params(1.0, 1.0, 0.0)).unwrap();
        let w = werner(&WernerParams::new(3, 0.6).unwrap()).unwrap();
        for mode in [BipartiteMode::OneSidedA, BipartiteMode::OneSidedB, BipartiteMode::Symmetric(0.3)] {
            assert!(bipartite_channel(&w, &ch, mode).unwrap().max_abs_diff(&w) < 1e-15);
        }
        assert!(bipartite_channel(&ComplexMatrix::identity(4), &ch, BipartiteMode::OneSidedA).is_err());
        assert!(bipartite_channel(&w, &ch, BipartiteMode::Symmetric(1.2)).is_err());
    }

    #[test]
    fn one_sided_correlations_scale_by_damping() {
        let p = params(0.8, 0.8, 1.3);
        let ch = se_kraus_qutrit(&p).unwrap();
        let out = bipartite_channel(&max_entangled(3).unwrap(), &ch, BipartiteMode::OneSidedA).unwrap();
        let c = correlation_matrix(&out, 3).unwrap();
        let map = se_affine_map(&p).unwrap();
        let s = [1.0, -1.0, 1.0, 1.0, -1.0, 1.0, -1.0, 1.0];
        for j in 1..=8 {
            assert_abs_diff_eq!(c.get(j, j), 0.5 * s[j - 1] * map.damping(j, j), epsilon = 1e-12);
        }
    }

    #[test]
    fn choi_state_is_positive() {
        for t in [0.0, 0.2, 1.0, 5.0] {
            let ch = se_kraus_qutrit(&params(1.5, 0.5, t)).unwrap();
            let report = validate_density(&ch.choi_state().unwrap());
            assert!(report.min_eigenvalue >= -1e-10, "t={t}: {report:?}");
        }
    }
}
