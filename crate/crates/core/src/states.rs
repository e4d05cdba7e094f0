// Copyright 2026 The qutrit-se Authors
// SPDX-License-Identifier: Apache-2.0

//! Reference states: maximally entangled pairs, Werner mixtures, and
//! two-party correlation matrices.
//!
//! Basis labels `|1>, |2>, |3>` are computational indices 0, 1, 2; `|1>` is
//! the ground level of the V atom.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix, DEFAULT_EIG_TOL};
use crate::su;

/// Defect bound used by [`validate_density`].
pub const VALIDATION_TOL: f64 = 1e-10;

fn check_local_dim(d: usize) -> Result<()> {
    match d {
        2 | 3 => Ok(()),
        other => Err(Error::BadDimension(other)),
    }
}

/// `(|1,1> + ... + |d,d>) / sqrt(d)` as a ket of length `d^2`.
pub fn max_entangled_ket(d: usize) -> Result<Vec<Complex64>> {
    check_local_dim(d)?;
    let amp = Complex64::new(1.0 / libm::sqrt(d as f64), 0.0);
    let mut ket = vec![Complex64::new(0.0, 0.0); d * d];
    for k in 0..d {
        ket[k * d + k] = amp;
    }
    Ok(ket)
}

/// Projector onto the maximally entangled state of two qubits (`d = 2`) or qutrits (`d = 3`).
pub fn max_entangled(d: usize) -> Result<ComplexMatrix> {
    Ok(ComplexMatrix::outer(&max_entangled_ket(d)?))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerParams {
    /// Local dimension, 2 or 3.
    pub d: usize,
    /// Weight of the maximally entangled component, in `[0, 1]`.
    pub p: f64,
}

impl WernerParams {
    pub fn new(d: usize, p: f64) -> Result<Self> {
        let params = Self { d, p };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        check_local_dim(self.d)?;
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::BadParams("Werner weight p must lie in [0, 1]"));
        }
        Ok(())
    }
}

/// `(1 - p)/d^2 I + p |Psi><Psi|`.
pub fn werner(params: &WernerParams) -> Result<ComplexMatrix> {
    params.validate()?;
    let d = params.d;
    let noise = ComplexMatrix::identity(d * d).scale_real((1.0 - params.p) / (d * d) as f64);
    let psi = max_entangled(d)?.scale_real(params.p);
    Ok(&noise + &psi)
}

/// Real `(d^2 - 1) x (d^2 - 1)` correlation matrix of a two-party state.
///
/// Qubits: `C_ij = <sigma_i ⊗ sigma_j>`. Qutrits: `C_ij = (3/4) <lambda_i ⊗ lambda_j>`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationMatrix {
    d: usize,
    n: usize,
    entries: Vec<f64>,
}

impl CorrelationMatrix {
    /// Local dimension.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of rows (3 or 8).
    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry `C_ij`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (1..=self.n).map(|i| self.get(i, i)).collect()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

pub fn correlation_matrix(rho: &ComplexMatrix, d: usize) -> Result<CorrelationMatrix> {
    check_local_dim(d)?;
    if rho.dim() != d * d {
        return Err(Error::DimensionMismatch { expected: d * d, actual: rho.dim() });
    }
    let (gens, scale): (Vec<ComplexMatrix>, f64) = if d == 2 {
        (su::pauli_matrices().into(), 1.0)
    } else {
        (su::gell_mann_matrices().into(), 0.75)
    };
    let n = gens.len();
    let mut entries = Vec::with_capacity(n * n);
    for gi in &gens {
        for gj in &gens {
            entries.push(scale * rho.trace_product(&linalg::kron(gi, gj)).re);
        }
    }
    Ok(CorrelationMatrix { d, n, entries })
}

/// Hermiticity, trace and positivity defects of a candidate density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationReport {
    pub hermiticity_defect: f64,
    pub trace_defect: f64,
    /// Smallest eigenvalue of the Hermitian part; NaN if the eigensolver failed.
    pub min_eigenvalue: f64,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.hermiticity_defect <= VALIDATION_TOL
            && self.trace_defect <= VALIDATION_TOL
            && self.min_eigenvalue >= -VALIDATION_TOL
    }
}

pub fn validate_density(rho: &ComplexMatrix) -> ValidationReport {
    let hermiticity_defect = rho.hermiticity_defect();
    let tr = rho.trace();
    let trace_defect = (tr - Complex64::new(1.0, 0.0)).norm();
    let hermitian_part = (rho + &rho.adjoint()).scale_real(0.5);
    let min_eigenvalue = linalg::hermitian_eigenvalues(&hermitian_part, DEFAULT_EIG_TOL)
        .ok()
        .and_then(|ev| ev.first().copied())
        .unwrap_or(f64::NAN);
    ValidationReport { hermiticity_defect, trace_defect, min_eigenvalue }
}
