// Copyright 2026 The qutrit-se Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (defect {defect:e})")]
    NonHermitianInput { defect: f64 },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("unsupported dimension {0}")]
    BadDimension(usize),
    #[error("trace is {0}, expected 1")]
    BadTrace(f64),
    #[error("generators are not orthonormal under Tr(g_i g_j) = 2 delta_ij (defect {0:e})")]
    BasisNotOrthonormal(f64),
    #[error("invalid populations p2={p2}, p3={p3}")]
    BadPopulations { p2: f64, p3: f64 },
    #[error("invalid parameter: {0}")]
    BadParams(&'static str),
    #[error("threshold {threshold} is not crossed before t={t_hi}")]
    NotBracketed { threshold: f64, t_hi: f64 },
}
