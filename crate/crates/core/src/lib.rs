// Copyright 2026 The qutrit-se Authors
// SPDX-License-Identifier: Apache-2.0

//! Spontaneous-emission (SE) channels for qubits and V-configuration qutrits.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! - [`linalg`]: a small dense complex matrix type with Kronecker products,
//!   partial trace / transpose and a Jacobi Hermitian eigensolver.
//! - [`su`]: Pauli and Gell-Mann bases, structure constants and the
//!   Bloch vector dictionary.
//! - [`states`]: maximally entangled and Werner states, correlation matrices.
//! - [`channels`]: the SE channel as an affine Bloch map, as a Kraus set and
//!   as a Lindblad equation, plus the bipartite one-sided / symmetric channels.
//! - [`analysis`]: separability functions, fidelities, crossing times,
//!   negativity and Haar moment estimates.
//!
//! Composite indices always put subsystem A on the slow (outer) index.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod channels;
mod error;
pub mod linalg;
pub mod states;
pub mod su;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, Side};
pub use num_complex::Complex64;
