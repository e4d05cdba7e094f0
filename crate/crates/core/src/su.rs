// Copyright 2026 The qutrit-se Authors
// SPDX-License-Identifier: Apache-2.0

//! Pauli and Gell-Mann generator bases and the Bloch vector dictionary.
//!
//! Generator indices passed as `usize` to the accessors here are 1-based
//! (`lambda_1 ..= lambda_8`, `sigma_1 ..= sigma_3`); slices are 0-based, so
//! `n.components()[0]` is `n_1`.
//!
//! Normalizations:
//!
//! - qubit: `rho = (I + n.sigma) / 2`, `n_i = Tr(rho sigma_i)`
//! - qutrit: `rho = (I + sqrt(3) n.lambda) / 3`, `n_i = (sqrt(3)/2) Tr(rho lambda_i)`
//!
//! With these, pure states have `|n| = 1` in both cases.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, HERMITIAN_TOL};

const SQRT3: f64 = 1.732_050_807_568_877_2;
const ORTHONORMAL_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-10;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The three Pauli matrices `sigma_1, sigma_2, sigma_3`.
pub fn pauli_matrices() -> [ComplexMatrix; 3] {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    [
        ComplexMatrix::new(2, vec![z, one, one, z]).unwrap(),
        ComplexMatrix::new(2, vec![z, -i, i, z]).unwrap(),
        ComplexMatrix::diag(&[1.0, -1.0]),
    ]
}

/// The eight Gell-Mann matrices `lambda_1 ..= lambda_8`.
pub fn gell_mann_matrices() -> [ComplexMatrix; 8] {
    let sym = |a: usize, b: usize| {
        let mut m = ComplexMatrix::zeros(3);
        m[(a, b)] = c(1.0, 0.0);
        m[(b, a)] = c(1.0, 0.0);
        m
    };
    let asym = |a: usize, b: usize| {
        let mut m = ComplexMatrix::zeros(3);
        m[(a, b)] = c(0.0, -1.0);
        m[(b, a)] = c(0.0, 1.0);
        m
    };
    [
        sym(0, 1),
        asym(0, 1),
        ComplexMatrix::diag(&[1.0, -1.0, 0.0]),
        sym(0, 2),
        asym(0, 2),
        sym(1, 2),
        asym(1, 2),
        ComplexMatrix::diag(&[1.0 / SQRT3, 1.0 / SQRT3, -2.0 / SQRT3]),
    ]
}

/// Totally antisymmetric `f_ijk` and totally symmetric `d_ijk` constants.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    n: usize,
    f: Vec<f64>,
    d: Vec<f64>,
}

impl StructureConstants {
    fn at(&self, i: usize, j: usize, k: usize) -> usize {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j) && (1..=self.n).contains(&k));
        ((i - 1) * self.n + (j - 1)) * self.n + (k - 1)
    }

    /// Number of generators.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn f(&self, i: usize, j: usize, k: usize) -> f64 {
        self.f[self.at(i, j, k)]
    }

    pub fn d(&self, i: usize, j: usize, k: usize) -> f64 {
        self.d[self.at(i, j, k)]
    }
}

/// Computes `f_ijk = Tr([g_i, g_j] g_k) / (4i)` and `d_ijk = Tr({g_i, g_j} g_k) / 4`.
pub fn structure_constants(generators: &[ComplexMatrix]) -> Result<StructureConstants> {
    let n = generators.len();
    let mut worst: f64 = 0.0;
    for (a, ga) in generators.iter().enumerate() {
        for (b, gb) in generators.iter().enumerate() {
            let want = if a == b { 2.0 } else { 0.0 };
            worst = worst.max((ga.trace_product(gb) - c(want, 0.0)).norm());
        }
    }
    if worst > ORTHONORMAL_TOL {
        return Err(Error::BasisNotOrthonormal(worst));
    }

    let mut f = vec![0.0; n * n * n];
    let mut d = vec![0.0; n * n * n];
    for (i, gi) in generators.iter().enumerate() {
        for (j, gj) in generators.iter().enumerate() {
            let ij = gi * gj;
            let ji = gj * gi;
            let comm = &ij - &ji;
            let anti = &ij + &ji;
            for (k, gk) in generators.iter().enumerate() {
                let fz = comm.trace_product(gk) / c(0.0, 4.0);
                let dz = anti.trace_product(gk) * 0.25;
                debug_assert!(fz.im.abs() <= ORTHONORMAL_TOL && dz.im.abs() <= ORTHONORMAL_TOL);
                f[(i * n + j) * n + k] = fz.re;
                d[(i * n + j) * n + k] = dz.re;
            }
        }
    }
    Ok(StructureConstants { n, f, d })
}

/// Generators of SU(2) or SU(3) together with their structure constants.
#[derive(Debug, Clone)]
pub struct GeneratorBasis {
    dim: usize,
    generators: Vec<ComplexMatrix>,
    constants: StructureConstants,
}

impl GeneratorBasis {
    pub fn pauli() -> Self {
        Self::from_generators(2, pauli_matrices().into())
    }

    pub fn gell_mann() -> Self {
        Self::from_generators(3, gell_mann_matrices().into())
    }

    /// Basis for Hilbert-space dimension 2 or 3.
    pub fn for_dim(dim: usize) -> Result<Self> {
        match dim {
            2 => Ok(Self::pauli()),
            3 => Ok(Self::gell_mann()),
            other => Err(Error::BadDimension(other)),
        }
    }

    fn from_generators(dim: usize, generators: Vec<ComplexMatrix>) -> Self {
        let constants = structure_constants(&generators).expect("built-in basis is orthonormal");
        Self { dim, generators, constants }
    }

    /// Hilbert-space dimension (2 or 3).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ComplexMatrix] {
        &self.generators
    }

    /// `sigma_i` or `lambda_i`, 1-based.
    pub fn generator(&self, i: usize) -> &ComplexMatrix {
        &self.generators[i - 1]
    }

    /// `sigma_0 = I` for qubits, `lambda_0 = sqrt(2/3) I` for qutrits.
    pub fn identity_element(&self) -> ComplexMatrix {
        match self.dim {
            2 => ComplexMatrix::identity(2),
            _ => ComplexMatrix::identity(3).scale_real(libm::sqrt(2.0 / 3.0)),
        }
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    /// Right-hand side of `g_i g_j = (2/N) delta_ij I + (d_ijk + i f_ijk) g_k`.
    pub fn product_expansion(&self, i: usize, j: usize) -> ComplexMatrix {
        let mut out = if i == j {
            ComplexMatrix::identity(self.dim).scale_real(2.0 / self.dim as f64)
        } else {
            ComplexMatrix::zeros(self.dim)
        };
        for k in 1..=self.generators.len() {
            let coeff = c(self.constants.d(i, j, k), self.constants.f(i, j, k));
            out = &out + &self.generator(k).scale(coeff);
        }
        out
    }

    /// `(n * m)_i = sqrt(3) d_ijk n_j m_k` on qutrit Bloch vectors.
    pub fn star_product(&self, n: &BlochVector, m: &BlochVector) -> Result<BlochVector> {
        if self.dim != 3 {
            return Err(Error::BadDimension(self.dim));
        }
        for v in [n, m] {
            if v.len() != 8 {
                return Err(Error::BadDimension(v.len()));
            }
        }
        let mut out = vec![0.0; 8];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = 0.0;
            for j in 0..8 {
                for k in 0..8 {
                    acc += self.constants.d(i + 1, j + 1, k + 1) * n.0[j] * m.0[k];
                }
            }
            *slot = SQRT3 * acc;
        }
        Ok(BlochVector(out))
    }

    /// Pure-state test `n.n = 1` and `n * n = n`, each within `tol`.
    pub fn is_pure_bloch(&self, n: &BlochVector, tol: f64) -> bool {
        if (n.norm_sq() - 1.0).abs() > tol {
            return false;
        }
        if n.len() == 3 {
            return true;
        }
        match self.star_product(n, n) {
            Ok(nn) => nn.max_abs_diff(n) <= tol,
            Err(_) => false,
        }
    }
}

/// Real Bloch vector: 3 components for a qubit, 8 for a qutrit.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochVector(Vec<f64>);

impl BlochVector {
    pub fn new(components: Vec<f64>) -> Result<Self> {
        match components.len() {
            3 | 8 => Ok(Self(components)),
            other => Err(Error::BadDimension(other)),
        }
    }

    pub fn zero(len: usize) -> Result<Self> {
        Self::new(vec![0.0; len])
    }

    /// Unit vector along generator `i` (1-based).
    pub fn unit(len: usize, i: usize) -> Result<Self> {
        let mut v = Self::zero(len)?;
        v.0[i - 1] = 1.0;
        Ok(v)
    }

    pub fn components(&self) -> &[f64] {
        &self.0
    }

    pub fn into_components(self) -> Vec<f64> {
        self.0
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Hilbert-space dimension the vector describes.
    pub fn hilbert_dim(&self) -> usize {
        if self.0.len() == 3 {
            2
        } else {
            3
        }
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self(self.0.iter().map(|x| x * factor).collect())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Density operator for a Bloch vector. Positivity is not checked.
pub fn bloch_to_density(n: &BlochVector) -> ComplexMatrix {
    match n.len() {
        3 => {
            let mut rho = ComplexMatrix::identity(2);
            for (g, &x) in pauli_matrices().iter().zip(n.components()) {
                rho = &rho + &g.scale_real(x);
            }
            rho.scale_real(0.5)
        }
        _ => {
            let mut rho = ComplexMatrix::identity(3);
            for (g, &x) in gell_mann_matrices().iter().zip(n.components()) {
                rho = &rho + &g.scale_real(SQRT3 * x);
            }
            rho.scale_real(1.0 / 3.0)
        }
    }
}

/// Bloch vector of a unit-trace Hermitian 2x2 or 3x3 operator.
pub fn density_to_bloch(rho: &ComplexMatrix) -> Result<BlochVector> {
    let defect = rho.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NonHermitianInput { defect });
    }
    let tr = rho.trace().re;
    if (tr - 1.0).abs() > TRACE_TOL {
        return Err(Error::BadTrace(tr));
    }
    match rho.dim() {
        2 => BlochVector::new(pauli_matrices().iter().map(|g| rho.trace_product(g).re).collect()),
        3 => BlochVector::new(
            gell_mann_matrices()
                .iter()
                .map(|g| 0.5 * SQRT3 * rho.trace_product(g).re)
                .collect(),
        ),
        other => Err(Error::BadDimension(other)),
    }
}

/// See [`GeneratorBasis::star_product`].
pub fn star_product(n: &BlochVector, m: &BlochVector) -> Result<BlochVector> {
    GeneratorBasis::gell_mann().star_product(n, m)
}

/// See [`GeneratorBasis::is_pure_bloch`].
pub fn is_pure_bloch(n: &BlochVector, tol: f64) -> bool {
    let basis = if n.len() == 3 { GeneratorBasis::pauli() } else { GeneratorBasis::gell_mann() };
    basis.is_pure_bloch(n, tol)
}

fn check_populations(p2: f64, p3: f64) -> Result<()> {
    let ok = p2.is_finite() && p3.is_finite() && p2 >= 0.0 && p3 >= 0.0 && p2 + p3 <= 1.0;
    if ok {
        Ok(())
    } else {
        Err(Error::BadPopulations { p2, p3 })
    }
}

/// V-atom density matrix from populations `p2, p3` (with `p1 = 1 - p2 - p3`)
/// and coherences `d_ij = rho_ij`.
pub fn atom_vars_to_density(
    p2: f64,
    p3: f64,
    d12: Complex64,
    d13: Complex64,
    d23: Complex64,
) -> Result<ComplexMatrix> {
    check_populations(p2, p3)?;
    let mut rho = ComplexMatrix::diag(&[1.0 - p2 - p3, p2, p3]);
    for (a, b, z) in [(0, 1, d12), (0, 2, d13), (1, 2, d23)] {
        rho[(a, b)] = z;
        rho[(b, a)] = z.conj();
    }
    Ok(rho)
}

/// Qutrit Bloch vector from V-atom populations and coherences.
///
/// Coherence pairs map as `n_1 = sqrt(3) Re d12`, `n_2 = -sqrt(3) Im d12`,
/// and likewise `(n_4, n_5)` for `d13` and `(n_6, n_7)` for `d23`.
pub fn atom_vars_to_bloch(
    p2: f64,
    p3: f64,
    d12: Complex64,
    d13: Complex64,
    d23: Complex64,
) -> Result<BlochVector> {
    check_populations(p2, p3)?;
    BlochVector::new(vec![
        SQRT3 * d12.re,
        -SQRT3 * d12.im,
        0.5 * SQRT3 * (1.0 - 2.0 * p2 - p3),
        SQRT3 * d13.re,
        -SQRT3 * d13.im,
        SQRT3 * d23.re,
        -SQRT3 * d23.im,
        0.5 * (1.0 - 3.0 * p3),
    ])
}
