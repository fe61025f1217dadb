//! Lie algebras by skew structure constants `[e_i, e_j] = l_{ij}^k e_k`.
//! Used for the adjacent algebra `A_L` and for dual brackets on `A*`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{Tensor2, Vector};
use crate::residual::ResidualReport;
use crate::scalar::{zero, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieStructure {
    dim: usize,
    constants: BTreeMap<(usize, usize, usize), Scalar>,
}

impl LieStructure {
    /// Zero entries are dropped; skewness is not enforced, only reported.
    pub fn from_map(dim: usize, mut constants: BTreeMap<(usize, usize, usize), Scalar>) -> Self {
        constants.retain(|_, v| !v.is_zero());
        LieStructure { dim, constants }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.constants.get(&(i, j, k)).cloned().unwrap_or_else(zero)
    }

    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.constants.iter().map(|(&(i, j, k), v)| (i, j, k, v))
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.is_empty()
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (&(i, j, k), v) in &self.constants {
            if x.0[i].is_zero() || y.0[j].is_zero() {
                continue;
            }
            out.0[k] += v * &x.0[i] * &y.0[j];
        }
        out
    }

    /// Adjoint action of `x` on `A⊗A`, leg by leg.
    pub fn ad_tensor2(&self, x: &Vector, t: &Tensor2) -> Tensor2 {
        let n = self.dim;
        let mut out = Tensor2::zero(n);
        for ((a, b), v) in t.nonzero() {
            for (&(i, j, k), c) in &self.constants {
                if x.0[i].is_zero() {
                    continue;
                }
                let w = &x.0[i] * c * v;
                if j == a {
                    out.add_at(k, b, &w);
                }
                if j == b {
                    out.add_at(a, k, &w);
                }
            }
        }
        out
    }

    /// Residuals of `l_{ij}^k + l_{ji}^k`, indexed `(i, j, k)` with `i ≤ j`.
    pub fn skewness_residual(&self) -> ResidualReport {
        let n = self.dim;
        let mut values = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    values.push((vec![i, j, k], self.coeff(i, j, k) + self.coeff(j, i, k)));
                }
            }
        }
        let checked = values.len();
        ResidualReport::from_values(values, checked)
    }

    /// Residuals of `Σ_m l_{ij}^m l_{mk}^p + l_{jk}^m l_{mi}^p + l_{ki}^m l_{mj}^p`,
    /// indexed `(i, j, k, p)`.
    pub fn jacobi_residual(&self) -> ResidualReport {
        let n = self.dim;
        // dense copy for the n^5 loop
        let mut l = vec![zero(); n * n * n];
        for (&(i, j, k), v) in &self.constants {
            l[(i * n + j) * n + k] = v.clone();
        }
        let at = |i: usize, j: usize, k: usize| &l[(i * n + j) * n + k];
        let mut values = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut acc = vec![zero(); n];
                    for m in 0..n {
                        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                            let lm = at(a, b, m);
                            if lm.is_zero() {
                                continue;
                            }
                            for (p, slot) in acc.iter_mut().enumerate() {
                                let rhs = at(m, c, p);
                                if !rhs.is_zero() {
                                    *slot += lm * rhs;
                                }
                            }
                        }
                    }
                    for (p, v) in acc.into_iter().enumerate() {
                        values.push((vec![i, j, k, p], v));
                    }
                }
            }
        }
        ResidualReport::from_values(values, n.pow(4))
    }
}
