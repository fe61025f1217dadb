//! Independent reference computations. Everything here works pointwise on
//! dense coefficient arrays with exact rationals and shares no code with the
//! library beyond reading structure constants and building inputs.

#![allow(dead_code)]

use num_traits::Zero;
use proptest::test_runner::{Config, RngSeed};
use quadpoisson::algebra::Algebra;
use quadpoisson::poisson::PolyTensor;
use quadpoisson::scalar::{int, Scalar};

pub fn config(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

/// Dense `a_{ij}^k`.
pub struct Dense {
    pub n: usize,
    a: Vec<Scalar>,
}

impl Dense {
    pub fn new(alg: &Algebra) -> Self {
        let n = alg.dim();
        let mut a = vec![Scalar::zero(); n * n * n];
        for (i, j, k, v) in alg.structure() {
            a[(i * n + j) * n + k] = v.clone();
        }
        Dense { n, a }
    }

    pub fn from_table(n: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut a = vec![Scalar::zero(); n * n * n];
        for &(i, j, k, v) in entries {
            a[(i * n + j) * n + k] = int(v);
        }
        Dense { n, a }
    }

    pub fn at(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.a[(i * self.n + j) * self.n + k]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.n;
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out[k] += &x[i] * &y[j] * self.at(i, j, k);
                }
            }
        }
        out
    }
}

/// Full coefficient array `C[i][j][k][l]` of a quadratic bracket.
pub struct Quad {
    pub n: usize,
    c: Vec<Scalar>,
}

impl Quad {
    pub fn at(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        let n = self.n;
        &self.c[((i * n + j) * n + k) * n + l]
    }

    /// `scale·r^{pq}(a_{pk}^i a_{ql}^j − a_{kp}^i a_{lq}^j)`, straight from the
    /// definition of `[r, x⊗x]`.
    pub fn from_r(d: &Dense, r: &[Scalar], scale: &Scalar) -> Quad {
        let n = d.n;
        let mut c = vec![Scalar::zero(); n * n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut v = Scalar::zero();
                        for p in 0..n {
                            for q in 0..n {
                                let rpq = &r[p * n + q];
                                if rpq.is_zero() {
                                    continue;
                                }
                                v += rpq * (d.at(p, k, i) * d.at(q, l, j) - d.at(k, p, i) * d.at(l, q, j));
                            }
                        }
                        c[((i * n + j) * n + k) * n + l] = v * scale;
                    }
                }
            }
        }
        Quad { n, c }
    }

    /// Reads a library bracket through its monomial coefficients.
    pub fn from_poly(pt: &PolyTensor) -> Quad {
        let n = pt.dim();
        let mut c = vec![Scalar::zero(); n * n * n * n];
        for (i, j, lower, v) in pt.coefficient_list() {
            let (k, l) = (lower[0], lower[1]);
            c[((i * n + j) * n + k) * n + l] += &v;
            c[((j * n + i) * n + k) * n + l] -= &v;
        }
        Quad { n, c }
    }

    pub fn eval(&self, x: &[Scalar]) -> Vec<Scalar> {
        let n = self.n;
        let mut out = vec![Scalar::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let c = self.at(i, j, k, l);
                        if !c.is_zero() {
                            out[i * n + j] += c * &x[k] * &x[l];
                        }
                    }
                }
            }
        }
        out
    }

    /// `∂_m π^{ij}(x)`.
    pub fn grad(&self, x: &[Scalar]) -> Vec<Scalar> {
        let n = self.n;
        let mut out = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for m in 0..n {
                    let mut v = Scalar::zero();
                    for s in 0..n {
                        v += (self.at(i, j, m, s) + self.at(i, j, s, m)) * &x[s];
                    }
                    out[(i * n + j) * n + m] = v;
                }
            }
        }
        out
    }

    /// Jacobiator values `J^{ijk}(x)` for `i < j < k`.
    pub fn jacobi_at(&self, x: &[Scalar]) -> Vec<Scalar> {
        let n = self.n;
        let p = self.eval(x);
        let g = self.grad(x);
        let pi = |a: usize, b: usize| &p[a * n + b];
        let d = |a: usize, b: usize, m: usize| &g[(a * n + b) * n + m];
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut v = Scalar::zero();
                    for l in 0..n {
                        v += pi(l, k) * d(i, j, l) + pi(l, i) * d(j, k, l) + pi(l, j) * d(k, i, l);
                    }
                    out.push(v);
                }
            }
        }
        out
    }

    /// `π(yz) − a^i_{pq}a^j_{st}(z^q z^t π^{ps}(y) + y^p y^s π^{qt}(z))`.
    pub fn multiplicativity_at(&self, d: &Dense, y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let n = self.n;
        let lhs = self.eval(&d.mul(y, z));
        let py = self.eval(y);
        let pz = self.eval(z);
        let mut out = lhs;
        for i in 0..n {
            for j in 0..n {
                let mut v = Scalar::zero();
                for p in 0..n {
                    for q in 0..n {
                        let a1 = d.at(p, q, i);
                        if a1.is_zero() {
                            continue;
                        }
                        for s in 0..n {
                            for t in 0..n {
                                let a2 = d.at(s, t, j);
                                if a2.is_zero() {
                                    continue;
                                }
                                v += a1 * a2 * (&z[q] * &z[t] * &py[p * n + s] + &y[p] * &y[s] * &pz[q * n + t]);
                            }
                        }
                    }
                }
                out[i * n + j] -= v;
            }
        }
        out
    }
}

pub fn all_zero(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Deterministic rational test points.
pub fn points(n: usize, count: usize, seed: u64) -> Vec<Vec<Scalar>> {
    use rand::Rng;
    let mut rng = quadpoisson::random::rng(seed);
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| quadpoisson::scalar::ratio(rng.gen_range(-7..=7), rng.gen_range(1..=3)))
                .collect()
        })
        .collect()
}
