//! Lie-bialgebra data read off a quadratic bracket: the cobracket family
//! `Δ_a(x) = δ(x⊗a + a⊗x)`, its dual Lie algebra on `A*`, the cocycle
//! condition, coboundary cobrackets and linear/quadratic pencils.

use num_traits::Zero;

use crate::algebra::{Algebra, Tensor2, Vector};
use crate::error::{Error, Result};
use crate::lie::LieStructure;
use crate::poisson::{jacobi_mixed, LinearTensor, QuadraticTensor};
use crate::poly::Poly;
use crate::residual::ResidualReport;
use crate::scalar::{int, Scalar};
use crate::yang_baxter::RMatrix;

/// `Δ(e_k) = d_k^{ij} e_i⊗e_j` for every basis index `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cobracket {
    dim: usize,
    images: Vec<Tensor2>,
}

impl Cobracket {
    /// Every image must be antisymmetric.
    pub fn new(images: Vec<Tensor2>) -> Result<Self> {
        let dim = images.len();
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for t in &images {
            if t.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: t.dim(),
                });
            }
            RMatrix::new(t.clone())?;
        }
        Ok(Cobracket { dim, images })
    }

    pub fn zero(dim: usize) -> Self {
        Cobracket {
            dim,
            images: vec![Tensor2::zero(dim); dim],
        }
    }

    /// From `(k, i, j, d_k^{ij})` entries, completed antisymmetrically in
    /// `(i, j)`; conflicting orientations are rejected.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>) -> Result<Self> {
        let mut per_k: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); dim];
        for (k, i, j, v) in entries {
            if k >= dim {
                return Err(Error::IndexOutOfRange { index: k, dim });
            }
            per_k[k].push((i, j, v));
        }
        let images = per_k
            .into_iter()
            .map(|e| RMatrix::from_upper(dim, e).map(|r| r.tensor().clone()))
            .collect::<Result<Vec<_>>>()?;
        Cobracket::new(images)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn image(&self, k: usize) -> &Tensor2 {
        &self.images[k]
    }

    pub fn d(&self, k: usize, i: usize, j: usize) -> &Scalar {
        self.images[k].get(i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Tensor2::is_zero)
    }

    /// `(k, i, j, d_k^{ij})` with `i < j`, nonzero only.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (k, t) in self.images.iter().enumerate() {
            for ((i, j), v) in t.nonzero() {
                if i < j {
                    out.push((k, i, j, v.clone()));
                }
            }
        }
        out
    }

    /// `Δ(x)` for an arbitrary vector.
    pub fn apply(&self, x: &Vector) -> Tensor2 {
        let mut out = Tensor2::zero(self.dim);
        for (k, xk) in x.0.iter().enumerate() {
            if !xk.is_zero() {
                out = out.add(&self.images[k].scale(xk));
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Cobracket {
        Cobracket {
            dim: self.dim,
            images: self.images.iter().map(|t| t.scale(s)).collect(),
        }
    }

    pub fn add(&self, other: &Cobracket) -> Cobracket {
        Cobracket {
            dim: self.dim,
            images: self.images.iter().zip(&other.images).map(|(a, b)| a.add(b)).collect(),
        }
    }

    /// Returns a copy with `d_k^{ij}` replaced by `v` (and `d_k^{ji}` by `−v`).
    pub fn with_entry(&self, k: usize, i: usize, j: usize, v: Scalar) -> Cobracket {
        let mut out = self.clone();
        out.images[k].set(j, i, -&v);
        out.images[k].set(i, j, v);
        out
    }
}

fn check(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// `Δ_a(e_k)^{ij} = (c^{ij}_{kl} + c^{ij}_{lk}) a^l`; `doubled` multiplies by 2
/// (the `a = u` cobracket of a Poisson–Lie group).
pub fn cobracket_at(alg: &Algebra, qt: &QuadraticTensor, a: &Vector, doubled: bool) -> Result<Cobracket> {
    let n = alg.dim();
    check(n, qt.dim())?;
    check(n, a.dim())?;
    let mut images = vec![Tensor2::zero(n); n];
    // ∂_k π^{ij} evaluated at a is exactly (c_kl + c_lk) a^l
    for ((i, j), p) in qt.entries() {
        for k in 0..n {
            let v = p.derivative(k).eval(&a.0);
            if !v.is_zero() {
                images[k].add_at(i, j, &v);
                images[k].add_at(j, i, &-&v);
            }
        }
    }
    let cb = Cobracket { dim: n, images };
    Ok(if doubled { cb.scale(&int(2)) } else { cb })
}

/// Dual Lie algebra on `A*`: `[x^i, x^j] = d_k^{ij} x^k`, with skewness
/// (tag 0) and Jacobi (tag 1) residuals.
pub fn dual_lie(cb: &Cobracket) -> (LieStructure, ResidualReport) {
    let n = cb.dim();
    let mut constants = std::collections::BTreeMap::new();
    for k in 0..n {
        for ((i, j), v) in cb.image(k).nonzero() {
            constants.insert((i, j, k), v.clone());
        }
    }
    let lie = LieStructure::from_map(n, constants);
    let report = ResidualReport::merge([(0, lie.skewness_residual()), (1, lie.jacobi_residual())]);
    (lie, report)
}

/// The linear bracket `{x^i, x^j} = d_k^{ij} x^k` dual to `cb`.
pub fn dual_bracket(cb: &Cobracket) -> LinearTensor {
    let raw = cb.entries().into_iter().map(|(k, i, j, v)| (i, j, vec![k], v));
    LinearTensor::canonicalize(cb.dim(), raw).expect("indices in range")
}

/// The linear bracket `{x^i, x^j} = l_{ij}^k x^k` of a Lie algebra.
pub fn linear_from_lie(lie: &LieStructure) -> LinearTensor {
    let raw = lie.constants().map(|(i, j, k, v)| (i, j, vec![k], v.clone()));
    LinearTensor::canonicalize(lie.dim(), raw).expect("indices in range")
}

/// `Δ([e_i,e_j]) − ad_{e_i}Δ(e_j) + ad_{e_j}Δ(e_i)` for `i < j`, indexed
/// `(i, j, a, b)`.
pub fn cocycle_residual(lie: &LieStructure, cb: &Cobracket) -> Result<ResidualReport> {
    let n = lie.dim();
    check(n, cb.dim())?;
    let mut values = Vec::new();
    let mut checked = 0;
    for i in 0..n {
        for j in i + 1..n {
            checked += 1;
            let (ei, ej) = (Vector::basis(n, i), Vector::basis(n, j));
            let res = cb
                .apply(&lie.bracket(&ei, &ej))
                .sub(&lie.ad_tensor2(&ei, cb.image(j)))
                .add(&lie.ad_tensor2(&ej, cb.image(i)));
            for ((a, b), v) in res.nonzero() {
                values.push((vec![i, j, a, b], v.clone()));
            }
        }
    }
    Ok(ResidualReport::from_values(values, checked))
}

/// `Δ_r(e_k) = [r, e_k⊗u + u⊗e_k]`.
pub fn coboundary_cobracket(alg: &Algebra, r: &RMatrix) -> Result<Cobracket> {
    let n = alg.dim();
    check(n, r.dim())?;
    let u = alg.require_unit()?.clone();
    let images = (0..n)
        .map(|k| {
            let ek = Vector::basis(n, k);
            let s = Tensor2::outer(&ek, &u).add(&Tensor2::outer(&u, &ek));
            alg.tensor2_commutator(r.tensor(), &s)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Cobracket { dim: n, images })
}

/// Mixed Jacobiator of a quadratic and a linear bracket; passes exactly when
/// the pencil spanned by two Poisson endpoints is Poisson.
pub fn pencil_residual(qt: &QuadraticTensor, lt: &LinearTensor) -> Result<ResidualReport> {
    jacobi_mixed(qt, lt)
}

/// `π(x + t·u) − π(x) − t·Δ_u*(x)`, indexed `(i, j, monomial vars)`. The `t²`
/// term `π(u)` is deliberately not subtracted: for multiplicative brackets
/// it vanishes, so the residual passes exactly when the shift is linear in `t`
/// with slope the undoubled `Δ_u` dual bracket.
pub fn shift_residual(alg: &Algebra, qt: &QuadraticTensor, t: &Scalar) -> Result<ResidualReport> {
    let n = alg.dim();
    check(n, qt.dim())?;
    let u = alg.require_unit()?;
    let lt = dual_bracket(&cobracket_at(alg, qt, u, false)?);
    let subs: Vec<Poly> = (0..n)
        .map(|k| Poly::var(k).add(&Poly::constant(t * &u.0[k])))
        .collect();
    let mut values = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let shifted = qt.entry(i, j).substitute(&subs);
            let expected = qt.entry(i, j).add(&lt.entry(i, j).scale(t));
            for (m, v) in shifted.sub(&expected).terms() {
                let mut index = vec![i, j];
                index.extend(m.iter().map(|&x| x as usize));
                values.push((index, v.clone()));
            }
        }
    }
    Ok(ResidualReport::from_values(values, n * (n - 1) / 2))
}

/// `Δ_a` is linear in `a`: residual of `Δ_{a+b} − Δ_a − Δ_b`.
pub fn linearity_defect(alg: &Algebra, qt: &QuadraticTensor, a: &Vector, b: &Vector) -> Result<Cobracket> {
    let sum = cobracket_at(alg, qt, &a.add(b), false)?;
    let parts = cobracket_at(alg, qt, a, false)?.add(&cobracket_at(alg, qt, b, false)?);
    Ok(sum.add(&parts.scale(&int(-1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, CatalogAlgebra};
    use crate::scalar::{one, ratio};
    use crate::yang_baxter::quadratic_from_r;

    fn quat() -> Algebra {
        catalog::get_algebra(&CatalogAlgebra::Quaternions).unwrap()
    }

    fn quat_bracket() -> QuadraticTensor {
        quadratic_from_r(&quat(), &RMatrix::wedge(4, 2, 3), &ratio(1, 2)).unwrap()
    }

    #[test]
    fn zero_direction_gives_zero_cobracket() {
        let h = quat();
        assert!(cobracket_at(&h, &quat_bracket(), &Vector::zero(4), true).unwrap().is_zero());
    }

    #[test]
    fn quaternion_doubled_unit_cobracket() {
        let h = quat();
        let u = h.unit().unwrap().clone();
        let cb = cobracket_at(&h, &quat_bracket(), &u, true).unwrap();
        assert!(cb.image(0).is_zero());
        assert!(cb.image(1).is_zero());
        let expected = Tensor2::wedge(&Vector::basis(4, 1), &Vector::basis(4, 2)).scale(&int(2));
        assert_eq!(cb.image(2), &expected);
        assert_eq!(coboundary_cobracket(&h, &RMatrix::wedge(4, 2, 3)).unwrap(), cb);
    }

    #[test]
    fn heisenberg_unital_linear_bracket() {
        let hbar = ratio(3, 2);
        let a = catalog::get_algebra(&CatalogAlgebra::HeisenbergUnital(hbar.clone())).unwrap();
        // basis 1, p, q, z
        let qt = quadratic_from_r(&a, &RMatrix::wedge(4, 1, 2), &one()).unwrap();
        let lt = dual_bracket(&cobracket_at(&a, &qt, a.unit().unwrap(), false).unwrap());
        assert_eq!(lt.entry(1, 3), Poly::term(&[1], -hbar.clone()));
        assert_eq!(lt.entry(2, 3), Poly::term(&[2], -hbar));
        assert!(lt.entry(1, 2).is_zero());
        assert!(crate::poisson::jacobiator(&lt).is_zero());
    }

    #[test]
    fn dual_lie_of_quaternion_bracket() {
        let h = quat();
        let cb = cobracket_at(&h, &quat_bracket(), h.unit().unwrap(), false).unwrap();
        let (lie, report) = dual_lie(&cb);
        assert!(report.pass);
        assert!(!lie.is_abelian());
        let (zero_lie, zero_report) = dual_lie(&Cobracket::zero(3));
        assert!(zero_lie.is_abelian() && zero_report.pass);
    }

    #[test]
    fn cocycle_examples() {
        let h = quat();
        let lie = h.lie_structure();
        assert!(cocycle_residual(&lie, &Cobracket::zero(4)).unwrap().pass);
        let cb = coboundary_cobracket(&h, &RMatrix::wedge(4, 1, 3)).unwrap();
        assert!(cocycle_residual(&lie, &cb).unwrap().pass);
        let delta_u = coboundary_cobracket(&h, &RMatrix::wedge(4, 2, 3)).unwrap();
        assert!(cocycle_residual(&lie, &delta_u).unwrap().pass);
        assert_eq!(delta_u.d(2, 1, 2), &int(2));
        let corrupted = delta_u.with_entry(2, 1, 2, int(-2));
        let report = cocycle_residual(&lie, &corrupted).unwrap();
        assert!(!report.pass);
        // the change −4·i∧j in Δ(j) shows up as −ad_i(−4·i∧j) = 8(i⊗k − k⊗i)
        assert_eq!(report.value_at(&[1, 2, 1, 3]), Some(&int(8)));
        assert_eq!(report.value_at(&[1, 2, 3, 1]), Some(&int(-8)));
    }

    #[test]
    fn pencil_examples() {
        let h = quat();
        let qt = quat_bracket();
        assert!(pencil_residual(&qt, &LinearTensor::zero(4)).unwrap().pass);
        let lt = dual_bracket(&cobracket_at(&h, &qt, h.unit().unwrap(), false).unwrap());
        assert!(pencil_residual(&qt, &lt).unwrap().pass);
        // so(3) on the imaginary coordinates
        let mut m = std::collections::BTreeMap::new();
        for (i, j, k) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
            m.insert((i, j, k), one());
            m.insert((j, i, k), -one());
        }
        let so3 = linear_from_lie(&LieStructure::from_map(4, m));
        assert!(crate::poisson::jacobiator(&so3).is_zero());
        assert!(!pencil_residual(&qt, &so3).unwrap().pass);
    }

    #[test]
    fn shift_identity() {
        let h = quat();
        let qt = quat_bracket();
        for t in [int(1), int(-1), ratio(1, 3)] {
            assert!(shift_residual(&h, &qt, &t).unwrap().pass);
        }
        let plane = catalog::get_algebra(&CatalogAlgebra::Componentwise(2)).unwrap();
        let broken = QuadraticTensor::canonicalize(2, [(0, 1, vec![0, 0], one())]).unwrap();
        assert!(!shift_residual(&plane, &broken, &one()).unwrap().pass);
    }

    #[test]
    fn cobracket_linear_in_direction() {
        let h = quat();
        let a = Vector(vec![int(1), ratio(1, 2), int(0), int(-3)]);
        let b = Vector(vec![int(2), int(1), ratio(-2, 3), int(1)]);
        assert!(linearity_defect(&h, &quat_bracket(), &a, &b).unwrap().is_zero());
    }

    #[test]
    fn from_entries_completes() {
        let cb = Cobracket::from_entries(3, [(0, 1, 2, one()), (2, 2, 0, int(2))]).unwrap();
        assert_eq!(cb.d(0, 2, 1), &-one());
        assert_eq!(cb.entries(), vec![(0, 1, 2, one()), (2, 0, 2, int(-2))]);
        assert!(Cobracket::from_entries(3, [(3, 0, 1, one())]).is_err());
    }
}
