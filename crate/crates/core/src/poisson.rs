//! Homogeneous polynomial bivector fields `{x^i, x^j} = π^{ij}(x)` on the
//! coordinate space of an algebra, their Jacobi identity, mixed Jacobiators
//! for bracket pencils, and compatibility with the algebra product.

use std::collections::BTreeMap;
use std::ops::Deref;

use num_traits::Zero;

use crate::algebra::{Algebra, Tensor2};
use crate::error::{Error, Result};
use crate::poly::{monomial, Monomial, Poly};
use crate::residual::{ResidualEntry, ResidualReport};
use crate::scalar::{int, one, ratio, zero, Scalar};

/// Antisymmetric family of homogeneous polynomials of a fixed degree.
///
/// Only `i < j` is stored; each polynomial's monomial coefficients hold the
/// sums of all lower-index orderings, so a quadratic entry with
/// `c^{12}_{12} = c^{12}_{21} = 1` is stored as `2·x¹x²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyTensor {
    dim: usize,
    degree: usize,
    entries: BTreeMap<(usize, usize), Poly>,
}

impl PolyTensor {
    pub fn zero(dim: usize, degree: usize) -> Self {
        PolyTensor {
            dim,
            degree,
            entries: BTreeMap::new(),
        }
    }

    /// Brings raw coefficients `(i, j, [k_1..k_d], value)` to canonical form:
    /// lower indices merged by sorted multi-index, diagonal `i = j` dropped,
    /// and upper indices antisymmetrized. A pair given in only one orientation
    /// is completed (`c^{ji} = −c^{ij}`); a pair given in both orientations
    /// keeps the antisymmetric part `(c^{ij} − c^{ji})/2`.
    pub fn canonicalize(
        dim: usize,
        degree: usize,
        raw: impl IntoIterator<Item = (usize, usize, Vec<usize>, Scalar)>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        // (i<j, monomial) -> (forward sum, seen forward, reverse sum, seen reverse)
        let mut acc: BTreeMap<(usize, usize, Monomial), (Scalar, bool, Scalar, bool)> =
            BTreeMap::new();
        for (i, j, lower, v) in raw {
            if lower.len() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: lower.len(),
                });
            }
            for &index in lower.iter().chain([&i, &j]) {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            if i == j {
                continue;
            }
            let key = (i.min(j), i.max(j), monomial(&lower));
            let slot = acc
                .entry(key)
                .or_insert_with(|| (zero(), false, zero(), false));
            if i < j {
                slot.0 += v;
                slot.1 = true;
            } else {
                slot.2 += v;
                slot.3 = true;
            }
        }
        let mut entries: BTreeMap<(usize, usize), Poly> = BTreeMap::new();
        for ((i, j, m), (fwd, has_fwd, rev, has_rev)) in acc {
            let v = match (has_fwd, has_rev) {
                (true, true) => (fwd - rev) * ratio(1, 2),
                (true, false) => fwd,
                _ => -rev,
            };
            entries.entry((i, j)).or_default().add_term(m, v);
        }
        entries.retain(|_, p| !p.is_zero());
        Ok(PolyTensor {
            dim,
            degree,
            entries,
        })
    }

    /// Builds from polynomials `π^{ij}` for `i < j`. Fails if a polynomial is
    /// not homogeneous of `degree`.
    pub fn from_polys(
        dim: usize,
        degree: usize,
        polys: impl IntoIterator<Item = ((usize, usize), Poly)>,
    ) -> Result<Self> {
        let mut raw = Vec::new();
        for ((i, j), p) in polys {
            for (m, c) in p.terms() {
                raw.push((i, j, m.iter().map(|&v| v as usize).collect(), c.clone()));
            }
        }
        Self::canonicalize(dim, degree, raw)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `π^{ij}` for any ordered pair.
    pub fn entry(&self, i: usize, j: usize) -> Poly {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.entries.get(&(i, j)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => self
                .entries
                .get(&(j, i))
                .map(|p| p.scale(&-one()))
                .unwrap_or_default(),
            std::cmp::Ordering::Equal => Poly::zero(),
        }
    }

    /// Stored upper-triangle polynomials.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Poly)> {
        self.entries.iter().map(|(&k, p)| (k, p))
    }

    /// Canonical coefficient list `(i, j, sorted lower indices, value)` with
    /// `i < j`, in lexicographic order.
    pub fn coefficient_list(&self) -> Vec<(usize, usize, Vec<usize>, Scalar)> {
        let mut out = Vec::new();
        for (&(i, j), p) in &self.entries {
            for (m, c) in p.terms() {
                out.push((i, j, m.iter().map(|&v| v as usize).collect(), c.clone()));
            }
        }
        out
    }

    /// Fully symmetrized coefficient: the monomial coefficient divided by the
    /// number of distinct orderings of `lower`.
    pub fn symmetric_coeff(&self, i: usize, j: usize, lower: &[usize]) -> Scalar {
        let m = monomial(lower);
        let c = self.entry(i, j).coeff(&m);
        if c.is_zero() {
            return c;
        }
        c / multinomial(&m)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = self.clone();
        for p in out.entries.values_mut() {
            *p = p.scale(s);
        }
        out.entries.retain(|_, p| !p.is_zero());
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, p) in &other.entries {
            let e = out.entries.entry(*k).or_default();
            e.add_scaled(p, &one());
        }
        out.entries.retain(|_, p| !p.is_zero());
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-one()))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    /// `π^{ij}(x)` as an antisymmetric table.
    pub fn evaluate(&self, x: &[Scalar]) -> Result<Tensor2> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        let mut t = Tensor2::zero(self.dim);
        for (&(i, j), p) in &self.entries {
            let v = p.eval(x);
            t.set(j, i, -&v);
            t.set(i, j, v);
        }
        Ok(t)
    }

    /// Floating-point evaluation, row-major `n×n`.
    pub fn evaluate_f64(&self, x: &[f64]) -> Vec<f64> {
        let n = self.dim;
        let mut t = vec![0.0; n * n];
        for (&(i, j), p) in &self.entries {
            let v = p.eval_f64(x);
            t[i * n + j] = v;
            t[j * n + i] = -v;
        }
        t
    }

    fn field(&self) -> Field {
        let n = self.dim;
        let mut f = Field::zero(n);
        for (&(i, j), p) in &self.entries {
            f.entries[i * n + j] = p.clone();
            f.entries[j * n + i] = p.scale(&-one());
        }
        f
    }
}

fn multinomial(m: &Monomial) -> Scalar {
    let mut denom: i64 = 1;
    let mut i = 0;
    while i < m.len() {
        let mut c = 0;
        let v = m[i];
        while i < m.len() && m[i] == v {
            c += 1;
            i += 1;
            denom *= c;
        }
    }
    let total: i64 = (1..=m.len() as i64).product();
    int(total / denom)
}

macro_rules! degree_newtype {
    ($name:ident, $deg:expr) => {
        #[derive(Clone, Debug, PartialEq, Eq)]
        pub struct $name(PolyTensor);

        impl $name {
            pub fn new(t: PolyTensor) -> Result<Self> {
                if t.degree != $deg {
                    return Err(Error::DegreeMismatch {
                        expected: $deg,
                        found: t.degree,
                    });
                }
                Ok($name(t))
            }

            pub fn zero(dim: usize) -> Self {
                $name(PolyTensor::zero(dim, $deg))
            }

            pub fn canonicalize(
                dim: usize,
                raw: impl IntoIterator<Item = (usize, usize, Vec<usize>, Scalar)>,
            ) -> Result<Self> {
                Ok($name(PolyTensor::canonicalize(dim, $deg, raw)?))
            }

            pub fn as_poly(&self) -> &PolyTensor {
                &self.0
            }

            pub fn into_poly(self) -> PolyTensor {
                self.0
            }

            pub fn scale(&self, s: &Scalar) -> Self {
                $name(self.0.scale(s))
            }

            pub fn add(&self, other: &Self) -> Result<Self> {
                Ok($name(self.0.add(&other.0)?))
            }
        }

        impl Deref for $name {
            type Target = PolyTensor;
            fn deref(&self) -> &PolyTensor {
                &self.0
            }
        }
    };
}

degree_newtype!(QuadraticTensor, 2);
degree_newtype!(LinearTensor, 1);

impl QuadraticTensor {
    /// Symmetrized `c^{ij}_{kl}` of `{x^i, x^j} = c^{ij}_{kl} x^k x^l`.
    pub fn c(&self, i: usize, j: usize, k: usize, l: usize) -> Scalar {
        self.0.symmetric_coeff(i, j, &[k, l])
    }
}

impl LinearTensor {
    /// `b^{ij}_k` of `{x^i, x^j} = b^{ij}_k x^k`.
    pub fn b(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.0.symmetric_coeff(i, j, &[k])
    }
}

/// Dense antisymmetric matrix of (not necessarily homogeneous) polynomials.
#[derive(Clone, Debug)]
struct Field {
    dim: usize,
    entries: Vec<Poly>,
}

impl Field {
    fn zero(dim: usize) -> Self {
        Field {
            dim,
            entries: vec![Poly::zero(); dim * dim],
        }
    }

    fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.dim + j]
    }

    fn add(&self, other: &Field) -> Field {
        Field {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// `J^{ijk} = π^{lk}∂_lπ^{ij} + π^{li}∂_lπ^{jk} + π^{lj}∂_lπ^{ki}` for
    /// the requested triples.
    fn jacobiator(&self, triples: impl Iterator<Item = (usize, usize, usize)>) -> Vec<((usize, usize, usize), Poly)> {
        let n = self.dim;
        // deriv[l][i*n+j] = ∂_l π^{ij}
        let deriv: Vec<Vec<Poly>> = (0..n)
            .map(|l| self.entries.iter().map(|p| p.derivative(l)).collect())
            .collect();
        let one = one();
        triples
            .map(|(i, j, k)| {
                let mut acc = Poly::zero();
                for l in 0..n {
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let outer = self.get(l, c);
                        let d = &deriv[l][a * n + b];
                        if !outer.is_zero() && !d.is_zero() {
                            acc.add_product(outer, d, &one);
                        }
                    }
                }
                ((i, j, k), acc)
            })
            .collect()
    }
}

fn ordered_triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
}

/// Jacobiator coefficients, one polynomial per `i < j < k` triple. The
/// remaining triples follow by antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jacobiator {
    pub dim: usize,
    pub triples: BTreeMap<(usize, usize, usize), Poly>,
}

impl Jacobiator {
    pub fn is_zero(&self) -> bool {
        self.triples.values().all(Poly::is_zero)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Poly {
        self.triples.get(&(i, j, k)).cloned().unwrap_or_default()
    }

    pub fn scale(&self, s: &Scalar) -> Jacobiator {
        Jacobiator {
            dim: self.dim,
            triples: self
                .triples
                .iter()
                .map(|(k, p)| (*k, p.scale(s)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        }
    }

    /// Entries indexed `(i, j, k, monomial variables...)`.
    pub fn report(&self) -> ResidualReport {
        let mut entries = Vec::new();
        for (&(i, j, k), p) in &self.triples {
            for (m, c) in p.terms() {
                let mut index = vec![i, j, k];
                index.extend(m.iter().map(|&v| v as usize));
                entries.push(ResidualEntry {
                    index,
                    value: c.clone(),
                });
            }
        }
        let n = self.dim;
        ResidualReport::new(entries, n * n.saturating_sub(1) * n.saturating_sub(2) / 6)
    }
}

fn collect_jacobiator(dim: usize, list: Vec<((usize, usize, usize), Poly)>) -> Jacobiator {
    Jacobiator {
        dim,
        triples: list.into_iter().filter(|(_, p)| !p.is_zero()).collect(),
    }
}

pub fn jacobiator(pi: &PolyTensor) -> Jacobiator {
    let f = pi.field();
    collect_jacobiator(pi.dim, f.jacobiator(ordered_triples(pi.dim)))
}

/// Jacobiator over every ordered triple `(i, j, k)`, including repeated
/// indices. Panics if the result is not antisymmetric, which would indicate
/// a broken input invariant.
pub fn jacobiator_full(pi: &PolyTensor) -> BTreeMap<(usize, usize, usize), Poly> {
    let n = pi.dim;
    let all = (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))));
    let map: BTreeMap<_, _> = pi.field().jacobiator(all).into_iter().collect();
    for (&(i, j, k), p) in &map {
        let neg = p.scale(&-one());
        assert_eq!(map[&(j, i, k)], neg, "Jacobiator not antisymmetric in (i,j)");
        assert_eq!(map[&(i, k, j)], neg, "Jacobiator not antisymmetric in (j,k)");
    }
    map
}

/// Polarized Jacobiator `J(π₁+π₂) − J(π₁) − J(π₂)`. The degrees may differ.
pub fn jacobi_mixed(p1: &PolyTensor, p2: &PolyTensor) -> Result<ResidualReport> {
    if p1.dim != p2.dim {
        return Err(Error::DimensionMismatch {
            expected: p1.dim,
            found: p2.dim,
        });
    }
    let n = p1.dim;
    let (f1, f2) = (p1.field(), p2.field());
    let sum = f1.add(&f2);
    let j12 = sum.jacobiator(ordered_triples(n));
    let j1 = f1.jacobiator(ordered_triples(n));
    let j2 = f2.jacobiator(ordered_triples(n));
    let list = j12
        .into_iter()
        .zip(j1)
        .zip(j2)
        .map(|(((key, a), (_, b)), (_, c))| (key, a.sub(&b).sub(&c)))
        .collect();
    Ok(collect_jacobiator(n, list).report())
}

/// Residual of `π(y*z) = π(y)·(z⊗z) + (y⊗y)·π(z)` as a polynomial identity
/// in `2n` indeterminates: variables `0..n` are `y`, `n..2n` are `z`. Entries
/// are indexed `(i, j, monomial variables...)` for `i < j`.
pub fn multiplicativity_residual(alg: &Algebra, pi: &QuadraticTensor) -> Result<ResidualReport> {
    let n = alg.dim();
    if pi.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: pi.dim(),
        });
    }
    let y = |k: usize| Poly::var(k);
    let z = |k: usize| Poly::var(n + k);
    // (yz)^m = a_{kl}^m y^k z^l
    let mut yz = vec![Poly::zero(); n];
    // right_z[p*n+i] = (e_p z)^i, left_y[q*n+i] = (y e_q)^i
    let mut right_z = vec![Poly::zero(); n * n];
    let mut left_y = vec![Poly::zero(); n * n];
    for (k, l, m, a) in alg.structure() {
        yz[m].add_product(&y(k), &z(l), a);
        right_z[k * n + m].add_scaled(&z(l), a);
        left_y[l * n + m].add_scaled(&y(k), a);
    }
    let z_sub: Vec<Poly> = (0..n).map(z).collect();
    let mut pi_y = vec![Poly::zero(); n * n];
    let mut pi_z = vec![Poly::zero(); n * n];
    for p in 0..n {
        for s in 0..n {
            let e = pi.entry(p, s);
            if e.is_zero() {
                continue;
            }
            pi_z[p * n + s] = e.substitute(&z_sub);
            pi_y[p * n + s] = e;
        }
    }
    let one = one();
    let mut entries = Vec::new();
    let mut checked = 0;
    for i in 0..n {
        for j in i + 1..n {
            checked += 1;
            let mut residual = pi.entry(i, j).substitute(&yz);
            for p in 0..n {
                for s in 0..n {
                    for (ops, field) in [(&right_z, &pi_y), (&left_y, &pi_z)] {
                        let f = &field[p * n + s];
                        let (a, b) = (&ops[p * n + i], &ops[s * n + j]);
                        if f.is_zero() || a.is_zero() || b.is_zero() {
                            continue;
                        }
                        let ab = a.mul(b);
                        residual.add_product(&ab, f, &-one.clone());
                    }
                }
            }
            for (m, c) in residual.terms() {
                let mut index = vec![i, j];
                index.extend(m.iter().map(|&v| v as usize));
                entries.push(ResidualEntry {
                    index,
                    value: c.clone(),
                });
            }
        }
    }
    Ok(ResidualReport::new(entries, checked))
}

/// `π^{ij}(u) = c^{ij}_{kl} u^k u^l`, indexed `(i, j)` with `i < j`.
pub fn unit_vanishing(alg: &Algebra, pi: &QuadraticTensor) -> Result<ResidualReport> {
    let u = alg.require_unit()?;
    if pi.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: pi.dim(),
        });
    }
    let n = alg.dim();
    let mut values = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            values.push((vec![i, j], pi.entry(i, j).eval(&u.0)));
        }
    }
    Ok(ResidualReport::from_values(values, n * (n - 1) / 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Vector;
    use crate::catalog::{self, CatalogAlgebra};
    use proptest::prelude::*;

    fn componentwise_plane() -> Algebra {
        catalog::get_algebra(&CatalogAlgebra::Componentwise(2)).unwrap()
    }

    /// {x¹, x²} = (x¹)² on componentwise R², not multiplicative.
    fn broken() -> QuadraticTensor {
        QuadraticTensor::canonicalize(2, [(0, 1, vec![0, 0], one())]).unwrap()
    }

    #[test]
    fn canonicalize_completes_antisymmetry() {
        let t = PolyTensor::canonicalize(2, 2, [(0, 1, vec![0, 0], one())]).unwrap();
        assert_eq!(t.entry(1, 0), Poly::term(&[0, 0], int(-1)));
        assert_eq!(t.symmetric_coeff(1, 0, &[0, 0]), int(-1));
    }

    #[test]
    fn canonicalize_drops_diagonal() {
        let t = PolyTensor::canonicalize(2, 2, [(0, 0, vec![0, 1], int(5))]).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn canonicalize_merges_lower_orderings() {
        let t = PolyTensor::canonicalize(
            3,
            2,
            [(0, 1, vec![0, 1], one()), (0, 1, vec![1, 0], one())],
        )
        .unwrap();
        assert_eq!(t.coefficient_list(), vec![(0, 1, vec![0, 1], int(2))]);
        assert_eq!(t.symmetric_coeff(0, 1, &[1, 0]), one());
    }

    #[test]
    fn canonicalize_both_orientations_keeps_antisymmetric_part() {
        let t = PolyTensor::canonicalize(
            2,
            1,
            [(0, 1, vec![0], int(3)), (1, 0, vec![0], int(-1))],
        )
        .unwrap();
        assert_eq!(t.entry(0, 1), Poly::term(&[0], int(2)));
    }

    #[test]
    fn canonicalize_errors() {
        assert_eq!(
            PolyTensor::canonicalize(2, 2, [(0, 2, vec![0, 0], one())]).unwrap_err(),
            Error::IndexOutOfRange { index: 2, dim: 2 }
        );
        assert_eq!(
            PolyTensor::canonicalize(2, 2, [(0, 1, vec![0], one())]).unwrap_err(),
            Error::DegreeMismatch {
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn two_dimensional_brackets_are_always_poisson() {
        let t = PolyTensor::canonicalize(
            2,
            3,
            [(0, 1, vec![0, 0, 1], int(7)), (0, 1, vec![1, 1, 1], int(-2))],
        )
        .unwrap();
        assert!(jacobiator(&t).is_zero());
    }

    #[test]
    fn three_dimensional_linear_counterexample() {
        // {x¹,x²}=x³, {x²,x³}=x¹, {x¹,x³}=x¹
        let t = LinearTensor::canonicalize(
            3,
            [
                (0, 1, vec![2], one()),
                (1, 2, vec![0], one()),
                (0, 2, vec![0], one()),
            ],
        )
        .unwrap();
        let j = jacobiator(&t);
        assert_eq!(j.get(0, 1, 2), Poly::term(&[2], int(-1)));
        let full = jacobiator_full(&t);
        assert_eq!(full[&(2, 1, 0)], Poly::term(&[2], one()));
    }

    #[test]
    fn mixed_with_zero_and_multiples() {
        let t = LinearTensor::canonicalize(3, [(0, 1, vec![2], one()), (1, 2, vec![0], one()), (2, 0, vec![1], one())]).unwrap();
        assert!(jacobiator(&t).is_zero());
        assert!(jacobi_mixed(&t, &PolyTensor::zero(3, 2)).unwrap().pass);
        assert!(jacobi_mixed(&t, &t.scale(&ratio(-3, 2))).unwrap().pass);
    }

    #[test]
    fn broken_bracket_fails_multiplicativity() {
        let alg = componentwise_plane();
        let r = multiplicativity_residual(&alg, &broken()).unwrap();
        assert!(!r.pass);
        // at y = z = (1,1): LHS − RHS = 1 − 2 = −1
        let total: Scalar = r.entries.iter().map(|e| e.value.clone()).sum();
        assert_eq!(total, int(-1));
        assert!(multiplicativity_residual(&alg, &QuadraticTensor::zero(2)).unwrap().pass);
    }

    #[test]
    fn unit_vanishing_examples() {
        let alg = componentwise_plane();
        let r = unit_vanishing(&alg, &broken()).unwrap();
        assert_eq!(r.value_at(&[0, 1]), Some(&one()));
        assert!(unit_vanishing(&alg, &QuadraticTensor::zero(2)).unwrap().pass);
        let heis = catalog::get_algebra(&CatalogAlgebra::Heisenberg(one())).unwrap();
        assert_eq!(
            unit_vanishing(&heis, &QuadraticTensor::zero(3)).unwrap_err(),
            Error::NoUnit
        );
    }

    #[test]
    fn evaluate_at_origin_and_antisymmetry() {
        let t = broken();
        assert!(t.evaluate(&[zero(), zero()]).unwrap().is_zero());
        let v = t.evaluate(&[int(3), int(5)]).unwrap();
        assert_eq!(v.get(0, 1), &int(9));
        assert_eq!(v.get(1, 0), &int(-9));
        assert!(v.symmetry().antisymmetric);
        assert!(t.evaluate(&[one()]).is_err());
    }

    #[test]
    fn symmetric_coefficients() {
        let t = QuadraticTensor::canonicalize(3, [(0, 1, vec![1, 2], int(4)), (0, 2, vec![2, 2], int(3))]).unwrap();
        assert_eq!(t.c(0, 1, 1, 2), int(2));
        assert_eq!(t.c(0, 1, 2, 1), int(2));
        assert_eq!(t.c(0, 2, 2, 2), int(3));
        assert_eq!(t.c(2, 0, 2, 2), int(-3));
    }

    fn raw_quadratic(n: usize) -> impl Strategy<Value = Vec<(usize, usize, Vec<usize>, Scalar)>> {
        proptest::collection::vec(
            (0..n, 0..n, proptest::collection::vec(0..n, 2), -3i64..4),
            0..8,
        )
        .prop_map(|v| v.into_iter().map(|(i, j, l, c)| (i, j, l, int(c))).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn canonicalize_is_idempotent(raw in raw_quadratic(3)) {
            let t = PolyTensor::canonicalize(3, 2, raw).unwrap();
            let again = PolyTensor::canonicalize(3, 2, t.coefficient_list()).unwrap();
            prop_assert_eq!(&again, &t);
            // full listing with both orientations is also a fixed point
            let mut full = Vec::new();
            for (i, j, l, c) in t.coefficient_list() {
                full.push((j, i, l.clone(), -c.clone()));
                full.push((i, j, l, c));
            }
            prop_assert_eq!(PolyTensor::canonicalize(3, 2, full).unwrap(), t);
        }

        #[test]
        fn mixed_with_self_is_twice_jacobiator(raw in raw_quadratic(3)) {
            let t = PolyTensor::canonicalize(3, 2, raw).unwrap();
            let mixed = jacobi_mixed(&t, &t).unwrap();
            prop_assert_eq!(mixed, jacobiator(&t).scale(&int(2)).report());
        }

        #[test]
        fn evaluation_matches_coefficients(raw in raw_quadratic(3), x in proptest::collection::vec(-4i64..5, 3)) {
            let t = QuadraticTensor::canonicalize(3, raw).unwrap();
            let x: Vec<Scalar> = x.into_iter().map(int).collect();
            let v = t.evaluate(&x).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    let mut direct = zero();
                    for k in 0..3 {
                        for l in 0..3 {
                            direct += t.c(i, j, k, l) * &x[k] * &x[l];
                        }
                    }
                    prop_assert_eq!(v.get(i, j), &direct);
                }
            }
            let _ = Vector::zero(3);
        }
    }
}
