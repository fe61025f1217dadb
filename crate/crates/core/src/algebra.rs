//! Finite-dimensional associative algebras given by structure constants, and
//! exact arithmetic in `A`, `A⊗A` and `A⊗A⊗A` with componentwise products.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::LieStructure;
use crate::linalg;
use crate::scalar::{one, zero, Scalar};

/// An element `x = x^k e_k` of the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn zero(n: usize) -> Self {
        Vector(vec![zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector(self.0.iter().map(|a| a * s).collect())
    }
}

impl From<Vec<Scalar>> for Vector {
    fn from(v: Vec<Scalar>) -> Self {
        Vector(v)
    }
}

/// Which two legs of the tensor cube carry a tensor-square element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Legs {
    L12,
    L13,
    L23,
}

/// Element `t^{ij} e_i⊗e_j` of `A⊗A`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    dim: usize,
    coeffs: Vec<Scalar>,
}

/// Element `t^{ijk} e_i⊗e_j⊗e_k` of `A⊗A⊗A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dim: usize,
    coeffs: Vec<Scalar>,
}

macro_rules! dense_tensor_common {
    ($ty:ident, $rank:expr) => {
        impl $ty {
            pub fn zero(dim: usize) -> Self {
                $ty {
                    dim,
                    coeffs: vec![zero(); dim.pow($rank)],
                }
            }

            pub fn from_coeffs(dim: usize, coeffs: Vec<Scalar>) -> Result<Self> {
                if coeffs.len() != dim.pow($rank) {
                    return Err(Error::DimensionMismatch {
                        expected: dim.pow($rank),
                        found: coeffs.len(),
                    });
                }
                Ok($ty { dim, coeffs })
            }

            pub fn dim(&self) -> usize {
                self.dim
            }

            pub fn coeffs(&self) -> &[Scalar] {
                &self.coeffs
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.iter().all(Zero::is_zero)
            }

            pub fn add(&self, other: &Self) -> Self {
                $ty {
                    dim: self.dim,
                    coeffs: self
                        .coeffs
                        .iter()
                        .zip(&other.coeffs)
                        .map(|(a, b)| a + b)
                        .collect(),
                }
            }

            pub fn sub(&self, other: &Self) -> Self {
                $ty {
                    dim: self.dim,
                    coeffs: self
                        .coeffs
                        .iter()
                        .zip(&other.coeffs)
                        .map(|(a, b)| a - b)
                        .collect(),
                }
            }

            pub fn scale(&self, s: &Scalar) -> Self {
                $ty {
                    dim: self.dim,
                    coeffs: self.coeffs.iter().map(|a| a * s).collect(),
                }
            }

            pub fn neg(&self) -> Self {
                $ty {
                    dim: self.dim,
                    coeffs: self.coeffs.iter().map(|a| -a).collect(),
                }
            }
        }
    };
}

dense_tensor_common!(Tensor2, 2);
dense_tensor_common!(Tensor3, 3);

impl Tensor2 {
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.coeffs[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.coeffs[i * self.dim + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        self.coeffs[i * self.dim + j] += v;
    }

    /// `x ⊗ y`.
    pub fn outer(x: &Vector, y: &Vector) -> Self {
        let n = x.dim();
        let mut t = Self::zero(n);
        for (i, a) in x.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.0.iter().enumerate() {
                t.coeffs[i * n + j] = a * b;
            }
        }
        t
    }

    /// `x ⊗ y − y ⊗ x`.
    pub fn wedge(x: &Vector, y: &Vector) -> Self {
        Self::outer(x, y).sub(&Self::outer(y, x))
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut t = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                t.coeffs[j * n + i] = self.coeffs[i * n + j].clone();
            }
        }
        t
    }

    /// Nonzero entries as `((i, j), value)`.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize), &Scalar)> {
        let n = self.dim;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| ((idx / n, idx % n), v))
    }

    pub fn symmetry(&self) -> Symmetry2 {
        let t = self.transpose();
        Symmetry2 {
            symmetric: t == *self,
            antisymmetric: t == self.neg(),
        }
    }
}

impl Tensor3 {
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[(i * self.dim + j) * self.dim + k]
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let n = self.dim;
        self.coeffs[(i * n + j) * n + k] += v;
    }

    pub fn outer(x: &Vector, y: &Vector, z: &Vector) -> Self {
        let n = x.dim();
        let mut t = Self::zero(n);
        for (i, a) in x.0.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.0.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in z.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    t.coeffs[(i * n + j) * n + k] = &ab * c;
                }
            }
        }
        t
    }

    /// Sum of `e_p⊗e_q⊗e_r` over all six index permutations (repeats
    /// included), the spanning set of fully symmetric tensors.
    pub fn symmetrized_basis(n: usize, p: usize, q: usize, r: usize) -> Self {
        let mut t = Self::zero(n);
        for (a, b, c) in [
            (p, q, r),
            (p, r, q),
            (q, p, r),
            (q, r, p),
            (r, p, q),
            (r, q, p),
        ] {
            t.add_at(a, b, c, &one());
        }
        t
    }

    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize), &Scalar)> {
        let n = self.dim;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| ((idx / (n * n), (idx / n) % n, idx % n), v))
    }

    /// Reorders legs: output component `(i_0, i_1, i_2)` is the input component
    /// at positions `perm`, i.e. `out[i] = self[i[perm[0]], i[perm[1]], i[perm[2]]]`.
    pub fn permute(&self, perm: [usize; 3]) -> Self {
        let n = self.dim;
        let mut t = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let idx = [i, j, k];
                    t.coeffs[(i * n + j) * n + k] =
                        self.get(idx[perm[0]], idx[perm[1]], idx[perm[2]]).clone();
                }
            }
        }
        t
    }

    pub fn symmetry(&self) -> Symmetry3 {
        const PERMS: [([usize; 3], bool); 5] = [
            ([1, 0, 2], true),
            ([0, 2, 1], true),
            ([2, 1, 0], true),
            ([1, 2, 0], false),
            ([2, 0, 1], false),
        ];
        let neg = self.neg();
        let mut sym = true;
        let mut anti = true;
        for (p, odd) in PERMS {
            let t = self.permute(p);
            sym &= t == *self;
            anti &= if odd { t == neg } else { t == *self };
        }
        Symmetry3 {
            fully_symmetric: sym,
            fully_antisymmetric: anti,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Symmetry2 {
    pub symmetric: bool,
    pub antisymmetric: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Symmetry3 {
    pub fully_symmetric: bool,
    pub fully_antisymmetric: bool,
}

/// Which identity a validation violation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityKind {
    Associativity,
    LeftUnit,
    RightUnit,
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdentityKind::Associativity => "associativity",
            IdentityKind::LeftUnit => "left-unit",
            IdentityKind::RightUnit => "right-unit",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: IdentityKind,
    /// `(i, j, k, l)` for associativity, `(i, j)` for the unit identities.
    pub index: Vec<usize>,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub pass: bool,
    pub violations: Vec<Violation>,
    pub checked: usize,
}

/// A finite-dimensional algebra `e_i e_j = a_{ij}^k e_k`.
#[derive(Clone, Debug)]
pub struct Algebra {
    name: String,
    dim: usize,
    structure: BTreeMap<(usize, usize, usize), Scalar>,
    unit: Option<Vector>,
    labels: Option<Vec<String>>,
    // products[i * dim + j] = nonzero (k, a_{ij}^k)
    products: Vec<Vec<(usize, Scalar)>>,
    // the same table scaled by `denom` to integers, for the tensor products
    int_products: Vec<Vec<(usize, BigInt)>>,
    denom: BigInt,
}

/// Nonzero entries of `coeffs` times their common denominator `d`, with `d`.
fn integer_entries(coeffs: &[Scalar]) -> (BigInt, Vec<(usize, BigInt)>) {
    let d = coeffs
        .iter()
        .filter(|v| !v.is_zero())
        .fold(BigInt::one(), |d, v| d.lcm(v.denom()));
    let list = coeffs
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(idx, v)| (idx, v.numer() * (&d / v.denom())))
        .collect();
    (d, list)
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.structure == other.structure && self.unit == other.unit
    }
}

impl Algebra {
    /// Builds an algebra from structure-constant entries `(i, j, k, a_{ij}^k)`.
    /// Repeated entries are summed; zero entries are dropped.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: Option<Vector>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut structure: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for (i, j, k, v) in entries {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            *structure.entry((i, j, k)).or_insert_with(zero) += v;
        }
        structure.retain(|_, v| !v.is_zero());
        if let Some(u) = &unit {
            if u.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: u.dim(),
                });
            }
        }
        if let Some(l) = &labels {
            if l.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: l.len(),
                });
            }
        }
        let mut products = vec![Vec::new(); dim * dim];
        for (&(i, j, k), v) in &structure {
            products[i * dim + j].push((k, v.clone()));
        }
        let denom = structure.values().fold(BigInt::one(), |d, v| d.lcm(v.denom()));
        let int_products = products
            .iter()
            .map(|row| row.iter().map(|(k, v)| (*k, v.numer() * (&denom / v.denom()))).collect())
            .collect();
        Ok(Algebra {
            name: name.into(),
            dim,
            structure,
            unit,
            labels,
            products,
            int_products,
            denom,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn require_unit(&self) -> Result<&Vector> {
        self.unit.as_ref().ok_or(Error::NoUnit)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of basis element `i`, falling back to `e{i}`.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{i}"),
        }
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Nonzero structure constants in lexicographic `(i, j, k)` order.
    pub fn structure(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.structure.iter().map(|(&(i, j, k), v)| (i, j, k, v))
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.structure.get(&(i, j, k)).cloned().unwrap_or_else(zero)
    }

    /// Nonzero `(k, a_{ij}^k)` for the product `e_i e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim + j]
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found,
            });
        }
        Ok(())
    }

    /// Checks associativity and, when present, the unit identities by
    /// exhaustive loops over basis indices.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut dense = vec![zero(); n * n * n];
        for (&(i, j, k), v) in &self.structure {
            dense[(i * n + j) * n + k] = v.clone();
        }
        let a = |i: usize, j: usize, k: usize| &dense[(i * n + j) * n + k];
        let mut violations = Vec::new();
        let mut checked = 0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        checked += 1;
                        let mut lhs = zero();
                        let mut rhs = zero();
                        for m in 0..n {
                            lhs += a(i, j, m) * a(m, k, l);
                            rhs += a(j, k, m) * a(i, m, l);
                        }
                        if lhs != rhs {
                            violations.push(Violation {
                                kind: IdentityKind::Associativity,
                                index: vec![i, j, k, l],
                                lhs,
                                rhs,
                            });
                        }
                    }
                }
            }
        }
        if let Some(u) = &self.unit {
            for i in 0..n {
                for j in 0..n {
                    checked += 2;
                    let delta = if i == j { one() } else { zero() };
                    let mut left = zero();
                    let mut right = zero();
                    for k in 0..n {
                        left += &u.0[k] * a(k, i, j);
                        right += &u.0[k] * a(i, k, j);
                    }
                    if left != delta {
                        violations.push(Violation {
                            kind: IdentityKind::LeftUnit,
                            index: vec![i, j],
                            lhs: left,
                            rhs: delta.clone(),
                        });
                    }
                    if right != delta {
                        violations.push(Violation {
                            kind: IdentityKind::RightUnit,
                            index: vec![i, j],
                            lhs: right,
                            rhs: delta,
                        });
                    }
                }
            }
        }
        ValidationReport {
            pass: violations.is_empty(),
            violations,
            checked,
        }
    }

    /// `(xy)^k = a_{ij}^k x^i y^j`.
    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.check_dim(x.dim())?;
        self.check_dim(y.dim())?;
        let mut out = Vector::zero(self.dim);
        for (&(i, j, k), a) in &self.structure {
            if x.0[i].is_zero() || y.0[j].is_zero() {
                continue;
            }
            out.0[k] += a * &x.0[i] * &y.0[j];
        }
        Ok(out)
    }

    /// Adjacent Lie algebra `[a, b] = ab − ba`.
    pub fn lie_structure(&self) -> LieStructure {
        let mut entries = BTreeMap::new();
        for (&(i, j, k), v) in &self.structure {
            *entries.entry((i, j, k)).or_insert_with(zero) += v;
            *entries.entry((j, i, k)).or_insert_with(zero) -= v;
        }
        let lie = LieStructure::from_map(self.dim, entries);
        debug_assert!(lie.skewness_residual().pass);
        lie
    }

    /// `(st)^{ij} = s^{pq} t^{rs} a_{pr}^i a_{qs}^j`.
    pub fn tensor2_multiply(&self, s: &Tensor2, t: &Tensor2) -> Result<Tensor2> {
        self.check_dim(s.dim())?;
        self.check_dim(t.dim())?;
        let n = self.dim;
        // accumulate over integers and normalize once per entry
        let (ds, sn) = integer_entries(s.coeffs());
        let (dt, tn) = integer_entries(t.coeffs());
        let mut acc = vec![BigInt::zero(); n * n];
        for (si, sv) in &sn {
            let (p, q) = (si / n, si % n);
            for (ti, tv) in &tn {
                let left = &self.int_products[p * n + ti / n];
                let right = &self.int_products[q * n + ti % n];
                if left.is_empty() || right.is_empty() {
                    continue;
                }
                let st = sv * tv;
                for (i, a) in left {
                    let sa = &st * a;
                    for (j, b) in right {
                        acc[i * n + j] += &sa * b;
                    }
                }
            }
        }
        let d = ds * dt * self.denom.pow(2);
        Tensor2::from_coeffs(n, acc.into_iter().map(|v| Scalar::new(v, d.clone())).collect())
    }

    pub fn tensor2_commutator(&self, s: &Tensor2, t: &Tensor2) -> Result<Tensor2> {
        Ok(self
            .tensor2_multiply(s, t)?
            .sub(&self.tensor2_multiply(t, s)?))
    }

    pub fn tensor3_multiply(&self, s: &Tensor3, t: &Tensor3) -> Result<Tensor3> {
        self.check_dim(s.dim())?;
        self.check_dim(t.dim())?;
        let n = self.dim;
        let (ds, sn) = integer_entries(s.coeffs());
        let (dt, tn) = integer_entries(t.coeffs());
        let mut acc = vec![BigInt::zero(); n * n * n];
        for (si, sv) in &sn {
            let (p, q, r) = (si / (n * n), si / n % n, si % n);
            for (ti, tv) in &tn {
                let l0 = &self.int_products[p * n + ti / (n * n)];
                let l1 = &self.int_products[q * n + ti / n % n];
                let l2 = &self.int_products[r * n + ti % n];
                if l0.is_empty() || l1.is_empty() || l2.is_empty() {
                    continue;
                }
                let st = sv * tv;
                for (i, a) in l0 {
                    let sa = &st * a;
                    for (j, b) in l1 {
                        let sab = &sa * b;
                        for (k, c) in l2 {
                            acc[(i * n + j) * n + k] += &sab * c;
                        }
                    }
                }
            }
        }
        let d = ds * dt * self.denom.pow(3);
        Tensor3::from_coeffs(n, acc.into_iter().map(|v| Scalar::new(v, d.clone())).collect())
    }

    pub fn tensor3_commutator(&self, s: &Tensor3, t: &Tensor3) -> Result<Tensor3> {
        Ok(self
            .tensor3_multiply(s, t)?
            .sub(&self.tensor3_multiply(t, s)?))
    }

    /// Places `t` on the given legs and pads the remaining leg with the unit.
    pub fn embed_leg(&self, t: &Tensor2, legs: Legs) -> Result<Tensor3> {
        let u = self.require_unit()?;
        self.check_dim(t.dim())?;
        let mut out = Tensor3::zero(self.dim);
        for ((i, j), v) in t.nonzero() {
            for (k, uk) in u.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let val = v * uk;
                match legs {
                    Legs::L12 => out.add_at(i, j, k, &val),
                    Legs::L13 => out.add_at(i, k, j, &val),
                    Legs::L23 => out.add_at(k, i, j, &val),
                }
            }
        }
        Ok(out)
    }

    /// `S_a = u⊗u⊗a + u⊗a⊗u + a⊗u⊗u`.
    pub fn s_tensor(&self, a: &Vector) -> Result<Tensor3> {
        let u = self.require_unit()?;
        self.check_dim(a.dim())?;
        Ok(Tensor3::outer(u, u, a)
            .add(&Tensor3::outer(u, a, u))
            .add(&Tensor3::outer(a, u, u)))
    }

    /// Solves `u·e_i = e_i·u = e_i` for `u`. A unit is unique when it exists.
    pub fn find_unit(&self) -> Option<Vector> {
        let n = self.dim;
        let mut rows = Vec::with_capacity(2 * n * n);
        for i in 0..n {
            for j in 0..n {
                let rhs = if i == j { one() } else { zero() };
                let mut left: Vec<Scalar> = (0..n).map(|k| self.coeff(k, i, j)).collect();
                left.push(rhs.clone());
                let mut right: Vec<Scalar> = (0..n).map(|k| self.coeff(i, k, j)).collect();
                right.push(rhs);
                rows.push(left);
                rows.push(right);
            }
        }
        let (u, nullity) = linalg::solve(rows, n)?;
        debug_assert_eq!(nullity, 0);
        Some(Vector(u))
    }

    /// `⟨1⟩ ⊕ A`: a new basis element `1` at index 0, existing indices shifted
    /// by one.
    pub fn adjoin_unit(&self) -> Algebra {
        let n = self.dim + 1;
        let mut entries: Vec<(usize, usize, usize, Scalar)> = Vec::new();
        for i in 0..n {
            entries.push((0, i, i, one()));
            if i > 0 {
                entries.push((i, 0, i, one()));
            }
        }
        for (&(i, j, k), v) in &self.structure {
            entries.push((i + 1, j + 1, k + 1, v.clone()));
        }
        let labels = (0..self.dim).map(|i| self.label(i));
        let labels = std::iter::once("1".to_string()).chain(labels).collect();
        Algebra::new(
            format!("{}+1", self.name),
            n,
            entries,
            Some(Vector::basis(n, 0)),
            Some(labels),
        )
        .expect("indices stay in range")
    }

    /// Rewrites the algebra in the basis `f_a = P_{ia} e_i` (columns of the
    /// row-major `p`). Fails if `p` is singular.
    pub fn change_basis(&self, p: &[Scalar]) -> Result<Algebra> {
        let n = self.dim;
        if p.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: p.len(),
            });
        }
        let inv = linalg::invert(p, n)
            .ok_or_else(|| Error::InvalidParams("singular basis change".into()))?;
        let mut entries = Vec::new();
        for a in 0..n {
            for b in 0..n {
                // f_a f_b expressed in e_k, then mapped back with P^{-1}
                let mut in_e = vec![zero(); n];
                for i in (0..n).filter(|&i| !p[i * n + a].is_zero()) {
                    for j in (0..n).filter(|&j| !p[j * n + b].is_zero()) {
                        let pij = &p[i * n + a] * &p[j * n + b];
                        for (k, c) in self.product(i, j) {
                            in_e[*k] += &pij * c;
                        }
                    }
                }
                for c in 0..n {
                    let mut v = zero();
                    for k in 0..n {
                        v += &inv[c * n + k] * &in_e[k];
                    }
                    if !v.is_zero() {
                        entries.push((a, b, c, v));
                    }
                }
            }
        }
        let unit = self.unit.as_ref().map(|u| {
            Vector(
                (0..n)
                    .map(|c| (0..n).map(|k| &inv[c * n + k] * &u.0[k]).sum())
                    .collect(),
            )
        });
        Algebra::new(format!("{}'", self.name), n, entries, unit, None)
    }
}
