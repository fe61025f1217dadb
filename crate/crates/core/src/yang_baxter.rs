//! r-matrices and everything built from `δ = ad_r`: the quadratic bracket,
//! the classical Yang–Baxter / Schouten expression on the tensor cube, its
//! ad-invariance, and operator-level checks on linear extensions of `δ`.

use num_traits::Zero;
use rand::Rng;

use crate::algebra::{Algebra, Legs, Tensor2, Tensor3, Vector};
use crate::error::{Error, Result};
use crate::poisson::{PolyTensor, QuadraticTensor};
use crate::poly::Poly;
use crate::random;
use crate::residual::ResidualReport;
use crate::scalar::{int, one, zero, Scalar};

/// Antisymmetric element of `A∧A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix(Tensor2);

impl RMatrix {
    pub fn new(t: Tensor2) -> Result<Self> {
        let n = t.dim();
        for i in 0..n {
            for j in i..n {
                if *t.get(i, j) != -t.get(j, i) {
                    return Err(Error::NotAntisymmetric { i, j });
                }
            }
        }
        Ok(RMatrix(t))
    }

    pub fn zero(dim: usize) -> Self {
        RMatrix(Tensor2::zero(dim))
    }

    /// `e_i ∧ e_j = e_i⊗e_j − e_j⊗e_i`.
    pub fn wedge(dim: usize, i: usize, j: usize) -> Self {
        RMatrix(Tensor2::wedge(&Vector::basis(dim, i), &Vector::basis(dim, j)))
    }

    /// Builds from `(i, j, r^{ij})` entries, completing antisymmetrically.
    /// Both orientations of a pair may be listed only if they agree; a
    /// nonzero diagonal entry is rejected.
    pub fn from_upper(dim: usize, entries: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Result<Self> {
        let mut t = Tensor2::zero(dim);
        let mut seen = vec![false; dim * dim];
        for (i, j, v) in entries {
            for index in [i, j] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            if i == j {
                if !v.is_zero() {
                    return Err(Error::NotAntisymmetric { i, j });
                }
                continue;
            }
            let (a, b, v) = if i < j { (i, j, v) } else { (j, i, -v) };
            if seen[a * dim + b] {
                if *t.get(a, b) != v {
                    return Err(Error::NotAntisymmetric { i: a, j: b });
                }
                continue;
            }
            seen[a * dim + b] = true;
            t.set(b, a, -&v);
            t.set(a, b, v);
        }
        Ok(RMatrix(t))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn tensor(&self) -> &Tensor2 {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Strict upper triangle `(i, j, r^{ij})`, `i < j`, nonzero only.
    pub fn upper_entries(&self) -> Vec<(usize, usize, Scalar)> {
        self.0
            .nonzero()
            .filter(|((i, j), _)| i < j)
            .map(|((i, j), v)| (i, j, v.clone()))
            .collect()
    }

    pub fn add(&self, other: &RMatrix) -> RMatrix {
        RMatrix(self.0.add(&other.0))
    }

    pub fn scale(&self, s: &Scalar) -> RMatrix {
        RMatrix(self.0.scale(s))
    }
}

fn check_dim(alg: &Algebra, found: usize) -> Result<()> {
    if alg.dim() != found {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found,
        });
    }
    Ok(())
}

/// The quadratic bracket `π(x) = scale·[r, x⊗x]`, i.e.
/// `c^{ij}_{kl} = scale·r^{pq}(a_{pk}^i a_{ql}^j − a_{kp}^i a_{lq}^j)`.
/// No unit is needed.
pub fn quadratic_from_r(alg: &Algebra, r: &RMatrix, scale: &Scalar) -> Result<QuadraticTensor> {
    let n = alg.dim();
    check_dim(alg, r.dim())?;
    let mut polys = vec![Poly::zero(); n * n];
    for ((p, q), rv) in r.tensor().nonzero() {
        let rv = rv * scale;
        for k in 0..n {
            for l in 0..n {
                for (i, a) in alg.product(p, k) {
                    for (j, b) in alg.product(q, l) {
                        if i < j {
                            polys[i * n + j].add_term(crate::poly::monomial(&[k, l]), &rv * a * b);
                        }
                    }
                }
                for (i, a) in alg.product(k, p) {
                    for (j, b) in alg.product(l, q) {
                        if i < j {
                            polys[i * n + j].add_term(crate::poly::monomial(&[k, l]), -(&rv * a * b));
                        }
                    }
                }
            }
        }
    }
    let entries = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| ((i, j), std::mem::take(&mut polys[i * n + j])))
        .collect::<Vec<_>>();
    QuadraticTensor::new(PolyTensor::from_polys(n, 2, entries)?)
}

/// `[r¹², r¹³] + [r¹², r²³] + [r¹³, r²³]` on the tensor cube.
pub fn cybe_residual(alg: &Algebra, r: &RMatrix) -> Result<Tensor3> {
    alg.require_unit()?;
    check_dim(alg, r.dim())?;
    let r12 = alg.embed_leg(r.tensor(), Legs::L12)?;
    let r13 = alg.embed_leg(r.tensor(), Legs::L13)?;
    let r23 = alg.embed_leg(r.tensor(), Legs::L23)?;
    Ok(alg
        .tensor3_commutator(&r12, &r13)?
        .add(&alg.tensor3_commutator(&r12, &r23)?)
        .add(&alg.tensor3_commutator(&r13, &r23)?))
}

/// Schouten bracket `⟦r⟧` of an r-matrix; the same element as
/// [`cybe_residual`].
pub fn schouten(alg: &Algebra, r: &RMatrix) -> Result<Tensor3> {
    cybe_residual(alg, r)
}

/// Commutators `[t, S_{e_i}]` for every basis vector, indexed
/// `(i, a, b, c)`. Passes exactly when `t` is ad-invariant.
pub fn ad_invariance_residual(alg: &Algebra, t: &Tensor3) -> Result<ResidualReport> {
    alg.require_unit()?;
    check_dim(alg, t.dim())?;
    let n = alg.dim();
    let mut values = Vec::new();
    for i in 0..n {
        let s = alg.s_tensor(&Vector::basis(n, i))?;
        let c = alg.tensor3_commutator(t, &s)?;
        for ((a, b, cc), v) in c.nonzero() {
            values.push((vec![i, a, b, cc], v.clone()));
        }
    }
    Ok(ResidualReport::from_values(values, n))
}

/// How to extend `δ` from symmetric tensors to all of `A⊗A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionChoice {
    /// `δ̃(e_k⊗e_l) = c^{ij}_{kl} e_i⊗e_j` with symmetrized coefficients.
    Canonical,
    /// Canonical plus a seeded random operator that vanishes on symmetric
    /// tensors.
    Randomized { seed: u64 },
}

/// A linear operator on `A⊗A` restricting to `δ` on `Symm(A⊗A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaExtension {
    dim: usize,
    // table[(i*n+j) * n² + (k*n+l)]: e_i⊗e_j coefficient of δ̃(e_k⊗e_l)
    table: Vec<Scalar>,
    source: QuadraticTensor,
    seed: Option<u64>,
    // columns[k*n+l] = nonzero ((i, j), value)
    columns: Vec<Vec<((usize, usize), Scalar)>>,
}

impl DeltaExtension {
    /// Wraps an arbitrary operator table, checking that it restricts to the
    /// bracket's `δ` on symmetric tensors.
    pub fn from_table(source: &QuadraticTensor, table: Vec<Scalar>, seed: Option<u64>) -> Result<Self> {
        let n = source.dim();
        let n2 = n * n;
        if table.len() != n2 * n2 {
            return Err(Error::DimensionMismatch {
                expected: n2 * n2,
                found: table.len(),
            });
        }
        let two = int(2);
        for k in 0..n {
            for l in k..n {
                for i in 0..n {
                    for j in 0..n {
                        let got = &table[(i * n + j) * n2 + k * n + l] + &table[(i * n + j) * n2 + l * n + k];
                        if got != &two * source.c(i, j, k, l) {
                            return Err(Error::InconsistentExtension { i, j, k, l });
                        }
                    }
                }
            }
        }
        let mut columns = vec![Vec::new(); n2];
        for (idx, v) in table.iter().enumerate() {
            if !v.is_zero() {
                let (row, col) = (idx / n2, idx % n2);
                columns[col].push(((row / n, row % n), v.clone()));
            }
        }
        Ok(DeltaExtension {
            dim: n,
            table,
            source: source.clone(),
            seed,
            columns,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn source(&self) -> &QuadraticTensor {
        &self.source
    }

    pub fn table(&self) -> &[Scalar] {
        &self.table
    }

    pub fn apply(&self, t: &Tensor2) -> Tensor2 {
        let n = self.dim;
        let mut out = Tensor2::zero(n);
        for ((k, l), v) in t.nonzero() {
            for ((i, j), d) in &self.columns[k * n + l] {
                out.add_at(*i, *j, &(d * v));
            }
        }
        out
    }

    /// Acts on the given two legs of the cube, identity on the third.
    pub fn apply_legs(&self, t: &Tensor3, legs: Legs) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zero(n);
        for ((a, b, c), v) in t.nonzero() {
            let (col, other) = match legs {
                Legs::L12 => ((a, b), c),
                Legs::L13 => ((a, c), b),
                Legs::L23 => ((b, c), a),
            };
            for ((i, j), d) in &self.columns[col.0 * n + col.1] {
                let w = d * v;
                match legs {
                    Legs::L12 => out.add_at(*i, *j, other, &w),
                    Legs::L13 => out.add_at(*i, other, *j, &w),
                    Legs::L23 => out.add_at(other, *i, *j, &w),
                }
            }
        }
        out
    }

    /// Operator Schouten bracket `[P¹²,P¹³] + [P¹²,P²³] + [P¹³,P²³]` applied to `x`.
    pub fn schouten_apply(&self, x: &Tensor3) -> Tensor3 {
        let mut out = Tensor3::zero(self.dim);
        for (first, second) in [(Legs::L12, Legs::L13), (Legs::L12, Legs::L23), (Legs::L13, Legs::L23)] {
            let fs = self.apply_legs(&self.apply_legs(x, second), first);
            let sf = self.apply_legs(&self.apply_legs(x, first), second);
            out = out.add(&fs).sub(&sf);
        }
        out
    }
}

pub fn extend_delta(qt: &QuadraticTensor, choice: ExtensionChoice) -> DeltaExtension {
    let n = qt.dim();
    let n2 = n * n;
    let mut table = vec![zero(); n2 * n2];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    table[(i * n + j) * n2 + k * n + l] = qt.c(i, j, k, l);
                }
            }
        }
    }
    let seed = match choice {
        ExtensionChoice::Canonical => None,
        ExtensionChoice::Randomized { seed } => {
            let mut rng = random::rng(seed);
            for row in 0..n2 {
                for k in 0..n {
                    for l in k + 1..n {
                        if rng.gen_bool(0.5) {
                            let w = random::rational(&mut rng);
                            table[row * n2 + k * n + l] += &w;
                            table[row * n2 + l * n + k] -= &w;
                        }
                    }
                }
            }
            Some(seed)
        }
    };
    DeltaExtension::from_table(qt, table, seed).expect("canonical table restricts correctly")
}

/// `ad_r` on all of `A⊗A`, as an extension of the bracket
/// `quadratic_from_r(r, 1)`.
pub fn ad_extension(alg: &Algebra, r: &RMatrix) -> Result<DeltaExtension> {
    let n = alg.dim();
    let n2 = n * n;
    let qt = quadratic_from_r(alg, r, &one())?;
    let mut table = vec![zero(); n2 * n2];
    for k in 0..n {
        for l in 0..n {
            let e = Tensor2::outer(&Vector::basis(n, k), &Vector::basis(n, l));
            let img = alg.tensor2_commutator(r.tensor(), &e)?;
            for ((i, j), v) in img.nonzero() {
                table[(i * n + j) * n2 + k * n + l] = v.clone();
            }
        }
    }
    DeltaExtension::from_table(&qt, table, None)
}

/// `⟦δ̃⟧(X)` on the spanning set of fully symmetric tensors
/// (symmetrized `e_p⊗e_q⊗e_r`, `p ≤ q ≤ r`), indexed `(p, q, r, a, b, c)`.
/// Needs no unit.
pub fn symmetric_annihilation_residual(alg: &Algebra, ext: &DeltaExtension) -> Result<ResidualReport> {
    check_dim(alg, ext.dim())?;
    let n = ext.dim();
    let mut values = Vec::new();
    let mut checked = 0;
    for p in 0..n {
        for q in p..n {
            for r in q..n {
                checked += 1;
                let x = Tensor3::symmetrized_basis(n, p, q, r);
                for ((a, b, c), v) in ext.schouten_apply(&x).nonzero() {
                    values.push((vec![p, q, r, a, b, c], v.clone()));
                }
            }
        }
    }
    Ok(ResidualReport::from_values(values, checked))
}

/// `δ(P·Q) − P·δ(Q) − δ(P)·Q` for `P, Q` in `{e_k⊗e_l + e_l⊗e_k}`, indexed
/// `(k, l, m, s, i, j)`.
pub fn derivation_residual(alg: &Algebra, qt: &QuadraticTensor) -> Result<ResidualReport> {
    check_dim(alg, qt.dim())?;
    let n = alg.dim();
    let ext = extend_delta(qt, ExtensionChoice::Canonical);
    let basis: Vec<((usize, usize), Tensor2)> = (0..n)
        .flat_map(|k| (k..n).map(move |l| (k, l)))
        .map(|(k, l)| {
            let (ek, el) = (Vector::basis(n, k), Vector::basis(n, l));
            ((k, l), Tensor2::outer(&ek, &el).add(&Tensor2::outer(&el, &ek)))
        })
        .collect();
    let images: Vec<Tensor2> = basis.iter().map(|(_, b)| ext.apply(b)).collect();
    let mut values = Vec::new();
    let mut checked = 0;
    for (pi, ((k, l), p)) in basis.iter().enumerate() {
        for (qi, ((m, s), q)) in basis.iter().enumerate() {
            checked += 1;
            let pq = alg.tensor2_multiply(p, q)?;
            let res = ext
                .apply(&pq)
                .sub(&alg.tensor2_multiply(p, &images[qi])?)
                .sub(&alg.tensor2_multiply(&images[pi], q)?);
            for ((i, j), v) in res.nonzero() {
                values.push((vec![*k, *l, *m, *s, i, j], v.clone()));
            }
        }
    }
    Ok(ResidualReport::from_values(values, checked))
}
