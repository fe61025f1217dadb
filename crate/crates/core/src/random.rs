//! Seeded generators for randomized property checks. Everything here is
//! deterministic given the seed.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Vector};
use crate::catalog::{self, CatalogAlgebra};
use crate::linalg;
use crate::poisson::QuadraticTensor;
use crate::scalar::{int, ratio, Scalar};
use crate::yang_baxter::RMatrix;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational `p/q` with `|p| ≤ 5`, `1 ≤ q ≤ 4`.
pub fn rational(rng: &mut impl Rng) -> Scalar {
    ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

pub fn small_int(rng: &mut impl Rng, bound: i64) -> Scalar {
    int(rng.gen_range(-bound..=bound))
}

pub fn vector(rng: &mut impl Rng, n: usize) -> Vector {
    Vector((0..n).map(|_| rational(rng)).collect())
}

/// Antisymmetric r with each upper-triangle entry nonzero with probability
/// `density`.
pub fn r_matrix(rng: &mut impl Rng, n: usize, density: f64) -> RMatrix {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                entries.push((i, j, rational(rng)));
            }
        }
    }
    RMatrix::from_upper(n, entries).expect("indices in range")
}

pub fn quadratic(rng: &mut impl Rng, n: usize, terms: usize) -> QuadraticTensor {
    let raw: Vec<_> = (0..terms)
        .map(|_| {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            let k = rng.gen_range(0..n);
            let l = rng.gen_range(0..n);
            (i, j, vec![k, l], rational(rng))
        })
        .collect();
    QuadraticTensor::canonicalize(n, raw).expect("indices in range")
}

/// Random invertible rational basis change, entries in `-2..=2`.
pub fn basis_change(rng: &mut impl Rng, n: usize) -> Vec<Scalar> {
    loop {
        let p: Vec<Scalar> = (0..n * n).map(|_| small_int(rng, 2)).collect();
        if linalg::invert(&p, n).is_some() {
            return p;
        }
    }
}

/// A unital associative algebra of dimension at most 4: a catalog algebra
/// written in a random basis.
pub fn unital_algebra(rng: &mut impl Rng) -> Algebra {
    let choices = [
        CatalogAlgebra::Quaternions,
        CatalogAlgebra::Matrix(2),
        CatalogAlgebra::UpperTriangular(2),
        CatalogAlgebra::DualNumbers,
        CatalogAlgebra::Componentwise(3),
        CatalogAlgebra::HeisenbergUnital(int(1)),
    ];
    let base = catalog::get_algebra(&choices[rng.gen_range(0..choices.len())])
        .expect("catalog algebras are valid");
    let p = basis_change(rng, base.dim());
    let name = base.name().to_string();
    base.change_basis(&p)
        .expect("invertible change")
        .with_name(format!("{name} (random basis)"))
}
