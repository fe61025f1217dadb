mod common;

use common::config;
use num_traits::{One, Zero};
use proptest::prelude::*;
use quadpoisson::algebra::{Legs, Tensor2, Tensor3, Vector};
use quadpoisson::bialgebra::{
    coboundary_cobracket, cobracket_at, cocycle_residual, dual_bracket, dual_lie, linearity_defect, shift_residual,
};
use quadpoisson::catalog::{default_entries, get_algebra, CatalogAlgebra};
use quadpoisson::io;
use quadpoisson::numeric::{drinfeld_proportionality, drinfeld_tensor, SamplePlan};
use quadpoisson::poisson::{jacobi_mixed, jacobiator, multiplicativity_residual, unit_vanishing, PolyTensor, QuadraticTensor};
use quadpoisson::poly::Poly;
use quadpoisson::random;
use quadpoisson::scalar::{int, ratio, Scalar};
use quadpoisson::yang_baxter::{
    ad_extension, ad_invariance_residual, cybe_residual, extend_delta, quadratic_from_r, schouten,
    symmetric_annihilation_residual, ExtensionChoice, RMatrix,
};
use quadpoisson::Algebra;
use rand::Rng;

fn sym(n: usize, rng: &mut impl Rng) -> Tensor2 {
    let t = Tensor2::from_coeffs(n, (0..n * n).map(|_| random::rational(rng)).collect()).unwrap();
    t.add(&t.transpose())
}

fn anti(n: usize, rng: &mut impl Rng) -> Tensor2 {
    random::r_matrix(rng, n, 0.7).tensor().clone()
}

fn tensor2(n: usize, rng: &mut impl Rng) -> Tensor2 {
    Tensor2::from_coeffs(n, (0..n * n).map(|_| random::rational(rng)).collect()).unwrap()
}

fn catalog_algebras() -> Vec<Algebra> {
    default_entries().iter().map(|w| get_algebra(w).unwrap()).collect()
}

#[test]
fn catalog_algebras_validate() {
    for which in default_entries() {
        let report = get_algebra(&which).unwrap().validate();
        assert!(report.pass, "{which}: {:?}", report.violations.first());
    }
}

#[test]
fn multiply_is_associative_on_random_triples() {
    let mut rng = random::rng(1);
    for alg in catalog_algebras() {
        let n = alg.dim();
        for _ in 0..100 {
            let (x, y, z) = (random::vector(&mut rng, n), random::vector(&mut rng, n), random::vector(&mut rng, n));
            let left = alg.multiply(&alg.multiply(&x, &y).unwrap(), &z).unwrap();
            let right = alg.multiply(&x, &alg.multiply(&y, &z).unwrap()).unwrap();
            assert_eq!(left, right, "{}", alg.name());
        }
    }
}

#[test]
fn commutator_bracket_is_lie() {
    let mut rng = random::rng(2);
    let mut algebras = catalog_algebras();
    algebras.extend((0..10).map(|_| random::unital_algebra(&mut rng)));
    for alg in algebras {
        let lie = alg.lie_structure();
        assert!(lie.skewness_residual().pass, "{}", alg.name());
        assert!(lie.jacobi_residual().pass, "{}", alg.name());
    }
}

proptest! {
    #![proptest_config(config(48, 0x51))]

    #[test]
    fn symmetric_tensors_form_subalgebra_and_wedge_is_bimodule(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let alg = random::unital_algebra(&mut rng);
        let n = alg.dim();
        let (s1, s2, a) = (sym(n, &mut rng), sym(n, &mut rng), anti(n, &mut rng));
        prop_assert!(alg.tensor2_multiply(&s1, &s2).unwrap().symmetry().symmetric);
        prop_assert!(alg.tensor2_multiply(&s1, &a).unwrap().symmetry().antisymmetric);
        prop_assert!(alg.tensor2_multiply(&a, &s1).unwrap().symmetry().antisymmetric);
    }

    #[test]
    fn embed_leg_is_multiplicative(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let alg = random::unital_algebra(&mut rng);
        let n = alg.dim();
        let (s, t) = (tensor2(n, &mut rng), tensor2(n, &mut rng));
        let st = alg.tensor2_multiply(&s, &t).unwrap();
        for legs in [Legs::L12, Legs::L13, Legs::L23] {
            let lhs = alg.embed_leg(&st, legs).unwrap();
            let rhs = alg.tensor3_multiply(&alg.embed_leg(&s, legs).unwrap(), &alg.embed_leg(&t, legs).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn canonicalize_is_idempotent(seed in any::<u64>(), n in 2usize..5, terms in 0usize..8) {
        let mut rng = random::rng(seed);
        let qt = random::quadratic(&mut rng, n, terms);
        let again = QuadraticTensor::canonicalize(n, qt.as_poly().coefficient_list()).unwrap();
        prop_assert_eq!(again, qt);
    }

    #[test]
    fn mixed_jacobiator_with_itself_doubles(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let n = rng.gen_range(3..5);
        let qt = random::quadratic(&mut rng, n, 4);
        let mixed = jacobi_mixed(qt.as_poly(), qt.as_poly()).unwrap();
        prop_assert_eq!(mixed, jacobiator(qt.as_poly()).scale(&int(2)).report());
    }

    #[test]
    fn multiplicative_brackets_vanish_at_the_unit(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let alg = random::unital_algebra(&mut rng);
        let n = alg.dim();
        let mut qt = quadratic_from_r(&alg, &random::r_matrix(&mut rng, n, 0.6), &Scalar::one()).unwrap();
        if rng.gen_bool(0.3) {
            qt = qt.add(&random::quadratic(&mut rng, n, 1)).unwrap();
        }
        if multiplicativity_residual(&alg, &qt).unwrap().pass {
            prop_assert!(unit_vanishing(&alg, &qt).unwrap().pass);
        }
    }

    #[test]
    fn bracket_is_linear_in_r_and_scale(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let alg = random::unital_algebra(&mut rng);
        let n = alg.dim();
        let (r1, r2) = (random::r_matrix(&mut rng, n, 0.6), random::r_matrix(&mut rng, n, 0.6));
        let (s, t) = (random::rational(&mut rng), random::rational(&mut rng));
        let one = Scalar::one();
        let sum = quadratic_from_r(&alg, &r1.scale(&t).add(&r2), &one).unwrap();
        let parts = quadratic_from_r(&alg, &r1, &one).unwrap().scale(&t).add(&quadratic_from_r(&alg, &r2, &one).unwrap()).unwrap();
        prop_assert_eq!(sum, parts);
        prop_assert_eq!(quadratic_from_r(&alg, &r1, &s).unwrap(), quadratic_from_r(&alg, &r1, &one).unwrap().scale(&s));
    }

    #[test]
    fn invariant_schouten_implies_poisson(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let alg = random::unital_algebra(&mut rng);
        let r = random::r_matrix(&mut rng, alg.dim(), 0.6);
        let invariant = ad_invariance_residual(&alg, &schouten(&alg, &r).unwrap()).unwrap().pass;
        let poisson = jacobiator(quadratic_from_r(&alg, &r, &Scalar::one()).unwrap().as_poly()).is_zero();
        if invariant {
            prop_assert!(poisson);
        }
        if cybe_residual(&alg, &r).unwrap().is_zero() {
            prop_assert!(invariant && poisson);
        }
    }

    #[test]
    fn schouten_of_ad_is_ad_of_schouten(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let alg = random::unital_algebra(&mut rng);
        let n = alg.dim();
        let r = random::r_matrix(&mut rng, n, 0.6);
        let ext = ad_extension(&alg, &r).unwrap();
        let s = schouten(&alg, &r).unwrap();
        for p in 0..n {
            for q in p..n {
                for t in q..n {
                    let x = Tensor3::symmetrized_basis(n, p, q, t);
                    prop_assert_eq!(ext.schouten_apply(&x), alg.tensor3_commutator(&s, &x).unwrap());
                }
            }
        }
    }

    #[test]
    fn annihilation_is_extension_independent(seed in any::<u64>(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let mut rng = random::rng(seed);
        let alg = random::unital_algebra(&mut rng);
        let n = alg.dim();
        let qt = if rng.gen_bool(0.5) {
            quadratic_from_r(&alg, &random::r_matrix(&mut rng, n, 0.6), &Scalar::one()).unwrap()
        } else {
            random::quadratic(&mut rng, n, 3)
        };
        let a = symmetric_annihilation_residual(&alg, &extend_delta(&qt, ExtensionChoice::Randomized { seed: s1 })).unwrap();
        let b = symmetric_annihilation_residual(&alg, &extend_delta(&qt, ExtensionChoice::Randomized { seed: s2 })).unwrap();
        let c = symmetric_annihilation_residual(&alg, &extend_delta(&qt, ExtensionChoice::Canonical)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&a, &c);
    }

    #[test]
    fn shift_is_linear_for_multiplicative_brackets(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let alg = random::unital_algebra(&mut rng);
        let qt = quadratic_from_r(&alg, &random::r_matrix(&mut rng, alg.dim(), 0.6), &Scalar::one()).unwrap();
        for t in [int(1), int(-1), ratio(1, 3)] {
            prop_assert!(shift_residual(&alg, &qt, &t).unwrap().pass);
        }
    }

    #[test]
    fn dual_cobracket_is_lie_exactly_when_constant_part_is_compatible(seed in any::<u64>()) {
        // π(x + a) = π(x) + Δ_a(x) + π(a); for Poisson π the t² term of the
        // shifted Jacobiator forces J(Δ_a*) = −[π, π(a)]
        let mut rng = random::rng(seed);
        let alg = random::unital_algebra(&mut rng);
        let n = alg.dim();
        let qt = quadratic_from_r(&alg, &random::r_matrix(&mut rng, n, 0.6), &Scalar::one()).unwrap();
        prop_assume!(jacobiator(qt.as_poly()).is_zero());
        let a = random::vector(&mut rng, n);
        let at_a = qt.as_poly().evaluate(&a.0).unwrap();
        let constant = PolyTensor::from_polys(
            n,
            0,
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| ((i, j), Poly::constant(at_a.get(i, j).clone()))),
        )
        .unwrap();
        let compatible = jacobi_mixed(qt.as_poly(), &constant).unwrap().pass;
        let (_, report) = dual_lie(&cobracket_at(&alg, &qt, &a, rng.gen_bool(0.5)).unwrap());
        prop_assert_eq!(report.pass, compatible);
        let (_, at_unit) = dual_lie(&cobracket_at(&alg, &qt, alg.unit().unwrap(), false).unwrap());
        prop_assert!(at_unit.pass);
    }

    #[test]
    fn coboundaries_are_cocycles(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let alg = random::unital_algebra(&mut rng);
        let r = random::r_matrix(&mut rng, alg.dim(), 0.6);
        let cb = coboundary_cobracket(&alg, &r).unwrap();
        prop_assert!(cocycle_residual(&alg.lie_structure(), &cb).unwrap().pass);
    }

    #[test]
    fn cobracket_is_linear_in_direction(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let alg = random::unital_algebra(&mut rng);
        let n = alg.dim();
        let qt = random::quadratic(&mut rng, n, 5);
        let (a, b) = (random::vector(&mut rng, n), random::vector(&mut rng, n));
        prop_assert!(linearity_defect(&alg, &qt, &a, &b).unwrap().is_zero());
        let s = random::rational(&mut rng);
        prop_assert_eq!(
            cobracket_at(&alg, &qt, &a.scale(&s), false).unwrap(),
            cobracket_at(&alg, &qt, &a, false).unwrap().scale(&s)
        );
    }

    #[test]
    fn linear_bracket_of_unit_cobracket_is_poisson(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let alg = random::unital_algebra(&mut rng);
        let qt = quadratic_from_r(&alg, &random::r_matrix(&mut rng, alg.dim(), 0.6), &Scalar::one()).unwrap();
        prop_assume!(jacobiator(qt.as_poly()).is_zero());
        let lt = dual_bracket(&cobracket_at(&alg, &qt, alg.unit().unwrap(), false).unwrap());
        prop_assert!(jacobiator(lt.as_poly()).is_zero());
    }

    #[test]
    fn bracket_json_round_trips(seed in any::<u64>(), n in 2usize..6) {
        let mut rng = random::rng(seed);
        let qt = random::quadratic(&mut rng, n, 6);
        let text = io::to_pretty(&io::bracket_to_json(qt.as_poly()));
        let back = io::bracket_from_json(&text).unwrap();
        prop_assert_eq!(&back, qt.as_poly());
        prop_assert_eq!(io::to_pretty(&io::bracket_to_json(&back)), text);
    }

    #[test]
    fn r_and_algebra_json_round_trip(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let alg = random::unital_algebra(&mut rng);
        let r = random::r_matrix(&mut rng, alg.dim(), 0.6);
        let r_text = io::to_pretty(&io::r_to_json(&r));
        prop_assert_eq!(io::r_from_json(&r_text).unwrap(), r);
        let a_text = io::to_pretty(&io::algebra_to_json(&alg));
        let back = io::algebra_from_json(&a_text).unwrap();
        prop_assert_eq!(io::to_pretty(&io::algebra_to_json(&back)), a_text);
    }
}

#[test]
fn non_multiplicative_direction_can_break_dual_jacobi() {
    // Δ_a of an arbitrary quadratic bracket need not dualize to a Lie bracket
    let mut rng = random::rng(3);
    let h = get_algebra(&CatalogAlgebra::Quaternions).unwrap();
    let broken = (0..20).any(|_| {
        let qt = random::quadratic(&mut rng, 4, 6);
        let a = random::vector(&mut rng, 4);
        !dual_lie(&cobracket_at(&h, &qt, &a, false).unwrap()).1.pass
    });
    assert!(broken);
}

#[test]
fn drinfeld_table_is_antisymmetric() {
    let mut rng = random::rng(4);
    for which in [CatalogAlgebra::Quaternions, CatalogAlgebra::Matrix(2), CatalogAlgebra::UpperTriangular(2)] {
        let alg = get_algebra(&which).unwrap();
        let n = alg.dim();
        let r = random::r_matrix(&mut rng, n, 0.8);
        let mut seen = 0;
        for _ in 0..100 {
            let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let Ok(d) = drinfeld_tensor(&alg, &r, &x) else { continue };
            seen += 1;
            for i in 0..n {
                for j in 0..n {
                    assert!((d[i * n + j] + d[j * n + i]).abs() <= 1e-12);
                }
            }
        }
        assert!(seen > 50);
    }
}

#[test]
fn numeric_reports_depend_only_on_seed() {
    let h = get_algebra(&CatalogAlgebra::Quaternions).unwrap();
    let r = RMatrix::wedge(4, 1, 3);
    let plan = |seed| SamplePlan { seed, samples: 30, ..SamplePlan::default() };
    let a = drinfeld_proportionality(&h, &r, &plan(7)).unwrap();
    let b = drinfeld_proportionality(&h, &r, &plan(7)).unwrap();
    let c = drinfeld_proportionality(&h, &r, &plan(8)).unwrap();
    assert_eq!(a, b);
    assert_ne!(a.worst_point, c.worst_point);
}

#[test]
fn zero_direction_and_zero_r_give_zero_cobrackets() {
    let alg = get_algebra(&CatalogAlgebra::Matrix(2)).unwrap();
    let qt = quadratic_from_r(&alg, &RMatrix::wedge(4, 0, 1), &Scalar::one()).unwrap();
    assert!(cobracket_at(&alg, &qt, &Vector::zero(4), true).unwrap().is_zero());
    assert!(coboundary_cobracket(&alg, &RMatrix::zero(4)).unwrap().is_zero());
    assert!(quadratic_from_r(&alg, &RMatrix::zero(4), &Scalar::zero()).unwrap().is_zero());
}
