//! Double-precision sampling checks for statements outside the exact
//! polynomial engine: the invariant-field (Drinfeld) form of the bracket,
//! the Poisson-map property of multiplication at sampled pairs, and the
//! singular log bracket on the componentwise plane.

use rand::Rng;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg;
use crate::poisson::QuadraticTensor;
use crate::random;
use crate::scalar::{one, to_f64};
use crate::yang_baxter::{quadratic_from_r, RMatrix};

/// Threshold on `|det L_x|` below which a point counts as singular.
pub const INVERTIBILITY_THRESHOLD: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SamplePlan {
    pub seed: u64,
    pub samples: usize,
    pub range: (f64, f64),
    pub tol: f64,
}

impl Default for SamplePlan {
    fn default() -> Self {
        SamplePlan {
            seed: 0,
            samples: 100,
            range: (-2.0, 2.0),
            tol: 1e-9,
        }
    }
}

impl SamplePlan {
    pub fn new(seed: u64, samples: usize, range: (f64, f64), tol: f64) -> Result<Self> {
        let plan = SamplePlan {
            seed,
            samples,
            range,
            tol,
        };
        plan.check()?;
        Ok(plan)
    }

    /// Default plan restricted to the open positive quadrant `(0, 2]`.
    pub fn positive(seed: u64, samples: usize) -> Self {
        SamplePlan {
            seed,
            samples,
            range: (1e-3, 2.0),
            ..SamplePlan::default()
        }
    }

    pub fn check(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidSamplePlan("sample count must be at least 1".into()));
        }
        if !(self.tol > 0.0) {
            return Err(Error::InvalidSamplePlan(format!("tolerance must be positive, got {}", self.tol)));
        }
        if !(self.range.0 < self.range.1) || !self.range.0.is_finite() || !self.range.1.is_finite() {
            return Err(Error::InvalidSamplePlan(format!(
                "empty sampling range [{}, {}]",
                self.range.0, self.range.1
            )));
        }
        Ok(())
    }

    fn point(&self, rng: &mut impl Rng, n: usize) -> Vec<f64> {
        (0..n).map(|_| rng.gen_range(self.range.0..self.range.1)).collect()
    }
}

/// Worst-case summary of a sampled check. `error` is the absolute residual
/// divided by `max(1, magnitude)`, so the tolerance is relative once values
/// exceed 1.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericReport {
    pub pass: bool,
    pub samples: usize,
    pub tol: f64,
    pub max_abs: f64,
    pub max_rel: f64,
    pub worst_index: usize,
    pub worst_point: Vec<f64>,
    /// Proportionality constant, for checks that measure one.
    pub kappa: Option<f64>,
    pub kappa_variance: Option<f64>,
}

#[derive(Default)]
struct Tracker {
    max_abs: f64,
    max_rel: f64,
    worst_index: usize,
    worst_point: Vec<f64>,
    samples: usize,
}

impl Tracker {
    fn record(&mut self, index: usize, point: &[f64], got: &[f64], want: &[f64]) {
        self.samples += 1;
        let mut abs = 0.0f64;
        let mut rel = 0.0f64;
        for (g, w) in got.iter().zip(want) {
            let d = (g - w).abs();
            abs = abs.max(d);
            rel = rel.max(d / g.abs().max(w.abs()).max(1.0));
        }
        if abs.is_nan() || rel.is_nan() {
            rel = f64::INFINITY;
            abs = f64::INFINITY;
        }
        // strict comparison keeps the earliest sample on ties
        if rel > self.max_rel || self.worst_point.is_empty() {
            self.max_rel = rel;
            self.worst_index = index;
            self.worst_point = point.to_vec();
        }
        self.max_abs = self.max_abs.max(abs);
    }

    fn finish(self, tol: f64) -> NumericReport {
        NumericReport {
            pass: self.max_rel <= tol,
            samples: self.samples,
            tol,
            max_abs: self.max_abs,
            max_rel: self.max_rel,
            worst_index: self.worst_index,
            worst_point: self.worst_point,
            kappa: None,
            kappa_variance: None,
        }
    }
}

/// Dense `a_{ij}^k` in double precision.
struct FloatAlgebra {
    n: usize,
    a: Vec<f64>,
}

impl FloatAlgebra {
    fn new(alg: &Algebra) -> Self {
        let n = alg.dim();
        let mut a = vec![0.0; n * n * n];
        for (i, j, k, v) in alg.structure() {
            a[(i * n + j) * n + k] = to_f64(v);
        }
        FloatAlgebra { n, a }
    }

    fn at(&self, i: usize, j: usize, k: usize) -> f64 {
        self.a[(i * self.n + j) * self.n + k]
    }

    fn multiply(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut out = vec![0.0; n];
        for i in 0..n {
            for j in 0..n {
                let xy = x[i] * y[j];
                if xy == 0.0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += xy * self.at(i, j, k);
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y`, row-major `[k][j]`.
    fn left(&self, x: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    m[k * n + j] += x[i] * self.at(i, j, k);
                }
            }
        }
        m
    }

    /// Matrix of `y ↦ y·x`, row-major `[k][i]`.
    fn right(&self, x: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    m[k * n + i] += x[j] * self.at(i, j, k);
                }
            }
        }
        m
    }

    fn invertible(&self, x: &[f64]) -> (bool, f64) {
        let det = linalg::det_f64(&self.left(x), self.n);
        (det.abs() > INVERTIBILITY_THRESHOLD, det)
    }
}

/// `M t Mᵀ` for an `n×n` matrix `m` and table `t`.
fn congruence(m: &[f64], t: &[f64], n: usize) -> Vec<f64> {
    let mut mt = vec![0.0; n * n];
    for i in 0..n {
        for p in 0..n {
            let mip = m[i * n + p];
            if mip == 0.0 {
                continue;
            }
            for s in 0..n {
                mt[i * n + s] += mip * t[p * n + s];
            }
        }
    }
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = (0..n).map(|s| mt[i * n + s] * m[j * n + s]).sum();
        }
    }
    out
}

/// `r^{pq}((x e_p)⊗(x e_q) − (e_p x)⊗(e_q x))` as an `n×n` table, built from
/// the left-invariant fields `E_p(x) = x e_p` and right-invariant `E'_p(x) = e_p x`.
pub fn drinfeld_tensor(alg: &Algebra, r: &RMatrix, x: &[f64]) -> Result<Vec<f64>> {
    let n = alg.dim();
    if r.dim() != n || x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: if r.dim() != n { r.dim() } else { x.len() },
        });
    }
    let fa = FloatAlgebra::new(alg);
    let (ok, det) = fa.invertible(x);
    if !ok {
        return Err(Error::NotInvertible(det));
    }
    let r_f: Vec<f64> = r.tensor().coeffs().iter().map(to_f64).collect();
    // column p of left(x) is x e_p
    Ok(congruence(&fa.left(x), &r_f, n)
        .iter()
        .zip(congruence(&fa.right(x), &r_f, n))
        .map(|(a, b)| a - b)
        .collect())
}

fn sample_invertible(fa: &FloatAlgebra, plan: &SamplePlan, rng: &mut impl Rng) -> Option<Vec<f64>> {
    // bounded retries so degenerate ranges terminate
    for _ in 0..64 {
        let x = plan.point(rng, fa.n);
        if fa.invertible(&x).0 {
            return Some(x);
        }
    }
    None
}

/// Measures `κ` with `drinfeld_tensor(x) ≈ κ·π(x)` for `π = quadratic_from_r(r, 1)`.
/// `κ` is fixed at the first sample; the report's error is the deviation from
/// `κ·π` at every sample, and `kappa_variance` the spread of per-sample
/// least-squares estimates. Antisymmetry of the Drinfeld table is folded into
/// the error.
pub fn drinfeld_proportionality(alg: &Algebra, r: &RMatrix, plan: &SamplePlan) -> Result<NumericReport> {
    plan.check()?;
    let n = alg.dim();
    let qt = quadratic_from_r(alg, r, &one())?;
    let fa = FloatAlgebra::new(alg);
    let mut rng = random::rng(plan.seed);
    let mut tracker = Tracker::default();
    let mut kappa: Option<f64> = None;
    let mut estimates = Vec::new();
    for index in 0..plan.samples {
        let x = sample_invertible(&fa, plan, &mut rng).ok_or(Error::NoInvertibleSamples)?;
        let d = drinfeld_tensor(alg, r, &x)?;
        let p = qt.evaluate_f64(&x);
        let pp: f64 = p.iter().map(|v| v * v).sum();
        if pp > 0.0 {
            let k = d.iter().zip(&p).map(|(a, b)| a * b).sum::<f64>() / pp;
            estimates.push(k);
            kappa.get_or_insert(k);
        }
        let k = kappa.unwrap_or(0.0);
        let want: Vec<f64> = p.iter().map(|v| k * v).collect();
        let transposed: Vec<f64> = (0..n * n).map(|idx| -d[(idx % n) * n + idx / n]).collect();
        let mut got = d.clone();
        got.extend_from_slice(&transposed);
        let mut want2 = want.clone();
        want2.extend_from_slice(&d);
        tracker.record(index, &x, &got, &want2);
    }
    let mut report = tracker.finish(plan.tol);
    if !estimates.is_empty() {
        let mean = estimates.iter().sum::<f64>() / estimates.len() as f64;
        let var = estimates.iter().map(|k| (k - mean).powi(2)).sum::<f64>() / estimates.len() as f64;
        report.kappa = kappa;
        report.kappa_variance = Some(var);
    }
    Ok(report)
}

/// Max-norm of `π(yz) − π(y)·(z⊗z) − (y⊗y)·π(z)` at one pair, and the
/// magnitude it should be compared against.
pub fn group_multiplicativity_at(
    alg: &Algebra,
    bracket: &dyn Fn(&[f64]) -> Vec<f64>,
    y: &[f64],
    z: &[f64],
) -> (Vec<f64>, Vec<f64>) {
    let n = alg.dim();
    let fa = FloatAlgebra::new(alg);
    let lhs = bracket(&fa.multiply(y, z));
    // (y z)^i is linear in y through right(z) and in z through left(y)
    let first = congruence(&fa.right(z), &bracket(y), n);
    let second = congruence(&fa.left(y), &bracket(z), n);
    let rhs = first.iter().zip(&second).map(|(a, b)| a + b).collect();
    (lhs, rhs)
}

/// Samples invertible pairs `(y, z)` and compares both sides of the
/// multiplicativity identity. `bracket` returns the row-major `n×n` table.
pub fn group_multiplicativity_sample(
    alg: &Algebra,
    bracket: &dyn Fn(&[f64]) -> Vec<f64>,
    plan: &SamplePlan,
) -> Result<NumericReport> {
    plan.check()?;
    let fa = FloatAlgebra::new(alg);
    let mut rng = random::rng(plan.seed);
    let mut tracker = Tracker::default();
    for index in 0..plan.samples {
        let y = sample_invertible(&fa, plan, &mut rng).ok_or(Error::NoInvertibleSamples)?;
        let z = sample_invertible(&fa, plan, &mut rng).ok_or(Error::NoInvertibleSamples)?;
        let (lhs, rhs) = group_multiplicativity_at(alg, bracket, &y, &z);
        let mut point = y.clone();
        point.extend_from_slice(&z);
        tracker.record(index, &point, &lhs, &rhs);
    }
    Ok(tracker.finish(plan.tol))
}

/// Evaluator for an exact quadratic bracket.
pub fn polynomial_evaluator(qt: &QuadraticTensor) -> impl Fn(&[f64]) -> Vec<f64> + '_ {
    move |x| qt.evaluate_f64(x)
}

/// The singular bracket `{x, y} = xy·log|x|` on the plane.
pub fn log_bracket(p: &[f64]) -> Vec<f64> {
    let v = p[0] * p[1] * p[0].abs().ln();
    vec![0.0, v, -v, 0.0]
}

/// `{ξ, η}` of the log bracket pushed forward through `ξ = log x`,
/// `η = log y`: `(∂ξ/∂x)(∂η/∂y){x, y}`.
pub fn iso_pushed(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0) {
        return Err(Error::NonPositiveSample(x, y));
    }
    let (dxi, deta) = (1.0 / x, 1.0 / y);
    Ok(dxi * deta * log_bracket(&[x, y])[1])
}

/// Compares the pushed-forward log bracket with the linear bracket
/// `{ξ, η} = ξ` at sampled points of the positive quadrant.
pub fn iso_pushforward_check(plan: &SamplePlan) -> Result<NumericReport> {
    plan.check()?;
    if plan.range.0 < 0.0 {
        return Err(Error::NonPositiveSample(plan.range.0, plan.range.1));
    }
    let mut rng = random::rng(plan.seed);
    let mut tracker = Tracker::default();
    for index in 0..plan.samples {
        let p = plan.point(&mut rng, 2);
        let pushed = iso_pushed(p[0], p[1])?;
        let xi = p[0].ln();
        tracker.record(index, &p, &[pushed], &[xi]);
    }
    Ok(tracker.finish(plan.tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, CatalogAlgebra};
    use crate::scalar::ratio;

    fn quat() -> Algebra {
        catalog::get_algebra(&CatalogAlgebra::Quaternions).unwrap()
    }

    #[test]
    fn plan_validation() {
        assert!(SamplePlan::new(1, 0, (-1.0, 1.0), 1e-9).is_err());
        assert!(SamplePlan::new(1, 3, (-1.0, 1.0), 0.0).is_err());
        assert!(SamplePlan::new(1, 3, (1.0, 1.0), 1e-9).is_err());
        assert!(SamplePlan::new(1, 3, (-1.0, 1.0), 1e-9).is_ok());
    }

    #[test]
    fn drinfeld_vanishes_at_unit() {
        let h = quat();
        let d = drinfeld_tensor(&h, &RMatrix::wedge(4, 2, 3), &[1.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(d.iter().all(|v| v.abs() < 1e-15));
        let z = drinfeld_tensor(&h, &RMatrix::zero(4), &[0.3, -1.0, 0.5, 2.0]).unwrap();
        assert!(z.iter().all(|v| *v == 0.0));
    }

    #[test]
    fn drinfeld_rejects_singular_points() {
        let h = quat();
        assert!(matches!(
            drinfeld_tensor(&h, &RMatrix::wedge(4, 2, 3), &[0.0; 4]),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn drinfeld_proportional_with_kappa_minus_one() {
        let h = quat();
        let plan = SamplePlan {
            samples: 25,
            ..SamplePlan::default()
        };
        let report = drinfeld_proportionality(&h, &RMatrix::wedge(4, 2, 3), &plan).unwrap();
        assert!(report.pass, "{report:?}");
        assert!((report.kappa.unwrap() + 1.0).abs() < 1e-9);
        assert!(report.kappa_variance.unwrap() < 1e-18);
    }

    #[test]
    fn quaternion_bracket_multiplicative_at_samples() {
        let h = quat();
        let qt = quadratic_from_r(&h, &RMatrix::wedge(4, 2, 3), &ratio(1, 2)).unwrap();
        let eval = polynomial_evaluator(&qt);
        let report = group_multiplicativity_sample(&h, &eval, &SamplePlan::default()).unwrap();
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn broken_bracket_fails_at_ones() {
        let plane = catalog::get_algebra(&CatalogAlgebra::Componentwise(2)).unwrap();
        let broken = |p: &[f64]| vec![0.0, p[0] * p[0], -p[0] * p[0], 0.0];
        let (lhs, rhs) = group_multiplicativity_at(&plane, &broken, &[1.0, 1.0], &[1.0, 1.0]);
        assert_eq!((lhs[1], rhs[1]), (1.0, 2.0));
        let report = group_multiplicativity_sample(&plane, &broken, &SamplePlan::default()).unwrap();
        assert!(!report.pass);
    }

    #[test]
    fn log_bracket_multiplicative_on_positive_quadrant() {
        let plane = catalog::get_algebra(&CatalogAlgebra::Componentwise(2)).unwrap();
        let report = group_multiplicativity_sample(&plane, &log_bracket, &SamplePlan::positive(5, 100)).unwrap();
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn iso_pushforward_points() {
        assert!((iso_pushed(std::f64::consts::E, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(iso_pushed(1.0, 7.5).unwrap(), 0.0);
        assert!(matches!(iso_pushed(-1.0, 1.0), Err(Error::NonPositiveSample(..))));
        assert!(iso_pushforward_check(&SamplePlan::positive(9, 100)).unwrap().pass);
        assert!(iso_pushforward_check(&SamplePlan::default()).is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let h = quat();
        let plan = SamplePlan {
            seed: 42,
            samples: 10,
            ..SamplePlan::default()
        };
        let a = drinfeld_proportionality(&h, &RMatrix::wedge(4, 1, 2), &plan).unwrap();
        let b = drinfeld_proportionality(&h, &RMatrix::wedge(4, 1, 2), &plan).unwrap();
        assert_eq!(a, b);
    }
}
