//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;
use smallvec::SmallVec;

use crate::scalar::{one, to_f64, Scalar};

/// Sorted multiset of variable indices: `[0, 0, 2]` is `x⁰x⁰x²`.
pub type Monomial = SmallVec<[u16; 4]>;

pub fn monomial(vars: &[usize]) -> Monomial {
    let mut m: Monomial = vars.iter().map(|&v| v as u16).collect();
    m.sort_unstable();
    m
}

fn merge(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Monomial::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::new(), c);
        p
    }

    pub fn var(i: usize) -> Self {
        Self::term(&[i], one())
    }

    pub fn term(vars: &[usize], c: Scalar) -> Self {
        let mut p = Poly::zero();
        p.add_term(monomial(vars), c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[u16]) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += s·other`.
    pub fn add_scaled(&mut self, other: &Poly, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * s);
        }
    }

    /// `self += s·a·b`.
    pub fn add_product(&mut self, a: &Poly, b: &Poly, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (ma, ca) in &a.terms {
            let sa = ca * s;
            for (mb, cb) in &b.terms {
                self.add_term(merge(ma, mb), &sa * cb);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        p.add_scaled(other, &one());
        p
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        p.add_scaled(other, &-one());
        p
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        let mut p = Poly::zero();
        p.add_scaled(self, s);
        p
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut p = Poly::zero();
        p.add_product(self, other, &one());
        p
    }

    /// `∂/∂x^i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let v = i as u16;
        let mut p = Poly::zero();
        for (m, c) in &self.terms {
            let count = m.iter().filter(|&&x| x == v).count();
            if count == 0 {
                continue;
            }
            let pos = m.iter().position(|&x| x == v).unwrap();
            let mut rest = m.clone();
            rest.remove(pos);
            p.add_term(rest, c * Scalar::from_integer((count as i64).into()));
        }
        p
    }

    /// Replaces every variable `x^i` by `subs[i]`.
    pub fn substitute(&self, subs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            for &v in m.iter() {
                acc = acc.mul(&subs[v as usize]);
            }
            out.add_scaled(&acc, &one());
        }
        out
    }

    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &v in m.iter() {
                t *= &x[v as usize];
            }
            total += t;
        }
        total
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| m.iter().fold(to_f64(c), |acc, &v| acc * x[v as usize]))
            .sum()
    }

    /// Human-readable form with variables named by `name(i)`.
    pub fn display_with(&self, name: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Scalar::zero();
            let mag = if neg { -c } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if m.is_empty() || mag != one() {
                factors.push(crate::scalar::emit_rational(&mag));
            }
            let mut i = 0;
            while i < m.len() {
                let v = m[i];
                let mut pow = 0;
                while i < m.len() && m[i] == v {
                    pow += 1;
                    i += 1;
                }
                factors.push(if pow == 1 {
                    name(v as usize)
                } else {
                    format!("{}^{}", name(v as usize), pow)
                });
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}
