//! Sparse multivariate polynomials over an exact coefficient ring.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::rat::fmt_rat;
use crate::exact::{Cyclotomic, Rat};

/// Exact commutative coefficient ring.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, r: &Rat) -> Self;
    fn inverse(&self) -> Option<Self>;
    fn from_rat(r: Rat) -> Self;
}

impl Coeff for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
}

impl Coeff for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rat) -> Self {
        Cyclotomic::scale(self, r)
    }
    fn inverse(&self) -> Option<Self> {
        Cyclotomic::inverse(self)
    }
    fn from_rat(r: Rat) -> Self {
        Cyclotomic::rational(r)
    }
}

/// Exponent vector.
pub type Monomial = Vec<u32>;

fn degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

/// Orders monomials by total degree, then lexicographically with the
/// first variable most significant.
pub fn graded_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    degree(a).cmp(&degree(b)).then_with(|| b.cmp(a))
}

#[derive(Clone, PartialEq)]
pub struct Poly<C> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(m, C::one());
        p
    }

    /// `Σ c_i x_{offset+i}`.
    pub fn linear(nvars: usize, offset: usize, coeffs: &[C]) -> Self {
        let mut p = Poly::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            let mut m = vec![0; nvars];
            m[offset + i] = 1;
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &[u32]) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x = x.add(&c);
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| degree(m)).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, r: &Rat) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }

    pub fn mul_coeff(&self, k: &C) -> Self {
        self.map_coeffs(|c| c.mul(k))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut p = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), f(c));
        }
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_truncated(other, self.nvars, u32::MAX)
    }

    /// Product keeping only terms whose degree in the first `k` variables is
    /// at most `max`.
    pub fn mul_truncated(&self, other: &Self, k: usize, max: u32) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut p = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            let d1 = degree(&m1[..k]);
            if d1 > max {
                continue;
            }
            for (m2, c2) in &other.terms {
                if d1 + degree(&m2[..k]) > max {
                    continue;
                }
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                p.add_term(m, c1.mul(c2));
            }
        }
        p
    }

    pub fn pow_truncated(&self, e: u32, k: usize, max: u32) -> Self {
        let mut p = Poly::one(self.nvars);
        for _ in 0..e {
            p = p.mul_truncated(self, k, max);
        }
        p
    }

    /// Terms whose degree in the first `k` variables equals `d`.
    pub fn homogeneous_part(&self, k: usize, d: u32) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| degree(&m[..k]) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Splits off the first `k` variables: returns pairs (exponents of the
    /// first `k` variables, polynomial in the remaining ones).
    pub fn split(&self, k: usize) -> BTreeMap<Monomial, Poly<C>> {
        let mut out: BTreeMap<Monomial, Poly<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m[..k].to_vec())
                .or_insert_with(|| Poly::zero(self.nvars - k))
                .add_term(m[k..].to_vec(), c.clone());
        }
        out
    }

    /// Substitutes `x_i ↦ images[i]`.
    pub fn compose(&self, images: &[Poly<C>]) -> Poly<C> {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, |p| p.nvars);
        let mut cache: BTreeMap<(usize, u32), Poly<C>> = BTreeMap::new();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = cache
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow_truncated(e, 0, u32::MAX))
                    .clone();
                t = t.mul(&pw);
            }
            out = out.add(&t);
        }
        out
    }

    pub fn evaluate(&self, x: &[BigInt]) -> C {
        assert_eq!(x.len(), self.nvars);
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut v = BigInt::one();
            for (xi, &e) in x.iter().zip(m) {
                v *= xi.pow(e);
            }
            acc = acc.add(&c.scale(&Rat::from_integer(v)));
        }
        acc
    }

    /// Terms in graded order (degree ascending, first variable most significant).
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &C)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| graded_cmp(a.0, b.0));
        t
    }
}

impl Poly<Rat> {
    pub fn evaluate_rat(&self, x: &[BigInt]) -> Rat {
        self.evaluate(x)
    }

    /// Human-readable form such as `1 + 3/2*b2 - 1/2*l2^2`.
    pub fn display_with(&self, names: &[&str]) -> String {
        let mut out = String::new();
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return "0".to_string();
        }
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| if e == 1 { names[j].to_string() } else { format!("{}^{}", names[j], e) })
                .collect();
            if vars.is_empty() {
                out.push_str(&fmt_rat(&abs));
            } else if abs.is_one() {
                out.push_str(&vars.join("*"));
            } else {
                out.push_str(&format!("{}*{}", fmt_rat(&abs), vars.join("*")));
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{int_vec, rat};

    #[test]
    fn binomial_square() {
        let x = Poly::<Rat>::var(2, 0);
        let y = Poly::<Rat>::var(2, 1);
        let s = x.add(&y);
        let sq = s.mul(&s);
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coefficient(&[1, 1]), rat(2, 1));
        assert_eq!(sq.evaluate(&int_vec(&[2, 3])), rat(25, 1));
    }

    #[test]
    fn truncation_drops_high_degree() {
        let x = Poly::<Rat>::var(2, 0);
        let one = Poly::<Rat>::one(2);
        let p = one.add(&x).pow_truncated(5, 1, 2);
        assert_eq!(p.total_degree(), Some(2));
        assert_eq!(p.coefficient(&[2, 0]), rat(10, 1));
    }

    #[test]
    fn display() {
        let p = Poly::from_terms(
            2,
            [(vec![0, 0], rat(1, 1)), (vec![0, 1], rat(3, 2)), (vec![2, 0], rat(-1, 2)), (vec![1, 1], rat(1, 1))],
        );
        assert_eq!(p.display_with(&["x", "y"]), "1 + 3/2*y - 1/2*x^2 + x*y");
    }

    #[test]
    fn compose_linear() {
        // p(x) = x^2, x ↦ y + 1
        let p = Poly::<Rat>::var(1, 0).pow_truncated(2, 0, u32::MAX);
        let img = Poly::var(1, 0).add(&Poly::one(1));
        let q = p.compose(&[img]);
        assert_eq!(q.evaluate(&int_vec(&[3])), rat(16, 1));
    }
}
