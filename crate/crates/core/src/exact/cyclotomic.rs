//! Exact arithmetic in cyclotomic fields `Q(ζ_m)`.
//!
//! An element of order `m` is stored as its coefficient vector in the power
//! basis `1, ζ, ζ², …, ζ^{φ(m)-1}`, i.e. as a polynomial reduced modulo the
//! `m`-th cyclotomic polynomial `Φ_m`. Since `Φ_m` is the minimal polynomial
//! of `ζ_m`, this representation is unique for a fixed `m`. Binary operations
//! on elements of different orders first embed both into `Q(ζ_lcm)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rat::{fmt_rat, Rat};

#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rat>,
}

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Coefficients of `Φ_m`, lowest degree first. Monic.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<BigInt>> {
    assert!(m >= 1);
    if let Some(p) = phi_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 = Π_{d | m} Φ_d(x)
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m % d == 0 {
            num = int_poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    let p = Arc::new(num);
    phi_cache().lock().unwrap().insert(m, p.clone());
    p
}

fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Euler's totient, i.e. the degree of `Φ_m`.
pub fn totient(m: u32) -> usize {
    cyclotomic_polynomial(m).len() - 1
}

/// Reduces a polynomial (lowest degree first) modulo the monic `Φ`.
fn reduce_mod(mut a: Vec<Rat>, phi: &[BigInt]) -> Vec<Rat> {
    let deg = phi.len() - 1;
    for i in (deg..a.len()).rev() {
        let c = std::mem::replace(&mut a[i], Rat::zero());
        if c.is_zero() {
            continue;
        }
        for (j, p) in phi.iter().enumerate().take(deg) {
            a[i - deg + j] -= &c * p;
        }
    }
    a.resize(deg, Rat::zero());
    a
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut a: Vec<Rat>) -> Vec<Rat> {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

/// Quotient and remainder of polynomial division over `Q`.
fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().expect("division by zero polynomial").clone();
    let mut quot = vec![Rat::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        for (j, y) in b.iter().enumerate() {
            let t = &c * y;
            rem[shift + j] -= t;
        }
        quot[shift] = c;
        rem.pop();
        rem = trim(rem);
    }
    (quot, rem)
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rat::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rat::zero);
            x - y
        })
        .collect()
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { order: 1, coeffs: vec![Rat::zero()] }
    }

    pub fn one() -> Self {
        Self::rational(Rat::one())
    }

    pub fn rational(r: Rat) -> Self {
        Cyclotomic { order: 1, coeffs: vec![r] }
    }

    /// `ζ_m^r` with `ζ_m = e^{2πi/m}`.
    pub fn root_of_unity(m: u32, r: i64) -> Self {
        let r = r.rem_euclid(m as i64) as usize;
        let mut a = vec![Rat::zero(); r + 1];
        a[r] = Rat::one();
        Cyclotomic { order: m, coeffs: reduce_mod(a, &cyclotomic_polynomial(m)) }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients in the power basis of `Q(ζ_order)`.
    pub fn coefficients(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Embeds into `Q(ζ_target)`; `target` must be a multiple of the order.
    pub fn lift(&self, target: u32) -> Self {
        assert!(target % self.order == 0, "order {} does not divide {}", self.order, target);
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let mut a = vec![Rat::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            a[i * step] = c.clone();
        }
        Cyclotomic { order: target, coeffs: reduce_mod(a, &cyclotomic_polynomial(target)) }
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = self.order.lcm(&other.order);
        (self.lift(m), other.lift(m))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `Some(q)` if the element is the rational number `q`.
    pub fn to_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.to_rational() {
            return Some(Cyclotomic::rational(q.recip()).lift(self.order));
        }
        // Extended Euclid: s*a + t*phi = g with g a nonzero constant.
        let phi: Vec<Rat> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect();
        let (mut r0, mut r1) = (phi, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (Vec::<Rat>::new(), vec![Rat::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        let g = r1[0].clone();
        let coeffs = reduce_mod(
            s1.iter().map(|c| c / &g).collect(),
            &cyclotomic_polynomial(self.order),
        );
        Some(Cyclotomic { order: self.order, coeffs })
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(rhs);
        Cyclotomic {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if let Some(q) = self.to_rational() {
            return rhs.scale(&q);
        }
        if let Some(q) = rhs.to_rational() {
            return self.scale(&q);
        }
        let (a, b) = self.common(rhs);
        let prod = poly_mul(&a.coeffs, &b.coeffs);
        Cyclotomic { order: a.order, coeffs: reduce_mod(prod, &cyclotomic_polynomial(a.order)) }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{}", fmt_rat(&q));
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", fmt_rat(c))?,
                _ => write!(f, "{}*z{}^{}", fmt_rat(c), self.order, i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{int, rat};

    #[test]
    fn small_cyclotomic_polynomials() {
        let as_i64 = |m| -> Vec<i64> {
            cyclotomic_polynomial(m).iter().map(|c| c.try_into().unwrap()).collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(12), 4);
    }

    #[test]
    fn roots_of_unity_relations() {
        for m in 1..=24u32 {
            let z = Cyclotomic::root_of_unity(m, 1);
            let mut p = Cyclotomic::one();
            let mut sum = Cyclotomic::zero();
            for _ in 0..m {
                sum = &sum + &p;
                p = &p * &z;
            }
            assert_eq!(p, Cyclotomic::one(), "ζ_{m}^{m} != 1");
            if m >= 2 {
                assert!(sum.is_zero(), "Σ ζ_{m}^r != 0");
            }
        }
    }

    #[test]
    fn lifting_preserves_value() {
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(i.lift(12), Cyclotomic::root_of_unity(12, 3));
        assert_eq!(&i * &i, Cyclotomic::rational(int(-1)));
        assert_eq!(Cyclotomic::root_of_unity(2, 1), Cyclotomic::rational(int(-1)));
        // mixed orders
        let w = Cyclotomic::root_of_unity(3, 1);
        assert_eq!((&i * &w).order(), 12);
    }

    #[test]
    fn inverses() {
        for m in [3u32, 4, 5, 8, 12] {
            let x = &Cyclotomic::one() - &Cyclotomic::root_of_unity(m, 1);
            let y = x.inverse().unwrap();
            assert_eq!(&x * &y, Cyclotomic::one(), "order {m}");
        }
        let half = Cyclotomic::rational(rat(1, 2));
        assert_eq!(half.inverse().unwrap(), Cyclotomic::rational(int(2)));
        assert!(Cyclotomic::zero().inverse().is_none());
    }

    #[test]
    fn rational_detection() {
        let w = Cyclotomic::root_of_unity(3, 1);
        let w2 = Cyclotomic::root_of_unity(3, 2);
        assert_eq!((&w + &w2).to_rational(), Some(int(-1)));
        assert_eq!(w.to_rational(), None);
    }
}
