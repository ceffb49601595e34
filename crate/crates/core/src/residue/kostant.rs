//! Kostant functions in the coordinates of a basic subset, and their
//! iterated residues.
//!
//! With `z_j = ⟨u, a_{i_j}⟩` every `⟨u, a_k⟩` becomes a linear form `L_k(z)`
//! whose coefficients are `A_σ^{-1} a_k`. Writing `ζ_k = e^{-2πi⟨g, a_k⟩}`
//! and `S = {k : ζ_k = 1}`,
//!
//! ```text
//! F_{g,h} = e^{2πi⟨g,h⟩} · Π_{k∈S} 1/L_k · e^{⟨u,h⟩} · Π_{k∈S} L_k/(1 - e^{-L_k}) · Π_{k∉S} 1/(1 - ζ_k e^{-L_k})
//! ```
//!
//! The factor after the pole product is holomorphic at the origin. Only its
//! homogeneous part of degree `|S| - n` in `z` survives the iterated residue,
//! so the expansion is truncated there.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{Monomial, Poly};
use super::series::{exp_coefficients, todd_coefficients, twisted_coefficients};
use crate::combinatorics::{BasicSubset, TorusElement};
use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, IntMat, Rat};

/// `F_{g,h}` prepared for residue extraction with respect to `σ`.
#[derive(Clone, Debug)]
pub struct KostantTerm {
    pub sigma: BasicSubset,
    pub g: TorusElement,
    /// Rank of `A`; the term lives in `2n` variables `z_1..z_n, h_1..h_n`.
    pub n: usize,
    /// Highest `z`-degree kept in `numerator`.
    pub order: u32,
    /// `L_k` for `k ∈ S`, in `z`-coordinates.
    pub poles: Vec<Vec<Rat>>,
    /// The holomorphic factor, truncated at `z`-degree `order`.
    pub numerator: Poly<Cyclotomic>,
}

impl KostantTerm {
    /// `|S| - n`: the `z`-degree of the numerator that the residue reads.
    pub fn needed_degree(&self) -> i64 {
        self.poles.len() as i64 - self.n as i64
    }
}

fn series_in_form(coeffs: &[Cyclotomic], form: &Poly<Cyclotomic>, n: usize, order: u32) -> Poly<Cyclotomic> {
    let nv = form.nvars();
    let mut out = Poly::zero(nv);
    let mut power = Poly::one(nv);
    for (k, c) in coeffs.iter().enumerate() {
        if k as u32 > order {
            break;
        }
        if k > 0 {
            power = power.mul_truncated(form, n, order);
        }
        out = out.add(&power.mul_coeff(c));
    }
    out
}

/// Expands `F_{g,h}` in the coordinates `z_j = ⟨u, a_{i_j}⟩`, keeping terms up
/// to `z`-degree `order` (or less if fewer are needed).
pub fn expand_kostant_term(a: &IntMat, sigma: &BasicSubset, g: &TorusElement, order: u32) -> Result<KostantTerm> {
    let n = a.rows();
    let nv = 2 * n;
    let inv = sigma.inverse(a);
    let field = g.order() as u32;

    let mut poles = Vec::new();
    let mut twisted = Vec::new();
    for (k, col) in a.columns().iter().enumerate() {
        let form = inv.mul_int_vec(col);
        let phase = g.pairing(col);
        if phase.is_zero() {
            if form.iter().all(Zero::is_zero) {
                return Err(Error::ZeroDenominatorFactor { column: k });
            }
            poles.push(form);
        } else {
            // ζ = e^{-2πi p/q}
            let q = phase.denom().clone();
            let p = phase.numer().clone();
            let m: u32 = q.try_into().expect("small order");
            let r: i64 = (-p).try_into().expect("small phase");
            twisted.push((form, Cyclotomic::root_of_unity(m, r).lift(field)));
        }
    }

    let needed = poles.len() as i64 - n as i64;
    let window = if needed < 0 { 0 } else { (needed as u32).min(order) };
    let z_form = |f: &[Rat]| {
        let c: Vec<Cyclotomic> = f.iter().map(|x| Cyclotomic::rational(x.clone()).lift(field)).collect();
        Poly::linear(nv, 0, &c)
    };

    let mut numerator = Poly::constant(nv, Cyclotomic::one().lift(field));
    if needed >= 0 {
        let todd: Vec<Cyclotomic> = todd_coefficients(window as usize)
            .into_iter()
            .map(|c| Cyclotomic::rational(c).lift(field))
            .collect();
        for f in &poles {
            let s = series_in_form(&todd, &z_form(f), n, window);
            numerator = numerator.mul_truncated(&s, n, window);
        }
        for (f, zeta) in &twisted {
            let c = twisted_coefficients(zeta, window as usize).expect("ζ ≠ 1");
            let s = series_in_form(&c, &z_form(f), n, window);
            numerator = numerator.mul_truncated(&s, n, window);
        }
        // e^{⟨u,h⟩} with ⟨u,h⟩ = Σ_j (A_σ^{-1} h)_j z_j
        let mut uh = Poly::zero(nv);
        for j in 0..n {
            for l in 0..n {
                let c = inv.get(j, l);
                if !c.is_zero() {
                    let mut m = vec![0; nv];
                    m[j] = 1;
                    m[n + l] = 1;
                    uh.add_term(m, Cyclotomic::rational(c.clone()).lift(field));
                }
            }
        }
        let e: Vec<Cyclotomic> = exp_coefficients(window as usize)
            .into_iter()
            .map(|c| Cyclotomic::rational(c).lift(field))
            .collect();
        let s = series_in_form(&e, &uh, n, window);
        numerator = numerator.mul_truncated(&s, n, window);
    }

    Ok(KostantTerm { sigma: sigma.clone(), g: g.clone(), n, order: window, poles, numerator })
}

/// `ires_σ` of the term (without the character `e^{2πi⟨g,h⟩}`), as a
/// polynomial in `h_1..h_n`.
pub fn iterated_residue(term: &KostantTerm) -> Result<Poly<Cyclotomic>> {
    let n = term.n;
    let needed = term.needed_degree();
    if needed < 0 {
        return Ok(Poly::zero(n));
    }
    if needed as u32 > term.order {
        return Err(Error::TruncationTooLow { order: term.order as usize, needed: needed as usize });
    }
    let part = term.numerator.homogeneous_part(n, needed as u32);
    let mut out = Poly::zero(n);
    let mut memo: HashMap<Monomial, Rat> = HashMap::new();
    for (gamma, hpoly) in part.split(n) {
        let r = memo.entry(gamma.clone()).or_insert_with(|| ires_rational(&gamma, &term.poles)).clone();
        if !r.is_zero() {
            out = out.add(&hpoly.scale(&r));
        }
    }
    Ok(out)
}

type State = BTreeMap<Vec<Rat>, i64>;

/// Multiplies the state by `f^{-e}`, normalizing `f` so its last nonzero
/// coefficient is 1. Returns the scalar pulled out.
fn push_form(state: &mut State, f: &[Rat], e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    let c = f.iter().rev().find(|x| !x.is_zero()).expect("nonzero form").clone();
    let normalized: Vec<Rat> = f.iter().map(|x| x / &c).collect();
    let entry = state.entry(normalized.clone()).or_insert(0);
    *entry += e;
    if *entry == 0 {
        state.remove(&normalized);
    }
    // f^{-e} = c^{-e} f̂^{-e}
    let ce = num_traits::pow(c, e.unsigned_abs() as usize);
    if e > 0 {
        ce.recip()
    } else {
        ce
    }
}

/// `binom(-e, m)`.
fn neg_binomial(e: i64, m: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..m as i64 {
        acc = acc * Rat::from_integer(BigInt::from(-e - i)) / Rat::from_integer(BigInt::from(i + 1));
    }
    acc
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `res_{z_n=0} ⋯ res_{z_1=0}` of `z^γ / Π L`, a rational number.
pub fn ires_rational(gamma: &[u32], poles: &[Vec<Rat>]) -> Rat {
    let n = gamma.len();
    let mut state = State::new();
    let mut coef = Rat::one();
    for f in poles {
        coef *= push_form(&mut state, f, 1);
    }
    for (j, &e) in gamma.iter().enumerate() {
        if e > 0 {
            let mut unit = vec![Rat::zero(); n];
            unit[j] = Rat::one();
            coef *= push_form(&mut state, &unit, -(e as i64));
        }
    }
    let mut current: HashMap<State, Rat> = HashMap::from([(state, coef)]);

    for j in 0..n {
        let mut unit = vec![Rat::zero(); n];
        unit[j] = Rat::one();
        let mut next: HashMap<State, Rat> = HashMap::new();
        for (mut state, coef) in current {
            let pole = state.remove(&unit).unwrap_or(0);
            if pole <= 0 {
                continue;
            }
            let r = (pole - 1) as u32;
            let mut carry = State::new();
            let mut involved = Vec::new();
            for (f, e) in state {
                if f[j].is_zero() {
                    carry.insert(f, e);
                } else {
                    let a = f[j].clone();
                    let mut rest = f;
                    rest[j] = Rat::zero();
                    involved.push((a, rest, e));
                }
            }
            for ms in compositions(r, involved.len()) {
                let mut c = coef.clone();
                let mut s = carry.clone();
                for ((a, rest, e), &m) in involved.iter().zip(&ms) {
                    let b = neg_binomial(*e, m);
                    if b.is_zero() {
                        c = Rat::zero();
                        break;
                    }
                    c *= b * num_traits::pow(a.clone(), m as usize);
                    c *= push_form(&mut s, rest, e + m as i64);
                }
                if c.is_zero() {
                    continue;
                }
                let slot = next.entry(s).or_insert_with(Rat::zero);
                *slot += c;
            }
        }
        next.retain(|_, c| !c.is_zero());
        current = next;
    }

    current
        .into_iter()
        .filter(|(s, _)| {
            debug_assert!(s.is_empty(), "forms left after the last residue");
            s.is_empty()
        })
        .map(|(_, c)| c)
        .fold(Rat::zero(), |a, b| a + b)
}

/// `ires_σ F_{g,h}` together with its character, with `order = N - n`.
pub fn residue_term(a: &IntMat, sigma: &BasicSubset, g: &TorusElement) -> Result<Poly<Cyclotomic>> {
    let order = (a.cols() - a.rows()) as u32;
    iterated_residue(&expand_kostant_term(a, sigma, g, order)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_basic_subsets;
    use crate::exact::rat::{int_vec, rat};

    fn as_rat(p: &Poly<Cyclotomic>) -> Poly<Rat> {
        p.map_coeffs(|c| c.to_rational().expect("rational"))
    }

    #[test]
    fn single_column() {
        let a = IntMat::from_rows(&[[1]]);
        let s = &enumerate_basic_subsets(&a).unwrap()[0];
        let q = as_rat(&residue_term(&a, s, &TorusElement::zero(1)).unwrap());
        assert_eq!(q, Poly::one(1));
    }

    #[test]
    fn two_equal_columns() {
        let a = IntMat::from_rows(&[[1, 1]]);
        let s = BasicSubset { indices: vec![0], volume: 1 };
        let q = as_rat(&residue_term(&a, &s, &TorusElement::zero(1)).unwrap());
        assert_eq!(q, Poly::var(1, 0).add(&Poly::one(1)));
    }

    #[test]
    fn no_pole_means_zero() {
        // g = 1/2 twists the only column of A = (1): no pole left
        let a = IntMat::from_rows(&[[1]]);
        let s = &enumerate_basic_subsets(&a).unwrap()[0];
        let g = TorusElement::new(vec![rat(1, 2)]);
        assert!(residue_term(&a, s, &g).unwrap().is_zero());
    }

    #[test]
    fn truncation_guard() {
        let a = IntMat::from_rows(&[[1, 1, 1]]);
        let s = BasicSubset { indices: vec![0], volume: 1 };
        let t = expand_kostant_term(&a, &s, &TorusElement::zero(1), 1).unwrap();
        assert!(matches!(iterated_residue(&t), Err(Error::TruncationTooLow { order: 1, needed: 2 })));
        let t = expand_kostant_term(&a, &s, &TorusElement::zero(1), 2).unwrap();
        // (h+1)(h+2)/2
        let q = as_rat(&iterated_residue(&t).unwrap());
        assert_eq!(q.evaluate(&int_vec(&[3])), rat(10, 1));
    }

    #[test]
    fn zero_column_is_an_error() {
        let a = IntMat::from_rows(&[[1, 0]]);
        let s = BasicSubset { indices: vec![0], volume: 1 };
        assert!(matches!(
            expand_kostant_term(&a, &s, &TorusElement::zero(1), 1),
            Err(Error::ZeroDenominatorFactor { column: 1 })
        ));
    }

    #[test]
    fn two_variable_residue() {
        // res_{z2} res_{z1} 1/(z1 z2 (z1+z2)) picks z1 innermost: 1/z2 · 1/z2 → 0
        let poles = vec![
            vec![rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1)],
            vec![rat(1, 1), rat(1, 1)],
        ];
        assert_eq!(ires_rational(&[0, 0], &poles), rat(0, 1));
        // z2/(z1 z2 (z1+z2)) = 1/(z1 (z1+z2)) → res_{z1} = 1/z2 → 1
        assert_eq!(ires_rational(&[0, 1], &poles), rat(1, 1));
        assert_eq!(ires_rational(&[1, 0], &poles), rat(0, 1));
    }
}
