//! Quasi-polynomials and the character sums they are built from.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use crate::combinatorics::TorusElement;
use crate::error::{Error, Result};
use crate::exact::rat::{fmt_rat, parse_rat};
use crate::exact::{Cyclotomic, IntMat, Rat};

/// One polynomial per residue class of `h` modulo a period vector.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiPolynomial {
    period: Vec<u32>,
    /// Indexed by residue vectors in lexicographic order.
    cosets: Vec<Poly<Rat>>,
}

fn residues(period: &[u32]) -> impl Iterator<Item = Vec<u32>> + '_ {
    let total: usize = period.iter().map(|&p| p as usize).product();
    (0..total).map(move |mut idx| {
        let mut r = vec![0; period.len()];
        for i in (0..period.len()).rev() {
            r[i] = (idx % period[i] as usize) as u32;
            idx /= period[i] as usize;
        }
        r
    })
}

fn coset_index(period: &[u32], r: &[u32]) -> usize {
    r.iter().zip(period).fold(0, |acc, (&x, &p)| acc * p as usize + (x % p) as usize)
}

impl QuasiPolynomial {
    pub fn new(period: Vec<u32>, cosets: Vec<Poly<Rat>>) -> Result<Self> {
        let total: usize = period.iter().map(|&p| p as usize).product();
        if period.contains(&0) || cosets.len() != total {
            return Err(Error::DimensionMismatch { expected: total, got: cosets.len() });
        }
        if let Some(p) = cosets.iter().find(|c| c.nvars() != period.len()) {
            return Err(Error::DimensionMismatch { expected: period.len(), got: p.nvars() });
        }
        Ok(QuasiPolynomial { period, cosets })
    }

    /// A plain polynomial, i.e. period 1 in every coordinate.
    pub fn polynomial(p: Poly<Rat>) -> Self {
        QuasiPolynomial { period: vec![1; p.nvars()], cosets: vec![p] }
    }

    pub fn dim(&self) -> usize {
        self.period.len()
    }

    pub fn period(&self) -> &[u32] {
        &self.period
    }

    /// Residue vectors with their polynomials.
    pub fn cosets(&self) -> impl Iterator<Item = (Vec<u32>, &Poly<Rat>)> {
        residues(&self.period).zip(&self.cosets)
    }

    pub fn coset_for(&self, h: &[BigInt]) -> &Poly<Rat> {
        assert_eq!(h.len(), self.dim());
        let r: Vec<u32> = h
            .iter()
            .zip(&self.period)
            .map(|(x, &p)| x.mod_floor(&BigInt::from(p)).to_u32().expect("small residue"))
            .collect();
        &self.cosets[coset_index(&self.period, &r)]
    }

    pub fn evaluate(&self, h: &[BigInt]) -> Rat {
        self.coset_for(h).evaluate(h)
    }

    pub fn max_degree(&self) -> u32 {
        self.cosets.iter().filter_map(Poly::total_degree).max().unwrap_or(0)
    }

    /// Same function on the finer period `target` (a multiple of the current one).
    pub fn refine(&self, target: &[u32]) -> Self {
        assert!(target.iter().zip(&self.period).all(|(t, p)| t % p == 0));
        let cosets = residues(target).map(|r| self.cosets[coset_index(&self.period, &r)].clone()).collect();
        QuasiPolynomial { period: target.to_vec(), cosets }
    }

    /// Shrinks the period coordinate by coordinate as far as the cosets allow.
    pub fn normalize(&mut self) {
        for i in 0..self.dim() {
            let p = self.period[i];
            for d in (1..p).filter(|d| p % d == 0) {
                let mut smaller = self.period.clone();
                smaller[i] = d;
                let candidate = self.restrict(&smaller);
                if candidate.refine(&self.period) == *self {
                    *self = candidate;
                    break;
                }
            }
        }
    }

    fn restrict(&self, smaller: &[u32]) -> Self {
        let cosets = residues(smaller).map(|r| self.cosets[coset_index(&self.period, &r)].clone()).collect();
        QuasiPolynomial { period: smaller.to_vec(), cosets }
    }

    /// Equality as functions on `Z^n`.
    pub fn equal(&self, other: &Self) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let l: Vec<u32> = self.period.iter().zip(&other.period).map(|(a, b)| a.lcm(b)).collect();
        self.refine(&l).cosets == other.refine(&l).cosets
    }

    /// One line per coset; the bare polynomial when the period is trivial.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.period.iter().all(|&p| p == 1) {
            return self.cosets[0].display_with(names);
        }
        let mut out = String::new();
        for (r, p) in self.cosets() {
            let cond: Vec<String> = r
                .iter()
                .zip(&self.period)
                .enumerate()
                .filter(|(_, (_, &q))| q > 1)
                .map(|(i, (x, q))| format!("{} = {} mod {}", names[i], x, q))
                .collect();
            let _ = writeln!(out, "[{}] {}", cond.join(", "), p.display_with(names));
        }
        out.pop();
        out
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CosetRecord {
    pub residue: Vec<String>,
    pub terms: Vec<(Vec<String>, String)>,
}

/// Serialized form: numbers as decimal strings, terms in graded order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuasiRecord {
    pub period: Vec<String>,
    pub cosets: Vec<CosetRecord>,
}

impl From<&QuasiPolynomial> for QuasiRecord {
    fn from(q: &QuasiPolynomial) -> Self {
        QuasiRecord {
            period: q.period.iter().map(u32::to_string).collect(),
            cosets: q
                .cosets()
                .map(|(r, p)| CosetRecord {
                    residue: r.iter().map(u32::to_string).collect(),
                    terms: p
                        .sorted_terms()
                        .into_iter()
                        .map(|(m, c)| (m.iter().map(u32::to_string).collect(), fmt_rat(c)))
                        .collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&QuasiRecord> for QuasiPolynomial {
    type Error = Error;

    fn try_from(r: &QuasiRecord) -> Result<Self> {
        let num = |s: &String| s.parse::<u32>().map_err(|_| Error::Parse(format!("bad integer {s:?}")));
        let period: Vec<u32> = r.period.iter().map(num).collect::<Result<_>>()?;
        let n = period.len();
        let mut cosets = Vec::with_capacity(r.cosets.len());
        for (c, expected) in r.cosets.iter().zip(residues(&period)) {
            let residue: Vec<u32> = c.residue.iter().map(num).collect::<Result<_>>()?;
            if residue != expected {
                return Err(Error::Parse(format!("cosets out of order at {:?}", c.residue)));
            }
            let mut p = Poly::zero(n);
            for (m, coeff) in &c.terms {
                let m: Vec<u32> = m.iter().map(num).collect::<Result<_>>()?;
                if m.len() != n {
                    return Err(Error::DimensionMismatch { expected: n, got: m.len() });
                }
                p.add_term(m, parse_rat(coeff)?);
            }
            cosets.push(p);
        }
        QuasiPolynomial::new(period, cosets)
    }
}

/// `Σ_g e^{2πi⟨g,h⟩} P_g(h)` with cyclotomic polynomials `P_g`.
#[derive(Clone, Debug, Default)]
pub struct CharacterSum {
    dim: usize,
    terms: BTreeMap<TorusElement, Poly<Cyclotomic>>,
}

fn character_value(g: &TorusElement, h: &[BigInt]) -> Cyclotomic {
    let x = g.pairing(h);
    let q: u32 = x.denom().to_u32().expect("small order");
    let p: i64 = x.numer().to_i64().expect("small phase");
    Cyclotomic::root_of_unity(q, p)
}

impl CharacterSum {
    pub fn zero(dim: usize) -> Self {
        CharacterSum { dim, terms: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TorusElement, &Poly<Cyclotomic>)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, g: TorusElement, p: Poly<Cyclotomic>) {
        assert_eq!(p.nvars(), self.dim);
        let slot = self.terms.entry(g.clone()).or_insert_with(|| Poly::zero(self.dim));
        *slot = slot.add(&p);
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add_scaled(&mut self, other: &CharacterSum, r: &Rat) {
        for (g, p) in &other.terms {
            self.add_term(g.clone(), p.scale(r));
        }
    }

    pub fn evaluate(&self, h: &[BigInt]) -> Cyclotomic {
        self.terms
            .iter()
            .map(|(g, p)| &character_value(g, h) * &p.evaluate(h))
            .fold(Cyclotomic::zero(), |a, b| &a + &b)
    }

    /// Precomposition with `x ↦ M x`.
    pub fn pullback(&self, m: &IntMat) -> CharacterSum {
        assert_eq!(m.rows(), self.dim);
        let k = m.cols();
        let images: Vec<Poly<Cyclotomic>> = (0..m.rows())
            .map(|i| {
                let row: Vec<Cyclotomic> =
                    m.row(i).iter().map(|x| Cyclotomic::rational(Rat::from_integer(x.clone()))).collect();
                Poly::linear(k, 0, &row)
            })
            .collect();
        let mut out = CharacterSum::zero(k);
        for (g, p) in &self.terms {
            out.add_term(g.pullback(m), p.compose(&images));
        }
        out
    }

    /// Per-coordinate lcm of the denominators of the phases.
    pub fn period(&self) -> Vec<u32> {
        let mut period = vec![1u32; self.dim];
        for g in self.terms.keys() {
            for (p, c) in period.iter_mut().zip(g.coords()) {
                *p = p.lcm(&c.denom().to_u32().expect("small order"));
            }
        }
        period
    }

    /// Resolves the characters into coset polynomials.
    pub fn to_quasipolynomial(&self) -> Result<QuasiPolynomial> {
        let period = self.period();
        let mut cosets = Vec::new();
        for r in residues(&period) {
            let rb: Vec<BigInt> = r.iter().map(|&x| BigInt::from(x)).collect();
            let mut acc: Poly<Cyclotomic> = Poly::zero(self.dim);
            for (g, p) in &self.terms {
                acc = acc.add(&p.mul_coeff(&character_value(g, &rb)));
            }
            let mut q = Poly::zero(self.dim);
            for (m, c) in acc.terms() {
                match c.to_rational() {
                    Some(x) => q.add_term(m.clone(), x),
                    None => return Err(Error::NonRationalCoefficient(format!("{c} at coset {r:?}"))),
                }
            }
            cosets.push(q);
        }
        let mut q = QuasiPolynomial::new(period, cosets)?;
        q.normalize();
        Ok(q)
    }
}
