use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use super::reference::{published_id, PUBLISHED_CHAMBERS};
use super::{build_matrices, point, support_box, NearRoot, RootVector, Weight};
use crate::combinatorics::{build_fan, enumerate_basic_subsets, enumerate_nbc, torus_points};
use crate::cone::ConeH;
use crate::error::{Error, Result};
use crate::exact::{IntMat, IntVec, Rat};
use crate::residue::{QuasiPolynomial, ResidueEngine};

/// A glued chamber with its quasi-polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct Chamber {
    /// 1-based; the published number when the cone matches one.
    pub id: usize,
    pub cone: ConeH,
    pub quasi: QuasiPolynomial,
}

/// Sizes of the intermediate objects of a build.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuildStats {
    pub basic_subsets: usize,
    pub nbc_subsets: usize,
    pub torus_points: usize,
    pub maximal_cones: usize,
    pub intersections: usize,
    pub glued_chambers: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChamberTable {
    pub a: IntMat,
    pub b: IntMat,
    pub chambers: Vec<Chamber>,
    pub stats: BuildStats,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, i: usize) -> usize {
        if self.0[i] != i {
            let r = self.find(self.0[i]);
            self.0[i] = r;
        }
        self.0[i]
    }

    fn union(&mut self, i: usize, j: usize) {
        let (a, b) = (self.find(i), self.find(j));
        self.0[a.max(b)] = a.min(b);
    }
}

impl ChamberTable {
    /// Runs the whole pipeline for the B₂ matrices.
    pub fn build() -> Result<Self> {
        let (a, b) = build_matrices();
        Self::build_with(&a, &b)
    }

    /// Chambers of `x ↦ Φ_A(B x)`: the full-dimensional preimages of the
    /// maximal cones of `fan(A)`, with neighbors carrying the same
    /// quasi-polynomial glued together.
    pub fn build_with(a: &IntMat, b: &IntMat) -> Result<Self> {
        if b.rows() != a.rows() {
            return Err(Error::DimensionMismatch { expected: a.rows(), got: b.rows() });
        }
        let subsets = enumerate_basic_subsets(a)?;
        let nbc = enumerate_nbc(a)?;
        let gamma = torus_points(a, &subsets)?;
        let fan = build_fan(a, &subsets)?;
        let k = b.cols();

        // full-dimensional pullbacks, first representative wins
        let pulled: Vec<ConeH> = fan.cones().par_iter().map(|c| c.pullback(b)).collect::<Result<_>>()?;
        let mut pieces: Vec<(ConeH, usize)> = Vec::new();
        let mut seen: BTreeMap<ConeH, ()> = BTreeMap::new();
        for (i, p) in pulled.into_iter().enumerate() {
            if p.dim() == k && seen.insert(p.clone(), ()).is_none() {
                pieces.push((p, i));
            }
        }

        let engine = ResidueEngine::new(a, &gamma);
        let quasis: Vec<QuasiPolynomial> = pieces
            .par_iter()
            .map(|(_, rep)| engine.chamber_sum(&fan.b_nb(*rep))?.pullback(b).to_quasipolynomial())
            .collect::<Result<_>>()?;

        let m = pieces.len();
        let mut uf = UnionFind((0..m).collect());
        for i in 0..m {
            for j in i + 1..m {
                if quasis[i].equal(&quasis[j]) && pieces[i].0.intersect(&pieces[j].0)?.dim() + 1 == k {
                    uf.union(i, j);
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..m {
            let r = uf.find(i);
            groups.entry(r).or_default().push(i);
        }

        let mut glued: Vec<(ConeH, QuasiPolynomial)> = Vec::new();
        for (gi, members) in groups.values().enumerate() {
            let first = &quasis[members[0]];
            if let Some(&bad) = members.iter().find(|&&j| !quasis[j].equal(first)) {
                return Err(Error::GluingMismatch(members[0], bad));
            }
            let mut gens: Vec<IntVec> = Vec::new();
            for &j in members {
                gens.extend(pieces[j].0.rays().iter().cloned());
                for l in pieces[j].0.lineality() {
                    gens.push(l.clone());
                    gens.push(l.iter().map(|x| -x).collect());
                }
            }
            let hull = ConeH::from_generators(k, &gens)?;
            for (j, (p, _)) in pieces.iter().enumerate() {
                if !members.contains(&j) && hull.intersect(p)?.dim() == k {
                    return Err(Error::NonConvexGluing(gi));
                }
            }
            glued.push((hull, first.clone()));
        }
        glued.sort_by(|x, y| x.0.cmp(&y.0));

        let stats = BuildStats {
            basic_subsets: subsets.len(),
            nbc_subsets: nbc.len(),
            torus_points: gamma.len(),
            maximal_cones: fan.fan.len(),
            intersections: m,
            glued_chambers: glued.len(),
        };
        let so5 = (a.clone(), b.clone()) == build_matrices();
        Ok(ChamberTable { a: a.clone(), b: b.clone(), chambers: assign_ids(glued, so5), stats })
    }

    /// Whether the table was built from the B₂ matrices.
    pub fn is_so5(&self) -> bool {
        (self.a.clone(), self.b.clone()) == build_matrices()
    }

    pub fn len(&self) -> usize {
        self.chambers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chambers.is_empty()
    }

    pub fn chamber(&self, id: usize) -> Result<&Chamber> {
        self.chambers.iter().find(|c| c.id == id).ok_or(Error::UnknownChamberId(id))
    }

    /// The lowest-id chamber containing `x`.
    pub fn lookup_point(&self, x: &[BigInt]) -> Option<&Chamber> {
        self.chambers.iter().find(|c| c.cone.contains_int_point(x))
    }

    pub fn lookup(&self, l: Weight, b: RootVector) -> Option<&Chamber> {
        self.lookup_point(&point(l, b))
    }

    /// Exact value of the chamber quasi-polynomial at `x`, zero outside all chambers.
    pub fn value_at(&self, x: &[BigInt]) -> Result<BigInt> {
        let Some(c) = self.lookup_point(x) else {
            return Ok(BigInt::from(0));
        };
        let v: Rat = c.quasi.evaluate(x);
        if !v.is_integer() {
            return Err(Error::NonIntegerValue(format!("{v} at {x:?} in chamber {}", c.id)));
        }
        if v.is_negative() {
            return Err(Error::NegativeValue(format!("{v} at {x:?} in chamber {}", c.id)));
        }
        Ok(v.to_integer())
    }

    /// `K^λ_β`; zero for non-dominant `λ` and outside the support.
    pub fn multiplicity(&self, l: Weight, b: RootVector) -> Result<u64> {
        if !l.is_dominant() {
            return Ok(0);
        }
        let v = self.value_at(&point(l, b))?;
        v.to_u64().ok_or_else(|| Error::NonIntegerValue(format!("{v} does not fit in 64 bits")))
    }

    /// All `β` with `K^λ_β > 0`.
    pub fn character(&self, l: Weight) -> Result<BTreeMap<RootVector, u64>> {
        let mut out = BTreeMap::new();
        for b in support_box(l) {
            let k = self.multiplicity(l, b)?;
            if k > 0 {
                out.insert(b, k);
            }
        }
        Ok(out)
    }

    /// `K^λ_{λ−ε}` for a root one or two steps below the highest weight.
    pub fn near_highest(&self, l: Weight, e: NearRoot) -> Result<u64> {
        match e.closed_form(l) {
            Some(k) => Ok(k),
            None => self.multiplicity(l, e.root()),
        }
    }

    /// `dim V(λ)₀` for `λ = (2i−2j, −i+2j)` read off the table.
    pub fn weight_zero(&self, i: i64, j: i64) -> Result<u64> {
        self.multiplicity(Weight::new(2 * i - 2 * j, 2 * j - i), RootVector::new(i, j))
    }
}

/// Published ids where the cones agree, the remaining ids in canonical order.
fn assign_ids(glued: Vec<(ConeH, QuasiPolynomial)>, so5: bool) -> Vec<Chamber> {
    let matched: Vec<Option<usize>> =
        glued.iter().map(|(c, _)| if so5 { published_id(c) } else { None }).collect();
    let used: Vec<usize> = matched.iter().flatten().copied().collect();
    let total = glued.len().max(if so5 { PUBLISHED_CHAMBERS.len() } else { 0 });
    let mut free = (1..=total + glued.len()).filter(|i| !used.contains(i));
    let mut chambers: Vec<Chamber> = glued
        .into_iter()
        .zip(matched)
        .map(|((cone, quasi), id)| Chamber { id: id.unwrap_or_else(|| free.next().expect("enough ids")), cone, quasi })
        .collect();
    chambers.sort_by_key(|c| c.id);
    chambers
}
