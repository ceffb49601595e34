//! Polyhedral cones in half-space representation.
//!
//! A [`ConeH`] is always stored in canonical form, so two cones are equal as
//! sets exactly when they compare equal:
//!
//! * implicit equalities are stored as pairs `ν, -ν`, where the `ν` run over
//!   the primitive rows of the reduced echelon basis of `span(C)^⊥`;
//! * every facet normal is replaced by its orthogonal projection onto
//!   `span(C)`, scaled to a primitive integer vector;
//! * the normals are sorted lexicographically.
//!
//! Generators (lineality basis and extreme rays) are cached next to the
//! normals; they are computed with the double description method.

mod dd;
mod fan;

pub use dd::{double_description, Generators};
pub use fan::Fan;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::matrix::{rank_of, RatMat};
use crate::exact::rat::{dot, dot_int_rat, is_zero_vec, primitive, primitive_from_rat, to_rat_vec, IntVec, Rat};

#[derive(Clone)]
pub struct ConeH {
    ambient: usize,
    normals: Vec<IntVec>,
    dim: usize,
    generators: Generators,
}

impl PartialEq for ConeH {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.normals == other.normals
    }
}

impl Eq for ConeH {}

impl std::hash::Hash for ConeH {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.normals.hash(state);
    }
}

impl PartialOrd for ConeH {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ConeH {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.ambient, &self.normals).cmp(&(other.ambient, &other.normals))
    }
}

impl fmt::Debug for ConeH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let normals: Vec<Vec<String>> = self
            .normals
            .iter()
            .map(|n| n.iter().map(ToString::to_string).collect())
            .collect();
        f.debug_struct("ConeH")
            .field("dim", &self.dim)
            .field("normals", &normals)
            .finish()
    }
}

impl ConeH {
    /// The cone `{x : ν·x ≥ 0 for every ν}`.
    pub fn from_inequalities(ambient: usize, normals: &[IntVec]) -> Result<Self> {
        let mut ineq: Vec<IntVec> = Vec::with_capacity(normals.len());
        for n in normals {
            if n.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, got: n.len() });
            }
            if is_zero_vec(n) {
                continue;
            }
            let mut n = n.clone();
            primitive(&mut n);
            ineq.push(n);
        }
        ineq.sort();
        ineq.dedup();
        let generators = double_description(ambient, &ineq);
        Ok(Self::canonicalize(ambient, &ineq, generators))
    }

    /// The cone generated by the given vectors. An empty list gives `{0}`.
    pub fn from_generators(ambient: usize, gens: &[IntVec]) -> Result<Self> {
        for g in gens {
            if g.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, got: g.len() });
            }
        }
        let mut g: Vec<IntVec> = gens.iter().filter(|g| !is_zero_vec(g)).cloned().collect();
        g.iter_mut().for_each(primitive);
        g.sort();
        g.dedup();
        // The dual cone's generators are the primal's inequalities.
        let dual = double_description(ambient, &g);
        let mut normals = dual.rays;
        for l in dual.lineality {
            normals.push(l.iter().map(|x| -x).collect());
            normals.push(l);
        }
        Self::from_inequalities(ambient, &normals)
    }

    /// The positive orthant of `R^d`.
    pub fn orthant(d: usize) -> Self {
        let normals: Vec<IntVec> = (0..d)
            .map(|i| (0..d).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect();
        Self::from_inequalities(d, &normals).expect("dimensions match")
    }

    fn canonicalize(ambient: usize, ineq: &[IntVec], generators: Generators) -> Self {
        let mut span: Vec<IntVec> = generators.lineality.clone();
        span.extend(generators.rays.iter().cloned());
        let dim = rank_of(&span);

        // span(C)^⊥
        let equalities: Vec<IntVec> = if dim == ambient {
            Vec::new()
        } else if span.is_empty() {
            (0..ambient)
                .map(|i| (0..ambient).map(|j| BigInt::from((i == j) as i64)).collect())
                .collect()
        } else {
            RatMat::from_rows(span.iter().map(|v| to_rat_vec(v)).collect()).kernel()
        };

        let projector = Projector::new(&equalities, ambient);
        let mut normals: Vec<IntVec> = Vec::new();
        for a in ineq {
            if span.iter().all(|g| dot(a, g).is_zero()) {
                continue; // implicit equality
            }
            let mut tight: Vec<IntVec> = generators.lineality.clone();
            tight.extend(generators.rays.iter().filter(|r| dot(a, r).is_zero()).cloned());
            if rank_of(&tight) + 1 == dim {
                normals.push(projector.project(a));
            }
        }
        for e in &equalities {
            normals.push(e.iter().map(|x| -x).collect());
            normals.push(e.clone());
        }
        normals.sort();
        normals.dedup();
        ConeH { ambient, normals, dim, generators }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient
    }

    /// Canonical inequality normals, equality pairs included.
    pub fn normals(&self) -> &[IntVec] {
        &self.normals
    }

    /// Normals that define facets (equality pairs excluded).
    pub fn facet_normals(&self) -> Vec<&IntVec> {
        self.normals
            .iter()
            .filter(|n| !self.generators_span().iter().all(|g| dot(n, g).is_zero()))
            .collect()
    }

    fn generators_span(&self) -> Vec<IntVec> {
        let mut span = self.generators.lineality.clone();
        span.extend(self.generators.rays.iter().cloned());
        span
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.generators.rays
    }

    pub fn lineality(&self) -> &[IntVec] {
        &self.generators.lineality
    }

    pub fn contains_point(&self, x: &[Rat]) -> bool {
        assert_eq!(x.len(), self.ambient);
        self.normals.iter().all(|n| !dot_int_rat(n, x).is_negative())
    }

    pub fn contains_int_point(&self, x: &[BigInt]) -> bool {
        assert_eq!(x.len(), self.ambient);
        self.normals.iter().all(|n| !dot(n, x).is_negative())
    }

    /// Whether the point satisfies every facet inequality strictly.
    pub fn contains_in_relative_interior(&self, x: &[BigInt]) -> bool {
        let span = self.generators_span();
        self.normals.iter().all(|n| {
            let v = dot(n, x);
            if span.iter().all(|g| dot(n, g).is_zero()) {
                v.is_zero()
            } else {
                v.is_positive()
            }
        })
    }

    /// A lattice point in the relative interior: the sum of all generators.
    /// Lineality directions contribute nothing, so for a linear subspace this
    /// is the origin.
    pub fn interior_point(&self) -> IntVec {
        let mut p = vec![BigInt::zero(); self.ambient];
        for r in &self.generators.rays {
            for (x, y) in p.iter_mut().zip(r) {
                *x += y;
            }
        }
        p
    }

    pub fn intersect(&self, other: &ConeH) -> Result<ConeH> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: other.ambient });
        }
        let mut normals = self.normals.clone();
        normals.extend(other.normals.iter().cloned());
        ConeH::from_inequalities(self.ambient, &normals)
    }

    /// One cone per facet: this cone cut with the tight hyperplane.
    pub fn facets(&self) -> Vec<ConeH> {
        self.facet_normals()
            .into_iter()
            .map(|n| {
                let mut normals = self.normals.clone();
                normals.push(n.iter().map(|x| -x).collect());
                ConeH::from_inequalities(self.ambient, &normals).expect("dimensions match")
            })
            .collect()
    }

    /// Relative interior point of the facet with the given normal: the sum of
    /// the extreme rays on it.
    pub fn facet_interior_point(&self, normal: &[BigInt]) -> IntVec {
        let mut p = vec![BigInt::zero(); self.ambient];
        for r in self.generators.rays.iter().filter(|r| dot(normal, r).is_zero()) {
            for (x, y) in p.iter_mut().zip(r) {
                *x += y;
            }
        }
        p
    }

    /// Preimage under the linear map `x ↦ M x`, i.e. `{x : M x ∈ C}`.
    pub fn pullback(&self, m: &crate::exact::IntMat) -> Result<ConeH> {
        if m.rows() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: m.rows() });
        }
        let mt = m.transpose();
        let normals: Vec<IntVec> = self.normals.iter().map(|n| mt.mul_vec(n)).collect();
        ConeH::from_inequalities(m.cols(), &normals)
    }

    pub fn is_subset_of(&self, other: &ConeH) -> bool {
        self.generators.rays.iter().all(|r| other.contains_int_point(r))
            && self.generators.lineality.iter().all(|l| {
                other.contains_int_point(l)
                    && other.contains_int_point(&l.iter().map(|x| -x).collect::<Vec<_>>())
            })
    }
}

/// Orthogonal projection onto the complement of a set of integer vectors.
struct Projector {
    basis: Vec<Vec<Rat>>,
    gram_inv: Option<RatMat>,
}

impl Projector {
    fn new(vectors: &[IntVec], ambient: usize) -> Self {
        let _ = ambient;
        if vectors.is_empty() {
            return Projector { basis: Vec::new(), gram_inv: None };
        }
        let basis: Vec<Vec<Rat>> = vectors.iter().map(|v| to_rat_vec(v)).collect();
        let gram: Vec<Vec<Rat>> = basis
            .iter()
            .map(|u| basis.iter().map(|v| u.iter().zip(v).map(|(a, b)| a * b).sum()).collect())
            .collect();
        let gram_inv = RatMat::from_rows(gram).invert().expect("kernel basis is independent");
        Projector { basis, gram_inv: Some(gram_inv) }
    }

    fn project(&self, a: &IntVec) -> IntVec {
        let Some(gi) = &self.gram_inv else {
            return a.clone();
        };
        let ar = to_rat_vec(a);
        let coeffs: Vec<Rat> = self.basis.iter().map(|b| b.iter().zip(&ar).map(|(x, y)| x * y).sum()).collect();
        let w = gi.mul_vec(&coeffs);
        let mut p = ar;
        for (wi, b) in w.iter().zip(&self.basis) {
            for (x, y) in p.iter_mut().zip(b) {
                *x -= wi * y;
            }
        }
        primitive_from_rat(&p)
    }
}

/// Serialized form: the canonical normals as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeRecord {
    pub ambient: usize,
    pub normals: Vec<Vec<String>>,
}

impl From<&ConeH> for ConeRecord {
    fn from(c: &ConeH) -> Self {
        ConeRecord {
            ambient: c.ambient,
            normals: c.normals.iter().map(|n| n.iter().map(ToString::to_string).collect()).collect(),
        }
    }
}

impl TryFrom<&ConeRecord> for ConeH {
    type Error = Error;

    fn try_from(r: &ConeRecord) -> Result<Self> {
        let normals: Result<Vec<IntVec>> = r
            .normals
            .iter()
            .map(|n| {
                n.iter()
                    .map(|s| s.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad integer {s:?}"))))
                    .collect()
            })
            .collect();
        ConeH::from_inequalities(r.ambient, &normals?)
    }
}
