//! Weight multiplicities of the simple Lie algebra of type B₂.
//!
//! A dominant weight is `λ = λ₁ω₁ + λ₂ω₂` with `ω₁` the spin weight, and
//! `β = β₁α₁ + β₂α₂` with `α₁` short. `K^λ_β` is the dimension of the weight
//! space of `λ − β` in `V(λ)`. It counts lattice points `(a₂₂, a₁₁, a₁₂, a₁₃)`
//! of a Littelmann polytope, which reduces to the vector partition function
//! `K^λ_β = Φ_A(B·(λ₁, λ₂, β₁, β₂))`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::exact::rat::int_vec;
use crate::exact::{IntMat, IntVec};

pub mod reference;
mod slice;
mod table;

pub use slice::{induced_decomposition, Polygon};
pub use table::{BuildStats, Chamber, ChamberTable};

/// Variable names of `(λ₁, λ₂, β₁, β₂)`-space.
pub const VARIABLES: [&str; 4] = ["l1", "l2", "b1", "b2"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub l1: i64,
    pub l2: i64,
}

impl Weight {
    pub fn new(l1: i64, l2: i64) -> Self {
        Weight { l1, l2 }
    }

    pub fn is_dominant(&self) -> bool {
        self.l1 >= 0 && self.l2 >= 0
    }

    /// `(λ₁+1)(λ₂+1)(λ₁+λ₂+2)(λ₁+2λ₂+3)/6`.
    pub fn dimension(&self) -> u128 {
        if !self.is_dominant() {
            return 0;
        }
        let (a, b) = (self.l1 as u128, self.l2 as u128);
        (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l1, self.l2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    pub b1: i64,
    pub b2: i64,
}

impl RootVector {
    pub fn new(b1: i64, b2: i64) -> Self {
        RootVector { b1, b2 }
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.b1, self.b2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternPoint {
    pub a22: i64,
    pub a11: i64,
    pub a12: i64,
    pub a13: i64,
}

impl PatternPoint {
    /// `2a₁₁ ≥ a₁₂ ≥ 2a₁₃ ≥ 0` and `a₂₂ ≥ 0`.
    pub fn in_cone(&self) -> bool {
        2 * self.a11 >= self.a12 && self.a12 >= 2 * self.a13 && self.a13 >= 0 && self.a22 >= 0
    }

    pub fn in_polytope(&self, l: Weight) -> bool {
        self.in_cone()
            && self.a13 <= l.l2
            && self.a12 <= l.l1 + 2 * self.a13
            && self.a11 <= l.l2 + self.a12 - 2 * self.a13
            && self.a22 <= l.l1 + 2 * self.a11 - 2 * self.a12 + 2 * self.a13
    }

    /// The root-lattice weight `(a₂₂ + a₁₂, a₁₁ + a₁₃)`.
    pub fn weight(&self) -> RootVector {
        RootVector::new(self.a22 + self.a12, self.a11 + self.a13)
    }
}

/// The matrices `A` (8×10) and `B` (8×4).
pub fn build_matrices() -> (IntMat, IntMat) {
    let a = IntMat::from_rows(&[
        [0, 2, -1, 0, -1, 0, 0, 0, 0, 0],
        [0, 0, 1, -2, 0, -1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 1, 0, 0, 0],
        [0, 0, 1, -2, 0, 0, 0, 1, 0, 0],
        [0, 1, -1, 2, 0, 0, 0, 0, 1, 0],
        [1, -2, 2, -2, 0, 0, 0, 0, 0, 1],
        [1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
    ]);
    let b = IntMat::from_rows(&[
        [0, 0, 0, 0],
        [0, 0, 0, 0],
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
    ]);
    (a, b)
}

/// `(λ₁, λ₂, β₁, β₂)` as an integer vector.
pub fn point(l: Weight, b: RootVector) -> IntVec {
    int_vec(&[l.l1, l.l2, b.b1, b.b2])
}

/// Pattern points of `V(λ)` with weight `β`.
pub fn patterns(l: Weight, b: RootVector) -> Vec<PatternPoint> {
    let mut out = Vec::new();
    if !l.is_dominant() {
        return out;
    }
    for a13 in 0..=l.l2.min(b.b2) {
        let a11 = b.b2 - a13;
        let hi = (l.l1 + 2 * a13).min(2 * a11).min(b.b1);
        for a12 in 2 * a13..=hi {
            let p = PatternPoint { a22: b.b1 - a12, a11, a12, a13 };
            if p.in_polytope(l) {
                out.push(p);
            }
        }
    }
    out
}

/// `K^λ_β` by direct enumeration of pattern points.
pub fn brute_force_multiplicity(l: Weight, b: RootVector) -> u64 {
    patterns(l, b).len() as u64
}

/// Box `0 ≤ β₁ ≤ 2λ₁+2λ₂`, `0 ≤ β₂ ≤ λ₁+2λ₂` containing the support of `V(λ)`.
pub fn support_box(l: Weight) -> impl Iterator<Item = RootVector> {
    let (m1, m2) = if l.is_dominant() { (2 * l.l1 + 2 * l.l2, l.l1 + 2 * l.l2) } else { (-1, -1) };
    (0..=m1).flat_map(move |b1| (0..=m2).map(move |b2| RootVector::new(b1, b2)))
}

/// The character of `V(λ)` by brute force.
pub fn brute_force_character(l: Weight) -> BTreeMap<RootVector, u64> {
    support_box(l)
        .map(|b| (b, brute_force_multiplicity(l, b)))
        .filter(|(_, k)| *k > 0)
        .collect()
}

/// Closed formula for `dim V(λ)₀` at `λ = (2i−2j, −i+2j)`, zero unless `i/2 ≤ j ≤ i`.
pub fn weight_zero_dim(i: i64, j: i64) -> u64 {
    if i < 0 || 2 * j < i || j > i {
        return 0;
    }
    // i/2 − i² + 3ij − 2j² + (3 + (−1)^i)/4, times 4
    let sign = if i.is_even() { 1 } else { -1 };
    let four = 2 * i - 4 * i * i + 12 * i * j - 8 * j * j + 3 + sign;
    debug_assert_eq!(four % 4, 0);
    (four / 4) as u64
}

/// The positive roots reached one or two steps below the highest weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NearRoot {
    /// `α₁`
    Alpha1,
    /// `α₂`
    Alpha2,
    /// `α₁ + α₂`
    Alpha1Alpha2,
    /// `2α₁ + α₂`
    TwoAlpha1Alpha2,
}

impl NearRoot {
    pub const ALL: [NearRoot; 4] = [NearRoot::Alpha1, NearRoot::Alpha2, NearRoot::Alpha1Alpha2, NearRoot::TwoAlpha1Alpha2];

    pub fn root(self) -> RootVector {
        match self {
            NearRoot::Alpha1 => RootVector::new(1, 0),
            NearRoot::Alpha2 => RootVector::new(0, 1),
            NearRoot::Alpha1Alpha2 => RootVector::new(1, 1),
            NearRoot::TwoAlpha1Alpha2 => RootVector::new(2, 1),
        }
    }

    /// The multiplicity of `λ − ε` when `λ` is regular enough, else `None`.
    pub fn closed_form(self, l: Weight) -> Option<u64> {
        match self {
            NearRoot::Alpha1 if l.l1 >= 1 => Some(1),
            NearRoot::Alpha2 if l.l2 >= 1 => Some(1),
            NearRoot::Alpha1Alpha2 if l.l1 >= 1 && l.l2 >= 1 => Some(2),
            NearRoot::TwoAlpha1Alpha2 if l.l1 >= 2 && l.l2 >= 1 => Some(3),
            _ => None,
        }
    }
}

/// Parameters `(λ̃, μ̃)` of `V(λ)_{λ−β}` with the two simple roots swapped.
pub fn lie_reparam(l: Weight, b: RootVector) -> ((i64, i64), (i64, i64)) {
    ((l.l2, l.l1), (l.l2 + b.b1 - 2 * b.b2, l.l1 - 2 * b.b1 + 2 * b.b2))
}

/// The weight `λ − β` in the basis `ω₁, ω₂`.
pub fn weight_of(l: Weight, b: RootVector) -> (i64, i64) {
    (l.l1 - 2 * b.b1 + 2 * b.b2, l.l2 + b.b1 - 2 * b.b2)
}

/// Images of `β` under the simple reflections acting on `λ − β`.
pub fn reflect(l: Weight, b: RootVector) -> [RootVector; 2] {
    let (m1, m2) = weight_of(l, b);
    [RootVector::new(b.b1 + m1, b.b2), RootVector::new(b.b1, b.b2 + m2)]
}
