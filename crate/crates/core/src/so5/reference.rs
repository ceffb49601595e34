//! The published decomposition of `(λ₁, λ₂, β₁, β₂)`-space into 33 cones.
//!
//! Chamber ids of a computed table follow this numbering whenever the
//! canonical H-representations agree.

use crate::cone::ConeH;
use crate::exact::rat::int_vec;

/// Inequality normals over `(λ₁, λ₂, β₁, β₂)`, in the published order.
///
/// Entry 16 is printed with the inequality `λ₁ − β₁ + β₁ ≥ 0`; the row below
/// uses `λ₁ − β₁ + β₂ ≥ 0` instead.
pub const PUBLISHED_CHAMBERS: [&[[i64; 4]]; 33] = [
    &[[0, 1, 0, -1], [1, 0, -1, 0], [0, 0, 1, -1], [0, 0, -1, 2]],
    &[[0, 0, 1, -2], [0, 1, 0, -1], [-1, 0, 1, 0], [1, 0, -1, 1]],
    &[[0, 1, 0, -1], [-1, 0, 1, 0], [0, 0, -1, 2], [0, 0, 1, -1], [1, 0, -1, 1]],
    &[[0, 0, 1, 0], [0, 1, 0, -1], [0, 0, -1, 1], [1, 0, -1, 0]],
    &[[0, 0, 0, 1], [0, 0, 1, -2], [1, 0, -1, 0], [0, 1, 0, -1]],
    &[[0, 0, 1, -1], [0, 2, 1, -2], [0, 0, -1, 2], [0, -1, 0, 1], [1, 0, -1, 0]],
    &[[1, 0, -1, 2], [-1, 0, 1, -1], [0, 0, 1, -2], [0, 1, 0, -1]],
    &[[-1, 0, 1, 0], [1, 0, 0, 0], [0, 1, 0, -1], [0, 0, -1, 1]],
    &[[-1, 0, 1, 0], [1, 0, -1, 1], [1, 2, -1, 0], [0, -1, 0, 1], [0, 0, 1, -2]],
    &[[1, 1, 0, -1], [1, 2, -1, 0], [0, 2, 1, -2], [1, 0, -1, 1], [-1, 0, 1, 0]],
    &[[0, 2, 1, -2], [0, -1, 0, 1], [0, 0, -1, 1], [1, 0, -1, 0]],
    &[[0, -1, 0, 1], [0, 1, 0, 0], [0, 0, 1, -2], [1, 0, -1, 0]],
    &[[0, 0, -1, 2], [-1, 0, 1, -1], [1, 0, 0, 0], [0, 1, 0, -1]],
    &[[-1, 0, 1, -1], [1, 2, -1, 0], [0, -1, 0, 1], [0, 0, 1, -2]],
    &[[0, 0, -1, 1], [0, -1, 0, 1], [0, 2, 1, -2], [1, 1, 0, -1], [-1, 0, 1, 0]],
    &[[-1, -1, 0, 1], [1, 2, -1, 0], [0, 2, 1, -2], [1, 0, -1, 1], [0, 0, 1, -1]],
    &[[0, 1, 1, -1], [0, -2, -1, 2], [0, 0, -1, 1], [1, 0, -1, 0]],
    &[[0, 0, 1, -1], [0, 1, 0, 0], [0, -2, -1, 2], [1, 0, -1, 0]],
    &[[-1, 0, 1, -1], [0, -1, 0, 1], [0, 0, -1, 2], [1, 2, -1, 0], [1, 1, 0, -1]],
    &[[1, 1, -1, 1], [-1, -2, 1, 0], [-1, 0, 1, -1], [0, 0, 1, -2]],
    &[[1, 1, 0, -1], [-1, 0, 1, 0], [0, -2, -1, 2], [0, 0, -1, 1]],
    &[[-1, -1, 0, 1], [1, 0, 0, 0], [0, 2, 1, -2], [0, 0, -1, 1]],
    &[[0, 1, 0, 0], [-1, -2, 1, 0], [1, 0, -1, 1], [0, 0, 1, -2]],
    &[[0, -2, -1, 2], [0, 0, 1, -1], [1, 1, 0, -1], [-1, 0, 1, 0], [1, 2, -1, 0]],
    &[[-1, -2, 1, 0], [-1, 0, 1, -1], [0, 0, -1, 2], [1, 1, 0, -1]],
    &[[1, 0, 0, 0], [-1, -1, 0, 1], [-1, 0, 1, -1], [1, 2, -1, 0]],
    &[[1, 2, 1, -2], [-1, -1, 0, 1], [0, -2, -1, 2], [0, 0, -1, 1]],
    &[[-1, -2, 1, 0], [0, 0, -1, 2], [0, 2, 1, -2], [1, 0, -1, 1], [1, 1, 0, -1]],
    &[[0, 1, 0, 0], [-1, -2, 1, 0], [0, -2, -1, 2], [1, 1, 0, -1]],
    &[[-1, -1, 0, 1], [0, 0, 1, -1], [1, 2, -1, 0], [0, -2, -1, 2]],
    &[[-1, -2, 1, 0], [-1, 0, 1, -1], [2, 2, -1, 0], [-1, -1, 0, 1]],
    &[[0, 2, 1, -2], [-1, -1, 0, 1], [-1, -2, 1, 0], [1, 0, -1, 1]],
    &[[-1, -1, 0, 1], [1, 2, 0, -1], [-1, -2, 1, 0], [0, -2, -1, 2]],
];

/// The published cone with 1-based index `id`.
pub fn published_chamber(id: usize) -> ConeH {
    let normals: Vec<_> = PUBLISHED_CHAMBERS[id - 1].iter().map(|n| int_vec(n)).collect();
    ConeH::from_inequalities(4, &normals).expect("four coordinates")
}

/// Published id of a cone, if its canonical form appears in the list.
pub fn published_id(cone: &ConeH) -> Option<usize> {
    (1..=PUBLISHED_CHAMBERS.len()).find(|&i| published_chamber(i) == *cone)
}
