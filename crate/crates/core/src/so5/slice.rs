use num_traits::{Signed, Zero};

use super::{ChamberTable, Weight};
use crate::cone::ConeH;
use crate::exact::Rat;

/// A convex polygon in the `(β₁, β₂)`-plane, vertices counterclockwise.
/// Degenerate slices have one or two vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    pub vertices: Vec<(Rat, Rat)>,
}

impl Polygon {
    pub fn dim(&self) -> usize {
        match self.vertices.len() {
            0 | 1 => 0,
            2 => 1,
            _ => 2,
        }
    }

    /// Shoelace area.
    pub fn area(&self) -> Rat {
        let v = &self.vertices;
        let mut twice = Rat::zero();
        for i in 0..v.len() {
            let (x0, y0) = &v[i];
            let (x1, y1) = &v[(i + 1) % v.len()];
            twice += x0 * y1 - x1 * y0;
        }
        (twice / Rat::from_integer(2.into())).abs()
    }

    pub fn contains(&self, p: &(Rat, Rat)) -> bool {
        let v = &self.vertices;
        match v.len() {
            0 => false,
            1 => v[0] == *p,
            2 => cross(&v[0], &v[1], p).is_zero() && between(&v[0], &v[1], p),
            _ => (0..v.len()).all(|i| !cross(&v[i], &v[(i + 1) % v.len()], p).is_negative()),
        }
    }
}

fn cross(o: &(Rat, Rat), a: &(Rat, Rat), b: &(Rat, Rat)) -> Rat {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

fn between(a: &(Rat, Rat), b: &(Rat, Rat), p: &(Rat, Rat)) -> bool {
    let dot = (&p.0 - &a.0) * (&b.0 - &a.0) + (&p.1 - &a.1) * (&b.1 - &a.1);
    let len = (&b.0 - &a.0) * (&b.0 - &a.0) + (&b.1 - &a.1) * (&b.1 - &a.1);
    !dot.is_negative() && dot <= len
}

/// Half-planes `c₁β₁ + c₂β₂ ≥ r` of the slice of a cone at fixed `λ`.
fn half_planes(cone: &ConeH, l: Weight) -> Vec<(Rat, Rat, Rat)> {
    cone.normals()
        .iter()
        .map(|n| {
            let r = -(&n[0] * l.l1 + &n[1] * l.l2);
            (Rat::from_integer(n[2].clone()), Rat::from_integer(n[3].clone()), Rat::from_integer(r))
        })
        .collect()
}

fn slice(cone: &ConeH, l: Weight) -> Polygon {
    let hp = half_planes(cone, l);
    let feasible = |p: &(Rat, Rat)| hp.iter().all(|(a, b, r)| a * &p.0 + b * &p.1 >= *r);
    let mut pts: Vec<(Rat, Rat)> = Vec::new();
    for i in 0..hp.len() {
        for j in i + 1..hp.len() {
            let (a1, b1, r1) = &hp[i];
            let (a2, b2, r2) = &hp[j];
            let det = a1 * b2 - a2 * b1;
            if det.is_zero() {
                continue;
            }
            let p = ((r1 * b2 - r2 * b1) / &det, (a1 * r2 - a2 * r1) / &det);
            if feasible(&p) && !pts.contains(&p) {
                pts.push(p);
            }
        }
    }
    Polygon { vertices: convex_order(pts) }
}

/// Convex hull, counterclockwise, without collinear points.
fn convex_order(mut pts: Vec<(Rat, Rat)>) -> Vec<(Rat, Rat)> {
    if pts.len() <= 1 {
        return pts;
    }
    pts.sort();
    // monotone chain
    let mut lower: Vec<(Rat, Rat)> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<(Rat, Rat)> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Slices of the chambers at fixed `λ`: the top-dimensional ones, each
/// distinct polygon once, tagged with the lowest chamber id producing it.
pub fn induced_decomposition(l: Weight, table: &ChamberTable) -> Vec<(usize, Polygon)> {
    if !l.is_dominant() {
        return Vec::new();
    }
    let slices: Vec<(usize, Polygon)> = table
        .chambers
        .iter()
        .map(|c| (c.id, slice(&c.cone, l)))
        .filter(|(_, p)| !p.vertices.is_empty())
        .collect();
    let top = slices.iter().map(|(_, p)| p.dim()).max().unwrap_or(0);
    let mut out: Vec<(usize, Polygon)> = Vec::new();
    for (id, p) in slices {
        if p.dim() == top && !out.iter().any(|(_, q)| *q == p) {
            out.push((id, p));
        }
    }
    out.sort_by_key(|(id, _)| *id);
    out
}
