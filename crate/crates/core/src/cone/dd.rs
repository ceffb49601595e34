//! Double description method over the integers.
//!
//! Converts `{x : a·x ≥ 0 for all a}` into a lineality basis plus a list of
//! extreme rays (modulo the lineality space). Rays are kept primitive so the
//! entries stay small.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::rat::{dot, primitive, IntVec};

/// Generators of a polyhedral cone.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Generators {
    pub lineality: Vec<IntVec>,
    pub rays: Vec<IntVec>,
}

#[derive(Clone)]
struct Ray {
    v: IntVec,
    tight: BitSet,
}

#[derive(Clone, PartialEq, Eq)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = BitSet::new(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_superset(&self, other: &BitSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

fn combine(a: &BigInt, x: &IntVec, b: &BigInt, y: &IntVec) -> IntVec {
    // a*x - b*y
    let mut v: IntVec = x.iter().zip(y).map(|(xi, yi)| a * xi - b * yi).collect();
    primitive(&mut v);
    v
}

/// Runs the double description method on the inequalities `a·x ≥ 0`.
pub fn double_description(dim: usize, inequalities: &[IntVec]) -> Generators {
    let m = inequalities.len();
    let mut lineality: Vec<IntVec> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::one();
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (i, a) in inequalities.iter().enumerate() {
        debug_assert_eq!(a.len(), dim);
        if let Some(pos) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l = lineality.swap_remove(pos);
            let mut al = dot(a, &l);
            if al.is_negative() {
                l.iter_mut().for_each(|x| *x = -&*x);
                al = -al;
            }
            for other in lineality.iter_mut() {
                let ao = dot(a, other);
                if !ao.is_zero() {
                    *other = combine(&al, other, &ao, &l);
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v);
                if !ar.is_zero() {
                    r.v = combine(&al, &r.v, &ar, &l);
                }
                r.tight.insert(i);
            }
            // every earlier inequality vanishes on the lineality space
            let mut tight = BitSet::full(i);
            tight.0.resize(m.div_ceil(64), 0);
            rays.push(Ray { v: l, tight });
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        if values.iter().all(|v| !v.is_negative()) {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    r.tight.insert(i);
                }
            }
            continue;
        }

        let pointed_dim = dim - lineality.len();
        let plus: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_positive()).collect();
        let minus: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_negative()).collect();

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
        for p in &plus {
            for q in &minus {
                let common = rays[*p].tight.and(&rays[*q].tight);
                if pointed_dim >= 2 && common.count() + 2 < pointed_dim {
                    continue;
                }
                let adjacent = rays.iter().enumerate().all(|(k, r)| {
                    k == *p || k == *q || !r.tight.is_superset(&common)
                });
                if !adjacent {
                    continue;
                }
                let mut tight = common;
                tight.insert(i);
                // values[p] > 0 > values[q]
                let v = combine(&values[*p], &rays[*q].v, &values[*q], &rays[*p].v);
                next.push(Ray { v, tight });
            }
        }
        for (k, r) in rays.into_iter().enumerate() {
            if values[k].is_positive() {
                next.push(r);
            } else if values[k].is_zero() {
                let mut r = r;
                r.tight.insert(i);
                next.push(r);
            }
        }
        rays = next;
    }

    Generators { lineality, rays: rays.into_iter().map(|r| r.v).collect() }
}
