use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use vpf::so5::{
    brute_force_character, induced_decomposition, lie_reparam, ChamberTable, RootVector, Weight,
};
use vpf::{database, Error};

fn table() -> &'static ChamberTable {
    static TABLE: OnceLock<ChamberTable> = OnceLock::new();
    TABLE.get_or_init(|| ChamberTable::build().unwrap())
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Twice the area of the convex hull of integer points.
fn hull_area2(mut pts: Vec<(i64, i64)>) -> i64 {
    pts.sort();
    pts.dedup();
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for pass in [pts.clone(), pts.iter().rev().copied().collect()] {
        let base = hull.len();
        for p in pass {
            while hull.len() >= base + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    (0..hull.len()).map(|i| {
        let (a, b) = (hull[i], hull[(i + 1) % hull.len()]);
        a.0 * b.1 - b.0 * a.1
    }).sum::<i64>().abs()
}

#[test]
fn characters() {
    let t = table();
    let trivial = t.character(Weight::new(0, 0)).unwrap();
    assert_eq!(trivial.into_iter().collect::<Vec<_>>(), vec![(RootVector::new(0, 0), 1)]);
    assert_eq!(t.character(Weight::new(1, 0)).unwrap().values().sum::<u64>(), 4);
    assert_eq!(t.character(Weight::new(4, 8)).unwrap().values().sum::<u64>(), 2415);
    for l in [Weight::new(0, 1), Weight::new(3, 2), Weight::new(5, 0)] {
        assert_eq!(t.character(l).unwrap(), brute_force_character(l));
    }
}

#[test]
fn queries_are_total() {
    let t = table();
    assert_eq!(t.multiplicity(Weight::new(0, 0), RootVector::new(1, 1)).unwrap(), 0);
    assert_eq!(t.multiplicity(Weight::new(-1, 3), RootVector::new(0, 0)).unwrap(), 0);
    assert_eq!(t.multiplicity(Weight::new(4, 8), RootVector::new(-1, 0)).unwrap(), 0);
    assert_eq!(t.multiplicity(Weight::new(1_000_000, 1_000_000), RootVector::new(0, 0)).unwrap(), 1);
    assert!(matches!(t.chamber(99), Err(Error::UnknownChamberId(99))));
}

#[test]
fn reparametrization() {
    assert_eq!(lie_reparam(Weight::new(4, 8), RootVector::new(0, 0)), ((8, 4), (8, 4)));
    assert_eq!(lie_reparam(Weight::new(4, 8), RootVector::new(2, 1)), ((8, 4), (8, 2)));
    assert_eq!(lie_reparam(Weight::new(1, 2), RootVector::new(1, 1)).1, (1, 1));
}

#[test]
fn slice_of_trivial_weight_is_a_point() {
    let d = induced_decomposition(Weight::new(0, 0), table());
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].1.vertices, vec![(rat(0), rat(0))]);
}

#[test]
fn slices_tile_the_weight_polytope() {
    for l in [Weight::new(1, 2), Weight::new(3, 1), Weight::new(4, 8)] {
        let d = induced_decomposition(l, table());
        let support: Vec<(i64, i64)> = brute_force_character(l).keys().map(|b| (b.b1, b.b2)).collect();
        let area: BigRational = d.iter().map(|(_, p)| p.area()).fold(BigRational::zero(), |a, b| a + b);
        assert_eq!(area * rat(2), rat(hull_area2(support.clone())), "area at {l}");
        for (b1, b2) in support {
            assert!(d.iter().any(|(_, p)| p.contains(&(rat(b1), rat(b2)))), "({b1},{b2}) uncovered at {l}");
        }
        assert!(d.iter().all(|(_, p)| p.dim() == 2 && !p.area().is_negative()));
    }
}

#[test]
fn worked_example_lies_in_the_first_slice() {
    let d = induced_decomposition(Weight::new(4, 8), table());
    let (_, first) = d.iter().find(|(id, _)| *id == 1).expect("chamber 1 meets lambda=(4,8)");
    for (b1, b2) in [(0, 0), (1, 1), (2, 1), (2, 2), (3, 2), (4, 2), (3, 3), (4, 3), (4, 4)] {
        assert!(first.contains(&(rat(b1), rat(b2))));
    }
}

#[test]
fn database_round_trip_is_byte_identical() {
    let text = database::to_string(table()).unwrap();
    let back = database::from_str(&text).unwrap();
    assert_eq!(database::to_string(&back).unwrap(), text);
    assert_eq!(back.stats, table().stats);
    for c in &back.chambers {
        assert!(c.quasi.equal(&table().chamber(c.id).unwrap().quasi));
    }
}
