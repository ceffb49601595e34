use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;

use vpf::so5::{brute_force_multiplicity, point, reflect, ChamberTable, RootVector, Weight};

fn table() -> &'static ChamberTable {
    static TABLE: OnceLock<ChamberTable> = OnceLock::new();
    TABLE.get_or_init(|| ChamberTable::build().unwrap())
}

fn weight_and_root() -> impl Strategy<Value = (Weight, RootVector)> {
    (0i64..=30, 0i64..=30).prop_flat_map(|(l1, l2)| {
        (Just(Weight::new(l1, l2)), 0..=2 * (l1 + l2), 0..=l1 + 2 * l2)
            .prop_map(|(l, b1, b2)| (l, RootVector::new(b1, b2)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn multiplicity_is_the_lattice_point_count_and_weyl_invariant((l, b) in weight_and_root()) {
        let t = table();
        let k = t.multiplicity(l, b).unwrap();
        prop_assert_eq!(k, brute_force_multiplicity(l, b));
        prop_assert_eq!(t.multiplicity(l, RootVector::new(0, 0)).unwrap(), 1);
        for r in reflect(l, b) {
            prop_assert_eq!(t.multiplicity(l, r).unwrap(), k);
        }
    }

    #[test]
    fn containing_chambers_agree((l, b) in weight_and_root()) {
        let x: Vec<BigInt> = point(l, b);
        let values: Vec<_> = table()
            .chambers
            .iter()
            .filter(|c| c.cone.contains_int_point(&x))
            .map(|c| c.quasi.evaluate(&x))
            .collect();
        prop_assert!(values.windows(2).all(|w| w[0] == w[1]));
    }
}
