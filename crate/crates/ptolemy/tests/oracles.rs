//! Frozen expected values and agreement between independent computation
//! paths, at sizes beyond what the unit tests cover.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use ptolemy::count::{
    count_invariant, count_perp_invariant, count_ptolemy, nonzero_classes,
};
use ptolemy::enumerate::{
    brute_force_tally, enumerate_all, invariant_tally, perp_invariant_tally, stats_tally,
};
use ptolemy::series::solve_ptolemy_gf;

/// Diagram totals per polygon, base edge included, starting at the 2-gon.
const TOTALS: [(u32, u64); 11] = [
    (1, 1),
    (2, 1),
    (3, 4),
    (4, 17),
    (5, 82),
    (6, 422),
    (7, 2274),
    (8, 12665),
    (9, 72326),
    (10, 421214),
    (11, 2492112),
];

fn formula_tally(n: u32) -> BTreeMap<(u32, u32, u32), BigInt> {
    nonzero_classes(n as i64)
        .unwrap()
        .into_iter()
        .map(|(k, l, m)| {
            let v = count_ptolemy(n as i64, k as i64, l as i64, m as i64).unwrap();
            ((k, l, m), v)
        })
        .collect()
}

#[test]
fn totals_match_the_closed_form() {
    for (n, total) in TOTALS {
        let sum: BigInt = formula_tally(n).values().sum();
        assert_eq!(sum, BigInt::from(total), "polygon with {} vertices", n + 1);
    }
}

#[test]
fn totals_match_the_generating_function() {
    let series = solve_ptolemy_gf(11);
    for (n, total) in TOTALS {
        let sum: BigInt = series.z_slice(n).values().sum();
        assert_eq!(sum, BigInt::from(total), "z^{n} slice");
    }
}

#[test]
fn totals_match_enumeration() {
    for (n, total) in TOTALS.iter().take(8) {
        let seen = enumerate_all(*n).unwrap().count() as u64;
        assert_eq!(seen, *total, "polygon with {} vertices", n + 1);
    }
}

#[test]
fn brute_force_agrees_with_the_generator() {
    for n in 1..=6 {
        let brute = brute_force_tally(n + 1, 7).unwrap();
        let generated = stats_tally(n).unwrap();
        assert_eq!(brute, generated, "polygon with {} vertices", n + 1);
    }
}

#[test]
fn nc_closure_fixes_every_generated_diagram() {
    for n in 1..=6 {
        for diagram in enumerate_all(n).unwrap() {
            let closed = diagram.nc().nc();
            assert_eq!(closed, diagram, "{}", diagram.canonical_encoding());
        }
    }
}

#[test]
fn perp_counts_match_enumeration() {
    for n in 2..=7u32 {
        for power in 1..=(2 * (n + 1)) {
            let enumerated = perp_invariant_tally(n, power).unwrap();
            for (k, l, m) in nonzero_classes(n as i64).unwrap() {
                let formula =
                    count_perp_invariant(n as i64, k as i64, l as i64, m as i64, power as i64)
                        .unwrap();
                let seen = enumerated.get(&(k, l, m)).copied().unwrap_or(0);
                assert_eq!(
                    formula,
                    BigInt::from(seen),
                    "n={n} power={power} class ({k},{l},{m})"
                );
            }
        }
    }
}

#[test]
fn perp_totals_are_frozen() {
    let pentagon: u64 = perp_invariant_tally(4, 5).unwrap().values().sum();
    assert_eq!(pentagon, 5);
    let hexagon: u64 = perp_invariant_tally(5, 9).unwrap().values().sum();
    assert_eq!(hexagon, 12);
    let hexagon_cubed = perp_invariant_tally(5, 3).unwrap();
    let expected: BTreeMap<(u32, u32, u32), u64> =
        [((0, 1, 1), 6), ((4, 0, 0), 6)].into_iter().collect();
    assert_eq!(hexagon_cubed, expected);
}

#[test]
fn hexagon_triangulation_fixed_counts_are_frozen() {
    for (order, expected) in [(2, 6), (3, 2), (6, 0)] {
        let v = count_invariant(5, 4, 0, 0, order).unwrap();
        assert_eq!(v, BigInt::from(expected), "rotation order {order}");
    }
}

#[test]
fn twelve_gon_quarter_turn_census_is_frozen() {
    let expected: BTreeMap<(u32, u32, u32), u64> = [
        ((0, 0, 1), 1),
        ((0, 0, 5), 3),
        ((0, 1, 0), 1),
        ((0, 1, 4), 3),
        ((0, 4, 1), 3),
        ((0, 5, 0), 3),
        ((4, 0, 1), 3),
        ((4, 1, 0), 3),
        ((8, 0, 1), 6),
        ((8, 1, 0), 6),
    ]
    .into_iter()
    .collect();
    assert_eq!(invariant_tally(11, 4).unwrap(), expected);
    for ((k, l, m), v) in expected {
        let formula = count_invariant(11, k as i64, l as i64, m as i64, 4).unwrap();
        assert_eq!(formula, BigInt::from(v), "class ({k},{l},{m})");
    }
}
