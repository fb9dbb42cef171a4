//! Acceptance suite: one test per criterion, each printing a single
//! `acceptance <n>: PASS|FAIL` line (visible with `--nocapture`).

use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use ptolemy::count::{
    binom_ext, count_invariant, count_orbits, count_perp_invariant, count_ptolemy, divisors,
    multinom_ext, nonzero_classes,
};
use ptolemy::enumerate::{
    brute_force_tally, enumerate_all, enumerate_perp_invariant, invariant_tally, stats_tally,
};
use ptolemy::qpoly::{
    csp_verify_all, orbit_report, q_binom, q_int, q_lucas_binom_at_root, q_multinom,
    root_residue, CspMode,
};
use ptolemy::series::{invariant_gf, solve_ptolemy_gf};
use ptolemy::Diagram;

fn report(number: u32, name: &str, body: impl FnOnce()) {
    let started = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(body));
    let verdict = if result.is_ok() { "PASS" } else { "FAIL" };
    println!(
        "acceptance {number} ({name}): {verdict} ({:.2}s)",
        started.elapsed().as_secs_f64()
    );
    if let Err(cause) = result {
        resume_unwind(cause);
    }
}

fn class_members(n: u32, class: (u32, u32, u32)) -> Vec<Diagram> {
    enumerate_all(n)
        .unwrap()
        .filter(|d| d.stats().unwrap().class() == class)
        .collect()
}

#[test]
fn criterion_1_quarter_turn_census_of_the_twelve_gon() {
    report(1, "12-gon quarter-turn census", || {
        let expected: [((u32, u32, u32), u64); 10] = [
            ((0, 0, 1), 1),
            ((0, 1, 0), 1),
            ((4, 0, 1), 3),
            ((4, 1, 0), 3),
            ((0, 1, 4), 3),
            ((0, 5, 0), 3),
            ((0, 0, 5), 3),
            ((0, 4, 1), 3),
            ((8, 1, 0), 6),
            ((8, 0, 1), 6),
        ];
        for ((k, l, m), v) in expected {
            let counted = count_invariant(11, k as i64, l as i64, m as i64, 4).unwrap();
            assert_eq!(counted, BigInt::from(v), "class ({k},{l},{m})");
        }
        let tally = invariant_tally(11, 4).unwrap();
        assert_eq!(tally, expected.into_iter().collect());
    });
}

#[test]
fn criterion_2_hexagon_perp_cube_fixed_points() {
    report(2, "hexagon third perp power", || {
        assert_eq!(count_perp_invariant(5, 0, 1, 1, 3).unwrap(), BigInt::from(6));
        assert_eq!(count_perp_invariant(5, 4, 0, 0, 3).unwrap(), BigInt::from(6));
        let mut tally = std::collections::BTreeMap::new();
        for diagram in enumerate_perp_invariant(5, 3).unwrap() {
            *tally.entry(diagram.stats().unwrap().class()).or_insert(0u64) += 1;
        }
        let expected = [((0, 1, 1), 6), ((4, 0, 0), 6)].into_iter().collect();
        assert_eq!(tally, expected);
    });
}

#[test]
fn criterion_3_triple_oracle_agreement() {
    report(3, "count vs enumeration vs series", || {
        let series = solve_ptolemy_gf(8);
        for n in 1..=8u32 {
            let enumerated = stats_tally(n).unwrap();
            let slice = series.z_slice(n);
            let brute = if n < 7 {
                Some(brute_force_tally(n + 1, 7).unwrap())
            } else {
                None
            };

            let mut classes: BTreeSet<(u32, u32, u32)> =
                nonzero_classes(n as i64).unwrap().into_iter().collect();
            classes.extend(enumerated.keys().copied());
            classes.extend(slice.keys().copied());

            for class in classes {
                let (k, l, m) = class;
                let formula = count_ptolemy(n as i64, k as i64, l as i64, m as i64).unwrap();
                let seen = BigInt::from(enumerated.get(&class).copied().unwrap_or(0));
                let coefficient = slice.get(&class).cloned().unwrap_or_default();
                assert_eq!(formula, seen, "n={n} class {class:?} enumeration");
                assert_eq!(formula, coefficient, "n={n} class {class:?} series");
                if let Some(brute) = &brute {
                    let counted = BigInt::from(brute.get(&class).copied().unwrap_or(0));
                    assert_eq!(formula, counted, "n={n} class {class:?} brute force");
                }
            }
        }
    });
}

#[test]
fn criterion_4_invariant_count_triple_agreement() {
    report(4, "rotation-fixed count vs enumeration vs series", || {
        for n in 1..=8u32 {
            for d in divisors((n + 1) as u64) {
                if d < 2 {
                    continue;
                }
                let order = d as u32;
                let enumerated = invariant_tally(n, order).unwrap();
                let series = invariant_gf(order, n).unwrap();
                let slice = series.z_slice(n);

                let mut classes: BTreeSet<(u32, u32, u32)> =
                    nonzero_classes(n as i64).unwrap().into_iter().collect();
                classes.extend(enumerated.keys().copied());
                classes.extend(slice.keys().copied());

                for class in classes {
                    let (k, l, m) = class;
                    let formula =
                        count_invariant(n as i64, k as i64, l as i64, m as i64, order as i64)
                            .unwrap();
                    let seen = BigInt::from(enumerated.get(&class).copied().unwrap_or(0));
                    let coefficient = slice.get(&class).cloned().unwrap_or_default();
                    assert_eq!(formula, seen, "n={n} d={order} class {class:?} enumeration");
                    assert_eq!(formula, coefficient, "n={n} d={order} class {class:?} series");
                }
            }
        }
    });
}

#[test]
fn criterion_5_cyclic_sieving_at_desk_scale() {
    report(5, "root-of-unity values count fixed diagrams", || {
        for n in 1..=8u32 {
            let reports = csp_verify_all(n, CspMode::Both).unwrap();
            assert!(!reports.is_empty());
            for report in reports {
                assert!(
                    report.ok,
                    "n={n} class {:?} failed: {report:?}",
                    report.class
                );
                let rsw = report.rsw.as_ref().expect("both mode carries the orbit side");
                assert!(rsw.congruent, "n={n} class {:?} rsw", report.class);
            }
        }
    });
}

#[test]
fn criterion_6_q_lucas_path_agreement() {
    report(6, "q-Lucas shortcut matches direct reduction", || {
        for a in 0..=40i64 {
            for b in 0..=a {
                let direct = q_binom(a, b);
                for order in 2..=12u32 {
                    let reduced = root_residue(&direct, order);
                    let shortcut = q_lucas_binom_at_root(a, b, order);
                    assert_eq!(reduced, shortcut, "a={a} b={b} d={order}");
                }
            }
        }
    });
}

#[test]
fn criterion_7_orbit_formula_matches_orbit_decomposition() {
    report(7, "orbit counts", || {
        for n in 1..=8u32 {
            for class in nonzero_classes(n as i64).unwrap() {
                let (k, l, m) = class;
                let formula = count_orbits(n as i64, k as i64, l as i64, m as i64).unwrap();
                let members = class_members(n, class);
                let report = orbit_report(n + 1, &members).unwrap();
                assert_eq!(
                    formula,
                    BigInt::from(report.orbit_count()),
                    "n={n} class {class:?}"
                );
            }
        }
        let members = class_members(5, (4, 0, 0));
        let report = orbit_report(6, &members).unwrap();
        assert_eq!(report.orbit_count(), 4);
        assert_eq!(report.size_multiset(), vec![6, 3, 3, 2]);
    });
}

#[test]
fn criterion_8_exact_divisions_leave_no_remainder() {
    report(8, "exactness guards", || {
        use num_integer::Integer;
        use num_traits::Zero;

        // Integer side: the class-count numerator is divisible by N and the
        // orbit-count numerator by N + 1.
        for n in 1..=11i64 {
            for (k, l, m) in nonzero_classes(n).unwrap() {
                let (k, l, m) = (k as i64, l as i64, m as i64);
                let numerator = multinom_ext(&[n - 1, k, l, m]).unwrap()
                    * binom_ext(n - 2 - k - l - m, l + m - 1);
                let (_, r) = numerator.div_rem(&BigInt::from(n));
                assert!(r.is_zero(), "count numerator n={n} ({k},{l},{m})");

                let mut orbit_numerator = BigInt::zero();
                for d in divisors((n + 1) as u64) {
                    let phi = ptolemy::count::euler_phi(d);
                    let fixed = if d == 1 {
                        count_ptolemy(n, k, l, m).unwrap()
                    } else {
                        count_invariant(n, k, l, m, d as i64).unwrap()
                    };
                    orbit_numerator += BigInt::from(phi) * fixed;
                }
                let (_, r) = orbit_numerator.div_rem(&BigInt::from(n + 1));
                assert!(r.is_zero(), "orbit numerator n={n} ({k},{l},{m})");
            }
        }

        // q side: the class polynomial's numerator is divisible by [N]_q,
        // and every Gaussian binomial is a quotient of q-factorials with
        // zero remainder.
        for n in 1..=9i64 {
            for (k, l, m) in nonzero_classes(n).unwrap() {
                let (k, l, m) = (k as i64, l as i64, m as i64);
                let numerator = q_multinom(&[n - 1, k, l, m])
                    .unwrap()
                    .mul(&q_binom(n - 2 - k - l - m, l + m - 1));
                let (_, r) = numerator.div_rem(&q_int(n as u64));
                assert!(r.is_zero(), "class polynomial numerator n={n} ({k},{l},{m})");
            }
        }
        for a in 0..=40u64 {
            for b in 0..=a {
                let denominator = ptolemy::qpoly::q_factorial(b)
                    .mul(&ptolemy::qpoly::q_factorial(a - b));
                let (q, r) = ptolemy::qpoly::q_factorial(a).div_rem(&denominator);
                assert!(r.is_zero(), "factorial quotient a={a} b={b}");
                assert_eq!(q, q_binom(a as i64, b as i64));
            }
        }
    });
}
