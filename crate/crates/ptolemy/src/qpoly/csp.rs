//! Cyclic sieving checks: the class polynomial, its values at roots of
//! unity, rotation orbit structure, and machine-readable verification
//! reports.
//!
//! For a class `(k, l, m)` on the `(n + 1)`-gon the polynomial
//!
//! ```text
//! X(q) = qmultinom(n-1, k, l, m) * qbinom(n-2-k-l-m, l+m-1) / [n]_q
//! ```
//!
//! specializes at `q = 1` to the class count, and at a primitive `d`-th
//! root of unity to the number of class members fixed by the rotation of
//! order `d`.  The checks here confirm that numerically: against the
//! closed-form fixed counts, against actual enumeration, and against the
//! orbit polynomial `sum_orbits (1 + q^s + q^(2s) + ...)`, which must be
//! congruent to `X(q)` modulo `q^(n+1) - 1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::poly::{cyclotomic, q_binom, q_multinom, q_int, IntPoly};
use crate::count;
use crate::diagram::Diagram;
use crate::enumerate;
use crate::error::{Error, Result};

/// Remainder of `poly` modulo the `order`-th cyclotomic polynomial: the
/// canonical representative of the polynomial's value at a primitive
/// `order`-th root of unity.
pub fn root_residue(poly: &IntPoly, order: u32) -> IntPoly {
    poly.div_rem(&cyclotomic(order)).1
}

/// Value of `poly` at a primitive `order`-th root of unity, when that value
/// is a rational integer.
pub fn eval_at_primitive_root(poly: &IntPoly, order: u32) -> Result<BigInt> {
    let residue = root_residue(poly, order);
    if !residue.is_constant() {
        return Err(Error::NonConstantResidue {
            order,
            residue_degree: residue.degree().unwrap_or(0),
        });
    }
    Ok(residue.coefficient(0))
}

/// The Gaussian binomial at a primitive `order`-th root of unity, built
/// from the base-`order` digit splitting: the ordinary binomial of the
/// quotients times the Gaussian binomial of the remainders, as a residue
/// modulo the cyclotomic polynomial.
pub fn q_lucas_binom_at_root(a: i64, b: i64, order: u32) -> IntPoly {
    let d = order as i64;
    let outer = count::binom_ext(a.div_euclid(d), b.div_euclid(d));
    let inner = q_binom(a.rem_euclid(d), b.rem_euclid(d));
    root_residue(&inner.scale(&outer), order)
}

/// The class polynomial: specializes to the class count at `q = 1` and to
/// rotation-fixed counts at roots of unity.
pub fn csp_polynomial(n: i64, triangles: i64, cliques: i64, empty_cells: i64) -> Result<IntPoly> {
    count::validate_class(n, triangles, cliques, empty_cells)?;
    let head = q_multinom(&[n - 1, triangles, cliques, empty_cells])?;
    let tail = q_binom(
        n - 2 - triangles - cliques - empty_cells,
        cliques + empty_cells - 1,
    );
    Ok(head.mul(&tail).exact_div(&q_int(n as u64)))
}

/// One rotation orbit: its smallest member, its size, and the order of the
/// stabilizer of each member.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitInfo {
    pub representative: Diagram,
    pub size: u32,
    pub stabilizer: u32,
}

/// Rotation orbit decomposition of a set of diagrams.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub n_vertices: u32,
    pub orbits: Vec<OrbitInfo>,
}

impl OrbitReport {
    pub fn orbit_count(&self) -> u64 {
        self.orbits.len() as u64
    }

    pub fn total(&self) -> u64 {
        self.orbits.iter().map(|o| o.size as u64).sum()
    }

    /// Orbit sizes, largest first.
    pub fn size_multiset(&self) -> Vec<u32> {
        let mut sizes: Vec<u32> = self.orbits.iter().map(|o| o.size).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// Number of members fixed by the rotation through `steps` vertices: an
    /// orbit contributes its full size when its size divides `steps`.
    pub fn fixed_count(&self, steps: u32) -> u64 {
        self.orbits
            .iter()
            .filter(|o| steps.is_multiple_of(o.size))
            .map(|o| o.size as u64)
            .sum()
    }
}

/// Decomposes `diagrams` into rotation orbits.  The set must be over one
/// polygon, duplicate-free, and closed under rotation.
pub fn orbit_report(n_vertices: u32, diagrams: &[Diagram]) -> Result<OrbitReport> {
    if n_vertices < 2 {
        return Err(Error::PolygonTooSmall(n_vertices));
    }
    let mut pool: BTreeMap<Diagram, bool> = BTreeMap::new();
    for d in diagrams {
        if d.n_vertices() != n_vertices {
            return Err(Error::MixedPolygonSizes {
                expected: n_vertices,
                found: d.n_vertices(),
            });
        }
        if pool.insert(d.clone(), false).is_some() {
            return Err(Error::DuplicateDiagram(d.canonical_encoding()));
        }
    }
    let mut orbits = Vec::new();
    let members: Vec<Diagram> = pool.keys().cloned().collect();
    for seed in members {
        if pool[&seed] {
            continue;
        }
        let mut orbit = vec![seed.clone()];
        let mut cur = seed.rotate(1);
        while cur != seed {
            match pool.get_mut(&cur) {
                Some(visited) => *visited = true,
                None => return Err(Error::NotRotationClosed(cur.canonical_encoding())),
            }
            orbit.push(cur.clone());
            cur = cur.rotate(1);
        }
        // Single steps return to the seed after exactly the orbit size.
        let size = orbit.len() as u32;
        debug_assert_eq!(n_vertices % size, 0);
        let representative = orbit.iter().min().unwrap().clone();
        orbits.push(OrbitInfo {
            representative,
            size,
            stabilizer: n_vertices / size,
        });
    }
    orbits.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(OrbitReport { n_vertices, orbits })
}

/// The orbit polynomial: each orbit of size `s` in an `n`-vertex polygon
/// contributes `1 + q^(n/s) + q^(2n/s) + ... ` up to degree below `n`.  Its
/// coefficient of `q^e` counts the orbits whose stabilizer order divides
/// `e`, and it is congruent to the class polynomial modulo `q^n - 1`.
pub fn rsw_polynomial(report: &OrbitReport) -> IntPoly {
    let n = report.n_vertices as usize;
    let mut coeffs = vec![BigInt::zero(); n];
    for orbit in &report.orbits {
        let step = orbit.stabilizer as usize;
        let mut e = 0;
        while e < n {
            coeffs[e] += 1;
            e += step;
        }
    }
    IntPoly::from_coeffs(coeffs)
}

/// What a sieving check compares root-of-unity values against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CspMode {
    /// Closed-form fixed counts only.
    Formula,
    /// Enumerated fixed counts and the orbit polynomial congruence.
    Enumeration,
    /// Everything.
    Both,
}

/// Check of one rotation order: the polynomial value at a primitive root
/// against the expected fixed counts.  `value` is absent when the residue
/// is not an integer, which itself fails the check.
#[derive(Clone, Debug, Serialize)]
pub struct CspDivisorCheck {
    #[serde(rename = "d")]
    pub order: u32,
    #[serde(rename = "polynomial_value")]
    pub value: Option<String>,
    #[serde(rename = "formula_value", skip_serializing_if = "Option::is_none")]
    pub formula: Option<String>,
    #[serde(rename = "enum_value", skip_serializing_if = "Option::is_none")]
    pub enumerated: Option<String>,
    #[serde(rename = "pass")]
    pub ok: bool,
}

/// Orbit-polynomial side of a sieving check.
#[derive(Clone, Debug, Serialize)]
pub struct RswCheck {
    pub orbit_count: u64,
    pub orbit_sizes: Vec<u32>,
    pub rsw_coeffs: Vec<String>,
    pub congruent: bool,
}

/// Full sieving report for one class, serializable as JSON with all big
/// integers rendered as decimal strings.
#[derive(Clone, Debug, Serialize)]
pub struct CspReport {
    pub n: u32,
    #[serde(rename = "stats")]
    pub class: (u32, u32, u32),
    pub mode: CspMode,
    pub polynomial: Vec<String>,
    pub divisors: Vec<CspDivisorCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rsw: Option<RswCheck>,
    #[serde(rename = "rsw_pass", skip_serializing_if = "Option::is_none")]
    pub rsw_ok: Option<bool>,
    #[serde(rename = "pass")]
    pub ok: bool,
}

fn decimal(v: &BigInt) -> String {
    v.to_string()
}

/// Verifies the sieving statement for one class of the `(n + 1)`-gon.
pub fn csp_verify(n: u32, class: (u32, u32, u32), mode: CspMode) -> Result<CspReport> {
    let (k, l, m) = class;
    let poly = csp_polynomial(n as i64, k as i64, l as i64, m as i64)?;
    let n_vertices = n + 1;

    let orbit_data = if matches!(mode, CspMode::Enumeration | CspMode::Both) {
        let members: Vec<Diagram> = enumerate::enumerate_all(n)?
            .filter(|d| d.stats().map(|s| s.class() == class).unwrap_or(false))
            .collect();
        Some(orbit_report(n_vertices, &members)?)
    } else {
        None
    };

    let mut all_ok = true;
    let mut divisors = Vec::new();
    for d in count::divisors(n_vertices as u64) {
        let order = d as u32;
        let value = eval_at_primitive_root(&poly, order).ok();
        let formula = if matches!(mode, CspMode::Formula | CspMode::Both) {
            let expected = if order == 1 {
                count::count_ptolemy(n as i64, k as i64, l as i64, m as i64)?
            } else {
                count::count_invariant(n as i64, k as i64, l as i64, m as i64, order as i64)?
            };
            Some(expected)
        } else {
            None
        };
        let enumerated = orbit_data
            .as_ref()
            .map(|report| BigInt::from(report.fixed_count(n_vertices / order)));
        let ok = value.is_some()
            && formula.iter().all(|e| value.as_ref() == Some(e))
            && enumerated.iter().all(|e| value.as_ref() == Some(e));
        all_ok &= ok;
        divisors.push(CspDivisorCheck {
            order,
            value: value.as_ref().map(decimal),
            formula: formula.as_ref().map(decimal),
            enumerated: enumerated.as_ref().map(decimal),
            ok,
        });
    }

    let rsw = orbit_data.as_ref().map(|report| {
        let rsw_poly = rsw_polynomial(report);
        let congruent = poly.fold_exponents(n_vertices as usize) == rsw_poly;
        RswCheck {
            orbit_count: report.orbit_count(),
            orbit_sizes: report.size_multiset(),
            rsw_coeffs: rsw_poly.coeffs().iter().map(decimal).collect(),
            congruent,
        }
    });
    if let Some(check) = &rsw {
        all_ok &= check.congruent;
    }

    Ok(CspReport {
        n,
        class,
        mode,
        polynomial: poly.coeffs().iter().map(decimal).collect(),
        divisors,
        rsw_ok: rsw.as_ref().map(|check| check.congruent),
        rsw,
        ok: all_ok,
    })
}

/// Sieving reports for every nonzero class of the `(n + 1)`-gon, in class
/// order; parallel across classes when the `parallel` feature is on.
pub fn csp_verify_all(n: u32, mode: CspMode) -> Result<Vec<CspReport>> {
    let classes = count::nonzero_classes(n as i64)?;
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        classes
            .into_par_iter()
            .map(|class| csp_verify(n, class, mode))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        classes
            .into_iter()
            .map(|class| csp_verify(n, class, mode))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_of(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn residues_and_root_values() {
        // q^2 at a primitive 2nd root is 1
        let q2 = poly_of(&[0, 0, 1]);
        assert_eq!(eval_at_primitive_root(&q2, 2).unwrap(), BigInt::from(1));
        // 1 + q at a primitive 2nd root is 0
        let p = poly_of(&[1, 1]);
        assert_eq!(eval_at_primitive_root(&p, 2).unwrap(), BigInt::zero());
        // [3]_1 = 3
        assert_eq!(
            eval_at_primitive_root(&q_int(3), 1).unwrap(),
            BigInt::from(3)
        );
        // [3 choose 1]_q mod Phi_5 stays quadratic: not an integer value
        let b = q_binom(3, 1);
        assert!(matches!(
            eval_at_primitive_root(&b, 5),
            Err(Error::NonConstantResidue {
                order: 5,
                residue_degree: 2
            })
        ));
    }

    #[test]
    fn lucas_splitting_matches_direct_reduction() {
        for order in 2..=8u32 {
            for a in 0..=20i64 {
                for b in 0..=a {
                    let direct = root_residue(&q_binom(a, b), order);
                    let split = q_lucas_binom_at_root(a, b, order);
                    assert_eq!(direct, split, "a={a} b={b} d={order}");
                }
            }
        }
    }

    #[test]
    fn class_polynomial_specializes_at_one() {
        for n in 1..=8i64 {
            for (k, l, m) in count::nonzero_classes(n).unwrap() {
                let poly = csp_polynomial(n, k as i64, l as i64, m as i64).unwrap();
                let count = count::count_ptolemy(n, k as i64, l as i64, m as i64).unwrap();
                assert_eq!(poly.eval_at_one(), count, "n={n} class=({k},{l},{m})");
            }
        }
    }

    #[test]
    fn hexagon_orbit_structure() {
        let triangulations: Vec<Diagram> = enumerate::enumerate_all(5)
            .unwrap()
            .filter(|d| d.stats().unwrap().class() == (4, 0, 0))
            .collect();
        assert_eq!(triangulations.len(), 14);
        let report = orbit_report(6, &triangulations).unwrap();
        assert_eq!(report.orbit_count(), 4);
        assert_eq!(report.size_multiset(), vec![6, 3, 3, 2]);
        assert_eq!(report.total(), 14);
        assert_eq!(report.fixed_count(6), 14);
        assert_eq!(report.fixed_count(3), 6);
        assert_eq!(report.fixed_count(2), 2);
        assert_eq!(report.fixed_count(1), 0);
    }

    #[test]
    fn orbit_report_rejects_bad_input() {
        let a = Diagram::parse("6:0-3").unwrap();
        assert!(matches!(
            orbit_report(6, &[a.clone(), a.clone()]),
            Err(Error::DuplicateDiagram(_))
        ));
        assert!(matches!(
            orbit_report(6, std::slice::from_ref(&a)),
            Err(Error::NotRotationClosed(_))
        ));
        let b = Diagram::parse("4:0-2").unwrap();
        assert!(matches!(
            orbit_report(6, &[b]),
            Err(Error::MixedPolygonSizes {
                expected: 6,
                found: 4
            })
        ));
    }

    #[test]
    fn sieving_verifies_on_small_polygons() {
        for n in 1..=6u32 {
            for report in csp_verify_all(n, CspMode::Both).unwrap() {
                assert!(report.ok, "n={n} class={:?}: {report:?}", report.class);
                assert!(report.rsw.as_ref().unwrap().congruent);
            }
        }
    }

    #[test]
    fn report_serializes_with_decimal_strings() {
        let report = csp_verify(5, (4, 0, 0), CspMode::Both).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["n"], 5);
        assert_eq!(json["stats"], serde_json::json!([4, 0, 0]));
        assert_eq!(json["mode"], "both");
        assert_eq!(json["divisors"][0]["d"], 1);
        assert_eq!(json["divisors"][0]["polynomial_value"], "14");
        assert_eq!(json["divisors"][0]["formula_value"], "14");
        assert_eq!(json["divisors"][0]["enum_value"], "14");
        assert_eq!(json["divisors"][0]["pass"], true);
        assert_eq!(json["rsw"]["orbit_count"], 4);
        assert_eq!(json["rsw_pass"], true);
        assert_eq!(json["pass"], true);
        assert!(report.ok);
    }
}
