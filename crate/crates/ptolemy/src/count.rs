//! Closed-form counts of Ptolemy diagrams by region class.
//!
//! All results are exact [`BigInt`]s. Classes are keyed by the region tally
//! `(triangles, cliques, empty_cells)` on a polygon with `n + 1` vertices; the
//! count of diagrams in a class is
//!
//! ```text
//! (1/n) * multinom(n-1, triangles, cliques, empty_cells)
//!       * binom(n-2-triangles-cliques-empty_cells, cliques+empty_cells-1)
//! ```
//!
//! under the extended binomial conventions of [`binom_ext`]. Counts of
//! diagrams fixed by rotations, by powers of the perpendicular map, and
//! counts of rotation orbits all reduce to variants of this formula. Every
//! division in this module is exact and asserted.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Extended binomial coefficient:
/// 1 if `a == b` (for any integers, including equal negatives),
/// 0 if `b < 0`, `a < b` or `a < 0`, the standard value otherwise.
pub fn binom_ext(a: i64, b: i64) -> BigInt {
    if a == b {
        return BigInt::one();
    }
    if b < 0 || a < b || a < 0 {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut out = BigInt::one();
    for i in 1..=b {
        out *= a - b + i;
        let (q, r) = out.div_rem(&BigInt::from(i));
        debug_assert!(r.is_zero());
        out = q;
    }
    out
}

/// Multinomial coefficient `(sum of parts)! / (product of part!)`.
/// Every part must be non-negative.
pub fn multinom_ext(parts: &[i64]) -> Result<BigInt> {
    let mut out = BigInt::one();
    let mut acc: i64 = 0;
    for &p in parts {
        if p < 0 {
            return Err(Error::NegativePart(p));
        }
        acc += p;
        out *= binom_ext(acc, p);
    }
    Ok(out)
}

pub(crate) fn validate_class(n: i64, triangles: i64, cliques: i64, empty_cells: i64) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidQuery(format!(
            "polygon parameter must be at least 1, got {n}"
        )));
    }
    for (name, v) in [
        ("triangles", triangles),
        ("cliques", cliques),
        ("empty_cells", empty_cells),
    ] {
        if v < 0 {
            return Err(Error::InvalidQuery(format!("{name} must be non-negative, got {v}")));
        }
    }
    Ok(())
}

/// Number of Ptolemy diagrams on a polygon with `n + 1` vertices whose
/// region tally is `(triangles, cliques, empty_cells)`.
pub fn count_ptolemy(n: i64, triangles: i64, cliques: i64, empty_cells: i64) -> Result<BigInt> {
    validate_class(n, triangles, cliques, empty_cells)?;
    let big = cliques + empty_cells;
    let numerator = multinom_ext(&[n - 1, triangles, cliques, empty_cells])?
        * binom_ext(n - 2 - triangles - big, big - 1);
    let (q, r) = numerator.div_rem(&BigInt::from(n));
    assert!(r.is_zero(), "class count numerator not divisible by {n}");
    Ok(q)
}

/// Number of diagrams in a class fixed by the rotation of order `order`,
/// i.e. by relabeling every vertex `i` to `i + (n+1)/order`.
///
/// `order` must be at least 2 and divide `n + 1`.
pub fn count_invariant(
    n: i64,
    triangles: i64,
    cliques: i64,
    empty_cells: i64,
    order: i64,
) -> Result<BigInt> {
    validate_class(n, triangles, cliques, empty_cells)?;
    if order < 2 || (n + 1) % order != 0 {
        return Err(Error::InvalidQuery(format!(
            "rotation order {order} must be at least 2 and divide {}",
            n + 1
        )));
    }
    let d = order;
    let big = cliques + empty_cells;
    if n - 2 - triangles - big < big - 1 {
        return Ok(BigInt::zero());
    }
    let admissible = (d == 2 && triangles % 2 == 0 && cliques % 2 == 0 && empty_cells % 2 == 0)
        || (d == 3 && triangles % 3 == 1 && cliques % 3 == 0 && empty_cells % 3 == 0)
        || (triangles % d == 0 && cliques % d == 0 && empty_cells % d == 1)
        || (triangles % d == 0 && cliques % d == 1 && empty_cells % d == 0);
    if !admissible {
        return Ok(BigInt::zero());
    }
    let sector = (n + 1) / d;
    // in every admissible case at most one region count has a nonzero
    // residue, so the floors split the multinomial's upper index exactly
    debug_assert_eq!(
        (triangles + big).div_euclid(d),
        triangles.div_euclid(d) + cliques.div_euclid(d) + empty_cells.div_euclid(d)
    );
    let head = multinom_ext(&[
        sector - 1,
        triangles.div_euclid(d),
        cliques.div_euclid(d),
        empty_cells.div_euclid(d),
    ])?;
    // floors round toward negative infinity so that -1 maps to -1 and the
    // equal-negative binomial convention can fire for triangulations
    let tail = binom_ext(
        (n - 2 - triangles - big).div_euclid(d),
        (big - 1).div_euclid(d),
    );
    Ok(head * tail)
}

/// Number of diagrams in a class fixed by rotating `power` steps. Reduces to
/// the rotation of order `(n+1) / gcd(n+1, power)`; order 1 means every
/// diagram in the class is fixed.
pub fn count_invariant_by_power(
    n: i64,
    triangles: i64,
    cliques: i64,
    empty_cells: i64,
    power: i64,
) -> Result<BigInt> {
    validate_class(n, triangles, cliques, empty_cells)?;
    if power < 0 {
        return Err(Error::InvalidQuery(format!(
            "rotation power must be non-negative, got {power}"
        )));
    }
    let order = (n + 1) / (n + 1).gcd(&power);
    if order == 1 {
        count_ptolemy(n, triangles, cliques, empty_cells)
    } else {
        count_invariant(n, triangles, cliques, empty_cells, order)
    }
}

/// Number of diagrams in a class fixed by applying the perpendicular map
/// `power` times.
///
/// Even powers are plain rotations. For odd powers the composite is `nc`
/// followed by a rotation, and everything depends on the reduced order
/// `d = (n+1) / gcd(n+1, power)`: a fixed diagram's central region must be a
/// diameter (`d = 2`), a central triangle (`d = 3`), or the map is `nc`
/// itself (`d = 1`, fixing exactly the triangulations). All other odd powers
/// fix nothing.
pub fn count_perp_invariant(
    n: i64,
    triangles: i64,
    cliques: i64,
    empty_cells: i64,
    power: i64,
) -> Result<BigInt> {
    validate_class(n, triangles, cliques, empty_cells)?;
    if power < 1 {
        return Err(Error::InvalidPerpPower);
    }
    if power % 2 == 0 {
        return count_invariant_by_power(n, triangles, cliques, empty_cells, power);
    }
    let order = (n + 1) / (n + 1).gcd(&power);
    match order {
        1 => {
            if cliques == 0 && empty_cells == 0 {
                count_ptolemy(n, triangles, cliques, empty_cells)
            } else {
                Ok(BigInt::zero())
            }
        }
        2 => {
            // a fixed diagram is glued from any diagram on one side of a
            // central diameter and its nc image on the other side
            if triangles % 2 != 0 || cliques != empty_cells {
                return Ok(BigInt::zero());
            }
            let half = (n + 1) / 2;
            let pairs = cliques;
            let head = multinom_ext(&[half - 1, triangles / 2, pairs])?;
            let tail = binom_ext(half - 2 - triangles / 2 - pairs, pairs - 1);
            Ok(BigInt::from(2).pow(pairs as u32) * head * tail)
        }
        3 => {
            if cliques == 0 && empty_cells == 0 {
                count_invariant(n, triangles, 0, 0, 3)
            } else {
                Ok(BigInt::zero())
            }
        }
        _ => Ok(BigInt::zero()),
    }
}

/// Number of rotation orbits of the class, by averaging the fixed-point
/// counts of all `n + 1` rotations.
pub fn count_orbits(n: i64, triangles: i64, cliques: i64, empty_cells: i64) -> Result<BigInt> {
    validate_class(n, triangles, cliques, empty_cells)?;
    let group = n + 1;
    let mut total = BigInt::zero();
    for d in divisors(group as u64) {
        let fixed = if d == 1 {
            count_ptolemy(n, triangles, cliques, empty_cells)?
        } else {
            count_invariant(n, triangles, cliques, empty_cells, d as i64)?
        };
        total += BigInt::from(euler_phi(d)) * fixed;
    }
    let (q, r) = total.div_rem(&BigInt::from(group));
    assert!(r.is_zero(), "orbit total not divisible by group order {group}");
    debug_assert!(!q.is_negative());
    Ok(q)
}

/// Euler's totient, by trial division.
pub fn euler_phi(n: u64) -> u64 {
    debug_assert!(n > 0);
    let mut remaining = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= remaining {
        if remaining.is_multiple_of(p) {
            out -= out / p;
            while remaining.is_multiple_of(p) {
                remaining /= p;
            }
        }
        p += 1;
    }
    if remaining > 1 {
        out -= out / remaining;
    }
    out
}

/// The positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    debug_assert!(n > 0);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Every class `(triangles, cliques, empty_cells)` with a nonzero count on
/// the polygon with `n + 1` vertices, in lexicographic order.
pub fn nonzero_classes(n: i64) -> Result<Vec<(u32, u32, u32)>> {
    if n < 1 {
        return Err(Error::InvalidQuery(format!(
            "polygon parameter must be at least 1, got {n}"
        )));
    }
    let mut out = Vec::new();
    // a nonzero class satisfies triangles + 2*(cliques + empty_cells) <= n - 1
    for triangles in 0..=n {
        for cliques in 0..=n {
            if triangles + 2 * cliques > n - 1 {
                break;
            }
            for empty_cells in 0..=n {
                if count_ptolemy(n, triangles, cliques, empty_cells)?.is_positive() {
                    out.push((triangles as u32, cliques as u32, empty_cells as u32));
                }
                if triangles + 2 * (cliques + empty_cells) > n - 1 {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// A count request: a region class plus at most one symmetry constraint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountQuery {
    /// One less than the number of polygon vertices.
    pub n: i64,
    pub triangles: i64,
    pub cliques: i64,
    pub empty_cells: i64,
    /// Restrict to diagrams fixed by the rotation of this order.
    pub rotation_order: Option<i64>,
    /// Restrict to diagrams fixed by this many applications of perp.
    pub perp_power: Option<i64>,
}

impl CountQuery {
    pub fn evaluate(&self) -> Result<BigInt> {
        let (n, k, c, e) = (self.n, self.triangles, self.cliques, self.empty_cells);
        match (self.rotation_order, self.perp_power) {
            (Some(_), Some(_)) => Err(Error::InvalidQuery(
                "rotation order and perpendicular power are mutually exclusive".into(),
            )),
            (Some(order), None) => count_invariant(n, k, c, e, order),
            (None, Some(power)) => count_perp_invariant(n, k, c, e, power),
            (None, None) => count_ptolemy(n, k, c, e),
        }
    }
}
