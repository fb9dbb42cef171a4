//! Truncated multivariate power series with exact integer coefficients, and
//! the generating functions they are here for.
//!
//! A [`Series`] is truncated in the polygon variable `z` only; the class
//! variables `x` (triangles), `y1` (cliques) and `y2` (empty cells) are
//! carried exactly.  The diagram generating function satisfies
//!
//! ```text
//! P = z + x P^2 + (y1 + y2) P^3 / (1 - P)
//! ```
//!
//! by splitting off the region glued to the base edge, and is computed by
//! fixed-point iteration, one `z`-degree gained per round.  The analogous
//! series for rotation-fixed diagrams is assembled in [`invariant_gf`] from
//! a pointed, exponent-scaled copy of `P`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Monomial exponents `z^z x^x y1^y1 y2^y2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Expo {
    pub z: u32,
    pub x: u32,
    pub y1: u32,
    pub y2: u32,
}

impl Expo {
    pub fn class(&self) -> (u32, u32, u32) {
        (self.x, self.y1, self.y2)
    }
}

/// Polynomial in `x, y1, y2` and power series in `z`, truncated after
/// `z^trunc`.  All stored coefficients are nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    trunc: u32,
    terms: BTreeMap<Expo, BigInt>,
}

impl Series {
    pub fn zero(trunc: u32) -> Series {
        Series {
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(trunc: u32) -> Series {
        Series::monomial(
            Expo {
                z: 0,
                x: 0,
                y1: 0,
                y2: 0,
            },
            BigInt::one(),
            trunc,
        )
    }

    pub fn monomial(expo: Expo, coeff: BigInt, trunc: u32) -> Series {
        let mut terms = BTreeMap::new();
        if expo.z <= trunc && !coeff.is_zero() {
            terms.insert(expo, coeff);
        }
        Series { trunc, terms }
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, expo: Expo) -> BigInt {
        self.terms.get(&expo).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The `z^degree` slice, keyed by `(x, y1, y2)` exponents.
    pub fn z_slice(&self, degree: u32) -> BTreeMap<(u32, u32, u32), BigInt> {
        self.terms
            .iter()
            .filter(|(e, _)| e.z == degree)
            .map(|(e, c)| (e.class(), c.clone()))
            .collect()
    }

    pub fn add(&self, other: &Series) -> Series {
        let trunc = self.trunc.min(other.trunc);
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            if e.z > trunc {
                continue;
            }
            let entry = terms.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c: &mut BigInt| !c.is_zero());
        Series { trunc, terms }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let trunc = self.trunc.min(other.trunc);
        let mut terms: BTreeMap<Expo, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            if ea.z > trunc {
                continue;
            }
            for (eb, cb) in &other.terms {
                if ea.z + eb.z > trunc {
                    continue;
                }
                let expo = Expo {
                    z: ea.z + eb.z,
                    x: ea.x + eb.x,
                    y1: ea.y1 + eb.y1,
                    y2: ea.y2 + eb.y2,
                };
                let entry = terms.entry(expo).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c: &mut BigInt| !c.is_zero());
        Series { trunc, terms }
    }

    /// Multiplies the `z^n` part by `n`; the series of pointed objects.
    pub fn pointed(&self) -> Series {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.z > 0)
            .map(|(e, c)| (*e, c * BigInt::from(e.z)))
            .collect();
        Series {
            trunc: self.trunc,
            terms,
        }
    }

    /// Multiplies every exponent (all four variables) by `factor`.
    pub fn scale_exponents(&self, factor: u32) -> Series {
        assert!(factor >= 1);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                (
                    Expo {
                        z: e.z * factor,
                        x: e.x * factor,
                        y1: e.y1 * factor,
                        y2: e.y2 * factor,
                    },
                    c.clone(),
                )
            })
            .collect();
        Series {
            trunc: self.trunc * factor,
            terms,
        }
    }

    pub fn truncated(&self, trunc: u32) -> Series {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.z <= trunc)
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        Series { trunc, terms }
    }

    /// Divides by `z`; every term must have positive `z`-degree.
    pub fn shift_down_z(&self) -> Result<Series> {
        if self.terms.keys().any(|e| e.z == 0) {
            return Err(Error::NonzeroConstantTerm);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (Expo { z: e.z - 1, ..*e }, c.clone()))
            .collect();
        Ok(Series {
            trunc: self.trunc.saturating_sub(1),
            terms,
        })
    }

    /// `1 / (1 - self)` as a geometric series; requires the `z`-constant
    /// part of `self` to vanish, so each refinement gains one `z`-degree.
    pub fn geom_inverse(&self) -> Result<Series> {
        if self.terms.keys().any(|e| e.z == 0) {
            return Err(Error::NonzeroConstantTerm);
        }
        let one = Series::one(self.trunc);
        let mut total = one.clone();
        for _ in 0..self.trunc {
            total = self.mul(&total).add(&one);
        }
        Ok(total)
    }
}

fn variable(z: u32, x: u32, y1: u32, y2: u32, trunc: u32) -> Series {
    Series::monomial(Expo { z, x, y1, y2 }, BigInt::one(), trunc)
}

/// The diagram generating function up to `z^trunc`: the coefficient of
/// `z^n x^k y1^l y2^m` counts the Ptolemy diagrams of the `(n + 1)`-gon with
/// `k` triangles, `l` cliques and `m` empty cells.
pub fn solve_ptolemy_gf(trunc: u32) -> Series {
    let z = variable(1, 0, 0, 0, trunc);
    let x = variable(0, 1, 0, 0, trunc);
    let y = variable(0, 0, 1, 0, trunc).add(&variable(0, 0, 0, 1, trunc));
    let mut p = Series::zero(trunc);
    for _ in 0..trunc {
        let p2 = p.mul(&p);
        let p3 = p2.mul(&p);
        let tail = y
            .mul(&p3)
            .mul(&p.geom_inverse().expect("P has no constant term"));
        p = z.add(&x.mul(&p2)).add(&tail);
    }
    p
}

/// Generating function of the diagrams fixed by a rotation of the given
/// order, up to `z^degree`: the coefficient of `z^n x^k y1^l y2^m` counts
/// the fixed diagrams of the `(n + 1)`-gon in class `(k, l, m)`.  Degrees
/// with `order` not dividing `n + 1` have empty slices.
pub fn invariant_gf(order: u32, degree: u32) -> Result<Series> {
    if order < 2 {
        return Err(Error::InvalidQuery(format!(
            "rotation order {order} must be at least 2"
        )));
    }
    let outer = degree + 1;
    let base = solve_ptolemy_gf(outer / order);
    let scaled = base.scale_exponents(order).truncated(outer);
    let scaled_pointed = base.pointed().scale_exponents(order).truncated(outer);

    let x = variable(0, 1, 0, 0, outer);
    let y = variable(0, 0, 1, 0, outer).add(&variable(0, 0, 0, 1, outer));
    let big_centre = y
        .mul(&scaled_pointed)
        .mul(&scaled.mul(&scaled.geom_inverse()?));
    let full = match order {
        2 => scaled_pointed.add(&big_centre),
        3 => x.mul(&scaled_pointed).add(&big_centre),
        _ => y.mul(&scaled_pointed).mul(&scaled.geom_inverse()?),
    };
    full.shift_down_z()
}
