//! Dense integer polynomials in one variable `q`, plus the q-analog
//! building blocks: q-integers, q-factorials, Gaussian binomials and
//! multinomials, and cyclotomic polynomials.
//!
//! Divisions are exact by construction (q-factorial quotients, cyclotomic
//! towers, the class polynomial's division by `[n]_q`); they run through
//! [`IntPoly::exact_div`], which asserts a zero remainder rather than
//! rounding anything.

use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::count;
use crate::error::Result;

/// Integer polynomial in `q`, dense, with no trailing zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntPoly {
        IntPoly::from_coeffs(vec![c])
    }

    /// Builds from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> IntPoly {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Low-to-high coefficients, trailing zeros trimmed.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, factor: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(
            divisor.coeffs.last().is_some_and(|c| c.is_one()),
            "divisor must be monic"
        );
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return (IntPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dlen + 1];
        for top in (dlen - 1..rem.len()).rev() {
            let lead = std::mem::take(&mut rem[top]);
            if lead.is_zero() {
                continue;
            }
            let shift = top + 1 - dlen;
            for (i, c) in divisor.coeffs.iter().take(dlen - 1).enumerate() {
                let sub = c * &lead;
                rem[shift + i] -= sub;
            }
            quot[shift] = lead;
        }
        (IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem))
    }

    /// Exact division by a monic divisor; asserts the remainder vanishes.
    pub fn exact_div(&self, divisor: &IntPoly) -> IntPoly {
        let (quot, rem) = self.div_rem(divisor);
        assert!(rem.is_zero(), "polynomial division left remainder {rem:?}");
        quot
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &BigInt) -> BigInt {
        let mut out = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            out = out * at + c;
        }
        out
    }

    /// Sum of coefficients, the value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Reduces exponents modulo `modulus`, i.e. the remainder modulo
    /// `q^modulus - 1`.
    pub fn fold_exponents(&self, modulus: usize) -> IntPoly {
        assert!(modulus >= 1);
        let mut coeffs = vec![BigInt::zero(); modulus.min(self.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i % modulus] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "q")?,
                1 => write!(f, "{c}*q")?,
                _ if c.is_one() => write!(f, "q^{i}")?,
                _ => write!(f, "{c}*q^{i}")?,
            }
        }
        Ok(())
    }
}

/// The q-integer `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_int(n: u64) -> IntPoly {
    IntPoly::from_coeffs(vec![BigInt::one(); n as usize])
}

static Q_FACTORIALS: LazyLock<Mutex<Vec<IntPoly>>> =
    LazyLock::new(|| Mutex::new(vec![IntPoly::one()]));

/// The q-factorial `[n]_q!`.
pub fn q_factorial(n: u64) -> IntPoly {
    let mut cache = Q_FACTORIALS.lock().unwrap();
    while cache.len() <= n as usize {
        let next = cache.last().unwrap().mul(&q_int(cache.len() as u64));
        cache.push(next);
    }
    cache[n as usize].clone()
}

/// Gaussian binomial with the same boundary conventions as the ordinary
/// extended binomial: equal arguments give 1 wherever they sit, and a
/// negative or oversized bottom gives 0.
pub fn q_binom(a: i64, b: i64) -> IntPoly {
    if a == b {
        return IntPoly::one();
    }
    if b < 0 || a < 0 || a < b {
        return IntPoly::zero();
    }
    let denom = q_factorial(b as u64).mul(&q_factorial((a - b) as u64));
    q_factorial(a as u64).exact_div(&denom)
}

/// Gaussian multinomial over the given parts; rejects negative parts.
pub fn q_multinom(parts: &[i64]) -> Result<IntPoly> {
    let mut out = IntPoly::one();
    let mut total: i64 = 0;
    for &p in parts {
        if p < 0 {
            return Err(crate::error::Error::NegativePart(p));
        }
        total += p;
        out = out.mul(&q_binom(total, p));
    }
    Ok(out)
}

static CYCLOTOMICS: LazyLock<Mutex<Vec<Option<IntPoly>>>> =
    LazyLock::new(|| Mutex::new(Vec::new()));

/// The `d`-th cyclotomic polynomial, by dividing `q^d - 1` by the proper
/// cyclotomic divisors.
pub fn cyclotomic(d: u32) -> IntPoly {
    assert!(d >= 1);
    if let Some(hit) = CYCLOTOMICS
        .lock()
        .unwrap()
        .get(d as usize)
        .and_then(|p| p.clone())
    {
        return hit;
    }
    let mut coeffs = vec![BigInt::zero(); d as usize + 1];
    coeffs[0] = BigInt::from(-1);
    coeffs[d as usize] = BigInt::one();
    let mut out = IntPoly::from_coeffs(coeffs);
    for e in count::divisors(d as u64) {
        if (e as u32) < d {
            out = out.exact_div(&cyclotomic(e as u32));
        }
    }
    let mut cache = CYCLOTOMICS.lock().unwrap();
    if cache.len() <= d as usize {
        cache.resize(d as usize + 1, None);
    }
    cache[d as usize] = Some(out.clone());
    out
}
