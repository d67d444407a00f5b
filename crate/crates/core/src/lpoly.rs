//! Polynomials in the Lefschetz class `L`.
//!
//! Two flavors with the same sparse representation:
//!
//! - [`LPolynomial`]: integer coefficients. Every value the crate reports
//!   (point-count characters, alternating multiplicities, ledger ranks)
//!   is one of these, and printing uses the point-count variable `q` so that
//!   `L` evaluates to the field size.
//! - [`RatPoly`]: exact rational coefficients, used inside symmetric series
//!   where `1/z_λ` and `φ(d)/(dk)` denominators are unavoidable. Anything that
//!   is a genuine (virtual) representation gets converted back with
//!   [`RatPoly::to_integer`], which fails loudly instead of rounding.
//!
//! Both carry the Adams operation `L ↦ L^d` since Frobenius traces over a
//! degree-`d` orbit evaluate at `q^d`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sparse integer polynomial in `L`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LPolynomial {
    terms: BTreeMap<u32, BigInt>,
}

impl LPolynomial {
    pub fn zero() -> Self {
        LPolynomial { terms: BTreeMap::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(0, c);
        p
    }

    /// The monomial `c · L^exp`.
    pub fn monomial(exp: u32, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, BigInt::from(c));
        p
    }

    pub fn from_pairs(pairs: &[(u32, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in pairs {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, exp: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    /// Degree in `L`, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coefficient(&self, exp: u32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The constant term as an integer, failing if higher powers of `L` survive.
    pub fn as_integer(&self) -> Result<BigInt> {
        if self.is_constant() {
            Ok(self.coefficient(0))
        } else {
            Err(Error::NonIntegral {
                context: "expected a constant polynomial".into(),
                value: self.to_string(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LPolynomial { terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let c = BigInt::from(c);
        LPolynomial { terms: self.terms.iter().map(|(&e, v)| (e, v * &c)).collect() }
    }

    /// Adams operation `L ↦ L^d`.
    pub fn adams(&self, d: u32) -> Self {
        assert!(d > 0, "adams index must be positive");
        LPolynomial { terms: self.terms.iter().map(|(&e, c)| (e * d, c.clone())).collect() }
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        // Horner on the sparse representation, highest exponent first.
        let mut acc = BigInt::zero();
        let mut prev_exp: Option<u32> = None;
        for (&e, c) in self.terms.iter().rev() {
            if let Some(pe) = prev_exp {
                acc *= q.pow(pe - e);
            }
            acc += c;
            prev_exp = Some(e);
        }
        if let Some(pe) = prev_exp {
            acc *= q.pow(pe);
        }
        acc
    }

    /// Exact division, failing with the remainder if `divisor` does not divide
    /// `self` over `Z[L]`.
    pub fn exact_div(&self, divisor: &Self, context: &str) -> Result<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dlead = divisor.degree().unwrap();
        let dcoeff = divisor.coefficient(dlead);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rlead) = rem.degree() {
            if rlead < dlead {
                break;
            }
            let rcoeff = rem.coefficient(rlead);
            let (q, r) = num_integer::div_rem(rcoeff.clone(), dcoeff.clone());
            if !r.is_zero() {
                return Err(Error::InexactDivision {
                    context: context.into(),
                    remainder: rem.to_string(),
                });
            }
            let shift = rlead - dlead;
            quot.add_term(shift, q.clone());
            for (&e, c) in &divisor.terms {
                rem.add_term(e + shift, -(c * &q));
            }
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision { context: context.into(), remainder: rem.to_string() })
        }
    }

    /// `(exponent, coefficient)` pairs, ascending in the exponent.
    pub fn to_pairs(&self) -> Vec<(u32, BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c.clone())).collect()
    }

    /// Pairs with machine-word coefficients for JSON output.
    pub fn to_i128_pairs(&self) -> Result<Vec<(u32, i128)>> {
        self.terms
            .iter()
            .map(|(&e, c)| {
                i128::try_from(c).map(|v| (e, v)).map_err(|_| Error::InvalidArgument(
                    format!("coefficient {c} does not fit in an i128 for JSON output"),
                ))
            })
            .collect()
    }
}

impl fmt::Display for LPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            if e == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}")?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse polynomial in `L` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RatPoly {
    terms: BTreeMap<u32, BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(0, c);
        p
    }

    pub fn from_integer_poly(p: &LPolynomial) -> Self {
        let mut out = Self::zero();
        for (e, c) in p.to_pairs() {
            out.add_term(e, BigRational::from_integer(c));
        }
        out
    }

    pub fn add_term(&mut self, exp: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms.get(&0).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coefficient(&self, exp: u32) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (&e, c) in &other.terms {
            self.add_term(e, c.clone());
        }
    }

    pub fn neg(&self) -> Self {
        RatPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatPoly { terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect() }
    }

    /// Adams operation `L ↦ L^d`; rational scalars are fixed.
    pub fn adams(&self, d: u32) -> Self {
        assert!(d > 0, "adams index must be positive");
        RatPoly { terms: self.terms.iter().map(|(&e, c)| (e * d, c.clone())).collect() }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Converts to an integer polynomial, reporting `context` on failure.
    pub fn to_integer(&self, context: &str) -> Result<LPolynomial> {
        let mut out = LPolynomial::zero();
        for (&e, c) in &self.terms {
            if !c.is_integer() {
                return Err(Error::NonIntegral {
                    context: context.into(),
                    value: self.to_string(),
                });
            }
            out.add_term(e, c.to_integer());
        }
        Ok(out)
    }

    /// `(exponent, coefficient)` pairs rendered as exact decimal strings
    /// (`"5"`, `"-3"`, `"1/2"`), ascending in the exponent.
    pub fn to_string_pairs(&self) -> Vec<(u32, String)> {
        self.terms.iter().map(|(&e, c)| (e, c.to_string())).collect()
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let unit = abs.is_one();
            if e == 0 {
                write!(f, "{abs}")?;
            } else {
                if !unit {
                    if abs.is_integer() {
                        write!(f, "{abs}")?;
                    } else {
                        write!(f, "({abs})")?;
                    }
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pairs: &[(u32, i64)]) -> LPolynomial {
        LPolynomial::from_pairs(pairs)
    }

    #[test]
    fn display_uses_q_notation() {
        assert_eq!(poly(&[]).to_string(), "0");
        assert_eq!(poly(&[(0, 7)]).to_string(), "7");
        assert_eq!(poly(&[(1, 1)]).to_string(), "q");
        assert_eq!(poly(&[(2, 1), (1, -1)]).to_string(), "q^2-q");
        assert_eq!(poly(&[(3, 2), (1, -3), (0, 4)]).to_string(), "2q^3-3q+4");
        assert_eq!(poly(&[(2, -1), (0, 1)]).to_string(), "-q^2+1");
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = poly(&[(1, 1), (0, 1)]);
        let b = poly(&[(1, 1), (0, -1)]);
        assert_eq!(a.mul(&b), poly(&[(2, 1), (0, -1)]));
        assert_eq!(a.add(&b), poly(&[(1, 2)]));
        assert_eq!(a.sub(&a), LPolynomial::zero());
        let p = poly(&[(3, 1), (1, -1)]);
        assert_eq!(p.eval(&BigInt::from(5)), BigInt::from(120));
        assert_eq!(p.eval(&BigInt::from(-2)), BigInt::from(-6));
        assert_eq!(LPolynomial::zero().eval(&BigInt::from(9)), BigInt::zero());
    }

    #[test]
    fn adams_scales_exponents() {
        let p = poly(&[(2, 3), (0, 5)]);
        assert_eq!(p.adams(3), poly(&[(6, 3), (0, 5)]));
        assert_eq!(p.adams(1), p);
    }

    #[test]
    fn exact_division_by_point_count() {
        // (q^3 - q)(q - 2) divided back out.
        let divisor = poly(&[(3, 1), (1, -1)]);
        let quotient = poly(&[(1, 1), (0, -2)]);
        let product = divisor.mul(&quotient);
        assert_eq!(product.exact_div(&divisor, "test").unwrap(), quotient);
    }

    #[test]
    fn inexact_division_reports_remainder() {
        let divisor = poly(&[(3, 1), (1, -1)]);
        let victim = poly(&[(3, 1), (0, 1)]);
        let err = victim.exact_div(&divisor, "test").unwrap_err();
        assert!(err.to_string().contains("q+1"), "got {err}");
    }

    #[test]
    fn rational_roundtrip_and_integrality() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let mut r = RatPoly::zero();
        r.add_term(1, half.clone());
        assert!(!r.is_integral());
        assert!(r.to_integer("t").is_err());
        r.add_term(1, half);
        assert!(r.is_integral());
        assert_eq!(r.to_integer("t").unwrap(), poly(&[(1, 1)]));
        assert_eq!(r.to_string_pairs(), vec![(1, "1".to_string())]);
    }

    #[test]
    fn i128_pairs_ascend() {
        let p = poly(&[(2, 1), (0, -4)]);
        assert_eq!(p.to_i128_pairs().unwrap(), vec![(0, -4), (2, 1)]);
    }
}
