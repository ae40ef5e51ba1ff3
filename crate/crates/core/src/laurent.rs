//! Exact integer polynomials in one indeterminate `t`.
//!
//! Fixed-point contributions are rational functions whose denominators are
//! products of `(1 - t^a)`. Factors with a negative exponent are rewritten
//! with `1/(1 - t^-a) = -t^a/(1 - t^a)` by [`normalize_contribution`], so
//! every polynomial stored here has nonnegative exponents.
//!
//! Coefficients are arbitrary precision: verdicts downstream are exact
//! equalities and must never be decided modulo an overflow.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sparse polynomial with big-integer coefficients.
///
/// Invariants: no stored coefficient is zero, every exponent is `>= 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<u64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^exponent`.
    pub fn monomial(c: impl Into<BigInt>, exponent: u64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense constructor: `coeffs[k]` is the coefficient of `t^k`.
    pub fn from_dense(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, &c)| (k as u64, c)))
    }

    /// `1 - t^a`.
    pub fn one_minus_power(a: u64) -> Self {
        Self::from_terms([(0, BigInt::one()), (a, -BigInt::one())])
    }

    fn add_term(&mut self, exponent: u64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: u64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Highest exponent with a nonzero coefficient, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// The constant value if the polynomial has degree `<= 0`.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.degree() {
            None => Some(BigInt::zero()),
            Some(0) => Some(self.constant_term()),
            Some(_) => None,
        }
    }

    /// Multiplies by `t^by`.
    pub fn shift(&self, by: u64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Drops every term of degree above `order`.
    pub fn truncate(&self, order: u64) -> Self {
        Self {
            terms: self.terms.range(..=order).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let unit = mag.is_one();
            match *e {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("t")?,
                1 => write!(f, "{mag}*t")?,
                _ if unit => write!(f, "t^{e}")?,
                _ => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Overall sign of a normalized contribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^count`.
    pub fn from_parity(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn apply(self, p: &LaurentPoly) -> LaurentPoly {
        match self {
            Sign::Plus => p.clone(),
            Sign::Minus => -p,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// A product `prod (1 - t^a)` kept in factored form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactoredDenominator {
    factors: Vec<u64>,
}

impl FactoredDenominator {
    /// Factors are stored sorted; every factor must be positive.
    pub fn new<I: IntoIterator<Item = i64>>(factors: I) -> Result<Self> {
        let mut out = Vec::new();
        for a in factors {
            if a <= 0 {
                return Err(Error::NonPositiveFactor(a));
            }
            out.push(a as u64);
        }
        out.sort_unstable();
        Ok(Self { factors: out })
    }

    pub fn from_positive(mut factors: Vec<u64>) -> Self {
        assert!(factors.iter().all(|&a| a > 0), "denominator factor must be positive");
        factors.sort_unstable();
        Self { factors }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// Degree of the expanded product.
    pub fn degree(&self) -> u64 {
        self.factors.iter().sum()
    }

    pub fn expand(&self) -> LaurentPoly {
        self.factors
            .iter()
            .fold(LaurentPoly::one(), |acc, &a| &acc * &LaurentPoly::one_minus_power(a))
    }
}

/// `1 / prod (1 - t^x)` rewritten as `sign * t^shift / prod (1 - t^|x|)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedContribution {
    pub sign: Sign,
    pub shift: u64,
    pub denom: FactoredDenominator,
}

/// Moves every negative exponent out of the denominator.
pub fn normalize_contribution(exponents: &[i64]) -> Result<NormalizedContribution> {
    let mut negatives = 0;
    let mut shift = 0u64;
    let mut factors = Vec::with_capacity(exponents.len());
    for &x in exponents {
        if x == 0 {
            return Err(Error::ZeroExponent);
        }
        if x < 0 {
            negatives += 1;
            shift += x.unsigned_abs();
        }
        factors.push(x.unsigned_abs());
    }
    Ok(NormalizedContribution {
        sign: Sign::from_parity(negatives),
        shift,
        denom: FactoredDenominator::from_positive(factors),
    })
}

/// Power series of `sign * t^shift * numer / denom`, truncated after degree `order`.
///
/// Each `1/(1 - t^a)` is applied as the geometric series `sum_j t^(j a)`,
/// which on a dense coefficient vector is the running sum `c[k] += c[k - a]`.
pub fn series_expand(
    sign: Sign,
    shift: u64,
    numer: &LaurentPoly,
    denom: &FactoredDenominator,
    order: u64,
) -> LaurentPoly {
    let len = order as usize + 1;
    let mut dense = vec![BigInt::zero(); len];
    for (e, c) in numer.terms() {
        let at = e + shift;
        if at <= order {
            dense[at as usize] += c;
        }
    }
    for &a in denom.factors() {
        let a = a as usize;
        for k in a..len {
            let prev = dense[k - a].clone();
            dense[k] += prev;
        }
    }
    let series = LaurentPoly::from_terms(dense.into_iter().enumerate().map(|(k, c)| (k as u64, c)));
    sign.apply(&series)
}
