//! Exact coefficients.
//!
//! [`Coefficient`] is an element of `Q[x][q, 1/q]`: a finite map from
//! `(q exponent, x exponent)` to a rational. The `x` slot also carries the
//! auxiliary variables `t` and `z` of the scalar specializations; the two
//! never occur in the same computation.
//!
//! [`QSeriesTrunc`] is a truncated Laurent series in `q` with an explicit
//! precision bound, used where denominators `(q)_n` appear.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `binom(n, k)` for any integer `n` (falling-factorial definition).
pub fn binomial_int(n: &BigInt, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

type Exponents = (i64, u32);

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Coefficient {
    terms: BTreeMap<Exponents, Rational>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn monomial(q_exp: i64, x_exp: u32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((q_exp, x_exp), c);
        }
        Coefficient { terms }
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(e, 0, Rational::one())
    }

    pub fn x_pow(e: u32) -> Self {
        Self::monomial(0, e, Rational::one())
    }

    pub fn x() -> Self {
        Self::x_pow(1)
    }

    /// Sum of `q^e` over the listed exponents; repeats add up, so
    /// `q_poly(&[0, 2, 2])` is `1 + 2q^2`.
    pub fn q_poly(exponents: &[i64]) -> Self {
        let mut c = Coefficient::zero();
        for &e in exponents {
            c.add_term(e, 0, Rational::one());
        }
        c
    }

    /// Polynomial in `x` from ascending rational coefficients.
    pub fn x_poly(coeffs: &[Rational]) -> Self {
        let mut c = Coefficient::zero();
        for (e, v) in coeffs.iter().enumerate() {
            c.add_term(0, e as u32, v.clone());
        }
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// Terms sorted by `(q exponent, x exponent)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u32, &Rational)> {
        self.terms.iter().map(|(&(q, x), c)| (q, x, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, q_exp: i64, x_exp: u32) -> Rational {
        self.terms.get(&(q_exp, x_exp)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, q_exp: i64, x_exp: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((q_exp, x_exp)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(q_exp, x_exp));
        }
    }

    /// The constant value if this coefficient involves neither `q` nor `x`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Coefficient::zero();
        }
        Coefficient {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Multiplication by `q^e`.
    pub fn shift_q(&self, e: i64) -> Self {
        Coefficient {
            terms: self.terms.iter().map(|(&(q, x), v)| ((q + e, x), v.clone())).collect(),
        }
    }

    /// `q -> 1/q`.
    pub fn subst_q_inverse(&self) -> Self {
        Coefficient {
            terms: self.terms.iter().map(|(&(q, x), v)| ((-q, x), v.clone())).collect(),
        }
    }

    /// `q -> 1`; the result is a polynomial in `x`.
    pub fn eval_q_one(&self) -> Self {
        let mut out = Coefficient::zero();
        for (&(_, x), v) in &self.terms {
            out.add_term(0, x, v.clone());
        }
        out
    }

    /// `x -> value`; the result is a Laurent polynomial in `q`.
    pub fn eval_x(&self, value: &Rational) -> Self {
        let mut out = Coefficient::zero();
        for (&(q, x), v) in &self.terms {
            out.add_term(q, 0, v * num_traits::pow(value.clone(), x as usize));
        }
        out
    }

    /// Drops every term of `x` degree `>= order`.
    pub fn truncate_x(&self, order: u32) -> Self {
        Coefficient {
            terms: self
                .terms
                .iter()
                .filter(|(&(_, x), _)| x < order)
                .map(|(&k, v)| (k, v.clone()))
                .collect(),
        }
    }

    /// Coefficient of `x^e` as a Laurent polynomial in `q`.
    pub fn x_coefficient(&self, e: u32) -> Self {
        Coefficient {
            terms: self
                .terms
                .iter()
                .filter(|(&(_, x), _)| x == e)
                .map(|(&(q, _), v)| ((q, 0), v.clone()))
                .collect(),
        }
    }

    pub fn max_x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, x)| x).max()
    }

    pub fn q_range(&self) -> Option<(i64, i64)> {
        let min = self.terms.keys().map(|&(q, _)| q).min()?;
        let max = self.terms.keys().map(|&(q, _)| q).max()?;
        Some((min, max))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Coefficient::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// If `self = q^e * other` for a single integer `e`, returns `e`.
    pub fn monomial_ratio(&self, other: &Coefficient) -> Option<i64> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        let (&(qa, _), _) = self.terms.iter().next()?;
        let (&(qb, _), _) = other.terms.iter().next()?;
        let e = qa - qb;
        (other.shift_q(e) == *self).then_some(e)
    }

    /// `binom(x + shift, m)` as a polynomial in `x`.
    pub fn binomial_shifted(shift: i64, m: u32) -> Self {
        let mut acc = Coefficient::one();
        for i in 0..m {
            let factor = &Coefficient::x() + &Coefficient::from_int(shift - i as i64);
            acc = &acc * &factor;
        }
        let den = factorial(m as u64);
        acc.scale(&Rational::new(BigInt::one(), BigInt::from(den)))
    }

    /// `binom(x, m) = x(x-1)...(x-m+1)/m!`.
    pub fn binomial_poly(m: u32) -> Self {
        Self::binomial_shifted(0, m)
    }

    /// `x(x+1)...(x+k-1)/k!`, the coefficient of `t^k` in `(1-t)^{-x}`.
    pub fn rising_poly(k: u32) -> Self {
        Self::binomial_shifted(k as i64 - 1, k)
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_monomial(q: i64, x: u32) -> String {
    let mut s = String::new();
    match q {
        0 => {}
        1 => s.push('q'),
        e => s.push_str(&format!("q^{e}")),
    }
    match x {
        0 => {}
        1 => s.push('x'),
        e => s.push_str(&format!("x^{e}")),
    }
    s
}

/// Canonical text: terms ordered by `x` exponent then `q` exponent, e.g.
/// `1 + q + 2q^2`, `(1/2)x + (1/2)x^2`.
impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&Exponents, &Rational)> = self.terms.iter().collect();
        ordered.sort_by_key(|(&(q, x), _)| (x, q));
        for (i, (&(q, x), c)) in ordered.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let mono = fmt_monomial(q, x);
            let value = if abs.is_integer() {
                abs.to_integer().to_string()
            } else {
                format!("({}/{})", abs.numer(), abs.denom())
            };
            if mono.is_empty() {
                write!(f, "{}", value.trim_start_matches('(').trim_end_matches(')'))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{value}{mono}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(mut self, rhs: Coefficient) -> Coefficient {
        self += &rhs;
        self
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        for (&(q, x), c) in &rhs.terms {
            self.add_term(q, x, c.clone());
        }
    }
}

impl SubAssign<&Coefficient> for Coefficient {
    fn sub_assign(&mut self, rhs: &Coefficient) {
        for (&(q, x), c) in &rhs.terms {
            self.add_term(q, x, -c.clone());
        }
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;
    fn sub(mut self, rhs: Coefficient) -> Coefficient {
        self -= &rhs;
        self
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            terms: self.terms.iter().map(|(&k, v)| (k, -v.clone())).collect(),
        }
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        let mut out = Coefficient::zero();
        for (&(qa, xa), a) in &self.terms {
            for (&(qb, xb), b) in &rhs.terms {
                out.add_term(qa + qb, xa + xb, a * b);
            }
        }
        out
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        &self * &rhs
    }
}

impl Serialize for Coefficient {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (&(q, x), c) in &self.terms {
            seq.serialize_element(&(q, x, c.numer().to_string(), c.denom().to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Coefficient {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(i64, u32, String, String)> = Vec::deserialize(deserializer)?;
        let mut out = Coefficient::zero();
        for (q, x, num, den) in raw {
            let num: BigInt = num.parse().map_err(de::Error::custom)?;
            let den: BigInt = den.parse().map_err(de::Error::custom)?;
            if den.is_zero() {
                return Err(de::Error::custom("zero denominator"));
            }
            out.add_term(q, x, Rational::new(num, den));
        }
        Ok(out)
    }
}

/// A Laurent series in `q` known exactly below the exponent `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeriesTrunc {
    order: i64,
    coeffs: BTreeMap<i64, Rational>,
}

impl QSeriesTrunc {
    pub fn zero(order: i64) -> Self {
        QSeriesTrunc {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(0, Rational::one(), order)
    }

    pub fn monomial(e: i64, c: Rational, order: i64) -> Self {
        let mut s = Self::zero(order);
        s.add_term(e, c);
        s
    }

    /// Truncates a Laurent polynomial in `q` (x must not occur).
    pub fn from_coefficient(c: &Coefficient, order: i64) -> Result<Self> {
        let mut s = Self::zero(order);
        for (q, x, v) in c.terms() {
            if x != 0 {
                return Err(Error::InvalidInput("coefficient depends on x".into()));
            }
            s.add_term(q, v.clone());
        }
        Ok(s)
    }

    fn add_term(&mut self, e: i64, c: Rational) {
        if e >= self.order || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Lowest exponent with a nonzero coefficient, or `order` for zero.
    pub fn valuation(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(self.order)
    }

    pub fn coefficient(&self, e: i64) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn to_coefficient(&self) -> Coefficient {
        let mut c = Coefficient::zero();
        for (&e, v) in &self.coeffs {
            c.add_term(e, 0, v.clone());
        }
        c
    }

    /// Multiplication by `q^e`; the precision bound moves with it.
    pub fn shift(&self, e: i64) -> Self {
        QSeriesTrunc {
            order: self.order + e,
            coeffs: self.coeffs.iter().map(|(&k, v)| (k + e, v.clone())).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.order.min(rhs.order));
        for (&e, c) in self.coeffs.iter().chain(rhs.coeffs.iter()) {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        QSeriesTrunc {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, -v.clone())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = (self.order + rhs.valuation()).min(rhs.order + self.valuation());
        let mut out = Self::zero(order);
        for (&ea, a) in &self.coeffs {
            for (&eb, b) in &rhs.coeffs {
                out.add_term(ea + eb, a * b);
            }
        }
        out
    }

    /// Reciprocal of a series whose lowest term is a nonzero constant.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.valuation() != 0 {
            return Err(Error::NonUnitConstant);
        }
        let c0_inv = self.coefficient(0).recip();
        let mut out = Self::zero(self.order);
        let mut b: Vec<Rational> = vec![c0_inv.clone()];
        for m in 1..self.order.max(0) {
            let mut acc = Rational::zero();
            for (&j, cj) in self.coeffs.range(1..=m) {
                acc += cj * &b[(m - j) as usize];
            }
            b.push(-(acc * &c0_inv));
        }
        for (e, c) in b.into_iter().enumerate() {
            out.add_term(e as i64, c);
        }
        Ok(out)
    }

    /// `1/(q;q)_n` truncated below `order`.
    pub fn inverse_q_pochhammer(n: u32, order: i64) -> Self {
        let mut poch = Self::one(order);
        for i in 1..=n as i64 {
            let factor = Self::one(order).sub(&Self::monomial(i, Rational::one(), order));
            poch = poch.mul(&factor);
        }
        poch.reciprocal().expect("(q)_n has constant term 1")
    }
}

impl fmt::Display for QSeriesTrunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(q^{})", self.to_coefficient(), self.order)
    }
}

pub fn rational_to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}
