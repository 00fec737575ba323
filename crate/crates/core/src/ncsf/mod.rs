//! The graded free algebra of noncommutative symmetric functions.
//!
//! Elements are finite linear combinations of basis keys with [`Coefficient`]
//! values. Multiplication always happens in the complete basis `S`, where
//! `S^I S^J = S^{IJ}`. The ribbon basis `R` and the elementary basis `Λ`
//! (written `L` in text and JSON) are views reached by linear basis change:
//!
//! * `S^I = Σ_{D(J) ⊆ D(I)} R_J`
//! * `Λ_n = Σ_{J ⊨ n} (-1)^{n-ℓ(J)} S^J`, and symmetrically for `S_n` in `Λ`.
//!
//! Keys in the `S` basis may contain zero letters; `S_0` is then an extra
//! free generator (the constant term of the general inversion problem).

mod series;
mod specialize;
mod transform;

pub use series::XSeries;
pub use specialize::{commutative_image, specialize_binomial_int, specialize_exp, specialize_one};
pub use transform::{
    alphabet_multiple, alphabet_negate, alphabet_q_interval, apply_endomorphism, monomial_q_eval, s_of_multiple,
    s_of_negative, s_of_q_interval,
};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::BigRational;
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::coeff::Coefficient;
use crate::comp::{compositions, Composition, GeneralizedComposition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    S,
    R,
    #[serde(rename = "L")]
    Lambda,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::S => "S",
            Basis::R => "R",
            Basis::Lambda => "L",
        }
    }

    fn name(self) -> &'static str {
        match self {
            Basis::S => "the complete basis",
            Basis::R => "the ribbon basis",
            Basis::Lambda => "the elementary basis",
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(Basis::S),
            "R" | "r" => Ok(Basis::R),
            "L" | "l" | "Lambda" | "Λ" => Ok(Basis::Lambda),
            other => Err(Error::InvalidInput(format!("unknown basis {other:?}"))),
        }
    }
}

type Terms = BTreeMap<Vec<u32>, Coefficient>;

#[derive(Clone, PartialEq, Eq)]
pub struct NcsfElement {
    basis: Basis,
    terms: Terms,
}

fn push(terms: &mut Terms, key: Vec<u32>, c: &Coefficient) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&key) {
        Some(slot) => {
            *slot += c;
            if slot.is_zero() {
                terms.remove(&key);
            }
        }
        None => {
            terms.insert(key, c.clone());
        }
    }
}

fn sign(exp: usize) -> Coefficient {
    Coefficient::from_int(if exp.is_multiple_of(2) { 1 } else { -1 })
}

/// Expands a key multiplicatively: each letter `n` is replaced by
/// `image(n)` (a list of subkeys with coefficients) and the results are
/// concatenated.
pub(crate) fn expand_concat<F>(key: &[u32], image: &mut F) -> Terms
where
    F: FnMut(u32) -> std::rc::Rc<Vec<(Vec<u32>, Coefficient)>>,
{
    let mut acc: Terms = BTreeMap::from([(Vec::new(), Coefficient::one())]);
    for &part in key {
        let img = image(part);
        let mut next = Terms::new();
        for (k, c) in &acc {
            for (sk, sc) in img.iter() {
                let mut nk = k.clone();
                nk.extend_from_slice(sk);
                push(&mut next, nk, &(c * sc));
            }
        }
        acc = next;
    }
    acc
}

/// `Σ_{J ⊨ n} (-1)^{n-ℓ(J)} X^J`: the expansion of `Λ_n` over `S`, and of
/// `S_n` over `Λ`.
fn signed_row_expansion(n: u32) -> Vec<(Vec<u32>, Coefficient)> {
    compositions(n)
        .into_iter()
        .map(|j| {
            let s = sign(n as usize - j.len());
            (j.into_parts(), s)
        })
        .collect()
}

type Table = std::rc::Rc<Vec<(Vec<u32>, Coefficient)>>;

fn cached<F>(f: F) -> impl FnMut(u32) -> Table
where
    F: Fn(u32) -> Vec<(Vec<u32>, Coefficient)>,
{
    let mut cache: HashMap<u32, Table> = HashMap::new();
    move |n| cache.entry(n).or_insert_with(|| std::rc::Rc::new(f(n))).clone()
}

impl NcsfElement {
    pub fn zero(basis: Basis) -> Self {
        NcsfElement {
            basis,
            terms: Terms::new(),
        }
    }

    pub fn one() -> Self {
        Self::scalar(Coefficient::one())
    }

    pub fn scalar(c: Coefficient) -> Self {
        let mut e = Self::zero(Basis::S);
        push(&mut e.terms, Vec::new(), &c);
        e
    }

    /// `c · X^key` in the given basis. Zero letters are only allowed in `S`.
    pub fn term(basis: Basis, key: Vec<u32>, c: Coefficient) -> Result<Self> {
        let mut e = Self::zero(basis);
        e.add_term(key, c)?;
        Ok(e)
    }

    /// `S^key` (zero letters allowed).
    pub fn s(key: &[u32]) -> Self {
        let mut e = Self::zero(Basis::S);
        push(&mut e.terms, key.to_vec(), &Coefficient::one());
        e
    }

    /// `R_I`.
    pub fn ribbon(i: &Composition) -> Self {
        let mut e = Self::zero(Basis::R);
        push(&mut e.terms, i.parts().to_vec(), &Coefficient::one());
        e
    }

    /// `Λ^I`.
    pub fn lambda(i: &Composition) -> Self {
        let mut e = Self::zero(Basis::Lambda);
        push(&mut e.terms, i.parts().to_vec(), &Coefficient::one());
        e
    }

    /// Builds an `S`-basis element from `(key, coefficient)` pairs.
    pub fn from_s_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Coefficient)>,
    {
        let mut e = Self::zero(Basis::S);
        for (k, c) in terms {
            push(&mut e.terms, k, &c);
        }
        e
    }

    pub fn add_term(&mut self, key: Vec<u32>, c: Coefficient) -> Result<()> {
        if self.basis != Basis::S && key.contains(&0) {
            return Err(Error::ZeroLetterKey(key, self.basis.name()));
        }
        push(&mut self.terms, key, &c);
        Ok(())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Coefficient)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn coefficient(&self, key: &[u32]) -> Coefficient {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_zero_letters(&self) -> bool {
        self.terms.keys().any(|k| k.contains(&0))
    }

    pub fn keys(&self) -> impl Iterator<Item = GeneralizedComposition> + '_ {
        self.terms.keys().map(|k| GeneralizedComposition::new(k.clone()))
    }

    /// The common weight of all keys, if there is one (`None` for zero or
    /// inhomogeneous elements).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|k| k.iter().sum::<u32>());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.iter().sum::<u32>()).max()
    }

    /// The homogeneous component of weight `n`.
    pub fn degree_part(&self, n: u32) -> Self {
        NcsfElement {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.iter().sum::<u32>() == n)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coefficients<F: Fn(&Coefficient) -> Coefficient>(&self, f: F) -> Self {
        let mut out = Self::zero(self.basis);
        for (k, c) in &self.terms {
            push(&mut out.terms, k.clone(), &f(c));
        }
        out
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        self.map_coefficients(|v| v * c)
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        self.map_coefficients(|v| v.scale(c))
    }

    pub fn eval_q_one(&self) -> Self {
        self.map_coefficients(Coefficient::eval_q_one)
    }

    pub fn subst_q_inverse(&self) -> Self {
        self.map_coefficients(Coefficient::subst_q_inverse)
    }

    pub fn shift_q(&self, e: i64) -> Self {
        self.map_coefficients(|c| c.shift_q(e))
    }

    /// The `e` with `self = q^e · other`, if there is one.
    pub fn monomial_ratio(&self, other: &NcsfElement) -> Option<i64> {
        let a = self.to_s();
        let b = other.to_s();
        let (k, c) = a.terms.iter().next()?;
        let e = c.monomial_ratio(b.terms.get(k)?)?;
        (b.shift_q(e) == a).then_some(e)
    }

    /// Conversion to the complete basis. Always possible: `R` and `Λ` keys
    /// are zero-free by construction.
    pub fn to_s(&self) -> Self {
        match self.basis {
            Basis::S => self.clone(),
            Basis::R => {
                let mut out = Self::zero(Basis::S);
                for (k, c) in &self.terms {
                    let i = Composition::new(k.clone()).expect("ribbon keys are zero-free");
                    for j in i.coarsenings() {
                        let s = sign(i.len() - j.len());
                        push(&mut out.terms, j.into_parts(), &(c * &s));
                    }
                }
                out
            }
            Basis::Lambda => self.reexpand(Basis::S),
        }
    }

    fn reexpand(&self, target: Basis) -> Self {
        let mut image = cached(signed_row_expansion);
        let mut out = Self::zero(target);
        for (k, c) in &self.terms {
            for (nk, nc) in expand_concat(k, &mut image) {
                push(&mut out.terms, nk, &(&nc * c));
            }
        }
        out
    }

    fn require_zero_free(&self, target: Basis) -> Result<()> {
        match self.terms.keys().find(|k| k.contains(&0)) {
            Some(k) => Err(Error::ZeroLetterKey(k.clone(), target.name())),
            None => Ok(()),
        }
    }

    pub fn to_ribbon(&self) -> Result<Self> {
        if self.basis == Basis::R {
            return Ok(self.clone());
        }
        let s = self.to_s();
        s.require_zero_free(Basis::R)?;
        let mut out = Self::zero(Basis::R);
        for (k, c) in &s.terms {
            let i = Composition::new(k.clone()).expect("checked zero-free");
            for j in i.coarsenings() {
                push(&mut out.terms, j.into_parts(), c);
            }
        }
        Ok(out)
    }

    pub fn to_lambda(&self) -> Result<Self> {
        if self.basis == Basis::Lambda {
            return Ok(self.clone());
        }
        let s = self.to_s();
        s.require_zero_free(Basis::Lambda)?;
        Ok(s.reexpand(Basis::Lambda))
    }

    pub fn to_basis(&self, basis: Basis) -> Result<Self> {
        match basis {
            Basis::S => Ok(self.to_s()),
            Basis::R => self.to_ribbon(),
            Basis::Lambda => self.to_lambda(),
        }
    }

    /// The linear involution `S^I -> S^{I~}`. The result is in the `S` basis.
    pub fn nu(&self) -> Result<Self> {
        let s = self.to_s();
        let mut out = Self::zero(Basis::S);
        for (k, c) in &s.terms {
            let i = Composition::new(k.clone()).map_err(|_| Error::ZeroLetterKey(k.clone(), "conjugation"))?;
            push(&mut out.terms, i.conjugate().into_parts(), c);
        }
        Ok(out)
    }

    /// Product computed in the `S` basis; operands in other bases are
    /// converted first.
    pub fn product(&self, rhs: &NcsfElement) -> NcsfElement {
        let a = self.to_s();
        let b = rhs.to_s();
        let mut out = Self::zero(Basis::S);
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let mut k = Vec::with_capacity(ka.len() + kb.len());
                k.extend_from_slice(ka);
                k.extend_from_slice(kb);
                push(&mut out.terms, k, &(ca * cb));
            }
        }
        out
    }

    /// Like [`NcsfElement::product`] but keeps only the terms of total weight
    /// `<= max_degree`.
    pub fn mul_truncated(&self, rhs: &NcsfElement, max_degree: u32) -> NcsfElement {
        let a = self.to_s();
        let b = rhs.to_s();
        let mut out = Self::zero(Basis::S);
        for (ka, ca) in &a.terms {
            let da: u32 = ka.iter().sum();
            if da > max_degree {
                continue;
            }
            for (kb, cb) in &b.terms {
                if da + kb.iter().sum::<u32>() > max_degree {
                    continue;
                }
                let mut k = Vec::with_capacity(ka.len() + kb.len());
                k.extend_from_slice(ka);
                k.extend_from_slice(kb);
                push(&mut out.terms, k, &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> NcsfElement {
        let mut acc = NcsfElement::one();
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    fn aligned(&self, rhs: &NcsfElement) -> (NcsfElement, NcsfElement) {
        if self.basis == rhs.basis {
            (self.clone(), rhs.clone())
        } else {
            (self.to_s(), rhs.to_s())
        }
    }

    /// Terms in display order: by weight, then length, then reverse
    /// lexicographic order (`S^4, S^31, S^22, S^13, S^211, ...`).
    pub fn display_order(&self) -> Vec<(&[u32], &Coefficient)> {
        let mut v: Vec<(&[u32], &Coefficient)> = self.terms().collect();
        v.sort_by(|(a, _), (b, _)| {
            let wa: u32 = a.iter().sum();
            let wb: u32 = b.iter().sum();
            wa.cmp(&wb).then(a.len().cmp(&b.len())).then(b.cmp(a))
        });
        v
    }
}

impl fmt::Debug for NcsfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Text form such as `S[2] + q·S[1,1]` or `(1 + q)·R[2,1] - 3·L[1,2]`.
impl fmt::Display for NcsfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, c)) in self.display_order().into_iter().enumerate() {
            let (negative, mag) = match c.as_constant() {
                Some(v) if v < num_traits::Zero::zero() => (true, -c),
                _ if c.len() == 1 && c.terms().all(|(_, _, v)| *v < num_traits::Zero::zero()) => (true, -c),
                _ => (false, c.clone()),
            };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let key_text = if key.is_empty() {
                None
            } else {
                let parts: Vec<String> = key.iter().map(|p| p.to_string()).collect();
                Some(format!("{}[{}]", self.basis.symbol(), parts.join(",")))
            };
            let coeff_text = if mag.len() > 1 {
                format!("({mag})")
            } else {
                mag.to_string()
            };
            match key_text {
                None => write!(f, "{coeff_text}")?,
                Some(k) if mag.is_one() => write!(f, "{k}")?,
                Some(k) => write!(f, "{coeff_text}·{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &NcsfElement {
    type Output = NcsfElement;
    fn add(self, rhs: &NcsfElement) -> NcsfElement {
        let (mut a, b) = self.aligned(rhs);
        for (k, c) in &b.terms {
            push(&mut a.terms, k.clone(), c);
        }
        a
    }
}

impl Add for NcsfElement {
    type Output = NcsfElement;
    fn add(self, rhs: NcsfElement) -> NcsfElement {
        &self + &rhs
    }
}

impl AddAssign<&NcsfElement> for NcsfElement {
    fn add_assign(&mut self, rhs: &NcsfElement) {
        if self.basis == rhs.basis {
            for (k, c) in &rhs.terms {
                push(&mut self.terms, k.clone(), c);
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl Neg for &NcsfElement {
    type Output = NcsfElement;
    fn neg(self) -> NcsfElement {
        self.map_coefficients(|c| -c)
    }
}

impl Neg for NcsfElement {
    type Output = NcsfElement;
    fn neg(self) -> NcsfElement {
        -&self
    }
}

impl Sub for &NcsfElement {
    type Output = NcsfElement;
    fn sub(self, rhs: &NcsfElement) -> NcsfElement {
        self + &(-rhs)
    }
}

impl Sub for NcsfElement {
    type Output = NcsfElement;
    fn sub(self, rhs: NcsfElement) -> NcsfElement {
        &self - &rhs
    }
}

impl SubAssign<&NcsfElement> for NcsfElement {
    fn sub_assign(&mut self, rhs: &NcsfElement) {
        *self += &(-rhs);
    }
}

impl Mul for &NcsfElement {
    type Output = NcsfElement;
    fn mul(self, rhs: &NcsfElement) -> NcsfElement {
        NcsfElement::product(self, rhs)
    }
}

impl Mul for NcsfElement {
    type Output = NcsfElement;
    fn mul(self, rhs: NcsfElement) -> NcsfElement {
        NcsfElement::product(&self, &rhs)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    key: Vec<u32>,
    coeff: Coefficient,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    basis: Basis,
    terms: Vec<TermRepr>,
}

impl Serialize for NcsfElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| TermRepr {
                    key: k.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NcsfElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ElementRepr::deserialize(deserializer)?;
        let mut e = NcsfElement::zero(repr.basis);
        for t in repr.terms {
            e.add_term(t.key, t.coeff).map_err(de::Error::custom)?;
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp::compositions;
    use proptest::prelude::*;

    fn c(p: &[u32]) -> Composition {
        Composition::from_slice(p)
    }

    fn q(exps: &[i64]) -> Coefficient {
        Coefficient::q_poly(exps)
    }

    fn g3() -> NcsfElement {
        NcsfElement::from_s_terms([
            (vec![3], q(&[0])),
            (vec![2, 1], q(&[1, 2])),
            (vec![1, 2], q(&[2])),
            (vec![1, 1, 1], q(&[3])),
        ])
    }

    #[test]
    fn products_concatenate() {
        assert_eq!(NcsfElement::s(&[1]) * NcsfElement::s(&[1]), NcsfElement::s(&[1, 1]));
        let lhs = (NcsfElement::s(&[2]) + NcsfElement::s(&[1, 1])) * NcsfElement::s(&[1]);
        assert_eq!(lhs, NcsfElement::s(&[2, 1]) + NcsfElement::s(&[1, 1, 1]));
        assert_eq!(
            NcsfElement::s(&[2, 0, 0]) * NcsfElement::s(&[0]),
            NcsfElement::s(&[2, 0, 0, 0])
        );
    }

    #[test]
    fn ribbon_expansions() {
        let r = NcsfElement::s(&[1, 1]).to_ribbon().unwrap();
        assert_eq!(r, NcsfElement::ribbon(&c(&[1, 1])) + NcsfElement::ribbon(&c(&[2])));

        let g3r = g3().to_ribbon().unwrap();
        assert_eq!(g3r.coefficient(&[3]), q(&[0, 1, 2, 2, 3]));
        assert_eq!(g3r.coefficient(&[2, 1]), q(&[1, 2, 3]));
        assert_eq!(g3r.coefficient(&[1, 2]), q(&[2, 3]));
        assert_eq!(g3r.coefficient(&[1, 1, 1]), q(&[3]));
        assert_eq!(g3r.len(), 4);
    }

    #[test]
    fn lambda_two() {
        let l2 = NcsfElement::lambda(&c(&[2])).to_s();
        assert_eq!(l2, NcsfElement::s(&[1, 1]) - NcsfElement::s(&[2]));
    }

    #[test]
    fn zero_letters_do_not_convert() {
        assert!(matches!(
            NcsfElement::s(&[1, 0]).to_ribbon(),
            Err(Error::ZeroLetterKey(_, _))
        ));
        assert!(NcsfElement::s(&[1, 0]).to_lambda().is_err());
        assert!(NcsfElement::s(&[0]).nu().is_err());
        assert!(NcsfElement::term(Basis::R, vec![1, 0], Coefficient::one()).is_err());
    }

    #[test]
    fn nu_examples() {
        assert_eq!(NcsfElement::s(&[3]).nu().unwrap(), NcsfElement::s(&[1, 1, 1]));
        assert_eq!(NcsfElement::s(&[2, 1]).nu().unwrap(), NcsfElement::s(&[2, 1]));
        let g2 = NcsfElement::s(&[2]) + NcsfElement::s(&[1, 1]);
        assert_eq!(g2.nu().unwrap(), g2);
    }

    #[test]
    fn ribbon_product_rule() {
        for total in 2..=7u32 {
            for a in 1..total {
                for i in compositions(a) {
                    for j in compositions(total - a) {
                        let prod = NcsfElement::ribbon(&i).to_s() * NcsfElement::ribbon(&j).to_s();
                        let expected = NcsfElement::ribbon(&i.concat(&j)) + NcsfElement::ribbon(&i.near_concat(&j));
                        assert_eq!(prod.to_ribbon().unwrap(), expected, "{i} {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn nu_on_ribbons() {
        for n in 1..=7 {
            for i in compositions(n) {
                let lhs = NcsfElement::ribbon(&i).to_s().nu().unwrap();
                let rhs = NcsfElement::lambda(&i.conjugate()).to_s().scale(&sign(i.len() - 1));
                assert_eq!(lhs, rhs, "{i}");
            }
        }
    }

    #[test]
    fn text_rendering() {
        let g2 = NcsfElement::from_s_terms([(vec![2], q(&[0])), (vec![1, 1], q(&[1]))]);
        assert_eq!(g2.to_string(), "S[2] + q·S[1,1]");
        assert_eq!(NcsfElement::one().to_string(), "1");
        assert_eq!(g3().to_string(), "S[3] + (q + q^2)·S[2,1] + q^2·S[1,2] + q^3·S[1,1,1]");
        let l = NcsfElement::lambda(&c(&[2])).to_s();
        assert_eq!(l.to_string(), "-S[2] + S[1,1]");
        assert_eq!(NcsfElement::zero(Basis::R).to_string(), "0");
    }

    #[test]
    fn json_schema() {
        let g2 = NcsfElement::from_s_terms([(vec![2], q(&[0])), (vec![1, 1], q(&[1]))]);
        let s = serde_json::to_string(&g2).unwrap();
        assert_eq!(
            s,
            r#"{"basis":"S","terms":[{"key":[1,1],"coeff":[[1,0,"1","1"]]},{"key":[2],"coeff":[[0,0,"1","1"]]}]}"#
        );
        let back: NcsfElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g2);
        let bad = r#"{"basis":"R","terms":[{"key":[1,0],"coeff":[[0,0,"1","1"]]}]}"#;
        assert!(serde_json::from_str::<NcsfElement>(bad).is_err());
    }

    fn arb_element(max_degree: u32) -> impl Strategy<Value = NcsfElement> {
        prop::collection::vec((prop::collection::vec(1u32..=3, 0..4), -2i64..=2, -3i64..=3), 0..6).prop_map(move |v| {
            let mut e = NcsfElement::zero(Basis::S);
            for (key, qe, val) in v {
                if key.iter().sum::<u32>() <= max_degree {
                    e.add_term(key, Coefficient::monomial(qe, 0, crate::coeff::int(val)))
                        .unwrap();
                }
            }
            e
        })
    }

    proptest! {
        #[test]
        fn basis_changes_round_trip(a in arb_element(8)) {
            prop_assert_eq!(a.to_ribbon().unwrap().to_s(), a.clone());
            prop_assert_eq!(a.to_lambda().unwrap().to_s(), a.clone());
            let l = a.to_lambda().unwrap();
            prop_assert_eq!(l.to_s().to_lambda().unwrap(), l);
        }

        #[test]
        fn nu_is_an_involution(a in arb_element(8)) {
            prop_assert_eq!(a.nu().unwrap().nu().unwrap(), a);
        }
    }
}
