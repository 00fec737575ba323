//! Specializations to commutative coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::NcsfElement;
use crate::coeff::{binomial_int, factorial, Coefficient};
use crate::error::{Error, Result};

/// `A = 1`: every `S^I` (zero letters included) goes to 1.
pub fn specialize_one(a: &NcsfElement) -> Coefficient {
    a.to_s()
        .terms()
        .fold(Coefficient::zero(), |acc, (_, c)| acc + c.clone())
}

/// The exponential specialization `S_n -> t^n / n!`. The variable `t` is
/// carried in the `x` slot of the coefficient ring.
pub fn specialize_exp(a: &NcsfElement) -> Result<Coefficient> {
    let mut out = Coefficient::zero();
    for (k, c) in a.to_s().terms() {
        if k.contains(&0) {
            return Err(Error::ZeroLetterKey(k.to_vec(), "the exponential specialization"));
        }
        let n: u32 = k.iter().sum();
        let den = k
            .iter()
            .fold(BigInt::from(1), |acc, &p| acc * BigInt::from(factorial(p as u64)));
        let w = Coefficient::monomial(0, n, BigRational::new(BigInt::from(1), den));
        out += &(c * &w);
    }
    Ok(out)
}

/// `A = α` for an integer `α`: `S_n -> binom(α+n-1, n) z^n`, with `z` in the
/// `x` slot. Zero letters go to 1.
pub fn specialize_binomial_int(a: &NcsfElement, alpha: i64) -> Coefficient {
    let mut out = Coefficient::zero();
    for (k, c) in a.to_s().terms() {
        let mut w = BigInt::from(1);
        for &p in k {
            w *= binomial_int(&BigInt::from(alpha + p as i64 - 1), p);
        }
        let n: u32 = k.iter().sum();
        out += &(c * &Coefficient::monomial(0, n, w.into()));
    }
    out
}

/// The commutative image: `S^I -> h_λ` where `λ` sorts `I` decreasingly.
/// Returns the coefficient of each partition.
pub fn commutative_image(a: &NcsfElement) -> Result<BTreeMap<Vec<u32>, Coefficient>> {
    let mut out: BTreeMap<Vec<u32>, Coefficient> = BTreeMap::new();
    for (k, c) in a.to_s().terms() {
        if k.contains(&0) {
            return Err(Error::ZeroLetterKey(k.to_vec(), "the commutative image"));
        }
        let mut lambda = k.to_vec();
        lambda.sort_unstable_by(|x, y| y.cmp(x));
        let slot = out.entry(lambda.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            out.remove(&lambda);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    #[test]
    fn exp_values() {
        let e = NcsfElement::s(&[2, 1]) + NcsfElement::s(&[3]);
        let v = specialize_exp(&e).unwrap();
        assert_eq!(v, Coefficient::monomial(0, 3, rat(1, 2) + rat(1, 6)));
        assert!(specialize_exp(&NcsfElement::s(&[1, 0])).is_err());
    }

    #[test]
    fn one_counts_terms() {
        let e = NcsfElement::s(&[2, 0]) + NcsfElement::s(&[1]) + NcsfElement::s(&[1]);
        assert_eq!(specialize_one(&e), Coefficient::from_int(3));
    }

    #[test]
    fn binomial_values() {
        // S_2 at α = 2 counts multisets of size 2 from 2 letters
        let v = specialize_binomial_int(&NcsfElement::s(&[2]), 2);
        assert_eq!(v, Coefficient::monomial(0, 2, rat(3, 1)));
        // α = -1: S_n -> binom(n-2, n) = 0 for n >= 2, -1 for n = 1
        assert!(specialize_binomial_int(&NcsfElement::s(&[3]), -1).is_zero());
        assert_eq!(
            specialize_binomial_int(&NcsfElement::s(&[1]), -1),
            Coefficient::monomial(0, 1, rat(-1, 1))
        );
    }

    #[test]
    fn commutative_merges_rearrangements() {
        let e = NcsfElement::s(&[1, 2]) + NcsfElement::s(&[2, 1]);
        let img = commutative_image(&e).unwrap();
        assert_eq!(img.len(), 1);
        assert_eq!(img[&vec![2, 1]], Coefficient::from_int(2));
    }
}
