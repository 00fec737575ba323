//! Alphabet transforms: algebra endomorphisms fixed by their value on the
//! generators `S_n`.

use std::rc::Rc;

use num_bigint::BigInt;

use super::{expand_concat, sign, Basis, NcsfElement};
use crate::coeff::{binomial_int, Coefficient};
use crate::comp::compositions;
use crate::error::{Error, Result};

/// `M_I([N]_q) = Σ_{0 <= j_1 < ... < j_l <= N-1} q^{Σ i_k j_k}`.
pub fn monomial_q_eval(i: &[u32], n: u32) -> Coefficient {
    if i.is_empty() {
        return Coefficient::one();
    }
    if i.len() > n as usize {
        return Coefficient::zero();
    }
    let n = n as usize;
    // cur[j]: sum over choices of the parts so far with the last index equal to j
    let mut cur: Vec<Coefficient> = (0..n).map(|j| Coefficient::q_pow(i[0] as i64 * j as i64)).collect();
    for &part in &i[1..] {
        let mut next = vec![Coefficient::zero(); n];
        let mut prefix = Coefficient::zero();
        for j in 0..n {
            if !prefix.is_zero() {
                next[j] = prefix.shift_q(part as i64 * j as i64);
            }
            prefix += &cur[j];
        }
        cur = next;
    }
    cur.iter().fold(Coefficient::zero(), |acc, c| acc + c.clone())
}

fn generator_image<F: Fn(&[u32]) -> Coefficient>(n: u32, coeff: F) -> NcsfElement {
    NcsfElement::from_s_terms(compositions(n).into_iter().map(|i| {
        let c = coeff(i.parts());
        (i.into_parts(), c)
    }))
}

/// `S_n(-A) = Σ_{I ⊨ n} (-1)^{ℓ(I)} S^I`.
pub fn s_of_negative(n: u32) -> NcsfElement {
    generator_image(n, |i| sign(i.len()))
}

/// `S_n(N A) = Σ_{I ⊨ n} binom(N, ℓ(I)) S^I`, for any integer `N`.
pub fn s_of_multiple(n: u32, big_n: i64) -> NcsfElement {
    let nb = BigInt::from(big_n);
    generator_image(n, |i| Coefficient::constant(binomial_int(&nb, i.len() as u32).into()))
}

/// `S_n([N]_q A) = Σ_{I ⊨ n} M_I([N]_q) S^I`.
pub fn s_of_q_interval(n: u32, big_n: u32) -> NcsfElement {
    generator_image(n, |i| monomial_q_eval(i, big_n))
}

/// Applies the algebra endomorphism sending `S_n` to `image(n)` (given in
/// the `S` basis). Images are computed once per degree.
pub fn apply_endomorphism<F>(a: &NcsfElement, image: F) -> Result<NcsfElement>
where
    F: Fn(u32) -> NcsfElement,
{
    let s = a.to_s();
    if let Some((k, _)) = s.terms().find(|(k, _)| k.contains(&0)) {
        return Err(Error::ZeroLetterKey(k.to_vec(), "alphabet transforms"));
    }
    let mut cached = super::cached(|n| image(n).to_s().terms().map(|(k, c)| (k.to_vec(), c.clone())).collect());
    let mut gen = |n: u32| -> Rc<Vec<(Vec<u32>, Coefficient)>> { cached(n) };
    let mut out = NcsfElement::zero(Basis::S);
    for (k, c) in s.terms() {
        for (nk, nc) in expand_concat(k, &mut gen) {
            out.add_term(nk, &nc * c)?;
        }
    }
    Ok(out)
}

/// `F ↦ F(-A)`.
pub fn alphabet_negate(a: &NcsfElement) -> Result<NcsfElement> {
    apply_endomorphism(a, s_of_negative)
}

/// `F ↦ F(N A)`.
pub fn alphabet_multiple(a: &NcsfElement, big_n: i64) -> Result<NcsfElement> {
    apply_endomorphism(a, |n| s_of_multiple(n, big_n))
}

/// `F ↦ F([N]_q A)`.
pub fn alphabet_q_interval(a: &NcsfElement, big_n: u32) -> Result<NcsfElement> {
    apply_endomorphism(a, |n| s_of_q_interval(n, big_n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp::Composition;

    fn q(exps: &[i64]) -> Coefficient {
        Coefficient::q_poly(exps)
    }

    #[test]
    fn monomial_evaluations() {
        assert_eq!(monomial_q_eval(&[2], 3), q(&[0, 2, 4]));
        assert_eq!(monomial_q_eval(&[1, 1], 3), q(&[1, 2, 3]));
        assert_eq!(monomial_q_eval(&[1, 2], 2), q(&[2]));
        assert_eq!(monomial_q_eval(&[1, 1, 1], 2), Coefficient::zero());
        assert_eq!(monomial_q_eval(&[], 0), Coefficient::one());
    }

    #[test]
    fn q_interval_generators() {
        let s2 = s_of_q_interval(2, 2);
        assert_eq!(s2.coefficient(&[2]), q(&[0, 2]));
        assert_eq!(s2.coefficient(&[1, 1]), q(&[1]));
        // at q = 1 the interval is the plain multiple
        for n in 1..=5 {
            for m in 0..=6 {
                assert_eq!(s_of_q_interval(n, m).eval_q_one(), s_of_multiple(n, m as i64));
            }
        }
    }

    #[test]
    fn negation_is_an_involution() {
        for n in 1..=6 {
            for i in compositions(n) {
                let e = NcsfElement::s(i.parts());
                let twice = alphabet_negate(&alphabet_negate(&e).unwrap()).unwrap();
                assert_eq!(twice, e);
            }
        }
    }

    #[test]
    fn negation_matches_minus_one_multiple() {
        for n in 1..=6 {
            assert_eq!(s_of_negative(n), s_of_multiple(n, -1));
        }
    }

    #[test]
    fn negated_generator_is_signed_elementary() {
        // S_n(-A) = (-1)^n Λ_n(A)
        for n in 1..=6u32 {
            let lambda = NcsfElement::lambda(&Composition::row(n)).to_s();
            let expected = lambda.scale(&sign(n as usize));
            assert_eq!(s_of_negative(n), expected);
        }
    }

    #[test]
    fn multiples_compose() {
        // (N A)(M A) = (N M) A on generators
        for n in 1..=4 {
            for (a, b) in [(2i64, 3i64), (-1, 2), (3, -2)] {
                let inner = s_of_multiple(n, b);
                let lhs = alphabet_multiple(&inner, a).unwrap();
                assert_eq!(lhs, s_of_multiple(n, a * b));
            }
        }
    }

    #[test]
    fn zero_letters_rejected() {
        assert!(alphabet_negate(&NcsfElement::s(&[0])).is_err());
    }
}
