//! Parking functions: the classic family and its shifted and arithmetic
//! generalizations, their q-characteristics, parkization and connected
//! factorization.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::coeff::Coefficient;
use crate::comp::Word;
use crate::error::{Error, Result};
use crate::ncsf::{Basis, NcsfElement};

/// A family `PF^{(k,l)}`: words whose sorted rearrangement satisfies
/// `a↑_i <= l + (i-1)k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ParkingFamily {
    Classic,
    Shifted { r: u32 },
    Arithmetic { k: u32, l: u32 },
}

impl ParkingFamily {
    pub fn shifted(r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::OutOfRange("shifted family needs r >= 1".into()));
        }
        Ok(ParkingFamily::Shifted { r })
    }

    pub fn arithmetic(k: u32, l: u32) -> Result<Self> {
        if k == 0 || l == 0 {
            return Err(Error::OutOfRange(format!(
                "arithmetic family needs k, l >= 1, got ({k},{l})"
            )));
        }
        Ok(ParkingFamily::Arithmetic { k, l })
    }

    /// The `(k, l)` parameters of the equivalent arithmetic family.
    pub fn params(self) -> (u32, u32) {
        match self {
            ParkingFamily::Classic => (1, 1),
            ParkingFamily::Shifted { r } => (1, r),
            ParkingFamily::Arithmetic { k, l } => (k, l),
        }
    }

    pub fn is_classic(self) -> bool {
        self.params() == (1, 1)
    }

    /// Upper bound on the `i`-th smallest letter (1-based).
    pub fn bound(self, i: u32) -> u32 {
        let (k, l) = self.params();
        l + (i - 1) * k
    }

    fn ndpf_cap(self, caps: &Caps) -> u32 {
        if self.is_classic() {
            caps.ndpf_classic
        } else {
            caps.ndpf
        }
    }
}

pub fn is_member(w: &Word, fam: ParkingFamily) -> bool {
    w.sorted()
        .letters()
        .iter()
        .enumerate()
        .all(|(i, &a)| a <= fam.bound(i as u32 + 1))
}

pub fn is_parking(w: &Word) -> bool {
    is_member(w, ParkingFamily::Classic)
}

/// `‖w‖ = Σ (a_i - 1)`.
pub fn sum_statistic(w: &Word) -> u64 {
    w.letters().iter().map(|&a| (a - 1) as u64).sum()
}

pub fn enumerate_nondecreasing(fam: ParkingFamily, n: u32) -> Result<Vec<Word>> {
    enumerate_nondecreasing_with(fam, n, &Caps::default())
}

/// Nondecreasing members of length `n`, in lexicographic order.
pub fn enumerate_nondecreasing_with(fam: ParkingFamily, n: u32, caps: &Caps) -> Result<Vec<Word>> {
    Caps::check("nondecreasing parking functions", n, fam.ndpf_cap(caps))?;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n as usize);
    fn rec(fam: ParkingFamily, n: u32, cur: &mut Vec<u32>, out: &mut Vec<Word>) {
        let i = cur.len() as u32;
        if i == n {
            out.push(Word::from_slice(cur));
            return;
        }
        let lo = cur.last().copied().unwrap_or(1);
        for a in lo..=fam.bound(i + 1) {
            cur.push(a);
            rec(fam, n, cur, out);
            cur.pop();
        }
    }
    rec(fam, n, &mut cur, &mut out);
    Ok(out)
}

pub fn enumerate_all(fam: ParkingFamily, n: u32) -> Result<Vec<Word>> {
    enumerate_all_with(fam, n, &Caps::default())
}

/// Every member of length `n`, in lexicographic order, by depth-first search
/// over `[l + (n-1)k]^n` that abandons prefixes which can no longer park.
pub fn enumerate_all_with(fam: ParkingFamily, n: u32, caps: &Caps) -> Result<Vec<Word>> {
    Caps::check("parking functions", n, caps.pf_brute_force)?;
    let mut out = Vec::new();
    if n == 0 {
        out.push(Word::default());
        return Ok(out);
    }
    let top = fam.bound(n);
    let bounds: Vec<u32> = (1..=n).map(|i| fam.bound(i)).collect();
    // below[j]: number of placed letters <= bounds[j]
    let mut below = vec![0u32; n as usize];
    let mut cur = Vec::with_capacity(n as usize);
    fn rec(n: u32, top: u32, bounds: &[u32], below: &mut [u32], cur: &mut Vec<u32>, out: &mut Vec<Word>) {
        let placed = cur.len() as u32;
        let left = n - placed;
        if below.iter().enumerate().any(|(j, &b)| b + left < j as u32 + 1) {
            return;
        }
        if left == 0 {
            out.push(Word::from_slice(cur));
            return;
        }
        for a in 1..=top {
            for (j, &bd) in bounds.iter().enumerate() {
                if a <= bd {
                    below[j] += 1;
                }
            }
            cur.push(a);
            rec(n, top, bounds, below, cur, out);
            cur.pop();
            for (j, &bd) in bounds.iter().enumerate() {
                if a <= bd {
                    below[j] -= 1;
                }
            }
        }
    }
    rec(n, top, &bounds, &mut below, &mut cur, &mut out);
    Ok(out)
}

/// `|PF^{(k,l)}_n| = l (l + kn)^{n-1}`.
pub fn count_closed_form(fam: ParkingFamily, n: u32) -> BigUint {
    if n == 0 {
        return BigUint::from(1u32);
    }
    let (k, l) = fam.params();
    BigUint::from(l) * BigUint::from(l + k * n).pow(n - 1)
}

pub fn count_all(fam: ParkingFamily, n: u32) -> Result<usize> {
    Ok(enumerate_all(fam, n)?.len())
}

pub fn char_q(fam: ParkingFamily, n: u32) -> Result<NcsfElement> {
    char_q_with(fam, n, &Caps::default())
}

/// `ch_q = Σ q^{‖v‖} S^{pEv(v)}` over the nondecreasing members `v`.
pub fn char_q_with(fam: ParkingFamily, n: u32, caps: &Caps) -> Result<NcsfElement> {
    let mut out = NcsfElement::zero(Basis::S);
    for v in enumerate_nondecreasing_with(fam, n, caps)? {
        let c = Coefficient::q_pow(sum_statistic(&v) as i64);
        out.add_term(v.packed_evaluation().into_parts(), c)?;
    }
    Ok(out)
}

/// Repeatedly finds the smallest `k` with fewer than `k` letters `<= k` and
/// decrements every letter above `k`, until the word parks.
pub fn parkize(w: &Word) -> Word {
    let mut v = w.letters().to_vec();
    let n = v.len() as u32;
    loop {
        let gap = (1..=n).find(|&k| (v.iter().filter(|&&a| a <= k).count() as u32) < k);
        match gap {
            None => return Word::from_slice(&v),
            Some(k) => {
                for a in v.iter_mut().filter(|a| **a > k) {
                    *a -= 1;
                }
            }
        }
    }
}

/// Number of factors in the maximal factorization of a nondecreasing
/// parking function into connected ones: `1 + #{j : b_{j+1} = j+1}`.
pub fn connected_factor_count(b: &Word) -> Result<u32> {
    if !b.is_nondecreasing() || !is_parking(b) {
        return Err(Error::NotNondecreasingParking(b.letters().to_vec()));
    }
    let l = b.letters();
    Ok(1 + (1..l.len()).filter(|&j| l[j] as usize == j + 1).count() as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncsf::s_of_q_interval;

    fn w(s: &str) -> Word {
        Word::parse_digits(s).unwrap()
    }

    fn q(exps: &[i64]) -> Coefficient {
        Coefficient::q_poly(exps)
    }

    fn catalan(n: u32) -> usize {
        let b = crate::coeff::binomial(2 * n as u64, n as u64) / BigUint::from(n + 1);
        b.try_into().unwrap()
    }

    #[test]
    fn membership() {
        assert!(is_member(&w("311"), ParkingFamily::Classic));
        assert!(!is_member(&w("22"), ParkingFamily::Classic));
        assert!(is_member(&w("25"), ParkingFamily::arithmetic(3, 2).unwrap()));
        assert!(!is_member(&w("35"), ParkingFamily::arithmetic(3, 2).unwrap()));
    }

    #[test]
    fn shifted_is_arithmetic_with_unit_step() {
        for r in 1..=3 {
            let s = ParkingFamily::shifted(r).unwrap();
            let a = ParkingFamily::arithmetic(1, r).unwrap();
            for n in 0..=5 {
                assert_eq!(
                    enumerate_nondecreasing(s, n).unwrap(),
                    enumerate_nondecreasing(a, n).unwrap()
                );
            }
        }
        assert_eq!(
            ParkingFamily::shifted(1).unwrap().params(),
            ParkingFamily::Classic.params()
        );
    }

    #[test]
    fn nondecreasing_lists() {
        let names = |v: Vec<Word>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(
            names(enumerate_nondecreasing(ParkingFamily::Classic, 3).unwrap()),
            ["111", "112", "113", "122", "123"]
        );
        assert_eq!(
            names(enumerate_nondecreasing(ParkingFamily::Classic, 2).unwrap()),
            ["11", "12"]
        );
        assert_eq!(
            names(enumerate_nondecreasing(ParkingFamily::arithmetic(3, 2).unwrap(), 1).unwrap()),
            ["1", "2"]
        );
        for n in 0..=10 {
            assert_eq!(
                enumerate_nondecreasing(ParkingFamily::Classic, n).unwrap().len(),
                catalan(n)
            );
        }
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            enumerate_nondecreasing(ParkingFamily::Classic, 13),
            Err(Error::CapExceeded { .. })
        ));
        assert!(enumerate_nondecreasing(ParkingFamily::shifted(2).unwrap(), 8).is_err());
        assert!(enumerate_all(ParkingFamily::Classic, 8).is_err());
    }

    #[test]
    fn statistic() {
        assert_eq!(sum_statistic(&w("111")), 0);
        assert_eq!(sum_statistic(&w("123")), 3);
        assert_eq!(sum_statistic(&w("113")), 2);
    }

    #[test]
    fn characteristic_degree_four() {
        let g4 = char_q(ParkingFamily::Classic, 4).unwrap();
        let expected = NcsfElement::from_s_terms([
            (vec![4], q(&[0])),
            (vec![3, 1], q(&[1, 2, 3])),
            (vec![2, 2], q(&[2, 4])),
            (vec![1, 3], q(&[3])),
            (vec![2, 1, 1], q(&[3, 4, 5])),
            (vec![1, 2, 1], q(&[4, 5])),
            (vec![1, 1, 2], q(&[5])),
            (vec![1, 1, 1, 1], q(&[6])),
        ]);
        assert_eq!(g4, expected);
        let g2 = char_q(ParkingFamily::Classic, 2).unwrap();
        assert_eq!(g2.to_string(), "S[2] + q·S[1,1]");
        assert_eq!(char_q(ParkingFamily::Classic, 0).unwrap(), NcsfElement::one());
    }

    #[test]
    fn arithmetic_characteristic_at_one() {
        let c = char_q(ParkingFamily::arithmetic(3, 2).unwrap(), 2).unwrap();
        let one = crate::ncsf::specialize_one(&c);
        assert_eq!(one, q(&[0, 1, 2, 2, 3, 3, 4, 4, 5]));
    }

    #[test]
    fn counts() {
        assert_eq!(count_all(ParkingFamily::Classic, 3).unwrap(), 16);
        assert_eq!(count_all(ParkingFamily::arithmetic(3, 2).unwrap(), 2).unwrap(), 16);
        assert_eq!(count_all(ParkingFamily::shifted(2).unwrap(), 2).unwrap(), 8);
        for n in 0..=7 {
            let fam = ParkingFamily::Classic;
            assert_eq!(BigUint::from(count_all(fam, n).unwrap()), count_closed_form(fam, n));
        }
        for (k, l) in [(2, 1), (1, 3), (3, 2), (2, 3)] {
            let fam = ParkingFamily::arithmetic(k, l).unwrap();
            for n in 0..=4 {
                assert_eq!(BigUint::from(count_all(fam, n).unwrap()), count_closed_form(fam, n));
            }
        }
    }

    #[test]
    fn brute_force_agrees_with_filtering() {
        // exhaustive filter over the full cube as an independent check
        let fam = ParkingFamily::arithmetic(2, 2).unwrap();
        let n = 3u32;
        let top = fam.bound(n);
        let mut filtered = Vec::new();
        for a in 1..=top {
            for b in 1..=top {
                for c in 1..=top {
                    let word = Word::from_slice(&[a, b, c]);
                    if is_member(&word, fam) {
                        filtered.push(word);
                    }
                }
            }
        }
        assert_eq!(enumerate_all(fam, n).unwrap(), filtered);
    }

    #[test]
    fn parkize_examples() {
        assert_eq!(parkize(&w("115")), w("113"));
        assert_eq!(parkize(&w("123")), w("123"));
        assert_eq!(parkize(&w("1114")), w("1114"));
    }

    #[test]
    fn parkize_properties() {
        for n in 1..=4u32 {
            let top = n + 2;
            let total = (top as usize).pow(n);
            for idx in 0..total {
                let mut x = idx;
                let letters: Vec<u32> = (0..n)
                    .map(|_| {
                        let a = (x % top as usize) as u32 + 1;
                        x /= top as usize;
                        a
                    })
                    .collect();
                let word = Word::from_slice(&letters);
                let p = parkize(&word);
                assert!(is_parking(&p));
                assert_eq!(parkize(&p), p);
                if is_parking(&word) {
                    assert_eq!(p, word);
                }
                // relative order of positions is preserved
                for i in 0..n as usize {
                    for j in 0..n as usize {
                        assert_eq!(letters[i].cmp(&letters[j]), p.letters()[i].cmp(&p.letters()[j]));
                    }
                }
            }
        }
    }

    #[test]
    fn connected_factors() {
        assert_eq!(connected_factor_count(&w("1124")).unwrap(), 2);
        assert_eq!(connected_factor_count(&w("1134")).unwrap(), 3);
        assert_eq!(connected_factor_count(&w("1123")).unwrap(), 1);
        assert!(connected_factor_count(&w("1321")).is_err());
        assert!(connected_factor_count(&w("22")).is_err());
    }

    #[test]
    fn shuffle_decomposition() {
        for r in 1..=2u32 {
            for n in 0..=5u32 {
                let lhs = if n == 0 {
                    NcsfElement::one()
                } else {
                    s_of_q_interval(n, n + r)
                };
                let mut rhs = NcsfElement::zero(Basis::S);
                for k in 0..=n {
                    let tail = if n == k {
                        NcsfElement::one()
                    } else {
                        s_of_q_interval(n - k, n + r - k - 1)
                    };
                    let term = char_q(ParkingFamily::Classic, k)
                        .unwrap()
                        .product(&tail)
                        .shift_q(((k + 1) * (n - k)) as i64);
                    rhs += &term;
                }
                assert_eq!(lhs, rhs, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn generalized_shuffle_at_one() {
        for r in 2..=3u32 {
            for n in 0..=5u32 {
                let lhs = char_q(ParkingFamily::shifted(r).unwrap(), n).unwrap().eval_q_one();
                let mut rhs = NcsfElement::zero(Basis::S);
                for k in 0..=n {
                    let a = char_q(ParkingFamily::Classic, k).unwrap();
                    let b = char_q(ParkingFamily::shifted(r - 1).unwrap(), n - k).unwrap();
                    rhs += &a.product(&b).eval_q_one();
                }
                assert_eq!(lhs, rhs, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn family_json() {
        let fam = ParkingFamily::arithmetic(3, 2).unwrap();
        assert_eq!(
            serde_json::to_string(&fam).unwrap(),
            r#"{"kind":"arithmetic","k":3,"l":2}"#
        );
        assert_eq!(
            serde_json::to_string(&ParkingFamily::Classic).unwrap(),
            r#"{"kind":"classic"}"#
        );
        let w: Word = serde_json::from_str("[1,1,3]").unwrap();
        assert_eq!(w, Word::from_slice(&[1, 1, 3]));
    }
}
