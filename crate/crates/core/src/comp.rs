//! Compositions, generalized compositions and words.
//!
//! A composition of `n` is identified with its descent set, the partial sums
//! of its parts strictly below `n`. Conjugation is the mirrored complement of
//! the descent set: `D(I~) = { n - i : i in [1, n-1] \ D(I) }`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    /// Panics on a zero part. Meant for literals in tests and tables.
    pub fn from_slice(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("composition parts must be positive")
    }

    /// The one-part composition `(n)`, or the empty composition for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Composition(Vec::new())
        } else {
            Composition(vec![n])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn descent_set(&self) -> BTreeSet<u32> {
        let mut acc = 0;
        let mut set = BTreeSet::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            set.insert(acc);
        }
        set
    }

    /// Inverse of [`Composition::descent_set`] for a fixed weight `n`.
    pub fn from_descent_set(n: u32, descents: &BTreeSet<u32>) -> Result<Self> {
        if n == 0 {
            return if descents.is_empty() {
                Ok(Composition(Vec::new()))
            } else {
                Err(Error::InvalidInput("descents given for n = 0".into()))
            };
        }
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0;
        for &d in descents {
            if d == 0 || d >= n {
                return Err(Error::InvalidInput(format!("descent {d} outside [1, {}]", n - 1)));
            }
            parts.push(d - prev);
            prev = d;
        }
        parts.push(n - prev);
        Ok(Composition(parts))
    }

    pub fn conjugate(&self) -> Composition {
        let n = self.weight();
        if n == 0 {
            return Composition(Vec::new());
        }
        let d = self.descent_set();
        let mirrored: BTreeSet<u32> = (1..n).filter(|i| !d.contains(i)).map(|i| n - i).collect();
        Composition::from_descent_set(n, &mirrored).expect("mirrored descents lie in [1, n-1]")
    }

    /// All `J` with `D(J) ⊆ D(I)`, i.e. all coarsenings of `I` (including `I`
    /// and `(n)`), in lexicographic order.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.weight();
        let d: Vec<u32> = self.descent_set().into_iter().collect();
        let mut out: Vec<Composition> = (0u64..(1u64 << d.len()))
            .map(|mask| {
                let sub: BTreeSet<u32> = d
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &x)| x)
                    .collect();
                Composition::from_descent_set(n, &sub).unwrap()
            })
            .collect();
        out.sort();
        out
    }

    /// All `J` with `D(J) ⊇ D(I)`.
    pub fn refinements(&self) -> Vec<Composition> {
        let n = self.weight();
        let d = self.descent_set();
        let free: Vec<u32> = (1..n).filter(|i| !d.contains(i)).collect();
        let mut out: Vec<Composition> = (0u64..(1u64 << free.len()))
            .map(|mask| {
                let mut sup = d.clone();
                sup.extend(
                    free.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &x)| x),
                );
                Composition::from_descent_set(n, &sup).unwrap()
            })
            .collect();
        out.sort();
        out
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// Near-concatenation `I ▷ J`: the last part of `I` is merged with the
    /// first part of `J`. Falls back to plain concatenation if either is empty.
    pub fn near_concat(&self, other: &Composition) -> Composition {
        match (self.0.split_last(), other.0.split_first()) {
            (Some((&last, init)), Some((&first, rest))) => {
                let mut v = init.to_vec();
                v.push(last + first);
                v.extend_from_slice(rest);
                Composition(v)
            }
            _ => self.concat(other),
        }
    }

    /// Parts sorted in decreasing order (the commutative image).
    pub fn sorted_partition(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All compositions of `n` in lexicographic order. `n = 0` yields the empty
/// composition only.
pub fn compositions(n: u32) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition(Vec::new())];
    }
    let mut out: Vec<Composition> = (0u64..(1u64 << (n - 1)))
        .map(|mask| {
            let d: BTreeSet<u32> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            Composition::from_descent_set(n, &d).unwrap()
        })
        .collect();
    out.sort();
    out
}

/// A composition in which zero parts are allowed. Trailing zeros are
/// significant: `(1,0)` and `(1,0,0)` are distinct.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeneralizedComposition(pub Vec<u32>);

impl GeneralizedComposition {
    pub fn new(parts: Vec<u32>) -> Self {
        GeneralizedComposition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_zero(&self) -> bool {
        self.0.contains(&0)
    }

    pub fn corresponding_composition(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    /// Length `weight + 1` and every prefix sum of the first `k` parts is at
    /// least `k` for `k` in `[1, weight]`.
    pub fn is_parking_type(&self) -> bool {
        let n = self.weight() as usize;
        if self.0.len() != n + 1 {
            return false;
        }
        let mut acc = 0usize;
        for k in 1..=n {
            acc += self.0[k - 1] as usize;
            if acc < k {
                return false;
            }
        }
        true
    }
}

impl From<Composition> for GeneralizedComposition {
    fn from(c: Composition) -> Self {
        GeneralizedComposition(c.0)
    }
}

impl From<&Composition> for GeneralizedComposition {
    fn from(c: &Composition) -> Self {
        GeneralizedComposition(c.0.clone())
    }
}

/// A word over the positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidInput(format!("word {letters:?} has a zero letter")));
        }
        Ok(Word(letters))
    }

    pub fn from_slice(letters: &[u32]) -> Self {
        Self::new(letters.to_vec()).expect("letters must be positive")
    }

    /// Parses a compact digit string such as `"1124"` (single-digit letters).
    pub fn parse_digits(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::InvalidInput(format!("bad letter {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Word::new(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sorted(&self) -> Word {
        let mut v = self.0.clone();
        v.sort_unstable();
        Word(v)
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// `Ev(w)` over the alphabet `[1, alphabet_size]`.
    pub fn evaluation(&self, alphabet_size: usize) -> GeneralizedComposition {
        let mut ev = vec![0u32; alphabet_size];
        for &a in &self.0 {
            let a = a as usize;
            if a > ev.len() {
                ev.resize(a, 0);
            }
            ev[a - 1] += 1;
        }
        GeneralizedComposition(ev)
    }

    pub fn packed_evaluation(&self) -> Composition {
        let max = self.0.iter().copied().max().unwrap_or(0) as usize;
        self.evaluation(max).corresponding_composition()
    }
}

impl TryFrom<Vec<u32>> for Word {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Word::new(v)
    }
}

impl From<Word> for Vec<u32> {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a < 10) {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}
