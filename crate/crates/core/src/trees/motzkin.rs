//! Motzkin paths and their bijection with trees whose root `d_k` has one
//! son per return to zero.

use std::fmt;
use std::str::FromStr;

use super::{OrderedTree, Symbol};
use crate::caps::Caps;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    F,
    D,
}

/// A path from `(0,0)` to `(n,0)` with steps `(1,1)`, `(1,0)`, `(1,-1)`
/// that never goes below the axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MotzkinPath {
    steps: Vec<Step>,
}

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: i64 = 0;
        for s in &steps {
            h += match s {
                Step::U => 1,
                Step::F => 0,
                Step::D => -1,
            };
            if h < 0 {
                return Err(Error::InvalidInput("Motzkin path goes below the axis".into()));
            }
        }
        if h != 0 {
            return Err(Error::InvalidInput("Motzkin path does not end on the axis".into()));
        }
        Ok(MotzkinPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Pieces between consecutive returns to zero.
    fn segments(&self) -> Vec<&[Step]> {
        let mut out = Vec::new();
        let mut h = 0i64;
        let mut start = 0;
        for (i, s) in self.steps.iter().enumerate() {
            h += match s {
                Step::U => 1,
                Step::F => 0,
                Step::D => -1,
            };
            if h == 0 {
                out.push(&self.steps[start..=i]);
                start = i + 1;
            }
        }
        out
    }

    /// Number of returns to zero, not counting the origin.
    pub fn returns(&self) -> usize {
        self.segments().len()
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{s:?}")?;
        }
        Ok(())
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::U),
                'F' => Ok(Step::F),
                'D' => Ok(Step::D),
                other => Err(Error::InvalidInput(format!("bad Motzkin step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        MotzkinPath::new(steps)
    }
}

pub fn enumerate_motzkin(n: u32) -> Result<Vec<MotzkinPath>> {
    enumerate_motzkin_with(n, &Caps::default())
}

/// All Motzkin paths of length `n`, in the order `U < F < D` step by step.
pub fn enumerate_motzkin_with(n: u32, caps: &Caps) -> Result<Vec<MotzkinPath>> {
    Caps::check("Motzkin paths", n, caps.trees)?;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n as usize);
    fn rec(n: usize, h: usize, cur: &mut Vec<Step>, out: &mut Vec<MotzkinPath>) {
        let left = n - cur.len();
        if left == 0 {
            if h == 0 {
                out.push(MotzkinPath { steps: cur.clone() });
            }
            return;
        }
        if h < left {
            cur.push(Step::U);
            rec(n, h + 1, cur, out);
            cur.pop();
        }
        if h < left {
            cur.push(Step::F);
            rec(n, h, cur, out);
            cur.pop();
        }
        if h > 0 {
            cur.push(Step::D);
            rec(n, h - 1, cur, out);
            cur.pop();
        }
    }
    rec(n as usize, 0, &mut cur, &mut out);
    Ok(out)
}

/// Row `n` lists, for `k = 1..n`, the number of paths of length `n` with
/// `k` returns to zero; row 0 is `[1]` (the empty path).
pub fn motzkin_returns_triangle(rows: u32) -> Result<Vec<Vec<u64>>> {
    if rows > 12 {
        return Err(Error::CapExceeded {
            what: "Motzkin triangle rows",
            n: rows as usize,
            cap: 12,
        });
    }
    let caps = Caps::uniform(12);
    (0..=rows)
        .map(|n| {
            if n == 0 {
                return Ok(vec![1]);
            }
            let mut row = vec![0u64; n as usize];
            for p in enumerate_motzkin_with(n, &caps)? {
                row[p.returns() - 1] += 1;
            }
            Ok(row)
        })
        .collect()
}

/// Root `d_k` with one son per segment between returns to zero: `c` for a
/// flat step, the image of `Q` for a segment `U Q D`. The empty path maps to
/// a childless `d_0`.
pub fn motzkin_to_tree(p: &MotzkinPath) -> OrderedTree {
    fn build(steps: &[Step]) -> OrderedTree {
        let path = MotzkinPath { steps: steps.to_vec() };
        let children = path
            .segments()
            .into_iter()
            .map(|seg| {
                if seg == [Step::F] {
                    OrderedTree::leaf()
                } else {
                    build(&seg[1..seg.len() - 1])
                }
            })
            .collect::<Vec<_>>();
        OrderedTree::node(children.len() as u32, children)
    }
    build(&p.steps)
}

/// Inverse of [`motzkin_to_tree`]. Fails on trees outside its image.
pub fn tree_to_motzkin(t: &OrderedTree) -> Result<MotzkinPath> {
    fn walk(t: &OrderedTree, out: &mut Vec<Step>) -> Result<()> {
        match t.symbol() {
            Symbol::D(k) if k as usize == t.children().len() => {
                for c in t.children() {
                    if c.is_leaf() {
                        out.push(Step::F);
                    } else {
                        out.push(Step::U);
                        walk(c, out)?;
                        out.push(Step::D);
                    }
                }
                Ok(())
            }
            _ => Err(Error::InvalidInput(format!(
                "{} is not the image of a Motzkin path",
                t.polish_code()
            ))),
        }
    }
    let mut steps = Vec::new();
    walk(t, &mut steps)?;
    MotzkinPath::new(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::gamma_row;
    use num_bigint::BigUint;

    fn path(s: &str) -> MotzkinPath {
        s.parse().unwrap()
    }

    #[test]
    fn parsing() {
        assert!("UD".parse::<MotzkinPath>().is_ok());
        assert!("DU".parse::<MotzkinPath>().is_err());
        assert!("UF".parse::<MotzkinPath>().is_err());
        assert!("UX".parse::<MotzkinPath>().is_err());
        assert_eq!(path("UFD").to_string(), "UFD");
    }

    #[test]
    fn bijection_examples() {
        assert_eq!(motzkin_to_tree(&path("FF")).polish_code(), "d2cc");
        assert_eq!(motzkin_to_tree(&path("UFD")).polish_code(), "d1d1c");
        assert_eq!(motzkin_to_tree(&path("")).polish_code(), "d0");
        assert_eq!(motzkin_to_tree(&path("UD")).polish_code(), "d1d0");
        assert!(tree_to_motzkin(&OrderedTree::leaf()).is_err());
    }

    #[test]
    fn bijection_round_trip() {
        let mut seen = std::collections::BTreeSet::new();
        for n in 0..=7 {
            for p in enumerate_motzkin(n).unwrap() {
                let t = motzkin_to_tree(&p);
                assert!(seen.insert(t.clone()));
                assert_eq!(tree_to_motzkin(&t).unwrap(), p);
                assert_eq!(motzkin_to_tree(&tree_to_motzkin(&t).unwrap()), t);
            }
        }
    }

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..=7).map(|n| enumerate_motzkin(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 9, 21, 51, 127]);
    }

    #[test]
    fn returns_triangle() {
        let t = motzkin_returns_triangle(4).unwrap();
        assert_eq!(t[0], [1]);
        assert_eq!(t[1], [1]);
        assert_eq!(t[3], [1, 2, 1]);
        assert_eq!(t[4], [2, 3, 3, 1]);
    }

    #[test]
    fn returns_match_gamma_minus_one() {
        let t = motzkin_returns_triangle(8).unwrap();
        for n in 1..=8u32 {
            let g = gamma_row(-1, n + 1).unwrap();
            for k in 1..=n as usize {
                assert_eq!(BigUint::from(t[n as usize][k - 1]), g[k], "n={n} k={k}");
            }
        }
    }
}
