//! Ordered trees over the symbols `c` (a leaf) and `d_k` (a node of arity
//! `k + b`), the tree-counting coefficients of the inversion series, and the
//! triangles obtained by grading them by root arity.

mod motzkin;

pub use motzkin::{
    enumerate_motzkin, enumerate_motzkin_with, motzkin_returns_triangle, motzkin_to_tree, tree_to_motzkin, MotzkinPath,
    Step,
};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::caps::Caps;
use crate::coeff::binomial;
use crate::comp::{compositions, Composition, GeneralizedComposition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    C,
    D(u32),
}

impl Symbol {
    /// Number of children under the convention `arity(d_k) = k + b`.
    pub fn arity(self, b: i32) -> Result<usize> {
        match self {
            Symbol::C => Ok(0),
            Symbol::D(k) => {
                let a = k as i64 + b as i64;
                if a < 0 {
                    Err(Error::InvalidInput(format!("d{k} has negative arity for b = {b}")))
                } else {
                    Ok(a as usize)
                }
            }
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::C => write!(f, "c"),
            Symbol::D(k) => write!(f, "d{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedTree {
    symbol: Symbol,
    children: Vec<OrderedTree>,
}

impl OrderedTree {
    pub fn leaf() -> Self {
        OrderedTree {
            symbol: Symbol::C,
            children: Vec::new(),
        }
    }

    pub fn node(k: u32, children: Vec<OrderedTree>) -> Self {
        OrderedTree {
            symbol: Symbol::D(k),
            children,
        }
    }

    pub fn symbol(&self) -> Symbol {
        self.symbol
    }

    pub fn children(&self) -> &[OrderedTree] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.symbol == Symbol::C
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(|c| c.vertex_count()).sum::<usize>()
    }

    /// Symbols in prefix order.
    pub fn prefix_symbols(&self) -> Vec<Symbol> {
        let mut out = Vec::new();
        fn walk(t: &OrderedTree, out: &mut Vec<Symbol>) {
            out.push(t.symbol);
            for c in &t.children {
                walk(c, out);
            }
        }
        walk(self, &mut out);
        out
    }

    /// Polish code, e.g. `d2cd1cc`.
    pub fn polish_code(&self) -> String {
        self.prefix_symbols().iter().map(|s| s.to_string()).collect()
    }

    /// The `b`-composition: indices `k` of the `d_k` in prefix order.
    pub fn composition(&self) -> Vec<u32> {
        self.prefix_symbols()
            .into_iter()
            .filter_map(|s| match s {
                Symbol::D(k) => Some(k),
                Symbol::C => None,
            })
            .collect()
    }

    /// Whether every `d_k` has exactly `k + b` children.
    pub fn is_valid(&self, b: i32) -> bool {
        match self.symbol.arity(b) {
            Ok(a) if self.symbol != Symbol::C => {
                a == self.children.len() && self.children.iter().all(|c| c.is_valid(b))
            }
            Ok(_) => self.children.is_empty(),
            Err(_) => false,
        }
    }

    /// Parses a Polish code where `d_k` takes `k + b` arguments.
    pub fn parse(code: &str, b: i32) -> Result<Self> {
        let symbols = tokenize(code)?;
        let mut pos = 0;
        let tree = parse_at(&symbols, &mut pos, b, code)?;
        if pos != symbols.len() {
            return Err(Error::InvalidInput(format!("trailing symbols in tree code {code:?}")));
        }
        Ok(tree)
    }

    /// The tree with its leaves removed, if it has an internal vertex.
    pub fn skeleton(&self) -> Option<Skeleton> {
        match self.symbol {
            Symbol::C => None,
            Symbol::D(k) => Some(Skeleton {
                label: k,
                children: self.children.iter().filter_map(|c| c.skeleton()).collect(),
            }),
        }
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.polish_code())
    }
}

fn tokenize(code: &str) -> Result<Vec<Symbol>> {
    let bytes = code.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'c' => {
                out.push(Symbol::C);
                i += 1;
            }
            b'd' => {
                let start = i + 1;
                let mut end = start;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                let k: u32 = code[start..end]
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("d without index in {code:?}")))?;
                out.push(Symbol::D(k));
                i = end;
            }
            other => {
                return Err(Error::InvalidInput(format!(
                    "unexpected {:?} in tree code {code:?}",
                    other as char
                )))
            }
        }
    }
    Ok(out)
}

fn parse_at(symbols: &[Symbol], pos: &mut usize, b: i32, code: &str) -> Result<OrderedTree> {
    let symbol = *symbols
        .get(*pos)
        .ok_or_else(|| Error::InvalidInput(format!("tree code {code:?} ends early")))?;
    *pos += 1;
    let arity = symbol.arity(b)?;
    let mut children = Vec::with_capacity(arity);
    for _ in 0..arity {
        children.push(parse_at(symbols, pos, b, code)?);
    }
    Ok(OrderedTree { symbol, children })
}

/// The internal vertices of a tree, labeled by their index `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Skeleton {
    pub label: u32,
    pub children: Vec<Skeleton>,
}

impl Skeleton {
    /// `(label, arity)` pairs in prefix order.
    pub fn prefix_pairs(&self) -> Vec<(u32, usize)> {
        let mut out = Vec::new();
        fn walk(s: &Skeleton, out: &mut Vec<(u32, usize)>) {
            out.push((s.label, s.children.len()));
            for c in &s.children {
                walk(c, out);
            }
        }
        walk(self, &mut out);
        out
    }
}

/// `∏ binom(label + b, arity)` over the skeleton's vertices.
pub fn count_trees_with_skeleton(s: &Skeleton, b: i32) -> Result<BigUint> {
    let mut acc = BigUint::one();
    for (label, arity) in s.prefix_pairs() {
        let top = label as i64 + b as i64;
        if top < arity as i64 {
            return Err(Error::InvalidInput(format!(
                "skeleton vertex d{label} has {arity} internal children, more than its arity {top}"
            )));
        }
        acc *= binomial(top as u64, arity as u64);
    }
    Ok(acc)
}

/// `δ^{(b)}_I = Σ_a ∏_{k<p} binom(i_k + b, a_k)` over sequences with
/// `a_1 + ... + a_j >= j` and total `p - 1`, by dynamic programming on the
/// prefix sum.
pub fn delta_b(i: &Composition, b: i32) -> Result<BigUint> {
    if b < -1 {
        return Err(Error::OutOfRange(format!("b = {b} < -1")));
    }
    let parts = i.parts();
    let p = parts.len();
    if p <= 1 {
        return Ok(BigUint::one());
    }
    let total = p - 1;
    // dp[s]: weighted number of prefixes with sum s
    let mut dp = vec![BigUint::zero(); total + 1];
    dp[0] = BigUint::one();
    for (j, &part) in parts[..total].iter().enumerate() {
        let top = (part as i64 + b as i64) as u64;
        let mut next = vec![BigUint::zero(); total + 1];
        for (s, w) in dp.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for a in 0..=top.min((total - s) as u64) {
                let s2 = s + a as usize;
                if s2 > j {
                    next[s2] += w * binomial(top, a);
                }
            }
        }
        dp = next;
    }
    Ok(dp[total].clone())
}

pub fn enumerate_trees(n: u32, b: i32) -> Result<Vec<OrderedTree>> {
    enumerate_trees_with(n, b, &Caps::default())
}

/// All trees whose `d`-indices sum to `n`, in lexicographic order of their
/// Polish codes (with `c` before `d_1` before `d_2` ...).
pub fn enumerate_trees_with(n: u32, b: i32, caps: &Caps) -> Result<Vec<OrderedTree>> {
    if b < -1 {
        return Err(Error::OutOfRange(format!("b = {b} < -1")));
    }
    Caps::check("ordered trees", n, caps.trees)?;
    let mut codes = Vec::new();
    let mut cur = Vec::new();
    fn rec(open: i64, left: u32, b: i32, cur: &mut Vec<Symbol>, out: &mut Vec<Vec<Symbol>>) {
        if open == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        cur.push(Symbol::C);
        rec(open - 1, left, b, cur, out);
        cur.pop();
        for k in 1..=left {
            cur.push(Symbol::D(k));
            rec(open + k as i64 + b as i64 - 1, left - k, b, cur, out);
            cur.pop();
        }
    }
    rec(1, n, b, &mut cur, &mut codes);
    codes
        .into_iter()
        .map(|symbols| {
            let mut pos = 0;
            parse_at(&symbols, &mut pos, b, "")
        })
        .collect()
}

pub fn enumerate_trees_by_composition(n: u32, b: i32) -> Result<BTreeMap<Composition, u64>> {
    enumerate_trees_by_composition_with(n, b, &Caps::default())
}

/// Number of trees per `b`-composition.
pub fn enumerate_trees_by_composition_with(n: u32, b: i32, caps: &Caps) -> Result<BTreeMap<Composition, u64>> {
    let mut out = BTreeMap::new();
    for t in enumerate_trees_with(n, b, caps)? {
        *out.entry(Composition::new(t.composition())?).or_insert(0) += 1;
    }
    Ok(out)
}

/// `γ^{(b)}_{p,n} = Σ_{I ⊨ n, i_1 = p} δ^{(b)}_I`, a full row `p = 1..n`.
pub fn gamma_row(b: i32, n: u32) -> Result<Vec<BigUint>> {
    let mut row = vec![BigUint::zero(); n as usize];
    for i in compositions(n) {
        let p = i.parts()[0] as usize;
        row[p - 1] += delta_b(&i, b)?;
    }
    Ok(row)
}

/// Rows `n = 1..=rows` of the γ triangle. For `b = -1` the identically
/// zero leading columns are dropped, matching the usual Motzkin layout.
pub fn gamma_triangle(b: i32, rows: u32) -> Result<Vec<Vec<BigUint>>> {
    if rows > 12 {
        return Err(Error::CapExceeded {
            what: "gamma triangle rows",
            n: rows as usize,
            cap: 12,
        });
    }
    (1..=rows)
        .map(|n| {
            let mut row = gamma_row(b, n)?;
            if b == -1 {
                let lead = row.iter().take_while(|v| v.is_zero()).count();
                row.drain(..lead);
            }
            Ok(row)
        })
        .collect()
}

fn series_mul(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients `t^0..t^order` of the solution of
/// `g = 1 + t g^{b+1} / (1 - t g)`.
pub fn row_sum_series(b: i32, order: usize) -> Result<Vec<BigInt>> {
    if b < -1 {
        return Err(Error::OutOfRange(format!("b = {b} < -1")));
    }
    let len = order + 1;
    let mut one = vec![BigInt::zero(); len];
    one[0] = BigInt::one();
    let mut g = one.clone();
    for _ in 0..len {
        // t g^{b+1}
        let mut num = one.clone();
        for _ in 0..(b + 1) {
            num = series_mul(&num, &g, len);
        }
        num.insert(0, BigInt::zero());
        num.truncate(len);
        // 1/(1 - t g) = Σ (t g)^m
        let mut tg = g.clone();
        tg.insert(0, BigInt::zero());
        tg.truncate(len);
        let mut geo = one.clone();
        let mut power = one.clone();
        for _ in 1..len {
            power = series_mul(&power, &tg, len);
            for (x, y) in geo.iter_mut().zip(&power) {
                *x += y;
            }
        }
        let mut next = series_mul(&num, &geo, len);
        next[0] += BigInt::one();
        if next == g {
            break;
        }
        g = next;
    }
    Ok(g)
}

pub fn dyck_decomposition_oracle(n: u32) -> Result<BTreeMap<GeneralizedComposition, u64>> {
    dyck_decomposition_oracle_with(n, &Caps::default())
}

/// Factors every word `w b`, `w` a Dyck word of semilength `n`, over the
/// prefix code `{a^k b}` and records the sequence of exponents `k`.
pub fn dyck_decomposition_oracle_with(n: u32, caps: &Caps) -> Result<BTreeMap<GeneralizedComposition, u64>> {
    Caps::check("Dyck words", n, caps.trees)?;
    let mut out = BTreeMap::new();
    let mut word = Vec::with_capacity(2 * n as usize + 1);
    fn rec(ups: u32, downs: u32, n: u32, word: &mut Vec<bool>, out: &mut BTreeMap<GeneralizedComposition, u64>) {
        if ups == n && downs == n {
            let mut key = Vec::new();
            let mut run = 0u32;
            for &up in word.iter().chain(std::iter::once(&false)) {
                if up {
                    run += 1;
                } else {
                    key.push(run);
                    run = 0;
                }
            }
            *out.entry(GeneralizedComposition::new(key)).or_insert(0) += 1;
            return;
        }
        if ups < n {
            word.push(true);
            rec(ups + 1, downs, n, word, out);
            word.pop();
        }
        if downs < ups {
            word.push(false);
            rec(ups, downs + 1, n, word, out);
            word.pop();
        }
    }
    rec(0, 0, n, &mut word, &mut out);
    Ok(out)
}
