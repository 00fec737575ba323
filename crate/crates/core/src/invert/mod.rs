//! Degree-by-degree solvers for the noncommutative inversion equations.
//!
//! Every equation handled here is triangular for the grading: the degree-`n`
//! component of the unknown is a polynomial in components of lower degree.
//! Truncated powers of the unknown are kept in a [`PowerTable`] and extended
//! one degree at a time.

mod abel;
mod quotient;

pub use abel::{
    abel_one_closed_form, abel_one_via_catalan, abel_polynomial, abel_polynomials, abel_via_ndpf, abel_via_ndpf_with,
    catalan_triangle_c,
};
pub use quotient::{
    kl_derived_exponent, kl_infinite_alphabet_one, kl_printed_exponent, quotient_g, quotient_g_infinite_one,
    quotient_kl, quotient_kl_with, KlResult,
};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ncsf::{Basis, NcsfElement, XSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Equation {
    G,
    H,
    F0,
    K,
    BFamily { b: i32 },
    QuotientG { r: u32 },
    QuotientKl { k: u32, l: u32, r: u32, q_mode: bool },
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Equation::G => write!(f, "g"),
            Equation::H => write!(f, "h"),
            Equation::F0 => write!(f, "f0"),
            Equation::K => write!(f, "K"),
            Equation::BFamily { b } => write!(f, "b-family(b={b})"),
            Equation::QuotientG { r } => write!(f, "quotient-g(r={r})"),
            Equation::QuotientKl { k, l, r, q_mode } => {
                write!(f, "quotient-kl(k={k},l={l},r={r}{})", if *q_mode { ",q" } else { "" })
            }
        }
    }
}

/// Components of a solution, indexed by degree (by `x`-degree for `K`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverResult {
    pub equation: Equation,
    pub order: usize,
    pub components: Vec<NcsfElement>,
}

impl SolverResult {
    pub fn component(&self, n: usize) -> &NcsfElement {
        &self.components[n]
    }

    /// The sum of all components.
    pub fn total(&self) -> NcsfElement {
        let mut acc = NcsfElement::zero(Basis::S);
        for c in &self.components {
            acc += c;
        }
        acc
    }
}

/// Truncated powers `(u^k)_n` of a series `u = Σ u_n` whose components
/// arrive one degree at a time.
#[derive(Clone, Debug)]
pub struct PowerTable {
    u: Vec<NcsfElement>,
    // pows[k][n] = (u^k)_n
    pows: Vec<Vec<NcsfElement>>,
    weight_limit: usize,
}

impl PowerTable {
    pub fn new(max_power: usize) -> Self {
        Self::with_weight_limit(max_power, usize::MAX)
    }

    /// Only the entries `(u^k)_n` with `k + n <= limit` are computed; the
    /// others are never needed by a solver of that order.
    pub fn with_weight_limit(max_power: usize, limit: usize) -> Self {
        PowerTable {
            u: Vec::new(),
            pows: vec![Vec::new(); max_power + 1],
            weight_limit: limit,
        }
    }

    pub fn max_power(&self) -> usize {
        self.pows.len() - 1
    }

    /// Number of known degrees.
    pub fn known(&self) -> usize {
        self.u.len()
    }

    /// Records `u_n` for the next degree `n` and extends every power.
    pub fn push(&mut self, u_n: NcsfElement) {
        let n = self.u.len();
        self.u.push(u_n.to_s());
        let zeroth = if n == 0 {
            NcsfElement::one()
        } else {
            NcsfElement::zero(Basis::S)
        };
        self.pows[0].push(zeroth);
        for k in 1..self.pows.len() {
            let mut acc = NcsfElement::zero(Basis::S);
            if k.saturating_add(n) > self.weight_limit {
                self.pows[k].push(acc);
                continue;
            }
            for j in 0..=n {
                let a = &self.u[j];
                let b = &self.pows[k - 1][n - j];
                if !a.is_zero() && !b.is_zero() {
                    acc += &a.product(b);
                }
            }
            self.pows[k].push(acc);
        }
    }

    pub fn get(&self, k: usize, n: usize) -> &NcsfElement {
        assert!(
            k.saturating_add(n) <= self.weight_limit,
            "(u^{k})_{n} is outside the weight limit"
        );
        &self.pows[k][n]
    }

    pub fn components(&self) -> &[NcsfElement] {
        &self.u
    }
}

fn s_gen(k: u32) -> NcsfElement {
    NcsfElement::s(&[k])
}

/// `g = Σ_{n>=0} S_n g^n`: `g_n = Σ_{k=1}^n S_k (g^k)_{n-k}`.
pub fn solve_g(order: usize) -> SolverResult {
    let mut table = PowerTable::with_weight_limit(order, order);
    table.push(NcsfElement::one());
    for n in 1..=order {
        let mut g_n = NcsfElement::zero(Basis::S);
        for k in 1..=n {
            g_n += &s_gen(k as u32).product(table.get(k, n - k));
        }
        table.push(g_n);
    }
    SolverResult {
        equation: Equation::G,
        order,
        components: table.components().to_vec(),
    }
}

/// `1 = Σ_{n>=0} S_n h^{n+1}`: `h_n = -Σ_{k=1}^n S_k (h^{k+1})_{n-k}`.
pub fn solve_h(order: usize) -> SolverResult {
    let mut table = PowerTable::with_weight_limit(order + 1, order + 1);
    table.push(NcsfElement::one());
    for n in 1..=order {
        let mut h_n = NcsfElement::zero(Basis::S);
        for k in 1..=n {
            h_n -= &s_gen(k as u32).product(table.get(k + 1, n - k));
        }
        table.push(h_n);
    }
    SolverResult {
        equation: Equation::H,
        order,
        components: table.components().to_vec(),
    }
}

/// `f = S_0 + S_1 f + S_2 f^2 + ...` with `S_0` a free generator.
pub fn solve_f0(order: usize) -> SolverResult {
    let mut table = PowerTable::with_weight_limit(order, order);
    table.push(NcsfElement::s(&[0]));
    for n in 1..=order {
        let mut f_n = NcsfElement::zero(Basis::S);
        for k in 1..=n {
            f_n += &s_gen(k as u32).product(table.get(k, n - k));
        }
        table.push(f_n);
    }
    SolverResult {
        equation: Equation::F0,
        order,
        components: table.components().to_vec(),
    }
}

/// `K(x) = qx Σ_{n>=0} S_n K^{(n)}(x)` with `K^{(n)}(x) = K(q^{n-1}x)···K(x)`,
/// solved by fixed-point iteration up to `x^order`.
pub fn solve_k(order: usize) -> XSeries {
    let mut k = XSeries::zero(order);
    for _ in 0..order {
        let mut sum = XSeries::one(order);
        let mut k_pow = XSeries::one(order);
        for n in 1..order {
            k_pow = k.subst_x_scale(n as i64 - 1).mul(&k_pow);
            let s_n = s_gen(n as u32);
            sum = sum.add(&k_pow.map(|_, c| s_n.product(c)));
        }
        let mut next = XSeries::zero(order);
        for m in 1..=order {
            next.set(m, sum.coeff(m - 1).shift_q(1));
        }
        if next == k {
            break;
        }
        k = next;
    }
    k
}

pub fn solve_k_result(order: usize) -> SolverResult {
    SolverResult {
        equation: Equation::K,
        order,
        components: solve_k(order).into_coeffs(),
    }
}

/// `g = 1 + d_1 g^{b+1} + d_2 g^{b+2} + ...` for `b >= -1`. The generator
/// `d_n` is stored as `S_n`, so the coefficient of the key `I` is the number
/// of trees with that `b`-composition.
pub fn solve_b_family(b: i32, order: usize) -> Result<SolverResult> {
    if b < -1 {
        return Err(Error::OutOfRange(format!(
            "b = {b}: the recursion does not terminate for b < -1"
        )));
    }
    let max_power = (b + order as i32).max(0) as usize;
    let mut table = PowerTable::with_weight_limit(max_power, max_power);
    table.push(NcsfElement::one());
    for m in 1..=order {
        let mut g_m = NcsfElement::zero(Basis::S);
        for n in 1..=m {
            let k = (b + n as i32) as usize;
            g_m += &s_gen(n as u32).product(table.get(k, m - n));
        }
        table.push(g_m);
    }
    Ok(SolverResult {
        equation: Equation::BFamily { b },
        order,
        components: table.components().to_vec(),
    })
}
