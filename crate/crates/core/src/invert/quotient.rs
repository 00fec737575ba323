//! Quotient formulas: the inversion series as a ratio of two series built
//! from q-interval alphabets.

use serde::Serialize;

use super::{Equation, SolverResult};
use crate::caps::Caps;
use crate::coeff::QSeriesTrunc;
use crate::error::{Error, Result};
use crate::ncsf::{s_of_multiple, s_of_q_interval, NcsfElement, XSeries};
use crate::parking::{char_q_with, ParkingFamily};

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn generator(n: u32, f: impl Fn(u32) -> NcsfElement) -> NcsfElement {
    if n == 0 {
        NcsfElement::one()
    } else {
        f(n)
    }
}

/// `F^{(r)}(x) = Σ x^n q^{-binom(n,2)} S_n([n+r]_q A)`.
fn f_series(r: u32, order: usize) -> XSeries {
    XSeries::from_coeffs(
        (0..=order as u32)
            .map(|n| generator(n, |n| s_of_q_interval(n, n + r)).shift_q(-binom2(n as i64)))
            .collect(),
    )
}

/// `G(x) = F^{(r)}(x/q) F^{(r-1)}(x)^{-1}`, renormalized so that component
/// `n` is `q^{binom(n+1,2)} [x^n] G`, the q-characteristic of `PF_n`.
pub fn quotient_g(r: u32, order: usize) -> Result<SolverResult> {
    if r == 0 {
        return Err(Error::OutOfRange("quotient formula needs r >= 1".into()));
    }
    let num = f_series(r, order).subst_x_scale(-1);
    let den = f_series(r - 1, order).inverse()?;
    let ratio = num.mul(&den);
    let components = (0..=order)
        .map(|n| ratio.coeff(n).shift_q(binom2(n as i64 + 1)))
        .collect();
    Ok(SolverResult {
        equation: Equation::QuotientG { r },
        order,
        components,
    })
}

/// Exponent `e` with `[x^n]` of the q-ratio equal to `q^e ch_q PF^{(k,l)}_n`,
/// as derived from the shuffle decomposition.
pub fn kl_derived_exponent(k: u32, n: u32) -> i64 {
    -(k as i64) * binom2(n as i64 + 1)
}

/// The normalization exponent in the printed generating-series statement,
/// kept for comparison.
pub fn kl_printed_exponent(k: u32, l: u32, n: u32) -> i64 {
    let (k, l, n) = (k as i64, l as i64, n as i64);
    -k * binom2(n + 1) - n * (n * k + l)
}

/// Output of the `(k, l)` quotient formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KlResult {
    pub k: u32,
    pub l: u32,
    pub r: u32,
    pub q_mode: bool,
    /// `[x^n]` of the ratio, exactly as computed.
    pub raw: Vec<NcsfElement>,
    /// Per degree, the `e` with `raw[n] = q^e ch_q PF^{(k,l)}_n`, inferred
    /// against the enumeration. `None` when the enumeration is over its cap
    /// or no monomial aligns the two.
    pub exponents: Vec<Option<i64>>,
}

impl KlResult {
    /// The raw components with the inferred monomial removed. Degrees with
    /// no inferred exponent use [`kl_derived_exponent`].
    pub fn normalized(&self) -> Vec<NcsfElement> {
        self.raw
            .iter()
            .zip(&self.exponents)
            .enumerate()
            .map(|(n, (c, e))| {
                let e = e.unwrap_or_else(|| kl_derived_exponent(self.k, n as u32));
                c.shift_q(-e)
            })
            .collect()
    }

    pub fn into_solver_result(self) -> SolverResult {
        let components = if self.q_mode {
            self.normalized()
        } else {
            self.raw.clone()
        };
        SolverResult {
            equation: Equation::QuotientKl {
                k: self.k,
                l: self.l,
                r: self.r,
                q_mode: self.q_mode,
            },
            order: self.raw.len() - 1,
            components,
        }
    }
}

pub fn quotient_kl(k: u32, l: u32, r: u32, order: usize, q_mode: bool) -> Result<KlResult> {
    quotient_kl_with(k, l, r, order, q_mode, &Caps::default())
}

/// `F(r,k) F(r-l,k)^{-1}` with `F(r,k) = Σ S_n((nk+r)A)`, or in q-mode
/// `F_k^{(r)}(x) F_k^{(r-l)}(q^l x)^{-1}` with
/// `F_k^{(r)}(x) = Σ x^n q^{-k binom(n+1,2)} S_n([nk+r]_q A)`.
pub fn quotient_kl_with(k: u32, l: u32, r: u32, order: usize, q_mode: bool, caps: &Caps) -> Result<KlResult> {
    if k == 0 || l == 0 {
        return Err(Error::OutOfRange(format!("need k, l >= 1, got ({k},{l})")));
    }
    if r <= l {
        return Err(Error::OutOfRange(format!("need r > l, got r = {r}, l = {l}")));
    }
    let build = |shift: u32| -> XSeries {
        XSeries::from_coeffs(
            (0..=order as u32)
                .map(|n| {
                    let size = n * k + shift;
                    if q_mode {
                        generator(n, |n| s_of_q_interval(n, size)).shift_q(kl_derived_exponent(k, n))
                    } else {
                        generator(n, |n| s_of_multiple(n, size as i64))
                    }
                })
                .collect(),
        )
    };
    let num = build(r);
    let mut den = build(r - l);
    if q_mode {
        den = den.subst_x_scale(l as i64);
    }
    let ratio = num.mul(&den.inverse()?);
    let raw = ratio.into_coeffs();
    let exponents = if q_mode {
        let fam = ParkingFamily::arithmetic(k, l)?;
        raw.iter()
            .enumerate()
            .map(|(n, c)| {
                let oracle = char_q_with(fam, n as u32, caps).ok()?;
                c.monomial_ratio(&oracle)
            })
            .collect()
    } else {
        vec![Some(0); raw.len()]
    };
    Ok(KlResult {
        k,
        l,
        r,
        q_mode,
        raw,
        exponents,
    })
}

/// Ratio `num · den^{-1}` of power series in `t` with q-series coefficients.
fn t_series_ratio(num: &[QSeriesTrunc], den: &[QSeriesTrunc]) -> Result<Vec<QSeriesTrunc>> {
    let d0_inv = den[0].reciprocal()?;
    let mut inv: Vec<QSeriesTrunc> = vec![d0_inv.clone()];
    for m in 1..den.len() {
        let mut acc = QSeriesTrunc::zero(d0_inv.order());
        for j in 1..=m {
            acc = acc.add(&den[j].mul(&inv[m - j]));
        }
        inv.push(acc.mul(&d0_inv).neg());
    }
    Ok((0..num.len().min(den.len()))
        .map(|m| {
            (0..=m).fold(QSeriesTrunc::zero(i64::MAX / 4), |acc, j| {
                acc.add(&num[j].mul(&inv[m - j]))
            })
        })
        .collect())
}

/// `A = 1` and an infinite interval alphabet (`S_n -> 1/(q)_n`) in the
/// `(k, l)` q-ratio. Component `n` is a Laurent series in `q` exact below
/// its `order()`; it agrees there with `q^{-k binom(n+1,2)}` times the
/// q-count of nondecreasing `PF^{(k,l)}_n`.
pub fn kl_infinite_alphabet_one(k: u32, l: u32, order: usize, q_precision: i64) -> Result<Vec<QSeriesTrunc>> {
    let f = |scale: i64| -> Vec<QSeriesTrunc> {
        (0..=order as u32)
            .map(|n| {
                let shift = kl_derived_exponent(k, n) + scale * n as i64;
                QSeriesTrunc::inverse_q_pochhammer(n, q_precision - shift).shift(shift)
            })
            .collect()
    };
    t_series_ratio(&f(0), &f(l as i64))
}

/// `A = 1`, `r = ∞` in the classic quotient: `F(x/q) F(x)^{-1}` with
/// `F(x) = Σ x^n q^{-binom(n,2)}/(q)_n`, renormalized by `q^{binom(n+1,2)}`.
pub fn quotient_g_infinite_one(order: usize, q_precision: i64) -> Result<Vec<QSeriesTrunc>> {
    let f = |scale: i64| -> Vec<QSeriesTrunc> {
        (0..=order as u32)
            .map(|n| {
                let shift = -binom2(n as i64) + scale * n as i64;
                QSeriesTrunc::inverse_q_pochhammer(n, q_precision - shift).shift(shift)
            })
            .collect()
    };
    let ratio = t_series_ratio(&f(-1), &f(0))?;
    Ok(ratio
        .into_iter()
        .enumerate()
        .map(|(n, s)| s.shift(binom2(n as i64 + 1)))
        .collect())
}
