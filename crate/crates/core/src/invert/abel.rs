//! Noncommutative Abel polynomials: the degree-`n` term of `g(A)^x`.

use num_bigint::BigUint;

use super::{solve_g, PowerTable};
use crate::caps::Caps;
use crate::coeff::{binomial, Coefficient};
use crate::error::{Error, Result};
use crate::ncsf::{Basis, NcsfElement};
use crate::parking::{connected_factor_count, enumerate_nondecreasing_with, ParkingFamily};

/// `P_0, ..., P_order` from `g^x = (1+U)^x = Σ_m binom(x,m) U^m`, `U = g - 1`.
pub fn abel_polynomials(order: usize) -> Vec<NcsfElement> {
    let g = solve_g(order);
    let mut table = PowerTable::new(order);
    for (n, c) in g.components.iter().enumerate() {
        if n == 0 {
            table.push(NcsfElement::zero(Basis::S));
        } else {
            table.push(c.clone());
        }
    }
    (0..=order)
        .map(|n| {
            let mut acc = NcsfElement::zero(Basis::S);
            for m in 0..=n {
                let u = table.get(m, n);
                if !u.is_zero() {
                    acc += &u.scale(&Coefficient::binomial_poly(m as u32));
                }
            }
            acc
        })
        .collect()
}

pub fn abel_polynomial(n: usize) -> NcsfElement {
    abel_polynomials(n).pop().expect("order n has n+1 components")
}

pub fn abel_via_ndpf(n: u32) -> Result<NcsfElement> {
    abel_via_ndpf_with(n, &Caps::default())
}

/// `Σ_b binom(x + c(b) - 1, c(b)) S^{pEv(b)}` over nondecreasing parking
/// functions `b`, with `c(b)` the number of connected factors.
pub fn abel_via_ndpf_with(n: u32, caps: &Caps) -> Result<NcsfElement> {
    if n == 0 {
        return Ok(NcsfElement::one());
    }
    let mut out = NcsfElement::zero(Basis::S);
    for b in enumerate_nondecreasing_with(ParkingFamily::Classic, n, caps)? {
        let c = connected_factor_count(&b)?;
        out.add_term(b.packed_evaluation().into_parts(), Coefficient::rising_poly(c))?;
    }
    Ok(out)
}

/// Entry of the Catalan triangle `a(n, m) = binom(n+m, n)(n-m+1)/(n+1)`.
fn catalan_a(n: u64, m: u64) -> BigUint {
    binomial(n + m, n) * BigUint::from(n + 1 - m) / BigUint::from(n + 1)
}

/// The number of nondecreasing parking functions of length `n` with `k`
/// connected factors, `a(n-1, n-k)`.
pub fn catalan_triangle_c(n: u32, k: u32) -> Result<BigUint> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::OutOfRange(format!("c(n,k) needs 1 <= k <= n, got ({n},{k})")));
    }
    Ok(catalan_a(n as u64 - 1, (n - k) as u64))
}

/// `P_n(x; 1) = Σ_k c(n,k) binom(x+k-1, k)`.
pub fn abel_one_via_catalan(n: u32) -> Coefficient {
    if n == 0 {
        return Coefficient::one();
    }
    (1..=n).fold(Coefficient::zero(), |acc, k| {
        let c = catalan_triangle_c(n, k).expect("k in range");
        acc + Coefficient::rising_poly(k).scale(&num_bigint::BigInt::from(c).into())
    })
}

/// `P_n(x; 1) = binom(x+2n, n) x/(x+2n) = x(x+n+1)(x+n+2)...(x+2n-1)/n!`.
pub fn abel_one_closed_form(n: u32) -> Coefficient {
    if n == 0 {
        return Coefficient::one();
    }
    let mut acc = Coefficient::x();
    for i in n + 1..2 * n {
        acc = &acc * &(&Coefficient::x() + &Coefficient::from_int(i as i64));
    }
    let den = crate::coeff::factorial(n as u64);
    acc.scale(&crate::coeff::Rational::new(1.into(), num_bigint::BigInt::from(den)))
}
