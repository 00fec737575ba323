//! Truncated power series in a commuting variable `x` with NCSF coefficients.

use super::{Basis, NcsfElement};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};

/// `Σ_{m=0}^{N} x^m T_m`, known up to and including `x^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSeries {
    coeffs: Vec<NcsfElement>,
}

impl XSeries {
    pub fn zero(order: usize) -> Self {
        XSeries {
            coeffs: vec![NcsfElement::zero(Basis::S); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = NcsfElement::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<NcsfElement>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least its constant term");
        XSeries {
            coeffs: coeffs.into_iter().map(|c| c.to_s()).collect(),
        }
    }

    /// The highest power of `x` that is known.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &NcsfElement {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[NcsfElement] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<NcsfElement> {
        self.coeffs
    }

    pub fn set(&mut self, m: usize, value: NcsfElement) {
        self.coeffs[m] = value.to_s();
    }

    pub fn truncate(&self, order: usize) -> Self {
        XSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn add(&self, rhs: &XSeries) -> XSeries {
        let n = self.order().min(rhs.order());
        XSeries {
            coeffs: (0..=n).map(|m| &self.coeffs[m] + &rhs.coeffs[m]).collect(),
        }
    }

    pub fn sub(&self, rhs: &XSeries) -> XSeries {
        let n = self.order().min(rhs.order());
        XSeries {
            coeffs: (0..=n).map(|m| &self.coeffs[m] - &rhs.coeffs[m]).collect(),
        }
    }

    /// Product with `self` on the left.
    pub fn mul(&self, rhs: &XSeries) -> XSeries {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|m| {
                let mut acc = NcsfElement::zero(Basis::S);
                for i in 0..=m {
                    let a = &self.coeffs[i];
                    let b = &rhs.coeffs[m - i];
                    if !a.is_zero() && !b.is_zero() {
                        acc += &a.product(b);
                    }
                }
                acc
            })
            .collect();
        XSeries { coeffs }
    }

    /// Two-sided inverse; the constant term must be a nonzero rational
    /// multiple of `S^()`.
    pub fn inverse(&self) -> Result<XSeries> {
        let c0 = &self.coeffs[0];
        let unit = match (c0.len(), c0.terms().next()) {
            (1, Some(([], c))) => c.as_constant().filter(|v| !num_traits::Zero::is_zero(v)),
            _ => None,
        }
        .ok_or(Error::NonUnitConstant)?;
        let inv_unit = num_traits::Inv::inv(unit);
        let mut out: Vec<NcsfElement> = vec![NcsfElement::scalar(Coefficient::constant(inv_unit.clone()))];
        for m in 1..=self.order() {
            let mut acc = NcsfElement::zero(Basis::S);
            for k in 1..=m {
                let t = &self.coeffs[k];
                if !t.is_zero() {
                    acc += &t.product(&out[m - k]);
                }
            }
            out.push((-acc).scale_rational(&inv_unit));
        }
        Ok(XSeries { coeffs: out })
    }

    /// `T(q^j x)`: multiplies the `x^m` coefficient by `q^{jm}`.
    pub fn subst_x_scale(&self, j: i64) -> XSeries {
        XSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| c.shift_q(j * m as i64))
                .collect(),
        }
    }

    pub fn map<F: Fn(usize, &NcsfElement) -> NcsfElement>(&self, f: F) -> XSeries {
        XSeries {
            coeffs: self.coeffs.iter().enumerate().map(|(m, c)| f(m, c).to_s()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geometric(order: usize) -> XSeries {
        // Σ x^n S_n
        XSeries::from_coeffs(
            (0..=order as u32)
                .map(|n| {
                    if n == 0 {
                        NcsfElement::one()
                    } else {
                        NcsfElement::s(&[n])
                    }
                })
                .collect(),
        )
    }

    #[test]
    fn inverse_of_complete_series_is_signed_elementary() {
        let order = 6;
        let inv = geometric(order).inverse().unwrap();
        for n in 1..=order as u32 {
            let lambda = NcsfElement::lambda(&crate::comp::Composition::row(n)).to_s();
            let expected = if n % 2 == 0 { lambda } else { -lambda };
            assert_eq!(inv.coeff(n as usize), &expected);
        }
        let prod = geometric(order).mul(&inv);
        assert_eq!(prod, XSeries::one(order));
        assert_eq!(inv.mul(&geometric(order)), XSeries::one(order));
    }

    #[test]
    fn inverse_needs_unit() {
        let s = XSeries::from_coeffs(vec![NcsfElement::s(&[1]), NcsfElement::one()]);
        assert_eq!(s.inverse(), Err(Error::NonUnitConstant));
        let z = XSeries::zero(3);
        assert!(z.inverse().is_err());
    }

    #[test]
    fn x_scaling() {
        let s = geometric(3).subst_x_scale(2);
        assert_eq!(s.coeff(3), &NcsfElement::s(&[3]).shift_q(6));
    }
}
