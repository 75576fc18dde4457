//! Truncated power series in a formal variable t with `Poly` coefficients.
//!
//! Coefficients beyond the truncation order are undefined, never assumed
//! zero; all operations require matching orders.

use super::Poly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Poly>,
}

impl Series {
    /// The zero series truncated at order `n` (n+1 stored coefficients).
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = Poly::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<Poly>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the t^0 slot");
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, p: Poly) {
        self.coeffs[n] = p;
    }

    fn check_order(&self, other: &Series) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::InvalidArgument(format!(
                "series order mismatch: {} vs {}",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Series::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].mul(&other.coeffs[j]);
                out.coeffs[i + j] = out.coeffs[i + j].add(&prod);
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `p`.
    pub fn scale_poly(&self, p: &Poly) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.mul(p)).collect(),
        }
    }

    /// Multiplies by t^s, dropping coefficients past the truncation order.
    pub fn shift(&self, s: usize) -> Series {
        let n = self.order();
        let mut out = Series::zero(n);
        for i in 0..=n.saturating_sub(s) {
            out.coeffs[i + s] = self.coeffs[i].clone();
        }
        out
    }

    /// Multiplicative inverse, defined only when the constant coefficient is
    /// the polynomial 1: R_0 = 1, R_n = -Σ_{j=1..n} A_j R_{n-j}.
    pub fn reciprocal(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::InvalidArgument(
                "series reciprocal requires constant coefficient 1".to_string(),
            ));
        }
        let n = self.order();
        let mut rec = Series::zero(n);
        rec.coeffs[0] = Poly::one();
        for m in 1..=n {
            let mut acc = Poly::zero();
            for j in 1..=m {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[j].mul(&rec.coeffs[m - j]));
            }
            rec.coeffs[m] = acc.neg();
        }
        Ok(rec)
    }
}
