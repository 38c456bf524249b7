//! Power series known up to a fixed order.

use super::linalg::Ring;
use crate::Rational;

/// `c_0 + c_1 t + ...`, valid modulo `t^precision`. Only indices below the
/// precision are stored.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<C = Rational> {
    coeffs: Vec<C>,
    precision: usize,
}

impl<C: Ring> TruncSeries<C> {
    pub fn new(mut coeffs: Vec<C>, precision: usize) -> Self {
        coeffs.truncate(precision);
        coeffs.resize(precision, C::zero());
        TruncSeries { coeffs, precision }
    }

    pub fn zero(precision: usize) -> Self {
        TruncSeries::new(Vec::new(), precision)
    }

    pub fn one(precision: usize) -> Self {
        TruncSeries::new(vec![C::one()], precision)
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.precision.min(other.precision);
        TruncSeries::new((0..p).map(|i| self.coeffs[i].add(&other.coeffs[i])).collect(), p)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.precision.min(other.precision);
        let mut out = vec![C::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate().take(p) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(p - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        TruncSeries::new(out, p)
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncSeries::new(self.coeffs.iter().map(|a| a.mul(c)).collect(), self.precision)
    }
}

impl TruncSeries<Rational> {
    /// `(1 + t)^r` for rational `r`.
    pub fn binomial(r: &Rational, precision: usize) -> Self {
        let mut coeffs = Vec::with_capacity(precision);
        let mut c = Rational::from_integer(1.into());
        for k in 0..precision {
            coeffs.push(c.clone());
            let kk = Rational::from_integer((k as i64).into());
            c = c * (r - &kk) / (kk + Rational::from_integer(1.into()));
        }
        TruncSeries { coeffs, precision }
    }

    /// `self(u)` for a series `u` without constant term, over any `Q`-algebra.
    pub fn compose<C: Ring>(&self, u: &TruncSeries<C>) -> TruncSeries<C> {
        assert!(u.coeff(0).is_zero(), "inner series must vanish at 0");
        let p = self.precision.min(u.precision);
        let mut acc = TruncSeries::<C>::zero(p);
        let mut power = TruncSeries::<C>::one(p);
        for k in 0..p {
            let term = power.scale(&C::from_rational(&self.coeffs[k]));
            acc = acc.add(&term);
            power = power.mul(u);
        }
        acc
    }
}
