//! Polynomials in `Y` whose coefficients are polynomials in `X`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{Poly, XPoly};
use crate::{Error, Rational, Result};

/// `a_0(X) + a_1(X) Y + ... + a_d(X) Y^d`, the leading `a_d` nonzero unless
/// the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct YPoly {
    coeffs: Vec<XPoly>,
}

impl YPoly {
    pub fn zero() -> Self {
        YPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        YPoly::from_x(Poly::one())
    }

    /// The monomial `Y`.
    pub fn y() -> Self {
        YPoly::monomial(Poly::one(), 1)
    }

    /// `Y^d`
    pub fn y_pow(d: usize) -> Self {
        YPoly::monomial(Poly::one(), d)
    }

    /// A polynomial of `Y`-degree zero.
    pub fn from_x(a: XPoly) -> Self {
        YPoly::from_coeffs(vec![a])
    }

    pub fn monomial(a: XPoly, d: usize) -> Self {
        if a.is_zero() {
            return YPoly::zero();
        }
        let mut coeffs = vec![Poly::zero(); d + 1];
        coeffs[d] = a;
        YPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<XPoly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        YPoly { coeffs }
    }

    /// Builds from `(coefficient, x-exponent, y-exponent)` triples.
    pub fn from_terms<I: IntoIterator<Item = (Rational, usize, usize)>>(terms: I) -> Self {
        let mut by_y: Vec<Vec<(Rational, usize)>> = Vec::new();
        for (c, i, j) in terms {
            if by_y.len() <= j {
                by_y.resize(j + 1, Vec::new());
            }
            by_y[j].push((c, i));
        }
        YPoly::from_coeffs(by_y.into_iter().map(Poly::from_terms).collect())
    }

    pub fn coeffs(&self) -> &[XPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Y`-degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `Y`-degree treating zero as degree 0; only for callers that already
    /// excluded the zero polynomial.
    pub(crate) fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, j: usize) -> XPoly {
        self.coeffs.get(j).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn coeff_ref(&self, j: usize) -> Option<&XPoly> {
        self.coeffs.get(j)
    }

    pub fn leading_coeff(&self) -> XPoly {
        self.coeffs.last().cloned().unwrap_or_else(Poly::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Poly::is_one)
    }

    /// Largest `X`-degree among the coefficients.
    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(Poly::degree).max()
    }

    /// Coefficient `alpha_k` of `Y^(d-k)`, matching the usual way of writing
    /// a monic polynomial `Y^d + alpha_1 Y^(d-1) + ... + alpha_d`.
    pub fn alpha(&self, k: usize) -> XPoly {
        match self.degree() {
            Some(d) if k <= d => self.coeff(d - k),
            _ => Poly::zero(),
        }
    }

    pub fn scale(&self, c: &Rational) -> YPoly {
        YPoly::from_coeffs(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn mul_x(&self, a: &XPoly) -> YPoly {
        YPoly::from_coeffs(self.coeffs.iter().map(|c| c * a).collect())
    }

    pub fn pow(&self, mut e: u32) -> YPoly {
        let mut base = self.clone();
        let mut acc = YPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division by a monic divisor; exact over `Q[X]`.
    pub fn div_rem(&self, b: &YPoly) -> Result<(YPoly, YPoly)> {
        let db = match b.degree() {
            Some(d) if b.is_monic() => d,
            _ => return Err(Error::NonMonicDivisor),
        };
        if self.coeffs.len() <= db {
            return Ok((YPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Poly::zero(); rem.len() - db];
        for i in (0..quot.len()).rev() {
            let c = std::mem::take(&mut rem[i + db]);
            if c.is_zero() {
                continue;
            }
            for (j, bc) in b.coeffs.iter().enumerate().take(db) {
                if !bc.is_zero() {
                    rem[i + j] = &rem[i + j] - &(&c * bc);
                }
            }
            quot[i] = c;
        }
        rem.truncate(db);
        Ok((YPoly::from_coeffs(quot), YPoly::from_coeffs(rem)))
    }

    /// Exact division in `Q[X][Y]` by an arbitrary nonzero divisor.
    pub fn exact_div(&self, b: &YPoly) -> Option<YPoly> {
        let db = b.degree()?;
        let lb = b.leading_coeff();
        let mut rem = self.clone();
        let mut quot: Vec<XPoly> = Vec::new();
        while let Some(dr) = rem.degree() {
            if dr < db {
                return None;
            }
            let c = rem.leading_coeff().exact_div(&lb)?;
            let shift = dr - db;
            if quot.len() <= shift {
                quot.resize(shift + 1, Poly::zero());
            }
            let term = YPoly::monomial(c.clone(), shift);
            quot[shift] = c;
            rem = &rem - &(&term * b);
            if rem.degree() == Some(dr) {
                return None;
            }
        }
        Some(YPoly::from_coeffs(quot))
    }

    /// Substitutes `X = x(T)`, `Y = y(T)`.
    pub fn eval_param(&self, x: &Poly, y: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * y) + &c.compose(x);
        }
        acc
    }

    /// Substitutes a rational value for `X`.
    pub fn eval_x(&self, x: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c.eval(x)).collect())
    }

    /// Substitutes a `Y`-polynomial for `Y`.
    pub fn compose_y(&self, inner: &YPoly) -> YPoly {
        let mut acc = YPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &YPoly::from_x(c.clone());
        }
        acc
    }

    /// Nonzero terms as `(coefficient, x-exponent, y-exponent)`.
    pub fn terms(&self) -> Vec<(Rational, usize, usize)> {
        let mut out = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            for (i, a) in c.terms() {
                out.push((a.clone(), i, j));
            }
        }
        out
    }

    /// Canonical text: decreasing `Y`-degree, then increasing `X`-degree.
    pub fn display_in(&self, xv: &str, yv: &str) -> String {
        let mut terms = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            for (i, a) in c.terms() {
                terms.push((a.clone(), vec![(xv, i), (yv, j)]));
            }
        }
        crate::expr::format_terms(terms)
    }

    /// `true` if every non-leading coefficient vanishes at `X = 0`.
    pub fn is_local(&self) -> bool {
        let d = self.deg();
        self.coeffs[..d].iter().all(|c| c.constant_term().is_zero())
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("X", "Y"))
    }
}

impl fmt::Debug for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YPoly({self})")
    }
}

impl From<XPoly> for YPoly {
    fn from(a: XPoly) -> Self {
        YPoly::from_x(a)
    }
}

impl<'a> Add<&'a YPoly> for &'a YPoly {
    type Output = YPoly;
    fn add(self, rhs: &'a YPoly) -> YPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|j| match (self.coeffs.get(j), rhs.coeffs.get(j)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        YPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a YPoly> for &'a YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &'a YPoly) -> YPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|j| match (self.coeffs.get(j), rhs.coeffs.get(j)) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            })
            .collect();
        YPoly::from_coeffs(coeffs)
    }
}

impl<'a> Mul<&'a YPoly> for &'a YPoly {
    type Output = YPoly;
    fn mul(self, rhs: &'a YPoly) -> YPoly {
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero();
        }
        let mut coeffs = vec![Poly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        YPoly::from_coeffs(coeffs)
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        -&self
    }
}

impl Add for YPoly {
    type Output = YPoly;
    fn add(self, rhs: YPoly) -> YPoly {
        &self + &rhs
    }
}

impl Sub for YPoly {
    type Output = YPoly;
    fn sub(self, rhs: YPoly) -> YPoly {
        &self - &rhs
    }
}

impl Mul for YPoly {
    type Output = YPoly;
    fn mul(self, rhs: YPoly) -> YPoly {
        &self * &rhs
    }
}

impl Zero for YPoly {
    fn zero() -> Self {
        YPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for YPoly {
    fn one() -> Self {
        YPoly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{f_ex, yp};

    #[test]
    fn divide_by_y() {
        let (q, r) = YPoly::y_pow(2).div_rem(&YPoly::y()).unwrap();
        assert_eq!(q, YPoly::y());
        assert!(r.is_zero());
    }

    #[test]
    fn divide_f_ex_by_cusp() {
        let f = f_ex();
        let b = yp("Y^2 - X^3");
        let (q, r) = f.div_rem(&b).unwrap();
        assert_eq!(q, yp("Y^2 - X^3"));
        assert_eq!(r, yp("-4*X^5*Y - X^7"));
        // multiply-back oracle
        assert_eq!(&(&q * &b) + &r, f);
    }

    #[test]
    fn dividend_below_divisor_degree() {
        let c = yp("7");
        let (q, r) = c.div_rem(&yp("Y - 3")).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, c);
    }

    #[test]
    fn non_monic_divisor_rejected() {
        assert!(matches!(f_ex().div_rem(&yp("2*Y - X")), Err(Error::NonMonicDivisor)));
        assert!(matches!(f_ex().div_rem(&YPoly::zero()), Err(Error::NonMonicDivisor)));
    }

    #[test]
    fn exact_division_general() {
        let a = yp("X*Y + X^2");
        let b = yp("Y^2 - X^3");
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a));
        assert_eq!(b.exact_div(&yp("X*Y")), None);
    }

    #[test]
    fn substitution_of_parameterization() {
        let x = Poly::from_ints(&[0, 0, 0, 0, 1]);
        let y = Poly::from_ints(&[0, 0, 0, 0, 0, 0, 1, 1]);
        assert!(f_ex().eval_param(&x, &y).is_zero());
    }
}
