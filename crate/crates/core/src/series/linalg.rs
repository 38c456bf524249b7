//! Determinants and characteristic polynomials over exact commutative
//! `Q`-algebras.

use num_traits::{One, Zero};

use super::poly::Poly;
use super::ypoly::YPoly;
use crate::par;
use crate::Rational;

/// The arithmetic a fraction-free elimination needs.
pub trait Ring: Clone + PartialEq + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division known to be exact. Panics otherwise.
    fn exact_div(&self, other: &Self) -> Self;
    /// Division by a nonzero integer.
    fn div_int(&self, k: i64) -> Self;
    /// The image of a rational number.
    fn from_rational(q: &Rational) -> Self;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        self / other
    }
    fn div_int(&self, k: i64) -> Self {
        self / Rational::from_integer(k.into())
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        Poly::exact_div(self, other).expect("inexact polynomial division")
    }
    fn div_int(&self, k: i64) -> Self {
        self.scale(&Rational::new(1.into(), k.into()))
    }
    fn from_rational(q: &Rational) -> Self {
        Poly::constant(q.clone())
    }
}

impl Ring for YPoly {
    fn zero() -> Self {
        YPoly::zero()
    }
    fn one() -> Self {
        YPoly::one()
    }
    fn is_zero(&self) -> bool {
        YPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        YPoly::exact_div(self, other).expect("inexact division in Q[X][Y]")
    }
    fn div_int(&self, k: i64) -> Self {
        self.scale(&Rational::new(1.into(), k.into()))
    }
    fn from_rational(q: &Rational) -> Self {
        if Zero::is_zero(q) {
            YPoly::zero()
        } else {
            YPoly::from_x(Poly::constant(q.clone()))
        }
    }
}

/// Row-major square matrix.
pub type Matrix<R> = Vec<Vec<R>>;

/// Determinant by Bareiss fraction-free elimination.
///
/// Every intermediate entry is a minor of the input, so the divisions are
/// exact and entry sizes stay bounded. Row updates below the pivot run in
/// parallel when the `parallel` feature is on.
pub fn determinant<R: Ring>(mut m: Matrix<R>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        par::for_each_mut(rest, |row| {
            let factor = row[k].clone();
            for j in k + 1..n {
                let t = row[j].mul(pivot).sub(&factor.mul(&pivot_row[j]));
                row[j] = t.exact_div(&prev);
            }
            row[k] = R::zero();
        });
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

fn mat_mul<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Matrix<R> {
    let n = a.len();
    par::map_range(n, |i| {
        (0..n)
            .map(|j| {
                let mut acc = R::zero();
                for (k, aik) in a[i].iter().enumerate() {
                    if !aik.is_zero() && !b[k][j].is_zero() {
                        acc = acc.add(&aik.mul(&b[k][j]));
                    }
                }
                acc
            })
            .collect()
    })
}

/// Coefficients `c_0..c_n` (lowest first, `c_n = 1`) of `det(Y*I - A)`,
/// by the Faddeev-LeVerrier recursion.
pub fn char_poly<R: Ring>(a: &Matrix<R>) -> Vec<R> {
    let n = a.len();
    let mut coeffs = vec![R::zero(); n + 1];
    coeffs[n] = R::one();
    let mut m: Matrix<R> = vec![vec![R::zero(); n]; n];
    for k in 1..=n {
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = row[i].add(&coeffs[n - k + 1]);
        }
        let am = mat_mul(a, &m);
        let mut tr = R::zero();
        for (i, row) in am.iter().enumerate() {
            tr = tr.add(&row[i]);
        }
        coeffs[n - k] = tr.neg().div_int(k as i64);
        m = am;
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::int;

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    // cofactor expansion, independent of the elimination
    fn laplace(m: &Matrix<Rational>) -> Rational {
        let n = m.len();
        if n == 0 {
            return int(1);
        }
        let mut acc = int(0);
        for j in 0..n {
            let minor: Matrix<Rational> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &m[0][j] * laplace(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let cases = [
            qm(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]),
            qm(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]),
            qm(&[&[0, 0, 1, 2], &[0, 3, 1, 1], &[5, 1, 0, 2], &[1, 1, 1, 1]]),
            qm(&[&[1, 2], &[2, 4]]),
        ];
        for m in cases {
            assert_eq!(determinant(m.clone()), laplace(&m));
        }
    }

    #[test]
    fn char_poly_of_companion() {
        // companion of Y^2 - 3Y + 2
        let a = qm(&[&[0, -2], &[1, 3]]);
        assert_eq!(char_poly(&a), vec![int(2), int(-3), int(1)]);
    }
}
