//! Resultants with respect to `Y` and intersection multiplicities.

use super::linalg::{char_poly, determinant, Matrix};
use super::poly::{Poly, XPoly};
use super::ypoly::YPoly;
use crate::Extended;

/// Sylvester matrix of `a` and `b` in `Y`: the first `deg b` rows hold the
/// coefficients of `a` (highest first), each shifted one column right of the
/// previous; the last `deg a` rows do the same for `b`.
pub fn sylvester_matrix(a: &YPoly, b: &YPoly) -> Matrix<XPoly> {
    let m = a.deg();
    let n = b.deg();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (p, deg, count) in [(a, m, n), (b, n, m)] {
        for r in 0..count {
            let mut row = vec![Poly::zero(); size];
            for k in 0..=deg {
                row[r + k] = p.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    rows
}

/// `Res_Y(a, b)`, the determinant of [`sylvester_matrix`].
///
/// Zero iff `a` and `b` share a factor of positive `Y`-degree.
pub fn resultant_y(a: &YPoly, b: &YPoly) -> XPoly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    determinant(sylvester_matrix(a, b))
}

/// Intersection multiplicity `(f, phi)` at the origin, as the `X`-order of
/// `Res_Y(f, phi)` for monic `f`. Infinite when the curves share a component.
pub fn intersection_number(f: &YPoly, phi: &YPoly) -> Extended<u64> {
    resultant_y(f, phi).valuation()
}

/// Norm of `Y - y(T)` from `Q[X][T]/(m)` down to `Q[X]`, where `m` is a
/// polynomial in `T` over `Q[X]` (stored as a [`YPoly`] whose main variable
/// is `T`), monic in `T`.
///
/// This is the characteristic polynomial of multiplication by `y` on the
/// basis `1, T, ..., T^(d-1)`; it equals `Res_T(m, Y - y(T))` up to sign and
/// is monic of degree `d` in `Y`.
pub fn norm(y: &Poly, m: &YPoly) -> YPoly {
    assert!(m.is_monic(), "modulus must be monic in T");
    let d = m.deg();
    if d == 0 {
        return YPoly::one();
    }
    let top = y.degree().unwrap_or(0) + d;
    // powers[k] = T^k reduced mod m, as d coefficients
    let mut powers: Vec<Vec<XPoly>> = Vec::with_capacity(top);
    let mut cur = vec![Poly::zero(); d];
    cur[0] = Poly::one();
    for _ in 0..top {
        powers.push(cur.clone());
        let carry = cur[d - 1].clone();
        for k in (1..d).rev() {
            cur[k] = cur[k - 1].clone();
        }
        cur[0] = Poly::zero();
        if !carry.is_zero() {
            for (k, slot) in cur.iter_mut().enumerate() {
                *slot = &*slot - &(&carry * &m.coeff(k));
            }
        }
    }
    let mut a: Matrix<XPoly> = vec![vec![Poly::zero(); d]; d];
    for col in 0..d {
        for (j, c) in y.terms() {
            for (row, entry) in powers[col + j].iter().enumerate() {
                if !entry.is_zero() {
                    a[row][col] = &a[row][col] + &entry.scale(c);
                }
            }
        }
    }
    YPoly::from_coeffs(char_poly(&a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{f_ex, xp, yp};

    #[test]
    fn linear_factors() {
        // det [[1, -X], [1, X]] = 2X
        assert_eq!(resultant_y(&yp("Y - X"), &yp("Y + X")), xp("2*X"));
    }

    #[test]
    fn resultant_with_y_is_constant_term() {
        assert_eq!(resultant_y(&f_ex(), &yp("Y")), xp("X^6 - X^7"));
    }

    #[test]
    fn f_ex_meets_cusp_thirteen_times() {
        assert_eq!(resultant_y(&f_ex(), &yp("Y^2 - X^3")).valuation(), Extended::Finite(13));
    }

    #[test]
    fn intersection_examples() {
        let f = f_ex();
        assert_eq!(intersection_number(&f, &yp("Y")), Extended::Finite(6));
        assert_eq!(intersection_number(&f, &f), Extended::Infinity);
        assert_eq!(intersection_number(&f, &yp("Y - X")), Extended::Finite(4));
        // oracle: Res(f, Y - X) = f(X, X) up to sign
        let fxx = f.eval_param(&Poly::var(), &Poly::var());
        let r = resultant_y(&f, &yp("Y - X"));
        assert!(r == fxx || r == -&fxx);
    }

    #[test]
    fn norm_of_cusp_parameterization() {
        // T^2 = X, y = T^3
        let m = YPoly::from_coeffs(vec![-Poly::var(), Poly::zero(), Poly::one()]);
        let f = norm(&Poly::from_ints(&[0, 0, 0, 1]), &m);
        assert_eq!(f, yp("Y^2 - X^3"));
        // against the Sylvester resultant in T, computed over Q[X][Y]
        let sylv = resultant_generic_t();
        assert!(sylv == f || sylv == -&f);
    }

    // Res_T(T^2 - X, T^3 - Y) by a 5x5 Sylvester determinant over Q[X][Y]
    fn resultant_generic_t() -> YPoly {
        let x = YPoly::from_x(Poly::var());
        let y = YPoly::y();
        let one = YPoly::one();
        let z = YPoly::zero();
        let a = [one.clone(), z.clone(), -&x];
        let b = [one.clone(), z.clone(), z.clone(), -&y];
        let mut rows: Matrix<YPoly> = Vec::new();
        for r in 0..3 {
            let mut row = vec![z.clone(); 5];
            for (k, c) in a.iter().enumerate() {
                row[r + k] = c.clone();
            }
            rows.push(row);
        }
        for r in 0..2 {
            let mut row = vec![z.clone(); 5];
            for (k, c) in b.iter().enumerate() {
                row[r + k] = c.clone();
            }
            rows.push(row);
        }
        determinant(rows)
    }

    #[test]
    fn constant_second_argument() {
        // Res(a, c) = c^deg(a)
        assert_eq!(resultant_y(&yp("Y^3 + X"), &yp("2")), xp("8"));
    }
}
