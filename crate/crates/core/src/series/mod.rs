//! Coefficient arithmetic: polynomials in `X`, polynomials in `Y` over them,
//! truncated power series, determinants and resultants.

mod linalg;
mod poly;
mod resultant;
mod trunc;
mod ypoly;

pub use linalg::{char_poly, determinant, Matrix, Ring};
pub use poly::{rational_nth_root, Poly, XPoly};
pub use resultant::{intersection_number, norm, resultant_y, sylvester_matrix};
pub use trunc::TruncSeries;
pub use ypoly::YPoly;

use crate::{Extended, Rational};

/// Order of an `X`-polynomial at the origin.
pub fn xpoly_valuation(p: &XPoly) -> Extended<u64> {
    p.valuation()
}

/// Quotient and remainder of `a` by a monic `b`.
pub fn ypoly_divmod(a: &YPoly, b: &YPoly) -> crate::Result<(YPoly, YPoly)> {
    a.div_rem(b)
}

#[cfg(test)]
pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub(crate) fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
