use crate::expr::{parse_curve, parse_poly};
use crate::{Poly, YPoly};

pub fn yp(s: &str) -> YPoly {
    parse_curve(s).unwrap()
}

pub fn xp(s: &str) -> Poly {
    parse_poly(s, "X").unwrap()
}

pub fn tp(s: &str) -> Poly {
    parse_poly(s, "T").unwrap()
}

pub fn f_ex() -> YPoly {
    yp("Y^4 - 2*X^3*Y^2 - 4*X^5*Y + X^6 - X^7")
}
