//! Exact computations on plane branches: approximate roots, characteristic
//! sequences and semigroups, semiroot expansions, embedded resolution graphs
//! and the embedding-line reduction for polynomial maps of the line.
//!
//! Everything is done over the rationals with arbitrary-precision integers.
//! A curve germ is a polynomial `f` in `Q[X][Y]`, monic in `Y`; a branch can
//! also be given by a parameterization `X = T^n`, `Y = y(T)`.
//!
//! ```
//! use approxroot::{char_roots, expr};
//!
//! let f = expr::parse_curve("Y^4 - 2*X^3*Y^2 - 4*X^5*Y + X^6 - X^7").unwrap();
//! let report = char_roots::char_approx_roots(&f).unwrap();
//! assert_eq!(report.char_data.b, vec![4, 6, 7]);
//! assert_eq!(report.char_data.bbar, vec![4, 6, 13]);
//! ```

use std::fmt;

pub mod adic;
pub mod batch;
pub mod branch;
pub mod char_roots;
pub mod embedding;
pub mod expr;
pub mod par;
pub mod resolution;
pub mod sample;
pub mod series;

#[cfg(test)]
pub(crate) mod test_support;

pub use series::{Poly, TruncSeries, XPoly, YPoly};

/// Exact rational numbers, always stored in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub type Result<T> = std::result::Result<T, Error>;

/// A value that may be infinite, such as the order of the zero polynomial or
/// the intersection number of a curve with itself.
///
/// Every finite value compares below `Infinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended<T> {
    Finite(T),
    Infinity,
}

impl<T> Extended<T> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    pub fn finite(self) -> Option<T> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinity => None,
        }
    }

    pub fn as_ref(&self) -> Extended<&T> {
        match self {
            Extended::Finite(v) => Extended::Finite(v),
            Extended::Infinity => Extended::Infinity,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Extended<U> {
        match self {
            Extended::Finite(v) => Extended::Finite(f(v)),
            Extended::Infinity => Extended::Infinity,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Extended<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => v.fmt(f),
            Extended::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("divisor is not monic in Y")]
    NonMonicDivisor,
    #[error("polynomial is not monic in Y")]
    NonMonic,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("parameterization is not primitive (exponent gcd {0})")]
    NotPrimitive(u64),
    #[error("parameterization does not pass through the origin")]
    NotLocal,
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("coincidence order {0} is not attainable")]
    InvalidCoincidence(String),
    #[error("first exponent {0} is not admissible")]
    IllegalFirstExponent(i64),
    #[error("characteristic sequence is not generic (b0 = {b0} must be below b1 = {b1})")]
    NotGeneric { b0: i64, b1: i64 },
    #[error("not an irreducible local branch: {0}")]
    NotIrreducibleEvidence(String),
    #[error("semiroot degrees do not form a divisor ladder: {0}")]
    DegreeLadderInvalid(String),
    #[error("branch is smooth; its minimal resolution is empty")]
    SmoothBranch,
    #[error("strict transform is not a curvette of the minimal resolution: {0}")]
    NotResolved(String),
    #[error("map is degenerate: a coordinate is constant")]
    DegenerateMap,
    #[error("composition vanishes identically")]
    IdenticallyZero,
    #[error("leading coefficient has no rational {0}-th root")]
    IrrationalLeadingRoot(u64),
    #[error("precision too low to reach gcd 1")]
    InsufficientPrecision,
    #[error("{0} is not in the semigroup")]
    NotRepresentable(i64),
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("irrational or non-exact literal at byte {offset}")]
    IrrationalLiteral { offset: usize },
}
