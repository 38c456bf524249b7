//! Polynomial maps `T -> (P(T), Q(T))` of the line into the plane: their
//! implicit equations, the epimorphism test with a rectifying chain of
//! plane automorphisms, and the characteristic data of the branch at
//! infinity.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::branch::{revert, CharData};
use crate::series::{norm, rational_nth_root, Poly, TruncSeries, XPoly, YPoly};
use crate::expr::format_terms;
use crate::{Error, Rational, Result};

/// `X = P(T)`, `Y = Q(T)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyPair {
    pub p: Poly,
    pub q: Poly,
}

impl PolyPair {
    pub fn new(p: Poly, q: Poly) -> Self {
        PolyPair { p, q }
    }

    /// The coordinate line `(T, 0)`.
    pub fn line() -> Self {
        PolyPair { p: Poly::var(), q: Poly::zero() }
    }
}

/// One elementary automorphism, read as a substitution acting on the pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elementary {
    /// `(P, Q) -> (a P + b, c Q + d)`, `a, c` nonzero.
    Affine { a: Rational, b: Rational, c: Rational, d: Rational },
    /// `(P, Q) -> (P - c Q^m, Q)`.
    First { c: Rational, m: u32 },
    /// `(P, Q) -> (P, Q - c P^m)`.
    Second { c: Rational, m: u32 },
}

impl Elementary {
    fn act<R>(&self, p: &R, q: &R, lift: impl Fn(&Rational) -> R) -> (R, R)
    where
        R: Clone + Powers,
        for<'a> &'a R: std::ops::Add<&'a R, Output = R> + std::ops::Sub<&'a R, Output = R> + std::ops::Mul<&'a R, Output = R>,
    {
        match self {
            Elementary::Affine { a, b, c, d } => (&(&lift(a) * p) + &lift(b), &(&lift(c) * q) + &lift(d)),
            Elementary::First { c, m } => (p - &(&lift(c) * &q.power(*m)), q.clone()),
            Elementary::Second { c, m } => (p.clone(), q - &(&lift(c) * &p.power(*m))),
        }
    }
}

trait Powers {
    fn power(&self, m: u32) -> Self;
}

impl Powers for Poly {
    fn power(&self, m: u32) -> Self {
        self.pow(m)
    }
}

impl Powers for YPoly {
    fn power(&self, m: u32) -> Self {
        self.pow(m)
    }
}

impl fmt::Display for Elementary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = Rational::one();
        let (p, q) = match self {
            Elementary::Affine { a, b, c, d } => (
                format_terms([(a.clone(), vec![("P", 1)]), (b.clone(), vec![])]),
                format_terms([(c.clone(), vec![("Q", 1)]), (d.clone(), vec![])]),
            ),
            Elementary::First { c, m } => (
                format_terms([(one, vec![("P", 1)]), (-c, vec![("Q", *m as usize)])]),
                "Q".to_string(),
            ),
            Elementary::Second { c, m } => (
                "P".to_string(),
                format_terms([(one, vec![("Q", 1)]), (-c, vec![("P", *m as usize)])]),
            ),
        };
        write!(f, "(P, Q) -> ({p}, {q})")
    }
}

/// Elementary steps applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AutomorphismChain {
    pub steps: Vec<Elementary>,
}

impl AutomorphismChain {
    pub fn apply(&self, pp: &PolyPair) -> PolyPair {
        let (mut p, mut q) = (pp.p.clone(), pp.q.clone());
        for s in &self.steps {
            (p, q) = s.act(&p, &q, |r| Poly::constant(r.clone()));
        }
        PolyPair { p, q }
    }

    /// The chain applied to the coordinate functions: polynomials
    /// `(U(X, Y), V(X, Y))` with `U(P, Q)`, `V(P, Q)` equal to `apply`.
    pub fn apply_symbolic(&self) -> (YPoly, YPoly) {
        let (mut u, mut v) = (YPoly::from_x(Poly::var()), YPoly::y());
        for s in &self.steps {
            (u, v) = s.act(&u, &v, |r| YPoly::from_x(Poly::constant(r.clone())));
        }
        (u, v)
    }
}

/// Verdict of [`epimorphism_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpiCheck {
    pub epimorphism: bool,
    /// A chain taking the pair to `(T, 0)` when `epimorphism` holds; the
    /// steps taken before failing otherwise.
    pub chain: AutomorphismChain,
}

/// The implicit equation `F` of the image, `F(P(T), Q(T)) = 0`, monic of
/// degree `deg P` in `Y` and of degree `deg Q` in `X`.
pub fn implicit_curve(pp: &PolyPair) -> Result<YPoly> {
    let n = pp.p.degree().filter(|&d| d >= 1).ok_or(Error::DegenerateMap)?;
    pp.q.degree().filter(|&d| d >= 1).ok_or(Error::DegenerateMap)?;
    // (P(T) - X) / alpha_0 as a monic polynomial in T over Q[X]
    let inv = pp.p.leading_coeff().recip();
    let mut m: Vec<XPoly> = pp.p.coeffs().iter().map(|c| Poly::constant(c * &inv)).collect();
    m[0] = &m[0] - &Poly::monomial(inv, 1);
    debug_assert!(m[n].is_one());
    Ok(norm(&pp.q, &YPoly::from_coeffs(m)))
}

/// `deg_T G(P(T), Q(T))`.
pub fn composition_degree(g: &YPoly, pp: &PolyPair) -> Result<u64> {
    g.eval_param(&pp.p, &pp.q).degree().map(|d| d as u64).ok_or(Error::IdenticallyZero)
}

/// Whether `X -> P, Y -> Q` maps `Q[X, Y]` onto `Q[T]`, with a chain of
/// elementary automorphisms straightening the pair to `(T, 0)`.
///
/// While both degrees are positive one of them must divide the other, and
/// a triangular step cancels the leading term of the higher one. Once a
/// coordinate is constant the other must be linear.
pub fn epimorphism_check(pp: &PolyPair) -> EpiCheck {
    let mut chain = AutomorphismChain::default();
    let mut cur = pp.clone();
    while cur != PolyPair::line() {
        let n = cur.p.degree().unwrap_or(0);
        let m = cur.q.degree().unwrap_or(0);
        let step = match (n, m) {
            (0, 0) => return EpiCheck { epimorphism: false, chain },
            (0, 1) => {
                let (b0, b1) = (cur.q.coeff(1), cur.q.coeff(0));
                chain.steps.push(Elementary::Affine {
                    a: Rational::one(),
                    b: -cur.p.constant_term(),
                    c: b0.recip(),
                    d: -(b1 / &b0),
                });
                chain.steps.push(Elementary::First { c: -Rational::one(), m: 1 });
                chain.steps.push(Elementary::Second { c: Rational::one(), m: 1 });
                break;
            }
            (1, 0) => {
                let (a0, a1) = (cur.p.coeff(1), cur.p.coeff(0));
                chain.steps.push(Elementary::Affine {
                    a: a0.recip(),
                    b: -(a1 / &a0),
                    c: Rational::one(),
                    d: -cur.q.constant_term(),
                });
                break;
            }
            (0, _) | (_, 0) => return EpiCheck { epimorphism: false, chain },
            (n, m) if n % m == 0 => {
                let k = (n / m) as u32;
                let c = cur.p.leading_coeff() / cur.q.leading_coeff().pow(k as i32);
                Elementary::First { c, m: k }
            }
            (n, m) if m % n == 0 => {
                let k = (m / n) as u32;
                let c = cur.q.leading_coeff() / cur.p.leading_coeff().pow(k as i32);
                Elementary::Second { c, m: k }
            }
            _ => return EpiCheck { epimorphism: false, chain },
        };
        cur = AutomorphismChain { steps: vec![step.clone()] }.apply(&cur);
        chain.steps.push(step);
    }
    debug_assert_eq!(chain.apply(pp), PolyPair::line());
    EpiCheck { epimorphism: true, chain }
}

/// `tau^low * (c_0 + c_1 tau + ...)`, known for exponents below `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    pub low: i64,
    pub coeffs: Poly,
    pub bound: i64,
}

impl Laurent {
    pub fn coeff(&self, e: i64) -> Rational {
        if e < self.low {
            return Rational::zero();
        }
        self.coeffs.coeff((e - self.low) as usize)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<i64> {
        self.coeffs.support().map(|j| j as i64 + self.low).collect()
    }

    pub fn display_in(&self, var: &str) -> String {
        let names: Vec<String> = self
            .coeffs
            .terms()
            .map(|(j, _)| match j as i64 + self.low {
                1 => var.to_string(),
                e => format!("{var}^{e}"),
            })
            .collect();
        let terms = self.coeffs.terms().zip(&names).map(|((j, c), name)| {
            let factor = if j as i64 + self.low == 0 { vec![] } else { vec![(name.as_str(), 1)] };
            (c.clone(), factor)
        });
        format_terms(terms)
    }
}

/// Newton-Puiseux parameterization of the branch at infinity: with
/// `x = 1/X = tau^N`, returns `N` and `y(tau) = Q(T(tau))`, known for
/// exponents below `precision`.
pub fn merom_param_at_infinity(pp: &PolyPair, precision: i64) -> Result<(u64, Laurent)> {
    let n = pp.p.degree().filter(|&d| d >= 1).ok_or(Error::DegenerateMap)?;
    let m = pp.q.degree().unwrap_or(0);
    let a0 = pp.p.leading_coeff();
    let root = rational_nth_root(&a0.recip(), n as u32).ok_or(Error::IrrationalLeadingRoot(n as u64))?;
    // terms needed of power series in tau after pulling out tau^(-m)
    let len = (precision + m as i64).max(1) as usize;
    // with s = 1/T: P = s^(-n) a0 (1 + w(s)), tau = s a0^(-1/n) (1 + w)^(-1/n)
    let w: Vec<Rational> = (0..len).map(|i| if i == 0 { Rational::zero() } else { pp.p.coeff(n.wrapping_sub(i)) / &a0 }).collect();
    let w: Vec<Rational> = w.into_iter().enumerate().map(|(i, c)| if i > n { Rational::zero() } else { c }).collect();
    let unit = TruncSeries::binomial(&Rational::new(BigInt::from(-1), BigInt::from(n)), len).compose(&TruncSeries::new(w, len));
    let tau_of_s: Vec<Rational> = std::iter::once(Rational::zero()).chain(unit.coeffs().iter().map(|c| c * &root)).collect();
    let s_of_tau = revert(&TruncSeries::new(tau_of_s, len + 1));
    // s / tau, a unit
    let ratio = TruncSeries::new(s_of_tau.coeffs()[1..].to_vec(), len);
    // y = s^(-m) (b0 + b1 s + ... + bm s^m) = tau^(-m) (s/tau)^(-m) Qrev(s)
    let qrev: Vec<Rational> = (0..=m).map(|i| pp.q.coeff(m - i)).collect();
    let qrev_s = TruncSeries::new(qrev, len + 1).compose(&TruncSeries::new(s_of_tau.coeffs().to_vec(), len + 1));
    let inv_ratio_pow = TruncSeries::binomial(&Rational::from_integer(BigInt::from(-(m as i64))), len)
        .compose(&TruncSeries::new(
            ratio.coeffs().iter().enumerate().map(|(i, c)| if i == 0 { c - Rational::one() } else { c.clone() }).collect(),
            len,
        ))
        .scale(&ratio.coeff(0).pow(-(m as i32)));
    let v = inv_ratio_pow.mul(&TruncSeries::new(qrev_s.coeffs()[..len].to_vec(), len));
    let coeffs = Poly::from_coeffs(v.coeffs().to_vec()).truncate(len);
    Ok((n as u64, Laurent { low: -(m as i64), coeffs, bound: precision }))
}

/// Characteristic data with `B_0 = -N`, the other exponents taken from the
/// support of `y` as for local branches.
pub type MeromCharData = CharData;

pub fn merom_char_sequence(n: u64, y: &Laurent) -> Result<MeromCharData> {
    let support = y.support();
    let mut b = vec![-(n as i64)];
    let mut e = n as i64;
    while e > 1 {
        let next = support.iter().copied().find(|j| j % e != 0).ok_or(Error::InsufficientPrecision)?;
        b.push(next);
        e = num_integer::gcd(e, next);
    }
    CharData::from_b(b)
}

/// Digits `(i_-1, i_0, ..., i_(G-1))` with `gamma = i_-1 B̄_0 + sum i_k B̄_(k+1)`,
/// `i_-1 >= 0` and `0 <= i_k < N_(k+1)`.
pub fn strict_expand(gamma: i64, md: &MeromCharData) -> Result<Vec<u64>> {
    let g = md.genus;
    let total: u64 = md.n_seq.iter().product();
    let mut found: Option<Vec<u64>> = None;
    for mut code in 0..total {
        let mut digits = vec![0u64; g + 1];
        let mut rest = gamma as i128;
        for k in 0..g {
            let base = md.n_seq[k];
            digits[k + 1] = code % base;
            code /= base;
            rest -= digits[k + 1] as i128 * md.bbar[k + 1] as i128;
        }
        let b0 = md.bbar[0] as i128;
        if rest % b0 == 0 && rest / b0 >= 0 {
            digits[0] = (rest / b0) as u64;
            debug_assert!(found.is_none(), "strict expansions are unique");
            found.get_or_insert(digits);
        }
    }
    found.ok_or(Error::NotRepresentable(gamma))
}
