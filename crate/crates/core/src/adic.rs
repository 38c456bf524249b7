//! `Q`-adic expansions, the Tschirnhausen operator and approximate roots.
//!
//! The approximate `p`-th root of a monic `P` of degree `n` is the unique
//! monic `Q` of degree `n/p` with `deg(P - Q^p) < n - n/p`. It is computed
//! here three ways: solving the coefficient equations top-down
//! ([`approx_root_direct`]), iterating the Tschirnhausen operator
//! ([`approx_root_iterated`]), and truncating the binomial series of
//! `P^(1/p)` in `1/Y` ([`approx_root_meromorphic`]).

use num_bigint::BigInt;
use num_traits::One;

use crate::series::{Poly, TruncSeries, XPoly, YPoly};
use crate::{Error, Rational, Result};

/// `P = a_0 Q^s + a_1 Q^(s-1) + ... + a_s` with `deg a_i < deg Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdicExpansion {
    pub base: YPoly,
    /// `a_0, ..., a_s`.
    pub digits: Vec<YPoly>,
    pub s: usize,
}

impl AdicExpansion {
    pub fn reassemble(&self) -> YPoly {
        let mut acc = YPoly::zero();
        for d in &self.digits {
            acc = &(&acc * &self.base) + d;
        }
        acc
    }
}

/// Digits of `p` in base `q`, most significant first. Only `q` needs to be
/// monic. The zero polynomial has the single digit `0`.
pub fn adic_digits(p: &YPoly, q: &YPoly) -> Result<Vec<YPoly>> {
    if !q.is_monic() || q.deg() == 0 {
        return Err(if q.is_monic() {
            Error::DegreeMismatch("base must have positive degree in Y".into())
        } else {
            Error::NonMonic
        });
    }
    let mut digits = Vec::new();
    let mut cur = p.clone();
    while cur.degree().is_some_and(|d| d >= q.deg()) {
        let (quot, rem) = cur.div_rem(q)?;
        digits.push(rem);
        cur = quot;
    }
    digits.push(cur);
    digits.reverse();
    Ok(digits)
}

/// The unique `Q`-adic expansion of a monic `P`.
pub fn qadic_expand(p: &YPoly, q: &YPoly) -> Result<AdicExpansion> {
    if !p.is_monic() || !q.is_monic() {
        return Err(Error::NonMonic);
    }
    let digits = adic_digits(p, q)?;
    Ok(AdicExpansion { base: q.clone(), s: digits.len() - 1, digits })
}

fn degree_quotient(p: &YPoly, q_deg: usize, what: &str) -> Result<usize> {
    let n = p.deg();
    if q_deg == 0 || n % q_deg != 0 {
        return Err(Error::DegreeMismatch(format!("{what} {q_deg} does not divide deg P = {n}")));
    }
    Ok(n / q_deg)
}

fn rational_int(k: u64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

/// `tau_P(Q) = Q + a_1 / s`, one completion step towards `P^(1/s)`.
pub fn tschirnhausen(p: &YPoly, q: &YPoly) -> Result<YPoly> {
    if !p.is_monic() || !q.is_monic() {
        return Err(Error::NonMonic);
    }
    let s = degree_quotient(p, q.deg(), "deg Q")?;
    let exp = qadic_expand(p, q)?;
    let a1 = &exp.digits[1];
    Ok(q + &a1.scale(&rational_int(s as u64).recip()))
}

fn check_root_args(p: &YPoly, root: usize) -> Result<usize> {
    if !p.is_monic() {
        return Err(Error::NonMonic);
    }
    if root == 0 {
        return Err(Error::DegreeMismatch("root index must be positive".into()));
    }
    if p.deg() % root != 0 {
        return Err(Error::DegreeMismatch(format!("{root} does not divide deg P = {}", p.deg())));
    }
    Ok(p.deg() / root)
}

/// Multisets of positive parts summing to `k` with at most `max_parts`
/// parts, as multiplicity vectors indexed by part size (`v[j]` = count of j).
fn bounded_partitions(k: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, largest: usize, parts_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for j in (1..=largest.min(rem)).rev() {
            cur[j] += 1;
            rec(rem - j, j, parts_left - 1, cur, out);
            cur[j] -= 1;
        }
    }
    let mut out = Vec::new();
    rec(k, k, max_parts, &mut vec![0; k + 1], &mut out);
    out
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Approximate `p`-th root by solving for the coefficients `c_1, ..., c_m` of
/// `Q = Y^m + c_1 Y^(m-1) + ... + c_m` one at a time.
///
/// The coefficient of `Y^(n-k)` in `Q^p` is `p c_k` plus a polynomial in
/// `c_1..c_(k-1)`; matching it with `alpha_k` determines `c_k`.
pub fn approx_root_direct(p: &YPoly, root: usize) -> Result<YPoly> {
    let m = check_root_args(p, root)?;
    let p_fact = factorial(root);
    let inv_p = rational_int(root as u64).recip();
    let mut c: Vec<XPoly> = vec![Poly::one()];
    for k in 1..=m {
        let mut known = XPoly::zero();
        for parts in bounded_partitions(k, root) {
            if parts[k] == 1 {
                continue; // the p*c_k term itself
            }
            let used: usize = parts.iter().sum();
            let mut denom = factorial(root - used);
            let mut prod = Poly::one();
            for (j, &mult) in parts.iter().enumerate().skip(1) {
                if mult > 0 {
                    denom *= factorial(mult);
                    prod = &prod * &c[j].pow(mult as u32);
                }
            }
            if prod.is_zero() {
                continue;
            }
            let multinomial = Rational::from_integer(&p_fact / denom);
            known = &known + &prod.scale(&multinomial);
        }
        c.push((&p.alpha(k) - &known).scale(&inv_p));
    }
    Ok(YPoly::from_coeffs(c.into_iter().rev().collect()))
}

/// Approximate root by repeated Tschirnhausen steps from `seed`, together
/// with the number of steps applied. Stops early at a fixed point.
pub fn approx_root_iterated_counted(p: &YPoly, root: usize, seed: &YPoly) -> Result<(YPoly, usize)> {
    let m = check_root_args(p, root)?;
    if !seed.is_monic() || seed.deg() != m {
        return Err(Error::DegreeMismatch(format!("seed must be monic of degree {m}")));
    }
    let inv_s = rational_int(root as u64).recip();
    let mut q = seed.clone();
    for step in 1..=m {
        let digits = adic_digits(p, &q)?;
        let a1 = &digits[1];
        if a1.is_zero() {
            return Ok((q, step));
        }
        q = &q + &a1.scale(&inv_s);
    }
    Ok((q, m))
}

/// Approximate root by iterating the Tschirnhausen operator from `seed`.
pub fn approx_root_iterated(p: &YPoly, root: usize, seed: &YPoly) -> Result<YPoly> {
    approx_root_iterated_counted(p, root, seed).map(|(q, _)| q)
}

/// Approximate root as the polynomial part of `Y^m (1 + u)^(1/p)`, where
/// `P = Y^n (1 + u)` and `u` is a series in `Z = 1/Y`.
pub fn approx_root_meromorphic(p: &YPoly, root: usize) -> Result<YPoly> {
    let m = check_root_args(p, root)?;
    let precision = m + 1;
    let u = TruncSeries::new((0..precision).map(|i| if i == 0 { XPoly::zero() } else { p.alpha(i) }).collect(), precision);
    let exponent = Rational::new(BigInt::one(), BigInt::from(root));
    let series = TruncSeries::binomial(&exponent, precision).compose(&u);
    let coeffs: Vec<XPoly> = (0..=m).rev().map(|j| series.coeff(j)).collect();
    Ok(YPoly::from_coeffs(coeffs))
}

/// The approximate root, by the direct method.
pub fn approx_root(p: &YPoly, root: usize) -> Result<YPoly> {
    approx_root_direct(p, root)
}

/// `deg(P - Q^p) < deg P - deg P / p`, the defining property of `P^(1/p)`.
pub fn satisfies_root_inequality(p: &YPoly, q: &YPoly, root: usize) -> bool {
    let n = p.deg();
    let diff = p - &q.pow(root as u32);
    match diff.degree() {
        None => true,
        Some(d) => d + n / root < n,
    }
}
