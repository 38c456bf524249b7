//! Branches given by Newton-Puiseux parameterizations, their characteristic
//! data and semigroups, and the invariants that can be read off directly
//! from a parameterization.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::series::{self, norm, Poly, TruncSeries, YPoly};
use crate::{Error, Extended, Rational, Result};

/// `X = T^n`, `Y = y(T)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Parameterization {
    n: u64,
    y: Poly,
}

impl Parameterization {
    /// Checks primitivity: the gcd of `n` and the exponents of `y` is 1.
    pub fn new(n: u64, y: Poly) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotPrimitive(0));
        }
        let g = y.support().fold(n, |g, j| g.gcd(&(j as u64)));
        if g != 1 {
            return Err(Error::NotPrimitive(g));
        }
        Ok(Parameterization { n, y })
    }

    /// Builds a primitive parameterization from integer coefficients of `y`,
    /// lowest degree first.
    pub fn from_ints(n: u64, y: &[i64]) -> Result<Self> {
        Parameterization::new(n, Poly::from_ints(y))
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn y(&self) -> &Poly {
        &self.y
    }

    /// `x(T) = T^n`.
    pub fn x(&self) -> Poly {
        Poly::monomial(Rational::one(), self.n as usize)
    }

    pub fn is_local(&self) -> bool {
        self.y.constant_term().is_zero()
    }

    fn require_local(&self) -> Result<()> {
        if self.is_local() {
            Ok(())
        } else {
            Err(Error::NotLocal)
        }
    }

    /// Reparameterizes an arbitrary local pair `(x(T), y(T))` so that the
    /// first coordinate becomes `S^k`, `k = ord x`. The new `y` is the series
    /// `y(T(S))` cut below `S^precision`.
    ///
    /// Needs the leading coefficient of `x` to have a rational `k`-th root.
    pub fn from_pair(x: &Poly, y: &Poly, precision: usize) -> Result<Self> {
        let k = x.low_degree().ok_or(Error::NotLocal)?;
        if k == 0 || !y.constant_term().is_zero() {
            return Err(Error::NotLocal);
        }
        let c = x.coeff(k);
        let c_root = series::rational_nth_root(&c, k as u32).ok_or(Error::IrrationalLeadingRoot(k as u64))?;
        // S = c^(1/k) T (x / (c T^k))^(1/k)
        let w = x.unshift(k).scale(&c.recip());
        let w_minus_one = TruncSeries::new((&w - &Poly::one()).into_coeffs(), precision);
        let root = TruncSeries::binomial(&Rational::new(BigInt::one(), BigInt::from(k)), precision).compose(&w_minus_one);
        let s_of_t: Vec<Rational> = std::iter::once(Rational::zero())
            .chain(root.coeffs().iter().map(|a| a * &c_root))
            .collect();
        let t_of_s = revert(&TruncSeries::new(s_of_t, precision));
        let y_series = TruncSeries::new(y.coeffs().to_vec(), precision).compose(&t_of_s);
        Parameterization::new(k as u64, Poly::from_coeffs(y_series.coeffs().to_vec()))
    }
}

/// Compositional inverse of a series `a_1 t + a_2 t^2 + ...` with `a_1 != 0`,
/// by Lagrange inversion: `[t^k] inverse = [t^(k-1)] (t / s)^k / k`.
pub(crate) fn revert(s: &TruncSeries) -> TruncSeries {
    let p = s.precision();
    let a1 = s.coeff(1);
    assert!(!a1.is_zero(), "series is not invertible");
    if p <= 1 {
        return TruncSeries::zero(p);
    }
    // w = t / s, inverted term by term
    let inv_a1 = a1.recip();
    let mut w: Vec<Rational> = Vec::with_capacity(p - 1);
    for k in 0..p - 1 {
        if k == 0 {
            w.push(inv_a1.clone());
            continue;
        }
        let mut acc = Rational::zero();
        for j in 1..=k {
            let a = s.coeff(j + 1);
            if !a.is_zero() {
                acc += a * &w[k - j];
            }
        }
        w.push(-acc * &inv_a1);
    }
    let w = TruncSeries::new(w, p - 1);
    let mut coeffs = vec![Rational::zero(); p];
    let mut power = w.clone();
    for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = power.coeff(k - 1) / Rational::from_integer(BigInt::from(k));
        power = power.mul(&w);
    }
    TruncSeries::new(coeffs, p)
}

/// Characteristic sequence and semigroup generators of a branch.
///
/// `b[0]` is the degree `N` (negative for branches at infinity), `e[k]` the
/// gcd of `|b[0]|..|b[k]|`, `n_seq[k-1] = e[k-1]/e[k]`, and `bbar` the
/// minimal generators of the semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharData {
    pub b: Vec<i64>,
    pub e: Vec<u64>,
    pub n_seq: Vec<u64>,
    pub bbar: Vec<i64>,
    pub genus: usize,
}

impl CharData {
    /// Completes a characteristic sequence `B_0..B_G` with its gcds and
    /// semigroup generators. Each `B_k`, `k >= 1`, must lower the gcd.
    pub fn from_b(b: Vec<i64>) -> Result<Self> {
        let mut e: Vec<u64> = Vec::with_capacity(b.len());
        for (k, &bk) in b.iter().enumerate() {
            let g = match e.last() {
                None => bk.unsigned_abs(),
                Some(&prev) => prev.gcd(&bk.unsigned_abs()),
            };
            if k > 0 && g == e[k - 1] {
                return Err(Error::NotIrreducibleEvidence(format!("B_{k} = {bk} does not lower the gcd")));
            }
            e.push(g);
        }
        if e.last() != Some(&1) {
            return Err(Error::NotIrreducibleEvidence("gcd of the sequence is not 1".into()));
        }
        let n_seq: Vec<u64> = e.windows(2).map(|w| w[0] / w[1]).collect();
        let mut bbar = Vec::with_capacity(b.len());
        for i in 0..b.len() {
            if i < 2 {
                bbar.push(b[i]);
                continue;
            }
            let mut v = b[i] as i128;
            for k in 1..i {
                v += (e[k - 1] - e[k]) as i128 * b[k] as i128 / e[i - 1] as i128;
            }
            bbar.push(v as i64);
        }
        let genus = b.len() - 1;
        Ok(CharData { b, e, n_seq, bbar, genus })
    }

    /// Recovers `B` from the generators `B̄` by inverting the recursion.
    pub fn from_bbar(bbar: &[i64]) -> Result<Self> {
        let mut b: Vec<i64> = Vec::with_capacity(bbar.len());
        let mut e: Vec<u64> = Vec::new();
        for (i, &bb) in bbar.iter().enumerate() {
            let bi = if i < 2 {
                bb as i128
            } else {
                let mut v = bb as i128;
                for k in 1..i {
                    let num = (e[k - 1] - e[k]) as i128 * b[k] as i128;
                    if num % e[i - 1] as i128 != 0 {
                        return Err(Error::NotIrreducibleEvidence(format!("B_{i} is not an integer")));
                    }
                    v -= num / e[i - 1] as i128;
                }
                v
            };
            let bi = i64::try_from(bi).map_err(|_| Error::NotIrreducibleEvidence("overflow".into()))?;
            b.push(bi);
            e.push(match e.last() {
                None => bi.unsigned_abs(),
                Some(&prev) => prev.gcd(&bi.unsigned_abs()),
            });
        }
        let cd = CharData::from_b(b)?;
        debug_assert_eq!(cd.bbar, bbar);
        Ok(cd)
    }

    /// The degree `N = |B_0|`.
    pub fn n(&self) -> u64 {
        self.b[0].unsigned_abs()
    }

    /// `B_k / N`, or `None` for `k > G` (infinite).
    pub fn b_over_n(&self, k: usize) -> Option<Rational> {
        self.b.get(k).map(|&bk| Rational::new(BigInt::from(bk), BigInt::from(self.n())))
    }

    /// Generators as nonnegative values, for local branches.
    pub fn bbar_u64(&self) -> Vec<u64> {
        self.bbar.iter().map(|&v| v.unsigned_abs()).collect()
    }
}

/// Characteristic data of a local primitive parameterization.
pub fn char_sequence(p: &Parameterization) -> Result<CharData> {
    p.require_local()?;
    let n = p.n;
    let mut b = vec![n as i64];
    let mut e = n;
    while e > 1 {
        let next = p
            .y
            .support()
            .find(|&j| (j as u64) % e != 0)
            .ok_or(Error::NotPrimitive(e))?;
        b.push(next as i64);
        e = e.gcd(&(next as u64));
    }
    CharData::from_b(b)
}

/// Minimal polynomial of the branch, monic of degree `n` in `Y`.
pub fn implicitize(p: &Parameterization) -> YPoly {
    // Q[X][T] / (T^n - X)
    let mut m = vec![Poly::zero(); p.n as usize + 1];
    m[0] = -Poly::var();
    m[p.n as usize] = Poly::one();
    norm(&p.y, &YPoly::from_coeffs(m))
}

/// The branch cut below its `(k+1)`-th characteristic exponent, reduced
/// to `X = T^(n/E_k)`. For `k = G` this is the branch itself.
pub fn truncated_parameterization(p: &Parameterization, k: usize) -> Result<Parameterization> {
    let cd = char_sequence(p)?;
    if k > cd.genus {
        return Err(Error::IndexOutOfRange { index: k, max: cd.genus });
    }
    if k == cd.genus {
        return Ok(p.clone());
    }
    let bound = cd.b[k + 1] as usize;
    let ek = cd.e[k] as usize;
    let y = Poly::from_terms(p.y.terms().filter(|(j, _)| *j < bound).map(|(j, c)| (c.clone(), j / ek)));
    Parameterization::new(p.n / ek as u64, y)
}

/// The `k`-th truncated semiroot: the minimal polynomial of the terms of
/// `y` below `T^(B_(k+1))`, of degree `n / E_k`.
pub fn truncated_semiroot(p: &Parameterization, k: usize) -> Result<YPoly> {
    truncated_parameterization(p, k).map(|q| implicitize(&q))
}

/// `{ v_X(eta_i - eta_j) }` over pairs of distinct roots; equals
/// `{B_1/n, ..., B_G/n}`.
pub fn conjugate_difference_orders(p: &Parameterization) -> Result<Vec<Rational>> {
    p.require_local()?;
    let n = p.n;
    let mut out = BTreeSet::new();
    for d in (2..=n).filter(|d| n % d == 0) {
        if let Some(j) = p.y.support().find(|&j| (j as u64) % d != 0) {
            out.insert(Rational::new(BigInt::from(j), BigInt::from(n)));
        }
    }
    Ok(out.into_iter().collect())
}

fn stretch(y: &Poly, factor: usize) -> Poly {
    Poly::from_terms(y.terms().map(|(j, c)| (c.clone(), j * factor)))
}

/// Highest order of contact `v_X(eta - zeta)` between a root `eta` of the
/// first branch and a root `zeta` of the second; infinite iff they are the
/// same branch.
pub fn coincidence_order(p: &Parameterization, q: &Parameterization) -> Result<Extended<Rational>> {
    p.require_local()?;
    q.require_local()?;
    let l = p.n.lcm(&q.n);
    let a = stretch(&p.y, (l / p.n) as usize);
    let b = stretch(&q.y, (l / q.n) as usize);
    let top = a.coeffs().len().max(b.coeffs().len());
    let mut best: Option<usize> = None;
    for d in (1..=l).filter(|d| l % d == 0) {
        // a(theta T) against b(T) for theta of exact order d
        let first_diff = (0..top).find(|&e| {
            let (ae, be) = (a.coeff(e), b.coeff(e));
            let e = e as u64;
            if e % d == 0 {
                ae != be
            } else if (2 * e) % d == 0 {
                -ae != be
            } else {
                !(ae.is_zero() && be.is_zero())
            }
        });
        match first_diff {
            None => return Ok(Extended::Infinity),
            Some(e) => best = Some(best.map_or(e, |b| b.max(e))),
        }
    }
    let e = best.expect("d = 1 always present");
    Ok(Extended::Finite(Rational::new(BigInt::from(e), BigInt::from(l))))
}

/// `(f, phi)` from the characteristic data of `f`, the degree of `phi` and
/// the coincidence order `K = K(f, phi)`, by Noether's formula.
pub fn noether_intersection(cd: &CharData, d_phi: u64, k_coin: &Rational) -> Result<u64> {
    let invalid = || Error::InvalidCoincidence(k_coin.to_string());
    if k_coin.is_negative() || d_phi == 0 {
        return Err(invalid());
    }
    let n = Rational::from_integer(BigInt::from(cd.n()));
    let k = (0..=cd.genus)
        .find(|&k| cd.b_over_n(k + 1).is_none_or(|bound| *k_coin < bound))
        .expect("the last window is unbounded");
    let d = Rational::from_integer(BigInt::from(d_phi));
    let value = if k == 0 {
        &n * k_coin * &d
    } else {
        let prod_before: u64 = cd.n_seq[..k - 1].iter().product();
        let prod_all = prod_before * cd.n_seq[k - 1];
        let first = Rational::new(BigInt::from(cd.bbar[k]), BigInt::from(prod_before));
        let second = (&n * k_coin - Rational::from_integer(BigInt::from(cd.b[k]))) / Rational::from_integer(BigInt::from(prod_all));
        d * (first + second)
    };
    if !value.is_integer() || value.is_negative() {
        return Err(invalid());
    }
    value.to_integer().to_u64().ok_or_else(invalid)
}

/// Inverse of [`noether_intersection`]: the coincidence order `K` for which
/// a branch of degree `d_phi` meets `f` exactly `intersection` times.
pub fn coincidence_from_intersection(cd: &CharData, d_phi: u64, intersection: u64) -> Result<Rational> {
    let q = |v: i64| Rational::from_integer(BigInt::from(v));
    let n = q(cd.n() as i64);
    let per_degree = Rational::new(BigInt::from(intersection), BigInt::from(d_phi));
    for k in 0..=cd.genus {
        let k_coin = if k == 0 {
            &per_degree / &n
        } else {
            let prod_before: u64 = cd.n_seq[..k - 1].iter().product();
            let prod_all = prod_before * cd.n_seq[k - 1];
            let first = Rational::new(BigInt::from(cd.bbar[k]), BigInt::from(prod_before));
            (q(cd.b[k]) + (&per_degree - first) * q(prod_all as i64)) / &n
        };
        let lower_ok = k == 0 || k_coin >= cd.b_over_n(k).expect("k <= genus");
        let upper_ok = cd.b_over_n(k + 1).is_none_or(|bound| k_coin < bound);
        if lower_ok && upper_ok && !k_coin.is_negative() {
            return Ok(k_coin);
        }
    }
    Err(Error::InvalidCoincidence(format!("no coincidence order gives ({intersection}) at degree {d_phi}")))
}

/// Elements of the semigroup generated by positive `gens`, up to `bound`.
pub fn semigroup_elements(gens: &[u64], bound: u64) -> Vec<u64> {
    let size = bound as usize + 1;
    let mut member = vec![false; size];
    member[0] = true;
    for &g in gens.iter().filter(|&&g| g > 0) {
        let g = g as usize;
        for v in g..size {
            if member[v - g] {
                member[v] = true;
            }
        }
    }
    member.iter().enumerate().filter(|(_, &m)| m).map(|(v, _)| v as u64).collect()
}

/// Whether `value` lies in the semigroup generated by `gens`.
pub fn in_semigroup(gens: &[u64], value: u64) -> bool {
    semigroup_elements(gens, value).last() == Some(&value)
}

/// Characteristic exponents in coordinates where the first exponent is
/// `new_b0`, from those `b` in generic coordinates (`b_0 < b_1`).
pub fn invert_coordinates(generic: &CharData, new_b0: i64) -> Result<CharData> {
    let b = &generic.b;
    let b0 = b[0];
    if generic.genus == 0 {
        return if new_b0 == b0 { Ok(generic.clone()) } else { Err(Error::IllegalFirstExponent(new_b0)) };
    }
    let b1 = b[1];
    if b0 >= b1 {
        return Err(Error::NotGeneric { b0, b1 });
    }
    let out = if new_b0 == b0 {
        b.clone()
    } else if new_b0 == b1 {
        let mut v = vec![b1, b0];
        v.extend(b[2..].iter().map(|&bk| bk + b0 - b1));
        v
    } else if new_b0 > b0 && new_b0 % b0 == 0 && new_b0 / b0 <= b1 / b0 {
        let l = new_b0 / b0;
        let mut v = vec![new_b0, b0];
        v.extend(b[1..].iter().map(|&bk| bk + (1 - l) * b0));
        v
    } else {
        return Err(Error::IllegalFirstExponent(new_b0));
    };
    CharData::from_b(out)
}

/// `phi(x(T), y(T))` for a parameterization, its `T`-order being the
/// intersection number with the branch.
pub fn restrict(phi: &YPoly, p: &Parameterization) -> Poly {
    phi.eval_param(&p.x(), &p.y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, intersection_number, ratio};
    use crate::test_support::{f_ex, tp, yp};

    fn param(n: u64, y: &str) -> Parameterization {
        Parameterization::new(n, tp(y)).unwrap()
    }

    fn p_ex() -> Parameterization {
        param(4, "T^6 + T^7")
    }

    #[test]
    fn char_sequence_examples() {
        let cd = char_sequence(&p_ex()).unwrap();
        assert_eq!(cd.b, vec![4, 6, 7]);
        assert_eq!(cd.e, vec![4, 2, 1]);
        assert_eq!(cd.n_seq, vec![2, 2]);
        assert_eq!(cd.bbar, vec![4, 6, 13]);
        assert_eq!(cd.genus, 2);

        let cusp = char_sequence(&param(2, "T^3")).unwrap();
        assert_eq!((cusp.b.clone(), cusp.e.clone(), cusp.bbar.clone(), cusp.genus), (vec![2, 3], vec![2, 1], vec![2, 3], 1));

        let smooth = char_sequence(&param(1, "T^2")).unwrap();
        assert_eq!((smooth.b, smooth.e, smooth.genus), (vec![1], vec![1], 0));
    }

    #[test]
    fn parameterization_errors() {
        assert_eq!(Parameterization::new(4, tp("T^2 + T^6")), Err(Error::NotPrimitive(2)));
        assert_eq!(char_sequence(&param(2, "1 + T^3")), Err(Error::NotLocal));
    }

    #[test]
    fn bbar_round_trip() {
        let cd = CharData::from_bbar(&[4, 6, 13]).unwrap();
        assert_eq!(cd.b, vec![4, 6, 7]);
    }

    #[test]
    fn implicitize_examples() {
        assert_eq!(implicitize(&param(2, "T^3")), yp("Y^2 - X^3"));
        assert_eq!(implicitize(&p_ex()), f_ex());
        assert_eq!(implicitize(&param(1, "5*T")), yp("Y - 5*X"));
        // substitution oracle
        let p = param(3, "T^4 - 2*T^5 + T^7");
        let f = implicitize(&p);
        assert!(f.is_monic() && f.deg() == 3);
        assert!(restrict(&f, &p).is_zero());
    }

    #[test]
    fn truncated_semiroots_of_f_ex() {
        assert_eq!(truncated_semiroot(&p_ex(), 0).unwrap(), yp("Y"));
        assert_eq!(truncated_semiroot(&p_ex(), 1).unwrap(), yp("Y^2 - X^3"));
        assert_eq!(truncated_semiroot(&p_ex(), 2).unwrap(), f_ex());
        assert_eq!(truncated_semiroot(&p_ex(), 3), Err(Error::IndexOutOfRange { index: 3, max: 2 }));
    }

    #[test]
    fn truncated_semiroot_meets_with_next_generator() {
        let p = param(6, "T^8 + T^10 + T^11 + T^13");
        let cd = char_sequence(&p).unwrap();
        let f = implicitize(&p);
        for k in 0..cd.genus {
            let q = truncated_semiroot(&p, k).unwrap();
            assert_eq!(q.deg() as u64, cd.n() / cd.e[k]);
            assert_eq!(intersection_number(&f, &q), Extended::Finite(cd.bbar[k + 1] as u64));
        }
    }

    #[test]
    fn conjugate_orders() {
        assert_eq!(conjugate_difference_orders(&p_ex()).unwrap(), vec![ratio(3, 2), ratio(7, 4)]);
        assert_eq!(conjugate_difference_orders(&param(2, "T^3")).unwrap(), vec![ratio(3, 2)]);
        assert!(conjugate_difference_orders(&param(1, "T^2")).unwrap().is_empty());
    }

    #[test]
    fn coincidence_examples() {
        let cusp = param(2, "T^3");
        assert_eq!(coincidence_order(&p_ex(), &cusp).unwrap(), Extended::Finite(ratio(7, 4)));
        assert_eq!(coincidence_order(&p_ex(), &p_ex()).unwrap(), Extended::Infinity);
        assert_eq!(coincidence_order(&p_ex(), &param(1, "0")).unwrap(), Extended::Finite(ratio(3, 2)));
        // the same branch written with T -> -T
        assert_eq!(coincidence_order(&p_ex(), &param(4, "T^6 - T^7")).unwrap(), Extended::Infinity);
    }

    #[test]
    fn noether_examples() {
        let cd = char_sequence(&p_ex()).unwrap();
        assert_eq!(noether_intersection(&cd, 2, &ratio(7, 4)), Ok(13));
        assert_eq!(noether_intersection(&cd, 1, &ratio(3, 2)), Ok(6));
        assert_eq!(noether_intersection(&cd, 1, &int(1)), Ok(4));
        assert!(matches!(noether_intersection(&cd, 1, &ratio(-1, 2)), Err(Error::InvalidCoincidence(_))));
        assert!(matches!(noether_intersection(&cd, 1, &ratio(1, 3)), Err(Error::InvalidCoincidence(_))));
    }

    #[test]
    fn noether_inverse() {
        let cd = char_sequence(&p_ex()).unwrap();
        assert_eq!(coincidence_from_intersection(&cd, 2, 13), Ok(ratio(7, 4)));
        assert_eq!(coincidence_from_intersection(&cd, 2, 12), Ok(ratio(3, 2)));
        assert_eq!(coincidence_from_intersection(&cd, 1, 4), Ok(int(1)));
        for (d, k) in [(1u64, ratio(5, 4)), (2, ratio(3, 2)), (4, ratio(9, 4)), (4, int(2))] {
            let i = noether_intersection(&cd, d, &k).unwrap();
            assert_eq!(coincidence_from_intersection(&cd, d, i), Ok(k));
        }
    }

    #[test]
    fn semigroups() {
        assert_eq!(semigroup_elements(&[2, 3], 7), vec![0, 2, 3, 4, 5, 6, 7]);
        assert_eq!(semigroup_elements(&[4, 6, 13], 20), vec![0, 4, 6, 8, 10, 12, 13, 14, 16, 17, 18, 19, 20]);
        assert_eq!(semigroup_elements(&[1], 5), vec![0, 1, 2, 3, 4, 5]);
        assert!(in_semigroup(&[4, 6, 13], 19));
        assert!(!in_semigroup(&[4, 6, 13], 15));
    }

    #[test]
    fn inversion_cases() {
        let gen = CharData::from_b(vec![4, 6, 7]).unwrap();
        assert_eq!(invert_coordinates(&gen, 4).unwrap().b, vec![4, 6, 7]);
        let b27 = CharData::from_b(vec![2, 7]).unwrap();
        assert_eq!(invert_coordinates(&b27, 2).unwrap().b, vec![2, 7]);
        assert_eq!(invert_coordinates(&b27, 4).unwrap().b, vec![4, 2, 5]);
        assert_eq!(invert_coordinates(&b27, 6).unwrap().b, vec![6, 2, 3]);
        assert_eq!(invert_coordinates(&b27, 7).unwrap().b, vec![7, 2]);
        assert_eq!(invert_coordinates(&b27, 8), Err(Error::IllegalFirstExponent(8)));
        assert_eq!(invert_coordinates(&b27, 5), Err(Error::IllegalFirstExponent(5)));
    }

    #[test]
    fn inversion_against_reparameterized_branches() {
        // generic (2, T^7): X' = x^2 + y has order 4
        let x = tp("T^4 + T^7");
        let y = tp("T^2");
        let p = Parameterization::from_pair(&x, &y, 16).unwrap();
        assert_eq!(char_sequence(&p).unwrap().b, vec![4, 2, 5]);
        // swapping the coordinates
        let swapped = Parameterization::from_pair(&tp("T^7"), &tp("T^2"), 16).unwrap();
        assert_eq!(char_sequence(&swapped).unwrap().b, vec![7, 2]);
    }

    #[test]
    fn reversion_inverts() {
        let s = TruncSeries::new(vec![int(0), int(2), int(1), int(-3)], 8);
        let inv = revert(&s);
        assert_eq!(s.compose(&inv), TruncSeries::new(vec![int(0), int(1)], 8));
    }
}
