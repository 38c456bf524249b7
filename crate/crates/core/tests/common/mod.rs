#![allow(dead_code)]

use std::collections::BTreeSet;

use approxroot::branch::Parameterization;
use approxroot::expr;
use approxroot::{Poly, Rational, YPoly};
use rand::rngs::StdRng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn curve(s: &str) -> YPoly {
    expr::parse_curve(s).unwrap()
}

pub fn tpoly(s: &str) -> Poly {
    expr::parse_poly(s, "T").unwrap()
}

pub fn param(n: u64, y: &str) -> Parameterization {
    Parameterization::new(n, tpoly(y)).unwrap()
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn f_ex() -> YPoly {
    curve("Y^4 - 2*X^3*Y^2 - 4*X^5*Y + X^6 - X^7")
}

/// All sums of generators up to `bound`, by exhaustive search.
pub fn brute_semigroup(gens: &[u64], bound: u64) -> Vec<u64> {
    fn go(gens: &[u64], bound: u64, acc: u64, out: &mut BTreeSet<u64>) {
        if acc > bound || !out.insert(acc) {
            return;
        }
        for &g in gens {
            if g > 0 {
                go(gens, bound, acc + g, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    go(gens, bound, 0, &mut out);
    out.into_iter().collect()
}

/// Sum of partial quotients of Euclid's algorithm on `(a, b)`.
pub fn euclid_steps(mut a: u64, mut b: u64) -> u64 {
    let mut steps = 0;
    while b > 0 {
        steps += a / b;
        (a, b) = (b, a % b);
    }
    steps
}

/// Blow-ups in the minimal resolution of a branch with characteristic
/// sequence `b`: Euclid on `(B_1, B_0)`, then on `(B_k - B_(k-1), E_(k-1))`.
pub fn blowups_from_b(b: &[i64]) -> u64 {
    if b.len() < 2 {
        return 0;
    }
    let mut total = euclid_steps(b[1] as u64, b[0] as u64);
    let mut e = num_integer::gcd(b[0], b[1]) as u64;
    for k in 2..b.len() {
        total += euclid_steps((b[k] - b[k - 1]) as u64, e);
        e = num_integer::gcd(e, b[k] as u64);
    }
    total
}
