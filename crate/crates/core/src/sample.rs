//! Random instances for property tests, sweeps and benchmarks. All
//! coefficients are small rationals so exact arithmetic stays cheap.

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::branch::Parameterization;
use crate::embedding::{AutomorphismChain, Elementary, PolyPair};
use crate::series::{ratio, Poly, XPoly, YPoly};
use crate::Rational;

/// A rational `a/b` with `|a| <= 4`, `1 <= b <= 3`.
pub fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let n = *[-3i64, -2, -1, 1, 2, 3].choose(rng).unwrap();
    ratio(n, rng.gen_range(1..=2))
}

/// Polynomial of degree at most `max_deg`, roughly half of its terms zero.
pub fn poly<R: Rng + ?Sized>(rng: &mut R, max_deg: usize) -> Poly {
    Poly::from_coeffs((0..=max_deg).map(|_| if rng.gen_bool(0.5) { small_rational(rng) } else { ratio(0, 1) }).collect())
}

/// Polynomial of degree exactly `deg`.
pub fn poly_of_degree<R: Rng + ?Sized>(rng: &mut R, deg: usize) -> Poly {
    let mut c = poly(rng, deg).into_coeffs();
    c.resize(deg + 1, ratio(0, 1));
    c[deg] = nonzero_rational(rng);
    Poly::from_coeffs(c)
}

/// Monic in `Y` of degree `deg`, coefficients of `X`-degree at most `max_x`.
pub fn monic_of_degree<R: Rng + ?Sized>(rng: &mut R, deg: usize, max_x: usize) -> YPoly {
    let mut c: Vec<XPoly> = (0..deg).map(|_| if rng.gen_bool(0.6) { poly(rng, max_x) } else { XPoly::zero() }).collect();
    c.push(XPoly::one());
    YPoly::from_coeffs(c)
}

/// Monic in `Y` of degree in `1..=max_deg`.
pub fn monic<R: Rng + ?Sized>(rng: &mut R, max_deg: usize, max_x: usize) -> YPoly {
    let d = rng.gen_range(1..=max_deg);
    monic_of_degree(rng, d, max_x)
}

/// A local primitive parameterization `(T^n, y(T))` with `n <= max_n`, at
/// most `max_genus` characteristic exponents, first exponent above `n`, and
/// a few non-characteristic terms in between.
pub fn parameterization<R: Rng + ?Sized>(rng: &mut R, max_n: u64, max_genus: usize) -> Parameterization {
    let n = rng.gen_range(1..=max_n);
    // gcd ladder n = e_0 > e_1 > ... > e_g = 1
    let mut ladder = vec![n];
    while *ladder.last().unwrap() > 1 {
        let e = *ladder.last().unwrap();
        let divisors: Vec<u64> = (1..e).filter(|d| e % d == 0).collect();
        let next = if ladder.len() == max_genus { 1 } else { *divisors.choose(rng).unwrap() };
        ladder.push(next);
    }
    let mut terms: Vec<(Rational, usize)> = Vec::new();
    if rng.gen_bool(0.3) {
        terms.push((small_rational(rng), n as usize));
    }
    let mut last = n;
    for k in 1..ladder.len() {
        let (prev, e) = (ladder[k - 1], ladder[k]);
        let mut t = last / e + 1 + rng.gen_range(0..2);
        while t.gcd(&(prev / e)) != 1 {
            t += 1;
        }
        let b = e * t;
        // terms between characteristic exponents keep the current gcd
        let filler = (last + 1..b).filter(|j| j % prev == 0).collect::<Vec<_>>();
        if let Some(&j) = filler.choose(rng) {
            if rng.gen_bool(0.5) {
                terms.push((small_rational(rng), j as usize));
            }
        }
        terms.push((nonzero_rational(rng), b as usize));
        last = b;
    }
    if rng.gen_bool(0.4) {
        terms.push((small_rational(rng), last as usize + rng.gen_range(1..3)));
    }
    Parameterization::new(n, Poly::from_terms(terms)).expect("ladder gives a primitive parameterization")
}

pub fn elementary<R: Rng + ?Sized>(rng: &mut R, max_m: u32) -> Elementary {
    match rng.gen_range(0..3) {
        0 => Elementary::Affine {
            a: nonzero_rational(rng),
            b: small_rational(rng),
            c: nonzero_rational(rng),
            d: small_rational(rng),
        },
        1 => Elementary::First { c: nonzero_rational(rng), m: rng.gen_range(1..=max_m) },
        _ => Elementary::Second { c: nonzero_rational(rng), m: rng.gen_range(1..=max_m) },
    }
}

/// Chain of `1..=max_steps` random elementary automorphisms.
pub fn chain<R: Rng + ?Sized>(rng: &mut R, max_steps: usize, max_m: u32) -> AutomorphismChain {
    let len = rng.gen_range(1..=max_steps);
    AutomorphismChain { steps: (0..len).map(|_| elementary(rng, max_m)).collect() }
}

/// An embedded line: the coordinate line moved by a random chain.
pub fn embedded_line<R: Rng + ?Sized>(rng: &mut R, max_steps: usize, max_m: u32) -> PolyPair {
    chain(rng, max_steps, max_m).apply(&PolyPair::line())
}

/// Pair with `deg P`, `deg Q` drawn from `1..=max_deg`.
pub fn poly_pair<R: Rng + ?Sized>(rng: &mut R, max_deg: usize) -> PolyPair {
    let n = rng.gen_range(1..=max_deg);
    let m = rng.gen_range(1..=max_deg);
    PolyPair::new(poly_of_degree(rng, n), poly_of_degree(rng, m))
}
