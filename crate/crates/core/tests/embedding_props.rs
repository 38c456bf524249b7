mod common;

use approxroot::embedding::{
    composition_degree, epimorphism_check, implicit_curve, merom_char_sequence, merom_param_at_infinity, strict_expand, PolyPair,
};
use approxroot::sample;
use approxroot::{Error, Rational};
use common::{rng, tpoly};
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn random_lines_are_straightened(seed in any::<u64>()) {
        let pp = sample::embedded_line(&mut rng(seed), 5, 3);
        let r = epimorphism_check(&pp);
        prop_assert!(r.epimorphism);
        prop_assert_eq!(r.chain.apply(&pp), PolyPair::line());
        // U(P, Q) = T: 1 is in the semigroup of values
        let (u, v) = r.chain.apply_symbolic();
        prop_assert_eq!(composition_degree(&u, &pp), Ok(1));
        prop_assert_eq!(composition_degree(&v, &pp), Err(Error::IdenticallyZero));
    }

    #[test]
    fn lines_take_every_value(seed in any::<u64>()) {
        let mut r = rng(seed);
        let pp = sample::embedded_line(&mut r, 4, 2);
        let (u, _) = epimorphism_check(&pp).chain.apply_symbolic();
        let d = r.gen_range(0..6u32);
        prop_assert_eq!(composition_degree(&u.pow(d), &pp), Ok(d as u64));
    }

    #[test]
    fn implicit_degrees_swap(seed in any::<u64>()) {
        let pp = sample::poly_pair(&mut rng(seed), 6);
        let f = implicit_curve(&pp).unwrap();
        prop_assert_eq!(f.degree(), pp.p.degree());
        prop_assert_eq!(f.x_degree(), pp.q.degree());
        prop_assert!(f.is_monic());
        prop_assert!(f.eval_param(&pp.p, &pp.q).is_zero());
    }

    #[test]
    fn expansion_at_infinity_solves_the_equation(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=4);
        let mut p = sample::poly_of_degree(&mut r, n).into_coeffs();
        p[n] = Rational::from_integer(1.into());
        let m = r.gen_range(1..=5);
        let pp = PolyPair::new(approxroot::Poly::from_coeffs(p), sample::poly_of_degree(&mut r, m));
        let precision = 6;
        let (big_n, y) = merom_param_at_infinity(&pp, precision).unwrap();
        prop_assert_eq!(big_n, n as u64);
        // F(tau^(-N), y(tau)) vanishes below the known order, shifted by tau^(2 N M)
        let f = implicit_curve(&pp).unwrap();
        let m = pp.q.degree().unwrap() as i64;
        let shift = (big_n as i64) * m + m * (big_n as i64);
        let mut total = approxroot::Poly::zero();
        for (c, i, j) in f.terms() {
            // X^i Y^j with X = tau^(-N), Y = tau^(-M) * series
            let mut term = y.coeffs.pow(j as u32).scale(&c);
            let low = -(big_n as i64) * i as i64 + y.low * j as i64;
            term = term.shift((low + shift) as usize);
            total = &total + &term;
        }
        // the series of y is known up to tau^(precision - 1)
        let reliable = (precision + m) as usize;
        prop_assert!(total.low_degree().map_or(true, |d| d >= reliable));
    }

    #[test]
    fn strict_digits_are_distinct(seed in any::<u64>()) {
        let mut r = rng(seed);
        let pp = sample::poly_pair(&mut r, 6);
        let mut p = pp.p.into_coeffs();
        let n = p.len() - 1;
        p[n] = Rational::from_integer(1.into());
        let pp = PolyPair::new(approxroot::Poly::from_coeffs(p), pp.q);
        let (n, y) = merom_param_at_infinity(&pp, 12).unwrap();
        let Ok(md) = merom_char_sequence(n, &y) else { return Ok(()) };
        let mut seen = std::collections::BTreeMap::new();
        let low = md.bbar.iter().sum::<i64>() * 3;
        for gamma in low..=0 {
            if let Ok(d) = strict_expand(gamma, &md) {
                prop_assert!(seen.insert(d, gamma).is_none());
            }
        }
    }
}

#[test]
fn cusp_is_not_a_line() {
    let pp = PolyPair::new(tpoly("T^2"), tpoly("T^3"));
    assert!(!epimorphism_check(&pp).epimorphism);
    let (n, y) = merom_param_at_infinity(&pp, 4).unwrap();
    let md = merom_char_sequence(n, &y).unwrap();
    assert_eq!(md.bbar, vec![-2, -3]);
    assert_eq!(strict_expand(-1, &md), Err(Error::NotRepresentable(-1)));
    assert_eq!(strict_expand(-4, &md), Ok(vec![2, 0]));
    assert_eq!(strict_expand(-5, &md), Ok(vec![1, 1]));
}

#[test]
fn example_line() {
    let pp = PolyPair::new(tpoly("T"), tpoly("T^5 + 2*T"));
    let r = epimorphism_check(&pp);
    assert!(r.epimorphism);
    assert_eq!(r.chain.apply(&pp), PolyPair::line());
}
