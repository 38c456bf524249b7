//! Characteristic data recovered from the equation alone, through the
//! characteristic approximate roots `f_k = f^(1/E_k)`, and expansions in
//! those roots.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::adic::{adic_digits, approx_root};
use crate::branch::{coincidence_from_intersection, CharData};
use crate::series::{intersection_number, XPoly, YPoly};
use crate::{Error, Extended, Result};

/// Output of [`char_approx_roots`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootsReport {
    /// `f_0, ..., f_G`, with `f_G = f`.
    pub roots: Vec<YPoly>,
    pub char_data: CharData,
    /// `(f, f_k)` for `k = 0..=G`; the last entry is infinite.
    pub intersections: Vec<Extended<u64>>,
}

fn evidence(msg: impl Into<String>) -> Error {
    Error::NotIrreducibleEvidence(msg.into())
}

/// Checks that `f` is monic of positive degree with all lower coefficients
/// vanishing at the origin.
pub fn check_local_monic(f: &YPoly) -> Result<()> {
    if !f.is_monic() {
        return Err(Error::NonMonic);
    }
    if f.deg() == 0 {
        return Err(Error::DegreeMismatch("curve has degree 0 in Y".into()));
    }
    if !f.is_local() {
        return Err(Error::NotLocal);
    }
    Ok(())
}

/// Characteristic approximate roots and characteristic data of `f`.
///
/// Starting from `f_0 = f^(1/N)`, each step reads `B̄_(k+1) = (f, f_k)`,
/// sets `E_(k+1) = gcd(E_k, B̄_(k+1))` and `f_(k+1) = f^(1/E_(k+1))`, until
/// the gcd reaches 1. The checks made along the way are necessary
/// conditions for `f` to be irreducible; passing them is not a proof.
pub fn char_approx_roots(f: &YPoly) -> Result<RootsReport> {
    check_local_monic(f)?;
    let n = f.deg() as u64;
    let mut e = n;
    let mut bbar = vec![n as i64];
    let mut roots = vec![approx_root(f, n as usize)?];
    let mut intersections = Vec::new();
    while e > 1 {
        let k = roots.len() - 1;
        let i = intersection_number(f, &roots[k]);
        intersections.push(i);
        let value = i.finite().ok_or_else(|| evidence(format!("(f, f_{k}) is infinite while E_{k} = {e}")))?;
        let next = e.gcd(&value);
        if next == e {
            return Err(evidence(format!("E_{} = gcd({e}, {value}) does not decrease", k + 1)));
        }
        bbar.push(value as i64);
        e = next;
        roots.push(approx_root(f, e as usize)?);
    }
    intersections.push(Extended::Infinity);
    let cd = CharData::from_bbar(&bbar)?;
    for k in 1..cd.b.len() {
        if cd.b[k] <= 0 {
            return Err(evidence(format!("B_{k} = {} is not positive", cd.b[k])));
        }
        if k >= 2 && cd.b[k] <= cd.b[k - 1] {
            return Err(evidence(format!("B_{k} = {} does not exceed B_{}", cd.b[k], k - 1)));
        }
        if k >= 2 && cd.n_seq[k - 2] as i64 * cd.bbar[k - 1] >= cd.bbar[k] {
            return Err(evidence(format!("N_{0} B̄_{0} >= B̄_{1}", k - 1, k)));
        }
    }
    Ok(RootsReport { roots, char_data: cd, intersections })
}

/// Whether `q` is a `k`-semiroot of `f`: monic of degree `N/E_k` with
/// `(f, q) = B̄_(k+1)`.
pub fn is_semiroot(f: &YPoly, q: &YPoly, k: usize) -> Result<bool> {
    let report = char_approx_roots(f)?;
    semiroot_test(&report, f, q, k)
}

pub(crate) fn semiroot_test(report: &RootsReport, f: &YPoly, q: &YPoly, k: usize) -> Result<bool> {
    let cd = &report.char_data;
    if k > cd.genus {
        return Err(Error::IndexOutOfRange { index: k, max: cd.genus });
    }
    let degree = cd.n() / cd.e[k];
    Ok(q.is_monic() && q.deg() as u64 == degree && intersection_number(f, q) == report.intersections[k])
}

/// Digit tuple `(i_0, ..., i_G)` to coefficient.
pub type SemirootExpansion = BTreeMap<Vec<usize>, XPoly>;

/// Expansion `phi = sum alpha(X) q_0^i_0 ... q_G^i_G` with
/// `0 <= i_k < deg q_(k+1) / deg q_k` for `k < G`.
pub fn semiroot_expand(phi: &YPoly, roots: &[YPoly]) -> Result<SemirootExpansion> {
    check_ladder(roots)?;
    let mut out = SemirootExpansion::new();
    let mut digits = vec![0; roots.len()];
    expand_level(phi, roots, roots.len() - 1, &mut digits, &mut out)?;
    Ok(out)
}

fn check_ladder(roots: &[YPoly]) -> Result<()> {
    let degs: Vec<usize> = roots.iter().map(YPoly::deg).collect();
    if roots.is_empty() {
        return Err(Error::DegreeLadderInvalid("no roots given".into()));
    }
    if let Some(k) = roots.iter().position(|q| !q.is_monic()) {
        return Err(Error::DegreeLadderInvalid(format!("q_{k} is not monic")));
    }
    if degs[0] != 1 {
        return Err(Error::DegreeLadderInvalid(format!("deg q_0 = {} is not 1", degs[0])));
    }
    for (k, w) in degs.windows(2).enumerate() {
        if w[1] <= w[0] || w[1] % w[0] != 0 {
            return Err(Error::DegreeLadderInvalid(format!(
                "deg q_{} = {} is not a proper multiple of deg q_{k} = {}",
                k + 1,
                w[1],
                w[0]
            )));
        }
    }
    Ok(())
}

fn expand_level(
    phi: &YPoly,
    roots: &[YPoly],
    level: usize,
    digits: &mut Vec<usize>,
    out: &mut SemirootExpansion,
) -> Result<()> {
    let ds = adic_digits(phi, &roots[level])?;
    let s = ds.len() - 1;
    for (i, d) in ds.iter().enumerate() {
        if d.is_zero() {
            continue;
        }
        digits[level] = s - i;
        if level == 0 {
            out.insert(digits.clone(), d.coeff(0));
        } else {
            expand_level(d, roots, level - 1, digits, out)?;
        }
    }
    digits[level] = 0;
    Ok(())
}

/// `(f, phi)` as the least order among the terms of the expansion of `phi`
/// in the characteristic approximate roots of `f`, the term
/// `alpha q_0^i_0 ... q_(G-1)^i_(G-1)` having order
/// `N v_X(alpha) + i_0 B̄_1 + ... + i_(G-1) B̄_G`.
pub fn intersection_via_expansion(f: &YPoly, phi: &YPoly) -> Result<Extended<u64>> {
    let report = char_approx_roots(f)?;
    let cd = &report.char_data;
    let g = cd.genus;
    let expansion = semiroot_expand(phi, &report.roots)?;
    let n = cd.n();
    let best = expansion
        .iter()
        // terms carrying a power of f = q_G vanish on the branch
        .filter(|(digits, _)| digits[g] == 0)
        .map(|(digits, alpha)| {
            let v = alpha.valuation().finite().expect("expansion terms are nonzero");
            let rest: u64 = digits[..g].iter().enumerate().map(|(k, &i)| i as u64 * cd.bbar[k + 1] as u64).sum();
            v * n + rest
        })
        .min();
    Ok(best.map_or(Extended::Infinity, Extended::Finite))
}

/// Whether `q`, of degree `N/E_k`, has the same `k`-truncations as `f`,
/// i.e. `K(f, q) >= B_(k+1)/N`, with `K` read back from `(f, q)` through
/// Noether's formula.
pub fn truncation_coincidence(f: &YPoly, q: &YPoly, k: usize) -> Result<bool> {
    let report = char_approx_roots(f)?;
    let cd = &report.char_data;
    if k > cd.genus {
        return Err(Error::IndexOutOfRange { index: k, max: cd.genus });
    }
    let degree = cd.n() / cd.e[k];
    if !q.is_monic() || q.deg() as u64 != degree {
        return Err(Error::DegreeMismatch(format!("q must be monic of degree {degree}")));
    }
    let intersection = match intersection_number(f, q) {
        Extended::Infinity => return Ok(true),
        Extended::Finite(v) => v,
    };
    let k_coin = coincidence_from_intersection(cd, degree, intersection)?;
    Ok(match cd.b_over_n(k + 1) {
        Some(bound) => k_coin >= bound,
        None => false,
    })
}
