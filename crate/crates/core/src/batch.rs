//! Sweeps over many independent instances, run either on the calling thread
//! or across the rayon pool. Both strategies return identical results.

use crate::adic::{approx_root_direct, approx_root_meromorphic};
use crate::branch::{char_sequence, implicitize, Parameterization};
use crate::char_roots::char_approx_roots;
use crate::embedding::{epimorphism_check, PolyPair};
use crate::{par, YPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Sequential,
    Parallel,
}

impl Strategy {
    pub fn run<R: Send>(self, op: impl FnOnce() -> R + Send) -> R {
        match self {
            Strategy::Sequential => par::sequential(op),
            Strategy::Parallel => op(),
        }
    }

    /// `items.iter().map(f)` under this strategy; order is preserved.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Send + Sync,
    {
        self.run(|| par::map(items, f))
    }
}

/// For each polynomial and each divisor `p` of its degree: whether the
/// direct and meromorphic approximate roots agree.
pub fn root_agreement(strategy: Strategy, polys: &[YPoly]) -> Vec<bool> {
    strategy.map(polys, |f| {
        let n = f.degree().unwrap_or(0);
        (1..=n).filter(|p| n % p == 0).all(|p| {
            matches!((approx_root_direct(f, p), approx_root_meromorphic(f, p)), (Ok(a), Ok(b)) if a == b)
        })
    })
}

/// Whether characteristic data read off the implicit equation matches the
/// parameterization.
pub fn round_trip(strategy: Strategy, params: &[Parameterization]) -> Vec<bool> {
    strategy.map(params, |p| {
        let expected = char_sequence(p).ok();
        let found = char_approx_roots(&implicitize(p)).ok().map(|r| r.char_data);
        expected.is_some() && expected == found
    })
}

pub fn epimorphisms(strategy: Strategy, pairs: &[PolyPair]) -> Vec<bool> {
    strategy.map(pairs, |pp| epimorphism_check(pp).epimorphism)
}
