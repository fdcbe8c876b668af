//! Seeded random symbol classes over F_q(t).

use std::sync::Arc;

use crate::error::Result;
use crate::ff::FiniteField;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::rng::Lcg64;

use super::global::BrauerClassGlobal;

fn random_poly(rng: &mut Lcg64, k: &Arc<FiniteField>, deg: usize, monic: bool) -> Poly {
    let mut c: Vec<_> = (0..=deg).map(|_| k.elem(rng.below(k.order()))).collect();
    if monic {
        c[deg] = k.one();
    }
    Poly::new(k.clone(), c)
}

/// A nonzero function with numerator and denominator of degree at most
/// `max_deg` (denominator monic).
pub fn random_ratfunc(rng: &mut Lcg64, k: &Arc<FiniteField>, max_deg: usize) -> RatFunc {
    loop {
        let dn = rng.below(max_deg as u64 + 1) as usize;
        let num = random_poly(rng, k, dn, false);
        let dd = rng.below(max_deg as u64 + 1) as usize;
        let den = random_poly(rng, k, dd, true);
        if num.is_zero() {
            continue;
        }
        return RatFunc::new(num, den).expect("monic denominator is nonzero");
    }
}

/// Tensor product of between 1 and `max_symbols` random symbols `(a, b)_n`.
pub fn random_class(
    rng: &mut Lcg64,
    k: &Arc<FiniteField>,
    n: u64,
    max_symbols: usize,
    max_deg: usize,
) -> Result<BrauerClassGlobal> {
    let count = 1 + rng.below(max_symbols as u64) as usize;
    let pairs = (0..count)
        .map(|_| {
            (
                random_ratfunc(rng, k, max_deg),
                random_ratfunc(rng, k, max_deg),
            )
        })
        .collect();
    BrauerClassGlobal::from_pairs(k.clone(), n, pairs)
}
