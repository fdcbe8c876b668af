//! Finite abelian groups by invariant factors, and bases of abelian Cayley
//! groups.

use std::fmt;

use crate::arith::{factorize, lcm};
use crate::error::{Error, Result};

use super::cayley::CayleyGroup;

/// `Z/d1 x ... x Z/dr` with `d1 | d2 | ... | dr` and every `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    /// Checks the divisibility chain.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.iter().any(|&d| d < 2) {
            return Err(Error::Invalid(
                "invariant factors must be at least 2".into(),
            ));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::Invalid(
                "invariant factors must form a divisibility chain".into(),
            ));
        }
        Ok(AbelianGroup { factors })
    }

    /// Normalizes an arbitrary product of cyclic groups.
    pub fn from_cyclic_orders(orders: &[u64]) -> Result<Self> {
        if orders.contains(&0) {
            return Err(Error::Invalid("cyclic factor of order 0".into()));
        }
        // per prime, the exponents of the prime-power parts
        let mut parts: Vec<(u64, Vec<u32>)> = Vec::new();
        for &d in orders {
            for (p, e) in factorize(d) {
                match parts.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, v)) => v.push(e),
                    None => parts.push((p, vec![e])),
                }
            }
        }
        let r = parts.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
        let mut factors = vec![1u64; r];
        for (p, mut v) in parts {
            v.sort_unstable_by(|a, b| b.cmp(a));
            for (i, e) in v.into_iter().enumerate() {
                factors[r - 1 - i] *= p.pow(e);
            }
        }
        Ok(AbelianGroup { factors })
    }

    pub fn trivial() -> Self {
        AbelianGroup { factors: vec![] }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.iter().fold(1, |a, &b| lcm(a, b))
    }

    /// Minimal number of generators.
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn primes(&self) -> Vec<u64> {
        self.factors
            .last()
            .map(|&d| factorize(d).into_iter().map(|(p, _)| p).collect())
            .unwrap_or_default()
    }

    /// The Sylow p-subgroup.
    pub fn sylow(&self, p: u64) -> AbelianGroup {
        let factors = self
            .factors
            .iter()
            .map(|&d| {
                let mut part = 1;
                let mut m = d;
                while m % p == 0 {
                    m /= p;
                    part *= p;
                }
                part
            })
            .filter(|&d| d > 1)
            .collect();
        AbelianGroup { factors }
    }

    /// Rank of the Sylow p-subgroup.
    pub fn p_rank(&self, p: u64) -> usize {
        self.factors.iter().filter(|&&d| d % p == 0).count()
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    /// Expands to a Cayley table (`Z/d1 x ... x Z/dr` in coordinates).
    pub fn to_cayley(&self) -> Result<CayleyGroup> {
        let n = self.order();
        if n > super::cayley::DEFAULT_GROUP_BOUND as u64 {
            return Err(Error::BoundExceeded {
                what: "group order",
                value: n,
                bound: super::cayley::DEFAULT_GROUP_BOUND as u64,
            });
        }
        Ok(super::catalog::abelian(&self.factors))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::syntax(0, format!("expected [d1, ..., dr], got {s:?}")))?;
        let mut orders = Vec::new();
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            orders.push(
                part.parse::<u64>()
                    .map_err(|_| Error::syntax(0, format!("bad cyclic order {part:?}")))?,
            );
        }
        Self::from_cyclic_orders(&orders)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|d| d.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A basis of an abelian Cayley group: elements `e_i` with the group the
/// internal direct sum of the `<e_i>`, orders nondecreasing (and forming a
/// divisibility chain for p-groups).
///
/// Found by taking an element of maximal order, recursing on the quotient,
/// and lifting each quotient basis element to one of the same order.
pub fn abelian_basis(g: &CayleyGroup) -> Vec<u32> {
    assert!(g.is_abelian());
    let n = g.order();
    if n == 1 {
        return Vec::new();
    }
    let a = (0..n as u32)
        .max_by_key(|&x| (g.elem_order(x), std::cmp::Reverse(x)))
        .unwrap();
    let ea = g.elem_order(a) as u64;
    let h = g.closure(&[a]);
    let (_, reps) = g.cosets(&h);
    let quotient = g.quotient(&h);
    let mut basis = Vec::new();
    for b in abelian_basis(&quotient) {
        let x = reps[b as usize];
        let o = quotient.elem_order(b) as u64;
        let xo = g.pow(x, o);
        let m = (0..ea).find(|&m| g.pow(a, m) == xo).unwrap();
        debug_assert_eq!(m % o, 0);
        let fix = g.pow(a, (ea - m / o) % ea);
        basis.push(g.mul(x, fix));
    }
    basis.push(a);
    basis.sort_by_key(|&x| (g.elem_order(x), x));
    basis
}

/// Invariant factors of an abelian Cayley group.
pub fn abelian_invariants(g: &CayleyGroup) -> AbelianGroup {
    let orders: Vec<u64> = abelian_basis(g)
        .into_iter()
        .map(|x| g.elem_order(x) as u64)
        .collect();
    AbelianGroup::from_cyclic_orders(&orders).unwrap()
}

/// Coordinates of every element with respect to a basis.
pub fn coordinates(g: &CayleyGroup, basis: &[u32]) -> Vec<Vec<u64>> {
    let orders: Vec<u64> = basis.iter().map(|&x| g.elem_order(x) as u64).collect();
    let mut coords = vec![Vec::new(); g.order()];
    let mut cur = vec![0u64; basis.len()];
    loop {
        let elem = basis
            .iter()
            .zip(&cur)
            .fold(0u32, |acc, (&b, &c)| g.mul(acc, g.pow(b, c)));
        coords[elem as usize] = cur.clone();
        let mut i = 0;
        loop {
            if i == cur.len() {
                return coords;
            }
            cur[i] += 1;
            if cur[i] < orders[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog;

    #[test]
    fn normalization() {
        assert_eq!(
            AbelianGroup::from_cyclic_orders(&[6, 4]).unwrap().factors(),
            &[2, 12]
        );
        assert_eq!(
            AbelianGroup::from_cyclic_orders(&[3, 3, 12, 12])
                .unwrap()
                .factors(),
            &[3, 3, 12, 12]
        );
        assert_eq!(
            AbelianGroup::from_cyclic_orders(&[1, 1]).unwrap().factors(),
            &[] as &[u64]
        );
        assert!(AbelianGroup::new(vec![4, 6]).is_err());
        assert_eq!(AbelianGroup::parse("[2,2,2,2,2]").unwrap().rank(), 5);
        assert_eq!(AbelianGroup::parse("[3, 9]").unwrap().rank(), 2);
        assert_eq!(AbelianGroup::parse("[]").unwrap().rank(), 0);
    }

    #[test]
    fn sylow_parts() {
        let a = AbelianGroup::parse("[3,3,12,12]").unwrap();
        assert_eq!(a.sylow(3).factors(), &[3, 3, 3, 3]);
        assert_eq!(a.sylow(2).factors(), &[4, 4]);
        assert_eq!(a.p_rank(3), 4);
        assert_eq!(a.primes(), vec![2, 3]);
    }

    #[test]
    fn basis_of_tables() {
        for orders in [
            vec![2u64, 4, 8],
            vec![3, 9],
            vec![2, 6, 6],
            vec![5],
            vec![4, 4, 2],
        ] {
            let g = catalog::abelian(&orders);
            let inv = abelian_invariants(&g);
            assert_eq!(inv, AbelianGroup::from_cyclic_orders(&orders).unwrap());
            let basis = abelian_basis(&g);
            let coords = coordinates(&g, &basis);
            let mut seen = std::collections::HashSet::new();
            for c in &coords {
                assert!(seen.insert(c.clone()));
            }
        }
    }
}
