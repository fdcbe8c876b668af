//! Search for series `P ⊇ P1 ⊇ P2` of a p-group with `P/P1` and `P2`
//! cyclic, `P1` normal in `P`, `P2` normal in `P1` and `P1/P2` metacyclic.
//!
//! Such a series forces `P` to be generated by at most four elements, so the
//! search stops early when the Frattini quotient has rank five or more.
//! Otherwise `P1` ranges over the kernels of homomorphisms from the
//! abelianization to a cyclic group, and `P2` over the cyclic subgroups of
//! `P1` normal in `P1`. Candidates are tried in the order
//! `(|P2|, [P:P1], P1, P2)` and the first metacyclic middle wins.
//!
//! Abelian groups take a shortcut through an invariant-factor basis
//! `e1, ..., er` (orders nondecreasing): for `r <= 2` the series is
//! `P = P1, P2 = 1`; for `r = 3`, `P1 = <e2, e3>`; for `r = 4`,
//! `P1 = <e2, e3, e4>` and `P2 = <e2>`.

use std::collections::HashSet;
use std::fmt;

use crate::arith::prime_power;
use crate::error::{Error, Result};

use super::abelian::{abelian_basis, coordinates, AbelianGroup};
use super::cayley::{CayleyGroup, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalSeries {
    pub p: Subgroup,
    pub p1: Subgroup,
    pub p2: Subgroup,
}

/// `log_p [P : Phi(P)]`, the minimal number of generators of a p-group.
pub fn frattini_rank(g: &CayleyGroup, p: u64) -> u32 {
    let phi = g.frattini_p(p);
    let mut idx = g.order() / phi.order();
    let mut d = 0;
    while idx > 1 {
        idx /= p as usize;
        d += 1;
    }
    d
}

fn p_of(g: &CayleyGroup) -> Result<Option<u64>> {
    let n = g.order() as u64;
    if n == 1 {
        return Ok(None);
    }
    prime_power(n)
        .map(|(p, _)| Some(p))
        .ok_or(Error::NotPrimePower(n))
}

pub fn obstruction_series(g: &CayleyGroup) -> Result<Option<NormalSeries>> {
    let Some(p) = p_of(g)? else {
        return Ok(Some(NormalSeries {
            p: g.whole(),
            p1: g.whole(),
            p2: g.trivial(),
        }));
    };
    if g.is_cyclic() {
        return Ok(Some(NormalSeries {
            p: g.whole(),
            p1: g.whole(),
            p2: g.trivial(),
        }));
    }
    if g.is_abelian() {
        return Ok(abelian_series_in_table(g));
    }
    if frattini_rank(g, p) >= 5 {
        return Ok(None);
    }
    let whole = g.whole();
    let mut pairs: Vec<(Subgroup, Subgroup)> = Vec::new();
    for p1 in cyclic_quotient_kernels(g) {
        let mut seen = HashSet::new();
        for &x in p1.elements() {
            let c = g.closure(&[x]);
            if !seen.insert(c.elements().to_vec()) {
                continue;
            }
            if p1.elements().iter().all(|&y| c.contains(g.conj(x, y))) {
                pairs.push((p1.clone(), c));
            }
        }
    }
    pairs.sort_by(|a, b| {
        (
            a.1.order(),
            g.order() / a.0.order(),
            a.0.elements(),
            a.1.elements(),
        )
            .cmp(&(
                b.1.order(),
                g.order() / b.0.order(),
                b.0.elements(),
                b.1.elements(),
            ))
    });
    for (p1, p2) in pairs {
        if middle_is_metacyclic(g, &p1, &p2) {
            return Ok(Some(NormalSeries { p: whole, p1, p2 }));
        }
    }
    Ok(None)
}

/// Whether `P1/P2` is metacyclic, on its explicit quotient table.
pub fn middle_is_metacyclic(g: &CayleyGroup, p1: &Subgroup, p2: &Subgroup) -> bool {
    let h = g.subgroup_as_group(p1);
    let local: Vec<u32> = p2
        .elements()
        .iter()
        .map(|x| p1.elements().binary_search(x).unwrap() as u32)
        .collect();
    let n2 = h.closure(&local);
    h.quotient(&n2).is_metacyclic()
}

/// Normal subgroups with cyclic quotient: kernels of all homomorphisms from
/// `P/P'` to `Z/M`, `M` the exponent of `P/P'`.
fn cyclic_quotient_kernels(g: &CayleyGroup) -> Vec<Subgroup> {
    let derived = g.derived_subgroup();
    let (coset_of, _) = g.cosets(&derived);
    let a = g.quotient(&derived);
    let basis = abelian_basis(&a);
    let coords = coordinates(&a, &basis);
    let orders: Vec<u64> = basis.iter().map(|&x| a.elem_order(x) as u64).collect();
    let m = orders.iter().copied().max().unwrap_or(1);
    let mut kernels = Vec::new();
    let mut seen = HashSet::new();
    let mut h = vec![0u64; basis.len()];
    loop {
        // h_i ranges over multiples of m / o_i
        let in_kernel: Vec<bool> = coords
            .iter()
            .map(|c| {
                c.iter()
                    .zip(&h)
                    .zip(&orders)
                    .map(|((&ci, &hi), &oi)| ci * hi * (m / oi))
                    .sum::<u64>()
                    % m
                    == 0
            })
            .collect();
        let elems: Vec<u32> = (0..g.order() as u32)
            .filter(|&x| in_kernel[coset_of[x as usize] as usize])
            .collect();
        if seen.insert(elems.clone()) {
            kernels.push(
                g.subgroup_from_elements(&elems)
                    .expect("kernel is a subgroup"),
            );
        }
        let mut i = 0;
        loop {
            if i == h.len() {
                kernels.sort();
                return kernels;
            }
            h[i] += 1;
            if h[i] < orders[i] {
                break;
            }
            h[i] = 0;
            i += 1;
        }
    }
}

fn abelian_series_in_table(g: &CayleyGroup) -> Option<NormalSeries> {
    let basis = abelian_basis(g);
    let (keep, cyc): (Vec<u32>, Vec<u32>) = match basis.len() {
        0..=2 => (basis.clone(), vec![]),
        3 => (basis[1..].to_vec(), vec![]),
        4 => (basis[1..].to_vec(), vec![basis[1]]),
        _ => return None,
    };
    Some(NormalSeries {
        p: g.whole(),
        p1: g.closure(&keep),
        p2: g.closure(&cyc),
    })
}

/// A series for an abelian p-group, in terms of its invariant-factor basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianSeries {
    pub group: AbelianGroup,
    /// Basis indices generating `P1`.
    pub p1: Vec<usize>,
    /// Basis indices generating `P2`.
    pub p2: Vec<usize>,
}

impl AbelianSeries {
    fn factors_of(&self, idx: &[usize]) -> Vec<u64> {
        idx.iter().map(|&i| self.group.factors()[i]).collect()
    }

    pub fn p1_factors(&self) -> Vec<u64> {
        self.factors_of(&self.p1)
    }

    pub fn p2_factors(&self) -> Vec<u64> {
        self.factors_of(&self.p2)
    }

    /// Invariant factors of `P/P1`.
    pub fn top_factors(&self) -> Vec<u64> {
        let rest: Vec<usize> = (0..self.group.rank())
            .filter(|i| !self.p1.contains(i))
            .collect();
        self.factors_of(&rest)
    }

    /// Invariant factors of `P1/P2`.
    pub fn middle_factors(&self) -> Vec<u64> {
        let rest: Vec<usize> = self
            .p1
            .iter()
            .copied()
            .filter(|i| !self.p2.contains(i))
            .collect();
        self.factors_of(&rest)
    }
}

impl fmt::Display for AbelianSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Vec<u64>| {
            let s: Vec<String> = v.iter().map(|d| d.to_string()).collect();
            format!("[{}]", s.join(","))
        };
        write!(
            f,
            "P={} P1={} P2={}",
            self.group,
            show(self.p1_factors()),
            show(self.p2_factors())
        )
    }
}

/// The abelian shortcut: a series exists iff the rank is at most four.
pub fn abelian_obstruction_series(a: &AbelianGroup) -> Result<Option<AbelianSeries>> {
    let n = a.order();
    if n > 1 && prime_power(n).is_none() {
        return Err(Error::NotPrimePower(n));
    }
    let r = a.rank();
    let (p1, p2) = match r {
        0..=2 => ((0..r).collect(), vec![]),
        3 => (vec![1, 2], vec![]),
        4 => (vec![1, 2, 3], vec![1]),
        _ => return Ok(None),
    };
    Ok(Some(AbelianSeries {
        group: a.clone(),
        p1,
        p2,
    }))
}

/// Re-checks every defining property of a series on explicit tables,
/// with normality tested against all elements.
pub fn verify_series(g: &CayleyGroup, s: &NormalSeries) -> bool {
    let normal_full = |h: &Subgroup, k: &Subgroup| {
        k.elements()
            .iter()
            .all(|&y| h.elements().iter().all(|&x| h.contains(g.conj(x, y))))
    };
    s.p2.is_subset(&s.p1)
        && s.p1.is_subset(&s.p)
        && normal_full(&s.p1, &s.p)
        && normal_full(&s.p2, &s.p1)
        && {
            let pg = g.subgroup_as_group(&s.p);
            let local: Vec<u32> =
                s.p1.elements()
                    .iter()
                    .map(|x| s.p.elements().binary_search(x).unwrap() as u32)
                    .collect();
            pg.quotient(&pg.closure(&local)).is_cyclic()
        }
        && g.subgroup_as_group(&s.p2).is_cyclic()
        && middle_is_metacyclic(g, &s.p1, &s.p2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog;

    #[test]
    fn elementary_abelian() {
        for l in [2u64, 3] {
            let g4 = catalog::abelian(&[l; 4]);
            let s = obstruction_series(&g4).unwrap().unwrap();
            assert_eq!(s.p1.order() as u64, l.pow(3));
            assert_eq!(s.p2.order() as u64, l);
            assert!(verify_series(&g4, &s));
            let g5 = catalog::abelian(&[l; 5]);
            assert!(obstruction_series(&g5).unwrap().is_none());
        }
    }

    #[test]
    fn cyclic_and_errors() {
        let z8 = catalog::cyclic(8);
        let s = obstruction_series(&z8).unwrap().unwrap();
        assert_eq!(s.p1.order(), 8);
        assert!(s.p2.is_trivial());
        assert_eq!(
            obstruction_series(&catalog::cyclic(6)),
            Err(Error::NotPrimePower(6))
        );
    }

    #[test]
    fn nonabelian_examples() {
        for g in [
            catalog::dihedral(8),
            catalog::quaternion(16),
            catalog::heisenberg(3),
        ] {
            let s = obstruction_series(&g).unwrap().unwrap();
            assert!(verify_series(&g, &s));
        }
        let w = catalog::wreath_cyclic(3);
        assert_eq!(w.order(), 81);
        let s = obstruction_series(&w).unwrap().unwrap();
        assert!(verify_series(&w, &s));
    }

    #[test]
    fn abelian_shortcut() {
        let a = AbelianGroup::parse("[3,3,3,3]").unwrap();
        let s = abelian_obstruction_series(&a).unwrap().unwrap();
        assert_eq!(s.p1_factors(), vec![3, 3, 3]);
        assert_eq!(s.p2_factors(), vec![3]);
        assert_eq!(s.middle_factors(), vec![3, 3]);
        assert_eq!(s.top_factors(), vec![3]);
        let b = AbelianGroup::parse("[5,5,5,5,5]").unwrap();
        assert!(abelian_obstruction_series(&b).unwrap().is_none());
        assert!(abelian_obstruction_series(&AbelianGroup::parse("[6]").unwrap()).is_err());
    }
}
