//! Finite groups given by multiplication tables, and their subgroups.

use std::collections::HashSet;
use std::fmt;

use crate::arith::{is_prime, valuation};
use crate::error::{Error, Result};

pub const DEFAULT_GROUP_BOUND: usize = 512;

/// A finite group on `0..N` with identity `0`.
#[derive(Clone, PartialEq, Eq)]
pub struct CayleyGroup {
    n: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    gens: Vec<u32>,
}

impl fmt::Debug for CayleyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyGroup(order {})", self.n)
    }
}

/// A subgroup as a sorted element list plus a generating set.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<u32>,
    bits: Vec<u64>,
    gens: Vec<u32>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

/// By order, then by sorted elements.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.elements
            .len()
            .cmp(&other.elements.len())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    pub fn contains(&self, x: u32) -> bool {
        self.bits[x as usize / 64] >> (x % 64) & 1 == 1
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

impl CayleyGroup {
    /// Validates the table (identity at 0, Latin square, associativity).
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::with_bound(rows, DEFAULT_GROUP_BOUND)
    }

    pub fn with_bound(rows: Vec<Vec<usize>>, bound: usize) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if n > bound {
            return Err(Error::BoundExceeded {
                what: "group order",
                value: n as u64,
                bound: bound as u64,
            });
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidTable("table is not square".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for r in &rows {
            for &x in r {
                if x >= n {
                    return Err(Error::InvalidTable(format!("entry {x} out of range")));
                }
                table.push(x as u32);
            }
        }
        for i in 0..n {
            if table[i] as usize != i || table[i * n] as usize != i {
                return Err(Error::InvalidTable("0 is not the identity".into()));
            }
        }
        for i in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for j in 0..n {
                row[table[i * n + j] as usize] = true;
                col[table[j * n + i] as usize] = true;
            }
            if row.contains(&false) || col.contains(&false) {
                return Err(Error::InvalidTable(format!(
                    "row or column {i} is not a permutation"
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b] as usize;
                for c in 0..n {
                    let bc = table[b * n + c] as usize;
                    if table[ab * n + c] != table[a * n + bc] {
                        return Err(Error::InvalidTable(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(Self::from_flat_unchecked(n, table))
    }

    /// Builds from a flat table already known to be a group table.
    pub(crate) fn from_flat_unchecked(n: usize, table: Vec<u32>) -> Self {
        let mut inv = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        let mut g = CayleyGroup {
            n,
            table,
            inv,
            gens: Vec::new(),
        };
        g.gens = g.greedy_generators((0..n as u32).collect::<Vec<_>>().as_slice());
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.n + b as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u32, mut k: u64) -> u32 {
        let (mut base, mut acc) = (a, 0u32);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `g x g^-1`.
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `[x, y] = x y x^-1 y^-1`.
    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    pub fn elem_order(&self, x: u32) -> usize {
        let mut k = 1;
        let mut cur = x;
        while cur != 0 {
            cur = self.mul(cur, x);
            k += 1;
        }
        k
    }

    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.n)
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n)
            .all(|a| (0..a).all(|b| self.table[a * self.n + b] == self.table[b * self.n + a]))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.n as u32).any(|x| self.elem_order(x) == self.n)
    }

    fn greedy_generators(&self, pool: &[u32]) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut cur = self.closure(&[]);
        for &x in pool {
            if !cur.contains(x) {
                gens.push(x);
                cur = self.closure_from(&cur, &[x]);
            }
        }
        gens
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[u32]) -> Subgroup {
        let words = self.n.div_ceil(64);
        let mut bits = vec![0u64; words];
        bits[0] |= 1;
        let mut elements = vec![0u32];
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i];
            for &g in gens {
                let y = self.mul(x, g);
                if bits[y as usize / 64] >> (y % 64) & 1 == 0 {
                    bits[y as usize / 64] |= 1 << (y % 64);
                    elements.push(y);
                }
            }
            i += 1;
        }
        elements.sort_unstable();
        let mut gens: Vec<u32> = gens.iter().copied().filter(|&g| g != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        Subgroup {
            elements,
            bits,
            gens,
        }
    }

    /// Subgroup generated by `h` and `extra`.
    pub fn closure_from(&self, h: &Subgroup, extra: &[u32]) -> Subgroup {
        let mut gens = h.gens.clone();
        gens.extend_from_slice(extra);
        self.closure(&gens)
    }

    /// Subgroup given by an element list; checks closure.
    pub fn subgroup_from_elements(&self, elems: &[u32]) -> Result<Subgroup> {
        let s = self.closure(elems);
        if s.order() != {
            let mut e = elems.to_vec();
            e.push(0);
            e.sort_unstable();
            e.dedup();
            e.len()
        } {
            return Err(Error::Invalid("element set is not a subgroup".into()));
        }
        Ok(Subgroup {
            gens: self.greedy_generators(&s.elements),
            ..s
        })
    }

    pub fn whole(&self) -> Subgroup {
        self.closure(&self.gens.clone())
    }

    pub fn trivial(&self) -> Subgroup {
        self.closure(&[])
    }

    pub fn cyclic_subgroups(&self) -> Vec<Subgroup> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for x in 0..self.n as u32 {
            let c = self.closure(&[x]);
            if seen.insert(c.bits.clone()) {
                out.push(c);
            }
        }
        out.sort();
        out
    }

    /// All subgroups, sorted by (order, elements). Starts from the cyclic
    /// subgroups and joins with cyclic subgroups until nothing new appears.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let cyclic = self.cyclic_subgroups();
        let mut seen: HashSet<Vec<u64>> = cyclic.iter().map(|c| c.bits.clone()).collect();
        let mut all = cyclic.clone();
        let mut frontier = cyclic.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for c in &cyclic {
                    if c.is_subset(h) {
                        continue;
                    }
                    let j = self.closure_from(h, &c.gens);
                    if seen.insert(j.bits.clone()) {
                        next.push(j);
                    }
                }
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all.sort();
        all
    }

    /// Normality by conjugating the subgroup's generators by the group's.
    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.gens
            .iter()
            .all(|&g| h.gens.iter().all(|&x| h.contains(self.conj(x, g))))
    }

    /// Normality of `h` inside the subgroup `k` (conjugating by `k`'s generators).
    pub fn is_normal_in(&self, h: &Subgroup, k: &Subgroup) -> bool {
        h.is_subset(k)
            && k.gens
                .iter()
                .all(|&g| h.gens.iter().all(|&x| h.contains(self.conj(x, g))))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let elems: Vec<u32> = (0..self.n as u32)
            .filter(|&g| h.gens.iter().all(|&x| h.contains(self.conj(x, g))))
            .collect();
        self.subgroup_from_elements(&elems)
            .expect("normalizer is a subgroup")
    }

    /// Coset index of every element for a normal subgroup, and one
    /// representative (the least element) per coset. Coset 0 is `h` itself.
    pub fn cosets(&self, h: &Subgroup) -> (Vec<u32>, Vec<u32>) {
        let mut id = vec![u32::MAX; self.n];
        let mut reps = Vec::new();
        for x in 0..self.n as u32 {
            if id[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &y in &h.elements {
                id[self.mul(x, y) as usize] = c;
            }
        }
        (id, reps)
    }

    /// The quotient by a normal subgroup as an explicit table.
    pub fn quotient(&self, h: &Subgroup) -> CayleyGroup {
        let (id, reps) = self.cosets(h);
        let m = reps.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                table.push(id[self.mul(a, b) as usize]);
            }
        }
        CayleyGroup::from_flat_unchecked(m, table)
    }

    /// A subgroup as a group in its own right; element `i` of the result is
    /// `h.elements()[i]`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> CayleyGroup {
        let m = h.order();
        let mut local = vec![u32::MAX; self.n];
        for (i, &x) in h.elements.iter().enumerate() {
            local[x as usize] = i as u32;
        }
        let mut table = Vec::with_capacity(m * m);
        for &a in &h.elements {
            for &b in &h.elements {
                table.push(local[self.mul(a, b) as usize]);
            }
        }
        CayleyGroup::from_flat_unchecked(m, table)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let mut comms = Vec::new();
        for x in 0..self.n as u32 {
            for y in 0..self.n as u32 {
                comms.push(self.commutator(x, y));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        let s = self.closure(&comms);
        Subgroup {
            gens: self.greedy_generators(&comms),
            ..s
        }
    }

    /// `<x^p, [x, y]>`, the Frattini subgroup when the group is a p-group.
    pub fn frattini_p(&self, p: u64) -> Subgroup {
        let mut pool: Vec<u32> = (0..self.n as u32).map(|x| self.pow(x, p)).collect();
        pool.extend(self.derived_subgroup().elements.iter().copied());
        pool.sort_unstable();
        pool.dedup();
        let s = self.closure(&pool);
        Subgroup {
            gens: self.greedy_generators(&pool),
            ..s
        }
    }

    /// A Sylow p-subgroup, grown one normalizer step at a time from the
    /// trivial group; trivial when p does not divide the order.
    pub fn sylow(&self, p: u64) -> Subgroup {
        let mut h = self.trivial();
        if !is_prime(p) {
            return h;
        }
        let target = p.pow(valuation(self.n as u64, p)) as usize;
        while h.order() < target {
            let nh = self.normalizer(&h);
            let x = nh
                .elements
                .iter()
                .copied()
                .find(|&x| !h.contains(x) && h.contains(self.pow(x, p)))
                .expect("a p-subgroup below Sylow size grows in its normalizer");
            h = self.closure_from(&h, &[x]);
        }
        h
    }

    /// Whether some normal cyclic subgroup has a cyclic quotient (checked on
    /// the explicit quotient table).
    pub fn is_metacyclic(&self) -> bool {
        self.metacyclic_witness().is_some()
    }

    pub fn metacyclic_witness(&self) -> Option<Subgroup> {
        if self.is_cyclic() {
            return Some(self.trivial());
        }
        self.cyclic_subgroups()
            .into_iter()
            .find(|h| self.is_normal(h) && self.quotient(h).is_cyclic())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog;

    #[test]
    fn rejects_bad_tables() {
        assert!(CayleyGroup::new(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(CayleyGroup::new(vec![vec![1, 0], vec![0, 1]]).is_err());
        assert!(CayleyGroup::new(vec![]).is_err());
        let z2 = CayleyGroup::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(z2.is_cyclic());
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(catalog::cyclic(1).subgroups().len(), 1);
        assert_eq!(catalog::cyclic(4).subgroups().len(), 3);
        assert_eq!(catalog::symmetric(3).subgroups().len(), 6);
        assert_eq!(catalog::abelian(&[2, 2, 2]).subgroups().len(), 16);
        assert_eq!(catalog::dihedral(4).subgroups().len(), 10);
        assert_eq!(catalog::quaternion(8).subgroups().len(), 6);
    }

    #[test]
    fn sylow_examples() {
        assert_eq!(catalog::cyclic(12).sylow(2).order(), 4);
        let s3 = catalog::symmetric(3);
        let p = s3.sylow(3);
        assert_eq!(p.order(), 3);
        assert!(s3.is_normal(&p));
        assert!(catalog::cyclic(5).sylow(2).is_trivial());
        assert_eq!(catalog::symmetric(4).sylow(2).order(), 8);
        assert_eq!(catalog::alternating(5).sylow(5).order(), 5);
    }

    #[test]
    fn metacyclic_examples() {
        assert!(catalog::abelian(&[2, 2]).is_metacyclic());
        assert!(!catalog::abelian(&[2, 2, 2]).is_metacyclic());
        assert!(catalog::cyclic(6).is_metacyclic());
        assert!(catalog::symmetric(3).is_metacyclic());
        assert!(catalog::quaternion(8).is_metacyclic());
        assert!(!catalog::alternating(4).is_metacyclic());
    }
}
