//! Constructors for standard finite groups as Cayley tables.

use std::collections::HashMap;
use std::hash::Hash;

use super::cayley::CayleyGroup;

/// Closes `gens` under `mul` and tabulates the result. Elements are numbered
/// in breadth-first order from the identity.
pub fn from_generators<T, F>(identity: T, gens: &[T], mul: F) -> CayleyGroup
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut index: HashMap<T, u32> = HashMap::new();
    let mut elems = vec![identity.clone()];
    index.insert(identity, 0);
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let y = mul(&elems[i], g);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elems.len() as u32);
                elems.push(y);
            }
        }
        i += 1;
    }
    let n = elems.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elems {
        for b in &elems {
            table.push(index[&mul(a, b)]);
        }
    }
    CayleyGroup::from_flat_unchecked(n, table)
}

pub fn cyclic(n: u64) -> CayleyGroup {
    let gens = if n > 1 { vec![1u64] } else { vec![] };
    from_generators(0u64, &gens, |a, b| (a + b) % n)
}

/// `Z/d1 x ... x Z/dr`.
pub fn abelian(orders: &[u64]) -> CayleyGroup {
    let r = orders.len();
    let gens: Vec<Vec<u64>> = (0..r)
        .filter(|&i| orders[i] > 1)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect();
    from_generators(vec![0u64; r], &gens, |a, b| {
        a.iter()
            .zip(b)
            .zip(orders)
            .map(|((x, y), m)| (x + y) % m)
            .collect()
    })
}

pub fn direct_product(g: &CayleyGroup, h: &CayleyGroup) -> CayleyGroup {
    let mut gens: Vec<(u32, u32)> = g.generators().iter().map(|&x| (x, 0)).collect();
    gens.extend(h.generators().iter().map(|&y| (0, y)));
    from_generators((0u32, 0u32), &gens, |a, b| {
        (g.mul(a.0, b.0), h.mul(a.1, b.1))
    })
}

/// `Z/m ⋊ Z/k` with the generator of `Z/k` acting by multiplication by `r`
/// (requires `r^k = 1 mod m`).
pub fn semidirect(m: u64, k: u64, r: u64) -> CayleyGroup {
    let mut rp = vec![1u64; k as usize];
    for i in 1..k as usize {
        rp[i] = rp[i - 1] * r % m;
    }
    assert_eq!(rp[k as usize - 1] * r % m, 1 % m, "r^k must be 1 mod m");
    let gens = [(1 % m, 0), (0, 1 % k)];
    from_generators((0u64, 0u64), &gens, |a, b| {
        ((a.0 + rp[a.1 as usize] * b.0) % m, (a.1 + b.1) % k)
    })
}

/// Dihedral group of order `2n`.
pub fn dihedral(n: u64) -> CayleyGroup {
    semidirect(n, 2, n - 1)
}

/// Dicyclic group of order `4n`: `x^(2n) = 1, y^2 = x^n, y x y^-1 = x^-1`.
pub fn dicyclic(n: u64) -> CayleyGroup {
    let m = 2 * n;
    from_generators((0u64, 0u8), &[(1, 0), (0, 1)], |a, b| match (a.1, b.1) {
        (0, t) => ((a.0 + b.0) % m, t),
        (1, 0) => ((a.0 + m - b.0) % m, 1),
        _ => ((a.0 + m - b.0 + n) % m, 0),
    })
}

/// Generalized quaternion group of order `order` (a power of two, at least 8).
pub fn quaternion(order: u64) -> CayleyGroup {
    dicyclic(order / 4)
}

/// Semidihedral group of order `2^k`, `k >= 4`.
pub fn semidihedral(k: u32) -> CayleyGroup {
    let m = 1u64 << (k - 1);
    semidirect(m, 2, m / 2 - 1)
}

/// Modular group `M_{p^k}`: `Z/p^(k-1) ⋊ Z/p` acting by `1 + p^(k-2)`.
pub fn modular(p: u64, k: u32) -> CayleyGroup {
    let m = p.pow(k - 1);
    semidirect(m, p, 1 + p.pow(k - 2))
}

/// Upper unitriangular 3x3 matrices over Z/p.
pub fn heisenberg(p: u64) -> CayleyGroup {
    from_generators((0u64, 0u64, 0u64), &[(1, 0, 0), (0, 1, 0)], |a, b| {
        (
            (a.0 + b.0) % p,
            (a.1 + b.1) % p,
            (a.2 + b.2 + a.0 * b.1) % p,
        )
    })
}

fn compose(a: &[u8], b: &[u8]) -> Vec<u8> {
    // apply b first, then a
    b.iter().map(|&i| a[i as usize]).collect()
}

/// Permutation group on `0..degree` generated by `gens` (images lists).
pub fn permutation_group(degree: usize, gens: &[Vec<u8>]) -> CayleyGroup {
    let id: Vec<u8> = (0..degree as u8).collect();
    from_generators(id, gens, |a, b| compose(a, b))
}

fn transposition(n: usize, i: usize, j: usize) -> Vec<u8> {
    let mut p: Vec<u8> = (0..n as u8).collect();
    p.swap(i, j);
    p
}

fn cycle(n: usize, pts: &[usize]) -> Vec<u8> {
    let mut p: Vec<u8> = (0..n as u8).collect();
    for w in 0..pts.len() {
        p[pts[w]] = pts[(w + 1) % pts.len()] as u8;
    }
    p
}

pub fn symmetric(n: usize) -> CayleyGroup {
    if n < 2 {
        return cyclic(1);
    }
    let all: Vec<usize> = (0..n).collect();
    permutation_group(n, &[transposition(n, 0, 1), cycle(n, &all)])
}

pub fn alternating(n: usize) -> CayleyGroup {
    if n < 3 {
        return cyclic(1);
    }
    let gens: Vec<Vec<u8>> = (2..n).map(|i| cycle(n, &[0, 1, i])).collect();
    permutation_group(n, &gens)
}

/// `Z/p wr Z/p` as a permutation group on `p^2` points.
pub fn wreath_cyclic(p: usize) -> CayleyGroup {
    let n = p * p;
    let base: Vec<usize> = (0..p).collect();
    let top: Vec<Vec<u8>> = {
        let mut t: Vec<u8> = vec![0; n];
        for block in 0..p {
            for i in 0..p {
                t[block * p + i] = (((block + 1) % p) * p + i) as u8;
            }
        }
        vec![t]
    };
    let mut gens = vec![cycle(n, &base)];
    gens.extend(top);
    permutation_group(n, &gens)
}

/// SL(2, 3), order 24.
pub fn sl23() -> CayleyGroup {
    let mul = |a: &[u8; 4], b: &[u8; 4]| {
        [
            (a[0] * b[0] + a[1] * b[2]) % 3,
            (a[0] * b[1] + a[1] * b[3]) % 3,
            (a[2] * b[0] + a[3] * b[2]) % 3,
            (a[2] * b[1] + a[3] * b[3]) % 3,
        ]
    };
    from_generators([1u8, 0, 0, 1], &[[1, 1, 0, 1], [1, 0, 1, 1]], mul)
}

/// A Sylow 2-subgroup of S8 (order 128), the iterated wreath product of Z/2.
pub fn sylow2_s8() -> CayleyGroup {
    let swap_pairs = |pairs: &[(usize, usize)]| {
        let mut p: Vec<u8> = (0..8).collect();
        for &(i, j) in pairs {
            p.swap(i, j);
        }
        p
    };
    permutation_group(
        8,
        &[
            swap_pairs(&[(0, 1)]),
            swap_pairs(&[(0, 2), (1, 3)]),
            swap_pairs(&[(0, 4), (1, 5), (2, 6), (3, 7)]),
        ],
    )
}

/// Cyclic groups `Z/m`, `m` up to the given order, then products of cyclic
/// groups in every invariant-factor shape.
fn abelian_shapes(max: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, min: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        // cur is a divisibility chain read from the top factor downwards
        out.push(cur.clone());
        let top = cur.last().copied();
        for d in min..=rest {
            if let Some(t) = top {
                if t % d != 0 {
                    continue;
                }
            }
            if rest / d < 1 || d > rest {
                break;
            }
            cur.push(d);
            go(rest / d, 2, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max, 2, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|mut v| {
            v.reverse();
            v
        })
        .collect()
}

fn fingerprint(g: &CayleyGroup) -> (usize, Vec<usize>, usize, usize, usize) {
    let mut orders: Vec<usize> = (0..g.order() as u32).map(|x| g.elem_order(x)).collect();
    orders.sort_unstable();
    let center = (0..g.order() as u32)
        .filter(|&z| g.generators().iter().all(|&x| g.mul(x, z) == g.mul(z, x)))
        .count();
    let squares = {
        let mut s: Vec<u32> = (0..g.order() as u32).map(|x| g.mul(x, x)).collect();
        s.sort_unstable();
        s.dedup();
        s.len()
    };
    (
        g.order(),
        orders,
        center,
        g.derived_subgroup().order(),
        squares,
    )
}

/// A deterministic family of small groups (orders up to `max`, at most 64
/// is sensible): all abelian groups, dihedral, dicyclic, semidihedral and
/// modular groups, split metacyclic groups `Z/m ⋊ Z/k`, a few permutation
/// groups and direct products. Groups with equal invariant fingerprints are
/// listed once.
pub fn small_groups(max: u64) -> Vec<(String, CayleyGroup)> {
    let mut raw: Vec<(String, CayleyGroup)> = Vec::new();
    for shape in abelian_shapes(max) {
        let name = if shape.is_empty() {
            "Z1".to_string()
        } else {
            let s: Vec<String> = shape.iter().map(|d| format!("Z{d}")).collect();
            s.join("x")
        };
        raw.push((name, abelian(&shape)));
    }
    for m in 3..=max / 2 {
        raw.push((format!("D{}", 2 * m), dihedral(m)));
    }
    for n in 2..=max / 4 {
        raw.push((format!("Dic{}", 4 * n), dicyclic(n)));
    }
    for k in 4..=6u32 {
        if 1u64 << k <= max {
            raw.push((format!("SD{}", 1u64 << k), semidihedral(k)));
        }
    }
    for (p, k) in [(2u64, 4u32), (2, 5), (2, 6), (3, 3)] {
        if p.pow(k) <= max {
            raw.push((format!("M{}", p.pow(k)), modular(p, k)));
        }
    }
    for m in 3..=max {
        for k in 2..=max / m {
            for r in 2..m {
                let mut x = 1u64;
                for _ in 0..k {
                    x = x * r % m;
                }
                if x == 1 && crate::arith::gcd(r, m) == 1 {
                    raw.push((format!("Z{m}:Z{k}[{r}]"), semidirect(m, k, r)));
                }
            }
        }
    }
    if 27 <= max {
        raw.push(("Heis27".into(), heisenberg(3)));
    }
    let perms: [(&str, fn() -> CayleyGroup, u64); 3] = [
        ("S4", || symmetric(4), 24),
        ("A4", || alternating(4), 12),
        ("SL(2,3)", sl23, 24),
    ];
    for (name, f, n) in perms {
        if n <= max {
            raw.push((name.into(), f()));
        }
    }
    let small: Vec<(String, CayleyGroup)> = vec![
        ("D8".into(), dihedral(4)),
        ("Q8".into(), quaternion(8)),
        ("S3".into(), symmetric(3)),
        ("A4".into(), alternating(4)),
        ("Heis27".into(), heisenberg(3)),
        ("D16".into(), dihedral(8)),
    ];
    for (an, a) in &small {
        for shape in [
            vec![2u64],
            vec![2, 2],
            vec![2, 2, 2],
            vec![3],
            vec![4],
            vec![2, 4],
        ] {
            let order = a.order() as u64 * shape.iter().product::<u64>();
            if order <= max {
                let s: Vec<String> = shape.iter().map(|d| format!("Z{d}")).collect();
                raw.push((
                    format!("{an}x{}", s.join("x")),
                    direct_product(a, &abelian(&shape)),
                ));
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    raw.into_iter()
        .filter(|(_, g)| g.order() as u64 <= max && seen.insert(fingerprint(g)))
        .collect()
}
