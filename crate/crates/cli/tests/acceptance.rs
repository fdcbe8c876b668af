//! Acceptance suite. Runs every criterion, prints one line each and exits
//! nonzero if any fails.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use brauer_core::arith::{divisors, factorize, lcm, prime_power};
use brauer_core::brauer::global::{tame_symbol, SignConvention};
use brauer_core::brauer::random::{random_class, random_ratfunc};
use brauer_core::brauer::{BrauerClassGlobal, MonomialElem, TowerClass, TowerField};
use brauer_core::constructions::{
    build, smallest_field, verify_certificate, ConstructionKind, ConstructionSpec,
    DivisionCertificate,
};
use brauer_core::groups::catalog::small_groups;
use brauer_core::groups::{
    abelian_obstruction_series, classify, obstruction_series, AbelianGroup, CayleyGroup,
    FieldModel, GroupInput, ResidueKind, Verdict,
};
use brauer_core::rng::Lcg64;
use brauer_core::{FFElem, FiniteField, Place, Poly, RatFunc};

// ---------------------------------------------------------------------------
// group oracles: everything below works on a bare multiplication table

struct Table {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl Table {
    fn from_rows(rows: Vec<Vec<usize>>) -> Table {
        let n = rows.len();
        let mul: Vec<u32> = rows.iter().flatten().map(|&x| x as u32).collect();
        let e = (0..n)
            .find(|&e| (0..n).all(|x| mul[e * n + x] as usize == x))
            .unwrap();
        let inv = (0..n)
            .map(|x| (0..n).find(|&y| mul[x * n + y] as usize == e).unwrap() as u32)
            .collect();
        Table { n, mul, inv }
    }

    fn m(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }

    fn identity(&self) -> u32 {
        self.m(0, self.inv[0])
    }

    /// Subgroup generated by `gens`, as a membership mask.
    fn close(&self, gens: &[u32]) -> Vec<bool> {
        let mut inside = vec![false; self.n];
        let mut list = vec![self.identity()];
        inside[self.identity() as usize] = true;
        let mut i = 0;
        while i < list.len() {
            for &g in gens {
                let y = self.m(list[i], g);
                if !inside[y as usize] {
                    inside[y as usize] = true;
                    list.push(y);
                }
            }
            i += 1;
        }
        inside
    }

    fn normal_in(&self, h: &[bool], k: &[bool]) -> bool {
        (0..self.n as u32).filter(|&g| k[g as usize]).all(|g| {
            (0..self.n as u32)
                .filter(|&x| h[x as usize])
                .all(|x| h[self.m(self.m(g, x), self.inv[g as usize]) as usize])
        })
    }

    /// Smallest k >= 1 with g^k in h.
    fn order_mod(&self, g: u32, h: &[bool]) -> usize {
        let mut x = g;
        let mut k = 1;
        while !h[x as usize] {
            x = self.m(x, g);
            k += 1;
        }
        k
    }

    /// Is k/h cyclic (h normal in k)?
    fn quotient_cyclic(&self, k: &[bool], h: &[bool]) -> bool {
        let idx = count(k) / count(h);
        (0..self.n as u32)
            .filter(|&g| k[g as usize])
            .any(|g| self.order_mod(g, h) == idx)
    }

    /// Distinct cyclic subgroups contained in `k`.
    fn cyclic_in(&self, k: &[bool]) -> Vec<Vec<bool>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in 0..self.n as u32 {
            if k[g as usize] {
                let c = self.close(&[g]);
                if seen.insert(c.clone()) {
                    out.push(c);
                }
            }
        }
        out
    }

    /// Table of k/h (h normal in k).
    fn quotient(&self, k: &[bool], h: &[bool]) -> Table {
        let mut label = vec![u32::MAX; self.n];
        let mut reps = Vec::new();
        for g in 0..self.n as u32 {
            if !k[g as usize] || label[g as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(g);
            for x in 0..self.n as u32 {
                if h[x as usize] {
                    label[self.m(g, x) as usize] = id;
                }
            }
        }
        let rows = reps
            .iter()
            .map(|&a| {
                reps.iter()
                    .map(|&b| label[self.m(a, b) as usize] as usize)
                    .collect()
            })
            .collect();
        Table::from_rows(rows)
    }

    fn whole(&self) -> Vec<bool> {
        vec![true; self.n]
    }

    /// Definition: a cyclic normal subgroup with cyclic quotient.
    fn is_metacyclic(&self) -> bool {
        let all = self.whole();
        self.cyclic_in(&all)
            .iter()
            .any(|h| self.normal_in(h, &all) && self.quotient_cyclic(&all, h))
    }

    /// All subgroups, by repeatedly joining cyclic subgroups.
    fn subgroups(&self) -> Vec<Vec<bool>> {
        let cyc: Vec<u32> = {
            let mut seen = HashSet::new();
            (0..self.n as u32)
                .filter(|&g| seen.insert(self.close(&[g])))
                .collect()
        };
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        let mut out: Vec<(Vec<bool>, Vec<u32>)> = vec![(self.close(&[]), vec![])];
        seen.insert(out[0].0.clone());
        let mut i = 0;
        while i < out.len() {
            let (h, gens) = out[i].clone();
            for &c in &cyc {
                if h[c as usize] {
                    continue;
                }
                let mut g2 = gens.clone();
                g2.push(c);
                let j = self.close(&g2);
                if seen.insert(j.clone()) {
                    out.push((j, g2));
                }
            }
            i += 1;
        }
        out.into_iter().map(|(h, _)| h).collect()
    }

    /// Candidate tops P1: normal subgroups with cyclic quotient.
    fn tops(&self, candidates: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
        let all = self.whole();
        candidates
            .into_iter()
            .filter(|h| self.normal_in(h, &all) && self.quotient_cyclic(&all, h))
            .collect()
    }

    /// Is there a series P > P1 > P2 with P/P1 and P2 cyclic and P1/P2
    /// metacyclic, P1 drawn from `tops`?
    fn series_exists(&self, tops: &[Vec<bool>]) -> bool {
        tops.iter().any(|p1| {
            self.cyclic_in(p1)
                .iter()
                .any(|p2| self.normal_in(p2, p1) && self.quotient(p1, p2).is_metacyclic())
        })
    }

    /// The three series conditions for given masks.
    fn is_series(&self, p1: &[bool], p2: &[bool]) -> bool {
        let all = self.whole();
        let sub = |a: &[bool], b: &[bool]| a.iter().zip(b).all(|(x, y)| !x || *y);
        sub(p2, p1)
            && self.normal_in(p1, &all)
            && self.quotient_cyclic(&all, p1)
            && self.normal_in(p2, p1)
            && self.cyclic_in(p2).iter().any(|c| count(c) == count(p2))
            && self.quotient(p1, p2).is_metacyclic()
    }
}

fn count(m: &[bool]) -> usize {
    m.iter().filter(|&&b| b).count()
}

fn mask(g: &CayleyGroup, elems: &[u32]) -> Vec<bool> {
    let mut m = vec![false; g.order()];
    for &x in elems {
        m[x as usize] = true;
    }
    m
}

/// Mixed-radix table of `Z/d1 x ... x Z/dr`, built directly.
fn abelian_table(factors: &[u64]) -> Table {
    let n: u64 = factors.iter().product();
    let digits = |mut x: u64| {
        factors
            .iter()
            .map(|&d| {
                let r = x % d;
                x /= d;
                r
            })
            .collect::<Vec<_>>()
    };
    let encode = |v: &[u64]| {
        v.iter()
            .zip(factors)
            .rev()
            .fold(0, |acc, (x, d)| acc * d + x)
    };
    let rows = (0..n)
        .map(|a| {
            let da = digits(a);
            (0..n)
                .map(|b| {
                    let s: Vec<u64> = da
                        .iter()
                        .zip(digits(b))
                        .zip(factors)
                        .map(|((x, y), d)| (x + y) % d)
                        .collect();
                    encode(&s) as usize
                })
                .collect()
        })
        .collect();
    Table::from_rows(rows)
}

/// Kernels of all homomorphisms `Z/d1 x ... x Z/dr -> Z/e`, `e` the exponent:
/// exactly the subgroups with cyclic quotient.
fn abelian_kernels(t: &Table, factors: &[u64]) -> Vec<Vec<bool>> {
    let e = factors.iter().copied().fold(1, lcm);
    let choices: Vec<Vec<u64>> = factors
        .iter()
        .map(|&d| (0..e).filter(|a| a * d % e == 0).collect())
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut idx = vec![0usize; factors.len()];
    loop {
        let img: Vec<u64> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        let kernel: Vec<bool> = (0..t.n as u64)
            .map(|mut x| {
                let mut s = 0;
                for (d, a) in factors.iter().zip(&img) {
                    s += (x % d) * a;
                    x /= d;
                }
                s % e == 0
            })
            .collect();
        if seen.insert(kernel.clone()) {
            out.push(kernel);
        }
        let mut j = 0;
        loop {
            if j == idx.len() {
                return out;
            }
            idx[j] += 1;
            if idx[j] < choices[j].len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// field oracles

/// `N(r)` for `r` in `F_q[t]/(f)`, as the product of conjugates.
fn norm(r: &Poly, v: &Place) -> FFElem {
    let k = r.field();
    let f = match v {
        Place::Finite(f) => f.clone(),
        Place::Infinity => return r.coeff(0),
    };
    let d = f.deg() as u32;
    let mut prod = Poly::one(k);
    let mut conj = r.rem(&f).unwrap();
    for _ in 0..d {
        prod = prod.mul_mod(&conj, &f);
        conj = conj.pow_mod(k.order() as u128, &f);
    }
    prod.coeff(0)
}

/// Invariant at `v` from the raw tame symbols: `log_g N(residue)` mod n.
fn oracle_invariant(class: &BrauerClassGlobal, v: &Place) -> u64 {
    let k = class.field();
    let f = match v {
        Place::Finite(f) => f.clone(),
        Place::Infinity => Poly::x(k),
    };
    let mut r = Poly::one(k);
    for s in class.symbols() {
        r = r.mul_mod(
            &tame_symbol(&s.a, &s.b, v, SignConvention::Signed).unwrap(),
            &f,
        );
    }
    let nr = norm(&r, v);
    let g = k.generator();
    let mut x = k.one();
    let mut l = 0;
    while x != nr {
        x = k.mul(x, g);
        l += 1;
    }
    l % class.n()
}

fn places_of(class: &BrauerClassGlobal) -> Vec<Place> {
    let mut v: Vec<Place> = class
        .symbols()
        .iter()
        .flat_map(|s| [s.a.finite_support(), s.b.finite_support()].concat())
        .collect();
    v.sort();
    v.dedup();
    v.push(Place::Infinity);
    v
}

fn order_in(x: u64, n: u64) -> u64 {
    n / brauer_core::arith::gcd(x, n)
}

fn brute_class_order(k: &FiniteField, a: FFElem, n: u64) -> u64 {
    let pw: HashSet<u32> = k.units().map(|x| k.pow(x, n as u128).index()).collect();
    let (mut x, mut m) = (a, 1);
    while !pw.contains(&x.index()) {
        x = k.mul(x, a);
        m += 1;
    }
    m
}

fn field(q: u64) -> Arc<FiniteField> {
    Arc::new(FiniteField::of_order(q).unwrap())
}

// ---------------------------------------------------------------------------
// criteria

fn example_rank_five() -> Result<String, String> {
    for (l, p) in [(3u64, 2u64), (5, 2), (7, 3)] {
        let g = GroupInput::Abelian(AbelianGroup::new(vec![l; 5]).unwrap());
        let model = FieldModel::new(p, ResidueKind::Finite, 1, true).unwrap();
        match classify(&g, &model).unwrap() {
            Verdict::NotAdmissible { prime, .. } if prime == l => {}
            v => return Err(format!("(Z/{l})^5 over char {p}: {v}")),
        }
        for k in 1..=4 {
            let a = AbelianGroup::new(vec![l; k]).unwrap();
            let s = abelian_obstruction_series(&a)
                .unwrap()
                .ok_or(format!("(Z/{l})^{k}: no series"))?;
            // validate on a table when small enough
            if l.pow(k as u32) <= 512 {
                let t = abelian_table(&vec![l; k]);
                let ok = series_from_factors(&t, &vec![l; k], &s.p1, &s.p2);
                if !ok {
                    return Err(format!("(Z/{l})^{k}: series {s} fails"));
                }
            } else {
                let top = s.top_factors();
                let mid = s.middle_factors();
                if top.len() > 1 || s.p2_factors().len() > 1 || mid.len() > 2 {
                    return Err(format!("(Z/{l})^{k}: series {s} has wrong shape"));
                }
            }
        }
    }
    Ok("rank 5 not admissible for l=3,5,7; series for ranks 1..4".into())
}

/// Masks of the subgroups spanned by basis coordinates `p1`, `p2` of the
/// mixed-radix table, checked against the series conditions.
fn series_from_factors(t: &Table, factors: &[u64], p1: &[usize], p2: &[usize]) -> bool {
    let span = |idx: &[usize]| -> Vec<bool> {
        (0..t.n as u64)
            .map(|mut x| {
                factors.iter().enumerate().all(|(i, d)| {
                    let r = x % d;
                    x /= d;
                    r == 0 || idx.contains(&i)
                })
            })
            .collect()
    };
    t.is_series(&span(p1), &span(p2))
}

fn sufficiency() -> Result<String, String> {
    let mut groups = Vec::new();
    for order in 2..=24u64 {
        let f = factorize(order);
        // invariant factors from one partition per prime
        let mut shapes: Vec<Vec<u64>> = vec![vec![]];
        for (p, e) in f {
            let mut next = Vec::new();
            for s in &shapes {
                for part in partitions(e, e) {
                    let mut v = s.clone();
                    v.extend(part.iter().map(|&x| p.pow(x)));
                    next.push(v);
                }
            }
            shapes = next;
        }
        for s in shapes {
            groups.push(AbelianGroup::from_cyclic_orders(&s).unwrap());
        }
    }
    let mut verified = 0;
    for g in &groups {
        let f = g.factors().to_vec();
        if f.len() > 4 {
            return Err(format!("{g} has rank above 4"));
        }
        let mut orders = [1u64; 4];
        orders[4 - f.len()..].copy_from_slice(&f);
        let k = smallest_field(ConstructionKind::Thm45, orders).map_err(|e| e.to_string())?;
        let model =
            FieldModel::new(k.characteristic(), ResidueKind::Finite, k.order() - 1, true).unwrap();
        match classify(&GroupInput::Abelian(g.clone()), &model).unwrap() {
            Verdict::Admissible { .. } => {}
            v => return Err(format!("{g}: {v}")),
        }
        let spec = ConstructionSpec::new(ConstructionKind::Thm45, orders, k, None, None)
            .map_err(|e| e.to_string())?;
        let c = build(&spec).map_err(|e| e.to_string())?;
        let cert =
            DivisionCertificate::parse(&c.certificate.to_text()).map_err(|e| e.to_string())?;
        let v = verify_certificate(&cert).map_err(|e| format!("{g}: {e}"))?;
        if !v.division || v.index != g.order() {
            return Err(format!("{g}: index {} of degree {}", v.index, g.order()));
        }
        verified += 1;
    }
    if verified < 20 {
        return Err(format!("only {verified} groups"));
    }
    Ok(format!(
        "{verified} abelian groups admissible, certificates replayed"
    ))
}

fn reciprocity() -> Result<String, String> {
    let mut rng = Lcg64::new(3);
    let qs = [3u64, 5, 7, 9, 13];
    let mut total = 0;
    for i in 0..500 {
        let q = qs[i % qs.len()];
        let k = field(q);
        let n = *rng.pick(&divisors(q - 1));
        let class = random_class(&mut rng, &k, n, 3, 2).unwrap();
        let sum: u64 = places_of(&class)
            .iter()
            .map(|v| oracle_invariant(&class, v))
            .sum::<u64>()
            % n;
        if sum != 0 || !class.reciprocity_check().unwrap() {
            return Err(format!("class {class} over GF({q}): sum {sum}"));
        }
        for d in class.local_data().unwrap() {
            if d.invariant != oracle_invariant(&class, &d.place) {
                return Err(format!("class {class}: invariant at {} differs", d.place));
            }
        }
        total += 1;
    }
    Ok(format!("{total}/500 classes sum to zero"))
}

fn hasse_witness() -> Result<String, String> {
    let mut rng = Lcg64::new(7);
    let cases = [(5u64, 4u64), (3, 2), (7, 3), (9, 8), (13, 4), (11, 5)];
    for i in 0..200 {
        let (q, n) = cases[i % cases.len()];
        let k = field(q);
        let class = random_class(&mut rng, &k, n, 3, 2).unwrap();
        let g = class.global_index().unwrap();
        let by_order = class.global_index_by_residue_order().unwrap();
        let oracle = places_of(&class)
            .iter()
            .map(|v| order_in(oracle_invariant(&class, v), n))
            .fold(1, lcm);
        if g != by_order || g != oracle {
            return Err(format!("{class}: {g} vs {by_order} vs {oracle}"));
        }
        let w = class.hasse_witness().unwrap();
        if g > 1 && order_in(oracle_invariant(&class, &w), n) != g {
            return Err(format!("{class}: witness {w} misses index {g}"));
        }
    }
    let out = run(&[
        "hasse", "--random", "200", "--q", "5", "--n", "4", "--seed", "1", "--format", "record",
    ]);
    if !out.contains("output.witnesses_found=200\n") {
        return Err("cli hasse run did not find 200 witnesses".into());
    }
    Ok("200/200 witnesses, index routes agree".into())
}

fn tower_engine() -> Result<String, String> {
    let mut checked = 0;
    for q in [3u64, 4, 5, 7, 8, 9, 11, 13] {
        let k = field(q);
        let one = TowerField::standard(k.clone(), 1);
        for n in divisors(q - 1) {
            for a in k.units() {
                let c = TowerClass::new(
                    one.clone(),
                    n,
                    vec![(MonomialElem::constant(a, 1), MonomialElem::param(&k, 0, 1))],
                )
                .unwrap();
                if c.tower_index().index != brute_class_order(&k, a, n) {
                    return Err(format!("(a, t)_{n} over GF({q})"));
                }
                checked += 1;
            }
        }
    }
    for n in 1..=12u64 {
        let q = (2..)
            .find(|&q| prime_power(q).is_some() && (q - 1) % n == 0)
            .unwrap();
        let k = field(q);
        let c = TowerClass::new(
            TowerField::standard(k.clone(), 2),
            n,
            vec![(MonomialElem::param(&k, 0, 2), MonomialElem::param(&k, 1, 2))],
        )
        .unwrap();
        if c.tower_index().index != n {
            return Err(format!("(t1, t2)_{n} over GF({q})"));
        }
    }
    let c = TowerClass::parse("4; base=GF(5); params=t1,t2; (2, t1); (2, t2)")
        .map_err(|e| e.to_string())?;
    if c.tower_index().index != 4 {
        return Err("(2,t1)_4 + (2,t2)_4".into());
    }
    Ok(format!(
        "{checked} closed forms, (t1,t2)_n for n<=12, hand example"
    ))
}

fn symbol_calculus() -> Result<String, String> {
    let mut rng = Lcg64::new(11);
    let qs = [3u64, 5, 7, 9, 13, 4];
    let (mut st, mut anti, mut bi) = (0, 0, 0);
    let mut i = 0;
    while st < 1000 || anti < 1000 || bi < 1000 {
        let q = qs[i % qs.len()];
        i += 1;
        let k = field(q);
        let n = *rng.pick(&divisors(q - 1));
        let a = random_ratfunc(&mut rng, &k, 2);
        let b = random_ratfunc(&mut rng, &k, 2);
        let c = random_ratfunc(&mut rng, &k, 2);
        let opp = &RatFunc::one(&k) - &a;
        if st < 1000 && !opp.is_zero() && !a.is_one() {
            let stb = BrauerClassGlobal::from_pairs(k.clone(), n, vec![(a.clone(), opp)]).unwrap();
            if places_of(&stb)
                .iter()
                .any(|v| oracle_invariant(&stb, v) != 0)
                || stb.global_index().unwrap() != 1
            {
                return Err(format!("Steinberg fails for {a}"));
            }
            st += 1;
        }
        if anti < 1000 {
            let ab = BrauerClassGlobal::from_pairs(
                k.clone(),
                n,
                vec![(a.clone(), b.clone()), (b.clone(), a.clone())],
            )
            .unwrap();
            if places_of(&ab).iter().any(|v| oracle_invariant(&ab, v) != 0) {
                return Err(format!("antisymmetry fails for {a}, {b}"));
            }
            anti += 1;
        }
        if bi < 1000 {
            let lhs =
                BrauerClassGlobal::from_pairs(k.clone(), n, vec![(a.clone(), &b * &c)]).unwrap();
            let rhs = BrauerClassGlobal::from_pairs(
                k.clone(),
                n,
                vec![(a.clone(), b.clone()), (a.clone(), c.clone())],
            )
            .unwrap();
            let mut places = places_of(&lhs);
            places.extend(places_of(&rhs));
            if places
                .iter()
                .any(|v| oracle_invariant(&lhs, v) != oracle_invariant(&rhs, v))
            {
                return Err(format!("bimultiplicativity fails for {a}, {b}, {c}"));
            }
            bi += 1;
        }
    }
    Ok(format!(
        "steinberg {st}, antisymmetry {anti}, bimultiplicativity {bi}"
    ))
}

fn group_oracles() -> Result<String, String> {
    let groups = small_groups(64);
    let mut series_checked = 0;
    for (name, g) in &groups {
        let t = Table::from_rows(g.rows());
        if g.is_metacyclic() != t.is_metacyclic() {
            return Err(format!("{name}: metacyclic disagrees"));
        }
        if prime_power(g.order() as u64).is_none() && g.order() > 1 {
            continue;
        }
        let lib = obstruction_series(g).map_err(|e| e.to_string())?;
        let brute = t.series_exists(&t.tops(t.subgroups()));
        if lib.is_some() != brute {
            return Err(format!(
                "{name}: series exists {brute}, library says {}",
                lib.is_some()
            ));
        }
        if let Some(s) = lib {
            if !t.is_series(&mask(g, s.p1.elements()), &mask(g, s.p2.elements())) {
                return Err(format!("{name}: returned series is invalid"));
            }
        }
        series_checked += 1;
    }
    let mut abelian = 0;
    for p in [2u64, 3, 5, 7] {
        let mut e = 1;
        while p.pow(e) <= 256 {
            for part in partitions(e, e) {
                let factors: Vec<u64> = part.iter().rev().map(|&x| p.pow(x)).collect();
                let a = AbelianGroup::new(factors.clone()).unwrap();
                let fast = abelian_obstruction_series(&a).unwrap();
                let t = abelian_table(&factors);
                let ok = match &fast {
                    Some(s) => series_from_factors(&t, &factors, &s.p1, &s.p2),
                    None => !t.series_exists(&abelian_kernels(&t, &factors)),
                };
                if !ok {
                    return Err(format!("abelian {factors:?}: fast path disagrees"));
                }
                abelian += 1;
            }
            e += 1;
        }
    }
    Ok(format!(
        "{} groups, {series_checked} p-groups, {abelian} abelian p-groups",
        groups.len()
    ))
}

fn run(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_brauer"))
        .args(args)
        .output()
        .unwrap();
    String::from_utf8(out.stdout).unwrap()
        + &String::from_utf8(out.stderr).unwrap()
        + &format!("exit={:?}", out.status.code())
}

fn determinism() -> Result<String, String> {
    let cert = std::env::temp_dir().join(format!("acceptance-{}.cert", std::process::id()));
    let cert_s = cert.to_str().unwrap().to_string();
    let runs: Vec<Vec<&str>> = vec![
        vec![
            "hasse", "--random", "50", "--q", "7", "--n", "3", "--seed", "42",
        ],
        vec![
            "hasse", "--random", "50", "--q", "9", "--n", "8", "--seed", "5", "--format", "record",
        ],
        vec![
            "residue",
            "--field",
            "GF(5)",
            "--expr",
            "4; (t, t^2 + 2); (t + 1, 2)",
        ],
        vec![
            "index",
            "--tower",
            "--expr",
            "4; base=GF(5); params=t1,t2; (2, t1); (2, t2)",
        ],
        vec![
            "classify",
            "--expr",
            "abelian: [3,3,3,3,3]",
            "--residue-char",
            "2",
            "--two-dim-local",
        ],
        vec![
            "construct",
            "--kind",
            "thm42",
            "--orders",
            "1,1,2,2",
            "--verify",
            "--format",
            "record",
        ],
        vec![
            "construct",
            "--orders",
            "2,2,1,1",
            "--verify",
            "--certificate",
            &cert_s,
        ],
        vec!["verify", &cert_s],
    ];
    for args in &runs {
        let a = run(args);
        let b = run(args);
        if a != b {
            return Err(format!("brauer {} differs between runs", args.join(" ")));
        }
        if !a.ends_with("exit=Some(0)") {
            return Err(format!("brauer {} failed: {a}", args.join(" ")));
        }
    }
    let _ = std::fs::remove_file(&cert);
    Ok(format!("{} command lines byte-identical", runs.len()))
}

fn main() {
    type Criterion = (
        &'static str,
        fn() -> Result<String, String>,
        Option<Duration>,
    );
    let criteria: [Criterion; 8] = [
        (
            "rank-five example",
            example_rank_five,
            Some(Duration::from_secs(60)),
        ),
        (
            "sufficiency and certificates",
            sufficiency,
            Some(Duration::from_secs(300)),
        ),
        ("reciprocity", reciprocity, None),
        ("hasse witness", hasse_witness, None),
        ("tower engine", tower_engine, None),
        ("symbol calculus", symbol_calculus, None),
        ("group oracles", group_oracles, None),
        ("determinism", determinism, None),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let res = match (res, limit) {
            (Ok(_), Some(l)) if took > *l => Err(format!("took {took:?}, limit {l:?}")),
            (r, _) => r,
        };
        match res {
            Ok(msg) => println!(
                "criterion {} {name}: PASS ({msg}; {:.1}s)",
                i + 1,
                took.as_secs_f64()
            ),
            Err(msg) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({msg})", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
