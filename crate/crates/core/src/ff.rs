//! Arithmetic in small finite fields GF(p^e), discrete logarithms, n-th power
//! classes and cyclic characters.
//!
//! Elements are stored as integers `c_0 + c_1 p + ... + c_{e-1} p^{e-1}` where
//! `c_i` are the coefficients of the residue class modulo the field's defining
//! polynomial. The modulus is the smallest monic irreducible polynomial in
//! that same ordering and the generator is the smallest element of full order,
//! so every field is reproducible from `(p, e)` alone.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::arith::{gcd, is_prime, prime_divisors};
use crate::error::{Error, Result};

pub const DEFAULT_FIELD_BOUND: u64 = 1 << 20;

/// Fields up to this order keep full exp/log tables; larger ones fall back to
/// baby-step giant-step for logarithms.
const TABLE_LIMIT: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FFElem(u32);

impl FFElem {
    pub const ZERO: FFElem = FFElem(0);
    pub const ONE: FFElem = FFElem(1);

    /// The integer encoding of the coefficient vector.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug)]
struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub struct FiniteField {
    p: u64,
    e: u32,
    q: u64,
    /// Monic, low degree first, length e + 1.
    modulus: Vec<u64>,
    generator: FFElem,
    tables: Option<Tables>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.e)
        }
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e
    }
}

impl Eq for FiniteField {}

/// Builds the canonical field of order `p^e` (default size bound).
pub fn ff_make(p: u64, e: u32) -> Result<Arc<FiniteField>> {
    FiniteField::new(p, e).map(Arc::new)
}

impl FiniteField {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        Self::with_bound(p, e, DEFAULT_FIELD_BOUND)
    }

    pub fn with_bound(p: u64, e: u32, bound: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::DegreeZero);
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= bound)
            .ok_or(Error::BoundExceeded {
                what: "field order",
                value: p.saturating_pow(e),
                bound,
            })?;
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, e)
        };
        let mut k = FiniteField {
            p,
            e,
            q,
            modulus,
            generator: FFElem::ONE,
            tables: None,
        };
        k.generator = k.find_generator();
        if q <= TABLE_LIMIT {
            k.tables = Some(k.build_tables());
        }
        Ok(k)
    }

    /// Builds the field of order `q`, which must be a prime power.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, e) = crate::arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, e)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> FFElem {
        self.generator
    }

    pub fn is_prime_field(&self) -> bool {
        self.e == 1
    }

    pub fn zero(&self) -> FFElem {
        FFElem::ZERO
    }

    pub fn one(&self) -> FFElem {
        FFElem::ONE
    }

    /// Element with integer encoding `index`; panics when out of range.
    pub fn elem(&self, index: u64) -> FFElem {
        assert!(index < self.q, "index {index} out of range for {self}");
        FFElem(index as u32)
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> FFElem {
        FFElem(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> FFElem {
        assert!(coeffs.len() <= self.e as usize);
        let mut idx = 0u64;
        for &c in coeffs.iter().rev() {
            idx = idx * self.p + c % self.p;
        }
        FFElem(idx as u32)
    }

    pub fn coeffs(&self, x: FFElem) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.e as usize);
        let mut v = x.0 as u64;
        for _ in 0..self.e {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    pub fn elements(&self) -> impl Iterator<Item = FFElem> {
        (0..self.q as u32).map(FFElem)
    }

    pub fn units(&self) -> impl Iterator<Item = FFElem> {
        (1..self.q as u32).map(FFElem)
    }

    pub fn add(&self, a: FFElem, b: FFElem) -> FFElem {
        if self.e == 1 {
            return FFElem(((a.0 as u64 + b.0 as u64) % self.p) as u32);
        }
        if self.p == 2 {
            return FFElem(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let (mut out, mut place) = (0u64, 1u64);
        for _ in 0..self.e {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FFElem(out as u32)
    }

    pub fn neg(&self, a: FFElem) -> FFElem {
        if self.e == 1 {
            return FFElem(((self.p - a.0 as u64) % self.p) as u32);
        }
        if self.p == 2 {
            return a;
        }
        let mut x = a.0 as u64;
        let (mut out, mut place) = (0u64, 1u64);
        for _ in 0..self.e {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        FFElem(out as u32)
    }

    pub fn sub(&self, a: FFElem, b: FFElem) -> FFElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FFElem, b: FFElem) -> FFElem {
        if a.is_zero() || b.is_zero() {
            return FFElem::ZERO;
        }
        if self.e == 1 {
            return FFElem(((a.0 as u64 * b.0 as u64) % self.p) as u32);
        }
        match &self.tables {
            Some(t) => {
                let s = (t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64) % (self.q - 1);
                FFElem(t.exp[s as usize])
            }
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: FFElem, b: FFElem) -> FFElem {
        let (p, e) = (self.p, self.e as usize);
        let x = self.coeffs(a);
        let y = self.coeffs(b);
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % p;
            }
        }
        for deg in (e..prod.len()).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            for (j, &m) in self.modulus[..e].iter().enumerate() {
                let idx = deg - e + j;
                prod[idx] = (prod[idx] + (p - c) * m) % p;
            }
            prod[deg] = 0;
        }
        self.from_coeffs(&prod[..e])
    }

    pub fn pow(&self, a: FFElem, exp: u128) -> FFElem {
        if exp == 0 {
            return FFElem::ONE;
        }
        if a.is_zero() {
            return FFElem::ZERO;
        }
        let mut n = (exp % (self.q as u128 - 1)) as u64;
        if let Some(t) = &self.tables {
            let s = (t.log[a.0 as usize] as u128 * n as u128) % (self.q as u128 - 1);
            return FFElem(t.exp[s as usize]);
        }
        let (mut base, mut acc) = (a, FFElem::ONE);
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Power with a signed exponent; panics on a negative power of zero.
    pub fn pow_signed(&self, a: FFElem, exp: i128) -> FFElem {
        if exp >= 0 {
            self.pow(a, exp as u128)
        } else {
            let inv = self.inv(a).expect("negative power of zero");
            self.pow(inv, exp.unsigned_abs())
        }
    }

    pub fn inv(&self, a: FFElem) -> Result<FFElem> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.pow(a, self.q as u128 - 2))
    }

    pub fn div(&self, a: FFElem, b: FFElem) -> Result<FFElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Discrete logarithm to the fixed generator: the unique `k` in
    /// `[0, q-2]` with `g^k = x`.
    pub fn dlog(&self, x: FFElem) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        if let Some(t) = &self.tables {
            return Ok(t.log[x.0 as usize] as u64);
        }
        Ok(self.bsgs(x))
    }

    fn bsgs(&self, x: FFElem) -> u64 {
        let order = self.q - 1;
        let m = (order as f64).sqrt().ceil() as u64;
        let mut baby = HashMap::with_capacity(m as usize);
        let mut cur = FFElem::ONE;
        for j in 0..m {
            baby.entry(cur).or_insert(j);
            cur = self.mul_slow_or_fast(cur, self.generator);
        }
        let giant = self.inv(self.pow(self.generator, m as u128)).unwrap();
        let mut y = x;
        for i in 0..=m {
            if let Some(&j) = baby.get(&y) {
                return (i * m + j) % order;
            }
            y = self.mul_slow_or_fast(y, giant);
        }
        unreachable!("generator does not generate the unit group")
    }

    fn mul_slow_or_fast(&self, a: FFElem, b: FFElem) -> FFElem {
        self.mul(a, b)
    }

    /// Multiplicative order of a unit.
    pub fn multiplicative_order(&self, a: FFElem) -> Result<u64> {
        let l = self.dlog(a)?;
        Ok((self.q - 1) / gcd(self.q - 1, l))
    }

    /// Whether `a` lies in `(k^*)^n`; zero counts as an n-th power.
    pub fn is_nth_power(&self, a: FFElem, n: u64) -> bool {
        if a.is_zero() {
            return true;
        }
        let d = gcd(n, self.q - 1);
        self.pow(a, ((self.q - 1) / d) as u128) == FFElem::ONE
    }

    /// A primitive n-th root of unity `g^((q-1)/n)`.
    pub fn root_of_unity(&self, n: u64) -> Result<FFElem> {
        if n == 0 || !(self.q - 1).is_multiple_of(n) {
            return Err(Error::RootsOfUnityMissing { n, q: self.q });
        }
        Ok(self.pow(self.generator, ((self.q - 1) / n) as u128))
    }

    /// Order of the class of `a` in `k^*/k^{*n}`.
    ///
    /// The quotient is cyclic of order `d = gcd(n, q-1)` and the image of
    /// `g^l` has order `d / gcd(d, l)`.
    pub fn power_class_order(&self, a: FFElem, n: u64) -> Result<u64> {
        let l = self.dlog(a)?;
        let d = gcd(n, self.q - 1);
        Ok(d / gcd(d, l))
    }

    /// Degree `[k(a^{1/n}) : k]`, defined when `k` contains the n-th roots of unity.
    pub fn root_degree(&self, a: FFElem, n: u64) -> Result<u64> {
        if n == 0 || !(self.q - 1).is_multiple_of(n) {
            return Err(Error::RootsOfUnityMissing { n, q: self.q });
        }
        self.power_class_order(a, n)
    }

    /// Kummer character of a unit over the degree-`f` extension of this field,
    /// as an element of Z/n: `a^((q^f-1)/n) = zeta^c` with `zeta = g^((q-1)/n)`.
    ///
    /// Since `a` lies in the base field, `(q^f-1)/n ≡ f (q-1)/n` modulo
    /// `(q-1)` up to a multiple of `n`, so the character is `f * dlog(a) mod n`.
    pub fn kummer_character(&self, a: FFElem, n: u64, f: u64) -> Result<u64> {
        if n == 0 || !(self.q - 1).is_multiple_of(n) {
            return Err(Error::RootsOfUnityMissing { n, q: self.q });
        }
        let l = self.dlog(a)? % n;
        Ok(((l as u128 * f as u128) % n as u128) as u64)
    }

    fn find_generator(&self) -> FFElem {
        let order = self.q - 1;
        let primes = prime_divisors(order);
        for idx in 1..self.q {
            let x = FFElem(idx as u32);
            if primes
                .iter()
                .all(|&r| self.pow_slow(x, order / r) != FFElem::ONE)
            {
                return x;
            }
        }
        unreachable!("unit group of a finite field is cyclic")
    }

    fn pow_slow(&self, a: FFElem, mut n: u64) -> FFElem {
        let (mut base, mut acc) = (a, FFElem::ONE);
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul_no_table(acc, base);
            }
            base = self.mul_no_table(base, base);
            n >>= 1;
        }
        acc
    }

    fn mul_no_table(&self, a: FFElem, b: FFElem) -> FFElem {
        if a.is_zero() || b.is_zero() {
            return FFElem::ZERO;
        }
        if self.e == 1 {
            return FFElem(((a.0 as u64 * b.0 as u64) % self.p) as u32);
        }
        self.mul_slow(a, b)
    }

    fn build_tables(&self) -> Tables {
        let order = (self.q - 1) as usize;
        let mut exp = vec![0u32; order];
        let mut log = vec![0u32; self.q as usize];
        let mut cur = FFElem::ONE;
        for (k, slot) in exp.iter_mut().enumerate() {
            *slot = cur.0;
            log[cur.0 as usize] = k as u32;
            cur = self.mul_no_table(cur, self.generator);
        }
        Tables { exp, log }
    }

    /// Serialized form: an integer for prime fields, `g^k` otherwise.
    pub fn format(&self, x: FFElem) -> String {
        if self.e == 1 || x.is_zero() {
            return x.0.to_string();
        }
        match self.dlog(x).unwrap() {
            0 => "1".to_string(),
            1 => "g".to_string(),
            k => format!("g^{k}"),
        }
    }

    /// Parses `0`, an integer, `g` or `g^k` (with an optional leading `-`).
    pub fn parse_elem(&self, s: &str) -> Result<FFElem> {
        let s = s.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, s),
        };
        let val = if let Some(rest) = body.strip_prefix('g') {
            let k = match rest.trim().strip_prefix('^') {
                Some(e) => e
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| Error::syntax(0, format!("bad exponent in {s:?}")))?,
                None if rest.trim().is_empty() => 1,
                None => return Err(Error::syntax(0, format!("bad element {s:?}"))),
            };
            self.pow(self.generator, k as u128)
        } else {
            let n = body
                .parse::<i64>()
                .map_err(|_| Error::syntax(0, format!("bad element {s:?}")))?;
            self.from_int(n)
        };
        Ok(if neg { self.neg(val) } else { val })
    }
}

impl FromStr for FiniteField {
    type Err = Error;

    /// Accepts `GF(q)` or `GF(p^e)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::syntax(0, format!("expected GF(q), got {s:?}")))?;
        let bad = || Error::syntax(3, format!("bad field order in {s:?}"));
        match inner.split_once('^') {
            Some((p, e)) => {
                let p = p.trim().parse::<u64>().map_err(|_| bad())?;
                let e = e.trim().parse::<u32>().map_err(|_| bad())?;
                FiniteField::new(p, e)
            }
            None => FiniteField::of_order(inner.trim().parse::<u64>().map_err(|_| bad())?),
        }
    }
}

fn smallest_irreducible(p: u64, e: u32) -> Vec<u64> {
    let count = p.pow(e);
    for idx in 0..count {
        let mut f = Vec::with_capacity(e as usize + 1);
        let mut v = idx;
        for _ in 0..e {
            f.push(v % p);
            v /= p;
        }
        f.push(1);
        if is_irreducible_trial(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree at most deg(f)/2.
fn is_irreducible_trial(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    if f[0] == 0 {
        return n == 1;
    }
    for d in 1..=n / 2 {
        for idx in 0..p.pow(d as u32) {
            let mut g = Vec::with_capacity(d + 1);
            let mut v = idx;
            for _ in 0..d {
                g.push(v % p);
                v /= p;
            }
            g.push(1);
            if rem_monic(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn rem_monic(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if c != 0 {
            for (j, &gj) in g.iter().enumerate() {
                r[shift + j] = (r[shift + j] + (p - c) * gj) % p;
            }
        }
        r.pop();
    }
    r
}

/// An element of `H^1(k, Z/n)` for a finite field `k`, encoded by its value
/// `c` in Z/n on the Frobenius generator. Value 0 is the trivial pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCharacter {
    field: Arc<FiniteField>,
    modulus: u64,
    value: u64,
}

impl CyclicCharacter {
    pub fn new(field: Arc<FiniteField>, modulus: u64, value: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Invalid("character modulus must be positive".into()));
        }
        Ok(CyclicCharacter {
            field,
            modulus,
            value: value % modulus,
        })
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// Degree of the cyclic extension, i.e. the order of the value in Z/n.
    pub fn degree(&self) -> u64 {
        crate::arith::order_mod(self.value, self.modulus)
    }

    pub fn is_trivial(&self) -> bool {
        self.value == 0
    }

    /// `m` times the character: the pair `(E(m), σ^{m/d})`.
    pub fn power(&self, m: u64) -> CyclicCharacter {
        let value = ((self.value as u128 * m as u128) % self.modulus as u128) as u64;
        CyclicCharacter {
            field: self.field.clone(),
            modulus: self.modulus,
            value,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_power_class_order(k: &FiniteField, a: FFElem, n: u64) -> u64 {
        let powers: Vec<FFElem> = k.units().map(|x| k.pow(x, n as u128)).collect();
        (1..=n)
            .find(|&d| powers.contains(&k.pow(a, d as u128)))
            .unwrap()
    }

    #[test]
    fn make_small_fields() {
        let f5 = FiniteField::new(5, 1).unwrap();
        assert_eq!(f5.generator(), f5.elem(2));
        let f9 = FiniteField::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        assert_eq!(f9.order(), 9);
        assert_eq!(FiniteField::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FiniteField::new(3, 0).unwrap_err(), Error::DegreeZero);
        assert!(matches!(
            FiniteField::new(2, 21),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn generator_has_full_order_everywhere() {
        for (p, e) in [(2, 1), (2, 4), (3, 3), (5, 2), (7, 2), (13, 1), (2, 8)] {
            let k = FiniteField::new(p, e).unwrap();
            let g = k.generator();
            let mut seen = std::collections::HashSet::new();
            let mut x = k.one();
            for _ in 0..k.order() - 1 {
                assert!(seen.insert(x));
                x = k.mul(x, g);
            }
            assert_eq!(x, k.one());
        }
    }

    #[test]
    fn dlog_round_trip_and_examples() {
        let f5 = FiniteField::new(5, 1).unwrap();
        assert_eq!(f5.dlog(f5.one()).unwrap(), 0);
        assert_eq!(f5.dlog(f5.elem(4)).unwrap(), 2);
        assert_eq!(f5.dlog(f5.zero()), Err(Error::ZeroElement));
        for (p, e) in [(2, 10), (3, 6), (31, 2), (1021, 1)] {
            let k = FiniteField::new(p, e).unwrap();
            for x in k.units() {
                assert_eq!(k.pow(k.generator(), k.dlog(x).unwrap() as u128), x);
            }
        }
    }

    #[test]
    fn bsgs_on_large_field() {
        let k = FiniteField::new(1048573, 1).unwrap();
        assert!(k.tables.is_none());
        for x in [1u64, 2, 3, 99991, 1048572] {
            let x = k.elem(x);
            assert_eq!(k.pow(k.generator(), k.dlog(x).unwrap() as u128), x);
        }
        let k = FiniteField::new(2, 17).unwrap();
        let x = k.elem(12345);
        assert_eq!(k.pow(k.generator(), k.dlog(x).unwrap() as u128), x);
    }

    #[test]
    fn power_class_order_matches_brute_force() {
        let f5 = FiniteField::new(5, 1).unwrap();
        assert_eq!(f5.power_class_order(f5.elem(2), 4).unwrap(), 4);
        assert_eq!(f5.power_class_order(f5.one(), 4).unwrap(), 1);
        let f3 = FiniteField::new(3, 1).unwrap();
        assert_eq!(f3.power_class_order(f3.elem(2), 2).unwrap(), 2);
        for q in [3u64, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49, 121] {
            let k = FiniteField::of_order(q).unwrap();
            for n in 1..=12 {
                for a in k.units() {
                    let got = k.power_class_order(a, n).unwrap();
                    assert_eq!(got, brute_power_class_order(&k, a, n), "q={q} n={n}");
                    assert_eq!(gcd(n, q - 1) % got, 0);
                    assert_eq!(got == 1, k.is_nth_power(a, n));
                }
            }
        }
    }

    #[test]
    fn root_degree_examples() {
        let f5 = FiniteField::new(5, 1).unwrap();
        assert_eq!(f5.root_degree(f5.elem(2), 4).unwrap(), 4);
        assert_eq!(
            f5.root_degree(f5.elem(2), 3),
            Err(Error::RootsOfUnityMissing { n: 3, q: 5 })
        );
        let f7 = FiniteField::new(7, 1).unwrap();
        assert_eq!(f7.root_degree(f7.elem(3), 6).unwrap(), 6);
    }

    #[test]
    fn kummer_character_over_extensions() {
        // 2 is a 4th power in GF(5^4): 2^((625-1)/4) = 2^156 = 1.
        let f5 = Arc::new(FiniteField::new(5, 1).unwrap());
        assert_eq!(f5.kummer_character(f5.elem(2), 4, 4).unwrap(), 0);
        assert_eq!(f5.pow(f5.elem(2), 156), f5.one());
        let f625 = FiniteField::new(5, 4).unwrap();
        let two = f625.from_int(2);
        assert!(f625.is_nth_power(two, 4));
        // brute force over GF(5^2): the character is 2*dlog(a) mod 4
        let f25 = FiniteField::new(5, 2).unwrap();
        for a in 1..5 {
            let x = f25.from_int(a);
            let c = f5.kummer_character(f5.elem(a as u64), 4, 2).unwrap();
            assert_eq!(c == 0, f25.is_nth_power(x, 4));
        }
    }

    #[test]
    fn character_power_examples() {
        let k = Arc::new(FiniteField::new(5, 1).unwrap());
        let chi = CyclicCharacter::new(k.clone(), 8, 1).unwrap();
        assert_eq!(chi.power(2).value(), 2);
        assert_eq!(chi.power(2).degree(), 4);
        assert!(chi.power(8).is_trivial());
        let chi = CyclicCharacter::new(k, 6, 2).unwrap();
        assert_eq!(chi.degree(), 3);
        assert!(chi.power(3).is_trivial());
    }

    #[test]
    fn character_power_homomorphism() {
        let k = Arc::new(FiniteField::new(5, 1).unwrap());
        for n in 1..=24u64 {
            for c in 0..n {
                let chi = CyclicCharacter::new(k.clone(), n, c).unwrap();
                for m1 in 1..=n {
                    let lhs = chi.power(m1);
                    for m2 in 1..=n {
                        assert_eq!(lhs.power(m2), chi.power(m1 * m2));
                    }
                    assert_eq!(lhs.degree() * gcd(chi.degree(), m1), chi.degree());
                    assert_eq!(lhs.is_trivial(), m1 % chi.degree() == 0);
                }
            }
        }
    }

    #[test]
    fn parse_and_format_elements() {
        let f9 = FiniteField::new(3, 2).unwrap();
        for x in f9.elements() {
            assert_eq!(f9.parse_elem(&f9.format(x)).unwrap(), x);
        }
        let f7: FiniteField = "GF(7)".parse().unwrap();
        assert_eq!(f7.order(), 7);
        let f9b: FiniteField = "GF(3^2)".parse().unwrap();
        assert_eq!(f9b, f9);
        assert_eq!("GF(9)".parse::<FiniteField>().unwrap(), f9);
        assert!("GF(6)".parse::<FiniteField>().is_err());
    }
}
