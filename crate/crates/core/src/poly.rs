//! Univariate polynomials over a finite field, with factorization by
//! squarefree decomposition, distinct-degree and equal-degree splitting.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ff::{FFElem, FiniteField};
use crate::rng::Lcg64;

#[derive(Clone)]
pub struct Poly {
    field: Arc<FiniteField>,
    /// Lowest degree first, no trailing zeros.
    coeffs: Vec<FFElem>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && *self.field == *other.field
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

/// Canonical order: by degree, then by coefficients from the top down.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A factorization `unit * prod f_i^{m_i}` with monic irreducible `f_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FFElem,
    pub factors: Vec<(Poly, u32)>,
}

impl Poly {
    pub fn new(field: Arc<FiniteField>, mut coeffs: Vec<FFElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: &Arc<FiniteField>) -> Self {
        Poly::new(field.clone(), Vec::new())
    }

    pub fn one(field: &Arc<FiniteField>) -> Self {
        Poly::constant(field, FFElem::ONE)
    }

    pub fn constant(field: &Arc<FiniteField>, c: FFElem) -> Self {
        Poly::new(field.clone(), vec![c])
    }

    /// The variable `t`.
    pub fn x(field: &Arc<FiniteField>) -> Self {
        Poly::monomial(field, FFElem::ONE, 1)
    }

    pub fn monomial(field: &Arc<FiniteField>, c: FFElem, deg: usize) -> Self {
        let mut coeffs = vec![FFElem::ZERO; deg + 1];
        coeffs[deg] = c;
        Poly::new(field.clone(), coeffs)
    }

    /// Builds from integer coefficients (lowest first) reduced into the prime field.
    pub fn from_ints(field: &Arc<FiniteField>, ints: &[i64]) -> Self {
        Poly::new(
            field.clone(),
            ints.iter().map(|&c| field.from_int(c)).collect(),
        )
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[FFElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FFElem {
        self.coeffs.get(i).copied().unwrap_or(FFElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FFElem::ONE
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree as a signed integer, -1 for zero.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn lc(&self) -> FFElem {
        self.coeffs.last().copied().unwrap_or(FFElem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == FFElem::ONE
    }

    pub fn scale(&self, c: FFElem) -> Poly {
        let k = &self.field;
        Poly::new(
            k.clone(),
            self.coeffs.iter().map(|&a| k.mul(a, c)).collect(),
        )
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.lc()).unwrap())
    }

    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![FFElem::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn eval(&self, x: FFElem) -> FFElem {
        let k = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FFElem::ZERO, |acc, &c| k.add(k.mul(acc, x), c))
    }

    pub fn derivative(&self) -> Poly {
        let k = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| k.mul(c, k.from_int((i as u64 % k.characteristic()) as i64)))
            .collect();
        Poly::new(k.clone(), coeffs)
    }

    /// Reverses the coefficient list of a polynomial viewed in degree `d`:
    /// returns `t^d f(1/t)`.
    pub fn reversed(&self, d: usize) -> Poly {
        assert!(self.deg() <= d as i64);
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(d + 1, FFElem::ZERO);
        coeffs.reverse();
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        let k = &self.field;
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(k), self.clone()));
        }
        let inv_lc = k.inv(d.lc()).unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![FFElem::ZERO; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = k.mul(r[i + dd], inv_lc);
            q[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &dj) in d.coeffs.iter().enumerate() {
                r[i + j] = k.sub(r[i + j], k.mul(c, dj));
            }
        }
        r.truncate(dd);
        Ok((Poly::new(k.clone(), q), Poly::new(k.clone(), r)))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.divrem(d)?.1)
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d).expect("division by zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).unwrap();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Inverse modulo `m`, when `gcd(self, m) = 1`.
    pub fn inv_mod(&self, m: &Poly) -> Result<Poly> {
        let k = &self.field;
        let (mut r0, mut r1) = (m.clone(), self.rem(m)?);
        let (mut s0, mut s1) = (Poly::zero(k), Poly::one(k));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = &s0 - &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.degree() != Some(0) {
            return Err(Error::Invalid("polynomial is not invertible modulo".into()));
        }
        s0.scale(k.inv(r0.lc()).unwrap()).rem(m)
    }

    pub fn mul_mod(&self, other: &Poly, m: &Poly) -> Poly {
        (self * other).rem(m).unwrap()
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn pow_mod(&self, mut e: u128, m: &Poly) -> Poly {
        let mut base = self.rem(m).unwrap();
        let mut acc = Poly::one(&self.field).rem(m).unwrap();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, m);
            }
        }
        acc
    }

    /// Substitutes `t := g`.
    pub fn compose(&self, g: &Poly) -> Poly {
        let mut acc = Poly::zero(&self.field);
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Poly::constant(&self.field, c);
        }
        acc
    }

    /// The norm `N(a)` of `a mod f` from `F_q[t]/(f)` down to `F_q`, for
    /// irreducible `f`, computed as `a^(1 + q + ... + q^(d-1))` by Frobenius
    /// iteration. Returns zero when `f | a`.
    pub fn norm_mod(&self, f: &Poly) -> FFElem {
        let q = self.field.order() as u128;
        let mut conj = self.rem(f).unwrap();
        if conj.is_zero() {
            return FFElem::ZERO;
        }
        let mut acc = conj.clone();
        for _ in 1..f.degree().unwrap() {
            conj = conj.pow_mod(q, f);
            acc = acc.mul_mod(&conj, f);
        }
        debug_assert!(acc.is_constant());
        acc.coeff(0)
    }

    fn pth_root(&self) -> Poly {
        let k = &self.field;
        let p = k.characteristic() as usize;
        let root_exp = (k.order() / k.characteristic()) as u128;
        let coeffs = self
            .coeffs
            .iter()
            .step_by(p)
            .map(|&c| k.pow(c, root_exp))
            .collect();
        Poly::new(k.clone(), coeffs)
    }

    /// Squarefree decomposition of a monic polynomial: pairs `(g, m)` with
    /// pairwise coprime squarefree `g` and `self = prod g^m`.
    pub fn squarefree(&self) -> Vec<(Poly, u32)> {
        let mut out = Vec::new();
        if self.deg() <= 0 {
            return out;
        }
        let f = self.monic();
        let mut c = f.gcd(&f.derivative());
        let mut w = f.div_exact(&c);
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let fac = w.div_exact(&y);
            if !fac.is_one() {
                out.push((fac, i));
            }
            w = y;
            c = c.div_exact(&w);
            i += 1;
        }
        if !c.is_one() {
            let p = self.field.characteristic() as u32;
            for (g, m) in c.pth_root().squarefree() {
                out.push((g, m * p));
            }
        }
        out
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    fn distinct_degree(&self) -> Vec<(Poly, usize)> {
        let k = &self.field;
        let q = k.order() as u128;
        let x = Poly::x(k);
        let mut out = Vec::new();
        let mut f = self.clone();
        let mut h = x.rem(&f).unwrap();
        let mut d = 0;
        while f.deg() >= 2 * (d as i64 + 1) {
            d += 1;
            h = h.pow_mod(q, &f);
            let g = (&h - &x).gcd(&f);
            if !g.is_one() {
                f = f.div_exact(&g);
                h = h.rem(&f).unwrap();
                out.push((g, d));
            }
        }
        if f.deg() > 0 {
            let d = f.degree().unwrap();
            out.push((f, d));
        }
        out
    }

    /// Splits a monic squarefree product of irreducibles of degree `d`.
    fn equal_degree(&self, d: usize, rng: &mut Lcg64, out: &mut Vec<Poly>) {
        let n = self.degree().unwrap();
        if n == d {
            out.push(self.clone());
            return;
        }
        let k = &self.field;
        let q = k.order();
        loop {
            let a = Poly::new(k.clone(), (0..n).map(|_| k.elem(rng.below(q))).collect());
            if a.deg() <= 0 {
                continue;
            }
            let b = if k.characteristic() == 2 {
                // absolute trace to GF(2)
                let steps = k.degree() as usize * d;
                let mut term = a.rem(self).unwrap();
                let mut acc = term.clone();
                for _ in 1..steps {
                    term = term.mul_mod(&term, self);
                    acc = &acc + &term;
                }
                acc
            } else {
                // a^((q^d - 1)/2) = (a^(1+q+...+q^(d-1)))^((q-1)/2)
                let mut conj = a.rem(self).unwrap();
                let mut norm = conj.clone();
                for _ in 1..d {
                    conj = conj.pow_mod(q as u128, self);
                    norm = norm.mul_mod(&conj, self);
                }
                &norm.pow_mod(((q - 1) / 2) as u128, self) - &Poly::one(k)
            };
            let g = b.gcd(self);
            if g.deg() > 0 && g.deg() < n as i64 {
                g.equal_degree(d, rng, out);
                self.div_exact(&g).equal_degree(d, rng, out);
                return;
            }
        }
    }

    /// Complete factorization into monic irreducibles, sorted canonically.
    pub fn factor(&self) -> Result<Factorization> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let unit = self.lc();
        let mut rng = Lcg64::new(0x5eed_f00d ^ self.deg() as u64);
        let mut factors = Vec::new();
        for (g, m) in self.squarefree() {
            for (h, d) in g.distinct_degree() {
                let mut parts = Vec::new();
                h.equal_degree(d, &mut rng, &mut parts);
                factors.extend(parts.into_iter().map(|p| (p, m)));
            }
        }
        factors.sort();
        Ok(Factorization { unit, factors })
    }

    pub fn is_irreducible(&self) -> bool {
        if self.deg() <= 0 {
            return false;
        }
        let f = self.monic();
        let sf = f.squarefree();
        if sf.len() != 1 || sf[0].1 != 1 {
            return false;
        }
        let dd = f.distinct_degree();
        dd.len() == 1 && dd[0].1 == f.degree().unwrap()
    }

    /// Writes the polynomial in the variable `var`.
    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let k = &self.field;
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let coef = k.format(c);
            terms.push(match (i, c == FFElem::ONE) {
                (0, _) => coef,
                (_, true) => mono,
                _ => format!("{coef}*{mono}"),
            });
        }
        terms.join(" + ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("t"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let k = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| k.add(self.coeff(i), rhs.coeff(i))).collect();
        Poly::new(k.clone(), coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let k = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| k.sub(self.coeff(i), rhs.coeff(i))).collect();
        Poly::new(k.clone(), coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let k = &self.field;
        Poly::new(k.clone(), self.coeffs.iter().map(|&c| k.neg(c)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let k = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(k);
        }
        let mut out = vec![FFElem::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = k.add(out[i + j], k.mul(a, b));
            }
        }
        Poly::new(k.clone(), out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
