//! Symbol algebras `(a, b)_n` over F_q(t) and their local behaviour at the
//! places of the projective line.
//!
//! The residue at a place `v` is the tame symbol
//! `(-1)^{v(a)v(b)} a^{v(b)} / b^{v(a)}` evaluated in the residue field
//! `F_q[t]/(f)`. Its local invariant is read off through the norm to F_q:
//! `u^((Q-1)/n) = N(u)^((q-1)/n) = zeta^inv` with `zeta = g^((q-1)/n)`, so the
//! invariant is `dlog(N(u)) mod n` and the invariants of a class sum to zero.

use std::fmt;
use std::sync::Arc;

use crate::arith::{divisors, lcm, order_mod, prime_power};
use crate::error::{Error, Result};
use crate::ff::FiniteField;
use crate::parse::{parse_pair, split_top};
use crate::poly::Poly;
use crate::ratfunc::{Place, RatFunc};

/// Whether the residue includes the factor `(-1)^{v(a)v(b)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SignConvention {
    #[default]
    Signed,
    Unsigned,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolAlg {
    pub a: RatFunc,
    pub b: RatFunc,
    pub n: u64,
}

impl SymbolAlg {
    pub fn new(a: RatFunc, b: RatFunc, n: u64) -> Result<SymbolAlg> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroFunction);
        }
        check_roots(a.field(), n)?;
        Ok(SymbolAlg { a, b, n })
    }
}

fn check_roots(k: &FiniteField, n: u64) -> Result<()> {
    if n == 0 || !(k.order() - 1).is_multiple_of(n) {
        return Err(Error::RootsOfUnityMissing { n, q: k.order() });
    }
    Ok(())
}

/// Tame symbol of `(a, b)` at `v`, as an element of `F_q[t]/(f)`.
pub fn tame_symbol(a: &RatFunc, b: &RatFunc, v: &Place, sign: SignConvention) -> Result<Poly> {
    let k = a.field();
    let va = a.valuation(v)?;
    let vb = b.valuation(v)?;
    let modulus = match v {
        Place::Finite(f) => f.clone(),
        Place::Infinity => Poly::x(k),
    };
    let ua = a.unit_residue(v)?;
    let ub = b.unit_residue(v)?;
    let pow = |u: &Poly, e: i64| -> Poly {
        let base = if e < 0 {
            u.inv_mod(&modulus).unwrap()
        } else {
            u.clone()
        };
        base.pow_mod(e.unsigned_abs() as u128, &modulus)
    };
    let mut out = pow(&ua, vb).mul_mod(&pow(&ub, -va), &modulus);
    if sign == SignConvention::Signed && (va * vb) % 2 != 0 {
        out = (-&out).rem(&modulus).unwrap();
    }
    Ok(out)
}

/// Residue of a single symbol algebra.
pub fn residue_symbol(s: &SymbolAlg, v: &Place) -> Result<Poly> {
    tame_symbol(&s.a, &s.b, v, SignConvention::Signed)
}

/// Per-place data of a class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalDatum {
    pub place: Place,
    /// Combined residue, reduced modulo the place.
    pub residue: Poly,
    pub invariant: u64,
    pub index: u64,
}

/// A formal sum of symbols `(a_i, b_i)_n` over F_q(t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerClassGlobal {
    field: Arc<FiniteField>,
    n: u64,
    symbols: Vec<SymbolAlg>,
    sign: SignConvention,
}

impl BrauerClassGlobal {
    pub fn new(field: Arc<FiniteField>, n: u64, symbols: Vec<SymbolAlg>) -> Result<Self> {
        check_roots(&field, n)?;
        if symbols.iter().any(|s| s.n != n) {
            return Err(Error::Invalid("all symbols must share the same n".into()));
        }
        Ok(BrauerClassGlobal {
            field,
            n,
            symbols,
            sign: SignConvention::Signed,
        })
    }

    pub fn trivial(field: Arc<FiniteField>, n: u64) -> Result<Self> {
        Self::new(field, n, Vec::new())
    }

    /// Builds from pairs of functions.
    pub fn from_pairs(
        field: Arc<FiniteField>,
        n: u64,
        pairs: Vec<(RatFunc, RatFunc)>,
    ) -> Result<Self> {
        let symbols = pairs
            .into_iter()
            .map(|(a, b)| SymbolAlg::new(a, b, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, n, symbols)
    }

    pub fn with_sign(mut self, sign: SignConvention) -> Self {
        self.sign = sign;
        self
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn symbols(&self) -> &[SymbolAlg] {
        &self.symbols
    }

    pub fn tensor(&self, other: &BrauerClassGlobal) -> Result<BrauerClassGlobal> {
        if self.n != other.n || self.field != other.field {
            return Err(Error::Invalid(
                "tensor factors must share field and n".into(),
            ));
        }
        let mut symbols = self.symbols.clone();
        symbols.extend(other.symbols.iter().cloned());
        Ok(BrauerClassGlobal {
            symbols,
            ..self.clone()
        })
    }

    /// The class with every symbol flipped, `(b, a)`.
    pub fn flipped(&self) -> BrauerClassGlobal {
        let symbols = self
            .symbols
            .iter()
            .map(|s| SymbolAlg {
                a: s.b.clone(),
                b: s.a.clone(),
                n: s.n,
            })
            .collect();
        BrauerClassGlobal {
            symbols,
            ..self.clone()
        }
    }

    /// Every place where some entry has a zero or pole, plus infinity, in
    /// canonical order. Residues vanish outside this set.
    pub fn candidate_places(&self) -> Vec<Place> {
        let mut places: Vec<Place> = self
            .symbols
            .iter()
            .flat_map(|s| {
                let mut v = s.a.finite_support();
                v.extend(s.b.finite_support());
                v
            })
            .collect();
        places.push(Place::Infinity);
        places.sort();
        places.dedup();
        places
    }

    /// Combined residue at `v`.
    pub fn residue(&self, v: &Place) -> Result<Poly> {
        let modulus = match v {
            Place::Finite(f) => f.clone(),
            Place::Infinity => Poly::x(&self.field),
        };
        let mut acc = Poly::one(&self.field).rem(&modulus)?;
        for s in &self.symbols {
            acc = acc.mul_mod(&tame_symbol(&s.a, &s.b, v, self.sign)?, &modulus);
        }
        Ok(acc)
    }

    pub fn local_invariant(&self, v: &Place) -> Result<u64> {
        let r = self.residue(v)?;
        let norm = match v {
            Place::Finite(f) => r.norm_mod(f),
            Place::Infinity => r.coeff(0),
        };
        Ok(self.field.dlog(norm)? % self.n)
    }

    pub fn local_index(&self, v: &Place) -> Result<u64> {
        Ok(order_mod(self.local_invariant(v)?, self.n))
    }

    pub fn local_datum(&self, v: &Place) -> Result<LocalDatum> {
        let invariant = self.local_invariant(v)?;
        Ok(LocalDatum {
            place: v.clone(),
            residue: self.residue(v)?,
            invariant,
            index: order_mod(invariant, self.n),
        })
    }

    /// Local data at every candidate place.
    pub fn local_data(&self) -> Result<Vec<LocalDatum>> {
        self.candidate_places()
            .iter()
            .map(|v| self.local_datum(v))
            .collect()
    }

    /// Places with nontrivial residue class, with that residue.
    pub fn ramification_divisor(&self) -> Result<Vec<(Place, Poly)>> {
        Ok(self
            .local_data()?
            .into_iter()
            .filter(|d| d.invariant != 0)
            .map(|d| (d.place, d.residue))
            .collect())
    }

    pub fn global_index(&self) -> Result<u64> {
        Ok(self
            .local_data()?
            .iter()
            .fold(1, |acc, d| lcm(acc, d.index)))
    }

    /// Local index from the order of the residue in `k_v^* / k_v^{*n}`,
    /// computed by powering in `F_q[t]/(f)` without discrete logarithms: the
    /// least `d | n` with `u^(d (Q-1)/n) = 1`.
    pub fn local_index_by_residue_order(&self, v: &Place) -> Result<u64> {
        let r = self.residue(v)?;
        let (modulus, deg) = match v {
            Place::Finite(f) => (f.clone(), f.degree().unwrap() as u32),
            Place::Infinity => (Poly::x(&self.field), 1),
        };
        let q = self.field.order() as u128;
        let exp = q
            .checked_pow(deg)
            .map(|big| (big - 1) / self.n as u128)
            .ok_or(Error::BoundExceeded {
                what: "residue field order",
                value: u64::MAX,
                bound: u64::MAX,
            })?;
        let base = r.pow_mod(exp, &modulus);
        for d in divisors(self.n) {
            if base.pow_mod(d as u128, &modulus).is_one() {
                return Ok(d);
            }
        }
        unreachable!("u^(Q-1) = 1 in the residue field")
    }

    /// Global index via [`Self::local_index_by_residue_order`].
    pub fn global_index_by_residue_order(&self) -> Result<u64> {
        let mut acc = 1;
        for v in self.candidate_places() {
            acc = lcm(acc, self.local_index_by_residue_order(&v)?);
        }
        Ok(acc)
    }

    /// Whether the local invariants sum to zero in Z/n.
    pub fn reciprocity_check(&self) -> Result<bool> {
        let mut sum = 0u64;
        for d in self.local_data()? {
            sum = (sum + d.invariant) % self.n;
        }
        Ok(sum == 0)
    }

    /// First place in canonical order whose local index equals the global
    /// index; infinity for the trivial class.
    pub fn hasse_witness(&self) -> Result<Place> {
        if prime_power(self.n).is_none() && self.n != 1 {
            return Err(Error::NotPrimePower(self.n));
        }
        let data = self.local_data()?;
        let global = data.iter().fold(1, |acc, d| lcm(acc, d.index));
        if global == 1 {
            return Ok(Place::Infinity);
        }
        data.into_iter()
            .find(|d| d.index == global)
            .map(|d| d.place)
            .ok_or_else(|| Error::Invalid("no place attains the global index".into()))
    }

    /// Parses `"n; (a1, b1); (a2, b2); ..."`.
    pub fn parse(src: &str, field: &Arc<FiniteField>) -> Result<BrauerClassGlobal> {
        Self::parse_in(src, field, "t")
    }

    pub fn parse_in(src: &str, field: &Arc<FiniteField>, var: &str) -> Result<BrauerClassGlobal> {
        let mut parts = split_top(src.trim(), ';').into_iter();
        let head = parts.next().unwrap_or("").trim();
        let n = head
            .parse::<u64>()
            .map_err(|_| Error::syntax(0, format!("expected modulus, got {head:?}")))?;
        check_roots(field, n)?;
        let mut pairs = Vec::new();
        for part in parts {
            if part.trim().is_empty() {
                continue;
            }
            let (a, b) = parse_pair(part)?;
            pairs.push((
                RatFunc::parse_in(a, field, var)?,
                RatFunc::parse_in(b, field, var)?,
            ));
        }
        Self::from_pairs(field.clone(), n, pairs)
    }

    pub fn fmt_var(&self, var: &str) -> String {
        let mut out = self.n.to_string();
        for s in &self.symbols {
            out.push_str(&format!("; ({}, {})", s.a.fmt_var(var), s.b.fmt_var(var)));
        }
        out
    }
}

impl fmt::Display for BrauerClassGlobal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("t"))
    }
}

/// Renders a residue-field element: a field element for degree-one places,
/// otherwise a polynomial modulo the place.
pub fn format_residue(field: &FiniteField, r: &Poly, v: &Place) -> String {
    if v.degree() == 1 {
        field.format(r.coeff(0))
    } else {
        r.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::ff_make;

    fn class(src: &str, p: u64, e: u32) -> BrauerClassGlobal {
        BrauerClassGlobal::parse(src, &ff_make(p, e).unwrap()).unwrap()
    }

    #[test]
    fn residue_examples() {
        let k3 = ff_make(3, 1).unwrap();
        let a = class("2; (t, t-1)", 3, 1);
        let at0 = Place::linear(&k3, k3.zero());
        let at1 = Place::linear(&k3, k3.one());
        assert_eq!(a.residue(&at0).unwrap().coeff(0), k3.elem(2));
        assert_eq!(a.residue(&at1).unwrap().coeff(0), k3.elem(1));
        let ram: Vec<Place> = a
            .ramification_divisor()
            .unwrap()
            .into_iter()
            .map(|x| x.0)
            .collect();
        assert_eq!(ram, vec![at0.clone(), Place::Infinity]);
        assert_eq!(a.local_invariant(&at0).unwrap(), 1);
        assert_eq!(a.global_index().unwrap(), 2);
        assert!(a.reciprocity_check().unwrap());
        assert_eq!(a.hasse_witness().unwrap(), at0);
        // the unsigned residue breaks reciprocity here
        let u = a.clone().with_sign(SignConvention::Unsigned);
        assert!(!u.reciprocity_check().unwrap());
    }

    #[test]
    fn invariants_over_f5() {
        let k5 = ff_make(5, 1).unwrap();
        let a = class("4; (t, 2)", 5, 1);
        let at0 = Place::linear(&k5, k5.zero());
        assert_eq!(a.residue(&at0).unwrap().coeff(0), k5.elem(3));
        assert_eq!(a.local_invariant(&at0).unwrap(), 3);
        assert_eq!(a.residue(&Place::Infinity).unwrap().coeff(0), k5.elem(2));
        let ram: Vec<Place> = a
            .ramification_divisor()
            .unwrap()
            .into_iter()
            .map(|x| x.0)
            .collect();
        assert_eq!(ram, vec![at0.clone(), Place::Infinity]);
        assert_eq!(a.hasse_witness().unwrap(), at0);
        let b = class("4; (t, 2); (t-1, 4)", 5, 1);
        assert_eq!(b.global_index().unwrap(), 4);
        assert!(b.reciprocity_check().unwrap());
    }

    #[test]
    fn trivial_and_errors() {
        let k5 = ff_make(5, 1).unwrap();
        let t = BrauerClassGlobal::trivial(k5.clone(), 4).unwrap();
        assert_eq!(t.global_index().unwrap(), 1);
        assert!(t.ramification_divisor().unwrap().is_empty());
        assert_eq!(t.hasse_witness().unwrap(), Place::Infinity);
        assert_eq!(
            BrauerClassGlobal::parse("3; (t, 2)", &k5).unwrap_err(),
            Error::RootsOfUnityMissing { n: 3, q: 5 }
        );
        let k7 = ff_make(7, 1).unwrap();
        let c = BrauerClassGlobal::parse("6; (t, 3)", &k7).unwrap();
        assert_eq!(c.hasse_witness(), Err(Error::NotPrimePower(6)));
    }

    #[test]
    fn degree_two_place_uses_norm() {
        // (f, 2)_4 over F_5 with f = t^2 + 2 irreducible
        let a = class("4; (t^2 + 2, 2)", 5, 1);
        let k = a.field().clone();
        let f = Place::finite(Poly::from_ints(&k, &[2, 0, 1])).unwrap();
        assert_eq!(a.local_invariant(&f).unwrap(), 2);
        assert_eq!(a.local_invariant(&Place::Infinity).unwrap(), 2);
        assert!(a.reciprocity_check().unwrap());
        assert_eq!(
            a.local_index(&f).unwrap(),
            a.local_index_by_residue_order(&f).unwrap()
        );
    }

    #[test]
    fn round_trip_text() {
        let a = class("4; (t^2 + 2, 2); ((t+1)/(t-1), 3*t)", 5, 1);
        let b = class(&a.to_string(), 5, 1);
        assert_eq!(a, b);
    }
}
