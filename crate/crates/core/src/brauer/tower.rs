//! Symbol classes over the complete towers F_q((t1)) and F_q((t1))((t2)),
//! restricted to monomial entries `c * t1^a * t2^b`.
//!
//! The index is computed by peeling the outermost parameter: the residue
//! `gamma` there has some order `d`; adjoining `gamma^(1/n)` gives an
//! unramified extension of degree `d` whose residue field is again a tower
//! (a larger constant field and the inner parameter replaced by an `e`-th
//! root), and the index is `d` times the index of the unramified part over
//! that residue field.

use std::fmt;
use std::sync::Arc;

use crate::arith::{lcm, order_mod};
use crate::error::{Error, Result};
use crate::ff::{FFElem, FiniteField};
use crate::parse::{eval, parse_expr, parse_pair, split_top, ExprTarget};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerField {
    base: Arc<FiniteField>,
    params: Vec<String>,
}

impl TowerField {
    pub fn new(base: Arc<FiniteField>, params: Vec<String>) -> Result<Self> {
        if params.len() > 2 {
            return Err(Error::Invalid("towers have at most two parameters".into()));
        }
        if params.len() == 2 && params[0] == params[1] {
            return Err(Error::Invalid("parameter names must be distinct".into()));
        }
        if params.iter().any(|p| p == "g" || p.is_empty()) {
            return Err(Error::Invalid("invalid parameter name".into()));
        }
        Ok(TowerField { base, params })
    }

    /// `F_q((t1))((t2))` with the default parameter names.
    pub fn standard(base: Arc<FiniteField>, depth: usize) -> Self {
        let params = ["t1", "t2"][..depth]
            .iter()
            .map(|s| s.to_string())
            .collect();
        TowerField::new(base, params).unwrap()
    }

    pub fn base(&self) -> &Arc<FiniteField> {
        &self.base
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn depth(&self) -> usize {
        self.params.len()
    }

    /// The residue tower at the outermost parameter.
    pub fn residue_tower(&self) -> TowerField {
        TowerField {
            base: self.base.clone(),
            params: self.params[..self.params.len().saturating_sub(1)].to_vec(),
        }
    }
}

impl fmt::Display for TowerField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        for p in &self.params {
            write!(f, "(({p}))")?;
        }
        Ok(())
    }
}

/// `c * prod t_i^{exps_i}` with `c` a nonzero constant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialElem {
    pub c: FFElem,
    pub exps: Vec<i64>,
}

impl MonomialElem {
    pub fn new(c: FFElem, exps: Vec<i64>) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(MonomialElem { c, exps })
    }

    pub fn constant(c: FFElem, depth: usize) -> Self {
        MonomialElem {
            c,
            exps: vec![0; depth],
        }
    }

    pub fn param(k: &FiniteField, i: usize, depth: usize) -> Self {
        let mut exps = vec![0; depth];
        exps[i] = 1;
        MonomialElem { c: k.one(), exps }
    }

    pub fn mul(&self, other: &Self, k: &FiniteField) -> Self {
        MonomialElem {
            c: k.mul(self.c, other.c),
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, e: i64, k: &FiniteField) -> Self {
        MonomialElem {
            c: k.pow_signed(self.c, e as i128),
            exps: self.exps.iter().map(|a| a * e).collect(),
        }
    }

    pub fn fmt_with(&self, k: &FiniteField, params: &[String]) -> String {
        let mut parts = Vec::new();
        for (p, &e) in params.iter().zip(&self.exps) {
            match e {
                0 => {}
                1 => parts.push(p.clone()),
                _ => parts.push(format!("{p}^{e}")),
            }
        }
        if self.c != FFElem::ONE || parts.is_empty() {
            parts.insert(0, k.format(self.c));
        }
        parts.join("*")
    }

    pub fn parse(src: &str, field: &TowerField) -> Result<Self> {
        let e = parse_expr(src)?;
        let ctx = MonoCtx {
            field,
            val: MonoVal::Zero,
        };
        match eval(&e, &ctx)?.val {
            MonoVal::Mono(m) => Ok(m),
            MonoVal::Zero => Err(Error::ZeroElement),
            MonoVal::Bad => Err(Error::syntax(0, format!("{src:?} is not a monomial"))),
        }
    }
}

#[derive(Clone)]
enum MonoVal {
    Zero,
    Mono(MonomialElem),
    Bad,
}

#[derive(Clone)]
struct MonoCtx<'a> {
    field: &'a TowerField,
    val: MonoVal,
}

impl<'a> MonoCtx<'a> {
    fn wrap(&self, val: MonoVal) -> Self {
        MonoCtx {
            field: self.field,
            val,
        }
    }

    fn k(&self) -> &FiniteField {
        &self.field.base
    }
}

impl ExprTarget for MonoCtx<'_> {
    fn from_int(&self, v: i128) -> Self {
        let c = self
            .k()
            .from_int(v.rem_euclid(self.k().characteristic() as i128) as i64);
        self.wrap(if c.is_zero() {
            MonoVal::Zero
        } else {
            MonoVal::Mono(MonomialElem::constant(c, self.field.depth()))
        })
    }

    fn ident(&self, name: &str) -> Option<Self> {
        let depth = self.field.depth();
        if name == "g" {
            let g = self.k().generator();
            return Some(self.wrap(MonoVal::Mono(MonomialElem::constant(g, depth))));
        }
        let i = self.field.params.iter().position(|p| p == name)?;
        Some(self.wrap(MonoVal::Mono(MonomialElem::param(self.k(), i, depth))))
    }

    fn add(&self, o: &Self) -> Self {
        self.wrap(match (&self.val, &o.val) {
            (MonoVal::Zero, v) | (v, MonoVal::Zero) => v.clone(),
            (MonoVal::Mono(a), MonoVal::Mono(b)) if a.exps == b.exps => {
                let c = self.k().add(a.c, b.c);
                if c.is_zero() {
                    MonoVal::Zero
                } else {
                    MonoVal::Mono(MonomialElem {
                        c,
                        exps: a.exps.clone(),
                    })
                }
            }
            _ => MonoVal::Bad,
        })
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn mul(&self, o: &Self) -> Self {
        self.wrap(match (&self.val, &o.val) {
            (MonoVal::Bad, _) | (_, MonoVal::Bad) => MonoVal::Bad,
            (MonoVal::Zero, _) | (_, MonoVal::Zero) => MonoVal::Zero,
            (MonoVal::Mono(a), MonoVal::Mono(b)) => MonoVal::Mono(a.mul(b, self.k())),
        })
    }

    fn neg(&self) -> Self {
        self.wrap(match &self.val {
            MonoVal::Mono(m) => MonoVal::Mono(MonomialElem {
                c: self.k().neg(m.c),
                exps: m.exps.clone(),
            }),
            v => v.clone(),
        })
    }

    fn div(&self, o: &Self) -> Option<Self> {
        match (&self.val, &o.val) {
            (_, MonoVal::Zero) => None,
            (MonoVal::Mono(a), MonoVal::Mono(b)) => {
                let inv = b.pow(-1, self.k());
                Some(self.wrap(MonoVal::Mono(a.mul(&inv, self.k()))))
            }
            (v, _) => Some(self.wrap(v.clone())),
        }
    }
}

/// `(a1, t1) + (a2, t2) + r (t1, t2)`; for one-parameter towers only `a1`
/// is meaningful (`a2 = 1`, `r = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerNormalForm {
    pub a1: FFElem,
    pub a2: FFElem,
    pub r: u64,
}

/// One step of the recursive index computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelStep {
    pub param: String,
    /// Residue at the peeled parameter, rendered over the residue tower.
    pub gamma: String,
    /// Degree over F_q of the constant field before the step.
    pub constants: u64,
    pub d: u64,
    pub e: u64,
    pub f: u64,
}

impl fmt::Display for PeelStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "peel {}: gamma={} over GF(q^{}) d={} e={} f={}",
            self.param, self.gamma, self.constants, self.d, self.e, self.f
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerIndex {
    pub index: u64,
    pub trace: Vec<PeelStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerClass {
    field: TowerField,
    n: u64,
    symbols: Vec<(MonomialElem, MonomialElem)>,
}

impl TowerClass {
    pub fn new(
        field: TowerField,
        n: u64,
        symbols: Vec<(MonomialElem, MonomialElem)>,
    ) -> Result<Self> {
        let q = field.base.order();
        if n == 0 || !(q - 1).is_multiple_of(n) {
            return Err(Error::RootsOfUnityMissing { n, q });
        }
        let depth = field.depth();
        if symbols
            .iter()
            .any(|(x, y)| x.exps.len() != depth || y.exps.len() != depth)
        {
            return Err(Error::Invalid(
                "monomial depth does not match the tower".into(),
            ));
        }
        Ok(TowerClass { field, n, symbols })
    }

    pub fn trivial(field: TowerField, n: u64) -> Result<Self> {
        Self::new(field, n, Vec::new())
    }

    pub fn field(&self) -> &TowerField {
        &self.field
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn symbols(&self) -> &[(MonomialElem, MonomialElem)] {
        &self.symbols
    }

    pub fn tensor(&self, other: &TowerClass) -> Result<TowerClass> {
        if self.field != other.field || self.n != other.n {
            return Err(Error::Invalid(
                "tensor factors must share field and n".into(),
            ));
        }
        let mut symbols = self.symbols.clone();
        symbols.extend(other.symbols.iter().cloned());
        TowerClass::new(self.field.clone(), self.n, symbols)
    }

    /// Every symbol `(x, y)` replaced by `(y, x)`.
    pub fn flipped(&self) -> TowerClass {
        TowerClass {
            symbols: self
                .symbols
                .iter()
                .map(|(x, y)| (y.clone(), x.clone()))
                .collect(),
            ..self.clone()
        }
    }

    /// The same symbols over the tower with the two parameters interchanged,
    /// so that the former inner parameter is peeled first.
    pub fn swapped(&self) -> TowerClass {
        let swap = |m: &MonomialElem| MonomialElem {
            c: m.c,
            exps: m.exps.iter().rev().copied().collect(),
        };
        TowerClass {
            symbols: self
                .symbols
                .iter()
                .map(|(x, y)| (swap(x), swap(y)))
                .collect(),
            ..self.clone()
        }
    }

    /// Bilinear expansion into `(a1, t1) + (a2, t2) + r (t1, t2)`, dropping
    /// constant-constant symbols (split over a finite field) and using
    /// `(t, t) = (-1, t)`.
    pub fn canonicalize(&self) -> TowerNormalForm {
        let k = &self.field.base;
        let n = self.n as i64;
        let (mut a1, mut a2, mut r) = (k.one(), k.one(), 0i64);
        let exp = |m: &MonomialElem, i: usize| m.exps.get(i).copied().unwrap_or(0);
        let minus = k.neg(k.one());
        for (x, y) in &self.symbols {
            for (i, acc) in [(0usize, &mut a1), (1usize, &mut a2)] {
                let (a, b) = (exp(x, i), exp(y, i));
                let mut term = k.mul(
                    k.pow_signed(x.c, b as i128),
                    k.pow_signed(y.c, -(a as i128)),
                );
                if (a * b) % 2 != 0 {
                    term = k.mul(term, minus);
                }
                *acc = k.mul(*acc, term);
            }
            r += exp(x, 0) * exp(y, 1) - exp(x, 1) * exp(y, 0);
        }
        TowerNormalForm {
            a1,
            a2,
            r: r.rem_euclid(n) as u64,
        }
    }

    /// Rebuilds a class from a normal form.
    pub fn from_normal_form(field: TowerField, n: u64, nf: &TowerNormalForm) -> Result<TowerClass> {
        let depth = field.depth();
        let k = field.base.clone();
        let mut symbols = Vec::new();
        if depth >= 1 {
            symbols.push((
                MonomialElem::constant(nf.a1, depth),
                MonomialElem::param(&k, 0, depth),
            ));
        }
        if depth == 2 {
            symbols.push((
                MonomialElem::constant(nf.a2, depth),
                MonomialElem::param(&k, 1, depth),
            ));
            symbols.push((
                MonomialElem {
                    c: k.one(),
                    exps: vec![nf.r as i64, 0],
                },
                MonomialElem::param(&k, 1, depth),
            ));
        }
        TowerClass::new(field, n, symbols)
    }

    /// Residue at the outermost parameter, as a monomial over the residue
    /// tower, and its order modulo n-th powers.
    pub fn tower_residue(&self, i: usize) -> Result<(MonomialElem, u64)> {
        let depth = self.field.depth();
        if depth == 0 || i + 1 != depth {
            return Err(Error::PreconditionViolated(format!(
                "parameter {i} is not the outermost parameter"
            )));
        }
        let gamma = outer_residue(&self.field.base, &self.symbols, depth);
        let d = class_order(&self.field.base, &gamma, self.n, 1);
        Ok((gamma, d))
    }

    /// Index over a one-parameter tower: the order of the residue.
    pub fn complete_index(&self) -> Result<u64> {
        if self.field.depth() != 1 {
            return Err(Error::PreconditionViolated(
                "expected a one-parameter tower".into(),
            ));
        }
        Ok(self.tower_index().index)
    }

    pub fn tower_index(&self) -> TowerIndex {
        let mut trace = Vec::new();
        let index = peel(
            &self.field.base,
            &self.field.params,
            self.n,
            1,
            self.symbols.clone(),
            &mut trace,
        );
        TowerIndex { index, trace }
    }

    /// Index of `self + (E, sigma, t_outer)` where `E` is the unramified
    /// extension whose residue field adjoins an n-th root of `radicand`
    /// (a monomial over the residue tower); `self` must be unramified at the
    /// outer parameter. Returns `index(self ⊗ E) * [E : K]`.
    pub fn index_with_cyclic_twist(&self, radicand: &MonomialElem) -> Result<TowerIndex> {
        let depth = self.field.depth();
        if depth == 0 {
            return Err(Error::PreconditionViolated(
                "no parameter to twist by".into(),
            ));
        }
        if radicand.exps.len() != depth - 1 {
            return Err(Error::Invalid(
                "radicand must live on the residue tower".into(),
            ));
        }
        let (_, d0) = self.tower_residue(depth - 1)?;
        if d0 != 1 {
            return Err(Error::PreconditionViolated(format!(
                "class is ramified at {}",
                self.field.params[depth - 1]
            )));
        }
        let mut trace = Vec::new();
        let index = peel_with_gamma(
            &self.field.base,
            &self.field.params,
            self.n,
            1,
            self.symbols.clone(),
            radicand.clone(),
            &mut trace,
        );
        Ok(TowerIndex { index, trace })
    }

    /// Parses `"n; base=GF(q); params=t1,t2; (x, y); ..."`.
    pub fn parse(src: &str) -> Result<TowerClass> {
        let parts: Vec<&str> = split_top(src.trim(), ';')
            .into_iter()
            .map(str::trim)
            .collect();
        if parts.len() < 3 {
            return Err(Error::syntax(
                0,
                "expected n; base=GF(q); params=...; symbols",
            ));
        }
        let n = parts[0]
            .parse::<u64>()
            .map_err(|_| Error::syntax(0, format!("expected modulus, got {:?}", parts[0])))?;
        let base = parts[1]
            .strip_prefix("base")
            .map(str::trim_start)
            .and_then(|s| s.strip_prefix('='))
            .ok_or_else(|| Error::syntax(0, "expected base=GF(q)"))?;
        let base: FiniteField = base.trim().parse()?;
        let params = parts[2]
            .strip_prefix("params")
            .map(str::trim_start)
            .and_then(|s| s.strip_prefix('='))
            .ok_or_else(|| Error::syntax(0, "expected params=..."))?;
        let params: Vec<String> = params
            .split(',')
            .map(|p| p.trim().to_string())
            .filter(|p| !p.is_empty())
            .collect();
        let field = TowerField::new(Arc::new(base), params)?;
        let mut symbols = Vec::new();
        for part in &parts[3..] {
            if part.is_empty() {
                continue;
            }
            let (x, y) = parse_pair(part)?;
            symbols.push((
                MonomialElem::parse(x, &field)?,
                MonomialElem::parse(y, &field)?,
            ));
        }
        TowerClass::new(field, n, symbols)
    }
}

impl fmt::Display for TowerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = &self.field.base;
        write!(
            f,
            "{}; base={}; params={}",
            self.n,
            k,
            self.field.params.join(",")
        )?;
        for (x, y) in &self.symbols {
            write!(
                f,
                "; ({}, {})",
                x.fmt_with(k, &self.field.params),
                y.fmt_with(k, &self.field.params)
            )?;
        }
        Ok(())
    }
}

/// `prod (-1)^{ab} u_x^b / u_y^a` over the symbols, where `a`, `b` are the
/// outer exponents and `u` the remaining monomials.
fn outer_residue(
    k: &FiniteField,
    symbols: &[(MonomialElem, MonomialElem)],
    depth: usize,
) -> MonomialElem {
    let mut gamma = MonomialElem::constant(k.one(), depth - 1);
    let minus = k.neg(k.one());
    for (x, y) in symbols {
        let (a, b) = (x.exps[depth - 1], y.exps[depth - 1]);
        let ux = MonomialElem {
            c: x.c,
            exps: x.exps[..depth - 1].to_vec(),
        };
        let uy = MonomialElem {
            c: y.c,
            exps: y.exps[..depth - 1].to_vec(),
        };
        gamma = gamma.mul(&ux.pow(b, k), k).mul(&uy.pow(-a, k), k);
        if (a * b) % 2 != 0 {
            gamma.c = k.mul(gamma.c, minus);
        }
    }
    gamma
}

/// Order of a monomial in `L^* / L^{*n}` for `L = GF(q^ext)((s_1))...`,
/// which splits as constants times free parameter exponents.
fn class_order(k: &FiniteField, m: &MonomialElem, n: u64, ext: u64) -> u64 {
    let chi = k.kummer_character(m.c, n, ext).expect("n divides q - 1");
    m.exps.iter().fold(order_mod(chi, n), |acc, &e| {
        lcm(acc, order_mod(e.rem_euclid(n as i64) as u64, n))
    })
}

fn peel(
    k: &FiniteField,
    params: &[String],
    n: u64,
    ext: u64,
    symbols: Vec<(MonomialElem, MonomialElem)>,
    trace: &mut Vec<PeelStep>,
) -> u64 {
    let depth = params.len();
    if depth == 0 {
        return 1;
    }
    let gamma = outer_residue(k, &symbols, depth);
    peel_with_gamma(k, params, n, ext, symbols, gamma, trace)
}

fn peel_with_gamma(
    k: &FiniteField,
    params: &[String],
    n: u64,
    ext: u64,
    symbols: Vec<(MonomialElem, MonomialElem)>,
    gamma: MonomialElem,
    trace: &mut Vec<PeelStep>,
) -> u64 {
    let depth = params.len();
    let d = class_order(k, &gamma, n, ext);
    // ramification of the inner parameter in the radical extension
    let e = match gamma.exps.last() {
        Some(&r) => order_mod(r.rem_euclid(n as i64) as u64, n),
        None => 1,
    };
    let f = d / e;
    trace.push(PeelStep {
        param: params[depth - 1].clone(),
        gamma: gamma.fmt_with(k, &params[..depth - 1]),
        constants: ext,
        d,
        e,
        f,
    });
    // unramified part on the residue tower, with t_inner = s^e; the constant
    // relating t_inner to s^e cancels out of every later residue
    let reduced: Vec<(MonomialElem, MonomialElem)> = symbols
        .into_iter()
        .map(|(x, y)| {
            let cut = |m: MonomialElem| {
                let mut exps = m.exps[..depth - 1].to_vec();
                if let Some(last) = exps.last_mut() {
                    *last *= e as i64;
                }
                MonomialElem { c: m.c, exps }
            };
            (cut(x), cut(y))
        })
        .collect();
    d * peel(k, &params[..depth - 1], n, ext * f, reduced, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::ff_make;

    fn tc(src: &str) -> TowerClass {
        TowerClass::parse(src).unwrap()
    }

    #[test]
    fn canonical_forms() {
        let a = tc("4; base=GF(5); params=t1,t2; (3*t1, t1)");
        let nf = a.canonicalize();
        let k = a.field().base().clone();
        assert_eq!(nf.a1, k.neg(k.elem(3)));
        assert_eq!(nf.r, 0);
        let b = tc("4; base=GF(5); params=t1,t2");
        assert_eq!(
            b.canonicalize(),
            TowerNormalForm {
                a1: k.one(),
                a2: k.one(),
                r: 0
            }
        );
        let c = tc("4; base=GF(5); params=t1,t2; (t1, t2)");
        assert_eq!(
            c.canonicalize(),
            TowerNormalForm {
                a1: k.one(),
                a2: k.one(),
                r: 1
            }
        );
    }

    #[test]
    fn residues() {
        let a = tc("4; base=GF(5); params=t; (2, t)");
        let (g, d) = a.tower_residue(0).unwrap();
        assert_eq!(g.c, a.field().base().elem(2));
        assert_eq!(d, 4);
        let b = tc("4; base=GF(5); params=t1,t2; (t1, t2)");
        let (g, d) = b.tower_residue(1).unwrap();
        assert_eq!(g.exps, vec![1]);
        assert_eq!(d, 4);
        assert!(b.tower_residue(0).is_err());
        let c = tc("4; base=GF(5); params=t1,t2; (2, t1)");
        assert_eq!(c.tower_residue(1).unwrap().1, 1);
    }

    #[test]
    fn complete_index_examples() {
        assert_eq!(
            tc("4; base=GF(5); params=t; (2, t)")
                .complete_index()
                .unwrap(),
            4
        );
        assert_eq!(
            tc("4; base=GF(5); params=t; (4, t)")
                .complete_index()
                .unwrap(),
            2
        );
        assert_eq!(
            tc("4; base=GF(5); params=t; (1, t)")
                .complete_index()
                .unwrap(),
            1
        );
    }

    #[test]
    fn two_parameter_examples() {
        assert_eq!(
            tc("4; base=GF(5); params=t1,t2; (t1, t2)")
                .tower_index()
                .index,
            4
        );
        let a = tc("4; base=GF(5); params=t1,t2; (2, t1); (2, t2)");
        let idx = a.tower_index();
        assert_eq!(idx.index, 4);
        assert_eq!(idx.trace.len(), 2);
        assert_eq!(idx.trace[0].d, 4);
        assert_eq!(idx.trace[1].d, 1);
        assert_eq!(tc("4; base=GF(5); params=t1,t2").tower_index().index, 1);
    }

    #[test]
    fn cyclic_twist() {
        let k = ff_make(5, 1).unwrap();
        let field = TowerField::standard(k.clone(), 2);
        let trivial = TowerClass::trivial(field.clone(), 4).unwrap();
        let rad = MonomialElem::constant(k.elem(2), 1);
        assert_eq!(trivial.index_with_cyclic_twist(&rad).unwrap().index, 4);
        let a = tc("4; base=GF(5); params=t1,t2; (2, t1)");
        assert_eq!(a.index_with_cyclic_twist(&rad).unwrap().index, 4);
        let ram = tc("4; base=GF(5); params=t1,t2; (2, t2)");
        assert!(matches!(
            ram.index_with_cyclic_twist(&rad),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn text_round_trip() {
        let a = tc("6; base=GF(7); params=x,y; (3*x^2*y^-1, -y); (g, x*y)");
        assert_eq!(tc(&a.to_string()), a);
        assert!(TowerClass::parse("4; base=GF(5); params=t1; (t1 + 1, t1)").is_err());
        assert_eq!(
            TowerClass::parse("3; base=GF(5); params=t; (2, t)").unwrap_err(),
            Error::RootsOfUnityMissing { n: 3, q: 5 }
        );
    }
}
