//! The rational function field F_q(t): canonical fractions, places of the
//! projective line, valuations and residues.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::arith::{lcm, order_mod};
use crate::error::{Error, Result};
use crate::ff::{FFElem, FiniteField};
use crate::parse::{eval, parse_expr, ExprTarget};
use crate::poly::Poly;

/// `num / den` with `den` monic and coprime to `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

/// A closed point of the projective line: a monic irreducible polynomial or
/// the point at infinity (uniformizer `1/t`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    Finite(Poly),
    Infinity,
}

impl Place {
    /// Checks that `f` is monic and irreducible.
    pub fn finite(f: Poly) -> Result<Place> {
        if !f.is_monic() || !f.is_irreducible() {
            return Err(Error::Invalid(format!("{f} is not monic irreducible")));
        }
        Ok(Place::Finite(f))
    }

    /// The place `t - a`.
    pub fn linear(field: &Arc<FiniteField>, a: FFElem) -> Place {
        let f = Poly::new(field.clone(), vec![field.neg(a), FFElem::ONE]);
        Place::Finite(f)
    }

    /// Degree of the residue field over F_q.
    pub fn degree(&self) -> u32 {
        match self {
            Place::Finite(f) => f.degree().unwrap() as u32,
            Place::Infinity => 1,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    pub fn fmt_var(&self, var: &str) -> String {
        match self {
            Place::Finite(f) => format!("({})", f.fmt_var(var)),
            Place::Infinity => "inf".into(),
        }
    }

    pub fn parse(s: &str, field: &Arc<FiniteField>) -> Result<Place> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Place::Infinity);
        }
        let f = RatFunc::parse(s, field)?;
        if !f.den().is_one() {
            return Err(Error::Invalid(format!("place {s:?} is not a polynomial")));
        }
        Place::finite(f.num().clone())
    }
}

/// Finite places by (degree, coefficients from the top); infinity last.
impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Finite(a), Place::Finite(b)) => a.cmp(b),
            (Place::Finite(_), Place::Infinity) => Ordering::Less,
            (Place::Infinity, Place::Finite(_)) => Ordering::Greater,
            (Place::Infinity, Place::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("t"))
    }
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        let k = num.field().clone();
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: Poly::one(&k),
            });
        }
        let g = num.gcd(&den);
        let (num, den) = (num.div_exact(&g), den.div_exact(&g));
        let c = k.inv(den.lc()).unwrap();
        Ok(RatFunc {
            num: num.scale(c),
            den: den.scale(c),
        })
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        let one = Poly::one(p.field());
        RatFunc { num: p, den: one }
    }

    pub fn zero(field: &Arc<FiniteField>) -> RatFunc {
        RatFunc::from_poly(Poly::zero(field))
    }

    pub fn one(field: &Arc<FiniteField>) -> RatFunc {
        RatFunc::from_poly(Poly::one(field))
    }

    pub fn constant(field: &Arc<FiniteField>, c: FFElem) -> RatFunc {
        RatFunc::from_poly(Poly::constant(field, c))
    }

    pub fn from_int(field: &Arc<FiniteField>, n: i64) -> RatFunc {
        RatFunc::constant(field, field.from_int(n))
    }

    /// The variable `t`.
    pub fn t(field: &Arc<FiniteField>) -> RatFunc {
        RatFunc::from_poly(Poly::x(field))
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.num.field()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value if this is a constant function.
    pub fn as_constant(&self) -> Option<FFElem> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    /// `lc(num) / lc(den)`, the constant in the factorization.
    pub fn leading_constant(&self) -> Result<FFElem> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        Ok(self.num.lc())
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let m = e.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(m),
            den: base.den.pow(m),
        })
    }

    /// Substitutes `t := g`.
    pub fn compose(&self, g: &RatFunc) -> Result<RatFunc> {
        let horner = |p: &Poly| {
            let mut acc = RatFunc::zero(self.field());
            for &c in p.coeffs().iter().rev() {
                acc = &(&acc * g) + &RatFunc::constant(self.field(), c);
            }
            acc
        };
        horner(&self.num).div(&horner(&self.den))
    }

    /// Value at `t = a`, `None` at a pole.
    pub fn eval(&self, a: FFElem) -> Option<FFElem> {
        let k = self.field();
        k.div(self.num.eval(a), self.den.eval(a)).ok()
    }

    pub fn valuation(&self, v: &Place) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        Ok(match v {
            Place::Infinity => self.den.deg() - self.num.deg(),
            Place::Finite(f) => multiplicity(&self.num, f) - multiplicity(&self.den, f),
        })
    }

    /// The image of `self / pi^v(self)` in the residue field at `v`, where
    /// `pi` is the chosen uniformizer (`f` itself, or `1/t` at infinity). The
    /// result is a polynomial reduced modulo `f` (a constant at infinity).
    pub fn unit_residue(&self, v: &Place) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let k = self.field();
        Ok(match v {
            Place::Infinity => Poly::constant(k, self.num.lc()),
            Place::Finite(f) => {
                let num = strip(&self.num, f);
                let den = strip(&self.den, f);
                num.mul_mod(&den.inv_mod(f).unwrap(), f)
            }
        })
    }

    /// Image in the residue field at `v`, for a unit at `v`.
    pub fn residue_at(&self, v: &Place) -> Result<Poly> {
        if self.valuation(v)? != 0 {
            return Err(Error::NotAUnit {
                place: v.to_string(),
            });
        }
        self.unit_residue(v)
    }

    /// Finite places in the support of the divisor, in canonical order.
    pub fn finite_support(&self) -> Vec<Place> {
        let mut out: Vec<Place> = [&self.num, &self.den]
            .into_iter()
            .filter(|p| p.deg() > 0)
            .flat_map(|p| p.factor().unwrap().factors)
            .map(|(f, _)| Place::Finite(f))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Order of the class of `self` in `F_q(t)^* / (F_q(t)^*)^n`.
    ///
    /// `F_q(t)^*` is the product of `F_q^*` (the leading constant) with the free
    /// group on monic irreducibles, so the order is the lcm of the additive
    /// orders of the exponents mod n and the power-class order of the constant.
    pub fn class_order_global(&self, n: u64) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let k = self.field();
        if n == 0 || !(k.order() - 1).is_multiple_of(n) {
            return Err(Error::RootsOfUnityMissing { n, q: k.order() });
        }
        let mut order = k.power_class_order(self.leading_constant()?, n)?;
        for place in self.finite_support() {
            let e = self.valuation(&place)?;
            order = lcm(order, order_mod(e.rem_euclid(n as i64) as u64, n));
        }
        Ok(order)
    }

    pub fn parse(src: &str, field: &Arc<FiniteField>) -> Result<RatFunc> {
        Self::parse_in(src, field, "t")
    }

    /// Parses with `var` as the name of the variable.
    pub fn parse_in(src: &str, field: &Arc<FiniteField>, var: &str) -> Result<RatFunc> {
        let e = parse_expr(src)?;
        eval(
            &e,
            &RatCtx {
                proto: RatFunc::one(field),
                var,
            },
        )
        .map(|c| c.proto)
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.den.is_one() {
            return self.num.fmt_var(var);
        }
        format!("({})/({})", self.num.fmt_var(var), self.den.fmt_var(var))
    }
}

fn multiplicity(p: &Poly, f: &Poly) -> i64 {
    let mut m = 0;
    let mut cur = p.clone();
    loop {
        let (q, r) = cur.divrem(f).unwrap();
        if !r.is_zero() {
            return m;
        }
        cur = q;
        m += 1;
    }
}

fn strip(p: &Poly, f: &Poly) -> Poly {
    let mut cur = p.clone();
    loop {
        let (q, r) = cur.divrem(f).unwrap();
        if !r.is_zero() {
            return cur;
        }
        cur = q;
    }
}

#[derive(Clone)]
struct RatCtx<'a> {
    proto: RatFunc,
    var: &'a str,
}

impl<'a> RatCtx<'a> {
    fn wrap(&self, proto: RatFunc) -> Self {
        RatCtx {
            proto,
            var: self.var,
        }
    }
}

impl ExprTarget for RatCtx<'_> {
    fn from_int(&self, v: i128) -> Self {
        let k = self.proto.field();
        let c = v.rem_euclid(k.characteristic() as i128) as i64;
        self.wrap(RatFunc::from_int(k, c))
    }

    fn ident(&self, name: &str) -> Option<Self> {
        let k = self.proto.field();
        if name == self.var {
            Some(self.wrap(RatFunc::t(k)))
        } else if name == "g" {
            Some(self.wrap(RatFunc::constant(k, k.generator())))
        } else {
            None
        }
    }

    fn add(&self, o: &Self) -> Self {
        self.wrap(&self.proto + &o.proto)
    }

    fn sub(&self, o: &Self) -> Self {
        self.wrap(&self.proto - &o.proto)
    }

    fn mul(&self, o: &Self) -> Self {
        self.wrap(&self.proto * &o.proto)
    }

    fn neg(&self) -> Self {
        self.wrap(-&self.proto)
    }

    fn div(&self, o: &Self) -> Option<Self> {
        self.proto.div(&o.proto).ok().map(|r| self.wrap(r))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("t"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self)
    }
}

impl std::ops::Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).unwrap()
    }
}

impl std::ops::Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl std::ops::Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        // cross-cancel first to keep the gcd work small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero(self.field());
        }
        let num = &self.num.div_exact(&g1) * &rhs.num.div_exact(&g2);
        let den = &self.den.div_exact(&g2) * &rhs.den.div_exact(&g1);
        RatFunc::new(num, den).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::ff_make;

    fn rf(s: &str, k: &Arc<FiniteField>) -> RatFunc {
        RatFunc::parse(s, k).unwrap()
    }

    #[test]
    fn parse_examples() {
        let k3 = ff_make(3, 1).unwrap();
        let f = rf("t^2 + 1", &k3);
        assert_eq!(f.num(), &Poly::from_ints(&k3, &[1, 0, 1]));
        assert!(f.den().is_one());
        assert!(rf("(t-1)/(t-1)", &k3).is_one());
        assert_eq!(
            RatFunc::parse("1/(t-t)", &k3).unwrap_err(),
            Error::DivisionByZeroPolynomial
        );
        assert!(matches!(
            RatFunc::parse("t + s", &k3),
            Err(Error::Syntax { pos: 4, .. })
        ));
        assert_eq!(rf("t^-1", &k3), rf("1/t", &k3));
        assert_eq!(rf("5*t", &k3), rf("2*t", &k3));
    }

    #[test]
    fn print_parse_round_trip() {
        let k9 = ff_make(3, 2).unwrap();
        for s in ["g^3*t^2 + g*t + 1", "(t + g)/(t^2 + 2)", "g^5", "0"] {
            let f = rf(s, &k9);
            assert_eq!(rf(&f.to_string(), &k9), f, "{s}");
        }
        let k5 = ff_make(5, 1).unwrap();
        let f = rf("(3*t - 1)/(2*t^2 + 1)", &k5);
        assert!(f.den().is_monic());
        assert_eq!(rf(&f.to_string(), &k5), f);
    }

    #[test]
    fn valuation_examples() {
        let k = ff_make(5, 1).unwrap();
        let f = rf("t^2/(t-1)", &k);
        assert_eq!(f.valuation(&Place::linear(&k, k.zero())).unwrap(), 2);
        assert_eq!(f.valuation(&Place::Infinity).unwrap(), -1);
        assert_eq!(f.valuation(&Place::linear(&k, k.one())).unwrap(), -1);
        assert_eq!(
            RatFunc::zero(&k).valuation(&Place::Infinity),
            Err(Error::ZeroFunction)
        );
    }

    #[test]
    fn residue_examples() {
        let k3 = ff_make(3, 1).unwrap();
        let at0 = Place::linear(&k3, k3.zero());
        assert_eq!(
            rf("t-1", &k3).residue_at(&at0).unwrap().coeff(0),
            k3.elem(2)
        );
        assert_eq!(
            rf("(t+1)/t", &k3)
                .residue_at(&Place::Infinity)
                .unwrap()
                .coeff(0),
            k3.one()
        );
        assert!(matches!(
            rf("t", &k3).residue_at(&at0),
            Err(Error::NotAUnit { .. })
        ));
    }

    #[test]
    fn class_order_examples() {
        let k5 = ff_make(5, 1).unwrap();
        assert_eq!(rf("t+1", &k5).class_order_global(4).unwrap(), 4);
        assert_eq!(rf("t^2", &k5).class_order_global(2).unwrap(), 1);
        assert_eq!(rf("2*t", &k5).class_order_global(4).unwrap(), 4);
        assert_eq!(rf("2*t^2", &k5).class_order_global(4).unwrap(), 4);
        assert_eq!(rf("4*t^2", &k5).class_order_global(4).unwrap(), 2);
        assert_eq!(
            rf("t", &k5).class_order_global(3),
            Err(Error::RootsOfUnityMissing { n: 3, q: 5 })
        );
    }

    #[test]
    fn place_order() {
        let k = ff_make(3, 1).unwrap();
        let mut places = [
            Place::Infinity,
            Place::finite(Poly::from_ints(&k, &[1, 0, 1])).unwrap(),
            Place::linear(&k, k.elem(1)),
            Place::linear(&k, k.elem(0)),
        ];
        places.sort();
        let shown: Vec<String> = places.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["(t)", "(t + 2)", "(t^2 + 1)", "inf"]);
        assert!(Place::finite(Poly::from_ints(&k, &[-1, 0, 1])).is_err());
    }

    #[test]
    fn compose_substitution() {
        let k = ff_make(5, 1).unwrap();
        let f = rf("(t+1)/(t-2)", &k);
        let g = rf("t^2 - 1", &k);
        assert_eq!(f.compose(&g).unwrap(), rf("t^2/(t^2 - 3)", &k));
    }
}
