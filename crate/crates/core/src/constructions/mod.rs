//! Explicit division algebras with abelian maximal subfields
//! `C_l1 x C_l2 x C_l3 x C_l4`, together with checkable index certificates.
//!
//! `Thm45`: `(t, pi - lambda t)_{l1 l2} ⊗ (t + 1, pi)_{l3 l4}` over
//! `K(t)`, `K = F_q((pi))`.
//!
//! `Thm42`: `(s/(s-t), (s-t^2)/(s-A t^2))_{n1 n2} ⊗
//! (s/(s-t^2), (s-lambda t^2)/(s-t^2))_{n3 n4}` over the fraction field of
//! `F_q[[s, t]]`, `A = a^{n1 n2}`. The certificate works after `s = t^2 x`.

pub mod certificate;
pub mod param;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::ff::{FFElem, FiniteField};
use crate::groups::AbelianGroup;
use crate::ratfunc::{Place, RatFunc};

pub use certificate::{verify_certificate, CertSymbol, DivisionCertificate, Step, VerifiedIndex};
pub use param::ParamRatio;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionKind {
    Thm45,
    Thm42,
}

impl ConstructionKind {
    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::Thm45 => "thm45",
            ConstructionKind::Thm42 => "thm42",
        }
    }
}

impl FromStr for ConstructionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "thm45" | "4.5" => Ok(ConstructionKind::Thm45),
            "thm42" | "4.2" => Ok(ConstructionKind::Thm42),
            _ => Err(Error::syntax(0, format!("unknown construction {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub orders: [u64; 4],
    pub field: Arc<FiniteField>,
    pub lambda: FFElem,
    /// Only used by `Thm42`.
    pub a: FFElem,
}

impl ConstructionSpec {
    /// Fills in `lambda` (the generator) and `a` (the least unit with
    /// `a^(n1 n2) != 1`) when absent, then checks every condition.
    pub fn new(
        kind: ConstructionKind,
        orders: [u64; 4],
        field: Arc<FiniteField>,
        lambda: Option<FFElem>,
        a: Option<FFElem>,
    ) -> Result<Self> {
        let lambda = lambda.unwrap_or_else(|| field.generator());
        let first = orders[0].max(1) * orders[1].max(1);
        let a = match a {
            Some(a) => a,
            None => field
                .units()
                .find(|&u| field.pow(u, first as u128) != field.one())
                .unwrap_or(field.one()),
        };
        let spec = ConstructionSpec::unchecked(kind, orders, field, lambda, a);
        spec.check()?;
        Ok(spec)
    }

    pub fn unchecked(
        kind: ConstructionKind,
        orders: [u64; 4],
        field: Arc<FiniteField>,
        lambda: FFElem,
        a: FFElem,
    ) -> Self {
        ConstructionSpec {
            kind,
            orders,
            field,
            lambda,
            a,
        }
    }

    pub fn degree(&self) -> u64 {
        self.orders.iter().product()
    }

    /// Degrees of the two tensor factors.
    pub fn factor_degrees(&self) -> (u64, u64) {
        let [a, b, c, d] = self.orders;
        (a * b, c * d)
    }

    /// `a^(n1 n2)`.
    pub fn big_a(&self) -> FFElem {
        self.field.pow(self.a, self.factor_degrees().0 as u128)
    }

    pub fn check(&self) -> Result<()> {
        let k = &self.field;
        if self.orders.contains(&0) {
            return Err(Error::PreconditionViolated(
                "cyclic orders must be positive".into(),
            ));
        }
        let n = self.degree();
        if !(k.order() - 1).is_multiple_of(n) {
            return Err(Error::PreconditionViolated(format!(
                "{n} does not divide {} - 1",
                k.order()
            )));
        }
        if self.lambda.is_zero() {
            return Err(Error::OrderConditionFailed("lambda must be a unit".into()));
        }
        let (d1, d2) = self.factor_degrees();
        match self.kind {
            ConstructionKind::Thm45 => {
                let r = k.root_degree(self.lambda, d1)?;
                if r != d1 {
                    return Err(Error::OrderConditionFailed(format!(
                        "[k(lambda^(1/{d1})) : k] = {r}, need {d1}"
                    )));
                }
            }
            ConstructionKind::Thm42 => {
                let o = k.power_class_order(self.lambda, d2)?;
                if o != d2 {
                    return Err(Error::OrderConditionFailed(format!(
                        "lambda has order {o} in k^*/k^*{d2}, need {d2}"
                    )));
                }
                if self.a.is_zero() || self.big_a() == k.one() {
                    return Err(Error::OrderConditionFailed(format!(
                        "a^{d1} must be a unit different from 1"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Smallest `q` for which the construction has valid parameters.
pub fn smallest_field(kind: ConstructionKind, orders: [u64; 4]) -> Result<Arc<FiniteField>> {
    let n: u64 = orders.iter().product();
    let first = orders[0] * orders[1];
    for q in 2u64..=1 << 16 {
        if prime_power(q).is_none() || (q - 1) % n != 0 {
            continue;
        }
        if kind == ConstructionKind::Thm42 && first.is_multiple_of(q - 1) {
            continue;
        }
        return Ok(Arc::new(FiniteField::of_order(q)?));
    }
    Err(Error::BoundExceeded {
        what: "field order",
        value: n + 1,
        bound: 1 << 16,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedSymbol {
    pub n: u64,
    pub a: String,
    pub b: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub base: String,
    pub symbols: Vec<PresentedSymbol>,
    /// Primitive n-th roots of unity used in the relations.
    pub zetas: Vec<String>,
}

impl AlgebraPresentation {
    pub fn degree(&self) -> u64 {
        self.symbols.iter().map(|s| s.n).product()
    }

    pub fn relations(&self) -> Vec<String> {
        self.symbols
            .iter()
            .zip(&self.zetas)
            .enumerate()
            .map(|(i, (s, z))| {
                let i = i + 1;
                format!(
                    "x{i}^{n} = {a}, y{i}^{n} = {b}, x{i}*y{i} = {z}*y{i}*x{i}",
                    n = s.n,
                    a = s.a,
                    b = s.b
                )
            })
            .collect()
    }
}

impl fmt::Display for AlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .symbols
            .iter()
            .map(|s| format!("({}, {})_{}", s.a, s.b, s.n))
            .collect();
        write!(f, "{} over {}", parts.join(" ⊗ "), self.base)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalGenerator {
    pub name: String,
    pub degree: u64,
    pub radicand: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubfieldPresentation {
    pub generators: Vec<RadicalGenerator>,
    pub galois_group: AbelianGroup,
}

impl SubfieldPresentation {
    fn new(gens: Vec<(u64, String)>) -> Result<Self> {
        let generators: Vec<RadicalGenerator> = gens
            .into_iter()
            .filter(|(d, _)| *d > 1)
            .enumerate()
            .map(|(i, (degree, radicand))| RadicalGenerator {
                name: format!("u{}", i + 1),
                degree,
                radicand,
            })
            .collect();
        let degrees: Vec<u64> = generators.iter().map(|g| g.degree).collect();
        Ok(SubfieldPresentation {
            galois_group: AbelianGroup::from_cyclic_orders(&degrees)?,
            generators,
        })
    }

    pub fn degree(&self) -> u64 {
        self.generators.iter().map(|g| g.degree).product()
    }
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub spec: ConstructionSpec,
    pub algebra: AlgebraPresentation,
    pub subfield: SubfieldPresentation,
    pub certificate: DivisionCertificate,
}

impl Construction {
    /// The subfield's Galois group is the requested group and its degree
    /// matches the algebra's.
    pub fn check_structure(&self) -> Result<bool> {
        let g = AbelianGroup::from_cyclic_orders(&self.spec.orders)?;
        Ok(self.subfield.galois_group == g
            && self.subfield.degree() == self.algebra.degree()
            && self.algebra.degree() == self.spec.degree())
    }
}

fn zeta_text(k: &FiniteField, n: u64) -> String {
    k.root_of_unity(n)
        .map(|z| k.format(z))
        .unwrap_or_else(|_| "zeta".into())
}

fn coef(k: &FiniteField, c: FFElem) -> String {
    let s = k.format(c);
    if s.contains('^') {
        format!("({s})")
    } else {
        s
    }
}

pub fn build_thm45(spec: &ConstructionSpec) -> Result<Construction> {
    if spec.kind != ConstructionKind::Thm45 {
        return Err(Error::PreconditionViolated("expected a thm45 spec".into()));
    }
    spec.check()?;
    build_thm45_unchecked(spec)
}

pub fn build_thm42(spec: &ConstructionSpec) -> Result<Construction> {
    if spec.kind != ConstructionKind::Thm42 {
        return Err(Error::PreconditionViolated("expected a thm42 spec".into()));
    }
    spec.check()?;
    build_thm42_unchecked(spec)
}

pub fn build(spec: &ConstructionSpec) -> Result<Construction> {
    match spec.kind {
        ConstructionKind::Thm45 => build_thm45(spec),
        ConstructionKind::Thm42 => build_thm42(spec),
    }
}

/// Builds without checking the order conditions (the certificate may then
/// fail to verify).
pub fn build_unchecked(spec: &ConstructionSpec) -> Result<Construction> {
    match spec.kind {
        ConstructionKind::Thm45 => build_thm45_unchecked(spec),
        ConstructionKind::Thm42 => build_thm42_unchecked(spec),
    }
}

fn build_thm45_unchecked(spec: &ConstructionSpec) -> Result<Construction> {
    let k = &spec.field;
    let [l1, l2, l3, l4] = spec.orders;
    let (n1, m) = spec.factor_degrees();
    let lam = coef(k, spec.lambda);
    let second = format!("pi - {lam}*t");
    let algebra = AlgebraPresentation {
        base: format!("K(t), K = {k}((pi))"),
        symbols: vec![
            PresentedSymbol {
                n: n1,
                a: "t".into(),
                b: second.clone(),
            },
            PresentedSymbol {
                n: m,
                a: "t + 1".into(),
                b: "pi".into(),
            },
        ],
        zetas: vec![zeta_text(k, n1), zeta_text(k, m)],
    };
    let subfield = SubfieldPresentation::new(vec![
        (l1, "t".into()),
        (l2, second.clone()),
        (l3, "t + 1".into()),
        (l4, "pi".into()),
    ])?;
    let el = |s: &str| ParamRatio::parse(s, k, "t", "pi");
    let (t, w, t1, pi) = (el("t")?, el(&second)?, el("t + 1")?, el("pi")?);
    let subst = RatFunc::parse_in(&format!("s^{m} - 1"), k, "s")?;
    let reduced = (t.residue()?.compose(&subst)?, w.residue()?.compose(&subst)?);
    let certificate = DivisionCertificate {
        field: k.clone(),
        kind: "thm45".into(),
        residue_var: "t".into(),
        param_var: "pi".into(),
        algebra: vec![
            CertSymbol {
                n: n1,
                a: t.clone(),
                b: w.clone(),
            },
            CertSymbol {
                n: m,
                a: t1.clone(),
                b: pi.clone(),
            },
        ],
        steps: vec![
            Step::Unit {
                elem: t.clone(),
                valuation: 0,
            },
            Step::Unit {
                elem: w.clone(),
                valuation: 0,
            },
            Step::Unit {
                elem: t1.clone(),
                valuation: 0,
            },
            Step::Unit {
                elem: pi.clone(),
                valuation: 1,
            },
            Step::Degree {
                elem: t1.clone(),
                n: m,
                order: m,
            },
            Step::Twist {
                d: m,
                unit: t1.clone(),
                param: pi,
            },
            Step::Reduce {
                var: "s".into(),
                subst,
                radicand: t1,
                n: m,
            },
            Step::Base {
                n: n1,
                a: t,
                b: w,
                reduced,
                witness: Place::linear(k, k.one()),
                expected: n1,
            },
        ],
    };
    Ok(Construction {
        spec: spec.clone(),
        algebra,
        subfield,
        certificate,
    })
}

fn build_thm42_unchecked(spec: &ConstructionSpec) -> Result<Construction> {
    let k = &spec.field;
    let [o1, o2, o3, o4] = spec.orders;
    let (d1, d2) = spec.factor_degrees();
    let big_a = coef(k, spec.big_a());
    let lam = coef(k, spec.lambda);
    let p1a = "s/(s - t)".to_string();
    let p1b = format!("(s - t^2)/(s - {big_a}*t^2)");
    let p2a = "s/(s - t^2)".to_string();
    let p2b = format!("(s - {lam}*t^2)/(s - t^2)");
    let algebra = AlgebraPresentation {
        base: format!("Frac({k}[[s, t]])"),
        symbols: vec![
            PresentedSymbol {
                n: d1,
                a: p1a.clone(),
                b: p1b.clone(),
            },
            PresentedSymbol {
                n: d2,
                a: p2a.clone(),
                b: p2b.clone(),
            },
        ],
        zetas: vec![zeta_text(k, d1), zeta_text(k, d2)],
    };
    let subfield = SubfieldPresentation::new(vec![(o2, p1a), (o1, p1b), (o4, p2a), (o3, p2b)])?;
    let el = |s: &str| ParamRatio::parse(s, k, "x", "t");
    let par = el("t*x/(t*x - 1)")?;
    let u = el(&format!("(x - 1)/(x - {big_a})"))?;
    let b1 = el("x/(x - 1)")?;
    let b2 = el(&format!("(x - {lam})/(x - 1)"))?;
    let subst = RatFunc::parse_in(&format!("({big_a}*y^{d1} - 1)/(y^{d1} - 1)"), k, "y")?;
    let one = RatFunc::one(k);
    let reduced = (
        b1.residue()?.compose(&subst).unwrap_or(one.clone()),
        b2.residue()?.compose(&subst).unwrap_or(one),
    );
    let certificate = DivisionCertificate {
        field: k.clone(),
        kind: "thm42".into(),
        residue_var: "x".into(),
        param_var: "t".into(),
        algebra: vec![
            CertSymbol {
                n: d1,
                a: par.clone(),
                b: u.clone(),
            },
            CertSymbol {
                n: d2,
                a: b1.clone(),
                b: b2.clone(),
            },
        ],
        steps: vec![
            Step::Unit {
                elem: par.clone(),
                valuation: 1,
            },
            Step::Unit {
                elem: u.clone(),
                valuation: 0,
            },
            Step::Unit {
                elem: b1.clone(),
                valuation: 0,
            },
            Step::Unit {
                elem: b2.clone(),
                valuation: 0,
            },
            Step::Degree {
                elem: u.clone(),
                n: d1,
                order: d1,
            },
            Step::Twist {
                d: d1,
                unit: u.clone(),
                param: par,
            },
            Step::Reduce {
                var: "y".into(),
                subst,
                radicand: u,
                n: d1,
            },
            Step::Base {
                n: d2,
                a: b1,
                b: b2,
                reduced,
                witness: Place::linear(k, k.inv(spec.a).unwrap_or(k.one())),
                expected: d2,
            },
        ],
    };
    Ok(Construction {
        spec: spec.clone(),
        algebra,
        subfield,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(
        kind: ConstructionKind,
        orders: [u64; 4],
        q: u64,
        lam: u64,
        a: u64,
    ) -> Result<ConstructionSpec> {
        let k = Arc::new(FiniteField::of_order(q).unwrap());
        let (l, a) = (k.elem(lam), k.elem(a));
        ConstructionSpec::new(kind, orders, k, Some(l), Some(a))
    }

    #[test]
    fn thm45_examples() {
        let s = spec(ConstructionKind::Thm45, [2, 2, 1, 1], 5, 2, 2).unwrap();
        let c = build_thm45(&s).unwrap();
        let v = verify_certificate(&c.certificate).unwrap();
        assert_eq!((v.index, v.division), (4, true));
        assert!(c.check_structure().unwrap());

        let s = spec(ConstructionKind::Thm45, [1, 1, 2, 2], 5, 2, 2).unwrap();
        let v = verify_certificate(&build_thm45(&s).unwrap().certificate).unwrap();
        assert_eq!((v.index, v.division), (4, true));

        let s = spec(ConstructionKind::Thm45, [1, 1, 1, 1], 2, 1, 1).unwrap();
        let v = verify_certificate(&build_thm45(&s).unwrap().certificate).unwrap();
        assert_eq!((v.index, v.division), (1, true));

        assert!(matches!(
            spec(ConstructionKind::Thm45, [2, 2, 1, 1], 5, 1, 2),
            Err(Error::OrderConditionFailed(_))
        ));
    }

    #[test]
    fn thm42_examples() {
        let s = spec(ConstructionKind::Thm42, [2, 1, 2, 1], 5, 2, 2).unwrap();
        let c = build_thm42(&s).unwrap();
        let v = verify_certificate(&c.certificate).unwrap();
        assert_eq!((v.index, v.division), (4, true));
        assert!(c.check_structure().unwrap());

        let s = spec(ConstructionKind::Thm42, [1, 1, 2, 2], 5, 2, 2).unwrap();
        let v = verify_certificate(&build_thm42(&s).unwrap().certificate).unwrap();
        assert_eq!((v.index, v.division), (4, true));

        assert!(matches!(
            spec(ConstructionKind::Thm42, [2, 1, 2, 1], 5, 2, 1),
            Err(Error::OrderConditionFailed(_))
        ));
    }

    #[test]
    fn text_round_trip_and_tampering() {
        let s = spec(ConstructionKind::Thm42, [2, 1, 2, 1], 5, 2, 2).unwrap();
        let c = build_thm42(&s).unwrap();
        let text = c.certificate.to_text();
        let back = DivisionCertificate::parse(&text).unwrap();
        assert_eq!(back.to_text(), text);
        assert_eq!(
            verify_certificate(&back).unwrap(),
            verify_certificate(&c.certificate).unwrap()
        );
        let tampered = text.replace(
            "degree | (x + 4)/(x + 1) | 2 | 2",
            "degree | (x + 4)/(x + 1) | 2 | 1",
        );
        assert_ne!(tampered, text);
        let err = verify_certificate(&DivisionCertificate::parse(&tampered).unwrap()).unwrap_err();
        assert!(matches!(err, Error::StepFailed { step: 5, .. }));
    }

    #[test]
    fn smallest_fields() {
        assert_eq!(
            smallest_field(ConstructionKind::Thm45, [2, 2, 1, 1])
                .unwrap()
                .order(),
            5
        );
        assert_eq!(
            smallest_field(ConstructionKind::Thm42, [2, 1, 1, 1])
                .unwrap()
                .order(),
            5
        );
        assert_eq!(
            smallest_field(ConstructionKind::Thm45, [3, 1, 1, 1])
                .unwrap()
                .order(),
            4
        );
    }
}
