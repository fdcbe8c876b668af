//! Division certificates: the index computation of a cyclic-algebra tensor
//! product over `F_q(t)(p)`, replayed step by step.
//!
//! A certificate lists the algebra's symbols and then steps:
//! unit checks at the parameter, a degree check of a residue in
//! `F_q(t)^*/n`, one twist step splitting off a symbol `(u, p')_d` with `u`
//! a unit of degree `d` and `p'` a parameter (the index is multiplied by
//! `d`), a reduction step replacing `F_q(t)(u^(1/d))` by a rational function
//! field `F_q(s)` via an explicit substitution for `t`, and a base step
//! computing the index of the remaining symbol's residue over `F_q(s)`, both
//! globally and at a named witness place.
//!
//! Text form: a `CERT/1` header line, then one `tag | arg | ...` line each.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::brauer::BrauerClassGlobal;
use crate::error::{Error, Result};
use crate::ff::FiniteField;
use crate::ratfunc::{Place, RatFunc};

use super::param::ParamRatio;

pub const HEADER: &str = "CERT/1";

#[derive(Clone, Debug)]
pub struct CertSymbol {
    pub n: u64,
    pub a: ParamRatio,
    pub b: ParamRatio,
}

#[derive(Clone, Debug)]
pub enum Step {
    Unit {
        elem: ParamRatio,
        valuation: i64,
    },
    Degree {
        elem: ParamRatio,
        n: u64,
        order: u64,
    },
    Twist {
        d: u64,
        unit: ParamRatio,
        param: ParamRatio,
    },
    /// `t = subst(var)`, making `var^n` the image of `radicand`.
    Reduce {
        var: String,
        subst: RatFunc,
        radicand: ParamRatio,
        n: u64,
    },
    Base {
        n: u64,
        a: ParamRatio,
        b: ParamRatio,
        reduced: (RatFunc, RatFunc),
        /// Place of `F_q(s)` where the reduced symbol already has full index.
        witness: Place,
        expected: u64,
    },
}

impl Step {
    pub fn tag(&self) -> &'static str {
        match self {
            Step::Unit { .. } => "unit",
            Step::Degree { .. } => "degree",
            Step::Twist { .. } => "twist",
            Step::Reduce { .. } => "reduce",
            Step::Base { .. } => "base",
        }
    }
}

#[derive(Clone, Debug)]
pub struct DivisionCertificate {
    pub field: Arc<FiniteField>,
    pub kind: String,
    pub residue_var: String,
    pub param_var: String,
    pub algebra: Vec<CertSymbol>,
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifiedIndex {
    pub index: u64,
    pub degree: u64,
    pub division: bool,
    /// One line per step, with the recomputed values.
    pub trace: Vec<String>,
}

impl DivisionCertificate {
    pub fn degree(&self) -> u64 {
        self.algebra.iter().map(|s| s.n).product()
    }

    fn el(&self, e: &ParamRatio) -> String {
        e.fmt_vars(&self.residue_var, &self.param_var)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{HEADER}");
        let _ = writeln!(out, "kind | {}", self.kind);
        let _ = writeln!(out, "field | {}", self.field);
        let _ = writeln!(out, "vars | {} | {}", self.residue_var, self.param_var);
        for s in &self.algebra {
            let _ = writeln!(
                out,
                "algebra | {} | {} | {}",
                s.n,
                self.el(&s.a),
                self.el(&s.b)
            );
        }
        for step in &self.steps {
            let line = match step {
                Step::Unit { elem, valuation } => format!("unit | {} | {valuation}", self.el(elem)),
                Step::Degree { elem, n, order } => {
                    format!("degree | {} | {n} | {order}", self.el(elem))
                }
                Step::Twist { d, unit, param } => {
                    format!("twist | {d} | {} | {}", self.el(unit), self.el(param))
                }
                Step::Reduce {
                    var,
                    subst,
                    radicand,
                    n,
                } => format!(
                    "reduce | {var} | {} | {} | {n}",
                    subst.fmt_var(var),
                    self.el(radicand)
                ),
                Step::Base {
                    n,
                    a,
                    b,
                    reduced,
                    witness,
                    expected,
                } => {
                    let var = self.reduced_var().unwrap_or("s");
                    format!(
                        "base | {n} | {} | {} | {} | {} | {} | {expected}",
                        self.el(a),
                        self.el(b),
                        reduced.0.fmt_var(var),
                        reduced.1.fmt_var(var),
                        witness.fmt_var(var)
                    )
                }
            };
            let _ = writeln!(out, "{line}");
        }
        out
    }

    fn reduced_var(&self) -> Option<&str> {
        self.steps.iter().find_map(|s| match s {
            Step::Reduce { var, .. } => Some(var.as_str()),
            _ => None,
        })
    }

    pub fn parse(text: &str) -> Result<DivisionCertificate> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        match lines.next() {
            Some((_, HEADER)) => {}
            _ => return Err(Error::syntax(0, format!("missing {HEADER} header"))),
        }
        let mut kind = String::new();
        let mut field: Option<Arc<FiniteField>> = None;
        let mut vars: Option<(String, String)> = None;
        let mut algebra = Vec::new();
        let mut steps = Vec::new();
        let mut reduced_var = String::from("s");
        for (ln, line) in lines {
            let parts: Vec<&str> = line.split('|').map(str::trim).collect();
            let bad = |msg: &str| Error::syntax(ln, format!("{msg}: {line:?}"));
            let arity = |n: usize| {
                if parts.len() == n {
                    Ok(())
                } else {
                    Err(bad(&format!("expected {} fields", n - 1)))
                }
            };
            let int = |s: &str| s.parse::<u64>().map_err(|_| bad("bad integer"));
            match parts[0] {
                "kind" => {
                    arity(2)?;
                    kind = parts[1].to_string();
                    continue;
                }
                "field" => {
                    arity(2)?;
                    field = Some(Arc::new(parts[1].parse::<FiniteField>()?));
                    continue;
                }
                "vars" => {
                    arity(3)?;
                    vars = Some((parts[1].to_string(), parts[2].to_string()));
                    continue;
                }
                _ => {}
            }
            let k = field
                .clone()
                .ok_or_else(|| bad("field line must come first"))?;
            let (rv, pv) = vars
                .clone()
                .ok_or_else(|| bad("vars line must come first"))?;
            let el = |s: &str| ParamRatio::parse(s, &k, &rv, &pv);
            match parts[0] {
                "algebra" => {
                    arity(4)?;
                    algebra.push(CertSymbol {
                        n: int(parts[1])?,
                        a: el(parts[2])?,
                        b: el(parts[3])?,
                    });
                }
                "unit" => {
                    arity(3)?;
                    steps.push(Step::Unit {
                        elem: el(parts[1])?,
                        valuation: parts[2].parse().map_err(|_| bad("bad valuation"))?,
                    });
                }
                "degree" => {
                    arity(4)?;
                    steps.push(Step::Degree {
                        elem: el(parts[1])?,
                        n: int(parts[2])?,
                        order: int(parts[3])?,
                    });
                }
                "twist" => {
                    arity(4)?;
                    steps.push(Step::Twist {
                        d: int(parts[1])?,
                        unit: el(parts[2])?,
                        param: el(parts[3])?,
                    });
                }
                "reduce" => {
                    arity(5)?;
                    reduced_var = parts[1].to_string();
                    steps.push(Step::Reduce {
                        var: parts[1].to_string(),
                        subst: RatFunc::parse_in(parts[2], &k, parts[1])?,
                        radicand: el(parts[3])?,
                        n: int(parts[4])?,
                    });
                }
                "base" => {
                    arity(8)?;
                    steps.push(Step::Base {
                        n: int(parts[1])?,
                        a: el(parts[2])?,
                        b: el(parts[3])?,
                        reduced: (
                            RatFunc::parse_in(parts[4], &k, &reduced_var)?,
                            RatFunc::parse_in(parts[5], &k, &reduced_var)?,
                        ),
                        witness: parse_place(parts[6], &k, &reduced_var)?,
                        expected: int(parts[7])?,
                    });
                }
                other => return Err(bad(&format!("unknown tag {other:?}"))),
            }
        }
        let field = field.ok_or_else(|| Error::syntax(0, "missing field line"))?;
        let (residue_var, param_var) = vars.ok_or_else(|| Error::syntax(0, "missing vars line"))?;
        Ok(DivisionCertificate {
            field,
            kind,
            residue_var,
            param_var,
            algebra,
            steps,
        })
    }
}

fn parse_place(s: &str, k: &Arc<FiniteField>, var: &str) -> Result<Place> {
    if s == "inf" {
        return Ok(Place::Infinity);
    }
    let f = RatFunc::parse_in(s, k, var)?;
    if !f.den().is_one() {
        return Err(Error::syntax(0, format!("place {s:?} is not a polynomial")));
    }
    Place::finite(f.num().clone())
}

fn failed(step: usize, recomputed: impl ToString, expected: impl ToString) -> Error {
    Error::StepFailed {
        step,
        recomputed: recomputed.to_string(),
        expected: expected.to_string(),
    }
}

fn matches_symbol(s: &CertSymbol, n: u64, a: &ParamRatio, b: &ParamRatio) -> bool {
    s.n == n && ((s.a.same_as(a) && s.b.same_as(b)) || (s.a.same_as(b) && s.b.same_as(a)))
}

/// Recomputes every step; expected values in the certificate are only
/// compared against, never used.
pub fn verify_certificate(cert: &DivisionCertificate) -> Result<VerifiedIndex> {
    let k = &cert.field;
    let mut units: Vec<(ParamRatio, i64)> = Vec::new();
    let mut degrees: Vec<(ParamRatio, u64, u64)> = Vec::new();
    let mut used = vec![false; cert.algebra.len()];
    let mut twist: Option<(u64, ParamRatio)> = None;
    let mut subst: Option<(String, RatFunc)> = None;
    let mut index = 1u64;
    let mut base_done = false;
    let mut trace = Vec::new();
    let checked_val = |units: &[(ParamRatio, i64)], e: &ParamRatio| {
        units.iter().find(|(u, _)| u.same_as(e)).map(|(_, v)| *v)
    };
    let rv = &cert.residue_var;
    for (i, step) in cert.steps.iter().enumerate() {
        let no = i + 1;
        match step {
            Step::Unit { elem, valuation } => {
                let v = elem.valuation()?;
                if v != *valuation {
                    return Err(failed(
                        no,
                        format!("valuation {v}"),
                        format!("valuation {valuation}"),
                    ));
                }
                units.push((elem.clone(), v));
                trace.push(format!(
                    "{no} unit {} valuation {v}",
                    elem.fmt_vars(rv, &cert.param_var)
                ));
            }
            Step::Degree { elem, n, order } => {
                if checked_val(&units, elem) != Some(0) {
                    return Err(failed(no, "no unit check", "unit check with valuation 0"));
                }
                let r = elem.residue()?;
                let got = if *n == 1 {
                    1
                } else {
                    r.class_order_global(*n)?
                };
                if got != *order {
                    return Err(failed(no, format!("order {got}"), format!("order {order}")));
                }
                degrees.push((elem.clone(), *n, got));
                trace.push(format!(
                    "{no} degree {} mod {n}-th powers: order {got}",
                    r.fmt_var(rv)
                ));
            }
            Step::Twist { d, unit, param } => {
                if checked_val(&units, param) != Some(1) {
                    return Err(failed(
                        no,
                        "no parameter check",
                        "unit check with valuation 1",
                    ));
                }
                if !degrees
                    .iter()
                    .any(|(e, n, o)| e.same_as(unit) && n == d && o == d)
                {
                    return Err(failed(
                        no,
                        "no degree check",
                        format!("degree check of order {d}"),
                    ));
                }
                let Some(j) = (0..cert.algebra.len())
                    .find(|&j| !used[j] && matches_symbol(&cert.algebra[j], *d, unit, param))
                else {
                    return Err(failed(
                        no,
                        "no matching symbol",
                        format!("symbol of degree {d}"),
                    ));
                };
                if twist.is_some() {
                    return Err(failed(no, "second twist", "one twist"));
                }
                used[j] = true;
                index *= d;
                twist = Some((*d, unit.clone()));
                trace.push(format!("{no} twist by degree {d}: index factor {d}"));
            }
            Step::Reduce {
                var,
                subst: s,
                radicand,
                n,
            } => {
                match &twist {
                    Some((d, u)) if d == n && u.same_as(radicand) => {}
                    _ => {
                        return Err(failed(
                            no,
                            "no matching twist",
                            format!("twist of degree {n}"),
                        ))
                    }
                }
                let image = radicand.residue()?.compose(s)?;
                let target = RatFunc::t(k).pow(*n as i64)?;
                if image != target {
                    return Err(failed(no, image.fmt_var(var), target.fmt_var(var)));
                }
                let deg = s.num().deg().max(s.den().deg()) as u64;
                if deg != *n {
                    return Err(failed(
                        no,
                        format!("substitution degree {deg}"),
                        format!("degree {n}"),
                    ));
                }
                subst = Some((var.clone(), s.clone()));
                trace.push(format!("{no} reduce {rv} = {}", s.fmt_var(var)));
            }
            Step::Base {
                n,
                a,
                b,
                reduced,
                witness,
                expected,
            } => {
                let Some((var, s)) = &subst else {
                    return Err(failed(no, "no reduction", "reduction step"));
                };
                for e in [a, b] {
                    if checked_val(&units, e) != Some(0) {
                        return Err(failed(no, "no unit check", "unit check with valuation 0"));
                    }
                }
                let Some(j) = (0..cert.algebra.len())
                    .find(|&j| !used[j] && matches_symbol(&cert.algebra[j], *n, a, b))
                else {
                    return Err(failed(
                        no,
                        "no matching symbol",
                        format!("symbol of degree {n}"),
                    ));
                };
                // keep the algebra's order of the entries
                let (x, y) = if cert.algebra[j].a.same_as(a) {
                    (a, b)
                } else {
                    (b, a)
                };
                let ra = x.residue()?.compose(s)?;
                let rb = y.residue()?.compose(s)?;
                if (&ra, &rb) != (&reduced.0, &reduced.1) {
                    return Err(failed(
                        no,
                        format!("({}, {})", ra.fmt_var(var), rb.fmt_var(var)),
                        format!("({}, {})", reduced.0.fmt_var(var), reduced.1.fmt_var(var)),
                    ));
                }
                let (local, got) = if *n == 1 {
                    (1, 1)
                } else {
                    let class = BrauerClassGlobal::from_pairs(
                        k.clone(),
                        *n,
                        vec![(ra.clone(), rb.clone())],
                    )?;
                    (class.local_index(witness)?, class.global_index()?)
                };
                if local != *expected {
                    return Err(failed(
                        no,
                        format!("local index {local} at {}", witness.fmt_var(var)),
                        format!("index {expected}"),
                    ));
                }
                if got != *expected {
                    return Err(failed(
                        no,
                        format!("index {got}"),
                        format!("index {expected}"),
                    ));
                }
                used[j] = true;
                index *= got;
                base_done = true;
                trace.push(format!(
                    "{no} base index of ({}, {})_{n} over {k}({var}): {got}, local index {local} at {}",
                    ra.fmt_var(var),
                    rb.fmt_var(var),
                    witness.fmt_var(var)
                ));
            }
        }
    }
    let next = cert.steps.len() + 1;
    if !base_done {
        return Err(failed(next, "no base step", "base step"));
    }
    if let Some(j) = used.iter().position(|u| !u) {
        return Err(failed(
            next,
            format!("symbol {} unaccounted", j + 1),
            "every symbol used",
        ));
    }
    let degree = cert.degree();
    Ok(VerifiedIndex {
        index,
        degree,
        division: index == degree,
        trace,
    })
}
