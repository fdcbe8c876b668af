//! Elements of `F_q(t)(p)` written as ratios of polynomials in a parameter
//! `p` with coefficients in `F_q(t)`, enough to read off `p`-adic valuations
//! and residues.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ff::FiniteField;
use crate::parse::{eval, parse_expr, ExprTarget};
use crate::ratfunc::RatFunc;

#[derive(Clone, Debug)]
pub struct ParamRatio {
    field: Arc<FiniteField>,
    /// Coefficients low-first, no trailing zeros.
    num: Vec<RatFunc>,
    den: Vec<RatFunc>,
}

fn trim(mut v: Vec<RatFunc>) -> Vec<RatFunc> {
    while v.last().is_some_and(RatFunc::is_zero) {
        v.pop();
    }
    v
}

fn low(v: &[RatFunc]) -> Option<usize> {
    v.iter().position(|c| !c.is_zero())
}

fn add_vec(a: &[RatFunc], b: &[RatFunc], field: &Arc<FiniteField>) -> Vec<RatFunc> {
    let n = a.len().max(b.len());
    let zero = RatFunc::zero(field);
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn mul_vec(a: &[RatFunc], b: &[RatFunc], field: &Arc<FiniteField>) -> Vec<RatFunc> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![RatFunc::zero(field); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

impl ParamRatio {
    fn make(field: &Arc<FiniteField>, num: Vec<RatFunc>, den: Vec<RatFunc>) -> ParamRatio {
        let mut num = trim(num);
        let mut den = trim(den);
        assert!(!den.is_empty());
        if num.is_empty() {
            return ParamRatio::constant(RatFunc::zero(field));
        }
        // cancel common powers of the parameter
        let s = low(&num).unwrap().min(low(&den).unwrap());
        num.drain(..s);
        den.drain(..s);
        if den.len() == 1 {
            let d = den[0].clone();
            num = num.iter().map(|c| c.div(&d).unwrap()).collect();
            den = vec![RatFunc::one(field)];
        }
        ParamRatio {
            field: field.clone(),
            num,
            den,
        }
    }

    pub fn constant(c: RatFunc) -> ParamRatio {
        let field = c.field().clone();
        let num = trim(vec![c]);
        ParamRatio {
            den: vec![RatFunc::one(&field)],
            field,
            num,
        }
    }

    pub fn param(field: &Arc<FiniteField>) -> ParamRatio {
        ParamRatio {
            field: field.clone(),
            num: vec![RatFunc::zero(field), RatFunc::one(field)],
            den: vec![RatFunc::one(field)],
        }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn add(&self, o: &ParamRatio) -> ParamRatio {
        let k = &self.field;
        let num = add_vec(
            &mul_vec(&self.num, &o.den, k),
            &mul_vec(&o.num, &self.den, k),
            k,
        );
        ParamRatio::make(k, num, mul_vec(&self.den, &o.den, k))
    }

    pub fn neg(&self) -> ParamRatio {
        ParamRatio {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &ParamRatio) -> ParamRatio {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &ParamRatio) -> ParamRatio {
        let k = &self.field;
        ParamRatio::make(
            k,
            mul_vec(&self.num, &o.num, k),
            mul_vec(&self.den, &o.den, k),
        )
    }

    pub fn div(&self, o: &ParamRatio) -> Result<ParamRatio> {
        if o.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        let k = &self.field;
        Ok(ParamRatio::make(
            k,
            mul_vec(&self.num, &o.den, k),
            mul_vec(&self.den, &o.num, k),
        ))
    }

    /// Valuation at the parameter.
    pub fn valuation(&self) -> Result<i64> {
        let a = low(&self.num).ok_or(Error::ZeroFunction)?;
        let b = low(&self.den).unwrap();
        Ok(a as i64 - b as i64)
    }

    /// Image in the residue field `F_q(t)`, for units.
    pub fn residue(&self) -> Result<RatFunc> {
        if self.valuation()? != 0 {
            return Err(Error::NotAUnit {
                place: "the parameter".into(),
            });
        }
        let a = low(&self.num).unwrap();
        let b = low(&self.den).unwrap();
        self.num[a].div(&self.den[b])
    }

    pub fn same_as(&self, o: &ParamRatio) -> bool {
        let k = &self.field;
        mul_vec(&self.num, &o.den, k) == mul_vec(&o.num, &self.den, k)
    }

    fn fmt_poly(v: &[RatFunc], var: &str, param: &str) -> String {
        let mut terms = Vec::new();
        for (i, c) in v.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => param.to_string(),
                _ => format!("{param}^{i}"),
            };
            let cs = c.fmt_var(var);
            let alone = i == 0 && v.iter().filter(|c| !c.is_zero()).count() == 1;
            let wrapped = if !alone && (cs.contains(' ') || cs.contains('/')) {
                format!("({cs})")
            } else {
                cs
            };
            terms.push(match (i, c.is_one()) {
                (0, _) => wrapped,
                (_, true) => mono,
                _ => format!("{wrapped}*{mono}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Text in the expression grammar, with residue variable `var` and
    /// parameter `param`.
    pub fn fmt_vars(&self, var: &str, param: &str) -> String {
        let n = Self::fmt_poly(&self.num, var, param);
        if self.den.len() == 1 && self.den[0].is_one() {
            return n;
        }
        format!("({n})/({})", Self::fmt_poly(&self.den, var, param))
    }

    pub fn parse(
        src: &str,
        field: &Arc<FiniteField>,
        var: &str,
        param: &str,
    ) -> Result<ParamRatio> {
        let e = parse_expr(src)?;
        let ctx = ParamCtx {
            val: ParamRatio::constant(RatFunc::zero(field)),
            var,
            param,
        };
        Ok(eval(&e, &ctx)?.val)
    }
}

#[derive(Clone)]
struct ParamCtx<'a> {
    val: ParamRatio,
    var: &'a str,
    param: &'a str,
}

impl<'a> ParamCtx<'a> {
    fn wrap(&self, val: ParamRatio) -> Self {
        ParamCtx {
            val,
            var: self.var,
            param: self.param,
        }
    }
}

impl ExprTarget for ParamCtx<'_> {
    fn from_int(&self, v: i128) -> Self {
        let k = self.val.field();
        let c = v.rem_euclid(k.characteristic() as i128) as i64;
        self.wrap(ParamRatio::constant(RatFunc::from_int(k, c)))
    }

    fn ident(&self, name: &str) -> Option<Self> {
        let k = self.val.field();
        if name == self.var {
            Some(self.wrap(ParamRatio::constant(RatFunc::t(k))))
        } else if name == self.param {
            Some(self.wrap(ParamRatio::param(k)))
        } else if name == "g" {
            Some(self.wrap(ParamRatio::constant(RatFunc::constant(k, k.generator()))))
        } else {
            None
        }
    }

    fn add(&self, o: &Self) -> Self {
        self.wrap(self.val.add(&o.val))
    }

    fn sub(&self, o: &Self) -> Self {
        self.wrap(self.val.sub(&o.val))
    }

    fn mul(&self, o: &Self) -> Self {
        self.wrap(self.val.mul(&o.val))
    }

    fn neg(&self) -> Self {
        self.wrap(self.val.neg())
    }

    fn div(&self, o: &Self) -> Option<Self> {
        self.val.div(&o.val).ok().map(|v| self.wrap(v))
    }
}
