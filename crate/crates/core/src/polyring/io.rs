//! Text and JSON encodings.
//!
//! Text: terms in decreasing term order, factors in variable order,
//! e.g. `x1^2 * x2 - 2 * y1 * x1 + 1/2`.
//! JSON: `{"vars": [..], "terms": [{"exp": [..], "num": "..", "den": ".."}]}`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Monomial, Polynomial, VarEnv};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub num: String,
    pub den: String,
}

pub(super) fn to_text<C: Scalar>(p: &Polynomial<C>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().enumerate() {
        let r = c.to_ratio();
        let neg = r.is_negative();
        let a = r.abs();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let factors: Vec<String> = m
            .exps()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let name = &p.env().names()[i];
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&factors.join(" * "));
        } else {
            out.push_str(&format!("{} * {}", a, factors.join(" * ")));
        }
    }
    out
}

impl<C: Scalar> Polynomial<C> {
    /// Parses the text format against a fixed variable environment.
    pub fn parse(env: &Arc<VarEnv>, text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::parse("empty polynomial"));
        }
        let mut out = Self::zero(env);
        let mut rest = s.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut neg = false;
            if let Some(r) = rest.strip_prefix('+') {
                if first {
                    return Err(Error::parse("leading '+'"));
                }
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                neg = true;
                rest = r;
            } else if !first {
                return Err(Error::parse(format!("expected '+' or '-' at {rest:?}")));
            }
            first = false;
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let (m, mut c) = parse_term(env, term)?;
            if neg {
                c = -c;
            }
            let c = C::from_ratio(&c).ok_or_else(|| Error::parse(format!("coefficient {c} not representable")))?;
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> PolyJson {
        let terms = self
            .terms()
            .map(|(m, c)| {
                let r = c.to_ratio();
                TermJson {
                    exp: m.exps().iter().map(|&e| e as u32).collect(),
                    num: r.numer().to_string(),
                    den: r.denom().to_string(),
                }
            })
            .collect();
        PolyJson { vars: self.env().names().to_vec(), terms }
    }

    /// Reads JSON against a given environment; variable names must match it.
    pub fn from_json_in(env: &Arc<VarEnv>, json: &PolyJson) -> Result<Self> {
        if json.vars != env.names() {
            return Err(Error::EnvMismatch);
        }
        let mut out = Self::zero(env);
        for t in &json.terms {
            if t.exp.len() != env.len() {
                return Err(Error::SizeMismatch { expected: env.len(), found: t.exp.len() });
            }
            let num: BigInt = t.num.parse().map_err(|_| Error::parse(format!("bad numerator {:?}", t.num)))?;
            let den: BigInt = t.den.parse().map_err(|_| Error::parse(format!("bad denominator {:?}", t.den)))?;
            if den.is_zero() {
                return Err(Error::parse("zero denominator"));
            }
            let r = BigRational::new(num, den);
            let c = C::from_ratio(&r).ok_or_else(|| Error::parse(format!("coefficient {r} not representable")))?;
            let exps: Vec<u16> = t
                .exp
                .iter()
                .map(|&e| u16::try_from(e).map_err(|_| Error::parse("exponent too large")))
                .collect::<Result<_>>()?;
            out.add_term(Monomial::from_exps(&exps), c);
        }
        Ok(out)
    }

    /// Reads JSON, building the environment from its variable list.
    /// Variables named `h<i>` get weight `2i`; all others weight 2.
    pub fn from_json(json: &PolyJson) -> Result<Self> {
        let weights = json
            .vars
            .iter()
            .map(|v| match v.strip_prefix('h').and_then(|i| i.parse::<u32>().ok()) {
                Some(i) => 2 * i,
                None => 2,
            })
            .collect();
        let env = VarEnv::new(json.vars.clone(), weights)?;
        Self::from_json_in(&env, json)
    }
}

fn parse_term(env: &Arc<VarEnv>, term: &str) -> Result<(Monomial, BigRational)> {
    if term.is_empty() {
        return Err(Error::parse("empty term"));
    }
    let mut m = Monomial::one(env.len());
    let mut c = BigRational::one();
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::parse(format!("empty factor in {term:?}")));
        }
        if factor.starts_with(|ch: char| ch.is_ascii_digit()) {
            c *= parse_rational(factor)?;
            continue;
        }
        let (name, e) = match factor.split_once('^') {
            Some((name, e)) => {
                (name, e.parse::<u16>().map_err(|_| Error::parse(format!("bad exponent in {factor:?}")))?)
            }
            None => (factor, 1),
        };
        let i = env.index(name).ok_or_else(|| Error::parse(format!("unknown variable {name:?}")))?;
        m.0[i] = m.0[i].checked_add(e).ok_or_else(|| Error::parse("exponent overflow"))?;
    }
    Ok((m, c))
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::parse(format!("bad number {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let den: BigInt = b.parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a.parse().map_err(|_| bad())?, den))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}
