//! Sparse multivariate polynomials with exact coefficients.
//!
//! Variables are listed in increasing lex order: the last variable of the
//! environment is the largest. Terms live in a `BTreeMap` whose ordering is
//! the term order, so the leading term is the last entry.

mod ideal;
mod io;
mod symmetric;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use smallvec::SmallVec;

pub use ideal::{PresetName, QuotientPreset};
pub use io::{PolyJson, TermJson};
pub use symmetric::{complete, elementary, prod_linear};

use crate::error::{Error, Result};
use crate::scalar::{ExactField, Scalar};
use crate::weyl::Permutation;

/// Ordered variable names with grading weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarEnv {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl VarEnv {
    pub fn new(names: Vec<String>, weights: Vec<u32>) -> Result<Arc<Self>> {
        if names.len() != weights.len() {
            return Err(Error::SizeMismatch { expected: names.len(), found: weights.len() });
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != names.len() {
            return Err(Error::parse("duplicate variable name"));
        }
        Ok(Arc::new(Self { names, weights }))
    }

    /// Variables `y1..y_ny, x1..x_nx`, each of real dimension 2.
    pub fn xy(ny: usize, nx: usize) -> Arc<Self> {
        let names = (1..=ny).map(|i| format!("y{i}")).chain((1..=nx).map(|i| format!("x{i}"))).collect();
        Arc::new(Self { names, weights: vec![2; ny + nx] })
    }

    /// Variables `x1..x_nx`.
    pub fn x(nx: usize) -> Arc<Self> {
        Self::xy(0, nx)
    }

    /// Variables `h1..h_{n-1}` with `dim(h_i) = 2i`.
    pub fn h(n: usize) -> Arc<Self> {
        let names = (1..n).map(|i| format!("h{i}")).collect();
        let weights = (1..n).map(|i| 2 * i as u32).collect();
        Arc::new(Self { names, weights })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v == name)
    }

    /// Index of a variable that must exist.
    pub fn expect(&self, name: &str) -> usize {
        self.index(name).unwrap_or_else(|| panic!("no variable {name}"))
    }
}

/// Exponent vector. Ordered by pure lex with the last variable largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u16; 12]>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Self(SmallVec::from_elem(0, arity))
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Self(SmallVec::from_slice(exps))
    }

    pub fn var(arity: usize, i: usize, e: u16) -> Self {
        let mut m = Self::one(arity);
        m.0[i] = e;
        m
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a.checked_add(*b).expect("exponent overflow")).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
pub struct Polynomial<C> {
    env: Arc<VarEnv>,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        same_env(&self.env, &other.env) && self.terms == other.terms
    }
}

fn same_env(a: &Arc<VarEnv>, b: &Arc<VarEnv>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero(env: &Arc<VarEnv>) -> Self {
        Self { env: env.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(env: &Arc<VarEnv>, c: C) -> Self {
        let mut p = Self::zero(env);
        p.add_term(Monomial::one(env.len()), c);
        p
    }

    pub fn one(env: &Arc<VarEnv>) -> Self {
        Self::constant(env, C::one())
    }

    pub fn from_i64(env: &Arc<VarEnv>, c: i64) -> Self {
        Self::constant(env, C::from_i64(c))
    }

    pub fn var(env: &Arc<VarEnv>, i: usize) -> Self {
        Self::monomial(env, Monomial::var(env.len(), i, 1), C::one())
    }

    pub fn var_named(env: &Arc<VarEnv>, name: &str) -> Result<Self> {
        let i = env.index(name).ok_or_else(|| Error::parse(format!("unknown variable {name}")))?;
        Ok(Self::var(env, i))
    }

    pub fn monomial(env: &Arc<VarEnv>, m: Monomial, c: C) -> Self {
        let mut p = Self::zero(env);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(env: &Arc<VarEnv>, terms: impl IntoIterator<Item = (Monomial, C)>) -> Result<Self> {
        let mut p = Self::zero(env);
        for (m, c) in terms {
            if m.0.len() != env.len() {
                return Err(Error::SizeMismatch { expected: env.len(), found: m.0.len() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn env(&self) -> &Arc<VarEnv> {
        &self.env
    }

    /// Terms in decreasing term order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.last_key_value()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn add_term_ref(&mut self, m: Monomial, c: &C) {
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn terms_map(&self) -> &BTreeMap<Monomial, C> {
        &self.terms
    }

    pub(crate) fn from_map(env: &Arc<VarEnv>, terms: BTreeMap<Monomial, C>) -> Self {
        Self { env: env.clone(), terms }
    }

    /// Largest total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Largest exponent of variable `i`.
    pub fn var_degree(&self, i: usize) -> u16 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// Set of graded dimensions of the terms.
    pub fn dims(&self) -> BTreeSet<u32> {
        self.terms.keys().map(|m| m.0.iter().zip(&self.env.weights).map(|(&e, &w)| e as u32 * w).sum()).collect()
    }

    /// The graded dimension if the polynomial is nonzero and homogeneous.
    pub fn dim(&self) -> Option<u32> {
        let d = self.dims();
        (d.len() == 1).then(|| *d.iter().next().unwrap())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.env);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a.mul_ref(c))).collect();
        Self { env: self.env.clone(), terms }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_env(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term_ref(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_env(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_env(other)?;
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.len() * other.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1.mul_ref(c2);
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Self { env: self.env.clone(), terms })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.env);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    fn check_env(&self, other: &Self) -> Result<()> {
        if same_env(&self.env, &other.env) {
            Ok(())
        } else {
            Err(Error::EnvMismatch)
        }
    }

    /// Sets the listed variables to zero.
    pub fn substitute_zero(&self, vars: &[usize]) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| vars.iter().all(|&v| m.0[v] == 0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Self { env: self.env.clone(), terms }
    }

    /// Replaces variable `var` by the polynomial `value`.
    pub fn substitute(&self, var: usize, value: &Self) -> Result<Self> {
        self.check_env(value)?;
        let mut powers = vec![Self::one(&self.env)];
        let mut out = Self::zero(&self.env);
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = m.clone();
            rest.0[var] = 0;
            let part = powers[e].mul_monomial(&rest, c);
            for (m2, c2) in part.terms {
                out.add_term(m2, c2);
            }
        }
        Ok(out)
    }

    /// Multiplies by `c * m`.
    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Self {
        let terms = self.terms.iter().map(|(m2, c2)| (m2.mul(m), c2.mul_ref(c))).collect();
        Self { env: self.env.clone(), terms }
    }

    /// Renames variables: variable `i` becomes variable `map[i]`; `map` must be a bijection.
    pub fn rename(&self, map: &[usize]) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = Monomial::one(self.env.len());
            for (i, &x) in m.0.iter().enumerate() {
                e.0[map[i]] = x;
            }
            terms.insert(e, c.clone());
        }
        Self { env: self.env.clone(), terms }
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut map: Vec<usize> = (0..self.env.len()).collect();
        map.swap(i, j);
        self.rename(&map)
    }

    /// Applies `w` to a block of variables: the variable `block[k]` becomes `block[w(k+1) - 1]`.
    pub fn permute_block(&self, w: &Permutation, block: &[usize]) -> Result<Self> {
        if w.n() != block.len() {
            return Err(Error::SizeMismatch { expected: block.len(), found: w.n() });
        }
        let mut map: Vec<usize> = (0..self.env.len()).collect();
        for (k, &v) in block.iter().enumerate() {
            map[v] = block[w.apply(k + 1) - 1];
        }
        Ok(self.rename(&map))
    }

    /// Re-expresses the polynomial in another environment. `map[i]` is the
    /// new index of old variable `i`; `None` is allowed only for absent variables.
    pub fn embed(&self, env: &Arc<VarEnv>, map: &[Option<usize>]) -> Result<Self> {
        if map.len() != self.env.len() {
            return Err(Error::SizeMismatch { expected: self.env.len(), found: map.len() });
        }
        let mut out = Self::zero(env);
        for (m, c) in &self.terms {
            let mut e = Monomial::one(env.len());
            for (i, &x) in m.0.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e.0[j] = x,
                    None => return Err(Error::EnvMismatch),
                }
            }
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// Embeds by matching variable names.
    pub fn embed_by_name(&self, env: &Arc<VarEnv>) -> Result<Self> {
        let map: Vec<Option<usize>> = self.env.names.iter().map(|n| env.index(n)).collect();
        self.embed(env, &map)
    }

    /// Exact quotient by `v_i - v_j` using synthetic division on each
    /// homogeneous piece in `(v_i, v_j)`; `None` if the remainder is nonzero.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Option<Self> {
        assert_ne!(i, j, "divided difference needs two distinct variables");
        let mut groups: HashMap<(Monomial, u16), Vec<(u16, C)>> = HashMap::new();
        for (m, c) in &self.terms {
            let a = m.0[i];
            let d = a + m.0[j];
            let mut rest = m.clone();
            rest.0[i] = 0;
            rest.0[j] = 0;
            groups.entry((rest, d)).or_default().push((a, c.clone()));
        }
        let mut out = Self::zero(&self.env);
        for ((rest, d), coeffs) in groups {
            let mut dense = vec![C::zero(); d as usize + 1];
            for (a, c) in coeffs {
                dense[a as usize] = c;
            }
            if d == 0 {
                if !dense[0].is_zero() {
                    return None;
                }
                continue;
            }
            let mut q = C::zero();
            for a in (1..=d as usize).rev() {
                q.add_assign_ref(&dense[a]);
                if !q.is_zero() {
                    let mut m = rest.clone();
                    m.0[i] = a as u16 - 1;
                    m.0[j] = d - a as u16;
                    out.add_term_ref(m, &q);
                }
            }
            q.add_assign_ref(&dense[0]);
            if !q.is_zero() {
                return None;
            }
        }
        Some(out)
    }

    /// Coefficient of `prod v^e` over the listed `(v, e)` pairs, as a polynomial
    /// in the remaining variables.
    pub fn coefficient_of(&self, pattern: &[(usize, u16)]) -> Self {
        let mut out = Self::zero(&self.env);
        for (m, c) in &self.terms {
            if pattern.iter().all(|&(v, e)| m.0[v] == e) {
                let mut rest = m.clone();
                for &(v, _) in pattern {
                    rest.0[v] = 0;
                }
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Evaluates with all variables replaced by scalars.
    pub fn evaluate(&self, values: &[C]) -> C {
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (&e, v) in m.0.iter().zip(values) {
                for _ in 0..e {
                    t = t.mul_ref(v);
                }
            }
            total += t;
        }
        total
    }

    /// Maps coefficients into another scalar type.
    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        let mut out = Polynomial::zero(&self.env);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl<C: ExactField> Polynomial<C> {
    /// Exact quotient `self / q`, or `None` if `q` does not divide `self`.
    pub fn div_exact(&self, q: &Self) -> Option<Self> {
        let (lm, lc) = q.leading()?;
        let mut rem = self.terms.clone();
        let mut out = Self::zero(&self.env);
        while let Some((m, c)) = rem.pop_last() {
            if !lm.divides(&m) {
                return None;
            }
            let t = m.div(lm);
            let f = c / lc.clone();
            for (m2, c2) in q.terms.iter().rev().skip(1) {
                let key = m2.mul(&t);
                let v = rem.entry(key.clone()).or_insert_with(C::zero);
                v.sub_assign_ref(&c2.mul_ref(&f));
                if v.is_zero() {
                    rem.remove(&key);
                }
            }
            out.add_term(t, f);
        }
        Some(out)
    }
}

impl<C: Scalar> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: Self) -> Polynomial<C> {
        self.checked_add(rhs).expect("variable environments differ")
    }
}

impl<C: Scalar> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.checked_sub(rhs).expect("variable environments differ")
    }
}

impl<C: Scalar> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.checked_mul(rhs).expect("variable environments differ")
    }
}

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        self.scale(&-C::one())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<C: Scalar> $tr for Polynomial<C> {
            type Output = Polynomial<C>;

            fn $m(self, rhs: Self) -> Polynomial<C> {
                (&self).$m(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl<C: Scalar> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&io::to_text(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = Polynomial<BigRational>;

    fn v(env: &Arc<VarEnv>, name: &str) -> Q {
        Q::var_named(env, name).unwrap()
    }

    fn c(env: &Arc<VarEnv>, k: i64) -> Q {
        Q::from_i64(env, k)
    }

    #[test]
    fn lex_order() {
        let env = VarEnv::xy(2, 2);
        let y2 = Monomial::var(4, 1, 5);
        let x1 = Monomial::var(4, 2, 1);
        assert!(y2 < x1);
        let p = &v(&env, "y2").pow(5) + &v(&env, "x1");
        assert_eq!(p.leading().unwrap().0, &x1);
    }

    #[test]
    fn ring_axioms() {
        let env = VarEnv::xy(2, 2);
        let a = &v(&env, "x1") - &v(&env, "y2");
        let b = &(&v(&env, "x2") * &v(&env, "y1")) + &c(&env, 3);
        let z = Q::zero(&env);
        assert_eq!(&a + &z, a);
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&(&a + &b) * &a, &(&a * &a) + &(&b * &a));
        assert!((&a - &a).is_zero());
        assert_eq!(a.pow(2).dim(), Some(4));
    }

    #[test]
    fn env_mismatch_is_an_error() {
        let a = v(&VarEnv::xy(2, 2), "x1");
        let b = v(&VarEnv::xy(3, 2), "x1");
        assert!(matches!(a.checked_add(&b), Err(Error::EnvMismatch)));
    }

    #[test]
    fn permute_y_block() {
        let env = VarEnv::xy(2, 2);
        let f = &v(&env, "y1") - &v(&env, "y2");
        let r = Permutation::simple(2, 1).unwrap();
        assert_eq!(f.permute_block(&r, &[0, 1]).unwrap(), -&f);
    }

    #[test]
    fn substitutions() {
        let env = VarEnv::xy(3, 3);
        let mut top = Q::one(&env);
        for i in 1..=3 {
            for j in 1..=3 {
                if i + j <= 3 {
                    top = &top * &(&v(&env, &format!("x{i}")) - &v(&env, &format!("y{j}")));
                }
            }
        }
        let ys: Vec<usize> = (0..3).collect();
        let expect = &v(&env, "x1").pow(2) * &v(&env, "x2");
        assert_eq!(top.substitute_zero(&ys), expect);
        let f = &v(&env, "y1").pow(2) + &v(&env, "x1");
        let g = f.substitute(env.expect("y1"), &(&v(&env, "x2") + &c(&env, 1))).unwrap();
        let sq = (&v(&env, "x2") + &c(&env, 1)).pow(2);
        assert_eq!(g, &sq + &v(&env, "x1"));
    }

    #[test]
    fn synthetic_division() {
        let env = VarEnv::xy(3, 0);
        let (y1, y2, y3) = (v(&env, "y1"), v(&env, "y2"), v(&env, "y3"));
        let q = &(&y1.pow(3) * &y3) + &(&y2 * &c(&env, 5));
        let f = &q * &(&y1 - &y2);
        assert_eq!(f.div_by_difference(0, 1).unwrap(), q);
        assert!(y1.div_by_difference(0, 1).is_none());
        assert!(c(&env, 1).div_by_difference(0, 1).is_none());
    }

    #[test]
    fn exact_division() {
        let env = VarEnv::h(4);
        let (h1, h2) = (v(&env, "h1"), v(&env, "h2"));
        let a = &h1.pow(2) - &h2;
        let b = &h2 + &h1.scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!((&a * &b).div_exact(&a).unwrap(), b);
        assert!((&a + &c(&env, 1)).div_exact(&b).is_none());
    }

    #[test]
    fn grading_of_h() {
        let env = VarEnv::h(4);
        let f = &v(&env, "h1") * &v(&env, "h3");
        assert_eq!(f.dim(), Some(8));
        assert_eq!(f.degree(), 2);
    }

    #[test]
    fn coefficient_extraction() {
        let env = VarEnv::xy(1, 3);
        let f = &(&v(&env, "x2") * &v(&env, "y1")) + &(&v(&env, "x2").pow(2) * &v(&env, "x1"));
        let got = f.coefficient_of(&[(env.expect("x2"), 1), (env.expect("x3"), 0)]);
        assert_eq!(got, v(&env, "y1"));
    }
}
