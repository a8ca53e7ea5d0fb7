//! The fixed Gröbner bases of the flag variety and projective space
//! presentations, and reduction modulo them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{complete, elementary, Monomial, Polynomial, VarEnv};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PresetName {
    /// Equivariant cohomology of the flag variety, variables `y1..yn, x1..xn`.
    J(usize),
    /// Ordinary cohomology of the flag variety, variables `x1..xn`.
    J0(usize),
    /// Equivariant cohomology of projective space, variables `y1..yn, x1`.
    Jpi(usize),
    /// Ordinary cohomology of projective space, variable `x1`.
    Jpi0(usize),
    /// `m` copies of projective space, variables `y1..yn, x1..xm`.
    JpiMulti(usize, usize),
    /// `m` copies, non-equivariant, variables `x1..xm`.
    Jpi0Multi(usize, usize),
}

impl fmt::Display for PresetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::J(n) => write!(f, "J({n})"),
            Self::J0(n) => write!(f, "J0({n})"),
            Self::Jpi(n) => write!(f, "Jpi({n})"),
            Self::Jpi0(n) => write!(f, "Jpi0({n})"),
            Self::JpiMulti(n, m) => write!(f, "JpiMulti({n},{m})"),
            Self::Jpi0Multi(n, m) => write!(f, "Jpi0Multi({n},{m})"),
        }
    }
}

/// A polynomial ring with a fixed generating set, reduced by multivariate division.
#[derive(Clone, Debug)]
pub struct QuotientPreset<C> {
    name: PresetName,
    env: Arc<VarEnv>,
    generators: Vec<Polynomial<C>>,
    order: Vec<usize>,
}

impl<C: Scalar> QuotientPreset<C> {
    pub fn new(name: PresetName) -> Result<Self> {
        let (n, m) = match name {
            PresetName::J(n) | PresetName::J0(n) | PresetName::Jpi(n) | PresetName::Jpi0(n) => (n, 1),
            PresetName::JpiMulti(n, m) | PresetName::Jpi0Multi(n, m) => (n, m),
        };
        if n < 2 {
            return Err(Error::Precondition(format!("{name}: n must be at least 2")));
        }
        if m < 1 {
            return Err(Error::Precondition(format!("{name}: m must be at least 1")));
        }
        let (env, gens) = match name {
            PresetName::J(n) => flag(n, true),
            PresetName::J0(n) => flag(n, false),
            PresetName::Jpi(n) => projective(n, 1, true),
            PresetName::Jpi0(n) => projective(n, 1, false),
            PresetName::JpiMulti(n, m) => projective(n, m, true),
            PresetName::Jpi0Multi(n, m) => projective(n, m, false),
        };
        Self::from_generators(name, env, gens)
    }

    fn from_generators(name: PresetName, env: Arc<VarEnv>, generators: Vec<Polynomial<C>>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            match g.leading() {
                Some((_, c)) if c.is_unit() => {}
                _ => return Err(Error::NonUnitLeading(i)),
            }
        }
        let mut order: Vec<usize> = (0..generators.len()).collect();
        order.sort_by(|&a, &b| {
            let la = generators[a].leading().unwrap().0;
            let lb = generators[b].leading().unwrap().0;
            la.cmp(lb).then(a.cmp(&b))
        });
        Ok(Self { name, env, generators, order })
    }

    pub fn name(&self) -> PresetName {
        self.name
    }

    pub fn env(&self) -> &Arc<VarEnv> {
        &self.env
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().map(|g| g.leading().unwrap().0.clone()).collect()
    }

    /// Remainder of multivariate division. At each step the leading term is
    /// reduced by the generator with the smallest dividing leading term.
    pub fn normal_form(&self, f: &Polynomial<C>) -> Polynomial<C> {
        assert!(f.env() == &self.env, "polynomial is not in the {} environment", self.name);
        let mut p = f.terms_map().clone();
        let mut r = BTreeMap::new();
        let leads: Vec<(&Monomial, bool)> = self
            .generators
            .iter()
            .map(|g| {
                let (m, c) = g.leading().unwrap();
                (m, c.is_one())
            })
            .collect();
        while let Some((m, c)) = p.pop_last() {
            let Some(&g) = self.order.iter().find(|&&g| leads[g].0.divides(&m)) else {
                r.insert(m, c);
                continue;
            };
            let t = m.div(leads[g].0);
            let factor = if leads[g].1 { c } else { -c };
            for (gm, gc) in self.generators[g].terms_map().iter().rev().skip(1) {
                let key = gm.mul(&t);
                let delta = gc.mul_ref(&factor);
                match p.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        e.get_mut().sub_assign_ref(&delta);
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
        }
        Polynomial::from_map(&self.env, r)
    }

    pub fn contains(&self, f: &Polynomial<C>) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn s_polynomial(&self, i: usize, j: usize) -> Polynomial<C> {
        let (gi, gj) = (&self.generators[i], &self.generators[j]);
        let (mi, ci) = gi.leading().unwrap();
        let (mj, cj) = gj.leading().unwrap();
        let l = mi.lcm(mj);
        // leading coefficients are units, so c^{-1} = c
        let a = gi.mul_monomial(&l.div(mi), ci);
        let b = gj.mul_monomial(&l.div(mj), cj);
        &a - &b
    }

    /// Pairs whose S-polynomial does not reduce to zero.
    pub fn buchberger_failures(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                if !self.contains(&self.s_polynomial(i, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

fn flag<C: Scalar>(n: usize, equivariant: bool) -> (Arc<VarEnv>, Vec<Polynomial<C>>) {
    let ny = if equivariant { n } else { 0 };
    let env = VarEnv::xy(ny, n);
    let ys: Vec<usize> = (0..ny).collect();
    let x_upto = |i: usize| (ny..ny + i).collect::<Vec<usize>>();
    let mut gens = Vec::new();
    if equivariant {
        gens.push(complete(&env, &x_upto(n), 1));
        gens.push(elementary(&env, &ys, 1));
        for d in 1..=n {
            let xs = x_upto(n + 1 - d);
            let mut g = Polynomial::zero(&env);
            for i in 0..=d {
                let t = &complete::<C>(&env, &xs, d - i) * &elementary(&env, &ys, i);
                g = if i % 2 == 0 { &g + &t } else { &g - &t };
            }
            gens.push(g);
        }
    } else {
        for d in 1..=n {
            gens.push(complete(&env, &x_upto(n + 1 - d), d));
        }
    }
    (env, gens)
}

fn projective<C: Scalar>(n: usize, m: usize, equivariant: bool) -> (Arc<VarEnv>, Vec<Polynomial<C>>) {
    let ny = if equivariant { n } else { 0 };
    let env = VarEnv::xy(ny, m);
    let ys: Vec<usize> = (0..ny).collect();
    let mut gens = Vec::new();
    if equivariant {
        gens.push(elementary(&env, &ys, 1));
    }
    for k in 0..m {
        let x = ny + k;
        if equivariant {
            let mut g = Polynomial::zero(&env);
            for j in 0..=n {
                let t = &Polynomial::monomial(&env, Monomial::var(env.len(), x, j as u16), C::one())
                    * &elementary(&env, &ys, n - j);
                g = if (n - j).is_multiple_of(2) { &g + &t } else { &g - &t };
            }
            gens.push(g);
        } else {
            gens.push(Polynomial::monomial(&env, Monomial::var(env.len(), x, n as u16), C::one()));
        }
    }
    (env, gens)
}
