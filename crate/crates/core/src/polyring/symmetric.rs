use std::sync::Arc;

use super::{Monomial, Polynomial, VarEnv};
use crate::scalar::Scalar;

/// Elementary symmetric polynomial `e_d` in the listed variables.
pub fn elementary<C: Scalar>(env: &Arc<VarEnv>, vars: &[usize], d: usize) -> Polynomial<C> {
    let mut out = Polynomial::zero(env);
    if d > vars.len() {
        return out;
    }
    let mut pick = Vec::with_capacity(d);
    subsets(vars, d, 0, &mut pick, &mut |chosen| {
        let mut m = Monomial::one(env.len());
        for &v in chosen {
            m.0[v] += 1;
        }
        out.add_term(m, C::one());
    });
    out
}

fn subsets(vars: &[usize], d: usize, start: usize, pick: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if pick.len() == d {
        f(pick);
        return;
    }
    for k in start..vars.len() {
        pick.push(vars[k]);
        subsets(vars, d, k + 1, pick, f);
        pick.pop();
    }
}

/// Complete homogeneous symmetric polynomial `h_d` in the listed variables.
pub fn complete<C: Scalar>(env: &Arc<VarEnv>, vars: &[usize], d: usize) -> Polynomial<C> {
    let mut out = Polynomial::zero(env);
    let mut m = Monomial::one(env.len());
    multisets(vars, d, &mut m, &mut |m| out.add_term(m.clone(), C::one()));
    out
}

fn multisets(vars: &[usize], d: usize, m: &mut Monomial, f: &mut impl FnMut(&Monomial)) {
    if d == 0 {
        f(m);
        return;
    }
    let Some((&first, rest)) = vars.split_first() else {
        return;
    };
    for e in (0..=d).rev() {
        m.0[first] += e as u16;
        if e == d {
            f(m);
        } else {
            multisets(rest, d - e, m, f);
        }
        m.0[first] -= e as u16;
    }
}

/// `prod_j (v - w_j)` over the listed `w_j`.
pub fn prod_linear<C: Scalar>(env: &Arc<VarEnv>, v: usize, ws: &[usize]) -> Polynomial<C> {
    let x = Polynomial::var(env, v);
    ws.iter().fold(Polynomial::one(env), |acc, &w| &acc * &(&x - &Polynomial::var(env, w)))
}
