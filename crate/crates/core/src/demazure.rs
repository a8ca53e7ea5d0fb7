//! Divided difference operators and Schubert polynomials of the flag variety.
//!
//! `del f = (f - r f) / (v_i - v_j)` where `r` swaps `v_i` and `v_j`. The
//! signed variant carries an extra minus sign and is used for the left
//! recurrence on `y`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::{Polynomial, PresetName, QuotientPreset, VarEnv};
use crate::scalar::Scalar;
use crate::weyl::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    fn prefix(self) -> char {
        match self {
            Axis::X => 'x',
            Axis::Y => 'y',
        }
    }

    /// Variable indices of `v1..vn` in an environment.
    pub fn block(self, env: &VarEnv, n: usize) -> Result<Vec<usize>> {
        (1..=n).map(|i| var_index(env, self, i)).collect()
    }
}

fn var_index(env: &VarEnv, axis: Axis, i: usize) -> Result<usize> {
    let name = format!("{}{i}", axis.prefix());
    env.index(&name).ok_or_else(|| Error::Precondition(format!("no variable {name}")))
}

/// The operator for the root `v_i - v_j` on one block of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DividedDiffSpec {
    pub axis: Axis,
    pub i: usize,
    pub j: usize,
    pub signed: bool,
}

impl DividedDiffSpec {
    pub fn new(axis: Axis, i: usize, j: usize, signed: bool) -> Result<Self> {
        if i == j || i == 0 || j == 0 {
            return Err(Error::Precondition(format!("invalid root ({i}, {j})")));
        }
        Ok(Self { axis, i, j, signed })
    }

    /// Simple root `v_i - v_{i+1}`.
    pub fn simple(axis: Axis, i: usize, signed: bool) -> Self {
        Self { axis, i, j: i + 1, signed }
    }
}

pub fn divided_diff<C: Scalar>(f: &Polynomial<C>, spec: DividedDiffSpec) -> Result<Polynomial<C>> {
    let vi = var_index(f.env(), spec.axis, spec.i)?;
    let vj = var_index(f.env(), spec.axis, spec.j)?;
    let num = f - &f.swap_vars(vi, vj);
    let q = num.div_by_difference(vi, vj).unwrap_or_else(|| panic!("internal error: inexact division by {:?}", spec));
    Ok(if spec.signed { -&q } else { q })
}

/// `del_{i_1} ... del_{i_k} f` for the word `[i_1, ..., i_k]`; the last letter acts first.
pub fn demazure_letters<C: Scalar>(
    f: &Polynomial<C>,
    letters: &[usize],
    axis: Axis,
    signed: bool,
) -> Result<Polynomial<C>> {
    let mut g = f.clone();
    for &i in letters.iter().rev() {
        g = divided_diff(&g, DividedDiffSpec::simple(axis, i, signed))?;
    }
    Ok(g)
}

/// `del_w f` along the canonical reduced word of `w`.
pub fn demazure_word<C: Scalar>(f: &Polynomial<C>, w: &Permutation, axis: Axis, signed: bool) -> Result<Polynomial<C>> {
    demazure_letters(f, &w.reduced_word(), axis, signed)
}

/// Environment `y1..yn, x1..xn` of the flag variety.
pub fn flag_env(n: usize) -> Arc<VarEnv> {
    VarEnv::xy(n, n)
}

/// `prod_{i + j <= n} (x_i - y_j)`.
pub fn top_class<C: Scalar>(n: usize) -> Polynomial<C> {
    let env = flag_env(n);
    let mut out = Polynomial::one(&env);
    for i in 1..n {
        let x = Polynomial::var(&env, n + i - 1);
        for j in 1..=n - i {
            out = &out * &(&x - &Polynomial::var(&env, j - 1));
        }
    }
    out
}

/// Double Schubert polynomial by the right recurrence from the top class.
pub fn double_schubert<C: Scalar>(w: &Permutation) -> Polynomial<C> {
    let n = w.n();
    let u = w.inverse().compose(&Permutation::longest(n)).expect("same size");
    demazure_word(&top_class(n), &u, Axis::X, false).expect("flag environment")
}

/// Double Schubert polynomial by the signed left recurrence on `y`.
pub fn double_schubert_left<C: Scalar>(w: &Permutation) -> Polynomial<C> {
    let n = w.n();
    let u = w.compose(&Permutation::longest(n)).expect("same size");
    demazure_word(&top_class(n), &u, Axis::Y, true).expect("flag environment")
}

pub fn single_schubert<C: Scalar>(w: &Permutation) -> Polynomial<C> {
    let f = double_schubert::<C>(w);
    let ys: Vec<usize> = (0..w.n()).collect();
    f.substitute_zero(&ys)
}

/// `S_{w0}(x, w*(y))`, with `f(x, w(y))` meaning `y_j -> y_{w(j)}`.
pub fn fixed_point_class<C: Scalar>(w: &Permutation) -> Polynomial<C> {
    let n = w.n();
    let top = top_class::<C>(n);
    let ys = Axis::Y.block(top.env(), n).expect("flag environment");
    top.permute_block(&w.star_dual(), &ys).expect("matching size")
}

/// `(-1)^l(w) S_{w0}(w^-1(x), y)`; agrees with [`fixed_point_class`] modulo `J(n)`.
pub fn fixed_point_class_alt<C: Scalar>(w: &Permutation) -> Polynomial<C> {
    let n = w.n();
    let top = top_class::<C>(n);
    let xs = Axis::X.block(top.env(), n).expect("flag environment");
    let f = top.permute_block(&w.inverse(), &xs).expect("matching size");
    if w.length() % 2 == 1 {
        -&f
    } else {
        f
    }
}

/// `prod_{j != n-i} (x1 - y_j)` in the environment of `Jpi(n)`.
pub fn projective_point_class<C: Scalar>(n: usize, i: usize) -> Result<Polynomial<C>> {
    let preset = QuotientPreset::<C>::new(PresetName::Jpi(n))?;
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, min: 0, max: n - 1 });
    }
    let env = preset.env();
    let x = Polynomial::var(env, n);
    let mut out = Polynomial::one(env);
    for j in (1..=n).filter(|&j| j != n - i) {
        out = &out * &(&x - &Polynomial::var(env, j - 1));
    }
    Ok(out)
}

/// Push-forward to projective space by coefficient extraction: the
/// coefficient of `x2^{n-2} x3^{n-3} ... x_{n-1}` in the normal form modulo `J(n)`,
/// reduced modulo `Jpi(n)`.
pub fn gysin_pi_star<C: Scalar>(f: &Polynomial<C>) -> Result<Polynomial<C>> {
    let n = f.env().len() / 2;
    let flag = QuotientPreset::<C>::new(PresetName::J(n))?;
    if f.env() != flag.env() {
        return Err(Error::EnvMismatch);
    }
    let proj = QuotientPreset::<C>::new(PresetName::Jpi(n))?;
    let g = flag.normal_form(f);
    let pattern: Vec<(usize, u16)> = (2..=n).map(|k| (n + k - 1, (n - k) as u16)).collect();
    let c = g.coefficient_of(&pattern);
    Ok(proj.normal_form(&c.embed_by_name(proj.env())?))
}

/// Push-forward as the divided difference of the longest element fixing
/// the first fundamental weight, reduced modulo `J(n)`.
pub fn gysin_via_demazure<C: Scalar>(f: &Polynomial<C>) -> Result<Polynomial<C>> {
    let n = f.env().len() / 2;
    let flag = QuotientPreset::<C>::new(PresetName::J(n))?;
    let w = Permutation::longest_parabolic(n, 1)?;
    Ok(flag.normal_form(&demazure_word(f, &w, Axis::X, false)?))
}
