//! Affine Schubert polynomials: homology classes of Schubert varieties in
//! the based loop group of `SU(n)`, written in `Q[h_1, ..., h_{n-1}]`.
//!
//! For `m = w_1 s_0 w_2 s_0 ... w_r s_0` the polynomial in `x~_1..x~_{rn}, y`
//! is built block by block from the right: multiply by the point classes of
//! `x~_{jn-n+2} .. x~_{jn}`, apply `del_theta`, multiply by the point class of
//! `x~_{jn-n+1}`, apply `del_{w_j}`. Setting `y = 0` and sending
//! `x~_1^{i_1} ... x~_m^{i_m}` to `h_{n-1-i_1} ... h_{n-1-i_m}` gives the
//! class in `Q[h]`.
//!
//! [`Pipeline::schubert_h`] uses a fused evaluation. Each `x~_k` enters through
//! exactly one point-class factor and divided differences in `y` are linear over
//! `x~`, so `x~_k^a -> h_{n-1-a}` can be applied as each factor is multiplied.
//! The state then lives in `Q[y, h]` and stays small. The literal evaluation in
//! the quotient by `JpiMulti(n, m)` is [`build_tilde`].

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::affine::grassmannian_elements;
use crate::affine::{group_blocks, lambda_hat, min_coset_rep, reduced_words, AffineElement, AffineWord, Coweight};
use crate::demazure::{demazure_letters, divided_diff, Axis, DividedDiffSpec};
use crate::error::{Error, Result};
use crate::polyring::{elementary, Monomial, Polynomial, PresetName, QuotientPreset, VarEnv};
use crate::scalar::{ExactField, Scalar};
use crate::weyl::{Permutation, Side};

/// Environment variable capping `m = r n`.
pub const MAX_DEGREE_VAR: &str = "LOOP_SCHUBERT_MAX_DEGREE";
pub const DEFAULT_MAX_M: usize = 24;

/// The cap on `m` from [`MAX_DEGREE_VAR`], or [`DEFAULT_MAX_M`].
pub fn max_m_from_env() -> usize {
    std::env::var(MAX_DEGREE_VAR).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_M)
}

/// `P^{(k)}_i = prod_{j != i} (x~_k - y_j)` in an environment `y1..yn, x1..xm`.
pub fn point_class<C: Scalar>(env: &Arc<VarEnv>, n: usize, k: usize, i: usize) -> Result<Polynomial<C>> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, min: 1, max: n });
    }
    let m = env.len().saturating_sub(n);
    if k == 0 || k > m {
        return Err(Error::IndexOutOfRange { index: k, min: 1, max: m });
    }
    let x = Polynomial::var(env, n + k - 1);
    let mut out = Polynomial::one(env);
    for j in (1..=n).filter(|&j| j != i) {
        out = &out * &(&x - &Polynomial::var(env, j - 1));
    }
    Ok(out)
}

/// `P^{[a+1, a+n-1]} = P^{(a+1)}_{n-1} P^{(a+2)}_{n-2} ... P^{(a+n-1)}_1`.
pub fn point_interval<C: Scalar>(env: &Arc<VarEnv>, n: usize, a: usize) -> Result<Polynomial<C>> {
    let mut out = Polynomial::one(env);
    for t in 1..n {
        out = &out * &point_class(env, n, a + t, n - t)?;
    }
    Ok(out)
}

fn theta(n: usize) -> DividedDiffSpec {
    DividedDiffSpec { axis: Axis::Y, i: 1, j: n, signed: false }
}

fn orientation(blocks: &[Permutation]) -> bool {
    blocks.iter().map(Permutation::length).sum::<usize>() % 2 == 1
}

/// The polynomial `S~(x~, y)` reduced modulo `JpiMulti(n, rn)`, with
/// reduction after every multiplication and divided difference.
pub fn build_tilde<C: Scalar>(blocks: &[Permutation], n: usize) -> Result<Polynomial<C>> {
    let m = blocks.len() * n;
    if m == 0 {
        return Ok(Polynomial::one(&VarEnv::xy(n, 0)));
    }
    let ideal = QuotientPreset::<C>::new(PresetName::JpiMulti(n, m))?;
    let env = ideal.env().clone();
    let mut f = Polynomial::one(&env);
    for (idx, w) in blocks.iter().enumerate().rev() {
        if w.n() != n {
            return Err(Error::SizeMismatch { expected: n, found: w.n() });
        }
        let a = idx * n;
        f = ideal.normal_form(&(&f * &point_interval(&env, n, a + 1)?));
        f = ideal.normal_form(&divided_diff(&f, theta(n))?);
        f = ideal.normal_form(&(&f * &point_class(&env, n, a + 1, n)?));
        f = ideal.normal_form(&demazure_letters(&f, &w.reduced_word(), Axis::Y, false)?);
    }
    Ok(if orientation(blocks) { -&f } else { f })
}

/// `y := 0` followed by reduction modulo `x~_k^n`; the result lives in `x1..xm`.
pub fn specialize_y0<C: Scalar>(f: &Polynomial<C>, n: usize) -> Result<Polynomial<C>> {
    let env = f.env();
    let m = env.len().checked_sub(n).ok_or(Error::EnvMismatch)?;
    let target = VarEnv::x(m);
    let mut out = Polynomial::zero(&target);
    for (mono, c) in f.terms() {
        let e = mono.exps();
        if e[..n].iter().any(|&v| v > 0) || e[n..].iter().any(|&v| v as usize >= n) {
            continue;
        }
        out.add_term(Monomial::from_exps(&e[n..]), c.clone());
    }
    Ok(out)
}

/// `x~_1^{i_1} ... x~_m^{i_m} -> h_{n-1-i_1} ... h_{n-1-i_m}` with `h_0 = 1`.
pub fn sym_map<C: Scalar>(f: &Polynomial<C>, n: usize) -> Result<Polynomial<C>> {
    let henv = VarEnv::h(n);
    let mut out = Polynomial::zero(&henv);
    for (mono, c) in f.terms() {
        let mut e = vec![0u16; n - 1];
        for (k, &a) in mono.exps().iter().enumerate() {
            if a as usize >= n {
                return Err(Error::ExponentTooLarge {
                    var: f.env().names()[k].clone(),
                    exp: a as u32,
                    bound: n as u32,
                });
            }
            let d = n - 1 - a as usize;
            if d > 0 {
                e[d - 1] += 1;
            }
        }
        out.add_term(Monomial::from_exps(&e), c.clone());
    }
    Ok(out)
}

/// Environment `y1..yn, h1..h_{n-1}` of the fused evaluation.
fn fused_env(n: usize) -> Arc<VarEnv> {
    let names = (1..=n).map(|i| format!("y{i}")).chain((1..n).map(|i| format!("h{i}"))).collect();
    let weights = std::iter::repeat_n(2, n).chain((1..n).map(|i| 2 * i as u32)).collect();
    VarEnv::new(names, weights).expect("distinct names")
}

/// Image of `P^{(k)}_i` under `x~_k^a -> h_{n-1-a}`: `sum_d (-1)^d e_d(y without y_i) h_d`.
fn fused_point_class<C: Scalar>(env: &Arc<VarEnv>, n: usize, i: usize) -> Polynomial<C> {
    let ys: Vec<usize> = (0..n).filter(|&j| j != i - 1).collect();
    let mut out = Polynomial::zero(env);
    for d in 0..n {
        let mut t = elementary::<C>(env, &ys, d);
        if d > 0 {
            t = &t * &Polynomial::var(env, n + d - 1);
        }
        out = if d % 2 == 0 { &out + &t } else { &out - &t };
    }
    out
}

/// `S^_lambda` from the blocks `w_1, ..., w_r` by the fused evaluation.
pub fn schubert_from_blocks<C: Scalar>(blocks: &[Permutation], n: usize) -> Result<Polynomial<C>> {
    if n < 2 {
        return Err(Error::Precondition("n must be at least 2".into()));
    }
    let env = fused_env(n);
    let classes: Vec<Polynomial<C>> = (1..=n).map(|i| fused_point_class(&env, n, i)).collect();
    let interval = classes[..n - 1].iter().fold(Polynomial::one(&env), |acc, p| &acc * p);
    let mut f = Polynomial::one(&env);
    for w in blocks.iter().rev() {
        if w.n() != n {
            return Err(Error::SizeMismatch { expected: n, found: w.n() });
        }
        f = &f * &interval;
        f = divided_diff(&f, theta(n))?;
        f = &f * &classes[n - 1];
        f = demazure_letters(&f, &w.reduced_word(), Axis::Y, false)?;
    }
    if orientation(blocks) {
        f = -&f;
    }
    let ys: Vec<usize> = (0..n).collect();
    f.substitute_zero(&ys).embed_by_name(&VarEnv::h(n))
}

/// A reduced factorization `sigma^k w_1 s_0 ... w_r s_0` ready for evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pipeline {
    n: usize,
    word: AffineWord,
    blocks: Vec<Permutation>,
}

impl Pipeline {
    /// From a reduced word of a right-minimal element. The `sigma` power is kept
    /// for reporting and does not enter the computation.
    pub fn from_word(n: usize, word: &AffineWord) -> Result<Self> {
        let blocks = group_blocks(n, &word.letters)?;
        Ok(Self { n, word: word.clone(), blocks })
    }

    /// From `m^lambda` with its canonical reduced word.
    pub fn for_coweight(lambda: &Coweight) -> Result<Self> {
        Self::from_word(lambda.n(), &min_coset_rep(lambda).reduced_word())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &AffineWord {
        &self.word
    }

    pub fn blocks(&self) -> &[Permutation] {
        &self.blocks
    }

    pub fn r(&self) -> usize {
        self.blocks.len()
    }

    pub fn m(&self) -> usize {
        self.r() * self.n
    }

    pub fn length(&self) -> usize {
        self.word.letters.len()
    }

    pub fn check_limit(&self, max_m: usize) -> Result<()> {
        if self.m() > max_m {
            return Err(Error::TooLarge { m: self.m(), limit: max_m });
        }
        Ok(())
    }

    pub fn tilde_xy<C: Scalar>(&self) -> Result<Polynomial<C>> {
        build_tilde(&self.blocks, self.n)
    }

    pub fn tilde_x<C: Scalar>(&self) -> Result<Polynomial<C>> {
        specialize_y0(&self.tilde_xy()?, self.n)
    }

    pub fn schubert_h<C: Scalar>(&self) -> Result<Polynomial<C>> {
        schubert_from_blocks(&self.blocks, self.n)
    }

    /// `Sym` of the literal route; slower, used for cross-checks.
    pub fn schubert_h_literal<C: Scalar>(&self) -> Result<Polynomial<C>> {
        sym_map(&self.tilde_x()?, self.n)
    }
}

/// `S^_lambda`, computed for `lambda_hat`, with the size cap from the environment.
pub fn affine_schubert<C: Scalar>(lambda: &Coweight) -> Result<Polynomial<C>> {
    let p = Pipeline::for_coweight(&lambda_hat(lambda))?;
    p.check_limit(max_m_from_env())?;
    p.schubert_h()
}

/// Memoised [`affine_schubert`], keyed by `lambda_hat`. Safe to share across threads.
#[derive(Debug)]
pub struct SchubertCache<C> {
    max_m: usize,
    map: Mutex<HashMap<Coweight, Polynomial<C>>>,
}

impl<C: Scalar> SchubertCache<C> {
    pub fn new(max_m: usize) -> Self {
        Self { max_m, map: Mutex::new(HashMap::new()) }
    }

    pub fn from_env() -> Self {
        Self::new(max_m_from_env())
    }

    pub fn get(&self, lambda: &Coweight) -> Result<Polynomial<C>> {
        let hat = lambda_hat(lambda);
        if let Some(p) = self.map.lock().expect("cache lock").get(&hat) {
            return Ok(p.clone());
        }
        let pipe = Pipeline::for_coweight(&hat)?;
        pipe.check_limit(self.max_m)?;
        let p = pipe.schubert_h()?;
        self.map.lock().expect("cache lock").insert(hat, p.clone());
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.map.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Product in the Pontryagin ring, which is polynomial multiplication in `h`.
pub fn pontryagin_product<C: Scalar>(p: &Polynomial<C>, q: &Polynomial<C>) -> Result<Polynomial<C>> {
    p.checked_mul(q)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremAReport {
    pub lambda: Coweight,
    pub mu: Coweight,
    pub nu: Coweight,
    pub preconditions_hold: bool,
    /// `None` when the preconditions fail.
    pub identity_holds: Option<bool>,
}

/// Checks `S^_lambda S^_mu = S^_nu` whenever `mu` is antidominant,
/// `m^lambda t^mu` is right-minimal and lengths add.
pub fn verify_theorem_a<C: Scalar>(
    lambda: &Coweight,
    mu: &Coweight,
    cache: &SchubertCache<C>,
) -> Result<TheoremAReport> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch { expected: lambda.n(), found: mu.n() });
    }
    let ml = min_coset_rep(lambda);
    let tm = AffineElement::translation(mu);
    let x = ml.compose(&tm)?;
    let nu = x.translation_part();
    let preconditions_hold = mu.is_antidominant() && x.is_right_minimal() && ml.length() + tm.length() == x.length();
    let identity_holds = if preconditions_hold {
        let lhs = pontryagin_product(&cache.get(lambda)?, &cache.get(mu)?)?;
        Some(lhs == cache.get(&nu)?)
    } else {
        None
    };
    Ok(TheoremAReport { lambda: lambda.clone(), mu: mu.clone(), nu, preconditions_hold, identity_holds })
}

/// Antidominant coweights `mu` with `l(t^mu) <= max_len`.
pub fn antidominant_coweights(n: usize, max_len: usize) -> Vec<Coweight> {
    // l(t^mu) = sum_i c_i i (n - i) for mu = -sum c_i w_i
    let weights: Vec<usize> = (1..n).map(|i| i * (n - i)).collect();
    let mut out = Vec::new();
    let mut c = vec![0i64; n - 1];
    fn rec(k: usize, budget: usize, w: &[usize], c: &mut Vec<i64>, out: &mut Vec<Coweight>, n: usize) {
        if k == w.len() {
            out.push(Coweight::new(n, c.iter().map(|v| -v).collect()).expect("length n - 1"));
            return;
        }
        let mut used = 0;
        while used <= budget {
            c[k] = (used / w[k]) as i64;
            rec(k + 1, budget - used, w, c, out, n);
            used += w[k];
        }
        c[k] = 0;
    }
    rec(0, max_len, &weights, &mut c, &mut out, n);
    out.sort();
    out
}

/// All `(lambda, mu)` in the coweight lattice, `mu` antidominant, that satisfy the
/// hypotheses of the factorization theorem with `l(m^nu) <= max_len`.
pub fn theorem_a_pairs(n: usize, max_len: usize) -> Vec<(Coweight, Coweight)> {
    let mut out = Vec::new();
    let lambdas: Vec<Coweight> =
        crate::affine::extended_grassmannian(n, max_len).iter().map(AffineElement::translation_part).collect();
    let mus = antidominant_coweights(n, max_len);
    for lambda in &lambdas {
        let ml = min_coset_rep(lambda);
        for mu in &mus {
            let tm = AffineElement::translation(mu);
            if ml.length() + tm.length() > max_len {
                continue;
            }
            let x = ml.compose(&tm).expect("same rank");
            if x.is_right_minimal() && ml.length() + tm.length() == x.length() {
                out.push((lambda.clone(), mu.clone()));
            }
        }
    }
    out
}

/// Runs the pipeline on up to `cap` reduced words of `m^{lambda_hat}` and
/// reports whether all outputs agree.
pub fn word_independence_check<C: Scalar>(lambda: &Coweight, cap: usize) -> Result<bool> {
    let n = lambda.n();
    let v = min_coset_rep(&lambda_hat(lambda));
    let mut first: Option<Polynomial<C>> = None;
    for letters in reduced_words(&v, cap) {
        let p = Pipeline::from_word(n, &AffineWord { sigma_power: 0, letters })?.schubert_h::<C>()?;
        match &first {
            None => first = Some(p),
            Some(q) if *q != p => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

/// A class whose inverse alcove lies in the fundamental box.
#[derive(Clone, Debug)]
pub struct BoxClass<C> {
    pub element: AffineElement,
    pub word: AffineWord,
    pub lambda: Coweight,
    pub schubert: Polynomial<C>,
    /// Two classes of positive dimension whose product is this one, if any.
    pub factors: Option<(Coweight, Coweight)>,
}

/// Right-minimal elements below the affine Weyl part of `m^rho` in left weak
/// order, with their classes and a factor search by exact division against all
/// classes of smaller length.
pub fn fundamental_box<C: ExactField>(n: usize) -> Result<Vec<BoxClass<C>>> {
    let top = min_coset_rep(&Coweight::rho(n)).sigma_decompose().1;
    let mut members = vec![top.clone()];
    let mut seen = std::collections::BTreeSet::from([top.clone()]);
    let mut i = 0;
    while i < members.len() {
        let v = members[i].clone();
        for d in v.descent_set(Side::Left) {
            let u = v.left_mul_simple(d);
            if seen.insert(u.clone()) {
                members.push(u);
            }
        }
        i += 1;
    }
    members.sort_by(|a, b| a.length().cmp(&b.length()).then(a.cmp(b)));
    let pool: Vec<(Coweight, usize, Polynomial<C>)> = grassmannian_elements(n, top.length())
        .into_iter()
        .map(|v| {
            let p = Pipeline::from_word(n, &v.reduced_word())?.schubert_h::<C>()?;
            Ok((v.translation_part(), v.length(), p))
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for v in members {
        let word = v.reduced_word();
        let schubert = Pipeline::from_word(n, &word)?.schubert_h::<C>()?;
        let len = v.length();
        let mut factors = None;
        'search: for (la, a_len, pa) in pool.iter().filter(|(_, l, _)| *l > 0 && *l < len) {
            let Some(q) = schubert.div_exact(pa) else { continue };
            for (lb, b_len, pb) in &pool {
                if a_len + b_len == len && *pb == q {
                    factors = Some((la.clone(), lb.clone()));
                    break 'search;
                }
            }
        }
        out.push(BoxClass { lambda: v.translation_part(), element: v, word, schubert, factors });
    }
    Ok(out)
}

/// Rank of a family of polynomials over a field, by Gaussian elimination on coefficient vectors.
#[allow(clippy::needless_range_loop)]
pub fn span_rank<C: ExactField>(polys: &[Polynomial<C>]) -> usize {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let mut rows: Vec<Vec<C>> = Vec::new();
    for p in polys {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    for p in polys {
        let mut row = vec![C::zero(); index.len()];
        for (m, c) in p.terms() {
            row[index[m]] = c.clone();
        }
        rows.push(row);
    }
    let cols = index.len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, pivot);
        let pv = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone() / pv.clone();
            for c in col..cols {
                let delta = rows[rank][c].mul_ref(&f);
                rows[r][c].sub_assign_ref(&delta);
            }
        }
        rank += 1;
    }
    rank
}

/// Number of partitions of `l` with parts at most `k`.
pub fn bounded_partitions(l: usize, k: usize) -> usize {
    let mut ways = vec![0usize; l + 1];
    ways[0] = 1;
    for part in 1..=k {
        for t in part..=l {
            ways[t] += ways[t - part];
        }
    }
    ways[l]
}

/// One graded piece in the basis check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCount {
    pub length: usize,
    /// Elements of the affine Grassmannian of this length.
    pub classes: usize,
    /// Rank of their Schubert polynomials.
    pub rank: usize,
    /// Dimension of the degree `2 length` part of `Q[h_1..h_{n-1}]`.
    pub dimension: usize,
}

/// Rank and dimension counts for every length up to `max_len`.
pub fn basis_check<C: ExactField>(n: usize, max_len: usize) -> Result<Vec<GradedCount>> {
    let elems = grassmannian_elements(n, max_len);
    let mut out = Vec::new();
    for length in 0..=max_len {
        let polys: Vec<Polynomial<C>> = elems
            .iter()
            .filter(|v| v.length() == length)
            .map(|v| Pipeline::from_word(n, &v.reduced_word())?.schubert_h())
            .collect::<Result<_>>()?;
        out.push(GradedCount {
            length,
            classes: polys.len(),
            rank: span_rank(&polys),
            dimension: bounded_partitions(length, n - 1),
        });
    }
    Ok(out)
}
