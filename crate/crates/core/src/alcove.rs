//! Alcove geometry for an arbitrary finite irreducible root system and the
//! maximal antidominant translation factor `lambda = floor(x^{-1}(eps))`.
//!
//! Coweights are written in fundamental coweight coordinates, so
//! `<alpha_i, p> = p_i`. The Cartan matrix is `a_ij = <alpha_i^vee, alpha_j>`.
//! An [`AffineTransform`] `(L, lambda)` acts by `mu -> L(mu + lambda)`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<i64>>;

const MAX_RANK: usize = 8;
const MAX_POSITIVE_ROOTS: usize = 200;
/// Largest coefficient of a root in finite type (E8).
const MAX_ROOT_COEFF: i64 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            Self::A(n) | Self::B(n) | Self::C(n) | Self::D(n) | Self::E(n) => n,
            Self::F4 => 4,
            Self::G2 => 2,
        }
    }

    /// Bourbaki labelling.
    pub fn cartan_matrix(self) -> Matrix {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i - 1][j - 1] = aij;
            a[j - 1][i - 1] = aji;
        };
        match self {
            Self::A(n) => (1..n).for_each(|i| link(i, i + 1, -1, -1)),
            Self::B(n) => {
                (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 1, n, -1, -2);
            }
            Self::C(n) => {
                (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 1, n, -2, -1);
            }
            Self::D(n) => {
                (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n, -1, -1);
            }
            Self::E(n) => {
                link(1, 3, -1, -1);
                (3..n).for_each(|i| link(i, i + 1, -1, -1));
                link(2, 4, -1, -1);
            }
            Self::F4 => {
                link(1, 2, -1, -1);
                link(2, 3, -1, -2);
                link(3, 4, -1, -1);
            }
            Self::G2 => link(1, 2, -3, -1),
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::A(n) => write!(f, "A{n}"),
            Self::B(n) => write!(f, "B{n}"),
            Self::C(n) => write!(f, "C{n}"),
            Self::D(n) => write!(f, "D{n}"),
            Self::E(n) => write!(f, "E{n}"),
            Self::F4 => f.write_str("F4"),
            Self::G2 => f.write_str("G2"),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown Cartan type {s:?}"));
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let t = match (letter, n) {
            ('A', 1..) => Self::A(n),
            ('B', 2..) => Self::B(n),
            ('C', 2..) => Self::C(n),
            ('D', 4..) => Self::D(n),
            ('E', 6..=8) => Self::E(n),
            ('F', 4) => Self::F4,
            ('G', 2) => Self::G2,
            _ => return Err(bad()),
        };
        if t.rank() > MAX_RANK {
            return Err(Error::Precondition(format!("rank {} exceeds {MAX_RANK}", t.rank())));
        }
        Ok(t)
    }
}

/// A finite root system built from its Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    cartan: Matrix,
    /// Positive roots in simple-root coordinates, sorted by height then lexicographically.
    positive_roots: Vec<Vec<i64>>,
    /// Matching coroots in simple-coroot coordinates.
    positive_coroots: Vec<Vec<i64>>,
    theta: usize,
}

impl RootSystem {
    pub fn new(cartan: Matrix) -> Result<Self> {
        let n = cartan.len();
        if n == 0 || n > MAX_RANK {
            return Err(Error::Precondition(format!("rank must be in 1..={MAX_RANK}")));
        }
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != n {
                return Err(Error::SizeMismatch { expected: n, found: row.len() });
            }
            if row[i] != 2 {
                return Err(Error::NotFiniteType);
            }
            for j in (0..n).filter(|&j| j != i) {
                if row[j] > 0 || row[j] < -3 || (row[j] == 0) != (cartan[j][i] == 0) {
                    return Err(Error::NotFiniteType);
                }
            }
        }
        let unit = |i: usize| (0..n).map(|j| i64::from(i == j)).collect::<Vec<i64>>();
        let mut roots: Vec<(Vec<i64>, Vec<i64>)> = (0..n).map(|i| (unit(i), unit(i))).collect();
        let mut seen: HashSet<Vec<i64>> = roots.iter().map(|r| r.0.clone()).collect();
        let mut queue: VecDeque<usize> = (0..n).collect();
        while let Some(k) = queue.pop_front() {
            let (beta, coroot) = roots[k].clone();
            for i in 0..n {
                let pair: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                if pair == 0 || beta == unit(i) {
                    continue;
                }
                let mut b = beta.clone();
                b[i] -= pair;
                if b[i] > MAX_ROOT_COEFF {
                    return Err(Error::NotFiniteType);
                }
                if b.iter().any(|&c| c < 0) || !seen.insert(b.clone()) {
                    continue;
                }
                let copair: i64 = (0..n).map(|j| coroot[j] * cartan[j][i]).sum();
                let mut d = coroot.clone();
                d[i] -= copair;
                roots.push((b, d));
                queue.push_back(roots.len() - 1);
                if roots.len() > MAX_POSITIVE_ROOTS {
                    return Err(Error::NotFiniteType);
                }
            }
        }
        roots.sort_by(|a, b| height(&a.0).cmp(&height(&b.0)).then(a.0.cmp(&b.0)));
        let theta = roots.len() - 1;
        if roots.iter().filter(|r| height(&r.0) == height(&roots[theta].0)).count() != 1 {
            return Err(Error::NotFiniteType);
        }
        let (positive_roots, positive_coroots) = roots.into_iter().unzip();
        Ok(Self { cartan, positive_roots, positive_coroots, theta })
    }

    pub fn of_type(t: CartanType) -> Self {
        Self::new(t.cartan_matrix()).expect("finite type")
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &Matrix {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    /// Coefficients `c_i` of the highest root `theta = sum c_i alpha_i`.
    pub fn theta(&self) -> &[i64] {
        &self.positive_roots[self.theta]
    }

    /// A coroot given in simple-coroot coordinates, rewritten in fundamental coweight coordinates.
    pub fn coroot_to_coweight(&self, d: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n).map(|k| (0..n).map(|j| d[j] * self.cartan[j][k]).sum()).collect()
    }

    /// `theta^vee` in fundamental coweight coordinates.
    pub fn theta_coroot(&self) -> Vec<i64> {
        self.coroot_to_coweight(&self.positive_coroots[self.theta])
    }

    /// Matrix of the simple reflection `s_i` (1-based) on coweights.
    pub fn reflection(&self, i: usize) -> Result<Matrix> {
        let n = self.rank();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, min: 1, max: n });
        }
        let mut m = identity(n);
        for (j, row) in m.iter_mut().enumerate() {
            row[i - 1] -= self.cartan[i - 1][j];
        }
        Ok(m)
    }

    /// Matrix of `r_theta`.
    pub fn theta_reflection(&self) -> Matrix {
        let n = self.rank();
        let tv = self.theta_coroot();
        let c = self.theta();
        let mut m = identity(n);
        for j in 0..n {
            for k in 0..n {
                m[j][k] -= tv[j] * c[k];
            }
        }
        m
    }

    /// `<alpha, p>` for a root in simple-root coordinates.
    pub fn pair(&self, alpha: &[i64], p: &[BigRational]) -> BigRational {
        alpha.iter().zip(p).map(|(&a, x)| x * BigRational::from_integer(a.into())).sum()
    }

    /// Index of the coweight lattice over the coroot lattice.
    pub fn connection_index(&self) -> i64 {
        determinant(&self.cartan)
    }
}

fn height(r: &[i64]) -> i64 {
    r.iter().sum()
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn mat_vec(a: &Matrix, v: &[i64]) -> Vec<i64> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

fn mat_vec_q(a: &Matrix, v: &[BigRational]) -> Vec<BigRational> {
    a.iter().map(|row| row.iter().zip(v).map(|(&x, y)| y * BigRational::from_integer(x.into())).sum()).collect()
}

#[allow(clippy::needless_range_loop)]
fn determinant(a: &Matrix) -> i64 {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> =
        a.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else { return 0 };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c].clone();
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let d = &m[c][k] * &f;
                m[r][k] -= d;
            }
        }
    }
    det.to_integer().try_into().expect("small determinant")
}

/// An element `mu -> L(mu + lambda)` of the extended affine Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineTransform {
    linear: Matrix,
    inverse: Matrix,
    translate: Vec<i64>,
}

impl AffineTransform {
    pub fn identity(rank: usize) -> Self {
        Self { linear: identity(rank), inverse: identity(rank), translate: vec![0; rank] }
    }

    pub fn translation(lambda: &[i64]) -> Self {
        let mut t = Self::identity(lambda.len());
        t.translate = lambda.to_vec();
        t
    }

    /// `s_i` for `i >= 1`, and `s_0 = t_{theta^vee} r_theta = r_theta t_{-theta^vee}`.
    pub fn simple(rs: &RootSystem, i: usize) -> Result<Self> {
        if i == 0 {
            let r = rs.theta_reflection();
            let translate = rs.theta_coroot().iter().map(|v| -v).collect();
            return Ok(Self { linear: r.clone(), inverse: r, translate });
        }
        let r = rs.reflection(i)?;
        Ok(Self { linear: r.clone(), inverse: r, translate: vec![0; rs.rank()] })
    }

    pub fn rank(&self) -> usize {
        self.translate.len()
    }

    pub fn linear(&self) -> &Matrix {
        &self.linear
    }

    pub fn translate(&self) -> &[i64] {
        &self.translate
    }

    pub fn compose(&self, other: &Self) -> Self {
        let shifted = mat_vec(&other.inverse, &self.translate);
        Self {
            linear: mat_mul(&self.linear, &other.linear),
            inverse: mat_mul(&other.inverse, &self.inverse),
            translate: shifted.iter().zip(&other.translate).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let t = mat_vec(&self.linear, &self.translate);
        Self { linear: self.inverse.clone(), inverse: self.linear.clone(), translate: t.iter().map(|v| -v).collect() }
    }

    pub fn apply(&self, p: &[BigRational]) -> Vec<BigRational> {
        let shifted: Vec<BigRational> =
            p.iter().zip(&self.translate).map(|(x, &t)| x + BigRational::from_integer(t.into())).collect();
        mat_vec_q(&self.linear, &shifted)
    }

    pub fn is_finite(&self) -> bool {
        self.translate.iter().all(|&t| t == 0)
    }
}

/// Composes simple reflections left to right: `[i_1, ..., i_k] -> s_{i_1} ... s_{i_k}`.
pub fn word_to_transform(word: &[usize], rs: &RootSystem) -> Result<AffineTransform> {
    let mut x = AffineTransform::identity(rs.rank());
    for &i in word {
        x = x.compose(&AffineTransform::simple(rs, i)?);
    }
    Ok(x)
}

/// Barycenter of the fundamental alcove: `(1/(n+1)) sum_j w_j^vee / c_j`.
pub fn alcove_barycenter(rs: &RootSystem) -> Vec<BigRational> {
    let n = rs.rank() as i64;
    rs.theta().iter().map(|&c| BigRational::new(BigInt::one(), BigInt::from((n + 1) * c))).collect()
}

pub fn floor_coweight(p: &[BigRational]) -> Vec<i64> {
    p.iter().map(|x| i64::try_from(x.floor().to_integer()).expect("small coordinate")).collect()
}

/// Number of affine hyperplanes separating `x(A_0)` from `A_0`.
pub fn length_by_separation(x: &AffineTransform, rs: &RootSystem) -> usize {
    let q = x.apply(&alcove_barycenter(rs));
    rs.positive_roots()
        .iter()
        .map(|a| rs.pair(a, &q).floor().to_integer().abs())
        .map(|v| usize::try_from(v).expect("small"))
        .sum()
}

/// `sum_{alpha > 0} |<lambda, alpha>|`.
pub fn translation_length(lambda: &[i64], rs: &RootSystem) -> usize {
    rs.positive_roots()
        .iter()
        .map(|a| a.iter().zip(lambda).map(|(x, y)| x * y).sum::<i64>().unsigned_abs() as usize)
        .sum()
}

/// `x` is minimal in `x W`, i.e. `x^{-1}(A_0)` lies in the dominant chamber.
pub fn is_minimal_in_coset(x: &AffineTransform, rs: &RootSystem) -> bool {
    x.inverse().apply(&alcove_barycenter(rs)).iter().all(|v| v.is_positive())
}

/// A factorization `x = y t_{-lambda}` with lengths adding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub lambda: Vec<i64>,
    pub y: AffineTransform,
}

/// The maximal dominant `lambda` with `x = y t_{-lambda}` reduced, as `floor(x^{-1}(eps))`.
pub fn max_antidominant_factor(x: &AffineTransform, rs: &RootSystem) -> Result<Factorization> {
    if !is_minimal_in_coset(x, rs) {
        return Err(Error::Precondition("x is not minimal in its coset xW".into()));
    }
    let lambda = floor_coweight(&x.inverse().apply(&alcove_barycenter(rs)));
    let y = x.compose(&AffineTransform::translation(&lambda));
    let neg: Vec<i64> = lambda.iter().map(|v| -v).collect();
    if length_by_separation(x, rs) != length_by_separation(&y, rs) + translation_length(&neg, rs) {
        return Err(Error::Precondition("lengths do not add".into()));
    }
    Ok(Factorization { lambda, y })
}

/// The `lambda` with `y(A_0)` inside the box `B_lambda`.
pub fn box_membership(y: &AffineTransform, rs: &RootSystem) -> Vec<i64> {
    floor_coweight(&y.apply(&alcove_barycenter(rs)))
}

/// Elements of the affine Weyl group of length at most `max_len`, with lengths, in BFS order.
pub fn enumerate_affine(rs: &RootSystem, max_len: usize) -> Vec<(AffineTransform, usize)> {
    bfs(rs, max_len, 0)
}

/// Elements of the finite Weyl group up to length `max_len`.
pub fn enumerate_finite(rs: &RootSystem, max_len: usize) -> Vec<(AffineTransform, usize)> {
    bfs(rs, max_len, 1)
}

fn bfs(rs: &RootSystem, max_len: usize, first: usize) -> Vec<(AffineTransform, usize)> {
    let gens: Vec<AffineTransform> =
        (first..=rs.rank()).map(|i| AffineTransform::simple(rs, i).expect("in range")).collect();
    let start = AffineTransform::identity(rs.rank());
    let mut seen = HashSet::from([start.clone()]);
    let mut out = vec![(start, 0)];
    let mut k = 0;
    while k < out.len() {
        let (x, l) = out[k].clone();
        k += 1;
        if l == max_len {
            continue;
        }
        for g in &gens {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                out.push((y, l + 1));
            }
        }
    }
    out
}

/// Positive roots `alpha` with `w(alpha) < 0`, by index into [`RootSystem::positive_roots`].
pub fn inversion_set(w: &AffineTransform, rs: &RootSystem) -> Vec<usize> {
    let q = w.inverse().apply(&alcove_barycenter(rs));
    (0..rs.positive_roots().len()).filter(|&k| rs.pair(&rs.positive_roots()[k], &q).is_negative()).collect()
}
