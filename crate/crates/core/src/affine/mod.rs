//! Affine and extended affine Weyl groups of type `A_{n-1}` as periodic
//! permutations of the integers.
//!
//! An element `v` is determined by its window `[v(1), ..., v(n)]` and
//! `v(i + n) = v(i) + n`. Translation by `(1, ..., 1)` is trivial in the
//! coweight lattice, so windows are normalised to have
//! `charge / n` in `0..n`, where `charge = sum(window) - n(n+1)/2`.
//! That quotient is the power of the length-zero generator `sigma`.

mod coweight;
mod enumerate;

use std::fmt;

pub use coweight::Coweight;
pub use enumerate::{extended_grassmannian, grassmannian_elements, reduced_words};

use crate::error::{Error, Result};
use crate::weyl::{Permutation, Side};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    n: usize,
    window: Vec<i64>,
}

/// A reduced expression `sigma^k s_{i_1} ... s_{i_l}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWord {
    pub sigma_power: usize,
    pub letters: Vec<usize>,
}

impl AffineElement {
    pub fn new(n: usize, window: Vec<i64>) -> Result<Self> {
        let bad = || Error::InvalidWindow(window.clone());
        if n < 2 || window.len() != n {
            return Err(bad());
        }
        let ni = n as i64;
        let mut seen = vec![false; n];
        for &v in &window {
            let r = v.rem_euclid(ni) as usize;
            if seen[r] {
                return Err(bad());
            }
            seen[r] = true;
        }
        let charge: i64 = window.iter().sum::<i64>() - ni * (ni + 1) / 2;
        if charge % ni != 0 {
            return Err(bad());
        }
        Ok(Self::normalized(n, window))
    }

    fn normalized(n: usize, mut window: Vec<i64>) -> Self {
        let ni = n as i64;
        let q = (window.iter().sum::<i64>() - ni * (ni + 1) / 2) / ni;
        let shift = (q.rem_euclid(ni) - q) / ni;
        if shift != 0 {
            for v in &mut window {
                *v += shift * ni;
            }
        }
        Self { n, window }
    }

    pub fn identity(n: usize) -> Self {
        Self { n, window: (1..=n as i64).collect() }
    }

    /// Simple reflection `s_i`, `0 <= i < n`; `s_0 = t^theta r_theta`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, min: 0, max: n - 1 });
        }
        Ok(Self::identity(n).right_mul_simple(i))
    }

    /// `sigma^k`, with `sigma s_i sigma^-1 = s_{i+1 mod n}`.
    pub fn sigma_pow(n: usize, k: i64) -> Self {
        Self::normalized(n, (1..=n as i64).map(|i| i + k).collect())
    }

    pub fn translation(lambda: &Coweight) -> Self {
        let n = lambda.n();
        let window = lambda.lift().iter().enumerate().map(|(i, l)| i as i64 + 1 + n as i64 * l).collect();
        Self::normalized(n, window)
    }

    /// The finite permutation `w` embedded in the affine group.
    pub fn from_finite(w: &Permutation) -> Self {
        Self { n: w.n(), window: w.window().iter().map(|&v| v as i64).collect() }
    }

    pub fn from_word(n: usize, word: &AffineWord) -> Result<Self> {
        let mut v = Self::sigma_pow(n, word.sigma_power as i64);
        for &i in &word.letters {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, min: 0, max: n - 1 });
            }
            v = v.right_mul_simple(i);
        }
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `v(x)` for any integer `x`.
    pub fn eval(&self, x: i64) -> i64 {
        let ni = self.n as i64;
        let r = (x - 1).rem_euclid(ni);
        self.window[r as usize] + (x - 1 - r)
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { expected: self.n, found: other.n });
        }
        Ok(Self::normalized(self.n, other.window.iter().map(|&x| self.eval(x)).collect()))
    }

    pub fn inverse(&self) -> Self {
        let ni = self.n as i64;
        let mut inv = vec![0; self.n];
        for (i, &v) in self.window.iter().enumerate() {
            let r = (v - 1).rem_euclid(ni);
            inv[r as usize] = i as i64 + 1 - (v - 1 - r);
        }
        Self::normalized(self.n, inv)
    }

    pub fn charge(&self) -> i64 {
        let ni = self.n as i64;
        self.window.iter().sum::<i64>() - ni * (ni + 1) / 2
    }

    /// The power `k` in `v = sigma^k v_hat`.
    pub fn sigma_power(&self) -> usize {
        (self.charge() / self.n as i64) as usize
    }

    /// Whether the element lies in the non-extended affine Weyl group.
    pub fn is_affine_weyl(&self) -> bool {
        self.charge() == 0
    }

    pub fn length(&self) -> usize {
        let ni = self.n as i64;
        let w = &self.window;
        let mut l = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                l += (w[j] - w[i]).div_euclid(ni).unsigned_abs() as usize;
            }
        }
        l
    }

    pub fn has_descent(&self, i: usize, side: Side) -> bool {
        match side {
            Side::Right => {
                if i == 0 {
                    self.window[self.n - 1] - self.n as i64 > self.window[0]
                } else {
                    self.window[i - 1] > self.window[i]
                }
            }
            Side::Left => self.inverse().has_descent(i, Side::Right),
        }
    }

    pub fn descent_set(&self, side: Side) -> Vec<usize> {
        let v = match side {
            Side::Right => self.clone(),
            Side::Left => self.inverse(),
        };
        (0..self.n).filter(|&i| v.has_descent(i, Side::Right)).collect()
    }

    /// `v s_i`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut w = self.window.clone();
        if i == 0 {
            let first = w[0];
            w[0] = w[self.n - 1] - self.n as i64;
            w[self.n - 1] = first + self.n as i64;
        } else {
            w.swap(i - 1, i);
        }
        Self { n: self.n, window: w }
    }

    /// `s_i v`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let ni = self.n as i64;
        let i = i as i64;
        let window = self
            .window
            .iter()
            .map(|&x| {
                let r = x.rem_euclid(ni);
                if r == i {
                    x + 1
                } else if r == (i + 1) % ni {
                    x - 1
                } else {
                    x
                }
            })
            .collect();
        Self::normalized(self.n, window)
    }

    /// No right descent among `s_1, ..., s_{n-1}`.
    pub fn is_right_minimal(&self) -> bool {
        self.window.windows(2).all(|p| p[0] < p[1])
    }

    /// `(k, v_hat)` with `v = sigma^k v_hat` and `v_hat` in the affine Weyl group.
    pub fn sigma_decompose(&self) -> (usize, Self) {
        let k = self.sigma_power();
        let hat = Self { n: self.n, window: self.window.iter().map(|&x| x - k as i64).collect() };
        (k, hat)
    }

    /// `(k, v_hat)` with `v = v_hat sigma^k`.
    pub fn sigma_decompose_right(&self) -> (usize, Self) {
        let k = self.sigma_power();
        let hat = self.compose(&Self::sigma_pow(self.n, -(k as i64))).expect("same rank");
        (k, hat)
    }

    /// The coweight `mu` with `v = t^mu w`, `w` finite.
    pub fn translation_part(&self) -> Coweight {
        let ni = self.n as i64;
        let mut mu = vec![0; self.n];
        for &e in &self.window {
            let r = (e - 1).rem_euclid(ni);
            mu[r as usize] = (e - 1 - r) / ni;
        }
        Coweight::from_lift(&mu).expect("n >= 2")
    }

    /// The finite part `w` of `v = t^mu w`.
    pub fn finite_part(&self) -> Permutation {
        let ni = self.n as i64;
        let w = self.window.iter().map(|&e| (e - 1).rem_euclid(ni) as usize + 1).collect();
        Permutation::new(w).expect("residues are distinct")
    }

    /// Reduced word: sigma power first, then smallest left descent at each step.
    pub fn reduced_word(&self) -> AffineWord {
        let (k, mut v) = self.sigma_decompose();
        let mut letters = Vec::new();
        loop {
            let inv = v.inverse();
            let Some(i) = (0..self.n).find(|&i| inv.has_descent(i, Side::Right)) else {
                break;
            };
            letters.push(i);
            v = v.left_mul_simple(i);
        }
        AffineWord { sigma_power: k, letters }
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Display for AffineWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.sigma_power {
            0 => {}
            1 => parts.push("sigma".to_string()),
            k => parts.push(format!("sigma^{k}")),
        }
        parts.extend(self.letters.iter().map(|i| format!("s{i}")));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Shortest element of the coset `t^lambda W`.
pub fn min_coset_rep(lambda: &Coweight) -> AffineElement {
    let mut v = AffineElement::translation(lambda);
    while let Some(i) = (1..v.n).find(|&i| v.has_descent(i, Side::Right)) {
        v = v.right_mul_simple(i);
    }
    v
}

/// The coroot `lambda_hat` whose minimal representative is the affine Weyl part of `m^lambda`.
pub fn lambda_hat(lambda: &Coweight) -> Coweight {
    min_coset_rep(lambda).sigma_decompose().1.translation_part()
}

/// Closed form for `lambda_hat` of the negative fundamental coweight `-w_i`.
pub fn shimozono_lambda_hat(n: usize, i: usize) -> Result<Coweight> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, min: 1, max: n - 1 });
    }
    let k = i.min(n - i);
    let mut a = vec![0i64; n - 1];
    a[i - 1] += k as i64;
    for j in 1..k {
        let c = (k - j) as i64;
        a[i - j - 1] += c;
        a[i + j - 1] += c;
    }
    Coweight::from_alpha(n, &a)
}

/// Splits a reduced word of a right-minimal element at its `s0` letters:
/// `m = w_1 s_0 w_2 s_0 ... w_r s_0`.
pub fn group_blocks(n: usize, letters: &[usize]) -> Result<Vec<Permutation>> {
    if letters.is_empty() {
        return Ok(Vec::new());
    }
    if *letters.last().unwrap() != 0 {
        return Err(Error::MissingFinalS0(letters.to_vec()));
    }
    let v = AffineElement::from_word(n, &AffineWord { sigma_power: 0, letters: letters.to_vec() })?;
    if v.length() != letters.len() {
        return Err(Error::NotReduced(letters.to_vec()));
    }
    letters[..letters.len() - 1].split(|&i| i == 0).map(|seg| Permutation::from_word(n, seg)).collect()
}

/// Weak order: right means `y = x z` with lengths adding, left means `y = z x`.
pub fn weak_order_leq(x: &AffineElement, y: &AffineElement, side: Side) -> bool {
    let rest = match side {
        Side::Right => x.inverse().compose(y),
        Side::Left => y.compose(&x.inverse()),
    };
    match rest {
        Ok(z) => x.length() + z.length() == y.length(),
        Err(_) => false,
    }
}
