//! The symmetric group `S_n` as the finite Weyl group of type A.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A permutation in one-line notation: `window[i - 1] = w(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    window: Vec<usize>,
}

/// Named elements of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Distinguished {
    Longest,
    /// Longest element fixing the i-th fundamental weight.
    LongestParabolic(usize),
    /// `s_i s_{i-1} ... s_1`.
    UCycle(usize),
    /// `w0 w w0`.
    StarDual(Permutation),
}

impl Permutation {
    pub fn new(window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidWindow(window.iter().map(|&v| v as i64).collect()));
            }
            seen[v] = true;
        }
        Ok(Self { window })
    }

    pub fn identity(n: usize) -> Self {
        Self { window: (1..=n).collect() }
    }

    /// The simple transposition `s_i`, `1 <= i < n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        check_simple(n, i)?;
        let mut w = Self::identity(n);
        w.window.swap(i - 1, i);
        Ok(w)
    }

    /// Product `s_{i_1} ... s_{i_k}` of a word of simple indices.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in word {
            check_simple(n, i)?;
            w.window.swap(i - 1, i);
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.window[i - 1]
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { expected: self.n(), found: other.n() });
        }
        Ok(Self { window: other.window.iter().map(|&j| self.window[j - 1]).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { window: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn length(&self) -> usize {
        let w = &self.window;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// Pairs `(i, j)`, `i < j`, with `w(i) > w(j)`.
    pub fn inversion_set(&self) -> Vec<(usize, usize)> {
        let w = &self.window;
        let mut out = Vec::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn has_descent(&self, i: usize, side: Side) -> bool {
        match side {
            Side::Right => self.window[i - 1] > self.window[i],
            Side::Left => self.position(i) > self.position(i + 1),
        }
    }

    pub fn descent_set(&self, side: Side) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.has_descent(i, side)).collect()
    }

    /// `s_i w`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let window = self
            .window
            .iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Self { window }
    }

    /// `w s_i`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.window.swap(i - 1, i);
        w
    }

    /// Reduced word, taking the smallest left descent at each step.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = (1..w.n()).find(|&i| w.has_descent(i, Side::Left)) {
            word.push(i);
            w = w.left_mul_simple(i);
        }
        word
    }

    pub fn longest(n: usize) -> Self {
        Self { window: (1..=n).rev().collect() }
    }

    /// Longest element of `S_i x S_{n-i}`.
    pub fn longest_parabolic(n: usize, i: usize) -> Result<Self> {
        check_simple(n, i)?;
        let window = (1..=i).rev().chain((i + 1..=n).rev()).collect();
        Ok(Self { window })
    }

    /// `u_i = s_i s_{i-1} ... s_1`, the cycle with `u_i(1) = i + 1`.
    pub fn u_cycle(n: usize, i: usize) -> Result<Self> {
        check_simple(n, i)?;
        let word: Vec<usize> = (1..=i).rev().collect();
        Self::from_word(n, &word)
    }

    /// Conjugate by the longest element.
    pub fn star_dual(&self) -> Self {
        let n = self.n();
        Self { window: (1..=n).map(|i| n + 1 - self.window[n - i]).collect() }
    }

    /// All of `S_n` in lexicographic order of windows.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self { window: cur.clone() });
            let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else {
                break;
            };
            let l = (k + 1..n).rev().find(|&l| cur[k] < cur[l]).unwrap();
            cur.swap(k, l);
            cur[k + 1..].reverse();
        }
        out
    }

    fn position(&self, v: usize) -> usize {
        self.window.iter().position(|&x| x == v).unwrap()
    }
}

pub fn distinguished(n: usize, kind: &Distinguished) -> Result<Permutation> {
    match kind {
        Distinguished::Longest => Ok(Permutation::longest(n)),
        Distinguished::LongestParabolic(i) => Permutation::longest_parabolic(n, *i),
        Distinguished::UCycle(i) => Permutation::u_cycle(n, *i),
        Distinguished::StarDual(w) => {
            if w.n() != n {
                return Err(Error::SizeMismatch { expected: n, found: w.n() });
            }
            Ok(w.star_dual())
        }
    }
}

fn check_simple(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, min: 1, max: n.saturating_sub(1) });
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}
