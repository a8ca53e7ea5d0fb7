use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// An element of the coweight lattice of `SL_n`, in fundamental coweight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight {
    n: usize,
    coeffs: Vec<i64>,
}

impl Coweight {
    pub fn new(n: usize, coeffs: Vec<i64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!("rank parameter n = {n} must be at least 2")));
        }
        if coeffs.len() != n - 1 {
            return Err(Error::SizeMismatch { expected: n - 1, found: coeffs.len() });
        }
        Ok(Self { n, coeffs })
    }

    pub fn zero(n: usize) -> Self {
        Self { n, coeffs: vec![0; n - 1] }
    }

    pub fn fundamental(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, min: 1, max: n - 1 });
        }
        let mut c = Self::zero(n);
        c.coeffs[i - 1] = 1;
        Ok(c)
    }

    pub fn rho(n: usize) -> Self {
        Self { n, coeffs: vec![1; n - 1] }
    }

    /// The highest coroot.
    pub fn theta(n: usize) -> Self {
        let mut c = Self::zero(n);
        c.coeffs[0] += 1;
        c.coeffs[n - 2] += 1;
        c
    }

    /// From simple coroot coordinates.
    pub fn from_alpha(n: usize, a: &[i64]) -> Result<Self> {
        if a.len() != n - 1 {
            return Err(Error::SizeMismatch { expected: n - 1, found: a.len() });
        }
        let get = |i: isize| if i < 0 || i as usize >= a.len() { 0 } else { a[i as usize] };
        let coeffs = (0..a.len() as isize).map(|i| 2 * get(i) - get(i - 1) - get(i + 1)).collect();
        Ok(Self { n, coeffs })
    }

    /// Simple coroot coordinates, if the coweight lies in the coroot lattice.
    pub fn to_alpha(&self) -> Option<Vec<i64>> {
        let n = self.n as i64;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for i in 1..n {
            let mut s = 0;
            for j in 1..n {
                s += i.min(j) * (n - i.max(j)) * self.coeffs[j as usize - 1];
            }
            if s % n != 0 {
                return None;
            }
            out.push(s / n);
        }
        Some(out)
    }

    pub fn in_coroot_lattice(&self) -> bool {
        self.to_alpha().is_some()
    }

    /// A lift to `Z^n`, with last coordinate zero.
    pub fn lift(&self) -> Vec<i64> {
        let mut out = vec![0; self.n];
        for j in (0..self.n - 1).rev() {
            out[j] = out[j + 1] + self.coeffs[j];
        }
        out
    }

    /// Projects a vector of `Z^n` to the coweight lattice.
    pub fn from_lift(lift: &[i64]) -> Result<Self> {
        Self::new(lift.len(), lift.windows(2).map(|p| p[0] - p[1]).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn is_antidominant(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 0)
    }

    /// `<e_i - e_j, lambda>`.
    pub fn pair_root(&self, i: usize, j: usize) -> i64 {
        let l = self.lift();
        l[i - 1] - l[j - 1]
    }

    pub fn scale(&self, k: i64) -> Self {
        Self { n: self.n, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }
}

impl Add for &Coweight {
    type Output = Coweight;

    fn add(self, rhs: &Coweight) -> Coweight {
        assert_eq!(self.n, rhs.n, "coweights of different rank");
        Coweight { n: self.n, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Coweight {
    type Output = Coweight;

    fn sub(self, rhs: &Coweight) -> Coweight {
        self + &(-rhs)
    }
}

impl Neg for &Coweight {
    type Output = Coweight;

    fn neg(self) -> Coweight {
        self.scale(-1)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "w:{}", parts.join(","))
    }
}
