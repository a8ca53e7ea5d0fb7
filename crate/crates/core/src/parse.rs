//! Text formats for coweights, words and permutations.
//!
//! * coweight: `w:1,-1,0` (fundamental coweights) or `a:1,2,1` (simple coroots);
//!   a bare list means `w:`.
//! * affine word: `sigma^2 s0 s3 s1 s0`; `sigma` may be written `σ` and
//!   letters may be bare digits. `1` or an empty string is the identity.
//! * affine element: a window `[4,2,0]` or any affine word.
//! * permutation: a window `[2,3,1]` or `2 3 1`, or a word `s1 s2`.

use crate::affine::{AffineElement, AffineWord, Coweight};
use crate::error::{Error, Result};
use crate::weyl::Permutation;

fn int_list(s: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| t.trim().parse().map_err(|_| Error::parse(format!("bad integer {t:?}"))))
        .collect()
}

pub fn parse_coweight(n: usize, s: &str) -> Result<Coweight> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("a:") {
        let a = int_list(rest)?;
        if a.len() != n.saturating_sub(1) {
            return Err(Error::SizeMismatch { expected: n.saturating_sub(1), found: a.len() });
        }
        return Coweight::from_alpha(n, &a);
    }
    let c = int_list(s.strip_prefix("w:").unwrap_or(s))?;
    if c.len() != n.saturating_sub(1) {
        return Err(Error::SizeMismatch { expected: n.saturating_sub(1), found: c.len() });
    }
    Coweight::new(n, c)
}

fn tokens(s: &str) -> impl Iterator<Item = &str> {
    s.split(|c: char| c.is_whitespace() || matches!(c, ',' | '*' | '.' | '∘')).filter(|t| !t.is_empty())
}

/// An affine word over `s_0, ..., s_{n-1}` with an optional leading power of `sigma`.
pub fn parse_affine_word(n: usize, s: &str) -> Result<AffineWord> {
    let mut word = AffineWord { sigma_power: 0, letters: Vec::new() };
    if s.trim() == "1" {
        return Ok(word);
    }
    for t in tokens(s) {
        let sig = t.strip_prefix("sigma").or_else(|| t.strip_prefix('σ'));
        if let Some(rest) = sig {
            if !word.letters.is_empty() {
                return Err(Error::parse("sigma must come first"));
            }
            let k: usize = match rest.strip_prefix('^') {
                Some(e) => e.parse().map_err(|_| Error::parse(format!("bad exponent in {t:?}")))?,
                None if rest.is_empty() => 1,
                None => return Err(Error::parse(format!("bad token {t:?}"))),
            };
            word.sigma_power = (word.sigma_power + k) % n;
            continue;
        }
        let digits = t.strip_prefix('s').unwrap_or(t);
        let i: usize = digits.parse().map_err(|_| Error::parse(format!("bad letter {t:?}")))?;
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, min: 0, max: n - 1 });
        }
        word.letters.push(i);
    }
    Ok(word)
}

pub fn parse_affine_element(n: usize, s: &str) -> Result<AffineElement> {
    if s.trim().starts_with('[') {
        return AffineElement::new(n, int_list(s)?);
    }
    AffineElement::from_word(n, &parse_affine_word(n, s)?)
}

/// Letters of a word over `s_0, ..., s_max`.
pub fn parse_letters(s: &str, max: usize) -> Result<Vec<usize>> {
    if s.trim() == "1" {
        return Ok(Vec::new());
    }
    tokens(s)
        .map(|t| {
            let i: usize =
                t.strip_prefix('s').unwrap_or(t).parse().map_err(|_| Error::parse(format!("bad letter {t:?}")))?;
            if i > max {
                return Err(Error::IndexOutOfRange { index: i, min: 0, max });
            }
            Ok(i)
        })
        .collect()
}

/// A permutation of `1..=n` from a window `[..]` or a word in `s_1..s_{n-1}`.
pub fn parse_permutation(n: usize, s: &str) -> Result<Permutation> {
    let s = s.trim();
    if s.starts_with('[') {
        let w = int_list(s)?;
        let w: Vec<usize> = w
            .into_iter()
            .map(|v| usize::try_from(v).map_err(|_| Error::parse("negative entry")))
            .collect::<Result<_>>()?;
        if w.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: w.len() });
        }
        return Permutation::new(w);
    }
    if n > 1 && tokens(s).all(|t| !t.starts_with('s')) {
        let vals: Vec<usize> = tokens(s).filter_map(|t| t.parse().ok()).collect();
        let mut sorted = vals.clone();
        sorted.sort_unstable();
        if sorted == (1..=n).collect::<Vec<_>>() && tokens(s).count() == n {
            return Permutation::new(vals);
        }
    }
    let letters = parse_letters(s, n - 1)?;
    if letters.contains(&0) {
        return Err(Error::parse("s0 is not a finite reflection"));
    }
    Permutation::from_word(n, &letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coweights() {
        assert_eq!(parse_coweight(3, "w:1,1").unwrap(), Coweight::rho(3));
        assert_eq!(parse_coweight(3, "1, 1").unwrap(), Coweight::rho(3));
        assert_eq!(parse_coweight(3, "a:1,1").unwrap(), Coweight::new(3, vec![1, 1]).unwrap());
        assert_eq!(parse_coweight(4, "a:1,0,0").unwrap(), Coweight::new(4, vec![2, -1, 0]).unwrap());
        assert!(parse_coweight(3, "w:1").is_err());
        assert!(parse_coweight(3, "w:1,x").is_err());
    }

    #[test]
    fn words() {
        let w = parse_affine_word(4, "sigma^2 s0 s3 s1 s0").unwrap();
        assert_eq!(w, AffineWord { sigma_power: 2, letters: vec![0, 3, 1, 0] });
        assert_eq!(parse_affine_word(3, "σ s1 s0").unwrap().sigma_power, 1);
        assert_eq!(parse_affine_word(3, "0,2,1,0").unwrap().letters, vec![0, 2, 1, 0]);
        assert_eq!(parse_affine_word(3, "1").unwrap().letters, Vec::<usize>::new());
        assert!(parse_affine_word(3, "s3").is_err());
        assert!(parse_affine_word(3, "s1 sigma").is_err());
        assert_eq!(parse_letters("s0 s1 s0", 2).unwrap(), vec![0, 1, 0]);
        let x = parse_affine_element(3, "sigma^2 s0 s2 s1 s0").unwrap();
        assert_eq!(parse_affine_element(3, &format!("{:?}", x.window())).unwrap(), x);
    }

    #[test]
    fn permutations() {
        assert_eq!(parse_permutation(3, "[2,3,1]").unwrap().window(), &[2, 3, 1]);
        assert_eq!(parse_permutation(3, "s1 s2").unwrap().window(), &[2, 3, 1]);
        assert_eq!(parse_permutation(3, "1").unwrap(), Permutation::identity(3));
        assert!(parse_permutation(3, "[1,1,2]").is_err());
        assert!(parse_permutation(3, "s0").is_err());
        assert_eq!(parse_permutation(3, "3 1 2").unwrap().window(), &[3, 1, 2]);
        assert_eq!(parse_permutation(3, "2 1").unwrap().window(), &[3, 1, 2]);
    }
}
