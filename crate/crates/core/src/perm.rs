//! Permutations of `{1, ..., n}` and the circular distance on the ground set.
//!
//! Values are 1-indexed at every public boundary (text, `apply`, `images`).
//! Internally images are stored 0-indexed.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{1, ..., n}` onto itself, `n >= 2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its 1-indexed one-line form.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n < 2 {
            return Err(Error::InvalidSize(n));
        }
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for (pos, &v) in images.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("image {v} outside 1..={n}"),
                });
            }
            if seen[v - 1] {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("repeated image {v}"),
                });
            }
            seen[v - 1] = true;
            map.push(v - 1);
        }
        Ok(Permutation { map })
    }

    /// Builds from a 0-indexed map. Panics in debug builds if `map` is not a bijection.
    pub(crate) fn from_zero_based_unchecked(map: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = map.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { map }
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Permutation { map: (0..n).collect() })
    }

    /// σ: swaps 1 and 2.
    pub fn sigma(n: usize) -> Result<Self> {
        let mut p = Self::identity(n)?;
        p.map.swap(0, 1);
        Ok(p)
    }

    /// τ: k ↦ k+1, n ↦ 1.
    pub fn tau(n: usize) -> Result<Self> {
        Self::tau_power(n, 1)
    }

    /// τ⁻¹: k ↦ k-1, 1 ↦ n.
    pub fn tau_inv(n: usize) -> Result<Self> {
        Self::tau_power(n, -1)
    }

    /// τ^k for any integer k.
    pub fn tau_power(n: usize, k: i64) -> Result<Self> {
        check_size(n)?;
        let shift = k.rem_euclid(n as i64) as usize;
        Ok(Permutation {
            map: (0..n).map(|i| (i + shift) % n).collect(),
        })
    }

    /// The transposition `(a b)`, 1-indexed.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        check_size(n)?;
        if a == 0 || b == 0 || a > n || b > n || a == b {
            return Err(Error::Domain(format!("transposition ({a} {b}) invalid for n = {n}")));
        }
        let mut p = Self::identity(n)?;
        p.map.swap(a - 1, b - 1);
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// π(x) for 1-indexed `x`. Panics when `x` is outside `1..=n`.
    pub fn apply(&self, x: usize) -> usize {
        self.map[x - 1] + 1
    }

    /// One-line form, 1-indexed.
    pub fn images(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v + 1).collect()
    }

    pub fn as_zero_based(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: the right operand acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            map: other.map.iter().map(|&x| self.map[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    /// `τ^k ∘ self`, i.e. every image shifted by `k` modulo `n`.
    pub fn shifted(&self, k: usize) -> Permutation {
        let n = self.n();
        Permutation {
            map: self.map.iter().map(|&v| (v + k) % n).collect(),
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]", self)
    }
}

/// Space-separated 1-indexed images, e.g. `1 3 5 2 4`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_permutation(s)
    }
}

/// Parses the one-line text form. Error positions are byte offsets into `text`.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let mut images = Vec::new();
    let mut offsets = Vec::new();
    let mut rest = text;
    let mut base = 0;
    while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
        let tail = &rest[start..];
        let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
        let token = &tail[..len];
        let value: usize = token.parse().map_err(|_| Error::Parse {
            position: base + start,
            message: format!("expected a positive integer, found {token:?}"),
        })?;
        images.push(value);
        offsets.push(base + start);
        base += start + len;
        rest = &tail[len..];
    }
    if images.is_empty() {
        return Err(Error::Parse {
            position: 0,
            message: "empty permutation".into(),
        });
    }
    if images.len() < 2 {
        return Err(Error::InvalidSize(images.len()));
    }
    Permutation::from_images(&images).map_err(|e| match e {
        Error::Parse { position, message } => Error::Parse {
            position: offsets[position],
            message,
        },
        other => other,
    })
}

pub fn format_permutation(p: &Permutation) -> String {
    p.to_string()
}

pub(crate) fn check_size(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidSize(n))
    } else {
        Ok(())
    }
}

/// Circular distance `min{|x-y|, n-|x-y|}` between 1-indexed points.
pub fn cyclic_distance(x: usize, y: usize, n: usize) -> Result<usize> {
    if x == 0 || y == 0 || x > n || y > n {
        return Err(Error::Domain(format!("points ({x}, {y}) outside 1..={n}")));
    }
    Ok(circ(x, y, n))
}

/// Unchecked circular distance; works for 0- or 1-indexed inputs alike.
#[inline]
pub(crate) fn circ(x: usize, y: usize, n: usize) -> usize {
    let diff = x.abs_diff(y);
    diff.min(n - diff)
}
