//! Words over the gate alphabet `{σ, τ, τ⁻¹}`.
//!
//! A word `ρ₁ρ₂⋯ρₗ` denotes the product `ρ₁ ∘ ρ₂ ∘ ⋯ ∘ ρₗ`: the rightmost
//! letter acts first. Text form uses `s`, `t`, `T` for `σ`, `τ`, `τ⁻¹`, with
//! the leftmost character being `ρ₁`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{check_size, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    Sigma,
    Tau,
    TauInv,
}

impl Generator {
    /// Expansion order used wherever a deterministic traversal is needed.
    pub const ALL: [Generator; 3] = [Generator::Sigma, Generator::Tau, Generator::TauInv];

    pub fn inverse(self) -> Generator {
        match self {
            Generator::Sigma => Generator::Sigma,
            Generator::Tau => Generator::TauInv,
            Generator::TauInv => Generator::Tau,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Generator::Sigma => 's',
            Generator::Tau => 't',
            Generator::TauInv => 'T',
        }
    }

    pub fn from_symbol(c: char) -> Option<Generator> {
        match c {
            's' => Some(Generator::Sigma),
            't' => Some(Generator::Tau),
            'T' => Some(Generator::TauInv),
            _ => None,
        }
    }

    pub fn to_permutation(self, n: usize) -> Result<Permutation> {
        match self {
            Generator::Sigma => Permutation::sigma(n),
            Generator::Tau => Permutation::tau(n),
            Generator::TauInv => Permutation::tau_inv(n),
        }
    }

    /// Image of the 0-indexed point `x`.
    #[inline]
    pub(crate) fn act(self, x: usize, n: usize) -> usize {
        match self {
            Generator::Sigma => match x {
                0 => 1,
                1 => 0,
                _ => x,
            },
            Generator::Tau => (x + 1) % n,
            Generator::TauInv => (x + n - 1) % n,
        }
    }
}

pub fn make_sigma(n: usize) -> Result<Permutation> {
    Permutation::sigma(n)
}

pub fn make_tau(n: usize) -> Result<Permutation> {
    Permutation::tau(n)
}

pub fn make_tau_inv(n: usize) -> Result<Permutation> {
    Permutation::tau_inv(n)
}

/// A finite sequence of generators. The empty word is the identity.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Generator>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Generator> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn iter(&self) -> impl Iterator<Item = Generator> + '_ {
        self.0.iter().copied()
    }

    /// The inverse word: reversed, each letter inverted.
    pub fn inverse(&self) -> Word {
        self.0.iter().rev().map(|g| g.inverse()).collect()
    }

    pub fn evaluate(&self, n: usize) -> Result<Permutation> {
        evaluate_word(self, n)
    }

    pub fn reduced(&self) -> Word {
        free_reduce(self)
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.0 {
            write!(f, "{}", g.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// Evaluates `ρ₁ ∘ ⋯ ∘ ρₗ` on `{1, ..., n}`.
pub fn evaluate_word(w: &Word, n: usize) -> Result<Permutation> {
    check_size(n)?;
    // Right-multiply letter by letter, left to right. The running product is
    // stored as `arr` read through a rotation: r(x) = arr[(x + offset) mod n],
    // so τ and τ⁻¹ only move the offset and σ swaps two cells.
    let mut arr: Vec<usize> = (0..n).collect();
    let mut offset = 0usize;
    for g in w.iter() {
        match g {
            Generator::Sigma => arr.swap(offset % n, (offset + 1) % n),
            Generator::Tau => offset = (offset + 1) % n,
            Generator::TauInv => offset = (offset + n - 1) % n,
        }
    }
    let map = (0..n).map(|x| arr[(x + offset) % n]).collect();
    Ok(Permutation::from_zero_based_unchecked(map))
}

/// Cancels adjacent `σσ`, `ττ⁻¹` and `τ⁻¹τ` until none remain.
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Generator> = Vec::with_capacity(w.len());
    for g in w.iter() {
        if out.last() == Some(&g.inverse()) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    Word(out)
}

/// Parses a word over `{s, t, T}`. Whitespace is not allowed.
pub fn parse_word(text: &str) -> Result<Word> {
    text.char_indices()
        .map(|(pos, c)| {
            Generator::from_symbol(c).ok_or_else(|| Error::Parse {
                position: pos,
                message: format!("unexpected character {c:?}; expected one of s, t, T"),
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(Word)
}

pub fn format_word(w: &Word) -> String {
    w.to_string()
}
