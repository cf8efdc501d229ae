//! Explicit generator words: τ powers, transpositions, cycles, and whole
//! permutations within the `3(n-1)²` budget.

use crate::error::{Error, Result};
use crate::perm::{check_size, Permutation};
use crate::word::{free_reduce, Generator, Word};

/// A word for τ^k taking the short way around: `min{k, n-k}` letters.
pub fn tau_power_word(n: usize, k: usize) -> Result<Word> {
    check_size(n)?;
    if k >= n {
        return Err(Error::Domain(format!("tau exponent {k} outside 0..{n}")));
    }
    Ok(if k <= n - k {
        std::iter::repeat_n(Generator::Tau, k).collect()
    } else {
        std::iter::repeat_n(Generator::TauInv, n - k).collect()
    })
}

/// τ^e written literally with |e| letters (negative `e` uses τ⁻¹).
fn signed_tau_power(e: i64) -> impl Iterator<Item = Generator> {
    let g = if e >= 0 { Generator::Tau } else { Generator::TauInv };
    std::iter::repeat_n(g, e.unsigned_abs() as usize)
}

/// Conjugation chain for a path of adjacent transpositions `e₁, ..., e_k`:
/// `e₁ e₂ ⋯ e_{k-1} e_k e_{k-1} ⋯ e₁`, where each edge is given by the
/// exponent `x` with `e = τ^x σ τ^{-x}`. The result is freely reduced.
fn edge_path_word(exponents: &[i64]) -> Word {
    let k = exponents.len();
    let order = (0..k).chain((0..k.saturating_sub(1)).rev());
    let mut raw = Word::new();
    for idx in order {
        let x = exponents[idx];
        raw.extend_from(&signed_tau_power(x).collect());
        raw.push(Generator::Sigma);
        raw.extend_from(&signed_tau_power(-x).collect());
    }
    free_reduce(&raw)
}

/// Length of the shorter of the two routes from 1 to `l`.
pub fn transposition_1l_length(n: usize, l: usize) -> usize {
    let anticlockwise = 4 * l - 7;
    let clockwise = 4 * (n - l) + 3;
    anticlockwise.min(clockwise)
}

/// Word for the transposition `(1 l)`.
///
/// Anticlockwise route 1, 2, ..., l uses edges `(j j+1) = τ^{j-1} σ τ^{-(j-1)}`
/// and reduces to `σ(τσ)^{l-2}(τ⁻¹σ)^{l-2}`, of length `4l-7`. Clockwise
/// route 1, n, n-1, ..., l writes each edge `(j j+1)` as
/// `τ^{-(n-j+1)} σ τ^{n-j+1}` and reduces to length `4(n-l)+3`. The shorter
/// one is returned; the two lengths are odd and sum to `4n-4`, so they never tie.
pub fn transposition_1l_word(n: usize, l: usize) -> Result<Word> {
    check_size(n)?;
    if l < 2 || l > n {
        return Err(Error::Domain(format!("l = {l} outside 2..={n}")));
    }
    let anticlockwise = 4 * l - 7;
    let clockwise = 4 * (n - l) + 3;
    let (word, expected) = if anticlockwise <= clockwise {
        // edges (1 2), (2 3), ..., (l-1 l)
        let exps: Vec<i64> = (1..l).map(|j| j as i64 - 1).collect();
        (edge_path_word(&exps), anticlockwise)
    } else {
        // edges (n 1), (n-1 n), ..., (l l+1)
        let exps: Vec<i64> = (l..=n).rev().map(|j| -((n - j + 1) as i64)).collect();
        (edge_path_word(&exps), clockwise)
    };
    if word.len() != expected {
        return Err(Error::Precondition(format!(
            "transposition (1 {l}) on n = {n} reduced to length {} instead of {expected}",
            word.len()
        )));
    }
    Ok(word)
}

/// Word for `(k l)` via `(k l) = τ^{k-1} (1 l-k+1) τ^{-(k-1)}`; at most `3(n-1)` letters.
pub fn transposition_word(n: usize, k: usize, l: usize) -> Result<Word> {
    check_size(n)?;
    if k == 0 || k >= l || l > n {
        return Err(Error::Domain(format!(
            "need 1 <= k < l <= n, got k = {k}, l = {l}, n = {n}"
        )));
    }
    let mut w = tau_power_word(n, k - 1)?;
    w.extend_from(&transposition_1l_word(n, l - k + 1)?);
    w.extend_from(&tau_power_word(n, (n - (k - 1)) % n)?);
    Ok(free_reduce(&w))
}

/// Disjoint cycles of length ≥ 2, each starting at its smallest element,
/// ordered by that element. Points are 1-indexed.
pub fn cycle_decomposition(p: &Permutation) -> Vec<Vec<usize>> {
    let n = p.n();
    let map = p.as_zero_based();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] || map[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x + 1);
            x = map[x];
        }
        cycles.push(cycle);
    }
    cycles
}

/// Builds a word evaluating to `p` with at most `3(n-1)²` letters.
///
/// Each cycle `(x₁ x₂ ⋯ x_k)` becomes `(x₁ x₂)(x₂ x₃)⋯(x_{k-1} x_k)`; the
/// rightmost transposition acts first.
pub fn synthesize(p: &Permutation) -> Result<Word> {
    let n = p.n();
    let mut w = Word::new();
    for cycle in cycle_decomposition(p) {
        for pair in cycle.windows(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            w.extend_from(&transposition_word(n, a, b)?);
        }
    }
    Ok(free_reduce(&w))
}

/// `3(n-1)²`.
pub fn upper_formula(n: usize) -> u64 {
    let m = n.saturating_sub(1) as u64;
    3 * m * m
}
