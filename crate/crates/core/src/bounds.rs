//! Lower-bound certificates for generator-word length.
//!
//! * displacement bound: every letter moves every point by circular
//!   distance at most 1, so `l >= max_k d(k, p(k))`;
//! * sorted-displacement bound on adjacent transpositions (with the wrap
//!   swap `(n 1)`): `t >= d₁ + ⋯ + d_{2m} - m²` for every `1 <= m <= n/2`;
//! * τ-shift reduction: a word of length `l` for `p` yields, for SOME `k`,
//!   `τ^k p` as a product of `i` adjacent transpositions with `l >= 2i - 1`.
//!
//! Since the shift `k` is unknown, the word bound must take the minimum of
//! the transposition bound over all `n` shifts.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{self, ComplexityTable};
use crate::perm::{circ, Permutation};
use crate::synthesis;
use crate::word::evaluate_word;

/// Circular displacements `d(j, p(j))`, sorted non-increasingly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisplacementProfile {
    n: usize,
    sorted: Vec<usize>,
}

impl DisplacementProfile {
    /// Profile of `τ^shift ∘ p`: distances `d(shift + p(i), i)`.
    pub fn of_shift(p: &Permutation, shift: usize) -> Self {
        let n = p.n();
        let mut sorted: Vec<usize> = p
            .as_zero_based()
            .iter()
            .enumerate()
            .map(|(i, &v)| circ((v + shift) % n, i, n))
            .collect();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        DisplacementProfile { n, sorted }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sorted(&self) -> &[usize] {
        &self.sorted
    }

    /// `max(0, max_{1<=m<=n/2} Σ_{j<=2m} d_j - m²)`.
    pub fn adjacent_bound(&self) -> u64 {
        let mut best: i64 = 0;
        let mut prefix: i64 = 0;
        for m in 1..=self.n / 2 {
            prefix += (self.sorted[2 * m - 2] + self.sorted[2 * m - 1]) as i64;
            best = best.max(prefix - (m * m) as i64);
        }
        best as u64
    }

    /// `Σ_{j<=2m} d_j - m²` for one fixed `m`, unclamped.
    pub fn adjacent_bound_at(&self, m: usize) -> i64 {
        let take = (2 * m).min(self.n);
        self.sorted[..take].iter().sum::<usize>() as i64 - (m * m) as i64
    }
}

pub fn displacement_profile(p: &Permutation) -> DisplacementProfile {
    DisplacementProfile::of_shift(p, 0)
}

/// `max_k d(k, p(k))`.
pub fn displacement_lower_bound(p: &Permutation) -> u64 {
    let n = p.n();
    p.as_zero_based()
        .iter()
        .enumerate()
        .map(|(i, &v)| circ(i, v, n))
        .max()
        .unwrap_or(0) as u64
}

/// Lower bound on the number of adjacent transpositions (indices mod `n`) whose product is `p`.
pub fn adjacent_transposition_lower_bound(p: &Permutation) -> u64 {
    displacement_profile(p).adjacent_bound()
}

/// `min_k` of the adjacent-transposition bound of `τ^k ∘ p`.
pub fn min_shift_adjacent_bound(p: &Permutation) -> u64 {
    (0..p.n())
        .map(|k| DisplacementProfile::of_shift(p, k).adjacent_bound())
        .min()
        .unwrap_or(0)
}

/// `max(displacement bound, 2·min_k adj(τ^k p) - 1, 0)`; never exceeds the
/// true generator-word complexity of `p`.
pub fn word_lower_bound(p: &Permutation) -> u64 {
    let shifted = 2 * min_shift_adjacent_bound(p) as i64 - 1;
    displacement_lower_bound(p).max(shifted.max(0) as u64)
}

/// `(n² - 2n - 7) / 4`, exact.
pub fn theorem11_formula(n: usize) -> Ratio<i64> {
    let n = n as i64;
    Ratio::new(n * n - 2 * n - 7, 4)
}

/// `n²/32 - 3`, exact.
pub fn lemma52_formula(n: usize) -> Ratio<i64> {
    let n = n as i64;
    Ratio::new(n * n, 32) - 3
}

pub fn upper_formula(n: usize) -> u64 {
    synthesis::upper_formula(n)
}

/// Smallest integer not below `r`, clamped at zero.
pub fn ceil_clamped(r: Ratio<i64>) -> u64 {
    r.ceil().to_integer().max(0) as u64
}

/// Every bound known for one permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsCertificate {
    pub n: usize,
    pub displacement_lb: u64,
    pub word_lb: u64,
    pub upper_len: u64,
    pub upper_formula: u64,
    pub exact: Option<u64>,
    pub permutation: String,
}

impl BoundsCertificate {
    pub fn lower_bound(&self) -> u64 {
        self.displacement_lb.max(self.word_lb)
    }

    /// `max(lbs) <= exact <= upper_len <= upper_formula`, with `exact` skipped when absent.
    pub fn is_consistent(&self) -> bool {
        let lb = self.lower_bound();
        let upper_ok = self.upper_len <= self.upper_formula;
        match self.exact {
            Some(e) => lb <= e && e <= self.upper_len && upper_ok,
            None => lb <= self.upper_len && upper_ok,
        }
    }
}

/// Certifies `p`, building an oracle table when `with_exact` is set.
pub fn certify(p: &Permutation, with_exact: bool) -> Result<BoundsCertificate> {
    let table = if with_exact {
        Some(oracle::build_table_with(
            p.n(),
            oracle::BuildOptions {
                track_parents: false,
                ..Default::default()
            },
        )?)
    } else {
        None
    };
    certify_with(p, table.as_ref())
}

/// Certifies `p`, reading the exact value from `table` when given.
pub fn certify_with(p: &Permutation, table: Option<&ComplexityTable>) -> Result<BoundsCertificate> {
    let n = p.n();
    let word = synthesis::synthesize(p)?;
    if evaluate_word(&word, n)? != *p {
        return Err(Error::Precondition(format!(
            "synthesized word does not evaluate to {p}"
        )));
    }
    let exact = table.map(|t| t.exact_complexity(p)).transpose()?.map(|e| e as u64);
    Ok(BoundsCertificate {
        n,
        displacement_lb: displacement_lower_bound(p),
        word_lb: word_lower_bound(p),
        upper_len: word.len() as u64,
        upper_formula: upper_formula(n),
        exact,
        permutation: p.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v).unwrap()
    }

    #[test]
    fn profiles() {
        assert_eq!(
            displacement_profile(&Permutation::identity(5).unwrap()).sorted(),
            &[0, 0, 0, 0, 0]
        );
        assert_eq!(displacement_profile(&perm(&[1, 3, 5, 2, 4])).sorted(), &[2, 2, 1, 1, 0]);
        assert_eq!(displacement_profile(&perm(&[3, 4, 1, 2])).sorted(), &[2, 2, 2, 2]);
    }

    #[test]
    fn displacement_examples() {
        assert_eq!(displacement_lower_bound(&Permutation::identity(6).unwrap()), 0);
        assert_eq!(
            displacement_lower_bound(&Permutation::transposition(10, 1, 5).unwrap()),
            4
        );
        assert_eq!(displacement_lower_bound(&Permutation::tau_power(8, 4).unwrap()), 4);
    }

    #[test]
    fn adjacent_examples() {
        assert_eq!(
            adjacent_transposition_lower_bound(&Permutation::identity(6).unwrap()),
            0
        );
        assert_eq!(adjacent_transposition_lower_bound(&perm(&[1, 3, 5, 2, 4])), 3);
        assert_eq!(adjacent_transposition_lower_bound(&perm(&[3, 4, 1, 2])), 4);
    }

    #[test]
    fn word_examples() {
        assert_eq!(word_lower_bound(&Permutation::identity(6).unwrap()), 0);
        assert_eq!(word_lower_bound(&Permutation::sigma(6).unwrap()), 1);
        let hard = perm(&[1, 3, 5, 2, 4]);
        for k in 0..5 {
            assert_eq!(DisplacementProfile::of_shift(&hard, k).adjacent_bound(), 3);
        }
        assert_eq!(word_lower_bound(&hard), 5);
    }

    #[test]
    fn formulas() {
        assert_eq!(theorem11_formula(11), Ratio::from_integer(23));
        assert_eq!(lemma52_formula(32), Ratio::from_integer(29));
        assert_eq!(upper_formula(5), 48);
        assert!(theorem11_formula(3) < Ratio::from_integer(0));
        assert_eq!(ceil_clamped(theorem11_formula(3)), 0);
        assert_eq!(ceil_clamped(Ratio::new(9, 4)), 3);
    }

    #[test]
    fn certificates() {
        let c = certify(&Permutation::identity(5).unwrap(), true).unwrap();
        assert_eq!((c.displacement_lb, c.word_lb, c.upper_len, c.exact), (0, 0, 0, Some(0)));
        let c = certify(&perm(&[1, 3, 5, 2, 4]), true).unwrap();
        assert_eq!(c.word_lb, 5);
        let e = c.exact.unwrap();
        assert!((5..=48).contains(&e));
        assert!(c.is_consistent());
        let c = certify(&Permutation::sigma(7).unwrap(), true).unwrap();
        assert_eq!((c.displacement_lb, c.word_lb, c.exact), (1, 1, Some(1)));
        assert!(c.upper_len >= 1);
        assert!(matches!(
            certify(&Permutation::sigma(11).unwrap(), true),
            Err(Error::Capability(_))
        ));
        let c = certify(&Permutation::sigma(11).unwrap(), false).unwrap();
        assert_eq!(c.exact, None);
    }

    #[test]
    fn certificate_json_keys() {
        let c = certify(&Permutation::identity(3).unwrap(), false).unwrap();
        let v: serde_json::Value = serde_json::to_value(&c).unwrap();
        let obj = v.as_object().unwrap();
        let mut keys: Vec<_> = obj.keys().cloned().collect();
        keys.sort();
        assert_eq!(
            keys,
            [
                "displacement_lb",
                "exact",
                "n",
                "permutation",
                "upper_formula",
                "upper_len",
                "word_lb"
            ]
        );
        assert!(obj["exact"].is_null());
        assert_eq!(obj["permutation"], "1 2 3");
    }
}
