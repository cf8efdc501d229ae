//! Self-check suites run by `permword verify`.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::bounds::{ceil_clamped, displacement_lower_bound, theorem11_formula, upper_formula, word_lower_bound};
use crate::bumpiness::{hard_permutation, is_very_bumpy, not_bumpy_count_bound, verify_lemma33, BumpinessParams};
use crate::error::{Error, Result};
use crate::oracle;
use crate::perm::Permutation;
use crate::stats::exhaustive_not_bumpy;
use crate::synthesis::{synthesize, transposition_1l_length, transposition_1l_word};
use crate::word::evaluate_word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Exhaustive bound sandwich against the BFS oracle on S₃..S₇.
    Small,
    /// Hard-permutation profile, certificate dominance and transposition lengths.
    Profile,
    /// Bumpy counts at n = 8 and the counting-bound arithmetic.
    Counting,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(Suite::Small),
            "profile" => Ok(Suite::Profile),
            "counting" => Ok(Suite::Counting),
            other => Err(Error::Parse {
                position: 0,
                message: format!("unknown suite {other:?}"),
            }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CaseOutcome {
    fn new(name: impl Into<String>, failures: Vec<String>, ok_detail: impl Into<String>) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            ok_detail.into()
        } else {
            let shown: Vec<_> = failures.iter().take(5).cloned().collect();
            format!("{} failure(s): {}", failures.len(), shown.join("; "))
        };
        CaseOutcome {
            name: name.into(),
            passed,
            detail,
        }
    }
}

impl fmt::Display for CaseOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}: {}", self.name, self.detail)
    }
}

pub fn run_suite(suite: Suite) -> Result<Vec<CaseOutcome>> {
    match suite {
        Suite::Small => small(),
        Suite::Profile => Ok(profile()),
        Suite::Counting => counting(),
    }
}

/// `max(lbs) <= exact <= synth <= 3(n-1)²` for every element of `S_n`; returns the violations.
pub fn sandwich_violations(n: usize) -> Result<Vec<String>> {
    let table = oracle::build_table_with(
        n,
        oracle::BuildOptions {
            track_parents: false,
            ..Default::default()
        },
    )?;
    let budget = upper_formula(n);
    let violations = (0..oracle::factorial(n))
        .into_par_iter()
        .filter_map(|r| {
            let p = oracle::unrank(r, n).expect("rank in range");
            let check = || -> Result<Option<String>> {
                let exact = table.exact_complexity(&p)? as u64;
                let lb = displacement_lower_bound(&p).max(word_lower_bound(&p));
                let w = synthesize(&p)?;
                let ok = evaluate_word(&w, n)? == p;
                let len = w.len() as u64;
                Ok((!(ok && lb <= exact && exact <= len && len <= budget))
                    .then(|| format!("{p}: lb {lb}, exact {exact}, synth {len}, evaluates {ok}")))
            };
            check().unwrap_or_else(|e| Some(format!("{p}: {e}")))
        })
        .collect::<Vec<_>>();
    Ok(violations)
}

fn small() -> Result<Vec<CaseOutcome>> {
    (3..=7)
        .map(|n| {
            let v = sandwich_violations(n)?;
            Ok(CaseOutcome::new(
                format!("sandwich S_{n}"),
                v,
                format!("{} permutations", oracle::factorial(n)),
            ))
        })
        .collect()
}

/// Exact lengths of the `(1 l)` words for `n` in `range` and every `l`.
pub fn transposition_length_failures(ns: std::ops::RangeInclusive<usize>) -> Vec<String> {
    ns.into_par_iter()
        .flat_map_iter(|n| {
            (2..=n).filter_map(move |l| {
                let expected = transposition_1l_length(n, l);
                let target = Permutation::transposition(n, 1, l).expect("valid");
                match transposition_1l_word(n, l) {
                    Ok(w) if w.len() == expected && expected <= 2 * n - 3 && w.evaluate(n).ok() == Some(target) => None,
                    Ok(w) => Some(format!("n={n} l={l}: length {} (want {expected})", w.len())),
                    Err(e) => Some(format!("n={n} l={l}: {e}")),
                }
            })
        })
        .collect()
}

/// `word_lower_bound(ω_n) >= ceil((n²-2n-7)/4)` over `ns`.
pub fn dominance_failures(ns: std::ops::RangeInclusive<usize>) -> Vec<String> {
    ns.into_par_iter()
        .filter_map(|n| {
            let lb = word_lower_bound(&hard_permutation(n).expect("n >= 2"));
            let need = ceil_clamped(theorem11_formula(n));
            (lb < need).then(|| format!("n={n}: {lb} < {need}"))
        })
        .collect()
}

fn profile() -> Vec<CaseOutcome> {
    let lemma33: Vec<String> = (5..=200usize)
        .into_par_iter()
        .filter(|&n| !verify_lemma33(n))
        .map(|n| format!("n={n}"))
        .collect();
    let bumpy: Vec<String> = (16..=512usize)
        .into_par_iter()
        .filter(|&n| !is_very_bumpy(&hard_permutation(n).expect("n >= 2")))
        .map(|n| format!("n={n}"))
        .collect();
    vec![
        CaseOutcome::new(
            "hard permutation profile chain, n=5..200",
            lemma33,
            "all shifts satisfy the chain",
        ),
        CaseOutcome::new(
            "word bound dominates (n^2-2n-7)/4, n=9..200",
            dominance_failures(9..=200),
            "ok",
        ),
        CaseOutcome::new(
            "(1 l) word lengths, n=3..100",
            transposition_length_failures(3..=100),
            "exact",
        ),
        CaseOutcome::new("hard permutation very bumpy, n=16..512", bumpy, "ok"),
    ]
}

fn counting() -> Result<Vec<CaseOutcome>> {
    let params = BumpinessParams::very_bumpy();
    let bad = exhaustive_not_bumpy(8, &params)?;
    let powers: Vec<Permutation> = (0..8).map(|j| Permutation::tau_power(8, j)).collect::<Result<_>>()?;
    let mut sorted_powers = powers.clone();
    sorted_powers.sort_by_key(oracle::rank);
    let char_fail = if bad == sorted_powers {
        vec![]
    } else {
        vec![format!("{} non-bumpy permutations found", bad.len())]
    };

    let b8 = not_bumpy_count_bound(8)?;
    let mut arith = Vec::new();
    if b8.count != BigRational::from_integer(326_592.into()) {
        arith.push(format!("bound(8) = {}", b8.count));
    }

    let ratios: Vec<_> = (4000..=8000)
        .step_by(400)
        .map(not_bumpy_count_bound)
        .collect::<Result<_>>()?;
    let mut trend = Vec::new();
    if ratios[0].ratio >= BigRational::one() {
        trend.push("ratio at n=4000 is not below 1".to_string());
    }
    for pair in ratios.windows(2) {
        if pair[1].ratio >= pair[0].ratio {
            trend.push(format!("ratio not decreasing from n={} to n={}", pair[0].n, pair[1].n));
        }
    }
    Ok(vec![
        CaseOutcome::new(
            "S_8 non-very-bumpy set is the tau powers",
            char_fail,
            "40312 of 40320 very bumpy",
        ),
        CaseOutcome::new("not-bumpy bound at n=8", arith, "326592"),
        CaseOutcome::new(
            "not-bumpy ratio < 1 and decreasing, n=4000..8000",
            trend,
            format!("ln ratio at 4000: {:.1}", ratios[0].ln_ratio()),
        ),
    ])
}
