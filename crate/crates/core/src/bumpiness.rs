//! The explicit hard permutation, its displacement-profile guarantee, and
//! the (b, c)-bumpiness predicates.
//!
//! A permutation is (b, c)-bumpy when for every shift `k` at least `c·n`
//! indices `i` satisfy `d(k + ω(i), i) >= b·n` (addition mod `n`). "Very
//! bumpy" is `b = 1/8`, `c = 1/4`. All thresholds are compared as exact
//! rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::bounds::{ceil_clamped, lemma52_formula, DisplacementProfile};
use crate::error::{Error, Result};
use crate::perm::{check_size, circ, Permutation};

/// Thresholds `0 < b < 1/2` and `0 < c < min{4b, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BumpinessParams {
    b: Ratio<i64>,
    c: Ratio<i64>,
}

impl BumpinessParams {
    pub fn new(b: Ratio<i64>, c: Ratio<i64>) -> Result<Self> {
        let zero = Ratio::from_integer(0);
        let one = Ratio::from_integer(1);
        if !(b > zero && b < Ratio::new(1, 2)) {
            return Err(Error::Domain(format!("b = {b} must lie in (0, 1/2)")));
        }
        let c_max = (b * 4).min(one);
        if !(c > zero && c < c_max) {
            return Err(Error::Domain(format!("c = {c} must lie in (0, {c_max})")));
        }
        Ok(BumpinessParams { b, c })
    }

    /// `b = 1/8`, `c = 1/4`.
    pub fn very_bumpy() -> Self {
        BumpinessParams {
            b: Ratio::new(1, 8),
            c: Ratio::new(1, 4),
        }
    }

    pub fn b(&self) -> Ratio<i64> {
        self.b
    }

    pub fn c(&self) -> Ratio<i64> {
        self.c
    }

    /// Parses each threshold as `p/q`, an integer, or a finite decimal such as `0.125`.
    pub fn parse(b: &str, c: &str) -> Result<Self> {
        Self::new(parse_ratio(b)?, parse_ratio(c)?)
    }

    /// `d >= b·n`
    #[inline]
    fn far_enough(&self, d: usize, n: usize) -> bool {
        d as i64 * self.b.denom() >= self.b.numer() * n as i64
    }

    /// `count >= c·n`
    #[inline]
    fn enough(&self, count: usize, n: usize) -> bool {
        count as i64 * self.c.denom() >= self.c.numer() * n as i64
    }
}

impl Default for BumpinessParams {
    fn default() -> Self {
        Self::very_bumpy()
    }
}

pub fn parse_ratio(text: &str) -> Result<Ratio<i64>> {
    let t = text.trim();
    let err = || Error::Parse {
        position: 0,
        message: format!("not a rational number: {text:?}"),
    };
    if let Some((num, den)) = t.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| err())?;
        let den: i64 = den.trim().parse().map_err(|_| err())?;
        if den == 0 {
            return Err(err());
        }
        return Ok(Ratio::new(num, den));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || frac.len() > 15 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let negative = int.starts_with('-');
        let int: i64 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse().map_err(|_| err())?
        };
        let scale = 10i64.pow(frac.len() as u32);
        let frac: i64 = frac.parse().map_err(|_| err())?;
        let mag = Ratio::new(int.abs() * scale + frac, scale);
        return Ok(if negative { -mag } else { mag });
    }
    t.parse::<i64>().map(Ratio::from_integer).map_err(|_| err())
}

fn ratio_text(r: &Ratio<i64>) -> String {
    r.to_string()
}

/// Per-shift counts of far-displaced indices for one permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BumpinessReport {
    pub n: usize,
    /// Distance threshold factor, as `p/q` text.
    pub b: String,
    /// Count threshold factor, as `p/q` text.
    pub c: String,
    /// `counts[k] = #{i : d(k + ω(i), i) >= b·n}`.
    pub counts: Vec<usize>,
    pub is_bumpy: bool,
    /// First shift achieving the minimum count.
    pub worst_shift: usize,
}

impl BumpinessReport {
    pub fn params(&self) -> BumpinessParams {
        BumpinessParams::parse(&self.b, &self.c).expect("report carries validated params")
    }
}

/// The odd-first interleaving permutation: `ω(j) = 2j - 1` on the first half,
/// then the even values in order (`ω(n) = n` when `n` is even).
pub fn hard_permutation(n: usize) -> Result<Permutation> {
    if n < 2 {
        return Err(Error::Domain(format!("hard permutation needs n >= 2, got {n}")));
    }
    let half = n.div_ceil(2);
    let images: Vec<usize> = (1..=n)
        .map(|j| if j <= half { 2 * j - 1 } else { 2 * (j - half) })
        .collect();
    Permutation::from_images(&images)
}

/// Checks `d_{2m-1}, d_{2m} >= n/2 - m` for every `1 <= m <= n/2` on the
/// sorted profile of `τ^k ∘ p`, for every shift `k`.
pub fn verify_profile_chain(p: &Permutation) -> bool {
    let n = p.n();
    (0..n).all(|k| {
        let prof = DisplacementProfile::of_shift(p, k);
        let d = prof.sorted();
        (1..=n / 2).all(|m| {
            // d >= n/2 - m  <=>  2d >= n - 2m
            let need = n as i64 - 2 * m as i64;
            2 * d[2 * m - 2] as i64 >= need && 2 * d[2 * m - 1] as i64 >= need
        })
    })
}

/// The profile guarantee for [`hard_permutation`]`(n)`.
pub fn verify_lemma33(n: usize) -> bool {
    match hard_permutation(n) {
        Ok(w) if n >= 3 => verify_profile_chain(&w),
        _ => false,
    }
}

pub fn shift_counts(p: &Permutation, params: &BumpinessParams) -> Vec<usize> {
    let n = p.n();
    // histogram of ω(i) - i mod n; d(k + ω(i), i) depends only on that residue plus k
    let mut hist = vec![0usize; n];
    for (i, &v) in p.as_zero_based().iter().enumerate() {
        hist[(v + n - i) % n] += 1;
    }
    let far: Vec<bool> = (0..n).map(|r| params.far_enough(circ(r, 0, n), n)).collect();
    (0..n)
        .map(|k| {
            hist.iter()
                .enumerate()
                .filter(|&(r, _)| far[(r + k) % n])
                .map(|(_, &h)| h)
                .sum()
        })
        .collect()
}

pub fn is_bc_bumpy(p: &Permutation, params: &BumpinessParams) -> BumpinessReport {
    let n = p.n();
    let counts = shift_counts(p, params);
    let (worst_shift, &worst) = counts.iter().enumerate().min_by_key(|&(k, &c)| (c, k)).expect("n >= 2");
    BumpinessReport {
        n,
        b: ratio_text(&params.b),
        c: ratio_text(&params.c),
        is_bumpy: params.enough(worst, n),
        worst_shift,
        counts,
    }
}

/// Cheaper than [`is_bc_bumpy`]: stops at the first failing shift.
pub fn is_bumpy_with(p: &Permutation, params: &BumpinessParams) -> bool {
    let n = p.n();
    let mut hist = vec![0usize; n];
    for (i, &v) in p.as_zero_based().iter().enumerate() {
        hist[(v + n - i) % n] += 1;
    }
    let far: Vec<bool> = (0..n).map(|r| params.far_enough(circ(r, 0, n), n)).collect();
    (0..n).all(|k| {
        let count: usize = hist
            .iter()
            .enumerate()
            .filter(|&(r, _)| far[(r + k) % n])
            .map(|(_, &h)| h)
            .sum();
        params.enough(count, n)
    })
}

pub fn is_very_bumpy(p: &Permutation) -> bool {
    is_bumpy_with(p, &BumpinessParams::very_bumpy())
}

/// `ceil(n²/32 - 3)` clamped at 0, for very bumpy `p` only.
pub fn bumpy_word_lower_bound(p: &Permutation) -> Result<u64> {
    if !is_very_bumpy(p) {
        return Err(Error::Precondition(format!("{p} is not very bumpy")));
    }
    Ok(ceil_clamped(lemma52_formula(p.n())))
}

/// The fixed-`m` route behind the `n²/32 - 3` bound: adjacent-transposition
/// bound at `m = ⌊n/8⌋`, minimised over shifts, then `2i - 1`. Dominated by
/// [`crate::bounds::word_lower_bound`]; kept for cross-checking.
pub fn lemma52_chain_bound(p: &Permutation) -> u64 {
    let n = p.n();
    let m = n / 8;
    let i = (0..n)
        .map(|k| DisplacementProfile::of_shift(p, k).adjacent_bound_at(m))
        .min()
        .unwrap_or(0);
    (2 * i - 1).max(0) as u64
}

/// Counting bound on permutations that are not very bumpy:
/// `n · C(n, p) · ((n+4)/4)^p · (n-p)!` with `p = n - ⌈n/4⌉`.
#[derive(Clone, Debug, PartialEq)]
pub struct NotBumpyBound {
    pub n: usize,
    pub p: usize,
    pub count: BigRational,
    /// `count / n!`
    pub ratio: BigRational,
}

impl NotBumpyBound {
    /// `ln(ratio)`; finite for any positive ratio regardless of magnitude.
    pub fn ln_ratio(&self) -> f64 {
        ln_big(self.ratio.numer()) - ln_big(self.ratio.denom())
    }
}

fn ln_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top: BigInt = x >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

fn big_factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn not_bumpy_count_bound(n: usize) -> Result<NotBumpyBound> {
    if n < 4 {
        return Err(Error::Domain(format!("counting bound needs n >= 4, got {n}")));
    }
    check_size(n)?;
    let p = n - n.div_ceil(4);
    let base = BigRational::new(BigInt::from(n + 4), BigInt::from(4));
    let power = num_traits::pow(base, p);
    let choose: BigInt = binomial(BigInt::from(n), BigInt::from(p));
    let count = power * BigRational::from_integer(BigInt::from(n) * choose * big_factorial(n - p));
    let ratio = &count / BigRational::from_integer(big_factorial(n));
    debug_assert!(!count.is_negative() && !ratio.is_zero());
    Ok(NotBumpyBound { n, p, count, ratio })
}

impl fmt::Display for BumpinessParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b = {}, c = {}", self.b, self.c)
    }
}

impl FromStr for BumpinessParams {
    type Err = Error;

    /// `"b,c"`, e.g. `"1/8,1/4"`.
    fn from_str(s: &str) -> Result<Self> {
        let (b, c) = s.split_once(',').ok_or_else(|| Error::Parse {
            position: 0,
            message: "expected \"b,c\"".into(),
        })?;
        Self::parse(b, c)
    }
}
