//! Acceptance criteria. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion; exits non-zero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use permword::bounds::{displacement_lower_bound, word_lower_bound};
use permword::bumpiness::{hard_permutation, not_bumpy_count_bound, verify_lemma33, BumpinessParams};
use permword::oracle::{build_table, factorial, unrank, BuildOptions};
use permword::stats::bumpy_fraction_estimate;
use permword::synthesis::{synthesize, transposition_1l_word};
use permword::{cyclic_distance, evaluate_word, Permutation};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, ok: impl Into<String>, fail: impl Into<String>) -> Outcome {
    if cond {
        Ok(ok.into())
    } else {
        Err(fail.into())
    }
}

/// Exhaustive sandwich on S₃..S₇, under one minute.
fn ac1_sandwich() -> Outcome {
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut checked = 0u64;
    for n in 3..=7usize {
        let table = permword::oracle::build_table_with(
            n,
            BuildOptions {
                track_parents: false,
                ..Default::default()
            },
        )
        .map_err(|e| e.to_string())?;
        let budget = 3 * (n as u64 - 1).pow(2);
        for r in 0..factorial(n) {
            let p = unrank(r, n).unwrap();
            let lb = displacement_lower_bound(&p).max(word_lower_bound(&p));
            let exact = table.exact_complexity(&p).unwrap() as u64;
            let w = synthesize(&p).unwrap();
            let len = w.len() as u64;
            if evaluate_word(&w, n).unwrap() != p || !(lb <= exact && exact <= len && len <= budget) {
                violations.push(format!("{p}: {lb} <= {exact} <= {len} <= {budget}"));
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    check(
        violations.is_empty() && elapsed < Duration::from_secs(60),
        format!("{checked} permutations, 0 violations, {elapsed:.2?}"),
        format!(
            "{} violations ({:?}), {elapsed:.2?}",
            violations.len(),
            violations.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

/// (1 l) words have length exactly min{4l-7, 4(n-l)+3} <= 2n-3, n = 3..100.
fn ac2_transposition_lengths() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 3..=100usize {
        let target_of = |l: usize| Permutation::transposition(n, 1, l).unwrap();
        for l in 2..=n {
            let want = (4 * l - 7).min(4 * (n - l) + 3);
            match transposition_1l_word(n, l) {
                Ok(w) if w.len() == want && want <= 2 * n - 3 && evaluate_word(&w, n).unwrap() == target_of(l) => {}
                Ok(w) => bad.push(format!("n={n} l={l} len={} want={want}", w.len())),
                Err(e) => bad.push(format!("n={n} l={l}: {e}")),
            }
            count += 1;
        }
    }
    check(
        bad.is_empty(),
        format!("{count} (n, l) pairs exact"),
        format!("{bad:?}"),
    )
}

/// word_lower_bound(ω_n) >= ceil((n²-2n-7)/4), n = 9..200; 23 at n = 11.
fn ac3_dominance() -> Outcome {
    let ceil_div4 = |x: i64| (x + 3).div_euclid(4);
    let rhs = |n: i64| ceil_div4(n * n - 2 * n - 7);
    if rhs(11) != 23 {
        return Err(format!("formula at 11 is {}", rhs(11)));
    }
    let bad: Vec<String> = (9..=200usize)
        .filter_map(|n| {
            let lb = word_lower_bound(&hard_permutation(n).unwrap()) as i64;
            (lb < rhs(n as i64)).then(|| format!("n={n}: {lb} < {}", rhs(n as i64)))
        })
        .collect();
    let at11 = word_lower_bound(&hard_permutation(11).unwrap());
    check(
        bad.is_empty(),
        format!("n=9..200 dominate; n=11 bound {at11} >= 23"),
        format!("{bad:?}"),
    )
}

fn ac4_profile() -> Outcome {
    let bad: Vec<usize> = (5..=200).filter(|&n| !verify_lemma33(n)).collect();
    check(bad.is_empty(), "n=5..200 all shifts hold", format!("fails at {bad:?}"))
}

/// Brute force straight from the definition: for every shift k, at least
/// n/4 indices with d(k + ω(i), i) >= n/8.
fn very_bumpy_by_definition(p: &Permutation) -> bool {
    let n = p.n();
    (0..n).all(|k| {
        let far = (1..=n)
            .filter(|&i| {
                let shifted = (k + p.apply(i) - 1) % n + 1;
                8 * cyclic_distance(shifted, i, n).unwrap() >= n
            })
            .count();
        4 * far >= n
    })
}

fn ac5_characterization() -> Outcome {
    let n = 8;
    let mut failing = Vec::new();
    for r in 0..factorial(n) {
        let p = unrank(r, n).unwrap();
        if !very_bumpy_by_definition(&p) {
            failing.push(p);
        }
    }
    let lib = permword::stats::exhaustive_bumpy_count(n).map_err(|e| e.to_string())?;
    let powers: Vec<Permutation> = (0..8).map(|j| Permutation::tau_power(8, j).unwrap()).collect();
    let all_powers = failing.len() == 8 && powers.iter().all(|t| failing.contains(t));
    check(
        all_powers && lib == (40312, 40320),
        "8 non-very-bumpy (tau powers); 40312 of 40320",
        format!("found {} failing, library count {lib:?}", failing.len()),
    )
}

fn ac6_trend() -> Outcome {
    let start = Instant::now();
    let params = BumpinessParams::very_bumpy();
    let mut notes = Vec::new();
    let mut ok = true;
    for n in [64, 128, 256, 512] {
        let r = bumpy_fraction_estimate(n, 2000, 2024, &params).map_err(|e| e.to_string())?;
        ok &= r.fraction >= 0.99;
        notes.push(format!("n={n}: {:.4}", r.fraction));
    }
    let r8 = bumpy_fraction_estimate(8, 100_000, 2024, &params).map_err(|e| e.to_string())?;
    let target = 40312.0 / 40320.0;
    ok &= r8.ci_contains(target);
    notes.push(format!("n=8 CI [{:.5}, {:.5}] vs {target:.5}", r8.ci_low, r8.ci_high));
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(120);
    notes.push(format!("{elapsed:.2?}"));
    check(ok, notes.join(", "), notes.join(", "))
}

fn ac7_counting_bound() -> Outcome {
    // n·C(n,p)·((n+4)/4)^p·(n-p)! at n = 8, p = 6, by hand
    let direct: u64 = 8 * 28 * 3u64.pow(6) * 2;
    let b8 = not_bumpy_count_bound(8).map_err(|e| e.to_string())?;
    if direct != 326_592 || b8.count != BigRational::from_integer(BigInt::from(direct)) {
        return Err(format!("bound(8) = {} (direct {direct})", b8.count));
    }
    let ratios: Vec<_> = (4000..=8000)
        .step_by(400)
        .map(|n| not_bumpy_count_bound(n).unwrap())
        .collect();
    let below_one = ratios[0].ratio < BigRational::one();
    let decreasing = ratios.windows(2).all(|w| w[1].ratio < w[0].ratio);
    check(
        below_one && decreasing,
        format!(
            "bound(8) = 326592; ln ratio {:.1} at 4000 -> {:.1} at 8000",
            ratios[0].ln_ratio(),
            ratios[10].ln_ratio()
        ),
        format!("below_one={below_one} decreasing={decreasing}"),
    )
}

fn ac8_half_rotation() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for n in [4usize, 6, 8, 10] {
        let table = build_table(n).map_err(|e| e.to_string())?;
        let e = table
            .exact_complexity(&Permutation::tau_power(n, (n / 2) as i64).unwrap())
            .unwrap();
        ok &= e == n / 2;
        notes.push(format!("n={n}: {e}"));
    }
    check(ok, notes.join(", "), notes.join(", "))
}

fn ac9_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_permword");
    let run = |threads: &str| {
        Command::new(bin)
            .args([
                "fraction",
                "--n",
                "96",
                "--samples",
                "5000",
                "--seed",
                "11",
                "--threads",
                threads,
            ])
            .output()
            .map(|o| o.stdout)
            .map_err(|e| e.to_string())
    };
    let outs = [run("1")?, run("1")?, run("3")?, run("8")?];
    let same = outs.windows(2).all(|w| w[0] == w[1]) && !outs[0].is_empty();
    check(same, "byte-identical across 1/1/3/8 threads", "outputs differ")
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("AC1 sandwich soundness S_3..S_7", ac1_sandwich),
        ("AC2 (1 l) word lengths", ac2_transposition_lengths),
        ("AC3 hard permutation certificate dominance", ac3_dominance),
        ("AC4 hard permutation profile chain", ac4_profile),
        ("AC5 very-bumpy characterization at n=8", ac5_characterization),
        ("AC6 very-bumpy fraction trend", ac6_trend),
        ("AC7 counting-bound arithmetic", ac7_counting_bound),
        ("AC8 half rotation complexity", ac8_half_rotation),
        ("AC9 fraction determinism", ac9_determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(msg) => println!("[PASS] {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {name}: {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
