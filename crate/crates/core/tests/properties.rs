use permword::bounds::{displacement_profile, word_lower_bound, DisplacementProfile};
use permword::bumpiness::{hard_permutation, is_very_bumpy, lemma52_chain_bound};
use permword::oracle::{factorial, rank, unrank};
use permword::stats::sample_permutation;
use permword::synthesis::{synthesize, transposition_word, upper_formula};
use permword::{cyclic_distance, evaluate_word, free_reduce, parse_word, Generator, Permutation, Word};
use proptest::prelude::*;

fn arb_word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(Generator::ALL.to_vec()), 0..=max).prop_map(Word::from_letters)
}

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

proptest! {
    #[test]
    fn word_text_round_trip(w in arb_word(60), n in 2usize..20) {
        let back = parse_word(&w.to_string()).unwrap();
        prop_assert_eq!(&back, &w);
        prop_assert_eq!(evaluate_word(&back, n).unwrap(), evaluate_word(&w, n).unwrap());
    }

    #[test]
    fn permutation_text_round_trip(p in (2usize..40).prop_flat_map(arb_perm)) {
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn group_axioms(n in 2usize..16, seed in any::<u64>()) {
        let p = sample_permutation(n, seed, 0).unwrap();
        let q = sample_permutation(n, seed, 1).unwrap();
        let r = sample_permutation(n, seed, 2).unwrap();
        let id = Permutation::identity(n).unwrap();
        prop_assert_eq!(p.compose(&q).unwrap().compose(&r).unwrap(), p.compose(&q.compose(&r).unwrap()).unwrap());
        prop_assert_eq!(p.compose(&id).unwrap(), p.clone());
        prop_assert_eq!(id.compose(&p).unwrap(), p.clone());
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
    }

    #[test]
    fn free_reduce_preserves_value(w in arb_word(200), n in 2usize..12) {
        let r = free_reduce(&w);
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(free_reduce(&r), r.clone());
        prop_assert_eq!(evaluate_word(&r, n).unwrap(), evaluate_word(&w, n).unwrap());
        for pair in r.letters().windows(2) {
            prop_assert_ne!(pair[0], pair[1].inverse());
        }
    }

    #[test]
    fn transposition_words(n in 2usize..60, a in 1usize..60, b in 1usize..60) {
        let (k, l) = (a.min(b), a.max(b));
        prop_assume!(k < l && l <= n);
        let w = transposition_word(n, k, l).unwrap();
        prop_assert!(w.len() <= 3 * (n - 1));
        prop_assert_eq!(evaluate_word(&w, n).unwrap(), Permutation::transposition(n, k, l).unwrap());
    }
}

#[test]
fn cyclic_distance_is_a_metric() {
    for n in 2..=64 {
        for x in 1..=n {
            assert!(cyclic_distance(x, x, n).unwrap() == 0);
            for y in 1..=n {
                let dxy = cyclic_distance(x, y, n).unwrap();
                assert_eq!(dxy, cyclic_distance(y, x, n).unwrap());
                assert!(dxy <= n / 2);
                assert_eq!(dxy == 0, x == y);
                for z in 1..=n {
                    assert!(dxy <= cyclic_distance(x, z, n).unwrap() + cyclic_distance(z, y, n).unwrap());
                }
            }
        }
    }
}

#[test]
fn generators_move_points_by_at_most_one() {
    for n in 2..=64 {
        for g in Generator::ALL {
            let p = g.to_permutation(n).unwrap();
            for x in 1..=n {
                assert!(cyclic_distance(x, p.apply(x), n).unwrap() <= 1);
            }
        }
    }
}

#[test]
fn synthesis_random_correctness_and_budget() {
    for i in 0..10_000u64 {
        let n = 2 + (i % 63) as usize;
        let p = sample_permutation(n, 2024, i).unwrap();
        let w = synthesize(&p).unwrap();
        assert_eq!(evaluate_word(&w, n).unwrap(), p, "n={n}");
        assert!(w.len() as u64 <= upper_formula(n));
    }
}

#[test]
fn rank_round_trip() {
    for i in 0..10_000u64 {
        let n = 2 + (i % 19) as usize;
        let p = sample_permutation(n, 77, i).unwrap();
        let r = rank(&p);
        assert!(r < factorial(n));
        assert_eq!(unrank(r, n).unwrap(), p);
    }
}

#[test]
fn odd_hard_permutation_shifts_share_one_profile() {
    for n in (5..=61).step_by(2) {
        let w = hard_permutation(n).unwrap();
        let base = displacement_profile(&w);
        for k in 0..n {
            assert_eq!(DisplacementProfile::of_shift(&w, k), base, "n={n} k={k}");
        }
        // {0, 1, 1, 2, 2, ..., (n-1)/2, (n-1)/2}
        let mut expected: Vec<usize> = (1..=(n - 1) / 2).flat_map(|d| [d, d]).collect();
        expected.push(0);
        expected.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(base.sorted(), &expected[..]);
    }
}

#[test]
fn fixed_m_chain_never_beats_word_bound() {
    for n in 3..=7 {
        for r in 0..factorial(n) {
            let p = unrank(r, n).unwrap();
            if is_very_bumpy(&p) {
                assert!(lemma52_chain_bound(&p) <= word_lower_bound(&p));
            }
        }
    }
    for n in [16, 24, 40, 64, 100] {
        let p = hard_permutation(n).unwrap();
        assert!(lemma52_chain_bound(&p) <= word_lower_bound(&p));
    }
}

#[test]
fn hard_permutation_is_very_bumpy_from_16_to_512() {
    for n in 16..=512 {
        assert!(is_very_bumpy(&hard_permutation(n).unwrap()), "n={n}");
    }
}
