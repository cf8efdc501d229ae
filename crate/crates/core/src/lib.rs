//! Generator words and gate-complexity bounds for permutations of
//! `{1, ..., n}` over the gates `{σ, τ, τ⁻¹}`, where `σ = (1 2)` and
//! `τ: k ↦ k+1 (mod n)`.
//!
//! * [`synthesis`] builds explicit words of length at most `3(n-1)²`;
//! * [`bounds`] certifies lower bounds from circular displacement;
//! * [`bumpiness`] covers the explicit hard permutation and the bumpiness
//!   predicates behind the almost-all quadratic bound;
//! * [`oracle`] computes exact complexity by BFS on `S_n` for `n <= 10`;
//! * [`stats`] runs seeded, thread-count independent experiments.
//!
//! Words apply their rightmost letter first, and all text forms are 1-indexed.
//!
//! ```
//! use permword::{parse_permutation, evaluate_word};
//! use permword::synthesis::synthesize;
//! use permword::bounds::word_lower_bound;
//!
//! let p = parse_permutation("1 3 5 2 4").unwrap();
//! let w = synthesize(&p).unwrap();
//! assert_eq!(evaluate_word(&w, 5).unwrap(), p);
//! assert!(word_lower_bound(&p) as usize <= w.len());
//! ```

pub mod bounds;
pub mod bumpiness;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod stats;
pub mod synthesis;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use perm::{cyclic_distance, format_permutation, parse_permutation, Permutation};
pub use word::{
    evaluate_word, format_word, free_reduce, make_sigma, make_tau, make_tau_inv, parse_word, Generator, Word,
};
