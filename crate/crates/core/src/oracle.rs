//! Exact gate complexity for small `n` by breadth-first search over the
//! Cayley graph of `S_n` with generators `{σ, τ, τ⁻¹}`.
//!
//! States are permutation ranks (Lehmer code, `0..n!`), so a finished table
//! is a flat byte array of distances. Edges multiply by a generator on the
//! left: from `p` we reach `g ∘ p`, which is `p` with one more letter prepended
//! as `ρ₁`. Because the generating set is closed under inversion, right
//! multiplication would give the same distances (`d(p) = d(p⁻¹)`).

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::perm::{check_size, Permutation};
use crate::word::{Generator, Word};

/// Largest `n` built without an explicit override.
pub const DEFAULT_LIMIT: usize = 10;
/// Hard ceiling: `n!` must index a byte array and ranks must fit in `u64`.
pub const MAX_SUPPORTED: usize = 13;

const MAGIC: &[u8; 4] = b"PWC1";
const UNSEEN: u8 = u8::MAX;

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Lehmer-code rank of `p` in `0..n!`; the identity has rank 0.
pub fn rank(p: &Permutation) -> u64 {
    rank_slice(p.as_zero_based())
}

fn rank_slice(map: &[usize]) -> u64 {
    let n = map.len();
    let mut used: u64 = 0;
    let mut r: u64 = 0;
    for (i, &v) in map.iter().enumerate() {
        let smaller_unused = v as u32 - (used & ((1u64 << v) - 1)).count_ones();
        r = r * (n - i) as u64 + smaller_unused as u64;
        used |= 1 << v;
    }
    r
}

/// Inverse of [`rank`].
pub fn unrank(r: u64, n: usize) -> Result<Permutation> {
    check_size(n)?;
    if n > 20 {
        return Err(Error::Capability(format!("rank arithmetic supports n <= 20, got {n}")));
    }
    if r >= factorial(n) {
        return Err(Error::Domain(format!("rank {r} outside 0..{n}!")));
    }
    let mut map = vec![0; n];
    unrank_into(r, &mut map);
    Ok(Permutation::from_zero_based_unchecked(map))
}

fn unrank_into(mut r: u64, out: &mut [usize]) {
    let n = out.len();
    // mixed-radix digits, least significant last
    for i in (0..n).rev() {
        let radix = (n - i) as u64;
        out[i] = (r % radix) as usize;
        r /= radix;
    }
    let mut used: u64 = 0;
    for slot in out.iter_mut() {
        let mut skip = *slot;
        let mut v = 0;
        loop {
            if used & (1 << v) == 0 {
                if skip == 0 {
                    break;
                }
                skip -= 1;
            }
            v += 1;
        }
        used |= 1 << v;
        *slot = v;
    }
}

/// Options for [`build_table_with`].
#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub limit: usize,
    /// Record the first letter of one geodesic per state. Doubles memory.
    pub track_parents: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            limit: DEFAULT_LIMIT,
            track_parents: true,
        }
    }
}

/// Approximate bytes needed for a table on `n` points.
pub fn memory_estimate(n: usize, track_parents: bool) -> u64 {
    let states = factorial(n);
    states * if track_parents { 2 } else { 1 } + states * 4 / 3
}

/// Geodesic distances from the identity for every element of `S_n`.
#[derive(Clone)]
pub struct ComplexityTable {
    n: usize,
    distance: Vec<u8>,
    parent: Option<Vec<u8>>,
    sphere_sizes: Vec<u64>,
}

impl std::fmt::Debug for ComplexityTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ComplexityTable")
            .field("n", &self.n)
            .field("states", &self.distance.len())
            .field("parents", &self.parent.is_some())
            .field("sphere_sizes", &self.sphere_sizes)
            .finish()
    }
}

/// Builds the table for `n` with the default limit and parent tracking.
pub fn build_table(n: usize) -> Result<ComplexityTable> {
    build_table_with(n, BuildOptions::default())
}

pub fn build_table_with(n: usize, opts: BuildOptions) -> Result<ComplexityTable> {
    check_size(n)?;
    let limit = opts.limit.min(MAX_SUPPORTED);
    if n > limit {
        return Err(Error::Capability(format!(
            "oracle limit is n <= {limit}; n = {n} has {} states and needs about {} MiB",
            factorial(n),
            memory_estimate(n, opts.track_parents) >> 20
        )));
    }
    let states = factorial(n) as usize;
    let mut distance = vec![UNSEEN; states];
    let mut parent = opts.track_parents.then(|| vec![UNSEEN; states]);
    let mut sphere_sizes = vec![1u64];

    distance[0] = 0;
    let mut frontier: Vec<u32> = vec![0];
    let mut next: Vec<u32> = Vec::new();
    let mut cur = vec![0usize; n];
    let mut img = vec![0usize; n];
    let mut level: u8 = 0;
    while !frontier.is_empty() {
        if level == UNSEEN - 1 {
            return Err(Error::Capability("distance overflowed one byte".into()));
        }
        for &r in &frontier {
            unrank_into(r as u64, &mut cur);
            for (gi, g) in Generator::ALL.iter().enumerate() {
                for (dst, &v) in img.iter_mut().zip(&cur) {
                    *dst = g.act(v, n);
                }
                let s = rank_slice(&img) as usize;
                if distance[s] == UNSEEN {
                    distance[s] = level + 1;
                    if let Some(par) = parent.as_mut() {
                        par[s] = gi as u8;
                    }
                    next.push(s as u32);
                }
            }
        }
        if !next.is_empty() {
            sphere_sizes.push(next.len() as u64);
        }
        std::mem::swap(&mut frontier, &mut next);
        next.clear();
        level += 1;
    }
    Ok(ComplexityTable {
        n,
        distance,
        parent,
        sphere_sizes,
    })
}

impl ComplexityTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_parents(&self) -> bool {
        self.parent.is_some()
    }

    /// `sphere_sizes()[d]` = number of permutations at distance `d`.
    pub fn sphere_sizes(&self) -> &[u64] {
        &self.sphere_sizes
    }

    pub fn diameter(&self) -> usize {
        self.sphere_sizes.len() - 1
    }

    pub fn distances(&self) -> &[u8] {
        &self.distance
    }

    pub fn distance_of_rank(&self, r: u64) -> Option<u8> {
        self.distance.get(r as usize).copied()
    }

    fn check_n(&self, p: &Permutation) -> Result<()> {
        if p.n() != self.n {
            return Err(Error::Capability(format!(
                "table built for n = {}, permutation has n = {}",
                self.n,
                p.n()
            )));
        }
        Ok(())
    }

    pub fn exact_complexity(&self, p: &Permutation) -> Result<usize> {
        self.check_n(p)?;
        Ok(self.distance[rank(p) as usize] as usize)
    }

    /// One shortest word for `p`, following parent pointers back to the identity.
    pub fn geodesic_word(&self, p: &Permutation) -> Result<Word> {
        self.check_n(p)?;
        let parent = self
            .parent
            .as_ref()
            .ok_or_else(|| Error::Capability("table was built without parent tracking".into()))?;
        let mut cur = p.as_zero_based().to_vec();
        let mut r = rank_slice(&cur) as usize;
        let mut w = Word::new();
        while r != 0 {
            let g = Generator::ALL[parent[r] as usize];
            w.push(g);
            let inv = g.inverse();
            for v in cur.iter_mut() {
                *v = inv.act(*v, self.n);
            }
            r = rank_slice(&cur) as usize;
        }
        Ok(w)
    }

    /// Binary export: `PWC1`, `n` as u64 little-endian, then `n!` distance bytes in rank order.
    pub fn write_binary<W: Write>(&self, mut out: W) -> Result<()> {
        out.write_all(MAGIC)?;
        out.write_all(&(self.n as u64).to_le_bytes())?;
        out.write_all(&self.distance)?;
        out.flush()?;
        Ok(())
    }

    /// Reads a table written by [`write_binary`](Self::write_binary). Parent data is not stored.
    pub fn read_binary<R: Read>(mut input: R) -> Result<ComplexityTable> {
        let bad = |m: String| Error::Parse {
            position: 0,
            message: m,
        };
        let mut magic = [0u8; 4];
        input.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(bad(format!("bad magic {magic:?}")));
        }
        let mut nb = [0u8; 8];
        input.read_exact(&mut nb)?;
        let n = u64::from_le_bytes(nb) as usize;
        if !(2..=MAX_SUPPORTED).contains(&n) {
            return Err(bad(format!("unsupported n = {n}")));
        }
        let states = factorial(n) as usize;
        let mut distance = Vec::with_capacity(states);
        input.read_to_end(&mut distance)?;
        if distance.len() != states {
            return Err(Error::Parse {
                position: 12 + distance.len().min(states),
                message: format!("expected {states} distance bytes, found {}", distance.len()),
            });
        }
        if distance[0] != 0 {
            return Err(bad("identity distance is not 0".into()));
        }
        let mut sphere_sizes: Vec<u64> = Vec::new();
        for (i, &d) in distance.iter().enumerate() {
            if d == UNSEEN {
                return Err(Error::Parse {
                    position: 12 + i,
                    message: "unreached state".into(),
                });
            }
            let d = d as usize;
            if sphere_sizes.len() <= d {
                sphere_sizes.resize(d + 1, 0);
            }
            sphere_sizes[d] += 1;
        }
        if sphere_sizes.contains(&0) {
            return Err(bad("distance levels are not contiguous".into()));
        }
        Ok(ComplexityTable {
            n,
            distance,
            parent: None,
            sphere_sizes,
        })
    }

    /// `distance,count` lines, no header.
    pub fn spheres_csv(&self) -> String {
        self.sphere_sizes
            .iter()
            .enumerate()
            .map(|(d, c)| format!("{d},{c}"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::evaluate_word;

    #[test]
    fn rank_unrank_basics() {
        let id = Permutation::identity(4).unwrap();
        assert_eq!(rank(&id), 0);
        assert_eq!(unrank(0, 4).unwrap(), id);
        assert_eq!(rank(&Permutation::from_images(&[4, 3, 2, 1]).unwrap()), 23);
        assert!(matches!(unrank(24, 4), Err(Error::Domain(_))));
        for r in 0..120 {
            assert_eq!(rank(&unrank(r, 5).unwrap()), r);
        }
    }

    #[test]
    fn s3_spheres() {
        let t = build_table(3).unwrap();
        assert_eq!(t.sphere_sizes(), &[1, 3, 2]);
        assert_eq!(t.spheres_csv(), "0,1\n1,3\n2,2");
    }

    #[test]
    fn small_distances() {
        let t4 = build_table(4).unwrap();
        assert_eq!(t4.exact_complexity(&Permutation::tau_power(4, 2).unwrap()).unwrap(), 2);
        let t8 = build_table(8).unwrap();
        assert_eq!(t8.exact_complexity(&Permutation::tau_power(8, 4).unwrap()).unwrap(), 4);
        assert_eq!(t8.exact_complexity(&Permutation::sigma(8).unwrap()).unwrap(), 1);
        assert_eq!(t8.exact_complexity(&Permutation::identity(8).unwrap()).unwrap(), 0);
        for n in 4..=7 {
            let t = build_table(n).unwrap();
            let swap23 = Permutation::transposition(n, 2, 3).unwrap();
            assert_eq!(t.exact_complexity(&swap23).unwrap(), 3);
        }
    }

    #[test]
    fn geodesics() {
        let t = build_table(5).unwrap();
        assert!(t.geodesic_word(&Permutation::identity(5).unwrap()).unwrap().is_empty());
        assert_eq!(
            t.geodesic_word(&Permutation::tau_inv(5).unwrap()).unwrap().to_string(),
            "T"
        );
        for r in 0..120 {
            let p = unrank(r, 5).unwrap();
            let w = t.geodesic_word(&p).unwrap();
            assert_eq!(evaluate_word(&w, 5).unwrap(), p);
            assert_eq!(w.len(), t.exact_complexity(&p).unwrap());
        }
    }

    #[test]
    fn capability_errors() {
        assert!(matches!(build_table(11), Err(Error::Capability(_))));
        let t = build_table_with(
            4,
            BuildOptions {
                track_parents: false,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(matches!(
            t.geodesic_word(&Permutation::sigma(4).unwrap()),
            Err(Error::Capability(_))
        ));
        assert!(matches!(
            t.exact_complexity(&Permutation::sigma(5).unwrap()),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn binary_round_trip() {
        let t = build_table(6).unwrap();
        let mut buf = Vec::new();
        t.write_binary(&mut buf).unwrap();
        assert_eq!(&buf[..4], b"PWC1");
        assert_eq!(&buf[4..12], &6u64.to_le_bytes());
        assert_eq!(buf.len(), 12 + 720);
        let back = ComplexityTable::read_binary(&buf[..]).unwrap();
        assert_eq!(back.distances(), t.distances());
        assert_eq!(back.sphere_sizes(), t.sphere_sizes());
        assert!(!back.has_parents());
        buf.pop();
        assert!(ComplexityTable::read_binary(&buf[..]).is_err());
        buf[0] = b'X';
        assert!(ComplexityTable::read_binary(&buf[..]).is_err());
    }
}
