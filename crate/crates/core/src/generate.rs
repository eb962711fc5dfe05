//! Seeded random graph generators.
//!
//! All randomness in this crate flows from a [`Seed`]: a 64-bit value that
//! expands into a counter-based ChaCha8 stream. The same `(parameters, seed)`
//! pair always produces the same graph, on every platform, regardless of how
//! many threads the caller uses elsewhere.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::float;
use crate::graph::{Graph, VertexSet};

/// A 64-bit seed for deterministic randomness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Seed(u64);

impl Seed {
    pub fn new(value: u64) -> Seed {
        Seed(value)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// Derives an independent substream seed. Derivation is a splitmix64
    /// step over the seed xor a stream label, so `derive(a) != derive(b)`
    /// streams are uncorrelated and the mapping is stable forever.
    pub fn derive(self, stream: u64) -> Seed {
        Seed(splitmix64(
            self.0 ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15),
        ))
    }

    /// The ChaCha8 generator for this seed.
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Samples G(n, p): each of the C(n,2) possible edges appears independently
/// with probability `p`.
///
/// Sparse regime (`p < 0.1`) uses geometric skipping over the lexicographic
/// pair stream, so the cost is O(n + m) rather than O(n^2). Dense regime
/// scans all pairs. `p = 0` and `p = 1` are exact (edgeless and complete).
pub fn gnp(n: usize, p: f64, seed: Seed) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    if n < 2 || p == 0.0 {
        return Ok(Graph::empty(n));
    }
    let mut rng = seed.rng();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if p < 0.1 {
        // Walk the pair stream (0,1),(0,2),...,(n-2,n-1) jumping a
        // geometric number of candidates between hits.
        let ln_q = float::ln(1.0 - p);
        let mut u = 0usize;
        let mut v = 1usize;
        let mut first = true;
        loop {
            let draw: f64 = rng.random();
            // draw is in [0,1); 1-draw is in (0,1] so the log is finite
            let skip = float::floor(float::ln(1.0 - draw) / ln_q) as usize;
            let step = if first { skip } else { skip + 1 };
            first = false;
            let mut rem = step;
            loop {
                let row_left = n - v;
                if rem < row_left {
                    v += rem;
                    break;
                }
                rem -= row_left;
                u += 1;
                if u >= n - 1 {
                    return Graph::from_edges(n, edges);
                }
                v = u + 1;
            }
            edges.push((u, v));
        }
    } else {
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges)
    }
}

/// Samples a uniform-ish random `d`-regular graph via the pairing model:
/// each vertex gets `d` stubs, stubs are shuffled and paired, and any pair
/// that would form a loop or a repeated edge is rejected and re-shuffled
/// with the other leftovers. When the leftover stubs admit no valid pair at
/// all, the whole pairing restarts. Restarts count against a cap of
/// `10 * n * d`, after which the call errors (in practice the cap is
/// unreachable for d well below n).
pub fn random_regular(n: usize, d: usize, seed: Seed) -> Result<Graph> {
    if d >= n && !(n == 0 && d == 0) {
        return Err(Error::InvalidParameter("regular degree must satisfy d < n"));
    }
    if !(n * d).is_multiple_of(2) {
        return Err(Error::InvalidParameter(
            "n * d must be even for a d-regular graph",
        ));
    }
    if d == 0 {
        return Ok(Graph::empty(n));
    }
    let mut rng = seed.rng();
    let max_restarts = 10 * n * d;
    for _ in 0..max_restarts {
        if let Some(edges) = try_pairing(n, d, &mut rng) {
            return Graph::from_edges(n, edges);
        }
    }
    Err(Error::GenerationExhausted {
        attempts: max_restarts,
    })
}

fn try_pairing(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(usize, usize)>> {
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| core::iter::repeat_n(v, d)).collect();
    let mut present = alloc::collections::BTreeSet::new();
    let mut edges = Vec::with_capacity(n * d / 2);
    while !stubs.is_empty() {
        stubs.shuffle(rng);
        let mut leftovers = Vec::new();
        let mut progressed = false;
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            let key = (u.min(v), u.max(v));
            if u != v && present.insert(key) {
                edges.push(key);
                progressed = true;
            } else {
                leftovers.push(u);
                leftovers.push(v);
            }
        }
        if leftovers.is_empty() {
            return Some(edges);
        }
        if !progressed && !pairable(&leftovers, &present) {
            return None;
        }
        stubs = leftovers;
    }
    Some(edges)
}

/// Whether any two leftover stubs can still form a new simple edge.
fn pairable(stubs: &[usize], present: &alloc::collections::BTreeSet<(usize, usize)>) -> bool {
    let mut distinct: Vec<usize> = stubs.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for (i, &u) in distinct.iter().enumerate() {
        for &v in &distinct[i + 1..] {
            if !present.contains(&(u, v)) {
                return true;
            }
        }
    }
    false
}

/// Splits `0..n` (n even) uniformly into two halves of size n/2.
pub fn random_equal_bipartition(n: usize, seed: Seed) -> Result<(VertexSet, VertexSet)> {
    if !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(
            "equal bipartition needs an even vertex count",
        ));
    }
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(&mut seed.rng());
    let right = ids.split_off(n / 2);
    Ok((VertexSet::new(ids), VertexSet::new(right)))
}
