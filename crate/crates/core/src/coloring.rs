//! Vertex coloring: greedy and DSATUR heuristics, an exact small-n
//! chromatic number, degeneracy orders, and the partition-and-patch
//! procedure for coloring a union G ∪ H where H has small maximum degree.
//!
//! The pipeline in [`partition_color_union`] splits the vertices into
//! s = 2d·ln²(np) random parts, colors each part of G independently with
//! fresh colors (cross-part edges are then automatically bichromatic),
//! collects the vertices of H-edges that stayed monochromatic, and
//! recolors that small set along a degeneracy order of the union
//! subgraph with one more fresh palette. Properness of the result is an
//! unconditional guarantee; the color count is reported, not bounded.
//!
//! [`k0`] and [`cover_number_bruteforce`] support the second-moment
//! machinery: `k0(n, p)` is the largest k with C(n,k)(1-p)^C(k,2) ≥ n⁴,
//! and the cover number is the minimum number of vertex pairs meeting
//! every independent k-set, computed exactly at toy scale.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::float;
use crate::generate::Seed;
use crate::graph::Graph;

/// Exact chromatic search cap.
pub const EXACT_CHROMATIC_CAP: usize = 18;
/// Cover-number caps: vertices, and independent k-sets enumerated.
pub const COVER_VERTEX_CAP: usize = 12;
pub const COVER_SET_CAP: usize = 10_000;
/// Independence-number cap (bitmask search).
pub const INDEPENDENCE_CAP: usize = 40;

/// A proper vertex coloring: one color id per vertex plus the number of
/// distinct colors in use.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Coloring {
    colors: Vec<usize>,
    count: usize,
}

impl Coloring {
    fn from_colors(colors: Vec<usize>) -> Coloring {
        let distinct: BTreeSet<usize> = colors.iter().copied().collect();
        Coloring {
            count: distinct.len(),
            colors,
        }
    }

    /// Per-vertex color ids.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of distinct colors used.
    pub fn count(&self) -> usize {
        self.count
    }

    /// Whether no edge of `g` is monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

/// A degeneracy certificate: peeling vertices in `elimination_order`,
/// each has at most `d` neighbors among the vertices not yet peeled.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DegeneracyCertificate {
    pub d: usize,
    pub elimination_order: Vec<usize>,
}

impl DegeneracyCertificate {
    /// Re-checks the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.elimination_order.len() != n {
            return false;
        }
        let mut remaining = vec![true; n];
        let mut seen = vec![false; n];
        for &v in &self.elimination_order {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
            let back = g
                .neighbors(v)
                .expect("vertex in range")
                .iter()
                .filter(|&&w| remaining[w] && w != v)
                .count();
            if back > self.d {
                return false;
            }
            remaining[v] = false;
        }
        true
    }
}

/// Colors vertices in the given order, assigning each the smallest color
/// absent from its already-colored neighbors.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<Coloring> {
    let n = g.n();
    if order.len() != n {
        return Err(Error::SizeMismatch {
            left: order.len(),
            right: n,
        });
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if seen[v] {
            return Err(Error::NotAPermutation { vertex: v });
        }
        seen[v] = true;
    }
    let mut colors = vec![usize::MAX; n];
    let mut forbidden = vec![usize::MAX; n]; // stamp per color: last vertex that blocked it
    for &v in order {
        for &w in g.neighbors(v).expect("vertex in range") {
            if colors[w] != usize::MAX {
                forbidden[colors[w]] = v;
            }
        }
        colors[v] = (0..n).find(|&c| forbidden[c] != v).expect("n colors suffice");
    }
    let coloring = Coloring::from_colors(colors);
    debug_assert!(coloring.is_proper(g));
    Ok(coloring)
}

/// DSATUR: repeatedly colors the uncolored vertex with the most distinct
/// colors among its neighbors, breaking ties by degree then by id.
pub fn dsatur(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut neighbor_colors: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by(|&a, &b| {
                neighbor_colors[a]
                    .len()
                    .cmp(&neighbor_colors[b].len())
                    .then(g.degree(a).unwrap().cmp(&g.degree(b).unwrap()))
                    .then(b.cmp(&a)) // prefer the lower id
            })
            .expect("an uncolored vertex remains");
        let c = (0..n)
            .find(|c| !neighbor_colors[v].contains(c))
            .expect("n colors suffice");
        colors[v] = c;
        for &w in g.neighbors(v).expect("vertex in range") {
            neighbor_colors[w].insert(c);
        }
    }
    let coloring = Coloring::from_colors(colors);
    debug_assert!(coloring.is_proper(g));
    coloring
}

/// Exact chromatic number by iterative-deepening backtracking with a
/// greedy clique lower bound. Errors above [`EXACT_CHROMATIC_CAP`].
pub fn exact_chromatic(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > EXACT_CHROMATIC_CAP {
        return Err(Error::SizeCapExceeded {
            what: "exact chromatic number",
            size: n,
            cap: EXACT_CHROMATIC_CAP,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let upper = dsatur(g).count();
    let lower = greedy_clique_size(g).max(1);
    // Static order: descending degree, ties by id. Colors are capped at
    // one past the maximum used so far, which kills palette symmetry.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        g.degree(b)
            .unwrap()
            .cmp(&g.degree(a).unwrap())
            .then(a.cmp(&b))
    });
    for k in lower..upper {
        let mut colors = vec![usize::MAX; n];
        if k_colorable(g, &order, &mut colors, 0, k, 0) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn k_colorable(
    g: &Graph,
    order: &[usize],
    colors: &mut [usize],
    depth: usize,
    k: usize,
    max_used: usize,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let limit = (max_used + 1).min(k);
    'palette: for c in 0..limit {
        for &w in g.neighbors(v).expect("vertex in range") {
            if colors[w] == c {
                continue 'palette;
            }
        }
        colors[v] = c;
        if k_colorable(g, order, colors, depth + 1, k, max_used.max(c + 1)) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}

fn greedy_clique_size(g: &Graph) -> usize {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(g.degree(v).unwrap()));
    let mut clique: Vec<usize> = Vec::new();
    for &v in &order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique.len()
}

/// Minimum-degree peeling. The returned `d` is the graph's degeneracy and
/// the order realizes it.
pub fn degeneracy(g: &Graph) -> DegeneracyCertificate {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v).unwrap()).collect();
    let max_deg = degree.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max_deg + 1];
    for v in 0..n {
        buckets[degree[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    let mut cursor = 0;
    for _ in 0..n {
        // the cursor only needs to back up one step per removal
        cursor = cursor.min(max_deg);
        while buckets[cursor].is_empty() || {
            // lazily drop stale entries
            while let Some(&v) = buckets[cursor].last() {
                if removed[v] || degree[v] != cursor {
                    buckets[cursor].pop();
                } else {
                    break;
                }
            }
            buckets[cursor].is_empty()
        } {
            cursor += 1;
        }
        let v = buckets[cursor].pop().expect("bucket nonempty");
        d = d.max(cursor);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v).expect("vertex in range") {
            if !removed[w] {
                degree[w] -= 1;
                buckets[degree[w]].push(w);
            }
        }
        cursor = cursor.saturating_sub(1);
    }
    let cert = DegeneracyCertificate {
        d,
        elimination_order: order,
    };
    debug_assert!(cert.verify(g));
    cert
}

/// Breakdown of [`partition_color_union`]: the final coloring of G ∪ H
/// and where its colors came from.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct UnionColoringReport {
    pub coloring: Coloring,
    /// Number of parts s in the random partition.
    pub parts: usize,
    /// Colors used inside each part (fresh palette per part).
    pub per_part_colors: Vec<usize>,
    /// Vertices incident to an H-edge that stayed monochromatic.
    pub recolored: usize,
    /// Fresh colors spent on the patch.
    pub patch_colors: usize,
}

/// Colors G ∪ H given Δ(H) ≤ d: random partition into s = 2d·ln²(np)
/// parts, DSATUR per part with fresh colors, then a degeneracy-order
/// patch over the vertices of monochromatic H-edges.
///
/// `p` feeds the s-formula; when absent, the empirical average degree of
/// G stands in for np. The log factor is floored at 1 so sparse inputs
/// degrade gracefully, and s never exceeds n.
pub fn partition_color_union(
    g: &Graph,
    h: &Graph,
    d: usize,
    p: Option<f64>,
    seed: Seed,
) -> Result<UnionColoringReport> {
    let n = g.n();
    if h.n() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: h.n(),
        });
    }
    if let Some(v) = (0..n).find(|&v| h.degree(v).unwrap() > d) {
        return Err(Error::BudgetExceeded {
            vertex: v,
            degree: h.degree(v).unwrap(),
            budget: d,
        });
    }
    if d == 0 && h.edge_count() > 0 {
        unreachable!("degree check above rejects any edge at d = 0");
    }
    let np = match p {
        Some(p) => {
            if !(0.0..=1.0).contains(&p) || !p.is_finite() {
                return Err(Error::InvalidProbability(p));
            }
            p * n as f64
        }
        None => {
            if n == 0 {
                0.0
            } else {
                2.0 * g.edge_count() as f64 / n as f64
            }
        }
    };
    let log_np = float::ln(np).max(1.0);
    let s_raw = 2.0 * d.max(1) as f64 * log_np * log_np;
    let s = (float::round(s_raw) as usize).clamp(1, n.max(1));

    // Random equitable partition: shuffle, then deal out almost-equal
    // slices (the first n mod s parts get one extra vertex).
    let mut rng = seed.rng();
    let mut shuffled: Vec<usize> = (0..n).collect();
    shuffled.shuffle(&mut rng);
    let base = n / s;
    let extra = n % s;
    let mut parts: Vec<Vec<usize>> = Vec::with_capacity(s);
    let mut at = 0;
    for i in 0..s {
        let take = base + usize::from(i < extra);
        parts.push(shuffled[at..at + take].to_vec());
        at += take;
    }

    let mut colors = vec![usize::MAX; n];
    let mut next_color = 0;
    let mut per_part_colors = Vec::with_capacity(s);
    for part in &parts {
        let used = color_induced(g, part, &mut colors, next_color);
        per_part_colors.push(used);
        next_color += used;
    }

    // H-edges that ended up monochromatic pull both endpoints into the
    // patch set U.
    let mut in_u = vec![false; n];
    for (u, v) in h.edges() {
        if colors[u] == colors[v] {
            in_u[u] = true;
            in_u[v] = true;
        }
    }
    let u_set: Vec<usize> = (0..n).filter(|&v| in_u[v]).collect();
    let union = g.union(h)?;
    let patch_colors = if u_set.is_empty() {
        0
    } else {
        recolor_patch(&union, &u_set, &mut colors, next_color)
    };

    let coloring = Coloring::from_colors(colors);
    assert!(
        coloring.is_proper(&union),
        "partition-and-patch must output a proper coloring of the union"
    );
    Ok(UnionColoringReport {
        coloring,
        parts: s,
        per_part_colors,
        recolored: u_set.len(),
        patch_colors,
    })
}

/// DSATUR on `g[part]`, writing colors offset by `base`. Returns the
/// number of colors used.
fn color_induced(g: &Graph, part: &[usize], colors: &mut [usize], base: usize) -> usize {
    if part.is_empty() {
        return 0;
    }
    let mut member = vec![false; g.n()];
    for &v in part {
        member[v] = true;
    }
    let local_degree = |v: usize| {
        g.neighbors(v)
            .expect("vertex in range")
            .iter()
            .filter(|&&w| member[w])
            .count()
    };
    let mut neighbor_colors: alloc::collections::BTreeMap<usize, BTreeSet<usize>> =
        part.iter().map(|&v| (v, BTreeSet::new())).collect();
    let mut used = 0;
    for _ in 0..part.len() {
        let v = part
            .iter()
            .copied()
            .filter(|&v| colors[v] == usize::MAX)
            .max_by(|&a, &b| {
                neighbor_colors[&a]
                    .len()
                    .cmp(&neighbor_colors[&b].len())
                    .then(local_degree(a).cmp(&local_degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("an uncolored part vertex remains");
        let c = (0..part.len())
            .find(|c| !neighbor_colors[&v].contains(c))
            .expect("part size colors suffice");
        colors[v] = base + c;
        used = used.max(c + 1);
        for &w in g.neighbors(v).expect("vertex in range") {
            if member[w] {
                neighbor_colors.get_mut(&w).unwrap().insert(c);
            }
        }
    }
    used
}

/// Greedy recoloring of `union[u_set]` along its degeneracy order with a
/// fresh palette starting at `base`. Returns the number of colors used.
fn recolor_patch(union: &Graph, u_set: &[usize], colors: &mut [usize], base: usize) -> usize {
    let sub = union
        .induced(&crate::graph::VertexSet::new(u_set.to_vec()))
        .expect("patch set vertices are in range");
    let cert = degeneracy(&sub);
    // color in reverse elimination order so each vertex sees ≤ d earlier
    // neighbors, keeping the patch palette at most d+1 wide
    let mut used = 0;
    for &local in cert.elimination_order.iter().rev() {
        let v = u_set[local];
        let mut taken = BTreeSet::new();
        for &w_local in sub.neighbors(local).expect("vertex in range") {
            let w = u_set[w_local];
            if colors[w] >= base {
                taken.insert(colors[w] - base);
            }
        }
        let c = (0..=taken.len()).find(|c| !taken.contains(c)).expect("gap exists");
        colors[v] = base + c;
        used = used.max(c + 1);
    }
    used
}

/// The largest k with C(n,k)·(1-p)^C(k,2) ≥ n⁴, evaluated in the log
/// domain; 0 when no k ≥ 1 qualifies.
pub fn k0(n: usize, p: f64) -> Result<usize> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidProbability(p));
    }
    if n == 0 {
        return Ok(0);
    }
    let ln_q = float::ln(1.0 - p);
    let target = 4.0 * float::ln(n as f64);
    let mut ln_binom = 0.0; // ln C(n, 0)
    let mut best = 0;
    for k in 1..=n {
        ln_binom += float::ln((n - k + 1) as f64) - float::ln(k as f64);
        let pairs = (k * (k - 1) / 2) as f64;
        if ln_binom + pairs * ln_q >= target {
            best = k;
        }
    }
    Ok(best)
}

/// Minimum number of vertex pairs such that every independent set of
/// size `k` in `g` contains at least one chosen pair. Exact, tiny scale
/// only: n ≤ [`COVER_VERTEX_CAP`] and at most [`COVER_SET_CAP`]
/// independent k-sets.
pub fn cover_number_bruteforce(g: &Graph, k: usize) -> Result<usize> {
    let (size, _) = cover_with_witness(g, k)?;
    Ok(size)
}

/// [`cover_number_bruteforce`] plus one optimal pair set.
pub fn cover_with_witness(g: &Graph, k: usize) -> Result<(usize, Vec<(usize, usize)>)> {
    let n = g.n();
    if n > COVER_VERTEX_CAP {
        return Err(Error::SizeCapExceeded {
            what: "cover-number vertex count",
            size: n,
            cap: COVER_VERTEX_CAP,
        });
    }
    let sets = independent_k_sets(g, k);
    if sets.len() > COVER_SET_CAP {
        return Err(Error::SizeCapExceeded {
            what: "independent k-set count",
            size: sets.len(),
            cap: COVER_SET_CAP,
        });
    }
    if sets.is_empty() {
        return Ok((0, Vec::new()));
    }
    // Candidate pairs are exactly the pairs contained in some independent
    // k-set; each maps to the bitset of sets it hits.
    let words = sets.len().div_ceil(128);
    let mut pair_index: alloc::collections::BTreeMap<(usize, usize), usize> =
        alloc::collections::BTreeMap::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut hits: Vec<Vec<u128>> = Vec::new();
    for (si, set) in sets.iter().enumerate() {
        for i in 0..set.len() {
            for j in (i + 1)..set.len() {
                let pair = (set[i], set[j]);
                let idx = *pair_index.entry(pair).or_insert_with(|| {
                    pairs.push(pair);
                    hits.push(vec![0u128; words]);
                    pairs.len() - 1
                });
                hits[idx][si / 128] |= 1u128 << (si % 128);
            }
        }
    }

    let mut uncovered = vec![0u128; words];
    for si in 0..sets.len() {
        uncovered[si / 128] |= 1u128 << (si % 128);
    }

    // Greedy seed: best-first cover gives the branch-and-bound a real
    // upper bound to prune against.
    let mut best = greedy_cover(&pairs, &hits, &uncovered);
    let mut best_size = best.len();
    let mut chosen = Vec::new();
    hitting_search(&pairs, &hits, &uncovered, &mut chosen, &mut best_size, &mut best);
    Ok((best_size, best))
}

fn count_covered(hits: &[u128], uncovered: &[u128]) -> u32 {
    hits.iter()
        .zip(uncovered)
        .map(|(h, u)| (h & u).count_ones())
        .sum()
}

fn greedy_cover(
    pairs: &[(usize, usize)],
    hits: &[Vec<u128>],
    uncovered: &[u128],
) -> Vec<(usize, usize)> {
    let mut uncovered = uncovered.to_vec();
    let mut out = Vec::new();
    while uncovered.iter().any(|&w| w != 0) {
        let (idx, _) = hits
            .iter()
            .enumerate()
            .map(|(i, h)| (i, count_covered(h, &uncovered)))
            .max_by_key(|&(i, c)| (c, core::cmp::Reverse(i)))
            .expect("pairs exist while sets are uncovered");
        for (u, h) in uncovered.iter_mut().zip(&hits[idx]) {
            *u &= !h;
        }
        out.push(pairs[idx]);
    }
    out
}

/// Branch and bound: take the lowest-indexed uncovered set, branch on the
/// pairs that hit it.
fn hitting_search(
    pairs: &[(usize, usize)],
    hits: &[Vec<u128>],
    uncovered: &[u128],
    chosen: &mut Vec<(usize, usize)>,
    best_size: &mut usize,
    best: &mut Vec<(usize, usize)>,
) {
    let target = match uncovered
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(wi, w)| wi * 128 + w.trailing_zeros() as usize)
    {
        Some(t) => t,
        None => {
            if chosen.len() < *best_size {
                *best_size = chosen.len();
                *best = chosen.clone();
            }
            return;
        }
    };
    if chosen.len() + 1 >= *best_size {
        return;
    }
    for (idx, h) in hits.iter().enumerate() {
        if h[target / 128] >> (target % 128) & 1 == 1 {
            let child: Vec<u128> = uncovered.iter().zip(h).map(|(u, h)| u & !h).collect();
            chosen.push(pairs[idx]);
            hitting_search(pairs, hits, &child, chosen, best_size, best);
            chosen.pop();
        }
    }
}

/// All independent sets of size exactly `k`, as sorted vertex lists.
fn independent_k_sets(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut current: Vec<usize> = Vec::with_capacity(k);
    fn extend(
        g: &Graph,
        k: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..g.n() {
            if g.n() - v < k - current.len() {
                break;
            }
            if current.iter().all(|&u| !g.has_edge(u, v)) {
                current.push(v);
                extend(g, k, v + 1, current, out);
                current.pop();
            }
        }
    }
    extend(g, k, 0, &mut current, &mut out);
    out
}

/// Exact independence number by branch and bound over bitmasks; n ≤ 40.
pub fn independence_number_exact(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > INDEPENDENCE_CAP {
        return Err(Error::SizeCapExceeded {
            what: "exact independence number",
            size: n,
            cap: INDEPENDENCE_CAP,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .expect("vertex in range")
                .iter()
                .fold(0u64, |acc, &w| acc | 1 << w)
        })
        .collect();
    fn search(adj: &[u64], candidates: u64, size: usize, best: &mut usize) {
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        // branch on the candidate with the most candidate-neighbors
        let mut pick = candidates.trailing_zeros() as usize;
        let mut pick_deg = 0;
        let mut scan = candidates;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let deg = (adj[v] & candidates).count_ones();
            if deg > pick_deg {
                pick_deg = deg;
                pick = v;
            }
        }
        // include pick
        search(adj, candidates & !adj[pick] & !(1 << pick), size + 1, best);
        // exclude pick
        search(adj, candidates & !(1 << pick), size, best);
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut best = 0;
    search(&adj, full, 0, &mut best);
    Ok(best)
}
