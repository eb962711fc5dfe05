//! Degree-bounded modification strategies. An adversary produces a move
//! (H, mode, r) with Δ(H) ≤ r; the engine applies it to the target graph
//! by deletion, addition, or symmetric difference.
//!
//! Two constructions mirror the classic impossibility arguments: isolating
//! a set of n/2+1 vertices kills every perfect matching of the remainder
//! (the set becomes independent and outnumbers its possible partners), and
//! deleting a balanced cut disconnects the graph, killing Hamiltonicity.
//! The rest are generic pressure: random degree-bounded edits, a clique
//! insertion against colorings, and a greedy starvation heuristic that
//! always hits the currently weakest vertex.

use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::vec;
use alloc::vec::Vec;

use core::cmp::Reverse;

use rand::seq::{IndexedRandom, SliceRandom};

use crate::error::{Error, Result};
use crate::generate::Seed;
use crate::graph::{Graph, VertexSet};

/// How a move's edge set combines with the target graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Mode {
    Delete,
    Add,
    SymmetricDifference,
}

/// A modification graph H with its combining mode and budget r. The
/// constructor enforces Δ(H) ≤ r; mode discipline against a concrete
/// target is checked by [`AdversaryMove::validate_against`].
#[derive(Debug, Clone)]
pub struct AdversaryMove {
    h: Graph,
    mode: Mode,
    budget: usize,
}

impl AdversaryMove {
    pub fn new(h: Graph, mode: Mode, budget: usize) -> Result<AdversaryMove> {
        if let Some(v) = (0..h.n()).find(|&v| h.degree(v).unwrap() > budget) {
            return Err(Error::BudgetExceeded {
                vertex: v,
                degree: h.degree(v).unwrap(),
                budget,
            });
        }
        Ok(AdversaryMove { h, mode, budget })
    }

    pub fn h(&self) -> &Graph {
        &self.h
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Re-verifies everything against a target: same vertex count,
    /// Δ(H) ≤ budget, and the mode's edge discipline (delete moves live
    /// inside E(G), add moves stay disjoint from it).
    pub fn validate_against(&self, g: &Graph) -> Result<()> {
        if self.h.n() != g.n() {
            return Err(Error::SizeMismatch {
                left: g.n(),
                right: self.h.n(),
            });
        }
        if let Some(v) = (0..self.h.n()).find(|&v| self.h.degree(v).unwrap() > self.budget) {
            return Err(Error::BudgetExceeded {
                vertex: v,
                degree: self.h.degree(v).unwrap(),
                budget: self.budget,
            });
        }
        match self.mode {
            Mode::Delete => {
                if let Some((u, v)) = self.h.edges().find(|&(u, v)| !g.has_edge(u, v)) {
                    return Err(Error::NotSubgraph { u, v });
                }
            }
            Mode::Add => {
                if let Some((u, v)) = self.h.edges().find(|&(u, v)| g.has_edge(u, v)) {
                    return Err(Error::DuplicateEdge { u, v });
                }
            }
            Mode::SymmetricDifference => {}
        }
        Ok(())
    }

    /// Applies the move, producing the modified graph. Validates first.
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        self.validate_against(g)?;
        match self.mode {
            Mode::Delete => g.subtract(&self.h),
            Mode::Add => g.union(&self.h),
            Mode::SymmetricDifference => g.symmetric_difference(&self.h),
        }
    }
}

/// How [`isolate_larger_half_with`] picks its vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum IsolateVariant {
    /// Uniformly random set of size n/2 + 1.
    UniformRandom,
    /// The n/2 + 1 vertices of lowest degree (ties by id). Deterministic;
    /// tends to produce a sparser H and hence a lower budget.
    LowestDegreeFirst,
}

/// Deletes every edge inside a random set X of ⌊n/2⌋+1 vertices. The
/// remainder Y = V∖X is smaller than X, and X is independent in G−H, so
/// G−H has no perfect matching whenever the move is affordable.
pub fn isolate_larger_half(g: &Graph, seed: Seed) -> Result<AdversaryMove> {
    isolate_larger_half_with(g, IsolateVariant::UniformRandom, seed).map(|(mv, _)| mv)
}

/// [`isolate_larger_half`] exposing the variant and the chosen set.
pub fn isolate_larger_half_with(
    g: &Graph,
    variant: IsolateVariant,
    seed: Seed,
) -> Result<(AdversaryMove, VertexSet)> {
    let n = g.n();
    if n < 4 {
        return Err(Error::InvalidParameter(
            "isolation needs at least four vertices",
        ));
    }
    let size = n / 2 + 1;
    let chosen: Vec<usize> = match variant {
        IsolateVariant::UniformRandom => {
            let mut pool: Vec<usize> = (0..n).collect();
            pool.shuffle(&mut seed.rng());
            pool[..size].to_vec()
        }
        IsolateVariant::LowestDegreeFirst => {
            let mut pool: Vec<usize> = (0..n).collect();
            pool.sort_by_key(|&v| (g.degree(v).unwrap(), v));
            pool[..size].to_vec()
        }
    };
    let x = VertexSet::new(chosen);
    let h = Graph::from_edges(n, g.induced_edges(&x)?)?;
    let budget = h.max_degree();
    Ok((AdversaryMove::new(h, Mode::Delete, budget)?, x))
}

/// Deletes all edges crossing a random balanced bipartition, leaving the
/// two sides disconnected from each other.
pub fn cut_bisection(g: &Graph, seed: Seed) -> Result<AdversaryMove> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidParameter("a cut needs at least two vertices"));
    }
    let mut pool: Vec<usize> = (0..n).collect();
    pool.shuffle(&mut seed.rng());
    let mut side = vec![false; n];
    for &v in &pool[..n / 2] {
        side[v] = true;
    }
    let crossing = g.edges().filter(|&(u, v)| side[u] != side[v]);
    let h = Graph::from_edges(n, crossing)?;
    let budget = h.max_degree();
    AdversaryMove::new(h, Mode::Delete, budget)
}

/// Greedy random edits under a hard per-vertex cap: shuffles the pool of
/// candidate pairs (edges for delete, non-edges for add, all pairs for
/// symmetric difference) and takes each pair whose endpoints both still
/// have H-degree below r.
pub fn random_degree_bounded(
    g: &Graph,
    r: usize,
    mode: Mode,
    seed: Seed,
) -> Result<AdversaryMove> {
    let n = g.n();
    let mut pool: Vec<(usize, usize)> = match mode {
        Mode::Delete => g.edges().collect(),
        Mode::Add => (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect(),
        Mode::SymmetricDifference => (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect(),
    };
    pool.shuffle(&mut seed.rng());
    let mut h_degree = vec![0usize; n];
    let mut edges = Vec::new();
    if r > 0 {
        for (u, v) in pool {
            if h_degree[u] < r && h_degree[v] < r {
                h_degree[u] += 1;
                h_degree[v] += 1;
                edges.push((u, v));
            }
        }
    }
    let h = Graph::from_edges(n, edges)?;
    AdversaryMove::new(h, mode, r)
}

/// Adds the missing edges of a clique on a random (r+1)-subset. Against a
/// coloring, this forces χ(G∪H) ≥ r+1.
pub fn clique_addition(g: &Graph, r: usize, seed: Seed) -> Result<AdversaryMove> {
    let n = g.n();
    if r + 1 > n {
        return Err(Error::InvalidParameter(
            "clique size exceeds the vertex count",
        ));
    }
    let mut pool: Vec<usize> = (0..n).collect();
    pool.shuffle(&mut seed.rng());
    let members = &pool[..r + 1];
    let mut edges = Vec::new();
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            let (u, v) = (members[i], members[j]);
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    let h = Graph::from_edges(n, edges)?;
    AdversaryMove::new(h, Mode::Add, r)
}

/// Starvation heuristic: repeatedly pick the vertex of minimum remaining
/// degree in G−H that can still afford a deletion, and remove one random
/// incident edge whose other endpoint can also afford it. Stops when no
/// legal move remains.
pub fn min_degree_attack(g: &Graph, r: usize, seed: Seed) -> Result<AdversaryMove> {
    let n = g.n();
    let mut rng = seed.rng();
    let mut residual: Vec<usize> = (0..n).map(|v| g.degree(v).unwrap()).collect();
    let mut h_degree = vec![0usize; n];
    let mut in_h: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    // Lazy min-heap over (residual degree, vertex). Stale entries carry a
    // residual that no longer matches and are discarded on pop; residuals
    // only decrease, so the live entry always surfaces first.
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();
    if r > 0 {
        for (v, &res) in residual.iter().enumerate() {
            heap.push(Reverse((res, v)));
        }
    }
    while let Some(Reverse((res, v))) = heap.pop() {
        if res != residual[v] || h_degree[v] >= r {
            continue;
        }
        let legal: Vec<usize> = g
            .neighbors(v)
            .expect("vertex in range")
            .iter()
            .copied()
            .filter(|&w| h_degree[w] < r && !in_h.contains(&(v.min(w), v.max(w))))
            .collect();
        let Some(&w) = legal.choose(&mut rng) else {
            // neighbors' budgets never recover, so v is finished for good
            continue;
        };
        let key = (v.min(w), v.max(w));
        in_h.insert(key);
        edges.push(key);
        h_degree[v] += 1;
        h_degree[w] += 1;
        residual[v] -= 1;
        residual[w] -= 1;
        if h_degree[v] < r {
            heap.push(Reverse((residual[v], v)));
        }
        if h_degree[w] < r {
            heap.push(Reverse((residual[w], w)));
        }
    }
    let h = Graph::from_edges(n, edges)?;
    AdversaryMove::new(h, Mode::Delete, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::exact_chromatic;
    use crate::generate::gnp;
    use crate::matching::has_perfect_matching;

    #[test]
    fn isolate_on_k4_destroys_matching() {
        let g = Graph::complete(4);
        let (mv, x) = isolate_larger_half_with(&g, IsolateVariant::UniformRandom, Seed::new(1))
            .unwrap();
        assert_eq!(x.len(), 3);
        assert_eq!(mv.h().edge_count(), 3); // K3 inside X
        assert_eq!(mv.mode(), Mode::Delete);
        let damaged = mv.apply(&g).unwrap();
        assert!(!has_perfect_matching(&damaged));
        // X is independent in G-H
        assert_eq!(damaged.edges_within(&x).unwrap(), 0);
    }

    #[test]
    fn isolate_on_edgeless_costs_nothing() {
        let g = Graph::empty(6);
        let mv = isolate_larger_half(&g, Seed::new(2)).unwrap();
        assert_eq!(mv.budget(), 0);
        assert_eq!(mv.h().edge_count(), 0);
    }

    #[test]
    fn isolate_requires_four_vertices() {
        assert!(isolate_larger_half(&Graph::complete(3), Seed::new(3)).is_err());
    }

    #[test]
    fn isolate_lowest_degree_picks_the_sparse_side() {
        // two K4s joined to a hub of high degree; low-degree variant on
        // n=9 picks 5 of the 8 non-hub vertices
        let mut edges = Vec::new();
        for base in [0, 4] {
            for i in 0..4 {
                for j in (i + 1)..4 {
                    edges.push((base + i, base + j));
                }
            }
        }
        for v in 0..8 {
            edges.push((v, 8));
        }
        let g = Graph::from_edges(9, edges).unwrap();
        let (_, x) =
            isolate_larger_half_with(&g, IsolateVariant::LowestDegreeFirst, Seed::new(4)).unwrap();
        assert!(!x.contains(8), "hub has the highest degree");
    }

    #[test]
    fn isolate_always_beats_matching_when_affordable() {
        for s in 0..20u64 {
            let g = gnp(30, 0.4, Seed::new(100 + s)).unwrap();
            let (mv, x) = isolate_larger_half_with(&g, IsolateVariant::UniformRandom, Seed::new(s))
                .unwrap();
            let damaged = mv.apply(&g).unwrap();
            assert!(!has_perfect_matching(&damaged), "seed {s}");
            assert!(x.len() > g.n() - x.len());
        }
    }

    #[test]
    fn cut_on_k4_removes_four_crossing_edges() {
        let g = Graph::complete(4);
        let mv = cut_bisection(&g, Seed::new(5)).unwrap();
        assert_eq!(mv.h().edge_count(), 4);
        let damaged = mv.apply(&g).unwrap();
        assert_eq!(damaged.edge_count(), 2);
        assert!(!damaged.is_connected());
    }

    #[test]
    fn cut_disconnects_random_graphs() {
        for s in 0..10u64 {
            let g = gnp(21, 0.5, Seed::new(200 + s)).unwrap();
            let mv = cut_bisection(&g, Seed::new(300 + s)).unwrap();
            let damaged = mv.apply(&g).unwrap();
            assert!(g.edge_count() == mv.h().edge_count() || !damaged.is_connected());
        }
    }

    #[test]
    fn random_bounded_respects_budget_and_extremes() {
        let g = gnp(40, 0.3, Seed::new(400)).unwrap();
        for s in 0..50u64 {
            for &mode in &[Mode::Delete, Mode::Add, Mode::SymmetricDifference] {
                let r = (s % 5) as usize;
                let mv = random_degree_bounded(&g, r, mode, Seed::new(500 + s)).unwrap();
                assert!(mv.h().max_degree() <= r);
                mv.validate_against(&g).unwrap();
            }
        }
        let empty = random_degree_bounded(&g, 0, Mode::Delete, Seed::new(6)).unwrap();
        assert_eq!(empty.h().edge_count(), 0);
        // with budget above the max degree, greedy deletion takes everything
        let all = random_degree_bounded(&g, g.max_degree(), Mode::Delete, Seed::new(7)).unwrap();
        assert_eq!(all.h().edge_count(), g.edge_count());
    }

    #[test]
    fn clique_addition_raises_chromatic_number() {
        let g = Graph::empty(10);
        let mv = clique_addition(&g, 4, Seed::new(8)).unwrap();
        assert_eq!(mv.mode(), Mode::Add);
        assert!(mv.h().max_degree() <= 4);
        let boosted = mv.apply(&g).unwrap();
        assert_eq!(exact_chromatic(&boosted).unwrap(), 5);
    }

    #[test]
    fn clique_addition_skips_existing_edges_and_checks_size() {
        let g = Graph::complete(5);
        let mv = clique_addition(&g, 2, Seed::new(9)).unwrap();
        assert_eq!(mv.h().edge_count(), 0); // K5 already has every edge
        assert!(clique_addition(&g, 5, Seed::new(10)).is_err());
        let single = clique_addition(&Graph::empty(5), 1, Seed::new(11)).unwrap();
        assert_eq!(single.h().edge_count(), 1);
    }

    #[test]
    fn min_degree_attack_budget_and_extremes() {
        let g = gnp(40, 0.3, Seed::new(600)).unwrap();
        for s in 0..50u64 {
            let r = (s % 4) as usize;
            let mv = min_degree_attack(&g, r, Seed::new(700 + s)).unwrap();
            assert!(mv.h().max_degree() <= r);
            mv.validate_against(&g).unwrap();
        }
        let empty = min_degree_attack(&g, 0, Seed::new(12)).unwrap();
        assert_eq!(empty.h().edge_count(), 0);
    }

    #[test]
    fn min_degree_attack_on_star_takes_one_edge() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let mv = min_degree_attack(&star, 1, Seed::new(13)).unwrap();
        assert_eq!(mv.h().edge_count(), 1);
        let damaged = mv.apply(&star).unwrap();
        assert_eq!(damaged.min_degree(), 0); // some leaf went dark
    }

    #[test]
    fn min_degree_attack_saturates_under_big_budget() {
        // with r >= max degree the heuristic strips the graph bare
        let g = gnp(20, 0.4, Seed::new(14)).unwrap();
        let mv = min_degree_attack(&g, g.max_degree(), Seed::new(15)).unwrap();
        assert_eq!(mv.h().edge_count(), g.edge_count());
    }

    #[test]
    fn validate_against_rejects_rule_breakers() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        // delete move containing a non-edge of G
        let h = Graph::from_edges(4, [(2, 3)]).unwrap();
        let mv = AdversaryMove::new(h, Mode::Delete, 1).unwrap();
        assert!(matches!(
            mv.validate_against(&g),
            Err(Error::NotSubgraph { u: 2, v: 3 })
        ));
        // add move overlapping E(G)
        let h = Graph::from_edges(4, [(0, 1)]).unwrap();
        let mv = AdversaryMove::new(h, Mode::Add, 1).unwrap();
        assert!(matches!(
            mv.validate_against(&g),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        ));
        // budget violation caught at construction
        let h = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(
            AdversaryMove::new(h, Mode::Delete, 2),
            Err(Error::BudgetExceeded { vertex: 0, degree: 3, budget: 2 })
        ));
        // vertex-count mismatch
        let h = Graph::empty(5);
        let mv = AdversaryMove::new(h, Mode::Delete, 0).unwrap();
        assert!(mv.validate_against(&g).is_err());
    }

    #[test]
    fn symmetric_difference_mode_applies() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        let h = Graph::from_edges(4, [(1, 2), (2, 3)]).unwrap();
        let mv = AdversaryMove::new(h, Mode::SymmetricDifference, 2).unwrap();
        let out = mv.apply(&g).unwrap();
        assert!(out.has_edge(0, 1));
        assert!(!out.has_edge(1, 2));
        assert!(out.has_edge(2, 3));
    }
}
