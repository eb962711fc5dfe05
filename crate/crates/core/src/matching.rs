//! Maximum matchings, Hall witnesses, and matching via a random split.
//!
//! General graphs go through Edmonds' blossom algorithm (augmenting-path
//! search with odd-cycle contraction), seeded by a greedy matching so the
//! expensive searches only run for the handful of vertices greedy leaves
//! uncovered. Bipartite questions (Hall witnesses, the random-split
//! pipeline) use a plain augmenting-path matcher on the crossing edges,
//! which also yields the deficiency witness when no perfect matching exists.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::generate::{random_equal_bipartition, Seed};
use crate::graph::{Graph, VertexSet};

/// A set of vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    fn from_mates(mate: &[Option<usize>]) -> Matching {
        let mut pairs = Vec::new();
        for (v, m) in mate.iter().enumerate() {
            if let Some(w) = *m {
                if v < w {
                    pairs.push((v, w));
                }
            }
        }
        Matching { pairs }
    }

    /// The matched pairs, each as `(u, v)` with `u < v`, ascending.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of edges in the matching.
    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    /// Whether the matching covers all `n` vertices.
    pub fn is_perfect(&self, n: usize) -> bool {
        2 * self.pairs.len() == n
    }

    /// Checks the matching against a host graph: every pair is an edge and
    /// no vertex appears twice.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut used = vec![false; g.n()];
        for &(u, v) in &self.pairs {
            if u >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: u, n: g.n() });
            }
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if !g.has_edge(u, v) {
                return Err(Error::NotSubgraph { u, v });
            }
            if used[u] {
                return Err(Error::NotAPartition { vertex: u });
            }
            if used[v] {
                return Err(Error::NotAPartition { vertex: v });
            }
            used[u] = true;
            used[v] = true;
        }
        Ok(())
    }
}

/// Computes a maximum matching of an arbitrary graph (Edmonds' blossom
/// algorithm, O(V^3) worst case).
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    // Greedy warm start: matches most vertices of dense-ish graphs so the
    // blossom search only runs a few times.
    for v in 0..n {
        if mate[v].is_none() {
            for &w in g.neighbors(v).expect("vertex in range") {
                if mate[w].is_none() {
                    mate[v] = Some(w);
                    mate[w] = Some(v);
                    break;
                }
            }
        }
    }
    let mut search = BlossomSearch::new(n);
    for v in 0..n {
        if mate[v].is_none() {
            search.augment_from(g, &mut mate, v);
        }
    }
    Matching::from_mates(&mate)
}

/// Whether the graph has a perfect matching (n even and some matching
/// covers every vertex).
pub fn has_perfect_matching(g: &Graph) -> bool {
    g.n().is_multiple_of(2) && max_matching(g).is_perfect(g.n())
}

/// Whether some matching covers all but at most one vertex. Equivalent to
/// a perfect matching for even n; meaningful on its own for odd n.
pub fn has_near_perfect_matching(g: &Graph) -> bool {
    2 * max_matching(g).size() + 1 >= g.n()
}

struct BlossomSearch {
    mate_parent: Vec<Option<usize>>,
    base: Vec<usize>,
    in_queue: Vec<bool>,
    in_blossom: Vec<bool>,
    in_path: Vec<bool>,
}

impl BlossomSearch {
    fn new(n: usize) -> BlossomSearch {
        BlossomSearch {
            mate_parent: vec![None; n],
            base: vec![0; n],
            in_queue: vec![false; n],
            in_blossom: vec![false; n],
            in_path: vec![false; n],
        }
    }

    /// Tries to enlarge the matching with an alternating path from `root`.
    fn augment_from(&mut self, g: &Graph, mate: &mut [Option<usize>], root: usize) -> bool {
        let n = g.n();
        for v in 0..n {
            self.mate_parent[v] = None;
            self.base[v] = v;
            self.in_queue[v] = false;
        }
        let mut queue = VecDeque::new();
        queue.push_back(root);
        self.in_queue[root] = true;

        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v).expect("vertex in range") {
                if self.base[v] == self.base[w] || mate[v] == Some(w) {
                    continue;
                }
                if w == root || mate[w].is_some_and(|mw| self.mate_parent[mw].is_some()) {
                    // Odd cycle: contract the blossom at the common base.
                    let b = self.lowest_common_base(mate, v, w, root);
                    for x in 0..n {
                        self.in_blossom[x] = false;
                    }
                    self.mark_path(mate, v, b, w);
                    self.mark_path(mate, w, b, v);
                    for x in 0..n {
                        if self.in_blossom[self.base[x]] {
                            self.base[x] = b;
                            if !self.in_queue[x] {
                                self.in_queue[x] = true;
                                queue.push_back(x);
                            }
                        }
                    }
                } else if self.mate_parent[w].is_none() {
                    self.mate_parent[w] = Some(v);
                    match mate[w] {
                        None => {
                            // Found an exposed vertex: flip the path.
                            self.flip(mate, w);
                            return true;
                        }
                        Some(mw) => {
                            if !self.in_queue[mw] {
                                self.in_queue[mw] = true;
                                queue.push_back(mw);
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn lowest_common_base(
        &mut self,
        mate: &[Option<usize>],
        mut v: usize,
        mut w: usize,
        root: usize,
    ) -> usize {
        for x in &mut self.in_path {
            *x = false;
        }
        loop {
            v = self.base[v];
            self.in_path[v] = true;
            if v == root {
                break;
            }
            match mate[v].and_then(|mv| self.mate_parent[mv]) {
                Some(p) => v = p,
                None => break,
            }
        }
        loop {
            w = self.base[w];
            if self.in_path[w] {
                return w;
            }
            w = mate[w]
                .and_then(|mw| self.mate_parent[mw])
                .expect("alternating tree reaches the root");
        }
    }

    fn mark_path(&mut self, mate: &[Option<usize>], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let mv = mate[v].expect("blossom path alternates");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mv]] = true;
            self.mate_parent[v] = Some(child);
            child = mv;
            v = self.mate_parent[mv].expect("blossom path reaches the base");
        }
    }

    fn flip(&self, mate: &mut [Option<usize>], mut w: usize) {
        while let Some(v) = self.mate_parent[w] {
            let next = mate[v];
            mate[w] = Some(v);
            mate[v] = Some(w);
            match next {
                Some(nv) => w = nv,
                None => break,
            }
        }
    }
}

// ===== bipartite machinery =====

/// Crossing-edge bipartite graph with an augmenting-path matcher.
struct CrossingMatcher {
    left: Vec<usize>,
    right: Vec<usize>,
    // adjacency by left-index into right-indices
    adj: Vec<Vec<usize>>,
    match_left: Vec<Option<usize>>,
    match_right: Vec<Option<usize>>,
}

impl CrossingMatcher {
    fn new(g: &Graph, left: &VertexSet, right: &VertexSet) -> CrossingMatcher {
        let mut right_index = vec![usize::MAX; g.n()];
        for (i, &v) in right.iter().enumerate() {
            right_index[v] = i;
        }
        let adj = left
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .expect("vertex in range")
                    .iter()
                    .filter(|&&w| right_index[w] != usize::MAX)
                    .map(|&w| right_index[w])
                    .collect()
            })
            .collect();
        CrossingMatcher {
            left: left.iter().copied().collect(),
            right: right.iter().copied().collect(),
            adj,
            match_left: vec![None; left.len()],
            match_right: vec![None; right.len()],
        }
    }

    fn run(&mut self) -> usize {
        let mut size = 0;
        let mut visited = vec![false; self.right.len()];
        for li in 0..self.left.len() {
            visited.fill(false);
            if self.try_augment(li, &mut visited) {
                size += 1;
            }
        }
        size
    }

    fn try_augment(&mut self, li: usize, visited: &mut [bool]) -> bool {
        for ri_pos in 0..self.adj[li].len() {
            let ri = self.adj[li][ri_pos];
            if visited[ri] {
                continue;
            }
            visited[ri] = true;
            let free = match self.match_right[ri] {
                None => true,
                Some(other) => self.try_augment(other, visited),
            };
            if free {
                self.match_right[ri] = Some(li);
                self.match_left[li] = Some(ri);
                return true;
            }
        }
        false
    }

    /// All left indices reachable from unmatched left vertices through
    /// alternating paths. If the matching is maximum and some left vertex is
    /// unmatched, this set S violates Hall's condition: |N(S)| < |S|.
    fn deficient_left_set(&self) -> Vec<usize> {
        let mut seen_left = vec![false; self.left.len()];
        let mut seen_right = vec![false; self.right.len()];
        let mut queue: VecDeque<usize> = (0..self.left.len())
            .filter(|&li| self.match_left[li].is_none())
            .collect();
        for &li in &queue {
            seen_left[li] = true;
        }
        while let Some(li) = queue.pop_front() {
            for &ri in &self.adj[li] {
                if !seen_right[ri] {
                    seen_right[ri] = true;
                    if let Some(other) = self.match_right[ri] {
                        if !seen_left[other] {
                            seen_left[other] = true;
                            queue.push_back(other);
                        }
                    }
                }
            }
        }
        (0..self.left.len()).filter(|&li| seen_left[li]).collect()
    }

    fn matching(&self) -> Matching {
        let mut pairs: Vec<(usize, usize)> = self
            .match_left
            .iter()
            .enumerate()
            .filter_map(|(li, m)| {
                m.map(|ri| {
                    let (u, v) = (self.left[li], self.right[ri]);
                    (u.min(v), u.max(v))
                })
            })
            .collect();
        pairs.sort_unstable();
        Matching { pairs }
    }
}

fn check_partition(g: &Graph, left: &VertexSet, right: &VertexSet) -> Result<()> {
    if let Some(&v) = left.iter().chain(right.iter()).find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut count = vec![0usize; g.n()];
    for &v in left.iter().chain(right.iter()) {
        count[v] += 1;
    }
    if let Some(v) = (0..g.n()).find(|&v| count[v] != 1) {
        return Err(Error::NotAPartition { vertex: v });
    }
    Ok(())
}

/// Hall-condition check for the bipartite graph of edges crossing the
/// partition `(left, right)`.
///
/// Returns `None` exactly when the crossing graph has a perfect matching
/// (which requires `|left| == |right|`). Otherwise returns a witness set S,
/// contained in one side, with fewer crossing neighbors than members.
pub fn hall_witness(
    g: &Graph,
    left: &VertexSet,
    right: &VertexSet,
) -> Result<Option<VertexSet>> {
    check_partition(g, left, right)?;
    let mut matcher = CrossingMatcher::new(g, left, right);
    let size = matcher.run();
    if size == left.len() && size == right.len() {
        return Ok(None);
    }
    if size < left.len() {
        let s = matcher.deficient_left_set();
        return Ok(Some(s.iter().map(|&li| matcher.left[li]).collect()));
    }
    // Left fully matched but the right side is strictly larger: run the
    // search from the right by swapping the roles.
    let mut swapped = CrossingMatcher::new(g, right, left);
    swapped.run();
    let s = swapped.deficient_left_set();
    Ok(Some(s.iter().map(|&li| swapped.left[li]).collect()))
}

/// Outcome of the random-split matching pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitOutcome {
    /// A perfect matching of the whole graph, all of whose edges cross the
    /// split.
    Matching(Matching),
    /// This split has no crossing perfect matching; the witness violates
    /// Hall's condition for it. Another split might still succeed.
    Witness(VertexSet),
}

/// Draws one uniform balanced split and either perfectly matches across it
/// or reports that split's Hall witness. No resampling: one split per call,
/// so failure probabilities are the caller's to aggregate.
pub fn bipartite_matching_via_random_split(g: &Graph, seed: Seed) -> Result<SplitOutcome> {
    let (left, right) = random_equal_bipartition(g.n(), seed)?;
    let mut matcher = CrossingMatcher::new(g, &left, &right);
    let size = matcher.run();
    if size == left.len() {
        let matching = matcher.matching();
        debug_assert!(matching.validate(g).is_ok());
        Ok(SplitOutcome::Matching(matching))
    } else {
        let s = matcher.deficient_left_set();
        Ok(SplitOutcome::Witness(
            s.iter().map(|&li| matcher.left[li]).collect(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::gnp;

    /// Reference maximum matching size by exhaustive recursion on edges.
    fn brute_force_size(g: &Graph) -> usize {
        fn rec(edges: &[(usize, usize)], used: &mut [bool]) -> usize {
            if let Some((&(u, v), rest)) = edges.split_first() {
                let skip = rec(rest, used);
                if !used[u] && !used[v] {
                    used[u] = true;
                    used[v] = true;
                    let take = 1 + rec(rest, used);
                    used[u] = false;
                    used[v] = false;
                    skip.max(take)
                } else {
                    skip
                }
            } else {
                0
            }
        }
        let edges: Vec<_> = g.edges().collect();
        rec(&edges, &mut vec![false; g.n()])
    }

    #[test]
    fn even_cycle_has_perfect_matching() {
        let c6 = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
        assert!(has_perfect_matching(&c6));
        let m = max_matching(&c6);
        assert_eq!(m.size(), 3);
        m.validate(&c6).unwrap();
    }

    #[test]
    fn odd_cycle_is_near_perfect_only() {
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert!(!has_perfect_matching(&c5));
        assert!(has_near_perfect_matching(&c5));
        assert_eq!(max_matching(&c5).size(), 2);
    }

    #[test]
    fn petersen_is_perfectly_matchable() {
        let g = crate::fixtures::petersen();
        assert!(has_perfect_matching(&g));
    }

    #[test]
    fn blossom_handles_odd_components() {
        // two triangles joined by one edge: maximum matching is 3
        let g = Graph::from_edges(
            6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)],
        )
        .unwrap();
        let m = max_matching(&g);
        assert_eq!(m.size(), 3);
        m.validate(&g).unwrap();
    }

    #[test]
    fn exhaustive_oracle_on_all_five_vertex_graphs() {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| ((u + 1)..5).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(5, edges).unwrap();
            let m = max_matching(&g);
            m.validate(&g).unwrap();
            assert_eq!(m.size(), brute_force_size(&g), "mask {mask}");
        }
    }

    #[test]
    fn random_oracle_on_eight_vertices() {
        for s in 0..60u64 {
            let g = gnp(8, 0.4, Seed::new(s)).unwrap();
            let m = max_matching(&g);
            m.validate(&g).unwrap();
            assert_eq!(m.size(), brute_force_size(&g), "seed {s}");
        }
    }

    #[test]
    fn hall_witness_finds_starved_pair() {
        // left {0,1} both adjacent only to 2; right {2,3}
        let g = Graph::from_edges(4, [(0, 2), (1, 2)]).unwrap();
        let left = VertexSet::new(vec![0, 1]);
        let right = VertexSet::new(vec![2, 3]);
        let w = hall_witness(&g, &left, &right).unwrap().unwrap();
        assert_eq!(w.as_slice(), &[0, 1]);
    }

    #[test]
    fn hall_witness_none_iff_crossing_perfect_matching() {
        let g = Graph::from_edges(4, [(0, 2), (1, 3)]).unwrap();
        let left = VertexSet::new(vec![0, 1]);
        let right = VertexSet::new(vec![2, 3]);
        assert_eq!(hall_witness(&g, &left, &right).unwrap(), None);
    }

    #[test]
    fn hall_witness_rejects_non_partition() {
        let g = Graph::empty(4);
        let left = VertexSet::new(vec![0, 1]);
        let right = VertexSet::new(vec![1, 2]);
        assert!(matches!(
            hall_witness(&g, &left, &right),
            Err(Error::NotAPartition { .. })
        ));
    }

    #[test]
    fn hall_witness_unbalanced_sides() {
        let g = Graph::complete(5);
        let left = VertexSet::new(vec![0, 1]);
        let right = VertexSet::new(vec![2, 3, 4]);
        // no perfect matching possible: the right side is larger
        let w = hall_witness(&g, &left, &right).unwrap().unwrap();
        // witness comes from the larger side and has deficient neighborhood
        assert!(!w.is_empty());
        let crossing: Vec<usize> = w
            .iter()
            .flat_map(|&v| g.neighbors(v).unwrap().iter().copied())
            .filter(|&x| {
                if right.contains(w.as_slice()[0]) {
                    left.contains(x)
                } else {
                    right.contains(x)
                }
            })
            .collect();
        let distinct: VertexSet = crossing.into_iter().collect();
        assert!(distinct.len() < w.len());
    }

    #[test]
    fn split_pipeline_on_complete_graph() {
        let g = Graph::complete(8);
        match bipartite_matching_via_random_split(&g, Seed::new(9)).unwrap() {
            SplitOutcome::Matching(m) => {
                assert!(m.is_perfect(8));
                m.validate(&g).unwrap();
            }
            SplitOutcome::Witness(_) => panic!("complete graph always matches across any split"),
        }
    }

    #[test]
    fn split_pipeline_witness_on_split_with_no_crossing() {
        // star: the center can only cover one leaf, so any split fails
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        match bipartite_matching_via_random_split(&g, Seed::new(0)).unwrap() {
            SplitOutcome::Witness(w) => assert!(!w.is_empty()),
            SplitOutcome::Matching(_) => panic!("star on 4 vertices has no perfect matching"),
        }
    }
}
