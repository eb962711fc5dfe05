//! Cross-checks against independently derived ground truth: closed-form
//! spectra, exhaustive searches, and values computed outside this codebase
//! and frozen here.

use resilience_core::coloring::k0;
use resilience_core::fixtures::{complete_bipartite, cycle, petersen};
use resilience_core::generate::gnp;
use resilience_core::hamilton::{exact_hamilton, posa_find_hamilton, verify_hamilton_cycle};
use resilience_core::matching::{bipartite_matching_via_random_split, max_matching, SplitOutcome};
use resilience_core::spectral::{adjacency_spectrum, mixing_discrepancy, ordered_pair_count};
use resilience_core::{Graph, Seed, VertexSet};

/// Values computed with an independent arbitrary-precision evaluation of
/// ln C(n,k) + C(k,2) ln(1-p) >= 4 ln n (lgamma-based, not the incremental
/// product used by the library).
#[test]
fn k0_frozen_values() {
    let cases = [
        (200usize, 0.5f64, 0usize),
        (1000, 0.5, 0),
        (300, 0.1, 43),
        (500, 0.3, 16),
        (100, 0.2, 13),
        (2000, 0.05, 134),
    ];
    for (n, p, expect) in cases {
        assert_eq!(k0(n, p).unwrap(), expect, "k0({n}, {p})");
    }
}

/// Cycle graphs are circulant: eigenvalues 2cos(2πk/n), k = 0..n-1.
#[test]
fn cycle_spectrum_matches_closed_form() {
    for n in [5usize, 12, 60] {
        let profile = adjacency_spectrum(&cycle(n)).unwrap();
        let mut want: Vec<f64> = (0..n)
            .map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
            .collect();
        want.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (got, expect) in profile.eigenvalues().iter().zip(&want) {
            assert!((got - expect).abs() < 1e-9, "C_{n}: {got} vs {expect}");
        }
    }
}

/// K_{a,b} has eigenvalues ±√(ab) and a+b-2 zeros.
#[test]
fn complete_bipartite_spectrum_matches_closed_form() {
    for (a, b) in [(3usize, 4usize), (5, 5), (1, 9)] {
        let profile = adjacency_spectrum(&complete_bipartite(a, b)).unwrap();
        let top = ((a * b) as f64).sqrt();
        let eig = profile.eigenvalues();
        assert!((eig[0] - top).abs() < 1e-9);
        assert!((eig[a + b - 1] + top).abs() < 1e-9);
        for &l in &eig[1..a + b - 1] {
            assert!(l.abs() < 1e-9, "K_{{{a},{b}}} interior eigenvalue {l}");
        }
        assert!((profile.lambda() - top).abs() < 1e-9);
    }
}

/// Specific mixing numbers on the Petersen graph: B = outer cycle,
/// C = inner star. The five spokes each contribute one ordered pair, the
/// expectation is 3/10·25 = 7.5, and λ = 2.
#[test]
fn petersen_mixing_numbers() {
    let g = petersen();
    let profile = adjacency_spectrum(&g).unwrap();
    let outer = VertexSet::new((0..5).collect());
    let inner = VertexSet::new((5..10).collect());
    assert_eq!(ordered_pair_count(&g, &outer, &inner).unwrap(), 5);
    let (lhs, rhs) = mixing_discrepancy(&g, &profile, &outer, &inner).unwrap();
    assert!((lhs - 2.5).abs() < 1e-9, "{lhs}");
    assert!((rhs - 10.0).abs() < 1e-9, "{rhs}");
}

/// Every graph with minimum degree ≥ n/2 is Hamiltonian (Dirac), so the
/// exact oracle always finds a cycle there and the heuristic must not
/// miss. 60 random dense graphs, conditioned on the degree bound.
#[test]
fn posa_matches_exact_on_dirac_graphs() {
    let mut tested = 0;
    let mut seed = 0u64;
    while tested < 60 {
        seed += 1;
        let n = 6 + (seed % 7) as usize; // 6..=12
        let g = gnp(n, 0.72, Seed::new(9000 + seed)).unwrap();
        if g.min_degree() * 2 < n {
            continue;
        }
        tested += 1;
        let exact = exact_hamilton(&g).unwrap();
        assert!(exact.is_some(), "Dirac graph must be Hamiltonian (seed {seed})");
        let found = posa_find_hamilton(&g, Seed::new(seed), 50, 50 * n);
        let c = found.expect("rotation-extension missed a Dirac cycle");
        assert!(verify_hamilton_cycle(&g, &c));
    }
}

/// Blossom matching against exhaustive search on odd vertex counts, where
/// near-perfect is the best possible.
#[test]
fn blossom_matches_brute_force_on_odd_graphs() {
    fn brute_force_size(edges: &[(usize, usize)], used: u32) -> usize {
        edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| used & (1 << u) == 0 && used & (1 << v) == 0)
            .map(|(i, &(u, v))| {
                1 + brute_force_size(&edges[i + 1..], used | 1 << u | 1 << v)
            })
            .max()
            .unwrap_or(0)
    }
    for s in 0..60u64 {
        let g = gnp(9, 0.3, Seed::new(7000 + s)).unwrap();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let best = brute_force_size(&edges, 0);
        let m = max_matching(&g);
        assert_eq!(m.size(), best, "seed {s}");
        assert!(m.validate(&g).is_ok());
    }
}

/// On complete graphs every balanced split carries a perfect matching.
#[test]
fn split_pipeline_always_matches_complete_graphs() {
    for s in 0..20u64 {
        let g = Graph::complete(12);
        match bipartite_matching_via_random_split(&g, Seed::new(s)).unwrap() {
            SplitOutcome::Matching(m) => {
                assert!(m.is_perfect(12));
                assert!(m.validate(&g).is_ok());
            }
            SplitOutcome::Witness(w) => panic!("K12 split produced witness {:?}", w),
        }
    }
}

/// Exact Hamilton oracle on structured families where the answer is known
/// in closed form.
#[test]
fn exact_hamilton_on_structured_families() {
    for n in 3..=12usize {
        assert!(exact_hamilton(&cycle(n)).unwrap().is_some(), "C_{n}");
        assert!(exact_hamilton(&Graph::complete(n)).unwrap().is_some(), "K_{n}");
    }
    // K_{a,b} is Hamiltonian iff a = b (for a+b >= 3)
    for (a, b) in [(2usize, 2usize), (3, 3), (4, 4)] {
        assert!(exact_hamilton(&complete_bipartite(a, b)).unwrap().is_some());
    }
    for (a, b) in [(2usize, 3usize), (3, 5), (1, 2)] {
        assert!(exact_hamilton(&complete_bipartite(a, b)).unwrap().is_none());
    }
}
