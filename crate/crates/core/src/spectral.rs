//! Spectra of adjacency matrices and the estimates built on them: the
//! mixing inequality for regular graphs, a power-iteration lambda bound
//! for graphs past the dense cap, and sampled regularity and expansion
//! probes.
//!
//! For a D-regular graph with adjacency eigenvalues λ₁ ≥ … ≥ λ_n and
//! λ = max_{i≥2} |λ_i|, every pair of vertex sets B, C satisfies
//!
//! > |e(B,C) − (D/n)·|B|·|C|| ≤ λ·√(|B|·|C|)
//!
//! where e(B,C) counts ordered adjacent pairs. [`mixing_discrepancy`]
//! returns both sides; the inequality itself is a theorem, so a violation
//! in tests means the spectrum or the count is wrong, never the graph.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::eigen;
use crate::error::{Error, Result};
use crate::float;
use crate::generate::Seed;
use crate::graph::{Graph, VertexSet};

/// Default cap for dense eigendecomposition.
pub const DENSE_EIGENSOLVE_CAP: usize = 5000;

/// The full adjacency spectrum of a graph, with the quantities the mixing
/// estimate needs.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SpectralProfile {
    n: usize,
    /// Common degree, present only when the graph is regular.
    degree: Option<usize>,
    /// Descending: λ₁ ≥ λ₂ ≥ … ≥ λ_n.
    eigenvalues: Vec<f64>,
    /// max_{i≥2} |λ_i|; 0 for n ≤ 1.
    lambda: f64,
}

impl SpectralProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Largest eigenvalue; 0 on the empty graph.
    pub fn lambda_1(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    /// max_{i≥2} |λ_i|.
    pub fn lambda(&self) -> f64 {
        self.lambda
    }
}

/// Sampled evidence for (d, ε)-regularity: a minimum-degree check plus
/// the worst deviation of e(S,T)/(|S|·|T|) from d over sampled disjoint
/// pairs with |S|, |T| ≥ εn. Evidence about the sampled pairs only.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RegularityReport {
    pub d: f64,
    pub epsilon: f64,
    pub worst_deviation: f64,
    pub samples: usize,
    pub min_degree_ok: bool,
}

/// Full spectrum via dense symmetric eigendecomposition, descending.
/// Errors past [`DENSE_EIGENSOLVE_CAP`] vertices; estimate λ with
/// [`lambda_estimate`] instead at that scale.
pub fn adjacency_spectrum(g: &Graph) -> Result<SpectralProfile> {
    adjacency_spectrum_with_cap(g, DENSE_EIGENSOLVE_CAP)
}

/// [`adjacency_spectrum`] with an explicit cap.
pub fn adjacency_spectrum_with_cap(g: &Graph, cap: usize) -> Result<SpectralProfile> {
    let n = g.n();
    if n > cap {
        return Err(Error::SizeCapExceeded {
            what: "dense eigensolve; lambda_estimate scales further for regular graphs",
            size: n,
            cap,
        });
    }
    let mut a = vec![vec![0.0f64; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    let mut eigenvalues = eigen::symmetric_eigenvalues(a)?;
    eigenvalues.sort_by(|x, y| y.partial_cmp(x).expect("eigenvalues are finite"));
    let lambda = if n >= 2 {
        float::abs(eigenvalues[1]).max(float::abs(eigenvalues[n - 1]))
    } else {
        0.0
    };
    let degree = g.regular_degree();
    let profile = SpectralProfile {
        n,
        degree,
        eigenvalues,
        lambda,
    };

    // Built-in sanity: trace zero, Frobenius norm 2m, and λ₁ = D for
    // regular graphs. These hold mathematically; blowing past tolerance
    // is an eigensolver bug.
    let two_m = 2.0 * g.edge_count() as f64;
    let tol = 1e-6 * two_m.max(1.0);
    let trace: f64 = profile.eigenvalues.iter().sum();
    let frobenius: f64 = profile.eigenvalues.iter().map(|l| l * l).sum();
    assert!(float::abs(trace) <= tol, "spectrum trace {trace} drifted");
    assert!(
        float::abs(frobenius - two_m) <= tol,
        "spectrum Frobenius {frobenius} vs {two_m}"
    );
    if let Some(d) = degree {
        assert!(
            float::abs(profile.lambda_1() - d as f64) <= 1e-8 * d as f64,
            "regular graph must have lambda_1 = D"
        );
    }
    Ok(profile)
}

/// Power-iteration lower bound on λ for a regular graph: iterate the
/// adjacency operator on the complement of the all-ones vector and report
/// the final norm ratio. Converges to λ from below as iterations grow.
pub fn lambda_estimate(g: &Graph, iterations: usize, seed: Seed) -> Result<f64> {
    let n = g.n();
    let Some(_d) = g.regular_degree() else {
        return Err(Error::NotRegular);
    };
    if n <= 1 || iterations == 0 {
        return Ok(0.0);
    }
    let mut rng = seed.rng();
    let mut x: Vec<f64> = (0..n).map(|_| rng.random::<f64>() - 0.5).collect();
    project_off_ones(&mut x);
    let norm = norm2(&x);
    if norm == 0.0 {
        return Ok(0.0);
    }
    scale(&mut x, 1.0 / norm);

    let mut estimate = 0.0;
    let mut y = vec![0.0f64; n];
    for _ in 0..iterations {
        for (v, yv) in y.iter_mut().enumerate() {
            *yv = g
                .neighbors(v)
                .expect("vertex in range")
                .iter()
                .map(|&w| x[w])
                .sum();
        }
        // A preserves the ones-complement on regular graphs; re-project
        // anyway to stop round-off from reintroducing the top eigenvector.
        project_off_ones(&mut y);
        let norm = norm2(&y);
        if norm == 0.0 {
            return Ok(0.0);
        }
        estimate = norm; // ||Ax|| with ||x|| = 1
        core::mem::swap(&mut x, &mut y);
        scale(&mut x, 1.0 / norm);
    }
    Ok(estimate)
}

fn project_off_ones(x: &mut [f64]) {
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    for v in x.iter_mut() {
        *v -= mean;
    }
}

fn norm2(x: &[f64]) -> f64 {
    float::sqrt(x.iter().map(|v| v * v).sum())
}

fn scale(x: &mut [f64], s: f64) {
    for v in x.iter_mut() {
        *v *= s;
    }
}

/// Ordered adjacent pairs (u, v) with u ∈ B, v ∈ C. B and C may overlap;
/// an edge inside the intersection contributes twice.
pub fn ordered_pair_count(g: &Graph, b: &VertexSet, c: &VertexSet) -> Result<usize> {
    let n = g.n();
    let mut in_c = vec![false; n];
    for &v in c.iter() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        in_c[v] = true;
    }
    let mut count = 0;
    for &u in b.iter() {
        count += g.neighbors(u)?.iter().filter(|&&w| in_c[w]).count();
    }
    Ok(count)
}

/// Both sides of the mixing estimate for a regular graph:
/// lhs = |e(B,C) − (D/n)·|B|·|C||, rhs = λ·√(|B|·|C|). The profile must
/// have been computed for this graph (n and degree are cross-checked).
pub fn mixing_discrepancy(
    g: &Graph,
    profile: &SpectralProfile,
    b: &VertexSet,
    c: &VertexSet,
) -> Result<(f64, f64)> {
    let Some(d) = g.regular_degree() else {
        return Err(Error::NotRegular);
    };
    if profile.n() != g.n() {
        return Err(Error::ProfileMismatch("profile has a different vertex count"));
    }
    if profile.degree() != Some(d) {
        return Err(Error::ProfileMismatch("profile has a different degree"));
    }
    let count = ordered_pair_count(g, b, c)? as f64;
    let size_product = (b.len() * c.len()) as f64;
    let expected = if g.n() == 0 {
        0.0
    } else {
        d as f64 / g.n() as f64 * size_product
    };
    let lhs = float::abs(count - expected);
    let rhs = profile.lambda() * float::sqrt(size_product);
    Ok((lhs, rhs))
}

/// Samples disjoint set pairs with |S|, |T| ≥ εn and reports the worst
/// deviation of the cross density e(S,T)/(|S|·|T|) from `d`, plus whether
/// δ(G) ≥ dn. With a fixed seed the sample stream is a prefix chain, so
/// growing `samples` never improves the reported worst case.
pub fn eps_regularity_probe(
    g: &Graph,
    d: f64,
    epsilon: f64,
    samples: usize,
    seed: Seed,
) -> Result<RegularityReport> {
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(Error::InvalidParameter("epsilon must lie in (0, 1/2)"));
    }
    let n = g.n();
    let min_size = ceil_positive(epsilon * n as f64);
    if 2 * min_size > n {
        return Err(Error::InvalidParameter(
            "graph too small for two disjoint epsilon-fraction sets",
        ));
    }
    let min_degree_ok = (g.min_degree() as f64) >= d * n as f64;
    let mut rng = seed.rng();
    let mut pool: Vec<usize> = (0..n).collect();
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let s_size = rng.random_range(min_size..=n - min_size);
        let t_size = rng.random_range(min_size..=n - s_size);
        pool.shuffle(&mut rng);
        let s = VertexSet::new(pool[..s_size].to_vec());
        let t = VertexSet::new(pool[s_size..s_size + t_size].to_vec());
        let edges = g.edges_between(&s, &t)? as f64;
        let density = edges / (s_size as f64 * t_size as f64);
        worst = worst.max(float::abs(density - d));
    }
    Ok(RegularityReport {
        d,
        epsilon,
        worst_deviation: worst,
        samples,
        min_degree_ok,
    })
}

fn ceil_positive(x: f64) -> usize {
    let c = float::ceil(x);
    if c < 1.0 {
        1
    } else {
        c as usize
    }
}

/// Samples vertex sets U of the given size and reports the worst
/// |N(U)|/|U| seen, plus the first sampled U falling strictly below
/// `threshold`, if any.
pub fn expansion_probe(
    g: &Graph,
    set_size: usize,
    samples: usize,
    threshold: f64,
    seed: Seed,
) -> Result<(f64, Option<VertexSet>)> {
    let n = g.n();
    if set_size == 0 || set_size > n {
        return Err(Error::InvalidParameter(
            "set size must lie between 1 and n",
        ));
    }
    let mut rng = seed.rng();
    let mut pool: Vec<usize> = (0..n).collect();
    let mut min_ratio = f64::INFINITY;
    let mut witness = None;
    for _ in 0..samples {
        pool.shuffle(&mut rng);
        let u = VertexSet::new(pool[..set_size].to_vec());
        let ratio = g.neighborhood_of_set(&u)?.len() as f64 / set_size as f64;
        if ratio < min_ratio {
            min_ratio = ratio;
        }
        if witness.is_none() && ratio < threshold {
            witness = Some(u);
        }
    }
    if samples == 0 {
        min_ratio = 0.0;
    }
    Ok((min_ratio, witness))
}
