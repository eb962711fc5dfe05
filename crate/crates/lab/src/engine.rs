//! Monte-Carlo orchestration: budget sweeps over adversary strategies,
//! threshold fitting, and empirical validators for the concentration facts
//! the strategies lean on.
//!
//! Seeding discipline: trial `t` of a run with master seed `s` derives its
//! own root stream, and within a trial the graph, the adversary, and each
//! budget's checker draw from separate substreams. Trials are therefore
//! independent of execution order and of each other, and a sweep is a pure
//! function of its config.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use resilience_core::adversary::{
    clique_addition, cut_bisection, isolate_larger_half_with, min_degree_attack,
    random_degree_bounded, AdversaryMove, IsolateVariant, Mode,
};
use resilience_core::coloring::{dsatur, exact_chromatic, EXACT_CHROMATIC_CAP};
use resilience_core::generate::{gnp, random_regular};
use resilience_core::hamilton::{posa_find_hamilton_with, PosaOptions};
use resilience_core::matching::has_perfect_matching;
use resilience_core::{Graph, Seed};

use crate::stats::{first_half_crossing, wilson95};

/// Tool version embedded in every persisted record.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PropertyKind {
    PerfectMatching,
    Hamiltonicity,
    ChromaticInflation,
}

#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum GraphSource {
    Gnp { n: usize, p: f64 },
    RandomRegular { n: usize, d: usize },
}

impl GraphSource {
    pub fn n(&self) -> usize {
        match *self {
            GraphSource::Gnp { n, .. } => n,
            GraphSource::RandomRegular { n, .. } => n,
        }
    }

    /// The np scale that budget fractions and threshold normalization use.
    pub fn expected_degree(&self) -> f64 {
        match *self {
            GraphSource::Gnp { n, p } => n as f64 * p,
            GraphSource::RandomRegular { d, .. } => d as f64,
        }
    }

    pub fn sample(&self, seed: Seed) -> resilience_core::Result<Graph> {
        match *self {
            GraphSource::Gnp { n, p } => gnp(n, p, seed),
            GraphSource::RandomRegular { n, d } => random_regular(n, d, seed),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "strategy", rename_all = "kebab-case")]
pub enum AdversaryKind {
    IsolateLargerHalf { variant: IsolateVariant },
    CutBisection,
    RandomDegreeBounded { mode: Mode },
    MinDegreeAttack,
    CliqueAddition,
}

impl AdversaryKind {
    /// Strategies whose move does not depend on the budget: the move is
    /// built once per trial and applied at every budget that can afford it,
    /// which makes destruction monotone in r along the sweep.
    pub fn is_constructive(&self) -> bool {
        matches!(
            self,
            AdversaryKind::IsolateLargerHalf { .. } | AdversaryKind::CutBisection
        )
    }

    fn build(&self, g: &Graph, r: usize, seed: Seed) -> resilience_core::Result<AdversaryMove> {
        match *self {
            AdversaryKind::IsolateLargerHalf { variant } => {
                isolate_larger_half_with(g, variant, seed).map(|(mv, _)| mv)
            }
            AdversaryKind::CutBisection => cut_bisection(g, seed),
            AdversaryKind::RandomDegreeBounded { mode } => random_degree_bounded(g, r, mode, seed),
            AdversaryKind::MinDegreeAttack => min_degree_attack(g, r, seed),
            AdversaryKind::CliqueAddition => clique_addition(g, r, seed),
        }
    }
}

/// A budget entry: either an absolute degree cap or a multiple of np
/// resolved at run time. Serialized in the same syntax the CLI accepts
/// ("60" or "0.3np") so configs round-trip.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum BudgetSpec {
    Absolute(usize),
    NpFraction(f64),
}

impl BudgetSpec {
    pub fn resolve(&self, np: f64) -> usize {
        match *self {
            BudgetSpec::Absolute(r) => r,
            BudgetSpec::NpFraction(f) => (f * np).round() as usize,
        }
    }
}

impl core::fmt::Display for BudgetSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            BudgetSpec::Absolute(r) => write!(f, "{r}"),
            BudgetSpec::NpFraction(x) => write!(f, "{x}np"),
        }
    }
}

impl core::str::FromStr for BudgetSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Some(frac) = s.strip_suffix("np") {
            let f: f64 = frac
                .trim()
                .parse()
                .map_err(|_| format!("bad budget fraction {s:?}"))?;
            if !f.is_finite() || f < 0.0 {
                return Err(format!("bad budget fraction {s:?}"));
            }
            Ok(BudgetSpec::NpFraction(f))
        } else {
            let r: usize = s.parse().map_err(|_| {
                format!("bad budget {s:?} (expected an integer or a fraction like 0.3np)")
            })?;
            Ok(BudgetSpec::Absolute(r))
        }
    }
}

impl Serialize for BudgetSpec {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BudgetSpec {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn default_chromatic_epsilon() -> f64 {
    0.25
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub property: PropertyKind,
    pub graph: GraphSource,
    pub adversary: AdversaryKind,
    pub budgets: Vec<BudgetSpec>,
    pub trials: usize,
    pub seed: u64,
    /// Destruction threshold for chromatic inflation: destroyed iff
    /// χ̂(modified) > (1+ε)·χ̂(base). Ignored by the other properties.
    #[serde(default = "default_chromatic_epsilon")]
    pub chromatic_epsilon: f64,
}

impl ExperimentConfig {
    pub fn resolved_budgets(&self) -> Vec<usize> {
        let np = self.graph.expected_degree();
        self.budgets.iter().map(|b| b.resolve(np)).collect()
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.trials < 1 {
            return Err("trials must be at least 1".into());
        }
        if self.budgets.is_empty() {
            return Err("budgets must be non-empty".into());
        }
        let resolved = self.resolved_budgets();
        if resolved.windows(2).any(|w| w[0] >= w[1]) {
            return Err(format!(
                "budgets must resolve to strictly ascending values, got {resolved:?}"
            ));
        }
        if self.property == PropertyKind::PerfectMatching && !self.graph.n().is_multiple_of(2) {
            return Err("perfect-matching experiments need an even vertex count".into());
        }
        if !self.chromatic_epsilon.is_finite() || self.chromatic_epsilon < 0.0 {
            return Err("chromatic epsilon must be a non-negative number".into());
        }
        Ok(())
    }
}

/// Direction of evidence a record carries. A destroyed outcome is a
/// certificate that the sample's resilience is at most the budget; survival
/// only says the tried strategy failed, so it never certifies anything.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    Destroyed,
    SurvivedHeuristic,
}

#[derive(Clone, Debug, Serialize)]
pub struct BudgetOutcome {
    pub budget: usize,
    pub destroyed: bool,
    pub certificate: Certificate,
    /// Whether a move was applied. Constructive strategies leave the graph
    /// untouched at budgets below their intrinsic cost.
    pub applied: bool,
    /// Max degree of the modification actually applied (0 when none was).
    pub h_max_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_colors: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub new_colors: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    /// Root seed of this trial's substreams, for standalone replay.
    pub seed: u64,
    pub outcomes: Vec<BudgetOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Wall time. Lives only in trial records, never in summaries, so
    /// summaries are byte-identical across re-runs.
    pub wall_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CurvePoint {
    pub budget: usize,
    pub destroyed: usize,
    pub valid_trials: usize,
    pub destroyed_fraction: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    pub mean_h_max_degree: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResilienceCurve {
    pub np: f64,
    pub points: Vec<CurvePoint>,
    /// First budget where destroyed_fraction crosses 1/2, linearly
    /// interpolated. None when the curve never reaches 1/2.
    pub r_star: Option<f64>,
    pub r_star_over_np: Option<f64>,
}

fn chi_hat(g: &Graph) -> usize {
    if g.n() <= EXACT_CHROMATIC_CAP {
        exact_chromatic(g).expect("within exact cap")
    } else {
        dsatur(g).count()
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct InflationOutcome {
    pub destroyed: bool,
    pub base_colors: usize,
    pub new_colors: usize,
}

/// Chromatic-inflation check on an explicit pair: destroyed iff the color
/// estimate of G∪H exceeds (1+ε) times the estimate of G. Exact chromatic
/// number up to the exact cap, DSATUR above it.
pub fn chromatic_inflation_trial(
    g: &Graph,
    h: &Graph,
    epsilon: f64,
) -> resilience_core::Result<InflationOutcome> {
    let union = g.union(h)?;
    let base_colors = chi_hat(g);
    let new_colors = chi_hat(&union);
    Ok(InflationOutcome {
        destroyed: new_colors as f64 > (1.0 + epsilon) * base_colors as f64,
        base_colors,
        new_colors,
    })
}

struct CheckVerdict {
    destroyed: bool,
    new_colors: Option<usize>,
}

fn run_checker(
    config: &ExperimentConfig,
    graph: &Graph,
    checker_seed: Seed,
    base_colors: Option<usize>,
) -> CheckVerdict {
    match config.property {
        PropertyKind::PerfectMatching => CheckVerdict {
            destroyed: !has_perfect_matching(graph),
            new_colors: None,
        },
        PropertyKind::Hamiltonicity => {
            let found =
                posa_find_hamilton_with(graph, checker_seed, &PosaOptions::default()).is_some();
            CheckVerdict {
                destroyed: !found,
                new_colors: None,
            }
        }
        PropertyKind::ChromaticInflation => {
            let base = base_colors.expect("chromatic baseline computed per trial");
            let new = chi_hat(graph);
            CheckVerdict {
                destroyed: new as f64 > (1.0 + config.chromatic_epsilon) * base as f64,
                new_colors: Some(new),
            }
        }
    }
}

fn outcome_error(budget: usize, base_colors: Option<usize>, message: String) -> BudgetOutcome {
    BudgetOutcome {
        budget,
        destroyed: false,
        certificate: Certificate::SurvivedHeuristic,
        applied: false,
        h_max_degree: 0,
        base_colors,
        new_colors: None,
        error: Some(message),
    }
}

fn apply_and_check(
    config: &ExperimentConfig,
    g: &Graph,
    mv: &AdversaryMove,
    budget: usize,
    checker_seed: Seed,
    base_colors: Option<usize>,
) -> BudgetOutcome {
    // Budget audit: re-verify the degree cap and move validity before any
    // checker result is recorded against this budget.
    let h_max_degree = mv.h().max_degree();
    if h_max_degree > budget {
        return outcome_error(
            budget,
            base_colors,
            format!("budget audit failed: move degree {h_max_degree} exceeds {budget}"),
        );
    }
    if let Err(e) = mv.validate_against(g) {
        return outcome_error(budget, base_colors, format!("budget audit failed: {e}"));
    }
    let modified = match mv.apply(g) {
        Ok(m) => m,
        Err(e) => return outcome_error(budget, base_colors, format!("apply failed: {e}")),
    };
    let verdict = run_checker(config, &modified, checker_seed, base_colors);
    BudgetOutcome {
        budget,
        destroyed: verdict.destroyed,
        certificate: if verdict.destroyed {
            Certificate::Destroyed
        } else {
            Certificate::SurvivedHeuristic
        },
        applied: true,
        h_max_degree,
        base_colors,
        new_colors: verdict.new_colors,
        error: None,
    }
}

fn check_unmodified(
    config: &ExperimentConfig,
    g: &Graph,
    budget: usize,
    checker_seed: Seed,
    base_colors: Option<usize>,
) -> BudgetOutcome {
    let verdict = run_checker(config, g, checker_seed, base_colors);
    BudgetOutcome {
        budget,
        destroyed: verdict.destroyed,
        certificate: if verdict.destroyed {
            Certificate::Destroyed
        } else {
            Certificate::SurvivedHeuristic
        },
        applied: false,
        h_max_degree: 0,
        base_colors,
        new_colors: verdict.new_colors,
        error: None,
    }
}

/// One trial across every budget in the config. Generator and adversary
/// failures are recorded in the output, not thrown.
pub fn run_trial(config: &ExperimentConfig, trial: usize) -> TrialRecord {
    let start = Instant::now();
    let root = Seed::new(config.seed).derive(trial as u64);
    let graph_seed = root.derive(0);
    let adversary_seed = root.derive(1);
    let budgets = config.resolved_budgets();

    let g = match config.graph.sample(graph_seed) {
        Ok(g) => g,
        Err(e) => {
            return TrialRecord {
                trial,
                seed: root.value(),
                outcomes: Vec::new(),
                error: Some(format!("generator failed: {e}")),
                wall_ms: start.elapsed().as_millis() as u64,
            }
        }
    };

    let base_colors = if config.property == PropertyKind::ChromaticInflation {
        Some(chi_hat(&g))
    } else {
        None
    };

    // Constructive strategies commit to one move per trial; its cost decides
    // at which budgets it can be applied.
    let fixed_move = if config.adversary.is_constructive() {
        Some(config.adversary.build(&g, 0, adversary_seed))
    } else {
        None
    };

    let mut outcomes = Vec::with_capacity(budgets.len());
    for (bi, &r) in budgets.iter().enumerate() {
        let checker_seed = root.derive(2 + bi as u64);
        let outcome = match &fixed_move {
            Some(Ok(mv)) => {
                if mv.h().max_degree() <= r {
                    apply_and_check(config, &g, mv, r, checker_seed, base_colors)
                } else {
                    check_unmodified(config, &g, r, checker_seed, base_colors)
                }
            }
            Some(Err(e)) => outcome_error(r, base_colors, format!("adversary failed: {e}")),
            None => match config.adversary.build(&g, r, adversary_seed) {
                Ok(mv) => apply_and_check(config, &g, &mv, r, checker_seed, base_colors),
                Err(e) => outcome_error(r, base_colors, format!("adversary failed: {e}")),
            },
        };
        outcomes.push(outcome);
    }

    TrialRecord {
        trial,
        seed: root.value(),
        outcomes,
        error: None,
        wall_ms: start.elapsed().as_millis() as u64,
    }
}

/// Full sweep: all trials at all budgets, aggregated into a curve with a
/// fitted threshold. Trials run in parallel; aggregation folds in trial
/// order, so the result is independent of scheduling.
pub fn sweep(config: &ExperimentConfig) -> Result<(ResilienceCurve, Vec<TrialRecord>), String> {
    config.validate()?;
    let np = config.graph.expected_degree();
    let budgets = config.resolved_budgets();

    let records: Vec<TrialRecord> = (0..config.trials)
        .into_par_iter()
        .map(|t| run_trial(config, t))
        .collect();

    let mut points = Vec::with_capacity(budgets.len());
    for (bi, &r) in budgets.iter().enumerate() {
        let mut destroyed = 0usize;
        let mut valid = 0usize;
        let mut degree_sum = 0.0f64;
        for rec in &records {
            if rec.error.is_some() {
                continue;
            }
            let o = &rec.outcomes[bi];
            if o.error.is_some() {
                continue;
            }
            valid += 1;
            if o.destroyed {
                destroyed += 1;
            }
            degree_sum += o.h_max_degree as f64;
        }
        let fraction = if valid == 0 {
            0.0
        } else {
            destroyed as f64 / valid as f64
        };
        let (ci_lo, ci_hi) = wilson95(destroyed, valid);
        points.push(CurvePoint {
            budget: r,
            destroyed,
            valid_trials: valid,
            destroyed_fraction: fraction,
            ci_lo,
            ci_hi,
            mean_h_max_degree: if valid == 0 {
                0.0
            } else {
                degree_sum / valid as f64
            },
        });
    }

    let curve_pts: Vec<(f64, f64)> = points
        .iter()
        .map(|p| (p.budget as f64, p.destroyed_fraction))
        .collect();
    let r_star = first_half_crossing(&curve_pts);
    let curve = ResilienceCurve {
        np,
        points,
        r_star,
        r_star_over_np: r_star.map(|r| r / np),
    };
    Ok((curve, records))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    /// Minimum degree of G(n,p) is at least np − 2√(np ln n).
    DegreeConcentration,
    /// For disjoint |A| = |B| = s ≤ n/4: e(A,B) ≤ s(np/4 + √(2np ln n)).
    DisjointPairEdgeBound,
    /// e(A, V∖A) within a factor 1 ± 1/ln n of a(n−a)p.
    EdgeCutConcentration,
    /// Color estimate at least (1−ε/4)·np/(2 ln np).
    ChromaticLowerBound,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct LemmaParams {
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    /// Random set (pairs) drawn per trial for the sampled lemmas; ignored by
    /// the per-graph ones.
    pub samples: usize,
    /// Only used by the chromatic lower bound.
    pub epsilon: f64,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    pub samples: usize,
    pub epsilon: f64,
    /// Fraction of individual checks that passed.
    pub pass_fraction: f64,
    /// Smallest relative slack seen across all checks; negative means some
    /// check violated its bound.
    pub worst_margin: f64,
    /// Total individual checks performed.
    pub checked: usize,
}

struct LemmaTally {
    passed: usize,
    checked: usize,
    worst: f64,
}

fn degree_concentration_trial(g: &Graph, n: usize, p: f64) -> LemmaTally {
    let np = n as f64 * p;
    let bound = np - 2.0 * (np * (n as f64).ln()).sqrt();
    let min = g.min_degree() as f64;
    let margin = (min - bound) / bound.abs().max(1.0);
    LemmaTally {
        passed: usize::from(min >= bound),
        checked: 1,
        worst: margin,
    }
}

fn sample_distinct(pool: &mut [usize], take: usize, rng: &mut impl rand::Rng) -> Vec<usize> {
    // Partial Fisher-Yates: first `take` entries become the sample.
    let n = pool.len();
    for i in 0..take {
        let j = rng.random_range(i..n);
        pool.swap(i, j);
    }
    pool[..take].to_vec()
}

fn disjoint_pair_trial(
    g: &Graph,
    n: usize,
    p: f64,
    samples: usize,
    rng: &mut impl rand::Rng,
) -> LemmaTally {
    let np = n as f64 * p;
    let per_vertex = np / 4.0 + (2.0 * np * (n as f64).ln()).sqrt();
    let mut pool: Vec<usize> = (0..n).collect();
    let mut tally = LemmaTally {
        passed: 0,
        checked: 0,
        worst: f64::INFINITY,
    };
    for _ in 0..samples {
        let s = rng.random_range(1..=(n / 4).max(1));
        let picked = sample_distinct(&mut pool, 2 * s, rng);
        let a = resilience_core::VertexSet::new(picked[..s].to_vec());
        let b = resilience_core::VertexSet::new(picked[s..].to_vec());
        let observed = g.edges_between(&a, &b).expect("disjoint by construction") as f64;
        let bound = s as f64 * per_vertex;
        let margin = (bound - observed) / bound.max(1.0);
        tally.checked += 1;
        tally.passed += usize::from(observed <= bound);
        tally.worst = tally.worst.min(margin);
    }
    tally
}

fn edge_cut_trial(
    g: &Graph,
    n: usize,
    p: f64,
    samples: usize,
    rng: &mut impl rand::Rng,
) -> LemmaTally {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut tally = LemmaTally {
        passed: 0,
        checked: 0,
        worst: f64::INFINITY,
    };
    for _ in 0..samples {
        let a = rng.random_range(1..=(n / 2).max(1));
        let picked = sample_distinct(&mut pool, a, rng);
        let set = resilience_core::VertexSet::new(picked);
        let degree_sum: usize = set
            .as_slice()
            .iter()
            .map(|&v| g.degree(v).expect("vertex in range"))
            .sum();
        let inside = g.edges_within(&set).expect("valid set");
        let observed = (degree_sum - 2 * inside) as f64;
        let mean = a as f64 * (n - a) as f64 * p;
        let tol = mean / (n as f64).ln();
        let margin = (tol - (observed - mean).abs()) / tol.max(1.0);
        tally.checked += 1;
        tally.passed += usize::from((observed - mean).abs() <= tol);
        tally.worst = tally.worst.min(margin);
    }
    tally
}

fn chromatic_lower_trial(g: &Graph, n: usize, p: f64, epsilon: f64) -> Result<LemmaTally, String> {
    let np = n as f64 * p;
    if np <= 1.0 {
        return Err("chromatic lower bound needs np > 1".into());
    }
    let lower = (1.0 - epsilon / 4.0) * np / (2.0 * np.ln());
    let estimate = chi_hat(g) as f64;
    let margin = (estimate - lower) / lower.max(1.0);
    Ok(LemmaTally {
        passed: usize::from(estimate > lower),
        checked: 1,
        worst: margin,
    })
}

/// Empirical validator for one of the registered concentration facts, run
/// on fresh G(n,p) samples. Per-trial substreams as in [`run_trial`].
pub fn validate_lemma(lemma: LemmaId, params: &LemmaParams) -> Result<LemmaReport, String> {
    if params.trials < 1 {
        return Err("trials must be at least 1".into());
    }
    if params.samples < 1 {
        return Err("samples must be at least 1".into());
    }
    if params.n < 8 {
        return Err("lemma validation needs n >= 8".into());
    }

    let tallies: Vec<Result<LemmaTally, String>> = (0..params.trials)
        .into_par_iter()
        .map(|t| {
            let root = Seed::new(params.seed).derive(t as u64);
            let g = gnp(params.n, params.p, root.derive(0))
                .map_err(|e| format!("generator failed: {e}"))?;
            let mut rng = root.derive(1).rng();
            match lemma {
                LemmaId::DegreeConcentration => {
                    Ok(degree_concentration_trial(&g, params.n, params.p))
                }
                LemmaId::DisjointPairEdgeBound => Ok(disjoint_pair_trial(
                    &g,
                    params.n,
                    params.p,
                    params.samples,
                    &mut rng,
                )),
                LemmaId::EdgeCutConcentration => Ok(edge_cut_trial(
                    &g,
                    params.n,
                    params.p,
                    params.samples,
                    &mut rng,
                )),
                LemmaId::ChromaticLowerBound => {
                    chromatic_lower_trial(&g, params.n, params.p, params.epsilon)
                }
            }
        })
        .collect();

    let mut passed = 0usize;
    let mut checked = 0usize;
    let mut worst = f64::INFINITY;
    for tally in tallies {
        let tally = tally?;
        passed += tally.passed;
        checked += tally.checked;
        worst = worst.min(tally.worst);
    }
    Ok(LemmaReport {
        lemma,
        n: params.n,
        p: params.p,
        trials: params.trials,
        samples: params.samples,
        epsilon: params.epsilon,
        pass_fraction: passed as f64 / checked as f64,
        worst_margin: worst,
        checked,
    })
}
