//! reslab: generate graphs, check properties, apply adversary moves, run
//! budget sweeps, and validate concentration lemmas.
//!
//! Every run resolves a seed (sampling and printing one when omitted) and
//! echoes the fully resolved configuration to stderr as one JSON line, so
//! any output can be reproduced from its own log. Verdicts and artifacts go
//! to stdout or to files; exit codes only signal whether the command ran.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use resilience_core::adversary::{
    clique_addition, cut_bisection, isolate_larger_half_with, min_degree_attack,
    random_degree_bounded, AdversaryMove, IsolateVariant, Mode,
};
use resilience_core::coloring::{dsatur, exact_chromatic};
use resilience_core::generate::{gnp, random_regular};
use resilience_core::graph::{parse_edge_list, serialize_edge_list};
use resilience_core::hamilton::{
    exact_hamilton, posa_find_hamilton_with, verify_hamilton_cycle, PosaOptions,
};
use resilience_core::matching::max_matching;
use resilience_core::{Graph, Seed};

use resilience_lab::engine::{
    sweep, validate_lemma, AdversaryKind, BudgetSpec, ExperimentConfig, GraphSource, LemmaId,
    LemmaParams, PropertyKind, VERSION,
};
use resilience_lab::records::{
    curve_csv, to_pretty_json, write_csv, write_json, write_jsonl, LemmaSummary, SweepSummary,
};

#[derive(Parser)]
#[command(name = "reslab", version, about = "graph resilience laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ModelArg {
    Gnp,
    Regular,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum PropertyArg {
    Matching,
    Hamilton,
    Chromatic,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum StrategyArg {
    Isolate,
    IsolateLowdeg,
    Cut,
    Random,
    Mindeg,
    Clique,
    FromFile,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ModeArg {
    Delete,
    Add,
    SymmetricDifference,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Delete => Mode::Delete,
            ModeArg::Add => Mode::Add,
            ModeArg::SymmetricDifference => Mode::SymmetricDifference,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum LemmaArg {
    DegreeConcentration,
    DisjointPairs,
    EdgeCut,
    ChromaticLower,
}

impl From<LemmaArg> for LemmaId {
    fn from(l: LemmaArg) -> LemmaId {
        match l {
            LemmaArg::DegreeConcentration => LemmaId::DegreeConcentration,
            LemmaArg::DisjointPairs => LemmaId::DisjointPairEdgeBound,
            LemmaArg::EdgeCut => LemmaId::EdgeCutConcentration,
            LemmaArg::ChromaticLower => LemmaId::ChromaticLowerBound,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Sample a random graph and write it as an edge list
    Gen {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        n: usize,
        /// Edge probability (gnp only)
        #[arg(long)]
        p: Option<f64>,
        /// Degree (regular only)
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Output path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a property of a graph file and write a verdict
    Check {
        #[arg(long, value_enum)]
        property: PropertyArg,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        /// Use the exact oracle instead of the heuristic (small graphs only)
        #[arg(long)]
        exact: bool,
        /// Rotation-extension restart budget
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        /// Rotation budget per restart; 50n when omitted
        #[arg(long)]
        rotations: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build an adversary move against a graph and apply it
    Attack {
        #[arg(long, value_enum)]
        strategy: StrategyArg,
        #[arg(long)]
        graph: PathBuf,
        /// Degree cap r; required for budgeted strategies, optional audit
        /// for isolate/cut
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Modification graph file (from-file strategy)
        #[arg(long)]
        h: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        /// Write the move (with H's edges) as JSON
        #[arg(long)]
        out_move: Option<PathBuf>,
        /// Write the modified graph as an edge list
        #[arg(long)]
        out_graph: Option<PathBuf>,
    },
    /// Run a Monte-Carlo budget sweep and fit the threshold
    Sweep {
        /// Flat key=value config file; flags override it
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, value_enum)]
        property: Option<PropertyArg>,
        #[arg(long, value_enum)]
        model: Option<ModelArg>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_enum)]
        strategy: Option<StrategyArg>,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Comma-separated budgets: integers or np fractions ("60,80" or
        /// "0.3np,0.4np")
        #[arg(long)]
        budgets: Option<String>,
        #[arg(long)]
        trials: Option<usize>,
        /// Chromatic inflation threshold ε
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Cap on worker threads
        #[arg(long)]
        threads: Option<usize>,
        /// Output prefix: writes PREFIX.jsonl, PREFIX.summary.json,
        /// PREFIX.csv; summary goes to stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a concentration lemma on fresh random graphs
    Validate {
        #[arg(long, value_enum)]
        lemma: LemmaArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Random sets drawn per trial (sampled lemmas)
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// ε for the chromatic lower bound
        #[arg(long, default_value_t = 0.2)]
        epsilon: f64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Gen {
            model,
            n,
            p,
            d,
            seed,
            out,
        } => cmd_gen(model, n, p, d, seed, out),
        Command::Check {
            property,
            graph,
            seed,
            exact,
            restarts,
            rotations,
            out,
        } => cmd_check(property, &graph, seed, exact, restarts, rotations, out),
        Command::Attack {
            strategy,
            graph,
            budget,
            mode,
            h,
            seed,
            out_move,
            out_graph,
        } => cmd_attack(strategy, &graph, budget, mode, h, seed, out_move, out_graph),
        Command::Sweep {
            config,
            property,
            model,
            n,
            p,
            d,
            strategy,
            mode,
            budgets,
            trials,
            epsilon,
            seed,
            threads,
            out,
        } => {
            let flags = SweepFlags {
                property,
                model,
                n,
                p,
                d,
                strategy,
                mode,
                budgets,
                trials,
                epsilon,
                seed,
            };
            cmd_sweep(config, flags, threads, out)
        }
        Command::Validate {
            lemma,
            n,
            p,
            trials,
            samples,
            epsilon,
            seed,
            threads,
            out,
        } => cmd_validate(lemma, n, p, trials, samples, epsilon, seed, threads, out),
    }
}

fn resolve_seed(seed: Option<u64>) -> u64 {
    match seed {
        Some(s) => s,
        None => {
            let s: u64 = rand::random();
            eprintln!("seed: {s} (sampled; pass --seed {s} to reproduce)");
            s
        }
    }
}

fn echo_config<T: Serialize>(command: &str, config: &T) {
    let line = json!({ "version": VERSION, "command": command, "config": config });
    eprintln!("{line}");
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_or_print(out: Option<&Path>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_gen(
    model: ModelArg,
    n: usize,
    p: Option<f64>,
    d: Option<usize>,
    seed: Option<u64>,
    out: Option<PathBuf>,
) -> Result<(), String> {
    let seed = resolve_seed(seed);
    let g = match model {
        ModelArg::Gnp => {
            let p = p.ok_or("--model gnp requires --p")?;
            if d.is_some() {
                return Err("--d only applies to --model regular".into());
            }
            echo_config(
                "gen",
                &json!({ "model": "gnp", "n": n, "p": p, "seed": seed }),
            );
            gnp(n, p, Seed::new(seed)).map_err(|e| e.to_string())?
        }
        ModelArg::Regular => {
            let d = d.ok_or("--model regular requires --d")?;
            if p.is_some() {
                return Err("--p only applies to --model gnp".into());
            }
            echo_config(
                "gen",
                &json!({ "model": "regular", "n": n, "d": d, "seed": seed }),
            );
            random_regular(n, d, Seed::new(seed)).map_err(|e| e.to_string())?
        }
    };
    write_or_print(out.as_deref(), &serialize_edge_list(&g))
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    property: PropertyArg,
    graph: &Path,
    seed: Option<u64>,
    exact: bool,
    restarts: usize,
    rotations: Option<usize>,
    out: Option<PathBuf>,
) -> Result<(), String> {
    let seed = resolve_seed(seed);
    let g = load_graph(graph)?;
    let config = json!({
        "property": property,
        "graph": graph.display().to_string(),
        "n": g.n(),
        "m": g.edge_count(),
        "seed": seed,
        "exact": exact,
        "restarts": restarts,
        "rotations": rotations,
    });
    echo_config("check", &config);

    let verdict = match property {
        PropertyArg::Matching => {
            let m = max_matching(&g);
            json!({
                "perfect": m.is_perfect(g.n()),
                "size": m.size(),
            })
        }
        PropertyArg::Hamilton => {
            let (found, method): (Option<Vec<usize>>, &str) = if exact {
                (exact_hamilton(&g).map_err(|e| e.to_string())?, "exact")
            } else {
                let opts = PosaOptions {
                    restart_budget: restarts,
                    rotation_budget: rotations,
                    ..PosaOptions::default()
                };
                (
                    posa_find_hamilton_with(&g, Seed::new(seed), &opts),
                    "rotation-extension",
                )
            };
            if let Some(cycle) = &found {
                debug_assert!(verify_hamilton_cycle(&g, cycle));
            }
            json!({
                "found": found.is_some(),
                "cycle": found,
                "method": method,
            })
        }
        PropertyArg::Chromatic => {
            let (colors, method) = if exact {
                (exact_chromatic(&g).map_err(|e| e.to_string())?, "exact")
            } else {
                (dsatur(&g).count(), "dsatur")
            };
            json!({ "colors": colors, "method": method })
        }
    };

    let report = json!({ "version": VERSION, "config": config, "verdict": verdict });
    let text = format!("{}\n", serde_json::to_string_pretty(&report).unwrap());
    write_or_print(out.as_deref(), &text)
}

#[allow(clippy::too_many_arguments)]
fn cmd_attack(
    strategy: StrategyArg,
    graph: &Path,
    budget: Option<usize>,
    mode: Option<ModeArg>,
    h: Option<PathBuf>,
    seed: Option<u64>,
    out_move: Option<PathBuf>,
    out_graph: Option<PathBuf>,
) -> Result<(), String> {
    let seed = resolve_seed(seed);
    let g = load_graph(graph)?;
    let err = |e: resilience_core::Error| e.to_string();

    let need_budget = || budget.ok_or(format!("--strategy {strategy:?} requires --budget").to_lowercase());
    let mv: AdversaryMove = match strategy {
        StrategyArg::Isolate => {
            isolate_larger_half_with(&g, IsolateVariant::UniformRandom, Seed::new(seed))
                .map(|(mv, _)| mv)
                .map_err(err)?
        }
        StrategyArg::IsolateLowdeg => {
            isolate_larger_half_with(&g, IsolateVariant::LowestDegreeFirst, Seed::new(seed))
                .map(|(mv, _)| mv)
                .map_err(err)?
        }
        StrategyArg::Cut => cut_bisection(&g, Seed::new(seed)).map_err(err)?,
        StrategyArg::Random => {
            let mode = mode.map(Mode::from).unwrap_or(Mode::Delete);
            random_degree_bounded(&g, need_budget()?, mode, Seed::new(seed)).map_err(err)?
        }
        StrategyArg::Mindeg => min_degree_attack(&g, need_budget()?, Seed::new(seed)).map_err(err)?,
        StrategyArg::Clique => clique_addition(&g, need_budget()?, Seed::new(seed)).map_err(err)?,
        StrategyArg::FromFile => {
            let path = h.as_ref().ok_or("--strategy from-file requires --h")?;
            let mode = mode.ok_or("--strategy from-file requires --mode")?;
            let h_graph = load_graph(path)?;
            AdversaryMove::new(h_graph, mode.into(), need_budget()?).map_err(err)?
        }
    };

    // An explicit budget is an audit for the self-budgeting strategies.
    if let Some(r) = budget {
        if mv.h().max_degree() > r {
            let v = (0..mv.h().n())
                .max_by_key(|&v| mv.h().degree(v).unwrap())
                .unwrap();
            return Err(format!(
                "move exceeds budget: vertex {v} has degree {} > {r}",
                mv.h().degree(v).unwrap()
            ));
        }
    }
    mv.validate_against(&g).map_err(err)?;
    let modified = mv.apply(&g).map_err(err)?;

    let config = json!({
        "strategy": strategy,
        "graph": graph.display().to_string(),
        "budget": budget,
        "mode": mv.mode(),
        "h": h.as_ref().map(|p| p.display().to_string()),
        "seed": seed,
    });
    echo_config("attack", &config);

    let move_brief = json!({
        "mode": mv.mode(),
        "budget": mv.budget(),
        "h_n": mv.h().n(),
        "h_m": mv.h().edge_count(),
        "h_max_degree": mv.h().max_degree(),
        "result_n": modified.n(),
        "result_m": modified.edge_count(),
    });
    let report = json!({ "version": VERSION, "config": config, "move": move_brief });
    println!("{}", serde_json::to_string_pretty(&report).unwrap());

    if let Some(path) = out_move {
        let edges: Vec<[usize; 2]> = mv.h().edges().map(|(u, v)| [u, v]).collect();
        let full = json!({
            "version": VERSION,
            "config": config,
            "move": move_brief,
            "h_edges": edges,
        });
        write_json(&path, &full).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    if let Some(path) = out_graph {
        std::fs::write(&path, serialize_edge_list(&modified))
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(())
}

struct SweepFlags {
    property: Option<PropertyArg>,
    model: Option<ModelArg>,
    n: Option<usize>,
    p: Option<f64>,
    d: Option<usize>,
    strategy: Option<StrategyArg>,
    mode: Option<ModeArg>,
    budgets: Option<String>,
    trials: Option<usize>,
    epsilon: Option<f64>,
    seed: Option<u64>,
}

const SWEEP_KEYS: &[&str] = &[
    "property", "model", "n", "p", "d", "strategy", "mode", "budgets", "trials", "epsilon", "seed",
];

fn parse_config_file(path: &Path) -> Result<BTreeMap<String, String>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or(format!("{}:{}: expected key=value", path.display(), i + 1))?;
        let key = key.trim().to_string();
        if !SWEEP_KEYS.contains(&key.as_str()) {
            return Err(format!("{}:{}: unknown key {key:?}", path.display(), i + 1));
        }
        if map.insert(key.clone(), value.trim().to_string()).is_some() {
            return Err(format!("{}:{}: duplicate key {key:?}", path.display(), i + 1));
        }
    }
    Ok(map)
}

fn parse_from_map<T: std::str::FromStr>(
    map: &BTreeMap<String, String>,
    key: &str,
) -> Result<Option<T>, String> {
    match map.get(key) {
        None => Ok(None),
        Some(raw) => raw
            .parse()
            .map(Some)
            .map_err(|_| format!("config key {key}: cannot parse {raw:?}")),
    }
}

fn enum_from_map<T: ValueEnum + Clone + Send + Sync + 'static>(
    map: &BTreeMap<String, String>,
    key: &str,
) -> Result<Option<T>, String> {
    match map.get(key) {
        None => Ok(None),
        Some(raw) => T::from_str(raw, false)
            .map(Some)
            .map_err(|_| format!("config key {key}: unknown value {raw:?}")),
    }
}

fn cap_threads(threads: Option<usize>) -> Result<(), String> {
    if let Some(t) = threads {
        if t == 0 {
            return Err("--threads must be positive".into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| format!("thread pool: {e}"))?;
    }
    Ok(())
}

fn cmd_sweep(
    config_path: Option<PathBuf>,
    flags: SweepFlags,
    threads: Option<usize>,
    out: Option<PathBuf>,
) -> Result<(), String> {
    let file = match &config_path {
        Some(p) => parse_config_file(p)?,
        None => BTreeMap::new(),
    };

    let property = flags
        .property
        .or(enum_from_map::<PropertyArg>(&file, "property")?)
        .ok_or("missing property (flag --property or config key)")?;
    let model = flags
        .model
        .or(enum_from_map::<ModelArg>(&file, "model")?)
        .ok_or("missing model")?;
    let n = flags
        .n
        .or(parse_from_map(&file, "n")?)
        .ok_or("missing n")?;
    let strategy = flags
        .strategy
        .or(enum_from_map::<StrategyArg>(&file, "strategy")?)
        .ok_or("missing strategy")?;
    let trials = flags
        .trials
        .or(parse_from_map(&file, "trials")?)
        .ok_or("missing trials")?;
    let budgets_raw = flags
        .budgets
        .or(file.get("budgets").cloned())
        .ok_or("missing budgets")?;
    let p = flags.p.or(parse_from_map(&file, "p")?);
    let d = flags.d.or(parse_from_map(&file, "d")?);
    let mode = flags.mode.or(enum_from_map::<ModeArg>(&file, "mode")?);
    let epsilon = flags.epsilon.or(parse_from_map(&file, "epsilon")?);
    let seed = resolve_seed(flags.seed.or(parse_from_map(&file, "seed")?));

    let graph = match model {
        ModelArg::Gnp => GraphSource::Gnp {
            n,
            p: p.ok_or("gnp model requires p")?,
        },
        ModelArg::Regular => GraphSource::RandomRegular {
            n,
            d: d.ok_or("regular model requires d")?,
        },
    };
    let adversary = match strategy {
        StrategyArg::Isolate => AdversaryKind::IsolateLargerHalf {
            variant: IsolateVariant::UniformRandom,
        },
        StrategyArg::IsolateLowdeg => AdversaryKind::IsolateLargerHalf {
            variant: IsolateVariant::LowestDegreeFirst,
        },
        StrategyArg::Cut => AdversaryKind::CutBisection,
        StrategyArg::Random => AdversaryKind::RandomDegreeBounded {
            mode: mode.map(Mode::from).unwrap_or(Mode::Delete),
        },
        StrategyArg::Mindeg => AdversaryKind::MinDegreeAttack,
        StrategyArg::Clique => AdversaryKind::CliqueAddition,
        StrategyArg::FromFile => return Err("sweep cannot use the from-file strategy".into()),
    };
    let budgets = budgets_raw
        .split(',')
        .map(|s| s.parse::<BudgetSpec>())
        .collect::<Result<Vec<_>, _>>()?;
    let prop_kind = match property {
        PropertyArg::Matching => PropertyKind::PerfectMatching,
        PropertyArg::Hamilton => PropertyKind::Hamiltonicity,
        PropertyArg::Chromatic => PropertyKind::ChromaticInflation,
    };

    let config = ExperimentConfig {
        property: prop_kind,
        graph,
        adversary,
        budgets,
        trials,
        seed,
        chromatic_epsilon: epsilon.unwrap_or(0.25),
    };
    config.validate()?;
    echo_config("sweep", &config);
    cap_threads(threads)?;

    let (curve, records) = sweep(&config)?;
    match (&curve.r_star, &curve.r_star_over_np) {
        (Some(r), Some(f)) => eprintln!("r* = {r:.3} (r*/np = {f:.4})"),
        _ => eprintln!("r* = none (curve never reaches 1/2)"),
    }
    let summary = SweepSummary::new(config, curve);

    match out {
        Some(prefix) => {
            let path_for = |ext: &str| {
                let mut name = prefix.file_name().unwrap_or_default().to_os_string();
                name.push(ext);
                prefix.with_file_name(name)
            };
            let jsonl = path_for(".jsonl");
            write_jsonl(&jsonl, &records)
                .map_err(|e| format!("cannot write {}: {e}", jsonl.display()))?;
            let sj = path_for(".summary.json");
            write_json(&sj, &summary).map_err(|e| format!("cannot write {}: {e}", sj.display()))?;
            let csv = path_for(".csv");
            write_csv(&csv, &summary.curve)
                .map_err(|e| format!("cannot write {}: {e}", csv.display()))?;
            eprintln!(
                "wrote {} ({} trials), {}, {}",
                jsonl.display(),
                records.len(),
                sj.display(),
                csv.display()
            );
        }
        None => {
            print!("{}", to_pretty_json(&summary));
            print!("{}", curve_csv(&summary.curve));
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_validate(
    lemma: LemmaArg,
    n: usize,
    p: f64,
    trials: usize,
    samples: usize,
    epsilon: f64,
    seed: Option<u64>,
    threads: Option<usize>,
    out: Option<PathBuf>,
) -> Result<(), String> {
    let seed = resolve_seed(seed);
    let params = LemmaParams {
        n,
        p,
        trials,
        samples,
        epsilon,
        seed,
    };
    let config = json!({ "lemma": lemma, "params": params });
    echo_config("validate", &config);
    cap_threads(threads)?;

    let report = validate_lemma(lemma.into(), &params)?;
    eprintln!(
        "pass_fraction = {:.4} over {} checks, worst margin {:.4}",
        report.pass_fraction, report.checked, report.worst_margin
    );
    let summary = LemmaSummary::new(params, report);
    let text = to_pretty_json(&summary);
    write_or_print(out.as_deref(), &text)
}
