//! Command-line front end: generate named graphs, certify root graphs,
//! enumerate and classify facets, and run batch cross-checks over
//! exhaustively enumerated small multigraphs.
//!
//! Reports are JSON on standard output with alphabetically ordered keys;
//! diagnostics go to standard error. Exit codes: 0 = success (for `certify`:
//! the line graph needs only clique and odd-hole inequalities), 1 = negative
//! verdict or failed cross-check, 2 = error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use linestab::classify::{decide_line_nplus_perfect_with_limit, Verdict};
use linestab::corpus::{connected_multigraphs, CorpusOptions};
use linestab::families::{self, FamilyGraph, HoleExtra};
use linestab::linegraph::line_graph;
use linestab::matching::{exhaustive_maximum_matching_size, maximum_matching};
use linestab::multigraph::Multigraph;
use linestab::polytope::{
    classify_facet, is_h_perfect_with_limit, is_joined_a_perfect_with_limit,
    stab_facets_with_limit, verify_edmonds_description_with_limit, FacetReportRow,
    RootedLineGraph,
};

#[derive(Parser)]
#[command(
    name = "linestab",
    version,
    about = "Stable set polytopes of line graphs: certificates and an exact facet oracle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named graph in edge-list format.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Decide the line graph of a root graph and print the certificate.
    Certify(CertifyArgs),
    /// Enumerate and classify the facets of a graph's stable set polytope.
    Facets(FacetsArgs),
    /// Cross-check the implementations over all small connected multigraphs.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum Family {
    /// Chordless odd cycle on 2k+1 nodes.
    OddHole(KArg),
    /// Odd hole plus one parallel copy of a hole edge.
    OddHolePlusDouble(KArg),
    /// Odd hole plus one chord.
    OddHolePlusChord(ChordArgs),
    /// Odd hole plus one attached odd path.
    OddHolePlusPath(PathArgs),
    /// Antiweb A(n, k).
    Antiweb(NkArgs),
    /// Web: complement of the antiweb A(n, k).
    Web(NkArgs),
    /// Hub joined to an odd hole on 2k+1 nodes.
    OddWheel(KArg),
    /// Line graph of the 5-hole with one doubled edge.
    Glt(OutArg),
    /// Line graph of the 5-hole with one chord.
    Gemn(OutArg),
    /// Star with three leaves.
    Claw(OutArg),
}

#[derive(Args)]
struct OutArg {
    /// Output path; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct KArg {
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct ChordArgs {
    #[arg(long)]
    k: usize,
    /// Hole distance between the chord endpoints (2..=2k-1).
    #[arg(long)]
    span: usize,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct PathArgs {
    #[arg(long)]
    k: usize,
    /// Path length in edges; odd and at least 3.
    #[arg(long)]
    len: usize,
    /// Hole distance between the attachment nodes (2..=2k-1).
    #[arg(long)]
    span: usize,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct NkArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct CertifyArgs {
    /// Root graph in edge-list format.
    graph: PathBuf,
    /// Induced-subgraph scan limit.
    #[arg(long, default_value_t = 18)]
    max_nodes: usize,
    /// Facet-enumeration limit used for the joined-antiweb verdict.
    #[arg(long, default_value_t = 14)]
    max_hull_nodes: usize,
    /// Include the classified facet table of the line graph.
    #[arg(long)]
    facets: bool,
}

#[derive(Args)]
struct FacetsArgs {
    /// Graph in edge-list format (analyzed as given).
    graph: PathBuf,
    /// Root graph whose line graph `graph` is; enables line-graph rank tags.
    #[arg(long)]
    root: Option<PathBuf>,
    #[arg(long, default_value_t = 14)]
    max_hull_nodes: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Edge budget of the exhaustive corpus.
    #[arg(long, default_value_t = 6)]
    max_edges: usize,
    /// Node cap of the corpus.
    #[arg(long)]
    max_nodes: Option<usize>,
    /// Check the facet description of every line graph against root
    /// witnesses.
    #[arg(long)]
    edmonds: bool,
    /// Check that the subgraph decision matches the facet-side notion of
    /// needing only clique and odd-hole inequalities.
    #[arg(long)]
    corollary2: bool,
    /// Check that joined a-perfection of the line graph matches the
    /// subgraph decision.
    #[arg(long)]
    joined_a: bool,
    /// Also compare blossom matching against the subset-DP reference on
    /// this many random multigraphs.
    #[arg(long, default_value_t = 0)]
    matching_oracle: usize,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    /// Worker threads for the corpus sweep.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Machine-readable summary instead of progress lines.
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Outcome<T: Serialize> {
    Value(T),
    Skipped { skipped: String },
}

impl<T: Serialize> Outcome<T> {
    fn skipped_limit() -> Self {
        Outcome::Skipped {
            skipped: "limit".into(),
        }
    }
}

#[derive(Serialize)]
struct InputSummary {
    nodes: usize,
    edges: usize,
    parallel_edges: usize,
}

#[derive(Serialize)]
struct AnalysisReport {
    input: InputSummary,
    nplus_perfect: Outcome<bool>,
    h_perfect: Outcome<bool>,
    joined_a_perfect: Outcome<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    facets: Option<Value>,
    timing_ms: BTreeMap<String, u128>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Generate { family } => cmd_generate(family),
        Command::Certify(args) => cmd_certify(args),
        Command::Facets(args) => cmd_facets(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn cmd_generate(family: Family) -> anyhow::Result<ExitCode> {
    let plain = |graph: Multigraph| FamilyGraph {
        graph,
        warning: None,
    };
    let (built, out): (FamilyGraph, &OutArg) = match &family {
        Family::OddHole(a) => (plain(families::odd_hole(a.k)?), &a.out),
        Family::OddHolePlusDouble(a) => (
            plain(families::odd_hole_plus(HoleExtra::Double, a.k)?),
            &a.out,
        ),
        Family::OddHolePlusChord(a) => (
            plain(families::odd_hole_plus(
                HoleExtra::Chord { span: a.span },
                a.k,
            )?),
            &a.out,
        ),
        Family::OddHolePlusPath(a) => (
            plain(families::odd_hole_plus(
                HoleExtra::Path {
                    length: a.len,
                    span: a.span,
                },
                a.k,
            )?),
            &a.out,
        ),
        Family::Antiweb(a) => (families::antiweb(a.n, a.k)?, &a.out),
        Family::Web(a) => (families::web(a.n, a.k)?, &a.out),
        Family::OddWheel(a) => (plain(families::odd_wheel(a.k)?), &a.out),
        Family::Glt(out) => (plain(families::glt()), out),
        Family::Gemn(out) => (plain(families::gemn()), out),
        Family::Claw(out) => (plain(families::claw()), out),
    };
    if let Some(warning) = &built.warning {
        eprintln!("warning: {warning}");
    }
    let text = built.graph.to_edge_list();
    match &out.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn read_graph(path: &Path) -> anyhow::Result<Multigraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    Ok(Multigraph::parse_edge_list(&text)?)
}

fn print_canonical_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    // Through `Value` so object keys come out in canonical (sorted) order.
    let value = serde_json::to_value(value)?;
    let mut stdout = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut stdout, &value)?;
    writeln!(stdout)?;
    Ok(())
}

fn cmd_certify(args: CertifyArgs) -> anyhow::Result<ExitCode> {
    let h = read_graph(&args.graph)?;
    let mut timing = BTreeMap::new();

    let started = Instant::now();
    let certificate = decide_line_nplus_perfect_with_limit(&h, args.max_nodes)?;
    timing.insert("decide".to_string(), started.elapsed().as_millis());
    let perfect = certificate.verdict == Verdict::Perfect;

    let line_nodes = h.edge_count();
    let (joined, facets) = if line_nodes <= args.max_hull_nodes {
        let lg = line_graph(&h)?;
        let started = Instant::now();
        let joined = is_joined_a_perfect_with_limit(&lg.graph, args.max_hull_nodes)?;
        timing.insert("joined_a".to_string(), started.elapsed().as_millis());
        let facets = if args.facets {
            Some(facet_table(&lg.graph, Some(&h), args.max_hull_nodes)?)
        } else {
            None
        };
        (Outcome::Value(joined), facets)
    } else {
        (Outcome::skipped_limit(), None)
    };

    let report = AnalysisReport {
        input: InputSummary {
            nodes: h.node_count(),
            edges: h.edge_count(),
            parallel_edges: h.parallel_edge_count(),
        },
        nplus_perfect: Outcome::Value(perfect),
        h_perfect: Outcome::Value(perfect),
        joined_a_perfect: joined,
        certificate: Some(serde_json::to_value(&certificate)?),
        facets,
        timing_ms: timing,
    };
    print_canonical_json(&report)?;
    Ok(if perfect {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn facet_table(
    g: &Multigraph,
    root: Option<&Multigraph>,
    max_hull_nodes: usize,
) -> anyhow::Result<Value> {
    let lg = root.map(line_graph).transpose()?;
    let rooted = match (&lg, root) {
        (Some(lg), Some(root)) => Some(RootedLineGraph {
            root,
            edge_to_node: &lg.edge_to_node,
        }),
        _ => None,
    };
    let facets = stab_facets_with_limit(g, max_hull_nodes)?;
    let mut rows = Vec::with_capacity(facets.len());
    for f in &facets {
        let class = classify_facet(g, f, rooted)?;
        let row = FacetReportRow::from_inequality(f)?;
        // Flat row shape: {"a": [...], "b": n, "class": "...", "witness": {...}}.
        let mut object = match serde_json::to_value(&class)? {
            Value::Object(map) => map,
            other => {
                let mut map = serde_json::Map::new();
                map.insert("class".into(), other);
                map
            }
        };
        object.insert("a".into(), serde_json::to_value(&row.a)?);
        object.insert("b".into(), serde_json::to_value(row.b)?);
        rows.push(Value::Object(object));
    }
    Ok(Value::Array(rows))
}

fn cmd_facets(args: FacetsArgs) -> anyhow::Result<ExitCode> {
    let g = read_graph(&args.graph)?;
    let root = args.root.as_deref().map(read_graph).transpose()?;
    if let Some(root) = &root {
        let lg = line_graph(root)?;
        if lg.graph.node_count() != g.node_count() {
            anyhow::bail!(
                "the root's line graph has {} nodes but the input graph has {}",
                lg.graph.node_count(),
                g.node_count()
            );
        }
    }
    let table = facet_table(&g, root.as_ref(), args.max_hull_nodes)?;
    print_canonical_json(&table)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CheckSummary {
    checked: usize,
    skipped: usize,
    failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_counterexample: Option<String>,
}

#[derive(Default)]
struct CheckTally {
    checked: usize,
    skipped: usize,
    failures: Vec<(usize, String)>,
}

impl CheckTally {
    fn merge(mut self, other: CheckTally) -> CheckTally {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
        self
    }

    fn summary(mut self) -> CheckSummary {
        self.failures.sort_by_key(|(idx, _)| *idx);
        CheckSummary {
            checked: self.checked,
            skipped: self.skipped,
            failures: self.failures.len(),
            first_counterexample: self.failures.first().map(|(_, g)| g.clone()),
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let mut options = CorpusOptions::multigraphs(args.max_edges);
    if let Some(cap) = args.max_nodes {
        options = options.with_max_nodes(cap);
    }
    let corpus: Vec<Multigraph> = connected_multigraphs(options)
        .into_iter()
        .filter(|g| g.edge_count() > 0)
        .collect();
    if !args.json {
        eprintln!(
            "corpus: {} connected multigraphs with 1..={} edges",
            corpus.len(),
            args.max_edges
        );
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()?;

    let run_check = |name: &str,
                     check: &(dyn Fn(&Multigraph) -> Option<Option<String>> + Sync)|
     -> CheckSummary {
        let tally = pool.install(|| {
            corpus
                .par_iter()
                .enumerate()
                .map(|(idx, g)| {
                    let mut tally = CheckTally::default();
                    match check(g) {
                        None => tally.skipped += 1,
                        Some(None) => tally.checked += 1,
                        Some(Some(description)) => {
                            tally.checked += 1;
                            tally.failures.push((idx, description));
                        }
                    }
                    tally
                })
                .reduce(CheckTally::default, CheckTally::merge)
        });
        let summary = tally.summary();
        if !args.json {
            let status = if summary.failures == 0 { "PASS" } else { "FAIL" };
            eprintln!(
                "{name}: {status} ({} checked, {} skipped, {} failures)",
                summary.checked, summary.skipped, summary.failures
            );
            if let Some(counterexample) = &summary.first_counterexample {
                eprintln!("{name}: first counterexample:\n{counterexample}");
            }
        }
        summary
    };

    let hull_limit = 14usize;
    let scan_limit = 18usize;
    let mut checks: BTreeMap<String, CheckSummary> = BTreeMap::new();

    if args.edmonds {
        let check = |g: &Multigraph| -> Option<Option<String>> {
            if g.edge_count() > hull_limit {
                return None;
            }
            let report = verify_edmonds_description_with_limit(g, hull_limit)
                .expect("within limits by construction");
            Some((!report.pass).then(|| g.to_edge_list()))
        };
        checks.insert("edmonds".into(), run_check("edmonds", &check));
    }
    if args.corollary2 {
        let check = |g: &Multigraph| -> Option<Option<String>> {
            if g.edge_count() > hull_limit || g.node_count() > scan_limit {
                return None;
            }
            let decided = decide_line_nplus_perfect_with_limit(g, scan_limit)
                .expect("within limits by construction")
                .verdict
                == Verdict::Perfect;
            let lg = line_graph(g).expect("corpus graphs have edges");
            let facet_side =
                is_h_perfect_with_limit(&lg.graph, hull_limit).expect("within limits");
            Some((decided != facet_side).then(|| g.to_edge_list()))
        };
        checks.insert("corollary2".into(), run_check("corollary2", &check));
    }
    if args.joined_a {
        let check = |g: &Multigraph| -> Option<Option<String>> {
            if g.edge_count() > hull_limit || g.node_count() > scan_limit {
                return None;
            }
            let decided = decide_line_nplus_perfect_with_limit(g, scan_limit)
                .expect("within limits by construction")
                .verdict
                == Verdict::Perfect;
            let lg = line_graph(g).expect("corpus graphs have edges");
            let joined =
                is_joined_a_perfect_with_limit(&lg.graph, hull_limit).expect("within limits");
            Some((decided != joined).then(|| g.to_edge_list()))
        };
        checks.insert("joined_a".into(), run_check("joined_a", &check));
    }
    if args.matching_oracle > 0 {
        let graphs = random_multigraphs(args.matching_oracle, args.seed);
        let tally = pool.install(|| {
            graphs
                .par_iter()
                .enumerate()
                .map(|(idx, g)| {
                    let mut tally = CheckTally::default();
                    tally.checked += 1;
                    let blossom = maximum_matching(g).len();
                    let reference =
                        exhaustive_maximum_matching_size(g).expect("small by construction");
                    if blossom != reference {
                        tally.failures.push((idx, g.to_edge_list()));
                    }
                    tally
                })
                .reduce(CheckTally::default, CheckTally::merge)
        });
        let summary = tally.summary();
        if !args.json {
            let status = if summary.failures == 0 { "PASS" } else { "FAIL" };
            eprintln!(
                "matching_oracle: {status} ({} checked, {} failures)",
                summary.checked, summary.failures
            );
        }
        checks.insert("matching_oracle".into(), summary);
    }

    let any_failures = checks.values().any(|c| c.failures > 0);
    if args.json {
        print_canonical_json(&checks)?;
    }
    Ok(if any_failures {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

/// Seeded random multigraphs on up to 9 nodes with multiplicity up to 2.
fn random_multigraphs(count: usize, seed: u64) -> Vec<Multigraph> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=9usize);
            let mut g = Multigraph::new(n);
            let m = rng.gen_range(1..=(2 * n).min(14));
            for _ in 0..m {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v && g.multiplicity(u, v) < 2 {
                    let _ = g.add_edge(u, v);
                }
            }
            g
        })
        .collect()
}
