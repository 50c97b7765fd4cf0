//! Batch command-line front end: build or load matroids and graphs, run
//! the analyses, and emit deterministic JSON reports (plus SVG pictures
//! of rank-2 tilings).

mod report;
mod sources;
mod svg;

use clap::{Args, Parser, Subcommand};
use omsep_core::error::OmError;
use omsep_core::graphsep;
use omsep_core::separation::{sigma_of, Collection};
use omsep_core::tilings;
use report::{fail_exit, Report};
use serde_json::{json, Value};
use sources::MatroidSource;

#[derive(Parser)]
#[command(name = "omsep", version, about = "Exact oriented-matroid separation engine")]
struct Cli {
    /// Cap internal parallelism (also OMSEP_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Limits {
    /// Maximum number of colocalizations to enumerate.
    #[arg(long, default_value_t = 100_000)]
    max_colocalizations: usize,
    /// Maximum number of maximal cliques to visit.
    #[arg(long, default_value_t = 1_000_000)]
    max_cliques: usize,
    /// Declared time budget in seconds (recorded in the report).
    #[arg(long, default_value_t = 300)]
    time_budget: u64,
    /// Seed recorded for reproducibility of any randomized generators.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl Limits {
    fn config(&self) -> Value {
        json!({
            "max_colocalizations": self.max_colocalizations,
            "max_cliques": self.max_cliques,
            "time_budget_seconds": self.time_budget,
            "seed": self.seed,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate the circuit axioms of a matroid file.
    Validate {
        file: std::path::PathBuf,
        #[command(flatten)]
        limits: Limits,
    },
    /// Rank, counts, loops/coloops, simplicity, Tutte evaluations, and the
    /// positroid verdict for rank 3.
    Analyze {
        #[command(flatten)]
        source: MatroidSource,
        #[command(flatten)]
        limits: Limits,
    },
    /// Enumerate maximal-by-size separated collections (fine zonotopal
    /// tilings); optionally render rank-2 alternating tilings as SVG.
    Tilings {
        #[command(flatten)]
        source: MatroidSource,
        #[arg(long)]
        limit: Option<usize>,
        /// Directory for SVG output (rank-2 alternating sources only).
        #[arg(long)]
        svg: Option<std::path::PathBuf>,
        #[command(flatten)]
        limits: Limits,
    },
    /// Purity over 2^E, or over a mutation-closed domain.
    Purity {
        #[command(flatten)]
        source: MatroidSource,
        /// JSON file with a list of label lists describing the domain.
        #[arg(long)]
        domain: Option<std::path::PathBuf>,
        /// Use the k-th largest mutation component as the domain.
        #[arg(long)]
        domain_component: Option<usize>,
        #[command(flatten)]
        limits: Limits,
    },
    /// Mutation graph components of 2^E.
    MutationGraph {
        #[command(flatten)]
        source: MatroidSource,
        #[command(flatten)]
        limits: Limits,
    },
    /// Flip graph over colocalizations in general position.
    Flips {
        #[command(flatten)]
        source: MatroidSource,
        #[command(flatten)]
        limits: Limits,
    },
    /// Reproduce the six-element rank-3 census with purity verdicts and
    /// the bad-circuit certificate.
    Census6 {
        #[command(flatten)]
        limits: Limits,
    },
    /// Purity verdicts for the eight rank-4 corank-2 compositions.
    Corank2Table {
        #[command(flatten)]
        limits: Limits,
    },
    /// Outerplanarity by forbidden-minor search.
    Outerplanar {
        /// Graph file.
        #[arg(long)]
        graph: std::path::PathBuf,
        #[command(flatten)]
        limits: Limits,
    },
    /// Compare the closed counting formula against enumeration for an
    /// all-coherent triangulation tree, and report coherence.
    Coherent {
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Triangulation file (polygon + diagonals) instead of T_{a,b}.
        #[arg(long)]
        tree: Option<std::path::PathBuf>,
        #[command(flatten)]
        limits: Limits,
    },
    /// Verify a bad-collection certificate against a matroid.
    Certificate {
        #[command(flatten)]
        source: MatroidSource,
        /// Bad circuit as JSON {"plus": [...], "minus": [...]} labels.
        #[arg(long)]
        circuit: String,
        /// Bad collection as a JSON list of label lists.
        #[arg(long)]
        collection: String,
        #[command(flatten)]
        limits: Limits,
    },
}

fn main() {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| {
            std::env::var("OMSEP_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(0);
    if threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(&cli) {
        Ok(report) => {
            let code = report.exit_code;
            let rendered = report.render();
            match &cli.output {
                Some(path) => std::fs::write(path, rendered).expect("write report"),
                None => println!("{rendered}"),
            }
            std::process::exit(code);
        }
        Err(err) => fail_exit(err),
    }
}

fn run(cli: &Cli) -> Result<Report, OmError> {
    match &cli.command {
        Command::Validate { file, limits } => cmd_validate(file, limits),
        Command::Analyze { source, limits } => cmd_analyze(source, limits),
        Command::Tilings {
            source,
            limit,
            svg,
            limits,
        } => cmd_tilings(source, *limit, svg.as_deref(), limits),
        Command::Purity {
            source,
            domain,
            domain_component,
            limits,
        } => cmd_purity(source, domain.as_deref(), *domain_component, limits),
        Command::MutationGraph { source, limits } => cmd_mutation_graph(source, limits),
        Command::Flips { source, limits } => cmd_flips(source, limits),
        Command::Census6 { limits } => cmd_census6(limits),
        Command::Corank2Table { limits } => cmd_corank2_table(limits),
        Command::Outerplanar { graph, limits } => cmd_outerplanar(graph, limits),
        Command::Coherent { a, b, tree, limits } => cmd_coherent(*a, *b, tree.as_deref(), limits),
        Command::Certificate {
            source,
            circuit,
            collection,
            limits,
        } => cmd_certificate(source, circuit, collection, limits),
    }
}

fn cmd_validate(file: &std::path::Path, limits: &Limits) -> Result<Report, OmError> {
    let mut report = Report::new("validate", limits.config());
    report.hash_file(file)?;
    let parsed: omsep_core::io::MatroidFile = report.read_json(file)?;
    let m = parsed.into_matroid_unchecked()?;
    let validation = m.validate();
    report.set_result(json!({
        "elements": m.n_elements(),
        "circuit_pairs": m.circuits().len(),
        "passed": validation.passed(),
        "checks": validation.checks.iter().map(|c| json!({
            "axiom": c.name,
            "passed": c.passed,
            "witness": c.witness,
        })).collect::<Vec<_>>(),
    }));
    if !validation.passed() {
        report.exit_code = 3;
    }
    Ok(report)
}

fn cmd_analyze(source: &MatroidSource, limits: &Limits) -> Result<Report, OmError> {
    let mut report = Report::new("analyze", limits.config());
    let loaded = source.load(&mut report)?;
    let m = &loaded.matroid;
    use num_traits::ToPrimitive;
    let positroid = if m.rank() == 3 {
        Some(omsep_core::construct::is_positively_orientable(m).is_some())
    } else {
        None
    };
    report.set_result(json!({
        "elements": m.n_elements(),
        "rank": m.rank(),
        "corank": m.corank(),
        "circuit_pairs": m.circuits().len(),
        "loops": m.ground().labels_of_mask(m.loops()),
        "coloops": m.ground().labels_of_mask(m.coloops()),
        "simple": m.is_simple(),
        "uniform": m.is_uniform(),
        "independent_sets": m.tutte_eval(2, 1).to_u64(),
        "bases": m.tutte_eval(1, 1).to_u64(),
        "acyclic_orientations": loaded.graphical.then(|| m.tutte_eval(2, 0).to_u64()),
        "positively_orientable": positroid,
    }));
    Ok(report)
}

fn cmd_tilings(
    source: &MatroidSource,
    limit: Option<usize>,
    svg_dir: Option<&std::path::Path>,
    limits: &Limits,
) -> Result<Report, OmError> {
    let mut report = Report::new("tilings", limits.config());
    let loaded = source.load(&mut report)?;
    let m = &loaded.matroid;
    let cap = limit.unwrap_or(limits.max_colocalizations);
    let sigmas = tilings::enumerate_colocalizations(m, cap)?;
    let collections: Vec<Collection> = sigmas
        .iter()
        .map(|s| omsep_core::separation::collection_of(m, s))
        .collect::<Result<_, _>>()?;
    let sizes: std::collections::BTreeSet<usize> = collections.iter().map(|c| c.len()).collect();
    let mut svg_state = json!(null);
    if let Some(dir) = svg_dir {
        if loaded.rank2_alternating {
            std::fs::create_dir_all(dir)
                .map_err(|e| OmError::InvalidInput(format!("svg dir: {e}")))?;
            for (i, s) in collections.iter().enumerate() {
                let path = dir.join(format!("tiling_{i:03}.svg"));
                std::fs::write(&path, svg::render_tiling(m.n_elements(), s))
                    .map_err(|e| OmError::InvalidInput(format!("svg write: {e}")))?;
            }
            svg_state = json!({"written": collections.len()});
        } else {
            svg_state = json!("svg skipped: source is not a rank-2 alternating matroid");
        }
    }
    report.set_result(json!({
        "colocalizations": sigmas.len(),
        "collection_sizes": sizes.into_iter().collect::<Vec<_>>(),
        "collections": collections
            .iter()
            .take(3)
            .map(|c| omsep_core::io::collection_to_json(m, c))
            .collect::<Vec<_>>(),
        "svg": svg_state,
    }));
    Ok(report)
}

fn cmd_purity(
    source: &MatroidSource,
    domain_file: Option<&std::path::Path>,
    domain_component: Option<usize>,
    limits: &Limits,
) -> Result<Report, OmError> {
    let mut report = Report::new("purity", limits.config());
    let loaded = source.load(&mut report)?;
    let m = &loaded.matroid;
    let verdict = match (domain_file, domain_component) {
        (Some(path), None) => {
            report.hash_file(path)?;
            let value: Value = report.read_json(path)?;
            let domain = omsep_core::io::collection_from_json(m, &value)?;
            tilings::domain_purity_check(m, &domain.sets, limits.max_cliques)?
        }
        (None, Some(k)) => {
            let graph = tilings::mutation_graph(m);
            let mut comps: Vec<Vec<u64>> = (0..graph.component_count)
                .map(|c| graph.members(c))
                .collect();
            comps.sort_by_key(|c| (std::cmp::Reverse(c.len()), c.first().copied()));
            let comp = comps
                .get(k)
                .ok_or_else(|| OmError::InvalidInput(format!("no component {k}")))?;
            tilings::domain_purity_check(m, comp, limits.max_cliques)?
        }
        (None, None) => tilings::purity_check(m, 11)?,
        _ => {
            return Err(OmError::InvalidInput(
                "use either --domain or --domain-component".into(),
            ))
        }
    };
    let result = match &verdict {
        tilings::PurityVerdict::Pure {
            max_size,
            clique_count,
        } => json!({
            "pure": true,
            "max_collection_size": max_size,
            "maximal_collections": clique_count,
        }),
        tilings::PurityVerdict::NotPure { witness, max_size } => json!({
            "pure": false,
            "max_collection_size": max_size,
            "witness": omsep_core::io::collection_to_json(m, witness),
            "witness_size": witness.len(),
        }),
    };
    report.set_result(result);
    Ok(report)
}

fn cmd_mutation_graph(source: &MatroidSource, limits: &Limits) -> Result<Report, OmError> {
    let mut report = Report::new("mutation-graph", limits.config());
    let loaded = source.load(&mut report)?;
    let m = &loaded.matroid;
    let graph = tilings::mutation_graph(m);
    let sizes = graph.component_sizes();
    report.set_result(json!({
        "vertices": 1u64 << m.n_elements(),
        "components": graph.component_count,
        "isolated": sizes.iter().filter(|&&s| s == 1).count(),
        "component_sizes_desc": sizes.iter().filter(|&&s| s > 1).collect::<Vec<_>>(),
    }));
    Ok(report)
}

fn cmd_flips(source: &MatroidSource, limits: &Limits) -> Result<Report, OmError> {
    let mut report = Report::new("flips", limits.config());
    let loaded = source.load(&mut report)?;
    let m = &loaded.matroid;
    let (sigmas, edges) = tilings::flip_graph(m, limits.max_colocalizations)?;
    let connected = tilings::is_flip_connected(m, limits.max_colocalizations)?;
    report.set_result(json!({
        "colocalizations": sigmas.len(),
        "flip_edges": edges.len(),
        "connected": connected,
    }));
    Ok(report)
}

fn cmd_census6(limits: &Limits) -> Result<Report, OmError> {
    let mut report = Report::new("census6", limits.config());
    let classes = omsep_core::construct::census_rank3_simple(6)?;
    let mut rows = Vec::new();
    let mut pure_count = 0usize;
    let mut positroid_count = 0usize;
    for (i, m) in classes.iter().enumerate() {
        let positroid = omsep_core::construct::is_positively_orientable(m).is_some();
        let verdict = tilings::purity_check(m, 10)?;
        if verdict.is_pure() {
            pure_count += 1;
        }
        if positroid {
            positroid_count += 1;
        }
        rows.push(json!({
            "class": i,
            "circuit_pairs": m.circuits().len(),
            "uniform": m.is_uniform(),
            "positively_orientable": positroid,
            "pure": verdict.is_pure(),
        }));
    }
    // The worked bad-collection certificate, on the class realized by the
    // published hexagonal coordinates.
    let (m13, _) = sources::ic_6_3_13();
    let bad = omsep_core::SignedSet::new(
        omsep_core::signed_set::mask(&[5]),
        omsep_core::signed_set::mask(&[0, 1, 3]),
    )
    .canonical();
    let s0 = Collection::new(vec![
        omsep_core::signed_set::mask(&[3, 4, 5]),
        omsep_core::signed_set::mask(&[0, 2, 4, 5]),
        omsep_core::signed_set::mask(&[1, 2, 3, 4]),
        omsep_core::signed_set::mask(&[0, 1, 2, 3, 5]),
    ]);
    let certificate = tilings::bad_collection_certificate(&m13, &bad, &s0);
    let matched_class = classes.iter().position(|c| c.is_isomorphic(&m13).is_some());
    report.set_result(json!({
        "classes": classes.len(),
        "positively_orientable": positroid_count,
        "pure": pure_count,
        "not_pure": classes.len() - pure_count,
        "rows": rows,
        "bad_certificate": {
            "class": matched_class,
            "circuit": {"plus": ["6"], "minus": ["1", "2", "4"]},
            "collection": [["4","5","6"], ["1","3","5","6"], ["2","3","4","5"], ["1","2","3","4","6"]],
            "valid": certificate,
        },
    }));
    Ok(report)
}

fn cmd_corank2_table(limits: &Limits) -> Result<Report, OmError> {
    let mut report = Report::new("corank2-table", limits.config());
    let compositions: Vec<Vec<usize>> = vec![
        vec![1, 1, 1, 1, 1, 1],
        vec![2, 1, 1, 1, 1],
        vec![2, 2, 1, 1],
        vec![2, 1, 2, 1],
        vec![2, 2, 2],
        vec![3, 1, 1, 1],
        vec![3, 2, 1],
        vec![3, 3],
    ];
    let mut rows = Vec::new();
    for alpha in &compositions {
        let m = omsep_core::construct::corank2_family(alpha)?;
        let verdict = tilings::purity_check(&m, 10)?;
        rows.push(json!({
            "composition": alpha,
            "pure": verdict.is_pure(),
        }));
    }
    report.set_result(json!({ "rows": rows }));
    Ok(report)
}

fn cmd_outerplanar(graph: &std::path::Path, limits: &Limits) -> Result<Report, OmError> {
    let mut report = Report::new("outerplanar", limits.config());
    report.hash_file(graph)?;
    let file: omsep_core::io::GraphFile = report.read_json(graph)?;
    let dg = file.into_digraph()?;
    let g = graphsep::UndirectedGraph::new(dg.vertices, dg.edges)?;
    let verdict = graphsep::outerplanar(&g)?;
    report.set_result(json!({
        "outerplanar": verdict.is_ok(),
        "forbidden_minor": verdict.err(),
    }));
    Ok(report)
}

fn cmd_coherent(
    a: Option<usize>,
    b: Option<usize>,
    tree_file: Option<&std::path::Path>,
    limits: &Limits,
) -> Result<Report, OmError> {
    let mut report = Report::new("coherent", limits.config());
    let tree = match (a, b, tree_file) {
        (Some(a), Some(b), None) => graphsep::t_ab(a, b)?,
        (None, None, Some(path)) => {
            report.hash_file(path)?;
            let file: omsep_core::io::TriangulationFile = report.read_json(path)?;
            graphsep::tree_of_triangulation(file.polygon, file.diagonals)?
        }
        _ => {
            return Err(OmError::InvalidInput(
                "give either --a and --b, or --tree FILE".into(),
            ))
        }
    };
    let (total, coherent) = graphsep::all_coherent_check(&tree)?;
    let formula = tree
        .as_t_ab()
        .map(|(a, b)| graphsep::coherent_count(a, b).to_string());
    report.set_result(json!({
        "polygon": tree.triangulation.polygon,
        "tree_is_t_ab": tree.as_t_ab(),
        "colocalizations": total,
        "coherent": coherent,
        "all_coherent": total == coherent,
        "formula": formula,
        "formula_matches": formula.as_deref().map(|f| f == total.to_string()),
    }));
    Ok(report)
}

fn cmd_certificate(
    source: &MatroidSource,
    circuit: &str,
    collection: &str,
    limits: &Limits,
) -> Result<Report, OmError> {
    let mut report = Report::new("certificate", limits.config());
    let loaded = source.load(&mut report)?;
    let m = &loaded.matroid;
    let cval: Value = serde_json::from_str(circuit)
        .map_err(|e| OmError::InvalidInput(format!("bad circuit JSON: {e}")))?;
    let parse_labels = |v: &Value| -> Result<u64, OmError> {
        let labels: Vec<String> = v
            .as_array()
            .ok_or_else(|| OmError::InvalidInput("expected a label list".into()))?
            .iter()
            .map(|x| {
                x.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| OmError::InvalidInput("labels are strings".into()))
            })
            .collect::<Result<_, _>>()?;
        m.ground().mask_of_labels(&labels)
    };
    let plus = parse_labels(&cval["plus"])?;
    let minus = parse_labels(&cval["minus"])?;
    let c = omsep_core::SignedSet::new(plus, minus);
    let sval: Value = serde_json::from_str(collection)
        .map_err(|e| OmError::InvalidInput(format!("bad collection JSON: {e}")))?;
    let s0 = omsep_core::io::collection_from_json(m, &sval)?;
    let valid = tilings::bad_collection_certificate(m, &c, &s0);
    let orienting: Vec<Value> = (0..(1u64 << m.n_elements()))
        .filter(|&s| m.orientation_of(&c, s) != omsep_core::Sign::Zero)
        .map(|s| {
            let blocker = s0
                .sets
                .iter()
                .find(|&&t| !omsep_core::separation::pair_separated(m, s, t));
            json!({
                "set": m.ground().labels_of_mask(s),
                "blocker": blocker.map(|&t| m.ground().labels_of_mask(t)),
            })
        })
        .collect();
    report.set_result(json!({
        "certificate_valid": valid,
        "collection_separated": omsep_core::separation::is_collection_separated(m, &s0),
        "sigma_defined": sigma_of(m, &s0).is_ok(),
        "orienting_sets": orienting,
    }));
    Ok(report)
}
