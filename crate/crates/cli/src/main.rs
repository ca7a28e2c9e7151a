mod report;
mod script;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use flagsphere::acceptance::{run_criterion, CRITERIA};
use flagsphere::construct::{run_corpus, CorpusConfig, StepMode};
use flagsphere::enumerative::{
    certify_negative_real_roots, delannoy_poly, first_negative, vectors,
};
use flagsphere::families::{build_gm, build_gm_union, build_mk2, build_r3, crosspolytope_boundary};
use flagsphere::flip::{verify_iso_h_p_with, SearchMode};
use flagsphere::io::{
    emit_complex, emit_complex_json, emit_graph, emit_graph_json, parse_any, Input,
};
use flagsphere::{Coefficients, Graph, Polynomial, SimplicialComplex};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use report::{read_input, to_value, CmdResult, Failure, Report};

#[derive(Parser)]
#[command(
    name = "flagsphere",
    version,
    about = "Independence complexes, flag spheres and ternary graphs"
)]
struct Cli {
    /// Worker threads for independent computations.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    /// Add wall-clock timing to JSON reports.
    #[arg(long, global = true)]
    timing: bool,
    /// Write output here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph or complex from a named family.
    Gen(GenArgs),
    /// Decide properties of a graph (and its independence complex) or of a complex.
    Check(CheckArgs),
    /// f-, h- and γ-vectors, with Delannoy comparison and a real-rootedness certificate.
    Vectors(VectorsArgs),
    /// Build H_{n-1} from subdivisions and compare it with the refinement graph P_n.
    Flip(FlipArgs),
    /// Run a construction script, or a seeded random corpus.
    Construct(ConstructArgs),
    /// Run the acceptance suite.
    Accept(AcceptArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// G_m
    Gm,
    /// disjoint union of G_{m_i}
    Union,
    /// complement of the 6-cycle
    R3,
    /// m disjoint edges
    Mk2,
    /// boundary of the m-dimensional crosspolytope (a complex)
    Cross,
}

#[derive(Args)]
struct GenArgs {
    family: Family,
    #[arg(long)]
    m: Option<usize>,
    /// Comma-separated sizes for `union`.
    #[arg(long, value_delimiter = ',')]
    ms: Vec<usize>,
    /// Emit the independence complex of the graph instead.
    #[arg(long)]
    ind: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Ternary,
    Planar,
    Alpha,
    WellCovered,
    W2,
    HomologySphere,
    CohenMacaulay,
    Gorenstein,
    Pseudomanifold,
    Vd,
    Flag,
}

const GRAPH_CHECKS: [Check; 5] = [
    Check::Ternary,
    Check::Planar,
    Check::Alpha,
    Check::WellCovered,
    Check::W2,
];
const COMPLEX_CHECKS: [Check; 6] = [
    Check::HomologySphere,
    Check::CohenMacaulay,
    Check::Gorenstein,
    Check::Pseudomanifold,
    Check::Vd,
    Check::Flag,
];

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    file: PathBuf,
    #[arg(long)]
    ternary: bool,
    #[arg(long)]
    planar: bool,
    #[arg(long)]
    alpha: bool,
    #[arg(long)]
    well_covered: bool,
    /// 1-well-covered (W_2).
    #[arg(long)]
    w2: bool,
    #[arg(long)]
    homology_sphere: bool,
    #[arg(long)]
    cohen_macaulay: bool,
    #[arg(long)]
    gorenstein: bool,
    #[arg(long)]
    pseudomanifold: bool,
    /// Vertex decomposability.
    #[arg(long)]
    vd: bool,
    #[arg(long)]
    flag: bool,
    /// Coefficient field: F2, Q, or a prime such as F3.
    #[arg(long, default_value = "F2")]
    coeff: String,
}

impl CheckArgs {
    fn requested(&self) -> Vec<Check> {
        let flags = [
            (self.ternary, Check::Ternary),
            (self.planar, Check::Planar),
            (self.alpha, Check::Alpha),
            (self.well_covered, Check::WellCovered),
            (self.w2, Check::W2),
            (self.homology_sphere, Check::HomologySphere),
            (self.cohen_macaulay, Check::CohenMacaulay),
            (self.gorenstein, Check::Gorenstein),
            (self.pseudomanifold, Check::Pseudomanifold),
            (self.vd, Check::Vd),
            (self.flag, Check::Flag),
        ];
        flags.into_iter().filter(|f| f.0).map(|f| f.1).collect()
    }
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "source")]
struct VectorsSource {
    #[arg(long)]
    file: Option<PathBuf>,
    /// Use Ind(G_M).
    #[arg(long)]
    gm: Option<usize>,
}

#[derive(Args)]
struct VectorsArgs {
    #[command(flatten)]
    source: VectorsSource,
    /// Compare h with the Delannoy row of the same length.
    #[arg(long)]
    delannoy: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Dot,
}

#[derive(Args)]
struct FlipArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "json")]
    emit: Emit,
    /// Try every non-edge rather than low-degree cross-component pairs only.
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, conflicts_with = "corpus")]
    script: Option<PathBuf>,
    /// Run the random corpus instead of a script.
    #[arg(long, requires = "seed")]
    corpus: bool,
    #[arg(long, value_parser = parse_mode, default_value = "strict")]
    mode: StepMode,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 200)]
    runs: usize,
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    #[arg(long, default_value_t = 4)]
    max_steps: usize,
    /// Include every corpus run, not just the summary.
    #[arg(long)]
    full: bool,
}

fn parse_mode(s: &str) -> Result<StepMode, String> {
    s.parse().map_err(|e: flagsphere::Error| e.to_string())
}

#[derive(Args)]
struct AcceptArgs {
    /// Run only these criteria.
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(1..=11))]
    only: Vec<u8>,
    /// Print a JSON report instead of one line per criterion.
    #[arg(long)]
    json: bool,
}

/// What a command produced: output text, and whether everything it checked held.
struct Outcome {
    text: String,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs as usize)
        .build_global()
    {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let outcome = match &cli.command {
        Command::Gen(a) => gen(a),
        Command::Check(a) => check(a, Report::new(argv), cli.timing),
        Command::Vectors(a) => vectors_cmd(a, Report::new(argv), cli.timing),
        Command::Flip(a) => flip(a, Report::new(argv), cli.timing),
        Command::Construct(a) => construct(a, Report::new(argv), cli.timing),
        Command::Accept(a) => accept(a, Report::new(argv), cli.timing),
    };
    match outcome {
        Ok(o) => {
            let written = match &cli.output {
                Some(p) => std::fs::write(p, &o.text),
                None => std::io::stdout().lock().write_all(o.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if o.passed { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}

fn need_m(m: Option<usize>) -> CmdResult<usize> {
    m.ok_or_else(|| Failure::Usage("this family needs --m".into()))
}

fn gen(a: &GenArgs) -> CmdResult<Outcome> {
    let graph = match a.family {
        Family::Gm => build_gm(need_m(a.m)?)?,
        Family::Union if a.ms.is_empty() => {
            return Err(Failure::Usage("`union` needs --ms".into()))
        }
        Family::Union => build_gm_union(&a.ms)?,
        Family::R3 => build_r3(),
        Family::Mk2 => build_mk2(need_m(a.m)?)?,
        Family::Cross => {
            let c = crosspolytope_boundary(need_m(a.m)?)?;
            return Ok(Outcome {
                text: complex_text(&c, a.json),
                passed: true,
            });
        }
    };
    let text = if a.ind {
        complex_text(&SimplicialComplex::independence_complex(&graph), a.json)
    } else if a.json {
        emit_graph_json(&graph) + "\n"
    } else {
        emit_graph(&graph)
    };
    Ok(Outcome { text, passed: true })
}

fn complex_text(c: &SimplicialComplex, json: bool) -> String {
    if json {
        emit_complex_json(c) + "\n"
    } else {
        emit_complex(c)
    }
}

fn labels(g: &Graph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.label(v).to_string()).collect()
}

fn graph_check(g: &Graph, c: Check) -> CmdResult<(Option<bool>, Value)> {
    Ok(match c {
        Check::Ternary => {
            let v = g.ternary();
            let w = v.witness.map(|w| w.labels(g));
            (Some(v.ternary), json!({ "induced_cycle": w }))
        }
        Check::Planar => {
            let v = g.planarity();
            let detail = match (&v.embedding, &v.kuratowski) {
                (Some(e), _) => json!({
                    "rotation": (0..g.n()).map(|u| (g.label(u).to_string(), json!(labels(g, &e.rotation[u])))).collect::<Map<_, _>>()
                }),
                (None, Some(k)) => json!({
                    "kuratowski": {
                        "kind": to_value(&k.kind),
                        "branch": labels(g, &k.branch),
                        "paths": k.paths.iter().map(|p| labels(g, p)).collect::<Vec<_>>(),
                    }
                }),
                (None, None) => Value::Null,
            };
            (Some(v.planar), detail)
        }
        Check::Alpha => (None, json!({ "alpha": g.independence_number() })),
        Check::WellCovered => (Some(g.is_well_covered()), Value::Null),
        Check::W2 => (Some(g.is_one_well_covered()), Value::Null),
        _ => unreachable!("complex checks are handled separately"),
    })
}

fn complex_check(
    d: &SimplicialComplex,
    c: Check,
    coeff: Coefficients,
) -> CmdResult<(Option<bool>, Value)> {
    Ok(match c {
        Check::HomologySphere => {
            let b = d.reduced_homology(coeff)?;
            let v = d.is_homology_sphere(coeff)?;
            (Some(v), json!({ "dim": d.dim(), "reduced_betti": b.betti }))
        }
        Check::CohenMacaulay => (Some(d.is_cohen_macaulay(coeff)?), Value::Null),
        Check::Gorenstein => (Some(d.is_gorenstein(coeff)?), Value::Null),
        Check::Pseudomanifold => {
            let v = d.pseudomanifold();
            (Some(v.pseudomanifold), to_value(&v))
        }
        Check::Vd => {
            let v = d.vertex_decomposability();
            let ok = match v {
                flagsphere::complex::Decomposability::Decomposable => Some(true),
                flagsphere::complex::Decomposability::NotDecomposable => Some(false),
                flagsphere::complex::Decomposability::NotApplicable => None,
            };
            (ok, json!({ "verdict": to_value(&v) }))
        }
        Check::Flag => (Some(d.is_flag()), Value::Null),
        _ => unreachable!("graph checks are handled separately"),
    })
}

fn check_name(c: Check) -> String {
    c.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .replace('-', "_")
}

fn check(a: &CheckArgs, mut report: Report, timing: bool) -> CmdResult<Outcome> {
    let coeff: Coefficients = a.coeff.parse()?;
    let file = read_input(&a.file)?;
    report.add_input(&file);
    let input = parse_any(&file.text)?;
    let (graph, complex) = match input {
        Input::Graph(g) => {
            let d = SimplicialComplex::independence_complex(&g);
            (Some(g), d)
        }
        Input::Complex(d) => (None, d),
    };
    let mut checks = a.requested();
    if checks.is_empty() {
        checks = if graph.is_some() {
            GRAPH_CHECKS.to_vec()
        } else {
            Vec::new()
        };
        checks.extend(COMPLEX_CHECKS);
    }
    if graph.is_none() {
        if let Some(&c) = checks.iter().find(|c| GRAPH_CHECKS.contains(c)) {
            return Err(Failure::Usage(format!(
                "--{} needs a graph input",
                check_name(c)
            )));
        }
    }
    let results: Vec<(Option<bool>, Value)> = checks
        .par_iter()
        .map(|&c| match &graph {
            Some(g) if GRAPH_CHECKS.contains(&c) => graph_check(g, c),
            _ => complex_check(&complex, c, coeff),
        })
        .collect::<CmdResult<_>>()?;
    let mut verdicts = Map::new();
    let mut passed = true;
    for (c, (v, detail)) in checks.iter().zip(results) {
        passed &= v != Some(false);
        verdicts.insert(check_name(*c), json!({ "holds": v, "witness": detail }));
    }
    let subject = match &graph {
        Some(g) => {
            json!({ "kind": "graph", "vertices": g.n(), "edges": g.edge_count(), "complex": "Ind(G)" })
        }
        None => {
            json!({ "kind": "complex", "vertices": complex.n(), "facets": complex.facets().len() })
        }
    };
    let result =
        json!({ "subject": subject, "coefficients": coeff.to_string(), "checks": verdicts });
    Ok(Outcome {
        text: report.finish(passed, result, timing),
        passed,
    })
}

fn vectors_cmd(a: &VectorsArgs, mut report: Report, timing: bool) -> CmdResult<Outcome> {
    let complex = match (&a.source.file, a.source.gm) {
        (Some(path), _) => {
            let file = read_input(path)?;
            report.add_input(&file);
            match parse_any(&file.text)? {
                Input::Graph(g) => SimplicialComplex::independence_complex(&g),
                Input::Complex(d) => d,
            }
        }
        (None, Some(m)) => SimplicialComplex::independence_complex(&build_gm(m)?),
        (None, None) => unreachable!("clap requires one source"),
    };
    let v = vectors(&complex)?;
    let h = Polynomial::new(v.h.clone());
    let cert = certify_negative_real_roots(&h)?;
    let mut result = to_value(&v)
        .as_object()
        .cloned()
        .expect("vectors serialize as an object");
    let gamma_nonnegative = v.gamma.as_ref().map(|g| first_negative(g).is_none());
    result.insert("gamma_nonnegative".into(), json!(gamma_nonnegative));
    result.insert(
        "real_rooted".into(),
        json!({
            "certified": cert.certified,
            "negative_roots": cert.negative_roots,
            "isolating_intervals": cert.isolating_intervals,
            "sturm_sequence": cert.sturm_sequence.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
    );
    let mut passed = true;
    if a.delannoy {
        let m = v.h.len() - 1;
        let matches = h == delannoy_poly(m);
        passed = matches;
        result.insert(
            "delannoy".into(),
            json!({ "m": m, "row": delannoy_poly(m).to_string(), "match": matches }),
        );
    }
    Ok(Outcome {
        text: report.finish(passed, Value::Object(result), timing),
        passed,
    })
}

fn flip(a: &FlipArgs, report: Report, timing: bool) -> CmdResult<Outcome> {
    let mode = if a.exhaustive {
        SearchMode::Exhaustive
    } else {
        SearchMode::LowDegree
    };
    let r = verify_iso_h_p_with(a.n, mode)?;
    let passed = r.passed();
    let text = match a.emit {
        Emit::Dot => r.h.to_dot(&format!("H_{}", a.n - 1)),
        Emit::Json => report.finish(passed, to_value(&r), timing),
    };
    Ok(Outcome { text, passed })
}

fn construct(a: &ConstructArgs, mut report: Report, timing: bool) -> CmdResult<Outcome> {
    if a.corpus {
        let config = CorpusConfig {
            runs: a.runs,
            seed: a.seed.expect("clap enforces --seed"),
            max_n: a.max_n,
            max_steps: a.max_steps,
            mode: a.mode,
        };
        let s = run_corpus(&config)?;
        let passed = s.predictor_disagreements.is_empty()
            && s.dimension_failures.is_empty()
            && s.gorenstein_failures.is_empty();
        let t = s.contingency;
        let mut result = json!({
            "config": to_value(&s.config),
            "contingency": {
                "w_tree_ternary": t[1][1], "w_tree_not_ternary": t[1][0],
                "w_not_tree_ternary": t[0][1], "w_not_tree_not_ternary": t[0][0],
            },
            "predictor_disagreements": s.predictor_disagreements.iter().map(|&i| to_value(&s.runs[i])).collect::<Vec<_>>(),
            "dimension_failures": s.dimension_failures,
            "gorenstein_failures": s.gorenstein_failures,
        });
        if a.full {
            result["runs"] = to_value(&s.runs);
        }
        return Ok(Outcome {
            text: report.finish(passed, result, timing),
            passed,
        });
    }
    let path = a
        .script
        .as_ref()
        .ok_or_else(|| Failure::Usage("construct needs --script or --corpus".into()))?;
    let file = read_input(path)?;
    report.add_input(&file);
    let (classified, passed) = script::run(&file.text, a.mode)?;
    Ok(Outcome {
        text: report.finish(passed, json!({ "classify": classified }), timing),
        passed,
    })
}

fn accept(a: &AcceptArgs, report: Report, timing: bool) -> CmdResult<Outcome> {
    let ids: Vec<usize> = if a.only.is_empty() {
        (1..=CRITERIA.len()).collect()
    } else {
        a.only.iter().map(|&i| i as usize).collect()
    };
    let results: Vec<_> = ids.par_iter().map(|&i| run_criterion(i)).collect();
    let passed = results.iter().all(|r| r.passed);
    let text = if a.json {
        let rows: Vec<Value> = results
            .iter()
            .map(|r| json!({ "id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail }))
            .collect();
        report.finish(passed, json!({ "criteria": rows }), timing)
    } else {
        let mut s: String = results.iter().map(|r| format!("{r}\n")).collect();
        let failed = results.iter().filter(|r| !r.passed).count();
        s.push_str(&format!(
            "{} of {} criteria passed\n",
            results.len() - failed,
            results.len()
        ));
        s
    };
    Ok(Outcome { text, passed })
}
