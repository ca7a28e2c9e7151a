//! Building Gorenstein graphs by repeated cross-component edge subdivisions, starting
//! from a disjoint union of `G_m`'s, together with the merge graph `W` on the starting
//! components and a classification of the output.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::families::{build_gm, build_gm_union};
use crate::flip::partitions;
use crate::graph::{CycleWitness, Graph, KuratowskiKind};
use crate::homology::Coefficients;

/// Homology is skipped from this independence number on.
pub const ALPHA_GUARD: usize = 7;

/// Which vertices a step may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum StepMode {
    /// Only vertices of the starting graph.
    #[default]
    Strict,
    /// Any vertex, including ones created by earlier steps.
    Loose,
}

impl std::str::FromStr for StepMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(StepMode::Strict),
            "loose" => Ok(StepMode::Loose),
            _ => Err(Error::InvalidInput(format!(
                "unknown mode `{s}`; expected strict or loose"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub x: String,
    pub y: String,
    pub fresh: String,
    /// Starting components of `x` and `y`.
    pub components: [usize; 2],
    /// Degrees of `x` and `y` just before the step.
    pub degrees: [usize; 2],
}

/// An immutable snapshot of the construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionState {
    #[serde(skip)]
    graph: Graph,
    /// Starting component of every vertex, by vertex index.
    origin: Vec<usize>,
    original_vertices: usize,
    /// `m_i` of every starting component.
    ms: Vec<usize>,
    mode: StepMode,
    steps: Vec<StepRecord>,
}

impl ConstructionState {
    /// `⊔ G_{m_i}` with labels `"{i}:{label}"`.
    pub fn start(ms: &[usize]) -> Result<Self> {
        if ms.len() < 2 {
            return Err(Error::InvalidInput(
                "the construction starts from at least two components".into(),
            ));
        }
        let g = build_gm_union(ms)?;
        let origin = ms
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| std::iter::repeat_n(i, 3 * m - 1))
            .collect();
        Ok(Self::from_parts(g, origin, ms.to_vec()))
    }

    /// Start from a given graph whose components are each isomorphic to some `G_m`.
    /// Components are numbered by their smallest vertex index.
    pub fn start_from_graph(g: &Graph) -> Result<Self> {
        let comps = g.components();
        if comps.len() < 2 {
            return Err(Error::InvalidInput(
                "the construction starts from at least two components".into(),
            ));
        }
        let mut origin = vec![0; g.n()];
        let mut ms = Vec::with_capacity(comps.len());
        for (i, &c) in comps.iter().enumerate() {
            let h = g.induced_on(c);
            let m = h.independence_number();
            if m == 0 || !h.is_isomorphic(&build_gm(m)?) {
                return Err(Error::Precondition(format!(
                    "component {i} is not isomorphic to any G_m"
                )));
            }
            ms.push(m);
            for v in c {
                origin[v] = i;
            }
        }
        Ok(Self::from_parts(g.clone(), origin, ms))
    }

    fn from_parts(graph: Graph, origin: Vec<usize>, ms: Vec<usize>) -> Self {
        let original_vertices = graph.n();
        ConstructionState {
            graph,
            origin,
            original_vertices,
            ms,
            mode: StepMode::Strict,
            steps: Vec::new(),
        }
    }

    pub fn with_mode(mut self, mode: StepMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn mode(&self) -> StepMode {
        self.mode
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn ms(&self) -> &[usize] {
        &self.ms
    }

    pub fn steps(&self) -> &[StepRecord] {
        &self.steps
    }

    /// `Σ m_i`, the independence number every state should have.
    pub fn expected_alpha(&self) -> usize {
        self.ms.iter().sum()
    }

    /// Starting component of a vertex.
    pub fn origin_of(&self, label: &str) -> Result<usize> {
        Ok(self.origin[self.graph.index_of(label)?])
    }

    /// Next free integer label above every numeric label.
    pub fn next_fresh_label(&self) -> String {
        let max = self
            .graph
            .labels()
            .iter()
            .filter_map(|l| l.parse::<u64>().ok())
            .max()
            .unwrap_or(0);
        (max + 1).to_string()
    }

    /// Whether `v` may be used by a step in the current mode.
    pub fn is_eligible(&self, v: usize) -> bool {
        self.mode == StepMode::Loose || v < self.original_vertices
    }

    /// Subdivide `{x, y}` in `Ind(current)`; `fresh` defaults to [`Self::next_fresh_label`].
    pub fn step(&self, x: &str, y: &str, fresh: Option<&str>) -> Result<Self> {
        let (xi, yi) = (self.graph.index_of(x)?, self.graph.index_of(y)?);
        if self.graph.component_of(xi).contains(yi) {
            return Err(Error::Precondition(format!(
                "{x} and {y} lie in the same component"
            )));
        }
        for (v, l) in [(xi, x), (yi, y)] {
            if !self.is_eligible(v) {
                return Err(Error::Precondition(format!(
                    "{l} is not a vertex of the starting graph (strict mode)"
                )));
            }
        }
        let fresh = fresh.map_or_else(|| self.next_fresh_label(), str::to_string);
        let graph = self.graph.edge_subdivision(x, y, &fresh)?;
        let mut origin = self.origin.clone();
        origin.push(self.origin[xi]);
        let mut steps = self.steps.clone();
        steps.push(StepRecord {
            x: x.to_string(),
            y: y.to_string(),
            fresh,
            components: [self.origin[xi], self.origin[yi]],
            degrees: [self.graph.degree(xi), self.graph.degree(yi)],
        });
        Ok(ConstructionState {
            graph,
            origin,
            steps,
            ms: self.ms.clone(),
            ..*self
        })
    }

    /// The merge graph: one vertex per starting component, one edge per step.
    pub fn w_edges(&self) -> Vec<[usize; 2]> {
        self.steps.iter().map(|s| s.components).collect()
    }

    /// Whether `W` (as a multigraph) is a tree.
    pub fn w_is_tree(&self) -> bool {
        let k = self.ms.len();
        let edges = self.w_edges();
        if edges.len() + 1 != k {
            return false;
        }
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                p[x] = find(p, p[x]);
            }
            p[x]
        }
        edges.iter().all(|&[u, v]| {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            parent[ru] = rv;
            ru != rv
        })
    }

    /// Some step used an endpoint of degree at least three.
    pub fn nonplanarity_predictor(&self) -> bool {
        self.steps.iter().any(|s| s.degrees.iter().any(|&d| d >= 3))
    }

    pub fn classify(&self) -> Result<ClassifyReport> {
        let g = &self.graph;
        let ternary = g.ternary();
        let planarity = g.planarity();
        let alpha = g.independence_number();
        let predictor = self.nonplanarity_predictor();
        let ind = SimplicialComplex::independence_complex(g);
        let dimension_check = ind.dim() == alpha as isize - 1 && alpha == self.expected_alpha();
        let homology = if alpha >= ALPHA_GUARD {
            HomologyStatus::Skipped {
                reason: format!("guard: independence number {alpha} ≥ {ALPHA_GUARD}"),
            }
        } else {
            let sphere = ind.is_homology_sphere(Coefficients::F2)?;
            let gorenstein = if ind.cone_points().is_empty() {
                sphere
            } else {
                ind.is_gorenstein(Coefficients::F2)?
            };
            HomologyStatus::Computed {
                gorenstein,
                homology_sphere_dim: sphere.then(|| ind.dim()),
            }
        };
        Ok(ClassifyReport {
            vertices: g.n(),
            edges: g.edge_count(),
            alpha,
            ternary: ternary.ternary,
            ternary_witness: ternary.witness.as_ref().map(|w: &CycleWitness| w.labels(g)),
            planar: planarity.planar,
            kuratowski: planarity.kuratowski.map(|k| KuratowskiReport {
                kind: k.kind,
                branch: k.branch.iter().map(|&v| g.label(v).to_string()).collect(),
                paths: k
                    .paths
                    .iter()
                    .map(|p| p.iter().map(|&v| g.label(v).to_string()).collect())
                    .collect(),
            }),
            predictor,
            predictor_agrees: predictor != planarity.planar,
            homology,
            dimension_check,
            w_edges: self.w_edges(),
            w_is_tree: self.w_is_tree(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KuratowskiReport {
    pub kind: KuratowskiKind,
    pub branch: Vec<String>,
    pub paths: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum HomologyStatus {
    Computed {
        gorenstein: bool,
        homology_sphere_dim: Option<isize>,
    },
    Skipped {
        reason: String,
    },
}

impl HomologyStatus {
    pub fn gorenstein(&self) -> Option<bool> {
        match self {
            HomologyStatus::Computed { gorenstein, .. } => Some(*gorenstein),
            HomologyStatus::Skipped { .. } => None,
        }
    }

    pub fn homology_sphere_dim(&self) -> Option<isize> {
        match self {
            HomologyStatus::Computed {
                homology_sphere_dim,
                ..
            } => *homology_sphere_dim,
            HomologyStatus::Skipped { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub vertices: usize,
    pub edges: usize,
    pub alpha: usize,
    pub ternary: bool,
    /// An induced cycle of length divisible by three.
    pub ternary_witness: Option<Vec<String>>,
    pub planar: bool,
    pub kuratowski: Option<KuratowskiReport>,
    pub predictor: bool,
    /// The predictor says nonplanar exactly when the graph is nonplanar.
    pub predictor_agrees: bool,
    pub homology: HomologyStatus,
    /// `dim Ind = α - 1` and `α = Σ m_i`.
    pub dimension_check: bool,
    pub w_edges: Vec<[usize; 2]>,
    pub w_is_tree: bool,
}

/// The worked example: three pentagons on `1..5`, `6..10`, `11..15`.
pub fn example_start() -> Result<ConstructionState> {
    let labels: Vec<String> = (1..=15).map(|i| i.to_string()).collect();
    let edges = (0..3).flat_map(|b| (0..5).map(move |i| (5 * b + i, 5 * b + (i + 1) % 5)));
    ConstructionState::start_from_graph(&Graph::from_edges(labels, edges)?)
}

/// The example after subdividing `{1,6}` (new vertex 21) and `{7,11}` (new vertex 22).
pub fn example_result() -> Result<ConstructionState> {
    example_start()?
        .step("1", "6", Some("21"))?
        .step("7", "11", Some("22"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusConfig {
    pub runs: usize,
    pub seed: u64,
    pub max_n: usize,
    pub max_steps: usize,
    pub mode: StepMode,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            runs: 200,
            seed: 0,
            max_n: 6,
            max_steps: 4,
            mode: StepMode::Strict,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusRun {
    pub index: usize,
    pub start: Vec<usize>,
    pub mode: StepMode,
    pub steps: Vec<StepRecord>,
    pub report: ClassifyReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub config: CorpusConfig,
    pub runs: Vec<CorpusRun>,
    /// `contingency[w_is_tree][ternary]`.
    pub contingency: [[usize; 2]; 2],
    pub predictor_disagreements: Vec<usize>,
    pub dimension_failures: Vec<usize>,
    /// Runs whose result is not Gorenstein (every start is a homology sphere).
    pub gorenstein_failures: Vec<usize>,
}

/// One seeded random run: a random partition of `n ≤ max_n` with at least two parts and
/// up to `max_steps` steps; half of the choices prefer endpoints of degree at most two.
pub fn random_run(config: &CorpusConfig, index: usize) -> Result<CorpusRun> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(index as u64));
    let n = rng.gen_range(2..=config.max_n.max(2));
    let starts: Vec<_> = partitions(n)?
        .into_iter()
        .filter(|p| p.len() >= 2)
        .collect();
    let start = starts
        .choose(&mut rng)
        .expect("n ≥ 2 has a partition with two parts")
        .parts()
        .to_vec();
    let mut state = ConstructionState::start(&start)?.with_mode(config.mode);
    let k = rng.gen_range(1..=config.max_steps.min(start.len() - 1).max(1));
    for _ in 0..k {
        let g = state.graph();
        let mut pairs = Vec::new();
        for x in 0..g.n() {
            let comp = g.component_of(x);
            for y in x + 1..g.n() {
                if !comp.contains(y) && state.is_eligible(x) && state.is_eligible(y) {
                    pairs.push((x, y));
                }
            }
        }
        if pairs.is_empty() {
            break;
        }
        let low: Vec<_> = pairs
            .iter()
            .copied()
            .filter(|&(x, y)| g.degree(x) <= 2 && g.degree(y) <= 2)
            .collect();
        let pool = if !low.is_empty() && rng.gen_bool(0.5) {
            &low
        } else {
            &pairs
        };
        let &(x, y) = pool.choose(&mut rng).expect("pool is nonempty");
        let (lx, ly) = (g.label(x).to_string(), g.label(y).to_string());
        let fresh = format!("new{}", state.steps().len());
        state = state.step(&lx, &ly, Some(&fresh))?;
    }
    Ok(CorpusRun {
        index,
        start,
        mode: config.mode,
        steps: state.steps().to_vec(),
        report: state.classify()?,
    })
}

pub fn run_corpus(config: &CorpusConfig) -> Result<CorpusSummary> {
    let runs: Vec<CorpusRun> = (0..config.runs)
        .into_par_iter()
        .map(|i| random_run(config, i))
        .collect::<Result<_>>()?;
    let mut contingency = [[0; 2]; 2];
    let (mut predictor_disagreements, mut dimension_failures, mut gorenstein_failures) =
        (vec![], vec![], vec![]);
    for r in &runs {
        contingency[r.report.w_is_tree as usize][r.report.ternary as usize] += 1;
        if !r.report.predictor_agrees {
            predictor_disagreements.push(r.index);
        }
        if !r.report.dimension_check {
            dimension_failures.push(r.index);
        }
        if r.report.homology.gorenstein() == Some(false) {
            gorenstein_failures.push(r.index);
        }
    }
    Ok(CorpusSummary {
        config: config.clone(),
        runs,
        contingency,
        predictor_disagreements,
        dimension_failures,
        gorenstein_failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn start_validation() {
        assert!(ConstructionState::start(&[1]).is_err());
        let s = ConstructionState::start(&[1, 1]).unwrap();
        assert_eq!((s.graph().n(), s.graph().edge_count()), (4, 2));
        let s = ConstructionState::start(&[2, 2, 2]).unwrap();
        assert_eq!(s.graph().components().len(), 3);
        assert!(s.graph().components().iter().all(|&c| s
            .graph()
            .induced_on(c)
            .is_isomorphic(&Graph::cycle(5).unwrap())));
    }

    #[test]
    fn two_edges_merge_into_a_pentagon() {
        let s = ConstructionState::start(&[1, 1])
            .unwrap()
            .step("0:b_1", "1:a_1", None)
            .unwrap();
        assert!(s.graph().is_isomorphic(&build_gm(2).unwrap()));
        assert_eq!(s.steps()[0].fresh, "1");
        let r = s.classify().unwrap();
        assert!(r.ternary && r.planar && r.w_is_tree && r.dimension_check && !r.predictor);
        assert_eq!(r.homology.gorenstein(), Some(true));
        assert_eq!(r.homology.homology_sphere_dim(), Some(1));
    }

    #[test]
    fn step_errors() {
        let s = ConstructionState::start(&[2, 2]).unwrap();
        assert!(matches!(
            s.step("0:a_1", "0:b_2", None),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            s.step("0:a_1", "nope", None),
            Err(Error::UnknownVertex(_))
        ));
        let t = s.step("0:a_1", "1:a_1", Some("x")).unwrap();
        assert!(matches!(
            t.step("x", "1:b_1", None),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn worked_example() {
        let s = example_start().unwrap();
        let one = s.step("1", "6", Some("21")).unwrap();
        assert_eq!(one.graph().degree(one.graph().index_of("7").unwrap()), 3);
        let two = one.step("7", "11", Some("22")).unwrap();
        assert_eq!(two.graph().n(), 17);
        assert!(two.nonplanarity_predictor());
        assert!(!two.graph().is_planar());
        assert!(two.graph().is_ternary());
        assert_eq!(two.graph().independence_number(), 6);
        assert!(two.w_is_tree());
        assert_eq!(example_start().unwrap().next_fresh_label(), "16");
    }

    #[test]
    fn low_degree_step_keeps_planarity() {
        let s = ConstructionState::start(&[2, 2])
            .unwrap()
            .step("0:b_1", "1:a_1", None)
            .unwrap();
        assert!(!s.nonplanarity_predictor());
        assert!(s.graph().is_planar());
    }

    #[test]
    fn loose_mode_reuses_new_vertices() {
        let s = ConstructionState::start(&[1, 1, 1])
            .unwrap()
            .with_mode(StepMode::Loose);
        let t = s
            .step("0:a_1", "1:a_1", Some("x"))
            .unwrap()
            .step("x", "2:a_1", None)
            .unwrap();
        assert_eq!(t.w_edges(), vec![[0, 1], [0, 2]]);
        assert_eq!(t.graph().independence_number(), 3);
    }

    #[test]
    fn small_corpus_is_deterministic() {
        let cfg = CorpusConfig {
            runs: 12,
            max_n: 4,
            ..CorpusConfig::default()
        };
        let a = run_corpus(&cfg).unwrap();
        assert_eq!(a, run_corpus(&cfg).unwrap());
        assert!(a.predictor_disagreements.is_empty());
        assert!(a.dimension_failures.is_empty());
    }
}
