//! The partition refinement graph `P_n` and the fragment `H_{n-1}` of the flip graph of
//! flag spheres spanned by the independence complexes of `⊔ G_{m_i}`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::build_gm_union;
use crate::graph::{CanonicalForm, Graph};

/// A partition of `n`: positive parts in nonincreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidInput(
                "partition parts must be positive and nonempty".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Merge parts `i` and `j` into one.
    pub fn merge(&self, i: usize, j: usize) -> Partition {
        let mut parts: Vec<usize> = self
            .parts
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, &p)| p)
            .collect();
        parts.push(self.parts[i] + self.parts[j]);
        Partition::new(parts).expect("merging keeps parts positive")
    }

    /// `⊔ G_{m_i}` over the parts.
    pub fn graph(&self) -> Result<Graph> {
        build_gm_union(&self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join("+"))
    }
}

/// All partitions of `n`, largest first part first: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlipVertex {
    pub partition: Partition,
    /// Canonical form of `⊔ G_{m_i}` for vertices of `H`; absent for `P_n`.
    pub canonical: Option<CanonicalForm>,
}

/// One realizing subdivision: new vertex `fresh` on the non-edge `{x, y}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubdivisionMove {
    pub x: String,
    pub y: String,
    pub fresh: String,
    /// Isomorphism from the subdivided graph onto the expected `⊔ G` target, as label pairs.
    pub witness: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlipEdge {
    pub u: usize,
    pub v: usize,
    /// Sizes of the two merged parts.
    pub merged: [usize; 2],
    /// A representative subdivision, for edges of `H`.
    pub via: Option<SubdivisionMove>,
    /// Number of accepted subdivisions realizing this edge.
    pub realizations: usize,
}

/// Simple graph whose vertices carry partitions (and canonical forms) and whose edges
/// carry the move that realizes them. Edges satisfy `u < v` and are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledFlipGraph {
    pub vertices: Vec<FlipVertex>,
    pub edges: Vec<FlipEdge>,
}

impl LabeledFlipGraph {
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (u, v) = (u.min(v), u.max(v));
        self.edges
            .binary_search_by(|e| (e.u, e.v).cmp(&(u, v)))
            .is_ok()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.as_graph().degree_sequence()
    }

    /// Underlying simple graph, vertices labelled by their partitions.
    pub fn as_graph(&self) -> Graph {
        Graph::from_edges(
            self.vertices.iter().map(|v| v.partition.to_string()),
            self.edges.iter().map(|e| (e.u, e.v)),
        )
        .expect("vertex partitions are distinct")
    }

    /// Graphviz rendering with nodes named by partition strings.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph \"{name}\" {{\n");
        for v in &self.vertices {
            s.push_str(&format!("  \"{}\";\n", v.partition));
        }
        for e in &self.edges {
            s.push_str(&format!(
                "  \"{}\" -- \"{}\" [label=\"{}+{}\"];\n",
                self.vertices[e.u].partition,
                self.vertices[e.v].partition,
                e.merged[0],
                e.merged[1]
            ));
        }
        s.push_str("}\n");
        s
    }
}

/// `P_n`: partitions of `n`, adjacent when one arises from the other by merging two parts.
pub fn refinement_graph(n: usize) -> Result<LabeledFlipGraph> {
    let parts = partitions(n)?;
    let index: BTreeMap<&Partition, usize> =
        parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut edges: BTreeMap<(usize, usize), [usize; 2]> = BTreeMap::new();
    for (u, lambda) in parts.iter().enumerate() {
        for i in 0..lambda.len() {
            for j in i + 1..lambda.len() {
                let v = index[&lambda.merge(i, j)];
                edges
                    .entry((u.min(v), u.max(v)))
                    .or_insert([lambda.parts[i], lambda.parts[j]]);
            }
        }
    }
    Ok(LabeledFlipGraph {
        vertices: parts
            .into_iter()
            .map(|partition| FlipVertex {
                partition,
                canonical: None,
            })
            .collect(),
        edges: edges
            .into_iter()
            .map(|((u, v), merged)| FlipEdge {
                u,
                v,
                merged,
                via: None,
                realizations: 0,
            })
            .collect(),
    })
}

/// Which subdivision attempts `build_h` makes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum SearchMode {
    /// Cross-component pairs with both endpoints of degree at most two.
    #[default]
    LowDegree,
    /// Every non-edge, inside or across components.
    Exhaustive,
}

/// Counts and anomalies gathered while building `H`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct HAudit {
    pub attempts: usize,
    /// Results that are planar and ternary.
    pub planar_ternary: usize,
    /// Accepted results, each with an isomorphism onto the expected merged union.
    pub accepted: usize,
    /// Planar ternary cross-component results with an endpoint of degree at least three.
    pub high_degree_planar_ternary: usize,
    /// Same-component results whose canonical form is a vertex of `H`.
    pub same_component_hits: usize,
    /// Planar ternary cross-component results not isomorphic to the expected union.
    pub unexpected: Vec<String>,
    /// Component pairs whose accepted results fall into more than one isomorphism class.
    pub split_pairs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HBuild {
    pub graph: LabeledFlipGraph,
    pub audit: HAudit,
}

/// `H_{n-1}` from low-degree cross-component subdivisions.
pub fn build_h(n: usize) -> Result<LabeledFlipGraph> {
    Ok(build_h_with(n, SearchMode::LowDegree)?.graph)
}

struct Attempt {
    source: usize,
    pair: (usize, usize),
    x: String,
    y: String,
    low_degree: bool,
    cross: bool,
    planar_ternary: bool,
    form: Option<CanonicalForm>,
    accepted: Option<(Partition, SubdivisionMove)>,
    merged: [usize; 2],
}

const FRESH: &str = "new";

pub fn build_h_with(n: usize, mode: SearchMode) -> Result<HBuild> {
    if n > 6 {
        return Err(Error::InvalidInput("build_h is limited to n ≤ 6".into()));
    }
    let parts = partitions(n)?;
    let graphs: Vec<Graph> = parts.iter().map(Partition::graph).collect::<Result<_>>()?;
    let forms: Vec<CanonicalForm> = graphs.par_iter().map(Graph::canonical_form).collect();
    let by_form: BTreeMap<&CanonicalForm, usize> =
        forms.iter().enumerate().map(|(i, f)| (f, i)).collect();

    let mut jobs = Vec::new();
    for (s, g) in graphs.iter().enumerate() {
        let comps = g.components();
        let comp_of: Vec<usize> = (0..g.n())
            .map(|v| comps.iter().position(|c| c.contains(v)).unwrap())
            .collect();
        let alpha: Vec<usize> = comps
            .iter()
            .map(|&c| g.induced_on(c).independence_number())
            .collect();
        for x in 0..g.n() {
            for y in x + 1..g.n() {
                if g.has_edge(x, y) {
                    continue;
                }
                let cross = comp_of[x] != comp_of[y];
                let low = g.degree(x) <= 2 && g.degree(y) <= 2;
                if mode == SearchMode::LowDegree && !(cross && low) {
                    continue;
                }
                let (ci, cj) = (comp_of[x].min(comp_of[y]), comp_of[x].max(comp_of[y]));
                jobs.push((s, x, y, cross, low, (ci, cj), [alpha[ci], alpha[cj]]));
            }
        }
    }

    let attempts: Vec<Attempt> = jobs
        .par_iter()
        .map(|&(s, x, y, cross, low, pair, merged)| -> Result<Attempt> {
            let g = &graphs[s];
            let (lx, ly) = (g.label(x).to_string(), g.label(y).to_string());
            let h = g.edge_subdivision(&lx, &ly, FRESH)?;
            let planar_ternary = h.is_planar() && h.is_ternary();
            let mut at = Attempt {
                source: s,
                pair,
                x: lx,
                y: ly,
                low_degree: low,
                cross,
                planar_ternary,
                form: None,
                accepted: None,
                merged,
            };
            if !planar_ternary {
                return Ok(at);
            }
            at.form = Some(h.canonical_form());
            if cross {
                let target = merge_by_alpha(&parts[s], merged)?;
                let expected = target.graph()?;
                if let Some(iso) = h.isomorphism_to(&expected) {
                    let witness = iso.label_pairs(&h, &expected);
                    at.accepted = Some((
                        target,
                        SubdivisionMove {
                            x: at.x.clone(),
                            y: at.y.clone(),
                            fresh: FRESH.into(),
                            witness,
                        },
                    ));
                }
            }
            Ok(at)
        })
        .collect::<Result<_>>()?;

    let mut audit = HAudit {
        attempts: attempts.len(),
        ..HAudit::default()
    };
    let index: BTreeMap<&Partition, usize> =
        parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut edges: BTreeMap<(usize, usize), FlipEdge> = BTreeMap::new();
    let mut classes: BTreeMap<(usize, (usize, usize)), Vec<CanonicalForm>> = BTreeMap::new();
    for at in &attempts {
        if !at.planar_ternary {
            continue;
        }
        audit.planar_ternary += 1;
        let form = at.form.as_ref().expect("set for planar ternary results");
        if !at.cross {
            if by_form.contains_key(form) {
                audit.same_component_hits += 1;
            }
            continue;
        }
        if !at.low_degree {
            audit.high_degree_planar_ternary += 1;
        }
        let Some((target, mv)) = &at.accepted else {
            audit
                .unexpected
                .push(format!("{}: {} {}", parts[at.source], at.x, at.y));
            continue;
        };
        audit.accepted += 1;
        // The edge joins the source to whichever vertex has the result's form.
        let Some(&t) = by_form.get(form) else {
            audit
                .unexpected
                .push(format!("{}: {} {}", parts[at.source], at.x, at.y));
            continue;
        };
        debug_assert_eq!(index[target], t);
        let list = classes.entry((at.source, at.pair)).or_default();
        if !list.contains(form) {
            list.push(form.clone());
        }
        let (u, v) = (at.source.min(t), at.source.max(t));
        edges
            .entry((u, v))
            .and_modify(|e| e.realizations += 1)
            .or_insert(FlipEdge {
                u,
                v,
                merged: at.merged,
                via: Some(mv.clone()),
                realizations: 1,
            });
    }
    for ((s, (i, j)), list) in &classes {
        if list.len() > 1 {
            audit
                .split_pairs
                .push(format!("{}: components {i},{j}", parts[*s]));
        }
    }

    let vertices = parts
        .into_iter()
        .zip(forms)
        .map(|(partition, f)| FlipVertex {
            partition,
            canonical: Some(f),
        })
        .collect();
    Ok(HBuild {
        graph: LabeledFlipGraph {
            vertices,
            edges: edges.into_values().collect(),
        },
        audit,
    })
}

fn merge_by_alpha(p: &Partition, merged: [usize; 2]) -> Result<Partition> {
    let mut rest = p.parts.clone();
    for m in merged {
        let i = rest.iter().position(|&q| q == m).ok_or_else(|| {
            Error::Precondition(format!(
                "component independence number {m} is not a part of {p}"
            ))
        })?;
        rest.remove(i);
    }
    rest.push(merged[0] + merged[1]);
    Partition::new(rest)
}

/// Outcome of comparing `H_{n-1}` with `P_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub n: usize,
    pub vertices: usize,
    pub p_edges: usize,
    pub h_edges: usize,
    pub degree_sequences_match: bool,
    /// `(partition, index of the H vertex with the form of ⊔ G_{m_i})`.
    pub matching: Vec<(String, usize)>,
    /// The matching is a bijection carrying edges to edges and non-edges to non-edges.
    pub isomorphic: bool,
    /// Canonical forms of the two underlying graphs agree.
    pub canonical_forms_agree: bool,
    pub p: LabeledFlipGraph,
    pub h: LabeledFlipGraph,
    pub audit: HAudit,
}

impl IsoReport {
    /// Isomorphic, with a clean audit.
    pub fn passed(&self) -> bool {
        self.isomorphic
            && self.canonical_forms_agree
            && self.degree_sequences_match
            && self.audit.unexpected.is_empty()
            && self.audit.split_pairs.is_empty()
            && self.audit.same_component_hits == 0
    }
}

pub fn verify_iso_h_p(n: usize) -> Result<IsoReport> {
    verify_iso_h_p_with(n, SearchMode::LowDegree)
}

pub fn verify_iso_h_p_with(n: usize, mode: SearchMode) -> Result<IsoReport> {
    let p = refinement_graph(n)?;
    let HBuild { graph: h, audit } = build_h_with(n, mode)?;
    let degree_sequences_match = p.degree_sequence() == h.degree_sequence();
    let h_index: BTreeMap<&CanonicalForm, usize> = h
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.canonical.as_ref().expect("H vertices carry forms"), i))
        .collect();
    let mut matching = Vec::new();
    let mut image = Vec::new();
    for v in &p.vertices {
        let form = v.partition.graph()?.canonical_form();
        if let Some(&i) = h_index.get(&form) {
            matching.push((v.partition.to_string(), i));
            image.push(i);
        }
    }
    let mut sorted = image.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let bijective = image.len() == p.vertices.len()
        && sorted.len() == image.len()
        && image.len() == h.vertices.len();
    let isomorphic = bijective
        && (0..image.len()).all(|a| {
            (a + 1..image.len()).all(|b| p.has_edge(a, b) == h.has_edge(image[a], image[b]))
        });
    let canonical_forms_agree = p.as_graph().canonical_form() == h.as_graph().canonical_form();
    Ok(IsoReport {
        n,
        vertices: h.vertices.len(),
        p_edges: p.edges.len(),
        h_edges: h.edges.len(),
        degree_sequences_match,
        matching,
        isomorphic,
        canonical_forms_agree,
        p,
        h,
        audit,
    })
}

/// Independence number of the component containing the new vertex after subdividing
/// the cross-component non-edge `{x, y}`.
pub fn component_alpha_after_merge(g: &Graph, x: &str, y: &str) -> Result<usize> {
    let (xi, yi) = (g.index_of(x)?, g.index_of(y)?);
    if g.component_of(xi).contains(yi) {
        return Err(Error::InvalidInput(format!(
            "{x} and {y} lie in the same component"
        )));
    }
    let fresh = (0..)
        .map(|k| format!("new{k}"))
        .find(|l| !g.contains(l))
        .expect("labels are finite");
    let h = g.edge_subdivision(x, y, &fresh)?;
    let comp = h.component_of(h.index_of(&fresh)?);
    Ok(h.induced_on(comp).independence_number())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_gm_union;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_counts_and_order() {
        let counts: Vec<usize> = (1..=6).map(|n| partitions(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11]);
        let four: Vec<String> = partitions(4)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(four, ["4", "3+1", "2+2", "2+1+1", "1+1+1+1"]);
        assert!(partitions(0).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn refinement_edges_for_four() {
        let g = refinement_graph(4).unwrap();
        let at = |q: &[usize]| g.vertices.iter().position(|v| v.partition == p(q)).unwrap();
        assert!(g.has_edge(at(&[2, 2]), at(&[4])));
        assert!(g.has_edge(at(&[3, 1]), at(&[4])));
        assert!(!g.has_edge(at(&[2, 2]), at(&[3, 1])));
        assert_eq!(g.edges.len(), 5);
        assert_eq!(refinement_graph(2).unwrap().edges.len(), 1);
    }

    #[test]
    fn refinement_edges_match_brute_force() {
        for n in 1..=6 {
            let g = refinement_graph(n).unwrap();
            let mut count = 0;
            for (i, a) in g.vertices.iter().enumerate() {
                for (j, b) in g.vertices.iter().enumerate().skip(i + 1) {
                    let (big, small) = if a.partition.len() > b.partition.len() {
                        (a, b)
                    } else {
                        (b, a)
                    };
                    let covers = big.partition.len() == small.partition.len() + 1
                        && (0..big.partition.len()).any(|x| {
                            (x + 1..big.partition.len())
                                .any(|y| big.partition.merge(x, y) == small.partition)
                        });
                    assert_eq!(covers, g.has_edge(i, j));
                    count += covers as usize;
                }
            }
            assert_eq!(count, g.edges.len());
        }
    }

    #[test]
    fn flip_graph_small_cases() {
        for n in 2..=4 {
            let r = verify_iso_h_p(n).unwrap();
            assert!(r.passed(), "{n}: {:?}", r.audit);
        }
        let r = verify_iso_h_p(2).unwrap();
        assert_eq!((r.vertices, r.h_edges), (2, 1));
    }

    #[test]
    fn exhaustive_search_for_three() {
        let r = verify_iso_h_p_with(3, SearchMode::Exhaustive).unwrap();
        assert!(r.passed(), "{:?}", r.audit);
    }

    #[test]
    fn merged_alpha() {
        let g = build_gm_union(&[1, 1]).unwrap();
        assert_eq!(
            component_alpha_after_merge(&g, "0:a_1", "1:b_1").unwrap(),
            2
        );
        let g = build_gm_union(&[2, 3]).unwrap();
        let (x, y) = ("0:b_1", "1:c_3");
        assert_eq!(
            (
                g.degree(g.index_of(x).unwrap()),
                g.degree(g.index_of(y).unwrap())
            ),
            (2, 2)
        );
        assert_eq!(component_alpha_after_merge(&g, x, y).unwrap(), 5);
        assert!(matches!(
            component_alpha_after_merge(&g, "0:a_1", "0:b_2"),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn dot_names_partitions() {
        let dot = refinement_graph(3).unwrap().to_dot("P3");
        assert!(dot.contains("\"3\" -- \"2+1\""));
    }
}
