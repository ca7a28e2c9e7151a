//! Generators for the concrete graphs and complexes studied here: the planar
//! Gorenstein family `G_m`, the prism `R_3`, `mK_2` and crosspolytope boundaries,
//! and the subdivision sequence turning a crosspolytope into `Ind(G_m)`.

use serde::Serialize;

use crate::bitset::VSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{CycleWitness, Graph};

pub fn a(i: usize) -> String {
    format!("a_{i}")
}

pub fn b(i: usize) -> String {
    format!("b_{i}")
}

pub fn c(i: usize) -> String {
    format!("c_{i}")
}

/// Vertex labels of `G_m` in construction order: `a_1, b_1`, then `c_i, b_i, a_i` for `i ≥ 2`.
pub fn gm_labels(m: usize) -> Vec<String> {
    let mut labels = Vec::with_capacity(3 * m);
    if m >= 1 {
        labels.extend([a(1), b(1)]);
    }
    for i in 2..=m {
        labels.extend([c(i), b(i), a(i)]);
    }
    labels
}

/// Edge list of `G_m` on its labels.
pub fn gm_edges(m: usize) -> Vec<(String, String)> {
    let mut e = Vec::new();
    if m >= 1 {
        e.push((a(1), b(1)));
    }
    if m >= 2 {
        // G_2 is the 5-cycle a_1 b_1 c_2 b_2 a_2.
        e.extend([(a(1), a(2)), (a(2), b(2)), (b(2), c(2)), (b(1), c(2))]);
    }
    for i in 3..=m {
        e.extend([
            (a(i - 1), a(i)),
            (b(i - 1), c(i)),
            (c(i - 1), a(i)),
            (a(i), b(i)),
            (b(i), c(i)),
        ]);
    }
    e
}

/// `G_0` is the empty graph; used internally by the recursions.
fn gm_any(m: usize) -> Graph {
    let labels = gm_labels(m);
    let mut g = Graph::edgeless(labels).expect("labels are distinct and few");
    for (x, y) in gm_edges(m) {
        let (u, v) = (g.index_of(&x).unwrap(), g.index_of(&y).unwrap());
        g.add_edge_idx(u, v).expect("edges are listed once");
    }
    g
}

/// The graph `G_m`: `G_1 = K_2`, `G_2 = C_5`, and for `m ≥ 3` three new vertices
/// `a_m, b_m, c_m` attached by the edges `a_{m-1}a_m, b_{m-1}c_m, c_{m-1}a_m, a_mb_m, b_mc_m`.
pub fn build_gm(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidInput("G_m is defined for m ≥ 1".into()));
    }
    if 3 * m - 1 > VSet::CAPACITY {
        return Err(Error::Capacity(3 * m - 1));
    }
    Ok(gm_any(m))
}

/// Disjoint union of `G_{m_1}, ..., G_{m_s}`, labels prefixed by component number.
pub fn build_gm_union(ms: &[usize]) -> Result<Graph> {
    let parts = ms
        .iter()
        .map(|&m| build_gm(m))
        .collect::<Result<Vec<_>>>()?;
    Graph::disjoint_union(&parts)
}

/// `R_3`: the complement of the 6-cycle `1 2 3 4 5 6`, a triangular prism.
pub fn build_r3() -> Graph {
    let cycle = Graph::from_edges(
        (1..=6).map(|i| i.to_string()),
        (0..6).map(|i| (i, (i + 1) % 6)),
    )
    .unwrap();
    cycle.complement()
}

/// The prism as drawn: two triangles `{p, q, r}`, `{s, t, u}` with rungs `ps, qt, ru`.
pub fn r3_figure() -> Graph {
    Graph::from_edges(
        ["p", "q", "r", "s", "t", "u"],
        [
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap()
}

/// `mK_2` on vertices `b_i, c_i` with edges `b_i c_i`.
pub fn build_mk2(m: usize) -> Result<Graph> {
    if 2 * m > VSet::CAPACITY {
        return Err(Error::Capacity(2 * m));
    }
    let labels: Vec<String> = (1..=m).flat_map(|i| [b(i), c(i)]).collect();
    Graph::from_edges(labels, (0..m).map(|i| (2 * i, 2 * i + 1)))
}

/// Boundary of the `m`-dimensional crosspolytope, `Ind(mK_2)`.
pub fn crosspolytope_boundary(m: usize) -> Result<SimplicialComplex> {
    if m == 0 {
        return Err(Error::InvalidInput(
            "crosspolytope dimension must be at least 1".into(),
        ));
    }
    Ok(SimplicialComplex::independence_complex(&build_mk2(m)?))
}

/// One edge subdivision: the edge `{x, y}` receives the new vertex `fresh`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubdivisionStep {
    pub x: String,
    pub y: String,
    pub fresh: String,
}

/// Steps `i = 1, ..., m-1`: subdivide `{b_i, c_{i+1}}` with new vertex `a_{i+1}`.
pub fn gm_subdivision_sequence(m: usize) -> Vec<SubdivisionStep> {
    (1..m)
        .map(|i| SubdivisionStep {
            x: b(i),
            y: c(i + 1),
            fresh: a(i + 1),
        })
        .collect()
}

pub fn apply_subdivisions(
    d: &SimplicialComplex,
    steps: &[SubdivisionStep],
) -> Result<SimplicialComplex> {
    steps.iter().try_fold(d.clone(), |acc, s| {
        acc.edge_subdivision(&s.x, &s.y, &s.fresh)
    })
}

pub fn apply_graph_subdivisions(g: &Graph, steps: &[SubdivisionStep]) -> Result<Graph> {
    steps.iter().try_fold(g.clone(), |acc, s| {
        acc.edge_subdivision(&s.x, &s.y, &s.fresh)
    })
}

/// Classification of an independent set `A` of `G_m` by `A ∩ {a_m, b_m, c_m}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependentSetCase {
    /// Case number 1 to 5.
    pub case: u8,
    /// Which of the five case descriptions hold, in full.
    pub matches: [bool; 5],
    /// The sufficient maximality condition attached to the case holds.
    pub predicted_maximal: bool,
    /// `A` is in fact a maximal independent set of `G_m`.
    pub maximal: bool,
}

/// Classify an independent set of `G_m` given by labels.
pub fn classify_independent_set<S: AsRef<str>>(m: usize, set: &[S]) -> Result<IndependentSetCase> {
    let g = build_gm(m)?;
    let s = g.indices_of(set)?;
    classify_in(&g, m, s)
}

pub(crate) fn classify_in(g: &Graph, m: usize, s: VSet) -> Result<IndependentSetCase> {
    if !g.is_independent(s) {
        return Err(Error::InvalidInput("set is not independent".into()));
    }
    let idx = |l: String| g.index_of(&l).ok();
    let within =
        |k: usize, t: VSet| t.is_subset(VSet::full(3 * k.max(1) - 1)) && (k > 0 || t.is_empty());
    let (am, bm, cm) = (idx(a(m)), idx(b(m)), idx(c(m)));
    let one = |v: Option<usize>| v.map_or(VSet::empty(), VSet::singleton);
    let top = one(am).union(one(bm)).union(one(cm));
    let prev = one(idx(a(m - 1)))
        .union(one(idx(b(m - 1))))
        .union(one(idx(c(m - 1))));
    let hit = s.intersection(top);
    let rest = s.difference(top);
    let avoid = |l: &[Option<usize>]| l.iter().all(|v| v.is_none_or(|v| !rest.contains(v)));

    let matches = [
        hit.is_empty() && within(m - 1, rest),
        bm.is_some() && hit == one(bm) && within(m - 1, rest),
        am.is_some()
            && cm.is_some()
            && hit == one(am).union(one(cm))
            && within(m.saturating_sub(2), rest)
            && rest.is_disjoint(prev),
        am.is_some()
            && hit == one(am)
            && within(m - 1, rest)
            && avoid(&[idx(a(m - 1)), idx(c(m - 1))]),
        cm.is_some() && hit == one(cm) && within(m - 1, rest) && avoid(&[idx(b(m - 1))]),
    ];
    let hits: Vec<u8> = (0..5)
        .filter(|&k| matches[k])
        .map(|k| k as u8 + 1)
        .collect();
    let case = match hits.as_slice() {
        [k] => *k,
        _ => return Err(Error::Domain(format!("set matches cases {hits:?}"))),
    };
    let maximal_in = |k: usize, t: VSet| {
        let h = gm_any(k);
        h.is_independent(t) && (0..h.n()).all(|v| t.contains(v) || !h.is_independent(t.with(v)))
    };
    let predicted_maximal = match case {
        2 | 4 | 5 => maximal_in(m - 1, rest),
        3 => maximal_in(m - 2, rest),
        _ => false,
    };
    let maximal = (0..g.n()).all(|v| s.contains(v) || !g.is_independent(s.with(v)));
    Ok(IndependentSetCase {
        case,
        matches,
        predicted_maximal,
        maximal,
    })
}

/// Edge sets shared by two cycles.
fn shared_edges(x: &CycleWitness, y: &CycleWitness) -> Vec<(usize, usize)> {
    let ey = y.edges();
    x.edges().into_iter().filter(|e| ey.contains(e)).collect()
}

/// The cycle-structure statements checked on `G_m` by exhaustive enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleStructure {
    /// Distinct 4-cycles never share an edge.
    pub four_cycles_edge_disjoint: bool,
    /// No 6-cycle at all, chords allowed.
    pub no_six_cycles: bool,
    /// No induced 6-cycle.
    pub no_induced_six_cycles: bool,
    /// Each 4-cycle and 5-cycle are edge-disjoint or share exactly a path of two edges.
    pub four_five_meet_in_two_path: bool,
    pub counts: [usize; 3],
}

pub fn cycle_structure(g: &Graph) -> CycleStructure {
    let cycles = g.simple_cycles(6);
    let of_len = |k: usize| cycles.iter().filter(|c| c.len() == k).collect::<Vec<_>>();
    let (c4, c5, c6) = (of_len(4), of_len(5), of_len(6));
    let four_cycles_edge_disjoint = c4
        .iter()
        .enumerate()
        .all(|(i, x)| c4[i + 1..].iter().all(|y| shared_edges(x, y).is_empty()));
    let four_five_meet_in_two_path = c4.iter().all(|x| {
        c5.iter().all(|y| {
            let s = shared_edges(x, y);
            s.is_empty()
                || (s.len() == 2 && {
                    let (p, q) = (s[0], s[1]);
                    p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1
                })
        })
    });
    CycleStructure {
        four_cycles_edge_disjoint,
        no_six_cycles: c6.is_empty(),
        no_induced_six_cycles: c6.iter().all(|c| !c.is_induced_in(g)),
        four_five_meet_in_two_path,
        counts: [c4.len(), c5.len(), c6.len()],
    }
}

/// Pairs at distance at least three lacking induced paths of some length residue mod 3.
pub fn residue_failures(g: &Graph) -> Vec<(String, String, Vec<usize>)> {
    let mut out = Vec::new();
    for x in 0..g.n() {
        let dist = g.bfs_distances(x);
        for (y, d) in dist.iter().enumerate().skip(x + 1) {
            if d.is_some_and(|d| d >= 3) {
                let r = g
                    .induced_paths_by_residue(g.label(x), g.label(y))
                    .expect("labels exist");
                if !r.all_found() {
                    out.push((
                        g.label(x).to_string(),
                        g.label(y).to_string(),
                        r.missing_residues(),
                    ));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_members() {
        let g1 = build_gm(1).unwrap();
        assert!(g1.is_isomorphic(&Graph::complete(2).unwrap()));
        let g2 = build_gm(2).unwrap();
        assert!(g2.is_isomorphic(&Graph::cycle(5).unwrap()));
        assert_eq!(g2.distance("a_1", "b_2").unwrap(), Some(2));
        let g3 = build_gm(3).unwrap();
        assert_eq!((g3.n(), g3.edge_count()), (8, 10));
        assert!(build_gm(0).is_err());
    }

    #[test]
    fn recursion_is_consistent() {
        for m in 2..=9 {
            let g = build_gm(m).unwrap();
            let prev = build_gm(m - 1).unwrap();
            assert_eq!(g.induced_subgraph(prev.labels()).unwrap(), prev);
            assert_eq!(g.n(), 3 * m - 1);
            assert_eq!(g.edge_count(), 5 * (m - 1));
        }
    }

    #[test]
    fn deleting_the_last_two_closed_neighbourhoods() {
        for m in 3..=7 {
            let g = build_gm(m).unwrap();
            let h = g.delete_closed_neighborhood(&[a(m), c(m)]).unwrap();
            assert_eq!(h, build_gm(m - 2).unwrap());
        }
    }

    #[test]
    fn r3_is_the_drawn_prism() {
        let r = build_r3();
        assert!(r.is_isomorphic(&r3_figure()));
        assert!(r.is_planar());
        assert_eq!(
            SimplicialComplex::independence_complex(&r)
                .f_vector()
                .unwrap(),
            vec![1, 6, 6]
        );
    }

    #[test]
    fn crosspolytope_counts() {
        assert_eq!(
            crosspolytope_boundary(4).unwrap().f_vector().unwrap(),
            vec![1, 8, 24, 32, 16]
        );
        assert_eq!(
            crosspolytope_boundary(1).unwrap().f_vector().unwrap(),
            vec![1, 2]
        );
    }

    #[test]
    fn first_subdivision_gives_a_pentagon_plus_edges() {
        let s =
            apply_graph_subdivisions(&build_mk2(3).unwrap(), &gm_subdivision_sequence(2)).unwrap();
        let expect = Graph::disjoint_union(&[build_gm(2).unwrap(), build_gm(1).unwrap()]).unwrap();
        assert!(s.is_isomorphic(&expect));
        assert!(gm_subdivision_sequence(1).is_empty());
    }

    #[test]
    fn classification_examples() {
        let r = classify_independent_set::<&str>(3, &[]).unwrap();
        assert_eq!(r.case, 1);
        let r = classify_independent_set(3, &["b_3", "a_1", "c_2"]).unwrap();
        assert_eq!(r.case, 2);
        assert!(r.predicted_maximal && r.maximal);
        assert!(classify_independent_set(3, &["a_3", "b_3"]).is_err());
    }
}
