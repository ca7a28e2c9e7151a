use std::collections::HashMap;

use serde::Serialize;

use super::{deletion_facets, link_facets, Face, SimplicialComplex};
use crate::bitset::VSet;
use crate::graph::{CanonicalForm, Graph};

/// Vertex decomposability verdict. The property is only defined for pure complexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Decomposability {
    Decomposable,
    NotDecomposable,
    NotApplicable,
}

impl SimplicialComplex {
    /// A pure complex is vertex decomposable when it is a simplex (`{∅}` included), or
    /// some vertex has a vertex decomposable link and deletion.
    ///
    /// Vertices are tried in decreasing order of the number of facets containing them.
    pub fn vertex_decomposability(&self) -> Decomposability {
        if self.is_void() || !self.is_pure() {
            return Decomposability::NotApplicable;
        }
        let ok = if self.is_flag() {
            let g = self.one_skeleton().complement();
            FlagSearch {
                g: &g,
                exact: HashMap::new(),
                canon: HashMap::new(),
            }
            .decomposable(g.all_vertices())
        } else {
            facet_search(self.facets().to_vec(), &mut HashMap::new())
        };
        if ok {
            Decomposability::Decomposable
        } else {
            Decomposability::NotDecomposable
        }
    }

    pub fn is_vertex_decomposable(&self) -> bool {
        self.vertex_decomposability() == Decomposability::Decomposable
    }
}

fn by_incidence(facets: &[Face]) -> Vec<usize> {
    let mut count: HashMap<usize, usize> = HashMap::new();
    for f in facets {
        for v in *f {
            *count.entry(v).or_insert(0) += 1;
        }
    }
    let mut order: Vec<(usize, usize)> = count.into_iter().collect();
    order.sort_unstable_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    order.into_iter().map(|(v, _)| v).collect()
}

fn facet_search(facets: Vec<Face>, memo: &mut HashMap<Vec<Face>, bool>) -> bool {
    if facets.len() == 1 {
        return true;
    }
    if facets.windows(2).any(|w| w[0].len() != w[1].len()) {
        return false;
    }
    if let Some(&r) = memo.get(&facets) {
        return r;
    }
    let r = by_incidence(&facets).into_iter().any(|v| {
        facet_search(link_facets(&facets, VSet::singleton(v)), memo)
            && facet_search(deletion_facets(&facets, v), memo)
    });
    memo.insert(facets, r);
    r
}

/// Search over independence complexes of induced subgraphs: for `Ind(G[S])`,
/// the link of `v` is `Ind(G[S \ N[v]])` and the deletion is `Ind(G[S \ v])`.
struct FlagSearch<'g> {
    g: &'g Graph,
    exact: HashMap<VSet, bool>,
    canon: HashMap<CanonicalForm, bool>,
}

impl FlagSearch<'_> {
    fn decomposable(&mut self, s: VSet) -> bool {
        let h = self.g.induced_on(s);
        if h.edge_count() == 0 {
            return true;
        }
        if let Some(&r) = self.exact.get(&s) {
            return r;
        }
        let form = h.canonical_form();
        if let Some(&r) = self.canon.get(&form) {
            self.exact.insert(s, r);
            return r;
        }
        let mis = h.maximal_independent_sets();
        let r = mis.windows(2).all(|w| w[0].len() == w[1].len()) && {
            let members: Vec<usize> = s.iter().collect();
            by_incidence(&mis)
                .into_iter()
                .map(|local| members[local])
                .any(|v| {
                    let lk = s.difference(self.g.neighbors(v)).without(v);
                    self.decomposable(lk) && self.decomposable(s.without(v))
                })
        };
        self.exact.insert(s, r);
        self.canon.insert(form, r);
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplices_are_decomposable() {
        for k in 0..5 {
            let s = SimplicialComplex::simplex((0..k).map(|i| i.to_string())).unwrap();
            assert_eq!(s.vertex_decomposability(), Decomposability::Decomposable);
        }
    }

    #[test]
    fn polygons_are_decomposable() {
        for n in 4..8 {
            let c = SimplicialComplex::clique_complex(&Graph::cycle(n).unwrap());
            assert!(c.is_vertex_decomposable(), "C{n}");
        }
    }

    #[test]
    fn two_disjoint_edges_are_not() {
        let c = SimplicialComplex::from_labeled_facets(&[vec!["a", "b"], vec!["c", "d"]]).unwrap();
        assert_eq!(c.vertex_decomposability(), Decomposability::NotDecomposable);
    }

    #[test]
    fn non_flag_search_agrees() {
        let t = SimplicialComplex::from_labeled_facets(&[
            vec!["1", "2"],
            vec!["2", "3"],
            vec!["1", "3"],
        ])
        .unwrap();
        assert!(t.is_vertex_decomposable());
        let two =
            SimplicialComplex::from_labeled_facets(&[vec!["1", "2", "3"], vec!["3", "4", "5"]])
                .unwrap();
        assert_eq!(
            two.vertex_decomposability(),
            Decomposability::NotDecomposable
        );
    }

    #[test]
    fn non_pure_is_not_applicable() {
        let c = SimplicialComplex::from_labeled_facets(&[vec!["a", "b"], vec!["c"]]).unwrap();
        assert_eq!(c.vertex_decomposability(), Decomposability::NotApplicable);
    }
}
