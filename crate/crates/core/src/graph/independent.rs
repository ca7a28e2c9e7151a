use super::Graph;
use crate::bitset::VSet;

impl Graph {
    /// Vertices not adjacent to and distinct from `v`.
    fn non_neighbors(&self, v: usize) -> VSet {
        self.all_vertices().difference(self.adj[v]).without(v)
    }

    /// All maximal independent sets, in ascending order of their bit patterns.
    ///
    /// Bron–Kerbosch with pivoting, run on the complement adjacency.
    pub fn maximal_independent_sets(&self) -> Vec<VSet> {
        let mut out = Vec::new();
        self.bron_kerbosch(VSet::empty(), self.all_vertices(), VSet::empty(), &mut out);
        out.sort_unstable_by_key(|s| s.bits());
        out
    }

    fn bron_kerbosch(&self, r: VSet, p: VSet, x: VSet, out: &mut Vec<VSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| p.intersection(self.non_neighbors(u)).len())
            .expect("p is nonempty");
        let (mut p, mut x) = (p, x);
        for v in p.difference(self.non_neighbors(pivot)) {
            let nv = self.non_neighbors(v);
            self.bron_kerbosch(r.with(v), p.intersection(nv), x.intersection(nv), out);
            p.remove(v);
            x.insert(v);
        }
    }

    /// Size of a largest independent set.
    pub fn independence_number(&self) -> usize {
        self.maximal_independent_sets()
            .iter()
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    /// Visit every independent set (the empty set included) exactly once.
    pub fn for_each_independent_set(&self, mut visit: impl FnMut(VSet)) {
        fn rec(g: &Graph, current: VSet, candidates: VSet, visit: &mut impl FnMut(VSet)) {
            visit(current);
            let mut rest = candidates;
            for v in candidates {
                rest.remove(v);
                rec(g, current.with(v), rest.difference(g.adj[v]), visit);
            }
        }
        rec(self, VSet::empty(), self.all_vertices(), &mut visit);
    }

    pub fn is_well_covered(&self) -> bool {
        let mis = self.maximal_independent_sets();
        mis.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Well-covered, and still well-covered after deleting any single vertex.
    pub fn is_one_well_covered(&self) -> bool {
        self.is_well_covered()
            && (0..self.n()).all(|v| self.remove_vertices(VSet::singleton(v)).is_well_covered())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_mis(g: &Graph) -> Vec<VSet> {
        let mut all = Vec::new();
        g.for_each_independent_set(|s| all.push(s));
        let mut max: Vec<VSet> = all
            .iter()
            .copied()
            .filter(|&s| (0..g.n()).all(|v| s.contains(v) || !g.is_independent(s.with(v))))
            .collect();
        max.sort_unstable_by_key(|s| s.bits());
        max
    }

    #[test]
    fn matches_brute_force() {
        let petersen = Graph::from_edges(
            (0..10).map(|i| i.to_string()),
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]),
        )
        .unwrap();
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::path(6).unwrap(),
            petersen,
            Graph::complete(4).unwrap(),
        ] {
            assert_eq!(g.maximal_independent_sets(), brute_mis(&g));
        }
    }

    #[test]
    fn c5_counts() {
        let g = Graph::cycle(5).unwrap();
        let mut count = 0;
        g.for_each_independent_set(|_| count += 1);
        assert_eq!(count, 11);
        assert_eq!(g.independence_number(), 2);
        assert!(g.is_one_well_covered());
    }

    #[test]
    fn path_on_three_is_not_well_covered() {
        assert!(!Graph::path(3).unwrap().is_well_covered());
    }

    #[test]
    fn empty_graph_has_one_maximal_set() {
        let g = Graph::edgeless(Vec::<String>::new()).unwrap();
        assert_eq!(g.maximal_independent_sets(), vec![VSet::empty()]);
        assert_eq!(g.independence_number(), 0);
    }
}
