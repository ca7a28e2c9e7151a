//! Canonical labeling by colour refinement with individualization and backtracking.
//!
//! Disconnected graphs are canonized component by component and the component
//! forms are sorted, so symmetric unions of small components stay cheap.

use serde::Serialize;

use super::Graph;

/// A label-independent encoding of a graph; equal forms mean isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm(pub Vec<u32>);

/// A vertex bijection `g -> h` given as `map[g_vertex] = h_vertex`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Isomorphism {
    pub map: Vec<usize>,
}

impl Isomorphism {
    /// Check that the map is a bijection carrying edges onto edges and non-edges onto non-edges.
    pub fn verify(&self, g: &Graph, h: &Graph) -> bool {
        if g.n() != h.n() || self.map.len() != g.n() {
            return false;
        }
        let mut seen = vec![false; h.n()];
        for &t in &self.map {
            if t >= h.n() || std::mem::replace(&mut seen[t], true) {
                return false;
            }
        }
        (0..g.n()).all(|u| {
            (u + 1..g.n()).all(|v| g.has_edge(u, v) == h.has_edge(self.map[u], self.map[v]))
        })
    }

    /// The map expressed on labels, in `g`'s vertex order.
    pub fn label_pairs(&self, g: &Graph, h: &Graph) -> Vec<(String, String)> {
        self.map
            .iter()
            .enumerate()
            .map(|(u, &v)| (g.label(u).to_string(), h.label(v).to_string()))
            .collect()
    }
}

/// Canonical labeling of a vertex-coloured graph given by adjacency lists.
///
/// Returns the canonical form and `pos`, where `pos[v]` is the canonical position of `v`.
pub(crate) fn canonical_labeling_colored(
    adj: &[Vec<usize>],
    colors: &[u32],
) -> (Vec<u32>, Vec<usize>) {
    let n = adj.len();
    if n == 0 {
        return (vec![0], Vec::new());
    }
    let mut keyed: Vec<(u32, usize, usize)> =
        (0..n).map(|v| (colors[v], adj[v].len(), v)).collect();
    keyed.sort_unstable();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut prev: Option<(u32, usize)> = None;
    for (c, d, v) in keyed {
        if prev != Some((c, d)) {
            cells.push(Vec::new());
            prev = Some((c, d));
        }
        cells.last_mut().unwrap().push(v);
    }
    refine(adj, &mut cells);
    let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
    search(adj, colors, cells, &mut best);
    best.expect("search visits at least one leaf")
}

fn refine(adj: &[Vec<usize>], cells: &mut Vec<Vec<usize>>) {
    let n = adj.len();
    let mut count = vec![0u32; n];
    'outer: loop {
        for s in 0..cells.len() {
            count.iter_mut().for_each(|c| *c = 0);
            for &u in &cells[s] {
                for &w in &adj[u] {
                    count[w] += 1;
                }
            }
            let mut split = false;
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut sorted = cell.clone();
                sorted.sort_by_key(|&v| count[v]);
                let mut start = 0;
                for i in 1..=sorted.len() {
                    if i == sorted.len() || count[sorted[i]] != count[sorted[start]] {
                        next.push(sorted[start..i].to_vec());
                        start = i;
                    }
                }
                if count[sorted[0]] != count[sorted[sorted.len() - 1]] {
                    split = true;
                }
            }
            if split {
                *cells = next;
                continue 'outer;
            }
        }
        break;
    }
}

fn search(
    adj: &[Vec<usize>],
    colors: &[u32],
    cells: Vec<Vec<usize>>,
    best: &mut Option<(Vec<u32>, Vec<usize>)>,
) {
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let n = adj.len();
            let mut pos = vec![0usize; n];
            for (i, c) in cells.iter().enumerate() {
                pos[c[0]] = i;
            }
            let form = encode(adj, colors, &cells, &pos);
            if best.as_ref().is_none_or(|(b, _)| form < *b) {
                *best = Some((form, pos));
            }
        }
        Some(t) => {
            let mut members = cells[t].clone();
            members.sort_unstable();
            for &v in &members {
                let mut next = Vec::with_capacity(cells.len() + 1);
                next.extend_from_slice(&cells[..t]);
                next.push(vec![v]);
                next.push(cells[t].iter().copied().filter(|&w| w != v).collect());
                next.extend_from_slice(&cells[t + 1..]);
                refine(adj, &mut next);
                search(adj, colors, next, best);
            }
        }
    }
}

fn encode(adj: &[Vec<usize>], colors: &[u32], order: &[Vec<usize>], pos: &[usize]) -> Vec<u32> {
    let n = adj.len();
    let mut form = Vec::with_capacity(2 * n + adj.iter().map(Vec::len).sum::<usize>() + 1);
    form.push(n as u32);
    for c in order {
        form.push(colors[c[0]]);
    }
    for c in order {
        let mut row: Vec<u32> = adj[c[0]].iter().map(|&w| pos[w] as u32).collect();
        row.sort_unstable();
        form.push(row.len() as u32);
        form.extend(row);
    }
    form
}

impl Graph {
    fn component_labelings(&self) -> Vec<(Vec<u32>, Vec<usize>)> {
        // (form, vertices listed in canonical order)
        self.components()
            .into_iter()
            .map(|comp| {
                let verts: Vec<usize> = comp.iter().collect();
                let mut local = vec![usize::MAX; self.n()];
                for (i, &v) in verts.iter().enumerate() {
                    local[v] = i;
                }
                let adj: Vec<Vec<usize>> = verts
                    .iter()
                    .map(|&v| self.neighbors(v).iter().map(|w| local[w]).collect())
                    .collect();
                let (form, pos) = canonical_labeling_colored(&adj, &vec![0; verts.len()]);
                let mut ordered = vec![0; verts.len()];
                for (i, &v) in verts.iter().enumerate() {
                    ordered[pos[i]] = v;
                }
                (form, ordered)
            })
            .collect()
    }

    /// Canonical labeling: the form plus `pos[v]`, the canonical position of vertex `v`.
    pub fn canonical_labeling(&self) -> (CanonicalForm, Vec<usize>) {
        let mut comps = self.component_labelings();
        comps.sort_by(|a, b| a.0.cmp(&b.0));
        let mut form = vec![comps.len() as u32];
        let mut pos = vec![0; self.n()];
        let mut next = 0;
        for (f, ordered) in &comps {
            form.push(f.len() as u32);
            form.extend_from_slice(f);
            for &v in ordered {
                pos[v] = next;
                next += 1;
            }
        }
        (CanonicalForm(form), pos)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        self.canonical_labeling().0
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n() == other.n()
            && self.edge_count() == other.edge_count()
            && self.canonical_form() == other.canonical_form()
    }

    /// An explicit isomorphism `self -> other`, if one exists.
    pub fn isomorphism_to(&self, other: &Graph) -> Option<Isomorphism> {
        if self.n() != other.n() || self.edge_count() != other.edge_count() {
            return None;
        }
        let (fa, pa) = self.canonical_labeling();
        let (fb, pb) = other.canonical_labeling();
        if fa != fb {
            return None;
        }
        let mut at = vec![0; other.n()];
        for (v, &p) in pb.iter().enumerate() {
            at[p] = v;
        }
        let iso = Isomorphism {
            map: pa.iter().map(|&p| at[p]).collect(),
        };
        debug_assert!(iso.verify(self, other));
        Some(iso)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn shuffled(g: &Graph, rng: &mut rand_chacha::ChaCha8Rng) -> Graph {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(rng);
        g.permuted(&perm).relabeled(|i, _| format!("x{i}")).unwrap()
    }

    #[test]
    fn relabelings_share_canonical_form() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let petersen = Graph::from_edges(
            (0..10).map(|i| i.to_string()),
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]),
        )
        .unwrap();
        for g in [
            Graph::cycle(5).unwrap(),
            petersen,
            Graph::complete_bipartite(3, 4).unwrap(),
        ] {
            let f = g.canonical_form();
            for _ in 0..100 {
                let h = shuffled(&g, &mut rng);
                assert_eq!(h.canonical_form(), f);
                let iso = g.isomorphism_to(&h).unwrap();
                assert!(iso.verify(&g, &h));
            }
        }
    }

    #[test]
    fn distinguishes_cospectral_like_pairs() {
        // C6 vs two triangles: same degree sequence, not isomorphic.
        let c6 = Graph::cycle(6).unwrap();
        let tt = Graph::disjoint_union(&[Graph::complete(3).unwrap(), Graph::complete(3).unwrap()])
            .unwrap();
        assert!(!c6.is_isomorphic(&tt));
        assert!(c6.isomorphism_to(&tt).is_none());
        // Regular graphs that refinement alone cannot split.
        let prism = Graph::cycle(6).unwrap().complement();
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert!(!prism.is_isomorphic(&k33));
    }

    #[test]
    fn empty_and_edgeless_graphs() {
        let e = Graph::edgeless(Vec::<String>::new()).unwrap();
        assert!(e.is_isomorphic(&e.clone()));
        let a = Graph::edgeless(["p", "q"]).unwrap();
        let b = Graph::edgeless(["r", "s"]).unwrap();
        assert!(a.is_isomorphic(&b));
        assert!(!a.is_isomorphic(&Graph::complete(2).unwrap()));
    }
}
