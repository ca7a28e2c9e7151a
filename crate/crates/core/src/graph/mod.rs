//! Labeled simple graphs and the structural queries used throughout the crate:
//! induced subgraphs, neighbourhood deletion, distances, induced cycles and
//! paths, planarity and isomorphism.

mod canon;
mod cycles;
mod independent;
mod planarity;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::VSet;
use crate::error::{Error, Result};

pub(crate) use canon::canonical_labeling_colored;
pub use canon::{CanonicalForm, Isomorphism};
pub use cycles::{CycleWitness, ResiduePaths, TernaryVerdict};
pub use planarity::{Embedding, KuratowskiKind, KuratowskiWitness, PlanarityVerdict};

/// A simple undirected graph on uniquely labeled vertices.
///
/// Values are immutable once built; every operation returns a new graph.
#[derive(Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<VSet>,
}

impl Graph {
    /// Edgeless graph on the given labels.
    pub fn edgeless<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > VSet::CAPACITY {
            return Err(Error::Capacity(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::InvalidInput("empty vertex label".into()));
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let adj = vec![VSet::empty(); labels.len()];
        Ok(Graph { labels, index, adj })
    }

    /// Build from labels and index pairs. Self-loops and repeated edges are rejected.
    pub fn from_edges<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut g = Self::edgeless(labels)?;
        for (u, v) in edges {
            g.add_edge_idx(u, v)?;
        }
        Ok(g)
    }

    /// Build from pairs of labels; the vertex order is the order of first appearance
    /// in `labels`.
    pub fn from_labeled_edges<'a>(
        labels: impl IntoIterator<Item = &'a str>,
        edges: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut g = Self::edgeless(labels)?;
        for (u, v) in edges {
            let (u, v) = (g.index_of(u)?, g.index_of(v)?);
            g.add_edge_idx(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge_idx(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::InvalidInput(format!(
                "edge ({u}, {v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
        }
        if self.adj[u].contains(v) {
            return Err(Error::InvalidInput(format!("parallel edge ({u}, {v})")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub(crate) fn from_parts(labels: Vec<String>, adj: Vec<VSet>) -> Self {
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Graph { labels, index, adj }
    }

    /// Cycle graph `C_n` with labels `0..n`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInput(
                "a cycle needs at least 3 vertices".into(),
            ));
        }
        Self::from_edges(
            (0..n).map(|i| i.to_string()),
            (0..n).map(|i| (i, (i + 1) % n)),
        )
    }

    /// Path graph on `n` vertices labeled `0..n`.
    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges((0..n).map(|i| i.to_string()), (1..n).map(|i| (i - 1, i)))
    }

    /// Complete graph `K_n` with labels `0..n`.
    pub fn complete(n: usize) -> Result<Self> {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges((0..n).map(|i| i.to_string()), edges)
    }

    /// Complete bipartite graph `K_{p,q}`.
    pub fn complete_bipartite(p: usize, q: usize) -> Result<Self> {
        let edges = (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v)));
        Self::from_edges((0..p + q).map(|i| i.to_string()), edges)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn indices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<VSet> {
        labels.iter().map(|l| self.index_of(l.as_ref())).collect()
    }

    pub fn neighbors(&self, v: usize) -> VSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn all_vertices(&self) -> VSet {
        VSet::full(self.n())
    }

    /// Edges as index pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_independent(&self, s: VSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// `N[S]`, the closed neighbourhood of a vertex set.
    pub fn closed_neighborhood(&self, s: VSet) -> VSet {
        s.iter().fold(s, |acc, v| acc.union(self.adj[v]))
    }

    /// Subgraph induced on an index set; label order is preserved.
    pub fn induced_on(&self, keep: VSet) -> Graph {
        let kept: Vec<usize> = keep.iter().filter(|&v| v < self.n()).collect();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in kept.iter().enumerate() {
            pos[v] = i;
        }
        let labels = kept.iter().map(|&v| self.labels[v].clone()).collect();
        let adj = kept
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(keep)
                    .iter()
                    .map(|w| pos[w])
                    .collect()
            })
            .collect();
        Graph::from_parts(labels, adj)
    }

    /// Subgraph induced on the named vertices.
    pub fn induced_subgraph<S: AsRef<str>>(&self, keep: &[S]) -> Result<Graph> {
        Ok(self.induced_on(self.indices_of(keep)?))
    }

    /// `G - V'` for an index set.
    pub fn remove_vertices(&self, remove: VSet) -> Graph {
        self.induced_on(self.all_vertices().difference(remove))
    }

    /// `G - ∪_{v ∈ S} N[v]` for an independent set `S`.
    pub fn delete_closed_neighborhood<S: AsRef<str>>(&self, s: &[S]) -> Result<Graph> {
        let set = self.indices_of(s)?;
        if !self.is_independent(set) {
            return Err(Error::Precondition("vertex set is not independent".into()));
        }
        Ok(self.remove_vertices(self.closed_neighborhood(set)))
    }

    /// Graph complement on the same labels.
    pub fn complement(&self) -> Graph {
        let all = self.all_vertices();
        let adj = (0..self.n())
            .map(|v| all.difference(self.adj[v]).without(v))
            .collect();
        Graph::from_parts(self.labels.clone(), adj)
    }

    /// Breadth-first distances from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path length between two labeled vertices; `None` across components.
    pub fn distance(&self, x: &str, y: &str) -> Result<Option<usize>> {
        let (x, y) = (self.index_of(x)?, self.index_of(y)?);
        Ok(self.bfs_distances(x)[y])
    }

    /// Connected components as index sets, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VSet> {
        let mut seen = VSet::empty();
        let mut out = Vec::new();
        for v in 0..self.n() {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VSet::singleton(v);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = frontier
                    .iter()
                    .fold(VSet::empty(), |acc, u| acc.union(self.adj[u]))
                    .difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn component_of(&self, v: usize) -> VSet {
        self.components()
            .into_iter()
            .find(|c| c.contains(v))
            .unwrap_or_default()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Disjoint union; component `i`'s labels are prefixed with `"{i}:"`.
    pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
        Self::disjoint_union_with(gs, |i, l| format!("{i}:{l}"))
    }

    /// Disjoint union with a caller-chosen relabeling `(component, label) -> label`.
    pub fn disjoint_union_with(
        gs: &[Graph],
        relabel: impl Fn(usize, &str) -> String,
    ) -> Result<Graph> {
        let total: usize = gs.iter().map(Graph::n).sum();
        if total > VSet::CAPACITY {
            return Err(Error::Capacity(total));
        }
        let mut labels = Vec::with_capacity(total);
        let mut edges = Vec::new();
        let mut offset = 0;
        for (i, g) in gs.iter().enumerate() {
            labels.extend(g.labels.iter().map(|l| relabel(i, l)));
            edges.extend(g.edges().into_iter().map(|(u, v)| (u + offset, v + offset)));
            offset += g.n();
        }
        Graph::from_edges(labels, edges)
    }

    /// Same graph with every label replaced.
    pub fn relabeled(&self, relabel: impl Fn(usize, &str) -> String) -> Result<Graph> {
        let labels: Vec<String> = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| relabel(i, l))
            .collect();
        let mut g = Graph::edgeless(labels)?;
        g.adj = self.adj.clone();
        Ok(g)
    }

    /// Same graph with vertex `i` moved to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.n();
        let mut labels = vec![String::new(); n];
        let mut adj = vec![VSet::empty(); n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
            adj[perm[v]] = self.adj[v].iter().map(|w| perm[w]).collect();
        }
        Graph::from_parts(labels, adj)
    }

    /// Graph-level edge subdivision: the graph whose independence complex is the edge
    /// subdivision of `Ind(self)` at the non-edge `{x, y}`, with new vertex `fresh`.
    ///
    /// The new vertex is adjacent to `N(x) ∪ N(y)` and `xy` becomes an edge.
    pub fn edge_subdivision(&self, x: &str, y: &str, fresh: &str) -> Result<Graph> {
        let (xi, yi) = (self.index_of(x)?, self.index_of(y)?);
        if xi == yi {
            return Err(Error::Precondition(
                "subdivided pair must be two distinct vertices".into(),
            ));
        }
        if self.has_edge(xi, yi) {
            return Err(Error::Precondition(format!(
                "{x}{y} is an edge of the graph, not of its independence complex"
            )));
        }
        if self.contains(fresh) {
            return Err(Error::InvalidInput(format!(
                "label `{fresh}` is already in use"
            )));
        }
        if self.n() + 1 > VSet::CAPACITY {
            return Err(Error::Capacity(self.n() + 1));
        }
        let a = self.n();
        let mut labels = self.labels.clone();
        labels.push(fresh.to_string());
        let mut adj = self.adj.clone();
        adj.push(VSet::empty());
        adj[xi].insert(yi);
        adj[yi].insert(xi);
        for z in self.adj[xi].union(self.adj[yi]) {
            adj[a].insert(z);
            adj[z].insert(a);
        }
        Ok(Graph::from_parts(labels, adj))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|s| s.is_empty())
    }
}

impl PartialEq for Graph {
    /// Equal labels in the same order and equal adjacency.
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        f.debug_struct("Graph")
            .field("labels", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

/// JSON mirror of the graph text format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub labels: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            labels: g.labels.clone(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;
    fn try_from(j: GraphJson) -> Result<Graph> {
        Graph::from_edges(j.labels, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}
