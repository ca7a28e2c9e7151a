//! Simplicial complexes stored by their facets, with the face operations used
//! throughout: links, deletions, stars, joins, flagness, pseudomanifold structure,
//! edge subdivision and contraction.

mod decomposable;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::bitset::VSet;
use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Graph};

pub use decomposable::Decomposability;

/// Default cap on the number of faces a complex may materialize.
pub const DEFAULT_FACE_GUARD: usize = 1 << 22;

/// Face-count guard, overridable through `FLAGSPHERE_FACE_GUARD`.
pub fn face_guard() -> usize {
    std::env::var("FLAGSPHERE_FACE_GUARD")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_FACE_GUARD)
}

/// A face, as a set of vertex indices of its complex.
pub type Face = VSet;

/// All faces of a complex grouped by cardinality; `by_size[k]` is sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceTable {
    pub by_size: Vec<Vec<Face>>,
}

impl FaceTable {
    pub fn total(&self) -> usize {
        self.by_size.iter().map(Vec::len).sum()
    }

    /// Faces of dimension `i`, that is of cardinality `i + 1`.
    pub fn of_dim(&self, i: isize) -> &[Face] {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.by_size.get(k))
            .map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = Face> + '_ {
        self.by_size.iter().flatten().copied()
    }
}

/// A finite simplicial complex on labeled vertices, represented by its facets.
///
/// The void complex has no facets; the empty complex `{∅}` has the single facet `∅`.
/// Every label is a vertex of some facet.
pub struct SimplicialComplex {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    facets: Vec<Face>,
    faces: OnceLock<Arc<FaceTable>>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        let faces = OnceLock::new();
        if let Some(t) = self.faces.get() {
            let _ = faces.set(Arc::clone(t));
        }
        SimplicialComplex {
            labels: self.labels.clone(),
            index: self.index.clone(),
            facets: self.facets.clone(),
            faces,
        }
    }
}

/// Keep only the inclusion-maximal sets, sorted by bit pattern.
pub(crate) fn maximal(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.bits().cmp(&b.bits())));
    sets.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable_by_key(|s| s.bits());
    kept
}

pub(crate) fn link_facets(facets: &[Face], s: Face) -> Vec<Face> {
    maximal(
        facets
            .iter()
            .filter(|f| s.is_subset(**f))
            .map(|f| f.difference(s))
            .collect(),
    )
}

pub(crate) fn deletion_facets(facets: &[Face], v: usize) -> Vec<Face> {
    maximal(facets.iter().map(|f| f.without(v)).collect())
}

impl SimplicialComplex {
    /// Build from labels and facet index sets. Non-maximal sets are discarded and
    /// labels that occur in no facet are dropped.
    pub fn from_facets<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        facets: Vec<Face>,
    ) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > VSet::CAPACITY {
            return Err(Error::Capacity(labels.len()));
        }
        let all = VSet::full(labels.len());
        if let Some(f) = facets.iter().find(|f| !f.is_subset(all)) {
            return Err(Error::InvalidInput(format!(
                "facet {f:?} uses a vertex index beyond {}",
                labels.len()
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() {
                return Err(Error::InvalidInput("empty vertex label".into()));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Self::from_parts(labels, facets))
    }

    /// Build from facets given as label lists.
    pub fn from_labeled_facets<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut sets = Vec::with_capacity(facets.len());
        for f in facets {
            let mut s = VSet::empty();
            for l in f {
                let l = l.as_ref();
                let i = match index.get(l) {
                    Some(&i) => i,
                    None => {
                        if labels.len() == VSet::CAPACITY {
                            return Err(Error::Capacity(labels.len() + 1));
                        }
                        index.insert(l.to_string(), labels.len());
                        labels.push(l.to_string());
                        labels.len() - 1
                    }
                };
                s.insert(i);
            }
            sets.push(s);
        }
        Self::from_facets(labels, sets)
    }

    /// Trusted constructor: reduces to an antichain and compacts unused labels.
    pub(crate) fn from_parts(labels: Vec<String>, facets: Vec<Face>) -> Self {
        let facets = maximal(facets);
        let used: VSet = facets.iter().fold(VSet::empty(), |a, f| a.union(*f));
        let (labels, facets) = if used.len() == labels.len() {
            (labels, facets)
        } else {
            let mut remap = vec![usize::MAX; labels.len()];
            let mut kept = Vec::with_capacity(used.len());
            for v in used {
                remap[v] = kept.len();
                kept.push(labels[v].clone());
            }
            let facets = maximal(
                facets
                    .iter()
                    .map(|f| f.iter().map(|v| remap[v]).collect())
                    .collect(),
            );
            (kept, facets)
        };
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        SimplicialComplex {
            labels,
            index,
            facets,
            faces: OnceLock::new(),
        }
    }

    /// The void complex, with no faces at all.
    pub fn void() -> Self {
        Self::from_parts(Vec::new(), Vec::new())
    }

    /// The empty complex `{∅}`.
    pub fn empty_complex() -> Self {
        Self::from_parts(Vec::new(), vec![VSet::empty()])
    }

    /// The full simplex on the given labels.
    pub fn simplex<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        Self::from_facets(labels, vec![VSet::full(n)])
    }

    /// Faces are the independent sets of `g`; facets are its maximal independent sets.
    pub fn independence_complex(g: &Graph) -> Self {
        Self::from_parts(g.labels().to_vec(), g.maximal_independent_sets())
    }

    /// Clique complex of `g`: faces are the cliques.
    pub fn clique_complex(g: &Graph) -> Self {
        Self::independence_complex(&g.complement())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
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

    /// The index set of a list of labels.
    pub fn face_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        labels.iter().map(|l| self.index_of(l.as_ref())).collect()
    }

    /// Labels of a face, in vertex order.
    pub fn face_labels(&self, f: Face) -> Vec<String> {
        f.iter().map(|v| self.labels[v].clone()).collect()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertices(&self) -> VSet {
        VSet::full(self.n())
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension: largest facet size minus one; `-1` for `{∅}` and for the void complex.
    pub fn dim(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.len() as isize)
            .max()
            .unwrap_or(0)
            - 1
    }

    pub fn contains_face(&self, f: Face) -> bool {
        self.facets.iter().any(|g| f.is_subset(*g))
    }

    /// The full face family, computed once and cached.
    pub fn faces(&self) -> Result<Arc<FaceTable>> {
        if let Some(t) = self.faces.get() {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(self.enumerate_faces(face_guard())?);
        Ok(Arc::clone(self.faces.get_or_init(|| table)))
    }

    fn enumerate_faces(&self, guard: usize) -> Result<FaceTable> {
        let top = (self.dim() + 1).max(0) as usize;
        let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); top + 1];
        if self.is_void() {
            return Ok(FaceTable {
                by_size: Vec::new(),
            });
        }
        let mut total = 0usize;
        let mut level: HashSet<Face> = HashSet::new();
        for k in (0..=top).rev() {
            level.extend(self.facets.iter().copied().filter(|f| f.len() == k));
            total += level.len();
            if total > guard {
                return Err(Error::FaceGuard { guard });
            }
            let mut faces: Vec<Face> = level.iter().copied().collect();
            faces.sort_unstable_by_key(|f| f.bits());
            let mut below = HashSet::with_capacity(faces.len());
            for f in &faces {
                for v in *f {
                    below.insert(f.without(v));
                }
            }
            by_size[k] = faces;
            level = below;
        }
        Ok(FaceTable { by_size })
    }

    /// `f_{-1}, f_0, ..., f_{dim}`; empty for the void complex.
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        Ok(self
            .faces()?
            .by_size
            .iter()
            .map(|l| l.len() as u64)
            .collect())
    }

    /// The 1-skeleton as a graph on the complex's labels.
    pub fn one_skeleton(&self) -> Graph {
        let mut adj = vec![VSet::empty(); self.n()];
        for f in &self.facets {
            for v in *f {
                adj[v] = adj[v].union(f.without(v));
            }
        }
        Graph::from_parts(self.labels.clone(), adj)
    }

    /// The graph whose independence complex is this one: the complement of the 1-skeleton.
    pub fn complement_skeleton_graph(&self) -> Result<Graph> {
        if !self.is_flag() {
            return Err(Error::Domain("complex is not flag".into()));
        }
        Ok(self.one_skeleton().complement())
    }

    /// Whether every minimal nonface has two vertices.
    pub fn is_flag(&self) -> bool {
        if self.is_void() {
            return false;
        }
        let clique = maximal(self.one_skeleton().complement().maximal_independent_sets());
        clique == self.facets
    }

    /// Minimal nonfaces, ordered by size and then by bit pattern.
    pub fn minimal_nonfaces(&self) -> Result<Vec<Face>> {
        if self.is_void() {
            return Ok(vec![VSet::empty()]);
        }
        let table = self.faces()?;
        let members: HashSet<Face> = table.iter().collect();
        let mut out = Vec::new();
        for k in 1..table.by_size.len() {
            for &f in &table.by_size[k] {
                let top = f.iter().last().unwrap_or(0);
                for v in (top + 1)..self.n() {
                    let s = f.with(v);
                    if !members.contains(&s) && s.iter().all(|u| members.contains(&s.without(u))) {
                        out.push(s);
                    }
                }
            }
        }
        out.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.bits().cmp(&b.bits())));
        Ok(out)
    }

    /// `lk(σ) = {τ ∈ Δ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`.
    pub fn link(&self, sigma: Face) -> Result<Self> {
        if !self.contains_face(sigma) {
            return Err(Error::InvalidInput(format!(
                "{:?} is not a face",
                self.face_labels(sigma)
            )));
        }
        Ok(Self::from_parts(
            self.labels.clone(),
            link_facets(&self.facets, sigma),
        ))
    }

    pub fn link_of<S: AsRef<str>>(&self, sigma: &[S]) -> Result<Self> {
        self.link(self.face_of(sigma)?)
    }

    /// Faces not containing `v`.
    pub fn deletion(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        Ok(Self::from_parts(
            self.labels.clone(),
            deletion_facets(&self.facets, v),
        ))
    }

    /// Closed star: faces `τ` with `τ ∪ {v}` a face.
    pub fn star(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        Ok(Self::from_parts(
            self.labels.clone(),
            self.facets
                .iter()
                .copied()
                .filter(|f| f.contains(v))
                .collect(),
        ))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }

    /// Facet lists of `self` and `other` over a shared label list.
    fn aligned(&self, other: &Self) -> Result<(Vec<String>, Vec<Face>, Vec<Face>)> {
        let mut labels = self.labels.clone();
        let mut remap = Vec::with_capacity(other.n());
        for l in &other.labels {
            match self.index.get(l) {
                Some(&i) => remap.push(i),
                None => {
                    remap.push(labels.len());
                    labels.push(l.clone());
                }
            }
        }
        if labels.len() > VSet::CAPACITY {
            return Err(Error::Capacity(labels.len()));
        }
        let theirs = other
            .facets
            .iter()
            .map(|f| f.iter().map(|v| remap[v]).collect())
            .collect();
        Ok((labels, self.facets.clone(), theirs))
    }

    /// Union of face families, matching vertices by label.
    pub fn union(&self, other: &Self) -> Result<Self> {
        let (labels, mut a, b) = self.aligned(other)?;
        a.extend(b);
        Ok(Self::from_parts(labels, a))
    }

    /// Intersection of face families, matching vertices by label.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        let (labels, a, b) = self.aligned(other)?;
        let meet = a
            .iter()
            .flat_map(|f| b.iter().map(move |g| f.intersection(*g)))
            .collect();
        Ok(Self::from_parts(labels, meet))
    }

    /// `Δ ∗ Γ`; the vertex labels must be disjoint.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if let Some(l) = other.labels.iter().find(|l| self.index.contains_key(*l)) {
            return Err(Error::InvalidInput(format!(
                "label `{l}` occurs in both complexes"
            )));
        }
        let (labels, a, b) = self.aligned(other)?;
        let facets = a
            .iter()
            .flat_map(|f| b.iter().map(move |g| f.union(*g)))
            .collect();
        Ok(Self::from_parts(labels, facets))
    }

    /// Edge subdivision at the edge `{x, y}` with new vertex `fresh`: every facet
    /// `F ⊇ {x, y}` is replaced by `F \ x ∪ a` and `F \ y ∪ a`.
    pub fn edge_subdivision(&self, x: &str, y: &str, fresh: &str) -> Result<Self> {
        let (xi, yi) = (self.index_of(x)?, self.index_of(y)?);
        let e = VSet::singleton(xi).with(yi);
        if xi == yi || !self.contains_face(e) {
            return Err(Error::InvalidInput(format!(
                "{{{x}, {y}}} is not an edge of the complex"
            )));
        }
        if fresh.is_empty() || self.index.contains_key(fresh) {
            return Err(Error::InvalidInput(format!("label `{fresh}` is not fresh")));
        }
        if self.n() == VSet::CAPACITY {
            return Err(Error::Capacity(self.n() + 1));
        }
        let a = self.n();
        let mut labels = self.labels.clone();
        labels.push(fresh.to_string());
        let mut facets = Vec::with_capacity(self.facets.len() + 4);
        for &f in &self.facets {
            if e.is_subset(f) {
                facets.push(f.without(xi).with(a));
                facets.push(f.without(yi).with(a));
            } else {
                facets.push(f);
            }
        }
        Ok(Self::from_parts(labels, facets))
    }

    /// Contract the edge `{keep, remove}`, identifying `remove` with `keep`.
    pub fn edge_contraction(&self, keep: &str, remove: &str) -> Result<Self> {
        let (u, w) = (self.index_of(keep)?, self.index_of(remove)?);
        if u == w || !self.contains_face(VSet::singleton(u).with(w)) {
            return Err(Error::InvalidInput(format!(
                "{{{keep}, {remove}}} is not an edge of the complex"
            )));
        }
        let facets = self
            .facets
            .iter()
            .map(|&f| {
                if f.contains(w) {
                    f.without(w).with(u)
                } else {
                    f
                }
            })
            .collect();
        Ok(Self::from_parts(self.labels.clone(), facets))
    }

    /// An edge can be contracted without losing flagness when it lies in no induced
    /// 4-cycle of the 1-skeleton. Returns such a square `u, w, q, p` when one exists.
    pub fn contraction_obstruction(&self, u: &str, w: &str) -> Result<Option<[usize; 4]>> {
        let (ui, wi) = (self.index_of(u)?, self.index_of(w)?);
        let g = self.one_skeleton();
        if !g.has_edge(ui, wi) {
            return Err(Error::InvalidInput(format!(
                "{{{u}, {w}}} is not an edge of the complex"
            )));
        }
        let pu = g.neighbors(ui).difference(g.neighbors(wi)).without(wi);
        let qw = g.neighbors(wi).difference(g.neighbors(ui)).without(ui);
        for p in pu {
            if let Some(q) = g.neighbors(p).intersection(qw).first() {
                return Ok(Some([ui, wi, q, p]));
            }
        }
        Ok(None)
    }

    pub fn is_contraction_flag_safe(&self, u: &str, w: &str) -> Result<bool> {
        Ok(self.contraction_obstruction(u, w)?.is_none())
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Ridges of a pure complex with the number of facets containing each.
    fn ridge_counts(&self) -> HashMap<Face, usize> {
        let mut counts = HashMap::new();
        for f in &self.facets {
            for v in *f {
                *counts.entry(f.without(v)).or_insert(0) += 1;
            }
        }
        counts
    }

    /// Pure, and any two facets are joined by a chain of facets meeting in ridges.
    pub fn is_strongly_connected(&self) -> bool {
        if !self.is_pure() {
            return false;
        }
        let k = self.facets.len();
        if k <= 1 {
            return true;
        }
        let mut by_ridge: HashMap<Face, Vec<usize>> = HashMap::new();
        for (i, f) in self.facets.iter().enumerate() {
            for v in *f {
                by_ridge.entry(f.without(v)).or_default().push(i);
            }
        }
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(i) = stack.pop() {
            let f = self.facets[i];
            for v in f {
                for &j in &by_ridge[&f.without(v)] {
                    if !seen[j] {
                        seen[j] = true;
                        reached += 1;
                        stack.push(j);
                    }
                }
            }
        }
        reached == k
    }

    /// The three pseudomanifold conditions plus the boundary ridges.
    pub fn pseudomanifold(&self) -> PseudomanifoldVerdict {
        let pure = self.is_pure();
        let strongly_connected = pure && self.is_strongly_connected();
        let counts = self.ridge_counts();
        let ridges_ok = counts.values().all(|&c| c <= 2);
        let mut boundary: Vec<Face> = counts
            .iter()
            .filter(|(_, &c)| c == 1)
            .map(|(r, _)| *r)
            .collect();
        boundary.sort_unstable_by_key(|f| f.bits());
        PseudomanifoldVerdict {
            pure,
            strongly_connected,
            ridges_at_most_two: ridges_ok,
            pseudomanifold: pure && strongly_connected && ridges_ok,
            boundary: boundary.into_iter().map(|f| self.face_labels(f)).collect(),
        }
    }

    pub fn is_pseudomanifold(&self) -> bool {
        self.pseudomanifold().pseudomanifold
    }

    /// Vertices lying in every facet.
    pub fn cone_points(&self) -> VSet {
        match self.facets.split_first() {
            None => VSet::empty(),
            Some((first, rest)) => rest.iter().fold(*first, |acc, f| acc.intersection(*f)),
        }
    }

    /// Link of the face formed by all cone points.
    pub fn core(&self) -> Self {
        Self::from_parts(
            self.labels.clone(),
            link_facets(&self.facets, self.cone_points()),
        )
    }

    /// Cone over this complex with apex `apex`.
    pub fn cone(&self, apex: &str) -> Result<Self> {
        self.join(&Self::simplex([apex])?)
    }

    /// Same complex with every label replaced.
    pub fn relabeled(&self, relabel: impl Fn(usize, &str) -> String) -> Result<Self> {
        let labels: Vec<String> = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| relabel(i, l))
            .collect();
        Self::from_facets(labels, self.facets.clone())
    }

    /// A label-independent form; equal forms mean isomorphic complexes.
    ///
    /// Flag complexes are keyed by the canonical form of their complement graph,
    /// which is cheap for the product-like symmetric complexes that arise here; other
    /// complexes use the coloured vertex/facet incidence graph.
    pub fn canonical_form(&self) -> CanonicalForm {
        if self.is_void() {
            return CanonicalForm(vec![2]);
        }
        if self.is_flag() {
            let mut form = vec![0];
            form.extend(self.one_skeleton().complement().canonical_form().0);
            return CanonicalForm(form);
        }
        let n = self.n();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + self.facets.len()];
        for (i, f) in self.facets.iter().enumerate() {
            for v in *f {
                adj[v].push(n + i);
                adj[n + i].push(v);
            }
        }
        let mut colors = vec![0u32; n];
        colors.extend(std::iter::repeat_n(1u32, self.facets.len()));
        let (body, _) = crate::graph::canonical_labeling_colored(&adj, &colors);
        let mut form = vec![1];
        form.extend(body);
        CanonicalForm(form)
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.n() == other.n()
            && self.facets.len() == other.facets.len()
            && self.canonical_form() == other.canonical_form()
    }

    /// Same labels and same facets, irrespective of vertex order.
    pub fn same_faces(&self, other: &Self) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let mut a: Vec<Vec<String>> = self
            .facets
            .iter()
            .map(|&f| sorted(self.face_labels(f)))
            .collect();
        let mut b: Vec<Vec<String>> = other
            .facets
            .iter()
            .map(|&f| sorted(other.face_labels(f)))
            .collect();
        a.sort();
        b.sort();
        a == b
    }
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

impl PartialEq for SimplicialComplex {
    /// Equal labels in the same order and equal facets.
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<Vec<String>> = self.facets.iter().map(|&g| self.face_labels(g)).collect();
        f.debug_struct("SimplicialComplex")
            .field("facets", &facets)
            .finish()
    }
}

/// Outcome of the pseudomanifold conditions, with boundary ridges as label lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PseudomanifoldVerdict {
    pub pure: bool,
    pub strongly_connected: bool,
    pub ridges_at_most_two: bool,
    pub pseudomanifold: bool,
    pub boundary: Vec<Vec<String>>,
}

/// JSON mirror of the facet-list text format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub labels: Vec<String>,
    pub facets: Vec<Vec<usize>>,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexJson {
            labels: c.labels.clone(),
            facets: c.facets.iter().map(|f| f.iter().collect()).collect(),
        }
    }
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;
    fn try_from(j: ComplexJson) -> Result<Self> {
        let n = j.labels.len();
        let mut facets = Vec::with_capacity(j.facets.len());
        for f in j.facets {
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidInput(format!(
                    "facet vertex {v} out of range"
                )));
            }
            facets.push(f.into_iter().collect());
        }
        let c = SimplicialComplex::from_facets(j.labels, facets)?;
        if c.n() != n {
            return Err(Error::InvalidInput(
                "every vertex must lie in some facet".into(),
            ));
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> SimplicialComplex {
        SimplicialComplex::clique_complex(&Graph::cycle(4).unwrap())
    }

    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::independence_complex(&Graph::cycle(5).unwrap())
    }

    fn triangle_boundary() -> SimplicialComplex {
        SimplicialComplex::from_labeled_facets(&[vec!["1", "2"], vec!["2", "3"], vec!["1", "3"]])
            .unwrap()
    }

    #[test]
    fn pentagon_counts_and_links() {
        let p = pentagon();
        assert_eq!(p.f_vector().unwrap(), vec![1, 5, 5]);
        let lk = p.link(VSet::singleton(0)).unwrap();
        assert_eq!(lk.f_vector().unwrap(), vec![1, 2]);
        assert_eq!(lk.dim(), 0);
    }

    #[test]
    fn independence_complex_of_complete_graph_is_points() {
        let c = SimplicialComplex::independence_complex(&Graph::complete(4).unwrap());
        assert_eq!(c.f_vector().unwrap(), vec![1, 4]);
    }

    #[test]
    fn flagness_and_minimal_nonfaces() {
        let t = triangle_boundary();
        assert!(!t.is_flag());
        assert_eq!(t.minimal_nonfaces().unwrap(), vec![VSet::full(3)]);
        let s = SimplicialComplex::simplex(["a", "b", "c"]).unwrap();
        assert!(s.is_flag());
        assert!(s.minimal_nonfaces().unwrap().is_empty());
        assert!(pentagon().is_flag());
        assert!(t.complement_skeleton_graph().is_err());
        assert_eq!(
            pentagon().complement_skeleton_graph().unwrap(),
            Graph::cycle(5).unwrap()
        );
        assert_eq!(s.complement_skeleton_graph().unwrap().edge_count(), 0);
    }

    #[test]
    fn subdividing_a_square_edge_gives_a_pentagon() {
        let sq = square();
        let e = sq.facets()[0];
        let (x, y) = (
            sq.label(e.iter().next().unwrap()).to_string(),
            sq.label(e.iter().nth(1).unwrap()).to_string(),
        );
        let p = sq.edge_subdivision(&x, &y, "new").unwrap();
        assert!(p.is_isomorphic(&pentagon()));
        assert!(p.edge_contraction(&x, "new").unwrap() == sq);
        assert!(sq.edge_subdivision(&x, &y, &x).is_err());
    }

    #[test]
    fn square_edges_are_unsafe_pentagon_edges_safe() {
        let sq = square();
        for &f in sq.facets() {
            let v: Vec<String> = sq.face_labels(f);
            assert!(!sq.is_contraction_flag_safe(&v[0], &v[1]).unwrap());
        }
        let p = pentagon();
        for &f in p.facets() {
            let v: Vec<String> = p.face_labels(f);
            assert!(p.is_contraction_flag_safe(&v[0], &v[1]).unwrap());
            let c = p.edge_contraction(&v[0], &v[1]).unwrap();
            assert!(c.is_isomorphic(&sq));
        }
    }

    #[test]
    fn pseudomanifold_conditions() {
        let bow =
            SimplicialComplex::from_labeled_facets(&[vec!["a", "b", "c"], vec!["c", "d", "e"]])
                .unwrap();
        assert!(bow.is_pure());
        assert!(!bow.is_strongly_connected());
        let t = triangle_boundary().pseudomanifold();
        assert!(t.pseudomanifold && t.boundary.is_empty());
        let disk = SimplicialComplex::simplex(["a", "b", "c"])
            .unwrap()
            .pseudomanifold();
        assert!(disk.pseudomanifold);
        assert_eq!(disk.boundary.len(), 3);
    }

    #[test]
    fn empty_and_void_are_distinct() {
        let e = SimplicialComplex::empty_complex();
        let v = SimplicialComplex::void();
        assert_eq!(e.f_vector().unwrap(), vec![1]);
        assert!(v.f_vector().unwrap().is_empty());
        assert!(e != v);
        let p = pentagon();
        assert_eq!(p.join(&e).unwrap(), p);
        assert!(p.join(&v).unwrap().is_void());
    }

    #[test]
    fn point_join_point_is_an_edge() {
        let a = SimplicialComplex::simplex(["a"]).unwrap();
        let b = SimplicialComplex::simplex(["b"]).unwrap();
        assert_eq!(a.join(&b).unwrap().facets(), &[VSet::full(2)]);
        assert!(a.join(&a).is_err());
    }

    #[test]
    fn cone_points_and_core() {
        let s = SimplicialComplex::simplex(["a", "b"]).unwrap();
        assert_eq!(s.cone_points(), VSet::full(2));
        assert_eq!(s.core(), SimplicialComplex::empty_complex());
        let c = pentagon().cone("apex").unwrap();
        assert_eq!(c.cone_points().len(), 1);
        assert!(c.core().same_faces(&pentagon()));
        assert!(pentagon().cone_points().is_empty());
        let apex = c.index_of("apex").unwrap();
        assert_eq!(c.star(apex).unwrap(), c);
    }

    #[test]
    fn face_guard_is_enforced() {
        let c = pentagon();
        assert_eq!(c.enumerate_faces(5), Err(Error::FaceGuard { guard: 5 }));
        assert!(c.enumerate_faces(11).is_ok());
    }

    #[test]
    fn json_mirror_round_trip() {
        let p = pentagon();
        assert_eq!(
            SimplicialComplex::try_from(ComplexJson::from(&p)).unwrap(),
            p
        );
    }
}
