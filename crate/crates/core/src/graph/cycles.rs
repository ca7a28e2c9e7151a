use std::ops::ControlFlow;

use serde::Serialize;

use super::Graph;
use crate::bitset::VSet;
use crate::error::{Error, Result};

/// A cycle given by its cyclic vertex order. The closing edge from the last vertex
/// back to the first is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
}

impl CycleWitness {
    /// Number of edges, equal to the number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VSet {
        self.vertices.iter().copied().collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.vertices.len();
        (0..k)
            .map(|i| {
                let (u, v) = (self.vertices[i], self.vertices[(i + 1) % k]);
                (u.min(v), u.max(v))
            })
            .collect()
    }

    pub fn labels(&self, g: &Graph) -> Vec<String> {
        self.vertices
            .iter()
            .map(|&v| g.label(v).to_string())
            .collect()
    }

    /// Whether this is a cycle of `g` (consecutive vertices adjacent, wrap-around included).
    pub fn is_cycle_in(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        k >= 3
            && self.vertex_set().len() == k
            && self.edges().iter().all(|&(u, v)| g.has_edge(u, v))
    }

    /// Whether this is a chordless cycle of `g`.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        self.is_cycle_in(g) && g.induced_on(self.vertex_set()).edge_count() == self.len()
    }
}

/// Result of the ternary test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TernaryVerdict {
    pub ternary: bool,
    /// An induced cycle of length divisible by three, when one exists.
    pub witness: Option<CycleWitness>,
}

/// One induced `x`-`y` path per residue class of the length modulo 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResiduePaths {
    pub paths: [Option<Vec<usize>>; 3],
}

impl ResiduePaths {
    pub fn all_found(&self) -> bool {
        self.paths.iter().all(Option::is_some)
    }

    pub fn missing_residues(&self) -> Vec<usize> {
        (0..3).filter(|&r| self.paths[r].is_none()).collect()
    }
}

impl Graph {
    /// Visit every induced cycle of length at most `max_len` exactly once.
    ///
    /// Cycles are grown as induced paths from their smallest vertex; a path is closed
    /// when its newest vertex touches the start. Each cycle is reported in the
    /// direction where the second vertex is smaller than the last.
    pub fn for_each_induced_cycle<B>(
        &self,
        max_len: Option<usize>,
        mut visit: impl FnMut(&CycleWitness) -> ControlFlow<B>,
    ) -> Option<B> {
        let cap = max_len.unwrap_or(self.n()).min(self.n());
        let mut path = Vec::with_capacity(cap);
        for s in 0..self.n() {
            path.clear();
            path.push(s);
            let allowed = VSet::full(self.n()).difference(VSet::full(s + 1));
            if let ControlFlow::Break(b) =
                self.grow_induced(s, allowed, VSet::singleton(s), &mut path, cap, &mut visit)
            {
                return Some(b);
            }
        }
        None
    }

    fn grow_induced<B>(
        &self,
        s: usize,
        allowed: VSet,
        on_path: VSet,
        path: &mut Vec<usize>,
        cap: usize,
        visit: &mut impl FnMut(&CycleWitness) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let last = *path.last().unwrap();
        // Vertices adjacent to an interior path vertex would create a chord.
        let interior = on_path.without(s).without(last);
        let blocked = interior
            .iter()
            .fold(on_path, |acc, v| acc.union(self.adj[v]));
        for w in self.adj[last].intersection(allowed).difference(blocked) {
            let closes = path.len() >= 2 && self.adj[w].contains(s);
            if closes {
                if path.len() < cap && path[1] < w {
                    path.push(w);
                    let c = CycleWitness {
                        vertices: path.clone(),
                    };
                    path.pop();
                    visit(&c)?;
                }
                continue;
            }
            if path.len() + 1 < cap {
                path.push(w);
                self.grow_induced(s, allowed, on_path.with(w), path, cap, visit)?;
                path.pop();
            }
        }
        ControlFlow::Continue(())
    }

    /// Every induced cycle of length at most `max_len` (unbounded when `None`).
    pub fn induced_cycles(&self, max_len: Option<usize>) -> Vec<CycleWitness> {
        let mut out = Vec::new();
        self.for_each_induced_cycle::<()>(max_len, |c| {
            out.push(c.clone());
            ControlFlow::Continue(())
        });
        out
    }

    /// Every simple cycle (chords allowed) of length at most `max_len`, each reported once.
    pub fn simple_cycles(&self, max_len: usize) -> Vec<CycleWitness> {
        fn grow(
            g: &Graph,
            s: usize,
            path: &mut Vec<usize>,
            on: VSet,
            cap: usize,
            out: &mut Vec<CycleWitness>,
        ) {
            let last = *path.last().unwrap();
            for w in g.adj[last] {
                if w < s || on.contains(w) {
                    if w == s && path.len() >= 3 && path[1] < last {
                        out.push(CycleWitness {
                            vertices: path.clone(),
                        });
                    }
                    continue;
                }
                if path.len() < cap {
                    path.push(w);
                    grow(g, s, path, on.with(w), cap, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        for s in 0..self.n() {
            let mut path = vec![s];
            grow(self, s, &mut path, VSet::singleton(s), max_len, &mut out);
        }
        out
    }

    /// Ternary test: no induced cycle has length divisible by three.
    pub fn ternary(&self) -> TernaryVerdict {
        let witness = self.for_each_induced_cycle(None, |c| {
            if c.len() % 3 == 0 {
                ControlFlow::Break(c.clone())
            } else {
                ControlFlow::Continue(())
            }
        });
        TernaryVerdict {
            ternary: witness.is_none(),
            witness,
        }
    }

    pub fn is_ternary(&self) -> bool {
        self.ternary().ternary
    }

    /// Search induced `x`-`y` paths until one of each length residue mod 3 is found.
    pub fn induced_paths_by_residue(&self, x: &str, y: &str) -> Result<ResiduePaths> {
        let (xi, yi) = (self.index_of(x)?, self.index_of(y)?);
        if xi == yi {
            return Err(Error::Precondition("endpoints must differ".into()));
        }
        let mut found: [Option<Vec<usize>>; 3] = [None, None, None];
        let mut path = vec![xi];
        self.residue_search(yi, VSet::singleton(xi), &mut path, &mut found);
        Ok(ResiduePaths { paths: found })
    }

    fn residue_search(
        &self,
        target: usize,
        blocked: VSet,
        path: &mut Vec<usize>,
        found: &mut [Option<Vec<usize>>; 3],
    ) -> bool {
        let last = *path.last().unwrap();
        let record = |path: &Vec<usize>, found: &mut [Option<Vec<usize>>; 3]| {
            let r = path.len() % 3;
            if found[r].is_none() {
                let mut p = path.clone();
                p.push(target);
                found[r] = Some(p);
            }
            found.iter().all(Option::is_some)
        };
        for w in self.adj[last].difference(blocked) {
            if w == target {
                if record(path, found) {
                    return true;
                }
                continue;
            }
            path.push(w);
            let next = blocked.union(self.adj[last]).with(w);
            // A vertex next to the target can only be followed by the target itself.
            let done = if self.adj[w].contains(target) {
                !next.contains(target) && record(path, found)
            } else {
                self.residue_search(target, next, path, found)
            };
            path.pop();
            if done {
                return true;
            }
        }
        false
    }
}
