//! Reduced simplicial homology with field coefficients, and the link-quantified
//! classifications built on it: homology spheres, Cohen–Macaulay and Gorenstein complexes.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::complex::{link_facets, Face, SimplicialComplex};
use crate::error::{Error, Result};

/// Coefficient domain for homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Coefficients {
    #[default]
    F2,
    /// The prime field of the given order.
    Fp(u32),
    /// The rationals, computed through an integral diagonalization.
    Q,
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::F2 => write!(f, "F2"),
            Coefficients::Fp(p) => write!(f, "F{p}"),
            Coefficients::Q => write!(f, "Q"),
        }
    }
}

impl Serialize for Coefficients {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl std::str::FromStr for Coefficients {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F2" | "2" => Ok(Coefficients::F2),
            "Q" | "QQ" => Ok(Coefficients::Q),
            _ => {
                let p: u32 = s.strip_prefix('F').unwrap_or(s).parse().map_err(|_| {
                    Error::InvalidInput(format!("unknown coefficient domain `{s}`"))
                })?;
                if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
                    return Err(Error::InvalidInput(format!("{p} is not a prime")));
                }
                Ok(if p == 2 {
                    Coefficients::F2
                } else {
                    Coefficients::Fp(p)
                })
            }
        }
    }
}

/// Reduced Betti numbers `b_{-1}, b_0, ..., b_dim` over a coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    pub coeff: Coefficients,
    pub betti: Vec<usize>,
    /// Ranks of the boundary maps `∂_0, ..., ∂_dim`, where `∂_0` maps vertices to `∅`.
    pub boundary_ranks: Vec<usize>,
    /// Face counts `f_{-1}, ..., f_dim`.
    pub f: Vec<u64>,
    /// Over `Q` only: whether some integral boundary matrix has an elementary divisor above one.
    pub torsion: Option<bool>,
}

impl BettiVector {
    /// Rank of `H̃_i`, zero outside the computed range.
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.betti.get(k).copied())
            .unwrap_or(0)
    }

    /// Whether the homology is that of a sphere of dimension `d`.
    pub fn is_sphere_of_dim(&self, d: isize) -> bool {
        (-1..self.betti.len() as isize - 1).all(|i| self.get(i) == usize::from(i == d))
            && self.get(d) == 1
    }

    /// Reduced Euler characteristic computed from the Betti numbers.
    pub fn euler_from_betti(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Reduced Euler characteristic computed from the face counts.
    pub fn euler_from_faces(&self) -> i64 {
        self.f
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 1 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Rank-nullity bookkeeping: `rank ∂_i + rank ∂_{i+1} + b_i = f_i` and the Euler identity.
    pub fn audit(&self) -> bool {
        let r = |k: usize| self.boundary_ranks.get(k).copied().unwrap_or(0);
        let per_dim = (0..self.f.len()).all(|k| {
            let below = if k == 0 { 0 } else { r(k - 1) };
            below + r(k) + self.betti[k] == self.f[k] as usize
        });
        per_dim && self.euler_from_betti() == self.euler_from_faces()
    }
}

/// Signed boundary of a face: `(codim-1 face, sign)` pairs in vertex order.
fn boundary(face: Face) -> impl Iterator<Item = (Face, bool)> {
    face.iter()
        .enumerate()
        .map(move |(k, v)| (face.without(v), k % 2 == 1))
}

/// Boundary matrix `∂_k` for faces of size `k + 1`, as sparse rows of `(column, negative)`.
fn boundary_rows(lower: &[Face], upper: &[Face]) -> Vec<Vec<(usize, bool)>> {
    let index: HashMap<Face, usize> = lower.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    upper
        .iter()
        .map(|f| {
            let mut row: Vec<(usize, bool)> =
                boundary(*f).map(|(g, neg)| (index[&g], neg)).collect();
            row.sort_unstable();
            row
        })
        .collect()
}

fn rank_f2(rows: &[Vec<(usize, bool)>], ncols: usize) -> usize {
    let words = ncols.div_ceil(64);
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for row in rows {
        let mut bits = vec![0u64; words];
        for &(c, _) in row {
            bits[c / 64] ^= 1 << (c % 64);
        }
        while let Some(lead) = bits
            .iter()
            .position(|&w| w != 0)
            .map(|i| i * 64 + bits[i].trailing_zeros() as usize)
        {
            match pivots.get(&lead) {
                Some(p) => bits.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots.insert(lead, bits);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn rank_fp(rows: &[Vec<(usize, bool)>], p: u32) -> usize {
    let p = p as u64;
    let inv = |a: u64| -> u64 {
        let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut pivots: HashMap<usize, BTreeMap<usize, u64>> = HashMap::new();
    for row in rows {
        let mut r: BTreeMap<usize, u64> = row
            .iter()
            .map(|&(c, neg)| (c, if neg { p - 1 } else { 1 }))
            .collect();
        while let Some((&lead, &a)) = r.iter().next() {
            match pivots.get(&lead) {
                Some(prow) => {
                    // prow is normalized to a leading 1
                    for (&c, &v) in prow {
                        let e = r.entry(c).or_insert(0);
                        *e = (*e + p - a * v % p) % p;
                        if *e == 0 {
                            r.remove(&c);
                        }
                    }
                }
                None => {
                    let s = inv(a);
                    r.values_mut().for_each(|v| *v = *v * s % p);
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Integral diagonalization by unimodular row and column operations.
/// Returns the absolute values of the nonzero diagonal entries.
fn integer_diagonal(rows: &[Vec<(usize, bool)>], ncols: usize) -> Vec<BigInt> {
    let mut m: Vec<BTreeMap<usize, BigInt>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&(c, neg)| (c, if neg { -BigInt::one() } else { BigInt::one() }))
                .collect()
        })
        .collect();
    let mut cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (i, r) in m.iter().enumerate() {
        for &c in r.keys() {
            cols[c].insert(i);
        }
    }
    let mut live: BTreeSet<usize> = (0..m.len()).filter(|&i| !m[i].is_empty()).collect();
    let mut diag = Vec::new();

    // row_i -= q * row_r
    fn row_sub(
        m: &mut [BTreeMap<usize, BigInt>],
        cols: &mut [BTreeSet<usize>],
        i: usize,
        r: usize,
        q: &BigInt,
    ) {
        let src: Vec<(usize, BigInt)> = m[r].iter().map(|(c, v)| (*c, v.clone())).collect();
        for (c, v) in src {
            let e = m[i].entry(c).or_insert_with(BigInt::zero);
            *e -= q * v;
            if e.is_zero() {
                m[i].remove(&c);
                cols[c].remove(&i);
            } else {
                cols[c].insert(i);
            }
        }
    }

    loop {
        let mut best: Option<(usize, usize)> = None;
        'scan: for &i in &live {
            for (&c, v) in &m[i] {
                if best.is_none_or(|(bi, bc)| v.abs() < m[bi][&bc].abs()) {
                    best = Some((i, c));
                    if v.abs().is_one() {
                        break 'scan;
                    }
                }
            }
        }
        let Some((mut r, mut c)) = best else { break };
        loop {
            let piv = m[r][&c].clone();
            let others: Vec<usize> = cols[c].iter().copied().filter(|&i| i != r).collect();
            for i in others {
                let q = m[i][&c].div_floor(&piv);
                row_sub(&mut m, &mut cols, i, r, &q);
            }
            if let Some(i) = cols[c].iter().copied().find(|&i| i != r) {
                r = i;
                continue;
            }
            // Column c is clear apart from the pivot, so column operations touch row r only.
            let rest: Vec<usize> = m[r].keys().copied().filter(|&j| j != c).collect();
            let mut smaller = None;
            for j in rest {
                let rem = m[r][&j].mod_floor(&piv);
                if rem.is_zero() {
                    m[r].remove(&j);
                    cols[j].remove(&r);
                } else {
                    m[r].insert(j, rem.clone());
                    if smaller
                        .as_ref()
                        .is_none_or(|(_, s): &(usize, BigInt)| rem.abs() < s.abs())
                    {
                        smaller = Some((j, rem));
                    }
                }
            }
            match smaller {
                Some((j, _)) => c = j,
                None => break,
            }
        }
        diag.push(m[r][&c].abs());
        m[r].clear();
        cols[c].remove(&r);
        live.remove(&r);
    }
    diag
}

fn betti_of(complex: &SimplicialComplex, coeff: Coefficients) -> Result<BettiVector> {
    let table = complex.faces()?;
    let f: Vec<u64> = table.by_size.iter().map(|l| l.len() as u64).collect();
    let mut ranks = Vec::new();
    let mut torsion = false;
    for k in 1..table.by_size.len() {
        let rows = boundary_rows(&table.by_size[k - 1], &table.by_size[k]);
        let ncols = table.by_size[k - 1].len();
        let rank = match coeff {
            Coefficients::F2 => rank_f2(&rows, ncols),
            Coefficients::Fp(p) => rank_fp(&rows, p),
            Coefficients::Q => {
                let d = integer_diagonal(&rows, ncols);
                torsion |= d.iter().any(|x| !x.is_one());
                d.len()
            }
        };
        ranks.push(rank);
    }
    let r = |k: usize| ranks.get(k).copied().unwrap_or(0);
    let betti = (0..f.len())
        .map(|k| f[k] as usize - r(k) - if k == 0 { 0 } else { r(k - 1) })
        .collect();
    Ok(BettiVector {
        coeff,
        betti,
        boundary_ranks: ranks,
        f,
        torsion: (coeff == Coefficients::Q).then_some(torsion),
    })
}

impl SimplicialComplex {
    /// Reduced homology ranks over `coeff`.
    pub fn reduced_homology(&self, coeff: Coefficients) -> Result<BettiVector> {
        betti_of(self, coeff)
    }

    /// All faces with their links, processed in parallel and reported in face order.
    fn all_links<T: Send>(
        &self,
        f: impl Fn(&SimplicialComplex) -> Result<T> + Sync,
    ) -> Result<Vec<T>> {
        let table = self.faces()?;
        let faces: Vec<Face> = table.iter().collect();
        faces
            .par_iter()
            .map(|&s| {
                f(&SimplicialComplex::from_parts(
                    self.labels().to_vec(),
                    link_facets(self.facets(), s),
                ))
            })
            .collect()
    }

    /// Every link `lk(σ)`, `σ = ∅` included, has the homology of a sphere of its own dimension.
    pub fn is_homology_sphere(&self, coeff: Coefficients) -> Result<bool> {
        if self.is_void() {
            return Ok(false);
        }
        let ok = self.all_links(|lk| Ok(lk.reduced_homology(coeff)?.is_sphere_of_dim(lk.dim())))?;
        Ok(ok.into_iter().all(|b| b))
    }

    /// Reisner's criterion: every link has vanishing homology below its dimension.
    pub fn is_cohen_macaulay(&self, coeff: Coefficients) -> Result<bool> {
        if self.is_void() {
            return Ok(false);
        }
        let ok = self.all_links(|lk| {
            let b = lk.reduced_homology(coeff)?;
            Ok((-1..lk.dim()).all(|i| b.get(i) == 0))
        })?;
        Ok(ok.into_iter().all(|b| b))
    }

    /// The core (link of the cone points) is a homology sphere.
    pub fn is_gorenstein(&self, coeff: Coefficients) -> Result<bool> {
        if self.is_void() {
            return Ok(false);
        }
        self.core().is_homology_sphere(coeff)
    }

    /// The report bundle used by the command line and the acceptance checks.
    pub fn homology_report(&self, coeff: Coefficients) -> Result<HomologyReport> {
        Ok(HomologyReport {
            coeff,
            betti: self.reduced_homology(coeff)?.betti,
            homology_sphere: self.is_homology_sphere(coeff)?,
            cohen_macaulay: self.is_cohen_macaulay(coeff)?,
            gorenstein: self.is_gorenstein(coeff)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub coeff: Coefficients,
    pub betti: Vec<usize>,
    pub homology_sphere: bool,
    pub cohen_macaulay: bool,
    pub gorenstein: bool,
}
