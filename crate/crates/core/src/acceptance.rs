//! The acceptance suite: eleven criteria, each reported as one pass/fail line.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::construct::example_result;
use crate::enumerative::{
    certify_negative_real_roots, delannoy_poly, f_recursive, f_vector, float_root_discrepancy,
    gamma_from_h, h_from_f, join_multiplicativity_check, Polynomial,
};
use crate::error::Result;
use crate::families::{
    apply_subdivisions, build_gm, build_gm_union, build_r3, classify_in, crosspolytope_boundary,
    cycle_structure, gm_subdivision_sequence, residue_failures,
};
use crate::flip::{partitions, verify_iso_h_p};
use crate::graph::{Graph, KuratowskiKind};
use crate::homology::Coefficients;

/// Companion-matrix roots must match the exact roots to this relative tolerance.
pub const FLOAT_ROOT_TOLERANCE: f64 = 1e-8;

pub const CRITERIA: [&str; 11] = [
    "Delannoy identity",
    "face recursion",
    "homology spheres",
    "ternary certification",
    "crosspolytope pipeline",
    "flip graph",
    "nonplanar example",
    "real roots",
    "vertex decomposability",
    "structural oracles",
    "property suites",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{tag}] {:>2} {}: {} ({:.2}s)",
            self.id, self.name, self.detail, self.seconds
        )
    }
}

/// Run one criterion, `1..=11`.
pub fn run_criterion(id: usize) -> CriterionResult {
    let start = Instant::now();
    let outcome = match id {
        1 => delannoy_identity(),
        2 => face_recursion(),
        3 => homology_spheres(),
        4 => ternary_certification(),
        5 => crosspolytope_pipeline(),
        6 => flip_graph(),
        7 => nonplanar_example(),
        8 => real_roots(),
        9 => vertex_decomposability(),
        10 => structural_oracles(),
        11 => property_suites(),
        _ => panic!("criteria are numbered 1 to 11"),
    };
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    CriterionResult {
        id,
        name: CRITERIA[id - 1],
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=CRITERIA.len()).map(run_criterion).collect()
}

type Outcome = Result<(bool, String)>;

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn gm_h(m: usize) -> Result<Vec<BigInt>> {
    let f = f_vector(&SimplicialComplex::independence_complex(&build_gm(m)?))?;
    h_from_f(&f, m)
}

fn delannoy_identity() -> Outcome {
    let mut bad = Vec::new();
    for m in 1..=7 {
        if Polynomial::new(gm_h(m)?) != delannoy_poly(m) {
            bad.push(m);
        }
    }
    let anchors = [
        (1, &[1, 1][..]),
        (2, &[1, 3, 1]),
        (3, &[1, 5, 5, 1]),
        (4, &[1, 7, 13, 7, 1]),
    ];
    for (m, want) in anchors {
        if gm_h(m)? != ints(want) {
            bad.push(m);
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "h(Ind G_m) = d(m,·) for m = 1..7".into()
        } else {
            format!("mismatch at m = {bad:?}")
        },
    ))
}

fn face_recursion() -> Outcome {
    let brute: Vec<Vec<BigInt>> = (1..=8)
        .map(|m| f_vector(&SimplicialComplex::independence_complex(&build_gm(m)?)))
        .collect::<Result<_>>()?;
    // f(m, i) for i ≥ -1; zero outside the table.
    let f = |m: usize, i: i64| -> BigInt {
        if m == 0 {
            return BigInt::from((i == -1) as i64);
        }
        usize::try_from(i + 1)
            .ok()
            .and_then(|j| brute[m - 1].get(j).cloned())
            .unwrap_or_default()
    };
    let mut bad = Vec::new();
    for m in 3..=8 {
        for i in -1..m as i64 {
            let rhs =
                BigInt::from(2) * f(m - 1, i - 1) + f(m - 1, i) + f(m - 2, i - 2) + f(m - 2, i - 1);
            if f(m, i) != rhs {
                bad.push(format!("recursion m={m} i={i}"));
            }
        }
    }
    for m in 2..=8i64 {
        let mu = m as usize;
        if f(mu, 0) != BigInt::from(3 * m - 1)
            || f(mu, 1) != BigInt::from((9 * m * m - 19 * m + 12) / 2)
        {
            bad.push(format!("closed form m={m}"));
        }
    }
    for m in 1..=8 {
        if f_recursive(m)? != brute[m - 1] {
            bad.push(format!("f_recursive m={m}"));
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "recursion 3 ≤ m ≤ 8, closed forms 2 ≤ m ≤ 8".into()
        } else {
            bad.join("; ")
        },
    ))
}

fn homology_spheres() -> Outcome {
    let mut bad = Vec::new();
    for m in 1..=6 {
        let d = SimplicialComplex::independence_complex(&build_gm(m)?);
        for coeff in [Coefficients::F2, Coefficients::Q] {
            let b = d.reduced_homology(coeff)?;
            if !b.is_sphere_of_dim(m as isize - 1) || !d.is_homology_sphere(coeff)? {
                bad.push(format!("m={m} {coeff}: not a sphere"));
            }
            if !d.is_cohen_macaulay(coeff)? || !d.is_gorenstein(coeff)? {
                bad.push(format!("m={m} {coeff}: not Cohen–Macaulay/Gorenstein"));
            }
            if b.torsion == Some(true) {
                bad.push(format!("m={m}: torsion"));
            }
        }
        let pm = d.pseudomanifold();
        if !(pm.pseudomanifold && pm.boundary.is_empty()) {
            bad.push(format!("m={m}: not a closed pseudomanifold"));
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "m = 1..6 over F2 and Q".into()
        } else {
            bad.join("; ")
        },
    ))
}

fn ternary_certification() -> Outcome {
    let mut bad = Vec::new();
    for m in 1..=8 {
        if !build_gm(m)?.is_ternary() {
            bad.push(format!("G_{m} not ternary"));
        }
    }
    let r3 = build_r3();
    let v = r3.ternary();
    let triangle = v
        .witness
        .as_ref()
        .is_some_and(|w| w.len() == 3 && w.is_induced_in(&r3));
    if v.ternary || !triangle {
        bad.push("R_3 lacks a triangle witness".into());
    }
    for m in 1..=8 {
        let s = cycle_structure(&build_gm(m)?);
        if !s.no_six_cycles {
            bad.push(format!("G_{m} has a 6-cycle"));
        }
        if m <= 7 && !(s.four_cycles_edge_disjoint && s.four_five_meet_in_two_path) {
            bad.push(format!("G_{m} 4/5-cycle structure"));
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "G_m ternary m ≤ 8, R_3 triangle, cycle structure".into()
        } else {
            bad.join("; ")
        },
    ))
}

fn crosspolytope_pipeline() -> Outcome {
    let mut bad = Vec::new();
    for m in 2..=6 {
        let d = apply_subdivisions(&crosspolytope_boundary(m)?, &gm_subdivision_sequence(m))?;
        let g = d.complement_skeleton_graph()?;
        let gm = build_gm(m)?;
        if !g.isomorphism_to(&gm).is_some_and(|iso| iso.verify(&g, &gm)) {
            bad.push(m);
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "isomorphism witnesses for m = 2..6".into()
        } else {
            format!("failed at m = {bad:?}")
        },
    ))
}

fn flip_graph() -> Outcome {
    let mut bad = Vec::new();
    let mut counts = Vec::new();
    for n in 2..=6 {
        let r = verify_iso_h_p(n)?;
        counts.push(r.vertices);
        if !r.passed() {
            bad.push(format!("n={n}: {:?}", r.audit));
        }
        if n == 4 {
            let name = |i: usize| r.h.vertices[i].partition.to_string();
            let mut got: Vec<(String, String)> =
                r.h.edges.iter().map(|e| (name(e.u), name(e.v))).collect();
            got.sort();
            let mut want: Vec<(String, String)> = [
                ("4", "3+1"),
                ("4", "2+2"),
                ("3+1", "2+1+1"),
                ("2+2", "2+1+1"),
                ("2+1+1", "1+1+1+1"),
            ]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
            want.sort();
            if got != want {
                bad.push(format!("n=4 edges {got:?}"));
            }
        }
    }
    if counts != [2, 3, 5, 7, 11] {
        bad.push(format!("vertex counts {counts:?}"));
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            format!("H ≅ P_n for n = 2..6, vertices {counts:?}")
        } else {
            bad.join("; ")
        },
    ))
}

fn nonplanar_example() -> Outcome {
    let s = example_result()?;
    let g = s.graph();
    let mut bad = Vec::new();
    if g.n() != 17 {
        bad.push(format!("{} vertices", g.n()));
    }
    if !g.is_ternary() {
        bad.push("not ternary".into());
    }
    if g.is_planar() {
        bad.push("planar".into());
    }
    let keep = ["6", "7", "8", "9", "10", "21", "22"];
    let sub = g.induced_subgraph(&keep)?;
    match sub.kuratowski_witness() {
        Some(w) if w.verify(&sub) => {
            // The same branch vertices and paths, read in the full graph.
            let lift = |v: usize| g.index_of(sub.label(v)).expect("subgraph labels exist");
            let lifted = crate::graph::KuratowskiWitness {
                kind: w.kind,
                branch: w.branch.iter().map(|&v| lift(v)).collect(),
                paths: w
                    .paths
                    .iter()
                    .map(|p| p.iter().map(|&v| lift(v)).collect())
                    .collect(),
            };
            if w.kind != KuratowskiKind::K33 || !lifted.verify(g) {
                bad.push("witness on {6,..,10,21,22} is not a K_{3,3} subdivision of G²".into());
            }
        }
        _ => bad.push("no Kuratowski witness on {6,..,10,21,22}".into()),
    }
    let alpha = g.independence_number();
    if alpha != 6 {
        bad.push(format!("α = {alpha}"));
    }
    let d = SimplicialComplex::independence_complex(g);
    if !d.is_gorenstein(Coefficients::F2)?
        || !d.is_homology_sphere(Coefficients::F2)?
        || d.dim() != 5
    {
        bad.push("Ind is not a homology 5-sphere".into());
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "17 vertices, ternary, K_{3,3} on {6..10,21,22}, homology 5-sphere, α = 6".into()
        } else {
            bad.join("; ")
        },
    ))
}

fn real_roots() -> Outcome {
    let mut bad = Vec::new();
    let mut worst = 0.0f64;
    for m in 1..=10 {
        let p = delannoy_poly(m);
        let c = certify_negative_real_roots(&p)?;
        if !c.certified || c.negative_roots != m {
            bad.push(format!("d_{m} not certified"));
        }
        match float_root_discrepancy(&p) {
            Some(e) if e <= FLOAT_ROOT_TOLERANCE => worst = worst.max(e),
            other => bad.push(format!("d_{m} float check {other:?}")),
        }
    }
    let f = f_vector(&SimplicialComplex::independence_complex(&build_r3()))?;
    let h = Polynomial::new(h_from_f(&f, 2)?);
    if h != Polynomial::from_i64(&[1, 4, 1]) || !certify_negative_real_roots(&h)?.certified {
        bad.push(format!("R_3 h-polynomial {h}"));
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            format!("d_1..d_10 and 1+4t+t² certified; float discrepancy {worst:.1e}")
        } else {
            bad.join("; ")
        },
    ))
}

fn vertex_decomposability() -> Outcome {
    let bad: Vec<usize> = (1..=5)
        .filter(|&m| {
            !SimplicialComplex::independence_complex(&build_gm(m).expect("m ≥ 1"))
                .is_vertex_decomposable()
        })
        .collect();
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "Ind(G_m) for m = 1..5".into()
        } else {
            format!("failed at m = {bad:?}")
        },
    ))
}

fn structural_oracles() -> Outcome {
    let mut bad = Vec::new();
    let mut sets = 0;
    for m in 1..=6 {
        let g = build_gm(m)?;
        let mut err = None;
        g.for_each_independent_set(|s| {
            sets += 1;
            match classify_in(&g, m, s) {
                Ok(c) if c.predicted_maximal && !c.maximal => {
                    err = Some(format!("m={m}: maximality predicted wrongly"))
                }
                Ok(c) if c.matches.iter().filter(|&&b| b).count() != 1 => {
                    err = Some(format!("m={m}: not exclusive"))
                }
                Ok(_) => {}
                Err(e) => err = Some(format!("m={m}: {e}")),
            }
        });
        bad.extend(err);
        if !g.is_one_well_covered() {
            bad.push(format!("G_{m} not 1-well-covered"));
        }
    }
    for m in 1..=7 {
        let f = residue_failures(&build_gm(m)?);
        if !f.is_empty() {
            bad.push(format!("G_{m} residue paths missing for {:?}", f[0]));
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            format!("{sets} independent sets classified, residue paths m ≤ 7, W_2 m ≤ 6")
        } else {
            bad.join("; ")
        },
    ))
}

/// Disjoint unions of `G_m`'s and `R_3`'s whose independence complexes are spheres.
fn sphere_corpus() -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for n in 1..=5 {
        for p in partitions(n)? {
            out.push((format!("G[{p}]"), p.graph()?));
        }
    }
    let r3 = build_r3();
    out.push(("R_3".into(), r3.clone()));
    out.push((
        "R_3 + G_2".into(),
        Graph::disjoint_union(&[r3.clone(), build_gm(2)?])?,
    ));
    out.push((
        "R_3 + R_3".into(),
        Graph::disjoint_union(&[r3.clone(), r3])?,
    ));
    out.push(("example".into(), example_result()?.graph().clone()));
    Ok(out)
}

fn property_suites() -> Outcome {
    let mut bad = Vec::new();

    // Join multiplicativity.
    let ind = |g: &Graph| SimplicialComplex::independence_complex(g);
    let g1 = ind(&build_gm(1)?.relabeled(|_, l| format!("x{l}"))?);
    let g2 = ind(&build_gm(2)?);
    if !join_multiplicativity_check(&g1, &g2)?
        || !join_multiplicativity_check(&g2, &SimplicialComplex::empty_complex())?
    {
        bad.push("join multiplicativity".into());
    }
    let f = f_vector(&ind(&build_gm_union(&[2, 2])?))?;
    if h_from_f(&f, 4)? != ints(&[1, 6, 11, 6, 1]) {
        bad.push("h(Ind(G_2 ⊔ G_2))".into());
    }

    // Link, deletion and star.
    let complexes = [
        ind(&build_gm(3)?),
        ind(&build_r3()),
        crosspolytope_boundary(3)?,
        ind(&build_gm_union(&[1, 2])?),
    ];
    for d in &complexes {
        for v in 0..d.n() {
            let (lk, del, st) = (
                d.link(crate::bitset::VSet::singleton(v))?,
                d.deletion(v)?,
                d.star(v)?,
            );
            if !lk.same_faces(&del.intersection(&st)?) || !st.same_faces(&lk.cone(d.label(v))?) {
                bad.push(format!("lk/del/star at {}", d.label(v)));
            }
            if !del.union(&st)?.same_faces(d) {
                bad.push(format!("del ∪ star at {}", d.label(v)));
            }
        }
    }

    // Independence complex and complement skeleton are inverse.
    for m in 1..=5 {
        let g = build_gm(m)?;
        let back = ind(&g).complement_skeleton_graph()?;
        if back.edge_count() != g.edge_count()
            || back.labels() != g.labels()
            || back.edges() != g.edges()
        {
            bad.push(format!("complement skeleton of Ind(G_{m})"));
        }
    }
    let cp = crosspolytope_boundary(4)?;
    if !ind(&cp.complement_skeleton_graph()?).same_faces(&cp) {
        bad.push("Ind of the crosspolytope's complement skeleton".into());
    }

    // Subdivision then contraction returns the complex.
    for m in 2..=4 {
        let d = ind(&build_gm(m)?);
        let g = build_gm(m)?;
        for (x, y) in g.complement().edges() {
            let (lx, ly) = (g.label(x), g.label(y));
            let s = d.edge_subdivision(lx, ly, "new")?;
            if !s.is_flag() || !s.edge_contraction(lx, "new")?.same_faces(&d) {
                bad.push(format!("round trip at {lx}{ly} in G_{m}"));
            }
        }
    }

    // Dehn–Sommerville and γ-nonnegativity on certified spheres.
    let corpus = sphere_corpus()?;
    let mut spheres = 0;
    for (name, g) in &corpus {
        let d = ind(g);
        if !d.is_homology_sphere(Coefficients::F2)? {
            bad.push(format!("{name} not a sphere"));
            continue;
        }
        spheres += 1;
        let f = f_vector(&d)?;
        let h = h_from_f(&f, f.len() - 1)?;
        match gamma_from_h(&h) {
            Ok(gamma) if gamma.iter().all(|x| !x.is_negative()) => {}
            Ok(gamma) => bad.push(format!("{name}: γ = {gamma:?}")),
            Err(e) => bad.push(format!("{name}: {e}")),
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            format!("joins, lk/del/star, Ind ↔ skeleton, round trips, {spheres} spheres γ ≥ 0")
        } else {
            bad.join("; ")
        },
    ))
}
