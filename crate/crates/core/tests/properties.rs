use flagsphere::enumerative::{f_from_h, gamma_from_h, h_from_f, Polynomial};
use flagsphere::{Graph, SimplicialComplex, VSet};
use num_bigint::BigInt;
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges((0..n).map(|i| format!("v{i}")), edges).unwrap()
}

fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.35), n * (n - 1) / 2)
            .prop_map(move |b| graph_from_bits(n, &b))
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graphs(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// Induced subgraph on `s` is a single cycle.
fn is_induced_cycle(g: &Graph, s: VSet) -> bool {
    let h = g.induced_on(s);
    h.n() >= 3 && h.is_connected() && (0..h.n()).all(|v| h.degree(v) == 2)
}

fn brute_ternary(g: &Graph) -> bool {
    g.all_vertices()
        .subsets()
        .all(|s| s.len() % 3 != 0 || !is_induced_cycle(g, s))
}

fn brute_alpha(g: &Graph) -> usize {
    g.all_vertices()
        .subsets()
        .filter(|&s| g.is_independent(s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_form_ignores_vertex_order((g, perm) in graph_with_perm(9)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(g.canonical_form(), h.canonical_form());
        let iso = g.isomorphism_to(&h).expect("permuted graphs are isomorphic");
        prop_assert!(iso.verify(&g, &h));
        let (a, b) = (SimplicialComplex::independence_complex(&g), SimplicialComplex::independence_complex(&h));
        prop_assert_eq!(a.canonical_form(), b.canonical_form());
    }

    #[test]
    fn canonical_form_separates_edge_counts(g in graphs(8)) {
        if let Some((u, v)) = g.complement().edges().first().copied() {
            let h = Graph::from_edges(g.labels().to_vec(), g.edges().into_iter().chain([(u, v)])).unwrap();
            prop_assert_ne!(g.canonical_form(), h.canonical_form());
        }
    }

    #[test]
    fn ternary_matches_brute_force(g in graphs(9)) {
        let v = g.ternary();
        prop_assert_eq!(v.ternary, brute_ternary(&g));
        if let Some(w) = v.witness {
            prop_assert!(w.is_induced_in(&g) && w.len() % 3 == 0);
        }
    }

    #[test]
    fn independence_number_matches_brute_force(g in graphs(9)) {
        prop_assert_eq!(g.independence_number(), brute_alpha(&g));
    }

    #[test]
    fn subdivision_commutes_with_independence_complex(g in graphs(8), pick in any::<prop::sample::Index>()) {
        let non_edges = g.complement().edges();
        prop_assume!(!non_edges.is_empty());
        let (x, y) = non_edges[pick.index(non_edges.len())];
        let (lx, ly) = (g.label(x), g.label(y));
        let via_graph = SimplicialComplex::independence_complex(&g.edge_subdivision(lx, ly, "new").unwrap());
        let via_complex = SimplicialComplex::independence_complex(&g).edge_subdivision(lx, ly, "new").unwrap();
        prop_assert!(via_graph.same_faces(&via_complex));
        prop_assert!(via_complex.is_flag());
    }

    #[test]
    fn link_deletion_star(g in graphs(8)) {
        let d = SimplicialComplex::independence_complex(&g);
        for v in 0..d.n() {
            let lk = d.link(VSet::singleton(v)).unwrap();
            let del = d.deletion(v).unwrap();
            let st = d.star(v).unwrap();
            prop_assert!(lk.same_faces(&del.intersection(&st).unwrap()));
            prop_assert!(st.same_faces(&lk.cone(d.label(v)).unwrap()));
            prop_assert!(d.same_faces(&del.union(&st).unwrap()));
        }
    }

    #[test]
    fn independence_complex_inverts_complement_skeleton(g in graphs(9)) {
        let d = SimplicialComplex::independence_complex(&g);
        let back = d.complement_skeleton_graph().unwrap();
        prop_assert_eq!(back.labels(), g.labels());
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert!(SimplicialComplex::independence_complex(&back).same_faces(&d));
    }

    #[test]
    fn f_and_h_are_inverse(f in proptest::collection::vec(0i64..1000, 1..8)) {
        let f: Vec<BigInt> = f.into_iter().map(BigInt::from).collect();
        let d = f.len() - 1;
        prop_assert_eq!(f_from_h(&h_from_f(&f, d).unwrap()), f);
    }

    #[test]
    fn gamma_round_trip(gamma in proptest::collection::vec(-50i64..50, 1..5), extra in 0usize..2) {
        let d = 2 * (gamma.len() - 1) + extra;
        let one_plus_t = Polynomial::from_i64(&[1, 1]);
        let mut h = Polynomial::zero();
        for (i, &g) in gamma.iter().enumerate() {
            let term = &Polynomial::t().pow(i) * &one_plus_t.pow(d - 2 * i);
            h = &h + &term.scale(&BigInt::from(g));
        }
        let coeffs: Vec<BigInt> = (0..=d).map(|i| h.coeff(i)).collect();
        let want: Vec<BigInt> = gamma.iter().map(|&g| BigInt::from(g)).collect();
        prop_assert_eq!(gamma_from_h(&coeffs).unwrap(), want);
    }
}
