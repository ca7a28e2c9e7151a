//! Planarity verdicts checked against their own certificates and, on small graphs,
//! against an exhaustive search over rotation systems.

use flagsphere::Graph;
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = pairs
        .zip(bits)
        .filter(|(_, &b)| b)
        .map(|(e, _)| e)
        .collect();
    Graph::from_edges((0..n).map(|i| i.to_string()), edges).unwrap()
}

/// Number of faces traced by a rotation system, given as neighbour cycles.
fn face_count(rot: &[Vec<usize>]) -> usize {
    let mut seen = std::collections::HashSet::new();
    let mut faces = 0;
    for u in 0..rot.len() {
        for &v in &rot[u] {
            if seen.contains(&(u, v)) {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                // next dart: around b, the successor of a
                let r = &rot[b];
                let i = r.iter().position(|&x| x == a).unwrap();
                let c = r[(i + 1) % r.len()];
                (a, b) = (b, c);
            }
        }
    }
    faces
}

/// Planar iff some rotation system of each component satisfies Euler's formula.
/// Returns `None` when there are more than `cap` rotation systems.
fn brute_planar(g: &Graph, cap: u64) -> Option<bool> {
    let count: u64 = (0..g.n())
        .map(|v| (1..g.degree(v).max(1) as u64).product::<u64>())
        .product();
    if count > cap {
        return None;
    }
    Some(g.components().into_iter().all(|c| {
        let h = g.induced_on(c);
        if h.edge_count() == 0 {
            return true;
        }
        let nbrs: Vec<Vec<usize>> = (0..h.n())
            .map(|v| h.neighbors(v).iter().collect())
            .collect();
        let mut rot = nbrs.clone();
        search(&h, &nbrs, &mut rot, 0)
    }))
}

fn search(h: &Graph, nbrs: &[Vec<usize>], rot: &mut Vec<Vec<usize>>, v: usize) -> bool {
    if v == h.n() {
        return h.n() + face_count(rot) == h.edge_count() + 2;
    }
    // Fix the first neighbour, permute the rest.
    let rest: Vec<usize> = nbrs[v].iter().skip(1).copied().collect();
    permutations(&rest).into_iter().any(|p| {
        rot[v] = nbrs[v].iter().take(1).copied().chain(p).collect();
        search(h, nbrs, rot, v + 1)
    })
}

fn permutations(xs: &[usize]) -> Vec<Vec<usize>> {
    if xs.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn graphs(max_n: usize, density: f64) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::bool::weighted(density), n * (n - 1) / 2)
            .prop_map(move |b| graph_from_bits(n, &b))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn certificates_are_valid(g in graphs(11, 0.4)) {
        let v = g.planarity();
        if v.planar {
            prop_assert!(v.embedding.unwrap().is_planar_embedding_of(&g));
        } else {
            let w = v.kuratowski.expect("non-planar verdicts carry a witness");
            prop_assert!(w.verify(&g));
        }
    }

    #[test]
    fn agrees_with_rotation_search(g in graphs(7, 0.5)) {
        if let Some(p) = brute_planar(&g, 200_000) {
            prop_assert_eq!(g.is_planar(), p);
        }
    }
}

#[test]
fn rotation_search_knows_the_small_cases() {
    assert_eq!(
        brute_planar(&Graph::complete(4).unwrap(), 1 << 20),
        Some(true)
    );
    assert_eq!(
        brute_planar(&Graph::complete(5).unwrap(), 1 << 20),
        Some(false)
    );
    assert_eq!(
        brute_planar(&Graph::complete_bipartite(3, 3).unwrap(), 1 << 20),
        Some(false)
    );
}

#[test]
fn subdivided_kuratowski_graphs() {
    // K_{3,3} and K_5 with every edge subdivided once.
    for base in [
        Graph::complete_bipartite(3, 3).unwrap(),
        Graph::complete(5).unwrap(),
    ] {
        let mut labels: Vec<String> = base.labels().to_vec();
        let mut edges = Vec::new();
        for (u, v) in base.edges() {
            let m = labels.len();
            labels.push(format!("s{u}_{v}"));
            edges.extend([(u, m), (m, v)]);
        }
        let g = Graph::from_edges(labels, edges).unwrap();
        assert!(!g.is_planar());
        assert!(g.kuratowski_witness().unwrap().verify(&g));
    }
}
