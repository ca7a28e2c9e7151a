use flagsphere::construct::ConstructionState;
use flagsphere::enumerative::{
    certify_negative_real_roots, delannoy_big_d, delannoy_poly, delannoy_small_d, f_recursive,
    f_vector, gm_h_polynomial, h_recurrence_check, Polynomial,
};
use flagsphere::families::{build_gm, build_gm_union, crosspolytope_boundary};
use flagsphere::flip::{verify_iso_h_p_with, SearchMode};
use flagsphere::homology::Coefficients;
use flagsphere::SimplicialComplex;
use num_bigint::BigInt;

fn big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn ind_gm(m: usize) -> SimplicialComplex {
    SimplicialComplex::independence_complex(&build_gm(m).unwrap())
}

#[test]
fn face_numbers() {
    assert_eq!(f_vector(&ind_gm(2)).unwrap(), big(&[1, 5, 5]));
    let f3 = f_vector(&ind_gm(3)).unwrap();
    assert_eq!(
        (f3[1].clone(), f3[2].clone()),
        (BigInt::from(8), BigInt::from(18))
    );
    for m in 1..=6u64 {
        let f = f_vector(&crosspolytope_boundary(m as usize).unwrap()).unwrap();
        let mut binom = 1u64;
        for i in 0..=m {
            assert_eq!(f[i as usize], BigInt::from((1u64 << i) * binom));
            binom = binom * (m - i) / (i + 1);
        }
    }
    assert_eq!(f_recursive(4).unwrap()[1], BigInt::from(11));
    assert_eq!(f_recursive(2).unwrap()[2], BigInt::from(5));
    assert!(f_recursive(0).is_err());
}

#[test]
fn h_polynomials() {
    for m in 3..=8 {
        assert!(h_recurrence_check(m).unwrap());
    }
    for m in 1..=8 {
        assert_eq!(gm_h_polynomial(m).unwrap().degree(), Some(m));
    }
    assert_eq!(
        gm_h_polynomial(5).unwrap(),
        Polynomial::from_i64(&[1, 9, 25, 25, 9, 1])
    );
    for m in 0..=12 {
        for k in 0..=m {
            assert_eq!(delannoy_small_d(m, k).unwrap(), delannoy_big_d(m - k, k));
        }
    }
}

#[test]
fn delannoy_roots() {
    for m in 1..=10 {
        let c = certify_negative_real_roots(&delannoy_poly(m)).unwrap();
        assert!(c.certified);
        assert_eq!(c.isolating_intervals.len(), m);
    }
    assert!(
        !certify_negative_real_roots(&Polynomial::from_i64(&[1, 1, 1]))
            .unwrap()
            .certified
    );
}

#[test]
fn spheres_and_cones() {
    let d = SimplicialComplex::independence_complex(&build_gm_union(&[2, 1]).unwrap());
    assert!(d.is_homology_sphere(Coefficients::Q).unwrap());
    let with_isolated = flagsphere::Graph::disjoint_union(&[
        build_gm(2).unwrap(),
        flagsphere::Graph::edgeless(["z"]).unwrap(),
    ])
    .unwrap();
    let cone = SimplicialComplex::independence_complex(&with_isolated);
    assert!(!cone.is_homology_sphere(Coefficients::F2).unwrap());
    assert!(cone.is_gorenstein(Coefficients::F2).unwrap());
    for m in 1..=5 {
        assert!(ind_gm(m).is_vertex_decomposable());
    }
}

#[test]
fn exhaustive_flip_search() {
    for n in 2..=5 {
        let r = verify_iso_h_p_with(n, SearchMode::Exhaustive).unwrap();
        assert!(r.passed(), "{:?}", r.audit);
        assert_eq!(r.audit.high_degree_planar_ternary, 0);
        assert_eq!(r.audit.same_component_hits, 0);
        assert!(r.audit.split_pairs.is_empty());
    }
}

#[test]
fn construction_steps_preserve_alpha() {
    let s = ConstructionState::start(&[2, 3, 1]).unwrap();
    let t = s.step("0:a_1", "1:a_3", None).unwrap();
    assert!(t.nonplanarity_predictor());
    assert_eq!(t.graph().independence_number(), 6);
    let u = t.step("1:b_1", "2:a_1", None).unwrap();
    assert_eq!(u.graph().independence_number(), 6);
    let r = u.classify().unwrap();
    assert!(!r.planar && r.predictor_agrees && r.w_is_tree);
    assert_eq!(r.homology.gorenstein(), Some(true));
}

#[test]
fn alpha_guard_skips_homology() {
    let s = ConstructionState::start(&[4, 3])
        .unwrap()
        .step("0:b_1", "1:a_1", None)
        .unwrap();
    let r = s.classify().unwrap();
    assert_eq!(r.homology.gorenstein(), None);
    assert!(r.dimension_check && r.planar && r.ternary);
}
