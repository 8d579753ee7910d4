use gm_core::decider::{check_homeomorphic, check_profinite_iso, Verdict};
use gm_core::fixtures;
use gm_core::genus::{construct_scaled, profinite_genus, RigidityReason};
use gm_core::invariants::{all_slopes_zero, bipartition, twist_move, TwistTarget};
use gm_core::kappa::units;
use gm_core::model::{validate, vertex_signature, EndSide};
use gm_core::sample::{random_zero_slope, SampleParams};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scaling_preserves_structure(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let m = random_zero_slope(&mut r, SampleParams { max_vertices: 3, ..SampleParams::default() });
        let bip = bipartition(&m).unwrap();
        let modulus = m.modulus().to_u64().unwrap();
        let us = units(modulus);
        let kappa = us[pick.index(us.len())];
        let n = construct_scaled(&m, kappa, &bip).unwrap();
        prop_assert!(validate(&n).ok);
        prop_assert!(all_slopes_zero(&n));
        for v in m.vertices.keys() {
            prop_assert_eq!(vertex_signature(&m, v), vertex_signature(&n, v));
        }
        prop_assert!(n.edges.iter().all(|e| e.matrix.det() == BigInt::from(-1)));
        prop_assert!(!check_profinite_iso(&m, &n).unwrap().is_distinct());
    }
}

#[test]
fn w1_genus() {
    let g = profinite_genus(&fixtures::w1()).unwrap();
    assert_eq!(g.representatives.len(), 2);
    assert!(!g.rigid);
    assert_eq!(g.representatives[0], fixtures::w1());
    assert!(check_homeomorphic(&g.representatives[1], &fixtures::n2()).is_some());
    assert!(check_homeomorphic(&g.representatives[0], &g.representatives[1]).is_none());
}

#[test]
fn genus_is_a_homeomorphism_invariant() {
    let w1 = fixtures::w1();
    let end = TwistTarget::EdgeEnd { edge: "e".into(), side: EndSide::To };
    let t = twist_move(&w1, "y", &TwistTarget::Cone(1), &end, &BigInt::from(2)).unwrap();
    let a = profinite_genus(&w1).unwrap().representatives;
    let b = profinite_genus(&t).unwrap().representatives;
    assert_eq!(a.len(), b.len());
    for x in &a {
        assert_eq!(b.iter().filter(|y| check_homeomorphic(x, y).is_some()).count(), 1);
    }
}

#[test]
fn dedup_agrees_with_pairwise_verdicts() {
    let w1 = fixtures::w1();
    let bip = bipartition(&w1).unwrap();
    let scaled: Vec<_> = units(5).into_iter().map(|k| construct_scaled(&w1, k, &bip).unwrap()).collect();
    for a in &scaled {
        for b in &scaled {
            assert!(matches!(
                check_profinite_iso(a, b),
                Ok(Verdict::Homeomorphic(_)) | Ok(Verdict::Equivalent(_))
            ));
        }
    }
}

#[test]
fn rigid_fixtures() {
    for (m, reason) in [
        (fixtures::tri(), RigidityReason::NonBipartite),
        (fixtures::min(), RigidityReason::MinorPiece),
        (fixtures::order_two(), RigidityReason::TrivialUnitGroup),
    ] {
        let g = profinite_genus(&m).unwrap();
        assert_eq!(g.representatives.len(), 1);
        assert!(g.rigid);
        assert_eq!(g.reason, reason);
    }
}
