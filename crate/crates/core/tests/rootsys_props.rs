use kr_decomp::rootsys::{inner, RootSystem, RootVector, Weight};
use num_bigint::BigUint;
use proptest::prelude::*;

const NAMES: [&str; 9] = ["A1", "A3", "A5", "D4", "D5", "D7", "E6", "E7", "E8"];

fn algebra() -> impl Strategy<Value = RootSystem> {
    prop::sample::select(NAMES.to_vec()).prop_map(|n| RootSystem::from_name(n).unwrap())
}

fn with_vector(lo: i64, hi: i64) -> impl Strategy<Value = (RootSystem, Vec<i64>)> {
    algebra().prop_flat_map(move |rs| {
        let r = rs.rank();
        (Just(rs), prop::collection::vec(lo..=hi, r))
    })
}

proptest! {
    #[test]
    fn coordinate_round_trip((rs, v) in with_vector(-6, 6)) {
        let root = RootVector::new(v);
        let w = rs.alpha_to_omega(&root);
        prop_assert_eq!(rs.omega_to_root(&w), Some(root.clone()));
        prop_assert_eq!(rs.height_of_weight(&w).unwrap().to_integer(), root.height());
    }

    #[test]
    fn weyl_dimension_grows((rs, v) in with_vector(0, 3), k in 0usize..8) {
        let k = k % rs.rank();
        let w = Weight::new(v);
        let mut bigger = w.coords().to_vec();
        bigger[k] += 1;
        let a: BigUint = rs.weyl_dimension(&w).unwrap();
        let b: BigUint = rs.weyl_dimension(&Weight::new(bigger)).unwrap();
        prop_assert!(b > a);
    }

    #[test]
    fn e6_diagram_symmetry_preserves_dimension(v in prop::collection::vec(0i64..=3, 6)) {
        let rs = RootSystem::from_name("E6").unwrap();
        let w = Weight::new(v.clone());
        let flipped = Weight::new(vec![v[5], v[1], v[4], v[3], v[2], v[0]]);
        let a: u128 = rs.weyl_dimension(&w).unwrap();
        let b: u128 = rs.weyl_dimension(&flipped).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn rho_pairs_to_height() {
    for name in NAMES {
        let rs = RootSystem::from_name(name).unwrap();
        for a in rs.positive_roots() {
            assert_eq!(inner(&rs.rho(), a), a.height(), "{name} {a}");
        }
        let n = rs.positive_roots().len();
        assert_eq!(n, RootSystem::expected_positive_root_count(rs.id()));
        let dim: u64 = rs.weyl_dimension(&Weight::zero(rs.rank())).unwrap();
        assert_eq!(dim, 1);
    }
}

#[test]
fn dominant_weights_below_is_closed() {
    for (name, w) in [("D5", vec![0, 2, 0, 0, 0]), ("E6", vec![0, 0, 0, 1, 0, 0]), ("A4", vec![2, 0, 1, 0])] {
        let rs = RootSystem::from_name(name).unwrap();
        let top = Weight::new(w);
        let below = rs.dominant_weights_below(&top).unwrap();
        assert!(below.windows(2).all(|p| p[0] < p[1]));
        for mu in &below {
            assert!(mu.is_dominant());
            let diff = rs.omega_to_root(&top.sub(mu)).expect("same coset");
            assert!(diff.coords().iter().all(|&c| c >= 0));
            for a in rs.positive_roots() {
                let nu = mu.sub(&rs.alpha_to_omega(a));
                if nu.is_dominant() {
                    assert!(below.binary_search(&nu).is_ok(), "{name}: {nu} missing below {mu}");
                }
            }
        }
    }
}
