use kr_decomp::rootsys::RootSystem;
use kr_decomp::tree::build_tree;
use num_bigint::BigUint;

#[test]
fn e7_node4_level3_has_836_components() {
    let rs = RootSystem::from_name("E7").unwrap();
    let t = build_tree::<BigUint>(&rs, 4, 3).unwrap();
    println!("nodes {} total multiplicity {} distinct {}", t.node_count(), t.total_multiplicity().unwrap(), t.aggregate().len());
    assert_eq!(t.node_count(), 836);
}
