use peres_core::proofs::{automorphism_order, for_each_automorphism, is_automorphism};

#[test]
fn symmetry_group_has_1152_elements() {
    assert_eq!(automorphism_order(), 1152);
}

#[test]
fn automorphisms_compose() {
    let mut found = Vec::new();
    for_each_automorphism(|p| {
        if found.len() < 12 {
            found.push(*p)
        }
    });
    for a in &found {
        for b in &found {
            let composed = std::array::from_fn(|i| a[b[i].index()]);
            assert!(is_automorphism(&composed));
        }
    }
}
