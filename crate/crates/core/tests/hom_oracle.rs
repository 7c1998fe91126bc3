use homgraph::{hom_oracle, hom_structure, Caps, KxyPreset, ModulePresentation};
use proptest::prelude::*;

/// Exponent lists for Z/p^k modules of order at most 64.
fn zmod_module() -> impl Strategy<Value = (u64, u32, Vec<u32>)> {
    (prop_oneof![Just(2u64), Just(3u64)], 1u32..=3).prop_flat_map(|(p, k)| {
        let max_len = if p == 2 { 6 } else { 3 };
        prop::collection::vec(1..=k, 0..=3)
            .prop_filter("order at most 64", move |e| e.iter().sum::<u32>() <= max_len)
            .prop_map(move |e| (p, k, e))
    })
}

fn zmod(p: u64, k: u32, e: &[u32]) -> ModulePresentation {
    ModulePresentation::zmod(p, k, e).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_matches_oracle_over_zmod(a in zmod_module(), b in zmod_module()) {
        let (p, k, ea) = a;
        let eb: Vec<u32> = b.2.iter().map(|&x| x.min(k)).collect();
        let ma = zmod(p, k, &ea);
        let mb = zmod(p, k, &eb);
        prop_assert_eq!(hom_structure(&ma, &mb).unwrap(), hom_oracle(&ma, &mb, &Caps::default()).unwrap());
    }

    #[test]
    fn hom_of_direct_sum_multiplies(a in zmod_module(), a2 in zmod_module(), b in zmod_module()) {
        let (p, k, ea) = a;
        let ea2: Vec<u32> = a2.2.iter().map(|&x| x.min(k)).collect();
        let eb: Vec<u32> = b.2.iter().map(|&x| x.min(k)).collect();
        let sum: Vec<u32> = ea.iter().chain(&ea2).copied().collect();
        let mb = zmod(p, k, &eb);
        let whole = hom_structure(&zmod(p, k, &sum), &mb).unwrap().order().unwrap();
        let left = hom_structure(&zmod(p, k, &ea), &mb).unwrap().order().unwrap();
        let right = hom_structure(&zmod(p, k, &ea2), &mb).unwrap().order().unwrap();
        prop_assert_eq!(whole, left * right);
    }
}

#[test]
fn kxy_presets_agree_pairwise() {
    let caps = Caps::default();
    for p in [2, 3] {
        for a in KxyPreset::ALL {
            for b in KxyPreset::ALL {
                let ma = ModulePresentation::kxy_preset(p, a).unwrap();
                let mb = ModulePresentation::kxy_preset(p, b).unwrap();
                assert_eq!(
                    hom_structure(&ma, &mb).unwrap(),
                    hom_oracle(&ma, &mb, &caps).unwrap(),
                    "p={p}: {} -> {}",
                    a.name(),
                    b.name()
                );
            }
        }
    }
}

#[test]
fn known_hom_groups() {
    let ring_x = ModulePresentation::kxy_preset(2, KxyPreset::QuotX).unwrap();
    let ring_y = ModulePresentation::kxy_preset(2, KxyPreset::QuotY).unwrap();
    assert_eq!(hom_structure(&ring_x, &ring_y).unwrap().invariant_factors, vec![2]);
    let z4 = zmod(2, 2, &[2]);
    let z2 = zmod(2, 2, &[1]);
    assert_eq!(hom_structure(&z4, &z2).unwrap().invariant_factors, vec![2]);
    assert_eq!(hom_structure(&z4, &z4).unwrap().invariant_factors, vec![4]);
    let s1 = ModulePresentation::product_semisimple(2, 1, 0).unwrap();
    let s2 = ModulePresentation::product_semisimple(2, 0, 1).unwrap();
    assert!(hom_structure(&s1, &s2).unwrap().is_zero());
    assert!(hom_oracle(&s1, &s2, &Caps::default()).unwrap().is_zero());
}

#[test]
fn oracle_respects_its_caps() {
    let big = zmod(2, 1, &[1; 7]);
    let caps = Caps { max_oracle_order: 64, ..Caps::default() };
    let err = hom_oracle(&big, &big, &caps).unwrap_err();
    assert!(err.is_resource_limit(), "{err}");
}
