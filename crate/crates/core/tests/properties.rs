use parabolic_ideals::tabulate::superset_sums;
use parabolic_ideals::{ParabolicMask, Poset, RootSet, RootSystem, SimpleType};
use proptest::prelude::*;

fn e7() -> (RootSystem, Poset) {
    let rs = RootSystem::build(SimpleType::E7).unwrap();
    let p = Poset::new(&rs);
    (rs, p)
}

proptest! {
    #[test]
    fn minimal_elements_form_antichain_generating_same_filter(lo in any::<u64>(), hi in any::<u64>()) {
        let (rs, p) = e7();
        let s = RootSet::from_bits(rs.len(), u128::from(hi) << 64 | u128::from(lo));
        let min = p.minimal_elements(s);
        prop_assert!(p.is_antichain(min));
        prop_assert!(min.is_subset(&s));
        let up = p.upward_closure(s);
        prop_assert!(p.is_filter(up));
        prop_assert_eq!(p.upward_closure(min), up);
        prop_assert_eq!(p.minimal_elements(up), min);
    }

    #[test]
    fn antichain_check_matches_pairwise(bits in any::<u64>()) {
        let rs = RootSystem::build(SimpleType::E6).unwrap();
        let p = Poset::new(&rs);
        let s = RootSet::from_bits(rs.len(), u128::from(bits));
        let members: Vec<usize> = s.iter().collect();
        let pairwise = members.iter().enumerate().all(|(k, &i)| {
            members[k + 1..].iter().all(|&j| !p.comparable(i, j))
        });
        prop_assert_eq!(p.is_antichain(s), pairwise);
    }

    #[test]
    fn superset_sums_are_sums_over_supersets(xs in prop::collection::vec(0u32..1000, 64)) {
        let mut fast = xs.clone();
        superset_sums(&mut fast);
        for (m, &got) in fast.iter().enumerate() {
            let direct: u32 = (0..64).filter(|s| s & m == m).map(|s| xs[s]).sum();
            prop_assert_eq!(got, direct);
        }
    }

    #[test]
    fn mask_numbers_round_trip(bits in 0u16..256) {
        let m = ParabolicMask::from_bits(8, bits);
        let back = ParabolicMask::from_simple_numbers(8, &m.simple_numbers()).unwrap();
        prop_assert_eq!(back, m);
    }
}
