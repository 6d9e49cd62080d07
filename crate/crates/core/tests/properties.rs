use catforge_core::bimodule::{orbit_condition_holds, Side};
use catforge_core::canon::Permutations;
use catforge_core::catalog::order_three;
use catforge_core::engine::construct_all;
use catforge_core::{
    build_grouplike, canonical_form, check_orbit_laws, compute_imax, detect_grouplike, enumerate_bimodules, enumerate_monoids,
    group_orbit, unigen_analyze, validate_bimodule, validate_category, Bimodule, Monoid, Normalization, DEFAULT_BUDGET,
};
use proptest::prelude::*;
use proptest::sample::select;

fn small_monoids() -> Vec<Monoid> {
    (1..=4).flat_map(|n| enumerate_monoids(n).unwrap()).collect()
}

fn small_groups() -> Vec<Monoid> {
    vec![Monoid::trivial(), Monoid::cyclic(2), Monoid::cyclic(3), Monoid::cyclic(4), Monoid::from_rows(&[[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]], 0).unwrap()]
}

/// A random permutation of `0..n` drawn from its index in lexicographic order.
fn nth_permutation(n: usize, k: usize) -> Vec<usize> {
    let all: Vec<Vec<usize>> = Permutations::new(n).collect();
    all[k % all.len()].clone()
}

proptest! {
    #[test]
    fn canonical_form_ignores_relabelling(m in select(small_monoids()), k in 0usize..24) {
        let sigma = nth_permutation(m.order(), k);
        prop_assert_eq!(canonical_form(&m), canonical_form(&m.permuted(&sigma)));
    }

    #[test]
    fn grouplike_round_trip(g in select(small_groups()), k in 0usize..=3) {
        let (m, s) = build_grouplike(&g, k).unwrap();
        prop_assert_eq!(m.order(), g.order() + k);
        let d = detect_grouplike(&m).unwrap();
        prop_assert_eq!(d.k(), k);
        prop_assert_eq!(d.group_order(), g.order());
        prop_assert_eq!(d.chain(), s.chain());
        prop_assert!(canonical_form(&d.group_monoid()) == canonical_form(&g));
        // Detection survives relabelling.
        let sigma = nth_permutation(m.order(), k * 7 + 3);
        let p = detect_grouplike(&m.permuted(&sigma)).unwrap();
        prop_assert_eq!((p.k(), p.group_order()), (k, g.order()));
    }

    #[test]
    fn regular_bimodule_has_identity_phi_at_every_level(g in select(small_groups()), k in 0usize..=2) {
        let (m, _) = build_grouplike(&g, k).unwrap();
        let reg = Bimodule::regular(&m);
        for i in 0..=k {
            let certs = unigen_analyze(&reg, i).unwrap();
            prop_assert!(certs.iter().any(|c| c.phi.iter().all(|&(a, b)| a == b)));
            if i > 0 {
                prop_assert_eq!(certs.len(), 1);
            }
        }
    }

    #[test]
    fn orbit_representatives_have_free_two_sided_orbits(g in select(small_groups()), k in 0usize..=1, carrier in 1usize..=4) {
        let (m, s) = build_grouplike(&g, k).unwrap();
        let reps = enumerate_bimodules(&m, &m, carrier, Normalization::FixOrbitRepresentative, DEFAULT_BUDGET).unwrap();
        for b in &reps {
            prop_assert_eq!(validate_bimodule(b), Ok(()));
            prop_assert!(orbit_condition_holds(b, s.group(), s.group()));
            let (left, right) = (group_orbit(b, Side::Left).unwrap(), group_orbit(b, Side::Right).unwrap());
            prop_assert!(left.free && right.free);
            prop_assert_eq!(left.uniform_size, Some(g.order()));
            prop_assert_eq!(&left.orbit_of, &right.orbit_of);
        }
        // Each representative is one of the relabelling classes.
        let classes = enumerate_bimodules(&m, &m, carrier, Normalization::UpToRelabeling, DEFAULT_BUDGET).unwrap();
        for b in &reps {
            prop_assert!(classes.iter().any(|c| c.is_isomorphic_to(b)));
        }
    }

    #[test]
    fn constructed_categories_are_valid_and_obey_orbit_laws(p in 0usize..15, q in 0usize..15) {
        let c6 = order_three(6);
        let ls = enumerate_bimodules(&c6, &c6, 3, Normalization::FixOrbitRepresentative, DEFAULT_BUDGET).unwrap();
        for (i, c) in construct_all(&ls[p], &ls[q]).unwrap() {
            prop_assert_eq!(validate_category(&c), Ok(()));
            prop_assert_eq!(compute_imax(&c).unwrap().i_max, i);
            prop_assert!(check_orbit_laws(&c).unwrap().passed());
        }
    }
}
