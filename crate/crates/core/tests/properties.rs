mod common;

use farey_core::{
    construct_symbol, contains, perm_rep, ExtFraction, FareySymbol, GroupSpec, ProjectiveMatrix,
    DEFAULT_MAX_EDGES,
};
use num_traits::Signed;
use proptest::prelude::*;
use rand::SeedableRng;

fn matrix() -> impl Strategy<Value = ProjectiveMatrix> {
    prop::collection::vec((0usize..4, 1i64..6), 0..12).prop_map(|letters| {
        let base = [
            ProjectiveMatrix::l(),
            ProjectiveMatrix::l().inverse(),
            ProjectiveMatrix::r(),
            ProjectiveMatrix::r().inverse(),
        ];
        letters
            .iter()
            .fold(ProjectiveMatrix::identity(), |acc, &(i, k)| {
                &acc * &base[i].pow(k)
            })
    })
}

fn fraction() -> impl Strategy<Value = ExtFraction> {
    prop_oneof![
        1 => Just(ExtFraction::infinity()),
        9 => (-200i64..200, 1i64..200).prop_map(|(p, q)| ExtFraction::new(p, q).unwrap()),
    ]
}

fn small_group() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1u64..10).prop_map(GroupSpec::Gamma0),
        (1u64..8).prop_map(GroupSpec::Gamma1),
        (1u64..5).prop_map(GroupSpec::Gamma),
        (1usize..16, any::<u64>()).prop_map(|(mu, seed)| {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            GroupSpec::Perm(common::random_perm_pair(&mut rng, mu))
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn action_is_a_group_action(g in matrix(), h in matrix(), x in fraction()) {
        prop_assert_eq!((&g * &h).act(&x), g.act(&h.act(&x)));
        prop_assert_eq!(ProjectiveMatrix::identity().act(&x), x);
    }

    #[test]
    fn neighbour_determinant_is_preserved(g in matrix(), x in fraction(), y in fraction()) {
        let before = x.det_pairing(&y).abs();
        prop_assert_eq!(g.act(&x).det_pairing(&g.act(&y)).abs(), before);
    }

    #[test]
    fn words_multiply_back(g in matrix()) {
        prop_assert_eq!(g.lr_word().to_matrix(), g.clone());
        prop_assert_eq!(g.ev_word().to_matrix(), g.clone());
        prop_assert_eq!(g.inverse().lr_word().to_matrix(), g.inverse());
    }

    #[test]
    fn fractions_normalize_once(p in -500i64..500, q in -500i64..500, k in 1i64..20) {
        prop_assume!(p != 0 || q != 0);
        let x = ExtFraction::new(p, q).unwrap();
        prop_assert_eq!(ExtFraction::new(x.numer().clone(), x.denom().clone()).unwrap(), x.clone());
        prop_assert_eq!(ExtFraction::new(k * p, k * q).unwrap(), x.clone());
        prop_assert!(!x.denom().is_negative());
        prop_assert_eq!(x.to_string().parse::<ExtFraction>().unwrap(), x);
    }

    #[test]
    fn matrix_text_round_trips(g in matrix()) {
        prop_assert_eq!(g.to_string().parse::<ProjectiveMatrix>().unwrap(), g);
    }

    #[test]
    fn permutation_action_is_a_homomorphism(
        seed in any::<u64>(),
        mu in 1usize..20,
        g in matrix(),
        h in matrix(),
    ) {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let pair = common::random_perm_pair(&mut rng, mu);
        for i in 0..mu {
            prop_assert_eq!(pair.act_matrix(&(&g * &h), i), pair.act_matrix(&g, pair.act_matrix(&h, i)));
        }
    }

    #[test]
    fn symbols_round_trip_and_contain_their_generators(spec in small_group()) {
        let f = construct_symbol(&spec, DEFAULT_MAX_EDGES).unwrap();
        let again: FareySymbol = f.to_string().parse().unwrap();
        prop_assert_eq!(again.to_string(), f.to_string());
        for g in f.generators() {
            prop_assert!(spec.is_member(&g));
            let cert = contains(&f, &g).unwrap();
            prop_assert!(cert.verdict);
        }
    }

    #[test]
    fn membership_agrees_with_the_predicate(spec in small_group(), g in matrix()) {
        let f = construct_symbol(&spec, DEFAULT_MAX_EDGES).unwrap();
        let cert = contains(&f, &g).unwrap();
        prop_assert_eq!(cert.verdict, spec.is_member(&g));
        if cert.verdict {
            prop_assert_eq!(farey_core::word_to_matrix(&f, &cert.word).unwrap(), g);
        }
    }

    #[test]
    fn coset_action_matches_the_index(spec in small_group()) {
        let f = construct_symbol(&spec, DEFAULT_MAX_EDGES).unwrap();
        let table = perm_rep(&f).unwrap();
        prop_assert_eq!(table.perm.degree() as u64, f.invariants().index);
        for (i, a) in table.representatives.iter().enumerate() {
            for (gen, img) in [(ProjectiveMatrix::e(), table.perm.e()), (ProjectiveMatrix::v(), table.perm.v())] {
                let b = &table.representatives[img.apply(i)];
                prop_assert!(f.contains(&(&b.inverse() * &(&gen * a))));
            }
        }
    }
}
