use std::sync::Arc;

use proptest::prelude::*;

use icphi::corpus::ExplicitGroup;
use icphi::format::{parse_group, parse_manifest, print_group};
use icphi::lattice::all_subgroups;
use icphi::{FiniteGroup, GroupAnalysis, GroupRecipe, Permutation};

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

/// Small permutation groups: up to three random generators on at most five
/// points, so the order stays within 120.
fn small_group() -> impl Strategy<Value = FiniteGroup> {
    (1usize..=5)
        .prop_flat_map(|d| (Just(d), prop::collection::vec(permutation(d), 1..=3)))
        .prop_map(|(d, gens)| FiniteGroup::new(d, gens).unwrap())
}

fn group_and_elements() -> impl Strategy<Value = (FiniteGroup, Vec<prop::sample::Index>)> {
    (
        small_group(),
        prop::collection::vec(any::<prop::sample::Index>(), 1..=4),
    )
}

fn atom() -> impl Strategy<Value = GroupRecipe> {
    prop_oneof![
        (1usize..40).prop_map(GroupRecipe::Cyclic),
        (3usize..20).prop_map(GroupRecipe::Dihedral),
        (2usize..10).prop_map(|k| GroupRecipe::Dicyclic(4 * k)),
        (1usize..6).prop_map(GroupRecipe::Symmetric),
        (1usize..6).prop_map(GroupRecipe::Alternating),
        (prop::sample::select(vec![2usize, 3, 5, 7]), 1usize..5)
            .prop_map(|(p, k)| GroupRecipe::ElementaryAbelian(p, k)),
        Just(GroupRecipe::Explicit(ExplicitGroup::Q8)),
        Just(GroupRecipe::Explicit(ExplicitGroup::Sl23)),
    ]
}

fn recipe() -> impl Strategy<Value = GroupRecipe> {
    atom().prop_recursive(3, 8, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| GroupRecipe::direct(a, b)),
            (inner.clone(), inner, 0usize..5)
                .prop_map(|(a, b, k)| GroupRecipe::semidirect(a, b, k)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn associativity_and_inverse(
        (a, b, c) in (1usize..10).prop_flat_map(|d| (permutation(d), permutation(d), permutation(d)))
    ) {
        prop_assert_eq!(&Permutation::identity(a.degree()).compose(&a).unwrap(), &a);
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.inverse(), b.inverse().compose(&a.inverse()).unwrap());
        for i in 0..a.degree() {
            prop_assert_eq!(ab.image(i), b.image(a.image(i)));
        }
        let n = a.order();
        let mut p = Permutation::identity(a.degree());
        for _ in 0..n {
            p = p.compose(&a).unwrap();
        }
        prop_assert!(p.is_identity());
    }

    #[test]
    fn group_axioms_on_the_table(g in small_group()) {
        let n = g.order();
        prop_assert_eq!(120 % n, 0);
        for a in 0..n {
            prop_assert_eq!(g.mul(a, FiniteGroup::IDENTITY), a);
            prop_assert_eq!(g.mul(a, g.inv(a)), FiniteGroup::IDENTITY);
            prop_assert_eq!(g.element(g.inv(a)), &g.element(a).inverse());
        }
    }

    #[test]
    fn commutator_subgroups_behave((g, picks) in group_and_elements()) {
        let n = g.order();
        let xs: Vec<usize> = picks.iter().map(|i| i.index(n)).collect();
        let h = g.generate(&xs[..1]);
        let k = g.generate(&xs);
        let whole = g.whole();
        let hg = g.commutator_subgroup(&h, &whole);
        let kg = g.commutator_subgroup(&k, &whole);
        prop_assert!(g.is_normal(&hg));
        prop_assert!(hg.is_subgroup_of(&kg));
        for x in 0..n {
            let conj = g.conjugate(&h, x);
            prop_assert_eq!(g.conjugate(&hg, x), g.commutator_subgroup(&conj, &whole));
        }
    }

    #[test]
    fn icphi_is_conjugation_invariant(g in small_group()) {
        let g = Arc::new(g);
        let a = GroupAnalysis::new(Arc::clone(&g)).unwrap();
        let lat = a.lattice();
        for h in 0..lat.len() {
            for x in 0..g.order() {
                prop_assert_eq!(a.is_icphi(h), a.is_icphi(lat.conjugate(h, x)));
            }
        }
    }

    #[test]
    fn relabeling_preserves_subgroup_counts(
        (d, gens, relabel) in (1usize..=5).prop_flat_map(|d| (Just(d), prop::collection::vec(permutation(d), 1..=3), permutation(d)))
    ) {
        let g = FiniteGroup::new(d, gens).unwrap();
        let copy = g.relabeled(&relabel).unwrap();
        let a = all_subgroups(Arc::new(g)).unwrap();
        let b = all_subgroups(Arc::new(copy)).unwrap();
        prop_assert_eq!(a.counts_by_order(), b.counts_by_order());
    }

    #[test]
    fn group_files_round_trip(g in small_group()) {
        let text = print_group(&g);
        let again = parse_group(&text).unwrap();
        prop_assert_eq!(again.elements(), g.elements());
        prop_assert_eq!(print_group(&again), text);
    }

    #[test]
    fn recipes_round_trip(r in recipe()) {
        let text = r.to_string();
        let parsed: GroupRecipe = text.parse().unwrap();
        prop_assert_eq!(&parsed, &r);
        prop_assert_eq!(parsed.to_string(), text);
    }

    #[test]
    fn small_recipes_materialize_to_their_predicted_order(r in recipe()) {
        let order = r.predicted_order().unwrap();
        prop_assume!(order <= 48);
        match r.materialize() {
            Ok(g) => prop_assert_eq!(g.order() as u64, order),
            Err(e) => prop_assert!(matches!(e, icphi::GroupError::Recipe(_)), "{}", e),
        }
    }

    #[test]
    fn parsers_reject_noise_without_panicking(s in ".{0,40}") {
        let _ = s.parse::<GroupRecipe>();
        let _ = parse_group(&s);
        let _ = parse_manifest(&s);
    }
}
