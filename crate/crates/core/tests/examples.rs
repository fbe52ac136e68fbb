use std::sync::Arc;

use icphi::corpus::{enumerate_semidirect_actions, semidirect_actions};
use icphi::iso::{automorphism_group, isomorphic};
use icphi::lattice::{
    all_subgroups, frattini, maximal_subgroups, minimal_normal_subgroups, n_maximal_subgroups,
    sylow_subgroup,
};
use icphi::perm::closure;
use icphi::series::{
    components, fitting, generalized_fitting, hypercenter, o_p_prime, u_hypercenter,
};
use icphi::{
    build_corpus, is_icphi_subgroup, quotient, verify, Conclusion, FiniteGroup, GroupRecipe,
    Hypothesis, Permutation, StatementId, SubgroupLattice,
};

fn group(recipe: &str) -> Arc<FiniteGroup> {
    let r: GroupRecipe = recipe.parse().unwrap();
    Arc::new(r.materialize().unwrap())
}

fn lattice(recipe: &str) -> SubgroupLattice {
    all_subgroups(group(recipe)).unwrap()
}

fn cycle(n: usize, c: &[usize]) -> Permutation {
    Permutation::from_cycles(n, &[c]).unwrap()
}

fn orders(subs: &[&icphi::Subgroup]) -> Vec<usize> {
    let mut v: Vec<usize> = subs.iter().map(|s| s.order()).collect();
    v.sort_unstable();
    v
}

#[test]
fn compose_evaluated_pointwise() {
    let a = cycle(3, &[0, 1]);
    let b = cycle(3, &[1, 2]);
    let c = a.compose(&b).unwrap();
    for i in 0..3 {
        assert_eq!(c.image(i), b.image(a.image(i)));
    }
    assert_eq!(c.order(), 3);
    let p = cycle(5, &[0, 3, 4]);
    assert_eq!(Permutation::identity(5).compose(&p).unwrap(), p);
    assert!(p.compose(&p.inverse()).unwrap().is_identity());
    assert!(a.compose(&p).is_err());
}

#[test]
fn closure_counts() {
    assert_eq!(closure(3, &[cycle(3, &[0, 1, 2])]).unwrap().len(), 3);
    assert_eq!(
        closure(3, &[cycle(3, &[0, 1]), cycle(3, &[0, 1, 2])])
            .unwrap()
            .len(),
        6
    );
    let q8 = group("Q8");
    assert_eq!(closure(q8.degree(), q8.generators()).unwrap().len(), 8);
    assert_eq!(closure(4, &[]).unwrap().len(), 1);
}

#[test]
fn commutators_and_centers() {
    let c12 = group("C12");
    assert!(c12
        .commutator_subgroup(&c12.whole(), &c12.whole())
        .is_trivial());
    assert_eq!(c12.center(), c12.whole());

    let s3 = group("S3");
    let a3 = s3.generate(&[s3.rank_of(&cycle(3, &[0, 1, 2])).unwrap()]);
    assert_eq!(s3.commutator_subgroup(&a3, &s3.whole()), a3);
    let t = s3.generate(&[s3.rank_of(&cycle(3, &[0, 1])).unwrap()]);
    assert_eq!(s3.normalizer(&t), t);

    let q8 = group("Q8");
    let d = q8.commutator_subgroup(&q8.whole(), &q8.whole());
    assert_eq!(d.order(), 2);
    assert_eq!(d, q8.center());
}

#[test]
fn subgroup_counts() {
    assert_eq!(lattice("Q8").len(), 6);
    assert_eq!(lattice("S3").len(), 6);
    for p in [2, 3, 5, 7, 11, 13] {
        assert_eq!(lattice(&format!("C{p}")).len(), 2);
    }
}

#[test]
fn maximal_and_n_maximal() {
    let sl = lattice("SL(2,3)");
    assert_eq!(orders(&maximal_subgroups(&sl)), vec![6, 6, 6, 6, 8]);
    let q8 = lattice("Q8");
    assert_eq!(orders(&maximal_subgroups(&q8)), vec![4, 4, 4]);
    let c5 = lattice("C5");
    assert_eq!(orders(&maximal_subgroups(&c5)), vec![1]);
    assert!(maximal_subgroups(&lattice("1")).is_empty());

    let s3 = lattice("S3");
    assert_eq!(orders(&n_maximal_subgroups(&s3, 2)), vec![1]);
    let three = n_maximal_subgroups(&sl, 3);
    assert_eq!(orders(&three), vec![1, 2]);
    let g = sl.group();
    assert!(three.contains(&&g.center()));
}

#[test]
fn frattini_examples() {
    let q8 = lattice("Q8");
    assert_eq!(*frattini(&q8), q8.group().center());
    assert!(frattini(&lattice("S3")).is_trivial());
    assert!(frattini(&lattice("C2^3")).is_trivial());
    assert!(frattini(&lattice("C3^2")).is_trivial());
    assert!(frattini(&lattice("1")).is_trivial());
}

#[test]
fn normal_structure_examples() {
    let sl = lattice("SL(2,3)");
    let min = minimal_normal_subgroups(&sl);
    assert_eq!(min.len(), 1);
    assert_eq!(*min[0], sl.group().center());

    let s4 = lattice("S4");
    let w = s4.whole();
    let v4 = (0..s4.len())
        .find(|&i| s4.order_of(i) == 4 && w.is_normal(i))
        .unwrap();
    let inside = s4
        .below(v4)
        .iter()
        .copied()
        .find(|&i| s4.order_of(i) == 2)
        .unwrap();
    assert!(!w.is_normal(inside));
    assert!(w.is_subnormal(inside));
    let transposition = (0..s4.len())
        .find(|&i| s4.order_of(i) == 2 && !s4.contains(i, v4))
        .unwrap();
    assert!(!w.is_subnormal(transposition));
}

#[test]
fn sylow_examples() {
    let sl = lattice("SL(2,3)");
    let p = sylow_subgroup(&sl, 2).unwrap();
    assert_eq!(p.order(), 8);
    assert!(sl.group().is_normal(p));
    assert_eq!(sylow_subgroup(&lattice("S3"), 3).unwrap().order(), 3);
    assert!(sylow_subgroup(&lattice("S3"), 5).unwrap().is_trivial());
    assert!(sylow_subgroup(&sl, 4).is_err());
}

#[test]
fn quotient_examples() {
    let sl = group("SL(2,3)");
    let q = quotient(&sl, &sl.center()).unwrap();
    assert_eq!(q.group().order(), 12);
    assert!(isomorphic(q.group(), &group("A4")).unwrap());

    let q8 = group("Q8");
    let q = quotient(&q8, &q8.center()).unwrap();
    let g = q.group();
    assert_eq!(g.order(), 4);
    assert!((1..4).all(|x| g.element_order(x) == 2));

    let s3 = group("S3");
    let t = s3.generate(&[s3.rank_of(&cycle(3, &[0, 1])).unwrap()]);
    assert!(quotient(&s3, &t).is_err());
}

#[test]
fn chief_series_examples() {
    let q8 = lattice("Q8");
    assert_eq!(q8.whole().chief_series().factor_orders, vec![2, 2, 2]);

    let s4 = lattice("S4");
    let cs = s4.whole().chief_series();
    let mut f = cs.factor_orders.clone();
    f.sort_unstable();
    assert_eq!(f, vec![2, 3, 4]);
    let i = cs.factor_orders.iter().position(|&o| o == 4).unwrap();
    let v4 = cs.factor(&s4, i).unwrap();
    assert!(!s4.view(cs.terms[i + 1]).is_cyclic());
    assert_eq!(v4.group().order(), 4);

    assert_eq!(lattice("C3").whole().chief_series().factor_orders, vec![3]);
    assert_eq!(
        lattice("C16").whole().chief_series().factor_orders,
        vec![2; 4]
    );
    assert!(lattice("1").whole().chief_series().factor_orders.is_empty());
}

#[test]
fn radical_examples() {
    let sl = lattice("SL(2,3)");
    assert_eq!(*hypercenter(&sl), sl.group().center());
    assert!(hypercenter(&lattice("S3")).is_trivial());
    let q8 = lattice("Q8");
    assert_eq!(hypercenter(&q8).order(), 8);

    let s4 = lattice("S4");
    let f = fitting(&s4);
    assert_eq!(f.order(), 4);
    assert!(s4.group().is_normal(f));
    assert!(fitting(&lattice("A5")).is_trivial());

    assert!(components(&s4).is_empty());
    assert_eq!(generalized_fitting(&s4), fitting(&s4));
    let a5 = lattice("A5");
    assert_eq!(components(&a5).len(), 1);
    assert_eq!(generalized_fitting(&a5).order(), 60);

    assert!(u_hypercenter(&lattice("A4")).is_trivial());
    assert_eq!(u_hypercenter(&lattice("S3")).order(), 6);

    assert_eq!(o_p_prime(&lattice("S3"), 2).unwrap().order(), 3);
    assert_eq!(o_p_prime(&sl, 3).unwrap().order(), 8);
    assert!(o_p_prime(&lattice("D4"), 2).unwrap().is_trivial());
    assert!(o_p_prime(&sl, 6).is_err());
}

#[test]
fn class_predicate_examples() {
    let c7 = lattice("C7");
    let w = c7.whole();
    assert!(w.is_abelian() && w.is_cyclic() && w.is_elementary_abelian());
    let q8 = lattice("Q8");
    let w = q8.whole();
    assert!(!w.is_abelian() && !w.is_cyclic() && !w.is_elementary_abelian());
    let v = lattice("C2^2");
    let w = v.whole();
    assert!(w.is_abelian() && !w.is_cyclic() && w.is_elementary_abelian());

    let s3 = lattice("S3");
    let w = s3.whole();
    assert!(!w.is_nilpotent() && w.is_solvable() && w.is_supersolvable());
    let s4 = lattice("S4");
    let w = s4.whole();
    assert!(w.is_solvable() && !w.is_supersolvable());
    let p = lattice("D8");
    let w = p.whole();
    assert!(w.is_nilpotent() && w.is_supersolvable() && w.is_solvable());
    assert!(!lattice("A5").whole().is_solvable());
}

#[test]
fn p_nilpotence_and_closure_examples() {
    let sl = lattice("SL(2,3)");
    assert!(!sl.whole().is_p_nilpotent(2));
    assert!(sl.whole().is_2_closed());
    assert!(!sl.whole().is_q8_free());
    assert!(sl.whole().is_minimal_non_nilpotent());

    let s3 = lattice("S3");
    assert!(s3.whole().is_p_nilpotent(2));
    assert!(s3.whole().is_minimal_non_nilpotent());

    let ab = lattice("C2 x C6");
    for p in [2, 3, 5] {
        assert!(ab.whole().is_p_nilpotent(p));
    }

    let s4 = lattice("S4");
    assert!(!s4.whole().is_2_closed());
    assert!(s4.whole().is_q8_free());
    assert!(!s4.whole().is_minimal_non_nilpotent());

    assert!(lattice("C15").whole().is_2_closed());
    assert!(lattice("C3^2").whole().is_2_closed());
    assert!(lattice("D6").whole().is_q8_free());
}

#[test]
fn quaternion_recognition_examples() {
    let q8 = lattice("Q8");
    assert!(q8.whole().is_q8() && q8.whole().is_generalized_quaternion());
    let d4 = lattice("D4");
    assert!(!d4.whole().is_q8() && !d4.whole().is_generalized_quaternion());
    let c8 = lattice("C8");
    assert!(!c8.whole().is_q8() && !c8.whole().is_generalized_quaternion());
    let q16 = lattice("Dic16");
    assert!(!q16.whole().is_q8() && q16.whole().is_generalized_quaternion());
}

#[test]
fn isomorphism_examples() {
    let s4 = group("S4");
    let relabel = Permutation::from_images(&[2, 0, 3, 1]).unwrap();
    let copy = s4.relabeled(&relabel).unwrap();
    assert!(isomorphic(&s4, &copy).unwrap());
    assert!(!isomorphic(&group("Q8"), &group("D4")).unwrap());
    let aut = automorphism_group(&group("Q8")).unwrap();
    assert_eq!(aut.order(), 24);
    assert!(isomorphic(&aut, &s4).unwrap());
    assert_eq!(automorphism_group(&group("S3")).unwrap().order(), 6);
    assert_eq!(automorphism_group(&group("C2^2")).unwrap().order(), 6);
}

#[test]
fn icphi_examples() {
    let sl = group("SL(2,3)");
    assert!(is_icphi_subgroup(&sl.center(), &sl).unwrap());
    let q8 = lattice("Q8");
    for h in q8.subgroups() {
        assert!(is_icphi_subgroup(h, q8.group()).unwrap());
    }
    let s3 = group("S3");
    let a3 = s3.generate(&[s3.rank_of(&cycle(3, &[0, 1, 2])).unwrap()]);
    assert!(!is_icphi_subgroup(&a3, &s3).unwrap());
    let other = group("S3");
    assert!(is_icphi_subgroup(&other.center(), &s3).is_err());
}

#[test]
fn verify_examples() {
    let v = verify(group("SL(2,3)"), StatementId::T19).unwrap().unwrap();
    assert_eq!(v.hypothesis, Hypothesis::Satisfied);
    assert_eq!(v.conclusion, Conclusion::Verified);

    let v = verify(group("S3"), StatementId::T17).unwrap().unwrap();
    assert_eq!(v.hypothesis, Hypothesis::NotSatisfied);
    assert!(v.witness.unwrap().contains("order 3"));

    // Q8 is nonabelian and not Q8-free, so every clause fails and the
    // equivalence holds with nothing to conclude
    let v = verify(group("Q8"), StatementId::T16).unwrap().unwrap();
    assert_eq!(v.hypothesis, Hypothesis::NotSatisfied);
    assert_ne!(v.conclusion, Conclusion::Violated);
    assert!(v.witness.unwrap().contains("(1) false (2) false (3) false"));

    for r in ["C6", "C2^3", "C4 x C2", "C3 x C3"] {
        let v = verify(group(r), StatementId::T16).unwrap().unwrap();
        assert_eq!(v.hypothesis, Hypothesis::Satisfied, "{r}");
        assert_eq!(v.conclusion, Conclusion::Verified, "{r}");
    }

    let v = verify(group("Q8"), StatementId::L15).unwrap().unwrap();
    assert_eq!(v.conclusion, Conclusion::Verified);
    assert!(verify(group("S3"), StatementId::L15).unwrap().is_none());
}

#[test]
fn materialize_examples() {
    let triv = group("C1");
    assert_eq!(triv.order(), 1);

    let sl = group("SL(2,3)");
    assert_eq!((sl.order(), sl.degree()), (24, 8));
    assert!(!sl.is_abelian());
    let involutions: Vec<usize> = (0..24).filter(|&x| sl.element_order(x) == 2).collect();
    assert_eq!(involutions.len(), 1);

    let dic = lattice("Dic8");
    assert!(dic.whole().is_q8());
    let mut census: Vec<usize> = (0..8).map(|x| dic.group().element_order(x)).collect();
    census.sort_unstable();
    assert_eq!(census, vec![1, 2, 4, 4, 4, 4, 4, 4]);

    assert!("C400"
        .parse::<GroupRecipe>()
        .unwrap()
        .materialize()
        .is_err());
    assert!("D2".parse::<GroupRecipe>().is_err());
}

#[test]
fn semidirect_action_examples() {
    let c3 = group("C3");
    let c2 = group("C2");
    assert_eq!(enumerate_semidirect_actions(&c3, &c2).unwrap(), vec![0, 1]);
    assert!(isomorphic(&group("C3 :0 C2"), &group("C6")).unwrap());
    assert!(isomorphic(&group("C3 :1 C2"), &group("S3")).unwrap());

    let q8 = group("Q8");
    let c3b = group("C3");
    let acts = enumerate_semidirect_actions(&q8, &c3b).unwrap();
    let sl = group("SL(2,3)");
    let hits = acts
        .iter()
        .filter(|&&k| isomorphic(&group(&format!("Q8 :{k} C3")), &sl).unwrap())
        .count();
    assert!(hits >= 1);
    let aut = semidirect_actions(&q8, &c3b).unwrap().automorphisms;
    assert!(acts.iter().any(|&k| {
        let a = &semidirect_actions(&q8, &c3b).unwrap().actions[k];
        aut.element_order(a[0]) == 3
    }));

    for a in ["C5", "Q8", "S3", "C2^2"] {
        assert_eq!(
            enumerate_semidirect_actions(&group(a), &group("1")).unwrap(),
            vec![0]
        );
        assert!(isomorphic(&group(&format!("{a} :0 1")), &group(&format!("{a} x 1"))).unwrap());
        assert!(isomorphic(&group(&format!("{a} :0 1")), &group(a)).unwrap());
    }
}

#[test]
fn corpus_examples() {
    let c1 = build_corpus(1).unwrap();
    assert_eq!(c1.len(), 1);
    assert_eq!(c1.groups[0].group.order(), 1);

    let c8 = build_corpus(8).unwrap();
    let q8 = c8.find("Q8").unwrap();
    let d4 = c8.find("D4").unwrap();
    assert!(!isomorphic(&q8.group, &d4.group).unwrap());
    assert_eq!(c8.counts_by_order().last(), Some(&(8, 5)));

    let c24 = build_corpus(24).unwrap();
    let sl = group("SL(2,3)");
    let copies = c24
        .iter()
        .filter(|e| e.group.order() == 24 && isomorphic(&e.group, &sl).unwrap())
        .count();
    assert_eq!(copies, 1);

    assert!(build_corpus(0).is_err());
    assert!(build_corpus(361).is_err());
}
