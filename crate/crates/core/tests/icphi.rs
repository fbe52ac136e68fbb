mod common;

use std::sync::Arc;

use icphi::numtheory::{gcd, prime_power};
use icphi::{is_icphi_subgroup, quotient, Conclusion, GroupAnalysis, Hypothesis, StatementId};

use common::{group, members};

#[test]
fn lattice_predicate_matches_standalone_definition() {
    for g in members(32, 32) {
        let a = GroupAnalysis::new(Arc::clone(g)).unwrap();
        let lat = a.lattice();
        for i in 0..lat.len() {
            assert_eq!(
                a.is_icphi(i),
                is_icphi_subgroup(lat.subgroup(i), g).unwrap(),
                "{:?} #{i}",
                g.name()
            );
        }
    }
}

#[test]
fn central_subgroups_are_icphi() {
    for g in members(32, 32) {
        let a = GroupAnalysis::new(Arc::clone(g)).unwrap();
        let lat = a.lattice();
        let z = lat.whole().center();
        for &h in lat.below(z) {
            assert!(a.is_icphi(h));
        }
        assert!(a.is_icphi(z));
    }
}

#[test]
fn icphi_in_g_restricts_to_intermediate_subgroups() {
    for g in members(32, 24) {
        let a = GroupAnalysis::new(Arc::clone(g)).unwrap();
        let lat = a.lattice();
        for k in 0..lat.len() {
            for &h in lat.below(k) {
                if a.is_icphi(h) {
                    assert!(a.is_icphi_in(h, k), "{:?}", g.name());
                }
            }
        }
    }
}

/// Inheritance by quotients, checked on explicitly built quotient groups.
#[test]
fn icphi_passes_to_quotients() {
    let mut checked = 0;
    for g in members(32, 24) {
        let a = GroupAnalysis::new(Arc::clone(g)).unwrap();
        let lat = a.lattice();
        let normals = lat.whole().normal_subgroups();
        for &n in &normals {
            let q = quotient(g, lat.subgroup(n)).unwrap();
            for h in 0..lat.len() {
                if !a.is_icphi(h) {
                    continue;
                }
                if lat.contains(n, h) {
                    let image = q.image(lat.subgroup(h));
                    assert!(
                        is_icphi_subgroup(&image, q.group()).unwrap(),
                        "{:?}",
                        g.name()
                    );
                    checked += 1;
                }
                if let Some((p, _)) = prime_power(lat.order_of(h)) {
                    if gcd(lat.order_of(n), p) == 1 {
                        let image = q.image(lat.subgroup(h));
                        assert!(
                            is_icphi_subgroup(&image, q.group()).unwrap(),
                            "{:?}",
                            g.name()
                        );
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn sl23_sanity_triple() {
    let g = group("SL(2,3)");
    let a = GroupAnalysis::new(Arc::clone(&g)).unwrap();
    let lat = a.lattice();
    let order2: Vec<usize> = (0..lat.len()).filter(|&i| lat.order_of(i) == 2).collect();
    assert_eq!(order2.len(), 1);
    assert_eq!(*lat.subgroup(order2[0]), g.center());
    assert!(a.is_icphi(order2[0]));
    assert!(!lat.whole().is_p_nilpotent(2));
}

#[test]
fn t14_and_t15_agree_when_every_normal_subgroup_is_its_own_f_star() {
    let mut compared = 0;
    for g in members(32, 32) {
        let a = GroupAnalysis::new(Arc::clone(g)).unwrap();
        let lat = a.lattice();
        let w = lat.whole();
        if !w
            .normal_subgroups()
            .into_iter()
            .all(|e| lat.view(e).generalized_fitting() == e)
        {
            continue;
        }
        let t14 = a.verify(StatementId::T14).unwrap();
        let t15 = a.verify(StatementId::T15).unwrap();
        assert_eq!(
            (t14.hypothesis, t14.conclusion),
            (t15.hypothesis, t15.conclusion),
            "{:?}",
            g.name()
        );
        compared += 1;
    }
    assert!(compared > 50);
}

#[test]
fn no_statement_is_violated_up_to_order_32() {
    for g in members(32, 32) {
        let a = GroupAnalysis::new(Arc::clone(g)).unwrap();
        for &s in StatementId::ALL {
            if let Some(o) = a.verify(s) {
                assert_ne!(
                    o.conclusion,
                    Conclusion::Violated,
                    "{:?} {s}: {:?}",
                    g.name(),
                    o.witness
                );
                if o.conclusion == Conclusion::Verified {
                    assert_eq!(o.hypothesis, Hypothesis::Satisfied);
                }
            }
        }
    }
}

#[test]
fn vacuous_rows_for_small_n_maximal_structure() {
    for (r, s) in [
        ("C2", StatementId::T18),
        ("S3", StatementId::T19),
        ("C4", StatementId::T19),
    ] {
        let a = GroupAnalysis::new(group(r)).unwrap();
        assert_eq!(
            a.verify(s).unwrap().hypothesis,
            Hypothesis::Vacuous,
            "{r} {s}"
        );
    }
    let a = GroupAnalysis::new(group("1")).unwrap();
    assert_eq!(
        a.verify(StatementId::T11).unwrap().hypothesis,
        Hypothesis::Vacuous
    );
}
