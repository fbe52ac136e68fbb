mod common;

use std::sync::Arc;

use icphi::iso::isomorphic;
use icphi::lattice::all_subgroups;
use icphi::numtheory::{prime_divisors, prime_power};
use icphi::{quotient, FiniteGroup, SubgroupLattice};

use common::{corpus, group, members, shuffle};

fn lat(g: &Arc<FiniteGroup>) -> SubgroupLattice {
    all_subgroups(Arc::clone(g)).unwrap()
}

#[test]
fn chief_factor_orders_are_independent_of_labels() {
    for g in members(32, 32) {
        let a = lat(g);
        let b = lat(&Arc::new(g.relabeled(&shuffle(g.degree())).unwrap()));
        let mut fa = a.whole().chief_series().factor_orders;
        let mut fb = b.whole().chief_series().factor_orders;
        fa.sort_unstable();
        fb.sort_unstable();
        assert_eq!(fa, fb, "{:?}", g.name());
        assert_eq!(fa.iter().product::<usize>(), g.order());
    }
}

#[test]
fn chief_series_factors_are_chief() {
    for g in members(32, 24) {
        let l = lat(g);
        let w = l.whole();
        let cs = w.chief_series();
        for t in cs.terms.windows(2) {
            assert!(w.is_normal(t[0]) && w.is_normal(t[1]));
            // nothing normal strictly between consecutive terms
            for n in w.normal_subgroups() {
                let between = n != t[0] && n != t[1] && l.contains(t[0], n) && l.contains(n, t[1]);
                assert!(!between, "{:?}", g.name());
            }
        }
        for i in 0..cs.factor_orders.len() {
            assert_eq!(
                cs.factor(&l, i).unwrap().group().order(),
                cs.factor_orders[i]
            );
        }
    }
}

#[test]
fn quotient_projection_is_a_homomorphism_with_the_right_kernel() {
    for g in members(32, 24) {
        let l = lat(g);
        for n in l.whole().normal_subgroups() {
            let kernel = l.subgroup(n);
            let q = quotient(g, kernel).unwrap();
            assert_eq!(q.group().order() * kernel.order(), g.order());
            for a in 0..g.order() {
                assert_eq!(q.project(a) == FiniteGroup::IDENTITY, kernel.contains(a));
                for &b in g.generator_ranks() {
                    assert_eq!(
                        q.project(g.mul(a, b)),
                        q.group().mul(q.project(a), q.project(b))
                    );
                }
            }
        }
    }
}

#[test]
fn nilpotence_and_supersolvability_have_two_routes() {
    for g in members(64, 64) {
        let l = lat(g);
        let w = l.whole();
        let top = l.whole_index();
        assert_eq!(w.is_nilpotent(), w.hypercenter() == top, "{:?}", g.name());
        assert_eq!(
            w.is_supersolvable(),
            w.u_hypercenter() == top,
            "{:?}",
            g.name()
        );
    }
}

#[test]
fn fitting_subgroups() {
    for g in members(32, 32) {
        let l = lat(g);
        let w = l.whole();
        let f = w.fitting();
        let fs = w.generalized_fitting();
        assert!(w.is_normal(f) && w.is_normal(fs));
        assert!(l.contains(f, fs));
        assert!(l.view(f).is_nilpotent());
        for n in w.normal_subgroups() {
            if l.view(n).is_nilpotent() {
                assert!(l.contains(n, f), "{:?}", g.name());
            }
        }
        if w.is_solvable() {
            assert_eq!(f, fs);
        }
        assert!(l.contains(w.hypercenter(), f));
        assert!(l.contains(w.center(), w.hypercenter()));
    }
}

#[test]
fn class_implications() {
    for g in members(64, 64) {
        let l = lat(g);
        let w = l.whole();
        if w.is_nilpotent() {
            assert!(w.is_supersolvable());
            for p in prime_divisors(g.order()) {
                assert!(w.is_p_nilpotent(p));
            }
        }
        if w.is_supersolvable() {
            assert!(w.is_solvable());
        }
        if w.is_cyclic() {
            assert!(w.is_abelian());
        }
        if w.is_abelian() {
            assert!(w.is_nilpotent());
        }
        assert_eq!(w.is_2_closed(), w.sylow_subgroups(2).len() == 1);
    }
}

#[test]
fn burnside_and_frobenius_criteria() {
    for g in members(64, 64) {
        let l = lat(g);
        let w = l.whole();
        let primes = prime_divisors(g.order());
        if let Some(&p) = primes.first() {
            if l.view(w.sylow(p).unwrap()).is_cyclic() {
                assert!(w.is_p_nilpotent(p), "{:?}", g.name());
            }
        }
        for &p in &primes {
            let all_p_groups =
                (1..l.len()).filter(|&h| prime_power(l.order_of(h)).is_some_and(|(q, _)| q == p));
            if all_p_groups.clone().all(|h| w.automizer_is_p_group(h, p)) {
                assert!(w.is_p_nilpotent(p), "{:?} p = {p}", g.name());
            }
        }
    }
}

#[test]
fn p_groups_with_one_subgroup_of_order_p() {
    let mut seen = 0;
    for g in members(64, 64) {
        let Some((p, _)) = prime_power(g.order()) else {
            continue;
        };
        let l = lat(g);
        if (0..l.len()).filter(|&i| l.order_of(i) == p).count() == 1 {
            let w = l.whole();
            assert!(
                w.is_cyclic() || w.is_generalized_quaternion(),
                "{:?}",
                g.name()
            );
            seen += 1;
        }
    }
    assert!(seen >= 10);
}

#[test]
fn maximal_subgroups_of_solvable_groups_have_prime_power_index() {
    for g in members(64, 64) {
        let l = lat(g);
        let w = l.whole();
        if !w.is_solvable() {
            continue;
        }
        for &m in w.maximal_subgroups() {
            let index = g.order() / l.order_of(m);
            assert!(prime_power(index).is_some(), "{:?}", g.name());
        }
    }
    let a5 = group("A5");
    let l = lat(&a5);
    assert!(l
        .whole()
        .maximal_subgroups()
        .iter()
        .any(|&m| prime_power(60 / l.order_of(m)).is_none()));
}

#[test]
fn isomorphism_is_an_equivalence_on_samples() {
    let c = corpus(32);
    let gs: Vec<&Arc<FiniteGroup>> = c
        .iter()
        .map(|e| &e.group)
        .filter(|g| g.order() == 16)
        .collect();
    for (i, a) in gs.iter().enumerate() {
        assert!(isomorphic(a, a).unwrap());
        let copy = a.relabeled(&shuffle(a.degree())).unwrap();
        assert!(isomorphic(a, &copy).unwrap());
        assert!(isomorphic(&copy, a).unwrap());
        for b in &gs[i + 1..] {
            assert!(!isomorphic(a, b).unwrap());
            assert!(!isomorphic(b, a).unwrap());
        }
    }
    let x = group("C3 :1 C2");
    let y = group("S3");
    let z = group("D3");
    assert!(
        isomorphic(&x, &y).unwrap() && isomorphic(&y, &z).unwrap() && isomorphic(&x, &z).unwrap()
    );
}

#[test]
fn corpus_is_deduplicated_and_sorted() {
    let c = corpus(32);
    let orders: Vec<usize> = c.iter().map(|e| e.group.order()).collect();
    assert!(orders.windows(2).all(|w| w[0] <= w[1]));
    for n in 1..=32 {
        assert!(
            c.iter()
                .any(|e| e.group.order() == n && lat(&e.group).whole().is_cyclic()),
            "C{n}"
        );
    }
    let by_order: Vec<&Arc<FiniteGroup>> = c
        .iter()
        .map(|e| &e.group)
        .filter(|g| g.order() == 24)
        .collect();
    for (i, a) in by_order.iter().enumerate() {
        for b in &by_order[i + 1..] {
            assert!(!isomorphic(a, b).unwrap());
        }
    }
    for name in ["Q8", "SL(2,3)", "S4", "A4", "D4", "Dic12", "C2^5"] {
        assert!(c.find(name).is_some(), "{name}");
    }
    for e in c.iter() {
        let r = e.recipe.as_ref().unwrap();
        assert_eq!(r.predicted_order().unwrap(), e.group.order() as u64);
        let again = r.materialize().unwrap();
        assert_eq!(again.elements(), e.group.elements());
    }
}
