//! Group-class predicates. Each predicate is a method on [`View`], so it can
//! be asked of the whole group or of any of its subgroups; the free functions
//! ask it of the whole group.

use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::lattice::{SubgroupLattice, View};
use crate::numtheory::{is_power_of, is_prime, p_prime_part, prime_divisors, prime_power};

impl<'a> View<'a> {
    pub fn is_abelian(&self) -> bool {
        let g = self.group();
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.elements().any(|x| self.group().element_order(x) == n)
    }

    /// Abelian with every nonidentity element of one common prime order.
    pub fn is_elementary_abelian(&self) -> bool {
        if !self.is_abelian() {
            return false;
        }
        let g = self.group();
        let mut orders = self.elements().skip(1).map(|x| g.element_order(x));
        match orders.next() {
            None => true,
            Some(p) => is_prime(p) && orders.all(|o| o == p),
        }
    }

    /// Every Sylow subgroup is normal.
    pub fn is_nilpotent(&self) -> bool {
        prime_divisors(self.order())
            .into_iter()
            .all(|p| self.is_normal(self.sylow(p).expect("prime")))
    }

    /// The derived series reaches the trivial subgroup.
    pub fn is_solvable(&self) -> bool {
        let lat = self.lattice();
        let mut cur = self.top();
        loop {
            if cur == SubgroupLattice::TRIVIAL {
                return true;
            }
            let next = lat.commutator(cur, cur);
            if next == cur {
                return false;
            }
            cur = next;
        }
    }

    /// Every chief factor has prime order.
    pub fn is_supersolvable(&self) -> bool {
        self.chief_series()
            .factor_orders
            .iter()
            .all(|&o| is_prime(o))
    }

    /// Has a normal `p`-complement.
    pub fn is_p_nilpotent(&self, p: usize) -> bool {
        let lat = self.lattice();
        lat.order_of(self.o_p_prime(p)) == p_prime_part(self.order(), p)
    }

    /// The Sylow 2-subgroup is normal.
    pub fn is_2_closed(&self) -> bool {
        self.is_normal(self.sylow(2).expect("2 is prime"))
    }

    fn involution_count(&self) -> usize {
        let g = self.group();
        self.elements().filter(|&x| g.element_order(x) == 2).count()
    }

    /// Order 8, nonabelian, exactly one involution.
    pub fn is_q8(&self) -> bool {
        self.order() == 8 && !self.is_abelian() && self.involution_count() == 1
    }

    /// A noncyclic 2-group of order at least 8 with a unique involution.
    pub fn is_generalized_quaternion(&self) -> bool {
        let n = self.order();
        n >= 8 && is_power_of(n, 2) && self.involution_count() == 1 && !self.is_cyclic()
    }

    /// No section `H/N` of `T` is isomorphic to `Q8`.
    pub fn is_q8_free(&self) -> bool {
        let lat = self.lattice();
        if !self.order().is_multiple_of(8) {
            return true;
        }
        for &h in self.members() {
            let oh = lat.order_of(h);
            if !oh.is_multiple_of(8) {
                continue;
            }
            for &n in lat.below(h) {
                if lat.order_of(n) * 8 == oh && is_q8_section(lat, h, n) {
                    return false;
                }
            }
        }
        true
    }

    /// Not nilpotent, but every maximal subgroup is.
    pub fn is_minimal_non_nilpotent(&self) -> bool {
        let lat = self.lattice();
        let result = !self.is_nilpotent()
            && self
                .maximal_subgroups()
                .iter()
                .all(|&m| lat.view(m).is_nilpotent());
        debug_assert_eq!(
            result,
            !self.is_nilpotent()
                && self
                    .members()
                    .iter()
                    .filter(|&&h| h != self.top())
                    .all(|&h| lat.view(h).is_nilpotent())
        );
        result
    }

    /// Not 2-nilpotent, but every proper subgroup is.
    pub fn is_minimal_non_2_nilpotent(&self) -> bool {
        let lat = self.lattice();
        !self.is_p_nilpotent(2)
            && self
                .maximal_subgroups()
                .iter()
                .all(|&m| lat.view(m).is_p_nilpotent(2))
    }

    /// Whether `N_T(H)/C_T(H)` is a `p`-group.
    pub fn automizer_is_p_group(&self, h: usize, p: usize) -> bool {
        let lat = self.lattice();
        is_power_of(
            lat.order_of(self.normalizer(h)) / lat.order_of(self.centralizer(h)),
            p,
        )
    }

    pub fn fingerprint(&self) -> GroupFingerprint {
        GroupFingerprint::of(*self)
    }
}

/// Whether `H/N` is isomorphic to `Q8`, decided by counting cosets: order 8,
/// nonabelian, and exactly one coset of order 2.
pub fn is_q8_section(lat: &SubgroupLattice, h: usize, n: usize) -> bool {
    let g = lat.group();
    let (hs, ns) = (lat.subgroup(h), lat.subgroup(n));
    if hs.order() != 8 * ns.order() || !lat.contains(n, h) {
        return false;
    }
    if !g.is_normal_in(ns, hs) {
        return false;
    }
    let gens = hs.generators();
    let nonabelian = gens
        .iter()
        .any(|&a| gens.iter().any(|&b| !ns.contains(g.commutator(a, b))));
    if !nonabelian {
        return false;
    }
    let involutory = hs
        .elements()
        .iter()
        .filter(|&x| !ns.contains(x) && ns.contains(g.mul(x, x)))
        .count();
    involutory == ns.order()
}

/// Isomorphism invariants. Equal fingerprints are necessary, not sufficient,
/// for isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    /// `(element order, count)`, ascending.
    pub element_orders: Vec<(usize, usize)>,
    pub center_order: usize,
    pub derived_order: usize,
    /// Invariants of `G/G'` as prime powers, ascending.
    pub abelianization: Vec<usize>,
    /// `(subgroup order, count)`, ascending.
    pub subgroup_counts: Vec<(usize, usize)>,
}

impl GroupFingerprint {
    pub fn of(view: View<'_>) -> Self {
        let lat = view.lattice();
        let g = view.group();
        let mut element_orders: Vec<(usize, usize)> = Vec::new();
        let mut orders: Vec<usize> = view.elements().map(|x| g.element_order(x)).collect();
        orders.sort_unstable();
        for o in orders {
            match element_orders.last_mut() {
                Some((k, c)) if *k == o => *c += 1,
                _ => element_orders.push((o, 1)),
            }
        }

        let derived = view.derived();
        let dset = lat.subgroup(derived);
        // order of x modulo G', tallied once per coset
        let mut coset_orders: Vec<usize> = view
            .elements()
            .map(|x| {
                let mut y = x;
                let mut k = 1;
                while !dset.contains(y) {
                    y = g.mul(y, x);
                    k += 1;
                }
                k
            })
            .collect();
        coset_orders.sort_unstable();
        let abelianization = abelian_invariants(&coset_orders, dset.order());

        let mut subgroup_counts: Vec<(usize, usize)> = Vec::new();
        for &h in view.members() {
            let o = lat.order_of(h);
            match subgroup_counts.last_mut() {
                Some((k, c)) if *k == o => *c += 1,
                _ => subgroup_counts.push((o, 1)),
            }
        }

        GroupFingerprint {
            order: view.order(),
            element_orders,
            center_order: lat.order_of(view.center()),
            derived_order: dset.order(),
            abelianization,
            subgroup_counts,
        }
    }
}

/// Invariants (prime powers, ascending) of the abelian group whose element
/// orders are `orders`, each element listed `multiplicity` times.
pub fn abelian_invariants(orders: &[usize], multiplicity: usize) -> Vec<usize> {
    let total = orders.len() / multiplicity;
    let mut out = Vec::new();
    for p in prime_divisors(total) {
        // c_j = log_p #{x : x^(p^j) = 1}; #factors of exponent >= j is c_j - c_{j-1}
        let mut logs = vec![0u32];
        let mut pj = 1;
        loop {
            pj *= p;
            let count = orders.iter().filter(|&&o| pj % o == 0).count() / multiplicity;
            let c = prime_power(count).map(|(_, k)| k).unwrap_or(0);
            logs.push(c);
            if count == crate::numtheory::p_part(total, p) {
                break;
            }
        }
        let mut factors: Vec<usize> = Vec::new();
        for j in 1..logs.len() {
            let at_least_j = logs[j] - logs[j - 1];
            let at_least_next = if j + 1 < logs.len() {
                logs[j + 1] - logs[j]
            } else {
                0
            };
            for _ in 0..(at_least_j - at_least_next) {
                factors.push(p.pow(j as u32));
            }
        }
        out.extend(factors);
    }
    out.sort_unstable();
    out
}

pub fn is_abelian(lat: &SubgroupLattice) -> bool {
    lat.whole().is_abelian()
}

pub fn is_cyclic(lat: &SubgroupLattice) -> bool {
    lat.whole().is_cyclic()
}

pub fn is_elementary_abelian(lat: &SubgroupLattice) -> bool {
    lat.whole().is_elementary_abelian()
}

pub fn is_nilpotent(lat: &SubgroupLattice) -> bool {
    lat.whole().is_nilpotent()
}

pub fn is_solvable(lat: &SubgroupLattice) -> bool {
    lat.whole().is_solvable()
}

pub fn is_supersolvable(lat: &SubgroupLattice) -> bool {
    lat.whole().is_supersolvable()
}

pub fn is_p_nilpotent(lat: &SubgroupLattice, p: usize) -> Result<bool> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    Ok(lat.whole().is_p_nilpotent(p))
}

pub fn is_2_closed(lat: &SubgroupLattice) -> bool {
    lat.whole().is_2_closed()
}

pub fn is_q8(lat: &SubgroupLattice) -> bool {
    lat.whole().is_q8()
}

pub fn is_generalized_quaternion(lat: &SubgroupLattice) -> bool {
    lat.whole().is_generalized_quaternion()
}

pub fn is_q8_free(lat: &SubgroupLattice) -> bool {
    lat.whole().is_q8_free()
}

pub fn is_minimal_non_nilpotent(lat: &SubgroupLattice) -> bool {
    lat.whole().is_minimal_non_nilpotent()
}

pub fn fingerprint(lat: &SubgroupLattice) -> GroupFingerprint {
    lat.whole().fingerprint()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_invariants_from_order_census() {
        // C2 x C4: orders 1, 2, 2, 2, 4, 4, 4, 4
        assert_eq!(abelian_invariants(&[1, 2, 2, 2, 4, 4, 4, 4], 1), vec![2, 4]);
        // C6 = C2 x C3
        assert_eq!(abelian_invariants(&[1, 2, 3, 3, 6, 6], 1), vec![2, 3]);
        // trivial
        assert_eq!(abelian_invariants(&[1], 1), Vec::<usize>::new());
        // C2 x C2 counted twice per coset
        assert_eq!(abelian_invariants(&[1, 1, 2, 2, 2, 2, 2, 2], 2), vec![2, 2]);
    }
}
