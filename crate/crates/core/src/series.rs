//! Quotients, chief series and the characteristic subgroups built from them:
//! hypercenter, Fitting and generalized Fitting subgroups, the supersolvable
//! hypercenter and `O_{p'}`.
//!
//! `F*(G)` is taken to be the subgroup generated by `F(G)` and the
//! components of `G` (subnormal quasisimple subgroups).

use std::sync::Arc;

use crate::error::{GroupError, Result};
use crate::lattice::{SubgroupLattice, View};
use crate::numtheory::{gcd, is_prime, prime_divisors};
use crate::perm::{ElemSet, FiniteGroup, Permutation, Subgroup};

/// `G/N` realised as the action of `G` on the right cosets of `N`.
#[derive(Debug)]
pub struct QuotientGroup {
    source: Arc<FiniteGroup>,
    kernel: Subgroup,
    group: Arc<FiniteGroup>,
    projection: Vec<usize>,
}

impl QuotientGroup {
    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Image of a source element rank in the quotient group.
    pub fn project(&self, x: usize) -> usize {
        self.projection[x]
    }

    /// `HN/N`.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let set: ElemSet = h.elements().iter().map(|x| self.projection[x]).collect();
        self.group
            .subgroup_from_set(set)
            .expect("image of a subgroup is a subgroup")
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        let set: ElemSet = (0..self.source.order())
            .filter(|&x| h.contains(self.projection[x]))
            .collect();
        self.source
            .subgroup_from_set(set)
            .expect("preimage of a subgroup is a subgroup")
    }
}

/// Builds `G/N`; fails with [`GroupError::NotNormal`] unless `N` is normal.
pub fn quotient(g: &Arc<FiniteGroup>, n: &Subgroup) -> Result<QuotientGroup> {
    g.check_parent(n)?;
    if !g.is_normal(n) {
        return Err(GroupError::NotNormal);
    }
    let order = g.order();
    // canonical representative of the coset Nx is its smallest rank
    let rep: Vec<usize> = (0..order)
        .map(|x| {
            n.elements()
                .iter()
                .map(|k| g.mul(k, x))
                .min()
                .expect("N nonempty")
        })
        .collect();
    let mut reps: Vec<usize> = rep.clone();
    reps.sort_unstable();
    reps.dedup();
    let label = |x: usize| reps.binary_search(&rep[x]).expect("known coset");
    let degree = reps.len();

    let action = |x: usize| -> Permutation {
        let images: Vec<usize> = reps.iter().map(|&r| label(g.mul(r, x))).collect();
        Permutation::from_images(&images).expect("coset action is a permutation")
    };
    let mut gens: Vec<Permutation> = g.generator_ranks().iter().map(|&x| action(x)).collect();
    if gens.is_empty() {
        gens.push(Permutation::identity(degree));
    }
    let mut qg = FiniteGroup::new(degree, gens)?;
    if let Some(name) = g.name() {
        qg = qg.with_name(format!("{name}/N"));
    }
    let projection: Vec<usize> = (0..order)
        .map(|x| qg.rank_of(&action(x)).expect("image lies in quotient"))
        .collect();

    for &a in g.generator_ranks() {
        for &b in g.generator_ranks() {
            assert_eq!(
                projection[g.mul(a, b)],
                qg.mul(projection[a], projection[b]),
                "projection is a homomorphism"
            );
        }
    }
    assert_eq!(qg.order() * n.order(), order);
    debug_assert!((0..order).all(|x| (projection[x] == FiniteGroup::IDENTITY) == n.contains(x)));

    Ok(QuotientGroup {
        source: g.clone(),
        kernel: n.clone(),
        group: Arc::new(qg),
        projection,
    })
}

/// `1 = N_0 < N_1 < ... < N_k = T`, each `N_i` normal in `T` and each factor
/// `N_{i+1}/N_i` minimal normal in `T/N_i`. Terms are lattice indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiefSeries {
    pub terms: Vec<usize>,
    pub factor_orders: Vec<usize>,
}

impl ChiefSeries {
    /// The `i`-th factor `N_{i+1}/N_i` as a group.
    pub fn factor(&self, lat: &SubgroupLattice, i: usize) -> Result<QuotientGroup> {
        let g = lat.group();
        let upper = lat.subgroup(self.terms[i + 1]);
        let lower = lat.subgroup(self.terms[i]);
        let (ug, embed) = g.subgroup_as_group(upper);
        let ug = Arc::new(ug);
        let lower_set: ElemSet = (0..ug.order())
            .filter(|&x| lower.contains(embed[x]))
            .collect();
        let lower_in_upper = ug
            .subgroup_from_set(lower_set)
            .expect("lower term is a subgroup");
        quotient(&ug, &lower_in_upper)
    }
}

impl<'a> View<'a> {
    fn first_normal_above(&self, normals: &[usize], cur: usize, within: usize) -> usize {
        let lat = self.lattice();
        normals
            .iter()
            .copied()
            .find(|&m| m != cur && lat.contains(cur, m) && lat.contains(m, within))
            .expect("a normal subgroup covers every proper normal term")
    }

    fn series_from(&self, normals: &[usize], via: usize) -> ChiefSeries {
        let lat = self.lattice();
        let mut terms = vec![SubgroupLattice::TRIVIAL];
        let mut cur = SubgroupLattice::TRIVIAL;
        for target in [via, self.top()] {
            while cur != target {
                cur = self.first_normal_above(normals, cur, target);
                terms.push(cur);
            }
        }
        let factor_orders = terms
            .windows(2)
            .map(|w| lat.order_of(w[1]) / lat.order_of(w[0]))
            .collect();
        ChiefSeries {
            terms,
            factor_orders,
        }
    }

    /// Chief series built by repeatedly lifting the first minimal normal
    /// subgroup of the current quotient in lattice order. Empty for the
    /// trivial group.
    pub fn chief_series(&self) -> ChiefSeries {
        let normals = self.normal_subgroups();
        self.series_from(&normals, SubgroupLattice::TRIVIAL)
    }

    /// A chief series passing through the normal subgroup `n`.
    pub fn chief_series_through(&self, n: usize) -> ChiefSeries {
        debug_assert!(self.is_normal(n));
        let normals = self.normal_subgroups();
        self.series_from(&normals, n)
    }

    /// Whether `T/E` is supersolvable, read off the chief factors above `E`.
    pub fn quotient_is_supersolvable(&self, e: usize) -> bool {
        let series = self.chief_series_through(e);
        let lat = self.lattice();
        series
            .terms
            .windows(2)
            .filter(|w| lat.contains(e, w[0]))
            .all(|w| is_prime(lat.order_of(w[1]) / lat.order_of(w[0])))
    }

    /// `Z_0 = 1`, `Z_{i+1}/Z_i = Z(T/Z_i)`, up to the point where it stops.
    pub fn upper_central_series(&self) -> Vec<usize> {
        let lat = self.lattice();
        let g = self.group();
        let gens = self.generators();
        let mut series = vec![SubgroupLattice::TRIVIAL];
        loop {
            let cur = *lat.subgroup(*series.last().expect("nonempty")).elements();
            let next: ElemSet = self
                .elements()
                .filter(|&x| gens.iter().all(|&y| cur.contains(g.commutator(x, y))))
                .collect();
            let idx = lat
                .index_of(&next)
                .expect("upper central term is a subgroup");
            if idx == *series.last().expect("nonempty") {
                return series;
            }
            series.push(idx);
        }
    }

    pub fn hypercenter(&self) -> usize {
        *self.upper_central_series().last().expect("nonempty")
    }

    /// Largest normal `p`-subgroup: the core of a Sylow `p`-subgroup.
    pub fn o_p(&self, p: usize) -> usize {
        self.core(self.sylow(p).expect("prime"))
    }

    /// Largest nilpotent normal subgroup, as the join of the `O_p`.
    pub fn fitting(&self) -> usize {
        let lat = self.lattice();
        let f = lat.join_all(
            prime_divisors(self.order())
                .into_iter()
                .map(|p| self.o_p(p)),
        );
        assert!(self.is_normal(f), "Fitting subgroup is normal");
        assert!(lat.view(f).is_nilpotent(), "Fitting subgroup is nilpotent");
        f
    }

    /// Whether member `h` is quasisimple: perfect with simple central quotient.
    pub fn is_quasisimple(&self, h: usize) -> bool {
        let lat = self.lattice();
        // a nontrivial perfect group has order at least 60
        if lat.order_of(h) < 60 || lat.commutator(h, h) != h {
            return false;
        }
        let hv = lat.view(h);
        let z = hv.center();
        !hv.normal_subgroups()
            .into_iter()
            .any(|n| n != z && n != h && lat.contains(z, n))
    }

    /// Subnormal quasisimple subgroups of `T`.
    pub fn components(&self) -> Vec<usize> {
        self.members()
            .iter()
            .copied()
            .filter(|&h| self.is_quasisimple(h) && self.is_subnormal(h))
            .collect()
    }

    /// `F*(T) = <F(T), components of T>`.
    pub fn generalized_fitting(&self) -> usize {
        let lat = self.lattice();
        let f = self.fitting();
        let fstar = lat.join_all(std::iter::once(f).chain(self.components()));
        assert!(self.is_normal(fstar), "F* is normal");
        fstar
    }

    /// Whether every chief factor of `T` below the normal subgroup `n` has
    /// prime order, i.e. is cyclic.
    pub fn is_u_central(&self, n: usize) -> bool {
        let lat = self.lattice();
        let normals: Vec<usize> = self
            .normal_subgroups()
            .into_iter()
            .filter(|&m| lat.contains(m, n))
            .collect();
        let mut cur = SubgroupLattice::TRIVIAL;
        while cur != n {
            let next = self.first_normal_above(&normals, cur, n);
            if !is_prime(lat.order_of(next) / lat.order_of(cur)) {
                return false;
            }
            cur = next;
        }
        true
    }

    /// `Z_U(T)`: the join of all normal subgroups whose chief factors are
    /// all cyclic.
    pub fn u_hypercenter(&self) -> usize {
        let lat = self.lattice();
        let z = lat.join_all(
            self.normal_subgroups()
                .into_iter()
                .filter(|&n| self.is_u_central(n)),
        );
        assert!(
            self.is_u_central(z),
            "the supersolvable hypercenter is U-central"
        );
        z
    }

    /// Largest normal subgroup of order coprime to `p`.
    pub fn o_p_prime(&self, p: usize) -> usize {
        let lat = self.lattice();
        lat.join_all(
            self.normal_subgroups()
                .into_iter()
                .filter(|&n| gcd(lat.order_of(n), p) == 1),
        )
    }
}

pub fn chief_series(lat: &SubgroupLattice) -> ChiefSeries {
    lat.whole().chief_series()
}

pub fn hypercenter(lat: &SubgroupLattice) -> &Subgroup {
    lat.subgroup(lat.whole().hypercenter())
}

pub fn fitting(lat: &SubgroupLattice) -> &Subgroup {
    lat.subgroup(lat.whole().fitting())
}

pub fn components(lat: &SubgroupLattice) -> Vec<&Subgroup> {
    lat.whole()
        .components()
        .into_iter()
        .map(|i| lat.subgroup(i))
        .collect()
}

pub fn generalized_fitting(lat: &SubgroupLattice) -> &Subgroup {
    lat.subgroup(lat.whole().generalized_fitting())
}

pub fn u_hypercenter(lat: &SubgroupLattice) -> &Subgroup {
    lat.subgroup(lat.whole().u_hypercenter())
}

pub fn o_p_prime(lat: &SubgroupLattice, p: usize) -> Result<&Subgroup> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    Ok(lat.subgroup(lat.whole().o_p_prime(p)))
}
