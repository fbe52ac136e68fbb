//! Complete subgroup lattices.
//!
//! Every subgroup is enumerated once, so questions about any subgroup `T`
//! of the group (its maximal subgroups, its normal subgroups, its Sylow
//! subgroups) are answered by filtering the lattice. [`View`] packages that:
//! it is the lattice seen from a chosen top subgroup.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{GroupError, Result};
use crate::numtheory::{is_prime, p_part};
use crate::perm::{ElemSet, FiniteGroup, Subgroup};

/// All subgroups of a group, sorted by order and then by
/// [`ElemSet::canonical_cmp`]. Index `0` is the trivial subgroup and the last
/// index is the whole group.
pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    subgroups: Vec<Subgroup>,
    index: HashMap<ElemSet, usize>,
    below: Vec<Vec<usize>>,
    maximal: Vec<Vec<usize>>,
    frattini: Vec<usize>,
    normal: Vec<bool>,
    classes: OnceLock<Vec<Vec<usize>>>,
}

impl std::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgroupLattice")
            .field("group", &self.group.name())
            .field("order", &self.group.order())
            .field("subgroups", &self.subgroups.len())
            .finish()
    }
}

impl SubgroupLattice {
    /// Enumerates every subgroup.
    ///
    /// Seeds with the cyclic subgroups and repeatedly joins each subgroup
    /// found so far with each cyclic subgroup it does not contain, until no
    /// new subgroup appears. Every subgroup is generated by its cyclic
    /// subgroups, so this reaches all of them.
    pub fn new(group: Arc<FiniteGroup>) -> Result<Self> {
        let g = &*group;
        let n = g.order();

        let mut cyclic: Vec<(ElemSet, usize)> = Vec::new();
        let mut seen_cyclic: HashMap<ElemSet, ()> = HashMap::new();
        for x in 1..n {
            let c = g.generate(&[x]);
            if seen_cyclic.insert(*c.elements(), ()).is_none() {
                cyclic.push((*c.elements(), x));
            }
        }

        let mut found: HashMap<ElemSet, usize> = HashMap::new();
        let mut list: Vec<Subgroup> = Vec::new();
        let trivial = g.trivial();
        found.insert(*trivial.elements(), 0);
        list.push(trivial);
        for &(set, x) in &cyclic {
            found.insert(set, list.len());
            list.push(g.generate(&[x]));
        }
        let mut i = 1;
        while i < list.len() {
            for &(cset, x) in &cyclic {
                if cset.is_subset(list[i].elements()) {
                    continue;
                }
                let k = g.extend(&list[i], x);
                if !found.contains_key(k.elements()) {
                    found.insert(*k.elements(), list.len());
                    list.push(k);
                }
            }
            i += 1;
        }

        list.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.elements().canonical_cmp(b.elements()))
        });
        Ok(Self::from_sorted(group.clone(), list))
    }

    fn from_sorted(group: Arc<FiniteGroup>, subgroups: Vec<Subgroup>) -> Self {
        let index: HashMap<ElemSet, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (*s.elements(), i))
            .collect();

        let mut below = Vec::with_capacity(subgroups.len());
        for (j, sj) in subgroups.iter().enumerate() {
            let oj = sj.order();
            let b: Vec<usize> = (0..=j)
                .filter(|&i| {
                    let si = &subgroups[i];
                    oj % si.order() == 0 && si.elements().is_subset(sj.elements())
                })
                .collect();
            below.push(b);
        }

        let mut maximal = Vec::with_capacity(subgroups.len());
        for (j, b) in below.iter().enumerate() {
            let mut found: Vec<usize> = Vec::new();
            for &i in b.iter().rev() {
                if i == j {
                    continue;
                }
                let si = subgroups[i].elements();
                if !found.iter().any(|&m| si.is_subset(subgroups[m].elements())) {
                    found.push(i);
                }
            }
            found.reverse();
            maximal.push(found);
        }

        let frattini = maximal
            .iter()
            .enumerate()
            .map(|(j, ms)| {
                if ms.is_empty() {
                    return j;
                }
                let set = ms
                    .iter()
                    .map(|&m| *subgroups[m].elements())
                    .reduce(|a, b| a.intersection(&b))
                    .expect("nonempty");
                index[&set]
            })
            .collect();

        let normal = subgroups.iter().map(|s| group.is_normal(s)).collect();

        SubgroupLattice {
            group,
            subgroups,
            index,
            below,
            maximal,
            frattini,
            normal,
            classes: OnceLock::new(),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn order_of(&self, i: usize) -> usize {
        self.subgroups[i].order()
    }

    pub fn index_of(&self, set: &ElemSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn index_of_subgroup(&self, h: &Subgroup) -> usize {
        debug_assert_eq!(h.parent_id(), self.group.id());
        self.index[h.elements()]
    }

    pub const TRIVIAL: usize = 0;

    pub fn whole_index(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// `i <= j`.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.subgroups[i]
            .elements()
            .is_subset(self.subgroups[j].elements())
    }

    /// All pairs `(i, j)` with subgroup `i` contained in subgroup `j`.
    pub fn inclusion_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.below
            .iter()
            .enumerate()
            .flat_map(|(j, b)| b.iter().map(move |&i| (i, j)))
    }

    /// Subgroups of subgroup `j`, including `j` itself, ascending.
    pub fn below(&self, j: usize) -> &[usize] {
        &self.below[j]
    }

    /// Maximal subgroups of subgroup `j`, ascending.
    pub fn maximal_in(&self, j: usize) -> &[usize] {
        &self.maximal[j]
    }

    /// Frattini subgroup of subgroup `j` (`j` itself when `j` is trivial).
    pub fn frattini_of(&self, j: usize) -> usize {
        self.frattini[j]
    }

    /// Normality in the whole group.
    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        let s = self.group.join(&self.subgroups[i], &self.subgroups[j]);
        self.index_of_subgroup(&s)
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items
            .into_iter()
            .fold(Self::TRIVIAL, |acc, x| self.join(acc, x))
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        let set = self.subgroups[i]
            .elements()
            .intersection(self.subgroups[j].elements());
        self.index[&set]
    }

    /// Index of the subgroup generated by `gens`.
    pub fn generated_by(&self, gens: &[usize]) -> usize {
        self.index_of_subgroup(&self.group.generate(gens))
    }

    pub fn commutator(&self, i: usize, j: usize) -> usize {
        let c = self
            .group
            .commutator_subgroup(&self.subgroups[i], &self.subgroups[j]);
        self.index_of_subgroup(&c)
    }

    /// Index of `H^g`.
    pub fn conjugate(&self, i: usize, g: usize) -> usize {
        let set: ElemSet = self.subgroups[i]
            .elements()
            .iter()
            .map(|x| self.group.conj(x, g))
            .collect();
        self.index[&set]
    }

    /// Conjugacy classes of subgroups under the whole group, each class
    /// ascending, classes ordered by their first member.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        self.classes.get_or_init(|| {
            let mut class_of = vec![usize::MAX; self.len()];
            let mut classes: Vec<Vec<usize>> = Vec::new();
            for i in 0..self.len() {
                if class_of[i] != usize::MAX {
                    continue;
                }
                let mut class: Vec<usize> = (0..self.group.order())
                    .map(|g| self.conjugate(i, g))
                    .collect();
                class.sort_unstable();
                class.dedup();
                for &c in &class {
                    class_of[c] = classes.len();
                }
                classes.push(class);
            }
            classes
        })
    }

    pub fn view(&self, top: usize) -> View<'_> {
        View { lat: self, top }
    }

    pub fn whole(&self) -> View<'_> {
        self.view(self.whole_index())
    }

    /// Subgroup counts keyed by order, ascending.
    pub fn counts_by_order(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for s in &self.subgroups {
            match out.last_mut() {
                Some((o, c)) if *o == s.order() => *c += 1,
                _ => out.push((s.order(), 1)),
            }
        }
        out
    }
}

/// The lattice seen from subgroup `top`: operations treat `top` as the
/// ambient group.
#[derive(Clone, Copy)]
pub struct View<'a> {
    lat: &'a SubgroupLattice,
    top: usize,
}

impl<'a> View<'a> {
    pub fn lattice(&self) -> &'a SubgroupLattice {
        self.lat
    }

    pub fn group(&self) -> &'a FiniteGroup {
        &self.lat.group
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn subgroup(&self) -> &'a Subgroup {
        &self.lat.subgroups[self.top]
    }

    pub fn order(&self) -> usize {
        self.subgroup().order()
    }

    pub fn generators(&self) -> &'a [usize] {
        self.subgroup().generators()
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + 'a {
        self.lat.subgroups[self.top].elements().iter()
    }

    /// All subgroups of `top` (including `top`), ascending.
    pub fn members(&self) -> &'a [usize] {
        &self.lat.below[self.top]
    }

    pub fn maximal_subgroups(&self) -> &'a [usize] {
        &self.lat.maximal[self.top]
    }

    /// Subgroups `H` admitting a chain `H = H_0 < H_1 < ... < H_n = top`
    /// with each link maximal in the next. Computed top-down, one round of
    /// "maximal subgroups of each member" per step.
    pub fn n_maximal_subgroups(&self, n: usize) -> Vec<usize> {
        let mut cur = vec![self.top];
        for _ in 0..n {
            let mut next: Vec<usize> = cur
                .iter()
                .flat_map(|&c| self.lat.maximal[c].iter().copied())
                .collect();
            next.sort_unstable();
            next.dedup();
            cur = next;
        }
        cur
    }

    pub fn frattini(&self) -> usize {
        self.lat.frattini[self.top]
    }

    /// Whether member `i` is normal in `top`.
    pub fn is_normal(&self, i: usize) -> bool {
        if self.top == self.lat.whole_index() {
            return self.lat.normal[i];
        }
        let g = self.group();
        g.is_normal_in(&self.lat.subgroups[i], self.subgroup())
    }

    pub fn normal_subgroups(&self) -> Vec<usize> {
        self.members()
            .iter()
            .copied()
            .filter(|&i| self.is_normal(i))
            .collect()
    }

    /// Nontrivial normal subgroups containing no smaller nontrivial normal
    /// subgroup.
    pub fn minimal_normal_subgroups(&self) -> Vec<usize> {
        let normals: Vec<usize> = self
            .normal_subgroups()
            .into_iter()
            .filter(|&i| i != SubgroupLattice::TRIVIAL)
            .collect();
        normals
            .iter()
            .copied()
            .filter(|&i| !normals.iter().any(|&j| j != i && self.lat.contains(j, i)))
            .collect()
    }

    /// Largest normal subgroup of `top` inside member `i`.
    pub fn core(&self, i: usize) -> usize {
        let g = self.group();
        let mut set = *self.lat.subgroups[i].elements();
        for x in self.elements() {
            let conj: ElemSet = self.lat.subgroups[i]
                .elements()
                .iter()
                .map(|h| g.conj(h, x))
                .collect();
            set = set.intersection(&conj);
        }
        self.lat.index[&set]
    }

    /// Smallest normal subgroup of `top` containing member `i`.
    pub fn normal_closure(&self, i: usize) -> usize {
        let g = self.group();
        let closure = g.normal_closure_of(self.lat.subgroups[i].generators(), self.generators());
        self.lat.index_of_subgroup(&closure)
    }

    /// Follows `K_0 = top`, `K_{j+1}` = normal closure of `H` in `K_j` and
    /// reports whether the chain stops at `H`.
    pub fn is_subnormal(&self, i: usize) -> bool {
        let mut k = self.top;
        loop {
            let next = self.lat.view(k).normal_closure(i);
            if next == k {
                return k == i;
            }
            k = next;
        }
    }

    /// Every Sylow `p`-subgroup of `top`.
    pub fn sylow_subgroups(&self, p: usize) -> Vec<usize> {
        let target = p_part(self.order(), p);
        self.members()
            .iter()
            .copied()
            .filter(|&i| self.lat.order_of(i) == target)
            .collect()
    }

    /// The first Sylow `p`-subgroup in lattice order; trivial when `p` does
    /// not divide the order.
    pub fn sylow(&self, p: usize) -> Result<usize> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        let target = p_part(self.order(), p);
        Ok(self
            .members()
            .iter()
            .copied()
            .find(|&i| self.lat.order_of(i) == target)
            .expect("Sylow subgroups exist"))
    }

    pub fn center(&self) -> usize {
        let g = self.group();
        let gens = self.generators();
        let set: ElemSet = self
            .elements()
            .filter(|&x| gens.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
            .collect();
        self.lat.index[&set]
    }

    /// Elements of `top` commuting with every element of member `i`.
    pub fn centralizer(&self, i: usize) -> usize {
        let g = self.group();
        let gens = self.lat.subgroups[i].generators();
        let set: ElemSet = self
            .elements()
            .filter(|&x| gens.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
            .collect();
        self.lat.index[&set]
    }

    pub fn normalizer(&self, i: usize) -> usize {
        let g = self.group();
        let h = &self.lat.subgroups[i];
        let set: ElemSet = self
            .elements()
            .filter(|&x| h.generators().iter().all(|&y| h.contains(g.conj(y, x))))
            .collect();
        self.lat.index[&set]
    }

    pub fn derived(&self) -> usize {
        self.lat.commutator(self.top, self.top)
    }
}

/// Builds the complete lattice of `group`.
pub fn all_subgroups(group: Arc<FiniteGroup>) -> Result<SubgroupLattice> {
    SubgroupLattice::new(group)
}

pub fn maximal_subgroups(lat: &SubgroupLattice) -> Vec<&Subgroup> {
    lat.whole()
        .maximal_subgroups()
        .iter()
        .map(|&i| lat.subgroup(i))
        .collect()
}

pub fn n_maximal_subgroups(lat: &SubgroupLattice, n: usize) -> Vec<&Subgroup> {
    lat.whole()
        .n_maximal_subgroups(n)
        .into_iter()
        .map(|i| lat.subgroup(i))
        .collect()
}

pub fn frattini(lat: &SubgroupLattice) -> &Subgroup {
    lat.subgroup(lat.whole().frattini())
}

pub fn normal_subgroups(lat: &SubgroupLattice) -> Vec<&Subgroup> {
    lat.whole()
        .normal_subgroups()
        .into_iter()
        .map(|i| lat.subgroup(i))
        .collect()
}

pub fn minimal_normal_subgroups(lat: &SubgroupLattice) -> Vec<&Subgroup> {
    lat.whole()
        .minimal_normal_subgroups()
        .into_iter()
        .map(|i| lat.subgroup(i))
        .collect()
}

pub fn sylow_subgroup(lat: &SubgroupLattice, p: usize) -> Result<&Subgroup> {
    Ok(lat.subgroup(lat.whole().sylow(p)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    fn lattice(degree: usize, gens: Vec<Permutation>) -> SubgroupLattice {
        SubgroupLattice::new(Arc::new(FiniteGroup::new(degree, gens).unwrap())).unwrap()
    }

    fn s3() -> SubgroupLattice {
        lattice(3, vec![perm(3, &[&[0, 1]]), perm(3, &[&[0, 1, 2]])])
    }

    fn s4() -> SubgroupLattice {
        lattice(4, vec![perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])])
    }

    #[test]
    fn s3_structure() {
        let lat = s3();
        assert_eq!(lat.len(), 6);
        let orders: Vec<usize> = maximal_subgroups(&lat).iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![2, 2, 2, 3]);
        let two_max = lat.whole().n_maximal_subgroups(2);
        assert_eq!(two_max, vec![SubgroupLattice::TRIVIAL]);
        assert!(frattini(&lat).is_trivial());
        assert_eq!(lat.order_of(lat.whole().sylow(3).unwrap()), 3);
        assert_eq!(lat.order_of(lat.whole().sylow(5).unwrap()), 1);
        assert_eq!(lat.whole().sylow(4), Err(GroupError::NotPrime(4)));
        let minimal: Vec<usize> = minimal_normal_subgroups(&lat)
            .iter()
            .map(|s| s.order())
            .collect();
        assert_eq!(minimal, vec![3]);
        let classes = lat.conjugacy_classes();
        for class in classes {
            let o = lat.order_of(class[0]);
            assert!(class.iter().all(|&c| lat.order_of(c) == o));
        }
        assert_eq!(classes.len(), 4);
    }

    #[test]
    fn cyclic_prime_order() {
        let lat = lattice(7, vec![perm(7, &[&[0, 1, 2, 3, 4, 5, 6]])]);
        assert_eq!(lat.len(), 2);
        assert_eq!(lat.whole().maximal_subgroups(), &[SubgroupLattice::TRIVIAL]);
        assert_eq!(lat.whole().frattini(), SubgroupLattice::TRIVIAL);
    }

    #[test]
    fn trivial_group() {
        let lat = lattice(1, vec![Permutation::identity(1)]);
        assert_eq!(lat.len(), 1);
        assert!(lat.whole().maximal_subgroups().is_empty());
        assert_eq!(lat.whole().frattini(), 0);
        assert!(lat.whole().n_maximal_subgroups(1).is_empty());
    }

    #[test]
    fn subnormal_chain_in_s4() {
        let lat = s4();
        assert_eq!(lat.len(), 30);
        let g = lat.group();
        let v4 = lat.generated_by(&[
            g.rank_of(&perm(4, &[&[0, 1], &[2, 3]])).unwrap(),
            g.rank_of(&perm(4, &[&[0, 2], &[1, 3]])).unwrap(),
        ]);
        let h = lat.generated_by(&[g.rank_of(&perm(4, &[&[0, 1], &[2, 3]])).unwrap()]);
        assert_eq!(lat.order_of(v4), 4);
        assert!(lat.whole().is_subnormal(h));
        assert!(!lat.is_normal(h));
        let t = lat.generated_by(&[g.rank_of(&perm(4, &[&[0, 1]])).unwrap()]);
        assert!(!lat.whole().is_subnormal(t));
    }

    #[test]
    fn inclusion_is_a_partial_order() {
        let lat = s4();
        for (i, j) in lat.inclusion_pairs() {
            assert!(lat.contains(i, j));
            if lat.contains(j, i) {
                assert_eq!(i, j);
            }
        }
        // every maximal link has no subgroup strictly between
        for j in 0..lat.len() {
            for &m in lat.maximal_in(j) {
                assert!(lat
                    .below(j)
                    .iter()
                    .all(|&k| k == m || k == j || !(lat.contains(m, k) && lat.contains(k, j))));
            }
        }
    }
}
