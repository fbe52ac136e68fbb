//! Permutations, permutation groups and elementwise subgroup constructions.
//!
//! Composition is apply-left-first: `a.then(&b)` maps `i` to `b[a[i]]`, so a
//! product `ab` acts on points from the right. Every group keeps its elements
//! sorted lexicographically by image list; the identity is therefore element
//! `0`, and all other modules address elements by that dense rank.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use crate::error::{GroupError, Result};

/// Largest group order any operation accepts.
pub const ORDER_BUDGET: usize = 360;

/// Largest permutation degree accepted from untrusted input.
pub const MAX_DEGREE: usize = 4096;

const WORDS: usize = ORDER_BUDGET.div_ceil(64);

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// A bijection on `{0, .., degree - 1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        if degree > MAX_DEGREE {
            return Err(GroupError::DegreeTooLarge(degree));
        }
        let mut seen = vec![false; degree];
        for &img in images {
            if img >= degree || seen[img] {
                return Err(GroupError::NotABijection { degree });
            }
            seen[img] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&i| i as u32).collect(),
        })
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &point) in cycle.iter().enumerate() {
                if point >= degree || touched[point] {
                    return Err(GroupError::NotABijection { degree });
                }
                touched[point] = true;
                images[point] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    /// Unchecked [`compose`](Self::compose); the degrees must agree.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut order = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            order = order / crate::numtheory::gcd(order, len) * len;
        }
        order
    }

    /// Relabels points: the result maps `relabel(i)` to `relabel(self(i))`.
    pub fn relabel(&self, relabel: &Permutation) -> Permutation {
        let inv = relabel.inverse();
        inv.then(self).then(relabel)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.images[p] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A set of element ranks of one group, stored as a fixed-width bitset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElemSet([u64; WORDS]);

impl ElemSet {
    pub fn new() -> Self {
        ElemSet([0; WORDS])
    }

    pub fn singleton(x: usize) -> Self {
        let mut s = Self::new();
        s.insert(x);
        s
    }

    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        let (w, b) = (x / 64, x % 64);
        let fresh = self.0[w] & (1 << b) == 0;
        self.0[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.0[x / 64] & (1 << (x % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= b;
        }
        out
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a |= b;
        }
        out
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= !b;
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// Total order used to sort subgroups of equal size: the set holding the
    /// smallest element on which the two sets differ comes first.
    pub fn canonical_cmp(&self, other: &ElemSet) -> std::cmp::Ordering {
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            let diff = a ^ b;
            if diff != 0 {
                let low = diff & diff.wrapping_neg();
                return if a & low != 0 {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                };
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::new();
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A subgroup of a [`FiniteGroup`], identified by the element ranks it holds.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: u64,
    elements: ElemSet,
    generators: Vec<usize>,
}

impl Subgroup {
    pub fn parent_id(&self) -> u64 {
        self.parent
    }

    pub fn elements(&self) -> &ElemSet {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.is_subset(&other.elements)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.parent.hash(state);
        self.elements.hash(state);
    }
}

/// All elements generated by `gens`, sorted, identity first.
///
/// Generation walks words over the generators breadth-first; the sort makes
/// the result independent of the walk.
pub fn closure(degree: usize, gens: &[Permutation]) -> Result<Vec<Permutation>> {
    let (elements, _) = closure_bfs(degree, gens, ORDER_BUDGET)?;
    let mut sorted = elements;
    sorted.sort();
    Ok(sorted)
}

type Parents = Vec<Option<(usize, usize)>>;

fn closure_bfs(
    degree: usize,
    gens: &[Permutation],
    limit: usize,
) -> Result<(Vec<Permutation>, Parents)> {
    if degree > MAX_DEGREE {
        return Err(GroupError::DegreeTooLarge(degree));
    }
    for g in gens {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch(degree, g.degree()));
        }
    }
    let id = Permutation::identity(degree);
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(id.clone(), 0);
    let mut elements = vec![id];
    let mut parents = vec![None];
    let mut queue = VecDeque::from([0usize]);
    while let Some(cur) = queue.pop_front() {
        for (s, g) in gens.iter().enumerate() {
            let next = elements[cur].then(g);
            if index.contains_key(&next) {
                continue;
            }
            if elements.len() >= limit {
                return Err(GroupError::OrderBudget { limit });
            }
            index.insert(next.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(next);
            parents.push(Some((cur, s)));
        }
    }
    Ok((elements, parents))
}

/// A permutation group with its full element list and multiplication table.
pub struct FiniteGroup {
    id: u64,
    name: Option<String>,
    degree: usize,
    generators: Vec<Permutation>,
    generator_ranks: Vec<usize>,
    elements: Vec<Permutation>,
    mul: Vec<u16>,
    inv: Vec<u16>,
    orders: Vec<u32>,
    pub(crate) iso_cache: OnceLock<crate::iso::IsoData>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Generates the group and tabulates its multiplication.
    ///
    /// Fails with [`GroupError::OrderBudget`] once the closure grows past
    /// [`ORDER_BUDGET`] elements.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        let (bfs, parents) = closure_bfs(degree, &generators, ORDER_BUDGET)?;
        let n = bfs.len();

        let mut sorted_pos: Vec<usize> = (0..n).collect();
        sorted_pos.sort_by(|&a, &b| bfs[a].cmp(&bfs[b]));
        // rank_of[bfs index] = sorted rank
        let mut rank_of = vec![0usize; n];
        for (rank, &b) in sorted_pos.iter().enumerate() {
            rank_of[b] = rank;
        }
        let elements: Vec<Permutation> = sorted_pos.iter().map(|&b| bfs[b].clone()).collect();
        let lookup = |p: &Permutation| elements.binary_search(p).expect("closed");

        // right multiplication by each generator, then every other column
        // through the breadth-first words: x * (w g) = (x * w) * g
        let generator_ranks: Vec<usize> = generators.iter().map(&lookup).collect();
        let right_gen: Vec<Vec<usize>> = elements
            .iter()
            .map(|x| generators.iter().map(|g| lookup(&x.then(g))).collect())
            .collect();
        let mut mul = vec![0u16; n * n];
        for (x, row) in mul.chunks_mut(n).enumerate() {
            let mut by_bfs = vec![0usize; n];
            by_bfs[0] = x;
            for b in 1..n {
                let (prev, s) = parents[b].expect("non-root has a parent");
                by_bfs[b] = right_gen[by_bfs[prev]][s];
            }
            for b in 0..n {
                row[rank_of[b]] = by_bfs[b] as u16;
            }
        }

        let mut inv = vec![0u16; n];
        for x in 0..n {
            let row = &mul[x * n..(x + 1) * n];
            inv[x] = row.iter().position(|&y| y == 0).expect("inverse exists") as u16;
        }
        let mut orders = vec![1u32; n];
        for (x, slot) in orders.iter_mut().enumerate() {
            let mut y = x;
            let mut k = 1;
            while y != 0 {
                y = mul[y * n + x] as usize;
                k += 1;
            }
            *slot = k;
        }

        Ok(FiniteGroup {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            name: None,
            degree,
            generators,
            generator_ranks,
            elements,
            mul,
            inv,
            orders,
            iso_cache: OnceLock::new(),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Ranks of the defining generators.
    pub fn generator_ranks(&self) -> &[usize] {
        &self.generator_ranks
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, x: usize) -> &Permutation {
        &self.elements[x]
    }

    pub fn rank_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub const IDENTITY: usize = 0;

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(Self::IDENTITY, |acc, _| self.mul(acc, a))
    }

    /// `g^-1 a g`.
    #[inline]
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `a^-1 b^-1 a b`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generator_ranks;
        g.iter()
            .all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub(crate) fn make_subgroup(&self, elements: ElemSet, generators: Vec<usize>) -> Subgroup {
        assert!(
            self.order().is_multiple_of(elements.len()),
            "Lagrange violated: subgroup of order {} in group of order {}",
            elements.len(),
            self.order()
        );
        Subgroup {
            parent: self.id,
            elements,
            generators,
        }
    }

    pub fn check_parent(&self, h: &Subgroup) -> Result<()> {
        if h.parent == self.id {
            Ok(())
        } else {
            Err(GroupError::ParentMismatch)
        }
    }

    pub fn whole(&self) -> Subgroup {
        let mut gens: Vec<usize> = self
            .generator_ranks
            .iter()
            .copied()
            .filter(|&g| g != Self::IDENTITY)
            .collect();
        gens.dedup();
        self.make_subgroup(ElemSet::full(self.order()), gens)
    }

    pub fn trivial(&self) -> Subgroup {
        self.make_subgroup(ElemSet::singleton(Self::IDENTITY), Vec::new())
    }

    /// Closure of `seed` under right multiplication by `gens`. When `seed`
    /// is a subgroup (or just the identity) the result is `<seed, gens>`.
    pub(crate) fn close_from(&self, seed: &ElemSet, gens: &[usize]) -> ElemSet {
        let mut set = *seed;
        set.insert(Self::IDENTITY);
        let mut list: Vec<usize> = set.iter().collect();
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    list.push(y);
                }
            }
            i += 1;
        }
        set
    }

    /// `<gens>` as a subgroup.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let gens: Vec<usize> = gens
            .iter()
            .copied()
            .filter(|&g| g != Self::IDENTITY)
            .collect();
        let set = self.close_from(&ElemSet::singleton(Self::IDENTITY), &gens);
        self.make_subgroup(set, gens)
    }

    /// `<H, x>`.
    pub fn extend(&self, h: &Subgroup, x: usize) -> Subgroup {
        if h.contains(x) {
            return h.clone();
        }
        let mut gens = h.generators.clone();
        gens.push(x);
        let set = self.close_from(&h.elements, &gens);
        self.make_subgroup(set, gens)
    }

    /// `<A, B>`.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if b.is_subgroup_of(a) {
            return a.clone();
        }
        if a.is_subgroup_of(b) {
            return b.clone();
        }
        let mut gens = a.generators.clone();
        gens.extend(b.generators.iter().copied().filter(|&g| !a.contains(g)));
        let set = self.close_from(&a.elements, &gens);
        self.make_subgroup(set, gens)
    }

    /// Wraps a set known to be a subgroup, choosing a small generating set.
    /// Returns `None` if the set is not closed or misses the identity.
    pub fn subgroup_from_set(&self, set: ElemSet) -> Option<Subgroup> {
        if !set.contains(Self::IDENTITY) {
            return None;
        }
        let members: Vec<usize> = set.iter().collect();
        let mut cur = ElemSet::singleton(Self::IDENTITY);
        let mut gens = Vec::new();
        let mut by_order = members.clone();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        for x in by_order {
            if cur.len() == set.len() {
                break;
            }
            if cur.contains(x) {
                continue;
            }
            gens.push(x);
            cur = self.close_from(&cur, &gens);
            if !cur.is_subset(&set) {
                return None;
            }
        }
        if cur != set {
            return None;
        }
        Some(self.make_subgroup(set, gens))
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.subgroup_from_set(a.elements.intersection(&b.elements))
            .expect("intersection of subgroups is a subgroup")
    }

    /// Smallest subgroup containing `seed_gens` and closed under conjugation
    /// by `conjugators`.
    pub(crate) fn normal_closure_of(&self, seed_gens: &[usize], conjugators: &[usize]) -> Subgroup {
        let mut gens: Vec<usize> = Vec::new();
        let mut set = ElemSet::singleton(Self::IDENTITY);
        for &s in seed_gens {
            if !set.contains(s) {
                gens.push(s);
                set = self.close_from(&set, &gens);
            }
        }
        let mut i = 0;
        while i < gens.len() {
            let g = gens[i];
            for &c in conjugators {
                let y = self.conj(g, c);
                if !set.contains(y) {
                    gens.push(y);
                    set = self.close_from(&set, &gens);
                }
            }
            i += 1;
        }
        self.make_subgroup(set, gens)
    }

    /// `[H, K] = < h^-1 k^-1 h k >`.
    ///
    /// Computed as the normal closure in `<H, K>` of the commutators of the
    /// two generating sets.
    pub fn commutator_subgroup(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let seeds: Vec<usize> = h
            .generators
            .iter()
            .flat_map(|&a| k.generators.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .filter(|&c| c != Self::IDENTITY)
            .collect();
        if seeds.is_empty() {
            return self.trivial();
        }
        let mut conjugators = h.generators.clone();
        conjugators.extend_from_slice(&k.generators);
        self.normal_closure_of(&seeds, &conjugators)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let g = self.whole();
        self.commutator_subgroup(&g, &g)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.whole())
    }

    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        let set: ElemSet = (0..self.order())
            .filter(|&g| {
                h.generators
                    .iter()
                    .all(|&x| self.mul(g, x) == self.mul(x, g))
            })
            .collect();
        self.subgroup_from_set(set)
            .expect("centralizer is a subgroup")
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let set: ElemSet = (0..self.order())
            .filter(|&g| h.generators.iter().all(|&x| h.contains(self.conj(x, g))))
            .collect();
        let n = self
            .subgroup_from_set(set)
            .expect("normalizer is a subgroup");
        debug_assert!(self.is_normal_in(&self.centralizer(h), &n));
        n
    }

    /// Whether `h` is normalised by every generator of `k`.
    pub fn is_normal_in(&self, h: &Subgroup, k: &Subgroup) -> bool {
        k.generators
            .iter()
            .all(|&g| h.generators.iter().all(|&x| h.contains(self.conj(x, g))))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.is_normal_in(h, &self.whole())
    }

    /// `H^g`.
    pub fn conjugate(&self, h: &Subgroup, g: usize) -> Subgroup {
        let set: ElemSet = h.elements.iter().map(|x| self.conj(x, g)).collect();
        let gens = h.generators.iter().map(|&x| self.conj(x, g)).collect();
        self.make_subgroup(set, gens)
    }

    /// Intersection of all conjugates of `h`.
    pub fn core(&self, h: &Subgroup) -> Subgroup {
        let mut set = h.elements;
        for g in 0..self.order() {
            let conj: ElemSet = h.elements.iter().map(|x| self.conj(x, g)).collect();
            set = set.intersection(&conj);
        }
        self.subgroup_from_set(set).expect("core is a subgroup")
    }

    /// Smallest normal subgroup containing `h`.
    pub fn normal_closure(&self, h: &Subgroup) -> Subgroup {
        self.normal_closure_of(&h.generators, &self.whole().generators)
    }

    /// The subgroup `h` as a standalone group, plus the embedding of its
    /// element ranks into this group.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<usize>) {
        let gens: Vec<Permutation> = if h.generators.is_empty() {
            vec![Permutation::identity(self.degree)]
        } else {
            h.generators
                .iter()
                .map(|&x| self.elements[x].clone())
                .collect()
        };
        let sub = FiniteGroup::new(self.degree, gens).expect("subgroup is within budget");
        let embed = sub
            .elements
            .iter()
            .map(|p| self.rank_of(p).expect("subgroup element lies in parent"))
            .collect();
        (sub, embed)
    }

    /// Relabels the points of every generator by `relabel`.
    pub fn relabeled(&self, relabel: &Permutation) -> Result<FiniteGroup> {
        if relabel.degree() != self.degree {
            return Err(GroupError::DegreeMismatch(self.degree, relabel.degree()));
        }
        let gens = self.generators.iter().map(|g| g.relabel(relabel)).collect();
        let mut g = FiniteGroup::new(self.degree, gens)?;
        g.name = self.name.clone();
        Ok(g)
    }
}
