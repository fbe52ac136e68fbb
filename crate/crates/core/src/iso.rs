//! Isomorphism testing, automorphism groups and homomorphism enumeration.
//!
//! All searches fix a small generating tuple of the source group and
//! backtrack over images of its entries, extending each partial assignment
//! along the generators' Cayley graph and rejecting it at the first clash.
//! Candidate images are filtered by per-element invariants that any
//! isomorphism preserves.

use crate::error::{GroupError, Result};
use crate::perm::{ElemSet, FiniteGroup, Permutation, ORDER_BUDGET};

/// Node budget for a single isomorphism or homomorphism search.
pub const SEARCH_BUDGET: usize = 2_000_000;

/// Largest group whose automorphism group is computed.
pub const AUTOMORPHISM_ORDER_LIMIT: usize = 60;

/// Longest generating tuple the isomorphism search works with.
pub const MAX_GENERATING_TUPLE: usize = 8;

/// Per-element data preserved by isomorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct ElementClass {
    order: u32,
    centralizer: u32,
    square_roots: u32,
    in_derived: bool,
}

#[derive(Debug)]
pub(crate) struct IsoData {
    classes: Vec<ElementClass>,
    /// Sorted multiset of element classes, plus derived and center orders.
    key: (Vec<ElementClass>, usize, usize),
    gens: Vec<usize>,
}

fn iso_data(g: &FiniteGroup) -> &IsoData {
    g.iso_cache.get_or_init(|| compute_iso_data(g))
}

fn compute_iso_data(g: &FiniteGroup) -> IsoData {
    let n = g.order();
    let derived = g.derived_subgroup();
    let mut square_roots = vec![0u32; n];
    for x in 0..n {
        square_roots[g.mul(x, x)] += 1;
    }
    let classes: Vec<ElementClass> = (0..n)
        .map(|x| ElementClass {
            order: g.element_order(x) as u32,
            centralizer: (0..n).filter(|&y| g.mul(x, y) == g.mul(y, x)).count() as u32,
            square_roots: square_roots[x],
            in_derived: derived.contains(x),
        })
        .collect();
    let mut sorted = classes.clone();
    sorted.sort_unstable();
    let center = (0..n)
        .filter(|&x| classes[x].centralizer as usize == n)
        .count();
    let class_size = |c: &ElementClass| classes.iter().filter(|d| *d == c).count();

    // greedy generating tuple: biggest jump in generated order, then the
    // rarest element class
    let mut gens = Vec::new();
    let mut cur = ElemSet::singleton(FiniteGroup::IDENTITY);
    while cur.len() < n {
        let mut best: Option<(usize, usize, usize)> = None;
        for (x, class) in classes.iter().enumerate() {
            if cur.contains(x) {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(x);
            let size = g.close_from(&cur, &trial).len();
            let rarity = class_size(class);
            let better = match best {
                None => true,
                Some((bs, br, _)) => size > bs || (size == bs && rarity < br),
            };
            if better {
                best = Some((size, rarity, x));
            }
        }
        let (_, _, x) = best.expect("some element lies outside a proper subgroup");
        gens.push(x);
        cur = g.close_from(&cur, &gens);
    }

    IsoData {
        classes,
        key: (sorted, derived.order(), center),
        gens,
    }
}

enum Mode {
    Isomorphism,
    Homomorphism,
}

/// Backtracking search for maps from `src` to `dst` determined by the images
/// of `gens`.
struct MapSearch<'a> {
    src: &'a FiniteGroup,
    dst: &'a FiniteGroup,
    gens: &'a [usize],
    candidates: Vec<Vec<usize>>,
    mode: Mode,
    nodes: usize,
    budget: usize,
}

impl<'a> MapSearch<'a> {
    /// Extends the assignment `gens[i] -> images[i]` to the subgroup the
    /// generators span. `None` on a clash.
    fn extend(&self, images: &[usize]) -> Option<Vec<u16>> {
        const UNSET: u16 = u16::MAX;
        let mut phi = vec![UNSET; self.src.order()];
        let mut used = ElemSet::new();
        phi[FiniteGroup::IDENTITY] = FiniteGroup::IDENTITY as u16;
        used.insert(FiniteGroup::IDENTITY);
        let injective = matches!(self.mode, Mode::Isomorphism);
        let gens = &self.gens[..images.len()];
        let mut list = vec![FiniteGroup::IDENTITY];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            let fx = phi[x] as usize;
            for (&s, &t) in gens.iter().zip(images) {
                let y = self.src.mul(x, s);
                let fy = self.dst.mul(fx, t);
                if phi[y] == UNSET {
                    if injective && !used.insert(fy) {
                        return None;
                    }
                    phi[y] = fy as u16;
                    list.push(y);
                } else if phi[y] as usize != fy {
                    return None;
                }
            }
            i += 1;
        }
        Some(phi)
    }

    /// Runs the search, handing every complete map to `visit`; `visit`
    /// returns `false` to stop.
    fn run(&mut self, visit: &mut dyn FnMut(&[u16]) -> Result<bool>) -> Result<()> {
        let mut images = Vec::with_capacity(self.gens.len());
        if self.gens.is_empty() {
            let phi = self.extend(&images).expect("trivial map");
            return visit(&phi).map(|_| ());
        }
        self.descend(&mut images, visit).map(|_| ())
    }

    fn descend(
        &mut self,
        images: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[u16]) -> Result<bool>,
    ) -> Result<bool> {
        let level = images.len();
        for ci in 0..self.candidates[level].len() {
            let c = self.candidates[level][ci];
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(GroupError::SearchBudget(self.budget));
            }
            images.push(c);
            if let Some(phi) = self.extend(images) {
                let keep_going = if level + 1 == self.gens.len() {
                    visit(&phi)?
                } else {
                    self.descend(images, visit)?
                };
                if !keep_going {
                    images.pop();
                    return Ok(false);
                }
            }
            images.pop();
        }
        Ok(true)
    }
}

fn preserves_products(src: &FiniteGroup, dst: &FiniteGroup, phi: &[u16]) -> bool {
    (0..src.order()).all(|a| {
        (0..src.order())
            .all(|b| phi[src.mul(a, b)] as usize == dst.mul(phi[a] as usize, phi[b] as usize))
    })
}

fn iso_search<'a>(g: &'a FiniteGroup, h: &'a FiniteGroup) -> Result<MapSearch<'a>> {
    let gd = iso_data(g);
    let hd = iso_data(h);
    if gd.gens.len() > MAX_GENERATING_TUPLE {
        return Err(GroupError::SearchBudget(0));
    }
    let candidates = gd
        .gens
        .iter()
        .map(|&x| {
            (0..h.order())
                .filter(|&y| hd.classes[y] == gd.classes[x])
                .collect()
        })
        .collect();
    Ok(MapSearch {
        src: g,
        dst: h,
        gens: &gd.gens,
        candidates,
        mode: Mode::Isomorphism,
        nodes: 0,
        budget: SEARCH_BUDGET,
    })
}

/// Hash of the invariants compared by [`same_invariants`], for bucketing.
pub fn invariant_hash(g: &FiniteGroup) -> u64 {
    use std::hash::{Hash, Hasher};
    let mut h = std::collections::hash_map::DefaultHasher::new();
    g.order().hash(&mut h);
    iso_data(g).key.hash(&mut h);
    h.finish()
}

/// Cheap invariants agree (a necessary condition for isomorphism).
pub fn same_invariants(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    g.order() == h.order() && iso_data(g).key == iso_data(h).key
}

/// Decides whether `g` and `h` are isomorphic.
///
/// Abelian groups are settled by their element-order census. Otherwise a
/// backtracking search maps a generating tuple of `g` into `h`; the search
/// gives up with [`GroupError::SearchBudget`] rather than guess.
pub fn isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

/// An isomorphism `g -> h` as a rank map, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Result<Option<Vec<usize>>> {
    if !same_invariants(g, h) {
        return Ok(None);
    }
    let mut search = iso_search(g, h)?;
    let mut found: Option<Vec<usize>> = None;
    search.run(&mut |phi| {
        debug_assert!(preserves_products(g, h, phi));
        found = Some(phi.iter().map(|&y| y as usize).collect());
        Ok(false)
    })?;
    if let Some(phi) = &found {
        let phi16: Vec<u16> = phi.iter().map(|&y: &usize| y as u16).collect();
        assert!(
            preserves_products(g, h, &phi16),
            "search returned a non-homomorphism"
        );
    }
    Ok(found)
}

/// All automorphisms of `g`, as a permutation group on the ranks of `g`.
///
/// Limited to `|g| <= 60` and to at most [`ORDER_BUDGET`] automorphisms.
pub fn automorphism_group(g: &FiniteGroup) -> Result<FiniteGroup> {
    let autos = automorphisms(g)?;
    let n = g.order();
    let all = FiniteGroup::new(n, autos)?;
    // regenerate from a small generating set
    let gens: Vec<Permutation> = all
        .subgroup_from_set(ElemSet::full(all.order()))
        .expect("whole group")
        .generators()
        .iter()
        .map(|&x| all.element(x).clone())
        .collect();
    let gens = if gens.is_empty() {
        vec![Permutation::identity(n)]
    } else {
        gens
    };
    let name = format!("Aut({})", g.name().unwrap_or("G"));
    Ok(FiniteGroup::new(n, gens)?.with_name(name))
}

/// Every automorphism of `g` as a permutation of its element ranks.
pub fn automorphisms(g: &FiniteGroup) -> Result<Vec<Permutation>> {
    if g.order() > AUTOMORPHISM_ORDER_LIMIT {
        return Err(GroupError::AutomorphismBudget(format!(
            "group order {} exceeds {}",
            g.order(),
            AUTOMORPHISM_ORDER_LIMIT
        )));
    }
    let mut search = iso_search(g, g)
        .map_err(|_| GroupError::AutomorphismBudget("generating tuple too long".to_string()))?;
    let mut out = Vec::new();
    search.run(&mut |phi| {
        if out.len() >= ORDER_BUDGET {
            return Err(GroupError::AutomorphismBudget(format!(
                "more than {ORDER_BUDGET} automorphisms"
            )));
        }
        let images: Vec<usize> = phi.iter().map(|&y| y as usize).collect();
        out.push(Permutation::from_images(&images).expect("automorphism is a bijection"));
        Ok(true)
    })?;
    Ok(out)
}

/// Every homomorphism `src -> dst`, each given by the images of
/// `src.generator_ranks()` (identity generators included).
pub fn homomorphisms(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    limit: usize,
) -> Result<Vec<Vec<usize>>> {
    let gens: Vec<usize> = src.generator_ranks().to_vec();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let o = src.element_order(x);
            (0..dst.order())
                .filter(|&y| o.is_multiple_of(dst.element_order(y)))
                .collect()
        })
        .collect();
    let mut search = MapSearch {
        src,
        dst,
        gens: &gens,
        candidates,
        mode: Mode::Homomorphism,
        nodes: 0,
        budget: SEARCH_BUDGET,
    };
    let mut out: Vec<Vec<usize>> = Vec::new();
    search.run(&mut |phi| {
        if out.len() >= limit {
            return Err(GroupError::SearchBudget(limit));
        }
        out.push(gens.iter().map(|&x| phi[x] as usize).collect());
        Ok(true)
    })?;
    Ok(out)
}
