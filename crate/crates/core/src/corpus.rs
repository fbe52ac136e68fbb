//! Group constructors, the recipe language naming them, and the
//! isomorphism-deduplicated corpus built from them.
//!
//! Recipe syntax:
//!
//! ```text
//! expr  := term (op term)*          left associative
//! op    := "x"                      direct product
//!        | ":" <k>                  semidirect product with action index k
//! term  := "(" expr ")" | atom
//! atom  := "1" | "C"<n> | "C"<p>"^"<k> | "D"<n> | "Dic"<n> | "S"<n> | "A"<n>
//!        | "Q8" | "SL(2,3)"
//! ```
//!
//! `D<n>` is the dihedral group of order `2n`, `Dic<n>` the dicyclic group of
//! order `n` (so `Dic8` is `Q8`), and `A :k B` is `A ⋊ B` for the `k`-th
//! homomorphism `B -> Aut(A)` in [`semidirect_actions`] order; `:0` is
//! always the trivial action.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use log::info;

use crate::error::{GroupError, Result};
use crate::iso::{self, AUTOMORPHISM_ORDER_LIMIT};
use crate::numtheory::is_prime;
use crate::perm::{FiniteGroup, Permutation, ORDER_BUDGET};

/// Most homomorphisms `B -> Aut(A)` enumerated for one pair.
pub const ACTION_LIMIT: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExplicitGroup {
    Q8,
    Sl23,
}

impl ExplicitGroup {
    pub fn name(self) -> &'static str {
        match self {
            ExplicitGroup::Q8 => "Q8",
            ExplicitGroup::Sl23 => "SL(2,3)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupRecipe {
    Cyclic(usize),
    /// Order `2n`, acting on `n` points.
    Dihedral(usize),
    /// Dicyclic group of the given order (a multiple of 4, at least 8).
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian(usize, usize),
    DirectProduct(Box<GroupRecipe>, Box<GroupRecipe>),
    /// `A ⋊ B` with the given action index.
    Semidirect(Box<GroupRecipe>, Box<GroupRecipe>, usize),
    Explicit(ExplicitGroup),
}

fn checked(v: Option<u64>) -> Result<u64> {
    v.ok_or_else(|| GroupError::Recipe("predicted order overflows".into()))
}

impl GroupRecipe {
    pub fn direct(a: GroupRecipe, b: GroupRecipe) -> Self {
        GroupRecipe::DirectProduct(Box::new(a), Box::new(b))
    }

    pub fn semidirect(a: GroupRecipe, b: GroupRecipe, action: usize) -> Self {
        GroupRecipe::Semidirect(Box::new(a), Box::new(b), action)
    }

    /// Checks parameters and returns the order the recipe will have.
    pub fn predicted_order(&self) -> Result<u64> {
        let bad = |m: String| Err(GroupError::Recipe(m));
        Ok(match self {
            GroupRecipe::Cyclic(n) => {
                if *n == 0 {
                    return bad("C0 is not a group".into());
                }
                *n as u64
            }
            GroupRecipe::Dihedral(n) => {
                if *n < 3 {
                    return bad(format!("D{n} needs n >= 3"));
                }
                checked((*n as u64).checked_mul(2))?
            }
            GroupRecipe::Dicyclic(n) => {
                if *n < 8 || n % 4 != 0 {
                    return bad(format!(
                        "Dic{n} needs an order divisible by 4 and at least 8"
                    ));
                }
                *n as u64
            }
            GroupRecipe::Symmetric(n) | GroupRecipe::Alternating(n) => {
                if *n == 0 {
                    return bad("degree 0".into());
                }
                let mut f: u64 = 1;
                for k in 2..=*n as u64 {
                    f = checked(f.checked_mul(k))?;
                }
                if matches!(self, GroupRecipe::Alternating(_)) && *n >= 2 {
                    f / 2
                } else {
                    f
                }
            }
            GroupRecipe::ElementaryAbelian(p, k) => {
                if !is_prime(*p) {
                    return bad(format!("{p} is not a prime"));
                }
                if *k == 0 {
                    return bad("exponent 0".into());
                }
                let k = u32::try_from(*k)
                    .map_err(|_| GroupError::Recipe("exponent too large".into()))?;
                checked((*p as u64).checked_pow(k))?
            }
            GroupRecipe::DirectProduct(a, b) | GroupRecipe::Semidirect(a, b, _) => {
                checked(a.predicted_order()?.checked_mul(b.predicted_order()?))?
            }
            GroupRecipe::Explicit(ExplicitGroup::Q8) => 8,
            GroupRecipe::Explicit(ExplicitGroup::Sl23) => 24,
        })
    }

    /// Builds the group. See [`materialize`].
    pub fn materialize(&self) -> Result<FiniteGroup> {
        materialize(self)
    }
}

fn cycle(n: usize) -> Permutation {
    let images: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    Permutation::from_images(&images).expect("cycle")
}

/// Right regular representation of a group given by a multiplication rule
/// on `0..n`, generated by `gens`.
fn regular(n: usize, gens: &[usize], mul: impl Fn(usize, usize) -> usize) -> Result<FiniteGroup> {
    let perms = gens
        .iter()
        .map(|&g| {
            let images: Vec<usize> = (0..n).map(|x| mul(x, g)).collect();
            Permutation::from_images(&images)
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::new(n, perms)
}

fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    FiniteGroup::new(n, vec![cycle(n)])
}

fn dihedral(n: usize) -> Result<FiniteGroup> {
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    FiniteGroup::new(n, vec![cycle(n), Permutation::from_images(&reflection)?])
}

/// `<a, x | a^(2m) = 1, x^2 = a^m, a^x = a^-1>` of order `4m`, on itself.
/// Element `a^i x^j` is point `i + 2m j`.
fn dicyclic(order: usize) -> Result<FiniteGroup> {
    let m = order / 4;
    let n2 = 2 * m;
    let mul = |u: usize, v: usize| {
        let (i, j) = (u % n2, u / n2);
        let (k, l) = (v % n2, v / n2);
        match (j, l) {
            (0, _) => (i + k) % n2 + n2 * l,
            (_, 0) => (i + n2 - k) % n2 + n2,
            _ => (i + n2 - k + m) % n2,
        }
    };
    regular(order, &[1, n2], mul)
}

fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n <= 2 {
        return cyclic_group(n.max(1));
    }
    FiniteGroup::new(n, vec![Permutation::from_cycles(n, &[&[0, 1]])?, cycle(n)])
}

fn alternating(n: usize) -> Result<FiniteGroup> {
    if n <= 2 {
        return cyclic_group(1);
    }
    let gens = (2..n)
        .map(|i| Permutation::from_cycles(n, &[&[0, 1, i]]))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::new(n, gens)
}

/// `SL(2,3)` acting on the eight nonzero row vectors of `F_3^2` by `v -> vM`.
fn sl23() -> Result<FiniteGroup> {
    let point = |x: usize, y: usize| 3 * x + y - 1;
    let act = |m: [[usize; 2]; 2]| -> Result<Permutation> {
        let mut images = vec![0; 8];
        for x in 0..3 {
            for y in 0..3 {
                if x == 0 && y == 0 {
                    continue;
                }
                let nx = (x * m[0][0] + y * m[1][0]) % 3;
                let ny = (x * m[0][1] + y * m[1][1]) % 3;
                images[point(x, y)] = point(nx, ny);
            }
        }
        Permutation::from_images(&images)
    };
    FiniteGroup::new(8, vec![act([[1, 1], [0, 1]])?, act([[1, 0], [1, 1]])?])
}

fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let (da, db) = (a.degree(), b.degree());
    let left = a.generators().iter().map(|g| {
        let mut images = g.images();
        images.extend(da..da + db);
        images
    });
    let right = b.generators().iter().map(|g| {
        let mut images: Vec<usize> = (0..da).collect();
        images.extend(g.images().into_iter().map(|y| y + da));
        images
    });
    let gens = left
        .chain(right)
        .map(|im| Permutation::from_images(&im))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::new(da + db, gens)
}

/// Homomorphisms `B -> Aut(A)` with everything needed to build products.
pub struct SemidirectActions {
    /// Automorphisms of `A` as permutations of its element ranks.
    pub automorphisms: Arc<FiniteGroup>,
    /// Each action as the images in `automorphisms` of `B`'s generators.
    pub actions: Vec<Vec<usize>>,
}

/// All homomorphisms `B -> Aut(A)`, trivial action first.
pub fn semidirect_actions(a: &FiniteGroup, b: &FiniteGroup) -> Result<SemidirectActions> {
    if a.order() > AUTOMORPHISM_ORDER_LIMIT {
        return Err(GroupError::AutomorphismBudget(format!(
            "|A| = {} exceeds {}",
            a.order(),
            AUTOMORPHISM_ORDER_LIMIT
        )));
    }
    let aut = Arc::new(iso::automorphism_group(a)?);
    let actions = iso::homomorphisms(b, &aut, ACTION_LIMIT)?;
    debug_assert!(actions
        .first()
        .is_some_and(|h| h.iter().all(|&x| x == FiniteGroup::IDENTITY)));
    Ok(SemidirectActions {
        automorphisms: aut,
        actions,
    })
}

/// Action indices `0..k` of the homomorphisms `B -> Aut(A)`.
pub fn enumerate_semidirect_actions(a: &FiniteGroup, b: &FiniteGroup) -> Result<Vec<usize>> {
    Ok((0..semidirect_actions(a, b)?.actions.len()).collect())
}

/// `A ⋊ B` on pairs `(b, a)` with `(b1, a1)(b2, a2) = (b1 b2, a1^b2 a2)`,
/// realised as its right regular representation.
fn semidirect_product(
    a: &FiniteGroup,
    b: &FiniteGroup,
    aut: &FiniteGroup,
    action: &[usize],
) -> Result<FiniteGroup> {
    let (m, k) = (a.order(), b.order());
    // phi[b] as a map on ranks of A, by walking B from the identity
    let mut phi: Vec<Option<Vec<usize>>> = vec![None; k];
    phi[FiniteGroup::IDENTITY] = Some((0..m).collect());
    let mut queue = vec![FiniteGroup::IDENTITY];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&s, &t) in b.generator_ranks().iter().zip(action) {
            let y = b.mul(x, s);
            if phi[y].is_none() {
                let auto = aut.element(t);
                let px = phi[x].as_ref().expect("visited");
                phi[y] = Some(px.iter().map(|&u| auto.image(u)).collect());
                queue.push(y);
            }
        }
        i += 1;
    }
    let phi: Vec<Vec<usize>> = phi
        .into_iter()
        .map(|p| p.expect("B is generated"))
        .collect();

    let mul = |u: usize, v: usize| {
        let (b1, a1) = (u / m, u % m);
        let (b2, a2) = (v / m, v % m);
        b.mul(b1, b2) * m + a.mul(phi[b2][a1], a2)
    };
    let gens: Vec<usize> = b
        .generator_ranks()
        .iter()
        .map(|&s| s * m)
        .chain(a.generator_ranks().iter().copied())
        .collect();
    regular(m * k, &gens, mul)
}

/// Builds the group a recipe names, as a faithful permutation group.
///
/// Fails with [`GroupError::OrderBudget`] when the predicted order exceeds
/// [`ORDER_BUDGET`].
pub fn materialize(r: &GroupRecipe) -> Result<FiniteGroup> {
    let predicted = r.predicted_order()?;
    if predicted > ORDER_BUDGET as u64 {
        return Err(GroupError::OrderBudget {
            limit: ORDER_BUDGET,
        });
    }
    let g = match r {
        GroupRecipe::Cyclic(n) => cyclic_group(*n)?,
        GroupRecipe::Dihedral(n) => dihedral(*n)?,
        GroupRecipe::Dicyclic(n) => dicyclic(*n)?,
        GroupRecipe::Symmetric(n) => symmetric(*n)?,
        GroupRecipe::Alternating(n) => alternating(*n)?,
        GroupRecipe::ElementaryAbelian(p, k) => {
            let c = cyclic_group(*p)?;
            let mut g = cyclic_group(*p)?;
            for _ in 1..*k {
                g = direct_product(&g, &c)?;
            }
            g
        }
        GroupRecipe::DirectProduct(a, b) => direct_product(&materialize(a)?, &materialize(b)?)?,
        GroupRecipe::Semidirect(a, b, k) => {
            let (ga, gb) = (materialize(a)?, materialize(b)?);
            let acts = semidirect_actions(&ga, &gb)?;
            let action = acts.actions.get(*k).ok_or_else(|| {
                GroupError::Recipe(format!(
                    "action index {k} out of range: {} has {} actions",
                    r,
                    acts.actions.len()
                ))
            })?;
            semidirect_product(&ga, &gb, &acts.automorphisms, action)?
        }
        GroupRecipe::Explicit(ExplicitGroup::Q8) => dicyclic(8)?,
        GroupRecipe::Explicit(ExplicitGroup::Sl23) => sl23()?,
    };
    assert_eq!(
        g.order() as u64,
        predicted,
        "{r} materialized with the wrong order"
    );
    Ok(g.with_name(r.to_string()))
}

impl fmt::Display for GroupRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operand(f: &mut fmt::Formatter<'_>, r: &GroupRecipe) -> fmt::Result {
            match r {
                GroupRecipe::DirectProduct(..) | GroupRecipe::Semidirect(..) => write!(f, "({r})"),
                _ => write!(f, "{r}"),
            }
        }
        match self {
            GroupRecipe::Cyclic(1) => write!(f, "1"),
            GroupRecipe::Cyclic(n) => write!(f, "C{n}"),
            GroupRecipe::Dihedral(n) => write!(f, "D{n}"),
            GroupRecipe::Dicyclic(n) => write!(f, "Dic{n}"),
            GroupRecipe::Symmetric(n) => write!(f, "S{n}"),
            GroupRecipe::Alternating(n) => write!(f, "A{n}"),
            GroupRecipe::ElementaryAbelian(p, k) => write!(f, "C{p}^{k}"),
            GroupRecipe::DirectProduct(a, b) => {
                operand(f, a)?;
                write!(f, " x ")?;
                operand(f, b)
            }
            GroupRecipe::Semidirect(a, b, k) => {
                operand(f, a)?;
                write!(f, " :{k} ")?;
                operand(f, b)
            }
            GroupRecipe::Explicit(e) => write!(f, "{}", e.name()),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(GroupError::Recipe(format!("{msg} at byte {}", self.pos)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| GroupError::Recipe(format!("number too large at byte {start}")))
    }

    fn expr(&mut self, depth: usize) -> Result<GroupRecipe> {
        if depth > 64 {
            return self.err("nesting too deep");
        }
        let mut left = self.term(depth)?;
        loop {
            self.skip_ws();
            if self.eat("x") || self.eat("×") {
                let right = self.term(depth)?;
                left = GroupRecipe::direct(left, right);
            } else if self.eat(":") {
                let k = self.number()?;
                let right = self.term(depth)?;
                left = GroupRecipe::semidirect(left, right, k);
            } else {
                return Ok(left);
            }
        }
    }

    fn term(&mut self, depth: usize) -> Result<GroupRecipe> {
        self.skip_ws();
        if self.eat("(") {
            let inner = self.expr(depth + 1)?;
            self.skip_ws();
            if !self.eat(")") {
                return self.err("expected ')'");
            }
            return Ok(inner);
        }
        if self.eat("SL(2,3)") {
            return Ok(GroupRecipe::Explicit(ExplicitGroup::Sl23));
        }
        if self.eat("Q8") {
            return Ok(GroupRecipe::Explicit(ExplicitGroup::Q8));
        }
        if self.eat("Dic") {
            return Ok(GroupRecipe::Dicyclic(self.number()?));
        }
        if self.eat("C") {
            let n = self.number()?;
            if self.eat("^") {
                return Ok(GroupRecipe::ElementaryAbelian(n, self.number()?));
            }
            return Ok(GroupRecipe::Cyclic(n));
        }
        if self.eat("D") {
            return Ok(GroupRecipe::Dihedral(self.number()?));
        }
        if self.eat("S") {
            return Ok(GroupRecipe::Symmetric(self.number()?));
        }
        if self.eat("A") {
            return Ok(GroupRecipe::Alternating(self.number()?));
        }
        if self.eat("1") {
            return Ok(GroupRecipe::Cyclic(1));
        }
        self.err("expected a group")
    }
}

impl FromStr for GroupRecipe {
    type Err = GroupError;

    /// Parses the recipe syntax and validates parameters.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            s: s.as_bytes(),
            pos: 0,
        };
        let r = p.expr(0)?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return p.err("trailing input");
        }
        r.predicted_order()?;
        Ok(r)
    }
}

#[derive(Debug)]
pub struct CorpusEntry {
    /// How the group was built; absent for groups read from generators only.
    pub recipe: Option<GroupRecipe>,
    pub group: Arc<FiniteGroup>,
}

impl CorpusEntry {
    pub fn name(&self) -> &str {
        self.group.name().unwrap_or("?")
    }
}

/// Pairwise non-isomorphic groups of bounded order, sorted by order and
/// then by discovery.
#[derive(Debug)]
pub struct Corpus {
    pub max_order: usize,
    pub groups: Vec<CorpusEntry>,
    /// Budget notices raised while building.
    pub notices: Vec<String>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &CorpusEntry> {
        self.groups.iter()
    }

    pub fn find(&self, name: &str) -> Option<&CorpusEntry> {
        self.groups.iter().find(|e| e.name() == name)
    }

    /// Member counts keyed by order, ascending.
    pub fn counts_by_order(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for e in &self.groups {
            match out.last_mut() {
                Some((o, c)) if *o == e.group.order() => *c += 1,
                _ => out.push((e.group.order(), 1)),
            }
        }
        out
    }
}

struct Builder {
    max_order: usize,
    members: Vec<CorpusEntry>,
    buckets: HashMap<u64, Vec<usize>>,
    notices: Vec<String>,
}

impl Builder {
    fn note(&mut self, msg: String) {
        info!("{msg}");
        self.notices.push(msg);
    }

    /// Adds `g` unless an isomorphic member is already present.
    fn offer(&mut self, recipe: GroupRecipe, g: FiniteGroup) -> bool {
        if g.order() > self.max_order {
            return false;
        }
        let key = iso::invariant_hash(&g);
        let bucket = self.buckets.get(&key).cloned().unwrap_or_default();
        for i in bucket {
            let other = &self.members[i].group;
            if !iso::same_invariants(&g, other) {
                continue;
            }
            match iso::isomorphic(&g, other) {
                Ok(true) => return false,
                Ok(false) => {}
                Err(e) => {
                    let msg = format!(
                        "{recipe} vs {}: {e}; kept as distinct",
                        other.name().unwrap_or("?")
                    );
                    self.note(msg);
                }
            }
        }
        let name = recipe.to_string();
        self.buckets
            .entry(key)
            .or_default()
            .push(self.members.len());
        self.members.push(CorpusEntry {
            recipe: Some(recipe),
            group: Arc::new(g.with_name(name)),
        });
        true
    }

    fn offer_recipe(&mut self, recipe: GroupRecipe) {
        match materialize(&recipe) {
            Ok(g) => {
                self.offer(recipe, g);
            }
            Err(e) => self.note(format!("{recipe}: {e}; skipped")),
        }
    }
}

fn base_recipes(max_order: usize) -> Vec<GroupRecipe> {
    let mut out = vec![GroupRecipe::Cyclic(1)];
    let fits = |r: &GroupRecipe| r.predicted_order().is_ok_and(|o| o <= max_order as u64);
    let mut push = |r: GroupRecipe| {
        if fits(&r) {
            out.push(r);
        }
    };
    for n in 2..=max_order {
        push(GroupRecipe::Cyclic(n));
    }
    push(GroupRecipe::Explicit(ExplicitGroup::Q8));
    push(GroupRecipe::Explicit(ExplicitGroup::Sl23));
    for n in 3..=max_order / 2 {
        push(GroupRecipe::Dihedral(n));
    }
    for n in (8..=max_order).step_by(4) {
        push(GroupRecipe::Dicyclic(n));
    }
    for n in 3..=5 {
        push(GroupRecipe::Symmetric(n));
        push(GroupRecipe::Alternating(n));
    }
    for p in 2..=max_order {
        if !is_prime(p) {
            continue;
        }
        let mut k = 2;
        while (p as u64).pow(k as u32) <= max_order as u64 {
            push(GroupRecipe::ElementaryAbelian(p, k));
            k += 1;
        }
    }
    out
}

/// Representatives of the action classes under conjugation by `Aut(A)`;
/// conjugate actions give isomorphic products.
fn action_class_representatives(acts: &SemidirectActions) -> Vec<usize> {
    let aut = &acts.automorphisms;
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
    let mut reps = Vec::new();
    for (i, act) in acts.actions.iter().enumerate() {
        if seen.contains_key(act) {
            continue;
        }
        reps.push(i);
        for alpha in 0..aut.order() {
            let conj: Vec<usize> = act.iter().map(|&t| aut.conj(t, alpha)).collect();
            seen.insert(conj, ());
        }
    }
    reps
}

/// Closes the base families under direct and semidirect products up to
/// `max_order`, keeping one member per isomorphism class.
///
/// Pairs whose isomorphism test exceeds its budget are kept as distinct
/// and logged. Semidirect products `A ⋊ B` are tried for one action per
/// class under conjugation by `Aut(A)`, and only for `|A| <= 60`.
pub fn build_corpus(max_order: usize) -> Result<Corpus> {
    if max_order == 0 || max_order > ORDER_BUDGET {
        return Err(GroupError::OrderBudget {
            limit: ORDER_BUDGET,
        });
    }
    let mut b = Builder {
        max_order,
        members: Vec::new(),
        buckets: HashMap::new(),
        notices: Vec::new(),
    };
    for r in base_recipes(max_order) {
        b.offer_recipe(r);
    }

    let mut actions: HashMap<(usize, usize), Option<Arc<SemidirectActions>>> = HashMap::new();
    let mut done = 0;
    while done < b.members.len() {
        let upto = b.members.len();
        // every pair with at least one member new since the last round
        for j in 0..upto {
            for i in 0..upto {
                if i.max(j) < done {
                    continue;
                }
                let (oa, ob) = (b.members[i].group.order(), b.members[j].group.order());
                if oa == 1 || ob == 1 || oa * ob > max_order {
                    continue;
                }
                if i <= j {
                    let r = GroupRecipe::direct(
                        b.members[i].recipe.clone().expect("built"),
                        b.members[j].recipe.clone().expect("built"),
                    );
                    let g = direct_product(&b.members[i].group, &b.members[j].group)?;
                    b.offer(r, g);
                }
                if oa > AUTOMORPHISM_ORDER_LIMIT {
                    continue;
                }
                let acts = actions
                    .entry((i, j))
                    .or_insert_with(|| {
                        semidirect_actions(&b.members[i].group, &b.members[j].group)
                            .map(Arc::new)
                            .ok()
                    })
                    .clone();
                let Some(acts) = acts else {
                    let msg = format!(
                        "{} :k {}: action enumeration over budget; skipped",
                        b.members[i].name(),
                        b.members[j].name()
                    );
                    b.note(msg);
                    continue;
                };
                for k in action_class_representatives(&acts) {
                    if k == 0 {
                        continue;
                    }
                    let (ga, gb) = (b.members[i].group.clone(), b.members[j].group.clone());
                    let g = semidirect_product(&ga, &gb, &acts.automorphisms, &acts.actions[k])?;
                    let r = GroupRecipe::semidirect(
                        b.members[i].recipe.clone().expect("built"),
                        b.members[j].recipe.clone().expect("built"),
                        k,
                    );
                    b.offer(r, g);
                }
            }
        }
        done = upto;
    }

    let mut groups = b.members;
    // stable: ties keep discovery order
    groups.sort_by_key(|e| e.group.order());
    Ok(Corpus {
        max_order,
        groups,
        notices: b.notices,
    })
}
