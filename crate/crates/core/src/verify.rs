//! ICΦ-subgroups and one verifier per statement.
//!
//! `H` is an ICΦ-subgroup of `K` when `H ∩ [H,K] ≤ Φ(H)`. Each verifier
//! evaluates its statement's hypothesis on a group and, when it holds,
//! checks the conclusion. Existential hypotheses are searched exhaustively
//! and the witnesses found are recorded.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::corpus::{ExplicitGroup, GroupRecipe};
use crate::error::{GroupError, Result};
use crate::iso;
use crate::lattice::{SubgroupLattice, View};
use crate::numtheory::{gcd, is_power_of, omega, prime_divisors, prime_power};
use crate::perm::{ElemSet, FiniteGroup, Subgroup};

macro_rules! statements {
    ($($id:ident => $title:literal,)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum StatementId { $($id,)* }

        impl StatementId {
            pub const ALL: &'static [StatementId] = &[$(StatementId::$id,)*];

            pub fn as_str(self) -> &'static str {
                match self { $(StatementId::$id => stringify!($id),)* }
            }

            /// One-line statement summary.
            pub fn title(self) -> &'static str {
                match self { $(StatementId::$id => $title,)* }
            }
        }
    };
}

statements! {
    T11 => "some |D| makes all order-|D| subgroups of a Sylow p-subgroup ICΦ => p-nilpotent",
    T12 => "Q8-free and all order-2 subgroups ICΦ => 2-nilpotent",
    T13 => "G/E supersolvable, maximal subgroups of Sylows of E ICΦ => supersolvable",
    T14 => "G/E supersolvable, Sylows of E cyclic or with an ICΦ order => supersolvable",
    T15 => "G/E supersolvable, Sylows of F*(E) cyclic or with an ICΦ order => supersolvable",
    T16 => "abelian <=> Q8-free with all subgroups ICΦ <=> Q8-free with all primary subgroups ICΦ",
    T17 => "all maximal subgroups ICΦ => nilpotent",
    T18 => "a nontrivial 2-maximal subgroup, all 2-maximal subgroups ICΦ => nilpotent",
    T19 => "a nontrivial 3-maximal subgroup, all 3-maximal subgroups ICΦ => nilpotent or SL(2,3)",
    L01 => "ICΦ passes to overgroups, to H/N, and to HN/N for p-groups H and p'-groups N",
    L02 => "a proper nontrivial ICΦ-subgroup => not simple",
    L03 => "an ICΦ-subgroup containing G' => nilpotent",
    L04 => "minimal non-nilpotent => p^a q^b, normal Sylow P, cyclic Sylow q, P/Φ(P) chief",
    L05 => "Q8-free minimal non-2-nilpotent => elementary abelian Sylow 2-subgroup",
    L06 => "N(H)/C(H) a p-group for all p-subgroups H => p-nilpotent",
    L07 => "cyclic Sylow for the smallest prime p => p-nilpotent",
    L08 => "normal p-subgroup P with G/C(P) a p-group => P in the hypercenter",
    L09 => "G/E supersolvable and E in Z_U(G) => supersolvable",
    L10 => "F*(E) in Z_U(G) => E in Z_U(G)",
    L11 => "p-group with a unique subgroup of order p => cyclic or generalized quaternion",
    L12 => "1 the only 2-maximal subgroup => order pq",
    L13 => "1 the only 3-maximal subgroup => order pqr",
    L14 => "solvable => maximal subgroups have prime-power index",
    L15 => "Aut(Q8) is isomorphic to S4",
    L16 => "2-closed of order 24 with Sylow 2-subgroup Q8 => Q8 x C3 or SL(2,3)",
    L17 => "normal p-subgroup with an ICΦ order => in the hypercenter",
    L18 => "p-group with all subgroups ICΦ, Q8-free if p = 2 => abelian",
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown statement id {0:?}")]
pub struct UnknownStatement(pub String);

impl FromStr for StatementId {
    type Err = UnknownStatement;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        StatementId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownStatement(s.to_string()))
    }
}

impl Serialize for StatementId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    Satisfied,
    Vacuous,
    NotSatisfied,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    Verified,
    Violated,
    NotEvaluated,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::Satisfied => "satisfied",
            Hypothesis::Vacuous => "vacuous",
            Hypothesis::NotSatisfied => "not-satisfied",
        })
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::Verified => "verified",
            Conclusion::Violated => "violated",
            Conclusion::NotEvaluated => "not-evaluated",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationVerdict {
    pub group: String,
    pub statement: StatementId,
    pub hypothesis: Hypothesis,
    pub conclusion: Conclusion,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Hypothesis, conclusion and witness of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub hypothesis: Hypothesis,
    pub conclusion: Conclusion,
    pub witness: Option<String>,
}

impl Outcome {
    fn holds(ok: bool, witness: impl Into<String>) -> Self {
        Outcome {
            hypothesis: Hypothesis::Satisfied,
            conclusion: if ok {
                Conclusion::Verified
            } else {
                Conclusion::Violated
            },
            witness: Some(witness.into()),
        }
    }

    fn unmet(witness: impl Into<String>) -> Self {
        Outcome {
            hypothesis: Hypothesis::NotSatisfied,
            conclusion: Conclusion::NotEvaluated,
            witness: Some(witness.into()),
        }
    }

    fn vacuous(witness: impl Into<String>) -> Self {
        Outcome {
            hypothesis: Hypothesis::Vacuous,
            conclusion: Conclusion::NotEvaluated,
            witness: Some(witness.into()),
        }
    }

    fn budget(e: &GroupError) -> Self {
        Outcome::unmet(format!("budget: {e}"))
    }
}

/// `H ∩ [H,G] ≤ Φ(H)`, with `Φ(H)` computed from `H` as a group in its own
/// right and pulled back into `G`.
pub fn is_icphi_subgroup(h: &Subgroup, g: &FiniteGroup) -> Result<bool> {
    g.check_parent(h)?;
    let comm = g.commutator_subgroup(h, &g.whole());
    let (hg, embed) = g.subgroup_as_group(h);
    let lat = SubgroupLattice::new(Arc::new(hg))?;
    let phi: ElemSet = lat
        .subgroup(lat.whole().frattini())
        .elements()
        .iter()
        .map(|x| embed[x])
        .collect();
    Ok(h.elements().intersection(comm.elements()).is_subset(&phi))
}

struct References {
    sl23: FiniteGroup,
    q8_c3: FiniteGroup,
    s4: FiniteGroup,
}

fn references() -> &'static References {
    static REFS: OnceLock<References> = OnceLock::new();
    REFS.get_or_init(|| {
        let build = |r: GroupRecipe| r.materialize().expect("reference groups fit the budget");
        References {
            sl23: build(GroupRecipe::Explicit(ExplicitGroup::Sl23)),
            q8_c3: build(GroupRecipe::direct(
                GroupRecipe::Explicit(ExplicitGroup::Q8),
                GroupRecipe::Cyclic(3),
            )),
            s4: build(GroupRecipe::Symmetric(4)),
        }
    })
}

/// A group's lattice plus the caches the verifiers share.
pub struct GroupAnalysis {
    lat: SubgroupLattice,
    comm_g: Vec<usize>,
    icphi: Vec<bool>,
    pair_cache: RefCell<HashMap<(usize, usize), bool>>,
    q8_free: RefCell<HashMap<usize, bool>>,
    hypercenter: OnceLock<usize>,
    u_hypercenter: OnceLock<usize>,
}

impl GroupAnalysis {
    pub fn new(g: Arc<FiniteGroup>) -> Result<Self> {
        Ok(Self::from_lattice(SubgroupLattice::new(g)?))
    }

    pub fn from_lattice(lat: SubgroupLattice) -> Self {
        let top = lat.whole_index();
        let comm_g: Vec<usize> = (0..lat.len()).map(|h| lat.commutator(h, top)).collect();
        let icphi = (0..lat.len())
            .map(|h| icphi_given(&lat, h, comm_g[h]))
            .collect();
        GroupAnalysis {
            lat,
            comm_g,
            icphi,
            pair_cache: RefCell::new(HashMap::new()),
            q8_free: RefCell::new(HashMap::new()),
            hypercenter: OnceLock::new(),
            u_hypercenter: OnceLock::new(),
        }
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lat
    }

    pub fn group(&self) -> &FiniteGroup {
        self.lat.group()
    }

    fn whole(&self) -> View<'_> {
        self.lat.whole()
    }

    /// Whether subgroup `h` is an ICΦ-subgroup of the whole group.
    pub fn is_icphi(&self, h: usize) -> bool {
        self.icphi[h]
    }

    /// Whether subgroup `h` is an ICΦ-subgroup of subgroup `k >= h`.
    pub fn is_icphi_in(&self, h: usize, k: usize) -> bool {
        debug_assert!(self.lat.contains(h, k));
        if k == self.lat.whole_index() {
            return self.icphi[h];
        }
        if let Some(&v) = self.pair_cache.borrow().get(&(h, k)) {
            return v;
        }
        let v = icphi_given(&self.lat, h, self.lat.commutator(h, k));
        self.pair_cache.borrow_mut().insert((h, k), v);
        v
    }

    /// Indices of the ICΦ-subgroups of the whole group.
    pub fn icphi_subgroups(&self) -> Vec<usize> {
        (0..self.lat.len()).filter(|&h| self.icphi[h]).collect()
    }

    fn q8_free(&self, x: usize) -> bool {
        if let Some(&v) = self.q8_free.borrow().get(&x) {
            return v;
        }
        let v = self.lat.view(x).is_q8_free();
        self.q8_free.borrow_mut().insert(x, v);
        v
    }

    fn hypercenter(&self) -> usize {
        *self.hypercenter.get_or_init(|| self.whole().hypercenter())
    }

    fn u_hypercenter(&self) -> usize {
        *self
            .u_hypercenter
            .get_or_init(|| self.whole().u_hypercenter())
    }

    fn describe(&self, i: usize) -> String {
        let g = self.group();
        let s = self.lat.subgroup(i);
        let gens: Vec<String> = s
            .generators()
            .iter()
            .map(|&x| g.element(x).to_string())
            .collect();
        format!("#{i} (order {}) <{}>", s.order(), gens.join(", "))
    }

    fn subgroups_of_order(&self, top: usize, d: usize) -> impl Iterator<Item = usize> + '_ {
        self.lat
            .below(top)
            .iter()
            .copied()
            .filter(move |&i| self.lat.order_of(i) == d)
    }

    fn is_cyclic(&self, i: usize) -> bool {
        self.lat.view(i).is_cyclic()
    }

    /// Smallest `d = |D|` such that every order-`d` subgroup of the
    /// `p`-subgroup `pp` is ICΦ in the whole group, subject to the extra
    /// demand on cyclic subgroups of order 4 whenever `order4(d)` holds.
    fn d_condition(&self, pp: usize, p: usize, order4: impl Fn(usize) -> bool) -> Option<usize> {
        let top = self.lat.order_of(pp);
        let mut d = p;
        while d <= top {
            let all = self.subgroups_of_order(pp, d).all(|x| self.icphi[x]);
            let extra = !order4(d)
                || self
                    .subgroups_of_order(pp, 4)
                    .filter(|&x| self.is_cyclic(x))
                    .all(|x| self.icphi[x]);
            if all && extra {
                return Some(d);
            }
            d *= p;
        }
        None
    }

    /// Class representatives, one subgroup per conjugacy class. Every
    /// property checked on them is invariant under conjugation.
    fn class_representatives(&self) -> Vec<usize> {
        self.lat.conjugacy_classes().iter().map(|c| c[0]).collect()
    }

    /// `Φ(X/N)` pulled back: the intersection of the maximal subgroups of
    /// `X` containing `N`, or `N` itself when `X = N`.
    fn frattini_over(&self, x: usize, n: usize) -> ElemSet {
        let mut out: Option<ElemSet> = None;
        for &m in self.lat.maximal_in(x) {
            if self.lat.contains(n, m) {
                let s = *self.lat.subgroup(m).elements();
                out = Some(match out {
                    None => s,
                    Some(acc) => acc.intersection(&s),
                });
            }
        }
        out.unwrap_or(*self.lat.subgroup(x).elements())
    }

    /// Whether `X/N` is ICΦ in `G/N`, for normal `N <= X`, read off the
    /// lattice: `X ∩ [X,G]N <= Φ(X/N)` pulled back.
    fn icphi_mod(&self, x: usize, n: usize) -> bool {
        let comm_n = self.lat.join(self.comm_g[x], n);
        let lhs = self
            .lat
            .subgroup(x)
            .elements()
            .intersection(self.lat.subgroup(comm_n).elements());
        lhs.is_subset(&self.frattini_over(x, n))
    }

    /// Runs the verifier for `s`. `None` when the statement has no row for
    /// this group (only `L15`, which concerns `Q8` alone).
    pub fn verify(&self, s: StatementId) -> Option<Outcome> {
        use StatementId::*;
        Some(match s {
            T11 => self.t11(),
            T12 => self.t12(),
            T13 => self.t13(),
            T14 => self.t14_15(false),
            T15 => self.t14_15(true),
            T16 => self.t16(),
            T17 => self.t17(),
            T18 => self.t18_19(2),
            T19 => self.t18_19(3),
            L01 => self.l01(),
            L02 => self.l02(),
            L03 => self.l03(),
            L04 => self.l04(),
            L05 => self.l05(),
            L06 => self.l06(),
            L07 => self.l07(),
            L08 => self.l08(),
            L09 => self.l09(),
            L10 => self.l10(),
            L11 => self.l11(),
            L12 => self.l12_13(2),
            L13 => self.l12_13(3),
            L14 => self.l14(),
            L15 => return self.l15(),
            L16 => self.l16(),
            L17 => self.l17(),
            L18 => self.l18(),
        })
    }

    fn t11(&self) -> Outcome {
        let w = self.whole();
        if w.order() == 1 {
            return Outcome::vacuous("trivial group has no prime divisor");
        }
        let mut hits = Vec::new();
        for p in prime_divisors(w.order()) {
            let pp = w.sylow(p).expect("prime");
            let big = self.lat.order_of(pp) >= 8;
            if let Some(d) = self.d_condition(pp, p, |d| d == 2 && big) {
                hits.push((p, d));
            }
        }
        if hits.is_empty() {
            return Outcome::unmet("no prime p admits a suitable |D|");
        }
        let bad: Vec<usize> = hits
            .iter()
            .map(|&(p, _)| p)
            .filter(|&p| !w.is_p_nilpotent(p))
            .collect();
        let found: Vec<String> = hits.iter().map(|(p, d)| format!("p={p} |D|={d}")).collect();
        if bad.is_empty() {
            Outcome::holds(true, found.join("; "))
        } else {
            Outcome::holds(
                false,
                format!("{}; not p-nilpotent for p in {bad:?}", found.join("; ")),
            )
        }
    }

    fn t12(&self) -> Outcome {
        let top = self.lat.whole_index();
        if !self.q8_free(top) {
            return Outcome::unmet("G has a section isomorphic to Q8");
        }
        if let Some(x) = self.subgroups_of_order(top, 2).find(|&x| !self.icphi[x]) {
            return Outcome::unmet(format!("{} is not ICΦ", self.describe(x)));
        }
        let ok = self.whole().is_p_nilpotent(2);
        Outcome::holds(ok, if ok { "2-nilpotent" } else { "not 2-nilpotent" })
    }

    fn normal_subgroups(&self) -> Vec<usize> {
        self.whole().normal_subgroups()
    }

    fn t13(&self) -> Outcome {
        let w = self.whole();
        let witness = self.normal_subgroups().into_iter().find(|&e| {
            if !w.quotient_is_supersolvable(e) {
                return false;
            }
            let ev = self.lat.view(e);
            prime_divisors(ev.order()).into_iter().all(|p| {
                ev.sylow_subgroups(p)
                    .into_iter()
                    .all(|pp| self.lat.maximal_in(pp).iter().all(|&m| self.icphi[m]))
            })
        });
        match witness {
            None => Outcome::unmet("no normal E qualifies"),
            Some(e) => {
                let ok = w.is_supersolvable();
                Outcome::holds(ok, format!("E = {}", self.describe(e)))
            }
        }
    }

    /// Per-prime condition of T14/T15/L17 on the Sylow subgroups `sylows`
    /// (ascending primes): cyclic, or a suitable `|D|`.
    fn sylow_condition(&self, sylows: &[(usize, usize)]) -> Option<Vec<String>> {
        let mut out = Vec::new();
        for &(p, pp) in sylows {
            if self.is_cyclic(pp) {
                out.push(format!("p={p} cyclic"));
                continue;
            }
            let needs4 = p == 2 && !self.q8_free(pp);
            let d = self.d_condition(pp, p, |d| needs4 && d == 2)?;
            out.push(format!("p={p} |D|={d}"));
        }
        Some(out)
    }

    fn t14_15(&self, fstar: bool) -> Outcome {
        let w = self.whole();
        if w.order() == 1 {
            return Outcome::vacuous("no nontrivial normal subgroup");
        }
        for e in self.normal_subgroups() {
            if e == SubgroupLattice::TRIVIAL || !w.quotient_is_supersolvable(e) {
                continue;
            }
            let ev = self.lat.view(e);
            let base = if fstar { ev.generalized_fitting() } else { e };
            let bv = self.lat.view(base);
            let sylows: Vec<(usize, usize)> = prime_divisors(bv.order())
                .into_iter()
                .map(|p| (p, bv.sylow(p).expect("prime")))
                .collect();
            if let Some(parts) = self.sylow_condition(&sylows) {
                let ok = w.is_supersolvable();
                let what = if fstar { "F*(E)" } else { "E" };
                return Outcome::holds(
                    ok,
                    format!("E = {}, {what}: {}", self.describe(e), parts.join("; ")),
                );
            }
        }
        Outcome::unmet("no nontrivial normal E qualifies")
    }

    fn t16(&self) -> Outcome {
        let top = self.lat.whole_index();
        let abelian = self.whole().is_abelian();
        let q8_free = self.q8_free(top);
        let all = self.icphi.iter().all(|&b| b);
        let primary = (0..self.lat.len())
            .filter(|&i| self.lat.order_of(i) == 1 || prime_power(self.lat.order_of(i)).is_some())
            .all(|i| self.icphi[i]);
        let clauses = [abelian, q8_free && all, q8_free && primary];
        let witness = format!("(1) {} (2) {} (3) {}", clauses[0], clauses[1], clauses[2]);
        if !clauses.iter().any(|&c| c) {
            return Outcome::unmet(witness);
        }
        Outcome::holds(clauses.iter().all(|&c| c), witness)
    }

    fn t17(&self) -> Outcome {
        let w = self.whole();
        if let Some(&m) = w.maximal_subgroups().iter().find(|&&m| !self.icphi[m]) {
            return Outcome::unmet(format!("maximal {} is not ICΦ", self.describe(m)));
        }
        let ok = w.is_nilpotent();
        Outcome::holds(
            ok,
            format!("{} maximal subgroups, all ICΦ", w.maximal_subgroups().len()),
        )
    }

    fn t18_19(&self, n: usize) -> Outcome {
        let w = self.whole();
        let nmax = w.n_maximal_subgroups(n);
        if nmax.iter().all(|&x| x == SubgroupLattice::TRIVIAL) {
            return Outcome::vacuous(format!("no nontrivial {n}-maximal subgroup"));
        }
        if let Some(&x) = nmax.iter().find(|&&x| !self.icphi[x]) {
            return Outcome::unmet(format!("{n}-maximal {} is not ICΦ", self.describe(x)));
        }
        let witness = format!("{} {n}-maximal subgroups, all ICΦ", nmax.len());
        if w.is_nilpotent() {
            return Outcome::holds(true, format!("{witness}; nilpotent"));
        }
        if n == 2 {
            return Outcome::holds(false, format!("{witness}; not nilpotent"));
        }
        if w.order() != 24 {
            return Outcome::holds(
                false,
                format!("{witness}; not nilpotent, order {}", w.order()),
            );
        }
        match iso::isomorphic(self.group(), &references().sl23) {
            Ok(ok) => Outcome::holds(ok, format!("{witness}; isomorphic to SL(2,3): {ok}")),
            Err(e) => Outcome::budget(&e),
        }
    }

    fn l01(&self) -> Outcome {
        let lat = &self.lat;
        let top = lat.whole_index();
        let normals = self.normal_subgroups();
        let reps = self.class_representatives();
        let mut checked = 0usize;
        for &h in &reps {
            if !self.icphi[h] {
                continue;
            }
            // (1) H is ICΦ in every K between H and G
            for k in (h..lat.len()).filter(|&k| lat.contains(h, k)) {
                checked += 1;
                if !self.is_icphi_in(h, k) {
                    return Outcome::holds(
                        false,
                        format!(
                            "(1) H = {} not ICΦ in K = {}",
                            self.describe(h),
                            self.describe(k)
                        ),
                    );
                }
            }
        }
        for h in 0..lat.len() {
            if !self.icphi[h] {
                continue;
            }
            // (2) H/N is ICΦ in G/N for normal N <= H
            for &n in normals.iter().filter(|&&n| lat.contains(n, h)) {
                checked += 1;
                if !self.icphi_mod(h, n) {
                    return Outcome::holds(
                        false,
                        format!("(2) H = {}, N = {}", self.describe(h), self.describe(n)),
                    );
                }
            }
            // (3) HN/N is ICΦ in G/N for p-groups H and normal p'-groups N
            let oh = lat.order_of(h);
            let primes: Vec<usize> = match prime_power(oh) {
                Some((p, _)) => vec![p],
                None if oh == 1 => prime_divisors(lat.order_of(top)),
                None => Vec::new(),
            };
            for p in primes {
                for &n in normals.iter().filter(|&&n| gcd(lat.order_of(n), p) == 1) {
                    checked += 1;
                    let hn = lat.join(h, n);
                    if !self.icphi_mod(hn, n) {
                        return Outcome::holds(
                            false,
                            format!(
                                "(3) p = {p}, H = {}, N = {}",
                                self.describe(h),
                                self.describe(n)
                            ),
                        );
                    }
                }
            }
        }
        Outcome::holds(true, format!("{checked} configurations"))
    }

    fn l02(&self) -> Outcome {
        let top = self.lat.whole_index();
        let proper: Vec<usize> = (1..top).collect();
        if proper.is_empty() {
            return Outcome::vacuous("no proper nontrivial subgroup");
        }
        match proper.into_iter().find(|&h| self.icphi[h]) {
            None => Outcome::unmet("no proper nontrivial subgroup is ICΦ"),
            Some(h) => {
                let not_simple = (1..top).any(|n| self.lat.is_normal(n));
                Outcome::holds(not_simple, format!("H = {}", self.describe(h)))
            }
        }
    }

    fn l03(&self) -> Outcome {
        let derived = self.whole().derived();
        match (0..self.lat.len()).find(|&h| self.icphi[h] && self.lat.contains(derived, h)) {
            None => Outcome::unmet("no ICΦ-subgroup contains G'"),
            Some(h) => Outcome::holds(
                self.whole().is_nilpotent(),
                format!("H = {}", self.describe(h)),
            ),
        }
    }

    fn l04(&self) -> Outcome {
        let w = self.whole();
        if !w.is_minimal_non_nilpotent() {
            return Outcome::unmet("not minimal non-nilpotent");
        }
        let primes = prime_divisors(w.order());
        if primes.len() != 2 {
            return Outcome::holds(false, format!("(1) prime divisors {primes:?}"));
        }
        let split = [(primes[0], primes[1]), (primes[1], primes[0])]
            .into_iter()
            .find(|&(p, q)| {
                let pp = w.sylow(p).expect("prime");
                let qq = w.sylow(q).expect("prime");
                self.lat.is_normal(pp) && self.is_cyclic(qq)
            });
        let Some((p, _)) = split else {
            return Outcome::holds(false, "(1) no normal Sylow p with cyclic Sylow q");
        };
        let pp = w.sylow(p).expect("prime");
        let phi = self.lat.frattini_of(pp);
        let chief = self.lat.is_normal(phi)
            && !self.normal_subgroups().iter().any(|&n| {
                n != phi && n != pp && self.lat.contains(phi, n) && self.lat.contains(n, pp)
            });
        if !chief {
            return Outcome::holds(
                false,
                format!(
                    "(2) P/Φ(P) is not a chief factor, P = {}",
                    self.describe(pp)
                ),
            );
        }
        let pv = self.lat.view(pp);
        if pv.is_abelian() && !pv.is_elementary_abelian() {
            return Outcome::holds(false, "(3) P abelian but not elementary abelian");
        }
        Outcome::holds(true, format!("p = {p}, P = {}", self.describe(pp)))
    }

    fn l05(&self) -> Outcome {
        let w = self.whole();
        if !self.q8_free(self.lat.whole_index()) {
            return Outcome::unmet("not Q8-free");
        }
        if !w.is_minimal_non_2_nilpotent() {
            return Outcome::unmet("not minimal non-2-nilpotent");
        }
        let s = w.sylow(2).expect("prime");
        Outcome::holds(
            self.lat.view(s).is_elementary_abelian(),
            format!("Sylow 2-subgroup {}", self.describe(s)),
        )
    }

    fn l06(&self) -> Outcome {
        let w = self.whole();
        if w.order() == 1 {
            return Outcome::vacuous("trivial group");
        }
        let reps = self.class_representatives();
        let mut hits = Vec::new();
        for p in prime_divisors(w.order()) {
            let ok = reps
                .iter()
                .filter(|&&h| h != SubgroupLattice::TRIVIAL && is_power_of(self.lat.order_of(h), p))
                .all(|&h| w.automizer_is_p_group(h, p));
            if ok {
                hits.push(p);
            }
        }
        if hits.is_empty() {
            return Outcome::unmet("no prime p has all automizers p-groups");
        }
        let bad: Vec<usize> = hits
            .iter()
            .copied()
            .filter(|&p| !w.is_p_nilpotent(p))
            .collect();
        Outcome::holds(bad.is_empty(), format!("p in {hits:?}; failing {bad:?}"))
    }

    fn l07(&self) -> Outcome {
        let w = self.whole();
        if w.order() == 1 {
            return Outcome::vacuous("trivial group");
        }
        let p = prime_divisors(w.order())[0];
        let s = w.sylow(p).expect("prime");
        if !self.is_cyclic(s) {
            return Outcome::unmet(format!("Sylow {p}-subgroup is not cyclic"));
        }
        Outcome::holds(w.is_p_nilpotent(p), format!("p = {p}"))
    }

    fn normal_p_subgroups(&self) -> Vec<(usize, usize)> {
        self.normal_subgroups()
            .into_iter()
            .filter_map(|n| prime_power(self.lat.order_of(n)).map(|(p, _)| (p, n)))
            .collect()
    }

    fn l08(&self) -> Outcome {
        let w = self.whole();
        let cands = self.normal_p_subgroups();
        if cands.is_empty() {
            return Outcome::vacuous("no nontrivial normal p-subgroup");
        }
        let hits: Vec<(usize, usize)> = cands
            .into_iter()
            .filter(|&(p, n)| is_power_of(w.order() / self.lat.order_of(w.centralizer(n)), p))
            .collect();
        if hits.is_empty() {
            return Outcome::unmet("no normal p-subgroup P with G/C(P) a p-group");
        }
        let z = self.hypercenter();
        match hits.iter().find(|&&(_, n)| !self.lat.contains(n, z)) {
            Some(&(_, n)) => Outcome::holds(
                false,
                format!("P = {} not in the hypercenter", self.describe(n)),
            ),
            None => Outcome::holds(true, format!("{} subgroups P", hits.len())),
        }
    }

    fn l09(&self) -> Outcome {
        let w = self.whole();
        let z = self.u_hypercenter();
        let witness = self
            .normal_subgroups()
            .into_iter()
            .find(|&e| self.lat.contains(e, z) && w.quotient_is_supersolvable(e));
        match witness {
            None => Outcome::unmet("no normal E in Z_U(G) with G/E supersolvable"),
            Some(e) => Outcome::holds(w.is_supersolvable(), format!("E = {}", self.describe(e))),
        }
    }

    fn l10(&self) -> Outcome {
        if self.whole().order() == 1 {
            return Outcome::vacuous("no nontrivial normal subgroup");
        }
        let z = self.u_hypercenter();
        let hits: Vec<usize> = self
            .normal_subgroups()
            .into_iter()
            .filter(|&e| e != SubgroupLattice::TRIVIAL)
            .filter(|&e| self.lat.contains(self.lat.view(e).generalized_fitting(), z))
            .collect();
        if hits.is_empty() {
            return Outcome::unmet("no nontrivial normal E with F*(E) in Z_U(G)");
        }
        match hits.iter().find(|&&e| !self.lat.contains(e, z)) {
            Some(&e) => Outcome::holds(false, format!("E = {}", self.describe(e))),
            None => Outcome::holds(true, format!("{} subgroups E", hits.len())),
        }
    }

    fn l11(&self) -> Outcome {
        let mut hits = 0;
        for x in self.class_representatives() {
            let Some((p, _)) = prime_power(self.lat.order_of(x)) else {
                continue;
            };
            if self.subgroups_of_order(x, p).count() != 1 {
                continue;
            }
            hits += 1;
            let v = self.lat.view(x);
            if !(v.is_cyclic() || (p == 2 && v.is_generalized_quaternion())) {
                return Outcome::holds(false, format!("P = {}", self.describe(x)));
            }
        }
        if hits == 0 {
            return Outcome::vacuous("no nontrivial p-subgroup");
        }
        Outcome::holds(true, format!("{hits} p-subgroups up to conjugacy"))
    }

    fn l12_13(&self, n: usize) -> Outcome {
        let mut hits = 0;
        for x in self.class_representatives() {
            if self.lat.view(x).n_maximal_subgroups(n) != [SubgroupLattice::TRIVIAL] {
                continue;
            }
            hits += 1;
            if omega(self.lat.order_of(x)) as usize != n {
                return Outcome::holds(false, format!("X = {}", self.describe(x)));
            }
        }
        if hits == 0 {
            return Outcome::unmet(format!(
                "no subgroup has 1 as its only {n}-maximal subgroup"
            ));
        }
        Outcome::holds(true, format!("{hits} subgroups up to conjugacy"))
    }

    fn l14(&self) -> Outcome {
        let mut hits = 0;
        for x in self.class_representatives() {
            let v = self.lat.view(x);
            if x == SubgroupLattice::TRIVIAL || !v.is_solvable() {
                continue;
            }
            hits += 1;
            for &m in v.maximal_subgroups() {
                if prime_power(v.order() / self.lat.order_of(m)).is_none() {
                    return Outcome::holds(
                        false,
                        format!("M = {} in X = {}", self.describe(m), self.describe(x)),
                    );
                }
            }
        }
        if hits == 0 {
            return Outcome::unmet("no nontrivial solvable subgroup");
        }
        Outcome::holds(true, format!("{hits} solvable subgroups up to conjugacy"))
    }

    fn l15(&self) -> Option<Outcome> {
        if !self.whole().is_q8() {
            return None;
        }
        Some(match iso::automorphism_group(self.group()) {
            Err(e) => Outcome::budget(&e),
            Ok(aut) => match iso::isomorphic(&aut, &references().s4) {
                Ok(ok) => Outcome::holds(ok, format!("|Aut(Q8)| = {}", aut.order())),
                Err(e) => Outcome::budget(&e),
            },
        })
    }

    fn l16(&self) -> Outcome {
        let w = self.whole();
        if w.order() != 24 {
            return Outcome::unmet("order is not 24");
        }
        let s = w.sylow(2).expect("prime");
        if !self.lat.is_normal(s) {
            return Outcome::unmet("not 2-closed");
        }
        if !self.lat.view(s).is_q8() {
            return Outcome::unmet("Sylow 2-subgroup is not Q8");
        }
        let refs = references();
        let check = || -> Result<Option<&'static str>> {
            if iso::isomorphic(self.group(), &refs.q8_c3)? {
                return Ok(Some("Q8 x C3"));
            }
            if iso::isomorphic(self.group(), &refs.sl23)? {
                return Ok(Some("SL(2,3)"));
            }
            Ok(None)
        };
        match check() {
            Ok(Some(name)) => Outcome::holds(true, format!("isomorphic to {name}")),
            Ok(None) => Outcome::holds(false, "neither Q8 x C3 nor SL(2,3)"),
            Err(e) => Outcome::budget(&e),
        }
    }

    fn l17(&self) -> Outcome {
        let cands = self.normal_p_subgroups();
        if cands.is_empty() {
            return Outcome::vacuous("no nontrivial normal p-subgroup");
        }
        let mut hits = Vec::new();
        for (p, n) in cands {
            let needs4 = p == 2 && !self.q8_free(n);
            if let Some(d) = self.d_condition(n, p, |d| needs4 && d == 2) {
                hits.push((n, d));
            }
        }
        if hits.is_empty() {
            return Outcome::unmet("no normal p-subgroup admits a suitable |D|");
        }
        let z = self.hypercenter();
        match hits.iter().find(|&&(n, _)| !self.lat.contains(n, z)) {
            Some(&(n, d)) => Outcome::holds(false, format!("P = {}, |D| = {d}", self.describe(n))),
            None => Outcome::holds(true, format!("{} subgroups P", hits.len())),
        }
    }

    fn l18(&self) -> Outcome {
        let mut hits = 0;
        for x in self.class_representatives() {
            let Some((p, _)) = prime_power(self.lat.order_of(x)) else {
                continue;
            };
            let v = self.lat.view(x);
            // abelian p-groups meet the hypothesis and the conclusion alike
            if v.is_abelian() {
                hits += 1;
                continue;
            }
            let all = self.lat.below(x).iter().all(|&y| self.is_icphi_in(y, x));
            if !all || (p == 2 && !self.q8_free(x)) {
                continue;
            }
            return Outcome::holds(false, format!("P = {} is nonabelian", self.describe(x)));
        }
        if hits == 0 {
            return Outcome::vacuous("no nontrivial p-subgroup meets the hypothesis");
        }
        Outcome::holds(true, format!("{hits} p-subgroups up to conjugacy"))
    }
}

fn icphi_given(lat: &SubgroupLattice, h: usize, comm: usize) -> bool {
    if h == SubgroupLattice::TRIVIAL {
        return true;
    }
    lat.subgroup(h)
        .elements()
        .intersection(lat.subgroup(comm).elements())
        .is_subset(lat.subgroup(lat.frattini_of(h)).elements())
}

/// Verifies one statement on one group from scratch.
pub fn verify(g: Arc<FiniteGroup>, s: StatementId) -> Result<Option<VerificationVerdict>> {
    let name = g.name().unwrap_or("G").to_string();
    let a = GroupAnalysis::new(g)?;
    Ok(a.verify(s).map(|o| VerificationVerdict {
        group: name,
        statement: s,
        hypothesis: o.hypothesis,
        conclusion: o.conclusion,
        witness: o.witness,
    }))
}
