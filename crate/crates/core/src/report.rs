//! Running verifiers over a corpus and rendering the results.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::GroupFingerprint;
use crate::corpus::Corpus;
use crate::error::Result;
use crate::perm::FiniteGroup;
use crate::verify::{Conclusion, GroupAnalysis, Hypothesis, StatementId, VerificationVerdict};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub max_order: usize,
    pub statements: Vec<StatementId>,
    pub corpus_source: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub satisfied: usize,
    pub vacuous: usize,
    pub not_satisfied: usize,
    pub verified: usize,
    pub violated: usize,
}

impl Tally {
    fn add(&mut self, v: &VerificationVerdict) {
        match v.hypothesis {
            Hypothesis::Satisfied => self.satisfied += 1,
            Hypothesis::Vacuous => self.vacuous += 1,
            Hypothesis::NotSatisfied => self.not_satisfied += 1,
        }
        match v.conclusion {
            Conclusion::Verified => self.verified += 1,
            Conclusion::Violated => self.violated += 1,
            Conclusion::NotEvaluated => {}
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusSummary {
    pub size: usize,
    /// `(order, members)`, ascending.
    pub counts_by_order: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notices: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub config: RunConfig,
    pub corpus: CorpusSummary,
    /// Sorted by corpus position, then statement.
    pub verdicts: Vec<VerificationVerdict>,
    pub summary: BTreeMap<StatementId, Tally>,
    /// Wall time per statement in milliseconds, summed over groups. Only
    /// present when requested, since it varies between runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<StatementId, f64>>,
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub statements: Vec<StatementId>,
    pub jobs: usize,
    pub timings: bool,
    pub corpus_source: String,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            statements: StatementId::ALL.to_vec(),
            jobs: 1,
            timings: false,
            corpus_source: "builtin".to_string(),
        }
    }
}

fn run_group(
    g: &Arc<FiniteGroup>,
    statements: &[StatementId],
) -> Result<Vec<(VerificationVerdict, Duration)>> {
    let name = g.name().unwrap_or("G").to_string();
    let analysis = GroupAnalysis::new(Arc::clone(g))?;
    let mut out = Vec::with_capacity(statements.len());
    for &s in statements {
        let t = Instant::now();
        if let Some(o) = analysis.verify(s) {
            let verdict = VerificationVerdict {
                group: name.clone(),
                statement: s,
                hypothesis: o.hypothesis,
                conclusion: o.conclusion,
                witness: o.witness,
            };
            out.push((verdict, t.elapsed()));
        }
    }
    Ok(out)
}

/// Verifies every requested statement on every corpus member, `jobs`
/// groups at a time. The report does not depend on `jobs`.
pub fn run_verify(corpus: &Corpus, opts: &RunOptions) -> Result<RunReport> {
    let mut statements = opts.statements.clone();
    statements.sort_unstable();
    statements.dedup();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .expect("thread pool");
    let per_group: Vec<Result<Vec<(VerificationVerdict, Duration)>>> = pool.install(|| {
        corpus
            .groups
            .par_iter()
            .map(|e| run_group(&e.group, &statements))
            .collect()
    });

    let mut verdicts = Vec::new();
    let mut summary: BTreeMap<StatementId, Tally> =
        statements.iter().map(|&s| (s, Tally::default())).collect();
    let mut times: BTreeMap<StatementId, Duration> = BTreeMap::new();
    for rows in per_group {
        for (v, t) in rows? {
            summary.get_mut(&v.statement).expect("requested").add(&v);
            *times.entry(v.statement).or_default() += t;
            verdicts.push(v);
        }
    }

    Ok(RunReport {
        schema_version: REPORT_SCHEMA_VERSION,
        config: RunConfig {
            max_order: corpus.max_order,
            statements,
            corpus_source: opts.corpus_source.clone(),
        },
        corpus: CorpusSummary {
            size: corpus.len(),
            counts_by_order: corpus.counts_by_order(),
            notices: corpus.notices.clone(),
        },
        verdicts,
        summary,
        timings_ms: opts.timings.then(|| {
            times
                .into_iter()
                .map(|(s, t)| (s, t.as_secs_f64() * 1e3))
                .collect()
        }),
    })
}

impl RunReport {
    pub fn violations(&self) -> usize {
        self.summary.values().map(|t| t.violated).sum()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(
            out,
            "corpus: {} ({} groups, max order {})",
            c.corpus_source, self.corpus.size, c.max_order
        );
        for n in &self.corpus.notices {
            let _ = writeln!(out, "notice: {n}");
        }
        let _ = writeln!(out);
        for v in &self.verdicts {
            let _ = write!(
                out,
                "{:<28} {} {:<13} {:<13}",
                v.group,
                v.statement,
                v.hypothesis.to_string(),
                v.conclusion.to_string()
            );
            if let Some(w) = &v.witness {
                let _ = write!(out, " {w}");
            }
            let _ = writeln!(out);
        }
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "stmt  satisfied  vacuous  not-satisfied  verified  violated"
        );
        for (s, t) in &self.summary {
            let _ = write!(
                out,
                "{s}   {:>9}  {:>7}  {:>13}  {:>8}  {:>8}",
                t.satisfied, t.vacuous, t.not_satisfied, t.verified, t.violated
            );
            if let Some(ms) = self.timings_ms.as_ref().and_then(|m| m.get(s)) {
                let _ = write!(out, "  {ms:.1} ms");
            }
            let _ = writeln!(out);
        }
        let _ = writeln!(out, "violations: {}", self.violations());
        out
    }
}

/// What `analyze` prints about one group.
#[derive(Clone, Debug, Serialize)]
pub struct GroupSummary {
    pub name: String,
    pub order: usize,
    pub degree: usize,
    pub fingerprint: GroupFingerprint,
    pub predicates: BTreeMap<String, bool>,
    /// Orders of `Φ, Z, Z_∞, F, F*, Z_U`.
    pub characteristic_orders: BTreeMap<String, usize>,
    pub subgroup_count: usize,
    pub icphi_subgroups: Vec<String>,
}

impl GroupSummary {
    pub fn of(g: Arc<FiniteGroup>) -> Result<Self> {
        let a = GroupAnalysis::new(g)?;
        let lat = a.lattice();
        let w = lat.whole();
        let g = lat.group();
        let mut predicates = BTreeMap::new();
        for (k, v) in [
            ("abelian", w.is_abelian()),
            ("cyclic", w.is_cyclic()),
            ("elementary abelian", w.is_elementary_abelian()),
            ("nilpotent", w.is_nilpotent()),
            ("supersolvable", w.is_supersolvable()),
            ("solvable", w.is_solvable()),
            ("2-nilpotent", w.is_p_nilpotent(2)),
            ("2-closed", w.is_2_closed()),
            ("Q8-free", w.is_q8_free()),
            ("minimal non-nilpotent", w.is_minimal_non_nilpotent()),
        ] {
            predicates.insert(k.to_string(), v);
        }
        let mut characteristic_orders = BTreeMap::new();
        for (k, i) in [
            ("Phi", w.frattini()),
            ("Z", w.center()),
            ("Z_inf", w.hypercenter()),
            ("F", w.fitting()),
            ("F*", w.generalized_fitting()),
            ("Z_U", w.u_hypercenter()),
        ] {
            characteristic_orders.insert(k.to_string(), lat.order_of(i));
        }
        let icphi_subgroups = a
            .icphi_subgroups()
            .into_iter()
            .map(|i| {
                let s = lat.subgroup(i);
                let gens: Vec<String> = s
                    .generators()
                    .iter()
                    .map(|&x| g.element(x).to_string())
                    .collect();
                format!("#{i} order {} <{}>", s.order(), gens.join(", "))
            })
            .collect();
        Ok(GroupSummary {
            name: g.name().unwrap_or("G").to_string(),
            order: g.order(),
            degree: g.degree(),
            fingerprint: w.fingerprint(),
            predicates,
            characteristic_orders,
            subgroup_count: lat.len(),
            icphi_subgroups,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("summaries serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group: {}", self.name);
        let _ = writeln!(out, "order: {}", self.order);
        let _ = writeln!(out, "degree: {}", self.degree);
        let f = &self.fingerprint;
        let _ = writeln!(out, "element orders: {:?}", f.element_orders);
        let _ = writeln!(out, "abelianization: {:?}", f.abelianization);
        let _ = writeln!(out, "|Z| = {}, |G'| = {}", f.center_order, f.derived_order);
        for (k, v) in &self.predicates {
            let _ = writeln!(out, "{k}: {v}");
        }
        for (k, v) in &self.characteristic_orders {
            let _ = writeln!(out, "|{k}| = {v}");
        }
        let _ = writeln!(out, "subgroups by order: {:?}", f.subgroup_counts);
        let n = self.icphi_subgroups.len();
        if n == self.subgroup_count {
            let _ = writeln!(out, "all {n} subgroups ICΦ");
        } else {
            let _ = writeln!(out, "{n} of {} subgroups ICΦ", self.subgroup_count);
        }
        for s in &self.icphi_subgroups {
            let _ = writeln!(out, "  {s}");
        }
        out
    }
}
