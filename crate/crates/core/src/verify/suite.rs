//! Runs every fixture fact and every registered theorem over the fixtures and
//! the corpus, and assembles a deterministic report.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::check::{Caps, Certificate, CheckResult, Verdict};
use crate::error::Result;
use crate::lattice::all_graded_ideals;
use crate::prime::{all_graded_weakly_prime, gn_radical, gp_radical, graded_prime_flags};

use super::corpus::{corpus, CorpusItem, DEFAULT_MAX_ORDER};
use super::fixtures::{fixtures, Fact, Finding};
use super::theorems::{theorems, Outcome, Tier};

#[derive(Clone, Debug, Serialize)]
pub struct FixtureReport {
    pub id: String,
    pub title: String,
    pub note: String,
    pub ring: String,
    pub facts: Vec<Fact>,
    pub mismatches: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremFailure {
    pub ring: String,
    pub narration: String,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub tier: Tier,
    pub statement: String,
    pub conditional: bool,
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
    /// Rings with at least one instance meeting the hypothesis.
    pub rings_satisfying: usize,
    /// Rings with at least one instance missing it.
    pub rings_violating: usize,
    pub failures: Vec<TheoremFailure>,
}

impl TheoremReport {
    /// A conditional result is covered when the corpus both meets and misses
    /// its hypothesis somewhere.
    pub fn covered(&self) -> bool {
        !self.conditional || (self.rings_satisfying > 0 && self.rings_violating > 0)
    }
}

/// A ring where every graded ideal is weakly prime and `GP = GN` is a proper
/// ideal that is not graded prime.
#[derive(Clone, Debug, Serialize)]
pub struct GnSample {
    pub ring: String,
    pub order: usize,
    pub gn_size: usize,
    pub gn_generators: Vec<String>,
    pub gn_square_zero: bool,
    pub square_is_whole: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub max_order: usize,
    pub rings: usize,
    pub fixtures: Vec<FixtureReport>,
    pub theorems: Vec<TheoremReport>,
    pub findings: Vec<Finding>,
    pub gn_samples: Vec<GnSample>,
    pub assert_failures: usize,
    pub fact_mismatches: usize,
    pub uncovered: Vec<String>,
    /// Wall-clock milliseconds per theorem and for the whole run; the only
    /// part of the report that varies between runs.
    pub timings: BTreeMap<String, u64>,
}

impl SuiteReport {
    /// Whether every ASSERT theorem passed on every ring.
    pub fn passed(&self) -> bool {
        self.assert_failures == 0
    }
}

fn gn_sample(item: &CorpusItem, caps: &Caps) -> Result<Option<GnSample>> {
    let gr = &item.ring;
    let r = gr.ring();
    if !all_graded_weakly_prime(gr, caps)?.direct.is_pass() {
        return Ok(None);
    }
    let gn = gn_radical(gr, caps)?;
    if gp_radical(gr, caps)?.elements(r) != *gn.elements() {
        return Ok(None);
    }
    let lat = all_graded_ideals(gr, caps)?;
    let k = lat.position(&gn).expect("GN is graded");
    if k == lat.top() || graded_prime_flags(gr, caps)?[k] {
        return Ok(None);
    }
    Ok(Some(GnSample {
        ring: item.name.clone(),
        order: r.order(),
        gn_size: gn.len(),
        gn_generators: r.labels_of(gn.gens().iter().copied()),
        gn_square_zero: lat.product(r, k, k) == 0,
        square_is_whole: lat.product(r, lat.top(), lat.top()) == lat.top(),
    }))
}

/// Runs the suite over the fixtures and `corpus(max_order)`.
pub fn run_suite_with(caps: &Caps, max_order: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let fixture_set = fixtures()?;
    let mut fixture_reports = Vec::new();
    let mut findings = Vec::new();
    for fx in &fixture_set {
        let ev = fx.evaluate(caps)?;
        let mismatches = ev.facts.iter().filter(|f| !f.holds()).count();
        fixture_reports.push(FixtureReport {
            id: fx.id.to_string(),
            title: fx.title.to_string(),
            note: fx.note.to_string(),
            ring: fx.items[0].name.clone(),
            facts: ev.facts,
            mismatches,
        });
        findings.extend(ev.findings);
    }

    let mut items: Vec<CorpusItem> = fixture_set
        .iter()
        .flat_map(|fx| fx.items.iter().map(|it| CorpusItem { name: format!("{}: {}", fx.id, it.name), ..it.clone() }))
        .collect();
    items.extend(corpus(max_order)?);

    let registry = theorems();
    let mut timings = BTreeMap::new();
    let mut reports = Vec::new();
    for th in registry {
        let t0 = Instant::now();
        let outcomes: Vec<Outcome> = items.par_iter().map(|it| th.run(it, caps)).collect::<Result<_>>()?;
        timings.insert(th.id.to_string(), t0.elapsed().as_millis() as u64);
        let count = |v: Verdict| outcomes.iter().filter(|o| o.result.verdict == v).count();
        let failures: Vec<TheoremFailure> = items
            .iter()
            .zip(&outcomes)
            .filter(|(_, o)| o.result.is_fail())
            .map(|(it, o)| TheoremFailure {
                ring: it.name.clone(),
                narration: o.result.narration.clone(),
                certificate: o.result.certificate.clone(),
            })
            .collect();
        if th.tier == Tier::Record {
            findings.extend(failures.iter().map(|f| Finding {
                source: th.id.to_string(),
                ring: f.ring.clone(),
                statement: th.statement.to_string(),
                outcome: CheckResult::fail(f.certificate.clone(), f.narration.clone()),
            }));
        }
        reports.push(TheoremReport {
            id: th.id.to_string(),
            tier: th.tier,
            statement: th.statement.to_string(),
            conditional: th.conditional,
            pass: count(Verdict::Pass),
            fail: count(Verdict::Fail),
            inapplicable: count(Verdict::Inapplicable),
            rings_satisfying: outcomes.iter().filter(|o| o.satisfied > 0).count(),
            rings_violating: outcomes.iter().filter(|o| o.violated > 0).count(),
            failures,
        });
    }

    let samples: Vec<Option<GnSample>> = items.par_iter().map(|it| gn_sample(it, caps)).collect::<Result<_>>()?;
    let assert_failures = reports.iter().filter(|r| r.tier == Tier::Assert).map(|r| r.fail).sum();
    let fact_mismatches = fixture_reports.iter().map(|f| f.mismatches).sum();
    let uncovered = reports.iter().filter(|r| !r.covered()).map(|r| r.id.clone()).collect();
    timings.insert("total".to_string(), start.elapsed().as_millis() as u64);
    Ok(SuiteReport {
        max_order,
        rings: items.len(),
        fixtures: fixture_reports,
        theorems: reports,
        findings,
        gn_samples: samples.into_iter().flatten().collect(),
        assert_failures,
        fact_mismatches,
        uncovered,
        timings,
    })
}

/// Runs the suite over the default corpus.
pub fn run_suite(caps: &Caps) -> Result<SuiteReport> {
    run_suite_with(caps, DEFAULT_MAX_ORDER)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite() {
        let rep = run_suite_with(&Caps::default(), 8).unwrap();
        assert!(rep.rings > 20);
        assert_eq!(rep.theorems.len(), theorems().len());
        let fx10 = rep.fixtures.iter().find(|f| f.id == "FX10").unwrap();
        assert!(rep.fixtures.iter().filter(|f| f.id != "FX10").all(|f| f.mismatches == 0));
        assert_eq!(rep.fact_mismatches, fx10.mismatches);
        assert!(rep.findings.len() >= 3);
        assert!(rep.findings.iter().all(|f| !f.outcome.certificate.is_empty()));
    }
}
