//! One line per acceptance criterion; exits nonzero when any is red.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

use gradealg::lattice::all_graded_ideals;
use gradealg::prime::{all_graded_weakly_prime, gw_intersection, gw_systems, SetOrWhole};
use gradealg::total::principal_triple_check;
use gradealg::verify::corpus::{corpus, CorpusItem};
use gradealg::verify::fixtures::fixtures;
use gradealg::verify::suite::run_suite;
use gradealg::verify::theorems::Tier;
use gradealg::{Additive, Caps, Elem, Error, FiniteRing, GradedRing, IdealOrWhole};

struct Line {
    ok: bool,
    summary: String,
    details: Vec<String>,
}

fn fixture_reproduction(caps: &Caps) -> Line {
    let mut details = Vec::new();
    let mut total = 0;
    for fx in fixtures().unwrap() {
        let ev = fx.evaluate(caps).unwrap();
        total += ev.facts.len();
        for f in ev.facts.iter().filter(|f| !f.holds()) {
            details.push(format!("{}: expected {}, got {}: {}", fx.id, f.expected, f.outcome.verdict, f.statement));
        }
    }
    Line {
        ok: details.is_empty(),
        summary: format!("{} of {total} fixture facts reproduced", total - details.len()),
        details,
    }
}

fn assert_suite(caps: &Caps) -> Line {
    let rep = run_suite(caps).unwrap();
    let mut details = Vec::new();
    for t in rep.theorems.iter().filter(|t| t.fail > 0 && t.tier == Tier::Assert) {
        for f in &t.failures {
            details.push(format!("{} on {}: {}", t.id, f.ring, f.narration));
        }
    }
    for id in &rep.uncovered {
        details.push(format!("{id}: hypothesis not both met and missed in the corpus"));
    }
    Line {
        ok: rep.passed() && rep.uncovered.is_empty(),
        summary: format!(
            "{} ASSERT failures over {} rings and {} theorems",
            rep.assert_failures,
            rep.rings,
            rep.theorems.len()
        ),
        details,
    }
}

fn record_findings(caps: &Caps) -> Line {
    let mut sources = Vec::new();
    let mut bare = 0;
    for fx in fixtures().unwrap() {
        for f in fx.evaluate(caps).unwrap().findings {
            bare += usize::from(f.outcome.certificate.is_empty());
            sources.push(f.source);
        }
    }
    Line {
        ok: sources.len() >= 3 && bare == 0,
        summary: format!(
            "{} findings on the fixtures ({}), {bare} without a witness",
            sources.len(),
            sources.join(", ")
        ),
        details: Vec::new(),
    }
}

type Mask = u64;

fn bit(x: Elem) -> Mask {
    1 << x.index()
}

fn members(m: Mask) -> impl Iterator<Item = Elem> {
    (0..64).filter(move |i| m >> i & 1 == 1).map(Elem::from_index)
}

/// `H + <x>` as the union of the cosets `H + kx`.
fn join(r: &FiniteRing, h: Mask, x: Elem) -> Mask {
    let mut out = h;
    let mut rep = x;
    while h & bit(rep) == 0 {
        for m in members(h) {
            out |= bit(r.add(m, rep));
        }
        rep = r.add(rep, x);
    }
    out
}

/// Graded two-sided ideals found by filtering every additive subgroup.
fn oracle_graded_ideals(gr: &GradedRing) -> BTreeSet<Mask> {
    let r = gr.ring();
    let elems: Vec<Elem> = r.elements().collect();
    let mut seen = BTreeSet::from([bit(r.zero())]);
    let mut queue = vec![bit(r.zero())];
    while let Some(h) = queue.pop() {
        for &x in &elems {
            let k = join(r, h, x);
            if seen.insert(k) {
                queue.push(k);
            }
        }
    }
    seen.into_iter()
        .filter(|&h| {
            members(h).all(|x| {
                elems.iter().all(|&a| h & bit(r.mul(a, x)) != 0 && h & bit(r.mul(x, a)) != 0)
                    && gr.group().elements().all(|g| h & bit(gr.component_of(x, g)) != 0)
            })
        })
        .collect()
}

fn oracles(caps: &Caps) -> Line {
    let mut items: Vec<CorpusItem> = fixtures().unwrap().into_iter().flat_map(|f| f.items).collect();
    items.extend(corpus(64).unwrap());
    let mut details = Vec::new();
    let (mut lattices, mut gw_pairs, mut gw_skipped) = (0, 0, 0);
    for it in &items {
        let gr = &it.ring;
        let r = gr.ring();
        if r.order() <= 64 {
            lattices += 1;
            let lat = all_graded_ideals(gr, caps).unwrap();
            let got: BTreeSet<Mask> =
                lat.ideals().iter().map(|i| i.elements().iter().fold(0, |m, x| m | bit(x))).collect();
            if got.len() != lat.len() || got != oracle_graded_ideals(gr) {
                details.push(format!("graded ideal lattice differs from the subgroup filter on {}", it.name));
            }
        }
        if !all_graded_weakly_prime(gr, caps).unwrap().agree() {
            details.push(format!("all-weakly-prime direct and product forms disagree on {}", it.name));
        }
        if !principal_triple_check(gr, caps).unwrap().agree() {
            details.push(format!("<ab> criterion disagrees with all-weakly-total-prime on {}", it.name));
        }
        for i in all_graded_ideals(gr, caps).unwrap().ideals() {
            let by_systems = match gw_systems(gr, i, caps) {
                Ok(s) => s,
                Err(Error::CapExceeded { .. }) => {
                    gw_skipped += 1;
                    continue;
                }
                Err(e) => panic!("{}: {e}", it.name),
            };
            gw_pairs += 1;
            let same = match (by_systems, gw_intersection(gr, i, caps).unwrap()) {
                (SetOrWhole::Whole, IdealOrWhole::Whole) => true,
                (SetOrWhole::Set(s), IdealOrWhole::Ideal(j)) => s == j.elements().intersection(gr.homogeneous()),
                _ => false,
            };
            if !same {
                details.push(format!(
                    "GW by systems and by intersection differ on {} for {:?}",
                    it.name,
                    r.labels_of(i.gens().iter().copied())
                ));
            }
        }
    }
    Line {
        ok: details.is_empty(),
        summary: format!(
            "{} rings: {lattices} lattices against the subgroup filter, {gw_pairs} GW pairs ({gw_skipped} beyond the systems cap), dual forms on all",
            items.len()
        ),
        details,
    }
}

fn suite_run(dir: &std::path::Path, name: &str) -> (Option<i32>, Duration, Value) {
    let path = dir.join(name);
    let t0 = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_gradealg"))
        .args(["paper-suite", "--json", path.to_str().unwrap()])
        .env_remove("GRADEALG_CAPS")
        .output()
        .unwrap();
    let elapsed = t0.elapsed();
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    (out.status.code(), elapsed, report)
}

fn determinism() -> Line {
    let dir = tempfile::tempdir().unwrap();
    let (code_a, time_a, a) = suite_run(dir.path(), "a.json");
    let (code_b, time_b, b) = suite_run(dir.path(), "b.json");
    let schema_path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    let schema_errors = jsonschema::validator_for(&schema).unwrap().iter_errors(&a).count();
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timings");
        serde_json::to_string(&v).unwrap()
    };
    let (a, b) = (strip(a), strip(b));
    let identical = a == b;
    let limit = Duration::from_secs(60);
    let mut details = Vec::new();
    if code_a != Some(0) || code_b != Some(0) {
        let failures = serde_json::from_str::<Value>(&a).unwrap()["result"]["assert_failures"].clone();
        details.push(format!("exit codes {code_a:?} and {code_b:?}; the report lists {failures} ASSERT failures"));
    }
    if schema_errors > 0 {
        details.push(format!("{schema_errors} report schema violations"));
    }
    if !identical {
        details.push("reports differ outside the timings".to_string());
    }
    Line {
        ok: details.is_empty() && time_a.max(time_b) < limit,
        summary: format!(
            "exit {code_a:?}/{code_b:?}, reports {}, schema {}, {:.1} s and {:.1} s",
            if identical { "identical" } else { "different" },
            if schema_errors == 0 { "valid" } else { "invalid" },
            time_a.as_secs_f64(),
            time_b.as_secs_f64()
        ),
        details,
    }
}

fn main() {
    let caps = Caps::default();
    let criteria: [(&str, &dyn Fn() -> Line); 5] = [
        ("fixture reproduction", &|| fixture_reproduction(&caps)),
        ("ASSERT theorem suite", &|| assert_suite(&caps)),
        ("RECORD findings", &|| record_findings(&caps)),
        ("oracle equivalences", &|| oracles(&caps)),
        ("determinism and performance", &determinism),
    ];
    let mut red = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let line = check();
        red += usize::from(!line.ok);
        println!("criterion {} {name}: {} ({})", i + 1, if line.ok { "PASS" } else { "FAIL" }, line.summary);
        for d in &line.details {
            println!("    {d}");
        }
    }
    if red > 0 {
        println!("{red} of 5 criteria failed");
        std::process::exit(1);
    }
}
