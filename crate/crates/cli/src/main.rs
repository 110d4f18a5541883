//! `gradealg`: decide graded primeness predicates, list ideal lattices,
//! compute radicals and run the bundled suite over finite graded rings.

mod report;
mod spec;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use gradealg::ideal::{generate, product};
use gradealg::lattice::{all_graded_ideals, all_ideals, Lattice};
use gradealg::prime::{
    all_graded_weakly_prime, gn_radical, gp_radical, gw_intersection, gw_systems, is_component_weakly_prime,
    is_graded_prime, is_graded_weakly_prime, is_weakly_system, is_xry_weakly_prime, SetOrWhole,
};
use gradealg::ring::AXIOM_CHECK_CAP;
use gradealg::total::{
    g_twin_zeros, is_g_total_prime, is_g_weakly_total_prime, is_graded_total_prime, is_graded_weakly_total_prime,
    principal_triple_check, total_twin_zeros,
};
use gradealg::verify::corpus::corpus;
use gradealg::verify::fixtures::{fixtures, Finding};
use gradealg::verify::suite::run_suite_with;
use gradealg::{Additive, Caps, CheckResult, DualCheck, ElemSet, Error, GradedRing, Ideal, IdealOrWhole, Sidedness};

use report::{set_labels, IdealOrWholeView, IdealView, Report, REPORT_SCHEMA};
use spec::{digest, parse_degree, parse_elems, RingSpec};

#[derive(Parser)]
#[command(name = "gradealg", version, about = "Exact computations with finite graded rings")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Ring specification (JSON).
    #[arg(long, global = true, value_name = "FILE")]
    spec: Option<PathBuf>,
    /// Write the machine-readable report here; `-` for stdout.
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<PathBuf>,
    #[arg(long, global = true, value_name = "N")]
    cap_lattice: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    cap_submodule: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    cap_powerset: Option<usize>,
}

#[derive(Subcommand, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
enum Command {
    /// Load a spec, validate the grading and print the components.
    Validate {
        /// Also write the canonical table form of the ring spec here.
        #[arg(long, value_name = "FILE")]
        canonical: Option<PathBuf>,
    },
    /// Print the index to label table with homogeneous degrees.
    Elements,
    /// List an ideal lattice with generators and covering relations.
    Ideals {
        /// Graded two-sided ideals only.
        #[arg(long)]
        graded: bool,
        /// Maximal proper ideals only.
        #[arg(long)]
        maximal: bool,
        /// Sidedness for the ungraded lattice.
        #[arg(long, value_enum, default_value = "two-sided")]
        sidedness: Side,
    },
    /// Decide one predicate for an ideal, a degree or a set.
    Check {
        #[arg(value_enum)]
        predicate: Predicate,
        /// Generators of the two-sided ideal, comma separated.
        #[arg(long)]
        ideal: Option<String>,
        /// Degree label for the g-predicates.
        #[arg(long)]
        degree: Option<String>,
        /// Elements of the set for weakly-system, comma separated.
        #[arg(long)]
        set: Option<String>,
    },
    /// GP and GN, with the square of GN.
    Radicals,
    /// GW of an ideal by systems and by intersection.
    Gw {
        #[arg(long)]
        ideal: String,
    },
    /// Products xy = 0 with x, y outside the ideal.
    TwinZeros {
        #[arg(long)]
        ideal: String,
        /// Restrict to one component for the g-total form.
        #[arg(long)]
        degree: Option<String>,
    },
    /// Run the fixtures and the theorem registry over the corpus.
    PaperSuite {
        #[arg(long, default_value_t = 64)]
        max_order: usize,
    },
    /// List the corpus, or emit one of its rings as a spec.
    Corpus {
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        /// Name of the ring to emit as a table spec.
        #[arg(long)]
        emit: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Side {
    TwoSided,
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Predicate {
    Prime,
    WeaklyPrime,
    ComponentWeaklyPrime,
    XryWeaklyPrime,
    TotalPrime,
    WeaklyTotalPrime,
    GTotalPrime,
    GWeaklyTotalPrime,
    WeaklySystem,
    AllWeaklyPrime,
    AllWeaklyTotalPrime,
}

/// What a command produced: the report body, the text for the terminal and
/// whether an ASSERT check failed.
struct Output {
    result: Value,
    text: String,
    findings: Vec<Finding>,
    timings: BTreeMap<String, u64>,
    assert_failed: bool,
}

impl Output {
    fn new(result: impl Serialize, text: String) -> Output {
        Output {
            result: serde_json::to_value(result).expect("results serialize"),
            text,
            findings: Vec::new(),
            timings: BTreeMap::new(),
            assert_failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn caps(g: &Global) -> Result<Caps> {
    let mut caps = Caps::from_env()?;
    if let Some(n) = g.cap_lattice {
        caps.lattice = n;
    }
    if let Some(n) = g.cap_submodule {
        caps.submodule = n;
    }
    if let Some(n) = g.cap_powerset {
        caps.powerset = n;
    }
    Ok(caps.parse_overrides("")?)
}

fn load(g: &Global) -> Result<GradedRing> {
    let path = g.spec.as_ref().ok_or_else(|| anyhow!("this command needs --spec FILE"))?;
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    RingSpec::parse(&text)?.load().with_context(|| format!("in {}", path.display()))
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let caps = caps(&cli.global)?;
    let start = Instant::now();
    let needs_spec = !matches!(cli.command, Command::PaperSuite { .. } | Command::Corpus { .. });
    let gr = if needs_spec { Some(load(&cli.global)?) } else { None };
    let out = match (&cli.command, &gr) {
        (Command::Validate { canonical }, Some(gr)) => {
            if let Some(path) = canonical {
                let text = serde_json::to_string_pretty(&RingSpec::from_graded(gr))? + "\n";
                std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            }
            validate(gr)
        }
        (Command::Elements, Some(gr)) => elements(gr),
        (Command::Ideals { graded, maximal, sidedness }, Some(gr)) => ideals(gr, *graded, *maximal, *sidedness, &caps)?,
        (Command::Check { predicate, ideal, degree, set }, Some(gr)) => {
            check(gr, *predicate, ideal.as_deref(), degree.as_deref(), set.as_deref(), &caps)?
        }
        (Command::Radicals, Some(gr)) => radicals(gr, &caps)?,
        (Command::Gw { ideal }, Some(gr)) => gw(gr, ideal, &caps)?,
        (Command::TwinZeros { ideal, degree }, Some(gr)) => twin_zeros(gr, ideal, degree.as_deref(), &caps)?,
        (Command::PaperSuite { max_order }, _) => paper_suite(*max_order, &caps)?,
        (Command::Corpus { max_order, emit }, _) => corpus_cmd(*max_order, emit.as_deref())?,
        _ => unreachable!("spec loaded for every spec command"),
    };
    let mut timings = out.timings;
    timings.insert("command_ms".to_string(), start.elapsed().as_millis() as u64);
    let mut command = serde_json::to_value(&cli.command)?;
    if let (Value::Object(m), Some(path)) = (&mut command, &cli.global.spec) {
        m.insert("spec".to_string(), json!(path.display().to_string()));
    }
    let rep = Report {
        schema: REPORT_SCHEMA,
        command,
        input_digest: gr.as_ref().map(digest),
        result: out.result,
        findings: out.findings,
        timings,
    };
    match &cli.global.json {
        Some(p) if p.as_os_str() == "-" => print!("{}", rep.to_json()),
        Some(p) => {
            std::fs::write(p, rep.to_json()).with_context(|| format!("writing {}", p.display()))?;
            print!("{}", out.text);
        }
        None => print!("{}", out.text),
    }
    Ok(if out.assert_failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn ideal_arg(gr: &GradedRing, gens: &str) -> Result<Ideal> {
    let r = gr.ring();
    Ok(generate(r, parse_elems(r, gens)?, Sidedness::TwoSided))
}

fn verdict_line(text: &mut String, name: &str, c: &CheckResult) {
    let _ = writeln!(text, "{name}: {} ({})", c.verdict, c.narration);
    for w in &c.certificate.items {
        let _ = writeln!(text, "  {}: {}", w.role, w.labels.join(", "));
    }
}

fn validate(gr: &GradedRing) -> Output {
    let r = gr.ring();
    let g = gr.group();
    let components: Vec<Value> =
        gr.component_sizes().into_iter().map(|(d, n)| json!({"degree": d, "size": n, "zero": n == 1})).collect();
    let unity = r.unity().map(|u| r.label(u).to_string());
    let mut text = format!("valid: ring of order {}, graded by a group of order {}\n", r.order(), g.order());
    let _ = writeln!(text, "unity: {}", unity.as_deref().unwrap_or("none"));
    let _ = writeln!(text, "commutative: {}", r.is_commutative());
    let sizes: Vec<String> = gr.component_sizes().iter().map(|(d, n)| format!("{d}:{n}")).collect();
    let _ = writeln!(text, "component sizes: {}", sizes.join(" "));
    let result = json!({
        "order": r.order(),
        "group_order": g.order(),
        "unity": unity,
        "commutative": r.is_commutative(),
        "trivially_graded": gr.is_trivially_graded(),
        "components": components,
    });
    Output::new(result, text)
}

fn elements(gr: &GradedRing) -> Output {
    let r = gr.ring();
    let mut text = String::new();
    let rows: Vec<Value> = r
        .elements()
        .map(|x| {
            let degree = gr.degree_of(x).map(|d| gr.group().label(d).to_string());
            let _ = writeln!(text, "{:>5}  {:<24} {}", x.index(), r.label(x), degree.as_deref().unwrap_or("-"));
            json!({"index": x.index(), "label": r.label(x), "degree": degree})
        })
        .collect();
    Output::new(json!({"elements": rows}), text)
}

fn ideals(gr: &GradedRing, graded: bool, maximal: bool, side: Side, caps: &Caps) -> Result<Output> {
    let r = gr.ring();
    let owned;
    let (lat, kind): (&Lattice, &str) = if graded {
        (all_graded_ideals(gr, caps)?, "graded")
    } else {
        let s = match side {
            Side::TwoSided => Sidedness::TwoSided,
            Side::Left => Sidedness::Left,
            Side::Right => Sidedness::Right,
        };
        owned = all_ideals(r, s, caps)?;
        (
            &owned,
            if matches!(side, Side::TwoSided) {
                "two-sided"
            } else if matches!(side, Side::Left) {
                "left"
            } else {
                "right"
            },
        )
    };
    let max = lat.maximal_proper();
    let chosen: Vec<usize> = if maximal { max.clone() } else { (0..lat.len()).collect() };
    let mut text = format!("{} {kind} ideals{}\n", chosen.len(), if maximal { " (maximal)" } else { "" });
    let rows: Vec<Value> = chosen
        .iter()
        .map(|&i| {
            let v = IdealView::of(r, lat.get(i));
            let _ = writeln!(text, "{i:>4}  {}", v.brief());
            json!({"index": i, "ideal": v, "maximal": max.contains(&i)})
        })
        .collect();
    let mut result = json!({"kind": kind, "count": chosen.len(), "ideals": rows});
    if !maximal {
        let covers = lat.covers();
        let _ =
            writeln!(text, "covers: {}", covers.iter().map(|(a, b)| format!("{a}<{b}")).collect::<Vec<_>>().join(" "));
        result["covers"] = json!(covers);
    }
    Ok(Output::new(result, text))
}

fn check(
    gr: &GradedRing,
    predicate: Predicate,
    ideal: Option<&str>,
    degree: Option<&str>,
    set: Option<&str>,
    caps: &Caps,
) -> Result<Output> {
    let r = gr.ring();
    let need_ideal = || -> Result<Ideal> {
        let gens = ideal.ok_or_else(|| anyhow!("{predicate:?} needs --ideal"))?;
        ideal_arg(gr, gens)
    };
    let need_degree = || -> Result<usize> {
        let d = degree.ok_or_else(|| anyhow!("{predicate:?} needs --degree"))?;
        parse_degree(gr.group(), d)
    };
    let mut result = json!({});
    let mut text = String::new();
    let single = |c: CheckResult| -> DualCheck { DualCheck { via_characterization: c.clone(), direct: c } };
    let (dual, paired) = match predicate {
        Predicate::AllWeaklyPrime => (all_graded_weakly_prime(gr, caps)?, true),
        Predicate::AllWeaklyTotalPrime => (principal_triple_check(gr, caps)?, true),
        Predicate::WeaklySystem => {
            let list = set.ok_or_else(|| anyhow!("weakly-system needs --set"))?;
            let s = ElemSet::from_elems(r.order(), parse_elems(r, list)?);
            result["set"] = json!(set_labels(r, &s));
            (single(is_weakly_system(gr, &s, caps)?), false)
        }
        _ => {
            let p = need_ideal()?;
            let view = IdealView::of(r, &p);
            let _ = writeln!(text, "P = {}", view.brief());
            result["ideal"] = json!(view);
            let c = match predicate {
                Predicate::Prime => is_graded_prime(gr, &p, caps)?,
                Predicate::WeaklyPrime => is_graded_weakly_prime(gr, &p, caps)?,
                Predicate::ComponentWeaklyPrime => is_component_weakly_prime(gr, &p, caps)?,
                Predicate::XryWeaklyPrime => is_xry_weakly_prime(gr, &p, caps)?,
                Predicate::TotalPrime => is_graded_total_prime(gr, &p, caps)?,
                Predicate::WeaklyTotalPrime => is_graded_weakly_total_prime(gr, &p, caps)?,
                Predicate::GTotalPrime | Predicate::GWeaklyTotalPrime => {
                    let g = need_degree()?;
                    result["degree"] = json!(gr.group().label(g));
                    if matches!(predicate, Predicate::GTotalPrime) {
                        is_g_total_prime(gr, &p, g, caps)?
                    } else {
                        is_g_weakly_total_prime(gr, &p, g, caps)?
                    }
                }
                _ => unreachable!(),
            };
            (single(c), false)
        }
    };
    let name = serde_json::to_value(predicate)?;
    let name = name.as_str().unwrap_or_default();
    result["predicate"] = json!(name);
    result["verdict"] = json!(dual.direct.verdict);
    result["check"] = json!(dual.direct);
    verdict_line(&mut text, name, &dual.direct);
    if paired {
        result["via_characterization"] = json!(dual.via_characterization);
        verdict_line(&mut text, "via characterization", &dual.via_characterization);
    }
    Ok(Output::new(result, text))
}

fn radicals(gr: &GradedRing, caps: &Caps) -> Result<Output> {
    let r = gr.ring();
    let gp = gp_radical(gr, caps)?;
    let gn = gn_radical(gr, caps)?;
    let gn_square_zero = product(r, &gn, &gn)?.is_zero();
    let gp_equals_gn = gp.elements(r) == *gn.elements();
    let gp_view = IdealOrWholeView::of(r, &gp);
    let gn_view = IdealView::of(r, &gn);
    let text = format!(
        "GP = {}\nGN = {}\nGN^2 = 0: {gn_square_zero}\nGP = GN: {gp_equals_gn}\n",
        gp_view.brief(),
        gn_view.brief()
    );
    let result = json!({"gp": gp_view, "gn": gn_view, "gn_square_zero": gn_square_zero, "gp_equals_gn": gp_equals_gn});
    Ok(Output::new(result, text))
}

fn gw(gr: &GradedRing, gens: &str, caps: &Caps) -> Result<Output> {
    let r = gr.ring();
    let i = ideal_arg(gr, gens)?;
    let by_intersection = gw_intersection(gr, &i, caps)?;
    let int_view = IdealOrWholeView::of(r, &by_intersection);
    let mut text = format!("I = {}\nGW by intersection: {}\n", IdealView::of(r, &i).brief(), int_view.brief());
    let by_systems = match gw_systems(gr, &i, caps) {
        Ok(SetOrWhole::Whole) => json!("whole"),
        Ok(SetOrWhole::Set(s)) => json!({"set": set_labels(r, &s)}),
        Err(e @ Error::CapExceeded { .. }) => json!({"skipped": e.to_string()}),
        Err(e) => return Err(e.into()),
    };
    // the systems form is a set of homogeneous elements; compare on h(R)
    let agree = match (&by_systems, &by_intersection) {
        (Value::String(_), IdealOrWhole::Whole) => Some(true),
        (Value::Object(m), IdealOrWhole::Ideal(j)) if m.contains_key("set") => {
            let homogeneous = j.elements().intersection(gr.homogeneous());
            Some(m["set"] == json!(set_labels(r, &homogeneous)))
        }
        (Value::Object(m), _) if m.contains_key("skipped") => None,
        _ => Some(false),
    };
    let _ = writeln!(
        text,
        "GW by systems: {}",
        match &by_systems {
            Value::String(_) => "R".to_string(),
            Value::Object(m) if m.contains_key("set") => {
                format!("{} homogeneous elements", m["set"].as_array().map_or(0, Vec::len))
            }
            other => other["skipped"].as_str().unwrap_or_default().to_string(),
        }
    );
    if let Some(a) = agree {
        let _ = writeln!(text, "methods agree on h(R): {a}");
    }
    let result = json!({
        "ideal": IdealView::of(r, &i),
        "by_intersection": int_view,
        "by_systems": by_systems,
        "agree": agree,
    });
    Ok(Output::new(result, text))
}

fn twin_zeros(gr: &GradedRing, gens: &str, degree: Option<&str>, caps: &Caps) -> Result<Output> {
    let r = gr.ring();
    let p = ideal_arg(gr, gens)?;
    let (tz, degree) = match degree {
        Some(d) => {
            let g = parse_degree(gr.group(), d)?;
            (g_twin_zeros(gr, &p, g, caps)?, Some(gr.group().label(g).to_string()))
        }
        None => (total_twin_zeros(gr, &p, caps)?, None),
    };
    let mut text =
        format!("P = {}\npremise holds: {}\n{} twin zeros\n", IdealView::of(r, &p).brief(), tz.premise, tz.pairs.len());
    let pairs: Vec<Value> = tz
        .pairs
        .iter()
        .map(|t| {
            let _ = writeln!(text, "  {} * {} = 0", r.label(t.x), r.label(t.y));
            json!({"x": r.label(t.x), "y": r.label(t.y), "kind": t.kind})
        })
        .collect();
    let result = json!({"ideal": IdealView::of(r, &p), "degree": degree, "premise": tz.premise, "pairs": pairs});
    Ok(Output::new(result, text))
}

fn paper_suite(max_order: usize, caps: &Caps) -> Result<Output> {
    let rep = run_suite_with(caps, max_order)?;
    let mut text = format!("{} rings (fixtures and corpus up to order {max_order})\n", rep.rings);
    for f in &rep.fixtures {
        let ok = f.facts.len() - f.mismatches;
        let _ = writeln!(text, "{:<5} {}/{} facts reproduced  {}", f.id, ok, f.facts.len(), f.title);
    }
    for t in &rep.theorems {
        let _ = writeln!(
            text,
            "{:<6} {:<28} pass {:>4}  fail {:>4}  n/a {:>4}",
            format!("{:?}", t.tier).to_uppercase(),
            t.id,
            t.pass,
            t.fail,
            t.inapplicable
        );
    }
    let _ = writeln!(text, "findings: {}", rep.findings.len());
    let _ = writeln!(text, "open-question samples: {}", rep.gn_samples.len());
    if !rep.uncovered.is_empty() {
        let _ = writeln!(text, "hypotheses not covered: {}", rep.uncovered.join(", "));
    }
    let _ = writeln!(text, "ASSERT failures: {}", rep.assert_failures);
    let _ = writeln!(text, "fixture fact mismatches: {}", rep.fact_mismatches);
    let assert_failed = !rep.passed();
    let timings = rep.timings.clone();
    let findings = rep.findings.clone();
    let mut result = serde_json::to_value(&rep)?;
    if let Value::Object(m) = &mut result {
        m.remove("timings");
        m.remove("findings");
    }
    Ok(Output { result, text, findings, timings, assert_failed })
}

fn corpus_cmd(max_order: usize, emit: Option<&str>) -> Result<Output> {
    let mut items: Vec<(String, GradedRing)> = Vec::new();
    for fx in fixtures()? {
        items.extend(fx.items.iter().map(|it| (format!("{}: {}", fx.id, it.name), it.ring.clone())));
    }
    items.extend(corpus(max_order)?.into_iter().map(|it| (it.name, it.ring)));
    if let Some(name) = emit {
        let Some((_, gr)) = items.iter().find(|(n, _)| n == name) else {
            bail!("no corpus ring named {name:?}; run `gradealg corpus` for the list");
        };
        if gr.ring().order() > AXIOM_CHECK_CAP {
            bail!("{name:?} has order {}; table specs are limited to order {AXIOM_CHECK_CAP}", gr.ring().order());
        }
        let spec = RingSpec::from_graded(gr);
        let text = serde_json::to_string_pretty(&spec)? + "\n";
        return Ok(Output::new(json!({"name": name, "spec": spec}), text));
    }
    let mut text = String::new();
    let rows: Vec<Value> = items
        .iter()
        .map(|(name, gr)| {
            let _ = writeln!(text, "{:>5}  {name}", gr.ring().order());
            json!({"name": name, "order": gr.ring().order(), "group_order": gr.group().order()})
        })
        .collect();
    Ok(Output::new(json!({"max_order": max_order, "count": rows.len(), "rings": rows}), text))
}
