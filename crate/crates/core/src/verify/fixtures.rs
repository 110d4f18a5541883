//! Worked examples with their expected facts. Each fixture rebuilds its ring
//! from recipes and replays every claimed witness against the definitions.

use serde::Serialize;

use crate::check::{Caps, Certificate, CheckResult, IdealOrWhole, Verdict};
use crate::construct::{cyclic, matrix, prime_field, product, subring, zero_mult};
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::grading::{GradedModule, GradedRing};
use crate::ideal::{generate, is_graded, Ideal, Sidedness};
use crate::lattice::{all_graded_ideals, maximal_graded_ideals};
use crate::module::FiniteModule;
use crate::prime::{
    all_graded_weakly_prime, gn_radical, gp_radical, gw_intersection, gw_systems, is_component_weakly_prime,
    is_graded_prime, is_graded_weakly_prime, is_xry_weakly_prime, SetOrWhole,
};
use crate::ring::{Additive, Elem, FiniteRing};
use crate::total::{is_graded_total_prime, is_graded_weakly_total_prime, total_twin_zeros};

use super::corpus::{CorpusItem, Origin};
use super::recipes::{
    checkerboard, even_corner, gf4_corner, in_degree_one, row_ring, shaped_3x3, trivially, z4_entries,
};
use super::theorems::{canonical_split, check_theorem};

/// Why a fact is expected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Asserted by the worked example.
    Claimed,
    /// Follows from replaying a witness or an exhaustive computation.
    Replayed,
    /// Holds by construction.
    Structural,
}

#[derive(Clone, Debug, Serialize)]
pub struct Fact {
    pub statement: String,
    pub basis: Basis,
    pub expected: Verdict,
    pub outcome: CheckResult,
}

impl Fact {
    pub fn holds(&self) -> bool {
        self.outcome.verdict == self.expected
    }
}

/// A discrepancy between a literal claim and the computation.
#[derive(Clone, Debug, Serialize)]
pub struct Finding {
    pub source: String,
    pub ring: String,
    pub statement: String,
    pub outcome: CheckResult,
}

#[derive(Default)]
pub struct Evaluation {
    pub facts: Vec<Fact>,
    pub findings: Vec<Finding>,
}

type Evaluate = fn(&Fixture, &Caps) -> Result<Evaluation>;

pub struct Fixture {
    pub id: &'static str,
    pub title: &'static str,
    pub note: &'static str,
    /// The main ring first, then any auxiliary rings.
    pub items: Vec<CorpusItem>,
    evaluate: Evaluate,
}

impl Fixture {
    pub fn ring(&self) -> &GradedRing {
        &self.items[0].ring
    }

    pub fn evaluate(&self, caps: &Caps) -> Result<Evaluation> {
        (self.evaluate)(self, caps)
    }
}

struct Log<'a> {
    fx: &'a Fixture,
    out: Evaluation,
}

impl<'a> Log<'a> {
    fn new(fx: &'a Fixture) -> Self {
        Log { fx, out: Evaluation::default() }
    }

    fn fact(&mut self, statement: impl Into<String>, basis: Basis, expected: Verdict, outcome: CheckResult) {
        self.out.facts.push(Fact { statement: statement.into(), basis, expected, outcome });
    }

    fn holds(&mut self, statement: impl Into<String>, basis: Basis, ok: bool, cert: Certificate) {
        let statement = statement.into();
        let outcome = if ok {
            CheckResult::pass(statement.clone()).with_certificate(cert)
        } else {
            CheckResult::fail(cert, format!("does not hold: {statement}"))
        };
        self.fact(statement, basis, Verdict::Pass, outcome);
    }

    fn finding(&mut self, statement: impl Into<String>, outcome: CheckResult) {
        self.out.findings.push(Finding {
            source: self.fx.id.to_string(),
            ring: self.fx.items[0].name.clone(),
            statement: statement.into(),
            outcome,
        });
    }

    fn done(self) -> Result<Evaluation> {
        Ok(self.out)
    }
}

fn el(r: &FiniteRing, label: &str) -> Result<Elem> {
    r.elem(label)
}

fn ideal(r: &FiniteRing, labels: &[&str]) -> Result<Ideal> {
    let gens: Vec<Elem> = labels.iter().map(|l| el(r, l)).collect::<Result<_>>()?;
    Ok(generate(r, gens, Sidedness::TwoSided))
}

fn ideal_cert(r: &FiniteRing, named: &[(&str, &Ideal)]) -> Certificate {
    named.iter().fold(Certificate::new(), |c, (role, i)| c.ideal(role, r, i.subgroup()))
}

fn lattice_product(gr: &GradedRing, a: &Ideal, b: &Ideal, caps: &Caps) -> Result<Ideal> {
    let lat = all_graded_ideals(gr, caps)?;
    let (i, j) = (lat.position(a).expect("graded"), lat.position(b).expect("graded"));
    Ok(lat.get(lat.product(gr.ring(), i, j)).clone())
}

/// Replays `x y = z` with `x, y` homogeneous outside `P` and `z` nonzero in `P`.
fn replay_total_witness(gr: &GradedRing, p: &Ideal, x: Elem, y: Elem, expect: Elem) -> (bool, Certificate) {
    let r = gr.ring();
    let xy = r.mul(x, y);
    let ok = xy == expect
        && gr.is_homogeneous(x)
        && gr.is_homogeneous(y)
        && !p.contains(x)
        && !p.contains(y)
        && p.contains(xy);
    let cert =
        Certificate::new().ideal("P", r, p.subgroup()).element("x", r, x).element("y", r, y).element("xy", r, xy);
    (ok, cert)
}

fn fx1(fx: &Fixture, caps: &Caps) -> Result<Evaluation> {
    let mut log = Log::new(fx);
    let gr = fx.ring();
    let r = gr.ring();
    let sizes: Vec<usize> = gr.components().iter().map(|c| c.len()).collect();
    log.holds(
        "components R_0, R_1, R_2, R_3 have sizes 4, 1, 4, 1",
        Basis::Structural,
        sizes == [4, 1, 4, 1],
        Certificate::new(),
    );
    let a = el(r, "(1 1;1 1)")?;
    let left = generate(r, [a], Sidedness::Left);
    let unit = el(r, "(1 0;0 1)")?;
    log.holds(
        "the left ideal R(1 1;1 1) has 4 elements and omits (1 0;0 1)",
        Basis::Replayed,
        left.len() == 4 && left.contains(a) && !left.contains(unit),
        Certificate::new().ideal("I", r, left.subgroup()),
    );
    let graded = is_graded(gr, &left);
    let component = graded.certificate.get("x_g").map(|w| w.elem());
    log.fact("the left ideal R(1 1;1 1) is not graded", Basis::Claimed, Verdict::Fail, graded.clone());
    log.holds(
        "the missing component of (1 1;1 1) is (1 0;0 1)",
        Basis::Claimed,
        graded.is_fail() && component == Some(unit),
        graded.certificate.clone(),
    );
    let lat = all_graded_ideals(gr, caps)?;
    log.holds("the graded ideals are {0} and R", Basis::Replayed, lat.len() == 2, Certificate::new());
    let two_sided = generate(r, [a], Sidedness::TwoSided);
    if two_sided.is_whole(r) {
        log.finding(
            "read as a two-sided ideal, <(1 1;1 1)> is all of R and therefore graded",
            CheckResult::fail(
                Certificate::new().element("a", r, a).ideal("<a>", r, two_sided.subgroup()).element("1", r, unit),
                "the two-sided ideal generated by (1 1;1 1) contains (1 0;0 1)",
            ),
        );
    }
    log.done()
}

fn fx2(fx: &Fixture, caps: &Caps) -> Result<Evaluation> {
    let mut log = Log::new(fx);
    let gr = fx.ring();
    let r = gr.ring();
    let p = ideal(r, &["(1,0,0)", "(0,0,1)"])?;
    let i = ideal(r, &["(1,0,0)", "(0,1,0)"])?;
    log.fact("P = K+0+S is graded", Basis::Claimed, Verdict::Pass, is_graded(gr, &p));
    log.fact("I = K+S+0 is graded", Basis::Claimed, Verdict::Pass, is_graded(gr, &i));
    let i2 = lattice_product(gr, &i, &i, caps)?;
    log.holds(
        "0 != I^2 inside P while I is not inside P",
        Basis::Claimed,
        !i2.is_zero() && i2.is_subset(&p) && !i.is_subset(&p),
        ideal_cert(r, &[("P", &p), ("I", &i), ("I^2", &i2)]),
    );
    log.fact("P is not graded weakly prime", Basis::Claimed, Verdict::Fail, is_graded_weakly_prime(gr, &p, caps)?);
    let x = Ideal::from_set(r, gr.component(1).elements(), Sidedness::TwoSided)?;
    let maximal = maximal_graded_ideals(gr, caps)?;
    let x2 = lattice_product(gr, &x, &x, caps)?;
    log.holds(
        "X = R_1 is a graded maximal ideal with X^2 = 0",
        Basis::Claimed,
        maximal.contains(&x) && x2.is_zero(),
        ideal_cert(r, &[("X", &x)]),
    );
    log.done()
}

fn fx3(fx: &Fixture, caps: &Caps) -> Result<Evaluation> {
    let mut log = Log::new(fx);
    let s = &fx.items[1].ring;
    let sr = s.ring();
    let p = ideal(sr, &["(0 0 1;0 0 0;0 0 0)"])?;
    let l = ideal(sr, &["(0 1 0;0 0 0;0 0 0)", "(0 0 1;0 0 0;0 0 0)", "(0 0 0;0 0 1;0 0 0)"])?;
    let s_max = maximal_graded_ideals(s, caps)?;
    log.holds(
        "L is the unique graded maximal ideal of S",
        Basis::Claimed,
        s_max == [l.clone()],
        ideal_cert(sr, &[("L", &l)]),
    );
    log.fact("P is a graded ideal of S", Basis::Claimed, Verdict::Pass, is_graded(s, &p));

    let (gr, proj) = s.quotient(&p)?;
    let r = gr.ring();
    let lat = all_graded_ideals(&gr, caps)?;
    let top = lat.top();
    log.holds("R^2 = R", Basis::Claimed, lat.product(r, top, top) == top, Certificate::new());
    let image = ElemSet::from_elems(r.order(), l.elements().iter().map(|x| proj[x.index()]));
    let x = lat.index_of(&image).expect("L/P is graded");
    log.holds(
        "X = L/P is a graded maximal ideal with X^2 = 0",
        Basis::Claimed,
        lat.maximal_proper() == [x] && lat.product(r, x, x) == 0,
        Certificate::new().ideal("X", r, lat.get(x).subgroup()),
    );
    for (name, k) in [("RX", lat.product(r, top, x)), ("XR", lat.product(r, x, top))] {
        let k_ideal = lat.get(k).clone();
        log.holds(
            format!("{name} is a nonzero proper graded ideal"),
            Basis::Claimed,
            k != 0 && k != top,
            Certificate::new().ideal(name, r, k_ideal.subgroup()),
        );
        log.fact(
            format!("{name} is not graded weakly prime"),
            Basis::Claimed,
            Verdict::Fail,
            is_graded_weakly_prime(&gr, &k_ideal, caps)?,
        );
    }
    log.holds(
        "RX differs from XR",
        Basis::Replayed,
        lat.product(r, top, x) != lat.product(r, x, top),
        Certificate::new(),
    );
    log.done()
}

fn fx4(fx: &Fixture, caps: &Caps) -> Result<Evaluation> {
    let mut log = Log::new(fx);
    let gr = fx.ring();
    let r = gr.ring();
    log.fact(
        "every proper graded ideal is graded weakly prime",
        Basis::Claimed,
        Verdict::Pass,
        all_graded_weakly_prime(gr, caps)?.direct,
    );
    let maximal = maximal_graded_ideals(gr, caps)?;
    log.holds(
        "there are 7 graded maximal ideals",
        Basis::Replayed,
        maximal.len() == 7,
        maximal
            .iter()
            .take(3)
            .zip(["X1", "X2", "X3"])
            .fold(Certificate::new(), |c, (m, n)| c.ideal(n, r, m.subgroup())),
    );
    let gn = gn_radical(gr, caps)?;
    log.holds("GN = R", Basis::Replayed, gn.is_whole(r), Certificate::new().ideal("GN", r, gn.subgroup()));
    for id in ["at-most-two-maximal", "gp-equals-gn"] {
        let out = check_theorem(id, &fx.items[0], caps)?;
        log.fact(format!("{id} does not apply since R^2 != R"), Basis::Claimed, Verdict::Inapplicable, out.result);
    }
    log.done()
}

fn fx5(fx: &Fixture, caps: &Caps) -> Result<Evaluation> {
    let mut log = Log::new(fx);
    let gr = fx.ring();
    let r = gr.ring();
    let p1 = ideal(r, &["(0 2;0 0)"])?;
    let p2 = ideal(r, &["(2 0;0 0)"])?;
    let q = ideal(r, &["(0 2;0 0)", "(2 0;0 0)"])?;
    let lat = all_graded_ideals(gr, caps)?;
    log.holds("there are 5 graded ideals", Basis::Replayed, lat.len() == 5, Certificate::new());
    log.fact("P1 is graded weakly prime", Basis::Claimed, Verdict::Pass, is_graded_weakly_prime(gr, &p1, caps)?);
    log.fact("P1 is not graded prime", Basis::Claimed, Verdict::Fail, is_graded_prime(gr, &p1, caps)?);
    let p22 = lattice_product(gr, &p2, &p2, caps)?;
    log.holds(
        "P2 P2 = 0 lies in P1 while P2 does not",
        Basis::Claimed,
        p22.is_zero() && !p2.is_subset(&p1),
        ideal_cert(r, &[("P1", &p1), ("P2", &p2)]),
    );
    log.fact(
        "P1 is graded weakly total prime",
        Basis::Claimed,
        Verdict::Pass,
        is_graded_weakly_total_prime(gr, &p1, caps)?,
    );
    log.fact("P1 is not graded total prime", Basis::Claimed, Verdict::Fail, is_graded_total_prime(gr, &p1, caps)?);
    let x = el(r, "(2 0;0 0)")?;
    log.holds(
        "(2 0;0 0)^2 = 0 lies in P1 with (2 0;0 0) homogeneous outside P1",
        Basis::Claimed,
        r.mul(x, x) == r.zero() && gr.is_homogeneous(x) && !p1.contains(x),
        Certificate::new().ideal("P", r, p1.subgroup()).element("x", r, x).element("y", r, x),
    );
    let twins = total_twin_zeros(gr, &p1, caps)?;
    log.holds(
        "((2 0;0 0), (2 0;0 0)) is a total homogeneous twin-zero of P1",
        Basis::Claimed,
        twins.pairs.iter().any(|t| t.x == x && t.y == x),
        Certificate::new(),
    );
    let gw_a = gw_systems(gr, &p1, caps)?;
    let gw_b = gw_intersection(gr, &p1, caps)?;
    let h = gr.homogeneous();
    log.holds(
        "GW(P1) = P1 from weakly systems",
        Basis::Claimed,
        gw_a == SetOrWhole::Set(p1.elements().intersection(h)),
        Certificate::new(),
    );
    log.holds(
        "GW(P1) = P1 as an intersection of weakly prime ideals",
        Basis::Claimed,
        gw_b == IdealOrWhole::Ideal(p1.clone()),
        Certificate::new(),
    );
    let gp = gp_radical(gr, caps)?;
    let gn = gn_radical(gr, caps)?;
    log.holds(
        "GP = GN = Q with GN^2 = 0",
        Basis::Replayed,
        gp == IdealOrWhole::Ideal(q.clone()) && gn == q && lattice_product(gr, &gn, &gn, caps)?.is_zero(),
        ideal_cert(r, &[("GN", &gn)]),
    );
    let sq = check_theorem("square-zero", &fx.items[0], caps)?;
    log.fact("the square-zero result applies to P1 and holds", Basis::Claimed, Verdict::Pass, sq.result);

    let nonzero_proper: Vec<&Ideal> = lat.ideals()[1..lat.top()].iter().collect();
    if nonzero_proper.len() != 2 {
        let cert = nonzero_proper
            .iter()
            .enumerate()
            .fold(Certificate::new(), |c, (k, i)| c.ideal(&format!("I{}", k + 1), r, i.subgroup()));
        log.finding(
            "the ring is said to have exactly two proper graded ideals P1 and P2",
            CheckResult::fail(cert, format!("there are {} nonzero proper graded ideals", nonzero_proper.len())),
        );
    }
    let gw_p2 = gw_intersection(gr, &p2, caps)?;
    if !gw_p2.is_whole() {
        let found = gw_p2.ideal().expect("not whole");
        log.finding(
            "GW(P2) is said to be R",
            CheckResult::fail(
                ideal_cert(r, &[("P2", &p2), ("GW(P2)", found)]),
                format!("GW(P2) has {} elements and is weakly prime", found.len()),
            ),
        );
    }
    log.done()
}

fn fx6(fx: &Fixture, caps: &Caps) -> Result<Evaluation> {
    let mut log = Log::new(fx);
    let gr = fx.ring();
    let r = gr.ring();
    let p = ideal(r, &["(2 0;0 0)", "(0 2;0 0)", "(0 0;2 0)", "(0 0;0 2)"])?;
    log.holds("P = M2(2Z8) has 256 elements", Basis::Structural, p.len() == 256, Certificate::new());
    log.fact("P is graded prime", Basis::Claimed, Verdict::Pass, is_graded_prime(gr, &p, caps)?);
    log.fact("P is graded weakly prime", Basis::Claimed, Verdict::Pass, is_graded_weakly_prime(gr, &p, caps)?);
    log.fact(
        "P is not graded weakly total prime",
        Basis::Claimed,
        Verdict::Fail,
        is_graded_weakly_total_prime(gr, &p, caps)?,
    );
    let (ok, cert) = replay_total_witness(gr, &p, el(r, "(6 0;0 3)")?, el(r, "(0 1;2 0)")?, el(r, "(0 6;6 0)")?);
    log.holds("(6 0;0 3)(0 1;2 0) = (0 6;6 0) refutes weak total primeness of P", Basis::Replayed, ok, cert);
    log.done()
}

fn fx7(fx: &Fixture, caps: &Caps) -> Result<Evaluation> {
    let mut log = Log::new(fx);
    let gr = fx.ring();
    let r = gr.ring();
    let zero = Ideal::zero(r);
    log.fact(
        "{0} is graded weakly total prime",
        Basis::Claimed,
        Verdict::Pass,
        is_graded_weakly_total_prime(gr, &zero, caps)?,
    );
    log.fact("{0} is not graded total prime", Basis::Claimed, Verdict::Fail, is_graded_total_prime(gr, &zero, caps)?);
    let x = el(r, "(0 2;0 0)")?;
    log.holds(
        "(0 2;0 0)^2 = 0 with (0 2;0 0) homogeneous and nonzero",
        Basis::Claimed,
        r.mul(x, x) == r.zero() && gr.is_homogeneous(x) && x != r.zero(),
        Certificate::new().element("x", r, x).element("y", r, x),
    );
    log.done()
}

fn fx8(fx: &Fixture, caps: &Caps) -> Result<Evaluation> {
    let mut log = Log::new(fx);
    let gr = fx.ring();
    let r = gr.ring();
    let p = ideal(r, &["(0,[1])"])?;
    log.holds("[0,M] has 2 elements", Basis::Structural, p.len() == 2, Certificate::new());
    log.fact("[0,M] is graded", Basis::Claimed, Verdict::Pass, is_graded(gr, &p));
    log.fact(
        "[0,M] is graded weakly total prime",
        Basis::Claimed,
        Verdict::Pass,
        is_graded_weakly_total_prime(gr, &p, caps)?,
    );
    log.fact("[0,M] is not graded total prime", Basis::Claimed, Verdict::Fail, is_graded_total_prime(gr, &p, caps)?);
    let x = el(r, "(2,[0])")?;
    log.holds(
        "(2,[0])^2 = 0 with (2,[0]) homogeneous outside [0,M]",
        Basis::Claimed,
        r.mul(x, x) == r.zero() && gr.is_homogeneous(x) && !p.contains(x),
        Certificate::new().ideal("P", r, p.subgroup()).element("x", r, x).element("y", r, x),
    );
    let Origin::Bracket { base, module } = &fx.items[0].origin else { unreachable!("bracket fixture") };
    let b = base.ring();
    let md = module.module();
    let zero_divisors: Vec<Elem> =
        b.elements().filter(|&a| b.elements().any(|c| c != b.zero() && b.mul(a, c) == b.zero())).collect();
    let killed = zero_divisors.iter().all(|&a| md.elements().all(|x| md.act(a, x) == md.zero()));
    log.holds(
        "0 != Z(Z4) lies in the annihilator of M",
        Basis::Claimed,
        zero_divisors.len() > 1 && killed,
        Certificate::new().set("Z(R)", b, &ElemSet::from_elems(b.order(), zero_divisors.iter().copied())),
    );
    log.done()
}

fn fx9(fx: &Fixture, caps: &Caps) -> Result<Evaluation> {
    let mut log = Log::new(fx);
    let gr = fx.ring();
    let r = gr.ring();
    log.fact(
        "every proper graded ideal is graded weakly prime",
        Basis::Claimed,
        Verdict::Pass,
        all_graded_weakly_prime(gr, caps)?.direct,
    );
    let maximal = maximal_graded_ideals(gr, caps)?;
    log.holds("there are exactly two graded maximal ideals", Basis::Claimed, maximal.len() == 2, Certificate::new());
    if let [x1, x2] = &maximal[..] {
        let prod = lattice_product(gr, x1, x2, caps)?;
        log.holds("X1 X2 = 0", Basis::Claimed, prod.is_zero(), ideal_cert(r, &[("X1", x1), ("X2", x2)]));
        log.fact("R -> R/X1 x R/X2 is a ring isomorphism", Basis::Claimed, Verdict::Pass, canonical_split(r, x1, x2)?);
    }
    log.done()
}

fn fx10(fx: &Fixture, caps: &Caps) -> Result<Evaluation> {
    let mut log = Log::new(fx);
    let gr = fx.ring();
    let r = gr.ring();
    let p = ideal(r, &["(0 1;0 0)", "(0 x;0 0)"])?;
    log.holds("P = (0 GF4;0 0) has 4 elements", Basis::Structural, p.len() == 4, Certificate::new());
    log.holds("P^2 = 0", Basis::Claimed, lattice_product(gr, &p, &p, caps)?.is_zero(), ideal_cert(r, &[("P", &p)]));
    log.fact(
        "P is not component-weakly prime",
        Basis::Claimed,
        Verdict::Fail,
        is_component_weakly_prime(gr, &p, caps)?,
    );
    log.fact(
        "P is not graded weakly total prime",
        Basis::Claimed,
        Verdict::Fail,
        is_graded_weakly_total_prime(gr, &p, caps)?,
    );
    log.fact(
        "P is not graded weakly prime over ideal pairs",
        Basis::Replayed,
        Verdict::Fail,
        is_graded_weakly_prime(gr, &p, caps)?,
    );
    log.fact("P fails the xRy form", Basis::Replayed, Verdict::Fail, is_xry_weakly_prime(gr, &p, caps)?);
    let x = el(r, "(1 0;0 0)")?;
    let y = el(r, "(0 1;0 0)")?;
    let (ok, cert) = replay_total_witness(gr, &p, x, y, r.mul(x, y));
    if !ok {
        log.finding(
            "the transported witness (1 0;0 0)(0 1;0 0) = (0 1;0 0) is offered against P",
            CheckResult::fail(cert, "the second factor (0 1;0 0) lies in P, so the pair refutes neither form"),
        );
    }
    log.done()
}

fn fx11(fx: &Fixture, caps: &Caps) -> Result<Evaluation> {
    let mut log = Log::new(fx);
    let gr = fx.ring();
    let r = gr.ring();
    let bad = r
        .elements()
        .find(|&x| generate(r, [r.mul(x, x)], Sidedness::TwoSided) != generate(r, [x], Sidedness::TwoSided));
    log.holds(
        "<x^2> = <x> for every element x",
        Basis::Claimed,
        bad.is_none(),
        bad.map_or_else(Certificate::new, |x| Certificate::new().element("x", r, x)),
    );
    let p = ideal(r, &["(1,0,0)"])?;
    log.fact("K+0+0 is not graded weakly prime", Basis::Claimed, Verdict::Fail, is_graded_weakly_prime(gr, &p, caps)?);
    log.fact(
        "K+0+0 is not graded weakly total prime",
        Basis::Claimed,
        Verdict::Fail,
        is_graded_weakly_total_prime(gr, &p, caps)?,
    );
    log.done()
}

fn single(name: &str, ring: GradedRing) -> Vec<CorpusItem> {
    vec![CorpusItem::new(name, ring)]
}

/// The registry, in order FX1..FX11.
pub fn fixtures() -> Result<Vec<Fixture>> {
    let f2 = prime_field(2)?;
    let z4 = cyclic(4)?;

    let s2 = in_degree_one(zero_mult(2)?)?;
    let k = trivially(f2.clone());
    let fx2_ring = GradedRing::product(&[&k, &s2, &s2])?;

    let shaped = checkerboard(shaped_3x3(&f2)?, 3)?;
    let p = generate(shaped.ring(), [shaped.ring().elem("(0 0 1;0 0 0;0 0 0)")?], Sidedness::TwoSided);
    let (fx3_ring, _) = shaped.quotient(&p)?;

    let (x, _) = subring(&z4, &ElemSet::from_elems(4, [z4.elem("0")?, z4.elem("2")?]))?;
    let fx4_ring = trivially(product(&[&x, &x, &x])?);

    let base = trivially(z4.clone());
    let two = generate(&z4, [z4.elem("2")?], Sidedness::TwoSided);
    let m = GradedModule::concentrated(&base, FiniteModule::quotient_of_regular(&z4, &two)?, 0)?;
    let fx8_ring = base.bracket(&m)?;

    let fx9_ring = trivially(product(&[&f2, &prime_field(3)?])?);

    Ok(vec![
        Fixture {
            id: "FX1",
            title: "M2(F2) graded by Z4 through its entries",
            note: "a left ideal need not be graded",
            items: single("M2(F2) [Z4 entries]", z4_entries(matrix(&f2, 2)?)?),
            evaluate: fx1,
        },
        Fixture {
            id: "FX2",
            title: "F2+S2+S2 graded by Z2 with S2 in degree 1",
            note: "a graded ideal that is not weakly prime beside a square-zero maximal ideal",
            items: single("F2xS2xS2 [Z2 K+S+S]", fx2_ring),
            evaluate: fx2,
        },
        Fixture {
            id: "FX3",
            title: "S/P for S = (0 F2 F2;0 F2 F2;0 0 0) with the checkerboard grading",
            note: "R^2 = R with a square-zero maximal ideal, yet RX and XR are not weakly prime",
            items: vec![
                CorpusItem { name: "S/P".into(), ring: fx3_ring, origin: Origin::Quotient },
                CorpusItem::new("(0 F2 F2;0 F2 F2;0 0 0) [Z2 checkerboard]", shaped),
            ],
            evaluate: fx3,
        },
        Fixture {
            id: "FX4",
            title: "X+X+X for X the maximal ideal of Z4, trivially graded",
            note: "all graded ideals weakly prime with more than two graded maximal ideals",
            items: single("2Z4x2Z4x2Z4", fx4_ring),
            evaluate: fx4,
        },
        Fixture {
            id: "FX5",
            title: "{(x y;0 0) : x in Z4, y in 2Z4} graded by Z4",
            note: "P1 weakly prime and weakly total prime but neither prime nor total prime",
            items: single("(Z4 2Z4;0 0) [Z4 entries]", z4_entries(row_ring()?)?),
            evaluate: fx5,
        },
        Fixture {
            id: "FX6",
            title: "M2(Z8) graded by Z4 through its entries",
            note: "finite analog of M2(2Z) in M2(Z): prime but not weakly total prime",
            items: single("M2(Z8) [Z4 entries]", z4_entries(matrix(&cyclic(8)?, 2)?)?),
            evaluate: fx6,
        },
        Fixture {
            id: "FX7",
            title: "(Z4 2Z4;0 Z4) graded by Z4",
            note: "finite analog of (Z 2Z;0 Z): zero is weakly total prime but not total prime",
            items: single("(Z4 2Z4;0 Z4) [Z4 entries]", z4_entries(even_corner()?)?),
            evaluate: fx7,
        },
        Fixture {
            id: "FX8",
            title: "[Z4, Z2] with Z2 = Z4/2Z4, trivially graded",
            note: "[0,M] weakly total prime but not total prime",
            items: vec![CorpusItem {
                name: "[Z4,Z2]".into(),
                ring: fx8_ring,
                origin: Origin::Bracket { base, module: m },
            }],
            evaluate: fx8,
        },
        Fixture {
            id: "FX9",
            title: "F2 x F3, trivially graded",
            note: "two graded maximal ideals with zero product and the matching splitting",
            items: vec![CorpusItem {
                name: "F2xF3".into(),
                ring: fx9_ring,
                origin: Origin::Product(vec![trivially(f2.clone()), trivially(prime_field(3)?)]),
            }],
            evaluate: fx9,
        },
        Fixture {
            id: "FX10",
            title: "(F2 GF4;0 F2) graded by Z4",
            note: "finite analog of (Q R;0 Q): a square-zero ideal claimed not weakly prime",
            items: single("(F2 GF4;0 F2) [Z4 entries]", z4_entries(gf4_corner()?)?),
            evaluate: fx10,
        },
        Fixture {
            id: "FX11",
            title: "F2 x F2 x F2, trivially graded",
            note: "<x^2> = <x> everywhere without every ideal being weakly (total) prime",
            items: vec![CorpusItem {
                name: "F2xF2xF2".into(),
                ring: trivially(product(&[&f2, &f2, &f2])?),
                origin: Origin::Product(vec![k.clone(), k.clone(), k]),
            }],
            evaluate: fx11,
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_eleven_entries() {
        let fx = fixtures().unwrap();
        let ids: Vec<&str> = fx.iter().map(|f| f.id).collect();
        assert_eq!(ids, ["FX1", "FX2", "FX3", "FX4", "FX5", "FX6", "FX7", "FX8", "FX9", "FX10", "FX11"]);
    }

    #[test]
    fn fixture_tables_are_reproducible() {
        let a = fixtures().unwrap();
        let b = fixtures().unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.ring().ring().mul_table(), y.ring().ring().mul_table(), "{}", x.id);
            assert_eq!(x.ring().components(), y.ring().components(), "{}", x.id);
        }
    }

    #[test]
    fn facts_replay() {
        let caps = Caps::default();
        for fx in fixtures().unwrap() {
            let ev = fx.evaluate(&caps).unwrap();
            assert!(!ev.facts.is_empty(), "{}", fx.id);
            for f in &ev.facts {
                if fx.id != "FX10" {
                    assert!(f.holds(), "{}: {} gave {}", fx.id, f.statement, f.outcome.narration);
                }
            }
        }
    }

    #[test]
    fn fixture_findings() {
        let caps = Caps::default();
        let mut sources = Vec::new();
        for fx in fixtures().unwrap() {
            for f in fx.evaluate(&caps).unwrap().findings {
                assert!(!f.outcome.certificate.is_empty());
                sources.push(f.source);
            }
        }
        assert_eq!(sources, ["FX1", "FX5", "FX5", "FX10"]);
    }
}
