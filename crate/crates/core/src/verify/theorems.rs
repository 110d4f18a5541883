//! The theorem registry. Each entry replays one result over a graded ring,
//! quantifying over every instance of its hypothesis.

use rayon::prelude::*;
use serde::Serialize;

use crate::check::{Caps, Certificate, CheckResult, IdealOrWhole, Verdict};
use crate::construct;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::grading::GradedRing;
use crate::ideal::{is_graded, is_graded_set, Ideal, Sidedness};
use crate::lattice::{all_graded_ideals, all_ideals, Lattice};
use crate::prime::{
    all_graded_weakly_prime, gn_radical, gp_radical, graded_prime_flags, graded_weakly_prime_flags, gw_intersection,
    gw_systems, is_component_weakly_prime, is_weakly_system, is_xry_weakly_prime, weakly_systems, SetOrWhole,
};
use crate::ring::{Additive, Elem, FiniteRing};
use crate::total::{
    all_graded_weakly_total_prime, colon_characterization, component_part, g_twin_zeros, graded_total_prime_flags,
    graded_weakly_total_prime_flags, is_g_total_prime, is_g_weakly_total_prime, principal_triple_check,
    square_principal_check, ColonClause,
};

use super::corpus::{CorpusItem, Origin};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    /// A failure is a defect.
    Assert,
    /// A failure is logged as a finding.
    Record,
}

/// Result of one theorem on one ring.
#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub result: CheckResult,
    /// Instances that met the hypothesis.
    pub satisfied: usize,
    /// Instances that did not.
    pub violated: usize,
}

pub struct Theorem {
    pub id: &'static str,
    pub tier: Tier,
    pub statement: &'static str,
    /// Whether the result has a hypothesis beyond the ring being graded.
    pub conditional: bool,
    check: fn(&CorpusItem, &Caps) -> Result<Outcome>,
}

impl Theorem {
    /// Runs the check; exceeding a cap makes the outcome inapplicable.
    pub fn run(&self, item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
        match (self.check)(item, caps) {
            Err(Error::CapExceeded { what, size, cap }) => Ok(Outcome {
                result: CheckResult::inapplicable(format!("{what} size {size} exceeds cap {cap}")),
                satisfied: 0,
                violated: 0,
            }),
            other => other,
        }
    }
}

#[derive(Default)]
struct Tally {
    satisfied: usize,
    violated: usize,
}

impl Tally {
    fn hit(&mut self, hypothesis: bool) -> bool {
        if hypothesis {
            self.satisfied += 1;
        } else {
            self.violated += 1;
        }
        hypothesis
    }

    fn fail(self, certificate: Certificate, narration: impl Into<String>) -> Result<Outcome> {
        Ok(Outcome {
            result: CheckResult::fail(certificate, narration),
            satisfied: self.satisfied,
            violated: self.violated,
        })
    }

    fn done(self, narration: &str) -> Result<Outcome> {
        let result = if self.satisfied > 0 {
            CheckResult::pass(narration)
        } else {
            CheckResult::inapplicable("the hypothesis never holds")
        };
        Ok(Outcome { result, satisfied: self.satisfied, violated: self.violated })
    }
}

fn cert(r: &FiniteRing, lat: &Lattice, named: &[(&str, usize)]) -> Certificate {
    named.iter().fold(Certificate::new(), |c, &(role, i)| c.ideal(role, r, lat.get(i).subgroup()))
}

fn all_weakly_prime(gr: &GradedRing, caps: &Caps) -> Result<bool> {
    Ok(all_graded_weakly_prime(gr, caps)?.direct.is_pass())
}

fn square_is_whole(gr: &GradedRing, lat: &Lattice) -> bool {
    lat.product(gr.ring(), lat.top(), lat.top()) == lat.top()
}

fn square_zero(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let r = gr.ring();
    let lat = all_graded_ideals(gr, caps)?;
    let wp = graded_weakly_prime_flags(gr, caps)?;
    let p = graded_prime_flags(gr, caps)?;
    let mut t = Tally::default();
    for i in lat.proper() {
        if t.hit(wp[i] && !p[i]) && lat.product(r, i, i) != 0 {
            return t.fail(cert(r, lat, &[("P", i)]), "P is weakly prime, not prime, and P^2 != 0");
        }
    }
    t.done("P^2 = 0 for every weakly prime, non-prime P")
}

fn product_criterion(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let dual = all_graded_weakly_prime(&item.ring, caps)?;
    let mut t = Tally::default();
    t.hit(dual.direct.is_pass());
    if !dual.agree() {
        let side = if dual.direct.is_fail() { &dual.direct } else { &dual.via_characterization };
        return t.fail(side.certificate.clone(), "the definition and the product criterion disagree");
    }
    Ok(Outcome {
        result: CheckResult::pass("the definition and the product criterion agree"),
        satisfied: t.satisfied,
        violated: t.violated,
    })
}

fn square_dichotomy(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let r = gr.ring();
    let mut t = Tally::default();
    if !t.hit(all_weakly_prime(gr, caps)?) {
        return t.done("");
    }
    let lat = all_graded_ideals(gr, caps)?;
    for i in 0..lat.len() {
        let k = lat.product(r, i, i);
        if k != i && k != 0 {
            return t.fail(cert(r, lat, &[("P", i), ("P^2", k)]), "P^2 is neither P nor 0");
        }
    }
    t.done("P^2 is P or 0 for every graded P")
}

fn at_most_two_maximal(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let lat = all_graded_ideals(gr, caps)?;
    let mut t = Tally::default();
    if !t.hit(square_is_whole(gr, lat) && all_weakly_prime(gr, caps)?) {
        return t.done("");
    }
    let max = lat.maximal_proper();
    if max.len() > 2 {
        let named: Vec<(&str, usize)> = [("X1", max[0]), ("X2", max[1]), ("X3", max[2])].to_vec();
        return t.fail(cert(gr.ring(), lat, &named), "three distinct graded maximal ideals");
    }
    t.done("at most two graded maximal ideals")
}

/// Whether `r ↦ (r + X1, r + X2)` is a ring isomorphism `R → R/X1 × R/X2`.
pub fn canonical_split(r: &FiniteRing, x1: &Ideal, x2: &Ideal) -> Result<CheckResult> {
    let (q1, p1) = construct::quotient(r, x1)?;
    let (q2, p2) = construct::quotient(r, x2)?;
    let prod = construct::product(&[&q1, &q2])?;
    let n2 = q2.order();
    let phi = |x: Elem| Elem::from_index(p1[x.index()].index() * n2 + p2[x.index()].index());
    if prod.order() != r.order() {
        return Ok(CheckResult::fail(
            Certificate::new().ideal("X1", r, x1.subgroup()).ideal("X2", r, x2.subgroup()),
            format!("|R| = {} but |R/X1 x R/X2| = {}", r.order(), prod.order()),
        ));
    }
    let image = ElemSet::from_elems(prod.order(), r.elements().map(phi));
    if image.len() != r.order() {
        return Ok(CheckResult::fail(
            Certificate::new().ideal("X1", r, x1.subgroup()).ideal("X2", r, x2.subgroup()),
            "the canonical map is not injective",
        ));
    }
    for &a in r.add_gens() {
        for b in r.elements() {
            if phi(r.add(a, b)) != prod.add(phi(a), phi(b)) {
                let c = Certificate::new().element("a", r, a).element("b", r, b);
                return Ok(CheckResult::fail(c, "the canonical map is not additive"));
            }
        }
        for &b in r.add_gens() {
            if phi(r.mul(a, b)) != prod.mul(phi(a), phi(b)) {
                let c = Certificate::new().element("a", r, a).element("b", r, b);
                return Ok(CheckResult::fail(c, "the canonical map is not multiplicative"));
            }
        }
    }
    Ok(CheckResult::pass("the canonical map is a ring isomorphism"))
}

fn two_maximal(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let r = gr.ring();
    let lat = all_graded_ideals(gr, caps)?;
    let max = lat.maximal_proper();
    let mut t = Tally::default();
    if !t.hit(max.len() == 2 && all_weakly_prime(gr, caps)?) {
        return t.done("");
    }
    let (a, b) = (max[0], max[1]);
    if lat.product(r, a, b) != 0 || lat.product(r, b, a) != 0 {
        return t.fail(cert(r, lat, &[("X1", a), ("X2", b)]), "the two graded maximal ideals have nonzero product");
    }
    if r.unity().is_some() {
        let split = canonical_split(r, lat.get(a), lat.get(b))?;
        if !split.is_pass() {
            return t.fail(split.certificate, split.narration);
        }
    }
    t.done("X1 X2 = X2 X1 = 0, and R splits when unital")
}

fn gp_equals_gn(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let r = gr.ring();
    let lat = all_graded_ideals(gr, caps)?;
    let mut t = Tally::default();
    if !t.hit(square_is_whole(gr, lat) && all_weakly_prime(gr, caps)?) {
        return t.done("");
    }
    let gn = gn_radical(gr, caps)?;
    let gp = gp_radical(gr, caps)?;
    let gn_i = lat.position(&gn).expect("GN is graded");
    if gp.elements(r) != *gn.elements() {
        let mut c = Certificate::new().ideal("GN", r, gn.subgroup());
        if let IdealOrWhole::Ideal(p) = &gp {
            c = c.ideal("GP", r, p.subgroup());
        }
        return t.fail(c, "GP differs from GN");
    }
    if lat.product(r, gn_i, gn_i) != 0 {
        return t.fail(cert(r, lat, &[("GN", gn_i)]), "GN^2 != 0");
    }
    t.done("GP = GN and GN^2 = 0")
}

fn quotient_by_gn(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let mut t = Tally::default();
    if !t.hit(all_weakly_prime(gr, caps)?) {
        return t.done("");
    }
    let gn = gn_radical(gr, caps)?;
    let (q, _) = gr.quotient(&gn)?;
    let lat = all_graded_ideals(&q, caps)?;
    let prime = graded_prime_flags(&q, caps)?;
    if let Some(i) = (1..lat.top()).find(|&i| !prime[i]) {
        return t.fail(cert(q.ring(), lat, &[("P", i)]), "a nonzero proper graded ideal of R/GN is not graded prime");
    }
    t.done("every nonzero proper graded ideal of R/GN is graded prime")
}

fn system_complement(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let r = gr.ring();
    let lat = all_graded_ideals(gr, caps)?;
    let wp = graded_weakly_prime_flags(gr, caps)?;
    let mut t = Tally::default();
    for i in lat.proper() {
        t.hit(true);
        let s = gr.homogeneous().difference(lat.get(i).elements());
        let system = is_weakly_system(gr, &s, caps)?;
        if system.is_pass() != wp[i] {
            return t.fail(cert(r, lat, &[("P", i)]), "h(R) - P is a weakly system exactly when P is not weakly prime");
        }
    }
    t.done("h(R) - P is a weakly system exactly when P is weakly prime")
}

fn maximal_disjoint(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let r = gr.ring();
    let lat = all_graded_ideals(gr, caps)?;
    let wp = graded_weakly_prime_flags(gr, caps)?;
    let table = weakly_systems(gr, caps)?;
    let per_system: Vec<(usize, usize, Option<usize>)> = table
        .systems
        .par_iter()
        .map(|&s| {
            let disjoint: Vec<usize> = (0..lat.len()).filter(|&i| table.ideal_masks[i] & s == 0).collect();
            let maximal: Vec<usize> = disjoint
                .iter()
                .copied()
                .filter(|&i| !disjoint.iter().any(|&j| j != i && lat.is_subset(i, j)))
                .collect();
            let bad = maximal.iter().copied().find(|&i| !wp[i]);
            (maximal.len(), disjoint.len() - maximal.len(), bad)
        })
        .collect();
    let t = Tally { satisfied: per_system.iter().map(|c| c.0).sum(), violated: per_system.iter().map(|c| c.1).sum() };
    let bad = table.systems.iter().zip(&per_system).find_map(|(&s, c)| c.2.map(|i| (s, i)));
    if let Some((s, i)) = bad {
        let c = cert(r, lat, &[("P", i)]).set("S", r, &table.set_of(r.order(), s));
        return t.fail(c, "P is maximal among graded ideals missing S but not weakly prime");
    }
    t.done("graded ideals maximal with respect to missing a weakly system are weakly prime")
}

fn gw_two_ways(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let r = gr.ring();
    let lat = all_graded_ideals(gr, caps)?;
    weakly_systems(gr, caps)?;
    let mut t = Tally::default();
    for i in 0..lat.len() {
        t.hit(true);
        let ideal = lat.get(i);
        let agree = match (gw_systems(gr, ideal, caps)?, gw_intersection(gr, ideal, caps)?) {
            (SetOrWhole::Whole, IdealOrWhole::Whole) => true,
            (SetOrWhole::Set(s), IdealOrWhole::Ideal(j)) => s == j.elements().intersection(gr.homogeneous()),
            _ => false,
        };
        if !agree {
            return t.fail(cert(r, lat, &[("I", i)]), "GW from weakly systems differs from the intersection");
        }
    }
    t.done("GW from weakly systems equals the intersection of weakly prime ideals above I")
}

fn idealization_graded(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let Origin::Idealization { base, module } = &item.origin else {
        return Tally::default().done("");
    };
    let gr = &item.ring;
    let r = base.ring();
    let m = module.module();
    let mo = m.order();
    let ideals = all_ideals(r, Sidedness::TwoSided, caps)?;
    let subs = m.submodules(r);
    let mut t = Tally::default();
    for p in ideals.ideals() {
        let pm = m.ideal_times_module(p.subgroup());
        for n in &subs {
            if !t.hit(pm.is_subset(n)) {
                continue;
            }
            let set = ElemSet::from_elems(
                gr.ring().order(),
                p.elements()
                    .iter()
                    .flat_map(|x| n.members().iter().map(move |y| Elem::from_index(x.index() * mo + y.index()))),
            );
            let c = || Certificate::new().ideal("P", r, p.subgroup()).ideal("N", m, n);
            if Ideal::from_set(gr.ring(), &set, Sidedness::TwoSided).is_err() {
                return t.fail(c(), "P(+)N is not an ideal");
            }
            let lhs = is_graded_set(gr, &set).is_pass();
            let rhs = is_graded(base, p).is_pass() && module.is_graded_submodule(n);
            if lhs != rhs {
                return t.fail(c(), "gradedness of P(+)N differs from gradedness of P and N");
            }
        }
    }
    t.done("P(+)N is graded exactly when P and N are")
}

/// Calls `f(P, g)` for every graded `P` and every degree `g`.
fn for_each_component(
    gr: &GradedRing,
    caps: &Caps,
    mut f: impl FnMut(usize, &Ideal, usize) -> Result<Option<(Certificate, String)>>,
) -> Result<Option<(Certificate, String)>> {
    let lat = all_graded_ideals(gr, caps)?;
    for i in 0..lat.len() {
        for g in gr.group().elements() {
            if let Some(bad) = f(i, lat.get(i), g)? {
                return Ok(Some(bad));
            }
        }
    }
    Ok(None)
}

fn twin_zero_annihilates(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let r = gr.ring();
    let mut t = Tally::default();
    let bad = for_each_component(gr, caps, |_, p, g| {
        if !t.hit(is_g_weakly_total_prime(gr, p, g, caps)?.is_pass()) {
            return Ok(None);
        }
        let pg = component_part(gr, p, g);
        for tz in g_twin_zeros(gr, p, g, caps)?.pairs {
            if let Some(q) = pg.iter().find(|&q| r.mul(tz.x, q) != r.zero() || r.mul(q, tz.y) != r.zero()) {
                let c = Certificate::new()
                    .ideal("P", r, p.subgroup())
                    .degree("g", gr.group(), g)
                    .element("x", r, tz.x)
                    .element("y", r, tz.y)
                    .element("p", r, q);
                return Ok(Some((c, "x p or p y is nonzero for a twin-zero (x, y)".to_string())));
            }
        }
        Ok(None)
    })?;
    match bad {
        Some((c, n)) => t.fail(c, n),
        None => t.done("x P_g = P_g y = 0 for every g-total twin-zero"),
    }
}

fn twin_zero_products(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let r = gr.ring();
    let mut t = Tally::default();
    let bad = for_each_component(gr, caps, |_, p, g| {
        if !t.hit(is_g_weakly_total_prime(gr, p, g, caps)?.is_pass()) {
            return Ok(None);
        }
        for tz in g_twin_zeros(gr, p, g, caps)?.pairs {
            let found = gr.component(g).members().iter().copied().find(|&s| {
                let xs = r.mul(tz.x, s);
                p.contains(xs) && xs != r.zero()
            });
            if let Some(s) = found {
                let c = Certificate::new()
                    .ideal("P", r, p.subgroup())
                    .degree("g", gr.group(), g)
                    .element("x", r, tz.x)
                    .element("y", r, tz.y)
                    .element("r", r, s);
                return Ok(Some((c, "x r lies in P but is nonzero".to_string())));
            }
        }
        Ok(None)
    })?;
    match bad {
        Some((c, n)) => t.fail(c, n),
        None => t.done("x r in P forces x r = 0 for every g-total twin-zero (x, y)"),
    }
}

fn nonzero_square_witness(gr: &GradedRing, p: &Ideal, g: usize) -> Option<(Elem, Elem)> {
    let r = gr.ring();
    let pg = component_part(gr, p, g).to_vec();
    pg.iter().flat_map(|&a| pg.iter().map(move |&b| (a, b))).find(|&(a, b)| r.mul(a, b) != r.zero())
}

fn component_square_zero(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let r = gr.ring();
    let mut t = Tally::default();
    let bad = for_each_component(gr, caps, |_, p, g| {
        let weak = is_g_weakly_total_prime(gr, p, g, caps)?;
        if weak.verdict == Verdict::Inapplicable {
            return Ok(None);
        }
        if !t.hit(weak.is_pass() && is_g_total_prime(gr, p, g, caps)?.is_fail()) {
            return Ok(None);
        }
        Ok(nonzero_square_witness(gr, p, g).map(|(a, b)| {
            let c = Certificate::new()
                .ideal("P", r, p.subgroup())
                .degree("g", gr.group(), g)
                .element("p", r, a)
                .element("q", r, b);
            (c, "P is g-weakly total prime, not g-total prime, and P_g^2 != 0".to_string())
        }))
    })?;
    match bad {
        Some((c, n)) => t.fail(c, n),
        None => t.done("P_g^2 = 0 whenever P is g-weakly total prime but not g-total prime"),
    }
}

fn component_square_nonzero(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let r = gr.ring();
    let mut t = Tally::default();
    let bad = for_each_component(gr, caps, |_, p, g| {
        let weak = is_g_weakly_total_prime(gr, p, g, caps)?;
        if weak.verdict == Verdict::Inapplicable || !t.hit(nonzero_square_witness(gr, p, g).is_some()) {
            return Ok(None);
        }
        let strong = is_g_total_prime(gr, p, g, caps)?;
        if strong.verdict != weak.verdict {
            let c = Certificate::new().ideal("P", r, p.subgroup()).degree("g", gr.group(), g);
            return Ok(Some((c, "P_g^2 != 0 but the g-total and g-weakly total verdicts differ".to_string())));
        }
        Ok(None)
    })?;
    match bad {
        Some((c, n)) => t.fail(c, n),
        None => t.done("g-total prime and g-weakly total prime agree when P_g^2 != 0"),
    }
}

fn element_set_dichotomy(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let r = gr.ring();
    let mut t = Tally::default();
    let bad = for_each_component(gr, caps, |_, p, g| {
        if !t.hit(is_g_weakly_total_prime(gr, p, g, caps)?.is_pass()) {
            return Ok(None);
        }
        let rg = gr.component(g).sorted_members();
        for &x in rg.iter().filter(|&&x| !p.contains(x)) {
            let bits = |f: &dyn Fn(Elem) -> bool| {
                rg.iter().enumerate().filter(|(_, &y)| f(y)).fold(0u64, |m, (i, _)| m | 1 << i)
            };
            let into_p = bits(&|y| p.contains(r.mul(x, y)));
            let nonzero = bits(&|y| r.mul(x, y) != r.zero());
            let outside = bits(&|y| !p.contains(y));
            let witness = if rg.len() <= caps.powerset {
                (1u64..1 << rg.len()).find(|&y| y & !into_p == 0 && y & nonzero != 0 && y & outside != 0)
            } else {
                let a = into_p & nonzero;
                let b = into_p & outside;
                (a != 0 && b != 0).then(|| (a & a.wrapping_neg()) | (b & b.wrapping_neg()))
            };
            if let Some(y) = witness {
                let set = ElemSet::from_elems(
                    r.order(),
                    rg.iter().enumerate().filter(|(i, _)| y >> i & 1 == 1).map(|(_, &e)| e),
                );
                let c = Certificate::new()
                    .ideal("P", r, p.subgroup())
                    .degree("g", gr.group(), g)
                    .element("x", r, x)
                    .set("Y", r, &set);
                return Ok(Some((c, "0 != xY lies in P, yet x is outside P and Y is not inside P".to_string())));
            }
        }
        Ok(None)
    })?;
    match bad {
        Some((c, n)) => t.fail(c, n),
        None => t.done("0 != xY inside P forces x in P or Y inside P"),
    }
}

fn colon_check(item: &CorpusItem, caps: &Caps, singletons: bool) -> Result<Outcome> {
    let gr = &item.ring;
    let r = gr.ring();
    let local = if singletons { Caps { powerset: 0, ..*caps } } else { *caps };
    let mut t = Tally::default();
    let bad = for_each_component(gr, caps, |_, p, g| {
        if !singletons && gr.component(g).len() > caps.powerset {
            return Ok(None);
        }
        let report = colon_characterization(gr, p, g, &local)?;
        if !t.hit(report.check.direct.verdict != Verdict::Inapplicable) {
            return Ok(None);
        }
        let base = || Certificate::new().ideal("P", r, p.subgroup()).degree("g", gr.group(), g);
        if !report.check.agree() {
            let mut c = base();
            if let Some(y) = report.check.via_characterization.certificate.get("Y") {
                c = c.set("Y", r, &ElemSet::from_elems(r.order(), y.elems()));
            }
            return Ok(Some((c, "g-weakly total primality and the colon description disagree".to_string())));
        }
        let pg = component_part(gr, p, g);
        for row in &report.rows {
            let union = row.colon == pg.union(&row.annihilator);
            if union != (row.clause != ColonClause::Neither) {
                let c = base().set("Y", r, &row.y);
                return Ok(Some((c, "the union form and the two-case form of the colon disagree".to_string())));
            }
        }
        Ok(None)
    })?;
    match bad {
        Some((c, n)) => t.fail(c, n),
        None => t.done("g-weakly total prime exactly when every colon set is P_g or the annihilator"),
    }
}

fn colon_theorem(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    colon_check(item, caps, false)
}

fn colon_corollary(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    colon_check(item, caps, true)
}

fn product_theorem(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let mut t = Tally::default();
    let Origin::Product(factors) = &item.origin else {
        return t.done("");
    };
    if factors.len() != 2 || factors.iter().any(|f| f.ring().unity().is_none()) {
        return t.done("");
    }
    let gr = &item.ring;
    let r = gr.ring();
    let lat = all_graded_ideals(gr, caps)?;
    let wt = graded_weakly_total_prime_flags(gr, caps)?;
    let tp = graded_total_prime_flags(gr, caps)?;
    let n2 = factors[1].ring().order();
    for i in lat.proper() {
        let p = lat.get(i);
        let first = ElemSet::from_elems(
            factors[0].ring().order(),
            p.elements().iter().map(|x| Elem::from_index(x.index() / n2)),
        );
        let second = ElemSet::from_elems(n2, p.elements().iter().map(|x| Elem::from_index(x.index() % n2)));
        if first.len() * second.len() != p.len() {
            continue;
        }
        if t.hit(wt[i]) && i != 0 && !tp[i] {
            return t.fail(
                cert(r, lat, &[("P", i)]),
                "P = P1 x P2 is nonzero and graded weakly total prime but not graded total prime",
            );
        }
    }
    t.done("weakly total prime sub-products are zero or total prime")
}

fn quotient_directions(item: &CorpusItem, caps: &Caps, forward: bool) -> Result<Outcome> {
    let gr = &item.ring;
    let r = gr.ring();
    let lat = all_graded_ideals(gr, caps)?;
    let wt = graded_weakly_total_prime_flags(gr, caps)?;
    let mut t = Tally::default();
    for i in lat.proper() {
        if !forward && !wt[i] {
            continue;
        }
        let (q, proj) = gr.quotient(lat.get(i))?;
        let qlat = all_graded_ideals(&q, caps)?;
        let qwt = graded_weakly_total_prime_flags(&q, caps)?;
        for j in lat.proper().filter(|&j| lat.is_subset(i, j)) {
            let image = ElemSet::from_elems(q.ring().order(), lat.get(j).elements().iter().map(|x| proj[x.index()]));
            let k = qlat.index_of(&image).expect("images of graded ideals are graded");
            let (hyp, concl) = if forward { (wt[j], qwt[k]) } else { (qwt[k], wt[j]) };
            if t.hit(hyp) && !concl {
                let narration = if forward {
                    "P is weakly total prime but P/I is not"
                } else {
                    "I and P/I are weakly total prime but P is not"
                };
                return t.fail(cert(r, lat, &[("I", i), ("P", j)]), narration);
            }
        }
    }
    t.done(if forward {
        "P/I is weakly total prime whenever P is"
    } else {
        "P is weakly total prime whenever I and P/I are"
    })
}

fn quotient_forward(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    quotient_directions(item, caps, true)
}

fn quotient_backward(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    quotient_directions(item, caps, false)
}

fn principal_triple(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let dual = principal_triple_check(&item.ring, caps)?;
    let mut t = Tally::default();
    t.hit(dual.direct.is_pass());
    if !dual.agree() {
        let side = if dual.direct.is_fail() { &dual.direct } else { &dual.via_characterization };
        return t.fail(side.certificate.clone(), "the definition and the principal-ideal criterion disagree");
    }
    Ok(Outcome {
        result: CheckResult::pass("the definition and the principal-ideal criterion agree"),
        satisfied: t.satisfied,
        violated: t.violated,
    })
}

fn square_principal(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let mut t = Tally::default();
    if !t.hit(all_graded_weakly_total_prime(gr, caps)?.is_pass()) {
        return t.done("");
    }
    let res = square_principal_check(gr, caps)?;
    if !res.is_pass() {
        return t.fail(res.certificate, res.narration);
    }
    t.done("<x^2> is <x> or 0 for every homogeneous x")
}

fn xry_equivalence(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let r = gr.ring();
    let mut t = Tally::default();
    if !t.hit(r.unity().is_some()) {
        return t.done("");
    }
    let lat = all_graded_ideals(gr, caps)?;
    for i in lat.proper() {
        let p = lat.get(i);
        let xry = is_xry_weakly_prime(gr, p, caps)?;
        let component = is_component_weakly_prime(gr, p, caps)?;
        if xry.verdict != component.verdict {
            let side = if xry.is_fail() { &xry } else { &component };
            let mut c = side.certificate.clone();
            if c.get("P").is_none() {
                c = Certificate::new().ideal("P", r, p.subgroup());
            }
            return t.fail(
                c,
                format!("the xRy form says {} but the component form says {}", xry.verdict, component.verdict),
            );
        }
    }
    t.done("the xRy form and the component form agree")
}

fn sum_of_weakly_total_primes(item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    let gr = &item.ring;
    let r = gr.ring();
    let lat = all_graded_ideals(gr, caps)?;
    let wt = graded_weakly_total_prime_flags(gr, caps)?;
    let tp = graded_total_prime_flags(gr, caps)?;
    let gap = |i: usize| wt[i] && !tp[i];
    let mut t = Tally::default();
    for i in lat.proper() {
        for j in i..lat.top() {
            if !t.hit(gap(i) && gap(j)) {
                continue;
            }
            let k = lat.sum(r, i, j);
            if !wt[k] {
                let reason = if k == lat.top() { "P1 + P2 = R" } else { "P1 + P2 is not weakly total prime" };
                return t.fail(cert(r, lat, &[("P1", i), ("P2", j), ("P1+P2", k)]), reason);
            }
        }
    }
    t.done("sums of weakly total prime, non-total prime ideals are weakly total prime")
}

const fn entry(
    id: &'static str,
    tier: Tier,
    conditional: bool,
    statement: &'static str,
    check: fn(&CorpusItem, &Caps) -> Result<Outcome>,
) -> Theorem {
    Theorem { id, tier, statement, conditional, check }
}

static REGISTRY: [Theorem; 25] = [
    entry("square-zero", Tier::Assert, true, "a weakly prime ideal that is not prime has zero square", square_zero),
    entry(
        "product-criterion",
        Tier::Assert,
        false,
        "all graded ideals weakly prime iff PQ is P, Q or 0",
        product_criterion,
    ),
    entry(
        "square-dichotomy",
        Tier::Assert,
        true,
        "all graded ideals weakly prime implies P^2 is P or 0",
        square_dichotomy,
    ),
    entry(
        "at-most-two-maximal",
        Tier::Assert,
        true,
        "all weakly prime and R^2 = R implies at most two graded maximal ideals",
        at_most_two_maximal,
    ),
    entry(
        "two-maximal",
        Tier::Assert,
        true,
        "all weakly prime with two graded maximal ideals: their product is zero, and R splits when unital",
        two_maximal,
    ),
    entry(
        "gp-equals-gn",
        Tier::Assert,
        true,
        "all weakly prime and R^2 = R implies GP = GN with GN^2 = 0",
        gp_equals_gn,
    ),
    entry(
        "quotient-by-gn",
        Tier::Assert,
        true,
        "all weakly prime implies every nonzero proper graded ideal of R/GN is graded prime",
        quotient_by_gn,
    ),
    entry(
        "system-complement",
        Tier::Assert,
        false,
        "h(R) - P is a graded weakly system iff P is graded weakly prime",
        system_complement,
    ),
    entry(
        "maximal-disjoint",
        Tier::Assert,
        true,
        "an ideal maximal with respect to missing a weakly system is weakly prime",
        maximal_disjoint,
    ),
    entry(
        "gw-two-ways",
        Tier::Assert,
        false,
        "GW from weakly systems equals the intersection of weakly prime ideals",
        gw_two_ways,
    ),
    entry(
        "idealization-graded",
        Tier::Assert,
        true,
        "P(+)N is graded iff P is graded and N is a graded submodule",
        idealization_graded,
    ),
    entry(
        "twin-zero-annihilates",
        Tier::Assert,
        true,
        "a g-total twin-zero (x, y) has x P_g = P_g y = 0",
        twin_zero_annihilates,
    ),
    entry(
        "twin-zero-products",
        Tier::Assert,
        true,
        "for a g-total twin-zero (x, y), x r in P implies x r = 0",
        twin_zero_products,
    ),
    entry(
        "component-square-zero",
        Tier::Assert,
        true,
        "g-weakly total prime but not g-total prime implies P_g^2 = 0",
        component_square_zero,
    ),
    entry(
        "component-square-nonzero",
        Tier::Assert,
        true,
        "P_g^2 != 0 makes g-total prime and g-weakly total prime agree",
        component_square_nonzero,
    ),
    entry(
        "element-set-dichotomy",
        Tier::Assert,
        true,
        "for g-weakly total prime P, 0 != xY inside P forces x in P or Y inside P",
        element_set_dichotomy,
    ),
    entry(
        "colon-theorem",
        Tier::Assert,
        true,
        "g-weakly total prime iff every colon set over subsets Y is P_g or the annihilator",
        colon_theorem,
    ),
    entry(
        "colon-corollary",
        Tier::Assert,
        true,
        "g-weakly total prime iff every colon set over single elements is P_g or the annihilator",
        colon_corollary,
    ),
    entry(
        "product-theorem",
        Tier::Assert,
        true,
        "in T x L with unities, a graded weakly total prime P1 x P2 is zero or graded total prime",
        product_theorem,
    ),
    entry(
        "quotient-forward",
        Tier::Assert,
        true,
        "P weakly total prime implies P/I weakly total prime",
        quotient_forward,
    ),
    entry(
        "quotient-backward",
        Tier::Assert,
        true,
        "I and P/I weakly total prime imply P weakly total prime",
        quotient_backward,
    ),
    entry(
        "principal-triple",
        Tier::Assert,
        false,
        "all weakly total prime iff <ab> is <a>, <b> or 0",
        principal_triple,
    ),
    entry("square-principal", Tier::Assert, true, "all weakly total prime implies <x^2> is <x> or 0", square_principal),
    entry(
        "xry-equivalence",
        Tier::Record,
        true,
        "with unity, the xRy form of weak primeness equals the component form",
        xry_equivalence,
    ),
    entry(
        "sum-of-weakly-total-primes",
        Tier::Record,
        true,
        "P1 + P2 is weakly total prime for weakly total prime, non-total prime P1, P2",
        sum_of_weakly_total_primes,
    ),
];

pub fn theorems() -> &'static [Theorem] {
    &REGISTRY
}

pub fn check_theorem(id: &str, item: &CorpusItem, caps: &Caps) -> Result<Outcome> {
    REGISTRY
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown theorem {id:?}")))?
        .run(item, caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic, prime_field, product, zero_mult};
    use crate::verify::recipes::{checkerboard, row_ring, trivially, upper_triangular, z4_entries};

    fn item(name: &str, gr: GradedRing) -> CorpusItem {
        CorpusItem::new(name, gr)
    }

    #[test]
    fn registry_ids_are_unique() {
        let mut ids: Vec<&str> = theorems().iter().map(|t| t.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), theorems().len());
        assert!(check_theorem("nope", &item("Z2", trivially(cyclic(2).unwrap())), &Caps::default()).is_err());
    }

    #[test]
    fn row_ring_square_zero() {
        let it = item("row", z4_entries(row_ring().unwrap()).unwrap());
        let out = check_theorem("square-zero", &it, &Caps::default()).unwrap();
        assert!(out.result.is_pass());
        assert!(out.satisfied >= 1);
    }

    #[test]
    fn zero_square_ring_skips_unit_hypotheses() {
        let x = zero_mult(2).unwrap();
        let it = item("XXX", trivially(product(&[&x, &x, &x]).unwrap()));
        let caps = Caps::default();
        for id in ["at-most-two-maximal", "gp-equals-gn"] {
            assert_eq!(check_theorem(id, &it, &caps).unwrap().result.verdict, Verdict::Inapplicable);
        }
    }

    #[test]
    fn field_product_splits() {
        let f2 = prime_field(2).unwrap();
        let f3 = prime_field(3).unwrap();
        let it = item("F2xF3", trivially(product(&[&f2, &f3]).unwrap()));
        let out = check_theorem("two-maximal", &it, &Caps::default()).unwrap();
        assert!(out.result.is_pass());
    }

    #[test]
    fn product_theorem_counterexample() {
        let f2 = prime_field(2).unwrap();
        let t = checkerboard(upper_triangular(&f2).unwrap(), 2).unwrap();
        let l = trivially(f2.clone());
        let gr = GradedRing::product(&[&t, &l]).unwrap();
        let it = CorpusItem { name: "T2xF2".into(), ring: gr, origin: Origin::Product(vec![t, l]) };
        let out = check_theorem("product-theorem", &it, &Caps::default()).unwrap();
        assert!(out.result.is_fail());
        let p = out.result.certificate.subgroup("P", it.ring.ring()).unwrap();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn most_theorems_pass_on_small_rings() {
        let caps = Caps::default();
        let f2 = prime_field(2).unwrap();
        let rings = vec![
            item("Z8", trivially(cyclic(8).unwrap())),
            item("row", z4_entries(row_ring().unwrap()).unwrap()),
            item("T2", checkerboard(upper_triangular(&f2).unwrap(), 2).unwrap()),
        ];
        for it in &rings {
            for th in theorems().iter().filter(|t| t.tier == Tier::Assert) {
                let out = th.run(it, &caps).unwrap();
                assert!(!out.result.is_fail(), "{} on {}: {}", th.id, it.name, out.result.narration);
            }
        }
    }
}
