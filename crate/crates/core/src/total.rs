//! Graded total prime and graded weakly total prime ideals, their
//! single-component variants, twin-zeros and the colon and principal-ideal
//! characterizations.

use rayon::prelude::*;
use serde::Serialize;

use crate::check::{Caps, Certificate, CheckResult, DualCheck, Verdict};
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::grading::GradedRing;
use crate::group::GroupElem;
use crate::ideal::{colon, Ideal};
use crate::lattice::{all_graded_ideals, Lattice};
use crate::prime::{locate, locate_proper};
use crate::ring::{Elem, FiniteRing};

/// Homogeneous products `(x, y, xy)` with `x, y ≠ 0`.
fn homogeneous_products(gr: &GradedRing) -> Vec<(Elem, Elem, Elem)> {
    let r = gr.ring();
    let h = gr.homogeneous_nonzero();
    h.iter().flat_map(|&x| h.iter().map(move |&y| (x, y, r.mul(x, y)))).collect()
}

fn first_violation(
    products: &[(Elem, Elem, Elem)],
    p: &ElemSet,
    zero: Elem,
    weakly: bool,
) -> Option<(Elem, Elem, Elem)> {
    products
        .iter()
        .copied()
        .find(|&(x, y, xy)| (!weakly || xy != zero) && p.contains(xy) && !p.contains(x) && !p.contains(y))
}

fn flags<'a>(gr: &'a GradedRing, caps: &Caps, weakly: bool) -> Result<&'a [bool]> {
    let lat = all_graded_ideals(gr, caps)?;
    let cell = if weakly { &lat.cache.weakly_total_prime } else { &lat.cache.total_prime };
    Ok(cell.get_or_init(|| {
        let products = homogeneous_products(gr);
        let zero = gr.ring().zero();
        (0..lat.len())
            .into_par_iter()
            .map(|i| i != lat.top() && first_violation(&products, lat.get(i).elements(), zero, weakly).is_none())
            .collect()
    }))
}

/// `flags[i]` tells whether lattice member `i` is graded total prime.
pub fn graded_total_prime_flags<'a>(gr: &'a GradedRing, caps: &Caps) -> Result<&'a [bool]> {
    flags(gr, caps, false)
}

/// `flags[i]` tells whether lattice member `i` is graded weakly total prime.
pub fn graded_weakly_total_prime_flags<'a>(gr: &'a GradedRing, caps: &Caps) -> Result<&'a [bool]> {
    flags(gr, caps, true)
}

fn product_certificate(r: &FiniteRing, p: &Ideal, (x, y, xy): (Elem, Elem, Elem)) -> Certificate {
    Certificate::new().ideal("P", r, p.subgroup()).element("x", r, x).element("y", r, y).element("xy", r, xy)
}

fn total_check(gr: &GradedRing, p: &Ideal, caps: &Caps, weakly: bool) -> Result<CheckResult> {
    let what = if weakly { "graded weakly total prime" } else { "graded total prime" };
    let (_, i) = locate_proper(gr, p, caps, what)?;
    if flags(gr, caps, weakly)?[i] {
        return Ok(CheckResult::pass(if weakly {
            "no homogeneous x, y outside P have 0 != xy in P"
        } else {
            "no homogeneous x, y outside P have xy in P"
        }));
    }
    let w = first_violation(&homogeneous_products(gr), p.elements(), gr.ring().zero(), weakly)
        .expect("a failing flag has a witness");
    let narration = if weakly {
        "x and y are homogeneous and outside P, yet 0 != xy lies in P"
    } else {
        "x and y are homogeneous and outside P, yet xy lies in P"
    };
    Ok(CheckResult::fail(product_certificate(gr.ring(), p, w), narration))
}

pub fn is_graded_total_prime(gr: &GradedRing, p: &Ideal, caps: &Caps) -> Result<CheckResult> {
    total_check(gr, p, caps, false)
}

pub fn is_graded_weakly_total_prime(gr: &GradedRing, p: &Ideal, caps: &Caps) -> Result<CheckResult> {
    total_check(gr, p, caps, true)
}

/// `P ∩ R_g`.
pub fn component_part(gr: &GradedRing, p: &Ideal, g: GroupElem) -> ElemSet {
    p.elements().intersection(gr.component(g).elements())
}

fn g_check(gr: &GradedRing, p: &Ideal, g: GroupElem, caps: &Caps, weakly: bool) -> Result<CheckResult> {
    locate(gr, p, caps)?;
    let r = gr.ring();
    let rg = gr.component(g);
    if component_part(gr, p, g).len() == rg.len() {
        return Ok(CheckResult::inapplicable("P_g = R_g"));
    }
    let outside: Vec<Elem> = rg.members().iter().copied().filter(|&x| !p.contains(x)).collect();
    for &x in &outside {
        for &y in &outside {
            let xy = r.mul(x, y);
            if (!weakly || xy != r.zero()) && p.contains(xy) {
                let cert = product_certificate(r, p, (x, y, xy)).degree("g", gr.group(), g);
                return Ok(CheckResult::fail(cert, "x and y lie in R_g outside P, yet the product lies in P"));
            }
        }
    }
    Ok(CheckResult::pass("no x, y in R_g outside P multiply into P as required"))
}

/// `g`-total prime: `xy ∈ P` with `x, y ∈ R_g` forces `x ∈ P` or `y ∈ P`.
/// Inapplicable when `P_g = R_g`.
pub fn is_g_total_prime(gr: &GradedRing, p: &Ideal, g: GroupElem, caps: &Caps) -> Result<CheckResult> {
    g_check(gr, p, g, caps, false)
}

/// `g`-weakly total prime: as `g`-total prime, but only for `xy ≠ 0`.
/// Inapplicable when `P_g = R_g`.
pub fn is_g_weakly_total_prime(gr: &GradedRing, p: &Ideal, g: GroupElem, caps: &Caps) -> Result<CheckResult> {
    g_check(gr, p, g, caps, true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwinKind {
    TotalHomogeneous,
    GTotal,
}

/// `xy = 0` with `x, y ∉ P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TwinZero {
    pub x: Elem,
    pub y: Elem,
    pub kind: TwinKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinZeros {
    pub pairs: Vec<TwinZero>,
    /// Whether `P` satisfies the weak predicate the notion presumes.
    pub premise: bool,
}

/// All total homogeneous twin-zeros of `P`.
pub fn total_twin_zeros(gr: &GradedRing, p: &Ideal, caps: &Caps) -> Result<TwinZeros> {
    let premise = is_graded_weakly_total_prime(gr, p, caps)?.is_pass();
    let zero = gr.ring().zero();
    let pairs = homogeneous_products(gr)
        .into_iter()
        .filter(|&(x, y, xy)| xy == zero && !p.contains(x) && !p.contains(y))
        .map(|(x, y, _)| TwinZero { x, y, kind: TwinKind::TotalHomogeneous })
        .collect();
    Ok(TwinZeros { pairs, premise })
}

/// All `g`-total twin-zeros of `P`.
pub fn g_twin_zeros(gr: &GradedRing, p: &Ideal, g: GroupElem, caps: &Caps) -> Result<TwinZeros> {
    let premise = is_g_weakly_total_prime(gr, p, g, caps)?.is_pass();
    let r = gr.ring();
    let outside: Vec<Elem> = gr.component(g).members().iter().copied().filter(|&x| !p.contains(x)).collect();
    let pairs = outside
        .iter()
        .flat_map(|&x| outside.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| r.mul(x, y) == r.zero())
        .map(|(x, y)| TwinZero { x, y, kind: TwinKind::GTotal })
        .collect();
    Ok(TwinZeros { pairs, premise })
}

/// Which description of `(P_g :_{R_g} Y)` holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColonClause {
    /// Equal to `P_g` and to `(0 :_{R_g} Y)`.
    Both,
    /// Equal to `P_g` only.
    Ideal,
    /// Equal to `(0 :_{R_g} Y)` only.
    Annihilator,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColonRow {
    pub y: ElemSet,
    pub colon: ElemSet,
    pub annihilator: ElemSet,
    pub clause: ColonClause,
}

#[derive(Clone, Debug)]
pub struct ColonReport {
    /// `direct` is the `g`-weakly total prime verdict; `via_characterization`
    /// asks whether every `Y` has `(P_g : Y) ∈ {P_g, (0 : Y)}`.
    pub check: DualCheck,
    pub rows: Vec<ColonRow>,
    /// Whether every subset `Y` was tried, rather than singletons.
    pub exhaustive: bool,
}

/// Classifies `(P_g :_{R_g} Y)` for the subsets `Y ⊆ R_g` not inside `P`:
/// all of them when `|R_g| ≤ caps.powerset`, singletons otherwise.
pub fn colon_characterization(gr: &GradedRing, p: &Ideal, g: GroupElem, caps: &Caps) -> Result<ColonReport> {
    let direct = is_g_weakly_total_prime(gr, p, g, caps)?;
    if direct.verdict == Verdict::Inapplicable {
        let check = DualCheck { via_characterization: direct.clone(), direct };
        return Ok(ColonReport { check, rows: Vec::new(), exhaustive: true });
    }
    let r = gr.ring();
    let n = r.order();
    let rg = gr.component(g).sorted_members();
    let pg = component_part(gr, p, g);
    let zero = ElemSet::from_elems(n, [r.zero()]);
    let exhaustive = rg.len() <= caps.powerset;
    let subsets: Vec<ElemSet> = if exhaustive {
        (1u32..1 << rg.len())
            .map(|m| ElemSet::from_elems(n, rg.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &x)| x)))
            .filter(|y| !y.is_subset(p.elements()))
            .collect()
    } else {
        rg.iter().filter(|&&x| !p.contains(x)).map(|&x| ElemSet::from_elems(n, [x])).collect()
    };
    let rows: Vec<ColonRow> = subsets
        .into_par_iter()
        .map(|y| {
            let c = colon(gr, p.elements(), &y, g).expect("Y lies in R_g").elements;
            let ann = colon(gr, &zero, &y, g).expect("Y lies in R_g").elements;
            let clause = match (c == pg, c == ann) {
                (true, true) => ColonClause::Both,
                (true, false) => ColonClause::Ideal,
                (false, true) => ColonClause::Annihilator,
                (false, false) => ColonClause::Neither,
            };
            ColonRow { y, colon: c, annihilator: ann, clause }
        })
        .collect();
    let via = match rows.iter().find(|row| row.clause == ColonClause::Neither) {
        None => CheckResult::pass("each colon set equals P_g or the annihilator of Y"),
        Some(row) => CheckResult::fail(
            Certificate::new()
                .ideal("P", r, p.subgroup())
                .degree("g", gr.group(), g)
                .set("Y", r, &row.y)
                .set("colon", r, &row.colon),
            "the colon set of Y is neither P_g nor the annihilator of Y",
        ),
    };
    Ok(ColonReport { check: DualCheck { direct, via_characterization: via }, rows, exhaustive })
}

/// Whether `⟨ab⟩ ∈ {⟨a⟩, ⟨b⟩, 0}` for all homogeneous `a, b`.
pub fn principal_triple(gr: &GradedRing, caps: &Caps) -> Result<CheckResult> {
    let lat = all_graded_ideals(gr, caps)?;
    let r = gr.ring();
    let principal = |x: Elem| principal_index(gr, lat, x);
    for (a, b, ab) in homogeneous_products(gr) {
        let k = principal(ab);
        if k != 0 && k != principal(a) && k != principal(b) {
            let cert = Certificate::new().element("a", r, a).element("b", r, b).ideal("<ab>", r, lat.get(k).subgroup());
            return Ok(CheckResult::fail(cert, "<ab> is none of <a>, <b>, 0"));
        }
    }
    Ok(CheckResult::pass("<ab> is <a>, <b> or 0 for all homogeneous a, b"))
}

/// Index of `⟨x⟩` for homogeneous `x`, which may be a product and so not a
/// recorded lattice generator.
fn principal_index(gr: &GradedRing, lat: &Lattice, x: Elem) -> usize {
    lat.principal(x).unwrap_or_else(|| {
        let i = crate::ideal::generate(gr.ring(), [x], crate::ideal::Sidedness::TwoSided);
        lat.position(&i).expect("principal ideals of homogeneous elements are graded")
    })
}

/// Whether every proper graded ideal is graded weakly total prime.
pub fn all_graded_weakly_total_prime(gr: &GradedRing, caps: &Caps) -> Result<CheckResult> {
    let lat = all_graded_ideals(gr, caps)?;
    let wt = graded_weakly_total_prime_flags(gr, caps)?;
    match lat.proper().find(|&i| !wt[i]) {
        None => Ok(CheckResult::pass("every proper graded ideal is graded weakly total prime")),
        Some(i) => {
            let p = lat.get(i);
            let w = first_violation(&homogeneous_products(gr), p.elements(), gr.ring().zero(), true)
                .expect("a failing flag has a witness");
            Ok(CheckResult::fail(
                product_certificate(gr.ring(), p, w),
                "P is a proper graded ideal that is not graded weakly total prime",
            ))
        }
    }
}

/// All proper graded ideals weakly total prime, decided directly and via
/// the principal-ideal criterion.
pub fn principal_triple_check(gr: &GradedRing, caps: &Caps) -> Result<DualCheck> {
    Ok(DualCheck {
        direct: all_graded_weakly_total_prime(gr, caps)?,
        via_characterization: principal_triple(gr, caps)?,
    })
}

/// Whether `⟨x²⟩ ∈ {⟨x⟩, 0}` for every homogeneous `x`.
pub fn square_principal_check(gr: &GradedRing, caps: &Caps) -> Result<CheckResult> {
    let lat = all_graded_ideals(gr, caps)?;
    let r = gr.ring();
    for x in gr.homogeneous_nonzero() {
        let k = principal_index(gr, lat, r.mul(x, x));
        if k != 0 && k != principal_index(gr, lat, x) {
            let cert = Certificate::new().element("x", r, x).ideal("<x^2>", r, lat.get(k).subgroup());
            return Ok(CheckResult::fail(cert, "<x^2> is neither <x> nor 0"));
        }
    }
    Ok(CheckResult::pass("<x^2> is <x> or 0 for every homogeneous x"))
}
