//! Graded prime and graded weakly prime ideals, graded weakly systems, the
//! operator GW and the radicals GP and GN.

use rayon::prelude::*;

use crate::check::{Caps, Certificate, CheckResult, DualCheck, IdealOrWhole};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::grading::GradedRing;
use crate::ideal::{is_graded, not_graded_error, re_submodules, subgroup_product, Ideal};
use crate::lattice::{all_graded_ideals, Lattice};
use crate::ring::{Additive, Elem, FiniteRing};
use crate::subgroup::Subgroup;

/// Finds `p` in the graded lattice, or explains why it is not there.
pub(crate) fn locate<'a>(gr: &'a GradedRing, p: &Ideal, caps: &Caps) -> Result<(&'a Lattice, usize)> {
    if p.ring_id() != gr.ring().id() {
        return Err(Error::RingMismatch);
    }
    let lat = all_graded_ideals(gr, caps)?;
    if let Some(i) = lat.position(p) {
        return Ok((lat, i));
    }
    let graded = is_graded(gr, p);
    if graded.is_fail() {
        return Err(not_graded_error(&graded));
    }
    Err(Error::NotTwoSided)
}

pub(crate) fn locate_proper<'a>(
    gr: &'a GradedRing,
    p: &Ideal,
    caps: &Caps,
    what: &'static str,
) -> Result<(&'a Lattice, usize)> {
    let (lat, i) = locate(gr, p, caps)?;
    if i == lat.top() {
        return Err(Error::NotProper(what));
    }
    Ok((lat, i))
}

/// Whether some graded ideals `I, J` strictly above `P` have `IJ ⊆ P`
/// (and `IJ ≠ 0` when `weakly`). Any witness `(I, J)` can be replaced by
/// `(I + P, J + P)`, so only ideals above `P` need to be tried.
fn has_bad_pair_above(r: &FiniteRing, lat: &Lattice, p: usize, weakly: bool) -> bool {
    let above: Vec<usize> = (0..lat.len()).filter(|&i| i != p && lat.is_subset(p, i)).collect();
    above.iter().any(|&i| {
        above.iter().any(|&j| {
            let k = lat.product(r, i, j);
            (!weakly || k != 0) && lat.is_subset(k, p)
        })
    })
}

/// Smallest-first search for graded ideals `I, J ⊄ P` with `IJ ⊆ P`
/// (and `IJ ≠ 0` when `weakly`).
fn bad_pair(r: &FiniteRing, lat: &Lattice, p: usize, weakly: bool) -> Option<(usize, usize)> {
    let outside: Vec<usize> = (0..lat.len()).filter(|&i| !lat.is_subset(i, p)).collect();
    for (b, &j) in outside.iter().enumerate() {
        for &i in &outside[..=b] {
            for (x, y) in [(i, j), (j, i)] {
                let k = lat.product(r, x, y);
                if (!weakly || k != 0) && lat.is_subset(k, p) {
                    return Some((x, y));
                }
            }
        }
    }
    None
}

fn flags<'a>(gr: &'a GradedRing, caps: &Caps, weakly: bool) -> Result<&'a [bool]> {
    let lat = all_graded_ideals(gr, caps)?;
    let cell = if weakly { &lat.cache.weakly_prime } else { &lat.cache.prime };
    let r = gr.ring();
    Ok(cell.get_or_init(|| {
        (0..lat.len()).into_par_iter().map(|p| p != lat.top() && !has_bad_pair_above(r, lat, p, weakly)).collect()
    }))
}

/// `flags[i]` tells whether lattice member `i` is graded prime.
pub fn graded_prime_flags<'a>(gr: &'a GradedRing, caps: &Caps) -> Result<&'a [bool]> {
    flags(gr, caps, false)
}

/// `flags[i]` tells whether lattice member `i` is graded weakly prime.
pub fn graded_weakly_prime_flags<'a>(gr: &'a GradedRing, caps: &Caps) -> Result<&'a [bool]> {
    flags(gr, caps, true)
}

fn pair_certificate(r: &FiniteRing, lat: &Lattice, p: usize, (i, j): (usize, usize)) -> Certificate {
    Certificate::new()
        .ideal("P", r, lat.get(p).subgroup())
        .ideal("I", r, lat.get(i).subgroup())
        .ideal("J", r, lat.get(j).subgroup())
        .ideal("IJ", r, lat.get(lat.product(r, i, j)).subgroup())
}

fn prime_check(gr: &GradedRing, p: &Ideal, caps: &Caps, weakly: bool) -> Result<CheckResult> {
    let what = if weakly { "graded weakly prime" } else { "graded prime" };
    let (lat, pi) = locate_proper(gr, p, caps, what)?;
    let ok = flags(gr, caps, weakly)?[pi];
    if ok {
        return Ok(CheckResult::pass(if weakly {
            "no graded ideals I, J outside P have 0 != IJ inside P"
        } else {
            "no graded ideals I, J outside P have IJ inside P"
        }));
    }
    let r = gr.ring();
    let w = bad_pair(r, lat, pi, weakly).expect("a failing flag has a witness");
    let narration = if weakly {
        "I and J are not inside P, yet 0 != IJ lies in P"
    } else {
        "I and J are not inside P, yet IJ lies in P"
    };
    Ok(CheckResult::fail(pair_certificate(r, lat, pi, w), narration))
}

pub fn is_graded_prime(gr: &GradedRing, p: &Ideal, caps: &Caps) -> Result<CheckResult> {
    prime_check(gr, p, caps, false)
}

pub fn is_graded_weakly_prime(gr: &GradedRing, p: &Ideal, caps: &Caps) -> Result<CheckResult> {
    prime_check(gr, p, caps, true)
}

/// The component form: for `R_e`-submodules `I ⊆ R_g`, `J ⊆ R_h` with
/// `0 ≠ IJ ⊆ P`, one of them lies in `P`.
pub fn is_component_weakly_prime(gr: &GradedRing, p: &Ideal, caps: &Caps) -> Result<CheckResult> {
    locate_proper(gr, p, caps, "component weakly prime")?;
    let r = gr.ring();
    let support = gr.support();
    let mut subs: Vec<(usize, Vec<Subgroup>)> = Vec::new();
    for &g in &support {
        let outside: Vec<Subgroup> =
            re_submodules(gr, g, caps)?.into_iter().filter(|s| !s.is_subset(p.subgroup())).collect();
        subs.push((g, outside));
    }
    for (g, is) in &subs {
        for (h, js) in &subs {
            for i in is {
                for j in js {
                    let ij = subgroup_product(r, i, j);
                    if !ij.is_trivial() && ij.is_subset(p.subgroup()) {
                        let cert = Certificate::new()
                            .ideal("P", r, p.subgroup())
                            .degree("g", gr.group(), *g)
                            .ideal("I", r, i)
                            .degree("h", gr.group(), *h)
                            .ideal("J", r, j)
                            .ideal("IJ", r, &ij);
                        return Ok(CheckResult::fail(
                            cert,
                            "R_e-submodules I of R_g and J of R_h lie outside P, yet 0 != IJ lies in P",
                        ));
                    }
                }
            }
        }
    }
    Ok(CheckResult::pass("no pair of R_e-submodules of components outside P has 0 != IJ inside P"))
}

/// `xRy`, the additive span of `{xry : r ∈ R}`.
pub fn x_r_y(r: &FiniteRing, x: Elem, y: Elem) -> Subgroup {
    Subgroup::generated(r, r.add_gens().iter().map(|&g| r.mul(r.mul(x, g), y)).collect::<Vec<_>>())
}

/// The elementwise form: for homogeneous `x, y` with `0 ≠ xRy ⊆ P`, one of
/// them lies in `P`. Inapplicable to rings without unity.
pub fn is_xry_weakly_prime(gr: &GradedRing, p: &Ideal, caps: &Caps) -> Result<CheckResult> {
    locate_proper(gr, p, caps, "xRy weakly prime")?;
    let r = gr.ring();
    if r.unity().is_none() {
        return Ok(CheckResult::inapplicable("the ring has no unity"));
    }
    let outside: Vec<Elem> = gr.homogeneous_nonzero().into_iter().filter(|&x| !p.contains(x)).collect();
    for &x in &outside {
        for &y in &outside {
            let xry = x_r_y(r, x, y);
            if !xry.is_trivial() && xry.is_subset(p.subgroup()) {
                let cert = Certificate::new()
                    .ideal("P", r, p.subgroup())
                    .element("x", r, x)
                    .element("y", r, y)
                    .ideal("xRy", r, &xry);
                return Ok(CheckResult::fail(cert, "x and y lie outside P, yet 0 != xRy lies in P"));
            }
        }
    }
    Ok(CheckResult::pass("no homogeneous x, y outside P have 0 != xRy inside P"))
}

fn check_system_shape(gr: &GradedRing, s: &ElemSet) -> Result<()> {
    let r = gr.ring();
    if s.universe() != r.order() {
        return Err(Error::RingMismatch);
    }
    if s.is_empty() {
        return Err(Error::InvalidArgument("a graded weakly system is nonempty".into()));
    }
    if s.contains(r.zero()) {
        return Err(Error::InvalidArgument("a graded weakly system does not contain zero".into()));
    }
    if let Some(x) = s.iter().find(|&x| !gr.is_homogeneous(x)) {
        return Err(Error::InvalidArgument(format!("{} is not homogeneous", r.label(x))));
    }
    Ok(())
}

/// Whether graded ideals meeting `S` with nonzero product always have a
/// product meeting `S`.
pub fn is_weakly_system(gr: &GradedRing, s: &ElemSet, caps: &Caps) -> Result<CheckResult> {
    check_system_shape(gr, s)?;
    let lat = all_graded_ideals(gr, caps)?;
    let r = gr.ring();
    let meets: Vec<bool> = lat.ideals().iter().map(|i| !i.elements().is_disjoint(s)).collect();
    for i in 0..lat.len() {
        for j in 0..lat.len() {
            if !meets[i] || !meets[j] {
                continue;
            }
            let k = lat.product(r, i, j);
            if k != 0 && !meets[k] {
                let cert = Certificate::new()
                    .ideal("I", r, lat.get(i).subgroup())
                    .ideal("J", r, lat.get(j).subgroup())
                    .ideal("IJ", r, lat.get(k).subgroup());
                return Ok(CheckResult::fail(cert, "I and J meet S and IJ != 0, but IJ misses S"));
            }
        }
    }
    Ok(CheckResult::pass("every nonzero product of graded ideals meeting S meets S"))
}

/// Every graded weakly system, as bitmasks over `h(R) - 0`.
#[derive(Clone, Debug)]
pub struct SystemTable {
    /// `h(R) - 0` in increasing order; bit `i` stands for `elems[i]`.
    pub elems: Vec<Elem>,
    /// Masks of all graded weakly systems, increasing.
    pub systems: Vec<u32>,
    /// Mask of `I ∩ h(R)` for each lattice member.
    pub ideal_masks: Vec<u32>,
}

impl SystemTable {
    pub fn mask_of(&self, s: &ElemSet) -> u32 {
        self.elems.iter().enumerate().filter(|(_, &x)| s.contains(x)).fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn set_of(&self, universe: usize, mask: u32) -> ElemSet {
        ElemSet::from_elems(
            universe,
            self.elems.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x),
        )
    }
}

/// Enumerates all graded weakly systems; needs `|h(R) - 0| ≤ caps.systems`.
pub fn weakly_systems<'a>(gr: &'a GradedRing, caps: &Caps) -> Result<&'a SystemTable> {
    let elems = gr.homogeneous_nonzero();
    Caps::require("systems", elems.len(), caps.systems.min(24))?;
    let lat = all_graded_ideals(gr, caps)?;
    let r = gr.ring();
    Ok(lat.cache.systems.get_or_init(|| {
        let mut table = SystemTable { elems, systems: Vec::new(), ideal_masks: Vec::new() };
        table.ideal_masks = lat.ideals().iter().map(|i| table.mask_of(i.elements())).collect();
        let mut triples = std::collections::BTreeSet::new();
        for i in 0..lat.len() {
            for j in 0..lat.len() {
                let k = lat.product(r, i, j);
                let (mi, mj) = (table.ideal_masks[i], table.ideal_masks[j]);
                if k != 0 && mi != 0 && mj != 0 {
                    triples.insert((mi, mj, table.ideal_masks[k]));
                }
            }
        }
        let triples: Vec<(u32, u32, u32)> = triples.into_iter().collect();
        let m = table.elems.len();
        table.systems = (1u32..1 << m)
            .into_par_iter()
            .filter(|&s| triples.iter().all(|&(mi, mj, mk)| s & mi == 0 || s & mj == 0 || s & mk != 0))
            .collect();
        table
    }))
}

/// A set of homogeneous elements, or the whole-ring marker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetOrWhole {
    Set(ElemSet),
    Whole,
}

/// `GW(I)` from the definition: homogeneous `a` such that every graded
/// weakly system containing `a` meets `I`. The whole-ring marker is
/// returned when no system avoids `I`, which happens exactly when no
/// graded weakly prime ideal contains `I`.
pub fn gw_systems(gr: &GradedRing, i: &Ideal, caps: &Caps) -> Result<SetOrWhole> {
    locate(gr, i, caps)?;
    let table = weakly_systems(gr, caps)?;
    let mi = table.mask_of(i.elements());
    let avoiding: Vec<u32> = table.systems.iter().copied().filter(|&s| s & mi == 0).collect();
    if avoiding.is_empty() {
        return Ok(SetOrWhole::Whole);
    }
    let covered = avoiding.iter().fold(0u32, |m, &s| m | s);
    let all = if table.elems.len() == 32 { u32::MAX } else { (1u32 << table.elems.len()) - 1 };
    let mut set = table.set_of(gr.ring().order(), all & !covered);
    set.insert(gr.ring().zero());
    Ok(SetOrWhole::Set(set))
}

/// `GW(I)` as the intersection of the graded weakly prime ideals containing
/// `I`, or the whole-ring marker when there are none.
pub fn gw_intersection(gr: &GradedRing, i: &Ideal, caps: &Caps) -> Result<IdealOrWhole> {
    let (lat, ii) = locate(gr, i, caps)?;
    let wp = graded_weakly_prime_flags(gr, caps)?;
    let over: Vec<usize> = (0..lat.len()).filter(|&p| wp[p] && lat.is_subset(ii, p)).collect();
    Ok(intersection_of(lat, &over))
}

fn intersection_of(lat: &Lattice, members: &[usize]) -> IdealOrWhole {
    match members.split_first() {
        None => IdealOrWhole::Whole,
        Some((&first, rest)) => {
            let k = rest.iter().fold(first, |acc, &p| lat.intersect(acc, p));
            IdealOrWhole::Ideal(lat.get(k).clone())
        }
    }
}

/// `GP(R)`, the intersection of all graded prime ideals; the whole-ring
/// marker when there are none.
pub fn gp_radical(gr: &GradedRing, caps: &Caps) -> Result<IdealOrWhole> {
    let lat = all_graded_ideals(gr, caps)?;
    let pf = graded_prime_flags(gr, caps)?;
    let primes: Vec<usize> = (0..lat.len()).filter(|&p| pf[p]).collect();
    Ok(intersection_of(lat, &primes))
}

/// `GN(R)`, the sum of all graded ideals with zero square.
pub fn gn_radical(gr: &GradedRing, caps: &Caps) -> Result<Ideal> {
    let lat = all_graded_ideals(gr, caps)?;
    let r = gr.ring();
    let k = (0..lat.len()).filter(|&i| lat.product(r, i, i) == 0).fold(0, |acc, i| lat.sum(r, acc, i));
    Ok(lat.get(k).clone())
}

/// Whether every proper graded ideal is graded weakly prime, decided from
/// the definition and through the product criterion `PQ ∈ {P, Q, 0}`.
pub fn all_graded_weakly_prime(gr: &GradedRing, caps: &Caps) -> Result<DualCheck> {
    let lat = all_graded_ideals(gr, caps)?;
    let wp = graded_weakly_prime_flags(gr, caps)?;
    let r = gr.ring();
    let direct = match lat.proper().find(|&p| !wp[p]) {
        None => CheckResult::pass("every proper graded ideal is graded weakly prime"),
        Some(p) => {
            let w = bad_pair(r, lat, p, true).expect("a failing flag has a witness");
            CheckResult::fail(
                pair_certificate(r, lat, p, w),
                "P is a proper graded ideal that is not graded weakly prime",
            )
        }
    };
    let mut via = CheckResult::pass("PQ is P, Q or 0 for all graded ideals P, Q");
    'outer: for p in 0..lat.len() {
        for q in 0..lat.len() {
            let k = lat.product(r, p, q);
            if k != p && k != q && k != 0 {
                let cert = Certificate::new()
                    .ideal("P", r, lat.get(p).subgroup())
                    .ideal("Q", r, lat.get(q).subgroup())
                    .ideal("PQ", r, lat.get(k).subgroup());
                via = CheckResult::fail(cert, "PQ is none of P, Q, 0");
                break 'outer;
            }
        }
    }
    Ok(DualCheck { direct, via_characterization: via })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic, matrix, prime_field, product, zero_mult};
    use crate::group::FiniteGroup;
    use crate::ideal::{generate, Sidedness};

    fn z2() -> FiniteGroup {
        FiniteGroup::cyclic(2).unwrap()
    }

    fn m2f2() -> GradedRing {
        GradedRing::by_entry_degrees(
            matrix(&prime_field(2).unwrap(), 2).unwrap(),
            FiniteGroup::cyclic(4).unwrap(),
            &[0, 2, 2, 0],
        )
        .unwrap()
    }

    fn xxx() -> GradedRing {
        let x = zero_mult(2).unwrap();
        GradedRing::trivial(product(&[&x, &x, &x]).unwrap(), z2())
    }

    fn ideal(gr: &GradedRing, labels: &[&str]) -> Ideal {
        let r = gr.ring();
        generate(r, labels.iter().map(|l| r.elem(l).unwrap()), Sidedness::TwoSided)
    }

    /// Definition-level oracle over all pairs of graded ideals.
    fn weakly_prime_oracle(gr: &GradedRing, p: &Ideal) -> bool {
        let lat = all_graded_ideals(gr, &Caps::default()).unwrap();
        let r = gr.ring();
        lat.ideals().iter().all(|i| {
            lat.ideals().iter().all(|j| {
                let ij = subgroup_product(r, i.subgroup(), j.subgroup());
                ij.is_trivial() || !ij.is_subset(p.subgroup()) || i.is_subset(p) || j.is_subset(p)
            })
        })
    }

    #[test]
    fn simple_ring() {
        let gr = m2f2();
        let caps = Caps::default();
        let zero = Ideal::zero(gr.ring());
        assert!(is_graded_prime(&gr, &zero, &caps).unwrap().is_pass());
        assert!(is_graded_weakly_prime(&gr, &zero, &caps).unwrap().is_pass());
        assert_eq!(gp_radical(&gr, &caps).unwrap(), IdealOrWhole::Ideal(zero.clone()));
        assert!(gn_radical(&gr, &caps).unwrap().is_zero());
        let whole = Ideal::whole(gr.ring());
        assert_eq!(is_graded_prime(&gr, &whole, &caps).unwrap_err(), Error::NotProper("graded prime"));
    }

    #[test]
    fn k_s_s_not_weakly_prime() {
        let f2 = prime_field(2).unwrap();
        let s = zero_mult(2).unwrap();
        let r = product(&[&f2, &s, &s]).unwrap();
        let r0 = ElemSet::from_elems(8, ["(0,0,0)", "(1,0,0)"].map(|l| r.elem(l).unwrap()));
        let r1 = ElemSet::from_elems(8, r.elements().filter(|&x| r.label(x).starts_with("(0,")));
        let gr = GradedRing::new(r, z2(), vec![r0, r1]).unwrap();
        let p = ideal(&gr, &["(1,0,0)", "(0,0,1)"]);
        let res = is_graded_weakly_prime(&gr, &p, &Caps::default()).unwrap();
        assert!(res.is_fail());
        assert!(!weakly_prime_oracle(&gr, &p));
        let ring = gr.ring();
        let i = res.certificate.subgroup("I", ring).unwrap();
        let j = res.certificate.subgroup("J", ring).unwrap();
        let ij = subgroup_product(ring, &i, &j);
        assert!(!ij.is_trivial() && ij.is_subset(p.subgroup()));
        assert!(!i.is_subset(p.subgroup()) && !j.is_subset(p.subgroup()));
        let expected = ideal(&gr, &["(1,0,0)", "(0,1,0)"]);
        assert_eq!(&i, expected.subgroup());
        assert_eq!(&j, expected.subgroup());
    }

    #[test]
    fn zero_square_ring() {
        let gr = xxx();
        let caps = Caps::default();
        let all = all_graded_weakly_prime(&gr, &caps).unwrap();
        assert!(all.direct.is_pass() && all.agree());
        assert_eq!(gp_radical(&gr, &caps).unwrap(), IdealOrWhole::Whole);
        assert!(gn_radical(&gr, &caps).unwrap().is_whole(gr.ring()));
    }

    #[test]
    fn k_k_k_not_all_weakly_prime() {
        let f2 = prime_field(2).unwrap();
        let gr = GradedRing::trivial(product(&[&f2, &f2, &f2]).unwrap(), z2());
        let caps = Caps::default();
        let all = all_graded_weakly_prime(&gr, &caps).unwrap();
        assert!(all.direct.is_fail() && all.agree());
        let p = ideal(&gr, &["(1,0,0)"]);
        assert!(is_graded_weakly_prime(&gr, &p, &caps).unwrap().is_fail());
    }

    #[test]
    fn flags_match_oracle_on_small_rings() {
        let caps = Caps::default();
        let f2 = prime_field(2).unwrap();
        let rings = vec![
            m2f2(),
            xxx(),
            GradedRing::trivial(cyclic(8).unwrap(), z2()),
            GradedRing::trivial(product(&[&f2, &cyclic(4).unwrap()]).unwrap(), z2()),
        ];
        for gr in &rings {
            let lat = all_graded_ideals(gr, &caps).unwrap();
            let wp = graded_weakly_prime_flags(gr, &caps).unwrap();
            for p in lat.proper() {
                assert_eq!(wp[p], weakly_prime_oracle(gr, lat.get(p)));
            }
        }
    }

    #[test]
    fn systems_and_gw() {
        let caps = Caps::default();
        let gr = GradedRing::trivial(cyclic(8).unwrap(), z2());
        let r = gr.ring();
        let table = weakly_systems(&gr, &caps).unwrap();
        assert!(!table.systems.is_empty());
        for i in all_graded_ideals(&gr, &caps).unwrap().ideals() {
            let by_sys = gw_systems(&gr, i, &caps).unwrap();
            let by_int = gw_intersection(&gr, i, &caps).unwrap();
            match (by_sys, by_int) {
                (SetOrWhole::Whole, IdealOrWhole::Whole) => {}
                (SetOrWhole::Set(s), IdealOrWhole::Ideal(j)) => {
                    assert_eq!(s, j.elements().intersection(gr.homogeneous()))
                }
                other => panic!("mismatch {other:?}"),
            }
        }
        let zero = Ideal::zero(r);
        assert_eq!(gw_intersection(&gr, &zero, &caps).unwrap(), IdealOrWhole::Ideal(zero));
        let bad = ElemSet::from_elems(8, [r.zero()]);
        assert!(is_weakly_system(&gr, &bad, &caps).is_err());
    }

    #[test]
    fn xry_needs_unity() {
        let caps = Caps::default();
        let gr = xxx();
        let zero = Ideal::zero(gr.ring());
        assert_eq!(is_xry_weakly_prime(&gr, &zero, &caps).unwrap().verdict, crate::check::Verdict::Inapplicable);
        let m = m2f2();
        assert!(is_xry_weakly_prime(&m, &Ideal::zero(m.ring()), &caps).unwrap().is_pass());
        assert!(is_component_weakly_prime(&m, &Ideal::zero(m.ring()), &caps).unwrap().is_pass());
    }
}
