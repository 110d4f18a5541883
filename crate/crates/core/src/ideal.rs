//! Ideals with an explicit sidedness tag, ideal arithmetic, gradedness,
//! colon sets and `R_e`-submodules of components.

use std::collections::HashSet;

use serde::Serialize;

use crate::check::{Caps, Certificate, CheckResult};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::grading::GradedRing;
use crate::group::GroupElem;
use crate::module::join_closure;
use crate::ring::{Additive, Elem, FiniteRing};
use crate::subgroup::{subgroup_violation, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sidedness {
    TwoSided,
    Left,
    Right,
    /// Additive subgroup only.
    Subgroup,
}

impl Sidedness {
    fn left(self) -> bool {
        matches!(self, Sidedness::TwoSided | Sidedness::Left)
    }

    fn right(self) -> bool {
        matches!(self, Sidedness::TwoSided | Sidedness::Right)
    }
}

#[derive(Clone, Debug)]
pub struct Ideal {
    ring_id: u64,
    sub: Subgroup,
    sidedness: Sidedness,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring_id == other.ring_id && self.sub == other.sub
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub(crate) fn from_closed(ring: &FiniteRing, sub: Subgroup, sidedness: Sidedness) -> Ideal {
        Ideal { ring_id: ring.id(), sub, sidedness }
    }

    /// Validates that `set` is closed as `sidedness` demands.
    pub fn from_set(ring: &FiniteRing, set: &ElemSet, sidedness: Sidedness) -> Result<Ideal> {
        if set.universe() != ring.order() {
            return Err(Error::RingMismatch);
        }
        if let Some(v) = subgroup_violation(ring, set) {
            let detail = match v {
                (Some(x), Some(y)) => format!("{} + {} is missing", ring.label(x), ring.label(y)),
                _ => "zero is missing".into(),
            };
            return Err(Error::NotClosed { op: "addition", detail });
        }
        let ideal = Ideal::from_closed(ring, Subgroup::generated(ring, set.iter()), sidedness);
        if sidedness.left() {
            if let Some((r, x)) = ideal.left_violation(ring) {
                return Err(Error::NotClosed {
                    op: "left multiplication",
                    detail: format!("{} * {} is missing", ring.label(r), ring.label(x)),
                });
            }
        }
        if sidedness.right() {
            if let Some((x, r)) = ideal.right_violation(ring) {
                return Err(Error::NotClosed {
                    op: "right multiplication",
                    detail: format!("{} * {} is missing", ring.label(x), ring.label(r)),
                });
            }
        }
        Ok(ideal)
    }

    pub fn zero(ring: &FiniteRing) -> Ideal {
        Ideal::from_closed(ring, Subgroup::trivial(ring), Sidedness::TwoSided)
    }

    pub fn whole(ring: &FiniteRing) -> Ideal {
        Ideal::from_closed(ring, Subgroup::generated(ring, ring.add_gens().iter().copied()), Sidedness::TwoSided)
    }

    pub fn ring_id(&self) -> u64 {
        self.ring_id
    }

    pub fn sidedness(&self) -> Sidedness {
        self.sidedness
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.sub
    }

    pub fn elements(&self) -> &ElemSet {
        self.sub.elements()
    }

    /// Additive generators.
    pub fn gens(&self) -> &[Elem] {
        self.sub.gens()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.sub.contains(x)
    }

    pub fn len(&self) -> usize {
        self.sub.len()
    }

    pub fn is_zero(&self) -> bool {
        self.sub.is_trivial()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_whole(&self, ring: &FiniteRing) -> bool {
        self.sub.len() == ring.order()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.sub.is_subset(&other.sub)
    }

    fn left_violation(&self, ring: &FiniteRing) -> Option<(Elem, Elem)> {
        // r·x is biadditive, so generators on both sides suffice
        for &r in ring.add_gens() {
            for &x in self.sub.gens() {
                if !self.sub.contains(ring.mul(r, x)) {
                    return Some((r, x));
                }
            }
        }
        None
    }

    fn right_violation(&self, ring: &FiniteRing) -> Option<(Elem, Elem)> {
        for &x in self.sub.gens() {
            for &r in ring.add_gens() {
                if !self.sub.contains(ring.mul(x, r)) {
                    return Some((x, r));
                }
            }
        }
        None
    }

    pub fn is_left_closed(&self, ring: &FiniteRing) -> bool {
        self.left_violation(ring).is_none()
    }

    pub fn is_right_closed(&self, ring: &FiniteRing) -> bool {
        self.right_violation(ring).is_none()
    }

    pub fn sorted_members(&self) -> Vec<Elem> {
        self.sub.sorted_members()
    }
}

/// Smallest ideal of the given sidedness containing `gens`, by worklist
/// closure. Non-unital rings are covered because each generator itself is
/// added before its multiples.
pub fn generate(ring: &FiniteRing, gens: impl IntoIterator<Item = Elem>, sidedness: Sidedness) -> Ideal {
    let mut sub = Subgroup::trivial(ring);
    let mut queue: Vec<Elem> = gens.into_iter().collect();
    while let Some(x) = queue.pop() {
        if !sub.extend(ring, x) {
            continue;
        }
        for &g in ring.add_gens() {
            if sidedness.left() {
                queue.push(ring.mul(g, x));
            }
            if sidedness.right() {
                queue.push(ring.mul(x, g));
            }
        }
    }
    Ideal::from_closed(ring, sub, sidedness)
}

fn same_ring(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<()> {
    if i.ring_id != ring.id() || j.ring_id != ring.id() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

fn common_sidedness(i: &Ideal, j: &Ideal) -> Result<Sidedness> {
    if i.sidedness != j.sidedness {
        return Err(Error::InvalidArgument(format!(
            "cannot combine a {:?} ideal with a {:?} ideal",
            i.sidedness, j.sidedness
        )));
    }
    Ok(i.sidedness)
}

pub fn sum(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_ring(ring, i, j)?;
    let s = common_sidedness(i, j)?;
    Ok(Ideal::from_closed(ring, i.sub.join(ring, &j.sub), s))
}

pub fn intersect(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_ring(ring, i, j)?;
    let s = common_sidedness(i, j)?;
    Ok(Ideal::from_closed(ring, i.sub.meet(ring, &j.sub), s))
}

/// Additive span of `{ab : a ∈ A, b ∈ B}` for subgroups `A`, `B`.
pub fn subgroup_product(ring: &FiniteRing, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let prods: Vec<Elem> = a.gens().iter().flat_map(|&x| b.gens().iter().map(move |&y| ring.mul(x, y))).collect();
    Subgroup::generated(ring, prods)
}

/// `IJ`, closed again under the common sidedness (or left as a subgroup
/// when the tags differ).
pub fn product(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_ring(ring, i, j)?;
    let s = if i.sidedness == j.sidedness { i.sidedness } else { Sidedness::Subgroup };
    let p = subgroup_product(ring, &i.sub, &j.sub);
    if s == Sidedness::TwoSided || s == Sidedness::Subgroup {
        // IJ of two-sided ideals is already two-sided
        return Ok(Ideal::from_closed(ring, p, s));
    }
    Ok(generate(ring, p.gens().iter().copied(), s))
}

/// Additive closure of all pairwise products of two arbitrary subsets.
pub fn subset_product(ring: &FiniteRing, a: &ElemSet, b: &ElemSet) -> Subgroup {
    let bs = b.to_vec();
    let mut s = Subgroup::trivial(ring);
    for x in a.iter() {
        for &y in &bs {
            s.extend(ring, ring.mul(x, y));
        }
    }
    s
}

/// Whether `I = ⊕ (I ∩ R_g)`. Only additive generators are inspected, since
/// taking a component is additive.
pub fn is_graded(gr: &GradedRing, i: &Ideal) -> CheckResult {
    graded_check(gr, i.gens().iter().copied(), |x| i.contains(x))
}

/// Gradedness of an arbitrary element set; every member is inspected.
pub fn is_graded_set(gr: &GradedRing, set: &ElemSet) -> CheckResult {
    graded_check(gr, set.iter(), |x| set.contains(x))
}

fn graded_check(gr: &GradedRing, xs: impl Iterator<Item = Elem>, contains: impl Fn(Elem) -> bool) -> CheckResult {
    let r = gr.ring();
    for x in xs {
        for g in gr.group().elements() {
            let xg = gr.component_of(x, g);
            if !contains(xg) {
                let cert = Certificate::new().element("x", r, x).degree("g", gr.group(), g).element("x_g", r, xg);
                return CheckResult::fail(
                    cert,
                    format!(
                        "{} lies in the set but its degree-{} component {} does not",
                        r.label(x),
                        gr.group().label(g),
                        r.label(xg)
                    ),
                );
            }
        }
    }
    CheckResult::pass("every component of every member lies in the set")
}

/// Turns a failed gradedness check into the matching error.
pub(crate) fn not_graded_error(res: &CheckResult) -> Error {
    let label = |role: &str| res.certificate.get(role).map(|w| w.labels[0].clone()).unwrap_or_default();
    Error::NotGraded { element: label("x"), degree: label("g"), component: label("x_g") }
}

/// `(P :_{R_g} Y) = {x ∈ R_g : xY ⊆ P}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColonSet {
    pub degree: GroupElem,
    pub elements: ElemSet,
}

pub fn colon(gr: &GradedRing, p: &ElemSet, y: &ElemSet, g: GroupElem) -> Result<ColonSet> {
    let r = gr.ring();
    let rg = gr.component(g);
    if let Some(bad) = y.iter().find(|&x| !rg.contains(x)) {
        return Err(Error::InvalidArgument(format!(
            "{} is not in the component of degree {}",
            r.label(bad),
            gr.group().label(g)
        )));
    }
    let ys = y.to_vec();
    let elements = ElemSet::from_elems(
        r.order(),
        rg.members().iter().copied().filter(|&x| ys.iter().all(|&b| p.contains(r.mul(x, b)))),
    );
    Ok(ColonSet { degree: g, elements })
}

/// `(0 :_{R_g} Y)`.
pub fn annihilator(gr: &GradedRing, y: &ElemSet, g: GroupElem) -> Result<ColonSet> {
    colon(gr, &ElemSet::from_elems(gr.ring().order(), [gr.ring().zero()]), y, g)
}

/// Smallest `R_e`-submodule of `R_g` containing `x ∈ R_g`.
fn cyclic_re_submodule(gr: &GradedRing, x: Elem) -> Subgroup {
    let r = gr.ring();
    let re = gr.component(gr.identity());
    let mut s = Subgroup::trivial(r);
    let mut queue = vec![x];
    while let Some(y) = queue.pop() {
        if s.extend(r, y) {
            queue.extend(re.gens().iter().map(|&a| r.mul(a, y)));
        }
    }
    s
}

/// All `R_e`-submodules of `R_g` (under left multiplication).
pub fn re_submodules(gr: &GradedRing, g: GroupElem, caps: &Caps) -> Result<Vec<Subgroup>> {
    let rg = gr.component(g);
    Caps::require("submodule", rg.len(), caps.submodule)?;
    let mut seen = HashSet::new();
    let mut atoms = Vec::new();
    for &x in rg.members() {
        let s = cyclic_re_submodule(gr, x);
        if seen.insert(s.elements().clone()) {
            atoms.push(s);
        }
    }
    Ok(join_closure(gr.ring(), Subgroup::trivial(gr.ring()), &atoms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic, matrix, prime_field, product as ring_product, zero_mult};
    use crate::group::FiniteGroup;

    fn m2f2() -> FiniteRing {
        matrix(&prime_field(2).unwrap(), 2).unwrap()
    }

    #[test]
    fn two_sided_generation_in_simple_ring() {
        let r = m2f2();
        let i = generate(&r, [r.elem("(1 1;1 1)").unwrap()], Sidedness::TwoSided);
        assert!(i.is_whole(&r));
    }

    #[test]
    fn left_ideal_not_graded() {
        let r = m2f2();
        let x = r.elem("(1 1;1 1)").unwrap();
        let i = generate(&r, [x], Sidedness::Left);
        assert_eq!(i.len(), 4);
        for m in i.sorted_members() {
            let rows = crate::construct::parse_matrix_label(r.label(m)).unwrap();
            assert_eq!(rows[0][0], rows[0][1]);
            assert_eq!(rows[1][0], rows[1][1]);
        }
        let gr = GradedRing::by_entry_degrees(r.clone(), FiniteGroup::cyclic(4).unwrap(), &[0, 2, 2, 0]).unwrap();
        let res = is_graded(&gr, &i);
        assert!(res.is_fail());
        // replay the witness
        let w = res.certificate.get("x").unwrap().elem();
        let g = res.certificate.get("g").unwrap().degree();
        assert!(i.contains(w));
        assert!(!i.contains(gr.component_of(w, g)));
    }

    #[test]
    fn sided_closures_of_zero_and_whole_are_graded() {
        let r = m2f2();
        let gr = GradedRing::by_entry_degrees(r.clone(), FiniteGroup::cyclic(4).unwrap(), &[0, 2, 2, 0]).unwrap();
        assert!(is_graded(&gr, &Ideal::zero(&r)).is_pass());
        assert!(is_graded(&gr, &Ideal::whole(&r)).is_pass());
        for x in gr.homogeneous_nonzero() {
            for s in [Sidedness::Left, Sidedness::Right, Sidedness::TwoSided] {
                assert!(is_graded(&gr, &generate(&r, [x], s)).is_pass());
            }
        }
    }

    #[test]
    fn sum_intersection_product() {
        let z12 = cyclic(12).unwrap();
        let a = generate(&z12, [z12.elem("4").unwrap()], Sidedness::TwoSided);
        let b = generate(&z12, [z12.elem("6").unwrap()], Sidedness::TwoSided);
        assert_eq!(sum(&z12, &a, &b).unwrap().len(), 6);
        assert_eq!(intersect(&z12, &a, &b).unwrap().len(), 1);
        assert_eq!(product(&z12, &a, &b).unwrap().len(), 1);
        let zero = Ideal::zero(&z12);
        assert_eq!(sum(&z12, &a, &zero).unwrap(), a);
        assert_eq!(intersect(&z12, &a, &Ideal::whole(&z12)).unwrap(), a);
        assert!(product(&z12, &a, &zero).unwrap().is_zero());
        let left = generate(&z12, [z12.elem("4").unwrap()], Sidedness::Left);
        assert!(sum(&z12, &a, &left).is_err());
        let other = cyclic(12).unwrap();
        assert_eq!(sum(&other, &a, &b).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn from_set_validates() {
        let z4 = cyclic(4).unwrap();
        let ok = ElemSet::from_elems(4, [z4.elem("0").unwrap(), z4.elem("2").unwrap()]);
        assert!(Ideal::from_set(&z4, &ok, Sidedness::TwoSided).is_ok());
        let bad = ElemSet::from_elems(4, [z4.elem("0").unwrap(), z4.elem("1").unwrap()]);
        assert!(Ideal::from_set(&z4, &bad, Sidedness::Subgroup).is_err());
        let r = m2f2();
        let row =
            ElemSet::from_elems(16, ["(0 0;0 0)", "(1 0;0 0)", "(0 1;0 0)", "(1 1;0 0)"].map(|l| r.elem(l).unwrap()));
        assert!(Ideal::from_set(&r, &row, Sidedness::Right).is_ok());
        assert!(matches!(Ideal::from_set(&r, &row, Sidedness::Left), Err(Error::NotClosed { .. })));
    }

    #[test]
    fn subset_products() {
        let f2 = prime_field(2).unwrap();
        let s = zero_mult(2).unwrap();
        let r = ring_product(&[&f2, &s]).unwrap();
        let all = r.all();
        let zero = ElemSet::from_elems(4, [r.zero()]);
        assert!(subset_product(&r, &all, &zero).is_trivial());
        assert_eq!(subset_product(&r, &all, &all).len(), 2);
    }

    #[test]
    fn colon_sets() {
        let z4 = GradedRing::trivial(cyclic(4).unwrap(), FiniteGroup::cyclic(2).unwrap());
        let r = z4.ring();
        let p = ElemSet::from_elems(4, [r.zero()]);
        let y = ElemSet::from_elems(4, [r.elem("2").unwrap()]);
        let ann = annihilator(&z4, &y, 0).unwrap();
        assert_eq!(ann.elements.to_vec(), vec![r.elem("0").unwrap(), r.elem("2").unwrap()]);
        let empty = ElemSet::empty(4);
        assert_eq!(colon(&z4, &p, &empty, 0).unwrap().elements.len(), 4);
        assert!(colon(&z4, &p, &y, 1).is_err());
        assert!(subgroup_violation(r, &ann.elements).is_none());
    }

    #[test]
    fn re_submodules_of_antidiagonal() {
        let r = m2f2();
        let gr = GradedRing::by_entry_degrees(r, FiniteGroup::cyclic(4).unwrap(), &[0, 2, 2, 0]).unwrap();
        // of the 5 additive subgroups of R_2, (0 1;1 0) spans one that is not
        // closed under the diagonal action
        let subs = re_submodules(&gr, 2, &Caps::default()).unwrap();
        assert_eq!(subs.len(), 4);
        let anti = gr.ring().elem("(0 1;1 0)").unwrap();
        assert!(subs.iter().all(|s| !(s.len() == 2 && s.contains(anti))));
        assert_eq!(re_submodules(&gr, 1, &Caps::default()).unwrap().len(), 1);
        let tight = Caps { submodule: 2, ..Caps::default() };
        assert!(re_submodules(&gr, 2, &tight).is_err());
    }
}
