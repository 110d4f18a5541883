//! Group gradings on finite rings and modules.

use std::sync::OnceLock;

use crate::construct;
use crate::elemset::ElemSet;
use crate::error::{Error, GradingError, Result};
use crate::group::{FiniteGroup, GroupElem};
use crate::ideal::{self, Ideal};
use crate::lattice::Lattice;
use crate::module::FiniteModule;
use crate::ring::{Additive, Elem, FiniteRing};
use crate::subgroup::{subgroup_violation, Subgroup};

/// The sum decomposition shared by graded rings and graded modules:
/// `decomp[x * |G| + g]` is the degree-`g` component of `x`.
#[derive(Clone, Debug)]
struct Decomposition {
    components: Vec<Subgroup>,
    decomp: Vec<u16>,
    degree: Vec<Option<GroupElem>>,
    homogeneous: ElemSet,
}

fn decompose<A: Additive + ?Sized>(a: &A, group: &FiniteGroup, sets: &[ElemSet]) -> Result<Decomposition> {
    let n = group.order();
    if sets.len() != n {
        return Err(GradingError::NotDirectSum {
            detail: format!("{} components given for a group of order {n}", sets.len()),
        }
        .into());
    }
    let mut components = Vec::with_capacity(n);
    for (g, set) in sets.iter().enumerate() {
        if set.universe() != a.order() {
            return Err(GradingError::NotSubgroup {
                degree: group.label(g).into(),
                detail: "element set belongs to a different structure".into(),
            }
            .into());
        }
        if let Some(v) = subgroup_violation(a, set) {
            let detail = match v {
                (Some(x), Some(y)) => format!("{} + {} = {} is missing", a.label(x), a.label(y), a.label(a.add(x, y))),
                _ => "zero is missing".into(),
            };
            return Err(GradingError::NotSubgroup { degree: group.label(g).into(), detail }.into());
        }
        components.push(Subgroup::generated(a, set.iter()));
    }
    for g in 0..n {
        for h in g + 1..n {
            let common = sets[g].intersection(&sets[h]);
            let stray = common.iter().find(|&x| x != a.zero());
            if let Some(x) = stray {
                return Err(GradingError::NotDirectSum {
                    detail: format!(
                        "{} lies in the components of degrees {} and {}",
                        a.label(x),
                        group.label(g),
                        group.label(h)
                    ),
                }
                .into());
            }
        }
    }
    let total: u128 = components.iter().map(|c| c.len() as u128).product();
    if total != a.order() as u128 {
        return Err(GradingError::NotDirectSum {
            detail: format!("component orders multiply to {total}, the order is {}", a.order()),
        }
        .into());
    }
    // every tuple of components has a distinct sum iff the sum map is a bijection
    const UNSET: u16 = u16::MAX;
    let mut decomp = vec![UNSET; a.order() * n];
    let mut partial: Vec<(Elem, Vec<Elem>)> = vec![(a.zero(), vec![a.zero(); n])];
    for (g, c) in components.iter().enumerate() {
        let mut next = Vec::with_capacity(partial.len() * c.len());
        for (s, parts) in &partial {
            for &x in c.members() {
                let mut p = parts.clone();
                p[g] = x;
                next.push((a.add(*s, x), p));
            }
        }
        partial = next;
    }
    for (s, parts) in partial {
        let row = &mut decomp[s.index() * n..(s.index() + 1) * n];
        if row[0] != UNSET {
            return Err(GradingError::NotDirectSum { detail: format!("{} has two decompositions", a.label(s)) }.into());
        }
        for (g, x) in parts.iter().enumerate() {
            row[g] = x.index() as u16;
        }
    }
    let mut degree = vec![None; a.order()];
    let mut homogeneous = ElemSet::empty(a.order());
    for (g, c) in components.iter().enumerate() {
        for &x in c.members() {
            homogeneous.insert(x);
            if x != a.zero() {
                degree[x.index()] = Some(g);
            }
        }
    }
    Ok(Decomposition { components, decomp, degree, homogeneous })
}

impl Decomposition {
    fn component_of(&self, n: usize, x: Elem, g: GroupElem) -> Elem {
        Elem::from_index(self.decomp[x.index() * n + g] as usize)
    }
}

/// A finite ring with a validated grading `R = ⊕ R_g`.
#[derive(Debug)]
pub struct GradedRing {
    ring: FiniteRing,
    group: FiniteGroup,
    d: Decomposition,
    lattice: OnceLock<Lattice>,
}

impl Clone for GradedRing {
    fn clone(&self) -> Self {
        GradedRing { ring: self.ring.clone(), group: self.group.clone(), d: self.d.clone(), lattice: OnceLock::new() }
    }
}

impl GradedRing {
    /// Validates `components[g] = R_g` for every group element `g`.
    pub fn new(ring: FiniteRing, group: FiniteGroup, components: Vec<ElemSet>) -> Result<GradedRing> {
        let d = decompose(&ring, &group, &components)?;
        let gr = GradedRing { ring, group, d, lattice: OnceLock::new() };
        gr.check_multiplicative()?;
        if let Some(u) = gr.ring.unity() {
            if gr.component_of(u, gr.group.identity()) != u {
                return Err(GradingError::UnityOutsideIdentity { unity: gr.ring.label(u).into() }.into());
            }
        }
        Ok(gr)
    }

    fn check_multiplicative(&self) -> Result<()> {
        // products are biadditive, so additive generators of each component suffice
        for g in self.group.elements() {
            for h in self.group.elements() {
                let gh = self.group.mul(g, h);
                for &x in self.d.components[g].gens() {
                    for &y in self.d.components[h].gens() {
                        let p = self.ring.mul(x, y);
                        if !self.d.components[gh].contains(p) {
                            return Err(GradingError::NotMultiplicative {
                                x: self.ring.label(x).into(),
                                g: self.group.label(g).into(),
                                y: self.ring.label(y).into(),
                                h: self.group.label(h).into(),
                                product: self.ring.label(p).into(),
                                gh: self.group.label(gh).into(),
                            }
                            .into());
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Components given as element lists per degree label.
    pub fn from_component_lists(
        ring: FiniteRing,
        group: FiniteGroup,
        lists: &[(GroupElem, Vec<Elem>)],
    ) -> Result<Self> {
        let mut sets = vec![ElemSet::from_elems(ring.order(), [ring.zero()]); group.order()];
        for (g, xs) in lists {
            if *g >= group.order() {
                return Err(GradingError::UnknownDegree(g.to_string()).into());
            }
            for &x in xs {
                if x.index() >= ring.order() {
                    return Err(Error::UnknownElement(x.to_string()));
                }
                sets[*g].insert(x);
            }
        }
        Self::new(ring, group, sets)
    }

    /// `R_e = R` and every other component zero.
    pub fn trivial(ring: FiniteRing, group: FiniteGroup) -> GradedRing {
        let mut sets = vec![ElemSet::from_elems(ring.order(), [ring.zero()]); group.order()];
        sets[group.identity()] = ring.all();
        Self::new(ring, group, sets).expect("trivial grading is valid")
    }

    /// Grades a ring of `k×k` matrices (or a subring of one, keeping matrix
    /// labels) by giving each entry position a degree. `R_g` consists of
    /// the matrices supported on positions of degree `g`.
    pub fn by_entry_degrees(ring: FiniteRing, group: FiniteGroup, degrees: &[GroupElem]) -> Result<GradedRing> {
        let k = (degrees.len() as f64).sqrt() as usize;
        if k * k != degrees.len() || k == 0 {
            return Err(Error::InvalidArgument("entry degrees must form a square".into()));
        }
        if let Some(&g) = degrees.iter().find(|&&g| g >= group.order()) {
            return Err(GradingError::UnknownDegree(g.to_string()).into());
        }
        let mut sets = vec![ElemSet::empty(ring.order()); group.order()];
        for x in ring.elements() {
            let rows = construct::parse_matrix_label(ring.label(x))
                .filter(|r| r.len() == k && r.iter().all(|row| row.len() == k))
                .ok_or_else(|| Error::InvalidArgument(format!("{} is not a {k}x{k} matrix label", ring.label(x))))?;
            let support: Vec<GroupElem> =
                rows.iter().flatten().enumerate().filter(|(_, e)| e.as_str() != "0").map(|(i, _)| degrees[i]).collect();
            match support.first() {
                None => sets.iter_mut().for_each(|s| {
                    s.insert(x);
                }),
                Some(&g) if support.iter().all(|&h| h == g) => {
                    sets[g].insert(x);
                }
                _ => {}
            }
        }
        Self::new(ring, group, sets)
    }

    /// `R_g = T_g × L_g × ...` on the product ring.
    pub fn product(factors: &[&GradedRing]) -> Result<GradedRing> {
        let first = factors.first().ok_or_else(|| Error::InvalidArgument("empty product".into()))?;
        if factors.iter().any(|f| f.group != first.group) {
            return Err(Error::GroupMismatch);
        }
        let rings: Vec<&FiniteRing> = factors.iter().map(|f| &f.ring).collect();
        let ring = construct::product(&rings)?;
        if factors.len() == 1 {
            return Self::new(
                ring,
                first.group.clone(),
                first.d.components.iter().map(|c| c.elements().clone()).collect(),
            );
        }
        let n = ring.order();
        let sets = first
            .group
            .elements()
            .map(|g| {
                let mut idx = vec![0usize];
                for f in factors {
                    let o = f.ring.order();
                    idx = idx
                        .iter()
                        .flat_map(|&i| f.d.components[g].members().iter().map(move |x| i * o + x.index()))
                        .collect();
                }
                ElemSet::from_elems(n, idx.into_iter().map(Elem::from_index))
            })
            .collect();
        Self::new(ring, first.group.clone(), sets)
    }

    /// `R/I` graded by `(R_g + I)/I`, with the projection.
    pub fn quotient(&self, i: &Ideal) -> Result<(GradedRing, Vec<Elem>)> {
        let graded = ideal::is_graded(self, i);
        if graded.is_fail() {
            return Err(ideal::not_graded_error(&graded));
        }
        let (q, proj) = construct::quotient(&self.ring, i)?;
        let sets = self
            .d
            .components
            .iter()
            .map(|c| ElemSet::from_elems(q.order(), c.members().iter().map(|x| proj[x.index()])))
            .collect();
        Ok((Self::new(q, self.group.clone(), sets)?, proj))
    }

    /// `R(+)M` graded by `X_g = R_g (+) M_g`; the group must be abelian.
    pub fn idealization(&self, m: &GradedModule) -> Result<GradedRing> {
        if let Some((a, b)) = self.group.noncommuting_pair() {
            return Err(Error::NonAbelian(format!(
                "{} and {} do not commute, and the idealization grading needs an abelian group",
                self.group.label(a),
                self.group.label(b)
            )));
        }
        self.check_module(m)?;
        let ring = construct::idealization(&self.ring, &m.module)?;
        Self::new(ring, self.group.clone(), self.pair_components(m))
    }

    /// `[R, M]` graded by `[R_g, M_g]`.
    pub fn bracket(&self, m: &GradedModule) -> Result<GradedRing> {
        self.check_module(m)?;
        let ring = construct::bracket(&self.ring, &m.module)?;
        Self::new(ring, self.group.clone(), self.pair_components(m))
    }

    fn check_module(&self, m: &GradedModule) -> Result<()> {
        if m.module.ring_id() != self.ring.id() {
            return Err(Error::RingMismatch);
        }
        if m.group != self.group {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    fn pair_components(&self, m: &GradedModule) -> Vec<ElemSet> {
        let mo = m.module.order();
        let n = self.ring.order() * mo;
        self.group
            .elements()
            .map(|g| {
                let rs = self.d.components[g].members();
                let ms = m.d.components[g].members();
                ElemSet::from_elems(
                    n,
                    rs.iter().flat_map(|r| ms.iter().map(move |x| Elem::from_index(r.index() * mo + x.index()))),
                )
            })
            .collect()
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn identity(&self) -> GroupElem {
        self.group.identity()
    }

    pub fn component(&self, g: GroupElem) -> &Subgroup {
        &self.d.components[g]
    }

    pub fn components(&self) -> &[Subgroup] {
        &self.d.components
    }

    /// The degree-`g` component `x_g` of `x`.
    pub fn component_of(&self, x: Elem, g: GroupElem) -> Elem {
        self.d.component_of(self.group.order(), x, g)
    }

    /// Degree of a nonzero homogeneous element.
    pub fn degree_of(&self, x: Elem) -> Option<GroupElem> {
        self.d.degree[x.index()]
    }

    pub fn is_homogeneous(&self, x: Elem) -> bool {
        self.d.homogeneous.contains(x)
    }

    /// `h(R)`, the union of the components.
    pub fn homogeneous(&self) -> &ElemSet {
        &self.d.homogeneous
    }

    /// `h(R) - {0}` in increasing order.
    pub fn homogeneous_nonzero(&self) -> Vec<Elem> {
        self.d.homogeneous.iter().filter(|&x| x != self.ring.zero()).collect()
    }

    /// Degrees whose component is nonzero.
    pub fn support(&self) -> Vec<GroupElem> {
        self.group.elements().filter(|&g| !self.d.components[g].is_trivial()).collect()
    }

    pub fn is_trivially_graded(&self) -> bool {
        self.d.components[self.identity()].len() == self.ring.order()
    }

    pub(crate) fn lattice_cell(&self) -> &OnceLock<Lattice> {
        &self.lattice
    }

    /// Short description of the component sizes, e.g. `0:4 1:1 2:4 3:1`.
    pub fn component_sizes(&self) -> Vec<(String, usize)> {
        self.group.elements().map(|g| (self.group.label(g).to_string(), self.d.components[g].len())).collect()
    }
}

/// A left module over a graded ring with a grading `M = ⊕ M_g`
/// satisfying `R_g M_h ⊆ M_{gh}`.
#[derive(Clone, Debug)]
pub struct GradedModule {
    module: FiniteModule,
    group: FiniteGroup,
    d: Decomposition,
}

impl GradedModule {
    pub fn new(gr: &GradedRing, module: FiniteModule, components: Vec<ElemSet>) -> Result<GradedModule> {
        if module.ring_id() != gr.ring.id() {
            return Err(Error::RingMismatch);
        }
        let d = decompose(&module, &gr.group, &components)?;
        for g in gr.group.elements() {
            for h in gr.group.elements() {
                let gh = gr.group.mul(g, h);
                for &r in gr.d.components[g].gens() {
                    for &x in d.components[h].gens() {
                        let p = module.act(r, x);
                        if !d.components[gh].contains(p) {
                            return Err(GradingError::NotMultiplicative {
                                x: gr.ring.label(r).into(),
                                g: gr.group.label(g).into(),
                                y: module.label(x).into(),
                                h: gr.group.label(h).into(),
                                product: module.label(p).into(),
                                gh: gr.group.label(gh).into(),
                            }
                            .into());
                        }
                    }
                }
            }
        }
        Ok(GradedModule { module, group: gr.group.clone(), d })
    }

    /// The whole module placed in degree `g`.
    pub fn concentrated(gr: &GradedRing, module: FiniteModule, g: GroupElem) -> Result<GradedModule> {
        if g >= gr.group.order() {
            return Err(GradingError::UnknownDegree(g.to_string()).into());
        }
        let mut sets = vec![ElemSet::from_elems(module.order(), [module.zero()]); gr.group.order()];
        sets[g] = ElemSet::full(module.order());
        Self::new(gr, module, sets)
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    pub fn component(&self, g: GroupElem) -> &Subgroup {
        &self.d.components[g]
    }

    pub fn component_of(&self, x: Elem, g: GroupElem) -> Elem {
        self.d.component_of(self.group.order(), x, g)
    }

    /// Whether a submodule `N` satisfies `N = ⊕ (N ∩ M_g)`.
    pub fn is_graded_submodule(&self, n: &Subgroup) -> bool {
        n.gens().iter().all(|&x| self.group.elements().all(|g| n.contains(self.component_of(x, g))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic, matrix, prime_field, product, zero_mult};
    use crate::ideal::{generate, Sidedness};

    fn m2f2_z4() -> GradedRing {
        let m = matrix(&prime_field(2).unwrap(), 2).unwrap();
        GradedRing::by_entry_degrees(m, FiniteGroup::cyclic(4).unwrap(), &[0, 2, 2, 0]).unwrap()
    }

    #[test]
    fn matrix_checkerboard_grading() {
        let gr = m2f2_z4();
        let sizes: Vec<usize> = gr.component_sizes().into_iter().map(|(_, s)| s).collect();
        assert_eq!(sizes, vec![4, 1, 4, 1]);
        assert_eq!(gr.homogeneous().len(), 7);
        let r = gr.ring();
        let x = r.elem("(1 1;1 1)").unwrap();
        assert_eq!(gr.component_of(x, 0), r.elem("(1 0;0 1)").unwrap());
        assert_eq!(gr.component_of(x, 2), r.elem("(0 1;1 0)").unwrap());
        assert_eq!(gr.component_of(x, 1), r.zero());
        assert_eq!(gr.component_of(x, 3), r.zero());
    }

    #[test]
    fn overlapping_components_rejected() {
        let m = matrix(&prime_field(2).unwrap(), 2).unwrap();
        let anti =
            ElemSet::from_elems(16, ["(0 0;0 0)", "(0 1;0 0)", "(0 0;1 0)", "(0 1;1 0)"].map(|l| m.elem(l).unwrap()));
        let zero = ElemSet::from_elems(16, [m.zero()]);
        let err = GradedRing::new(m.clone(), FiniteGroup::cyclic(4).unwrap(), vec![m.all(), zero.clone(), anti, zero]);
        assert!(matches!(err, Err(Error::Grading(e)) if matches!(*e, GradingError::NotDirectSum { .. })));
    }

    #[test]
    fn non_multiplicative_rejected() {
        // degree 1 entries in both off-diagonal spots of M2(F2) under Z4
        let m = matrix(&prime_field(2).unwrap(), 2).unwrap();
        let err = GradedRing::by_entry_degrees(m, FiniteGroup::cyclic(4).unwrap(), &[0, 1, 1, 0]);
        assert!(matches!(err, Err(Error::Grading(e)) if matches!(*e, GradingError::NotMultiplicative { .. })));
    }

    #[test]
    fn unity_must_lie_in_identity_component() {
        let f2 = prime_field(2).unwrap();
        let zero = ElemSet::from_elems(2, [f2.zero()]);
        let err = GradedRing::new(f2.clone(), FiniteGroup::cyclic(2).unwrap(), vec![zero, f2.all()]);
        assert!(err.is_err());
    }

    #[test]
    fn k_s_s_grading() {
        let f2 = prime_field(2).unwrap();
        let s = zero_mult(2).unwrap();
        let r = product(&[&f2, &s, &s]).unwrap();
        let r0 = ElemSet::from_elems(8, ["(0,0,0)", "(1,0,0)"].map(|l| r.elem(l).unwrap()));
        let r1 = ElemSet::from_elems(8, r.elements().filter(|&x| r.label(x).starts_with("(0,")));
        let gr = GradedRing::new(r, FiniteGroup::cyclic(2).unwrap(), vec![r0, r1]).unwrap();
        assert_eq!(gr.component(1).len(), 4);
    }

    #[test]
    fn trivial_gradings() {
        let f2 = prime_field(2).unwrap();
        let k3 = product(&[&f2, &f2, &f2]).unwrap();
        let gr = GradedRing::trivial(k3, FiniteGroup::cyclic(2).unwrap());
        assert_eq!(gr.component(0).len(), 8);
        assert!(gr.is_trivially_graded());
        let z = GradedRing::trivial(cyclic(1).unwrap(), FiniteGroup::cyclic(2).unwrap());
        assert_eq!(z.homogeneous().len(), 1);
    }

    #[test]
    fn graded_products() {
        let gr = m2f2_z4();
        let p = GradedRing::product(&[&gr, &gr]).unwrap();
        assert_eq!(p.ring().order(), 256);
        for g in 0..4 {
            assert_eq!(p.component(g).len(), gr.component(g).len().pow(2));
        }
        let f2 = GradedRing::trivial(prime_field(2).unwrap(), FiniteGroup::cyclic(2).unwrap());
        assert_eq!(GradedRing::product(&[&gr, &f2]).unwrap_err(), Error::GroupMismatch);
    }

    #[test]
    fn graded_quotients() {
        let z4 = GradedRing::trivial(cyclic(4).unwrap(), FiniteGroup::cyclic(2).unwrap());
        let i = generate(z4.ring(), [z4.ring().elem("2").unwrap()], Sidedness::TwoSided);
        let (q, proj) = z4.quotient(&i).unwrap();
        assert_eq!(q.ring().order(), 2);
        for x in z4.ring().elements() {
            for g in 0..2 {
                assert_eq!(proj[z4.component_of(x, g).index()], q.component_of(proj[x.index()], g));
            }
        }
        let gr = m2f2_z4();
        let ring = gr.ring();
        // the ideal generated by the non-homogeneous (1 1;1 1) is all of M2(F2), so
        // use the additive span of a non-homogeneous element in a zero-product ring
        let s = GradedRing::by_entry_degrees(
            matrix(&zero_mult(2).unwrap(), 2).unwrap(),
            FiniteGroup::cyclic(4).unwrap(),
            &[0, 2, 2, 0],
        )
        .unwrap();
        let bad = generate(s.ring(), [s.ring().elem("(1 1;1 1)").unwrap()], Sidedness::TwoSided);
        assert!(matches!(s.quotient(&bad), Err(Error::NotGraded { .. })));
        let zero = generate(ring, [], Sidedness::TwoSided);
        assert_eq!(gr.quotient(&zero).unwrap().0.component_sizes(), gr.component_sizes());
    }

    #[test]
    fn graded_idealization_and_bracket() {
        let z2g = FiniteGroup::cyclic(2).unwrap();
        let z4 = GradedRing::trivial(cyclic(4).unwrap(), z2g.clone());
        let two = generate(z4.ring(), [z4.ring().elem("2").unwrap()], Sidedness::TwoSided);
        let m = FiniteModule::quotient_of_regular(z4.ring(), &two).unwrap();
        let gm = GradedModule::concentrated(&z4, m.clone(), 0).unwrap();
        let x = z4.idealization(&gm).unwrap();
        assert_eq!(x.ring().order(), 8);
        let gm1 = GradedModule::concentrated(&z4, m.clone(), 1).unwrap();
        let x1 = z4.idealization(&gm1).unwrap();
        assert_eq!(x1.component(1).len(), 2);
        let b = z4.bracket(&gm).unwrap();
        assert_eq!(b.ring().order(), 8);

        let s3 = FiniteGroup::symmetric(3).unwrap();
        let r = GradedRing::trivial(cyclic(4).unwrap(), s3);
        let m = FiniteModule::quotient_of_regular(
            r.ring(),
            &generate(r.ring(), [r.ring().elem("2").unwrap()], Sidedness::TwoSided),
        )
        .unwrap();
        let gm = GradedModule::concentrated(&r, m, 0).unwrap();
        assert!(matches!(r.idealization(&gm), Err(Error::NonAbelian(_))));
    }

    #[test]
    fn bracket_with_zero_module_matches_base() {
        let gr = m2f2_z4();
        let zero = FiniteModule::zero_module(gr.ring()).unwrap();
        let gm = GradedModule::concentrated(&gr, zero, 0).unwrap();
        let b = gr.bracket(&gm).unwrap();
        assert_eq!(b.ring().mul_table(), gr.ring().mul_table());
        assert_eq!(b.component_sizes(), gr.component_sizes());
    }
}
