//! Additive subgroups, grown one generator at a time.

use std::hash::{Hash, Hasher};

use crate::elemset::ElemSet;
use crate::ring::{Additive, Elem};

/// An additive subgroup together with the generators that built it.
///
/// Each recorded generator at least doubled the subgroup when it was added,
/// so there are at most log2(order) of them. Equality ignores generators.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: ElemSet,
    members: Vec<Elem>,
    gens: Vec<Elem>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state)
    }
}

impl Subgroup {
    pub fn trivial<A: Additive + ?Sized>(a: &A) -> Subgroup {
        let mut elements = ElemSet::empty(a.order());
        elements.insert(a.zero());
        Subgroup { elements, members: vec![a.zero()], gens: Vec::new() }
    }

    pub fn generated<A: Additive + ?Sized>(a: &A, xs: impl IntoIterator<Item = Elem>) -> Subgroup {
        let mut s = Self::trivial(a);
        for x in xs {
            s.extend(a, x);
        }
        s
    }

    /// Replaces `self` by `self + <x>`. Returns `true` if `x` was new.
    pub fn extend<A: Additive + ?Sized>(&mut self, a: &A, x: Elem) -> bool {
        if self.elements.contains(x) {
            return false;
        }
        let base_len = self.members.len();
        let mut rep = x;
        // cosets H + kx for k = 1, 2, ... until kx falls back into H
        while !self.elements.contains(rep) {
            for i in 0..base_len {
                let s = a.add(self.members[i], rep);
                self.elements.insert(s);
                self.members.push(s);
            }
            rep = a.add(rep, x);
        }
        self.gens.push(x);
        true
    }

    /// `self + other`.
    pub fn join<A: Additive + ?Sized>(&self, a: &A, other: &Subgroup) -> Subgroup {
        let mut s = self.clone();
        for &g in &other.gens {
            s.extend(a, g);
        }
        s
    }

    pub fn meet<A: Additive + ?Sized>(&self, a: &A, other: &Subgroup) -> Subgroup {
        let inter = self.elements.intersection(&other.elements);
        Subgroup::generated(a, inter.iter())
    }

    pub fn elements(&self) -> &ElemSet {
        &self.elements
    }

    /// Members in insertion order.
    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn gens(&self) -> &[Elem] {
        &self.gens
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Always false: a subgroup holds zero.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub fn sorted_members(&self) -> Vec<Elem> {
        self.elements.to_vec()
    }
}

/// Whether a set contains zero and is closed under addition (hence a
/// subgroup, the group being finite). On failure returns a witness pair.
pub fn subgroup_violation<A: Additive + ?Sized>(a: &A, set: &ElemSet) -> Option<(Option<Elem>, Option<Elem>)> {
    if !set.contains(a.zero()) {
        return Some((None, None));
    }
    let members = set.to_vec();
    for &x in &members {
        for &y in &members {
            if !set.contains(a.add(x, y)) {
                return Some((Some(x), Some(y)));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn extend_builds_cyclic_subgroups() {
        let z12 = construct::cyclic(12).unwrap();
        let mut s = Subgroup::trivial(&z12);
        assert!(s.extend(&z12, Elem::from_index(8)));
        assert_eq!(s.len(), 3);
        assert!(s.extend(&z12, Elem::from_index(6)));
        assert_eq!(s.len(), 6);
        assert!(!s.extend(&z12, Elem::from_index(4)));
        assert_eq!(s.gens().len(), 2);
    }

    #[test]
    fn join_and_meet() {
        let z12 = construct::cyclic(12).unwrap();
        let a = Subgroup::generated(&z12, [Elem::from_index(4)]);
        let b = Subgroup::generated(&z12, [Elem::from_index(6)]);
        assert_eq!(a.join(&z12, &b).len(), 6);
        assert!(a.meet(&z12, &b).is_trivial());
    }

    #[test]
    fn detects_non_subgroup() {
        let z4 = construct::cyclic(4).unwrap();
        let s = ElemSet::from_elems(4, [Elem::from_index(0), Elem::from_index(1)]);
        assert!(subgroup_violation(&z4, &s).is_some());
        let t = ElemSet::from_elems(4, [Elem::from_index(0), Elem::from_index(2)]);
        assert!(subgroup_violation(&z4, &t).is_none());
    }
}
