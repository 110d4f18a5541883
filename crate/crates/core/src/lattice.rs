//! Ideal lattices, enumerated as join-closures of principal ideals.
//!
//! Every ideal is the sum of the principal ideals of its elements, and every
//! graded ideal the sum of the principal ideals of the homogeneous components
//! of its elements. Closing the set of principal ideals under sums therefore
//! yields the whole lattice without filtering subgroups.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::check::Caps;
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::grading::GradedRing;
use crate::ideal::{generate, subgroup_product, Ideal, Sidedness};
use crate::module::join_closure;
use crate::ring::{Additive, Elem, FiniteRing};
use crate::subgroup::Subgroup;

#[derive(Debug)]
pub struct Lattice {
    sidedness: Sidedness,
    ideals: Vec<Ideal>,
    index: HashMap<ElemSet, usize>,
    principal: HashMap<Elem, usize>,
    products: OnceLock<Vec<OnceLock<u32>>>,
    pub(crate) cache: PredicateCache,
}

/// Per-lattice memo of predicate verdicts, indexed like the lattice.
#[derive(Debug, Default)]
pub(crate) struct PredicateCache {
    pub prime: OnceLock<Vec<bool>>,
    pub weakly_prime: OnceLock<Vec<bool>>,
    pub total_prime: OnceLock<Vec<bool>>,
    pub weakly_total_prime: OnceLock<Vec<bool>>,
    pub systems: OnceLock<crate::prime::SystemTable>,
}

impl Lattice {
    /// Closes the principal ideals of `gens` (and `{0}`) under sums. The
    /// result is sorted by size, then by content, so `{0}` comes first.
    pub fn build(ring: &FiniteRing, gens: impl IntoIterator<Item = Elem>, sidedness: Sidedness) -> Lattice {
        let mut atoms: Vec<Subgroup> = Vec::new();
        let mut atom_of: HashMap<ElemSet, Vec<Elem>> = HashMap::new();
        for x in gens {
            let p = generate(ring, [x], sidedness);
            let key = p.elements().clone();
            let entry = atom_of.entry(key).or_default();
            if entry.is_empty() {
                atoms.push(p.subgroup().clone());
            }
            entry.push(x);
        }
        let subs = join_closure(ring, Subgroup::trivial(ring), &atoms);
        let ideals: Vec<Ideal> = subs.into_iter().map(|s| Ideal::from_closed(ring, s, sidedness)).collect();
        let index: HashMap<ElemSet, usize> =
            ideals.iter().enumerate().map(|(i, id)| (id.elements().clone(), i)).collect();
        let mut principal = HashMap::new();
        for (set, xs) in atom_of {
            let i = index[&set];
            for x in xs {
                principal.insert(x, i);
            }
        }
        principal.insert(ring.zero(), 0);
        Lattice { sidedness, ideals, index, principal, products: OnceLock::new(), cache: PredicateCache::default() }
    }

    pub fn sidedness(&self) -> Sidedness {
        self.sidedness
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn get(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn index_of(&self, set: &ElemSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn position(&self, i: &Ideal) -> Option<usize> {
        self.index_of(i.elements())
    }

    /// Index of the largest member, which is the whole ring whenever the
    /// generators generate the ring.
    pub fn top(&self) -> usize {
        self.ideals.len() - 1
    }

    /// Index of the principal ideal of a generator (or of zero).
    pub fn principal(&self, x: Elem) -> Option<usize> {
        self.principal.get(&x).copied()
    }

    /// Indices of all members other than the top.
    pub fn proper(&self) -> std::ops::Range<usize> {
        0..self.top()
    }

    pub fn is_subset(&self, i: usize, j: usize) -> bool {
        self.ideals[i].is_subset(&self.ideals[j])
    }

    /// Index of `I_i I_j`. Only meaningful for two-sided lattices, where the
    /// product of members is again a member.
    pub fn product(&self, ring: &FiniteRing, i: usize, j: usize) -> usize {
        assert_eq!(self.sidedness, Sidedness::TwoSided, "products need a two-sided lattice");
        let n = self.ideals.len();
        let cells = self.products.get_or_init(|| (0..n * n).map(|_| OnceLock::new()).collect());
        *cells[i * n + j].get_or_init(|| {
            let p = subgroup_product(ring, self.ideals[i].subgroup(), self.ideals[j].subgroup());
            self.index[p.elements()] as u32
        }) as usize
    }

    pub fn sum(&self, ring: &FiniteRing, i: usize, j: usize) -> usize {
        let s = self.ideals[i].subgroup().join(ring, self.ideals[j].subgroup());
        self.index[s.elements()]
    }

    pub fn intersect(&self, i: usize, j: usize) -> usize {
        self.index[&self.ideals[i].elements().intersection(self.ideals[j].elements())]
    }

    /// Maximal members among the proper ones.
    pub fn maximal_proper(&self) -> Vec<usize> {
        let proper: Vec<usize> = self.proper().collect();
        proper.iter().copied().filter(|&i| !proper.iter().any(|&j| j != i && self.is_subset(i, j))).collect()
    }

    /// Pairs `(i, j)` with `I_i ⊂ I_j` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.is_subset(i, j) || self.ideals[i].len() == self.ideals[j].len() {
                    continue;
                }
                let between = (0..n).any(|k| {
                    k != i
                        && k != j
                        && self.is_subset(i, k)
                        && self.is_subset(k, j)
                        && self.ideals[k].len() != self.ideals[i].len()
                });
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// The lattice of two-sided graded ideals, cached on the graded ring.
pub fn all_graded_ideals<'a>(gr: &'a GradedRing, caps: &Caps) -> Result<&'a Lattice> {
    Caps::require("lattice", gr.ring().order(), caps.lattice)?;
    Ok(gr.lattice_cell().get_or_init(|| Lattice::build(gr.ring(), gr.homogeneous_nonzero(), Sidedness::TwoSided)))
}

/// All ideals of the given sidedness, ignoring any grading.
pub fn all_ideals(ring: &FiniteRing, sidedness: Sidedness, caps: &Caps) -> Result<Lattice> {
    Caps::require("lattice", ring.order(), caps.lattice)?;
    Ok(Lattice::build(ring, ring.elements(), sidedness))
}

pub fn maximal_graded_ideals(gr: &GradedRing, caps: &Caps) -> Result<Vec<Ideal>> {
    let lat = all_graded_ideals(gr, caps)?;
    Ok(lat.maximal_proper().into_iter().map(|i| lat.get(i).clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic, matrix, prime_field, product, zero_mult};
    use crate::group::FiniteGroup;
    use crate::ideal::is_graded;
    use crate::subgroup::subgroup_violation;

    /// Every additive subgroup, by brute force over subsets closed under +.
    fn all_subgroups(r: &FiniteRing) -> Vec<ElemSet> {
        let atoms: Vec<Subgroup> = r.elements().map(|x| Subgroup::generated(r, [x])).collect();
        join_closure(r, Subgroup::trivial(r), &atoms).into_iter().map(|s| s.elements().clone()).collect()
    }

    fn oracle(gr: &GradedRing) -> Vec<ElemSet> {
        let r = gr.ring();
        let mut out: Vec<ElemSet> = all_subgroups(r)
            .into_iter()
            .filter(|s| {
                let i = Ideal::from_set(r, s, Sidedness::TwoSided);
                i.map(|i| is_graded(gr, &i).is_pass()).unwrap_or(false)
            })
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    fn lattice_sets(gr: &GradedRing) -> Vec<ElemSet> {
        all_graded_ideals(gr, &Caps::default()).unwrap().ideals().iter().map(|i| i.elements().clone()).collect()
    }

    #[test]
    fn cyclic_and_product_lattices() {
        let caps = Caps::default();
        let z4 = cyclic(4).unwrap();
        assert_eq!(all_ideals(&z4, Sidedness::TwoSided, &caps).unwrap().len(), 3);
        let f2 = prime_field(2).unwrap();
        let ff = product(&[&f2, &f2]).unwrap();
        assert_eq!(all_ideals(&ff, Sidedness::TwoSided, &caps).unwrap().len(), 4);
        let m2 = matrix(&f2, 2).unwrap();
        assert_eq!(all_ideals(&m2, Sidedness::TwoSided, &caps).unwrap().len(), 2);
        assert_eq!(all_ideals(&m2, Sidedness::Left, &caps).unwrap().len(), 5);
    }

    #[test]
    fn graded_lattice_matches_subgroup_filter() {
        let f2 = prime_field(2).unwrap();
        let x = zero_mult(2).unwrap();
        let xxx = GradedRing::trivial(product(&[&x, &x, &x]).unwrap(), FiniteGroup::cyclic(2).unwrap());
        assert_eq!(lattice_sets(&xxx).len(), 16);
        assert_eq!(lattice_sets(&xxx), oracle(&xxx));
        let m2 = GradedRing::by_entry_degrees(matrix(&f2, 2).unwrap(), FiniteGroup::cyclic(4).unwrap(), &[0, 2, 2, 0])
            .unwrap();
        assert_eq!(lattice_sets(&m2).len(), 2);
        assert_eq!(lattice_sets(&m2), oracle(&m2));
        let z8 = GradedRing::trivial(cyclic(8).unwrap(), FiniteGroup::cyclic(2).unwrap());
        assert_eq!(lattice_sets(&z8), oracle(&z8));
    }

    #[test]
    fn maximal_ideals() {
        let caps = Caps::default();
        let x = zero_mult(2).unwrap();
        let xxx = GradedRing::trivial(product(&[&x, &x, &x]).unwrap(), FiniteGroup::cyclic(2).unwrap());
        assert_eq!(maximal_graded_ideals(&xxx, &caps).unwrap().len(), 7);
        let f2f3 = GradedRing::trivial(
            product(&[&prime_field(2).unwrap(), &prime_field(3).unwrap()]).unwrap(),
            FiniteGroup::cyclic(2).unwrap(),
        );
        let max = maximal_graded_ideals(&f2f3, &caps).unwrap();
        let mut sizes: Vec<usize> = max.iter().map(|i| i.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 3]);
    }

    #[test]
    fn products_sums_and_covers() {
        let z12 = GradedRing::trivial(cyclic(12).unwrap(), FiniteGroup::cyclic(1).unwrap());
        let r = z12.ring();
        let lat = all_graded_ideals(&z12, &Caps::default()).unwrap();
        assert_eq!(lat.len(), 6);
        let two = lat.principal(r.elem("2").unwrap()).unwrap();
        let three = lat.principal(r.elem("3").unwrap()).unwrap();
        assert_eq!(lat.get(lat.product(r, two, three)).len(), 2);
        assert_eq!(lat.sum(r, two, three), lat.top());
        assert_eq!(lat.get(lat.intersect(two, three)).len(), 2);
        for &(i, j) in &lat.covers() {
            assert!(lat.is_subset(i, j));
        }
        assert_eq!(lat.covers().len(), 7);
        for i in lat.ideals() {
            assert!(subgroup_violation(r, i.elements()).is_none());
            assert!(i.is_left_closed(r) && i.is_right_closed(r));
        }
        assert_eq!(lat.get(0).len(), 1);
        assert_eq!(lat.get(lat.top()).len(), r.order());
    }

    #[test]
    fn lattice_cap_enforced() {
        let z8 = GradedRing::trivial(cyclic(8).unwrap(), FiniteGroup::cyclic(1).unwrap());
        let tight = Caps { lattice: 4, ..Caps::default() };
        assert!(all_graded_ideals(&z8, &tight).is_err());
    }
}
