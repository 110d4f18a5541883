//! Finite rings as dense lookup tables.
//!
//! Elements are canonical indices `0..order`. Every ring keeps full
//! addition and multiplication tables, its additive negation, a greedy
//! set of additive generators and, when one exists, its unity. Unity is
//! always found by search, never assumed.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::subgroup::Subgroup;

/// Largest ring order any construction will build.
pub const MAX_ORDER: usize = 4096;

/// Rings above this order skip the cubic axiom loops in [`FiniteRing::check_axioms`].
pub const AXIOM_CHECK_CAP: usize = 256;

/// Canonical index of an element in its ring (or module).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u16);

impl Elem {
    #[inline]
    pub const fn from_index(i: usize) -> Elem {
        Elem(i as u16)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite abelian group under addition, given by tables.
pub trait Additive {
    fn order(&self) -> usize;
    fn zero(&self) -> Elem;
    fn add(&self, a: Elem, b: Elem) -> Elem;
    fn neg(&self, a: Elem) -> Elem;
    fn label(&self, a: Elem) -> &str;

    fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    fn elements(&self) -> ElemIter {
        ElemIter { next: 0, end: self.order() }
    }
}

pub struct ElemIter {
    next: usize,
    end: usize,
}

impl Iterator for ElemIter {
    type Item = Elem;
    fn next(&mut self) -> Option<Elem> {
        if self.next < self.end {
            self.next += 1;
            Some(Elem::from_index(self.next - 1))
        } else {
            None
        }
    }
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

pub(crate) fn fresh_id() -> u64 {
    NEXT_ID.fetch_add(1, Ordering::Relaxed)
}

#[derive(Clone)]
pub struct FiniteRing {
    id: u64,
    order: usize,
    add: Vec<u16>,
    neg: Vec<u16>,
    mul: Vec<u16>,
    zero: Elem,
    unity: Option<Elem>,
    labels: Vec<String>,
    by_label: HashMap<String, Elem>,
    add_gens: Vec<Elem>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("order", &self.order)
            .field("zero", &self.label(self.zero))
            .field("unity", &self.unity.map(|u| self.label(u).to_string()))
            .finish()
    }
}

impl FiniteRing {
    /// Fills the tables from closures over indices. Callers guarantee the
    /// closures define a ring; use [`FiniteRing::from_tables`] for
    /// untrusted input.
    pub(crate) fn build(
        order: usize,
        labels: Vec<String>,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<FiniteRing> {
        check_order(order)?;
        assert_eq!(labels.len(), order);
        let mut add_t = vec![0u16; order * order];
        let mut mul_t = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                add_t[a * order + b] = add(a, b) as u16;
                mul_t[a * order + b] = mul(a, b) as u16;
            }
        }
        Self::assemble(order, add_t, mul_t, labels)
    }

    fn assemble(order: usize, add: Vec<u16>, mul: Vec<u16>, labels: Vec<String>) -> Result<FiniteRing> {
        let zero = (0..order)
            .find(|&z| add[z * order + z] as usize == z)
            .ok_or_else(|| Error::RingAxiom("no additive identity".into()))?;
        let mut neg = vec![0u16; order];
        for a in 0..order {
            let row = &add[a * order..(a + 1) * order];
            neg[a] = row
                .iter()
                .position(|&s| s as usize == zero)
                .ok_or_else(|| Error::RingAxiom(format!("{} has no additive inverse", labels[a])))?
                as u16;
        }
        let mut by_label = HashMap::with_capacity(order);
        for (i, l) in labels.iter().enumerate() {
            if by_label.insert(l.clone(), Elem::from_index(i)).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate element label {l:?}")));
            }
        }
        let mut ring = FiniteRing {
            id: fresh_id(),
            order,
            add,
            neg,
            mul,
            zero: Elem::from_index(zero),
            unity: None,
            labels,
            by_label,
            add_gens: Vec::new(),
        };
        ring.add_gens = Subgroup::generated(&ring, ring.elements()).gens().to_vec();
        ring.unity = ring.find_unity();
        Ok(ring)
    }

    /// Builds a ring from explicit row-major tables and checks every axiom
    /// exhaustively. Orders above [`AXIOM_CHECK_CAP`] are refused.
    pub fn from_tables(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<FiniteRing> {
        let n = add.len();
        if n == 0 {
            return Err(Error::RingAxiom("empty table".into()));
        }
        if n > AXIOM_CHECK_CAP {
            return Err(Error::SizeCap { order: n, cap: AXIOM_CHECK_CAP });
        }
        if mul.len() != n || add.iter().chain(&mul).any(|row| row.len() != n) {
            return Err(Error::RingAxiom("tables must be square and of equal size".into()));
        }
        if let Some(&bad) = add.iter().chain(&mul).flatten().find(|&&x| x >= n) {
            return Err(Error::RingAxiom(format!("table entry {bad} out of range")));
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        if labels.len() != n {
            return Err(Error::InvalidArgument(format!("{} labels for {} elements", labels.len(), n)));
        }
        let flat = |t: Vec<Vec<usize>>| t.into_iter().flatten().map(|x| x as u16).collect::<Vec<_>>();
        let ring = Self::assemble(n, flat(add), flat(mul), labels)?;
        ring.check_axioms()?;
        Ok(ring)
    }

    /// Exhaustive check of the ring axioms. Associativity of multiplication
    /// is checked on triples of additive generators once both distributive
    /// laws are known to hold, since it is then a trilinear identity.
    /// Rings above [`AXIOM_CHECK_CAP`] only get the generator-level checks.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        let e = Elem::from_index;
        let lbl = |x: usize| self.labels[x].as_str();
        let exhaustive = n <= AXIOM_CHECK_CAP;
        if exhaustive {
            for a in 0..n {
                for b in 0..n {
                    if self.add(e(a), e(b)) != self.add(e(b), e(a)) {
                        return Err(Error::RingAxiom(format!("addition not commutative at ({}, {})", lbl(a), lbl(b))));
                    }
                }
            }
            for a in 0..n {
                for b in 0..n {
                    let ab = self.add(e(a), e(b));
                    let ab_m = self.mul(e(a), e(b));
                    for c in 0..n {
                        if self.add(ab, e(c)) != self.add(e(a), self.add(e(b), e(c))) {
                            return Err(Error::RingAxiom(format!(
                                "addition not associative at ({}, {}, {})",
                                lbl(a),
                                lbl(b),
                                lbl(c)
                            )));
                        }
                        // a(b+c) = ab + ac
                        let bc = self.add(e(b), e(c));
                        if self.mul(e(a), bc) != self.add(ab_m, self.mul(e(a), e(c))) {
                            return Err(Error::RingAxiom(format!(
                                "left distributivity fails at ({}, {}, {})",
                                lbl(a),
                                lbl(b),
                                lbl(c)
                            )));
                        }
                        // (b+c)a = ba + ca
                        if self.mul(bc, e(a)) != self.add(self.mul(e(b), e(a)), self.mul(e(c), e(a))) {
                            return Err(Error::RingAxiom(format!(
                                "right distributivity fails at ({}, {}, {})",
                                lbl(b),
                                lbl(c),
                                lbl(a)
                            )));
                        }
                    }
                }
            }
        }
        for &a in &self.add_gens {
            for &b in &self.add_gens {
                let ab = self.mul(a, b);
                for &c in &self.add_gens {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::RingAxiom(format!(
                            "multiplication not associative at ({}, {}, {})",
                            self.label(a),
                            self.label(b),
                            self.label(c)
                        )));
                    }
                }
            }
        }
        if let Some(u) = self.unity {
            if let Some(x) = self.elements().find(|&x| self.mul(u, x) != x || self.mul(x, u) != x) {
                return Err(Error::RingAxiom(format!("unity {} fails at {}", self.label(u), self.label(x))));
            }
        }
        Ok(())
    }

    fn find_unity(&self) -> Option<Elem> {
        // both sides of the identity law are additive in x, so generators suffice
        self.elements().find(|&u| self.add_gens.iter().all(|&g| self.mul(u, g) == g && self.mul(g, u) == g))
    }

    /// Process-unique identity of this table set; clones share it.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn unity(&self) -> Option<Elem> {
        self.unity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul[a.index() * self.order + b.index()])
    }

    /// `k·a` for a non-negative integer `k`.
    pub fn scalar(&self, k: usize, a: Elem) -> Elem {
        (0..k).fold(self.zero, |acc, _| self.add(acc, a))
    }

    /// A small set of elements generating the additive group.
    pub fn add_gens(&self) -> &[Elem] {
        &self.add_gens
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks an element up by its exact label.
    pub fn find(&self, label: &str) -> Option<Elem> {
        self.by_label.get(label).copied()
    }

    /// Like [`FiniteRing::find`] but fails with [`Error::UnknownElement`].
    pub fn elem(&self, label: &str) -> Result<Elem> {
        self.find(label).ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn add_table(&self) -> &[u16] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u16] {
        &self.mul
    }

    /// True iff every product is zero.
    pub fn has_zero_multiplication(&self) -> bool {
        self.mul.iter().all(|&x| x as usize == self.zero.index())
    }

    pub fn is_commutative(&self) -> bool {
        self.add_gens.iter().all(|&a| self.add_gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    pub fn labels_of<'a>(&'a self, xs: impl IntoIterator<Item = Elem> + 'a) -> Vec<String> {
        xs.into_iter().map(|x| self.label(x).to_string()).collect()
    }
}

impl Additive for FiniteRing {
    fn order(&self) -> usize {
        self.order
    }
    fn zero(&self) -> Elem {
        self.zero
    }
    #[inline]
    fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.add[a.index() * self.order + b.index()])
    }
    #[inline]
    fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.index()])
    }
    fn label(&self, a: Elem) -> &str {
        &self.labels[a.index()]
    }
}

pub(crate) fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::InvalidArgument("ring of order 0".into()));
    }
    if order > MAX_ORDER {
        return Err(Error::SizeCap { order, cap: MAX_ORDER });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteRing {
        FiniteRing::build(n, (0..n).map(|i| i.to_string()).collect(), |a, b| (a + b) % n, |a, b| a * b % n).unwrap()
    }

    #[test]
    fn unity_found_by_search() {
        assert_eq!(z(6).unity(), Some(Elem::from_index(1)));
        let zero_mult =
            FiniteRing::build(3, vec!["0".into(), "1".into(), "2".into()], |a, b| (a + b) % 3, |_, _| 0).unwrap();
        assert_eq!(zero_mult.unity(), None);
        assert!(zero_mult.has_zero_multiplication());
    }

    #[test]
    fn from_tables_rejects_nondistributive() {
        // Z2 addition with "multiplication" a*b = 1 everywhere
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![1, 1], vec![1, 1]];
        assert!(matches!(FiniteRing::from_tables(add, mul, None), Err(Error::RingAxiom(_))));
    }

    #[test]
    fn from_tables_accepts_z4() {
        let add = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        let mul = (0..4).map(|a| (0..4).map(|b| a * b % 4).collect()).collect();
        let r = FiniteRing::from_tables(add, mul, None).unwrap();
        assert_eq!(r.unity(), Some(Elem::from_index(1)));
        assert_eq!(r.add_gens().len(), 1);
    }

    #[test]
    fn duplicate_labels_rejected() {
        let err = FiniteRing::build(2, vec!["a".into(), "a".into()], |a, b| (a + b) % 2, |a, b| a * b);
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
    }
}
