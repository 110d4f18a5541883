//! Finite grading groups given by Cayley tables.

use crate::error::{Error, Result};

/// Index of a group element.
pub type GroupElem = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<GroupElem>,
    identity: GroupElem,
    inverse: Vec<GroupElem>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Z_n written additively, labels `0..n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("cyclic group of order 0".into()));
        }
        let mul = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::from_table(mul, (0..n).map(|i| i.to_string()).collect())
    }

    /// The symmetric group on `k` points (k ≤ 4), elements in one-line notation.
    pub fn symmetric(k: usize) -> Result<Self> {
        if k == 0 || k > 4 {
            return Err(Error::InvalidArgument(format!("symmetric group S{k} not supported")));
        }
        let mut perms: Vec<Vec<usize>> = vec![(0..k).collect()];
        // all permutations in lexicographic order
        let mut cur: Vec<usize> = (0..k).collect();
        while next_permutation(&mut cur) {
            perms.push(cur.clone());
        }
        let n = perms.len();
        let find = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let mut mul = vec![0; n * n];
        for (i, a) in perms.iter().enumerate() {
            for (j, b) in perms.iter().enumerate() {
                // (a*b)(x) = a(b(x))
                let c: Vec<usize> = (0..k).map(|x| a[b[x]]).collect();
                mul[i * n + j] = find(&c);
            }
        }
        let labels = perms
            .iter()
            .map(|p| format!("[{}]", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        Self::from_table(mul, labels)
    }

    /// Builds a group from a row-major Cayley table, verifying the axioms.
    pub fn from_table(mul: Vec<GroupElem>, labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        if n == 0 || mul.len() != n * n {
            return Err(Error::GroupAxiom(format!("table has {} entries for {} labels", mul.len(), n)));
        }
        if let Some(&bad) = mul.iter().find(|&&x| x >= n) {
            return Err(Error::GroupAxiom(format!("table entry {bad} out of range")));
        }
        let at = |a: usize, b: usize| mul[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::GroupAxiom(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::GroupAxiom("no two-sided identity".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| Error::GroupAxiom(format!("{} has no inverse", labels[a])))?;
        }
        Ok(FiniteGroup { order: n, mul, identity, inverse, labels })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> GroupElem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: GroupElem, b: GroupElem) -> GroupElem {
        self.mul[a * self.order + b]
    }

    pub fn inverse(&self, a: GroupElem) -> GroupElem {
        self.inverse[a]
    }

    pub fn label(&self, a: GroupElem) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[GroupElem] {
        &self.mul
    }

    pub fn find(&self, label: &str) -> Option<GroupElem> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn elements(&self) -> std::ops::Range<GroupElem> {
        0..self.order
    }

    /// First non-commuting pair, if any.
    pub fn noncommuting_pair(&self) -> Option<(GroupElem, GroupElem)> {
        for a in 0..self.order {
            for b in a + 1..self.order {
                if self.mul(a, b) != self.mul(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_abelian(&self) -> bool {
        self.noncommuting_pair().is_none()
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group_tables() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(z4.identity(), 0);
        assert_eq!(z4.mul(2, 3), 1);
        assert_eq!(z4.inverse(1), 3);
        assert!(z4.is_abelian());
    }

    #[test]
    fn s3_is_nonabelian() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.label(s3.identity()), "[0,1,2]");
    }

    #[test]
    fn rejects_non_group_table() {
        // {0,1} under max is a monoid, not a group
        let err = FiniteGroup::from_table(vec![0, 1, 1, 1], vec!["a".into(), "b".into()]);
        assert!(matches!(err, Err(Error::GroupAxiom(_))));
    }
}
