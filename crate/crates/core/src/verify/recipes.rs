//! Named ring and grading recipes shared by the fixtures and the corpus.

use crate::construct::{cyclic, field, matrix, parse_matrix_label, subring};
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::grading::GradedRing;
use crate::group::{FiniteGroup, GroupElem};
use crate::ring::{Additive, FiniteRing};

pub fn z2() -> FiniteGroup {
    FiniteGroup::cyclic(2).expect("Z2")
}

pub fn z4() -> FiniteGroup {
    FiniteGroup::cyclic(4).expect("Z4")
}

/// The subring of `M_k(base)` of matrices whose entries pass `keep`.
pub fn matrix_subring(base: &FiniteRing, k: usize, keep: impl Fn(&[Vec<String>]) -> bool) -> Result<FiniteRing> {
    let m = matrix(base, k)?;
    let set = ElemSet::from_elems(
        m.order(),
        m.elements().filter(|&x| keep(&parse_matrix_label(m.label(x)).expect("matrix label"))),
    );
    Ok(subring(&m, &set)?.0)
}

/// Upper triangular `2×2` matrices.
pub fn upper_triangular(base: &FiniteRing) -> Result<FiniteRing> {
    matrix_subring(base, 2, |r| r[1][0] == "0")
}

/// `{(x y;0 0) : x ∈ Z4, y ∈ 2Z4}`.
pub fn row_ring() -> Result<FiniteRing> {
    matrix_subring(&cyclic(4)?, 2, |r| r[1] == ["0", "0"] && (r[0][1] == "0" || r[0][1] == "2"))
}

/// `(Z4 2Z4;0 Z4)`.
pub fn even_corner() -> Result<FiniteRing> {
    matrix_subring(&cyclic(4)?, 2, |r| r[1][0] == "0" && (r[0][1] == "0" || r[0][1] == "2"))
}

/// `(F2 GF4;0 F2)` inside `M2(GF4)`.
pub fn gf4_corner() -> Result<FiniteRing> {
    let prime = |e: &str| e == "0" || e == "1";
    matrix_subring(&field(2, 2)?, 2, |r| r[1][0] == "0" && prime(&r[0][0]) && prime(&r[1][1]))
}

/// `(0 K K;0 K K;0 0 0)`.
pub fn shaped_3x3(k: &FiniteRing) -> Result<FiniteRing> {
    matrix_subring(k, 3, |r| r[0][0] == "0" && r[1][0] == "0" && r[2].iter().all(|e| e == "0"))
}

/// Strictly upper triangular `3×3` matrices.
pub fn strictly_upper_3x3(k: &FiniteRing) -> Result<FiniteRing> {
    matrix_subring(k, 3, |r| (0..3).all(|i| (0..=i).all(|j| r[i][j] == "0")))
}

/// Everything in degree 0 of `Z2`.
pub fn trivially(ring: FiniteRing) -> GradedRing {
    GradedRing::trivial(ring, z2())
}

/// `Z2`-grading of a `k×k` matrix ring by `(j - i) mod 2`.
pub fn checkerboard(ring: FiniteRing, k: usize) -> Result<GradedRing> {
    let degrees: Vec<GroupElem> = (0..k * k).map(|p| (p % k + 2 - (p / k) % 2) % 2).collect();
    GradedRing::by_entry_degrees(ring, z2(), &degrees)
}

/// `Z4`-grading of a `2×2` matrix ring: diagonal in degree 0, off-diagonal
/// in degree 2.
pub fn z4_entries(ring: FiniteRing) -> Result<GradedRing> {
    GradedRing::by_entry_degrees(ring, z4(), &[0, 2, 2, 0])
}

/// A ring with zero multiplication placed entirely in degree 1 of `Z2`.
pub fn in_degree_one(ring: FiniteRing) -> Result<GradedRing> {
    let zero = ElemSet::from_elems(ring.order(), [ring.zero()]);
    let all = ring.all();
    GradedRing::new(ring, z2(), vec![zero, all])
}
