//! Ring constructions: cyclic rings, fields, matrices, products, subrings,
//! quotients, idealizations and bracket rings.
//!
//! Label conventions: integers for `Z_n`, polynomials in `x` for `GF(p^k)`,
//! `(a b;c d)` for matrices (rows separated by `;`), `(a,b,...)` for
//! products and pairs, `[rep]` for cosets.

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, Sidedness};
use crate::module::{cosets, FiniteModule};
use crate::ring::{check_order, Additive, Elem, FiniteRing, MAX_ORDER};

/// `Z_n` with the usual operations. For `n = 1` this is the zero ring, whose
/// unity is its zero.
pub fn cyclic(n: usize) -> Result<FiniteRing> {
    check_order(n)?;
    FiniteRing::build(n, (0..n).map(|i| i.to_string()).collect(), |a, b| (a + b) % n, |a, b| a * b % n)
}

/// The additive group `Z_n` with every product zero.
pub fn zero_mult(n: usize) -> Result<FiniteRing> {
    check_order(n)?;
    FiniteRing::build(n, (0..n).map(|i| i.to_string()).collect(), |a, b| (a + b) % n, |_, _| 0)
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn prime_field(p: u64) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    cyclic(p as usize)
}

/// Reduction rule `x^k = -(c_0 + c_1 x + ... + c_{k-1} x^{k-1})`, stored as
/// the lower coefficients of the monic modulus.
fn modulus(p: u64, k: u32) -> Option<&'static [u64]> {
    match (p, k) {
        (2, 2) => Some(&[1, 1]),       // x^2 + x + 1
        (2, 3) => Some(&[1, 1, 0]),    // x^3 + x + 1
        (3, 2) => Some(&[1, 0]),       // x^2 + 1
        (2, 4) => Some(&[1, 1, 0, 0]), // x^4 + x + 1
        _ => None,
    }
}

/// `GF(p^k)` for `p^k ≤ 16`. Element index is `Σ c_i p^i` for the
/// polynomial `Σ c_i x^i`, so `GF(p)` sits at indices `0..p`.
pub fn field(p: u64, k: u32) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("field degree must be positive".into()));
    }
    let order = p.checked_pow(k).unwrap_or(u64::MAX);
    if order > 16 {
        return Err(Error::UnsupportedField { p, k, order });
    }
    if k == 1 {
        return prime_field(p);
    }
    let modulus = modulus(p, k).ok_or(Error::UnsupportedField { p, k, order })?;
    let (p, k) = (p as usize, k as usize);
    let n = order as usize;
    let coeffs = |mut i: usize| {
        let mut c = vec![0usize; k];
        for slot in c.iter_mut() {
            *slot = i % p;
            i /= p;
        }
        c
    };
    let index = |c: &[usize]| c.iter().rev().fold(0, |acc, &x| acc * p + x);
    let labels = (0..n).map(|i| poly_label(&coeffs(i))).collect();
    FiniteRing::build(
        n,
        labels,
        |a, b| {
            let (ca, cb) = (coeffs(a), coeffs(b));
            let s: Vec<usize> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
            index(&s)
        },
        |a, b| {
            let (ca, cb) = (coeffs(a), coeffs(b));
            let mut prod = vec![0usize; 2 * k - 1];
            for i in 0..k {
                for j in 0..k {
                    prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
                }
            }
            for d in (k..prod.len()).rev() {
                let c = prod[d];
                if c == 0 {
                    continue;
                }
                prod[d] = 0;
                for (i, &m) in modulus.iter().enumerate() {
                    let m = m as usize;
                    prod[d - k + i] = (prod[d - k + i] + (p - c * m % p)) % p;
                }
            }
            index(&prod[..k])
        },
    )
}

fn poly_label(c: &[usize]) -> String {
    let mut terms = Vec::new();
    for (deg, &coef) in c.iter().enumerate().rev() {
        if coef == 0 {
            continue;
        }
        let var = match deg {
            0 => String::new(),
            1 => "x".to_string(),
            d => format!("x^{d}"),
        };
        terms.push(match (coef, deg) {
            (_, 0) => coef.to_string(),
            (1, _) => var,
            _ => format!("{coef}{var}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Renders a `k×k` matrix label from row-major entry labels.
pub fn matrix_label<S: AsRef<str>>(entries: &[S], k: usize) -> String {
    let rows: Vec<String> =
        entries.chunks(k).map(|row| row.iter().map(|s| s.as_ref()).collect::<Vec<_>>().join(" ")).collect();
    format!("({})", rows.join(";"))
}

/// Splits a label produced by [`matrix_label`] back into rows of entries.
pub fn parse_matrix_label(label: &str) -> Option<Vec<Vec<String>>> {
    let inner = label.trim().strip_prefix('(')?.strip_suffix(')')?;
    if inner.contains(',') && !inner.contains(' ') && !inner.contains(';') {
        return None;
    }
    let rows: Vec<Vec<String>> = inner.split(';').map(|r| r.split_whitespace().map(str::to_string).collect()).collect();
    if rows.is_empty() || rows.iter().any(|r| r.is_empty()) {
        return None;
    }
    Some(rows)
}

/// The full ring of `k×k` matrices over `base`.
pub fn matrix(base: &FiniteRing, k: usize) -> Result<FiniteRing> {
    if k == 0 {
        return Err(Error::InvalidArgument("matrix size must be positive".into()));
    }
    let b = base.order();
    let cells = k * k;
    let order = (b as u128).checked_pow(cells as u32).unwrap_or(u128::MAX);
    if order > MAX_ORDER as u128 {
        return Err(Error::SizeCap { order: order.min(usize::MAX as u128) as usize, cap: MAX_ORDER });
    }
    let n = order as usize;
    // entries[i] = row-major entries, first entry most significant
    let entries: Vec<Vec<Elem>> = (0..n)
        .map(|mut i| {
            let mut v = vec![Elem::from_index(0); cells];
            for slot in v.iter_mut().rev() {
                *slot = Elem::from_index(i % b);
                i /= b;
            }
            v
        })
        .collect();
    let encode = |v: &[Elem]| v.iter().fold(0usize, |acc, e| acc * b + e.index());
    let labels =
        entries.iter().map(|v| matrix_label(&v.iter().map(|&e| base.label(e)).collect::<Vec<_>>(), k)).collect();
    FiniteRing::build(
        n,
        labels,
        |x, y| {
            let s: Vec<Elem> = entries[x].iter().zip(&entries[y]).map(|(&a, &c)| base.add(a, c)).collect();
            encode(&s)
        },
        |x, y| {
            let (ex, ey) = (&entries[x], &entries[y]);
            let mut out = vec![base.zero(); cells];
            for i in 0..k {
                for j in 0..k {
                    let mut acc = base.zero();
                    for l in 0..k {
                        acc = base.add(acc, base.mul(ex[i * k + l], ey[l * k + j]));
                    }
                    out[i * k + j] = acc;
                }
            }
            encode(&out)
        },
    )
}

/// Componentwise product; a single factor is returned unchanged.
pub fn product(factors: &[&FiniteRing]) -> Result<FiniteRing> {
    match factors {
        [] => return Err(Error::InvalidArgument("empty product".into())),
        [one] => return Ok((*one).clone()),
        _ => {}
    }
    let order = factors.iter().try_fold(1usize, |acc, f| {
        acc.checked_mul(f.order())
            .filter(|&o| o <= MAX_ORDER)
            .ok_or(Error::SizeCap { order: acc.saturating_mul(f.order()), cap: MAX_ORDER })
    })?;
    let radix: Vec<usize> = factors.iter().map(|f| f.order()).collect();
    let decode = |mut i: usize| {
        let mut v = vec![0; radix.len()];
        for k in (0..radix.len()).rev() {
            v[k] = i % radix[k];
            i /= radix[k];
        }
        v
    };
    let encode = |v: &[usize]| v.iter().zip(&radix).fold(0, |acc, (&x, &r)| acc * r + x);
    let decoded: Vec<Vec<usize>> = (0..order).map(decode).collect();
    let labels = decoded
        .iter()
        .map(|v| {
            let parts: Vec<&str> = v.iter().zip(factors).map(|(&x, f)| f.label(Elem::from_index(x))).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let op = |a: usize, b: usize, mul: bool| {
        let s: Vec<usize> = (0..factors.len())
            .map(|k| {
                let (x, y) = (Elem::from_index(decoded[a][k]), Elem::from_index(decoded[b][k]));
                if mul { factors[k].mul(x, y) } else { factors[k].add(x, y) }.index()
            })
            .collect();
        encode(&s)
    };
    FiniteRing::build(order, labels, |a, b| op(a, b, false), |a, b| op(a, b, true))
}

/// The subring on `subset`, re-indexed in parent order, with the map from
/// new indices to parent indices.
pub fn subring(parent: &FiniteRing, subset: &ElemSet) -> Result<(FiniteRing, Vec<Elem>)> {
    if subset.universe() != parent.order() {
        return Err(Error::RingMismatch);
    }
    if !subset.contains(parent.zero()) {
        return Err(Error::NotClosed { op: "zero", detail: "subset does not contain zero".into() });
    }
    let members = subset.to_vec();
    for &a in &members {
        if !subset.contains(parent.neg(a)) {
            return Err(Error::NotClosed { op: "negation", detail: format!("-{} is missing", parent.label(a)) });
        }
        for &b in &members {
            for (op, r) in [("addition", parent.add(a, b)), ("multiplication", parent.mul(a, b))] {
                if !subset.contains(r) {
                    return Err(Error::NotClosed {
                        op,
                        detail: format!("{} and {} give {}", parent.label(a), parent.label(b), parent.label(r)),
                    });
                }
            }
        }
    }
    let pos = |x: Elem| members.binary_search(&x).expect("closed");
    let labels = parent.labels_of(members.iter().copied());
    let ring = FiniteRing::build(
        members.len(),
        labels,
        |a, b| pos(parent.add(members[a], members[b])),
        |a, b| pos(parent.mul(members[a], members[b])),
    )?;
    Ok((ring, members))
}

/// `R / I` for a two-sided ideal, with the projection from parent indices.
pub fn quotient(parent: &FiniteRing, ideal: &Ideal) -> Result<(FiniteRing, Vec<Elem>)> {
    if ideal.ring_id() != parent.id() {
        return Err(Error::RingMismatch);
    }
    if ideal.sidedness() != Sidedness::TwoSided || !ideal.is_left_closed(parent) || !ideal.is_right_closed(parent) {
        return Err(Error::NotTwoSided);
    }
    let (reps, proj) = cosets(parent, ideal.subgroup());
    let labels = reps.iter().map(|&r| format!("[{}]", parent.label(r))).collect();
    let ring = FiniteRing::build(
        reps.len(),
        labels,
        |a, b| proj[parent.add(reps[a], reps[b]).index()],
        |a, b| proj[parent.mul(reps[a], reps[b]).index()],
    )?;
    Ok((ring, proj.into_iter().map(Elem::from_index).collect()))
}

fn pair_ring(
    r: &FiniteRing,
    m: &FiniteModule,
    mul: impl Fn(Elem, Elem, Elem, Elem) -> (Elem, Elem),
) -> Result<FiniteRing> {
    if m.ring_id() != r.id() {
        return Err(Error::RingMismatch);
    }
    let mo = m.order();
    let order = r.order() * mo;
    if order > MAX_ORDER {
        return Err(Error::SizeCap { order, cap: MAX_ORDER });
    }
    let split = |i: usize| (Elem::from_index(i / mo), Elem::from_index(i % mo));
    let join = |(a, x): (Elem, Elem)| a.index() * mo + x.index();
    let labels = (0..order)
        .map(|i| {
            let (a, x) = split(i);
            format!("({},{})", r.label(a), m.label(x))
        })
        .collect();
    let ring = FiniteRing::build(
        order,
        labels,
        |i, j| {
            let ((a, x), (b, y)) = (split(i), split(j));
            join((r.add(a, b), m.add(x, y)))
        },
        |i, j| {
            let ((a, x), (b, y)) = (split(i), split(j));
            join(mul(a, x, b, y))
        },
    )?;
    ring.check_axioms()?;
    Ok(ring)
}

/// `R(+)M` with `(x,m1)(y,m2) = (xy, x·m2 + y·m1)`. Both terms use the left
/// action; for a noncommutative base the result need not be associative, in
/// which case construction fails with the offending triple.
pub fn idealization(r: &FiniteRing, m: &FiniteModule) -> Result<FiniteRing> {
    pair_ring(r, m, |x, m1, y, m2| (r.mul(x, y), m.add(m.act(x, m2), m.act(y, m1))))
}

/// `[R, M]` with `(a,m)(b,n) = (ab, a·n)`.
pub fn bracket(r: &FiniteRing, m: &FiniteModule) -> Result<FiniteRing> {
    pair_ring(r, m, |a, _x, b, y| (r.mul(a, b), m.act(a, y)))
}

pub fn unity_of(r: &FiniteRing) -> Option<Elem> {
    r.unity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::generate;

    fn e(r: &FiniteRing, l: &str) -> Elem {
        r.elem(l).unwrap()
    }

    #[test]
    fn cyclic_rings() {
        let z4 = cyclic(4).unwrap();
        assert_eq!(z4.unity(), Some(e(&z4, "1")));
        assert_eq!(z4.mul(e(&z4, "2"), e(&z4, "2")), z4.zero());
        let z1 = cyclic(1).unwrap();
        assert_eq!(z1.unity(), Some(z1.zero()));
        let z8 = cyclic(8).unwrap();
        assert_eq!(z8.mul(e(&z8, "6"), e(&z8, "3")), e(&z8, "2"));
    }

    #[test]
    fn zero_multiplication_rings() {
        let s = zero_mult(2).unwrap();
        assert_eq!(s.order(), 2);
        assert_eq!(s.mul(e(&s, "1"), e(&s, "1")), s.zero());
        assert_eq!(s.unity(), None);
        assert_eq!(zero_mult(1).unwrap().order(), 1);
    }

    #[test]
    fn prime_fields() {
        let f2 = prime_field(2).unwrap();
        assert_eq!(f2.add(e(&f2, "1"), e(&f2, "1")), f2.zero());
        let f3 = prime_field(3).unwrap();
        assert_eq!(f3.mul(e(&f3, "2"), e(&f3, "2")), e(&f3, "1"));
        assert_eq!(prime_field(4).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn extension_fields() {
        let f4 = field(2, 2).unwrap();
        assert_eq!(f4.mul(e(&f4, "x"), e(&f4, "x")), e(&f4, "x+1"));
        assert_eq!(field(2, 1).unwrap().order(), 2);
        assert!(matches!(field(5, 2), Err(Error::UnsupportedField { order: 25, .. })));
        assert!(matches!(field(4, 1), Err(Error::NotPrime(4))));
        for (p, k) in [(2, 2), (2, 3), (3, 2), (2, 4)] {
            let f = field(p, k).unwrap();
            f.check_axioms().unwrap();
            let one = f.unity().unwrap();
            // every nonzero element is invertible
            for a in f.elements().filter(|&a| a != f.zero()) {
                assert!(f.elements().any(|b| f.mul(a, b) == one), "GF({p}^{k}): {} not invertible", f.label(a));
            }
        }
    }

    #[test]
    fn matrix_rings() {
        let f2 = prime_field(2).unwrap();
        let m2 = matrix(&f2, 2).unwrap();
        assert_eq!(m2.order(), 16);
        assert_eq!(m2.unity(), Some(e(&m2, "(1 0;0 1)")));
        m2.check_axioms().unwrap();

        let z8 = cyclic(8).unwrap();
        let m = matrix(&z8, 2).unwrap();
        assert_eq!(m.order(), 4096);
        assert_eq!(m.mul(e(&m, "(6 0;0 3)"), e(&m, "(0 1;2 0)")), e(&m, "(0 6;6 0)"));

        let z4 = cyclic(4).unwrap();
        let m1 = matrix(&z4, 1).unwrap();
        assert_eq!(m1.order(), 4);
        assert_eq!(m1.mul(e(&m1, "(3)"), e(&m1, "(3)")), e(&m1, "(1)"));
        assert!(matches!(matrix(&z4, 3), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn product_rings() {
        let f2 = prime_field(2).unwrap();
        let k3 = product(&[&f2, &f2, &f2]).unwrap();
        assert_eq!(k3.order(), 8);
        assert!(k3.elements().all(|x| k3.mul(x, x) == x));

        let s = zero_mult(2).unwrap();
        let fs = product(&[&f2, &s]).unwrap();
        assert_eq!(fs.order(), 4);
        assert_eq!(fs.unity(), None);

        let single = product(&[&f2]).unwrap();
        assert_eq!(single.add_table(), f2.add_table());
        assert_eq!(single.mul_table(), f2.mul_table());
    }

    #[test]
    fn shaped_subrings() {
        let f2 = prime_field(2).unwrap();
        let m3 = matrix(&f2, 3).unwrap();
        let shaped = ElemSet::from_elems(
            m3.order(),
            m3.elements().filter(|&x| {
                let rows = parse_matrix_label(m3.label(x)).unwrap();
                rows[0][0] == "0" && rows[1][0] == "0" && rows[2].iter().all(|c| c == "0")
            }),
        );
        let (s, map) = subring(&m3, &shaped).unwrap();
        assert_eq!(s.order(), 16);
        assert_eq!(map.len(), 16);

        let z4 = cyclic(4).unwrap();
        let m2 = matrix(&z4, 2).unwrap();
        let row = ElemSet::from_elems(
            m2.order(),
            m2.elements().filter(|&x| {
                let r = parse_matrix_label(m2.label(x)).unwrap();
                r[1] == ["0", "0"] && (r[0][1] == "0" || r[0][1] == "2")
            }),
        );
        assert_eq!(subring(&m2, &row).unwrap().0.order(), 8);

        let zero = ElemSet::from_elems(m2.order(), [m2.zero()]);
        assert_eq!(subring(&m2, &zero).unwrap().0.order(), 1);
    }

    #[test]
    fn subring_reports_closure_failure() {
        let z4 = cyclic(4).unwrap();
        let s = ElemSet::from_elems(4, [e(&z4, "0"), e(&z4, "1"), e(&z4, "3")]);
        assert!(matches!(subring(&z4, &s), Err(Error::NotClosed { op: "addition", .. })));
    }

    #[test]
    fn quotients() {
        let z4 = cyclic(4).unwrap();
        let i = generate(&z4, [e(&z4, "2")], Sidedness::TwoSided);
        let (q, proj) = quotient(&z4, &i).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj[3], q.elem("[1]").unwrap());
        assert!(q.unity().is_some());

        let zero = generate(&z4, [], Sidedness::TwoSided);
        let (copy, _) = quotient(&z4, &zero).unwrap();
        assert_eq!(copy.mul_table(), z4.mul_table());

        let m2 = matrix(&prime_field(2).unwrap(), 2).unwrap();
        let left = generate(&m2, [e(&m2, "(1 1;1 1)")], Sidedness::Left);
        assert_eq!(quotient(&m2, &left).unwrap_err(), Error::NotTwoSided);
    }

    #[test]
    fn idealization_of_z4_by_z2() {
        let z4 = cyclic(4).unwrap();
        let two = generate(&z4, [e(&z4, "2")], Sidedness::TwoSided);
        let z2 = FiniteModule::quotient_of_regular(&z4, &two).unwrap();
        let x = idealization(&z4, &z2).unwrap();
        assert_eq!(x.order(), 8);
        assert_eq!(x.unity(), Some(e(&x, "(1,[0])")));
        assert_eq!(x.mul(e(&x, "(2,[0])"), e(&x, "(2,[1])")), e(&x, "(0,[0])"));
        for a in z2.elements() {
            for b in z2.elements() {
                let pa = e(&x, &format!("(0,{})", z2.label(a)));
                let pb = e(&x, &format!("(0,{})", z2.label(b)));
                assert_eq!(x.mul(pa, pb), x.zero());
            }
        }
    }

    #[test]
    fn idealization_over_noncommutative_base_can_fail() {
        let f2 = prime_field(2).unwrap();
        let m2 = matrix(&f2, 2).unwrap();
        let reg = FiniteModule::regular(&m2).unwrap();
        assert!(matches!(idealization(&m2, &reg), Err(Error::RingAxiom(_))));
    }

    #[test]
    fn bracket_ring() {
        let z4 = cyclic(4).unwrap();
        let two = generate(&z4, [e(&z4, "2")], Sidedness::TwoSided);
        let z2 = FiniteModule::quotient_of_regular(&z4, &two).unwrap();
        let b = bracket(&z4, &z2).unwrap();
        assert_eq!(b.order(), 8);
        assert_eq!(b.mul(e(&b, "(2,[0])"), e(&b, "(1,[1])")), e(&b, "(2,[0])"));
        assert_eq!(b.mul(e(&b, "(0,[1])"), e(&b, "(3,[1])")), b.zero());
    }

    #[test]
    fn unity_detection() {
        assert_eq!(unity_of(&cyclic(4).unwrap()).map(|u| u.index()), Some(1));
        assert_eq!(unity_of(&zero_mult(2).unwrap()), None);
        let m2 = matrix(&prime_field(2).unwrap(), 2).unwrap();
        assert_eq!(unity_of(&m2), m2.find("(1 0;0 1)"));
    }
}
