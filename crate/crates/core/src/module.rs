//! Finite left modules over finite rings.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{fresh_id, Additive, Elem, FiniteRing, AXIOM_CHECK_CAP, MAX_ORDER};
use crate::subgroup::Subgroup;

/// A finite left module, with the action stored as a `ring × module` table.
#[derive(Clone)]
pub struct FiniteModule {
    id: u64,
    ring_id: u64,
    ring_order: usize,
    order: usize,
    add: Vec<u16>,
    neg: Vec<u16>,
    zero: Elem,
    action: Vec<u16>,
    labels: Vec<String>,
    add_gens: Vec<Elem>,
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteModule").field("order", &self.order).field("labels", &self.labels).finish()
    }
}

impl FiniteModule {
    fn build(
        ring: &FiniteRing,
        order: usize,
        labels: Vec<String>,
        add: impl Fn(usize, usize) -> usize,
        act: impl Fn(Elem, usize) -> usize,
    ) -> Result<FiniteModule> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::SizeCap { order, cap: MAX_ORDER });
        }
        let mut add_t = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                add_t[a * order + b] = add(a, b) as u16;
            }
        }
        let mut action = vec![0u16; ring.order() * order];
        for r in ring.elements() {
            for m in 0..order {
                action[r.index() * order + m] = act(r, m) as u16;
            }
        }
        let zero = (0..order)
            .find(|&z| add_t[z * order + z] as usize == z)
            .ok_or_else(|| Error::ModuleAxiom("no additive identity".into()))?;
        let mut neg = vec![0u16; order];
        for a in 0..order {
            neg[a] = (0..order)
                .find(|&b| add_t[a * order + b] as usize == zero)
                .ok_or_else(|| Error::ModuleAxiom(format!("{} has no additive inverse", labels[a])))?
                as u16;
        }
        let mut m = FiniteModule {
            id: fresh_id(),
            ring_id: ring.id(),
            ring_order: ring.order(),
            order,
            add: add_t,
            neg,
            zero: Elem::from_index(zero),
            action,
            labels,
            add_gens: Vec::new(),
        };
        m.add_gens = Subgroup::generated(&m, m.elements()).gens().to_vec();
        Ok(m)
    }

    /// The ring acting on itself by left multiplication.
    pub fn regular(ring: &FiniteRing) -> Result<FiniteModule> {
        Self::build(
            ring,
            ring.order(),
            ring.labels().to_vec(),
            |a, b| ring.add(Elem::from_index(a), Elem::from_index(b)).index(),
            |r, m| ring.mul(r, Elem::from_index(m)).index(),
        )
    }

    pub fn zero_module(ring: &FiniteRing) -> Result<FiniteModule> {
        Self::build(ring, 1, vec!["0".into()], |_, _| 0, |_, _| 0)
    }

    /// A left ideal viewed as a submodule of the regular module.
    pub fn from_left_ideal(ring: &FiniteRing, ideal: &Ideal) -> Result<FiniteModule> {
        if !ideal.is_left_closed(ring) {
            return Err(Error::ModuleAxiom("subset is not closed under the left action".into()));
        }
        let members = ideal.elements().to_vec();
        let pos = |x: Elem| members.binary_search(&x).expect("closed");
        let labels = ring.labels_of(members.iter().copied());
        Self::build(
            ring,
            members.len(),
            labels,
            |a, b| pos(ring.add(members[a], members[b])),
            |r, m| pos(ring.mul(r, members[m])),
        )
    }

    /// `R / I` for a left ideal `I`, cosets labelled `[rep]` by their least member.
    pub fn quotient_of_regular(ring: &FiniteRing, ideal: &Ideal) -> Result<FiniteModule> {
        if !ideal.is_left_closed(ring) {
            return Err(Error::ModuleAxiom("quotient needs a left ideal".into()));
        }
        let (reps, proj) = cosets(ring, ideal.subgroup());
        let labels = reps.iter().map(|&r| format!("[{}]", ring.label(r))).collect();
        Self::build(
            ring,
            reps.len(),
            labels,
            |a, b| proj[ring.add(reps[a], reps[b]).index()],
            |r, m| proj[ring.mul(r, reps[m]).index()],
        )
    }

    /// Direct sum of modules over the same ring; labels are tuples.
    pub fn direct_sum(ring: &FiniteRing, parts: &[&FiniteModule]) -> Result<FiniteModule> {
        if parts.is_empty() {
            return Self::zero_module(ring);
        }
        if parts.iter().any(|p| p.ring_id != ring.id()) {
            return Err(Error::RingMismatch);
        }
        let order: usize = parts.iter().map(|p| p.order).product();
        if order > MAX_ORDER {
            return Err(Error::SizeCap { order, cap: MAX_ORDER });
        }
        let radix: Vec<usize> = parts.iter().map(|p| p.order).collect();
        let decode = |mut i: usize| {
            let mut v = vec![0; radix.len()];
            for k in (0..radix.len()).rev() {
                v[k] = i % radix[k];
                i /= radix[k];
            }
            v
        };
        let encode = |v: &[usize]| v.iter().zip(&radix).fold(0, |acc, (&x, &r)| acc * r + x);
        let labels = (0..order)
            .map(|i| {
                let v = decode(i);
                let inner: Vec<&str> = v.iter().zip(parts).map(|(&x, p)| p.label(Elem::from_index(x))).collect();
                format!("({})", inner.join(","))
            })
            .collect();
        Self::build(
            ring,
            order,
            labels,
            |a, b| {
                let (va, vb) = (decode(a), decode(b));
                let s: Vec<usize> = (0..parts.len())
                    .map(|k| parts[k].add(Elem::from_index(va[k]), Elem::from_index(vb[k])).index())
                    .collect();
                encode(&s)
            },
            |r, m| {
                let vm = decode(m);
                let s: Vec<usize> =
                    (0..parts.len()).map(|k| parts[k].act(r, Elem::from_index(vm[k])).index()).collect();
                encode(&s)
            },
        )
    }

    /// Builds a module from explicit tables and validates it exhaustively.
    pub fn from_tables(
        ring: &FiniteRing,
        add: Vec<Vec<usize>>,
        action: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<FiniteModule> {
        let n = add.len();
        if n == 0 || n > AXIOM_CHECK_CAP {
            return Err(Error::SizeCap { order: n, cap: AXIOM_CHECK_CAP });
        }
        if add.iter().any(|r| r.len() != n) || action.len() != ring.order() || action.iter().any(|r| r.len() != n) {
            return Err(Error::ModuleAxiom("table shapes do not match".into()));
        }
        if add.iter().chain(&action).flatten().any(|&x| x >= n) {
            return Err(Error::ModuleAxiom("table entry out of range".into()));
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        if labels.len() != n {
            return Err(Error::InvalidArgument("label count mismatch".into()));
        }
        let m = Self::build(ring, n, labels, |a, b| add[a][b], |r, x| action[r.index()][x])?;
        m.check_axioms(ring)?;
        Ok(m)
    }

    /// Abelian group laws, biadditivity of the action, and `(rs)m = r(sm)`.
    pub fn check_axioms(&self, ring: &FiniteRing) -> Result<()> {
        if ring.id() != self.ring_id {
            return Err(Error::RingMismatch);
        }
        let n = self.order;
        let e = Elem::from_index;
        for a in 0..n {
            for b in 0..n {
                if self.add(e(a), e(b)) != self.add(e(b), e(a)) {
                    return Err(Error::ModuleAxiom("addition not commutative".into()));
                }
                for c in 0..n {
                    if self.add(self.add(e(a), e(b)), e(c)) != self.add(e(a), self.add(e(b), e(c))) {
                        return Err(Error::ModuleAxiom("addition not associative".into()));
                    }
                }
            }
        }
        for r in ring.elements() {
            for a in 0..n {
                for b in 0..n {
                    if self.act(r, self.add(e(a), e(b))) != self.add(self.act(r, e(a)), self.act(r, e(b))) {
                        return Err(Error::ModuleAxiom(format!(
                            "{}·({} + {}) is not {}·{} + {}·{}",
                            ring.label(r),
                            self.label(e(a)),
                            self.label(e(b)),
                            ring.label(r),
                            self.label(e(a)),
                            ring.label(r),
                            self.label(e(b))
                        )));
                    }
                }
            }
        }
        for r in ring.elements() {
            for s in ring.elements() {
                for m in 0..n {
                    if self.act(ring.add(r, s), e(m)) != self.add(self.act(r, e(m)), self.act(s, e(m))) {
                        return Err(Error::ModuleAxiom(format!(
                            "({} + {})·{} does not distribute",
                            ring.label(r),
                            ring.label(s),
                            self.label(e(m))
                        )));
                    }
                }
            }
        }
        for &r in ring.add_gens() {
            for &s in ring.add_gens() {
                for &m in &self.add_gens {
                    if self.act(ring.mul(r, s), m) != self.act(r, self.act(s, m)) {
                        return Err(Error::ModuleAxiom(format!(
                            "({}{})·{} is not {}·({}·{})",
                            ring.label(r),
                            ring.label(s),
                            self.label(m),
                            ring.label(r),
                            ring.label(s),
                            self.label(m)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn ring_id(&self) -> u64 {
        self.ring_id
    }

    pub fn ring_order(&self) -> usize {
        self.ring_order
    }

    #[inline]
    pub fn act(&self, r: Elem, m: Elem) -> Elem {
        Elem::from_index(self.action[r.index() * self.order + m.index()] as usize)
    }

    pub fn add_gens(&self) -> &[Elem] {
        &self.add_gens
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label).map(Elem::from_index)
    }

    /// All R-submodules, as the join-closure of cyclic submodules `Zm + Rm`.
    pub fn submodules(&self, ring: &FiniteRing) -> Vec<Subgroup> {
        let cyclic: Vec<Subgroup> = {
            let mut seen = std::collections::HashSet::new();
            let mut out = Vec::new();
            for m in self.elements() {
                let s = self.generated_submodule(ring, [m]);
                if seen.insert(s.elements().clone()) {
                    out.push(s);
                }
            }
            out
        };
        join_closure(self, Subgroup::trivial(self), &cyclic)
    }

    /// Smallest submodule containing `xs`.
    pub fn generated_submodule(&self, ring: &FiniteRing, xs: impl IntoIterator<Item = Elem>) -> Subgroup {
        let mut s = Subgroup::trivial(self);
        let mut queue: Vec<Elem> = xs.into_iter().collect();
        while let Some(x) = queue.pop() {
            if s.extend(self, x) {
                queue.extend(ring.add_gens().iter().map(|&g| self.act(g, x)));
            }
        }
        s
    }

    /// Additive closure of `{p·m : p ∈ P, m ∈ M}`.
    pub fn ideal_times_module(&self, p: &Subgroup) -> Subgroup {
        let prods = p.gens().iter().flat_map(|&x| self.add_gens.iter().map(move |&m| (x, m)));
        Subgroup::generated(self, prods.map(|(x, m)| self.act(x, m)).collect::<Vec<_>>())
    }
}

impl Additive for FiniteModule {
    fn order(&self) -> usize {
        self.order
    }
    fn zero(&self) -> Elem {
        self.zero
    }
    #[inline]
    fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem::from_index(self.add[a.index() * self.order + b.index()] as usize)
    }
    fn neg(&self, a: Elem) -> Elem {
        Elem::from_index(self.neg[a.index()] as usize)
    }
    fn label(&self, a: Elem) -> &str {
        &self.labels[a.index()]
    }
}

/// Coset representatives (least member of each coset, increasing) and the
/// projection `x ↦ coset index`.
pub(crate) fn cosets<A: Additive + ?Sized>(a: &A, sub: &Subgroup) -> (Vec<Elem>, Vec<usize>) {
    const UNSET: usize = usize::MAX;
    let mut proj = vec![UNSET; a.order()];
    let mut reps = Vec::new();
    for x in a.elements() {
        if proj[x.index()] != UNSET {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &i in sub.members() {
            proj[a.add(x, i).index()] = c;
        }
    }
    (reps, proj)
}

/// Closes `start ∪ atoms` under pairwise joins, starting from `start` and
/// repeatedly joining atoms. Output sorted by size then content.
pub(crate) fn join_closure<A: Additive + ?Sized>(a: &A, start: Subgroup, atoms: &[Subgroup]) -> Vec<Subgroup> {
    let mut seen = std::collections::HashSet::new();
    seen.insert(start.elements().clone());
    let mut out = vec![start];
    let mut i = 0;
    while i < out.len() {
        for atom in atoms {
            if atom.is_subset(&out[i]) {
                continue;
            }
            let j = out[i].join(a, atom);
            if seen.insert(j.elements().clone()) {
                out.push(j);
            }
        }
        i += 1;
    }
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.elements().cmp(y.elements())));
    out
}
