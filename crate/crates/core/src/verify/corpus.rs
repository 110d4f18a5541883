//! A deterministic stream of small graded rings built from recipes.

use crate::check::Caps;
use crate::construct::{cyclic, field, matrix, zero_mult};
use crate::error::Result;
use crate::grading::{GradedModule, GradedRing};
use crate::ideal::{generate, Ideal, Sidedness};
use crate::lattice::all_graded_ideals;
use crate::module::FiniteModule;
use crate::ring::{Additive, FiniteRing};

use super::recipes::{
    checkerboard, even_corner, gf4_corner, in_degree_one, row_ring, shaped_3x3, strictly_upper_3x3, trivially,
    upper_triangular, z4_entries,
};

/// How a corpus ring was built, where a theorem needs the pieces.
#[derive(Clone, Debug)]
pub enum Origin {
    Recipe,
    Product(Vec<GradedRing>),
    Quotient,
    Idealization { base: GradedRing, module: GradedModule },
    Bracket { base: GradedRing, module: GradedModule },
}

#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub name: String,
    pub ring: GradedRing,
    pub origin: Origin,
}

impl CorpusItem {
    pub fn new(name: impl Into<String>, ring: GradedRing) -> Self {
        CorpusItem { name: name.into(), ring, origin: Origin::Recipe }
    }
}

/// Default order bound of the corpus.
pub const DEFAULT_MAX_ORDER: usize = 64;

struct Builder {
    max: usize,
    items: Vec<CorpusItem>,
}

impl Builder {
    fn fits(&self, order: usize) -> bool {
        order <= self.max
    }

    fn push(&mut self, name: String, ring: GradedRing, origin: Origin) {
        if self.fits(ring.ring().order()) {
            self.items.push(CorpusItem { name, ring, origin });
        }
    }

    /// Trivial grading and, when given entry size `k`, the matrix gradings.
    fn gradings(&mut self, name: &str, ring: FiniteRing, k: Option<usize>) -> Result<()> {
        if !self.fits(ring.order()) {
            return Ok(());
        }
        self.push(name.to_string(), trivially(ring.clone()), Origin::Recipe);
        if let Some(k) = k {
            self.push(format!("{name} [Z2 checkerboard]"), checkerboard(ring.clone(), k)?, Origin::Recipe);
            if k == 2 {
                self.push(format!("{name} [Z4 entries]"), z4_entries(ring)?, Origin::Recipe);
            }
        }
        Ok(())
    }
}

fn small_factors() -> Result<Vec<(&'static str, FiniteRing)>> {
    Ok(vec![("Z2", cyclic(2)?), ("Z3", cyclic(3)?), ("Z4", cyclic(4)?), ("S2", zero_mult(2)?), ("F4", field(2, 2)?)])
}

/// The corpus up to `max_order`, in a fixed order.
pub fn corpus(max_order: usize) -> Result<Vec<CorpusItem>> {
    let mut b = Builder { max: max_order, items: Vec::new() };

    for n in 1..=max_order {
        b.push(format!("Z{n}"), trivially(cyclic(n)?), Origin::Recipe);
    }
    for n in 2..=max_order.min(16) {
        b.push(format!("S{n}"), trivially(zero_mult(n)?), Origin::Recipe);
    }
    for (p, k) in [(2usize, 2u32), (3, 2), (2, 3), (2, 4)] {
        if b.fits(p.pow(k)) {
            b.push(format!("F{}", p.pow(k)), trivially(field(p as u64, k)?), Origin::Recipe);
        }
    }

    let factors = small_factors()?;
    let n = factors.len();
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        for j in i..n {
            tuples.push(vec![i, j]);
            for k in j..n {
                tuples.push(vec![i, j, k]);
            }
        }
    }
    tuples.sort_by_key(|t| t.len());
    for t in tuples {
        let order: usize = t.iter().map(|&i| factors[i].1.order()).product();
        if !b.fits(order) {
            continue;
        }
        let graded: Vec<GradedRing> = t.iter().map(|&i| trivially(factors[i].1.clone())).collect();
        let refs: Vec<&GradedRing> = graded.iter().collect();
        let name = t.iter().map(|&i| factors[i].0).collect::<Vec<_>>().join("x");
        b.push(name, GradedRing::product(&refs)?, Origin::Product(graded));
    }

    let f2 = cyclic(2)?;
    let f3 = cyclic(3)?;
    for (kn, k) in [("F2", &f2), ("F3", &f3)] {
        for sn in [2, 3] {
            let s = in_degree_one(zero_mult(sn)?)?;
            let order = k.order() * sn * sn;
            if b.fits(order) {
                let kk = trivially(k.clone());
                let ring = GradedRing::product(&[&kk, &s, &s])?;
                b.push(format!("{kn}xS{sn}xS{sn} [Z2 K+S+S]"), ring, Origin::Product(vec![kk, s.clone(), s]));
            }
        }
    }

    let t2 = checkerboard(upper_triangular(&f2)?, 2)?;
    let m2 = checkerboard(matrix(&f2, 2)?, 2)?;
    let pairs: Vec<(&str, GradedRing, &str, GradedRing)> = vec![
        ("T2(F2)", t2.clone(), "F2", trivially(f2.clone())),
        ("T2(F2)", t2.clone(), "Z3", trivially(f3.clone())),
        ("T2(F2)", t2.clone(), "S2", in_degree_one(zero_mult(2)?)?),
        ("M2(F2)", m2.clone(), "F2", trivially(f2.clone())),
        ("T2(F2)", t2.clone(), "T2(F2)", t2.clone()),
    ];
    for (an, a, bn, bb) in pairs {
        if b.fits(a.ring().order() * bb.ring().order()) {
            let ring = GradedRing::product(&[&a, &bb])?;
            b.push(format!("{an}x{bn} [Z2 checkerboard x]"), ring, Origin::Product(vec![a, bb]));
        }
    }

    let seeds_start = b.items.len();
    for (name, base) in
        [("F2", f2.clone()), ("S2", zero_mult(2)?), ("Z3", f3.clone()), ("Z4", cyclic(4)?), ("F4", field(2, 2)?)]
    {
        if b.fits(base.order().pow(4)) {
            b.gradings(&format!("M2({name})"), matrix(&base, 2)?, Some(2))?;
        }
        if b.fits(base.order().pow(3)) {
            b.gradings(&format!("T2({name})"), upper_triangular(&base)?, Some(2))?;
        }
    }
    b.gradings("U3(F2)", strictly_upper_3x3(&f2)?, Some(3))?;
    b.gradings("(0 F2 F2;0 F2 F2;0 0 0)", shaped_3x3(&f2)?, Some(3))?;
    b.gradings("(Z4 2Z4;0 0)", row_ring()?, Some(2))?;
    b.gradings("(Z4 2Z4;0 Z4)", even_corner()?, Some(2))?;
    b.gradings("(F2 GF4;0 F2)", gf4_corner()?, Some(2))?;
    let seeds: Vec<CorpusItem> = b.items[seeds_start..].to_vec();

    let caps = Caps::default();
    for seed in seeds.iter().filter(|s| s.ring.ring().order() <= 32) {
        let lat = all_graded_ideals(&seed.ring, &caps)?;
        for i in 1..lat.top() {
            let ideal = lat.get(i);
            let (q, _) = seed.ring.quotient(ideal)?;
            let gens = seed.ring.ring().labels_of(ideal.gens().iter().copied()).join(", ");
            b.push(format!("{} / <{gens}>", seed.name), q, Origin::Quotient);
        }
    }

    for (name, base, modules) in module_recipes()? {
        for (mname, module) in modules {
            for degree in [0, 1] {
                let gr = trivially(base.clone());
                let gm = GradedModule::concentrated(&gr, module.clone(), degree)?;
                let tag = if degree == 0 { "" } else { " [module in degree 1]" };
                if !b.fits(base.order() * module.order()) {
                    continue;
                }
                let idl = gr.idealization(&gm)?;
                b.push(
                    format!("{name}(+){mname}{tag}"),
                    idl,
                    Origin::Idealization { base: gr.clone(), module: gm.clone() },
                );
                let br = gr.bracket(&gm)?;
                b.push(format!("[{name},{mname}]{tag}"), br, Origin::Bracket { base: gr, module: gm });
            }
        }
    }

    Ok(b.items)
}

type ModuleRecipe = (&'static str, FiniteRing, Vec<(&'static str, FiniteModule)>);

fn module_recipes() -> Result<Vec<ModuleRecipe>> {
    let z2 = cyclic(2)?;
    let z3 = cyclic(3)?;
    let z4 = cyclic(4)?;
    let f4 = field(2, 2)?;
    let two: Ideal = generate(&z4, [z4.elem("2")?], Sidedness::TwoSided);
    let z2_reg = FiniteModule::regular(&z2)?;
    Ok(vec![
        ("Z2", z2.clone(), vec![("Z2", z2_reg.clone()), ("Z2^2", FiniteModule::direct_sum(&z2, &[&z2_reg, &z2_reg])?)]),
        ("Z3", z3.clone(), vec![("Z3", FiniteModule::regular(&z3)?)]),
        (
            "Z4",
            z4.clone(),
            vec![("Z4", FiniteModule::regular(&z4)?), ("Z2", FiniteModule::quotient_of_regular(&z4, &two)?)],
        ),
        ("F4", f4.clone(), vec![("F4", FiniteModule::regular(&f4)?)]),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus() {
        let c = corpus(8).unwrap();
        assert!(c.len() >= 20, "{}", c.len());
        let names: Vec<&str> = c.iter().map(|i| i.name.as_str()).collect();
        assert!(names.contains(&"F2xS2xS2 [Z2 K+S+S]"));
        assert!(names.contains(&"S2xS2xS2"));
        assert!(names.contains(&"(Z4 2Z4;0 0) [Z4 entries]"));
        assert!(c.iter().all(|i| i.ring.ring().order() <= 8));
    }

    #[test]
    fn deterministic() {
        let a = corpus(16).unwrap();
        let b = corpus(16).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.ring.ring().add_table(), y.ring.ring().add_table());
            assert_eq!(x.ring.ring().mul_table(), y.ring.ring().mul_table());
        }
    }
}
