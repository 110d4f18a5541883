//! Ring specifications: a JSON description of a grading group, a ring
//! construction and a grading, loaded into a validated `GradedRing`.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use gradealg::construct::{self, matrix_label, parse_matrix_label};
use gradealg::ideal::generate;
use gradealg::{
    Additive, Elem, ElemSet, FiniteGroup, FiniteModule, FiniteRing, GradedModule, GradedRing, GroupElem, Sidedness,
    Subgroup,
};

pub const SPEC_SCHEMA: &str = "gradealg-ring-spec/1";

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub group: GroupDesc,
    pub ring: RingDesc,
    #[serde(default)]
    pub grading: GradingDesc,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupDesc {
    Cyclic(usize),
    Symmetric(usize),
    Table { mul: Vec<Vec<usize>>, labels: Option<Vec<String>> },
}

/// An element written by label, or by index.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ElemRef {
    Index(usize),
    Label(String),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum RingDesc {
    Modular(usize),
    ZeroMult(usize),
    Field {
        p: u64,
        k: u32,
    },
    Matrix {
        base: Box<RingDesc>,
        k: usize,
    },
    Product(Vec<Part>),
    Subring {
        of: Box<RingDesc>,
        elements: Vec<ElemRef>,
    },
    Quotient {
        of: Box<Part>,
        ideal_gens: Vec<ElemRef>,
    },
    Idealization {
        ring: Box<Part>,
        module: ModuleDesc,
        #[serde(default)]
        module_degree: Option<ElemRef>,
    },
    Bracket {
        ring: Box<Part>,
        module: ModuleDesc,
        #[serde(default)]
        module_degree: Option<ElemRef>,
    },
    Table {
        n: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    },
}

/// A ring together with the grading used when the enclosing grading is
/// `induced`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Part {
    pub ring: RingDesc,
    #[serde(default)]
    pub grading: GradingDesc,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleDesc {
    Regular,
    /// `R/I` for the left ideal generated by the listed elements.
    Quotient(Vec<ElemRef>),
    DirectSum(Vec<ModuleDesc>),
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GradingDesc {
    #[default]
    Trivial,
    /// Carried over from the parts of a product, quotient, idealization or
    /// bracket.
    Induced,
    /// Degrees of the matrix entry positions, row-major.
    Entries(Vec<ElemRef>),
    /// Full element lists per degree; unlisted degrees are zero.
    Components(BTreeMap<String, Vec<ElemRef>>),
}

impl RingSpec {
    pub fn parse(text: &str) -> Result<RingSpec> {
        let spec: RingSpec = serde_json::from_str(text)
            .map_err(|e| anyhow!("spec parse error at line {}, column {}: {e}", e.line(), e.column()))?;
        if let Some(s) = &spec.schema {
            if s != SPEC_SCHEMA {
                bail!("unsupported spec schema {s:?}; expected {SPEC_SCHEMA:?}");
            }
        }
        Ok(spec)
    }

    pub fn load(&self) -> Result<GradedRing> {
        let group = self.group.build().context("group")?;
        graded(&self.ring, &self.grading, &group).context("ring")
    }

    /// The explicit table form of a graded ring; loading it reproduces the
    /// same tables, labels and components.
    pub fn from_graded(gr: &GradedRing) -> RingSpec {
        let r = gr.ring();
        let n = r.order();
        let table = |f: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Vec<usize>> {
            r.elements().map(|a| r.elements().map(|b| f(a, b).index()).collect()).collect()
        };
        let g = gr.group();
        let components = g
            .elements()
            .filter(|&d| gr.component(d).len() > 1)
            .map(|d| {
                let members = gr.component(d).sorted_members().iter().map(|x| ElemRef::Index(x.index())).collect();
                (g.label(d).to_string(), members)
            })
            .collect();
        RingSpec {
            schema: Some(SPEC_SCHEMA.to_string()),
            group: GroupDesc::Table {
                mul: g.elements().map(|a| g.elements().map(|b| g.mul(a, b)).collect()).collect(),
                labels: Some(g.labels().to_vec()),
            },
            ring: RingDesc::Table {
                n,
                add: table(&|a, b| r.add(a, b)),
                mul: table(&|a, b| r.mul(a, b)),
                labels: Some(r.labels().to_vec()),
            },
            grading: GradingDesc::Components(components),
        }
    }
}

impl GroupDesc {
    fn build(&self) -> Result<FiniteGroup> {
        Ok(match self {
            GroupDesc::Cyclic(n) => FiniteGroup::cyclic(*n)?,
            GroupDesc::Symmetric(k) => FiniteGroup::symmetric(*k)?,
            GroupDesc::Table { mul, labels } => {
                let n = mul.len();
                let labels = labels.clone().unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
                FiniteGroup::from_table(mul.iter().flatten().copied().collect(), labels)?
            }
        })
    }
}

pub fn resolve(r: &impl Additive, e: &ElemRef) -> Result<Elem> {
    match e {
        ElemRef::Index(i) if *i < r.order() => Ok(Elem::from_index(*i)),
        ElemRef::Index(i) => bail!("element index {i} out of range for order {}", r.order()),
        ElemRef::Label(l) => find_label(r, l),
    }
}

fn find_label(r: &impl Additive, label: &str) -> Result<Elem> {
    r.elements().find(|&x| r.label(x) == label).ok_or_else(|| anyhow!("unknown element {label:?}"))
}

pub fn resolve_degree(g: &FiniteGroup, e: &ElemRef) -> Result<GroupElem> {
    match e {
        ElemRef::Index(i) if *i < g.order() => Ok(*i),
        ElemRef::Index(i) => bail!("degree {i} out of range for a group of order {}", g.order()),
        ElemRef::Label(l) => g.find(l).ok_or_else(|| anyhow!("unknown degree {l:?}")),
    }
}

fn plain(desc: &RingDesc) -> Result<FiniteRing> {
    Ok(match desc {
        RingDesc::Modular(n) => construct::cyclic(*n)?,
        RingDesc::ZeroMult(n) => construct::zero_mult(*n)?,
        RingDesc::Field { p, k } => construct::field(*p, *k)?,
        RingDesc::Matrix { base, k } => construct::matrix(&plain(base)?, *k)?,
        RingDesc::Product(parts) => {
            let rings = parts.iter().map(|p| plain(&p.ring)).collect::<Result<Vec<_>>>()?;
            construct::product(&rings.iter().collect::<Vec<_>>())?
        }
        RingDesc::Subring { of, elements } => {
            let parent = plain(of)?;
            let xs = elements.iter().map(|e| resolve(&parent, e)).collect::<Result<Vec<_>>>()?;
            construct::subring(&parent, &generated_subring(&parent, xs))?.0
        }
        RingDesc::Quotient { of, ideal_gens } => {
            let parent = plain(&of.ring)?;
            let gens = ideal_gens.iter().map(|e| resolve(&parent, e)).collect::<Result<Vec<_>>>()?;
            construct::quotient(&parent, &generate(&parent, gens, Sidedness::TwoSided))?.0
        }
        RingDesc::Idealization { ring, module, .. } => {
            let base = plain(&ring.ring)?;
            construct::idealization(&base, &module_of(&base, module)?)?
        }
        RingDesc::Bracket { ring, module, .. } => {
            let base = plain(&ring.ring)?;
            construct::bracket(&base, &module_of(&base, module)?)?
        }
        RingDesc::Table { n, add, mul, labels } => {
            if add.len() != *n || mul.len() != *n {
                bail!("table rows do not match n = {n}");
            }
            FiniteRing::from_tables(add.clone(), mul.clone(), labels.clone())?
        }
    })
}

/// The smallest subring containing `xs`.
fn generated_subring(r: &FiniteRing, xs: Vec<Elem>) -> ElemSet {
    let mut s = Subgroup::generated(r, xs);
    loop {
        let members = s.members().to_vec();
        let mut grew = false;
        for &a in &members {
            for &b in &members {
                grew |= s.extend(r, r.mul(a, b));
            }
        }
        if !grew {
            return s.elements().clone();
        }
    }
}

fn module_of(base: &FiniteRing, desc: &ModuleDesc) -> Result<FiniteModule> {
    Ok(match desc {
        ModuleDesc::Regular => FiniteModule::regular(base)?,
        ModuleDesc::Quotient(gens) => {
            let xs = gens.iter().map(|e| resolve(base, e)).collect::<Result<Vec<_>>>()?;
            FiniteModule::quotient_of_regular(base, &generate(base, xs, Sidedness::Left))?
        }
        ModuleDesc::DirectSum(parts) => {
            let ms = parts.iter().map(|p| module_of(base, p)).collect::<Result<Vec<_>>>()?;
            FiniteModule::direct_sum(base, &ms.iter().collect::<Vec<_>>())?
        }
    })
}

fn graded(desc: &RingDesc, grading: &GradingDesc, group: &FiniteGroup) -> Result<GradedRing> {
    match grading {
        GradingDesc::Trivial => Ok(GradedRing::trivial(plain(desc)?, group.clone())),
        GradingDesc::Entries(degrees) => {
            let ds = degrees.iter().map(|d| resolve_degree(group, d)).collect::<Result<Vec<_>>>()?;
            Ok(GradedRing::by_entry_degrees(plain(desc)?, group.clone(), &ds)?)
        }
        GradingDesc::Components(map) => {
            let ring = plain(desc)?;
            let lists = map
                .iter()
                .map(|(d, xs)| {
                    let g = resolve_degree(group, &degree_ref(d))?;
                    let xs = xs.iter().map(|e| resolve(&ring, e)).collect::<Result<Vec<_>>>()?;
                    Ok((g, xs))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(GradedRing::from_component_lists(ring, group.clone(), &lists)?)
        }
        GradingDesc::Induced => induced(desc, group),
    }
}

/// Map keys are degree labels, falling back to indices.
fn degree_ref(key: &str) -> ElemRef {
    ElemRef::Label(key.to_string())
}

fn induced(desc: &RingDesc, group: &FiniteGroup) -> Result<GradedRing> {
    let part = |p: &Part| graded(&p.ring, &p.grading, group);
    match desc {
        RingDesc::Product(parts) => {
            let grs = parts.iter().map(part).collect::<Result<Vec<_>>>()?;
            Ok(GradedRing::product(&grs.iter().collect::<Vec<_>>())?)
        }
        RingDesc::Quotient { of, ideal_gens } => {
            let base = part(of)?;
            let r = base.ring();
            let gens = ideal_gens.iter().map(|e| resolve(r, e)).collect::<Result<Vec<_>>>()?;
            let ideal = generate(r, gens, Sidedness::TwoSided);
            Ok(base.quotient(&ideal)?.0)
        }
        RingDesc::Idealization { ring, module, module_degree } | RingDesc::Bracket { ring, module, module_degree } => {
            let base = part(ring)?;
            let m = module_of(base.ring(), module)?;
            let g = match module_degree {
                Some(d) => resolve_degree(group, d)?,
                None => group.identity(),
            };
            let gm = GradedModule::concentrated(&base, m, g)?;
            Ok(match desc {
                RingDesc::Idealization { .. } => base.idealization(&gm)?,
                _ => base.bracket(&gm)?,
            })
        }
        _ => bail!("an induced grading needs a product, quotient, idealization or bracket"),
    }
}

/// Splits a generator list at top-level commas, so tuple and matrix labels
/// stay whole.
pub fn split_list(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

/// Reads one element: a label, `#i` for an index, `c·Eij` / `c*Eij` / `Eij`
/// for a matrix unit multiple, or `(a b)` for a matrix whose other rows are
/// zero.
pub fn parse_elem(r: &FiniteRing, token: &str) -> Result<Elem> {
    if let Some(i) = token.strip_prefix('#') {
        let i: usize = i.parse().with_context(|| format!("bad index {token:?}"))?;
        return resolve(r, &ElemRef::Index(i));
    }
    if let Ok(x) = find_label(r, token) {
        return Ok(x);
    }
    if let Some(x) = matrix_unit(r, token).or_else(|| first_row(r, token)) {
        return x;
    }
    if token == "0" {
        return Ok(r.zero());
    }
    bail!("unknown element {token:?}; run `gradealg elements` for the label table")
}

fn matrix_unit(r: &FiniteRing, token: &str) -> Option<Result<Elem>> {
    let (coeff, unit) = match token.split_once(['·', '*']) {
        Some((c, u)) => (c.trim(), u.trim()),
        None => ("1", token.trim()),
    };
    let digits = unit.strip_prefix('E')?;
    let (i, j) = match digits.as_bytes() {
        [a, b] if a.is_ascii_digit() && b.is_ascii_digit() => ((a - b'1') as usize, (b - b'1') as usize),
        _ => return None,
    };
    let rows = parse_matrix_label(r.label(r.zero()))?;
    let k = rows.len();
    if i >= k || j >= k {
        return Some(Err(anyhow!("{token:?} is outside a {k}x{k} matrix")));
    }
    let mut entries: Vec<String> = rows.concat();
    entries[i * k + j] = coeff.to_string();
    let label = matrix_label(&entries, k);
    Some(find_label(r, &label).with_context(|| format!("{token:?} reads as {label}, which is not in the ring")))
}

fn first_row(r: &FiniteRing, token: &str) -> Option<Result<Elem>> {
    let inner = token.strip_prefix('(')?.strip_suffix(')')?;
    if inner.contains([';', ',']) {
        return None;
    }
    let row: Vec<&str> = inner.split_whitespace().collect();
    let k = parse_matrix_label(r.label(r.zero()))?.len();
    if row.len() != k {
        return None;
    }
    let mut entries = vec!["0"; k * k];
    entries[..k].copy_from_slice(&row);
    let label = matrix_label(&entries, k);
    Some(find_label(r, &label).with_context(|| format!("{token:?} reads as {label}, which is not in the ring")))
}

pub fn parse_elems(r: &FiniteRing, list: &str) -> Result<Vec<Elem>> {
    split_list(list).iter().map(|t| parse_elem(r, t)).collect()
}

pub fn parse_degree(g: &FiniteGroup, s: &str) -> Result<GroupElem> {
    match g.find(s) {
        Some(d) => Ok(d),
        None => match s.parse::<usize>() {
            Ok(i) => resolve_degree(g, &ElemRef::Index(i)),
            Err(_) => bail!("unknown degree {s:?}"),
        },
    }
}

/// SHA-256 over the group table, ring tables, labels and components.
pub fn digest(gr: &GradedRing) -> String {
    let mut h = Sha256::new();
    let r = gr.ring();
    let g = gr.group();
    let mut word = |x: usize| h.update((x as u64).to_le_bytes());
    word(g.order());
    g.table().iter().for_each(|&x| word(x));
    word(r.order());
    r.add_table().iter().for_each(|&x| word(x as usize));
    r.mul_table().iter().for_each(|&x| word(x as usize));
    for d in g.elements() {
        let c = gr.component(d);
        word(c.len());
        c.sorted_members().iter().for_each(|x| word(x.index()));
    }
    for l in g.labels().iter().chain(r.labels()) {
        h.update((l.len() as u64).to_le_bytes());
        h.update(l.as_bytes());
    }
    hex::encode(h.finalize())
}

#[cfg(test)]
mod tests {
    use super::*;

    const FX5: &str = r#"{
        "group": {"cyclic": 4},
        "ring": {"subring": {"of": {"matrix": {"base": {"modular": 4}, "k": 2}},
                 "elements": ["(0 0;0 0)", "(0 2;0 0)", "(1 0;0 0)", "(1 2;0 0)", "(2 0;0 0)", "(2 2;0 0)", "(3 0;0 0)", "(3 2;0 0)"]}},
        "grading": {"entries": ["0", "2", "2", "0"]}
    }"#;

    #[test]
    fn loads_row_ring() {
        let gr = RingSpec::parse(FX5).unwrap().load().unwrap();
        assert_eq!(gr.ring().order(), 8);
        assert_eq!(gr.component(2).len(), 2);
    }

    #[test]
    fn table_form_round_trips() {
        let gr = RingSpec::parse(FX5).unwrap().load().unwrap();
        let table = RingSpec::from_graded(&gr);
        let text = serde_json::to_string(&table).unwrap();
        let again = RingSpec::parse(&text).unwrap().load().unwrap();
        assert_eq!(digest(&gr), digest(&again));
    }

    #[test]
    fn split_keeps_tuples() {
        assert_eq!(split_list("(1,0,0), (0,0,1)"), ["(1,0,0)", "(0,0,1)"]);
        assert_eq!(split_list("(0,[1])"), ["(0,[1])"]);
        assert_eq!(split_list("2·E11,2·E12"), ["2·E11", "2·E12"]);
    }

    #[test]
    fn matrix_units() {
        let r = construct::matrix(&construct::cyclic(8).unwrap(), 2).unwrap();
        assert_eq!(r.label(parse_elem(&r, "2·E12").unwrap()), "(0 2;0 0)");
        assert_eq!(r.label(parse_elem(&r, "E21").unwrap()), "(0 0;1 0)");
        assert_eq!(r.label(parse_elem(&r, "#0").unwrap()), "(0 0;0 0)");
        assert!(parse_elem(&r, "E31").is_err());
        assert_eq!(r.label(parse_elem(&r, "(3 1)").unwrap()), "(3 1;0 0)");
    }

    #[test]
    fn subring_from_generators() {
        let spec = r#"{"group": {"cyclic": 2}, "ring": {"subring": {"of": {"matrix": {"base": {"modular": 2}, "k": 2}}, "elements": ["E11", "E12", "E22"]}}}"#;
        let spec = spec.replace("E11", "(1 0;0 0)").replace("E12", "(0 1;0 0)").replace("E22", "(0 0;0 1)");
        assert_eq!(RingSpec::parse(&spec).unwrap().load().unwrap().ring().order(), 8);
    }

    #[test]
    fn parse_errors_carry_location() {
        let err = RingSpec::parse("{\"group\": {\"cyclic\": 2},\n \"ring\": {\"modular\": }}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }
}
