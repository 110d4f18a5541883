//! Verdicts, certificates and enumeration caps shared by all predicates.

use std::fmt;

use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElem};
use crate::ideal::Ideal;
use crate::ring::{Additive, Elem, FiniteRing};
use crate::subgroup::Subgroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "inapplicable",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// A single ring element.
    Element,
    /// An additive subgroup, listed by additive generators.
    Ideal,
    /// An explicit element set, listed in full.
    Set,
    /// A grading group element.
    Degree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessItem {
    pub role: String,
    pub kind: WitnessKind,
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
}

impl WitnessItem {
    pub fn elems(&self) -> impl Iterator<Item = Elem> + '_ {
        self.indices.iter().map(|&i| Elem::from_index(i))
    }

    /// The single element of an `Element` witness.
    pub fn elem(&self) -> Elem {
        Elem::from_index(self.indices[0])
    }

    pub fn degree(&self) -> GroupElem {
        self.indices[0]
    }
}

/// Named witnesses backing a verdict. Replaying them against the definition
/// reproduces the verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub items: Vec<WitnessItem>,
}

impl Certificate {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn element(mut self, role: &str, ring: &impl Additive, x: Elem) -> Self {
        self.items.push(WitnessItem {
            role: role.into(),
            kind: WitnessKind::Element,
            indices: vec![x.index()],
            labels: vec![ring.label(x).to_string()],
        });
        self
    }

    pub fn ideal(mut self, role: &str, ring: &impl Additive, s: &Subgroup) -> Self {
        let mut gens = s.gens().to_vec();
        gens.sort();
        self.items.push(WitnessItem {
            role: role.into(),
            kind: WitnessKind::Ideal,
            indices: gens.iter().map(|g| g.index()).collect(),
            labels: gens.iter().map(|&g| ring.label(g).to_string()).collect(),
        });
        self
    }

    pub fn set(mut self, role: &str, ring: &impl Additive, s: &ElemSet) -> Self {
        self.items.push(WitnessItem {
            role: role.into(),
            kind: WitnessKind::Set,
            indices: s.iter().map(|x| x.index()).collect(),
            labels: s.iter().map(|x| ring.label(x).to_string()).collect(),
        });
        self
    }

    pub fn degree(mut self, role: &str, group: &FiniteGroup, g: GroupElem) -> Self {
        self.items.push(WitnessItem {
            role: role.into(),
            kind: WitnessKind::Degree,
            indices: vec![g],
            labels: vec![group.label(g).to_string()],
        });
        self
    }

    pub fn get(&self, role: &str) -> Option<&WitnessItem> {
        self.items.iter().find(|w| w.role == role)
    }

    /// The additive subgroup named by `role`, regenerated from its generators.
    pub fn subgroup(&self, role: &str, ring: &FiniteRing) -> Option<Subgroup> {
        let w = self.get(role)?;
        match w.kind {
            WitnessKind::Ideal | WitnessKind::Set => Some(Subgroup::generated(ring, w.elems())),
            _ => None,
        }
    }

    pub fn elem_set(&self, role: &str, universe: usize) -> Option<ElemSet> {
        self.get(role).map(|w| ElemSet::from_elems(universe, w.elems()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub verdict: Verdict,
    pub certificate: Certificate,
    pub narration: String,
}

impl CheckResult {
    pub fn pass(narration: impl Into<String>) -> Self {
        CheckResult { verdict: Verdict::Pass, certificate: Certificate::new(), narration: narration.into() }
    }

    pub fn fail(certificate: Certificate, narration: impl Into<String>) -> Self {
        CheckResult { verdict: Verdict::Fail, certificate, narration: narration.into() }
    }

    pub fn inapplicable(narration: impl Into<String>) -> Self {
        CheckResult { verdict: Verdict::Inapplicable, certificate: Certificate::new(), narration: narration.into() }
    }

    pub fn from_bool(ok: bool, narration: impl Into<String>) -> Self {
        if ok {
            Self::pass(narration)
        } else {
            Self::fail(Certificate::new(), narration)
        }
    }

    pub fn with_certificate(mut self, certificate: Certificate) -> Self {
        self.certificate = certificate;
        self
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

/// A property decided twice, once from the definition and once through a
/// characterization of it.
#[derive(Clone, Debug, Serialize)]
pub struct DualCheck {
    pub direct: CheckResult,
    pub via_characterization: CheckResult,
}

impl DualCheck {
    pub fn agree(&self) -> bool {
        self.direct.verdict == self.via_characterization.verdict
    }
}

/// Result of an operation that yields the whole ring by convention rather
/// than as a computed ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealOrWhole {
    Ideal(Ideal),
    Whole,
}

impl IdealOrWhole {
    pub fn ideal(&self) -> Option<&Ideal> {
        match self {
            IdealOrWhole::Ideal(i) => Some(i),
            IdealOrWhole::Whole => None,
        }
    }

    pub fn is_whole(&self) -> bool {
        matches!(self, IdealOrWhole::Whole)
    }

    /// The element set, with the marker read as the full ring.
    pub fn elements(&self, ring: &FiniteRing) -> ElemSet {
        match self {
            IdealOrWhole::Ideal(i) => i.elements().clone(),
            IdealOrWhole::Whole => ring.all(),
        }
    }
}

/// Size limits for the exhaustive loops.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Largest ring order whose ideal lattice is enumerated.
    pub lattice: usize,
    /// Largest component enumerated for `R_e`-submodules.
    pub submodule: usize,
    /// Largest component whose subsets are enumerated; singletons above it.
    pub powerset: usize,
    /// Largest `|h(R) - 0|` for the graded weakly system enumeration.
    pub systems: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { lattice: 4096, submodule: 64, powerset: 12, systems: 16 }
    }
}

impl Caps {
    pub const ENV: &'static str = "GRADEALG_CAPS";

    /// Applies overrides of the form `lattice=512,powerset=10`.
    pub fn parse_overrides(mut self, s: &str) -> Result<Caps> {
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidArgument(format!("cap override {part:?} is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("cap value {value:?} is not a number")))?;
            match key.trim() {
                "lattice" => self.lattice = value,
                "submodule" => self.submodule = value,
                "powerset" => self.powerset = value,
                "systems" => self.systems = value,
                other => return Err(Error::InvalidArgument(format!("unknown cap {other:?}"))),
            }
        }
        if self.systems > 24 {
            return Err(Error::InvalidArgument("systems cap above 24 is not supported".into()));
        }
        if self.powerset > 24 {
            return Err(Error::InvalidArgument("powerset cap above 24 is not supported".into()));
        }
        Ok(self)
    }

    /// Defaults overridden by `GRADEALG_CAPS` when set.
    pub fn from_env() -> Result<Caps> {
        match std::env::var(Self::ENV) {
            Ok(s) => Caps::default().parse_overrides(&s),
            Err(_) => Ok(Caps::default()),
        }
    }

    pub(crate) fn require(what: &'static str, size: usize, cap: usize) -> Result<()> {
        if size > cap {
            Err(Error::CapExceeded { what, size, cap })
        } else {
            Ok(())
        }
    }
}
