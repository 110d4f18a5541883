//! The JSON report written by `--json`, and the small views it is built
//! from.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use gradealg::verify::fixtures::Finding;
use gradealg::{Additive, ElemSet, FiniteRing, Ideal, IdealOrWhole};

pub const REPORT_SCHEMA: &str = "gradealg-report/1";

/// Members are listed for ideals up to this size.
const LIST_MEMBERS: usize = 64;

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: Value,
    pub input_digest: Option<String>,
    pub result: Value,
    pub findings: Vec<Finding>,
    /// Wall-clock milliseconds; excluded from determinism comparisons.
    pub timings: BTreeMap<String, u64>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[derive(Debug, Serialize)]
pub struct IdealView {
    pub size: usize,
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<String>>,
}

impl IdealView {
    pub fn of(r: &FiniteRing, i: &Ideal) -> IdealView {
        IdealView {
            size: i.len(),
            generators: r.labels_of(i.gens().iter().copied()),
            members: (i.len() <= LIST_MEMBERS).then(|| r.labels_of(i.sorted_members())),
        }
    }

    pub fn brief(&self) -> String {
        if self.size == 1 {
            return "0".to_string();
        }
        format!("<{}> ({} elements)", self.generators.join(", "), self.size)
    }
}

/// An ideal, or the whole ring where a construction yields it by
/// convention.
#[derive(Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealOrWholeView {
    Ideal(IdealView),
    Whole,
}

impl IdealOrWholeView {
    pub fn of(r: &FiniteRing, i: &IdealOrWhole) -> IdealOrWholeView {
        match i {
            IdealOrWhole::Ideal(i) => IdealOrWholeView::Ideal(IdealView::of(r, i)),
            IdealOrWhole::Whole => IdealOrWholeView::Whole,
        }
    }

    pub fn brief(&self) -> String {
        match self {
            IdealOrWholeView::Ideal(v) => v.brief(),
            IdealOrWholeView::Whole => "R".to_string(),
        }
    }
}

pub fn set_labels(r: &FiniteRing, s: &ElemSet) -> Vec<String> {
    s.iter().map(|x| r.label(x).to_string()).collect()
}
