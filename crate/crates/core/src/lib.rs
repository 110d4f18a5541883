//! Exact computations with finite graded rings: constructions, gradings,
//! ideal lattices, the graded prime and weakly prime families, the radicals
//! GP and GN, the operator GW, and a registry of checkable facts.

pub mod check;
pub mod construct;
pub mod elemset;
pub mod error;
pub mod grading;
pub mod group;
pub mod ideal;
pub mod lattice;
pub mod module;
pub mod prime;
pub mod ring;
pub mod subgroup;
pub mod total;
pub mod verify;

pub use check::{Caps, Certificate, CheckResult, DualCheck, IdealOrWhole, Verdict};
pub use elemset::ElemSet;
pub use error::{Error, GradingError, Result};
pub use grading::{GradedModule, GradedRing};
pub use group::{FiniteGroup, GroupElem};
pub use ideal::{Ideal, Sidedness};
pub use module::FiniteModule;
pub use ring::{Additive, Elem, FiniteRing};
pub use subgroup::Subgroup;
