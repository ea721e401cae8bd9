//! Three-valued verdicts with certificates.

use serde::Serialize;

use crate::json::{ser_matrix, ser_rats, ser_space};
use crate::linalg::{Matrix, Rat, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    ProvenTrue,
    ProvenFalse,
    Unknown,
}

/// Machine-checkable evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Element {
        #[serde(serialize_with = "ser_rats")]
        vector: Vec<Rat>,
    },
    Pair {
        #[serde(serialize_with = "ser_rats")]
        x: Vec<Rat>,
        #[serde(serialize_with = "ser_rats")]
        y: Vec<Rat>,
    },
    Subspace {
        #[serde(serialize_with = "ser_space")]
        space: Subspace,
    },
    Matrix {
        #[serde(serialize_with = "ser_matrix")]
        matrix: Matrix,
    },
}

/// A verdict plus the rule that produced it. `ProvenFalse` verdicts produced
/// by refutation carry a witness; `Unknown` carries a reason in `note`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriState {
    pub verdict: Verdict,
    pub rule: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl TriState {
    pub fn proven_true(rule: impl Into<String>) -> Self {
        TriState { verdict: Verdict::ProvenTrue, rule: rule.into(), note: String::new(), witness: None }
    }

    pub fn proven_false(rule: impl Into<String>, witness: Option<Witness>) -> Self {
        TriState { verdict: Verdict::ProvenFalse, rule: rule.into(), note: String::new(), witness }
    }

    pub fn unknown(reason: impl Into<String>) -> Self {
        TriState { verdict: Verdict::Unknown, rule: "undecided".into(), note: reason.into(), witness: None }
    }

    pub fn decided(value: bool, rule: impl Into<String>) -> Self {
        if value {
            TriState::proven_true(rule)
        } else {
            TriState::proven_false(rule, None)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn is_true(&self) -> bool {
        self.verdict == Verdict::ProvenTrue
    }

    pub fn is_false(&self) -> bool {
        self.verdict == Verdict::ProvenFalse
    }

    pub fn is_unknown(&self) -> bool {
        self.verdict == Verdict::Unknown
    }

    /// `Some(b)` when decided.
    pub fn as_bool(&self) -> Option<bool> {
        match self.verdict {
            Verdict::ProvenTrue => Some(true),
            Verdict::ProvenFalse => Some(false),
            Verdict::Unknown => None,
        }
    }
}

impl Witness {
    pub fn element(v: &[Rat]) -> Self {
        Witness::Element { vector: v.to_vec() }
    }

    pub fn space(s: &Subspace) -> Self {
        Witness::Subspace { space: s.clone() }
    }

    pub fn element_vector(&self) -> Option<&Vec<Rat>> {
        match self {
            Witness::Element { vector } => Some(vector),
            _ => None,
        }
    }
}
