use serde::{Deserialize, Serialize};

use crate::ring::{EquivariantClass, LaurentPoly};

/// A variety described by how it is assembled, evaluated to its class by the
/// quotient calculus in [`evaluate`](super::evaluate).
///
/// Serialized as a tagged union on `"kind"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MotiveExpr {
    /// A named piece with a pinned class. A zero class stands for the empty
    /// variety.
    Atom { label: String, class: LaurentPoly },
    /// Finite disjoint union of locally closed pieces.
    Disjoint { parts: Vec<MotiveExpr> },
    /// Total space of a fibration with trivial monodromy.
    Fibration {
        fiber: Box<MotiveExpr>,
        base: Box<MotiveExpr>,
    },
    /// Base of a principal bundle `total → total / group`.
    PrincipalQuotient {
        total: Box<MotiveExpr>,
        group: Box<MotiveExpr>,
    },
    /// Quotient of a Z2-variety by its involution.
    Z2Quotient {
        label: String,
        arg: EquivariantClass,
    },
    /// Quotient computed on a core: the expression stands for the quotient of
    /// the variety named by `label`, and evaluates `core` in its place.
    CoreReplace {
        label: String,
        justification: String,
        core: Box<MotiveExpr>,
    },
}

impl MotiveExpr {
    pub fn atom(label: impl Into<String>, class: LaurentPoly) -> Self {
        Self::Atom {
            label: label.into(),
            class,
        }
    }

    pub fn disjoint(parts: Vec<MotiveExpr>) -> Self {
        Self::Disjoint { parts }
    }

    pub fn fibration(fiber: MotiveExpr, base: MotiveExpr) -> Self {
        Self::Fibration {
            fiber: Box::new(fiber),
            base: Box::new(base),
        }
    }

    pub fn principal_quotient(total: MotiveExpr, group: MotiveExpr) -> Self {
        Self::PrincipalQuotient {
            total: Box::new(total),
            group: Box::new(group),
        }
    }

    pub fn z2_quotient(label: impl Into<String>, arg: EquivariantClass) -> Self {
        Self::Z2Quotient {
            label: label.into(),
            arg,
        }
    }

    pub fn core_replace(
        label: impl Into<String>,
        justification: impl Into<String>,
        core: MotiveExpr,
    ) -> Self {
        Self::CoreReplace {
            label: label.into(),
            justification: justification.into(),
            core: Box::new(core),
        }
    }

    /// Direct subexpressions, in evaluation order.
    pub fn children(&self) -> Vec<&MotiveExpr> {
        match self {
            Self::Atom { .. } | Self::Z2Quotient { .. } => Vec::new(),
            Self::Disjoint { parts } => parts.iter().collect(),
            Self::Fibration { fiber, base } => vec![fiber, base],
            Self::PrincipalQuotient { total, group } => vec![total, group],
            Self::CoreReplace { core, .. } => vec![core],
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .children()
            .iter()
            .map(|c| c.node_count())
            .sum::<usize>()
    }

    pub fn label(&self) -> Option<&str> {
        match self {
            Self::Atom { label, .. }
            | Self::Z2Quotient { label, .. }
            | Self::CoreReplace { label, .. } => Some(label),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("motive expressions always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}
