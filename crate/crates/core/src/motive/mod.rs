//! Expression trees of variety-building operations and their evaluation.
//!
//! The evaluator never looks at a variety model, only at classes: a quotient
//! node evaluates to the unique class that any quotient of the kind
//! described would have. Every node contributes one trace entry naming the
//! identity it applied.

pub mod atoms;
mod eval;
mod expr;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

pub use eval::{evaluate, EvalTrace, MotiveError, Rule, TraceEntry};
pub use expr::MotiveExpr;

use crate::ring::{EquivariantClass, LaurentPoly, RingError};

/// Class of `X // Z2`.
pub fn z2_quotient_class(x: &EquivariantClass) -> LaurentPoly {
    x.plus.clone()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagnosticKind {
    InexactDivision,
    DivisionByZero,
    SharedAtomLabel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub node: usize,
    pub kind: DiagnosticKind,
    pub message: String,
}

/// Lists rule violations without failing: principal quotients whose division
/// is not exact, and disjoint unions listing the same atom twice.
pub fn validate(expr: &MotiveExpr) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut next_id = 0;
    validate_node(expr, &mut next_id, &mut out);
    out
}

fn validate_node(expr: &MotiveExpr, next_id: &mut usize, out: &mut Vec<Diagnostic>) {
    let id = *next_id;
    *next_id += 1;
    match expr {
        MotiveExpr::PrincipalQuotient { total, group } => {
            // subtrees that fail on their own are reported at their own nodes
            if let (Ok((t, _)), Ok((g, _))) = (evaluate(total), evaluate(group)) {
                match t.divide_exact(&g) {
                    Ok(_) => {}
                    Err(RingError::DivisionByZero) => out.push(Diagnostic {
                        node: id,
                        kind: DiagnosticKind::DivisionByZero,
                        message: format!("node {id}: quotient by a group of class 0"),
                    }),
                    Err(e) => out.push(Diagnostic {
                        node: id,
                        kind: DiagnosticKind::InexactDivision,
                        message: format!("node {id}: {e}"),
                    }),
                }
            }
        }
        MotiveExpr::Disjoint { parts } => {
            let mut seen = HashSet::new();
            for part in parts {
                if let MotiveExpr::Atom { label, .. } = part {
                    if !seen.insert(label.as_str()) {
                        out.push(Diagnostic {
                            node: id,
                            kind: DiagnosticKind::SharedAtomLabel,
                            message: format!(
                                "node {id}: atom {label:?} appears twice in one disjoint union"
                            ),
                        });
                    }
                }
            }
        }
        _ => {}
    }
    for child in expr.children() {
        validate_node(child, next_id, out);
    }
}
