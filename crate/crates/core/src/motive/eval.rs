use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::{LaurentPoly, RingError};

use super::MotiveExpr;

/// The evaluation rule applied at a node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Atom,
    Disjoint,
    Fibration,
    PrincipalQuotient,
    Z2Quotient,
    Core,
}

impl Rule {
    pub const ALL: [Rule; 6] = [
        Rule::Atom,
        Rule::Disjoint,
        Rule::Fibration,
        Rule::PrincipalQuotient,
        Rule::Z2Quotient,
        Rule::Core,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Atom => "atom",
            Rule::Disjoint => "disjoint",
            Rule::Fibration => "fibration",
            Rule::PrincipalQuotient => "principal_quotient",
            Rule::Z2Quotient => "z2_quotient",
            Rule::Core => "core",
        }
    }

    /// The identity in the Grothendieck ring that the rule applies.
    pub fn anchor(self) -> &'static str {
        match self {
            Rule::Atom => "pinned class of a homogeneous space or finite set",
            Rule::Disjoint => "additivity over a locally closed decomposition: [X] = [Y] + [X - Y]",
            Rule::Fibration => {
                "fibre bundle in the analytic topology with trivial monodromy: [X] = [F][B]"
            }
            Rule::PrincipalQuotient => {
                "principal G-bundle over the quotient of a free closed action: [U // G] = [U] / [G]"
            }
            Rule::Z2Quotient => "Z2 quotient of a variety with involution: [X // Z2] = [X]^+",
            Rule::Core => "quotient computed on a core (Y, H): [X // G] = [Y // H]",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    /// Pre-order index of the node in its tree (root is 0).
    pub node: usize,
    pub rule: Rule,
    pub anchor: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    pub value: LaurentPoly,
}

/// One entry per node, children before parents; the last entry is the root.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalTrace {
    pub entries: Vec<TraceEntry>,
}

impl EvalTrace {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn result(&self) -> Option<&LaurentPoly> {
        self.entries.last().map(|e| &e.value)
    }

    pub fn rules_used(&self) -> impl Iterator<Item = Rule> + '_ {
        self.entries.iter().map(|e| e.rule)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("traces always serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MotiveError {
    #[error("node {node}: principal quotient is not exact ({source})")]
    InexactQuotient {
        node: usize,
        #[source]
        source: RingError,
    },
}

/// Evaluates `expr` to its class, recording the rule used at every node.
pub fn evaluate(expr: &MotiveExpr) -> Result<(LaurentPoly, EvalTrace), MotiveError> {
    let mut trace = EvalTrace::default();
    let mut next_id = 0;
    let value = eval_node(expr, &mut next_id, &mut trace)?;
    Ok((value, trace))
}

fn eval_node(
    expr: &MotiveExpr,
    next_id: &mut usize,
    trace: &mut EvalTrace,
) -> Result<LaurentPoly, MotiveError> {
    let id = *next_id;
    *next_id += 1;
    let mut note = None;
    let (rule, value) = match expr {
        MotiveExpr::Atom { class, .. } => (Rule::Atom, class.clone()),
        MotiveExpr::Disjoint { parts } => {
            let mut sum = LaurentPoly::zero();
            for part in parts {
                sum += &eval_node(part, next_id, trace)?;
            }
            (Rule::Disjoint, sum)
        }
        MotiveExpr::Fibration { fiber, base } => {
            let f = eval_node(fiber, next_id, trace)?;
            let b = eval_node(base, next_id, trace)?;
            (Rule::Fibration, &f * &b)
        }
        MotiveExpr::PrincipalQuotient { total, group } => {
            let t = eval_node(total, next_id, trace)?;
            let g = eval_node(group, next_id, trace)?;
            let v = t
                .divide_exact(&g)
                .map_err(|source| MotiveError::InexactQuotient { node: id, source })?;
            (Rule::PrincipalQuotient, v)
        }
        MotiveExpr::Z2Quotient { arg, .. } => (Rule::Z2Quotient, arg.plus.clone()),
        MotiveExpr::CoreReplace {
            justification,
            core,
            ..
        } => {
            note = Some(justification.clone());
            (Rule::Core, eval_node(core, next_id, trace)?)
        }
    };
    trace.entries.push(TraceEntry {
        node: id,
        rule,
        anchor: rule.anchor().to_string(),
        label: expr.label().map(str::to_string),
        note,
        value: value.clone(),
    });
    Ok(value)
}
