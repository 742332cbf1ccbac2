//! Residual reports produced by every checker.
//!
//! A report is a list of sections, one per identity. A section records how
//! many tuples were evaluated and every tuple where the two sides differ,
//! together with both sides. An empty violation list means the identity
//! holds on every basis tuple, hence everywhere by multilinearity.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::grading::GroupSpec;
use crate::scalar::{format_scalar, format_vector, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Domain {
    /// Tuples of basis indices; for arity 1 over maps, the basis column.
    Basis,
    /// Tuples of group elements, by canonical index.
    Group(GroupSpec),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

impl Violation {
    pub fn residual(&self) -> Vec<Scalar> {
        self.lhs.iter().zip(&self.rhs).map(|(l, r)| l - r).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub label: String,
    pub domain: Domain,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl Section {
    pub fn new(label: impl Into<String>, domain: Domain) -> Self {
        Section {
            label: label.into(),
            domain,
            checked: 0,
            violations: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records one evaluated tuple; a violation is stored when the sides differ.
    pub fn record(&mut self, indices: Vec<usize>, lhs: Vec<Scalar>, rhs: Vec<Scalar>) {
        self.checked += 1;
        if lhs != rhs {
            self.violations.push(Violation { indices, lhs, rhs });
        }
    }

    pub(crate) fn finish(mut self) -> Self {
        self.violations.sort_by(|a, b| a.indices.cmp(&b.indices));
        self
    }

    pub fn point_label(&self, indices: &[usize]) -> String {
        let parts: Vec<String> = match &self.domain {
            Domain::Basis => indices.iter().map(|i| format!("e{}", i + 1)).collect(),
            Domain::Group(g) => indices.iter().map(|&i| g.element(i).to_string()).collect(),
        };
        format!("({})", parts.join(", "))
    }

    fn side_label(&self, v: &[Scalar]) -> String {
        match self.domain {
            Domain::Basis => format_vector(v),
            Domain::Group(_) => v.iter().map(format_scalar).collect::<Vec<_>>().join(", "),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub sections: Vec<Section>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(section: Section) -> Self {
        AxiomReport {
            sections: vec![section.finish()],
        }
    }

    pub fn push(&mut self, section: Section) {
        self.sections.push(section.finish());
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.sections.extend(other.sections);
    }

    pub fn holds(&self) -> bool {
        self.sections.iter().all(Section::holds)
    }

    pub fn violation_count(&self) -> usize {
        self.sections.iter().map(|s| s.violations.len()).sum()
    }

    pub fn section(&self, label: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.label == label)
    }

    pub fn failing(&self) -> impl Iterator<Item = &Section> {
        self.sections.iter().filter(|s| !s.holds())
    }

    /// One line per section, with the first violation when there is one.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            match s.violations.first() {
                None => {
                    let _ = writeln!(out, "PASS {} ({} checked)", s.label, s.checked);
                }
                Some(v) => {
                    let _ = writeln!(
                        out,
                        "FAIL {} ({} of {} violated; first at {}: lhs = {}, rhs = {}, residual = {})",
                        s.label,
                        s.violations.len(),
                        s.checked,
                        s.point_label(&v.indices),
                        s.side_label(&v.lhs),
                        s.side_label(&v.rhs),
                        s.side_label(&v.residual()),
                    );
                }
            }
        }
        out
    }

    /// Every violation of every section.
    pub fn full_dump(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            let verdict = if s.holds() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{verdict} {} ({} violated of {} checked)",
                s.label,
                s.violations.len(),
                s.checked
            );
            for v in &s.violations {
                let _ = writeln!(
                    out,
                    "  at {}: lhs = {}; rhs = {}; residual = {}",
                    s.point_label(&v.indices),
                    s.side_label(&v.lhs),
                    s.side_label(&v.rhs),
                    s.side_label(&v.residual()),
                );
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let sections: Vec<Value> = self
            .sections
            .iter()
            .map(|s| {
                let violations: Vec<Value> = s
                    .violations
                    .iter()
                    .map(|v| {
                        json!({
                            "at": v.indices,
                            "lhs": v.lhs.iter().map(format_scalar).collect::<Vec<_>>(),
                            "rhs": v.rhs.iter().map(format_scalar).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                json!({
                    "label": s.label,
                    "checked": s.checked,
                    "holds": s.holds(),
                    "violations": violations,
                })
            })
            .collect();
        json!({ "holds": self.holds(), "sections": sections })
    }
}
