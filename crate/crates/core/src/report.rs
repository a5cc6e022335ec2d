//! Pass/fail reports for axiom checks.

use std::fmt;

use crate::linmap::{multi_index, LinMap};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// Labels of the first domain basis vector on which two composites differ.
    Basis(Vec<String>),
    Message(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: String,
    pub failure: Option<Failure>,
}

impl CheckEntry {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckEntry {
            name: name.into(),
            failure: None,
        }
    }

    pub fn fail(name: impl Into<String>, failure: Failure) -> Self {
        CheckEntry {
            name: name.into(),
            failure: Some(failure),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: PASS", self.name),
            Some(Failure::Basis(labels)) => {
                write!(f, "{}: FAIL at basis ({})", self.name, labels.join(","))
            }
            Some(Failure::Message(m)) => write!(f, "{}: FAIL ({m})", self.name),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    /// Adds an entry comparing two maps; on failure the witness is the first
    /// differing column, spelled out in the labels of the domain factors.
    pub fn compare<R: Ring>(
        &mut self,
        name: impl Into<String>,
        lhs: &LinMap<R>,
        rhs: &LinMap<R>,
        domain: &[&[String]],
    ) {
        self.push(compare(name, lhs, rhs, domain));
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(CheckEntry::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn get(&self, name: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

pub fn compare<R: Ring>(
    name: impl Into<String>,
    lhs: &LinMap<R>,
    rhs: &LinMap<R>,
    domain: &[&[String]],
) -> CheckEntry {
    let name = name.into();
    if lhs.dom_rank() != rhs.dom_rank() || lhs.cod_rank() != rhs.cod_rank() {
        return CheckEntry::fail(
            name,
            Failure::Message(format!(
                "shape {}x{} vs {}x{}",
                lhs.cod_rank(),
                lhs.dom_rank(),
                rhs.cod_rank(),
                rhs.dom_rank()
            )),
        );
    }
    match lhs.first_difference(rhs) {
        None => CheckEntry::pass(name),
        Some((_, col)) => CheckEntry::fail(name, Failure::Basis(basis_labels(col, domain))),
    }
}

/// Labels of basis vector `index` of a tensor product of labelled bases.
pub fn basis_labels(index: usize, factors: &[&[String]]) -> Vec<String> {
    if factors.is_empty() {
        return vec!["1".to_string()];
    }
    let ranks: Vec<usize> = factors.iter().map(|f| f.len()).collect();
    multi_index(index, &ranks)
        .into_iter()
        .zip(factors)
        .map(|(d, labels)| labels[d].clone())
        .collect()
}
