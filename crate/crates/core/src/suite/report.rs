use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::{Morphism, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Witness payload. Words and morphisms are stored in their machine form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Bool(bool),
    Text(String),
    List(Vec<Value>),
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.into())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl From<&Word> for Value {
    fn from(v: &Word) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<&Morphism> for Value {
    fn from(v: &Morphism) -> Self {
        Value::Text(v.to_string())
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(v: Vec<T>) -> Self {
        Value::List(v.into_iter().map(Into::into).collect())
    }
}

/// How many failures a report spells out before only counting.
const RECORDED_FAILURES: usize = 8;

/// Outcome of one named check.
///
/// A failing report always carries at least one `failure` entry in its
/// witness describing a concrete counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub check: &'static str,
    pub status: Status,
    pub bounds: Vec<(&'static str, u64)>,
    pub witness: Vec<(String, Value)>,
    failures: usize,
}

impl Report {
    pub fn new(check: &'static str) -> Self {
        Report {
            check,
            status: Status::Pass,
            bounds: Vec::new(),
            witness: Vec::new(),
            failures: 0,
        }
    }

    pub fn skipped(check: &'static str, reason: &str) -> Self {
        let mut r = Report::new(check);
        r.status = Status::Skipped;
        r.note("reason", reason);
        r
    }

    pub fn bound(mut self, name: &'static str, value: usize) -> Self {
        self.bounds.push((name, value as u64));
        self
    }

    /// Adds witness data without affecting the status.
    pub fn note(&mut self, key: impl Into<String>, value: impl Into<Value>) {
        self.witness.push((key.into(), value.into()));
    }

    /// Marks the check failed with a counterexample.
    pub fn fail(&mut self, what: impl Into<String>, value: impl Into<Value>) {
        self.status = Status::Fail;
        self.failures += 1;
        if self.failures <= RECORDED_FAILURES {
            let entry = Value::List(alloc::vec![Value::Text(what.into()), value.into()]);
            self.witness.push(("failure".into(), entry));
        }
    }

    /// `fail` unless `ok`.
    pub fn require(&mut self, ok: bool, what: impl Into<String>, value: impl Into<Value>) {
        if !ok {
            self.fail(what, value);
        }
    }

    pub fn failures(&self) -> usize {
        self.failures
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub(crate) fn finish(mut self) -> Self {
        if self.failures > RECORDED_FAILURES {
            let n = self.failures;
            self.note("failure_count", n);
        }
        self
    }
}
