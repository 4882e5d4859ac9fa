//! Validation reports and the verdict taxonomy shared by every checker.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Outcome of a single check.
///
/// `NotCertified` marks a bounded search that found nothing; `Undecided`
/// marks a method that does not apply to the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotCertified,
    Undecided,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotCertified => "not-certified",
            Verdict::Undecided => "undecided",
        };
        f.write_str(s)
    }
}

/// One violated axiom instance. `witness` holds the indices (arrows, basis
/// vectors, objects) that reproduce the failure; their meaning depends on
/// `check`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: String,
    pub witness: Vec<usize>,
    pub detail: String,
}

impl Violation {
    pub fn new(check: impl Into<String>, witness: Vec<usize>, detail: impl Into<String>) -> Self {
        Self { check: check.into(), witness, detail: detail.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}: {}", self.check, self.witness, self.detail)
    }
}

/// All violations found by a validator. Empty means the object satisfies
/// every checked axiom.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: impl Into<String>, witness: Vec<usize>, detail: impl Into<String>) {
        self.violations.push(Violation::new(check, witness, detail));
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    /// Same as [`extend`](Self::extend) but prefixes each check name.
    pub fn extend_prefixed(&mut self, prefix: &str, other: ValidationReport) {
        for mut v in other.violations {
            v.check = format!("{prefix}.{}", v.check);
            self.violations.push(v);
        }
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn verdict(&self) -> Verdict {
        Verdict::from_bool(self.is_ok())
    }

    /// Violations whose check name equals `check` or starts with `check.`.
    pub fn of_check<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations.iter().filter(move |v| v.check == check || v.check.ends_with(&format!(".{check}")))
    }

    pub fn has(&self, check: &str) -> bool {
        self.of_check(check).next().is_some()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
