use std::fmt;

/// Result of a single named check.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Pass,
    Fail(String),
    NotApplicable(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    /// Worst residual behind the decision, when one exists.
    pub residual: Option<f64>,
}

impl Check {
    pub fn pass(name: impl Into<String>, residual: Option<f64>) -> Self {
        Self { name: name.into(), outcome: Outcome::Pass, residual }
    }

    pub fn fail(name: impl Into<String>, why: impl Into<String>, residual: Option<f64>) -> Self {
        Self { name: name.into(), outcome: Outcome::Fail(why.into()), residual }
    }

    pub fn skip(name: impl Into<String>, why: impl Into<String>) -> Self {
        Self { name: name.into(), outcome: Outcome::NotApplicable(why.into()), residual: None }
    }

    /// Pass when `ok`, otherwise fail with `why`.
    pub fn expect(name: impl Into<String>, ok: bool, why: impl FnOnce() -> String, residual: Option<f64>) -> Self {
        if ok {
            Self::pass(name, residual)
        } else {
            Self::fail(name, why(), residual)
        }
    }

    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Fail(_))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "pass  {}", self.name)?,
            Outcome::Fail(w) => write!(f, "FAIL  {}: {w}", self.name)?,
            Outcome::NotApplicable(w) => write!(f, "n/a   {}: {w}", self.name)?,
        }
        if let Some(r) = self.residual {
            write!(f, " (residual {r:.3e})")?;
        }
        Ok(())
    }
}

/// Ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// True when nothing failed.
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(Check::failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.failed())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
