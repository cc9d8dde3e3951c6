use crate::{Error, Result};

/// Outcome of one named structural check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    /// Location or cause of the failure (offending dart, vertex, cell, ...).
    pub detail: Option<String>,
}

/// Pass/fail results for every invariant of a diagram, in a fixed order.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub(crate) fn record(&mut self, name: &'static str, pass: bool, detail: Option<String>) {
        self.checks.push(Check { name, pass, detail });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    /// Convert into a `Result`, describing the first failed check.
    pub fn into_result(self, kind: fn(String) -> Error) -> Result<()> {
        match self.first_failure() {
            None => Ok(()),
            Some(c) => {
                let mut msg = c.name.to_string();
                if let Some(d) = &c.detail {
                    msg.push_str(": ");
                    msg.push_str(d);
                }
                Err(kind(msg))
            }
        }
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            write!(f, "{}: {}", c.name, if c.pass { "pass" } else { "FAIL" })?;
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
