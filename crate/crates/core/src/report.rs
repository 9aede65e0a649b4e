use std::fmt;
use std::time::{Duration, Instant};

use crate::linalg::SparseMat;

/// Outcome of one named exact check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub name: String,
    pub pass: bool,
    /// Description of the exact residual; `"0"` on pass.
    pub residual: String,
    /// Offending items (failed identities, triples, ...). Empty on pass.
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(name: impl Into<String>) -> Self {
        VerificationReport {
            name: name.into(),
            pass: true,
            residual: "0".into(),
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    /// Report for `lhs == rhs`.
    pub fn from_equality(name: impl Into<String>, lhs: &SparseMat, rhs: &SparseMat) -> Self {
        let mut r = Self::passed(name);
        match lhs.sub(rhs) {
            Ok(d) if d.is_zero() => {}
            Ok(d) => {
                r.pass = false;
                r.residual = d.residual_summary();
            }
            Err(e) => {
                r.pass = false;
                r.residual = e.to_string();
            }
        }
        r
    }

    /// Merges sub-checks: passes iff all pass; failures are prefixed by the
    /// sub-check name.
    pub fn combine(name: impl Into<String>, parts: &[VerificationReport]) -> Self {
        let mut r = Self::passed(name);
        for p in parts {
            r.elapsed += p.elapsed;
            if !p.pass {
                r.pass = false;
                if p.failures.is_empty() {
                    r.failures.push(format!("{}: {}", p.name, p.residual));
                } else {
                    r.failures.extend(p.failures.iter().map(|f| format!("{}: {f}", p.name)));
                }
            }
        }
        if !r.pass {
            r.residual = format!("{} failing sub-checks", parts.iter().filter(|p| !p.pass).count());
        }
        r
    }

    pub fn fail(&mut self, item: impl Into<String>) {
        self.pass = false;
        self.failures.push(item.into());
        self.residual = format!("{} failures", self.failures.len());
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{status} {} residual={} time={:.3}s", self.name, self.residual, self.elapsed.as_secs_f64())?;
        for item in &self.failures {
            write!(f, "\n    - {item}")?;
        }
        Ok(())
    }
}
