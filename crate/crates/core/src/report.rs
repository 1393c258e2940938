//! Named pass/fail checks with witnesses, shared by every verifier.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
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

/// Aggregate of every instance of one named identity.
///
/// Status is `Fail` if any instance failed, else `Pass` if any instance ran,
/// else `Skipped`. The witness is the first failing (or first skipped) instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witness: Option<String>,
    pub instances: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    checks: BTreeMap<String, Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    fn entry(&mut self, name: &str) -> &mut Check {
        self.checks.entry(name.to_string()).or_insert_with(|| Check {
            name: name.to_string(),
            status: Status::Skipped,
            witness: None,
            instances: 0,
            skipped: 0,
        })
    }

    /// Records one instance; `witness` is only evaluated on failure.
    pub fn record(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        let c = self.entry(name);
        c.instances += 1;
        if ok {
            if c.status == Status::Skipped {
                c.status = Status::Pass;
                if c.skipped == 0 {
                    c.witness = None;
                }
            }
        } else if c.status != Status::Fail {
            c.status = Status::Fail;
            c.witness = Some(witness());
        }
    }

    pub fn pass(&mut self, name: &str) {
        self.record(name, true, String::new);
    }

    pub fn fail(&mut self, name: &str, witness: impl Into<String>) {
        let w = witness.into();
        self.record(name, false, || w);
    }

    /// Records an instance that could not be evaluated.
    pub fn skip(&mut self, name: &str, note: impl Into<String>) {
        let c = self.entry(name);
        c.skipped += 1;
        if c.witness.is_none() && c.status != Status::Fail {
            c.witness = Some(note.into());
        }
    }

    /// Records a comparison of two matrices, with the first differing entry as witness.
    pub fn compare(&mut self, name: &str, lhs: &crate::Mat, rhs: &crate::Mat, at: impl FnOnce() -> String) {
        match lhs.first_difference(rhs) {
            None => self.pass(name),
            Some((i, _)) if i == usize::MAX => {
                let w = alloc::format!("{}: shapes {:?} vs {:?}", at(), lhs.shape(), rhs.shape());
                self.record(name, false, || w)
            }
            Some((i, j)) => {
                let w = alloc::format!("{}: entry ({i},{j}) lhs={} rhs={}", at(), lhs.get(i, j), rhs.get(i, j));
                self.record(name, false, || w)
            }
        }
    }

    /// Absorbs another report, prefixing its check names.
    pub fn merge(&mut self, prefix: &str, other: Report) {
        for (_, c) in other.checks {
            let name = if prefix.is_empty() { c.name.clone() } else { alloc::format!("{prefix}.{}", c.name) };
            let slot = self.entry(&name);
            slot.instances += c.instances;
            slot.skipped += c.skipped;
            match (slot.status, c.status) {
                (Status::Fail, _) => {}
                (_, Status::Fail) => {
                    slot.status = Status::Fail;
                    slot.witness = c.witness;
                }
                (Status::Skipped, Status::Pass) => {
                    slot.status = Status::Pass;
                    if slot.skipped == c.skipped {
                        slot.witness = c.witness;
                    }
                }
                (_, _) => {
                    if slot.witness.is_none() {
                        slot.witness = c.witness;
                    }
                }
            }
        }
    }

    /// Checks in name order.
    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.values()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.get(name)
    }

    pub fn status(&self, name: &str) -> Option<Status> {
        self.get(name).map(|c| c.status)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks().filter(|c| c.status == Status::Fail).collect()
    }

    /// True when no check failed; skipped checks do not count as failures.
    pub fn all_pass(&self) -> bool {
        self.checks().all(|c| c.status != Status::Fail)
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.checks() {
            write!(f, "{:<7} {} [{} instance(s)", c.status.as_str(), c.name, c.instances)?;
            if c.skipped > 0 {
                write!(f, ", {} skipped", c.skipped)?;
            }
            f.write_str("]")?;
            if let Some(w) = &c.witness {
                write!(f, " {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aggregation_rules() {
        let mut r = Report::new();
        r.pass("b");
        r.fail("b", "at x");
        r.pass("b");
        r.skip("a", "missing pair");
        r.pass("c");
        assert_eq!(r.status("b"), Some(Status::Fail));
        assert_eq!(r.get("b").unwrap().witness.as_deref(), Some("at x"));
        assert_eq!(r.status("a"), Some(Status::Skipped));
        assert!(!r.all_pass());
        let names: Vec<_> = r.checks().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["a", "b", "c"]);
    }

    #[test]
    fn merge_prefixes() {
        let mut inner = Report::new();
        inner.pass("x");
        let mut outer = Report::new();
        outer.merge("dual", inner);
        assert_eq!(outer.status("dual.x"), Some(Status::Pass));
    }
}
