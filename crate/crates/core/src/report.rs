//! Check records and their line-oriented rendering.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    None,
    Unknown,
}

impl Verdict {
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
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::None => "none",
            Verdict::Unknown => "unknown",
        })
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "pass" => Ok(Verdict::Pass),
            "fail" => Ok(Verdict::Fail),
            "none" => Ok(Verdict::None),
            "unknown" => Ok(Verdict::Unknown),
            other => Err(Error::Precondition(format!("unknown verdict `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: String,
    pub verdict: Verdict,
    pub witness: String,
    pub expected: Option<Verdict>,
    pub elapsed: Duration,
}

impl CheckRecord {
    /// No expectation counts as met.
    pub fn met(&self) -> bool {
        self.expected.is_none_or(|e| e == self.verdict)
    }

    pub fn render(&self, timings: bool) -> String {
        let witness = if self.witness.is_empty() {
            "-"
        } else {
            &self.witness
        };
        let mut line = format!(
            "CHECK {} RESULT {} WITNESS {}",
            self.name, self.verdict, witness
        );
        if let Some(e) = self.expected.filter(|_| !self.met()) {
            line.push_str(&format!(" EXPECTED {e}"));
        }
        if timings {
            line.push_str(&format!(" ELAPSED {}ms", self.elapsed.as_millis()));
        }
        line
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn all_met(&self) -> bool {
        self.records.iter().all(CheckRecord::met)
    }

    pub fn mismatches(&self) -> usize {
        self.records.iter().filter(|r| !r.met()).count()
    }

    /// One line per record in suite order. Timings are left out unless
    /// asked for, so identical inputs give identical bytes.
    pub fn render(&self, timings: bool) -> String {
        self.records
            .iter()
            .map(|r| r.render(timings) + "\n")
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(verdict: Verdict, expected: Option<Verdict>) -> CheckRecord {
        CheckRecord {
            name: "covering(mo3)".into(),
            verdict,
            witness: String::new(),
            expected,
            elapsed: Duration::from_millis(7),
        }
    }

    #[test]
    fn rendering() {
        let r = record(Verdict::Pass, Some(Verdict::Pass));
        assert_eq!(r.render(false), "CHECK covering(mo3) RESULT pass WITNESS -");
        assert_eq!(
            r.render(true),
            "CHECK covering(mo3) RESULT pass WITNESS - ELAPSED 7ms"
        );
        let bad = record(Verdict::Fail, Some(Verdict::Pass));
        assert_eq!(
            bad.render(false),
            "CHECK covering(mo3) RESULT fail WITNESS - EXPECTED pass"
        );
        let report = Report {
            records: vec![r, bad, record(Verdict::Unknown, None)],
        };
        assert_eq!(report.mismatches(), 1);
        assert!(!report.all_met());
        assert_eq!("none".parse::<Verdict>().unwrap(), Verdict::None);
        assert!("maybe".parse::<Verdict>().is_err());
    }
}
