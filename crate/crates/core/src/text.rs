//! Lattice text format.
//!
//! ```text
//! points: a b c
//! a b
//! -
//! ```
//!
//! The first line lists point labels. Each further line is one closed set
//! given as space-separated labels, `-` for the empty set. Blank lines and
//! lines starting with `#` are ignored. Loading runs the intersection
//! closure, so a file may list only generators.

use crate::closure::ClosureSpace;
use crate::error::{Error, Result};
use crate::pointset::PointSet;

pub fn parse_lattice(text: &str) -> Result<ClosureSpace> {
    let mut labels: Option<Vec<String>> = None;
    let mut sets = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match &labels {
            None => {
                let rest = line.strip_prefix("points:").ok_or_else(|| Error::Parse {
                    line: line_no,
                    msg: "expected `points:` header".into(),
                })?;
                let ls: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if ls.is_empty() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "no points listed".into(),
                    });
                }
                if ls.iter().any(|l| l == "-") {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "`-` is reserved for the empty set".into(),
                    });
                }
                labels = Some(ls);
            }
            Some(ls) => {
                let set =
                    parse_set_line(ls, line).map_err(|msg| Error::Parse { line: line_no, msg })?;
                sets.push(set);
            }
        }
    }
    let labels = labels.ok_or(Error::Parse {
        line: 1,
        msg: "missing `points:` header".into(),
    })?;
    ClosureSpace::from_closed_sets(labels, sets).map_err(|e| match e {
        Error::Parse { .. } => e,
        Error::DuplicateLabel(_) | Error::TooLarge { .. } => e,
        other => Error::Parse {
            line: 1,
            msg: other.to_string(),
        },
    })
}

fn parse_set_line(labels: &[String], line: &str) -> std::result::Result<PointSet, String> {
    if line == "-" {
        return Ok(PointSet::EMPTY);
    }
    let mut set = PointSet::EMPTY;
    for tok in line.split_whitespace() {
        let p = labels
            .iter()
            .position(|l| l == tok)
            .ok_or_else(|| format!("unknown point label `{tok}`"))?;
        set = set.with(p);
    }
    Ok(set)
}

/// Canonical rendering: header, then every closed set in ascending mask order.
pub fn render_lattice(space: &ClosureSpace) -> String {
    let mut out = format!("points: {}\n", space.labels().join(" "));
    for &s in space.family() {
        out.push_str(&space.render(s));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_only_file() {
        let s = parse_lattice("points: a b c\n# a line\na b\n").unwrap();
        assert_eq!(s.len(), 6);
    }

    #[test]
    fn canonical_round_trip() {
        let s = ClosureSpace::mo(3).unwrap();
        let text = render_lattice(&s);
        assert_eq!(text, "points: a b c\n-\na\nb\nc\na b c\n");
        assert_eq!(parse_lattice(&text).unwrap(), s);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_lattice("points: a b\n\na z\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                msg: "unknown point label `z`".into()
            }
        );
        assert!(matches!(
            parse_lattice("a b\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_lattice(""), Err(Error::Parse { .. })));
    }
}
