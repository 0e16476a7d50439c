//! Named checks, suites of checks and the built-in suite.
//!
//! A suite file has one entry per line:
//!
//! ```text
//! # comment
//! check covering box:mo3,mo3 expect fail
//! ```
//!
//! Targets are described in [`target`]. Each check runs with its own
//! generator seeded from the suite seed, so records do not depend on the
//! order of entries.

mod hilbert;
mod lattice;
mod product;
pub mod target;

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::report::{CheckRecord, Report, Verdict};

pub use target::{resolve, resolve_lattice, Target};

pub const DEFAULT_SEED: u64 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub witness: String,
}

impl Outcome {
    pub fn new(verdict: Verdict, witness: impl Into<String>) -> Self {
        Outcome {
            verdict,
            witness: witness.into(),
        }
    }

    pub fn pass(witness: impl Into<String>) -> Self {
        Outcome::new(Verdict::Pass, witness)
    }
}

macro_rules! check_ids {
    ($($variant:ident => $name:literal,)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum CheckId {
            $($variant,)*
        }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $name,)*
                }
            }
        }

        impl FromStr for CheckId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(CheckId::$variant),)*
                    other => Err(Error::Precondition(format!("unknown check id `{other}`"))),
                }
            }
        }
    };
}

check_ids! {
    Covering => "covering",
    DualOrder => "dual-order",
    Orthocomplementation => "orthocomplementation",
    ContainsMo3 => "contains-mo3",
    WeaklyConnected => "weakly-connected",
    Transitive => "transitive",
    SharpValid => "sharp-valid",
    SharpOrthomodular => "sharp-orthomodular",
    AutomorphismsFactor => "automorphisms-factor",
    Axioms => "axioms",
    AxiomP4 => "axiom-p4",
    UnitFactor => "unit-factor",
    BoxEqualsFraser => "box-equals-fraser",
    FraserFixpoint => "fraser-fixpoint",
    CrossCoatoms => "cross-coatoms",
    CoatomDecomposition => "coatom-decomposition",
    FraserCoveringConstruction => "fraser-covering-construction",
    StrictChain => "strict-chain",
    PerpInvolution => "perp-involution",
    PointBiorthogonality => "point-biorthogonality",
    AntilinearAgreement => "antilinear-agreement",
    BoxMembership => "box-membership",
    DualCoveringFailure => "dual-covering-failure",
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn wrong_target(id: CheckId, wanted: &str) -> Error {
    Error::Precondition(format!("check `{id}` needs {wanted}"))
}

pub fn run_check(id: CheckId, target: &Target, seed: u64) -> Result<Outcome> {
    use CheckId::*;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match id {
        Covering | DualOrder | Orthocomplementation | ContainsMo3 | WeaklyConnected
        | Transitive => {
            let space = target
                .space()
                .ok_or_else(|| wrong_target(id, "a lattice or product"))?;
            match id {
                Covering => Ok(lattice::covering(space)),
                DualOrder => Ok(lattice::dual_order(space)),
                Orthocomplementation => lattice::orthocomplementation(space),
                ContainsMo3 => lattice::contains_mo3(space),
                WeaklyConnected => Ok(lattice::weakly_connected(space)),
                _ => lattice::transitive(space),
            }
        }
        SharpValid
        | SharpOrthomodular
        | AutomorphismsFactor
        | Axioms
        | AxiomP4
        | UnitFactor
        | BoxEqualsFraser
        | FraserFixpoint
        | CrossCoatoms
        | CoatomDecomposition
        | FraserCoveringConstruction
        | StrictChain => {
            let Target::Product {
                universe: u, space, ..
            } = target
            else {
                return Err(wrong_target(id, "a product"));
            };
            match id {
                SharpValid => product::sharp_valid(u, space),
                SharpOrthomodular => product::sharp_orthomodular(u, space),
                AutomorphismsFactor => product::automorphisms_factor(u, space),
                Axioms => Ok(product::axioms(u, space)),
                AxiomP4 => product::axiom_p4(u, space),
                UnitFactor => product::unit_factor(u, space),
                BoxEqualsFraser => product::box_equals_fraser(u),
                FraserFixpoint => product::fraser_fixpoint(u),
                CrossCoatoms => Ok(product::cross_coatoms(u, space)),
                CoatomDecomposition => product::coatom_decomposition(u, space),
                FraserCoveringConstruction => product::fraser_covering_construction(u, space),
                _ => product::strict_chain(u),
            }
        }
        PerpInvolution | PointBiorthogonality | AntilinearAgreement | DualCoveringFailure => {
            let Target::Hilbert { m, n } = *target else {
                return Err(wrong_target(id, "a hilbert:m,n target"));
            };
            match id {
                PerpInvolution => Ok(hilbert::perp_involution(&mut rng, m, n)),
                PointBiorthogonality => Ok(hilbert::point_biorthogonality(&mut rng, m, n)),
                AntilinearAgreement => hilbert::antilinear_agreement(&mut rng, m, n),
                _ => hilbert::dual_covering_failure(m, n),
            }
        }
        BoxMembership => {
            let Target::Subspace { m, n, v } = target else {
                return Err(wrong_target(id, "a subspace target"));
            };
            hilbert::box_membership(v, *m, *n)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteEntry {
    pub check: CheckId,
    pub target: String,
    pub expect: Option<Verdict>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSuite {
    pub name: String,
    pub entries: Vec<SuiteEntry>,
}

impl CheckSuite {
    pub fn parse(name: &str, text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let t = raw.split('#').next().unwrap_or("").trim();
            if t.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse { line, msg };
            let toks: Vec<&str> = t.split_whitespace().collect();
            let (check, target, expect) = match toks[..] {
                ["check", c, tg] => (c, tg, None),
                ["check", c, tg, "expect", v] => (c, tg, Some(v)),
                _ => {
                    return Err(perr(
                        "expected `check <id> <target> [expect <verdict>]`".into(),
                    ))
                }
            };
            entries.push(SuiteEntry {
                check: check.parse().map_err(|e: Error| perr(e.to_string()))?,
                target: target.to_string(),
                expect: expect
                    .map(str::parse)
                    .transpose()
                    .map_err(|e: Error| perr(e.to_string()))?,
            });
        }
        Ok(CheckSuite {
            name: name.to_string(),
            entries,
        })
    }

    /// `theorems`, also available as `paper-core`.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "theorems" | "paper-core" => {
                Some(CheckSuite::parse(name, THEOREMS).expect("built-in suite parses"))
            }
            _ => None,
        }
    }

    /// Targets are resolved once each, relative to `base`. A target that
    /// does not resolve, or does not suit its check, is an input error.
    pub fn run(&self, seed: u64, base: &Path) -> Result<Report> {
        let mut targets: HashMap<&str, Target> = HashMap::new();
        let mut records = Vec::new();
        for entry in &self.entries {
            if !targets.contains_key(entry.target.as_str()) {
                targets.insert(&entry.target, resolve(&entry.target, base)?);
            }
            let start = Instant::now();
            let outcome = run_check(entry.check, &targets[entry.target.as_str()], seed)?;
            records.push(CheckRecord {
                name: format!("{}({})", entry.check, entry.target),
                verdict: outcome.verdict,
                witness: outcome.witness,
                expected: entry.expect,
                elapsed: start.elapsed(),
            });
        }
        Ok(Report { records })
    }
}

pub const THEOREMS: &str = "\
# a one-point factor is a unit
check unit-factor box:two,mo3 expect pass
check unit-factor fraser:two,mo3 expect pass
# a Boolean factor collapses box and Fraser
check box-equals-fraser box:pow3,mo3 expect pass
# two MO3 factors separate them
check box-equals-fraser box:mo3,mo3 expect fail
check fraser-fixpoint fraser:mo3,mo3 expect pass
check cross-coatoms box:mo3,mo3 expect pass
check cross-coatoms circle:mo3,mo3 expect pass
check cross-coatoms fraser:mo3,mo3 expect pass
# covering, orthomodularity and the sharp map
check covering box:mo3,mo3 expect fail
check sharp-orthomodular box:mo4,mo4 expect fail
check sharp-valid box:mo3,mo3 expect pass
check sharp-valid box:mo4,mo4 expect pass
# Fraser covering failure
check fraser-covering-construction fraser:mo4,mo4 expect pass
check covering fraser:mo4,mo4 expect fail
# the circle product
check axioms circle:mo3,mo3 expect pass
check axiom-p4 circle:mo3,mo3 expect pass
check covering circle:mo3,mo3 expect pass
check covering box:mo3,mo3 expect fail
check covering fraser:mo3,mo3 expect fail
# orthocomplementations
check orthocomplementation box:mo3,mo3 expect pass
check sharp-valid box:mo3,mo3 expect pass
check orthocomplementation fraser:mo3,mo3 expect none
check orthocomplementation circle:mo3,mo3 expect none
# automorphisms
check automorphisms-factor box:mo3,mo3 expect pass
# subspaces of C2 x C2
check perp-involution hilbert:2,2 expect pass
check point-biorthogonality hilbert:2,2 expect pass
check antilinear-agreement hilbert:2,2 expect pass
check box-membership subspace:diagonal expect pass
check box-membership subspace:bell expect fail
check box-membership subspace:slice expect pass
check dual-covering-failure hilbert:2,2 expect pass
# strictness
check strict-chain box:mo3,mo3 expect pass
";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for &id in CheckId::ALL {
            assert_eq!(id.name().parse::<CheckId>().unwrap(), id);
        }
        assert!("lemma".parse::<CheckId>().is_err());
    }

    #[test]
    fn suite_parsing() {
        let s = CheckSuite::parse(
            "t",
            "# x\n\ncheck covering mo3 expect pass # trailing\ncheck transitive pow2\n",
        )
        .unwrap();
        assert_eq!(s.entries.len(), 2);
        assert_eq!(s.entries[0].expect, Some(Verdict::Pass));
        assert_eq!(s.entries[1].expect, None);
        assert!(matches!(
            CheckSuite::parse("t", "check covering\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            CheckSuite::parse("t", "\ncheck nope mo3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(CheckSuite::parse("t", "check covering mo3 expect maybe").is_err());
        assert!(CheckSuite::builtin("paper-core").is_some());
        assert!(CheckSuite::builtin("other").is_none());
    }

    #[test]
    fn small_suite_runs() {
        let s = CheckSuite::parse(
            "t",
            "check covering box:mo3,mo3 expect pass\ncheck covering mo3\n",
        )
        .unwrap();
        let r = s.run(DEFAULT_SEED, Path::new(".")).unwrap();
        assert_eq!(r.mismatches(), 1);
        assert_eq!(r.records[0].verdict, Verdict::Fail);
        assert!(r.records[0].witness.starts_with("atom "));
        assert_eq!(r.records[1].verdict, Verdict::Pass);
        let bad = CheckSuite::parse("t", "check covering hilbert:2,2\n").unwrap();
        assert!(bad.run(DEFAULT_SEED, Path::new(".")).is_err());
    }
}
