//! Structural properties of closure spaces: covering property, MO_n
//! containment, orthocomplementations, automorphisms and weak connectivity.

mod automorphism;
mod connectivity;
mod ortho;

pub use automorphism::{
    automorphisms, is_transitive, orbits, Automorphism, AUTOMORPHISM_MAX_POINTS,
};
pub use connectivity::{is_weakly_connected, ConnectedCovering, Connectivity, NotConnected};
pub use ortho::{
    find_orthocomplementation, is_orthomodular, validate_orthomap, BranchOrder,
    ExhaustionCertificate, OrthoLaw, OrthoMap, OrthoSearch, OrthoViolation, OrthomodularFailure,
    DEFAULT_NODE_LIMIT,
};

use std::collections::BTreeSet;

use crate::closure::{ClosureSpace, CoverWitness};
use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// First pair `(atom, element)` with `atom ∧ element = 0` for which
/// `atom ∨ element` does not cover `element`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoveringFailure {
    pub atom: usize,
    pub element: PointSet,
    pub witness: CoverWitness,
}

/// Scans atoms by id and elements by mask; the reported failure is the
/// lexicographically smallest one.
pub fn has_covering_property(space: &ClosureSpace) -> Result<(), CoveringFailure> {
    for p in 0..space.n() {
        for &a in space.family() {
            if a.contains(p) {
                continue;
            }
            let j = space.close(a.with(p));
            if !space.covers_fast(a, j) {
                return Err(CoveringFailure {
                    atom: p,
                    element: a,
                    witness: CoverWitness {
                        lower: a,
                        upper: j,
                        intermediate: space.first_intermediate(a, j),
                    },
                });
            }
        }
    }
    Ok(())
}

/// Searches for `n` atoms whose join covers each of them. Returns the
/// lexicographically smallest ascending tuple.
pub fn contains_mo_n(space: &ClosureSpace, n: usize) -> Result<Option<Vec<usize>>> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "MO_n containment needs n >= 3, got {n}"
        )));
    }
    let mut lines = BTreeSet::new();
    for p in 0..space.n() {
        for q in p + 1..space.n() {
            lines.insert(space.close(PointSet::singleton(p).with(q)));
        }
    }
    let best = lines
        .into_iter()
        .filter_map(|line| {
            let covered: Vec<usize> = line
                .iter()
                .filter(|&r| space.covers_fast(PointSet::singleton(r), line))
                .take(n)
                .collect();
            (covered.len() == n).then_some(covered)
        })
        .min();
    Ok(best)
}
