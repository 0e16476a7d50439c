use std::fmt;

use crate::closure::ClosureSpace;
use crate::pointset::PointSet;
use crate::props::Automorphism;

use super::universe::ProductUniverse;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// The candidate's universe is not the product of the factor universes.
    P1 { expected: usize, got: usize },
    /// A cylinder union is not closed.
    P2 { cylinder: PointSet },
    /// `closed = p[B, β]` is closed but `B` is not closed in factor `β`.
    P3 {
        closed: PointSet,
        factor: usize,
        section: PointSet,
    },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::P1 { expected, got } => {
                write!(f, "P1 universe has {got} points, expected {expected}")
            }
            AxiomViolation::P2 { cylinder } => write!(f, "P2 cylinder {cylinder:?} not closed"),
            AxiomViolation::P3 {
                closed,
                factor,
                section,
            } => write!(
                f,
                "P3 closed line {closed:?} has section {section:?} not closed in factor {factor}"
            ),
        }
    }
}

/// P1: same universe. P2: every cylinder union closed. P3: every closed set
/// lying in a single β-line projects onto a closed set of `L_β`.
pub fn check_p1_p2_p3(candidate: &ClosureSpace, u: &ProductUniverse) -> Result<(), AxiomViolation> {
    if candidate.n() != u.n() {
        return Err(AxiomViolation::P1 {
            expected: u.n(),
            got: candidate.n(),
        });
    }
    if let Some(&cylinder) = u.cylinders().iter().find(|&&c| !candidate.is_closed(c)) {
        return Err(AxiomViolation::P2 { cylinder });
    }
    for &c in candidate.family() {
        let Some(first) = c.first() else { continue };
        for beta in 0..u.arity() {
            let on_line = c
                .iter()
                .all(|p| u.with_coord(p, beta, 0) == u.with_coord(first, beta, 0));
            if !on_line {
                continue;
            }
            let section = u.project(c, beta);
            if !u.factor(beta).is_closed(section) {
                return Err(AxiomViolation::P3 {
                    closed: c,
                    factor: beta,
                    section,
                });
            }
        }
    }
    Ok(())
}

/// A factor-automorphism tuple whose induced point map sends `closed` to a
/// non-closed `image`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P4Violation {
    /// Index into each factor's generator list.
    pub choice: Vec<usize>,
    pub closed: PointSet,
    pub image: PointSet,
}

/// The point permutation `p ↦ (v_1(p_1), …, v_k(p_k))`.
pub fn induced_automorphism(u: &ProductUniverse, maps: &[&Automorphism]) -> Automorphism {
    let point_perm = (0..u.n())
        .map(|p| {
            let t: Vec<usize> = (0..u.arity())
                .map(|b| maps[b].point_perm[u.coord(p, b)])
                .collect();
            u.index(&t)
                .expect("factor automorphisms keep coordinates in range")
        })
        .collect();
    Automorphism { point_perm }
}

/// P4 for the group generated by the supplied per-factor lists: every
/// tuple in their product must map closed sets to closed sets. Checking
/// generators suffices because the candidate's automorphisms form a group.
pub fn check_p4(
    candidate: &ClosureSpace,
    u: &ProductUniverse,
    generators: &[Vec<Automorphism>],
) -> Result<(), P4Violation> {
    let mut choice = vec![0usize; u.arity()];
    if generators.iter().any(Vec::is_empty) {
        return Ok(());
    }
    loop {
        let maps: Vec<&Automorphism> = choice
            .iter()
            .enumerate()
            .map(|(b, &i)| &generators[b][i])
            .collect();
        let g = induced_automorphism(u, &maps);
        for &c in candidate.family() {
            let image = g.apply(c);
            if !candidate.is_closed(image) {
                return Err(P4Violation {
                    choice,
                    closed: c,
                    image,
                });
            }
        }
        // Odometer over the Cartesian product, last factor fastest.
        let mut b = u.arity();
        loop {
            if b == 0 {
                return Ok(());
            }
            b -= 1;
            choice[b] += 1;
            if choice[b] < generators[b].len() {
                break;
            }
            choice[b] = 0;
        }
    }
}
