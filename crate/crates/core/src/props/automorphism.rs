use crate::closure::ClosureSpace;
use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// Largest universe for which the full permutation scan is attempted.
pub const AUTOMORPHISM_MAX_POINTS: usize = 12;

/// A point permutation mapping closed sets onto closed sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    pub point_perm: Vec<usize>,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism {
            point_perm: (0..n).collect(),
        }
    }

    pub fn apply(&self, s: PointSet) -> PointSet {
        ClosureSpace::permute(&self.point_perm, s)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            point_perm: other
                .point_perm
                .iter()
                .map(|&p| self.point_perm[p])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0; self.point_perm.len()];
        for (p, &q) in self.point_perm.iter().enumerate() {
            inv[q] = p;
        }
        Automorphism { point_perm: inv }
    }

    pub fn preserves(&self, space: &ClosureSpace) -> bool {
        space
            .family()
            .iter()
            .all(|&c| space.is_closed(self.apply(c)))
    }
}

/// All automorphisms in lexicographic order of their point permutations.
///
/// Permutations are built point by point; a branch is cut as soon as a
/// closed set whose points are all mapped has a non-closed image.
pub fn automorphisms(space: &ClosureSpace) -> Result<Vec<Automorphism>> {
    let n = space.n();
    if n > AUTOMORPHISM_MAX_POINTS {
        return Err(Error::TooLarge {
            points: n,
            cap: AUTOMORPHISM_MAX_POINTS,
        });
    }
    // completed_at[k]: closed sets (size ≥ 2) whose largest point is k.
    let mut completed_at: Vec<Vec<PointSet>> = vec![Vec::new(); n];
    for &c in space.family() {
        if c.len() >= 2 {
            let top = 31 - c.bits().leading_zeros() as usize;
            completed_at[top].push(c);
        }
    }
    let mut out = Vec::new();
    let mut perm = vec![0usize; n];
    extend(
        space,
        &completed_at,
        &mut perm,
        0,
        PointSet::EMPTY,
        &mut out,
    );
    Ok(out)
}

fn extend(
    space: &ClosureSpace,
    completed_at: &[Vec<PointSet>],
    perm: &mut Vec<usize>,
    k: usize,
    used: PointSet,
    out: &mut Vec<Automorphism>,
) {
    let n = perm.len();
    if k == n {
        out.push(Automorphism {
            point_perm: perm.clone(),
        });
        return;
    }
    for q in 0..n {
        if used.contains(q) {
            continue;
        }
        perm[k] = q;
        let ok = completed_at[k]
            .iter()
            .all(|&c| space.is_closed(ClosureSpace::permute(perm, c)));
        if ok {
            extend(space, completed_at, perm, k + 1, used.with(q), out);
        }
    }
}

/// Orbits of the points under the group generated by `group`, ordered by
/// smallest point.
pub fn orbits(n: usize, group: &[Automorphism]) -> Vec<PointSet> {
    let mut seen = PointSet::EMPTY;
    let mut out = Vec::new();
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        let mut orbit = PointSet::singleton(start);
        let mut frontier = vec![start];
        while let Some(p) = frontier.pop() {
            for g in group {
                let q = g.point_perm[p];
                if !orbit.contains(q) {
                    orbit = orbit.with(q);
                    frontier.push(q);
                }
            }
        }
        seen = seen.union(orbit);
        out.push(orbit);
    }
    out
}

/// The automorphism group acts transitively on the points.
pub fn is_transitive(space: &ClosureSpace) -> Result<bool> {
    let auts = automorphisms(space)?;
    Ok(orbits(space.n(), &auts).len() == 1)
}
