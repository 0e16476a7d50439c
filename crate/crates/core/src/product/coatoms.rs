use crate::closure::ClosureSpace;
use crate::error::{Error, Result};
use crate::pointset::PointSet;

use super::universe::ProductUniverse;

/// Factor coatoms `x_i` for every `i ≠ j`; the entry at `j` is ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfCross {
    pub j: usize,
    pub x: Vec<PointSet>,
}

impl HalfCross {
    /// `⋃_{i≠j} π_i^{-1}(x_i)`.
    pub fn render(&self, u: &ProductUniverse) -> PointSet {
        let mut parts = self.x.clone();
        parts[self.j] = PointSet::EMPTY;
        u.cross(&parts)
    }

    /// Every choice of factor coatoms off `j`, `x_j` set to empty.
    pub fn all(u: &ProductUniverse, j: usize) -> Vec<HalfCross> {
        let mut acc: Vec<Vec<PointSet>> = vec![Vec::new()];
        for i in 0..u.arity() {
            let options = if i == j {
                vec![PointSet::EMPTY]
            } else {
                u.factor(i).coatoms()
            };
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    options.iter().map(move |&o| {
                        let mut v = prefix.clone();
                        v.push(o);
                        v
                    })
                })
                .collect();
        }
        acc.into_iter().map(|x| HalfCross { j, x }).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoatomDecomposition {
    /// `Z = ⋃_{i≠j} π_i^{-1}(x_i) ∪ π_j^{-1}(z_j)` with `z_j` a coatom of `L_j`.
    Conforms { z_j: PointSet },
    /// No factor coatom reproduces `Z`; `z_j` is the largest candidate.
    NonConforming { z_j: PointSet },
}

/// Splits a coatom `Z` of `candidate` lying above the half cross.
pub fn coatom_structure(
    u: &ProductUniverse,
    candidate: &ClosureSpace,
    z: PointSet,
    half: &HalfCross,
) -> Result<CoatomDecomposition> {
    if half.j >= u.arity() || half.x.len() != u.arity() {
        return Err(Error::WrongLength {
            expected: u.arity(),
            got: half.x.len(),
        });
    }
    for (i, &x) in half.x.iter().enumerate() {
        if i != half.j && !u.factor(i).coatoms().contains(&x) {
            return Err(Error::NotCoatom(x));
        }
    }
    if !candidate.is_closed(z) {
        return Err(Error::NotClosed(z));
    }
    if !candidate.coatoms().contains(&z) {
        return Err(Error::NotCoatom(z));
    }
    let lower = half.render(u);
    if !lower.is_subset(z) {
        return Err(Error::NotBelow { lower, upper: z });
    }
    let j = half.j;
    let z_j: PointSet = (0..u.radix(j))
        .filter(|&s| u.cylinder(j, PointSet::singleton(s)).is_subset(z))
        .collect();
    let mut parts = half.x.clone();
    parts[j] = z_j;
    let conforms = u.cross(&parts) == z && u.factor(j).coatoms().contains(&z_j);
    Ok(if conforms {
        CoatomDecomposition::Conforms { z_j }
    } else {
        CoatomDecomposition::NonConforming { z_j }
    })
}
