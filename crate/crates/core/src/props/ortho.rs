use std::fmt;

use crate::closure::ClosureSpace;
use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_SCAN_POINTS};

pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

/// A unary map on the elements of a closure space, indexed by element id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoMap {
    images: Vec<usize>,
}

impl OrthoMap {
    pub fn from_images(images: Vec<usize>) -> Self {
        OrthoMap { images }
    }

    /// Extends atom images to every element by `a ↦ ⋂_{p ∈ a} p'`, with
    /// `0 ↦ 1`. Fails if some image is not closed.
    pub fn from_atom_images(space: &ClosureSpace, atom_images: &[PointSet]) -> Result<Self> {
        if atom_images.len() != space.n() {
            return Err(Error::WrongLength {
                expected: space.n(),
                got: atom_images.len(),
            });
        }
        let images = space
            .family()
            .iter()
            .map(|&a| {
                let img = meet_of_images(space.full(), atom_images, a);
                space.element_id(img).ok_or(Error::NotClosed(img))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(OrthoMap { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image_id(&self, id: usize) -> usize {
        self.images[id]
    }

    /// Image of a closed set. Panics if `a` is not closed in `space`.
    pub fn apply(&self, space: &ClosureSpace, a: PointSet) -> PointSet {
        let id = space
            .element_id(a)
            .unwrap_or_else(|| panic!("{a:?} is not closed"));
        space.element(self.images[id])
    }

    /// Images of the atoms, by point id.
    pub fn atom_images(&self, space: &ClosureSpace) -> Vec<PointSet> {
        (0..space.n())
            .map(|p| self.apply(space, PointSet::singleton(p)))
            .collect()
    }
}

fn meet_of_images(full: PointSet, atom_images: &[PointSet], a: PointSet) -> PointSet {
    a.iter()
        .fold(full, |acc, p| acc.intersection(atom_images[p]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrthoLaw {
    /// The map does not have one image per element.
    Domain,
    Involution,
    OrderReversing,
    Complement,
}

impl fmt::Display for OrthoLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OrthoLaw::Domain => "domain",
            OrthoLaw::Involution => "involution",
            OrthoLaw::OrderReversing => "order-reversing",
            OrthoLaw::Complement => "complement",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrthoViolation {
    pub law: OrthoLaw,
    pub a: PointSet,
    /// Second element, for the order-reversing law.
    pub b: Option<PointSet>,
}

/// Checks involution, order reversal and `a ∨ a' = 1`, in that order, each
/// over elements in canonical order.
pub fn validate_orthomap(space: &ClosureSpace, map: &OrthoMap) -> Result<(), OrthoViolation> {
    let fam = space.family();
    if map.images.len() != fam.len() || map.images.iter().any(|&i| i >= fam.len()) {
        return Err(OrthoViolation {
            law: OrthoLaw::Domain,
            a: PointSet::EMPTY,
            b: None,
        });
    }
    for (i, &a) in fam.iter().enumerate() {
        if map.images[map.images[i]] != i {
            return Err(OrthoViolation {
                law: OrthoLaw::Involution,
                a,
                b: None,
            });
        }
    }
    for (i, &a) in fam.iter().enumerate() {
        for (j, &b) in fam.iter().enumerate() {
            if a.is_subset(b) && !fam[map.images[j]].is_subset(fam[map.images[i]]) {
                return Err(OrthoViolation {
                    law: OrthoLaw::OrderReversing,
                    a,
                    b: Some(b),
                });
            }
        }
    }
    let full = space.full();
    for (i, &a) in fam.iter().enumerate() {
        if space.close(a.union(fam[map.images[i]])) != full {
            return Err(OrthoViolation {
                law: OrthoLaw::Complement,
                a,
                b: None,
            });
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrthomodularFailure {
    Invalid(OrthoViolation),
    /// `a ≤ b` but `b ≠ a ∨ (b ∧ a')`.
    Witness {
        a: PointSet,
        b: PointSet,
    },
}

pub fn is_orthomodular(space: &ClosureSpace, map: &OrthoMap) -> Result<(), OrthomodularFailure> {
    validate_orthomap(space, map).map_err(OrthomodularFailure::Invalid)?;
    let fam = space.family();
    for (i, &a) in fam.iter().enumerate() {
        let a_perp = fam[map.images[i]];
        for &b in fam {
            if a.is_subset(b) && space.close(a.union(b.intersection(a_perp))) != b {
                return Err(OrthomodularFailure::Witness { a, b });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchOrder {
    /// Atoms ascending, candidate coatoms ascending.
    Canonical,
    /// Atoms descending, candidate coatoms descending.
    Reversed,
}

/// Proof token that the atom→coatom search tree was exhausted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExhaustionCertificate {
    pub order: BranchOrder,
    pub nodes: u64,
    /// Number of coatoms not containing each atom, by point id.
    pub candidates: Vec<usize>,
}

impl fmt::Display for ExhaustionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.candidates.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "exhausted order={:?} nodes={} candidates=[{}]",
            self.order,
            self.nodes,
            c.join(",")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrthoSearch {
    Found(OrthoMap),
    Exhausted(ExhaustionCertificate),
}

impl OrthoSearch {
    pub fn found(&self) -> Option<&OrthoMap> {
        match self {
            OrthoSearch::Found(m) => Some(m),
            OrthoSearch::Exhausted(_) => None,
        }
    }
}

struct Search<'a> {
    space: &'a ClosureSpace,
    atom_order: Vec<usize>,
    candidates: Vec<Vec<PointSet>>,
    assigned: Vec<Option<PointSet>>,
    nodes: u64,
    limit: u64,
}

impl Search<'_> {
    fn consistent(&self, p: usize, x: PointSet) -> bool {
        self.assigned.iter().enumerate().all(|(q, img)| match img {
            Some(y) => *y != x && x.contains(q) == y.contains(p),
            None => true,
        })
    }

    fn assigned_set(&self) -> PointSet {
        (0..self.assigned.len())
            .filter(|&p| self.assigned[p].is_some())
            .collect()
    }

    /// Every element whose atoms are all assigned must satisfy the
    /// complement law, and the involution law once its image is assigned too.
    fn elements_ok(&self) -> bool {
        let known = self.assigned_set();
        let full = self.space.full();
        let images: Vec<PointSet> = self.assigned.iter().map(|i| i.unwrap_or(full)).collect();
        self.space.family().iter().all(|&a| {
            if !a.is_subset(known) {
                return true;
            }
            let a_perp = meet_of_images(full, &images, a);
            if self.space.close(a.union(a_perp)) != full {
                return false;
            }
            !a_perp.is_subset(known) || meet_of_images(full, &images, a_perp) == a
        })
    }

    /// Forward check: each unassigned atom keeps at least one candidate.
    fn lookahead_ok(&self) -> bool {
        (0..self.assigned.len()).all(|r| {
            self.assigned[r].is_some() || self.candidates[r].iter().any(|&y| self.consistent(r, y))
        })
    }

    fn run(&mut self, depth: usize) -> Result<Option<Vec<PointSet>>> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::SearchLimit(self.limit));
        }
        if depth == self.atom_order.len() {
            let images: Vec<PointSet> = self.assigned.iter().map(|i| i.unwrap()).collect();
            let map = OrthoMap::from_atom_images(self.space, &images)?;
            return Ok(validate_orthomap(self.space, &map)
                .is_ok()
                .then_some(images));
        }
        let p = self.atom_order[depth];
        for k in 0..self.candidates[p].len() {
            let x = self.candidates[p][k];
            if !self.consistent(p, x) {
                continue;
            }
            self.assigned[p] = Some(x);
            if self.lookahead_ok() && self.elements_ok() {
                if let Some(sol) = self.run(depth + 1)? {
                    return Ok(Some(sol));
                }
            }
            self.assigned[p] = None;
        }
        Ok(None)
    }
}

/// Backtracking search for an orthocomplementation. Atoms determine the
/// map, so the search assigns to each atom a coatom not containing it,
/// keeping orthogonality symmetric and pruning on `a ∨ a' ≠ 1`.
pub fn find_orthocomplementation(
    space: &ClosureSpace,
    order: BranchOrder,
    node_limit: u64,
) -> Result<OrthoSearch> {
    if space.n() > MAX_SCAN_POINTS {
        return Err(Error::TooLarge {
            points: space.n(),
            cap: MAX_SCAN_POINTS,
        });
    }
    let mut coatoms = space.coatoms();
    let mut atom_order: Vec<usize> = (0..space.n()).collect();
    if order == BranchOrder::Reversed {
        coatoms.reverse();
        atom_order.reverse();
    }
    let candidates: Vec<Vec<PointSet>> = (0..space.n())
        .map(|p| coatoms.iter().copied().filter(|x| !x.contains(p)).collect())
        .collect();
    let mut search = Search {
        space,
        atom_order,
        candidates,
        assigned: vec![None; space.n()],
        nodes: 0,
        limit: node_limit,
    };
    match search.run(0)? {
        Some(images) => Ok(OrthoSearch::Found(OrthoMap::from_atom_images(
            space, &images,
        )?)),
        None => Ok(OrthoSearch::Exhausted(ExhaustionCertificate {
            order,
            nodes: search.nodes,
            candidates: search.candidates.iter().map(Vec::len).collect(),
        })),
    }
}
