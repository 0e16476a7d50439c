//! Abstract finite lattices given by their order relation. Used where the
//! order must be reversed, since the dual of a closure space is in general
//! not a closure space on the same points.

use crate::closure::ClosureSpace;

/// Elements `0..len` with `leq[i][j]` meaning `i ≤ j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    leq: Vec<Vec<bool>>,
}

impl FiniteLattice {
    /// The inclusion order of a closure space, element ids as in
    /// [`ClosureSpace::family`].
    pub fn from_space(space: &ClosureSpace) -> Self {
        let fam = space.family();
        let leq = fam
            .iter()
            .map(|a| fam.iter().map(|b| a.is_subset(*b)).collect())
            .collect();
        FiniteLattice { leq }
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn dual(&self) -> Self {
        let n = self.len();
        let leq = (0..n)
            .map(|a| (0..n).map(|b| self.leq[b][a]).collect())
            .collect();
        FiniteLattice { leq }
    }

    pub fn bottom(&self) -> usize {
        (0..self.len())
            .find(|&a| (0..self.len()).all(|b| self.leq[a][b]))
            .expect("finite lattice has a bottom")
    }

    pub fn top(&self) -> usize {
        (0..self.len())
            .find(|&a| (0..self.len()).all(|b| self.leq[b][a]))
            .expect("finite lattice has a top")
    }

    /// Least upper bound.
    pub fn join(&self, a: usize, b: usize) -> usize {
        let ubs: Vec<usize> = (0..self.len())
            .filter(|&c| self.leq[a][c] && self.leq[b][c])
            .collect();
        *ubs.iter()
            .find(|&&c| ubs.iter().all(|&d| self.leq[c][d]))
            .expect("finite lattice has joins")
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.dual().join(a, b)
    }

    pub fn covers(&self, lower: usize, upper: usize) -> bool {
        lower != upper
            && self.leq[lower][upper]
            && !(0..self.len())
                .any(|c| c != lower && c != upper && self.leq[lower][c] && self.leq[c][upper])
    }

    /// All covering pairs `(lower, upper)`, lexicographic.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.covers(a, b))
            .collect()
    }

    pub fn atoms(&self) -> Vec<usize> {
        let bot = self.bottom();
        (0..self.len()).filter(|&a| self.covers(bot, a)).collect()
    }

    /// Every element is the join of the atoms below it.
    pub fn is_atomistic(&self) -> bool {
        let atoms = self.atoms();
        let bot = self.bottom();
        (0..self.len()).all(|a| {
            let j = atoms
                .iter()
                .filter(|&&p| self.leq[p][a])
                .fold(bot, |acc, &p| self.join(acc, p));
            j == a
        })
    }

    /// For every atom `p` and element `a` with `p ∧ a = 0`, `p ∨ a` covers `a`.
    pub fn has_covering_property(&self) -> bool {
        let bot = self.bottom();
        let atoms = self.atoms();
        atoms.iter().all(|&p| {
            (0..self.len()).all(|a| self.meet(p, a) != bot || self.covers(a, self.join(p, a)))
        })
    }
}
