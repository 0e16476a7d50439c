use std::collections::BTreeSet;

use crate::closure::ClosureSpace;
use crate::pointset::PointSet;

/// Blocks of atoms witnessing weak connectivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectedCovering {
    pub blocks: Vec<PointSet>,
}

impl ConnectedCovering {
    /// Blocks cover the universe and each has at least two atoms.
    pub fn covers_universe(&self, space: &ClosureSpace) -> bool {
        let union = self
            .blocks
            .iter()
            .fold(PointSet::EMPTY, |acc, &b| acc.union(b));
        union == space.full() && self.blocks.iter().all(|b| b.len() >= 2)
    }

    /// Any two distinct atoms of a block join to a set with a third atom.
    pub fn blocks_have_third_atoms(&self, space: &ClosureSpace) -> bool {
        self.blocks.iter().all(|&b| {
            let pts: Vec<usize> = b.iter().collect();
            pts.iter().enumerate().all(|(i, &p)| {
                pts[i + 1..]
                    .iter()
                    .all(|&q| space.close(PointSet::singleton(p).with(q)).len() >= 3)
            })
        })
    }

    /// Any two atoms are linked by a chain of blocks whose consecutive
    /// members share at least two atoms.
    pub fn is_chained(&self, space: &ClosureSpace) -> bool {
        (0..space.n()).all(|p| {
            let reach = self.reachable_from(p);
            reach == space.full()
        })
    }

    fn reachable_from(&self, p: usize) -> PointSet {
        let mut visited = vec![false; self.blocks.len()];
        let mut frontier: Vec<usize> = (0..self.blocks.len())
            .filter(|&i| self.blocks[i].contains(p))
            .collect();
        for &i in &frontier {
            visited[i] = true;
        }
        let mut reach = PointSet::EMPTY;
        while let Some(i) = frontier.pop() {
            reach = reach.union(self.blocks[i]);
            let block = self.blocks[i];
            for (j, seen) in visited.iter_mut().enumerate() {
                if !*seen && block.intersection(self.blocks[j]).len() >= 2 {
                    *seen = true;
                    frontier.push(j);
                }
            }
        }
        reach
    }

    pub fn verify(&self, space: &ClosureSpace) -> bool {
        self.covers_universe(space) && self.blocks_have_third_atoms(space) && self.is_chained(space)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotConnected {
    /// The space is the two-element lattice.
    IsTwo,
    /// No join of this atom with another atom contains a third atom.
    IsolatedAtom(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Connectivity {
    Connected(ConnectedCovering),
    Not(NotConnected),
    Unknown,
}

/// Sound but incomplete. Candidate blocks are the atom sets of two-atom
/// joins when those form cliques of the "join has a third atom" relation,
/// otherwise a greedy clique inside the join. A covering is returned only
/// after it passes [`ConnectedCovering::verify`].
pub fn is_weakly_connected(space: &ClosureSpace) -> Connectivity {
    let n = space.n();
    if n == 1 {
        return Connectivity::Not(NotConnected::IsTwo);
    }
    let third = |p: usize, q: usize| space.close(PointSet::singleton(p).with(q)).len() >= 3;
    if let Some(p) = (0..n).find(|&p| (0..n).all(|q| q == p || !third(p, q))) {
        return Connectivity::Not(NotConnected::IsolatedAtom(p));
    }
    let mut blocks = BTreeSet::new();
    for p in 0..n {
        for q in p + 1..n {
            if !third(p, q) {
                continue;
            }
            let line = space.close(PointSet::singleton(p).with(q));
            let mut clique = PointSet::singleton(p).with(q);
            for r in line.iter() {
                if !clique.contains(r) && clique.iter().all(|s| third(r, s)) {
                    clique = clique.with(r);
                }
            }
            blocks.insert(clique);
        }
    }
    let blocks: Vec<PointSet> = blocks
        .iter()
        .copied()
        .filter(|b| !blocks.iter().any(|c| b.is_proper_subset(*c)))
        .collect();
    // Split into overlap components and keep the first one that verifies.
    let mut component = vec![usize::MAX; blocks.len()];
    let mut groups: Vec<Vec<PointSet>> = Vec::new();
    for start in 0..blocks.len() {
        if component[start] != usize::MAX {
            continue;
        }
        let id = groups.len();
        component[start] = id;
        let mut stack = vec![start];
        let mut members = Vec::new();
        while let Some(i) = stack.pop() {
            members.push(i);
            for j in 0..blocks.len() {
                if component[j] == usize::MAX && blocks[i].intersection(blocks[j]).len() >= 2 {
                    component[j] = id;
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        groups.push(members.into_iter().map(|i| blocks[i]).collect());
    }
    groups
        .into_iter()
        .map(|blocks| ConnectedCovering { blocks })
        .find(|c| c.verify(space))
        .map_or(Connectivity::Unknown, Connectivity::Connected)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mo3_is_one_block() {
        let mo3 = ClosureSpace::mo(3).unwrap();
        assert_eq!(
            is_weakly_connected(&mo3),
            Connectivity::Connected(ConnectedCovering {
                blocks: vec![mo3.full()]
            })
        );
    }

    #[test]
    fn boolean_lattices_are_not_connected() {
        let p3 = ClosureSpace::powerset(3).unwrap();
        assert_eq!(
            is_weakly_connected(&p3),
            Connectivity::Not(NotConnected::IsolatedAtom(0))
        );
        assert_eq!(
            is_weakly_connected(&ClosureSpace::two()),
            Connectivity::Not(NotConnected::IsTwo)
        );
    }

    #[test]
    fn direct_sum_is_unknown_or_rejected() {
        // Two MO3 blocks side by side: each block is a clique but they never
        // overlap, so no verified covering exists.
        let a = ClosureSpace::mo(3).unwrap();
        let b =
            ClosureSpace::from_closed_sets(vec!["d".into(), "e".into(), "f".into()], []).unwrap();
        let s = ClosureSpace::direct_sum(&a, &b).unwrap();
        assert_eq!(is_weakly_connected(&s), Connectivity::Unknown);
    }

    #[test]
    fn verification_clauses_are_independent() {
        let mo4 = ClosureSpace::mo(4).unwrap();
        let short = ConnectedCovering {
            blocks: vec![PointSet(0b0011)],
        };
        assert!(!short.covers_universe(&mo4));
        assert!(short.blocks_have_third_atoms(&mo4));
        let split = ConnectedCovering {
            blocks: vec![PointSet(0b0011), PointSet(0b1100)],
        };
        assert!(split.covers_universe(&mo4));
        assert!(!split.is_chained(&mo4));
        let linked = ConnectedCovering {
            blocks: vec![PointSet(0b0111), PointSet(0b1110)],
        };
        assert!(linked.verify(&mo4));
    }
}
