//! Finite simple closure spaces: a point universe together with a family of
//! closed subsets containing the empty set, the universe and every singleton,
//! closed under intersection. Such a family is a complete atomistic lattice
//! whose atoms are the points.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_POINTS, MAX_SCAN_POINTS};

#[derive(Clone, Debug)]
pub struct ClosureSpace {
    labels: Vec<String>,
    family: Vec<PointSet>,
    index: HashMap<PointSet, usize>,
}

impl PartialEq for ClosureSpace {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.family == other.family
    }
}

impl Eq for ClosureSpace {}

/// Outcome of a covering query between two comparable elements.
///
/// `intermediate` is the smallest closed set strictly between `lower` and
/// `upper` (canonical order), if there is one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverWitness {
    pub lower: PointSet,
    pub upper: PointSet,
    pub intermediate: Option<PointSet>,
}

impl CoverWitness {
    /// `upper` covers `lower`: they differ and nothing lies strictly between.
    pub fn is_cover(&self) -> bool {
        self.lower != self.upper && self.intermediate.is_none()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualOrderReport {
    pub coatomistic: bool,
    pub dual_covering: bool,
}

/// Labels `a`, `b`, ... for small universes, `p0`, `p1`, ... beyond 26 points.
pub fn default_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect()
    } else {
        (0..n).map(|i| format!("p{i}")).collect()
    }
}

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::NoPoints);
    }
    if labels.len() > MAX_POINTS {
        return Err(Error::TooLarge {
            points: labels.len(),
            cap: MAX_POINTS,
        });
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl ClosureSpace {
    /// Intersection-closure of `subsets` together with the empty set, the
    /// universe and all singletons.
    pub fn from_closed_sets<I>(labels: Vec<String>, subsets: I) -> Result<Self>
    where
        I: IntoIterator<Item = PointSet>,
    {
        check_labels(&labels)?;
        let n = labels.len();
        let full = PointSet::full(n);
        let mut family: HashSet<PointSet> = HashSet::new();
        let mut work = Vec::new();
        let seeds = [PointSet::EMPTY, full]
            .into_iter()
            .chain((0..n).map(PointSet::singleton));
        for s in seeds {
            if family.insert(s) {
                work.push(s);
            }
        }
        for s in subsets {
            if !s.is_subset(full) {
                return Err(Error::OutOfUniverse(s));
            }
            if family.insert(s) {
                work.push(s);
            }
        }
        // Every new member is intersected with every member present when it
        // is processed; members added later meet it from their own turn.
        while let Some(x) = work.pop() {
            let current: Vec<PointSet> = family.iter().copied().collect();
            for y in current {
                let z = x.intersection(y);
                if family.insert(z) {
                    work.push(z);
                }
            }
        }
        let mut family: Vec<PointSet> = family.into_iter().collect();
        family.sort_unstable();
        Ok(Self::from_sorted_family(labels, family))
    }

    /// Builds a space from a family already known to satisfy the closure
    /// axioms. The family must be sorted ascending.
    pub(crate) fn from_sorted_family(labels: Vec<String>, family: Vec<PointSet>) -> Self {
        debug_assert!(family.windows(2).all(|w| w[0] < w[1]));
        let index = family.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        ClosureSpace {
            labels,
            family,
            index,
        }
    }

    /// `MO_n`: only the empty set, the universe and the singletons.
    pub fn mo(n: usize) -> Result<Self> {
        Self::from_closed_sets(default_labels(n), [])
    }

    /// The Boolean lattice `2^n`.
    pub fn powerset(n: usize) -> Result<Self> {
        if n > MAX_SCAN_POINTS {
            return Err(Error::TooLarge {
                points: n,
                cap: MAX_SCAN_POINTS,
            });
        }
        check_labels(&default_labels(n))?;
        let family = (0..(1u32 << n)).map(PointSet).collect();
        Ok(Self::from_sorted_family(default_labels(n), family))
    }

    /// The two-element lattice on a single point.
    pub fn two() -> Self {
        Self::mo(1).expect("one point is always valid")
    }

    /// Direct product of two lattices, presented on the disjoint union of
    /// their point sets: closed sets are unions `x ∪ y`.
    pub fn direct_sum(a: &ClosureSpace, b: &ClosureSpace) -> Result<Self> {
        let mut labels = a.labels.clone();
        labels.extend(b.labels.iter().cloned());
        check_labels(&labels)?;
        let shift = a.n();
        let mut family: Vec<PointSet> = a
            .family
            .iter()
            .flat_map(|&x| {
                b.family
                    .iter()
                    .map(move |&y| PointSet(x.0 | (y.0 << shift)))
            })
            .collect();
        family.sort_unstable();
        Ok(Self::from_sorted_family(labels, family))
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, p: usize) -> &str {
        &self.labels[p]
    }

    pub fn point_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Closed sets in ascending mask order; position = element id.
    pub fn family(&self) -> &[PointSet] {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.n())
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.index.contains_key(&s)
    }

    pub fn element_id(&self, s: PointSet) -> Option<usize> {
        self.index.get(&s).copied()
    }

    pub fn element(&self, id: usize) -> PointSet {
        self.family[id]
    }

    fn require_closed(&self, s: PointSet) -> Result<()> {
        if self.is_closed(s) {
            Ok(())
        } else {
            Err(Error::NotClosed(s))
        }
    }

    /// Smallest closed superset. Assumes `subset` lies in the universe.
    pub(crate) fn close(&self, subset: PointSet) -> PointSet {
        if self.is_closed(subset) {
            return subset;
        }
        self.family
            .iter()
            .filter(|c| subset.is_subset(**c))
            .fold(self.full(), |acc, &c| acc.intersection(c))
    }

    pub fn closure(&self, subset: PointSet) -> Result<PointSet> {
        if !subset.is_subset(self.full()) {
            return Err(Error::OutOfUniverse(subset));
        }
        Ok(self.close(subset))
    }

    pub fn meet(&self, a: PointSet, b: PointSet) -> Result<PointSet> {
        self.require_closed(a)?;
        self.require_closed(b)?;
        Ok(a.intersection(b))
    }

    pub fn join(&self, a: PointSet, b: PointSet) -> Result<PointSet> {
        self.require_closed(a)?;
        self.require_closed(b)?;
        Ok(self.close(a.union(b)))
    }

    pub fn atoms(&self) -> Vec<PointSet> {
        (0..self.n()).map(PointSet::singleton).collect()
    }

    /// Maximal proper elements, ascending.
    pub fn coatoms(&self) -> Vec<PointSet> {
        let full = self.full();
        self.family
            .iter()
            .copied()
            .filter(|&c| c != full && self.covers_fast(c, full))
            .collect()
    }

    /// Coatoms lying above `a`.
    pub fn coatoms_above(&self, a: PointSet) -> Vec<PointSet> {
        self.coatoms()
            .into_iter()
            .filter(|x| a.is_subset(*x))
            .collect()
    }

    /// `upper` covers `lower` for closed `lower ⊊ upper`: every point added
    /// to `lower` already generates `upper`.
    pub(crate) fn covers_fast(&self, lower: PointSet, upper: PointSet) -> bool {
        lower != upper
            && upper
                .difference(lower)
                .iter()
                .all(|q| self.close(lower.with(q)) == upper)
    }

    /// Smallest closed set strictly between `lower` and `upper`.
    pub(crate) fn first_intermediate(&self, lower: PointSet, upper: PointSet) -> Option<PointSet> {
        self.family
            .iter()
            .copied()
            .find(|&c| lower.is_proper_subset(c) && c.is_proper_subset(upper))
    }

    pub fn covers(&self, lower: PointSet, upper: PointSet) -> Result<CoverWitness> {
        self.require_closed(lower)?;
        self.require_closed(upper)?;
        if !lower.is_subset(upper) {
            return Err(Error::NotBelow { lower, upper });
        }
        Ok(CoverWitness {
            lower,
            upper,
            intermediate: self.first_intermediate(lower, upper),
        })
    }

    /// Coatomisticity and the covering property of the order dual.
    pub fn dual_order_check(&self) -> DualOrderReport {
        let full = self.full();
        let coatoms = self.coatoms();
        let coatomistic = self.family.iter().all(|&a| {
            let meet = coatoms
                .iter()
                .filter(|x| a.is_subset(**x))
                .fold(full, |acc, &x| acc.intersection(x));
            meet == a
        });
        // Dual atoms are coatoms x; x ∧* a = 0* means x ∨ a = 1, and then
        // a must cover x ∧ a.
        let dual_covering = coatoms.iter().all(|&x| {
            self.family.iter().all(|&a| {
                a.is_subset(x)
                    || self.close(x.union(a)) != full
                    || self.covers_fast(x.intersection(a), a)
            })
        });
        DualOrderReport {
            coatomistic,
            dual_covering,
        }
    }

    /// `a` is central when its set complement is closed and
    /// `x ↦ (x ∧ a, x ∧ a^c)` is an isomorphism onto `[0,a] × [0,a^c]`, i.e.
    /// every union of a closed set below `a` and one below `a^c` is closed.
    pub fn is_central(&self, a: PointSet) -> bool {
        let ac = a.complement(self.n());
        if !self.is_closed(a) || !self.is_closed(ac) {
            return false;
        }
        let below_a: Vec<_> = self.family.iter().filter(|y| y.is_subset(a)).collect();
        let below_ac: Vec<_> = self.family.iter().filter(|z| z.is_subset(ac)).collect();
        below_a
            .iter()
            .all(|&&y| below_ac.iter().all(|&&z| self.is_closed(y.union(z))))
    }

    pub fn center(&self) -> Vec<PointSet> {
        self.family
            .iter()
            .copied()
            .filter(|&a| self.is_central(a))
            .collect()
    }

    /// Meet of the central elements containing point `p`.
    pub fn central_cover(&self, p: usize) -> PointSet {
        self.center()
            .into_iter()
            .filter(|a| a.contains(p))
            .fold(self.full(), |acc, a| acc.intersection(a))
    }

    /// Atom sets of the minimal nonzero central elements, ordered by their
    /// smallest point. They partition the universe.
    pub fn irreducible_components(&self) -> Vec<PointSet> {
        let mut comps: Vec<PointSet> = Vec::new();
        let mut rest = self.full();
        while let Some(p) = rest.first() {
            let e = self.central_cover(p);
            comps.push(e);
            rest = rest.difference(e);
        }
        comps
    }

    /// Restriction of the family to the interval `[0, a]`, re-indexed on
    /// the points of `a`.
    pub fn lower_interval(&self, a: PointSet) -> Result<ClosureSpace> {
        self.require_closed(a)?;
        let pts: Vec<usize> = a.iter().collect();
        let relabel = |s: PointSet| {
            PointSet::from_points(
                pts.iter()
                    .enumerate()
                    .filter(|(_, &p)| s.contains(p))
                    .map(|(i, _)| i),
            )
        };
        let labels = pts.iter().map(|&p| self.labels[p].clone()).collect();
        let mut family: Vec<PointSet> = self
            .family
            .iter()
            .filter(|s| s.is_subset(a))
            .map(|&s| relabel(s))
            .collect();
        family.sort_unstable();
        Ok(ClosureSpace::from_sorted_family(labels, family))
    }

    /// Image of a point set under a point permutation.
    pub fn permute(perm: &[usize], s: PointSet) -> PointSet {
        s.iter().map(|p| perm[p]).collect()
    }

    /// Renders a point set as space-separated labels, `-` for the empty set.
    pub fn render(&self, s: PointSet) -> String {
        if s.is_empty() {
            "-".to_string()
        } else {
            s.iter()
                .map(|p| self.labels[p].as_str())
                .collect::<Vec<_>>()
                .join(" ")
        }
    }

    /// Renders a point set as `{a b c}`.
    pub fn render_braced(&self, s: PointSet) -> String {
        let inner: Vec<&str> = s.iter().map(|p| self.labels[p].as_str()).collect();
        format!("{{{}}}", inner.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &ClosureSpace, labels: &[&str]) -> PointSet {
        labels.iter().map(|l| s.point_index(l).unwrap()).collect()
    }

    /// Naive fixpoint: keep intersecting all pairs until nothing new appears.
    fn naive_closure(n: usize, gens: &[PointSet]) -> Vec<PointSet> {
        let mut fam: Vec<PointSet> = vec![PointSet::EMPTY, PointSet::full(n)];
        fam.extend((0..n).map(PointSet::singleton));
        fam.extend_from_slice(gens);
        loop {
            let mut next = fam.clone();
            for &x in &fam {
                for &y in &fam {
                    next.push(x.intersection(y));
                }
            }
            next.sort_unstable();
            next.dedup();
            if next.len() == fam.len() {
                return next;
            }
            fam = next;
        }
    }

    #[test]
    fn two_points_without_generators_is_powerset() {
        let s = ClosureSpace::mo(2).unwrap();
        assert_eq!(s.family(), ClosureSpace::powerset(2).unwrap().family());
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn mo3_has_five_elements() {
        let s = ClosureSpace::mo(3).unwrap();
        assert_eq!(s.len(), 5);
    }

    #[test]
    fn one_generator_on_three_points() {
        let labels = default_labels(3);
        let ab = PointSet::from_points([0, 1]);
        let s = ClosureSpace::from_closed_sets(labels, [ab]).unwrap();
        assert_eq!(s.family(), naive_closure(3, &[ab]).as_slice());
        assert_eq!(s.len(), 6);
        assert_eq!(s.closure(ab).unwrap(), ab);
        let a = PointSet::singleton(0);
        let b = PointSet::singleton(1);
        assert_eq!(s.join(a, b).unwrap(), ab);
    }

    #[test]
    fn construction_is_idempotent() {
        let labels = default_labels(4);
        let gens = [PointSet(0b0011), PointSet(0b0110)];
        let s = ClosureSpace::from_closed_sets(labels.clone(), gens).unwrap();
        let again = ClosureSpace::from_closed_sets(labels, s.family().iter().copied()).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn rejects_empty_and_oversized_universes() {
        assert_eq!(ClosureSpace::mo(0).unwrap_err(), Error::NoPoints);
        assert!(matches!(
            ClosureSpace::mo(25).unwrap_err(),
            Error::TooLarge { points: 25, .. }
        ));
        assert!(matches!(
            ClosureSpace::powerset(21).unwrap_err(),
            Error::TooLarge { .. }
        ));
    }

    #[test]
    fn mo3_closures_and_joins() {
        let s = ClosureSpace::mo(3).unwrap();
        let ab = set(&s, &["a", "b"]);
        assert_eq!(s.closure(ab).unwrap(), s.full());
        assert_eq!(s.closure(PointSet::EMPTY).unwrap(), PointSet::EMPTY);
        let a = set(&s, &["a"]);
        let b = set(&s, &["b"]);
        assert_eq!(s.join(a, b).unwrap(), s.full());
        assert_eq!(s.meet(a, s.full()).unwrap(), a);
        assert!(matches!(s.join(ab, a), Err(Error::NotClosed(_))));
    }

    #[test]
    fn atoms_and_coatoms() {
        let mo3 = ClosureSpace::mo(3).unwrap();
        assert_eq!(mo3.coatoms(), mo3.atoms());
        let p3 = ClosureSpace::powerset(3).unwrap();
        let co: Vec<usize> = p3.coatoms().iter().map(|c| c.len()).collect();
        assert_eq!(co, vec![2, 2, 2]);
    }

    #[test]
    fn covering_queries() {
        let mo3 = ClosureSpace::mo(3).unwrap();
        let w = mo3.covers(PointSet::singleton(0), mo3.full()).unwrap();
        assert!(w.is_cover());
        let p3 = ClosureSpace::powerset(3).unwrap();
        let w = p3.covers(PointSet::EMPTY, p3.full()).unwrap();
        assert!(!w.is_cover());
        assert_eq!(w.intermediate, Some(PointSet::singleton(0)));
        assert!(matches!(
            p3.covers(PointSet::singleton(0), PointSet::singleton(1)),
            Err(Error::NotBelow { .. })
        ));
    }

    #[test]
    fn dual_order_of_boolean_and_mo3() {
        let p3 = ClosureSpace::powerset(3).unwrap();
        assert_eq!(
            p3.dual_order_check(),
            DualOrderReport {
                coatomistic: true,
                dual_covering: true
            }
        );
        let mo3 = ClosureSpace::mo(3).unwrap();
        assert_eq!(
            mo3.dual_order_check(),
            DualOrderReport {
                coatomistic: true,
                dual_covering: true
            }
        );
    }

    #[test]
    fn chain_is_not_coatomistic() {
        // Coatoms are {a,b} and {c}; {a} lies only under {a,b}.
        let s = ClosureSpace::from_closed_sets(default_labels(3), [PointSet(0b011)]).unwrap();
        assert!(!s.dual_order_check().coatomistic);
    }

    #[test]
    fn center_of_mo3_and_powerset() {
        let mo3 = ClosureSpace::mo(3).unwrap();
        assert_eq!(mo3.center(), vec![PointSet::EMPTY, mo3.full()]);
        for p in 0..3 {
            assert_eq!(mo3.central_cover(p), mo3.full());
        }
        let p3 = ClosureSpace::powerset(3).unwrap();
        assert_eq!(p3.center().len(), 8);
        for p in 0..3 {
            assert_eq!(p3.central_cover(p), PointSet::singleton(p));
        }
        assert_eq!(p3.irreducible_components().len(), 3);
    }

    #[test]
    fn center_of_direct_sum_of_two_mo3() {
        let mo3 = ClosureSpace::mo(3).unwrap();
        let other =
            ClosureSpace::from_closed_sets(vec!["d".into(), "e".into(), "f".into()], []).unwrap();
        let s = ClosureSpace::direct_sum(&mo3, &other).unwrap();
        let b1 = PointSet(0b000111);
        let b2 = PointSet(0b111000);
        // Oracle: the family is exactly {y ∪ z}, so both blocks split it.
        assert_eq!(s.len(), 25);
        assert_eq!(s.center(), vec![PointSet::EMPTY, b1, b2, s.full()]);
        assert_eq!(s.irreducible_components(), vec![b1, b2]);
        assert_eq!(s.central_cover(4), b2);
    }

    #[test]
    fn lower_interval_of_line() {
        let s = ClosureSpace::from_closed_sets(default_labels(3), [PointSet(0b011)]).unwrap();
        let i = s.lower_interval(PointSet(0b011)).unwrap();
        assert_eq!(i.n(), 2);
        assert_eq!(i.len(), 4);
    }
}
