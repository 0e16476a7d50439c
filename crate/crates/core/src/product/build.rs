use crate::closure::ClosureSpace;
use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_SCAN_POINTS};

use super::join::{fraser_join, in_xi};
use super::universe::ProductUniverse;

/// Intersection closure of all cylinder unions.
pub fn box_product(u: &ProductUniverse) -> Result<ClosureSpace> {
    ClosureSpace::from_closed_sets(u.labels(), u.cylinders())
}

/// Every `R` all of whose sections are closed in their factors.
///
/// Universes up to 20 points are scanned subset by subset. Larger ones are
/// enumerated in lectic order with the Fraser join as closure operator.
pub fn fraser_product(u: &ProductUniverse) -> Result<ClosureSpace> {
    let family = if u.n() <= MAX_SCAN_POINTS {
        let test = SectionTest::new(u);
        (0..1u64 << u.n())
            .map(|bits| PointSet(bits as u32))
            .filter(|&r| test.accepts(r))
            .collect()
    } else {
        next_closure(u.n(), |r| fraser_join(u, r))
    };
    Ok(ClosureSpace::from_sorted_family(u.labels(), family))
}

/// `{R | R_β[p] ∈ L_β for all p, β}` restricted to the given candidates.
pub fn fraser_members(
    u: &ProductUniverse,
    candidates: impl IntoIterator<Item = PointSet>,
) -> Vec<PointSet> {
    let test = SectionTest::new(u);
    candidates
        .into_iter()
        .filter(|&r| test.accepts(r))
        .collect()
}

/// Whether every section of `r` is closed.
pub fn is_fraser_closed(u: &ProductUniverse, r: PointSet) -> bool {
    SectionTest::new(u).accepts(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    Box,
    Fraser,
    Circle,
}

impl std::str::FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "box" => Ok(ProductKind::Box),
            "fraser" => Ok(ProductKind::Fraser),
            "circle" => Ok(ProductKind::Circle),
            other => Err(Error::Precondition(format!(
                "unknown product kind `{other}`"
            ))),
        }
    }
}

impl std::fmt::Display for ProductKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ProductKind::Box => "box",
            ProductKind::Fraser => "fraser",
            ProductKind::Circle => "circle",
        })
    }
}

pub fn build_product(kind: ProductKind, u: &ProductUniverse) -> Result<ClosureSpace> {
    match kind {
        ProductKind::Box => box_product(u),
        ProductKind::Fraser => fraser_product(u),
        ProductKind::Circle => circle_product(u),
    }
}

/// Number of atoms if the space is `MO_n` with `n >= 3`.
pub fn mo_size(space: &ClosureSpace) -> Option<usize> {
    (space.n() >= 3 && space.len() == space.n() + 2).then_some(space.n())
}

/// `MO_{Σ1} ⋀ MO_{Σ2}` together with every three-element set whose
/// coordinates are pairwise distinct. The union is checked to be
/// intersection closed before it is returned.
pub fn circle_product(u: &ProductUniverse) -> Result<ClosureSpace> {
    if u.arity() != 2 || u.factors().iter().any(|f| mo_size(f).is_none()) {
        return Err(Error::Precondition(
            "circle product needs exactly two factors of the form MO_n with n >= 3".into(),
        ));
    }
    let boxed = box_product(u)?;
    let mut family = boxed.family().to_vec();
    let n = u.n();
    for p in 0..n {
        for q in p + 1..n {
            for r in q + 1..n {
                let s = PointSet::from_points([p, q, r]);
                if in_xi(u, s) {
                    family.push(s);
                }
            }
        }
    }
    family.sort_unstable();
    family.dedup();
    let lookup: std::collections::HashSet<PointSet> = family.iter().copied().collect();
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if !lookup.contains(&a.intersection(b)) {
                return Err(Error::NotClosed(a.intersection(b)));
            }
        }
    }
    Ok(ClosureSpace::from_sorted_family(u.labels(), family))
}

/// [`circle_product`] of `MO_{s1}` and `MO_{s2}`.
pub fn mo_circle(s1: usize, s2: usize) -> Result<ClosureSpace> {
    if s1 < 3 || s2 < 3 {
        return Err(Error::Precondition(format!(
            "circle product needs factors MO_n with n >= 3, got {s1} and {s2}"
        )));
    }
    circle_product(&ProductUniverse::new(vec![
        ClosureSpace::mo(s1)?,
        ClosureSpace::mo(s2)?,
    ])?)
}

/// Ganter's NextClosure: all closed sets of `close` in lectic order, then
/// sorted by mask.
pub fn next_closure(n: usize, close: impl Fn(PointSet) -> PointSet) -> Vec<PointSet> {
    let mut out = Vec::new();
    let mut a = close(PointSet::EMPTY);
    loop {
        out.push(a);
        let mut next = None;
        for i in (0..n).rev() {
            if a.contains(i) {
                continue;
            }
            let below = PointSet(a.bits() & ((1u32 << i) - 1));
            let b = close(below.with(i));
            let new_low = PointSet(b.difference(a).bits() & ((1u32 << i) - 1));
            if new_low.is_empty() {
                next = Some(b);
                break;
            }
        }
        match next {
            Some(b) => a = b,
            None => break,
        }
    }
    out.sort_unstable();
    out
}

/// Precomputed lines and closed-section lookup per factor.
struct SectionTest {
    // (stride positions of a β-line, closedness table of factor β)
    lines: Vec<(Vec<usize>, usize)>,
    closed: Vec<Vec<bool>>,
}

impl SectionTest {
    fn new(u: &ProductUniverse) -> Self {
        let mut lines = Vec::new();
        let mut closed = Vec::new();
        for beta in 0..u.arity() {
            let f = u.factor(beta);
            let mut table = vec![false; 1 << f.n()];
            for c in f.family() {
                table[c.bits() as usize] = true;
            }
            closed.push(table);
            for base in u.line_bases(beta) {
                let pts = (0..u.radix(beta))
                    .map(|q| u.with_coord(base, beta, q))
                    .collect();
                lines.push((pts, beta));
            }
        }
        SectionTest { lines, closed }
    }

    fn accepts(&self, r: PointSet) -> bool {
        self.lines.iter().all(|(pts, beta)| {
            let mut s = 0usize;
            for (q, &p) in pts.iter().enumerate() {
                if r.contains(p) {
                    s |= 1 << q;
                }
            }
            self.closed[*beta][s]
        })
    }
}
