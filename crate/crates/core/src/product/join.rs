use crate::pointset::PointSet;

use super::universe::ProductUniverse;

/// `⋁_β R = ⋃_p p[⋁ R_β[p]]`: close every β-section in its factor.
pub fn beta_join(u: &ProductUniverse, r: PointSet, beta: usize) -> PointSet {
    let f = u.factor(beta);
    u.line_bases(beta)
        .map(|base| {
            let s = u.section(r, beta, base);
            u.place(base, beta, f.close(s))
        })
        .fold(PointSet::EMPTY, PointSet::union)
}

/// `R⁰, R¹ = ⋁_{f(1)} R⁰, …` for the factor order `order`.
pub fn beta_sequence(u: &ProductUniverse, r: PointSet, order: &[usize]) -> Vec<PointSet> {
    let mut out = vec![r];
    let mut cur = r;
    for &beta in order {
        cur = beta_join(u, cur, beta);
        out.push(cur);
    }
    out
}

/// Round-robin β-joins until a full pass changes nothing. The result is
/// the join of `R` in the Fraser product.
pub fn fraser_join(u: &ProductUniverse, r: PointSet) -> PointSet {
    let mut cur = r;
    let mut stable = 0;
    let mut beta = 0;
    while stable < u.arity() {
        let next = beta_join(u, cur, beta);
        if next == cur {
            stable += 1;
        } else {
            stable = 1;
            cur = next;
        }
        beta = (beta + 1) % u.arity();
    }
    cur
}

/// Intersection of every cylinder union containing `R`; the join of `R`
/// in the box product.
pub fn box_join(u: &ProductUniverse, r: PointSet) -> PointSet {
    u.cylinders()
        .into_iter()
        .filter(|c| r.is_subset(*c))
        .fold(u.full(), PointSet::intersection)
}

/// All coordinates pairwise distinct across `R`.
pub fn in_xi(u: &ProductUniverse, r: PointSet) -> bool {
    let pts: Vec<usize> = r.iter().collect();
    pts.iter().enumerate().all(|(i, &p)| {
        pts[i + 1..]
            .iter()
            .all(|&q| (0..u.arity()).all(|b| u.coord(p, b) != u.coord(q, b)))
    })
}
