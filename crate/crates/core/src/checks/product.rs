use std::collections::BTreeSet;

use itertools::Itertools;

use crate::closure::ClosureSpace;
use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_SCAN_POINTS};
use crate::product::{
    beta_join, beta_sequence, box_join, box_product, check_factorization, check_p1_p2_p3, check_p4,
    circle_product, coatom_structure, fraser_join, fraser_product, is_fraser_closed, mo_size,
    sharp_map, AxiomViolation, CoatomDecomposition, HalfCross, ProductUniverse,
};
use crate::props::{
    automorphisms, find_orthocomplementation, is_orthomodular, validate_orthomap, BranchOrder,
    OrthoMap, OrthoSearch, OrthomodularFailure, DEFAULT_NODE_LIMIT,
};
use crate::report::Verdict;

use super::Outcome;

fn scan_cap(u: &ProductUniverse) -> Result<()> {
    if u.n() > MAX_SCAN_POINTS {
        return Err(Error::TooLarge {
            points: u.n(),
            cap: MAX_SCAN_POINTS,
        });
    }
    Ok(())
}

fn all_subsets(u: &ProductUniverse) -> impl Iterator<Item = PointSet> {
    (0..1u64 << u.n()).map(|b| PointSet(b as u32))
}

fn is_subfamily(a: &ClosureSpace, b: &ClosureSpace) -> bool {
    a.family().iter().all(|&c| b.is_closed(c))
}

fn first_extra(a: &ClosureSpace, b: &ClosureSpace) -> Option<PointSet> {
    a.family().iter().copied().find(|&c| !b.is_closed(c))
}

/// Factor orthocomplementations, or the index and certificate of the first
/// factor without one.
fn factor_maps(u: &ProductUniverse) -> Result<std::result::Result<Vec<OrthoMap>, Outcome>> {
    let mut maps = Vec::new();
    for (i, f) in u.factors().iter().enumerate() {
        match find_orthocomplementation(f, BranchOrder::Canonical, DEFAULT_NODE_LIMIT)? {
            OrthoSearch::Found(m) => maps.push(m),
            OrthoSearch::Exhausted(cert) => {
                return Ok(Err(Outcome::new(
                    Verdict::None,
                    format!("factor {i} has no orthocomplementation: {cert}"),
                )))
            }
        }
    }
    Ok(Ok(maps))
}

pub fn sharp_valid(u: &ProductUniverse, space: &ClosureSpace) -> Result<Outcome> {
    let maps = match factor_maps(u)? {
        Ok(m) => m,
        Err(none) => return Ok(none),
    };
    let sharp = sharp_map(u, space, &maps)?;
    Ok(match validate_orthomap(space, &sharp.map) {
        Ok(()) => Outcome::pass(""),
        Err(v) => Outcome::new(
            Verdict::Fail,
            format!(
                "law {} at {}{}",
                v.law,
                space.render_braced(v.a),
                v.b.map_or(String::new(), |b| format!(
                    " and {}",
                    space.render_braced(b)
                ))
            ),
        ),
    })
}

pub fn sharp_orthomodular(u: &ProductUniverse, space: &ClosureSpace) -> Result<Outcome> {
    let maps = match factor_maps(u)? {
        Ok(m) => m,
        Err(none) => return Ok(none),
    };
    let sharp = sharp_map(u, space, &maps)?;
    Ok(match is_orthomodular(space, &sharp.map) {
        Ok(()) => Outcome::pass(""),
        Err(OrthomodularFailure::Invalid(v)) => Outcome::new(
            Verdict::Fail,
            format!("not an orthocomplementation: law {}", v.law),
        ),
        Err(OrthomodularFailure::Witness { a, b }) => Outcome::new(
            Verdict::Fail,
            format!("a {} b {}", space.render_braced(a), space.render_braced(b)),
        ),
    })
}

/// Isomorphisms `from → to` as point maps, by brute force.
fn isomorphisms(from: &ClosureSpace, to: &ClosureSpace) -> Vec<Vec<usize>> {
    if from.n() != to.n() || from.len() != to.len() {
        return Vec::new();
    }
    (0..from.n())
        .permutations(from.n())
        .filter(|v| {
            from.family()
                .iter()
                .all(|&c| to.is_closed(ClosureSpace::permute(v, c)))
        })
        .collect()
}

/// Point permutations induced by a factor permutation `f` and isomorphisms
/// `L_i → L_f(i)`.
fn predicted_automorphisms(u: &ProductUniverse) -> BTreeSet<Vec<usize>> {
    let k = u.arity();
    let mut out = BTreeSet::new();
    for f in (0..k).permutations(k) {
        let isos: Vec<Vec<Vec<usize>>> = (0..k)
            .map(|i| isomorphisms(u.factor(i), u.factor(f[i])))
            .collect();
        for choice in isos.iter().map(|v| v.iter()).multi_cartesian_product() {
            let perm = (0..u.n())
                .map(|p| {
                    let mut t = vec![0; k];
                    for i in 0..k {
                        t[f[i]] = choice[i][u.coord(p, i)];
                    }
                    u.index(&t).expect("coordinates in range")
                })
                .collect();
            out.insert(perm);
        }
    }
    out
}

pub fn automorphisms_factor(u: &ProductUniverse, space: &ClosureSpace) -> Result<Outcome> {
    let auts = automorphisms(space)?;
    if let Some(bad) = auts.iter().find(|a| check_factorization(u, a).is_err()) {
        return Ok(Outcome::new(
            Verdict::Fail,
            format!("non-product automorphism {:?}", bad.point_perm),
        ));
    }
    let predicted = predicted_automorphisms(u);
    let found: BTreeSet<Vec<usize>> = auts.into_iter().map(|a| a.point_perm).collect();
    let w = format!("count {} predicted {}", found.len(), predicted.len());
    Ok(Outcome::new(Verdict::from_bool(found == predicted), w))
}

fn render_violation(space: &ClosureSpace, v: &AxiomViolation) -> String {
    match v {
        AxiomViolation::P1 { expected, got } => {
            format!("P1 universe {got} points expected {expected}")
        }
        AxiomViolation::P2 { cylinder } => {
            format!("P2 cylinder {} not closed", space.render_braced(*cylinder))
        }
        AxiomViolation::P3 {
            closed,
            factor,
            section,
        } => format!(
            "P3 closed {} factor {} section {:?}",
            space.render_braced(*closed),
            factor,
            section.iter().collect::<Vec<_>>()
        ),
    }
}

pub fn axioms(u: &ProductUniverse, space: &ClosureSpace) -> Outcome {
    match check_p1_p2_p3(space, u) {
        Ok(()) => Outcome::pass(""),
        Err(v) => Outcome::new(Verdict::Fail, render_violation(space, &v)),
    }
}

pub fn axiom_p4(u: &ProductUniverse, space: &ClosureSpace) -> Result<Outcome> {
    let groups = u
        .factors()
        .iter()
        .map(automorphisms)
        .collect::<Result<Vec<_>>>()?;
    let size: usize = groups.iter().map(Vec::len).product();
    Ok(match check_p4(space, u, &groups) {
        Ok(()) => Outcome::pass(format!("group elements {size}")),
        Err(v) => Outcome::new(
            Verdict::Fail,
            format!(
                "choice {:?} closed {} image {}",
                v.choice,
                space.render_braced(v.closed),
                space.render_braced(v.image)
            ),
        ),
    })
}

/// The product with its one-point factors dropped is the remaining factor.
pub fn unit_factor(u: &ProductUniverse, space: &ClosureSpace) -> Result<Outcome> {
    let big: Vec<usize> = (0..u.arity()).filter(|&i| u.radix(i) > 1).collect();
    let [j] = big[..] else {
        return Err(Error::Precondition(
            "unit-factor needs exactly one factor with more than one point".into(),
        ));
    };
    let factor = u.factor(j);
    let projected: BTreeSet<PointSet> = space.family().iter().map(|&c| u.project(c, j)).collect();
    let same = space.len() == factor.len() && projected.iter().eq(factor.family().iter());
    let w = format!("sizes {} {}", space.len(), factor.len());
    Ok(Outcome::new(Verdict::from_bool(same), w))
}

/// Box, Fraser and the section-closed family computed directly.
pub fn box_equals_fraser(u: &ProductUniverse) -> Result<Outcome> {
    scan_cap(u)?;
    let boxed = box_product(u)?;
    let fraser = fraser_product(u)?;
    let nontrivial: Vec<usize> = (0..u.arity())
        .filter(|&b| u.factor(b).len() != 1 << u.radix(b))
        .collect();
    let sections: Vec<PointSet> = all_subsets(u)
        .filter(|&r| {
            nontrivial
                .iter()
                .all(|&b| (0..u.n()).all(|p| u.factor(b).is_closed(u.section(r, b, p))))
        })
        .collect();
    if fraser.family() != &sections[..] {
        return Ok(Outcome::new(
            Verdict::Fail,
            "fraser differs from section-closed sets",
        ));
    }
    Ok(match first_extra(&fraser, &boxed) {
        None => Outcome::pass(format!("size {}", boxed.len())),
        Some(r) => Outcome::new(
            Verdict::Fail,
            format!(
                "fraser-closed {} box-join {} sizes {} {}",
                fraser.render_braced(r),
                fraser.render_braced(box_join(u, r)),
                boxed.len(),
                fraser.len()
            ),
        ),
    })
}

pub fn fraser_fixpoint(u: &ProductUniverse) -> Result<Outcome> {
    scan_cap(u)?;
    let mut checked = 0u64;
    for r in all_subsets(u) {
        let fixed = (0..u.arity()).all(|b| beta_join(u, r, b) == r);
        if fixed != is_fraser_closed(u, r) {
            return Ok(Outcome::new(
                Verdict::Fail,
                format!("exception {:?}", r.iter().collect::<Vec<_>>()),
            ));
        }
        checked += 1;
    }
    Ok(Outcome::pass(format!("subsets {checked}")))
}

pub fn cross_coatoms(u: &ProductUniverse, space: &ClosureSpace) -> Outcome {
    let coatoms: BTreeSet<PointSet> = space.coatoms().into_iter().collect();
    let mut crosses = 0;
    let mut outside = 0;
    for choice in u
        .factors()
        .iter()
        .map(|f| f.coatoms())
        .multi_cartesian_product()
    {
        let x = u.cross(&choice);
        if !coatoms.contains(&x) {
            return Outcome::new(
                Verdict::Fail,
                format!("cross {} is not a coatom", space.render_braced(x)),
            );
        }
        for q in u.full().difference(x) {
            if fraser_join(u, x.with(q)) != u.full() {
                return Outcome::new(
                    Verdict::Fail,
                    format!(
                        "cross {} with {} joins below top",
                        space.render_braced(x),
                        space.label(q)
                    ),
                );
            }
            outside += 1;
        }
        crosses += 1;
    }
    Outcome::pass(format!("crosses {crosses} points-outside {outside}"))
}

pub fn coatom_decomposition(u: &ProductUniverse, space: &ClosureSpace) -> Result<Outcome> {
    let mut checked = 0;
    for j in 0..u.arity() {
        for half in HalfCross::all(u, j) {
            let h = half.render(u);
            for z in space.coatoms_above(h) {
                if let CoatomDecomposition::NonConforming { .. } =
                    coatom_structure(u, space, z, &half)?
                {
                    return Ok(Outcome::new(
                        Verdict::Fail,
                        format!(
                            "coatom {} above {}",
                            space.render_braced(z),
                            space.render_braced(h)
                        ),
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(Outcome::pass(format!("coatoms {checked}")))
}

/// Covering failure of the Fraser product of two `MO_n`, `n >= 4`: the
/// β-joins of `{(a,a),(b,b),(c,c),(a,b)}` climb to the top, while
/// `{(a,a),(b,b),(c,c)} ⊊ {(a,a),(b,b),(c,c),(d,d)}` lies strictly between
/// the antichain and its join with `(a,b)`.
pub fn fraser_covering_construction(u: &ProductUniverse, space: &ClosureSpace) -> Result<Outcome> {
    let ok = u.arity() == 2
        && u.factors()
            .iter()
            .all(|f| mo_size(f).is_some_and(|k| k >= 4));
    if !ok {
        return Err(Error::Precondition(
            "the covering construction needs two factors MO_n with n >= 4".into(),
        ));
    }
    let pt = |i: usize, j: usize| u.index(&[i, j]).expect("in range");
    let diag3 = PointSet::from_points([pt(0, 0), pt(1, 1), pt(2, 2)]);
    let diag4 = diag3.with(pt(3, 3));
    let t = pt(0, 1);
    let r0 = diag3.with(t);
    let seq = beta_sequence(u, r0, &[1, 0, 1]);
    let row_a = u.place(pt(0, 0), 1, u.factor(1).full());
    let col = |j: usize| u.place(pt(0, j), 0, u.factor(0).full());
    let expected = [
        r0,
        r0.union(row_a),
        r0.union(row_a).union(col(1)).union(col(2)),
        u.full(),
    ];
    let sequence_ok = seq[..] == expected[..];
    let chain_ok = space.is_closed(diag3)
        && space.is_closed(diag4)
        && space.closure(diag3.with(t))? == u.full()
        && diag3.is_proper_subset(diag4)
        && diag4.is_proper_subset(u.full());
    let w = seq[1..]
        .iter()
        .enumerate()
        .map(|(i, &r)| format!("R{} {}", i + 1, space.render_braced(r)))
        .join(" ");
    Ok(Outcome::new(Verdict::from_bool(sequence_ok && chain_ok), w))
}

/// `box ⊊ circle ⊊ fraser` with an element witnessing each step.
pub fn strict_chain(u: &ProductUniverse) -> Result<Outcome> {
    let boxed = box_product(u)?;
    let circle = circle_product(u)?;
    let fraser = fraser_product(u)?;
    if !is_subfamily(&boxed, &circle) || !is_subfamily(&circle, &fraser) {
        return Ok(Outcome::new(Verdict::Fail, "families are not nested"));
    }
    let show = |s: Option<PointSet>| s.map_or("none".to_string(), |s| fraser.render_braced(s));
    let lower = first_extra(&circle, &boxed);
    let upper = first_extra(&fraser, &circle);
    let w = format!(
        "circle-only {} fraser-only {} sizes {} {} {}",
        show(lower),
        show(upper),
        boxed.len(),
        circle.len(),
        fraser.len()
    );
    Ok(Outcome::new(
        Verdict::from_bool(lower.is_some() && upper.is_some()),
        w,
    ))
}
