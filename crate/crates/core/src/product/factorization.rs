use itertools::Itertools;

use crate::closure::ClosureSpace;
use crate::props::Automorphism;

use super::universe::ProductUniverse;

/// `u(p)_{f(i)} = v_i(p_i)` for every point `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// `f`, a permutation of the factor indices.
    pub factor_perm: Vec<usize>,
    /// `v_i` as a point map from factor `i` to factor `f(i)`.
    pub maps: Vec<Vec<usize>>,
}

/// No factor permutation works. `point` is the first point where the
/// coordinate-wise reading under the identity permutation breaks down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonProduct {
    pub point: usize,
}

fn is_isomorphism(from: &ClosureSpace, to: &ClosureSpace, v: &[usize]) -> bool {
    from.len() == to.len()
        && v.iter()
            .copied()
            .collect::<std::collections::BTreeSet<_>>()
            .len()
            == to.n()
        && from
            .family()
            .iter()
            .all(|&c| to.is_closed(ClosureSpace::permute(v, c)))
}

fn try_permutation(
    u: &ProductUniverse,
    aut: &Automorphism,
    f: &[usize],
) -> Result<Vec<Vec<usize>>, usize> {
    let base = 0usize;
    let maps: Vec<Vec<usize>> = (0..u.arity())
        .map(|i| {
            (0..u.radix(i))
                .map(|s| u.coord(aut.point_perm[u.with_coord(base, i, s)], f[i]))
                .collect()
        })
        .collect();
    for p in 0..u.n() {
        let img = aut.point_perm[p];
        if (0..u.arity()).any(|i| u.coord(img, f[i]) != maps[i][u.coord(p, i)]) {
            return Err(p);
        }
    }
    if (0..u.arity()).all(|i| is_isomorphism(u.factor(i), u.factor(f[i]), &maps[i])) {
        Ok(maps)
    } else {
        Err(0)
    }
}

/// Tries every factor permutation matching radices, in lexicographic order.
pub fn check_factorization(
    u: &ProductUniverse,
    aut: &Automorphism,
) -> Result<Factorization, NonProduct> {
    let mut first_failure = None;
    for f in (0..u.arity()).permutations(u.arity()) {
        if (0..u.arity()).any(|i| u.radix(i) != u.radix(f[i])) {
            continue;
        }
        match try_permutation(u, aut, &f) {
            Ok(maps) => {
                return Ok(Factorization {
                    factor_perm: f,
                    maps,
                })
            }
            Err(p) => {
                first_failure.get_or_insert(p);
            }
        }
    }
    Err(NonProduct {
        point: first_failure.unwrap_or(0),
    })
}
