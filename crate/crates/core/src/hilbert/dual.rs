use crate::error::{Error, Result};

use super::scalar::Scalar;
use super::subspace::Subspace;
use super::tensor::{check_dim, join_atoms, sigma_membership, ProductAtomPair};

/// Failure of the covering property in the dual order: a coatom `x` and a
/// two-point `R` with `x ∩ R = ∅`, `x ∨ R = 1` and `∅ ⊊ {r} ⊊ R`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualCoveringReport<S> {
    pub m: usize,
    pub n: usize,
    /// `x = σ↓[p^⊥]`.
    pub p: ProductAtomPair<S>,
    pub r: [ProductAtomPair<S>; 2],
    /// `x` is a coatom: `p^⊥` is a hyperplane spanned by product vectors.
    pub x_is_coatom: bool,
    /// `R` is closed: its join is two dimensional and contains no other
    /// product line.
    pub r_closed: bool,
    pub disjoint: bool,
    pub join_is_top: bool,
    pub strict_chain: bool,
}

impl<S> DualCoveringReport<S> {
    pub fn passes(&self) -> bool {
        self.x_is_coatom && self.r_closed && self.disjoint && self.join_is_top && self.strict_chain
    }
}

fn basis_vec<S: Scalar>(entries: &[(usize, i64)], d: usize) -> Vec<S> {
    let mut v = vec![S::zero(); d];
    for &(i, x) in entries {
        v[i] = S::from_i64(x);
    }
    v
}

/// For `R = {a⊗b, c⊗d}` with `a ∦ c` and `b ∦ d`, some 2×2 minor of
/// `s·abᵀ + t·cdᵀ` equals `κ·s·t` with `κ ≠ 0`, so every product vector of
/// the span is a multiple of `a⊗b` or `c⊗d`.
fn two_point_set_is_closed<S: Scalar>(r: &[ProductAtomPair<S>; 2], m: usize, n: usize) -> bool {
    let u = r[0].vector();
    let w = r[1].vector();
    let at = |v: &Vec<S>, i: usize, j: usize| v[i * n + j].clone();
    let mixed_minor = (0..m).any(|i1| {
        (i1 + 1..m).any(|i2| {
            (0..n).any(|j1| {
                (j1 + 1..n).any(|j2| {
                    let k = at(&u, i1, j1) * at(&w, i2, j2) + at(&w, i1, j1) * at(&u, i2, j2)
                        - at(&u, i1, j2) * at(&w, i2, j1)
                        - at(&w, i1, j2) * at(&u, i2, j1);
                    !k.is_zero()
                })
            })
        })
    });
    let span = join_atoms(r).expect("same dimensions");
    span.dim() == 2 && mixed_minor
}

/// Follows the construction with `p = (e1, e1)`, `x = σ↓[p^⊥]` and
/// `R = {(e1+e2, e1+e2), (e1−e2, e1−e2)}`.
pub fn dual_covering_counterexample<S: Scalar>(
    m: usize,
    n: usize,
) -> Result<DualCoveringReport<S>> {
    check_dim(m)?;
    check_dim(n)?;
    if m < 2 || n < 2 {
        return Err(Error::Precondition(format!(
            "both factors need dimension at least 2, got {m} and {n}"
        )));
    }
    let p = ProductAtomPair::new(basis_vec(&[(0, 1)], m), basis_vec(&[(0, 1)], n))?;
    let r = [
        ProductAtomPair::new(
            basis_vec(&[(0, 1), (1, 1)], m),
            basis_vec(&[(0, 1), (1, 1)], n),
        )?,
        ProductAtomPair::new(
            basis_vec(&[(0, 1), (1, -1)], m),
            basis_vec(&[(0, 1), (1, -1)], n),
        )?,
    ];
    let x = p.line().perp();
    let x_is_coatom = x.dim() + 1 == m * n && super::tensor::sharp_point(&p) == x;
    let r_closed = two_point_set_is_closed(&r, m, n);
    let disjoint = r.iter().all(|q| !sigma_membership(&x, q));
    let r_span = join_atoms(&r)?;
    let join_is_top = x.sum(&r_span)? == Subspace::full(m * n);
    let single = r[0].line();
    let strict_chain = single.dim() == 1
        && single.is_subspace_of(&r_span)
        && !sigma_membership(&single, &r[1])
        && r_span.dim() == 2;
    Ok(DualCoveringReport {
        m,
        n,
        p,
        r,
        x_is_coatom,
        r_closed,
        disjoint,
        join_is_top,
        strict_chain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::GaussianRational;

    #[test]
    fn square_and_rectangular_cases_pass() {
        for (m, n) in [(2, 2), (2, 3), (3, 3)] {
            let r = dual_covering_counterexample::<GaussianRational>(m, n).unwrap();
            assert!(r.passes(), "{m}x{n}: {r:?}");
        }
    }

    #[test]
    fn rejects_one_dimensional_factors() {
        assert!(dual_covering_counterexample::<GaussianRational>(1, 2).is_err());
        assert!(dual_covering_counterexample::<GaussianRational>(2, 4).is_err());
    }

    #[test]
    fn collinear_coordinates_are_not_closed() {
        let e = |v: &[i64]| {
            v.iter()
                .map(|&x| GaussianRational::from_i64(x))
                .collect::<Vec<_>>()
        };
        let r = [
            ProductAtomPair::new(e(&[1, 0]), e(&[1, 0])).unwrap(),
            ProductAtomPair::new(e(&[1, 0]), e(&[0, 1])).unwrap(),
        ];
        assert!(!two_point_set_is_closed(&r, 2, 2));
    }
}
