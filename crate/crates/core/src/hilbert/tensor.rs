use crate::error::{Error, Result};

use super::matrix::Matrix;
use super::scalar::Scalar;
use super::subspace::{inner, is_zero_vector, Subspace};

/// Largest factor dimension handled.
pub const MAX_FACTOR_DIM: usize = 3;

pub fn check_dim(d: usize) -> Result<()> {
    if (1..=MAX_FACTOR_DIM).contains(&d) {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(d))
    }
}

/// Kronecker product; coordinate `(i, j)` sits at `i * n + j`.
pub fn tensor<S: Scalar>(p1: &[S], p2: &[S]) -> Result<Vec<S>> {
    if is_zero_vector(p1) || is_zero_vector(p2) {
        return Err(Error::ZeroVector);
    }
    Ok(p1
        .iter()
        .flat_map(|a| p2.iter().map(move |b| a.clone() * b.clone()))
        .collect())
}

/// `v` read as an `m × n` matrix.
pub fn reshape<S: Scalar>(v: &[S], m: usize, n: usize) -> Result<Matrix<S>> {
    Matrix::from_vec(m, n, v.to_vec())
}

/// Nonzero with rank one as an `m × n` matrix.
pub fn is_product_vector<S: Scalar>(v: &[S], m: usize, n: usize) -> bool {
    reshape(v, m, n).is_ok_and(|mat| mat.rank() == 1)
}

/// Scales so the first nonzero coordinate is 1.
pub fn canonical_scale<S: Scalar>(v: &[S]) -> Result<Vec<S>> {
    let lead = v
        .iter()
        .find(|x| !x.is_zero())
        .ok_or(Error::ZeroVector)?
        .clone();
    Ok(v.iter().map(|x| x.clone() / lead.clone()).collect())
}

/// A pair of lines `(p1, p2)`, each stored by a canonical spanning vector.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductAtomPair<S> {
    p1: Vec<S>,
    p2: Vec<S>,
}

impl<S: Scalar> ProductAtomPair<S> {
    pub fn new(p1: Vec<S>, p2: Vec<S>) -> Result<Self> {
        check_dim(p1.len())?;
        check_dim(p2.len())?;
        Ok(ProductAtomPair {
            p1: canonical_scale(&p1)?,
            p2: canonical_scale(&p2)?,
        })
    }

    pub fn p1(&self) -> &[S] {
        &self.p1
    }

    pub fn p2(&self) -> &[S] {
        &self.p2
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.p1.len(), self.p2.len())
    }

    pub fn vector(&self) -> Vec<S> {
        tensor(&self.p1, &self.p2).expect("canonical vectors are nonzero")
    }

    pub fn line(&self) -> Subspace<S> {
        let (m, n) = self.dims();
        Subspace::span(m * n, vec![self.vector()]).expect("dimensions agree")
    }
}

/// `(p1, p2) ∈ σ↓[V]`.
pub fn sigma_membership<S: Scalar>(v: &Subspace<S>, pair: &ProductAtomPair<S>) -> bool {
    v.contains(&pair.vector())
}

/// Span of the product vectors. The double orthogonal is computed as well
/// and must agree, as it always does in finite dimension.
pub fn join_atoms<S: Scalar>(pairs: &[ProductAtomPair<S>]) -> Result<Subspace<S>> {
    let first = pairs
        .first()
        .ok_or_else(|| Error::Precondition("join of an empty list of atoms".into()))?;
    let (m, n) = first.dims();
    if let Some(p) = pairs.iter().find(|p| p.dims() != (m, n)) {
        let (pm, pn) = p.dims();
        return Err(Error::DimensionMismatch {
            expected: m * n,
            got: pm * pn,
        });
    }
    let span = Subspace::span(m * n, pairs.iter().map(ProductAtomPair::vector).collect())?;
    assert_eq!(
        span.perp().perp(),
        span,
        "double orthogonal differs from span"
    );
    Ok(span)
}

/// `{w2 | p1 ⊗ w2 ∈ V}` as a subspace of the second factor.
pub fn slice_second<S: Scalar>(v: &Subspace<S>, p1: &[S], n: usize) -> Result<Subspace<S>> {
    let m = p1.len();
    if m * n != v.ambient() {
        return Err(Error::DimensionMismatch {
            expected: v.ambient(),
            got: m * n,
        });
    }
    // ⟨p1 ⊗ w, u⟩ = Σ_j w_j Σ_i p1_i conj(u_ij) for every u ∈ V^⊥.
    let rows: Vec<Vec<S>> = v
        .perp()
        .basis()
        .iter()
        .map(|u| {
            (0..n)
                .map(|j| {
                    (0..m).fold(S::zero(), |acc, i| {
                        acc + p1[i].clone() * u[i * n + j].conj()
                    })
                })
                .collect()
        })
        .collect();
    if rows.is_empty() {
        return Ok(Subspace::full(n));
    }
    Subspace::span(n, Matrix::from_rows(rows)?.kernel())
}

/// `{w1 | w1 ⊗ p2 ∈ V}` as a subspace of the first factor.
pub fn slice_first<S: Scalar>(v: &Subspace<S>, p2: &[S], m: usize) -> Result<Subspace<S>> {
    let n = p2.len();
    if m * n != v.ambient() {
        return Err(Error::DimensionMismatch {
            expected: v.ambient(),
            got: m * n,
        });
    }
    let rows: Vec<Vec<S>> = v
        .perp()
        .basis()
        .iter()
        .map(|u| {
            (0..m)
                .map(|i| {
                    (0..n).fold(S::zero(), |acc, j| {
                        acc + p2[j].clone() * u[i * n + j].conj()
                    })
                })
                .collect()
        })
        .collect();
    if rows.is_empty() {
        return Ok(Subspace::full(m));
    }
    Subspace::span(m, Matrix::from_rows(rows)?.kernel())
}

/// An antilinear map `C^m → C^n`, `w ↦ S · conj(w)` with `S` of size `n × m`.
#[derive(Clone, Debug, PartialEq)]
pub struct AntilinearMap<S> {
    s: Matrix<S>,
}

impl<S: Scalar> AntilinearMap<S> {
    pub fn new(s: Matrix<S>) -> Result<Self> {
        check_dim(s.rows())?;
        check_dim(s.cols())?;
        Ok(AntilinearMap { s })
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.s
    }

    /// Source dimension `m`.
    pub fn m(&self) -> usize {
        self.s.cols()
    }

    /// Target dimension `n`.
    pub fn n(&self) -> usize {
        self.s.rows()
    }

    pub fn apply(&self, w: &[S]) -> Result<Vec<S>> {
        let cw: Vec<S> = w.iter().map(S::conj).collect();
        self.s.mul_vec(&cw)
    }
}

/// The coatom `X_A = σ↓[v^⊥]` of an antilinear map.
#[derive(Clone, Debug, PartialEq)]
pub struct AntilinearCoatom<S> {
    pub map: AntilinearMap<S>,
    /// `v_ij = S_ji`, stored at `i * n + j`.
    pub v: Vec<S>,
    pub subspace: Subspace<S>,
}

impl<S: Scalar> AntilinearCoatom<S> {
    /// Membership read off the subspace `v^⊥`.
    pub fn contains(&self, pair: &ProductAtomPair<S>) -> bool {
        sigma_membership(&self.subspace, pair)
    }

    /// Membership read off the map: `p2 ⊥ A(p1)`.
    pub fn predicted(&self, pair: &ProductAtomPair<S>) -> bool {
        let image = self
            .map
            .apply(pair.p1())
            .expect("pair dimensions match the map");
        inner(pair.p2(), &image).is_zero()
    }
}

pub fn coatom_from_antilinear<S: Scalar>(a: &AntilinearMap<S>) -> Result<AntilinearCoatom<S>> {
    if a.s.is_zero() {
        return Err(Error::ZeroVector);
    }
    let (m, n) = (a.m(), a.n());
    let v: Vec<S> = (0..m)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| a.s.get(j, i).clone())
        .collect();
    let subspace = Subspace::span(m * n, vec![v.clone()])?.perp();
    Ok(AntilinearCoatom {
        map: a.clone(),
        v,
        subspace,
    })
}

fn unit<S: Scalar>(i: usize, d: usize) -> Vec<S> {
    (0..d)
        .map(|k| if k == i { S::one() } else { S::zero() })
        .collect()
}

/// Span of the product vectors of `p1^⊥ × Σ_2 ∪ Σ_1 × p2^⊥`.
pub fn sharp_point<S: Scalar>(pair: &ProductAtomPair<S>) -> Subspace<S> {
    let (m, n) = pair.dims();
    let p1_perp = Subspace::span(m, vec![pair.p1().to_vec()])
        .expect("dims")
        .perp();
    let p2_perp = Subspace::span(n, vec![pair.p2().to_vec()])
        .expect("dims")
        .perp();
    let mut vectors = Vec::new();
    for u in p1_perp.basis() {
        for j in 0..n {
            vectors.push(tensor(u, &unit(j, n)).expect("nonzero"));
        }
    }
    for w in p2_perp.basis() {
        for i in 0..m {
            vectors.push(tensor(&unit(i, m), w).expect("nonzero"));
        }
    }
    Subspace::span(m * n, vectors).expect("dims")
}

/// `p^{#⊥} = p`.
pub fn verify_point_biorthogonality<S: Scalar>(pair: &ProductAtomPair<S>) -> bool {
    sharp_point(pair).perp() == pair.line()
}
