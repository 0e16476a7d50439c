use crate::error::{Error, Result};

use super::matrix::Matrix;
use super::scalar::Scalar;

/// `⟨x, y⟩ = Σ x_i conj(y_i)`.
pub fn inner<S: Scalar>(x: &[S], y: &[S]) -> S {
    x.iter()
        .zip(y)
        .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.conj())
}

pub fn is_zero_vector<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(S::is_zero)
}

/// A subspace of `S^ambient` stored by its reduced echelon basis, so two
/// subspaces are equal exactly when their bases are.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<S> {
    ambient: usize,
    basis: Vec<Vec<S>>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, Matrix::<S>::identity(ambient).rows_vec()).expect("identity rows fit")
    }

    pub fn span(ambient: usize, vectors: Vec<Vec<S>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                got: v.len(),
            });
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let (r, pivots) = Matrix::from_rows(vectors)?.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace { ambient, basis })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn contains(&self, v: &[S]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(rows).expect("equal lengths").rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace<S>) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace<S>) -> Result<Self> {
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Self::span(self.ambient, v)
    }

    /// `{x | ⟨x, v⟩ = 0 for every v}`.
    pub fn perp(&self) -> Self {
        if self.basis.is_empty() {
            return Self::full(self.ambient);
        }
        let conj_rows = self
            .basis
            .iter()
            .map(|b| b.iter().map(S::conj).collect())
            .collect();
        let k = Matrix::from_rows(conj_rows)
            .expect("equal lengths")
            .kernel();
        Self::span(self.ambient, k).expect("kernel vectors fit")
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn rows_vec(&self) -> Vec<Vec<S>> {
        (0..self.rows()).map(|i| self.row(i).to_vec()).collect()
    }
}
