//! Seeded generators of small Gaussian-rational data.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use rand::Rng;

use super::matrix::Matrix;
use super::subspace::Subspace;
use super::tensor::{AntilinearMap, ProductAtomPair};
use super::GaussianRational;

fn rational<R: Rng>(rng: &mut R) -> BigRational {
    BigRational::new(
        BigInt::from(rng.gen_range(-3i64..=3)),
        BigInt::from(rng.gen_range(1i64..=3)),
    )
}

pub fn gaussian_rational<R: Rng>(rng: &mut R) -> GaussianRational {
    Complex::new(rational(rng), rational(rng))
}

pub fn nonzero_vector<R: Rng>(rng: &mut R, d: usize) -> Vec<GaussianRational> {
    loop {
        let v: Vec<_> = (0..d).map(|_| gaussian_rational(rng)).collect();
        if !super::is_zero_vector(&v) {
            return v;
        }
    }
}

/// Span of between 0 and `ambient` random vectors.
pub fn subspace<R: Rng>(rng: &mut R, ambient: usize) -> Subspace<GaussianRational> {
    let k = rng.gen_range(0..=ambient);
    Subspace::span(
        ambient,
        (0..k).map(|_| nonzero_vector(rng, ambient)).collect(),
    )
    .expect("lengths agree")
}

pub fn pair<R: Rng>(rng: &mut R, m: usize, n: usize) -> ProductAtomPair<GaussianRational> {
    ProductAtomPair::new(nonzero_vector(rng, m), nonzero_vector(rng, n))
        .expect("nonzero vectors in range")
}

/// Nonzero antilinear map `C^m → C^n`.
pub fn antilinear<R: Rng>(rng: &mut R, m: usize, n: usize) -> AntilinearMap<GaussianRational> {
    loop {
        let s = Matrix::from_vec(n, m, (0..n * m).map(|_| gaussian_rational(rng)).collect())
            .expect("sizes agree");
        if !s.is_zero() {
            return AntilinearMap::new(s).expect("dimensions in range");
        }
    }
}
