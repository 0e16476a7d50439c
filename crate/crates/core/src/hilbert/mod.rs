//! The lattice of sets `σ↓[V]` for subspaces `V` of `C^m ⊗ C^n`, computed
//! exactly over the Gaussian rationals.

mod dual;
mod matrix;
pub mod random;
mod scalar;
mod subspace;
mod tensor;
pub mod text;

pub use box_test::{box_membership_test, product_spanning, BoxVerdict, Spanning};
pub use dual::{dual_covering_counterexample, DualCoveringReport};
pub use matrix::Matrix;
pub use scalar::{ExactSqrt, Scalar};
pub use subspace::{inner, is_zero_vector, Subspace};
pub use tensor::{
    canonical_scale, check_dim, coatom_from_antilinear, is_product_vector, join_atoms, reshape,
    sharp_point, sigma_membership, slice_first, slice_second, tensor, verify_point_biorthogonality,
    AntilinearCoatom, AntilinearMap, ProductAtomPair, MAX_FACTOR_DIM,
};

use num_complex::Complex;
use num_rational::BigRational;

/// `a + bi` with `a`, `b` rational.
pub type GaussianRational = Complex<BigRational>;
pub type GRMatrix = Matrix<GaussianRational>;
pub type GRSubspace = Subspace<GaussianRational>;

/// `re + im·i` from integers.
pub fn gr_int(re: i64, im: i64) -> GaussianRational {
    Complex::new(
        BigRational::from_integer(re.into()),
        BigRational::from_integer(im.into()),
    )
}
