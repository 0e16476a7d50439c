use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, Signed, Zero};

/// An exact field with an involutive conjugation.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn conj(&self) -> Self;

    fn from_i64(v: i64) -> Self;

    /// A square root of -1, if the field has one.
    fn imaginary_unit() -> Option<Self>;
}

impl<T> Scalar for Complex<T>
where
    T: Clone + Num + Neg<Output = T> + Debug + PartialEq + Scalar,
{
    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn from_i64(v: i64) -> Self {
        Complex::new(T::from_i64(v), T::zero())
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Complex::i())
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Integer + Neg<Output = T> + Debug + From<i64>,
{
    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from(v))
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }
}

/// Square roots that exist inside the field.
pub trait ExactSqrt: Sized {
    fn exact_sqrt(&self) -> Option<Self>;
}

fn int_sqrt(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.sqrt();
    (&r * &r == *x).then_some(r)
}

impl ExactSqrt for BigRational {
    fn exact_sqrt(&self) -> Option<Self> {
        let n = int_sqrt(self.numer())?;
        let d = int_sqrt(self.denom())?;
        Some(BigRational::new(n, d))
    }
}

impl ExactSqrt for Complex<BigRational> {
    /// `√(a+bi) = x + yi` with `x = √((|z|+a)/2)` and `y = ±√((|z|−a)/2)`.
    fn exact_sqrt(&self) -> Option<Self> {
        let (a, b) = (&self.re, &self.im);
        let modulus = (a * a + b * b).exact_sqrt()?;
        let two = BigRational::from_integer(BigInt::from(2));
        let x = ((&modulus + a) / &two).exact_sqrt()?;
        let mut y = ((&modulus - a) / &two).exact_sqrt()?;
        if b.is_negative() {
            y = -y;
        }
        let root = Complex::new(x, y);
        (&root * &root == *self).then_some(root)
    }
}
