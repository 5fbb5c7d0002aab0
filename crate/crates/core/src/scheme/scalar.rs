//! Arithmetic-mode abstraction: the same spectrum computations run over
//! exact big rationals (when all eigenvalues are rational) or over f64 with
//! a tolerance.

use crate::seq::Verdict;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub trait Scalar: Clone + PartialEq + PartialOrd + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_u64(x: u64) -> Self;
    fn from_rational(r: &BigRational) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn approx_eq(&self, o: &Self, tol: f64) -> bool;
    fn is_zero_within(&self, tol: f64) -> bool;
    fn is_nonnegative_within(&self, tol: f64) -> bool;
    fn to_f64(&self) -> f64;
    /// JSON form: exact "num/den" string for rationals, number for floats.
    fn to_json(&self) -> serde_json::Value;
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_u64(x: u64) -> Self {
        BigRational::from_integer(BigInt::from(x))
    }
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn approx_eq(&self, o: &Self, _tol: f64) -> bool {
        self == o
    }
    fn is_zero_within(&self, _tol: f64) -> bool {
        Zero::is_zero(self)
    }
    fn is_nonnegative_within(&self, _tol: f64) -> bool {
        !self.is_negative()
    }
    fn to_f64(&self) -> f64 {
        let n: f64 = self.numer().to_string().parse().unwrap_or(f64::NAN);
        let d: f64 = self.denom().to_string().parse().unwrap_or(f64::NAN);
        n / d
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(crate::seq::rational_to_string(self))
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_u64(x: u64) -> Self {
        x as f64
    }
    fn from_rational(r: &BigRational) -> Self {
        Scalar::to_f64(r)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn approx_eq(&self, o: &Self, tol: f64) -> bool {
        let scale = self.abs().max(o.abs()).max(1.0);
        (self - o).abs() <= tol * scale
    }
    fn is_zero_within(&self, tol: f64) -> bool {
        self.abs() <= tol
    }
    fn is_nonnegative_within(&self, tol: f64) -> bool {
        *self >= -tol
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn to_json(&self) -> serde_json::Value {
        // fixed 12 significant digits for reproducible reports
        serde_json::Value::String(format!("{self:.11e}"))
    }
}

/// Log-concavity of a scalar sequence; exact comparison for rationals,
/// straight comparison for floats.
pub fn lc_verdict<T: Scalar>(seq: &[T]) -> Verdict {
    for i in 1..seq.len().saturating_sub(1) {
        let sq = seq[i].mul(&seq[i]);
        let cross = seq[i - 1].mul(&seq[i + 1]);
        if sq < cross {
            return Verdict::FailsAt(i);
        }
    }
    Verdict::Holds
}
