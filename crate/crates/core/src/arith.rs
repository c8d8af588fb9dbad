//! Exact integer and single-radical surd arithmetic.
//!
//! A Perron entry of a graph with eigenvalues `s, 1, -t` is always of the
//! form `β√ω` with `ω` squarefree and shared by every vertex, so products
//! of two entries are integers. [`SqClass`] is that representation; no
//! floating point is used anywhere in this module.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("expected a positive integer, got {0}")]
    NotPositive(String),
    #[error("{0} is not squarefree")]
    NotSquarefree(String),
    #[error("{left} and {right} lie in different squarefree classes")]
    ClassMismatch { left: String, right: String },
    #[error("arithmetic overflow")]
    Overflow,
}

/// The value `β√ω` with `ω` squarefree and `β ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SqClass<T> {
    omega: T,
    beta: T,
}

impl<T: Scalar> SqClass<T> {
    pub fn new(omega: T, beta: T) -> Result<Self, ArithError> {
        if omega < T::one() {
            return Err(ArithError::NotPositive(omega.to_string()));
        }
        if beta < T::one() {
            return Err(ArithError::NotPositive(beta.to_string()));
        }
        if !is_squarefree(omega) {
            return Err(ArithError::NotSquarefree(omega.to_string()));
        }
        Ok(Self { omega, beta })
    }

    pub fn omega(&self) -> T {
        self.omega
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    /// `ωβ²`, the integer this value is the square root of.
    pub fn square(&self) -> Result<T, ArithError> {
        checked_mul(self.omega, checked_mul(self.beta, self.beta)?)
    }

    pub fn same_class(&self, other: &Self) -> bool {
        self.omega == other.omega
    }

    /// Exact product of two values in the same class: `ω β₁ β₂`.
    pub fn product(&self, other: &Self) -> Result<T, ArithError> {
        if !self.same_class(other) {
            return Err(ArithError::ClassMismatch {
                left: self.to_string(),
                right: other.to_string(),
            });
        }
        checked_mul(self.omega, checked_mul(self.beta, other.beta)?)
    }
}

impl<T: Scalar> fmt::Display for SqClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.beta.is_one(), self.omega.is_one()) {
            (_, true) => write!(f, "{}", self.beta),
            (true, false) => write!(f, "√{}", self.omega),
            (false, false) => write!(f, "{}√{}", self.beta, self.omega),
        }
    }
}

pub(crate) fn checked_mul<T: Scalar>(a: T, b: T) -> Result<T, ArithError> {
    a.checked_mul(&b).ok_or(ArithError::Overflow)
}

pub fn is_squarefree<T: Scalar>(k: T) -> bool {
    if k < T::one() {
        return false;
    }
    let mut d = T::one() + T::one();
    let mut rest = k;
    while d * d <= rest {
        if rest % d == T::zero() {
            rest /= d;
            if rest % d == T::zero() {
                return false;
            }
        }
        d += T::one();
    }
    true
}

/// Writes `k = ωβ²` with `ω` squarefree.
pub fn squarefree_split<T: Scalar>(k: T) -> Result<SqClass<T>, ArithError> {
    if k < T::one() {
        return Err(ArithError::NotPositive(k.to_string()));
    }
    let mut omega = k;
    let mut beta = T::one();
    let mut d = T::one() + T::one();
    while d * d <= omega {
        let sq = d * d;
        while omega % sq == T::zero() {
            omega /= sq;
            beta *= d;
        }
        d += T::one();
    }
    Ok(SqClass { omega, beta })
}

/// The integer `√((a−t)(b−t))`, defined when `a−t` and `b−t` share a
/// squarefree class.
pub fn c_t<T: Scalar>(a: T, b: T, t: T) -> Result<T, ArithError> {
    let left = squarefree_split(a - t)?;
    let right = squarefree_split(b - t)?;
    if !left.same_class(&right) {
        return Err(ArithError::ClassMismatch {
            left: format!("{a}-{t}"),
            right: format!("{b}-{t}"),
        });
    }
    left.product(&right)
}

pub fn isqrt_floor<T: Scalar>(k: T) -> T {
    assert!(k >= T::zero(), "square root of a negative integer");
    k.sqrt()
}

pub fn isqrt_exact<T: Scalar>(k: T) -> Option<T> {
    if k < T::zero() {
        return None;
    }
    let r = isqrt_floor(k);
    (r * r == k).then_some(r)
}

/// Smallest integer `r` with `r² ≥ k`.
pub fn isqrt_ceil<T: Scalar>(k: T) -> T {
    let r = isqrt_floor(k);
    if r * r == k {
        r
    } else {
        r + T::one()
    }
}
