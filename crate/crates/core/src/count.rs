//! Exact nonnegative counts.
//!
//! Multiplicities and dimensions are computed over any unsigned integer type
//! implementing [`Count`]. `BigUint` never overflows; fixed-width types such
//! as `u64` report [`Error::CountOverflow`] instead of wrapping.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, Unsigned};

use crate::error::{Error, Result};

/// Unsigned exact integer used for multiplicities and dimensions.
pub trait Count:
    Clone
    + Ord
    + Debug
    + Display
    + FromStr
    + Unsigned
    + Integer
    + CheckedAdd
    + CheckedMul
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Count for T where
    T: Clone
        + Ord
        + Debug
        + Display
        + FromStr
        + Unsigned
        + Integer
        + CheckedAdd
        + CheckedMul
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}

pub(crate) fn from_i64<C: Count>(v: i64) -> Result<C> {
    C::from_i64(v).ok_or(Error::CountOverflow)
}

pub(crate) fn mul<C: Count>(a: &C, b: &C) -> Result<C> {
    a.checked_mul(b).ok_or(Error::CountOverflow)
}

pub(crate) fn add<C: Count>(a: &C, b: &C) -> Result<C> {
    a.checked_add(b).ok_or(Error::CountOverflow)
}

/// `top` choose `bottom`, taken to be zero whenever `top < bottom`.
///
/// `bottom` must be nonnegative.
pub fn binomial<C: Count>(top: i64, bottom: i64) -> Result<C> {
    assert!(bottom >= 0, "binomial called with negative lower index {bottom}");
    if top < bottom {
        return Ok(C::zero());
    }
    let k = bottom.min(top - bottom);
    let mut acc = C::one();
    for i in 0..k {
        // acc * (top - i) is divisible by (i + 1) at every step.
        acc = mul(&acc, &from_i64(top - i)?)? / from_i64(i + 1)?;
    }
    Ok(acc)
}

/// Exact quotient of two products, cancelling common factors as it goes so
/// that fixed-width count types only overflow when the result itself does.
#[derive(Debug, Clone)]
pub(crate) struct ProductRatio<C> {
    num: C,
    den: C,
}

impl<C: Count> ProductRatio<C> {
    pub fn new() -> Self {
        Self { num: C::one(), den: C::one() }
    }

    pub fn push(&mut self, numer: i64, denom: i64) -> Result<()> {
        let mut n: C = from_i64(numer)?;
        let mut d: C = from_i64(denom)?;
        let g = n.gcd(&self.den);
        n = n / g.clone();
        self.den = self.den.clone() / g;
        let g = d.gcd(&self.num);
        d = d / g.clone();
        self.num = self.num.clone() / g;
        self.num = mul(&self.num, &n)?;
        self.den = mul(&self.den, &d)?;
        Ok(())
    }

    /// The quotient, or `None` when it is not an integer.
    pub fn finish(self) -> Option<C> {
        if (self.num.clone() % self.den.clone()).is_zero() {
            Some(self.num / self.den)
        } else {
            None
        }
    }
}
