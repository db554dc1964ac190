//! Coefficient traits.
//!
//! Grothendieck vectors and supercharacter polynomials are generic over the
//! coefficient ring. Anything that is a [`num_traits::Num`] with negation and
//! a text form qualifies as a [`Scalar`]; kernels and projectors additionally
//! need a [`Field`].

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num};

/// A commutative ring of coefficients with a round-trippable text form.
pub trait Scalar:
    Num + Clone + Debug + Display + FromStr + FromPrimitive + std::ops::Neg<Output = Self> + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("coefficient type cannot represent a small integer")
    }
}

impl<T> Scalar for T where
    T: Num + Clone + Debug + Display + FromStr + FromPrimitive + std::ops::Neg<Output = T> + Send + Sync + 'static
{
}

/// A field of coefficients. Exact types use structural zero; floating point
/// types treat tiny magnitudes as zero during elimination.
pub trait Field: Scalar {
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}

impl Field for BigRational {}
impl Field for Ratio<i64> {}

impl Field for f64 {
    fn is_negligible(&self) -> bool {
        self.abs() < 1e-9
    }
}

impl Field for f32 {
    fn is_negligible(&self) -> bool {
        self.abs() < 1e-4
    }
}

/// Parse a coefficient written as `p`, `-p` or `p/q`.
pub fn parse_coeff<C: Scalar>(s: &str) -> Option<C> {
    let s = s.trim();
    if let Ok(v) = s.parse::<C>() {
        return Some(v);
    }
    // integer rings reject "p/1"; accept it when the quotient is exact
    let (p, q) = s.split_once('/')?;
    let p = p.trim().parse::<C>().ok()?;
    let q = q.trim().parse::<C>().ok()?;
    if q.is_zero() || !(p.clone() % q.clone()).is_zero() {
        return None;
    }
    Some(p / q)
}
