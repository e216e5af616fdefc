//! Scalar bounds for the matrix-level routines.
//!
//! Everything that evaluates polynomials in matrix entries (determinants,
//! permanents, immanants) is generic over [`Scalar`], a commutative-ring
//! bound assembled from `num-traits`. The crate's concrete instantiation is
//! [`crate::Rat`]; the bound itself is also satisfied by `BigInt`, `f64`, etc.

use num::{BigInt, BigRational};
use num_traits::{FromPrimitive, One, Zero};
use std::ops::{Div, Neg, Sub};

use crate::error::Error;
use crate::Result;

/// Commutative-ring scalar: enough structure to evaluate immanants exactly.
///
/// `Zero`/`One` bring addition and multiplication; `FromPrimitive` embeds the
/// small integer coefficients produced by the combinatorial layers.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + FromPrimitive
    + std::fmt::Debug
{
    /// Embeds an `i64` coefficient.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("i64 embeds into any Scalar used here")
    }
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + FromPrimitive
        + std::fmt::Debug
{
}

/// Scalars additionally supporting the exact divisions used by fraction-free
/// elimination (always exact over an integral domain; ordinary division over a
/// field).
pub trait DivScalar: Scalar + Div<Output = Self> {}
impl<T> DivScalar for T where T: Scalar + Div<Output = Self> {}

/// Converts a big integer into the scalar type.
pub fn scalar_from_bigint<T: Scalar>(v: &BigInt) -> T {
    // Fast path for values fitting in i64; otherwise fold in base 2^32 chunks.
    if let Some(small) = num_traits::ToPrimitive::to_i64(v) {
        return T::from_int(small);
    }
    let (sign, digits) = v.to_u32_digits();
    let base = T::from_int(1i64 << 32);
    let mut acc = T::zero();
    for d in digits.iter().rev() {
        acc = acc * base.clone() + T::from_int(*d as i64);
    }
    match sign {
        num::bigint::Sign::Minus => -acc,
        _ => acc,
    }
}

/// Renders a rational as `p/q`, or just `p` when the denominator is one.
pub fn rat_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p`, `p/q` into an exact rational.
pub fn parse_rat(s: &str) -> Result<BigRational> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// Serde adapter serializing rationals as `"p/q"` strings.
pub mod rat_str {
    use super::{parse_rat, rat_to_string};
    use num::BigRational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &BigRational, ser: S) -> Result<S::Ok, S::Error> {
        rat_to_string(v).serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(de)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}
