//! Rendering of exact rationals: reduced fraction strings plus rounded
//! decimals, always emitted together.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::Serializer;

use crate::Rational;

/// Decimal digits kept when rendering.
pub const DECIMAL_DIGITS: usize = 6;

/// `"p/q"` in lowest terms, or `"p"` for integers.
pub fn fraction_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal expansion rounded half away from zero to `digits` places, with
/// trailing zeros trimmed.
pub fn decimal_string(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r.abs() * Rational::from_integer(scale.clone());
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let twice = rem * 2u32;
    let rounded = if &twice >= scaled.denom() { q + 1u32 } else { q };
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let mut frac = format!("{:0>width$}", frac_part.to_string(), width = digits);
    while frac.ends_with('0') {
        frac.pop();
    }
    let sign = if r.is_negative() && !(int_part.is_zero() && frac.is_empty()) {
        "-"
    } else {
        ""
    };
    if frac.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Serializes a rational as `{"fraction": "25/4", "decimal": "6.25"}`.
pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Exact", 2)?;
    st.serialize_field("fraction", &fraction_string(r))?;
    st.serialize_field("decimal", &decimal_string(r, DECIMAL_DIGITS))?;
    st.end()
}

pub fn serialize_option<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => serialize(r, s),
        None => s.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn renders_known_values() {
        assert_eq!(fraction_string(&q(100, 16)), "25/4");
        assert_eq!(decimal_string(&q(25, 4), 6), "6.25");
        assert_eq!(decimal_string(&q(49, 5), 6), "9.8");
        assert_eq!(decimal_string(&q(19, 5), 6), "3.8");
        assert_eq!(fraction_string(&q(8, 2)), "4");
        assert_eq!(decimal_string(&q(4, 1), 6), "4");
    }

    #[test]
    fn rounding_and_sign() {
        assert_eq!(decimal_string(&q(1, 3), 6), "0.333333");
        assert_eq!(decimal_string(&q(2, 3), 6), "0.666667");
        assert_eq!(decimal_string(&q(-7, 4), 2), "-1.75");
        assert_eq!(decimal_string(&q(-1, 10_000_000), 6), "0");
    }
}
