//! Exact rational helpers: integer powers, string (de)serialization and a
//! decimal rendering for humans.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type ExactRational = BigRational;

/// `base^exp` for a possibly negative exponent. Panics on `0^negative`.
pub fn pow_i64(base: i64, exp: i64) -> BigRational {
    let b = BigRational::from_integer(BigInt::from(base));
    if exp >= 0 {
        num_traits::pow(b, exp as usize)
    } else {
        num_traits::pow(b.recip(), (-exp) as usize)
    }
}

/// `"-25"`, `"9/2"`.
pub fn to_exact_string(r: &BigRational) -> String {
    r.to_string()
}

pub fn parse_exact(s: &str) -> Option<BigRational> {
    s.trim().parse().ok()
}

/// Truncated decimal expansion keeping `significant` digits after the first
/// nonzero one, e.g. `0.00026497` for `significant = 5`.
pub fn to_decimal_string(r: &BigRational, significant: usize) -> String {
    let mut out = String::new();
    if r.is_negative() {
        out.push('-');
    }
    let abs = r.abs();
    let (int_part, mut rem) = abs.numer().div_rem(abs.denom());
    let den = abs.denom().clone();
    out.push_str(&int_part.to_string());
    let mut emitted = if int_part.is_zero() { 0 } else { int_part.to_string().len() };
    if rem.is_zero() || emitted >= significant {
        return out;
    }
    out.push('.');
    let ten = BigInt::from(10);
    while !rem.is_zero() && emitted < significant {
        rem *= &ten;
        let (digit, r2) = rem.div_rem(&den);
        rem = r2;
        if emitted > 0 || !digit.is_zero() {
            emitted += 1;
        }
        out.push_str(&digit.to_string());
    }
    out
}

/// Serde adapter storing a rational as its exact string form.
pub mod exact_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_exact(&s).ok_or_else(|| serde::de::Error::custom(format!("not a rational: {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn exact_strings() {
        assert_eq!(to_exact_string(&q(-25, 1)), "-25");
        assert_eq!(to_exact_string(&q(9, 2)), "9/2");
        assert_eq!(parse_exact("9/2"), Some(q(9, 2)));
        assert_eq!(parse_exact("-4/6"), Some(q(-2, 3)));
        assert_eq!(parse_exact("x"), None);
    }

    #[test]
    fn powers() {
        assert_eq!(pow_i64(6, -1), q(1, 6));
        assert_eq!(pow_i64(-2, 3), q(-8, 1));
        assert_eq!(pow_i64(5, 0), q(1, 1));
    }

    #[test]
    fn decimals() {
        assert_eq!(to_decimal_string(&q(1, 3), 4), "0.3333");
        assert_eq!(to_decimal_string(&q(-1, 8), 10), "-0.125");
        assert_eq!(to_decimal_string(&q(3, 4000), 2), "0.00075");
        assert_eq!(to_decimal_string(&q(25, 1), 6), "25");
        assert_eq!(to_decimal_string(&q(123456, 100), 3), "1234");
    }
}
