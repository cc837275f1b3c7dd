//! Exact rational helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number used for every exact result.
pub type Rational = num_rational::BigRational;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Renders `p/q`, or just `p` for integers.
pub fn to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or an integer.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Decimal expansion rounded half-away-from-zero to `sig` significant digits.
///
/// Plain positional notation, no exponent, trailing zeros kept so that the
/// digit count is stable.
pub fn to_decimal(r: &Rational, sig: usize) -> String {
    assert!(sig > 0);
    if r.is_zero() {
        return format!("0.{}", "0".repeat(sig - 1));
    }
    let neg = r.is_negative();
    let a = r.abs();
    let ten = BigInt::from(10);

    // exponent e with 10^e <= a < 10^(e+1)
    let mut e: i64 = (a.numer().bits() as i64 - a.denom().bits() as i64) * 30103 / 100000;
    let pow = |k: i64| -> Rational {
        if k >= 0 {
            Rational::from_integer(num_traits::pow(ten.clone(), k as usize))
        } else {
            Rational::new(BigInt::one(), num_traits::pow(ten.clone(), (-k) as usize))
        }
    };
    while pow(e) > a {
        e -= 1;
    }
    while pow(e + 1) <= a {
        e += 1;
    }

    // digits = round(a * 10^(sig-1-e))
    let scaled = &a * pow(sig as i64 - 1 - e);
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let mut digits = q;
    if rem * BigInt::from(2) >= *scaled.denom() {
        digits += 1;
    }
    let mut text = digits.to_string();
    if text.len() > sig {
        // rounding carried into a new digit
        e += 1;
        text.truncate(sig);
    }

    let body = if e >= 0 {
        let int_len = e as usize + 1;
        if int_len >= sig {
            format!("{}{}", text, "0".repeat(int_len - sig))
        } else {
            format!("{}.{}", &text[..int_len], &text[int_len..])
        }
    } else {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), text)
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}
