//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Scalar`], an arbitrary precision
//! rational kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarParseError {
    Malformed(String),
    ZeroDenominator(String),
}

impl std::fmt::Display for ScalarParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ScalarParseError::Malformed(s) => write!(f, "malformed rational {s:?}"),
            ScalarParseError::ZeroDenominator(s) => write!(f, "zero denominator in {s:?}"),
        }
    }
}

impl std::error::Error for ScalarParseError {}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    assert!(q != 0, "zero denominator");
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p/q"` or `"p"`, with optional sign on the numerator.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let s = text.trim();
    let bad = || ScalarParseError::Malformed(text.to_string());
    let parse_int = |t: &str| -> Result<BigInt, ScalarParseError> {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Scalar::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let num = parse_int(p)?;
            if q.starts_with(['-', '+']) {
                return Err(bad());
            }
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(ScalarParseError::ZeroDenominator(text.to_string()));
            }
            Ok(Scalar::new(num, den))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Compact human rendering of a coefficient vector in the basis `e1..en`.
pub fn format_vector(v: &[Scalar]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            let m = format_scalar(&mag);
            if mag.is_integer() {
                out.push_str(&m);
            } else {
                out.push('(');
                out.push_str(&m);
                out.push(')');
            }
        }
        out.push_str(&format!("e{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
