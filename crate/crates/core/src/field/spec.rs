use super::{is_prime, FiniteField, Rationals};
use crate::error::{Error, Result};

/// A field chosen at runtime from a spec string.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyField {
    Rationals(Rationals),
    Finite(FiniteField),
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidField(msg.into())
}

fn parse_u64(s: &str) -> Result<u64> {
    s.trim().parse::<u64>().map_err(|_| bad(format!("expected a nonnegative integer, got `{}`", s.trim())))
}

/// Splits a prime power `q` into `(p, k)`.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

/// Parses `Q`, `GF(p)`, `GF(q)` for a prime power `q`, `GF(p^k)` and
/// `GF(p^k;m0,...,mk)`.
pub fn parse_field_spec(spec: &str) -> Result<AnyField> {
    let s = spec.trim();
    if s == "Q" || s == "QQ" {
        return Ok(AnyField::Rationals(Rationals));
    }
    let body = s
        .strip_prefix("GF(")
        .or_else(|| s.strip_prefix("F("))
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| bad(format!("unrecognized field `{s}`")))?;
    let (size, modulus) = match body.split_once(';') {
        Some((a, b)) => (a, Some(b)),
        None => (body, None),
    };
    let (p, k) = match size.split_once('^') {
        Some((p, k)) => {
            let k = parse_u64(k)?;
            (parse_u64(p)?, u32::try_from(k).map_err(|_| bad("extension degree too large"))?)
        }
        None => {
            let q = parse_u64(size)?;
            prime_power(q).ok_or_else(|| bad(format!("{q} is not a prime power")))?
        }
    };
    if !is_prime(p) {
        return Err(bad(format!("{p} is not prime")));
    }
    let field = match modulus {
        None => FiniteField::with_default_modulus(p, k)?,
        Some(m) => {
            let coeffs = m.split(',').map(parse_u64).collect::<Result<Vec<_>>>()?;
            if coeffs.len() != k as usize + 1 {
                return Err(bad(format!("modulus needs {} coefficients", k + 1)));
            }
            FiniteField::with_modulus(p, &coeffs)?
        }
    };
    Ok(AnyField::Finite(field))
}
