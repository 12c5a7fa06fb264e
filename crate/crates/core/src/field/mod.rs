//! Coefficient fields.
//!
//! A [`Field`] is a context object: it owns whatever tables the arithmetic
//! needs and hands out plain element values. Polynomials, matrices and
//! certificates carry their field next to their elements, so the same
//! algorithms run over [`Rationals`] and over every [`FiniteField`].

mod finite;
mod rational;
mod spec;

pub use finite::{Embedding, Fe, FiniteField, MAX_FIELD_SIZE};
pub use rational::Rationals;
pub use spec::{parse_field_spec, AnyField};

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Exact arithmetic in a field of characteristic zero or `p`.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Ord + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, &inv))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `0` for the rationals.
    fn characteristic(&self) -> u64;

    /// Number of elements, `None` when infinite.
    fn size(&self) -> Option<u64>;

    fn is_finite(&self) -> bool {
        self.size().is_some()
    }

    /// Every element in canonical order; `None` for infinite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    /// The class of the indeterminate in `F_p[t]/(m(t))`, when `k > 1`.
    fn generator(&self) -> Option<Self::Elem>;

    /// Canonical square root (see the field implementations for the tie-break).
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// All `y` with `y^n = a`, sorted and distinct.
    fn nth_roots(&self, a: &Self::Elem, n: u64) -> Vec<Self::Elem>;

    /// Distinct roots of the polynomial with coefficients `coeffs`
    /// (constant term first), sorted.
    fn distinct_roots(&self, coeffs: &[Self::Elem]) -> Vec<Self::Elem>;

    /// An element of multiplicative order exactly `m`.
    fn root_of_unity(&self, m: u64) -> Result<Self::Elem>;

    /// For a primitive `n`-th root of unity `w` (over the algebraic closure),
    /// entry `j` is `w^j + w^-j` when that value lies in this field.
    /// Requires that the characteristic does not divide `n`.
    fn unity_traces(&self, n: u64) -> Result<Vec<Option<Self::Elem>>>;

    /// The unique `p`-th root in a perfect field of characteristic `p`;
    /// identity in characteristic zero.
    fn frobenius_root(&self, a: &Self::Elem) -> Self::Elem;

    /// Applies `x -> x^p`; identity in characteristic zero.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem {
        match self.characteristic() {
            0 => a.clone(),
            p => self.pow(a, p),
        }
    }

    fn format_elem(&self, a: &Self::Elem) -> String;

    /// Whether the printed element is a sum and needs parentheses when it
    /// multiplies something.
    fn is_compound(&self, a: &Self::Elem) -> bool;

    /// Whether the printed element starts with a minus sign.
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }

    /// Field spec string in the CLI grammar (`Q`, `GF(9)`, ...).
    fn spec(&self) -> String;
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Least `k >= 1` with `m | p^k - 1`, i.e. the multiplicative order of `p`
/// modulo `m`.
pub fn min_extension_for_unity(p: u64, m: u64) -> Result<u32> {
    if m == 0 {
        return Err(Error::Precondition("m must be positive".into()));
    }
    if !is_prime(p) {
        return Err(Error::InvalidField(format!("{p} is not prime")));
    }
    if m % p == 0 {
        return Err(Error::DivisibleByCharacteristic { what: format!("m = {m}"), p });
    }
    if m == 1 {
        return Ok(1);
    }
    let step = p % m;
    let mut acc = step;
    let mut k = 1u32;
    while acc != 1 {
        acc = (acc as u128 * step as u128 % m as u128) as u64;
        k += 1;
    }
    Ok(k)
}

/// Multiplicative order of a nonzero element, by trial over divisors of
/// `size - 1`.
pub fn element_order<F: Field>(field: &F, a: &F::Elem) -> Option<u64> {
    let q = field.size()?;
    if field.is_zero(a) {
        return None;
    }
    let mut order = q - 1;
    for r in prime_factors(q - 1) {
        while order % r == 0 && field.is_one(&field.pow(a, order / r)) {
            order /= r;
        }
    }
    Some(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_extension_examples() {
        assert_eq!(min_extension_for_unity(3, 8).unwrap(), 2);
        assert_eq!(min_extension_for_unity(13, 12).unwrap(), 1);
        assert_eq!(min_extension_for_unity(7, 1).unwrap(), 1);
        assert!(matches!(
            min_extension_for_unity(3, 6),
            Err(Error::DivisibleByCharacteristic { .. })
        ));
    }

    #[test]
    fn min_extension_matches_brute_force() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            for m in 1..40u64 {
                if m % p == 0 {
                    continue;
                }
                let mut k = 1;
                let mut pk = p % m;
                while (pk + m - 1) % m != 0 {
                    pk = pk * p % m;
                    k += 1;
                }
                assert_eq!(min_extension_for_unity(p, m).unwrap(), k, "p={p} m={m}");
            }
        }
    }
}
