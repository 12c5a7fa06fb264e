//! Dense univariate polynomials.

mod decompose;
mod dickson;
mod equivalence;
mod family;

pub use decompose::{
    base_expansion, common_decompositions, common_left_component, frobenius_decompose,
    left_component, right_component, right_components, Decomposition,
};
pub use dickson::dickson;
pub use equivalence::{linear_equivalent, right_linear_shift_match};
pub use family::{match_families, match_family, Family, FamilyMatch};

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// A polynomial over `F`, constant term first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{}]({})", self.field.spec(), crate::print::format_uni(self, "X"))
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::print::format_uni(self, "x"))
    }
}

impl<F: Field> UniPoly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { field: field.clone(), coeffs }
    }

    pub fn from_i64s(field: &F, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|c| field.from_i64(*c)).collect())
    }

    pub fn zero(field: &F) -> Self {
        UniPoly { field: field.clone(), coeffs: vec![] }
    }

    pub fn one(field: &F) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    pub fn x(field: &F) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    pub fn monomial(field: &F, c: F::Elem, n: usize) -> Self {
        let mut v = vec![field.zero(); n + 1];
        v[n] = c;
        Self::new(field, v)
    }

    /// `a X + b`
    pub fn linear(field: &F, a: F::Elem, b: F::Elem) -> Self {
        Self::new(field, vec![b, a])
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn lead(&self) -> F::Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| self.field.is_one(c))
    }

    pub fn check_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(k, (0..n).map(|i| k.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let k = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(k, (0..n).map(|i| k.sub(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|x| self.field.mul(x, c)).collect())
    }

    pub fn add_constant(&self, c: &F::Elem) -> Self {
        self.add(&Self::constant(&self.field, c.clone()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let k = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(k);
        }
        let mut out = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = k.add(&out[i + j], &k.mul(a, b));
            }
        }
        Self::new(k, out)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let k = &self.field;
        self.coeffs.iter().rev().fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
    }

    /// `self(inner(X))` by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add_constant(c);
        }
        acc
    }

    /// `self(a X + b)`
    pub fn compose_linear(&self, a: &F::Elem, b: &F::Elem) -> Self {
        self.compose(&Self::linear(&self.field, a.clone(), b.clone()))
    }

    /// `a self + b`
    pub fn affine(&self, a: &F::Elem, b: &F::Elem) -> Self {
        self.scale(a).add_constant(b)
    }

    /// Quotient and remainder; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let k = &self.field;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = divisor.degree();
        let inv = k.inv(&divisor.lead()).ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        if r.len() <= d {
            return Ok((Self::zero(k), self.clone()));
        }
        let mut q = vec![k.zero(); r.len() - d];
        for i in (0..q.len()).rev() {
            let c = k.mul(&r[i + d], &inv);
            if !k.is_zero(&c) {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    r[i + j] = k.sub(&r[i + j], &k.mul(&c, b));
                }
            }
            q[i] = c;
        }
        r.truncate(d);
        Ok((Self::new(k, q), Self::new(k, r)))
    }

    /// Exact quotient when `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.field.inv(&self.lead()) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        let k = &self.field;
        Self::new(
            k,
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| k.mul(&k.from_i64(i as i64), c)).collect(),
        )
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self - self(0)`
    pub fn zero_shifted(&self) -> Self {
        let mut c = self.coeffs.clone();
        if let Some(c0) = c.first_mut() {
            *c0 = self.field.zero();
        }
        Self::new(&self.field, c)
    }

    /// Roots in the field with multiplicity, sorted.
    pub fn roots(&self) -> Vec<F::Elem> {
        let mut out = Vec::new();
        if self.is_zero() {
            return out;
        }
        let distinct = self.field.distinct_roots(&self.coeffs);
        for r in distinct {
            let lin = Self::linear(&self.field, self.field.one(), self.field.neg(&r));
            let mut rest = self.clone();
            while let Some(q) = rest.div_exact(&lin) {
                out.push(r.clone());
                rest = q;
            }
        }
        out
    }

    /// Whether every exponent with a nonzero coefficient is divisible by `m`.
    pub fn is_polynomial_in_power(&self, m: usize) -> bool {
        self.coeffs.iter().enumerate().all(|(i, c)| i % m == 0 || self.field.is_zero(c))
    }

    /// Monic irreducible factors of degree at most two, found by roots and
    /// trial division by every monic quadratic, together with the leftover
    /// cofactor. Finite fields only.
    pub fn small_factors(&self) -> Result<(Vec<Self>, Self)> {
        let k = &self.field;
        let elems = k.elements().ok_or_else(|| Error::Precondition("finite field required".into()))?;
        let mut rest = self.clone();
        let mut out = Vec::new();
        for r in k.distinct_roots(&self.coeffs) {
            let lin = Self::linear(k, k.one(), k.neg(&r));
            while let Some(q) = rest.div_exact(&lin) {
                out.push(lin.clone());
                rest = q;
            }
        }
        if rest.degree() >= 2 {
            for b in &elems {
                for c in &elems {
                    let quad = Self::new(k, vec![c.clone(), b.clone(), k.one()]);
                    if !k.distinct_roots(quad.coeffs()).is_empty() {
                        continue;
                    }
                    while let Some(q) = rest.div_exact(&quad) {
                        out.push(quad.clone());
                        rest = q;
                    }
                }
            }
        }
        Ok((out, rest))
    }
}
