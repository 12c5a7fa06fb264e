//! Bivariate polynomials in `X`, `Y`, degree-two factors and the explicit
//! factorization formulas.

mod exhaustive;
mod formulas;

pub use exhaustive::{quad_factors_exhaustive, shape_search_size};
pub(crate) use formulas::{b4_quadratic, trace_quadratic, x_minus_y, x_plus_y};
pub use formulas::{
    additive_diff_factors, dickson_diff_factors, dickson_sum_factors, discriminant_x, linear_factors, quartic_split,
    remark_b4_factors, remark_b5_factors, B5Factors, ExtendedFactors,
};

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::unipoly::UniPoly;

/// `sum c[i][j] X^i Y^j` with trailing zero rows and columns trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly<F: Field> {
    field: F,
    rows: Vec<Vec<F::Elem>>,
}

impl<F: Field> fmt::Debug for BiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly[{}]({})", self.field.spec(), crate::print::format_bi(self))
    }
}

impl<F: Field> fmt::Display for BiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::print::format_bi(self))
    }
}

impl<F: Field> BiPoly<F> {
    pub fn new(field: &F, mut rows: Vec<Vec<F::Elem>>) -> Self {
        for r in rows.iter_mut() {
            while r.last().is_some_and(|c| field.is_zero(c)) {
                r.pop();
            }
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        BiPoly { field: field.clone(), rows }
    }

    pub fn zero(field: &F) -> Self {
        BiPoly { field: field.clone(), rows: vec![] }
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::new(field, vec![vec![c]])
    }

    /// `f(X)`
    pub fn from_x(f: &UniPoly<F>) -> Self {
        Self::new(f.field(), f.coeffs().iter().map(|c| vec![c.clone()]).collect())
    }

    /// `f(Y)`
    pub fn from_y(f: &UniPoly<F>) -> Self {
        Self::new(f.field(), vec![f.coeffs().to_vec()])
    }

    /// Builds from `(i, j, c)` triples meaning `c X^i Y^j`.
    pub fn from_terms(field: &F, terms: &[(usize, usize, F::Elem)]) -> Self {
        let mut out = Self::zero(field);
        for (i, j, c) in terms {
            out = out.add(&Self::monomial(field, c.clone(), *i, *j));
        }
        out
    }

    pub fn monomial(field: &F, c: F::Elem, i: usize, j: usize) -> Self {
        let mut rows = vec![vec![]; i + 1];
        rows[i] = vec![field.zero(); j + 1];
        rows[i][j] = c;
        Self::new(field, rows)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> F::Elem {
        self.rows.get(i).and_then(|r| r.get(j)).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Coefficient of `X^i` as a polynomial in `Y`.
    pub fn x_coeff(&self, i: usize) -> UniPoly<F> {
        UniPoly::new(&self.field, self.rows.get(i).cloned().unwrap_or_default())
    }

    pub fn deg_x(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn deg_y(&self) -> usize {
        self.rows.iter().map(|r| r.len().saturating_sub(1)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> usize {
        self.support().into_iter().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    /// Exponent pairs with nonzero coefficient.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            for (j, c) in r.iter().enumerate() {
                if !self.field.is_zero(c) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn zip(&self, other: &Self, op: impl Fn(&F::Elem, &F::Elem) -> F::Elem) -> Self {
        let n = self.rows.len().max(other.rows.len());
        let rows = (0..n)
            .map(|i| {
                let m = self.rows.get(i).map_or(0, Vec::len).max(other.rows.get(i).map_or(0, Vec::len));
                (0..m).map(|j| op(&self.coeff(i, j), &other.coeff(i, j))).collect()
            })
            .collect();
        Self::new(&self.field, rows)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| self.field.sub(a, b))
    }

    pub fn neg(&self) -> Self {
        Self::zero(&self.field).sub(self)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let rows = self.rows.iter().map(|r| r.iter().map(|x| self.field.mul(x, c)).collect()).collect();
        Self::new(&self.field, rows)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let k = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(k);
        }
        let mut rows = vec![vec![k.zero(); self.deg_y() + other.deg_y() + 1]; self.rows.len() + other.rows.len() - 1];
        for (i1, r1) in self.rows.iter().enumerate() {
            for (j1, a) in r1.iter().enumerate() {
                if k.is_zero(a) {
                    continue;
                }
                for (i2, r2) in other.rows.iter().enumerate() {
                    for (j2, b) in r2.iter().enumerate() {
                        let slot = &mut rows[i1 + i2][j1 + j2];
                        *slot = k.add(slot, &k.mul(a, b));
                    }
                }
            }
        }
        Self::new(k, rows)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(&self.field, self.field.one()), |acc, _| acc.mul(self))
    }

    /// `F(X, y0)` as a polynomial in `X`.
    pub fn eval_y(&self, y0: &F::Elem) -> UniPoly<F> {
        let k = &self.field;
        UniPoly::new(k, self.rows.iter().map(|r| UniPoly::new(k, r.clone()).eval(y0)).collect())
    }

    /// Substitutes `X -> u(X, Y)`, `Y -> v(X, Y)`.
    pub fn substitute(&self, u: &Self, v: &Self) -> Self {
        let k = &self.field;
        let mut out = Self::zero(k);
        let one = Self::constant(k, k.one());
        let mut upow = one.clone();
        let vpows: Vec<Self> = {
            let mut acc = vec![one];
            for _ in 0..self.deg_y() {
                let next = acc.last().unwrap().mul(v);
                acc.push(next);
            }
            acc
        };
        for row in &self.rows {
            for (j, c) in row.iter().enumerate() {
                if !k.is_zero(c) {
                    out = out.add(&upow.mul(&vpows[j]).scale(c));
                }
            }
            upow = upow.mul(u);
        }
        out
    }

    /// The product of a list of factors.
    pub fn product(field: &F, factors: &[Self]) -> Self {
        factors.iter().fold(Self::constant(field, field.one()), |acc, f| acc.mul(f))
    }
}

/// `f(X) - g(Y)`
pub fn difference_poly<F: Field>(f: &UniPoly<F>, g: &UniPoly<F>) -> Result<BiPoly<F>> {
    f.check_field(g)?;
    Ok(BiPoly::from_x(f).sub(&BiPoly::from_y(g)))
}

/// Exact division `big / q` in `K[Y][X]`, where `q` has a nonzero constant
/// leading coefficient in `X`. `None` when the remainder is nonzero.
pub fn divide_monic_in_x<F: Field>(big: &BiPoly<F>, q: &BiPoly<F>) -> Result<Option<BiPoly<F>>> {
    let k = big.field();
    let dq = q.deg_x();
    let lead = q.x_coeff(dq);
    if q.is_zero() || dq == 0 || !lead.is_constant() {
        return Err(Error::Precondition("divisor needs a constant leading coefficient in X".into()));
    }
    let inv = k.inv(&lead.coeff(0)).ok_or(Error::DivisionByZero)?;
    let mut rem: Vec<UniPoly<F>> = (0..=big.deg_x()).map(|i| big.x_coeff(i)).collect();
    if big.is_zero() {
        return Ok(Some(BiPoly::zero(k)));
    }
    if rem.len() <= dq {
        return Ok(None);
    }
    let qrows: Vec<UniPoly<F>> = (0..=dq).map(|i| q.x_coeff(i)).collect();
    let mut quot = vec![UniPoly::zero(k); rem.len() - dq];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dq].scale(&inv);
        if c.is_zero() {
            continue;
        }
        for (j, qj) in qrows.iter().enumerate() {
            rem[i + j] = rem[i + j].sub(&c.mul(qj));
        }
        quot[i] = c;
    }
    if rem.iter().take(dq).any(|r| !r.is_zero()) {
        return Ok(None);
    }
    Ok(Some(BiPoly::new(k, quot.into_iter().map(UniPoly::into_coeffs).collect())))
}

/// Slot order of [`QuadPoly`] coefficients.
pub const QUAD_MONOMIALS: [(usize, usize); 6] = [(2, 0), (1, 1), (0, 2), (1, 0), (0, 1), (0, 0)];

/// `q20 X^2 + q11 XY + q02 Y^2 + q10 X + q01 Y + q00`, scaled so that the
/// first nonzero coefficient is one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadPoly<E> {
    pub coeffs: [E; 6],
}

impl<E: Clone> QuadPoly<E> {
    /// Canonical form of a nonzero polynomial of total degree at most two.
    pub fn from_bipoly<F: Field<Elem = E>>(f: &BiPoly<F>) -> Option<Self> {
        if f.is_zero() || f.total_degree() > 2 {
            return None;
        }
        let k = f.field();
        let raw = QUAD_MONOMIALS.map(|(i, j)| f.coeff(i, j));
        let first = raw.iter().find(|c| !k.is_zero(c))?;
        let inv = k.inv(first)?;
        Some(QuadPoly { coeffs: raw.map(|c| k.mul(&c, &inv)) })
    }

    pub fn to_bipoly<F: Field<Elem = E>>(&self, k: &F) -> BiPoly<F> {
        let terms: Vec<(usize, usize, E)> =
            QUAD_MONOMIALS.iter().zip(&self.coeffs).map(|((i, j), c)| (*i, *j, c.clone())).collect();
        BiPoly::from_terms(k, &terms)
    }

    pub fn strings<F: Field<Elem = E>>(&self, k: &F) -> Vec<String> {
        self.coeffs.iter().map(|c| k.format_elem(c)).collect()
    }
}
