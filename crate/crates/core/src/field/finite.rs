use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{gcd, is_prime, lcm, min_extension_for_unity, prime_factors, Field};
use crate::error::{Error, Result};

/// Largest supported field size; exhaustive checks assume desk-scale fields.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// Element of a [`FiniteField`].
///
/// The index encodes the coefficient vector `(c_0, ..., c_{k-1})` of the
/// representative `c_0 + c_1 t + ... + c_{k-1} t^{k-1}` as the base-`p`
/// number `c_0 c_1 ... c_{k-1}` (most significant digit first), so index
/// order is lexicographic order on coefficient vectors.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fe(pub u32);

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fe({})", self.0)
    }
}

struct Inner {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    default_modulus: bool,
    /// `place[i] = p^(k-1-i)`
    place: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    traces: Mutex<HashMap<u64, Arc<Vec<Option<Fe>>>>>,
}

/// `F_{p^k} = F_p[t]/(m(t))` with `m` monic irreducible of degree `k`.
#[derive(Clone)]
pub struct FiniteField {
    inner: Arc<Inner>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteField({})", self.spec())
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FiniteField {}

// Dense polynomials over F_p on plain digit vectors, used only while
// building a field.
fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = (r[top] as u64 * lead_inv as u64 % p as u64) as u32;
        if c != 0 {
            for (i, mi) in m.iter().enumerate() {
                let idx = top - dm + i;
                r[idx] = ((r[idx] as u64 + (p - c) as u64 * *mi as u64) % p as u64) as u32;
            }
        }
        trim(&mut r);
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + *x as u64 * *y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|x| x as u32).collect();
    poly_rem(&prod, m, p)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let e = (a as i64).extended_gcd(&(p as i64));
    e.x.rem_euclid(p as i64) as u32
}

/// Irreducibility by trial division with every monic polynomial of degree
/// at most `k/2`.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let k = m.len() - 1;
    if k == 1 {
        return true;
    }
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut x = idx;
            for _ in 0..d {
                cand.push((x % p as u64) as u32);
                x /= p as u64;
            }
            cand.push(1);
            if poly_rem(m, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        Self::with_default_modulus(p, 1)
    }

    /// `F_{p^k}` with the lexicographically least monic irreducible modulus
    /// (coefficients `(c_0, ..., c_{k-1})` compared from `c_0`).
    pub fn with_default_modulus(p: u64, k: u32) -> Result<Self> {
        Self::check_size(p, k)?;
        let p32 = p as u32;
        let count = p.pow(k);
        for idx in 0..count {
            let mut m = vec![0u32; k as usize + 1];
            let mut x = idx;
            for i in (0..k as usize).rev() {
                m[i] = (x % p) as u32;
                x /= p;
            }
            m[k as usize] = 1;
            if is_irreducible(&m, p32) {
                return Self::build(p32, m, true);
            }
        }
        Err(Error::InvalidField(format!("no irreducible polynomial of degree {k} over F_{p}")))
    }

    /// `F_p[t]/(m(t))` for an explicit monic modulus, constant term first.
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::InvalidField("modulus must have degree at least 1".into()));
        }
        let k = (modulus.len() - 1) as u32;
        Self::check_size(p, k)?;
        let m: Vec<u32> = modulus.iter().map(|c| (c % p) as u32).collect();
        if m[k as usize] != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        if !is_irreducible(&m, p as u32) {
            return Err(Error::InvalidField("modulus is reducible over F_p".into()));
        }
        let default = Self::with_default_modulus(p, k)?;
        let is_default = default.inner.modulus == m;
        if is_default {
            return Ok(default);
        }
        Self::build(p as u32, m, false)
    }

    fn check_size(p: u64, k: u32) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        let size = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        if size > MAX_FIELD_SIZE as u128 {
            return Err(Error::InvalidField(format!(
                "{p}^{k} exceeds the supported field size {MAX_FIELD_SIZE}"
            )));
        }
        Ok(())
    }

    fn build(p: u32, modulus: Vec<u32>, default_modulus: bool) -> Result<Self> {
        let k = (modulus.len() - 1) as u32;
        let q = p.pow(k);
        let place: Vec<u32> = (0..k).map(|i| p.pow(k - 1 - i)).collect();
        let to_digits = |idx: u32| -> Vec<u32> {
            let mut v: Vec<u32> = place.iter().map(|pl| idx / pl % p).collect();
            trim(&mut v);
            v
        };
        let from_digits = |d: &[u32]| -> u32 { d.iter().zip(&place).map(|(c, pl)| c * pl).sum() };
        let one = vec![1u32];
        let pow_digits = |g: &[u32], mut e: u64| -> Vec<u32> {
            let mut acc = one.clone();
            let mut base = g.to_vec();
            while e > 0 {
                if e & 1 == 1 {
                    acc = poly_mulmod(&acc, &base, &modulus, p);
                }
                base = poly_mulmod(&base, &base, &modulus, p);
                e >>= 1;
            }
            acc
        };
        let group = (q - 1) as u64;
        let factors = prime_factors(group);
        let mut generator = None;
        for idx in 1..q {
            let g = to_digits(idx);
            if factors.iter().all(|r| pow_digits(&g, group / r) != one) {
                generator = Some(g);
                break;
            }
        }
        let g = generator.ok_or_else(|| Error::InvalidField("no primitive element".into()))?;
        let mut exp = Vec::with_capacity(group as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = one.clone();
        for i in 0..group as u32 {
            let idx = from_digits(&cur);
            exp.push(idx);
            log[idx as usize] = i;
            cur = poly_mulmod(&cur, &g, &modulus, p);
        }
        Ok(FiniteField {
            inner: Arc::new(Inner {
                p,
                k,
                q,
                modulus,
                default_modulus,
                place,
                exp,
                log,
                traces: Mutex::new(HashMap::new()),
            }),
        })
    }

    pub fn p(&self) -> u64 {
        self.inner.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.inner.k
    }

    pub fn order(&self) -> u64 {
        self.inner.q as u64
    }

    /// Modulus coefficients, constant term first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// Coefficient vector `(c_0, ..., c_{k-1})` of an element.
    pub fn digits(&self, a: Fe) -> Vec<u32> {
        self.inner.place.iter().map(|pl| a.0 / pl % self.inner.p).collect()
    }

    pub fn from_digits(&self, d: &[u32]) -> Fe {
        Fe(d.iter().zip(&self.inner.place).map(|(c, pl)| (c % self.inner.p) * pl).sum())
    }

    /// Element of the prime subfield.
    pub fn from_u64(&self, n: u64) -> Fe {
        Fe((n % self.inner.p as u64) as u32 * self.inner.place[0])
    }

    pub fn elem(&self, n: u64) -> Fe {
        self.from_u64(n)
    }

    fn add_raw(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.inner;
        if inner.k == 1 {
            (a + b) % inner.p
        } else if inner.p == 2 {
            a ^ b
        } else {
            inner
                .place
                .iter()
                .map(|pl| ((a / pl % inner.p + b / pl % inner.p) % inner.p) * pl)
                .sum()
        }
    }

    fn neg_raw(&self, a: u32) -> u32 {
        let inner = &*self.inner;
        if inner.k == 1 {
            (inner.p - a) % inner.p
        } else if inner.p == 2 {
            a
        } else {
            inner.place.iter().map(|pl| ((inner.p - a / pl % inner.p) % inner.p) * pl).sum()
        }
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.inner;
        let n = inner.q - 1;
        let e = inner.log[a as usize] + inner.log[b as usize];
        inner.exp[(if e >= n { e - n } else { e }) as usize]
    }

    /// Discrete logarithm to the field's fixed primitive element.
    pub fn log(&self, a: Fe) -> Option<u32> {
        (a.0 != 0).then(|| self.inner.log[a.0 as usize])
    }

    pub fn exp(&self, e: u64) -> Fe {
        let n = (self.inner.q - 1) as u64;
        Fe(self.inner.exp[(e % n) as usize])
    }

    /// Smallest `F_{p^K}` (default modulus) with `self.degree() | K` and
    /// `m | p^K - 1`, together with an embedding of `self` into it.
    pub fn extension_containing_unity(&self, m: u64) -> Result<(FiniteField, Embedding)> {
        let ord = min_extension_for_unity(self.p(), m)?;
        let big_k = lcm(self.degree() as u64, ord as u64) as u32;
        let size = (self.p() as u128).checked_pow(big_k).unwrap_or(u128::MAX);
        if size > MAX_FIELD_SIZE as u128 {
            return Err(Error::MissingRootOfUnity {
                order: m,
                field: self.spec(),
                degree: big_k / self.degree(),
            });
        }
        let big = FiniteField::with_default_modulus(self.p(), big_k)?;
        let emb = Embedding::new(self, &big)?;
        Ok((big, emb))
    }

    fn compute_traces(&self, n: u64) -> Result<Vec<Option<Fe>>> {
        let (big, emb) = self.extension_containing_unity(n)?;
        let w = big.exp((big.order() - 1) / n);
        let mut out = Vec::with_capacity(n as usize);
        for j in 0..n {
            let wj = big.pow(&w, j);
            let winv = big.inv(&wj).expect("unit");
            out.push(emb.preimage(big.add(&wj, &winv)));
        }
        Ok(out)
    }
}

impl Field for FiniteField {
    type Elem = Fe;

    fn zero(&self) -> Fe {
        Fe(0)
    }

    fn one(&self) -> Fe {
        Fe(self.inner.place[0])
    }

    fn from_i64(&self, n: i64) -> Fe {
        self.from_u64(n.rem_euclid(self.inner.p as i64) as u64)
    }

    fn from_bigint(&self, n: &BigInt) -> Fe {
        let r = n.mod_floor(&BigInt::from(self.inner.p));
        self.from_u64(r.to_u64().expect("reduced"))
    }

    fn add(&self, a: &Fe, b: &Fe) -> Fe {
        Fe(self.add_raw(a.0, b.0))
    }

    fn neg(&self, a: &Fe) -> Fe {
        Fe(self.neg_raw(a.0))
    }

    fn sub(&self, a: &Fe, b: &Fe) -> Fe {
        Fe(self.add_raw(a.0, self.neg_raw(b.0)))
    }

    fn mul(&self, a: &Fe, b: &Fe) -> Fe {
        Fe(self.mul_raw(a.0, b.0))
    }

    fn inv(&self, a: &Fe) -> Option<Fe> {
        if a.0 == 0 {
            return None;
        }
        let n = self.inner.q - 1;
        let l = self.inner.log[a.0 as usize];
        Some(Fe(self.inner.exp[((n - l) % n) as usize]))
    }

    fn is_zero(&self, a: &Fe) -> bool {
        a.0 == 0
    }

    fn pow(&self, a: &Fe, e: u64) -> Fe {
        if e == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return Fe(0);
        }
        let n = (self.inner.q - 1) as u64;
        let l = self.inner.log[a.0 as usize] as u64;
        Fe(self.inner.exp[((l * (e % n)) % n) as usize])
    }

    fn characteristic(&self) -> u64 {
        self.inner.p as u64
    }

    fn size(&self) -> Option<u64> {
        Some(self.inner.q as u64)
    }

    fn elements(&self) -> Option<Vec<Fe>> {
        Some((0..self.inner.q).map(Fe).collect())
    }

    fn generator(&self) -> Option<Fe> {
        (self.inner.k > 1).then(|| Fe(self.inner.place[1]))
    }

    /// The square root whose coefficient vector is lexicographically least.
    fn sqrt(&self, a: &Fe) -> Option<Fe> {
        if a.0 == 0 {
            return Some(Fe(0));
        }
        if self.inner.p == 2 {
            return Some(self.pow(a, (self.inner.q / 2) as u64));
        }
        let l = self.inner.log[a.0 as usize];
        if l % 2 == 1 {
            return None;
        }
        let r = Fe(self.inner.exp[(l / 2) as usize]);
        Some(r.min(self.neg(&r)))
    }

    fn nth_roots(&self, a: &Fe, n: u64) -> Vec<Fe> {
        if n == 0 {
            return vec![];
        }
        if a.0 == 0 {
            return vec![Fe(0)];
        }
        let m = (self.inner.q - 1) as u64;
        let d = gcd(n % m, m);
        let d = if d == 0 { m } else { d };
        let e = self.inner.log[a.0 as usize] as u64;
        if e % d != 0 {
            return vec![];
        }
        let (n1, m1, e1) = ((n / d) % (m / d), m / d, e / d);
        let y0 = if m1 == 1 {
            0
        } else {
            let inv = (n1 as i64).extended_gcd(&(m1 as i64)).x.rem_euclid(m1 as i64) as u64;
            e1 * inv % m1
        };
        let mut out: Vec<Fe> = (0..d).map(|j| self.exp(y0 + j * m1)).collect();
        out.sort();
        out.dedup();
        out
    }

    fn distinct_roots(&self, coeffs: &[Fe]) -> Vec<Fe> {
        if coeffs.iter().all(|c| c.0 == 0) {
            return vec![];
        }
        (0..self.inner.q)
            .map(Fe)
            .filter(|x| {
                let v = coeffs.iter().rev().fold(Fe(0), |acc, c| self.add(&self.mul(&acc, x), c));
                v.0 == 0
            })
            .collect()
    }

    /// The element of order `m` with the least coefficient vector.
    fn root_of_unity(&self, m: u64) -> Result<Fe> {
        let n = (self.inner.q - 1) as u64;
        if m == 0 || n % m != 0 {
            let degree = min_extension_for_unity(self.p(), m.max(1))
                .map(|k| lcm(k as u64, self.degree() as u64) as u32 / self.degree())
                .unwrap_or(0);
            return Err(Error::MissingRootOfUnity { order: m, field: self.spec(), degree });
        }
        let step = n / m;
        (0..m)
            .filter(|j| gcd(*j, m) == 1)
            .map(|j| self.exp(j * step))
            .min()
            .ok_or_else(|| Error::MissingRootOfUnity { order: m, field: self.spec(), degree: 1 })
    }

    fn unity_traces(&self, n: u64) -> Result<Vec<Option<Fe>>> {
        if let Some(hit) = self.inner.traces.lock().expect("trace cache").get(&n) {
            return Ok(hit.as_ref().clone());
        }
        let traces = self.compute_traces(n)?;
        self.inner.traces.lock().expect("trace cache").insert(n, Arc::new(traces.clone()));
        Ok(traces)
    }

    fn frobenius_root(&self, a: &Fe) -> Fe {
        self.pow(a, (self.inner.q / self.inner.p) as u64)
    }

    fn format_elem(&self, a: &Fe) -> String {
        if self.inner.k == 1 {
            return a.0.to_string();
        }
        let d = self.digits(*a);
        let mut terms = Vec::new();
        for (i, c) in d.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let t = match (i, *c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}*t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}*t^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    fn is_compound(&self, a: &Fe) -> bool {
        self.inner.k > 1 && self.digits(*a).iter().filter(|c| **c != 0).count() > 1
    }

    fn spec(&self) -> String {
        let inner = &*self.inner;
        match (inner.k, inner.default_modulus) {
            (1, true) => format!("GF({})", inner.p),
            (k, true) => format!("GF({}^{})", inner.p, k),
            (k, false) => {
                let m: Vec<String> = inner.modulus.iter().map(|c| c.to_string()).collect();
                if k == 1 {
                    format!("GF({};{})", inner.p, m.join(","))
                } else {
                    format!("GF({}^{};{})", inner.p, k, m.join(","))
                }
            }
        }
    }
}

/// A field embedding `small -> large` of finite fields of the same
/// characteristic, with a lookup table for preimages.
#[derive(Clone)]
pub struct Embedding {
    small: FiniteField,
    large: FiniteField,
    image: Vec<u32>,
    preimage: Vec<u32>,
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Embedding({} -> {})", self.small.spec(), self.large.spec())
    }
}

impl Embedding {
    /// Sends the generator of `small` to the least root of its modulus in
    /// `large`.
    pub fn new(small: &FiniteField, large: &FiniteField) -> Result<Self> {
        if small.p() != large.p() || large.degree() % small.degree() != 0 {
            return Err(Error::FieldMismatch);
        }
        let m: Vec<Fe> = small.modulus().iter().map(|c| large.from_u64(*c as u64)).collect();
        let root = large
            .distinct_roots(&m)
            .into_iter()
            .next()
            .ok_or_else(|| Error::InvalidField("modulus has no root in the extension".into()))?;
        let powers: Vec<Fe> = (0..small.degree() as u64).map(|i| large.pow(&root, i)).collect();
        let mut image = Vec::with_capacity(small.order() as usize);
        let mut preimage = vec![u32::MAX; large.order() as usize];
        for idx in 0..small.order() as u32 {
            let d = small.digits(Fe(idx));
            let v = d.iter().zip(&powers).fold(Fe(0), |acc, (c, pw)| {
                large.add(&acc, &large.mul(&large.from_u64(*c as u64), pw))
            });
            image.push(v.0);
            preimage[v.0 as usize] = idx;
        }
        Ok(Embedding { small: small.clone(), large: large.clone(), image, preimage })
    }

    pub fn small(&self) -> &FiniteField {
        &self.small
    }

    pub fn large(&self) -> &FiniteField {
        &self.large
    }

    pub fn map(&self, a: Fe) -> Fe {
        Fe(self.image[a.0 as usize])
    }

    pub fn preimage(&self, a: Fe) -> Option<Fe> {
        let v = self.preimage[a.0 as usize];
        (v != u32::MAX).then_some(Fe(v))
    }
}
