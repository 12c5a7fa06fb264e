use super::{difference_poly, quad_factors_exhaustive, BiPoly, QuadPoly};
use crate::error::{Error, Result};
use crate::field::{Embedding, Fe, Field, FiniteField, MAX_FIELD_SIZE};
use crate::unipoly::{dickson, Family, UniPoly};

pub(crate) fn x_minus_y<F: Field>(k: &F) -> BiPoly<F> {
    BiPoly::from_terms(k, &[(1, 0, k.one()), (0, 1, k.neg(&k.one()))])
}

pub(crate) fn x_plus_y<F: Field>(k: &F) -> BiPoly<F> {
    BiPoly::from_terms(k, &[(1, 0, k.one()), (0, 1, k.one())])
}

/// `X^2 - c XY + Y^2 + (c^2 - 4) a`
pub(crate) fn trace_quadratic<F: Field>(k: &F, c: &F::Elem, a: &F::Elem) -> BiPoly<F> {
    let konst = k.mul(&k.sub(&k.mul(c, c), &k.from_i64(4)), a);
    BiPoly::from_terms(k, &[(2, 0, k.one()), (1, 1, k.neg(c)), (0, 2, k.one()), (0, 0, konst)])
}

fn check_tame<F: Field>(k: &F, n: u64) -> Result<()> {
    let p = k.characteristic();
    if p != 0 && n % p == 0 {
        return Err(Error::DivisibleByCharacteristic { what: format!("n = {n}"), p });
    }
    Ok(())
}

fn missing_unity<F: Field>(k: &F, order: u64) -> Error {
    // least j with order | q^j - 1
    let degree = match k.size() {
        Some(q) if order > 1 && q % order != 0 && gcd_u64(q, order) == 1 => {
            let step = q % order;
            let (mut acc, mut j) = (step, 1u32);
            while acc != 1 {
                acc = acc * step % order;
                j += 1;
            }
            j
        }
        _ => 0,
    };
    Error::MissingRootOfUnity { order, field: k.spec(), degree }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

fn verify_product<F: Field>(k: &F, factors: &[BiPoly<F>], target: &BiPoly<F>, what: &str) -> Result<()> {
    if BiPoly::product(k, factors) == *target {
        Ok(())
    } else {
        Err(Error::Constraint(format!("{what}: product of factors differs from the target")))
    }
}

/// Factors of `D_n(X, a) - D_n(Y, a)`: `X - Y`, `X + Y` for even `n`, and
/// `X^2 - c_k XY + Y^2 + (c_k^2 - 4) a` with `c_k = z^k + z^-k` for a
/// primitive `n`-th root of unity `z`, `1 <= k < n/2`. The traces `c_k`
/// must lie in the field.
pub fn dickson_diff_factors<F: Field>(k: &F, n: usize, a: &F::Elem) -> Result<Vec<BiPoly<F>>> {
    check_tame(k, n as u64)?;
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let traces = k.unity_traces(n as u64)?;
    let mut out = vec![x_minus_y(k)];
    if n % 2 == 0 {
        out.push(x_plus_y(k));
    }
    for c in traces.iter().take(n.div_ceil(2)).skip(1) {
        let c = c.as_ref().ok_or_else(|| missing_unity(k, n as u64))?;
        out.push(trace_quadratic(k, c, a));
    }
    let d = dickson(k, n, a);
    verify_product(k, &out, &difference_poly(&d, &d)?, "Dickson difference")?;
    Ok(out)
}

/// Factors of `D_n(X, a) + D_n(Y, a)` for even `n` prime to `p`:
/// `X^2 - c_k XY + Y^2 + (c_k^2 - 4) a` over odd `k < n`, with
/// `c_k = x^k + x^-k` for a primitive `2n`-th root of unity `x`.
pub fn dickson_sum_factors<F: Field>(k: &F, n: usize, a: &F::Elem) -> Result<Vec<BiPoly<F>>> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::Precondition(format!("n = {n} must be even and positive")));
    }
    check_tame(k, 2 * n as u64)?;
    let traces = k.unity_traces(2 * n as u64)?;
    let mut out = Vec::new();
    for j in (1..n).step_by(2) {
        let c = traces[j].as_ref().ok_or_else(|| missing_unity(k, 2 * n as u64))?;
        out.push(trace_quadratic(k, c, a));
    }
    let d = dickson(k, n, a);
    verify_product(k, &out, &difference_poly(&d, &d.neg())?, "Dickson sum")?;
    Ok(out)
}

/// Substitutes `W -> X + sign * Y` into `w`.
fn in_w<F: Field>(w: &UniPoly<F>, sign: i64) -> BiPoly<F> {
    let k = w.field();
    let lin = BiPoly::from_terms(k, &[(1, 0, k.one()), (0, 1, k.from_i64(sign))]);
    let mut acc = BiPoly::zero(k);
    for c in w.coeffs().iter().rev() {
        acc = acc.mul(&lin).add(&BiPoly::constant(k, c.clone()));
    }
    acc
}

fn split_in_w<F: Field>(w: &UniPoly<F>, sign: i64) -> Result<Vec<BiPoly<F>>> {
    let (small, rest) = w.small_factors()?;
    let mut out: Vec<BiPoly<F>> = small.iter().map(|f| in_w(f, sign)).collect();
    if !rest.is_constant() {
        out.push(in_w(&rest.monic(), sign));
    }
    let scale = rest.lead();
    if let Some(first) = out.first_mut() {
        *first = first.scale(&scale);
    }
    Ok(out)
}

/// Factors of `h(X) - h(Y)` for the additive families, through the
/// univariate factorizations of `W^p - a W` (in `W = X - Y`) resp.
/// `W^p + a W` and `W^p + a W + 2b` (in `X - Y` and `X + Y`). Factors of
/// degree above two are returned unsplit.
pub fn additive_diff_factors<F: Field>(family: &Family<F>, k: &F) -> Result<Vec<BiPoly<F>>> {
    let p = k.characteristic() as usize;
    if p < 3 {
        return Err(Error::Precondition("additive families need p >= 3".into()));
    }
    let wp = UniPoly::monomial(k, k.one(), p);
    let out = match family {
        Family::AdditiveP { a } => split_in_w(&wp.sub(&UniPoly::monomial(k, a.clone(), 1)), -1)?,
        Family::SquaredAdditive { a, b } => {
            let q = wp.add(&UniPoly::monomial(k, a.clone(), 1));
            let r = q.add_constant(&k.mul(&k.from_i64(2), b));
            let mut out = split_in_w(&q, -1)?;
            out.extend(split_in_w(&r, 1)?);
            out
        }
        _ => return Err(Error::Precondition("not an additive family".into())),
    };
    let h = family.poly(k);
    verify_product(k, &out, &difference_poly(&h, &h)?, "additive difference")?;
    Ok(out)
}

/// `(X - Y)^2 - 2 s (X + Y) + s^2`, the factor belonging to `t` with `t^2 = s`.
pub(crate) fn b4_quadratic<F: Field>(k: &F, s: &F::Elem) -> BiPoly<F> {
    let d = x_minus_y(k);
    let two_s = k.mul(&k.from_i64(2), s);
    d.mul(&d).sub(&x_plus_y(k).scale(&two_s)).add(&BiPoly::constant(k, k.mul(s, s)))
}

/// `h(X) - h(Y) = (X - Y) prod_t ((X - Y)^2 - 2t^2 (X + Y) + t^4)` for
/// `h = X^p - 2a X^((p+1)/2) + a^2 X`, where the `t^2` run over the roots
/// `s` of `S^((p-1)/2) = a`, which must all lie in the field.
pub fn remark_b4_factors<F: Field>(k: &F, a: &F::Elem) -> Result<Vec<BiPoly<F>>> {
    let p = k.characteristic();
    if p < 3 {
        return Err(Error::Precondition("needs characteristic at least 3".into()));
    }
    if k.is_zero(a) {
        return Err(Error::Precondition("a must be nonzero".into()));
    }
    let m = (p - 1) / 2;
    let squares = k.nth_roots(a, m);
    if squares.len() as u64 != m {
        return Err(Error::NeedsExtension { field: k.spec(), degree: 0 });
    }
    let mut out = vec![x_minus_y(k)];
    out.extend(squares.iter().map(|s| b4_quadratic(k, s)));
    let h = crate::unipoly::Family::HalfAdditive { a: a.clone() }.poly(k);
    verify_product(k, &out, &difference_poly(&h, &h)?, "half-additive difference")?;
    Ok(out)
}

/// Factors of `h(X) - h(Y)` for `h = X^4 + (1+a) X^2 + a X` in
/// characteristic 2.
#[derive(Clone, Debug)]
pub struct B5Factors<F: Field> {
    pub factors: Vec<BiPoly<F>>,
    /// Whether `Z^2 + Z = a` has no solution, i.e. the quadratic factor is
    /// irreducible.
    pub quadratic_irreducible: bool,
}

pub fn remark_b5_factors<F: Field>(k: &F, a: &F::Elem) -> Result<B5Factors<F>> {
    if k.characteristic() != 2 {
        return Err(Error::Precondition("needs characteristic 2".into()));
    }
    let s = x_plus_y(k);
    let one = BiPoly::constant(k, k.one());
    let quad = BiPoly::from_terms(
        k,
        &[(2, 0, k.one()), (1, 0, k.one()), (0, 2, k.one()), (0, 1, k.one()), (0, 0, a.clone())],
    );
    let factors = vec![s.clone(), s.add(&one), quad];
    let h = Family::Char2Quartic { a: a.clone() }.poly(k);
    verify_product(k, &factors, &difference_poly(&h, &h)?, "characteristic-2 quartic difference")?;
    let solvable = !k.distinct_roots(&[k.neg(a), k.one(), k.one()]).is_empty();
    Ok(B5Factors { factors, quadratic_irreducible: !solvable })
}

/// Discriminant `B^2 - 4AC` of a polynomial `A X^2 + B X + C` with
/// coefficients in `K[Y]`.
pub fn discriminant_x<F: Field>(q: &BiPoly<F>) -> Result<UniPoly<F>> {
    if q.deg_x() != 2 {
        return Err(Error::Precondition("needs X-degree two".into()));
    }
    let (a, b, c) = (q.x_coeff(2), q.x_coeff(1), q.x_coeff(0));
    let four = q.field().from_i64(4);
    Ok(b.mul(&b).sub(&a.mul(&c).scale(&four)))
}

/// Square root in `K[Y]`, by matching coefficients from the top.
fn poly_sqrt<F: Field>(f: &UniPoly<F>) -> Option<UniPoly<F>> {
    let k = f.field();
    if f.is_zero() {
        return Some(f.clone());
    }
    let d = f.degree();
    if d % 2 == 1 {
        return None;
    }
    let h = d / 2;
    let top = k.sqrt(&f.lead())?;
    let two_top = k.mul(&k.from_i64(2), &top);
    let mut r = vec![k.zero(); h + 1];
    r[h] = top;
    for j in 1..=h {
        let cur = UniPoly::new(k, r.clone());
        let diff = f.sub(&cur.mul(&cur));
        r[h - j] = k.div(&diff.coeff(d - j), &two_top).ok()?;
    }
    let root = UniPoly::new(k, r);
    (root.mul(&root) == *f).then_some(root)
}

/// `X^2 + B X + C`, with `B`, `C` in `K[Y]`.
fn monic_quadratic<F: Field>(b: &UniPoly<F>, c: &UniPoly<F>) -> BiPoly<F> {
    let k = b.field();
    let x = BiPoly::from_terms(k, &[(1, 0, k.one())]);
    x.mul(&x).add(&BiPoly::from_y(b).mul(&x)).add(&BiPoly::from_y(c))
}

/// Coefficient matching for depressed quartics: `B1 = -B2` with either
/// `B1 = 0` or `C1 = C2`.
fn split_depressed<F: Field>(q4: &BiPoly<F>) -> Option<(BiPoly<F>, BiPoly<F>)> {
    let k = q4.field();
    let (e2, e1, e0) = (q4.x_coeff(2), q4.x_coeff(1), q4.x_coeff(0));
    let half = k.inv(&k.from_i64(2))?;
    if e1.is_zero() {
        // C1 + C2 = e2, C1 C2 = e0
        let disc = e2.mul(&e2).sub(&e0.scale(&k.from_i64(4)));
        if let Some(r) = poly_sqrt(&disc) {
            let c1 = e2.add(&r).scale(&half);
            let c2 = e2.sub(&r).scale(&half);
            let zero = UniPoly::zero(k);
            return Some((monic_quadratic(&zero, &c1), monic_quadratic(&zero, &c2)));
        }
    }
    // (X^2 + C)^2 - B^2 X^2 with C^2 = e0, B^2 = 2C - e2
    let c = poly_sqrt(&e0)?;
    for c in [c.clone(), c.neg()] {
        if let Some(b) = poly_sqrt(&c.scale(&k.from_i64(2)).sub(&e2)) {
            let prod = monic_quadratic(&b, &c).mul(&monic_quadratic(&b.neg(), &c));
            if prod == *q4 {
                return Some((monic_quadratic(&b, &c), monic_quadratic(&b.neg(), &c)));
            }
        }
    }
    None
}

/// Splits a polynomial of `X`-degree four with constant leading coefficient
/// into two quadratics of total degree two. Finite fields of at most
/// 64 elements are searched exhaustively; otherwise depressed quartics are
/// handled by coefficient matching.
pub fn quartic_split<F: Field>(q4: &BiPoly<F>) -> Option<(QuadPoly<F::Elem>, QuadPoly<F::Elem>)> {
    let k = q4.field();
    if q4.deg_x() != 4 || q4.total_degree() > 4 || !q4.x_coeff(4).is_constant() {
        return None;
    }
    let finish = |a: &BiPoly<F>, b: &BiPoly<F>| -> Option<(QuadPoly<F::Elem>, QuadPoly<F::Elem>)> {
        let lc = q4.coeff(4, 0);
        if a.mul(b).scale(&lc) != *q4 {
            return None;
        }
        let (qa, qb) = (QuadPoly::from_bipoly(a)?, QuadPoly::from_bipoly(b)?);
        Some(if qa <= qb { (qa, qb) } else { (qb, qa) })
    };
    if let Some(q) = k.size().filter(|q| *q <= 64) {
        let found = quad_factors_exhaustive(q4, q).ok()?;
        for f in found.iter().filter(|f| !k.is_zero(&f.coeffs[0])) {
            let fb = f.to_bipoly(k);
            if let Ok(Some(co)) = super::divide_monic_in_x(q4, &fb) {
                if co.total_degree() <= 2 {
                    let inv = k.inv(&q4.coeff(4, 0))?;
                    if let Some(r) = finish(&fb, &co.scale(&inv)) {
                        return Some(r);
                    }
                }
            }
        }
        return None;
    }
    let monic = q4.scale(&k.inv(&q4.coeff(4, 0))?);
    // X -> X - e3/4 removes the cubic term
    let shift = k.div(&monic.coeff(3, 0), &k.from_i64(4)).ok()?;
    if !monic.x_coeff(3).is_constant() {
        return None;
    }
    let y = BiPoly::from_terms(k, &[(0, 1, k.one())]);
    let xs = BiPoly::from_terms(k, &[(1, 0, k.one()), (0, 0, k.neg(&shift))]);
    let xs_back = BiPoly::from_terms(k, &[(1, 0, k.one()), (0, 0, shift)]);
    let depressed = monic.substitute(&xs, &y);
    let (a, b) = split_depressed(&depressed)?;
    let (a, b) = (a.substitute(&xs_back, &y), b.substitute(&xs_back, &y));
    if a.total_degree() > 2 || b.total_degree() > 2 {
        return None;
    }
    finish(&a, &b)
}

/// Factors computed over an extension `E` of a finite base field, with a
/// flag per factor telling whether all its coefficients lie in the base.
#[derive(Clone, Debug)]
pub struct ExtendedFactors {
    pub embedding: Embedding,
    pub factors: Vec<BiPoly<FiniteField>>,
    pub in_base: Vec<bool>,
}

impl ExtendedFactors {
    fn new(embedding: Embedding, factors: Vec<BiPoly<FiniteField>>) -> Self {
        let in_base = factors.iter().map(|f| pull_back(&embedding, f).is_some()).collect();
        ExtendedFactors { embedding, factors, in_base }
    }

    pub fn extension(&self) -> &FiniteField {
        self.embedding.large()
    }

    /// The factors with coefficients in the base field, rewritten over it.
    pub fn base_factors(&self) -> Vec<BiPoly<FiniteField>> {
        self.factors.iter().filter_map(|f| pull_back(&self.embedding, f)).collect()
    }

    pub fn dickson_diff(k: &FiniteField, n: usize, a: Fe) -> Result<Self> {
        check_tame(k, n as u64)?;
        let (big, emb) = k.extension_containing_unity(n as u64)?;
        let factors = dickson_diff_factors(&big, n, &emb.map(a))?;
        Ok(Self::new(emb, factors))
    }

    pub fn dickson_sum(k: &FiniteField, n: usize, a: Fe) -> Result<Self> {
        check_tame(k, 2 * n as u64)?;
        let (big, emb) = k.extension_containing_unity(2 * n as u64)?;
        let factors = dickson_sum_factors(&big, n, &emb.map(a))?;
        Ok(Self::new(emb, factors))
    }

    /// The half-additive factorization over the least extension in which
    /// `S^((p-1)/2) = a` splits.
    pub fn remark_b4(k: &FiniteField, a: Fe) -> Result<Self> {
        let p = k.p();
        if p < 3 {
            return Err(Error::Precondition("needs characteristic at least 3".into()));
        }
        let m = (p - 1) / 2;
        let mut j = 1;
        loop {
            let deg = k.degree() * j;
            let size = (p as u128).checked_pow(deg).unwrap_or(u128::MAX);
            if size > MAX_FIELD_SIZE as u128 {
                return Err(Error::NeedsExtension { field: k.spec(), degree: j });
            }
            let big = FiniteField::with_default_modulus(p, deg)?;
            let emb = Embedding::new(k, &big)?;
            if big.nth_roots(&emb.map(a), m).len() as u64 == m {
                let factors = remark_b4_factors(&big, &emb.map(a))?;
                return Ok(Self::new(emb, factors));
            }
            j += 1;
        }
    }
}

/// Rewrites a polynomial over the large field of `emb` over the small one.
pub fn pull_back(emb: &Embedding, f: &BiPoly<FiniteField>) -> Option<BiPoly<FiniteField>> {
    let small = emb.small();
    let mut terms = Vec::new();
    for (i, j) in f.support() {
        terms.push((i, j, emb.preimage(f.coeff(i, j))?));
    }
    Some(BiPoly::from_terms(small, &terms))
}

/// Linear factors `X - bY - c` of a polynomial of total degree two with
/// constant `X^2` coefficient, found by solving `Q(bY + c, Y) = 0`
/// coefficientwise.
pub fn linear_factors<F: Field>(q: &BiPoly<F>) -> Vec<BiPoly<F>> {
    let k = q.field();
    if q.deg_x() != 2 || q.total_degree() != 2 {
        return vec![];
    }
    let a = q.coeff(2, 0);
    let (b1, b0) = (q.coeff(1, 1), q.coeff(1, 0));
    let (c2, c1, c0) = (q.coeff(0, 2), q.coeff(0, 1), q.coeff(0, 0));
    let mut out = Vec::new();
    for b in k.distinct_roots(&[c2, b1.clone(), a.clone()]) {
        for c in k.distinct_roots(&[c0.clone(), b0.clone(), a.clone()]) {
            // Y coefficient: 2abc + b1 c + b0 b + c1
            let two_abc = k.mul(&k.mul(&k.from_i64(2), &a), &k.mul(&b, &c));
            let mid = k.add(&k.add(&two_abc, &k.mul(&b1, &c)), &k.add(&k.mul(&b0, &b), &c1));
            if k.is_zero(&mid) {
                out.push(BiPoly::from_terms(k, &[(1, 0, k.one()), (0, 1, k.neg(&b)), (0, 0, k.neg(&c))]));
            }
        }
    }
    out
}
