use super::{right_linear_shift_match, UniPoly};
use crate::error::{Error, Result};
use crate::field::Field;

/// Largest number of candidates tried by the wild right-component search.
pub const WILD_SEARCH_LIMIT: u64 = 1 << 16;

/// `f = phi(f1)` and `g = phi(g1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition<F: Field> {
    pub phi: UniPoly<F>,
    pub f1: UniPoly<F>,
    pub g1: UniPoly<F>,
}

/// `f0` with `f = f0(X^p)`, or `None` in characteristic zero or when some
/// exponent of `f` is not divisible by `p`.
pub fn frobenius_decompose<F: Field>(f: &UniPoly<F>) -> Option<UniPoly<F>> {
    let p = f.field().characteristic() as usize;
    if p == 0 || !f.is_polynomial_in_power(p) {
        return None;
    }
    Some(UniPoly::new(f.field(), f.coeffs().iter().step_by(p).cloned().collect()))
}

/// Digits of `f` in base `h`: `f = sum c_i h^i` with `deg c_i < deg h`.
pub fn base_expansion<F: Field>(f: &UniPoly<F>, h: &UniPoly<F>) -> Vec<UniPoly<F>> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(h).expect("nonconstant base");
        out.push(r);
        rest = q;
    }
    out
}

/// `phi` with `f = phi(f1)`, when it exists.
pub fn left_component<F: Field>(f: &UniPoly<F>, f1: &UniPoly<F>) -> Option<UniPoly<F>> {
    if f1.is_constant() {
        return None;
    }
    if f1.degree() == 1 {
        let k = f.field();
        let a = k.inv(&f1.lead())?;
        return Some(f.compose_linear(&a, &k.neg(&k.mul(&a, &f1.coeff(0)))));
    }
    let digits = base_expansion(f, f1);
    if !digits.iter().all(|c| c.is_constant()) {
        return None;
    }
    Some(UniPoly::new(f.field(), digits.iter().map(|c| c.coeff(0)).collect()))
}

/// The monic zero-shifted approximate `r`-th root of `f` of degree
/// `deg f / r`, from the top coefficients of `f`. Requires `p` not dividing
/// `r`.
fn tame_candidate<F: Field>(f: &UniPoly<F>, d: usize) -> UniPoly<F> {
    let k = f.field();
    let n = f.degree();
    let r = n / d;
    let target = f.monic();
    let r_inv = k.inv(&k.from_i64(r as i64)).expect("tame degree");
    // reversed coefficients: rev[j] is the coefficient of X^(d-j)
    let mut rev = vec![k.zero(); d];
    rev[0] = k.one();
    for j in 1..d {
        let power = truncated_pow(k, &rev[..j], r, j + 1);
        let e = k.sub(&target.coeff(n - j), &power[j]);
        rev[j] = k.mul(&e, &r_inv);
    }
    let mut h: Vec<F::Elem> = rev.into_iter().rev().collect();
    h.insert(0, k.zero());
    UniPoly::new(k, h)
}

/// `s^e mod t^len` for a power series `s`.
fn truncated_pow<F: Field>(k: &F, s: &[F::Elem], mut e: usize, len: usize) -> Vec<F::Elem> {
    let mul = |a: &[F::Elem], b: &[F::Elem]| {
        let mut out = vec![k.zero(); len];
        for (i, x) in a.iter().enumerate().take(len) {
            for (j, y) in b.iter().enumerate().take(len - i) {
                out[i + j] = k.add(&out[i + j], &k.mul(x, y));
            }
        }
        out
    };
    let mut base = s.to_vec();
    base.resize(len, k.zero());
    let mut acc = vec![k.zero(); len];
    acc[0] = k.one();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    acc
}

/// Every monic zero-shifted `f1` of degree `d` with `f = phi(f1)` for some
/// `phi`. Complete when `p` does not divide `deg f / d`; otherwise an
/// exhaustive search that fails with `BudgetExceeded` past
/// [`WILD_SEARCH_LIMIT`] candidates.
pub fn right_components<F: Field>(f: &UniPoly<F>, d: usize) -> Result<Vec<UniPoly<F>>> {
    Ok(components(f, d)?.into_iter().map(|(h, _)| h).collect())
}

/// Pairs `(f1, phi)` behind [`right_components`].
fn components<F: Field>(f: &UniPoly<F>, d: usize) -> Result<Vec<(UniPoly<F>, UniPoly<F>)>> {
    let k = f.field();
    let n = f.degree();
    if f.is_constant() || d == 0 || n % d != 0 {
        return Ok(vec![]);
    }
    let with_left = |h: UniPoly<F>| left_component(f, &h).map(|l| (h, l));
    if d == n {
        return Ok(with_left(f.monic().zero_shifted()).into_iter().collect());
    }
    let r = (n / d) as u64;
    let p = k.characteristic();
    if d == 1 {
        return Ok(vec![(UniPoly::x(k), f.clone())]);
    }
    if p == 0 || r % p != 0 {
        let h = tame_candidate(f, d);
        return Ok(with_left(h).into_iter().collect());
    }
    let elems = k.elements().expect("positive characteristic fields are finite");
    let q = elems.len() as u64;
    let count = q.checked_pow(d as u32 - 1).filter(|c| *c <= WILD_SEARCH_LIMIT).ok_or_else(|| {
        Error::BudgetExceeded(format!("wild right components of degree {d} over {}", k.spec()))
    })?;
    let mut out = Vec::new();
    for idx in 0..count {
        let mut c = vec![k.zero(); d + 1];
        c[d] = k.one();
        let mut x = idx;
        for slot in c.iter_mut().take(d).skip(1) {
            *slot = elems[(x % q) as usize].clone();
            x /= q;
        }
        let h = UniPoly::new(k, c);
        out.extend(with_left(h));
    }
    Ok(out)
}

/// First right component of degree `d`, see [`right_components`].
pub fn right_component<F: Field>(f: &UniPoly<F>, d: usize) -> Option<UniPoly<F>> {
    right_components(f, d).ok()?.into_iter().next()
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All decompositions `f = phi(f1)`, `g = phi(g1)` with `f1` monic and
/// zero-shifted, `g1` a linear image of a monic zero-shifted polynomial,
/// ordered by `deg f1` descending. Wild searches that exceed the limit are
/// skipped; the flag reports whether that happened.
pub fn common_decompositions<F: Field>(
    f: &UniPoly<F>,
    g: &UniPoly<F>,
) -> Result<(Vec<Decomposition<F>>, bool)> {
    f.check_field(g)?;
    if f.is_constant() || g.is_constant() {
        return Err(Error::Precondition("f and g must be nonconstant".into()));
    }
    let (nf, ng) = (f.degree(), g.degree());
    let mut out = Vec::new();
    let mut truncated = false;
    for m in divisors(gcd(nf, ng)) {
        let (ff, gg) = match (components(f, nf / m), components(g, ng / m)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => {
                truncated = true;
                continue;
            }
        };
        for (f1, phi) in &ff {
            for (g1, phi_g) in &gg {
                for (u, v) in right_linear_shift_match(phi, phi_g) {
                    out.push(Decomposition { phi: phi.clone(), f1: f1.clone(), g1: g1.affine(&u, &v) });
                }
            }
        }
    }
    Ok((out, truncated))
}

/// A decomposition with `deg phi` maximal among those found;
/// `(f, X, X)`-style trivial decompositions are always available.
pub fn common_left_component<F: Field>(f: &UniPoly<F>, g: &UniPoly<F>) -> Result<Decomposition<F>> {
    let (all, _) = common_decompositions(f, g)?;
    all.into_iter()
        .max_by_key(|d| d.phi.degree())
        .ok_or_else(|| Error::Precondition("no decomposition".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, FiniteField, Rationals};
    use crate::unipoly::dickson;

    fn q(c: &[i64]) -> UniPoly<Rationals> {
        UniPoly::from_i64s(&Rationals, c)
    }

    #[test]
    fn frobenius_examples() {
        let f3 = FiniteField::prime(3).unwrap();
        let f = UniPoly::from_i64s(&f3, &[0, 0, 0, 1, 0, 0, 1]);
        assert_eq!(frobenius_decompose(&f), Some(UniPoly::from_i64s(&f3, &[0, 1, 1])));
        assert_eq!(frobenius_decompose(&UniPoly::from_i64s(&f3, &[0, 1, 0, 1])), None);
        assert_eq!(frobenius_decompose(&UniPoly::from_i64s(&f3, &[2])), Some(UniPoly::from_i64s(&f3, &[2])));
        assert_eq!(frobenius_decompose(&q(&[0, 0, 1])), None);
    }

    #[test]
    fn right_component_examples() {
        let f = q(&[1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(right_component(&f, 3), Some(q(&[0, 0, 0, 1])));
        assert_eq!(right_component(&f, 2), Some(q(&[0, 0, 1])));
        let d6 = dickson(&Rationals, 6, &Rationals.from_i64(5));
        assert_eq!(right_component(&d6, 2), Some(q(&[0, 0, 1])));
        assert_eq!(right_component(&q(&[0, 1, 0, 0, 0, 0, 1]), 3), None);
    }

    #[test]
    fn base_expansion_examples() {
        let h = q(&[0, 0, 1]);
        assert_eq!(base_expansion(&h, &h), vec![q(&[]), q(&[1])]);
        assert_eq!(base_expansion(&q(&[1, 0, 0, 0, 0, 0, 1]), &q(&[0, 0, 0, 1])), vec![q(&[1]), q(&[]), q(&[1])]);
        assert_eq!(base_expansion(&q(&[0, 1, 1]), &h), vec![q(&[0, 1]), q(&[1])]);
    }

    #[test]
    fn left_component_examples() {
        let x3 = q(&[0, 0, 0, 1]);
        assert_eq!(left_component(&q(&[1, 0, 0, 0, 0, 0, 1]), &x3), Some(q(&[1, 0, 1])));
        assert_eq!(left_component(&q(&[1, 2, 3]), &q(&[0, 1])), Some(q(&[1, 2, 3])));
        assert_eq!(left_component(&q(&[0, 1, 0, 0, 0, 0, 1]), &x3), None);
    }

    #[test]
    fn common_component_examples() {
        let phi = q(&[1, 0, 1]);
        let f = phi.compose(&q(&[0, 0, 0, 1]));
        let g = phi.compose(&q(&[0, 1, 0, 1]));
        let d = common_left_component(&f, &g).unwrap();
        assert_eq!(d.phi, phi);
        assert_eq!(d.phi.compose(&d.f1), f);
        assert_eq!(d.phi.compose(&d.g1), g);

        let d = common_left_component(&q(&[0, 0, 0, 1]), &q(&[0, 0, 1])).unwrap();
        assert_eq!((d.phi, d.f1, d.g1), (q(&[0, 1]), q(&[0, 0, 0, 1]), q(&[0, 0, 1])));
    }

    #[test]
    fn wild_components_over_f2() {
        let f2 = FiniteField::prime(2).unwrap();
        // (X^2 + X) o (X^2 + X) = X^4 + X
        let h = UniPoly::from_i64s(&f2, &[0, 1, 1]);
        let f = h.compose(&h);
        let comps = right_components(&f, 2).unwrap();
        assert!(comps.contains(&h));
        for c in comps {
            assert_eq!(left_component(&f, &c).unwrap().compose(&c), f);
        }
    }
}
