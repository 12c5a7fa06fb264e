use super::{dickson, UniPoly};
use crate::field::Field;

/// The special polynomials `h` whose differences `h(X) - h(Y)` carry
/// quadratic factors.
#[derive(Clone, Debug, PartialEq)]
pub enum Family<F: Field> {
    /// `D_n(X, a)`
    Dickson { n: usize, a: F::Elem },
    /// `X^p - a X`
    AdditiveP { a: F::Elem },
    /// `(X^p + a X + b)^2`
    SquaredAdditive { a: F::Elem, b: F::Elem },
    /// `X^p - 2a X^((p+1)/2) + a^2 X`
    HalfAdditive { a: F::Elem },
    /// `X^4 + (1+a) X^2 + a X`, characteristic 2
    Char2Quartic { a: F::Elem },
}

impl<F: Field> Family<F> {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Dickson { .. } => "dickson",
            Family::AdditiveP { .. } => "additive",
            Family::SquaredAdditive { .. } => "squared-additive",
            Family::HalfAdditive { .. } => "half-additive",
            Family::Char2Quartic { .. } => "char2-quartic",
        }
    }

    /// The polynomial `h` itself.
    pub fn poly(&self, k: &F) -> UniPoly<F> {
        let p = k.characteristic() as usize;
        match self {
            Family::Dickson { n, a } => dickson(k, *n, a),
            Family::AdditiveP { a } => {
                UniPoly::monomial(k, k.one(), p).sub(&UniPoly::monomial(k, a.clone(), 1))
            }
            Family::SquaredAdditive { a, b } => {
                let inner = UniPoly::monomial(k, k.one(), p).add(&UniPoly::linear(k, a.clone(), b.clone()));
                inner.mul(&inner)
            }
            Family::HalfAdditive { a } => half_additive(k, a),
            Family::Char2Quartic { a } => {
                let one_a = k.add(&k.one(), a);
                UniPoly::new(k, vec![k.zero(), a.clone(), one_a, k.zero(), k.one()])
            }
        }
    }
}

pub(crate) fn half_additive<F: Field>(k: &F, a: &F::Elem) -> UniPoly<F> {
    let p = k.characteristic() as usize;
    let mid = k.mul(&k.from_i64(-2), a);
    UniPoly::monomial(k, k.one(), p)
        .add(&UniPoly::monomial(k, mid, p.div_ceil(2)))
        .add(&UniPoly::monomial(k, k.mul(a, a), 1))
}

/// `f = scale * h(gamma X + delta) + shift`, with `h = family.poly()`.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyMatch<F: Field> {
    pub family: Family<F>,
    pub gamma: F::Elem,
    pub delta: F::Elem,
    pub scale: F::Elem,
    pub shift: F::Elem,
}

impl<F: Field> FamilyMatch<F> {
    /// `h(gamma X + delta)`
    pub fn inner(&self, k: &F) -> UniPoly<F> {
        self.family.poly(k).compose_linear(&self.gamma, &self.delta)
    }

    pub fn rebuild(&self, k: &F) -> UniPoly<F> {
        self.inner(k).affine(&self.scale, &self.shift)
    }
}

/// `(f / lc)(X)` as `h(X + delta) + c` for a known `h`; returns the match
/// with unit `gamma` when the difference is constant.
fn finish<F: Field>(f: &UniPoly<F>, family: Family<F>, delta: F::Elem) -> Option<FamilyMatch<F>> {
    let k = f.field();
    let inner = family.poly(k).compose_linear(&k.one(), &delta);
    let scale = f.lead();
    let rest = f.sub(&inner.scale(&scale));
    if !rest.is_constant() {
        return None;
    }
    Some(FamilyMatch { family, gamma: k.one(), delta, scale, shift: rest.coeff(0) })
}

fn match_dickson<F: Field>(f: &UniPoly<F>) -> Option<FamilyMatch<F>> {
    let k = f.field();
    let n = f.degree();
    let p = k.characteristic();
    if n == 0 || (p != 0 && n as u64 % p == 0) {
        return None;
    }
    let monic = f.monic();
    let s = k.div(&monic.coeff(n - 1), &k.from_i64(n as i64)).ok()?;
    let depressed = monic.compose_linear(&k.one(), &k.neg(&s));
    let a = if n >= 2 {
        k.div(&k.neg(&depressed.coeff(n - 2)), &k.from_i64(n as i64)).ok()?
    } else {
        k.zero()
    };
    finish(f, Family::Dickson { n, a }, s)
}

fn match_additive<F: Field>(f: &UniPoly<F>) -> Option<FamilyMatch<F>> {
    let k = f.field();
    let p = k.characteristic() as usize;
    if p < 3 || f.degree() != p {
        return None;
    }
    let a = k.neg(&k.div(&f.coeff(1), &f.lead()).ok()?);
    finish(f, Family::AdditiveP { a }, k.zero())
}

fn match_squared<F: Field>(f: &UniPoly<F>) -> Option<FamilyMatch<F>> {
    let k = f.field();
    let p = k.characteristic() as usize;
    if p < 3 || f.degree() != 2 * p {
        return None;
    }
    let monic = f.monic();
    let two = k.from_i64(2);
    let a = k.div(&monic.coeff(p + 1), &two).ok()?;
    let b = k.div(&monic.coeff(p), &two).ok()?;
    finish(f, Family::SquaredAdditive { a, b }, k.zero())
}

fn match_half<F: Field>(f: &UniPoly<F>) -> Option<FamilyMatch<F>> {
    let k = f.field();
    let p = k.characteristic() as usize;
    if p < 3 || f.degree() != p {
        return None;
    }
    let m = p.div_ceil(2);
    let monic = f.monic();
    let two = k.from_i64(2);
    let a = k.neg(&k.div(&monic.coeff(m), &two).ok()?);
    let delta = if k.is_zero(&a) {
        k.zero()
    } else {
        // X^{m-1} coefficient of h(X + delta) is -2 a m delta, plus a^2 when m - 1 = 1
        let lin = if m == 2 { k.mul(&a, &a) } else { k.zero() };
        let den = k.mul(&k.mul(&two, &a), &k.from_i64(m as i64));
        k.div(&k.sub(&lin, &monic.coeff(m - 1)), &den).ok()?
    };
    finish(f, Family::HalfAdditive { a }, delta)
}

fn match_char2_quartic<F: Field>(f: &UniPoly<F>) -> Option<FamilyMatch<F>> {
    let k = f.field();
    if k.characteristic() != 2 || f.degree() != 4 {
        return None;
    }
    let monic = f.monic();
    if !k.is_zero(&monic.coeff(3)) {
        return None;
    }
    let (c1, c2) = (monic.coeff(1), monic.coeff(2));
    // gamma solves c1 Z^3 + c2 Z^2 + 1 = 0
    let gamma = k.distinct_roots(&[k.one(), k.zero(), c2, c1.clone()]).into_iter().next()?;
    let a = k.mul(&c1, &k.pow(&gamma, 3));
    let family = Family::Char2Quartic { a };
    let inner = family.poly(k).compose_linear(&gamma, &k.zero());
    let scale = k.div(&f.lead(), &inner.lead()).ok()?;
    let rest = f.sub(&inner.scale(&scale));
    if !rest.is_constant() {
        return None;
    }
    Some(FamilyMatch { family, gamma, delta: k.zero(), scale, shift: rest.coeff(0) })
}

/// Every family that `f` matches, in the order Dickson, additive,
/// squared additive, half additive, characteristic-2 quartic. Each match is
/// verified by recomposition.
pub fn match_families<F: Field>(f: &UniPoly<F>) -> Vec<FamilyMatch<F>> {
    let k = f.field();
    [match_dickson(f), match_additive(f), match_squared(f), match_half(f), match_char2_quartic(f)]
        .into_iter()
        .flatten()
        .filter(|m| m.rebuild(k) == *f)
        .collect()
}

/// The first family `f` matches, see [`match_families`].
pub fn match_family<F: Field>(f: &UniPoly<F>) -> Option<FamilyMatch<F>> {
    match_families(f).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FiniteField, Rationals};

    #[test]
    fn examples() {
        let f3 = FiniteField::prime(3).unwrap();
        let m = match_family(&UniPoly::from_i64s(&f3, &[0, 1, 1, 1])).unwrap();
        assert_eq!(m.family, Family::HalfAdditive { a: f3.elem(1) });

        let f5 = FiniteField::prime(5).unwrap();
        let m = match_family(&UniPoly::from_i64s(&f5, &[0, -2, 0, 0, 0, 1])).unwrap();
        assert_eq!(m.family, Family::AdditiveP { a: f5.elem(2) });

        let q = Rationals;
        let m = match_family(&UniPoly::from_i64s(&q, &[0, 0, 0, 0, 1])).unwrap();
        assert_eq!(m.family, Family::Dickson { n: 4, a: q.zero() });
    }

    #[test]
    fn scaled_dickson_is_recognized() {
        let q = Rationals;
        let d = dickson(&q, 5, &q.ratio(-3, 2));
        let f = d.compose_linear(&q.from_i64(3), &q.ratio(1, 7)).affine(&q.from_i64(-2), &q.from_i64(11));
        let m = match_family(&f).unwrap();
        assert!(matches!(m.family, Family::Dickson { n: 5, .. }));
        assert_eq!(m.rebuild(&q), f);
    }

    #[test]
    fn shifted_half_additive() {
        let f5 = FiniteField::prime(5).unwrap();
        for a in 1..5 {
            for d in 0..5 {
                let h = half_additive(&f5, &f5.elem(a));
                let f = h.compose_linear(&f5.elem(2), &f5.elem(d)).affine(&f5.elem(3), &f5.elem(1));
                let found = match_families(&f);
                assert!(found.iter().any(|m| matches!(m.family, Family::HalfAdditive { .. })), "a={a} d={d}");
            }
        }
    }

    #[test]
    fn char2_quartic_with_scaling() {
        let f4 = FiniteField::with_default_modulus(2, 2).unwrap();
        let t = f4.generator().unwrap();
        let h = Family::Char2Quartic { a: t }.poly(&f4);
        let f = h.compose_linear(&f4.add(&t, &f4.one()), &t);
        let m = match_family(&f).unwrap();
        assert!(matches!(m.family, Family::Char2Quartic { .. }));
        assert_eq!(m.rebuild(&f4), f);
    }
}
