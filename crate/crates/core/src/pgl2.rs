//! Elements of `PGL_2(K)`, their orders, and normal forms of cyclic and
//! dihedral subgroups.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// The class of `[[a, b], [c, d]]` modulo scalars, stored with the first
/// nonzero entry of `(a, b, c, d)` equal to one.
#[derive(Clone, PartialEq, Eq)]
pub struct Pgl2<F: Field> {
    field: F,
    m: [F::Elem; 4],
}

impl<F: Field> fmt::Debug for Pgl2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.m.iter().map(|x| self.field.format_elem(x)).collect();
        write!(f, "[[{}, {}], [{}, {}]]", s[0], s[1], s[2], s[3])
    }
}

impl<F: Field> Pgl2<F> {
    pub fn new(field: &F, a: F::Elem, b: F::Elem, c: F::Elem, d: F::Elem) -> Result<Self> {
        let k = field;
        if k.is_zero(&k.sub(&k.mul(&a, &d), &k.mul(&b, &c))) {
            return Err(Error::Precondition("singular matrix".into()));
        }
        let m = [a, b, c, d];
        let first = m.iter().find(|x| !k.is_zero(x)).expect("nonzero determinant").clone();
        let inv = k.inv(&first).expect("nonzero");
        Ok(Pgl2 { field: k.clone(), m: m.map(|x| k.mul(&x, &inv)) })
    }

    pub fn from_i64(field: &F, e: [i64; 4]) -> Result<Self> {
        let [a, b, c, d] = e.map(|x| field.from_i64(x));
        Self::new(field, a, b, c, d)
    }

    pub fn identity(field: &F) -> Self {
        Self::from_i64(field, [1, 0, 0, 1]).expect("invertible")
    }

    pub fn diag(field: &F, x: F::Elem) -> Result<Self> {
        Self::new(field, field.one(), field.zero(), field.zero(), x)
    }

    pub fn entries(&self) -> &[F::Elem; 4] {
        &self.m
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn mul(&self, o: &Self) -> Self {
        let k = &self.field;
        let [a, b, c, d] = &self.m;
        let [e, f, g, h] = &o.m;
        let dot = |x: &F::Elem, y: &F::Elem, z: &F::Elem, w: &F::Elem| k.add(&k.mul(x, y), &k.mul(z, w));
        Self::new(k, dot(a, e, b, g), dot(a, f, b, h), dot(c, e, d, g), dot(c, f, d, h)).expect("product of units")
    }

    pub fn inv(&self) -> Self {
        let k = &self.field;
        let [a, b, c, d] = &self.m;
        Self::new(k, d.clone(), k.neg(b), k.neg(c), a.clone()).expect("unit")
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::identity(&self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.field)
    }

    /// `s^-1 self s`
    pub fn conj(&self, s: &Self) -> Self {
        s.inv().mul(self).mul(s)
    }

    /// Least `m >= 1` with `self^m` scalar. Finite fields only.
    pub fn order(&self) -> Result<u64> {
        let q = self.field.size().ok_or_else(|| Error::Precondition("finite field required".into()))?;
        let bound = q * (q + 1) + 1;
        let mut acc = self.clone();
        for m in 1..=bound {
            if acc.is_identity() {
                return Ok(m);
            }
            acc = acc.mul(self);
        }
        Err(Error::Precondition("order exceeds the group exponent".into()))
    }
}

/// The representative reached by [`cyclic_normal_form`].
#[derive(Clone, Debug, PartialEq)]
pub enum CyclicForm<E> {
    /// `[[1, 0], [0, z]]`
    Diagonal(E),
    /// `[[1, 1], [0, 1]]`
    Unipotent,
}

impl<E: Clone> CyclicForm<E> {
    pub fn matrix<F: Field<Elem = E>>(&self, k: &F) -> Pgl2<F> {
        match self {
            CyclicForm::Diagonal(z) => Pgl2::diag(k, z.clone()).expect("unit"),
            CyclicForm::Unipotent => Pgl2::from_i64(k, [1, 1, 0, 1]).expect("unit"),
        }
    }
}

/// `s` with `m^s` diagonal `[[1,0],[0,z]]` or unipotent `[[1,1],[0,1]]`,
/// from the Jordan form of a preimage. Fails when the eigenvalues are not
/// in the field.
pub fn cyclic_normal_form<F: Field>(m: &Pgl2<F>) -> Result<(Pgl2<F>, CyclicForm<F::Elem>)> {
    let k = m.field();
    let [a, b, c, d] = m.entries().clone();
    let trace = k.add(&a, &d);
    let det = k.sub(&k.mul(&a, &d), &k.mul(&b, &c));
    let eig = k.distinct_roots(&[det, k.neg(&trace), k.one()]);
    let result = match eig.as_slice() {
        [] => return Err(Error::NeedsExtension { field: k.spec(), degree: 2 }),
        [l1, l2] => {
            let vec_for = |l: &F::Elem| {
                if !k.is_zero(&b) || !k.is_zero(&k.sub(l, &a)) {
                    (b.clone(), k.sub(l, &a))
                } else {
                    (k.sub(l, &d), c.clone())
                }
            };
            let (v1, v2) = (vec_for(l1), vec_for(l2));
            let s = Pgl2::new(k, v1.0, v2.0, v1.1, v2.1)?;
            (s, CyclicForm::Diagonal(k.div(l2, l1)?))
        }
        [l] => {
            if k.is_zero(&b) && k.is_zero(&c) {
                (Pgl2::identity(k), CyclicForm::Diagonal(k.one()))
            } else {
                // columns v, w with (A - l) w = l v
                let am = [k.sub(&a, l), b.clone(), c.clone(), k.sub(&d, l)];
                let w = if !k.is_zero(&am[0]) || !k.is_zero(&am[2]) {
                    (k.one(), k.zero())
                } else {
                    (k.zero(), k.one())
                };
                let aw = (
                    k.add(&k.mul(&am[0], &w.0), &k.mul(&am[1], &w.1)),
                    k.add(&k.mul(&am[2], &w.0), &k.mul(&am[3], &w.1)),
                );
                let li = k.inv(l).ok_or(Error::DivisionByZero)?;
                let v = (k.mul(&aw.0, &li), k.mul(&aw.1, &li));
                (Pgl2::new(k, v.0, w.0, v.1, w.1)?, CyclicForm::Unipotent)
            }
        }
        _ => unreachable!("a quadratic has at most two roots"),
    };
    if m.conj(&result.0) != result.1.matrix(k) {
        return Err(Error::Constraint("cyclic normal form failed verification".into()));
    }
    Ok(result)
}

/// The three shapes of dihedral pairs `(tau, rho)`.
#[derive(Clone, Debug, PartialEq)]
pub enum DihedralCase<E> {
    /// `p` does not divide `n`: `tau -> [[0,1],[1,0]]`, `rho -> [[1,0],[0,z]]`.
    Tame { zeta: E },
    /// `n = p >= 3`: `tau -> [[1,0],[0,-1]]`, `rho -> [[1,1],[0,1]]`.
    OddWild,
    /// `n = p = 2`: `tau -> [[1,b],[0,1]]`, `rho -> [[1,1],[0,1]]`.
    EvenWild { b: E },
}

/// `s` conjugating a dihedral pair into the shape of its case; both images
/// are checked by multiplication.
pub fn dihedral_normal_form<F: Field>(tau: &Pgl2<F>, rho: &Pgl2<F>) -> Result<(Pgl2<F>, DihedralCase<F::Elem>)> {
    let k = tau.field();
    let p = k.characteristic();
    if tau.is_identity() || !tau.mul(tau).is_identity() {
        return Err(Error::NotDihedral("tau is not an involution".into()));
    }
    if rho.conj(tau) != rho.inv() {
        return Err(Error::NotDihedral("tau does not invert rho".into()));
    }
    let n = rho.order()?;
    if n < 2 || (0..n).any(|i| rho.pow(i) == *tau) {
        return Err(Error::NotDihedral("the group has order below four".into()));
    }
    let (s1, form) = cyclic_normal_form(rho)?;
    let t1 = tau.conj(&s1);
    let [a, b, c, d] = t1.entries().clone();
    let (sigma, case) = match form {
        CyclicForm::Diagonal(zeta) => {
            if !k.is_zero(&a) || !k.is_zero(&d) {
                return Err(Error::NotDihedral("unexpected involution shape".into()));
            }
            // t1 = [[0, 1], [c, 0]]; conjugate by diag(1, beta), beta^2 = c
            let beta = k.sqrt(&k.div(&c, &b)?).ok_or_else(|| Error::MissingSqrt(k.format_elem(&c)))?;
            (s1.mul(&Pgl2::diag(k, beta)?), DihedralCase::Tame { zeta })
        }
        CyclicForm::Unipotent if p == 2 => (s1, DihedralCase::EvenWild { b }),
        CyclicForm::Unipotent => {
            let beta = k.neg(&k.div(&b, &k.from_i64(2))?);
            (s1.mul(&Pgl2::new(k, k.one(), beta, k.zero(), k.one())?), DihedralCase::OddWild)
        }
    };
    let (tau_form, rho_form) = match &case {
        DihedralCase::Tame { zeta } => (Pgl2::from_i64(k, [0, 1, 1, 0])?, Pgl2::diag(k, zeta.clone())?),
        DihedralCase::OddWild => (Pgl2::from_i64(k, [1, 0, 0, -1])?, Pgl2::from_i64(k, [1, 1, 0, 1])?),
        DihedralCase::EvenWild { b } => {
            (Pgl2::new(k, k.one(), b.clone(), k.zero(), k.one())?, Pgl2::from_i64(k, [1, 1, 0, 1])?)
        }
    };
    if tau.conj(&sigma) != tau_form || rho.conj(&sigma) != rho_form {
        return Err(Error::Constraint("dihedral normal form failed verification".into()));
    }
    Ok((sigma, case))
}

/// For involutions `a`, `b` with `c = ab` of order `n`: the index `i` with
/// `2i + 1` the odd part of `2n`, after checking `a b^(c^i) = c^(2i+1)`.
/// The pair `a`, `b^(c^i)` then generates a Sylow 2-subgroup.
pub fn sylow2_witness<F: Field>(a: &Pgl2<F>, b: &Pgl2<F>) -> Result<u64> {
    for (name, x) in [("a", a), ("b", b)] {
        if x.is_identity() || !x.mul(x).is_identity() {
            return Err(Error::NotDihedral(format!("{name} is not an involution")));
        }
    }
    let c = a.mul(b);
    let n = c.order()?;
    let mut odd = n;
    while odd % 2 == 0 {
        odd /= 2;
    }
    let i = (odd - 1) / 2;
    let lhs = a.mul(&b.conj(&c.pow(i)));
    let rhs = c.pow(2 * i + 1);
    if lhs != rhs {
        return Err(Error::Constraint("conjugation identity failed".into()));
    }
    if rhs.order()? != n / odd {
        return Err(Error::Constraint("witness does not reach the 2-part".into()));
    }
    Ok(i)
}

/// `(tau, tau rho)` with `rho = diag(1, z)` for an element `z` of order `n`:
/// involutions generating a dihedral group of order `2n`.
pub fn dihedral_generators<F: Field>(k: &F, n: u64) -> Result<(Pgl2<F>, Pgl2<F>)> {
    let z = k.root_of_unity(n)?;
    let tau = Pgl2::from_i64(k, [0, 1, 1, 0])?;
    let rho = Pgl2::diag(k, z)?;
    let b = tau.mul(&rho);
    Ok((tau, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    #[test]
    fn orders() {
        let f5 = FiniteField::prime(5).unwrap();
        assert_eq!(Pgl2::from_i64(&f5, [1, 1, 0, 1]).unwrap().order().unwrap(), 5);
        assert_eq!(Pgl2::diag(&f5, f5.elem(2)).unwrap().order().unwrap(), 4);
        assert_eq!(Pgl2::identity(&f5).order().unwrap(), 1);
    }

    #[test]
    fn cyclic_examples() {
        let f5 = FiniteField::prime(5).unwrap();
        let (_, form) = cyclic_normal_form(&Pgl2::from_i64(&f5, [0, 1, 1, 0]).unwrap()).unwrap();
        assert_eq!(form, CyclicForm::Diagonal(f5.from_i64(-1)));
        let (s, form) = cyclic_normal_form(&Pgl2::from_i64(&f5, [1, 5, 0, 1]).unwrap()).unwrap();
        assert_eq!((s, form), (Pgl2::identity(&f5), CyclicForm::Diagonal(f5.one())));
        let f3 = FiniteField::prime(3).unwrap();
        let (s, form) = cyclic_normal_form(&Pgl2::from_i64(&f3, [1, 2, 0, 1]).unwrap()).unwrap();
        assert_eq!(form, CyclicForm::Unipotent);
        assert_eq!(s, Pgl2::from_i64(&f3, [1, 0, 0, 2]).unwrap());
    }

    #[test]
    fn dihedral_cases() {
        let f9 = FiniteField::with_default_modulus(3, 2).unwrap();
        let zeta = f9.root_of_unity(4).unwrap();
        let c = f9.mul(&zeta, &zeta);
        let tau = Pgl2::new(&f9, f9.zero(), f9.one(), c, f9.zero()).unwrap();
        let rho = Pgl2::diag(&f9, zeta).unwrap();
        assert!(matches!(dihedral_normal_form(&tau, &rho).unwrap().1, DihedralCase::Tame { .. }));

        let f5 = FiniteField::prime(5).unwrap();
        let tau = Pgl2::from_i64(&f5, [1, 3, 0, -1]).unwrap();
        let rho = Pgl2::from_i64(&f5, [1, 1, 0, 1]).unwrap();
        assert_eq!(dihedral_normal_form(&tau, &rho).unwrap().1, DihedralCase::OddWild);

        let f4 = FiniteField::with_default_modulus(2, 2).unwrap();
        let t = f4.generator().unwrap();
        let tau = Pgl2::new(&f4, f4.one(), t, f4.zero(), f4.one()).unwrap();
        let rho = Pgl2::from_i64(&f4, [1, 1, 0, 1]).unwrap();
        assert_eq!(dihedral_normal_form(&tau, &rho).unwrap().1, DihedralCase::EvenWild { b: t });
    }

    #[test]
    fn sylow_examples() {
        let f13 = FiniteField::prime(13).unwrap();
        let (a, b) = dihedral_generators(&f13, 6).unwrap();
        assert_eq!(sylow2_witness(&a, &b).unwrap(), 1);
        let (a, b) = dihedral_generators(&f13, 4).unwrap();
        assert_eq!(sylow2_witness(&a, &b).unwrap(), 0);
        let (a, b) = dihedral_generators(&f13, 3).unwrap();
        assert_eq!(sylow2_witness(&a, &b).unwrap(), 1);
    }
}
