use super::UniPoly;
use crate::field::Field;

/// All `(u, v)` with `phi_g = phi_f(u X + v)`, sorted.
pub fn right_linear_shift_match<F: Field>(phi_f: &UniPoly<F>, phi_g: &UniPoly<F>) -> Vec<(F::Elem, F::Elem)> {
    let k = phi_f.field();
    let m = phi_f.degree();
    if phi_f.is_zero() || phi_g.is_zero() || phi_g.degree() != m {
        return vec![];
    }
    if m == 0 {
        return if phi_f == phi_g { vec![(k.one(), k.zero())] } else { vec![] };
    }
    let Ok(ratio) = k.div(&phi_g.lead(), &phi_f.lead()) else { return vec![] };
    let p = k.characteristic();
    let mut out = Vec::new();
    for u in k.nth_roots(&ratio, m as u64) {
        let shifts: Vec<F::Elem> = if p == 0 || m as u64 % p != 0 {
            // X^{m-1} coefficient: lc_f m u^{m-1} v + c_{m-1} u^{m-1}
            let um1 = k.pow(&u, m as u64 - 1);
            let num = k.sub(&k.div(&phi_g.coeff(m - 1), &um1).expect("unit"), &phi_f.coeff(m - 1));
            let den = k.mul(&phi_f.lead(), &k.from_i64(m as i64));
            vec![k.div(&num, &den).expect("tame degree")]
        } else {
            k.elements().unwrap_or_default()
        };
        for v in shifts {
            if phi_f.compose_linear(&u, &v) == *phi_g {
                out.push((u.clone(), v));
            }
        }
    }
    out.sort();
    out
}

/// `f(X - s)` has no `X^{n-1}` term; returns `s`.
fn depressing_shift<F: Field>(f: &UniPoly<F>) -> Option<F::Elem> {
    let k = f.field();
    let n = f.degree();
    let den = k.mul(&k.from_i64(n as i64), &f.lead());
    k.div(&f.coeff(n - 1), &den).ok()
}

/// `(l1, r1, l0)` with `f = l1 h(r1 X) + l0`.
fn solve_scaling<F: Field>(f: &UniPoly<F>, h: &UniPoly<F>) -> Option<(F::Elem, F::Elem, F::Elem)> {
    let k = f.field();
    let n = f.degree();
    let a_n = k.div(&f.lead(), &h.lead()).ok()?;
    let j = (1..n).rev().find(|i| !k.is_zero(&h.coeff(*i)));
    let candidates = match j {
        Some(j) => {
            let a_j = k.div(&f.coeff(j), &h.coeff(j)).ok()?;
            if k.is_zero(&a_j) {
                return None;
            }
            k.nth_roots(&k.div(&a_n, &a_j).ok()?, (n - j) as u64)
        }
        None => vec![k.one()],
    };
    // prefer r1 = 1 so that f = h yields the identity pair
    let (ones, others): (Vec<_>, Vec<_>) = candidates.into_iter().partition(|r| k.is_one(r));
    for r1 in ones.into_iter().chain(others) {
        let l1 = k.div(&a_n, &k.pow(&r1, n as u64)).ok()?;
        let scaled = h.compose_linear(&r1, &k.zero()).scale(&l1);
        let l0 = k.sub(&f.coeff(0), &scaled.coeff(0));
        if scaled.add_constant(&l0) == *f {
            return Some((l1, r1, l0));
        }
    }
    None
}

/// Linear `L`, `R` with `f = L(h(R(X)))`, when they exist.
pub fn linear_equivalent<F: Field>(f: &UniPoly<F>, h: &UniPoly<F>) -> Option<(UniPoly<F>, UniPoly<F>)> {
    let k = f.field();
    let n = f.degree();
    if f.is_constant() || h.degree() != n {
        return None;
    }
    let p = k.characteristic();
    let found = if p == 0 || n as u64 % p != 0 {
        let s_f = depressing_shift(f)?;
        let s_h = depressing_shift(h)?;
        let f_d = f.compose_linear(&k.one(), &k.neg(&s_f));
        let h_d = h.compose_linear(&k.one(), &k.neg(&s_h));
        solve_scaling(&f_d, &h_d).map(|(l1, r1, l0)| {
            let r0 = k.sub(&k.mul(&r1, &s_f), &s_h);
            (l1, l0, r1, r0)
        })
    } else {
        k.elements().unwrap_or_default().into_iter().find_map(|r0| {
            let shifted = h.compose_linear(&k.one(), &r0);
            solve_scaling(f, &shifted).map(|(l1, r1, l0)| (l1, l0, r1, r0.clone()))
        })
    };
    let (l1, l0, r1, r0) = found?;
    let l = UniPoly::linear(k, l1, l0);
    let r = UniPoly::linear(k, r1, r0);
    (l.compose(&h.compose(&r)) == *f).then_some((l, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FiniteField, Rationals};

    fn q(c: &[i64]) -> UniPoly<Rationals> {
        UniPoly::from_i64s(&Rationals, c)
    }

    #[test]
    fn complete_the_square() {
        let (l, r) = linear_equivalent(&q(&[5, 4, 2]), &q(&[0, 0, 1])).unwrap();
        assert_eq!(l, q(&[3, 2]));
        assert_eq!(r, q(&[1, 1]));
        let h = q(&[1, 2, 0, 7]);
        assert_eq!(linear_equivalent(&h, &h), Some((q(&[0, 1]), q(&[0, 1]))));
        assert_eq!(linear_equivalent(&q(&[0, 1, 0, 1]), &q(&[0, 0, 0, 1])), None);
    }

    #[test]
    fn shift_match_finds_all_roots_of_ratio() {
        let f5 = FiniteField::prime(5).unwrap();
        let phi = UniPoly::from_i64s(&f5, &[0, 0, 1]);
        let m = right_linear_shift_match(&phi, &phi);
        assert_eq!(m, vec![(f5.elem(1), f5.elem(0)), (f5.elem(4), f5.elem(0))]);
    }

    #[test]
    fn wild_equivalence_by_enumeration() {
        let f3 = FiniteField::prime(3).unwrap();
        let h = UniPoly::from_i64s(&f3, &[0, 2, 0, 1]);
        let f = h.compose_linear(&f3.elem(2), &f3.elem(1)).scale(&f3.elem(2)).add_constant(&f3.elem(1));
        let (l, r) = linear_equivalent(&f, &h).unwrap();
        assert_eq!(l.compose(&h.compose(&r)), f);
    }
}
