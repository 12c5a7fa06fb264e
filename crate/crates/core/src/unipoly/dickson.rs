use super::UniPoly;
use crate::field::Field;

/// The Dickson polynomial `D_n(X, a)`: `D_0 = 2`, `D_1 = X`,
/// `D_n = X D_{n-1} - a D_{n-2}`.
pub fn dickson<F: Field>(field: &F, n: usize, a: &F::Elem) -> UniPoly<F> {
    let mut prev = UniPoly::constant(field, field.from_i64(2));
    if n == 0 {
        return prev;
    }
    let x = UniPoly::x(field);
    let mut cur = x.clone();
    for _ in 1..n {
        let next = x.mul(&cur).sub(&prev.scale(a));
        prev = cur;
        cur = next;
    }
    cur
}
