use std::collections::HashSet;

use super::{divide_monic_in_x, BiPoly, QuadPoly};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::unipoly::UniPoly;

/// Number of shape-B coefficient tuples over a field with `q` elements.
pub fn shape_search_size(q: u64) -> u64 {
    q.saturating_pow(5)
}

/// Every factor of total degree at most two of `big`, whose leading
/// coefficient in `X` must be a nonzero constant, in canonical scaling and
/// sorted. Candidates are `X + c(Y)` and `X^2 + b(Y) X + c(Y)` with
/// `deg b <= 1`, `deg c <= 2`; each is first screened on the fibres
/// `Y = y0` and then confirmed by exact division.
pub fn quad_factors_exhaustive<F: Field>(big: &BiPoly<F>, max_field_size: u64) -> Result<Vec<QuadPoly<F::Elem>>> {
    let k = big.field();
    let elems = k.elements().ok_or_else(|| Error::Precondition("finite field required".into()))?;
    let q = elems.len() as u64;
    if q > max_field_size {
        return Err(Error::BudgetExceeded(format!(
            "{} has {q} elements, above the enumeration bound {max_field_size}",
            k.spec()
        )));
    }
    let dx = big.deg_x();
    if big.is_zero() || dx == 0 || !big.x_coeff(dx).is_constant() {
        return Err(Error::Precondition("needs positive X-degree and constant X-leading coefficient".into()));
    }
    let fibres: Vec<UniPoly<F>> = elems.iter().map(|y| big.eval_y(y)).collect();
    let mut found = Vec::new();

    // X + c(Y): -c(y0) is a root of every fibre.
    let roots: Vec<HashSet<F::Elem>> =
        fibres.iter().map(|f| k.distinct_roots(f.coeffs()).into_iter().collect()).collect();
    for c0 in &elems {
        if !roots[0].contains(&k.neg(c0)) {
            continue;
        }
        for c1 in &elems {
            for c2 in &elems {
                let c = UniPoly::new(k, vec![c0.clone(), c1.clone(), c2.clone()]);
                if elems.iter().zip(&roots).all(|(y, r)| r.contains(&k.neg(&c.eval(y)))) {
                    let cand = BiPoly::from_terms(k, &[(1, 0, k.one())]).add(&BiPoly::from_y(&c));
                    push_if_divides(big, cand, &mut found)?;
                }
            }
        }
    }

    // X^2 + b(Y) X + c(Y): (b(y0), c(y0)) lies in the quadratic divisors of every fibre.
    if dx >= 2 {
        let quads: Vec<HashSet<(F::Elem, F::Elem)>> = fibres
            .iter()
            .map(|f| {
                let mut s = HashSet::new();
                for b in &elems {
                    for c in &elems {
                        let d = UniPoly::new(k, vec![c.clone(), b.clone(), k.one()]);
                        if f.div_exact(&d).is_some() {
                            s.insert((b.clone(), c.clone()));
                        }
                    }
                }
                s
            })
            .collect();
        let y1 = elems.get(1);
        for (b0, c0) in sorted(&quads[0]) {
            for b1 in &elems {
                let b = UniPoly::new(k, vec![b0.clone(), b1.clone()]);
                if let Some(y1) = y1 {
                    let bv = b.eval(y1);
                    if !quads[1].iter().any(|(bb, _)| *bb == bv) {
                        continue;
                    }
                }
                for c1 in &elems {
                    for c2 in &elems {
                        let c = UniPoly::new(k, vec![c0.clone(), c1.clone(), c2.clone()]);
                        let ok = elems
                            .iter()
                            .zip(&quads)
                            .all(|(y, s)| s.contains(&(b.eval(y), c.eval(y))));
                        if ok {
                            let cand = BiPoly::from_terms(k, &[(2, 0, k.one())])
                                .add(&BiPoly::from_y(&b).mul(&BiPoly::from_terms(k, &[(1, 0, k.one())])))
                                .add(&BiPoly::from_y(&c));
                            push_if_divides(big, cand, &mut found)?;
                        }
                    }
                }
            }
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

fn sorted<T: Ord + Clone>(s: &HashSet<T>) -> Vec<T> {
    let mut v: Vec<T> = s.iter().cloned().collect();
    v.sort();
    v
}

fn push_if_divides<F: Field>(big: &BiPoly<F>, cand: BiPoly<F>, out: &mut Vec<QuadPoly<F::Elem>>) -> Result<()> {
    if divide_monic_in_x(big, &cand)?.is_some() {
        out.push(QuadPoly::from_bipoly(&cand).expect("degree at most two"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::difference_poly;
    use crate::field::FiniteField;

    #[test]
    fn squares_over_f3() {
        let f3 = FiniteField::prime(3).unwrap();
        let x2 = UniPoly::from_i64s(&f3, &[0, 0, 1]);
        let found = quad_factors_exhaustive(&difference_poly(&x2, &x2).unwrap(), 16).unwrap();
        let strings: Vec<String> = found.iter().map(|q| q.to_bipoly(&f3).to_string()).collect();
        // X^2 - Y^2 itself is also a factor of degree two
        assert_eq!(strings, vec!["x + y", "x + 2*y", "x^2 + 2*y^2"]);
    }

    #[test]
    fn cubes_over_f5() {
        let f5 = FiniteField::prime(5).unwrap();
        let x3 = UniPoly::from_i64s(&f5, &[0, 0, 0, 1]);
        let found = quad_factors_exhaustive(&difference_poly(&x3, &x3).unwrap(), 16).unwrap();
        let strings: Vec<String> = found.iter().map(|q| q.to_bipoly(&f5).to_string()).collect();
        assert_eq!(strings, vec!["x + 4*y", "x^2 + x*y + y^2"]);
    }

    #[test]
    fn budget_is_enforced() {
        let f = FiniteField::prime(17).unwrap();
        let x2 = UniPoly::from_i64s(&f, &[0, 0, 1]);
        let big = difference_poly(&x2, &x2).unwrap();
        assert!(matches!(quad_factors_exhaustive(&big, 16), Err(Error::BudgetExceeded(_))));
    }
}
