use serde::Serialize;

use crate::bipoly::{difference_poly, discriminant_x, dickson_sum_factors, remark_b5_factors, BiPoly, ExtendedFactors};
use crate::field::{is_prime, min_extension_for_unity, Field, FiniteField, Rationals, MAX_FIELD_SIZE};
use crate::pgl2::{dihedral_generators, sylow2_witness};
use crate::unipoly::{dickson, Family, UniPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub instance: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
    pub pass: bool,
}

impl IdentityReport {
    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Harness self-check: deliberately breaks one identity instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mutation {
    #[default]
    None,
    DicksonDefining,
}

struct Sink {
    checks: Vec<IdentityCheck>,
}

impl Sink {
    fn push(&mut self, name: &str, instance: String, pass: bool) {
        self.checks.push(IdentityCheck { name: name.into(), instance, pass });
    }
}

/// `z^n D_n(z + a/z, a) = z^(2n) + a^n`, as polynomials in `z`.
fn defining_identity<F: Field>(k: &F, n: usize, a: &F::Elem, perturb: bool) -> bool {
    let d = dickson(k, n, a);
    let z2a = UniPoly::new(k, vec![a.clone(), k.zero(), k.one()]);
    let mut lhs = UniPoly::zero(k);
    for (i, c) in d.coeffs().iter().enumerate() {
        let term = z2a.pow(i as u64).mul(&UniPoly::monomial(k, c.clone(), n - i));
        lhs = lhs.add(&term);
    }
    let mut rhs = UniPoly::monomial(k, k.one(), 2 * n).add_constant(&k.pow(a, n as u64));
    if perturb {
        rhs = rhs.add_constant(&k.one());
    }
    lhs == rhs
}

fn dickson_checks<F: Field>(s: &mut Sink, k: &F, params: &[F::Elem], scales: &[F::Elem], max_n: usize, mutation: &mut Mutation) {
    for a in params {
        for n in 0..=max_n {
            let perturb = std::mem::take(mutation) == Mutation::DicksonDefining;
            let ok = defining_identity(k, n, a, perturb);
            s.push("dickson-defining", format!("{} n={n} a={}", k.spec(), k.format_elem(a)), ok);
        }
        for b in scales {
            for n in 0..=max_n.min(12) {
                let lhs = dickson(k, n, a).scale(&k.pow(b, n as u64));
                let rhs = dickson(k, n, &k.mul(&k.mul(b, b), a)).compose_linear(b, &k.zero());
                let inst = format!("{} n={n} a={} b={}", k.spec(), k.format_elem(a), k.format_elem(b));
                s.push("dickson-transform", inst, lhs == rhs);
            }
        }
    }
}

fn sum_product_checks(s: &mut Sink) {
    for n in [2usize, 4, 6, 8] {
        for p in [3u64, 5, 7, 13] {
            if (2 * n as u64) % p == 0 {
                continue;
            }
            let Ok(deg) = min_extension_for_unity(p, 2 * n as u64) else { continue };
            if (p as u128).pow(deg) > MAX_FIELD_SIZE as u128 {
                continue;
            }
            let k = FiniteField::with_default_modulus(p, deg).expect("small field");
            for c in 0..p {
                let a = k.from_i64(c as i64);
                let d = dickson(&k, n, &a);
                let target = BiPoly::from_x(&d).add(&BiPoly::from_y(&d));
                let ok = dickson_sum_factors(&k, n, &a).is_ok_and(|fs| BiPoly::product(&k, &fs) == target);
                s.push("dickson-sum-product", format!("{} n={n} a={c}", k.spec()), ok);
            }
        }
    }
}

fn b5_checks(s: &mut Sink) {
    for deg in 1..=3 {
        let k = FiniteField::with_default_modulus(2, deg).expect("small field");
        let elems = k.elements().expect("finite");
        for a in &elems {
            let h = Family::Char2Quartic { a: *a }.poly(&k);
            let solvable = elems.iter().any(|z| k.add(&k.mul(z, z), z) == *a);
            let ok = remark_b5_factors(&k, a).is_ok_and(|r| {
                BiPoly::product(&k, &r.factors) == difference_poly(&h, &h).expect("same field")
                    && r.quadratic_irreducible == !solvable
            });
            s.push("remark-b5", format!("{} a={}", k.spec(), k.format_elem(a)), ok);
        }
    }
}

fn b4_checks(s: &mut Sink) {
    for p in [3u64, 5, 7] {
        let k = FiniteField::prime(p).expect("prime");
        for c in 1..p {
            let a = k.from_i64(c as i64);
            let ok = ExtendedFactors::remark_b4(&k, a).is_ok_and(|ext| {
                let big = ext.extension().clone();
                let h = Family::HalfAdditive { a: ext.embedding.map(a) }.poly(&big);
                let product_ok = BiPoly::product(&big, &ext.factors) == difference_poly(&h, &h).expect("same field");
                let disc_ok = ext.factors.iter().filter(|q| q.deg_x() == 2).all(|q| {
                    // X coefficient at Y^0 is -2s; the discriminant is 16 s Y
                    let s_val = big.div(&q.coeff(1, 0), &big.from_i64(-2)).expect("p odd");
                    let want = UniPoly::monomial(&big, big.mul(&big.from_i64(16), &s_val), 1);
                    discriminant_x(q).is_ok_and(|d| d == want)
                });
                product_ok && disc_ok
            });
            s.push("remark-b4", format!("GF({p}) a={c}"), ok);
        }
    }
}

fn sylow_checks(s: &mut Sink, max_n: usize) {
    for n in 2..=max_n.max(2) as u64 {
        let p = (1..).map(|j| j * n + 1).find(|p| is_prime(*p)).expect("Dirichlet");
        let k = FiniteField::prime(p).expect("prime");
        let ok = dihedral_generators(&k, n).is_ok_and(|(a, b)| sylow2_witness(&a, &b).is_ok());
        s.push("pgl2-sylow-witness", format!("D_{n} over GF({p})"), ok);
    }
}

/// Expands every identity exactly: Dickson's defining relation and scaling
/// rule (`n <= max_n`), the sum and half-additive and characteristic-2
/// factorizations, and the dihedral Sylow witness for `n <= max_n`.
pub fn identity_suite(max_n: usize, mut mutation: Mutation) -> IdentityReport {
    let mut s = Sink { checks: Vec::new() };
    let q = Rationals;
    let q_params = [q.zero(), q.one(), q.from_i64(-2), q.ratio(3, 5)];
    let q_scales = [q.from_i64(2), q.ratio(-1, 3)];
    dickson_checks(&mut s, &q, &q_params, &q_scales, max_n, &mut mutation);
    for (p, deg) in [(7, 1), (3, 2)] {
        let k = FiniteField::with_default_modulus(p, deg).expect("small field");
        let elems = k.elements().expect("finite");
        let scales: Vec<_> = elems.iter().filter(|b| !k.is_zero(b)).cloned().collect();
        dickson_checks(&mut s, &k, &elems, &scales, max_n, &mut mutation);
    }
    sum_product_checks(&mut s);
    b5_checks(&mut s);
    b4_checks(&mut s);
    sylow_checks(&mut s, max_n.min(20));
    let pass = s.checks.iter().all(|c| c.pass);
    IdentityReport { checks: s.checks, pass }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        let r = identity_suite(8, Mutation::None);
        assert!(r.pass, "{:?}", r.failures().take(3).collect::<Vec<_>>());
        for name in ["dickson-defining", "dickson-transform", "dickson-sum-product", "remark-b4", "remark-b5", "pgl2-sylow-witness"] {
            assert!(r.checks.iter().any(|c| c.name == name), "{name}");
        }
    }

    #[test]
    fn mutation_is_caught() {
        let r = identity_suite(2, Mutation::DicksonDefining);
        assert!(!r.pass);
        assert_eq!(r.failures().count(), 1);
    }
}
