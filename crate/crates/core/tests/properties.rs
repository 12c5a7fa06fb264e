use proptest::prelude::*;
use quadfact::bipoly::BiPoly;
use quadfact::classify::{classify_pair, verify_certificate};
use quadfact::parse::{parse_bipoly, parse_poly};
use quadfact::unipoly::UniPoly;
use quadfact::{Field, FiniteField, Rationals};

fn f9() -> FiniteField {
    FiniteField::with_default_modulus(3, 2).unwrap()
}

fn q_elem() -> impl Strategy<Value = (i64, i64)> {
    (-20i64..=20, 1i64..=9)
}

fn poly_f9(coeffs: &[u64]) -> UniPoly<FiniteField> {
    let k = f9();
    UniPoly::new(&k, coeffs.iter().map(|c| k.elem(*c)).collect())
}

fn poly_q(coeffs: &[(i64, i64)]) -> UniPoly<Rationals> {
    UniPoly::new(&Rationals, coeffs.iter().map(|(n, d)| Rationals.ratio(*n, *d)).collect())
}

proptest! {
    #[test]
    fn finite_field_axioms(a in 0u64..9, b in 0u64..9, c in 0u64..9) {
        let k = f9();
        let (a, b, c) = (k.elem(a), k.elem(b), k.elem(c));
        prop_assert_eq!(k.mul(&a, &k.add(&b, &c)), k.add(&k.mul(&a, &b), &k.mul(&a, &c)));
        prop_assert_eq!(k.mul(&k.mul(&a, &b), &c), k.mul(&a, &k.mul(&b, &c)));
        prop_assert_eq!(k.add(&a, &k.neg(&a)), k.zero());
        prop_assert_eq!(k.pow(&a, 9), a);
        if a != k.zero() {
            prop_assert_eq!(k.mul(&a, &k.inv(&a).unwrap()), k.one());
        }
        prop_assert_eq!(k.frobenius(&k.frobenius_root(&a)), a);
    }

    #[test]
    fn rational_axioms(a in q_elem(), b in q_elem()) {
        let k = Rationals;
        let (a, b) = (k.ratio(a.0, a.1), k.ratio(b.0, b.1));
        prop_assert_eq!(k.sub(&k.add(&a, &b), &b), a.clone());
        if b != k.zero() {
            prop_assert_eq!(k.mul(&k.div(&a, &b).unwrap(), &b), a);
        }
    }

    #[test]
    fn print_parse_round_trip_f9(coeffs in prop::collection::vec(0u64..9, 0..7)) {
        let f = poly_f9(&coeffs);
        prop_assert_eq!(parse_poly(&f.to_string(), &f9()).unwrap(), f);
    }

    #[test]
    fn print_parse_round_trip_q(coeffs in prop::collection::vec(q_elem(), 0..6)) {
        let f = poly_q(&coeffs);
        prop_assert_eq!(parse_poly(&f.to_string(), &Rationals).unwrap(), f);
    }

    #[test]
    fn bipoly_print_parse(a in prop::collection::vec(0u64..9, 1..4), b in prop::collection::vec(0u64..9, 1..4)) {
        let k = f9();
        let p = BiPoly::from_x(&poly_f9(&a)).mul(&BiPoly::from_y(&poly_f9(&b))).add(&BiPoly::from_x(&poly_f9(&b)));
        prop_assert_eq!(parse_bipoly(&p.to_string(), &k).unwrap(), p);
    }

    #[test]
    fn division_with_remainder(a in prop::collection::vec(q_elem(), 0..7), b in prop::collection::vec(q_elem(), 1..4)) {
        let (a, b) = (poly_q(&a), poly_q(&b));
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn composition_is_associative(a in prop::collection::vec(0u64..9, 1..4), b in prop::collection::vec(0u64..9, 1..4), c in prop::collection::vec(0u64..9, 1..3)) {
        let (a, b, c) = (poly_f9(&a), poly_f9(&b), poly_f9(&c));
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn certificates_verify(f in prop::collection::vec(0u64..5, 2..6), g in prop::collection::vec(0u64..5, 2..6)) {
        let k = FiniteField::prime(5).unwrap();
        let (f, g) = (UniPoly::new(&k, f.iter().map(|c| k.elem(*c)).collect()), UniPoly::new(&k, g.iter().map(|c| k.elem(*c)).collect()));
        prop_assume!(!f.is_constant() && !g.is_constant());
        let c = classify_pair(&f, &g).unwrap();
        let r = verify_certificate(&c, &f, &g);
        prop_assert!(r.ok(), "{:?} {:?}", c.case, r.failures());
    }
}
