//! Deciding whether `f(X) - g(Y)` has a factor of degree at most two, with
//! certificates that can be checked independently of the search.

mod certificate;
mod construct;
mod structured;
mod verify;

pub use certificate::{Case, Certificate, FrobeniusStep, Param};
pub use construct::{construct_case, CaseParams, Construction};
pub use verify::{verify_certificate, VerifyReport};

use crate::bipoly::{difference_poly, quad_factors_exhaustive};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::unipoly::{common_decompositions, frobenius_decompose, right_linear_shift_match, UniPoly};

/// Default bound on the field size for the exhaustive fallback.
pub const DEFAULT_BUDGET: u64 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Largest field the exhaustive fallback may enumerate.
    pub max_field_size: u64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { max_field_size: DEFAULT_BUDGET }
    }
}

/// `f0` with `f = f0(X)^p`: the literal `f0(X^p) = f` with every
/// coefficient replaced by its `p`-th root.
fn frobenius_twist<F: Field>(f: &UniPoly<F>) -> Option<UniPoly<F>> {
    let k = f.field();
    let lit = frobenius_decompose(f)?;
    Some(UniPoly::new(k, lit.coeffs().iter().map(|c| k.frobenius_root(c)).collect()))
}

/// Inverse of one reduction step: `f0(X)^p`.
pub fn frobenius_lift<F: Field>(f0: &UniPoly<F>) -> UniPoly<F> {
    let k = f0.field();
    let p = k.characteristic() as usize;
    let mut coeffs = vec![k.zero(); f0.degree() * p + 1];
    for (i, c) in f0.coeffs().iter().enumerate() {
        coeffs[i * p] = k.frobenius(c);
    }
    UniPoly::new(k, coeffs)
}

/// Repeatedly replaces `(f, g)` by `(f0, g0)` with `f = f0^p`, `g = g0^p`
/// while both are polynomials in `X^p`.
pub fn reduce_frobenius<F: Field>(f: &UniPoly<F>, g: &UniPoly<F>) -> (UniPoly<F>, UniPoly<F>, Vec<FrobeniusStep<F>>) {
    let (mut f, mut g) = (f.clone(), g.clone());
    let mut steps = Vec::new();
    while let (Some(f0), Some(g0)) = (frobenius_twist(&f), frobenius_twist(&g)) {
        steps.push(FrobeniusStep { f: f.clone(), g: g.clone() });
        f = f0;
        g = g0;
    }
    (f, g, steps)
}

/// `(a, b)` with `g = f0(a X^2 + b)` where `f = f0(X^2)`, characteristic 2.
fn char2_square_shifts<F: Field>(f: &UniPoly<F>, g: &UniPoly<F>) -> Vec<(F::Elem, F::Elem)> {
    if f.field().characteristic() != 2 {
        return vec![];
    }
    match (frobenius_decompose(f), frobenius_decompose(g)) {
        (Some(f0), Some(g0)) => right_linear_shift_match(&f0, &g0),
        _ => vec![],
    }
}

pub fn classify_pair<F: Field>(f: &UniPoly<F>, g: &UniPoly<F>) -> Result<Certificate<F>> {
    classify_pair_with(f, g, &ClassifyOptions::default())
}

/// Classifies `f(X) - g(Y)`.
///
/// Over finite fields the structured search is followed, when it finds
/// nothing, by the exhaustive search within `opts.max_field_size`; an
/// exhaustive hit that the structured search missed yields `Undecided`.
pub fn classify_pair_with<F: Field>(f: &UniPoly<F>, g: &UniPoly<F>, opts: &ClassifyOptions) -> Result<Certificate<F>> {
    f.check_field(g)?;
    if f.is_constant() || g.is_constant() {
        return Err(Error::Precondition("f and g must be nonconstant".into()));
    }
    let k = f.field();
    let shifts = char2_square_shifts(f, g);
    if !shifts.is_empty() {
        return Ok(structured::t3b(f, shifts));
    }
    if let (Some(f0), Some(g0)) = (frobenius_twist(f), frobenius_twist(g)) {
        let inner = classify_pair_with(&f0, &g0, opts)?;
        return Ok(inner.wrap_frobenius(FrobeniusStep { f: f.clone(), g: g.clone() }));
    }
    let (decs, truncated) = common_decompositions(f, g)?;
    for d in &decs {
        let found = structured::matches(d)?;
        if let Some(first) = found.first() {
            let mut cert = first.clone();
            cert.also = found.iter().skip(1).map(|c| c.case).filter(|c| *c != cert.case).collect();
            cert.also.dedup();
            return Ok(cert);
        }
    }
    let mut cert = Certificate::empty(k, Case::Undecided, f, g);
    if truncated {
        cert.notes.push("wild decomposition search exceeded its limit".into());
    }
    if k.is_finite() {
        match quad_factors_exhaustive(&difference_poly(f, g)?, opts.max_field_size) {
            Ok(found) if found.is_empty() => cert.case = Case::NoQuadFactor,
            Ok(found) => {
                cert.notes.push(format!("exhaustive search found {} factor(s) missed by the structured search", found.len()));
                cert.factors = found;
            }
            Err(Error::BudgetExceeded(msg)) => cert.notes.push(msg),
            Err(e) => return Err(e),
        }
    } else {
        cert.notes.push("no structured case applies; no exhaustive fallback over Q".into());
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FiniteField, Rationals};
    use crate::parse::parse_poly;

    fn run<F: Field>(k: &F, f: &str, g: &str) -> (Certificate<F>, VerifyReport) {
        let (f, g) = (parse_poly(f, k).unwrap(), parse_poly(g, k).unwrap());
        let c = classify_pair(&f, &g).unwrap();
        let r = verify_certificate(&c, &f, &g);
        (c, r)
    }

    #[test]
    fn cubes_are_dickson_with_zero_parameter() {
        let f5 = FiniteField::prime(5).unwrap();
        let (c, r) = run(&f5, "x^3", "x^3");
        assert_eq!(c.case, Case::T2bI);
        assert!(r.ok(), "{:?}", r.failures());
        assert_eq!(c.factor_strings(), vec!["x + 4*y", "x^2 + x*y + y^2"]);
    }

    #[test]
    fn squares_give_t2a_with_splits() {
        let (c, r) = run(&Rationals, "x^2", "x^2");
        assert_eq!(c.case, Case::T2a);
        assert!(r.ok());
        assert_eq!(c.factor_strings(), vec!["x - y", "x + y", "x^2 - y^2"]);
        assert!(c.also.contains(&Case::T2bI));
    }

    #[test]
    fn frobenius_step_over_f3() {
        let f3 = FiniteField::prime(3).unwrap();
        let f = parse_poly("x^6 + x^3", &f3).unwrap();
        let g = parse_poly("x^3", &f3).unwrap();
        let (f0, g0, steps) = reduce_frobenius(&f, &g);
        assert_eq!((f0.to_string(), g0.to_string(), steps.len()), ("x^2 + x".into(), "x".into(), 1));
        let (c, r) = run(&f3, "x^6 + x^3", "x^3");
        assert_eq!(c.case, Case::T3a);
        assert_eq!(c.text("inner_case"), Some("T2a"));
        assert!(r.ok(), "{:?}", r.failures());
    }

    #[test]
    fn frobenius_twist_over_f9() {
        let f9 = FiniteField::with_default_modulus(3, 2).unwrap();
        let f = parse_poly("t*x^2 + x", &f9).unwrap();
        let g = parse_poly("x^2 + t", &f9).unwrap();
        let (f3, g3) = (frobenius_lift(&f), frobenius_lift(&g));
        let c = classify_pair(&f3, &g3).unwrap();
        assert_eq!(c.case, Case::T3a);
        assert!(verify_certificate(&c, &f3, &g3).ok());
        let (f0, g0, _) = reduce_frobenius(&f3, &g3);
        assert_eq!((f0, g0), (f, g));
    }

    #[test]
    fn t3b_over_f4() {
        let f4 = FiniteField::with_default_modulus(2, 2).unwrap();
        let (c, r) = run(&f4, "x^4 + x^2", "t^2*x^4 + t*x^2 + 1");
        assert_eq!(c.case, Case::T3b);
        assert!(r.ok(), "{:?}", r.failures());
    }

    #[test]
    fn no_factor_needs_the_oracle() {
        let f3 = FiniteField::prime(3).unwrap();
        let (c, r) = run(&f3, "x^4 + x", "x^2");
        assert!(r.ok());
        let big = difference_poly(&c.f1, &c.g1).unwrap();
        let oracle = quad_factors_exhaustive(&big, 16).unwrap();
        assert_eq!(c.case.is_factor_bearing(), !oracle.is_empty());
        let (c, _) = run(&Rationals, "x^3 + x", "x^3");
        assert_eq!(c.case, Case::Undecided);
    }

    #[test]
    fn tampered_factor_fails_divisibility() {
        let f5 = FiniteField::prime(5).unwrap();
        let f = parse_poly("x^3", &f5).unwrap();
        let mut c = classify_pair(&f, &f).unwrap();
        c.factors[1].coeffs[5] = f5.elem(1);
        let r = verify_certificate(&c, &f, &f);
        assert!(r.failures().contains(&"factors_divide_f1_g1"));
    }

    #[test]
    fn dickson_trace_condition_is_checked() {
        // over F_5 the cube roots of unity have trace -1, but for n = 5 the trace is irrational
        let f7 = FiniteField::prime(7).unwrap();
        let d = crate::unipoly::dickson(&f7, 5, &f7.elem(1));
        let mut c = classify_pair(&d, &d).unwrap();
        assert_ne!(c.case, Case::T2bI);
        c.case = Case::T2bI;
        c.set("family", Param::Text("dickson".into()));
        c.set("n", Param::Int(5));
        c.set("a", Param::Elem(f7.elem(1)));
        for name in ["alpha", "gamma"] {
            c.set(name, Param::Elem(f7.elem(1)));
        }
        for name in ["beta", "delta"] {
            c.set(name, Param::Elem(f7.elem(0)));
        }
        c.phi = UniPoly::x(&f7);
        c.f1 = d.clone();
        c.g1 = d.clone();
        c.factors.clear();
        let r = verify_certificate(&c, &d, &d);
        assert!(r.failures().contains(&"case_conditions"));
    }

    #[test]
    fn constructed_t2d_round_trips() {
        let f3 = FiniteField::prime(3).unwrap();
        let mut p = CaseParams::new(&f3);
        p.a = f3.elem(1);
        p.u = parse_poly("x^2", &f3).unwrap();
        p.v = parse_poly("2*x^2 + x", &f3).unwrap();
        for v in ["x^2 + 1", "2*x^2 + x", "x^2 + x + 2", "2*x^2"] {
            p.v = parse_poly(v, &f3).unwrap();
            if let Ok(con) = construct_case(Case::T2d, &f3, &p) {
                let c = classify_pair(&con.f, &con.g).unwrap();
                assert_eq!(c.case, Case::T2d, "v = {v}");
                assert!(verify_certificate(&c, &con.f, &con.g).ok());
                return;
            }
        }
        panic!("no T2d instance");
    }

    #[test]
    fn t2c_with_n_two_over_f9() {
        let f9 = FiniteField::with_default_modulus(3, 2).unwrap();
        let mut p = CaseParams::new(&f9);
        p.n = 2;
        p.a = f9.elem(1);
        let con = construct_case(Case::T2c, &f9, &p).unwrap();
        let strings: Vec<String> = con.factors.iter().map(|q| q.to_bipoly(&f9).to_string()).collect();
        assert!(strings.contains(&"x^2 + y^2 + 2".to_string()), "{strings:?}");
    }
}
