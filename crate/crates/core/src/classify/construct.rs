use crate::bipoly::{b4_quadratic, quartic_split, BiPoly, QuadPoly};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::unipoly::{dickson, Family, UniPoly};

use super::structured::{family_diff_factors, finalize, twisted_sum_factors};
use super::{frobenius_lift, Case, Certificate};

/// Parameters for [`construct_case`]; each case reads the fields it needs.
#[derive(Clone, Debug)]
pub struct CaseParams<F: Field> {
    pub n: usize,
    pub a: F::Elem,
    pub b: F::Elem,
    pub alpha: F::Elem,
    pub beta: F::Elem,
    pub gamma: F::Elem,
    pub delta: F::Elem,
    /// `T2c`/`T1b` twist; `alpha^2` when unset.
    pub sigma: Option<F::Elem>,
    /// Outer polynomial applied last (`T3b`: the `f0` in `f0(X^2)`).
    pub phi: UniPoly<F>,
    pub u: UniPoly<F>,
    pub v: UniPoly<F>,
    /// Case built below the Frobenius steps of `T3a`.
    pub inner: Option<Case>,
    /// Number of Frobenius steps for `T3a`.
    pub steps: usize,
}

impl<F: Field> CaseParams<F> {
    pub fn new(k: &F) -> Self {
        CaseParams {
            n: 3,
            a: k.one(),
            b: k.zero(),
            alpha: k.one(),
            beta: k.zero(),
            gamma: k.one(),
            delta: k.zero(),
            sigma: None,
            phi: UniPoly::x(k),
            u: UniPoly::monomial(k, k.one(), 2),
            v: UniPoly::monomial(k, k.one(), 2).add_constant(&k.one()),
            inner: None,
            steps: 1,
        }
    }
}

/// A pair `(f, g)` of the requested case with the factors of degree at most
/// two that the case formulas predict.
#[derive(Clone, Debug, PartialEq)]
pub struct Construction<F: Field> {
    pub case: Case,
    pub f: UniPoly<F>,
    pub g: UniPoly<F>,
    pub factors: Vec<QuadPoly<F::Elem>>,
}

fn family_for<F: Field>(case: Case, k: &F, p: &CaseParams<F>) -> Result<Family<F>> {
    let ch = k.characteristic();
    Ok(match case {
        Case::T2bI => {
            if ch != 0 && p.n as u64 % ch == 0 {
                return Err(Error::DivisibleByCharacteristic { what: format!("n = {}", p.n), p: ch });
            }
            Family::Dickson { n: p.n, a: p.a.clone() }
        }
        Case::T2bII | Case::T2bIII | Case::T2bIV if ch < 3 => {
            return Err(Error::Constraint(format!("{case} needs characteristic at least 3")))
        }
        Case::T2bII => Family::AdditiveP { a: p.a.clone() },
        Case::T2bIII => Family::SquaredAdditive { a: p.a.clone(), b: p.b.clone() },
        Case::T2bIV => Family::HalfAdditive { a: p.a.clone() },
        Case::T2bV if ch != 2 => return Err(Error::Constraint("T2b-v needs characteristic 2".into())),
        Case::T2bV => Family::Char2Quartic { a: p.a.clone() },
        _ => unreachable!("family case"),
    })
}

fn nonempty<F: Field>(case: Case, factors: Vec<QuadPoly<F::Elem>>) -> Result<Vec<QuadPoly<F::Elem>>> {
    if factors.is_empty() {
        Err(Error::Constraint(format!("parameters give no {case} factor over the field")))
    } else {
        Ok(factors)
    }
}

/// `(f1, g1, factors)` before the outer polynomial is applied.
fn build<F: Field>(case: Case, k: &F, p: &CaseParams<F>) -> Result<(UniPoly<F>, UniPoly<F>, Vec<QuadPoly<F::Elem>>)> {
    let ch = k.characteristic();
    let x = || BiPoly::from_terms(k, &[(1, 0, k.one())]);
    match case {
        Case::T1a | Case::T2a => {
            let (f1, g1) = if case == Case::T1a {
                (UniPoly::x(k), UniPoly::linear(k, p.alpha.clone(), p.beta.clone()))
            } else {
                (p.u.clone(), p.v.clone())
            };
            let top = f1.degree().max(g1.degree());
            if (case == Case::T1a && (top != 1 || k.is_zero(&p.alpha))) || (case == Case::T2a && top != 2) {
                return Err(Error::Constraint(format!("{case}: wrong component degrees")));
            }
            let q = BiPoly::from_x(&f1).sub(&BiPoly::from_y(&g1));
            Ok((f1, g1, finalize(&[q])))
        }
        Case::T2bI | Case::T2bII | Case::T2bIII | Case::T2bIV | Case::T2bV => {
            let fam = family_for(case, k, p)?;
            if k.is_zero(&p.alpha) || k.is_zero(&p.gamma) {
                return Err(Error::Constraint("alpha and gamma must be nonzero".into()));
            }
            let Some((_, raw)) = family_diff_factors(k, &fam)? else {
                return Err(Error::Constraint(format!("{case}: z + 1/z is not in {}", k.spec())));
            };
            let f1 = fam.poly(k).compose_linear(&p.gamma, &p.delta);
            let g1 = f1.compose_linear(&p.alpha, &p.beta);
            let u = BiPoly::from_terms(k, &[(1, 0, p.gamma.clone()), (0, 0, p.delta.clone())]);
            let shift = k.add(&k.mul(&p.gamma, &p.beta), &p.delta);
            let v = BiPoly::from_terms(k, &[(0, 1, k.mul(&p.gamma, &p.alpha)), (0, 0, shift)]);
            let moved: Vec<BiPoly<F>> = raw.iter().map(|q| q.substitute(&u, &v)).collect();
            Ok((f1, g1, finalize(&moved)))
        }
        Case::T1b | Case::T2c => {
            let n = p.n;
            if n == 0 || n % 2 == 1 || (case == Case::T1b && (n < 4 || !n.is_power_of_two())) {
                return Err(Error::Constraint(format!("{case}: unsupported n = {n}")));
            }
            if ch != 0 && n as u64 % ch == 0 {
                return Err(Error::DivisibleByCharacteristic { what: format!("n = {n}"), p: ch });
            }
            // -D_n(alpha (X + delta), a) = -sigma^(n/2) D_n(X + delta, a / sigma) with sigma = alpha^2
            let sigma = p.sigma.clone().unwrap_or_else(|| k.mul(&p.alpha, &p.alpha));
            if k.is_zero(&sigma) {
                return Err(Error::Constraint("sigma must be nonzero".into()));
            }
            let f1 = dickson(k, n, &p.a).compose_linear(&k.one(), &p.beta);
            let g1 = dickson(k, n, &k.div(&p.a, &sigma)?)
                .compose_linear(&k.one(), &p.delta)
                .scale(&k.neg(&k.pow(&sigma, n as u64 / 2)));
            let raw = twisted_sum_factors(k, n, &p.a, &sigma)?;
            let u = BiPoly::from_terms(k, &[(1, 0, k.one()), (0, 0, p.beta.clone())]);
            let v = BiPoly::from_terms(k, &[(0, 1, k.one()), (0, 0, p.delta.clone())]);
            let moved: Vec<BiPoly<F>> = raw.iter().map(|q| q.substitute(&u, &v)).collect();
            Ok((f1, g1, nonempty::<F>(case, finalize(&moved))?))
        }
        Case::T2d => {
            if ch < 3 || k.is_zero(&p.a) || p.u.degree() != 2 || p.v.degree() != 2 {
                return Err(Error::Constraint("T2d needs p >= 3, a != 0 and quadratic u, v".into()));
            }
            let h = Family::HalfAdditive { a: p.a.clone() }.poly(k);
            let (bu, bv) = (BiPoly::from_x(&p.u), BiPoly::from_y(&p.v));
            let mut raw = vec![bu.sub(&bv)];
            for s in k.nth_roots(&p.a, (ch - 1) / 2) {
                if let Some((q1, q2)) = quartic_split(&b4_quadratic(k, &s).substitute(&bu, &bv)) {
                    raw.push(q1.to_bipoly(k));
                    raw.push(q2.to_bipoly(k));
                }
            }
            if raw.len() == 1 {
                return Err(Error::Constraint("T2d: no quartic splits over the field".into()));
            }
            Ok((h.compose(&p.u), h.compose(&p.v), finalize(&raw)))
        }
        Case::T3b => {
            if ch != 2 {
                return Err(Error::Constraint("T3b needs characteristic 2".into()));
            }
            if k.is_zero(&p.a) {
                return Err(Error::Constraint("a must be nonzero".into()));
            }
            let x2 = UniPoly::monomial(k, k.one(), 2);
            let q = x().mul(&x()).sub(&BiPoly::from_terms(k, &[(0, 2, p.a.clone()), (0, 0, p.b.clone())]));
            Ok((x2.clone(), x2.affine(&p.a, &p.b), finalize(&[q])))
        }
        Case::T3a | Case::NoQuadFactor | Case::Undecided => {
            Err(Error::Precondition(format!("{case} has no direct construction")))
        }
    }
}

/// Builds a pair `(f, g)` of the given case: `f = phi(f1)`, `g = phi(g1)`
/// with the case shape for `(f1, g1)`; `T3a` lifts `params.inner` through
/// `params.steps` Frobenius steps.
pub fn construct_case<F: Field>(case: Case, k: &F, params: &CaseParams<F>) -> Result<Construction<F>> {
    if case == Case::T3a {
        if k.characteristic() == 0 {
            return Err(Error::Constraint("T3a needs positive characteristic".into()));
        }
        let inner = params.inner.unwrap_or(Case::T2a);
        if matches!(inner, Case::T3a | Case::T3b) || params.steps == 0 {
            return Err(Error::Constraint("T3a needs a non-Frobenius inner case and at least one step".into()));
        }
        let mut c = construct_case(inner, k, params)?;
        for _ in 0..params.steps {
            c.f = frobenius_lift(&c.f);
            c.g = frobenius_lift(&c.g);
        }
        c.case = Case::T3a;
        return Ok(c);
    }
    if params.phi.is_constant() {
        return Err(Error::Constraint("phi must be nonconstant".into()));
    }
    let (f1, g1, factors) = build(case, k, params)?;
    Ok(Construction { case, f: params.phi.compose(&f1), g: params.phi.compose(&g1), factors })
}

impl<F: Field> Certificate<F> {
    /// Parameters under which [`construct_case`] rebuilds this certificate's
    /// pair; `None` for cases without a construction.
    pub fn case_params(&self) -> Option<CaseParams<F>> {
        let k = &self.field;
        let mut p = CaseParams::new(k);
        p.phi = self.phi.clone();
        let case = if self.case == Case::T3a {
            p.inner = Some(self.text("inner_case")?.parse().ok()?);
            p.steps = self.transcript.len();
            p.inner?
        } else {
            self.case
        };
        let get = |name: &str| self.elem(name).cloned();
        match case {
            Case::T1a => {
                p.alpha = self.g1.coeff(1);
                p.beta = self.g1.coeff(0);
                if self.f1 != UniPoly::x(k) {
                    return None;
                }
            }
            Case::T2a => {
                p.u = self.f1.clone();
                p.v = self.g1.clone();
            }
            Case::T2bI | Case::T2bII | Case::T2bIII | Case::T2bIV | Case::T2bV => {
                p.a = get("a")?;
                p.b = get("b").unwrap_or_else(|| k.zero());
                p.n = self.int("n").unwrap_or(0) as usize;
                p.alpha = get("alpha")?;
                p.beta = get("beta")?;
                p.gamma = get("gamma")?;
                p.delta = get("delta")?;
            }
            Case::T2c | Case::T1b => {
                p.n = self.int("n")? as usize;
                p.a = get("a")?;
                p.sigma = Some(get("sigma")?);
                p.beta = get("beta1")?;
                p.delta = get("beta2")?;
            }
            Case::T2d => {
                p.a = get("a")?;
                p.u = self.poly("u")?.clone();
                p.v = self.poly("v")?.clone();
            }
            Case::T3b => {
                p.a = get("a")?;
                p.b = get("b")?;
            }
            Case::T3a | Case::NoQuadFactor | Case::Undecided => return None,
        }
        Some(p)
    }
}
