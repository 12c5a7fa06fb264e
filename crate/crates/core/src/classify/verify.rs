use crate::bipoly::{difference_poly, divide_monic_in_x, BiPoly};
use crate::field::Field;
use crate::unipoly::{dickson, Family, UniPoly};

use super::{frobenius_lift, Case, Certificate};

/// Named pass/fail checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<(String, bool)>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|(_, b)| *b)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|(_, b)| !*b).map(|(n, _)| n.as_str()).collect()
    }
}

fn divides<F: Field>(big: &BiPoly<F>, q: &BiPoly<F>) -> bool {
    matches!(divide_monic_in_x(big, q), Ok(Some(_)))
}

/// Rebuilds the special polynomial named by the certificate parameters.
fn family_of<F: Field>(c: &Certificate<F>) -> Option<Family<F>> {
    let a = c.elem("a")?.clone();
    Some(match c.text("family")? {
        "dickson" => Family::Dickson { n: c.int("n")? as usize, a },
        "additive" => Family::AdditiveP { a },
        "squared-additive" => Family::SquaredAdditive { a, b: c.elem("b")?.clone() },
        "half-additive" => Family::HalfAdditive { a },
        "char2-quartic" => Family::Char2Quartic { a },
        _ => return None,
    })
}

fn case_conditions<F: Field>(c: &Certificate<F>, case: Case) -> Option<bool> {
    let k = &c.field;
    let p = k.characteristic();
    let top = c.f1.degree().max(c.g1.degree());
    Some(match case {
        Case::T1a => top == 1,
        Case::T2a => top == 2,
        Case::T2bI | Case::T2bII | Case::T2bIII | Case::T2bIV | Case::T2bV => {
            let fam = family_of(c)?;
            let (alpha, beta) = (c.elem("alpha")?, c.elem("beta")?);
            let (gamma, delta) = (c.elem("gamma")?, c.elem("delta")?);
            let shape = c.f1 == fam.poly(k).compose_linear(gamma, delta) && c.g1 == c.f1.compose_linear(alpha, beta);
            let cond = match (&fam, case) {
                (Family::Dickson { n, a }, Case::T2bI) => {
                    let n = *n as u64;
                    (p == 0 || n % p != 0) && (k.is_zero(a) || n < 3 || k.unity_traces(n).ok()?[1].is_some())
                }
                (Family::AdditiveP { .. }, Case::T2bII)
                | (Family::SquaredAdditive { .. }, Case::T2bIII)
                | (Family::HalfAdditive { .. }, Case::T2bIV) => p >= 3,
                (Family::Char2Quartic { .. }, Case::T2bV) => p == 2,
                _ => false,
            };
            shape && cond
        }
        Case::T2c | Case::T1b => {
            let n = c.int("n")? as usize;
            let (a, sigma) = (c.elem("a")?, c.elem("sigma")?);
            let (b1, b2) = (c.elem("beta1")?, c.elem("beta2")?);
            let tame = p == 0 || n as u64 % p != 0;
            let traces_ok = tame && k.unity_traces(n as u64).ok()?.get(1)?.is_some();
            let f1 = dickson(k, n, a).compose_linear(&k.one(), b1);
            let g1 = dickson(k, n, &k.div(a, sigma).ok()?)
                .compose_linear(&k.one(), b2)
                .scale(&k.neg(&k.pow(sigma, n as u64 / 2)));
            let pow2 = case == Case::T2c || (n >= 4 && n.is_power_of_two());
            n % 2 == 0 && traces_ok && pow2 && c.f1 == f1 && c.g1 == g1
        }
        Case::T2d => {
            let a = c.elem("a")?;
            let (u, v) = (c.poly("u")?, c.poly("v")?);
            let h = Family::HalfAdditive { a: a.clone() }.poly(k);
            p >= 3 && u.degree() == 2 && v.degree() == 2 && c.f1 == h.compose(u) && c.g1 == h.compose(v)
        }
        Case::T3a => {
            let inner: Case = c.text("inner_case")?.parse().ok()?;
            !c.transcript.is_empty() && inner != Case::T3a && case_conditions(c, inner)?
        }
        Case::T3b => {
            let (a, b) = (c.elem("a")?, c.elem("b")?);
            let x2 = UniPoly::monomial(k, k.one(), 2);
            p == 2 && c.f1 == x2 && c.g1 == x2.affine(a, b)
        }
        Case::NoQuadFactor => c.factors.is_empty(),
        Case::Undecided => true,
    })
}

/// Checks a certificate against the pair it claims to describe, without
/// consulting the search that produced it.
pub fn verify_certificate<F: Field>(c: &Certificate<F>, f: &UniPoly<F>, g: &UniPoly<F>) -> VerifyReport {
    let mut checks = Vec::new();
    let (rf, rg) = c.recompose();
    checks.push(("recomposition".to_string(), rf == *f && rg == *g));

    let mut chain_ok = c.transcript.first().is_none_or(|s| s.f == *f && s.g == *g);
    for (i, s) in c.transcript.iter().enumerate() {
        let (nf, ng) = match c.transcript.get(i + 1) {
            Some(next) => (next.f.clone(), next.g.clone()),
            None => (c.phi.compose(&c.f1), c.phi.compose(&c.g1)),
        };
        chain_ok &= frobenius_lift(&nf) == s.f && frobenius_lift(&ng) == s.g;
    }
    checks.push(("transcript".to_string(), chain_ok));

    let k = &c.field;
    let factors: Vec<BiPoly<F>> = c.factors.iter().map(|q| q.to_bipoly(k)).collect();
    if c.case != Case::Undecided {
        let inner = difference_poly(&c.f1, &c.g1).ok();
        let outer = difference_poly(f, g).ok();
        let all = |big: Option<BiPoly<F>>| big.is_some_and(|b| factors.iter().all(|q| divides(&b, q)));
        checks.push(("factors_divide_f1_g1".to_string(), all(inner)));
        checks.push(("factors_divide_f_g".to_string(), all(outer)));
    }
    let count_ok = if c.case.is_factor_bearing() { !factors.is_empty() } else { c.case != Case::NoQuadFactor || factors.is_empty() };
    checks.push(("factor_count".to_string(), count_ok));
    checks.push(("case_conditions".to_string(), case_conditions(c, c.case).unwrap_or(false)));
    VerifyReport { checks }
}
