use crate::bipoly::{
    additive_diff_factors, b4_quadratic, linear_factors, quartic_split, remark_b5_factors, trace_quadratic,
    x_minus_y, x_plus_y, BiPoly, QuadPoly,
};
use crate::error::Result;
use crate::field::Field;
use crate::unipoly::{
    dickson, left_component, match_families, right_component, right_linear_shift_match, Decomposition, Family,
    FamilyMatch, UniPoly,
};

use super::{Case, Certificate, Param};

/// Keeps the factors of total degree at most two, adds the linear factors
/// of reducible quadratics, and canonicalizes.
pub(crate) fn finalize<F: Field>(raw: &[BiPoly<F>]) -> Vec<QuadPoly<F::Elem>> {
    let mut out = Vec::new();
    for q in raw.iter().filter(|q| q.total_degree() <= 2 && q.deg_x() >= 1) {
        out.extend(QuadPoly::from_bipoly(q));
        out.extend(linear_factors(q).iter().filter_map(QuadPoly::from_bipoly));
    }
    out.sort();
    out.dedup();
    out
}

fn cert<F: Field>(case: Case, phi: UniPoly<F>, f1: UniPoly<F>, g1: UniPoly<F>) -> Certificate<F> {
    let k = phi.field().clone();
    let mut c = Certificate::empty(&k, case, &f1, &g1);
    c.phi = phi;
    c
}

/// `X^2 - a Y^2 - b` for the first `(a, b)` with `g = f0(a X^2 + b)`, `f = f0(X^2)`.
pub(crate) fn t3b<F: Field>(f: &UniPoly<F>, shifts: Vec<(F::Elem, F::Elem)>) -> Certificate<F> {
    let k = f.field();
    let f0 = UniPoly::new(k, f.coeffs().iter().step_by(2).cloned().collect());
    let (a, b) = shifts[0].clone();
    let x2 = UniPoly::monomial(k, k.one(), 2);
    let mut c = cert(Case::T3b, f0, x2.clone(), x2.affine(&a, &b));
    c.set("a", Param::Elem(a));
    c.set("b", Param::Elem(b));
    let q = BiPoly::from_x(&c.f1).sub(&BiPoly::from_y(&c.g1));
    c.factors = finalize(&[q]);
    c
}

/// Every structured case matched by one decomposition, most specific first.
pub(crate) fn matches<F: Field>(d: &Decomposition<F>) -> Result<Vec<Certificate<F>>> {
    let mut out: Vec<Certificate<F>> = low_degree(d).into_iter().collect();
    out.extend(t2b(d)?);
    out.extend(t2c(d)?);
    out.extend(t2d(d));
    Ok(out)
}

fn low_degree<F: Field>(d: &Decomposition<F>) -> Option<Certificate<F>> {
    let top = d.f1.degree().max(d.g1.degree());
    if top > 2 {
        return None;
    }
    let case = if top == 2 { Case::T2a } else { Case::T1a };
    let mut c = cert(case, d.phi.clone(), d.f1.clone(), d.g1.clone());
    c.factors = finalize(&[BiPoly::from_x(&d.f1).sub(&BiPoly::from_y(&d.g1))]);
    Some(c)
}

/// Outer map `phi(s X + t)`.
fn absorb<F: Field>(phi: &UniPoly<F>, s: &F::Elem, t: &F::Elem) -> UniPoly<F> {
    phi.compose(&UniPoly::linear(phi.field(), s.clone(), t.clone()))
}

/// `X + c_X`, `Y` scaled and shifted, as substitutions.
fn lin_x<F: Field>(k: &F, a: &F::Elem, b: &F::Elem) -> BiPoly<F> {
    BiPoly::from_terms(k, &[(1, 0, a.clone()), (0, 0, b.clone())])
}

fn lin_y<F: Field>(k: &F, a: &F::Elem, b: &F::Elem) -> BiPoly<F> {
    BiPoly::from_terms(k, &[(0, 1, a.clone()), (0, 0, b.clone())])
}

/// Factors of `h(X) - h(Y)` over the base field, or `None` when the case
/// conditions fail.
pub(crate) fn family_diff_factors<F: Field>(k: &F, fam: &Family<F>) -> Result<Option<(Case, Vec<BiPoly<F>>)>> {
    let p = k.characteristic();
    Ok(Some(match fam {
        Family::Dickson { n, a } => {
            let traces = k.unity_traces(*n as u64)?;
            if !k.is_zero(a) && *n >= 3 && traces[1].is_none() {
                return Ok(None);
            }
            let mut raw = vec![x_minus_y(k)];
            if n % 2 == 0 {
                raw.push(x_plus_y(k));
            }
            for c in traces.iter().take(n.div_ceil(2)).skip(1).flatten() {
                raw.push(trace_quadratic(k, c, a));
            }
            (Case::T2bI, raw)
        }
        Family::AdditiveP { .. } => (Case::T2bII, additive_diff_factors(fam, k)?),
        Family::SquaredAdditive { .. } => (Case::T2bIII, additive_diff_factors(fam, k)?),
        Family::HalfAdditive { a } => {
            let mut raw = vec![x_minus_y(k)];
            if !k.is_zero(a) {
                for s in k.nth_roots(a, (p - 1) / 2) {
                    raw.push(b4_quadratic(k, &s));
                }
            }
            (Case::T2bIV, raw)
        }
        Family::Char2Quartic { a } => (Case::T2bV, remark_b5_factors(k, a)?.factors),
    }))
}

fn set_family<F: Field>(c: &mut Certificate<F>, fam: &Family<F>) {
    c.set("family", Param::Text(fam.name().into()));
    match fam {
        Family::Dickson { n, a } => {
            c.set("n", Param::Int(*n as u64));
            c.set("a", Param::Elem(a.clone()));
        }
        Family::SquaredAdditive { a, b } => {
            c.set("a", Param::Elem(a.clone()));
            c.set("b", Param::Elem(b.clone()));
        }
        Family::AdditiveP { a } | Family::HalfAdditive { a } | Family::Char2Quartic { a } => {
            c.set("a", Param::Elem(a.clone()))
        }
    }
}

/// `g1 = f1(alpha X + beta)` with `f1` a linear image of a special `h`.
fn t2b<F: Field>(d: &Decomposition<F>) -> Result<Vec<Certificate<F>>> {
    let k = d.phi.field();
    let mut out = Vec::new();
    if d.f1.degree() != d.g1.degree() {
        return Ok(out);
    }
    let shifts = right_linear_shift_match(&d.f1, &d.g1);
    let Some((alpha, beta)) = shifts.first().cloned() else { return Ok(out) };
    for m in match_families(&d.f1) {
        let FamilyMatch { family, gamma, delta, scale, shift } = &m;
        let Some((case, raw)) = family_diff_factors(k, family)? else { continue };
        let f1 = m.inner(k);
        let g1 = f1.compose_linear(&alpha, &beta);
        let mut c = cert(case, absorb(&d.phi, scale, shift), f1, g1);
        set_family(&mut c, family);
        for (name, v) in [("alpha", &alpha), ("beta", &beta), ("gamma", gamma), ("delta", delta)] {
            c.set(name, Param::Elem(v.clone()));
        }
        // X' = gamma X + delta, Y' = gamma (alpha Y + beta) + delta
        let u = lin_x(k, gamma, delta);
        let v = lin_y(k, &k.mul(gamma, &alpha), &k.add(&k.mul(gamma, &beta), delta));
        let moved: Vec<BiPoly<F>> = raw.iter().map(|q| q.substitute(&u, &v)).collect();
        c.factors = finalize(&moved);
        out.push(c);
    }
    Ok(out)
}

fn dickson_match<F: Field>(f: &UniPoly<F>) -> Option<(usize, FamilyMatch<F>)> {
    match_families(f).into_iter().find_map(|m| match m.family {
        Family::Dickson { n, .. } => Some((n, m)),
        _ => None,
    })
}

fn dickson_a<F: Field>(m: &FamilyMatch<F>) -> F::Elem {
    match &m.family {
        Family::Dickson { a, .. } => a.clone(),
        _ => unreachable!("Dickson match"),
    }
}

/// Quadratic factors of `D_n(X, a) + sigma^(n/2) D_n(Y, a/sigma)` over the
/// field: `X^2 - w XY + sigma Y^2 + (e_k - 2) a` with `e_k = z^k + z^-k` for a
/// primitive `n`-th root of unity `z`, odd `k`, and `w^2 = (e_k + 2) sigma`.
pub(crate) fn twisted_sum_factors<F: Field>(k: &F, n: usize, a: &F::Elem, sigma: &F::Elem) -> Result<Vec<BiPoly<F>>> {
    let traces = k.unity_traces(n as u64)?;
    let mut raw = Vec::new();
    for e in (1..n).step_by(2).filter_map(|j| traces[j].clone()) {
        let konst = k.mul(&k.sub(&e, &k.from_i64(2)), a);
        for w in k.nth_roots(&k.mul(&k.add(&e, &k.from_i64(2)), sigma), 2) {
            raw.push(BiPoly::from_terms(
                k,
                &[(2, 0, k.one()), (1, 1, k.neg(&w)), (0, 2, sigma.clone()), (0, 0, konst.clone())],
            ));
        }
    }
    Ok(raw)
}

/// `f1 = s D_n(X + b1, a) + t`, `g1 = t - s sigma^(n/2) D_n(X + b2, a/sigma)`.
fn t2c<F: Field>(d: &Decomposition<F>) -> Result<Option<Certificate<F>>> {
    let k = d.phi.field();
    let n = d.f1.degree();
    let p = k.characteristic();
    if n % 2 == 1 || d.g1.degree() != n || (p != 0 && n as u64 % p == 0) {
        return Ok(None);
    }
    let (Some((_, mf)), Some((_, mg))) = (dickson_match(&d.f1), dickson_match(&d.g1)) else { return Ok(None) };
    if mf.shift != mg.shift || k.unity_traces(n as u64)?[1].is_none() {
        return Ok(None);
    }
    let (a1, a2) = (dickson_a(&mf), dickson_a(&mg));
    let half = n as u64 / 2;
    let target = k.div(&k.neg(&mg.scale), &mf.scale)?;
    let sigmas = match (k.is_zero(&a1), k.is_zero(&a2)) {
        (false, false) => {
            let s = k.div(&a1, &a2)?;
            if k.pow(&s, half) == target {
                vec![s]
            } else {
                vec![]
            }
        }
        (true, true) => k.nth_roots(&target, half),
        _ => vec![],
    };
    for sigma in sigmas {
        let raw = twisted_sum_factors(k, n, &a1, &sigma)?;
        if raw.is_empty() {
            continue;
        }
        let f1 = dickson(k, n, &a1).compose_linear(&k.one(), &mf.delta);
        let g1 = dickson(k, n, &k.div(&a1, &sigma)?)
            .compose_linear(&k.one(), &mg.delta)
            .scale(&k.neg(&k.pow(&sigma, half)));
        let mut c = cert(Case::T2c, absorb(&d.phi, &mf.scale, &mf.shift), f1, g1);
        c.set("n", Param::Int(n as u64));
        c.set("a", Param::Elem(a1.clone()));
        c.set("sigma", Param::Elem(sigma.clone()));
        c.set("beta1", Param::Elem(mf.delta.clone()));
        c.set("beta2", Param::Elem(mg.delta.clone()));
        if n >= 4 && n.is_power_of_two() {
            c.set("t1_view", Param::Text(Case::T1b.tag().into()));
        }
        let u = lin_x(k, &k.one(), &mf.delta);
        let v = lin_y(k, &k.one(), &mg.delta);
        let moved: Vec<BiPoly<F>> = raw.iter().map(|q| q.substitute(&u, &v)).collect();
        c.factors = finalize(&moved);
        return Ok(Some(c));
    }
    Ok(None)
}

fn half_match<F: Field>(f: &UniPoly<F>) -> Option<(UniPoly<F>, FamilyMatch<F>)> {
    let u = right_component(f, 2)?;
    let outer = left_component(f, &u)?;
    let m = match_families(&outer).into_iter().find(|m| matches!(m.family, Family::HalfAdditive { .. }))?;
    Some((u, m))
}

/// `f1 = h(u)`, `g1 = h(v)` with `u`, `v` quadratic and `h` half additive,
/// when one of the quartics `(U - V)^2 - 2s(U + V) + s^2` splits.
fn t2d<F: Field>(d: &Decomposition<F>) -> Option<Certificate<F>> {
    let k = d.phi.field();
    let p = k.characteristic() as usize;
    if p < 3 || d.f1.degree() != 2 * p || d.g1.degree() != 2 * p {
        return None;
    }
    let (u, mf) = half_match(&d.f1)?;
    let (v, mg) = half_match(&d.g1)?;
    if mf.shift != mg.shift {
        return None;
    }
    let Family::HalfAdditive { a } = mf.family.clone() else { return None };
    if k.is_zero(&a) {
        return None;
    }
    let h = mf.family.poly(k);
    let lambda = k.frobenius_root(&k.div(&mg.scale, &mf.scale).ok()?);
    let uu = u.add_constant(&mf.delta);
    let vv = v.add_constant(&mg.delta).scale(&lambda);
    let (f1, g1) = (h.compose(&uu), h.compose(&vv));
    if f1.affine(&mf.scale, &mf.shift) != d.f1 || g1.affine(&mf.scale, &mf.shift) != d.g1 {
        return None;
    }
    let (bu, bv) = (BiPoly::from_x(&uu), BiPoly::from_y(&vv));
    let mut raw = vec![bu.sub(&bv)];
    let mut split = false;
    for s in k.nth_roots(&a, (p as u64 - 1) / 2) {
        if let Some((q1, q2)) = quartic_split(&b4_quadratic(k, &s).substitute(&bu, &bv)) {
            raw.push(q1.to_bipoly(k));
            raw.push(q2.to_bipoly(k));
            split = true;
        }
    }
    if !split {
        return None;
    }
    let mut c = cert(Case::T2d, absorb(&d.phi, &mf.scale, &mf.shift), f1, g1);
    c.set("a", Param::Elem(a));
    c.set("u", Param::Poly(uu));
    c.set("v", Param::Poly(vv));
    c.factors = finalize(&raw);
    Some(c)
}
