//! One function per acceptance property; `Ok` carries a summary line,
//! `Err` the first failures.

use std::collections::HashSet;

use quadfact::bipoly::{difference_poly, divide_monic_in_x, BiPoly};
use quadfact::classify::{frobenius_lift, reduce_frobenius};
use quadfact::oracle::{exhaustive_agreement, identity_suite, AgreementBudget, IdentityReport, Mutation};
use quadfact::pgl2::{cyclic_normal_form, dihedral_generators, dihedral_normal_form, CyclicForm, DihedralCase, Pgl2};
use quadfact::unipoly::{common_left_component, left_component, right_component, UniPoly};
use quadfact::{Field, FiniteField, Rationals};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{rng, round_trip, Sample};

pub type Outcome = Result<String, String>;

fn summarize(what: &str, count: usize, failures: Vec<String>) -> Outcome {
    if failures.is_empty() {
        Ok(format!("{count} {what}"))
    } else {
        Err(format!("{} of {count} {what} failed: {}", failures.len(), failures[..failures.len().min(3)].join("; ")))
    }
}

fn suite_part(report: &IdentityReport, names: &[&str], required: &[&str]) -> Outcome {
    let picked: Vec<_> = report.checks.iter().filter(|c| names.contains(&c.name.as_str())).collect();
    let mut failures: Vec<String> =
        picked.iter().filter(|c| !c.pass).map(|c| format!("{} {}", c.name, c.instance)).collect();
    for r in required {
        if !picked.iter().any(|c| c.instance.starts_with(r)) {
            failures.push(format!("missing instance {r}"));
        }
    }
    summarize("identity instances", picked.len(), failures)
}

pub fn dickson_suite() -> Outcome {
    let r = identity_suite(16, Mutation::None);
    suite_part(&r, &["dickson-defining", "dickson-transform"], &["Q n=16 a=3/5", "GF(7) n=16 a=6", "GF(3^2) n=16"])
}

pub fn dickson_sum_product() -> Outcome {
    let r = identity_suite(2, Mutation::None);
    suite_part(&r, &["dickson-sum-product"], &["GF(3^2) n=2", "GF(13) n=6", "GF(5^2) n=4", "GF(7^2) n=8"])
}

pub fn factor_formula_identities() -> Outcome {
    let r = identity_suite(2, Mutation::None);
    suite_part(&r, &["remark-b4", "remark-b5"], &["GF(2) a=", "GF(2^2) a=t", "GF(2^3) a=", "GF(3) a=2", "GF(7) a=6"])
}

pub fn oracle_agreement() -> Outcome {
    let mut tested = 0;
    let mut failures = Vec::new();
    for (p, degs) in [(2u64, 1..=4usize), (3, 1..=4), (5, 3..=3)] {
        let k = FiniteField::prime(p).unwrap();
        let r = exhaustive_agreement(&k, degs.clone(), degs, &AgreementBudget::default()).map_err(|e| e.to_string())?;
        tested += r.pairs_tested as usize;
        failures.extend(r.disagreements.iter().map(|d| format!("{}: f = {}, g = {} ({})", r.field, d.f, d.g, d.reason)));
    }
    summarize("monic pairs compared", tested, failures)
}

fn frobenius_on(k: &FiniteField, count: usize, rng: &mut ChaCha8Rng, failures: &mut Vec<String>) -> usize {
    let elems = k.elements().unwrap();
    let x2 = UniPoly::monomial(k, k.one(), 2);
    let mut checked = 0;
    for _ in 0..count {
        let d = rng.gen_range(1..=4);
        let f0 = k.sample_poly(rng, d);
        for a in &elems {
            for b in &elems {
                let f = f0.compose(&x2);
                let g = f0.compose(&x2.affine(a, b));
                let q = BiPoly::from_terms(k, &[(2, 0, k.one()), (0, 2, k.neg(a)), (0, 0, k.neg(b))]);
                let divides = matches!(divide_monic_in_x(&difference_poly(&f, &g).unwrap(), &q), Ok(Some(_)));
                let (mut rf, mut rg, steps) = reduce_frobenius(&f, &g);
                let reduced = !(rf.is_polynomial_in_power(2) && rg.is_polynomial_in_power(2));
                for _ in &steps {
                    rf = frobenius_lift(&rf);
                    rg = frobenius_lift(&rg);
                }
                if !divides || !reduced || rf != f || rg != g {
                    failures.push(format!("{} f0 = {f0}, a = {}, b = {}", k.spec(), k.format_elem(a), k.format_elem(b)));
                }
                checked += 1;
            }
        }
    }
    checked
}

pub fn frobenius_paths() -> Outcome {
    let mut rng = rng(5);
    let mut failures = Vec::new();
    let mut n = 0;
    for deg in [1, 2] {
        let k = FiniteField::with_default_modulus(2, deg).unwrap();
        n += frobenius_on(&k, 200, &mut rng, &mut failures);
    }
    summarize("(f0, a, b) instances", n, failures)
}

pub fn round_trips() -> Outcome {
    let r = round_trip(20, 7);
    summarize(&format!("constructions ({} matched by rebuilding)", r.rebuilt), r.built, r.failures)
}

/// Elements of the group generated by `gens`, by closure.
fn closure<F: Field>(gens: &[Pgl2<F>]) -> usize {
    let k = gens[0].field();
    let mut seen: HashSet<Vec<F::Elem>> = HashSet::new();
    let mut frontier = vec![Pgl2::identity(k)];
    seen.insert(Pgl2::identity(k).entries().to_vec());
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y.entries().to_vec()) {
                frontier.push(y);
            }
        }
    }
    seen.len()
}

fn random_pgl2(k: &FiniteField, rng: &mut ChaCha8Rng) -> Pgl2<FiniteField> {
    loop {
        let e = [k.sample(rng), k.sample(rng), k.sample(rng), k.sample(rng)];
        if let Ok(m) = Pgl2::new(k, e[0], e[1], e[2], e[3]) {
            return m;
        }
    }
}

pub fn pgl2_suite() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for n in 2..=20u64 {
        let p = (1..).map(|j| j * n + 1).find(|p| quadfact::field::is_prime(*p)).unwrap();
        let k = FiniteField::prime(p).unwrap();
        let (a, b) = dihedral_generators(&k, n).unwrap();
        let c = a.mul(&b);
        let odd = n >> n.trailing_zeros();
        let i = (odd - 1) / 2;
        let b2 = b.conj(&c.pow(i));
        let identity = a.mul(&b2) == c.pow(2 * i + 1);
        let sylow = closure(&[a.clone(), b2]) as u64 == 2 * (n / odd);
        let witness = quadfact::pgl2::sylow2_witness(&a, &b).ok() == Some(i);
        if !(identity && sylow && witness && closure(&[a, b]) as u64 == 2 * n) {
            failures.push(format!("D_{n} over GF({p})"));
        }
        count += 1;
    }
    let mut rng = rng(11);
    for (p, d) in [(5, 1), (3, 2)] {
        let k = FiniteField::with_default_modulus(p, d).unwrap();
        let mut elems = 0;
        while elems < 100 {
            let m = random_pgl2(&k, &mut rng);
            let Ok((s, form)) = cyclic_normal_form(&m) else { continue };
            let ok = m.conj(&s) == form.matrix(&k)
                && m.order().unwrap() == form.matrix(&k).order().unwrap()
                && match form {
                    CyclicForm::Diagonal(_) => true,
                    CyclicForm::Unipotent => m.order().unwrap() == p,
                };
            if !ok {
                failures.push(format!("cyclic form of {m:?}"));
            }
            elems += 1;
        }
        let mut pairs = 0;
        while pairs < 100 {
            let s = random_pgl2(&k, &mut rng);
            let (tau, rho) = if pairs % 2 == 0 {
                let divisors: Vec<u64> = (3..k.order()).filter(|n| (k.order() - 1) % n == 0).collect();
                let n = divisors[rng.gen_range(0..divisors.len())];
                let (a, b) = dihedral_generators(&k, n).unwrap();
                (a.clone(), a.mul(&b))
            } else {
                let b = k.sample(&mut rng);
                let tau = Pgl2::new(&k, k.one(), b, k.zero(), k.neg(&k.one())).unwrap();
                (tau, Pgl2::from_i64(&k, [1, 1, 0, 1]).unwrap())
            };
            let (tau, rho) = (tau.conj(&s), rho.conj(&s));
            match dihedral_normal_form(&tau, &rho) {
                Ok((sigma, case)) => {
                    let (tf, rf) = match &case {
                        DihedralCase::Tame { zeta } => (Pgl2::from_i64(&k, [0, 1, 1, 0]).unwrap(), Pgl2::diag(&k, *zeta).unwrap()),
                        DihedralCase::OddWild => {
                            (Pgl2::from_i64(&k, [1, 0, 0, -1]).unwrap(), Pgl2::from_i64(&k, [1, 1, 0, 1]).unwrap())
                        }
                        DihedralCase::EvenWild { .. } => unreachable!("odd characteristic"),
                    };
                    if tau.conj(&sigma) != tf || rho.conj(&sigma) != rf {
                        failures.push(format!("dihedral form over {}", k.spec()));
                    }
                }
                Err(e) => failures.push(format!("dihedral form over {}: {e}", k.spec())),
            }
            pairs += 1;
        }
        count += 200;
    }
    summarize("group checks", count, failures)
}

fn tame_degree(p: u64, rng: &mut ChaCha8Rng) -> usize {
    loop {
        let d = rng.gen_range(1..=5);
        if p == 0 || d as u64 % p != 0 {
            return d;
        }
    }
}

fn decompositions_on<F: Sample>(k: &F, count: usize, rng: &mut ChaCha8Rng, failures: &mut Vec<String>) {
    let p = k.characteristic();
    for _ in 0..count {
        let (dp, d1) = (tame_degree(p, rng), tame_degree(p, rng));
        let phi = k.sample_poly(rng, dp);
        let f1 = k.sample_poly(rng, d1);
        let g1 = k.sample_poly(rng, d1);
        let (f, g) = (phi.compose(&f1), phi.compose(&g1));
        let ok_right = right_component(&f, d1).and_then(|r| {
            let l = left_component(&f, &r)?;
            let normalized = f1.add_constant(&k.neg(&f1.coeff(0))).monic();
            Some(l.compose(&r) == f && r == normalized)
        });
        let ok_common = common_left_component(&f, &g)
            .is_ok_and(|d| d.phi.compose(&d.f1) == f && d.phi.compose(&d.g1) == g && d.phi.degree() >= dp);
        if ok_right != Some(true) || !ok_common {
            failures.push(format!("{}: phi = {phi}, f1 = {f1}, g1 = {g1}", k.spec()));
        }
    }
}

pub fn decompositions() -> Outcome {
    let mut rng = rng(13);
    let mut failures = Vec::new();
    decompositions_on(&FiniteField::prime(5).unwrap(), 200, &mut rng, &mut failures);
    decompositions_on(&Rationals, 200, &mut rng, &mut failures);
    summarize("random tame decompositions", 400, failures)
}
