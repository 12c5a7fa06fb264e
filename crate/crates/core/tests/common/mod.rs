#![allow(dead_code)]

pub mod criteria;

use std::collections::BTreeSet;

use quadfact::bipoly::QuadPoly;
use quadfact::classify::{classify_pair, construct_case, verify_certificate, Case, CaseParams, Certificate, Construction};
use quadfact::unipoly::UniPoly;
use quadfact::{Field, FiniteField, Rationals};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Draws field elements; rationals come from small numerators and denominators.
pub trait Sample: Field {
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Elem;

    fn sample_nonzero(&self, rng: &mut ChaCha8Rng) -> Self::Elem {
        loop {
            let e = self.sample(rng);
            if !self.is_zero(&e) {
                return e;
            }
        }
    }

    fn sample_poly(&self, rng: &mut ChaCha8Rng, deg: usize) -> UniPoly<Self> {
        let mut c: Vec<Self::Elem> = (0..deg).map(|_| self.sample(rng)).collect();
        c.push(self.sample_nonzero(rng));
        UniPoly::new(self, c)
    }
}

impl Sample for FiniteField {
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Elem {
        self.elem(rng.gen_range(0..self.order()))
    }
}

impl Sample for Rationals {
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Elem {
        self.ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3))
    }
}

pub fn sample_params<F: Sample>(case: Case, k: &F, rng: &mut ChaCha8Rng) -> CaseParams<F> {
    let mut p = CaseParams::new(k);
    let ch = k.characteristic();
    p.a = k.sample_nonzero(rng);
    p.b = k.sample(rng);
    p.alpha = k.sample_nonzero(rng);
    p.beta = k.sample(rng);
    p.gamma = k.sample_nonzero(rng);
    p.delta = k.sample(rng);
    p.phi = {
        let d = rng.gen_range(1..=2);
        k.sample_poly(rng, d)
    };
    p.u = k.sample_poly(rng, 2);
    p.v = {
        let d = rng.gen_range(1..=2);
        k.sample_poly(rng, d)
    };
    p.sigma = Some(k.sample_nonzero(rng));
    p.n = match case {
        Case::T1b => [4, 8][rng.gen_range(0..2)],
        Case::T2c => 2 * rng.gen_range(1..=4),
        _ => rng.gen_range(3..=7),
    };
    if case == Case::T3b {
        // the outer polynomial is the f0 of f0(X^2)
        p.phi = {
        let d = rng.gen_range(1..=2);
        k.sample_poly(rng, d)
    };
    }
    if case == Case::T3a {
        p.inner = Some([Case::T1a, Case::T2a, Case::T2bI][rng.gen_range(0..3)]);
    }
    if ch != 0 && matches!(case, Case::T2bI) && p.n as u64 % ch == 0 {
        p.n += 1;
    }
    p
}

/// Fields on which a case is sampled.
pub fn fields_for(case: Case) -> (&'static [(u64, u32)], bool) {
    match case {
        Case::T1a | Case::T2a | Case::T2bI | Case::T2c | Case::T1b => (&[(3, 1), (5, 1), (3, 2), (2, 2)], true),
        Case::T2bII | Case::T2bIII | Case::T2bIV | Case::T2d => (&[(3, 1), (5, 1), (3, 2)], false),
        Case::T2bV | Case::T3b => (&[(2, 2)], false),
        Case::T3a => (&[(3, 1), (5, 1), (3, 2), (2, 2)], false),
        Case::NoQuadFactor | Case::Undecided => (&[], false),
    }
}

pub const CONSTRUCTIBLE: [Case; 12] = [
    Case::T1a,
    Case::T1b,
    Case::T2a,
    Case::T2bI,
    Case::T2bII,
    Case::T2bIII,
    Case::T2bIV,
    Case::T2bV,
    Case::T2c,
    Case::T2d,
    Case::T3a,
    Case::T3b,
];

/// Same tag (or `T2c` for a constructed `T1b`), an identical factor set, or
/// a certificate whose own parameters rebuild the same pair and exactly its
/// factor set under its tag.
pub fn compatible<F: Field>(con: &Construction<F>, cert: &Certificate<F>) -> bool {
    let set = |fs: &[QuadPoly<F::Elem>]| fs.iter().cloned().collect::<BTreeSet<_>>();
    if cert.case == con.case || (con.case == Case::T1b && cert.case == Case::T2c) {
        return true;
    }
    if set(&con.factors) == set(&cert.factors) {
        return true;
    }
    rebuilds(cert, &con.f, &con.g)
}

/// `construct_case(cert.case, cert.case_params())` gives `(f, g)` and the
/// certificate's factors.
pub fn rebuilds<F: Field>(cert: &Certificate<F>, f: &UniPoly<F>, g: &UniPoly<F>) -> bool {
    let Some(params) = cert.case_params() else { return false };
    match construct_case(cert.case, &cert.field, &params) {
        Ok(again) => again.f == *f && again.g == *g && again.factors == cert.factors,
        Err(_) => false,
    }
}

#[derive(Debug, Default)]
pub struct RoundTrip {
    pub built: usize,
    /// Tag differed and the factor sets differed; matched through [`rebuilds`].
    pub rebuilt: usize,
    pub failures: Vec<String>,
}

fn try_once<F: Sample>(case: Case, k: &F, rng: &mut ChaCha8Rng, out: &mut RoundTrip) -> bool {
    let params = sample_params(case, k, rng);
    let Ok(con) = construct_case(case, k, &params) else { return false };
    match classify_pair(&con.f, &con.g) {
        Ok(cert) => {
            let report = verify_certificate(&cert, &con.f, &con.g);
            let same = cert.case == con.case || (con.case == Case::T1b && cert.case == Case::T2c);
            if !same && con.factors != cert.factors {
                out.rebuilt += 1;
            }
            if !report.ok() || !compatible(&con, &cert) {
                out.failures.push(format!(
                    "{case} over {}: f = {}, g = {} -> {} {:?} (constructed {:?}, got {:?})",
                    k.spec(),
                    con.f,
                    con.g,
                    cert.case,
                    report.failures(),
                    con.factors.iter().map(|q| q.to_bipoly(k).to_string()).collect::<Vec<_>>(),
                    cert.factor_strings(),
                ));
            }
        }
        Err(e) => out.failures.push(format!("{case} over {}: classify error {e}", k.spec())),
    }
    true
}

/// `per_case` successful constructions of each case, cycling through its fields.
pub fn round_trip(per_case: usize, seed: u64) -> RoundTrip {
    let mut out = RoundTrip::default();
    let mut rng = rng(seed);
    for case in CONSTRUCTIBLE {
        let (fields, with_q) = fields_for(case);
        let finite: Vec<FiniteField> =
            fields.iter().map(|(p, d)| FiniteField::with_default_modulus(*p, *d).unwrap()).collect();
        let slots = finite.len() + with_q as usize;
        let mut got = 0;
        for attempt in 0..per_case * 400 {
            if got == per_case {
                break;
            }
            let built = match finite.get(attempt % slots) {
                Some(k) => try_once(case, k, &mut rng, &mut out),
                None => try_once(case, &Rationals, &mut rng, &mut out),
            };
            got += built as usize;
        }
        out.built += got;
        if got < per_case {
            out.failures.push(format!("{case}: only {got} of {per_case} parameter sets constructible"));
        }
    }
    out
}
