//! Exhaustive experiments: the classifier against brute force, and batch
//! checks of the factorization identities.

mod identities;

pub use identities::{identity_suite, IdentityCheck, IdentityReport, Mutation};

use std::collections::{BTreeMap, HashSet};
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::bipoly::{difference_poly, quad_factors_exhaustive};
use crate::classify::{classify_pair_with, verify_certificate, ClassifyOptions};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::unipoly::UniPoly;

/// Limits for [`exhaustive_agreement`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AgreementBudget {
    /// Largest field enumerated by the brute-force search.
    pub max_field_size: u64,
    /// Pairs examined by one call; the report carries a cursor when more remain.
    pub max_pairs: u64,
    /// First pair index, from a previous report's cursor.
    pub start: u64,
}

impl Default for AgreementBudget {
    fn default() -> Self {
        AgreementBudget { max_field_size: crate::classify::DEFAULT_BUDGET, max_pairs: u64::MAX, start: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub f: String,
    pub g: String,
    pub oracle_factors: Vec<String>,
    pub verdict: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AgreementReport {
    pub field: String,
    pub deg_f: (usize, usize),
    pub deg_g: (usize, usize),
    /// Only monic `f` and `g` are enumerated: scaling both by one constant
    /// does not change the factors.
    pub note: String,
    pub pairs_total: u64,
    pub pairs_tested: u64,
    pub pairs_with_factor: u64,
    pub per_case: BTreeMap<String, u64>,
    pub disagreements: Vec<Disagreement>,
    /// Index of the next untested pair, when the pair budget ran out.
    pub cursor: Option<u64>,
    pub pass: bool,
}

/// Monic polynomials of degree `d`, lower coefficients in lexicographic order.
pub fn monic_polys<F: Field>(k: &F, d: usize) -> Result<Vec<UniPoly<F>>> {
    let elems = k.elements().ok_or_else(|| Error::Precondition("finite field required".into()))?;
    let q = elems.len();
    let count = q.checked_pow(d as u32).filter(|c| *c <= 1 << 24).ok_or_else(|| {
        Error::BudgetExceeded(format!("{q}^{d} monic polynomials of degree {d}"))
    })?;
    let mut out = Vec::with_capacity(count);
    for mut idx in 0..count {
        let mut coeffs = vec![k.zero(); d + 1];
        coeffs[d] = k.one();
        for c in coeffs.iter_mut().take(d).rev() {
            *c = elems[idx % q].clone();
            idx /= q;
        }
        out.push(UniPoly::new(k, coeffs));
    }
    Ok(out)
}

fn all_monic<F: Field>(k: &F, range: &RangeInclusive<usize>) -> Result<Vec<UniPoly<F>>> {
    let mut out = Vec::new();
    for d in range.clone().filter(|d| *d >= 1) {
        out.extend(monic_polys(k, d)?);
    }
    Ok(out)
}

enum Outcome {
    Agree { case: String, factor: bool },
    Disagree(Disagreement, String),
}

fn compare<F: Field>(f: &UniPoly<F>, g: &UniPoly<F>, opts: &ClassifyOptions) -> Result<Outcome> {
    let k = f.field();
    let truth = quad_factors_exhaustive(&difference_poly(f, g)?, opts.max_field_size)?;
    let cert = classify_pair_with(f, g, opts)?;
    let tag = cert.case.tag().to_string();
    let witness = |reason: &str| Disagreement {
        f: f.to_string(),
        g: g.to_string(),
        oracle_factors: truth.iter().map(|q| q.to_bipoly(k).to_string()).collect(),
        verdict: tag.clone(),
        reason: reason.into(),
    };
    let known: HashSet<_> = truth.iter().collect();
    let reason = if cert.case.is_factor_bearing() != !truth.is_empty() {
        Some("existence differs")
    } else if !cert.case.is_factor_bearing() && cert.case != crate::classify::Case::NoQuadFactor {
        Some("undecided")
    } else if !cert.factors.iter().all(|q| known.contains(q)) {
        Some("certificate factor unknown to the oracle")
    } else if !verify_certificate(&cert, f, g).ok() {
        Some("certificate does not verify")
    } else {
        None
    };
    Ok(match reason {
        Some(r) => Outcome::Disagree(witness(r), tag),
        None => Outcome::Agree { case: tag, factor: !truth.is_empty() },
    })
}

/// Compares the classifier with the brute-force search on every pair of
/// monic polynomials with degrees in the given ranges.
pub fn exhaustive_agreement<F: Field>(
    k: &F,
    deg_f: RangeInclusive<usize>,
    deg_g: RangeInclusive<usize>,
    budget: &AgreementBudget,
) -> Result<AgreementReport> {
    let q = k.size().ok_or_else(|| Error::Precondition("finite field required".into()))?;
    if q > budget.max_field_size {
        return Err(Error::BudgetExceeded(format!("{} is above the enumeration bound {}", k.spec(), budget.max_field_size)));
    }
    let fs = all_monic(k, &deg_f)?;
    let gs = all_monic(k, &deg_g)?;
    let total = fs.len() as u64 * gs.len() as u64;
    let start = budget.start.min(total);
    let end = start.saturating_add(budget.max_pairs).min(total);
    let opts = ClassifyOptions { max_field_size: budget.max_field_size };
    let outcomes: Vec<Outcome> = (start..end)
        .into_par_iter()
        .map(|i| {
            let (f, g) = (&fs[(i / gs.len() as u64) as usize], &gs[(i % gs.len() as u64) as usize]);
            compare(f, g, &opts)
        })
        .collect::<Result<_>>()?;
    let mut per_case = BTreeMap::new();
    let mut with_factor = 0;
    let mut disagreements = Vec::new();
    for o in outcomes {
        let case = match o {
            Outcome::Agree { case, factor } => {
                with_factor += factor as u64;
                case
            }
            Outcome::Disagree(d, case) => {
                with_factor += !d.oracle_factors.is_empty() as u64;
                disagreements.push(d);
                case
            }
        };
        *per_case.entry(case).or_insert(0) += 1;
    }
    let bounds = |r: &RangeInclusive<usize>| (*r.start(), *r.end());
    Ok(AgreementReport {
        field: k.spec(),
        deg_f: bounds(&deg_f),
        deg_g: bounds(&deg_g),
        note: "monic pairs only".into(),
        pairs_total: total,
        pairs_tested: end - start,
        pairs_with_factor: with_factor,
        per_case,
        pass: disagreements.is_empty(),
        disagreements,
        cursor: (end < total).then_some(end),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    #[test]
    fn empty_range_passes() {
        let f2 = FiniteField::prime(2).unwrap();
        #[allow(clippy::reversed_empty_ranges)]
        let r = exhaustive_agreement(&f2, 3..=2, 1..=2, &AgreementBudget::default()).unwrap();
        assert!(r.pass);
        assert_eq!(r.pairs_tested, 0);
    }

    #[test]
    fn cursor_resumes() {
        let f2 = FiniteField::prime(2).unwrap();
        let mut b = AgreementBudget { max_pairs: 10, ..Default::default() };
        let first = exhaustive_agreement(&f2, 1..=3, 1..=3, &b).unwrap();
        assert_eq!(first.cursor, Some(10));
        b.start = 10;
        b.max_pairs = u64::MAX;
        let rest = exhaustive_agreement(&f2, 1..=3, 1..=3, &b).unwrap();
        assert_eq!(rest.cursor, None);
        assert_eq!(first.pairs_tested + rest.pairs_tested, first.pairs_total);
    }

    #[test]
    fn cubic_pairs_over_f3() {
        let f3 = FiniteField::prime(3).unwrap();
        let r = exhaustive_agreement(&f3, 3..=3, 3..=3, &AgreementBudget::default()).unwrap();
        assert_eq!(r.pairs_tested, 729);
        assert!(r.pass, "{:?}", &r.disagreements[..r.disagreements.len().min(3)]);
    }
}
