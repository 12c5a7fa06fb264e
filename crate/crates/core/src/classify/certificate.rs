use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bipoly::QuadPoly;
use crate::error::Error;
use crate::field::Field;
use crate::unipoly::UniPoly;

use super::VerifyReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    T1a,
    T1b,
    T2a,
    T2bI,
    T2bII,
    T2bIII,
    T2bIV,
    T2bV,
    T2c,
    T2d,
    T3a,
    T3b,
    NoQuadFactor,
    Undecided,
}

impl Case {
    pub const ALL: [Case; 14] = [
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
        Case::NoQuadFactor,
        Case::Undecided,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Case::T1a => "T1a",
            Case::T1b => "T1b",
            Case::T2a => "T2a",
            Case::T2bI => "T2b-i",
            Case::T2bII => "T2b-ii",
            Case::T2bIII => "T2b-iii",
            Case::T2bIV => "T2b-iv",
            Case::T2bV => "T2b-v",
            Case::T2c => "T2c",
            Case::T2d => "T2d",
            Case::T3a => "T3a",
            Case::T3b => "T3b",
            Case::NoQuadFactor => "NoQuadFactor",
            Case::Undecided => "Undecided",
        }
    }

    /// Whether a certificate of this case exhibits a factor.
    pub fn is_factor_bearing(self) -> bool {
        !matches!(self, Case::NoQuadFactor | Case::Undecided)
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Case::ALL
            .into_iter()
            .find(|c| c.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown case tag `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Param<F: Field> {
    Int(u64),
    Elem(F::Elem),
    Poly(UniPoly<F>),
    Text(String),
}

impl<F: Field> Param<F> {
    pub fn render(&self, k: &F) -> String {
        match self {
            Param::Int(n) => n.to_string(),
            Param::Elem(e) => k.format_elem(e),
            Param::Poly(p) => p.to_string(),
            Param::Text(t) => t.clone(),
        }
    }
}

/// One reduction `(f, g) -> (f0, g0)` with `f = f0^p`, `g = g0^p`; holds the
/// pair before the step.
#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusStep<F: Field> {
    pub f: UniPoly<F>,
    pub g: UniPoly<F>,
}

/// `f = phi(f1)`, `g = phi(g1)` after undoing `transcript`, and each factor
/// divides `f1(X) - g1(Y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate<F: Field> {
    pub field: F,
    pub case: Case,
    pub phi: UniPoly<F>,
    pub f1: UniPoly<F>,
    pub g1: UniPoly<F>,
    pub params: BTreeMap<String, Param<F>>,
    pub factors: Vec<QuadPoly<F::Elem>>,
    /// Outermost step first.
    pub transcript: Vec<FrobeniusStep<F>>,
    /// Further cases matched by the same decomposition.
    pub also: Vec<Case>,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
struct CertificateJson {
    case: String,
    p: u64,
    field: String,
    phi: String,
    f1: String,
    g1: String,
    params: BTreeMap<String, String>,
    factors: Vec<Vec<String>>,
    factor_text: Vec<String>,
    also: Vec<String>,
    transcript: Vec<String>,
    notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    checks: Option<BTreeMap<String, bool>>,
}

impl<F: Field> Certificate<F> {
    /// The trivial decomposition `phi = X` with no factors.
    pub fn empty(k: &F, case: Case, f: &UniPoly<F>, g: &UniPoly<F>) -> Self {
        Certificate {
            field: k.clone(),
            case,
            phi: UniPoly::x(k),
            f1: f.clone(),
            g1: g.clone(),
            params: BTreeMap::new(),
            factors: vec![],
            transcript: vec![],
            also: vec![],
            notes: vec![],
        }
    }

    pub fn set(&mut self, name: &str, value: Param<F>) {
        self.params.insert(name.to_string(), value);
    }

    pub fn elem(&self, name: &str) -> Option<&F::Elem> {
        match self.params.get(name) {
            Some(Param::Elem(e)) => Some(e),
            _ => None,
        }
    }

    pub fn int(&self, name: &str) -> Option<u64> {
        match self.params.get(name) {
            Some(Param::Int(n)) => Some(*n),
            _ => None,
        }
    }

    pub fn poly(&self, name: &str) -> Option<&UniPoly<F>> {
        match self.params.get(name) {
            Some(Param::Poly(p)) => Some(p),
            _ => None,
        }
    }

    pub fn text(&self, name: &str) -> Option<&str> {
        match self.params.get(name) {
            Some(Param::Text(t)) => Some(t),
            _ => None,
        }
    }

    /// Prepends a reduction step; factor-bearing cases become `T3a`.
    pub(crate) fn wrap_frobenius(mut self, step: FrobeniusStep<F>) -> Self {
        self.transcript.insert(0, step);
        if self.case.is_factor_bearing() && self.case != Case::T3a {
            let inner = self.case;
            self.set("inner_case", Param::Text(inner.tag().into()));
            self.case = Case::T3a;
        }
        self
    }

    /// The pair `(phi(f1), phi(g1))` lifted through the transcript.
    pub fn recompose(&self) -> (UniPoly<F>, UniPoly<F>) {
        let mut f = self.phi.compose(&self.f1);
        let mut g = self.phi.compose(&self.g1);
        for _ in &self.transcript {
            f = super::frobenius_lift(&f);
            g = super::frobenius_lift(&g);
        }
        (f, g)
    }

    pub fn factor_strings(&self) -> Vec<String> {
        self.factors.iter().map(|q| q.to_bipoly(&self.field).to_string()).collect()
    }

    pub fn to_json(&self, report: Option<&VerifyReport>) -> String {
        let k = &self.field;
        let transcript = self
            .transcript
            .iter()
            .map(|s| format!("frobenius: f = {}, g = {}", s.f, s.g))
            .collect();
        let json = CertificateJson {
            case: self.case.tag().into(),
            p: k.characteristic(),
            field: k.spec(),
            phi: self.phi.to_string(),
            f1: self.f1.to_string(),
            g1: self.g1.to_string(),
            params: self.params.iter().map(|(n, v)| (n.clone(), v.render(k))).collect(),
            factors: self.factors.iter().map(|q| q.strings(k)).collect(),
            factor_text: self.factor_strings(),
            also: self.also.iter().map(|c| c.tag().to_string()).collect(),
            transcript,
            notes: self.notes.clone(),
            checks: report.map(|r| r.checks.iter().cloned().collect()),
        };
        serde_json::to_string_pretty(&json).expect("plain data")
    }
}
