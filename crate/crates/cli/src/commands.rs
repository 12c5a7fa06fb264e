use std::fmt;
use std::fmt::Write as _;

use quadfact::bipoly::{dickson_diff_factors, dickson_sum_factors, difference_poly, quad_factors_exhaustive, BiPoly};
use quadfact::classify::{
    classify_pair_with, construct_case, verify_certificate, Case, CaseParams, ClassifyOptions, DEFAULT_BUDGET,
};
use quadfact::field::parse_field_spec;
use quadfact::oracle::{exhaustive_agreement, identity_suite, AgreementBudget, Mutation};
use quadfact::parse::parse_poly;
use quadfact::pgl2::{cyclic_normal_form, dihedral_normal_form, CyclicForm, DihedralCase, Pgl2};
use quadfact::unipoly::{common_decompositions, left_component, right_components, UniPoly};
use quadfact::{AnyField, Error, Field};
use serde::Serialize;

use crate::config::Config;
use crate::{Cli, Command, ConstructArgs};

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Usage(String),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Lib(Error::Parse { .. } | Error::InvalidField(_)) | CliError::Usage(_) => 2,
            CliError::Lib(Error::BudgetExceeded(_)) => 4,
            CliError::Lib(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type Res<T> = Result<T, CliError>;

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, code: 0 }
    }
}

struct Settings {
    json: bool,
    budget: u64,
    max_pairs: Option<u64>,
}

pub fn run(cli: &Cli) -> Res<Output> {
    let config = Config::load(cli.config.as_deref())?;
    let spec = cli.field.clone().or(config.field).unwrap_or_else(|| "Q".into());
    let settings = Settings {
        json: cli.json || config.json.unwrap_or(false),
        budget: cli.budget.or(config.budget).unwrap_or(DEFAULT_BUDGET),
        max_pairs: config.max_pairs,
    };
    if let Command::IdentitySuite { max_n } = cli.command {
        return identities(max_n, &settings);
    }
    match parse_field_spec(&spec)? {
        AnyField::Rationals(k) => dispatch(&k, &cli.command, &settings),
        AnyField::Finite(k) => dispatch(&k, &cli.command, &settings),
    }
}

fn dispatch<F: Field>(k: &F, cmd: &Command, s: &Settings) -> Res<Output> {
    match cmd {
        Command::Dickson { n, a, diff, sum } => dickson(k, *n, a, *diff, *sum, s),
        Command::Factor { f, g } => factor(k, f, g, s),
        Command::Classify { f, g } => classify(k, f, g, s),
        Command::Construct { case, params } => construct(k, case, params, s),
        Command::Decompose { f, g } => decompose(k, f, g.as_deref(), s),
        Command::Pgl2NormalForm { entries, rho } => pgl2(k, entries, rho.as_deref(), s),
        Command::VerifyTheorems { min_deg, max_deg, max_pairs, start } => {
            let budget = AgreementBudget {
                max_field_size: s.budget,
                max_pairs: max_pairs.or(s.max_pairs).unwrap_or(u64::MAX),
                start: *start,
            };
            verify_theorems(k, *min_deg, *max_deg, &budget, s)
        }
        Command::IdentitySuite { .. } => unreachable!("handled before the field is parsed"),
    }
}

fn poly<F: Field>(k: &F, text: &str) -> Res<UniPoly<F>> {
    Ok(parse_poly(text, k)?)
}

fn elem<F: Field>(k: &F, text: &str) -> Res<F::Elem> {
    let p = poly(k, text)?;
    if !p.is_constant() {
        return Err(CliError::Usage(format!("`{text}` is not a field element")));
    }
    Ok(p.coeff(0))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data");
    s.push('\n');
    s
}

fn lines(items: &[String]) -> String {
    items.iter().map(|l| format!("{l}\n")).collect()
}

#[derive(Serialize)]
struct PolyList {
    field: String,
    polys: Vec<String>,
}

fn dickson<F: Field>(k: &F, n: usize, a: &str, diff: bool, sum: bool, s: &Settings) -> Res<Output> {
    let a = elem(k, a)?;
    let polys: Vec<String> = if diff || sum {
        let fs = if diff { dickson_diff_factors(k, n, &a)? } else { dickson_sum_factors(k, n, &a)? };
        fs.iter().map(BiPoly::to_string).collect()
    } else {
        vec![quadfact::unipoly::dickson(k, n, &a).to_string()]
    };
    Ok(Output::ok(if s.json { to_json(&PolyList { field: k.spec(), polys }) } else { lines(&polys) }))
}

#[derive(Serialize)]
struct FactorJson {
    field: String,
    f: String,
    g: String,
    factors: Vec<Vec<String>>,
    factor_text: Vec<String>,
}

fn nonconstant_pair<F: Field>(k: &F, f: &str, g: &str) -> Res<(UniPoly<F>, UniPoly<F>)> {
    let (f, g) = (poly(k, f)?, poly(k, g)?);
    if f.is_constant() || g.is_constant() {
        return Err(Error::Precondition("f and g must be nonconstant".into()).into());
    }
    Ok((f, g))
}

fn factor<F: Field>(k: &F, f: &str, g: &str, s: &Settings) -> Res<Output> {
    let (f, g) = nonconstant_pair(k, f, g)?;
    if !k.is_finite() {
        return Err(Error::Constraint("exhaustive search needs a finite field".into()).into());
    }
    let found = quad_factors_exhaustive(&difference_poly(&f, &g)?, s.budget)?;
    let text: Vec<String> = found.iter().map(|q| q.to_bipoly(k).to_string()).collect();
    Ok(Output::ok(if s.json {
        to_json(&FactorJson {
            field: k.spec(),
            f: f.to_string(),
            g: g.to_string(),
            factors: found.iter().map(|q| q.strings(k)).collect(),
            factor_text: text,
        })
    } else if text.is_empty() {
        "no factor of degree at most 2\n".into()
    } else {
        lines(&text)
    }))
}

fn classify<F: Field>(k: &F, f: &str, g: &str, s: &Settings) -> Res<Output> {
    let (f, g) = nonconstant_pair(k, f, g)?;
    let cert = classify_pair_with(&f, &g, &ClassifyOptions { max_field_size: s.budget })?;
    let report = verify_certificate(&cert, &f, &g);
    let code = if report.ok() { 0 } else { 5 };
    if s.json {
        let mut text = cert.to_json(Some(&report));
        text.push('\n');
        return Ok(Output { text, code });
    }
    let mut out = String::new();
    let _ = writeln!(out, "case: {}", cert.case);
    let _ = writeln!(out, "field: {}", k.spec());
    let _ = writeln!(out, "phi: {}\nf1: {}\ng1: {}", cert.phi, cert.f1, cert.g1);
    for (name, value) in &cert.params {
        let _ = writeln!(out, "param {name} = {}", value.render(k));
    }
    for q in cert.factor_strings() {
        let _ = writeln!(out, "factor: {q}");
    }
    if !cert.also.is_empty() {
        let also: Vec<&str> = cert.also.iter().map(|c| c.tag()).collect();
        let _ = writeln!(out, "also: {}", also.join(", "));
    }
    for step in &cert.transcript {
        let _ = writeln!(out, "frobenius: f = {}, g = {}", step.f, step.g);
    }
    for note in &cert.notes {
        let _ = writeln!(out, "note: {note}");
    }
    for (name, pass) in &report.checks {
        let _ = writeln!(out, "check {name}: {}", if *pass { "pass" } else { "FAIL" });
    }
    Ok(Output { text: out, code })
}

#[derive(Serialize)]
struct ConstructJson {
    case: String,
    field: String,
    f: String,
    g: String,
    factors: Vec<Vec<String>>,
    factor_text: Vec<String>,
}

fn case_params<F: Field>(k: &F, args: &ConstructArgs) -> Res<CaseParams<F>> {
    let mut p = CaseParams::new(k);
    let elems = [
        (&args.a, &mut p.a),
        (&args.b, &mut p.b),
        (&args.alpha, &mut p.alpha),
        (&args.beta, &mut p.beta),
        (&args.gamma, &mut p.gamma),
        (&args.delta, &mut p.delta),
    ];
    for (text, slot) in elems {
        if let Some(t) = text {
            *slot = elem(k, t)?;
        }
    }
    for (text, slot) in [(&args.phi, &mut p.phi), (&args.u, &mut p.u), (&args.v, &mut p.v)] {
        if let Some(t) = text {
            *slot = poly(k, t)?;
        }
    }
    if let Some(t) = &args.sigma {
        p.sigma = Some(elem(k, t)?);
    }
    if let Some(t) = &args.inner {
        p.inner = Some(t.parse::<Case>()?);
    }
    p.n = args.n.unwrap_or(p.n);
    p.steps = args.steps.unwrap_or(p.steps);
    Ok(p)
}

fn construct<F: Field>(k: &F, case: &str, args: &ConstructArgs, s: &Settings) -> Res<Output> {
    let case: Case = case.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?;
    let params = case_params(k, args)?;
    let con = construct_case(case, k, &params)?;
    let text: Vec<String> = con.factors.iter().map(|q| q.to_bipoly(k).to_string()).collect();
    if s.json {
        return Ok(Output::ok(to_json(&ConstructJson {
            case: case.tag().into(),
            field: k.spec(),
            f: con.f.to_string(),
            g: con.g.to_string(),
            factors: con.factors.iter().map(|q| q.strings(k)).collect(),
            factor_text: text,
        })));
    }
    let mut out = format!("case: {case}\nf: {}\ng: {}\n", con.f, con.g);
    for t in text {
        let _ = writeln!(out, "factor: {t}");
    }
    Ok(Output::ok(out))
}

#[derive(Serialize)]
struct DecompositionJson {
    phi: String,
    f1: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    g1: Option<String>,
}

#[derive(Serialize)]
struct DecomposeJson {
    field: String,
    decompositions: Vec<DecompositionJson>,
    notes: Vec<String>,
}

fn decompose<F: Field>(k: &F, f: &str, g: Option<&str>, s: &Settings) -> Res<Output> {
    let f = poly(k, f)?;
    if f.is_constant() {
        return Err(Error::Precondition("f must be nonconstant".into()).into());
    }
    let mut found = Vec::new();
    let mut notes = Vec::new();
    if let Some(g) = g {
        let g = poly(k, g)?;
        let (decs, truncated) = common_decompositions(&f, &g)?;
        if truncated {
            notes.push("wild decomposition search exceeded its limit".to_string());
        }
        found.extend(decs.iter().map(|d| DecompositionJson {
            phi: d.phi.to_string(),
            f1: d.f1.to_string(),
            g1: Some(d.g1.to_string()),
        }));
    } else {
        let n = f.degree();
        for d in (1..=n).rev().filter(|d| n % d == 0) {
            match right_components(&f, d) {
                Ok(rs) => {
                    for r in rs {
                        if let Some(l) = left_component(&f, &r) {
                            found.push(DecompositionJson { phi: l.to_string(), f1: r.to_string(), g1: None });
                        }
                    }
                }
                Err(Error::BudgetExceeded(m)) => notes.push(format!("degree {d}: {m}")),
                Err(e) => return Err(e.into()),
            }
        }
    }
    if s.json {
        return Ok(Output::ok(to_json(&DecomposeJson { field: k.spec(), decompositions: found, notes })));
    }
    let mut out = String::new();
    for d in &found {
        match &d.g1 {
            Some(g1) => {
                let _ = writeln!(out, "phi = {}, f1 = {}, g1 = {g1}", d.phi, d.f1);
            }
            None => {
                let _ = writeln!(out, "phi = {}, f1 = {}", d.phi, d.f1);
            }
        }
    }
    for n in notes {
        let _ = writeln!(out, "note: {n}");
    }
    Ok(Output::ok(out))
}

fn matrix<F: Field>(k: &F, entries: &[String]) -> Res<Pgl2<F>> {
    let e: Vec<F::Elem> = entries.iter().map(|t| elem(k, t)).collect::<Res<_>>()?;
    let [a, b, c, d]: [F::Elem; 4] = e.try_into().map_err(|_| CliError::Usage("a matrix needs 4 entries".into()))?;
    Ok(Pgl2::new(k, a, b, c, d)?)
}

fn render<F: Field>(m: &Pgl2<F>) -> Vec<String> {
    m.entries().iter().map(|e| m.field().format_elem(e)).collect()
}

#[derive(Serialize)]
struct NormalFormJson {
    field: String,
    order: u64,
    conjugator: Vec<String>,
    form: String,
    images: Vec<Vec<String>>,
}

fn pgl2<F: Field>(k: &F, entries: &[String], rho: Option<&[String]>, s: &Settings) -> Res<Output> {
    if !k.is_finite() {
        return Err(Error::Constraint("PGL2 normal forms need a finite field".into()).into());
    }
    let m = matrix(k, entries)?;
    let json = match rho {
        None => {
            let (sigma, form) = cyclic_normal_form(&m)?;
            let name = match &form {
                CyclicForm::Diagonal(z) => format!("diagonal {}", k.format_elem(z)),
                CyclicForm::Unipotent => "unipotent".into(),
            };
            NormalFormJson {
                field: k.spec(),
                order: m.order()?,
                conjugator: render(&sigma),
                form: name,
                images: vec![render(&m.conj(&sigma))],
            }
        }
        Some(rho) => {
            let rho = matrix(k, rho)?;
            let (sigma, case) = dihedral_normal_form(&m, &rho)?;
            let name = match &case {
                DihedralCase::Tame { zeta } => format!("tame {}", k.format_elem(zeta)),
                DihedralCase::OddWild => "odd wild".into(),
                DihedralCase::EvenWild { b } => format!("even wild {}", k.format_elem(b)),
            };
            NormalFormJson {
                field: k.spec(),
                order: rho.order()?,
                conjugator: render(&sigma),
                form: name,
                images: vec![render(&m.conj(&sigma)), render(&rho.conj(&sigma))],
            }
        }
    };
    if s.json {
        return Ok(Output::ok(to_json(&json)));
    }
    let mut out = format!("order: {}\nform: {}\nconjugator: [{}]\n", json.order, json.form, json.conjugator.join(", "));
    for img in &json.images {
        let _ = writeln!(out, "image: [{}]", img.join(", "));
    }
    Ok(Output::ok(out))
}

fn verify_theorems<F: Field>(k: &F, lo: usize, hi: usize, budget: &AgreementBudget, s: &Settings) -> Res<Output> {
    if lo == 0 || lo > hi {
        return Err(CliError::Usage("need 1 <= --min-deg <= --max-deg".into()));
    }
    let r = exhaustive_agreement(k, lo..=hi, lo..=hi, budget)?;
    let code = if !r.disagreements.is_empty() {
        5
    } else if r.cursor.is_some() {
        4
    } else {
        0
    };
    if s.json {
        return Ok(Output { text: to_json(&r), code });
    }
    let mut out = format!(
        "{}: {} of {} pairs tested, {} with a factor, {} disagreements\n",
        r.field,
        r.pairs_tested,
        r.pairs_total,
        r.pairs_with_factor,
        r.disagreements.len()
    );
    for (case, n) in &r.per_case {
        let _ = writeln!(out, "  {case}: {n}");
    }
    for d in &r.disagreements {
        let _ = writeln!(out, "disagreement: f = {}, g = {}: {}", d.f, d.g, d.reason);
    }
    if let Some(c) = r.cursor {
        let _ = writeln!(out, "incomplete; resume with --start {c}");
    }
    Ok(Output { text: out, code })
}

fn identities(max_n: usize, s: &Settings) -> Res<Output> {
    let r = identity_suite(max_n, Mutation::None);
    let code = if r.pass { 0 } else { 5 };
    if s.json {
        return Ok(Output { text: to_json(&r), code });
    }
    let failed: Vec<String> = r.failures().map(|c| format!("FAIL {} {}", c.name, c.instance)).collect();
    let mut out = format!("{} identity instances, {} failed\n", r.checks.len(), failed.len());
    out.push_str(&lines(&failed));
    Ok(Output { text: out, code })
}
