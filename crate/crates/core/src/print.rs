//! Rendering in the text grammar accepted by [`crate::parse`].

use crate::bipoly::BiPoly;
use crate::field::Field;
use crate::unipoly::UniPoly;

fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}

/// Joins `(coefficient, monomial)` pairs, highest first.
fn join_terms<F: Field>(k: &F, terms: &[(F::Elem, String)]) -> String {
    let mut out = String::new();
    let several = terms.len() > 1;
    for (i, (c, mono)) in terms.iter().enumerate() {
        let negative = k.is_negative(c);
        let mag = if negative { k.neg(c) } else { c.clone() };
        let body = if mono.is_empty() {
            let s = k.format_elem(&mag);
            if several && k.is_compound(&mag) {
                format!("({s})")
            } else {
                s
            }
        } else if k.is_one(&mag) {
            mono.clone()
        } else if k.is_compound(&mag) {
            format!("({})*{mono}", k.format_elem(&mag))
        } else {
            format!("{}*{mono}", k.format_elem(&mag))
        };
        match (i, negative) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn format_uni<F: Field>(f: &UniPoly<F>, var: &str) -> String {
    let k = f.field();
    let terms: Vec<(F::Elem, String)> = f
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !k.is_zero(c))
        .map(|(i, c)| (c.clone(), power(var, i)))
        .collect();
    join_terms(k, &terms)
}

/// Terms ordered by total degree, then by degree in `x`, both descending.
pub fn format_bi<F: Field>(f: &BiPoly<F>) -> String {
    let k = f.field();
    let mut monos: Vec<(usize, usize)> = f.support();
    monos.sort_by_key(|m| std::cmp::Reverse((m.0 + m.1, m.0)));
    let terms: Vec<(F::Elem, String)> = monos
        .into_iter()
        .map(|(i, j)| {
            let mono = match (power("x", i), power("y", j)) {
                (a, b) if a.is_empty() => b,
                (a, b) if b.is_empty() => a,
                (a, b) => format!("{a}*{b}"),
            };
            (f.coeff(i, j), mono)
        })
        .collect();
    join_terms(k, &terms)
}
