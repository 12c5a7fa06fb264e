use quadfact::oracle::{exhaustive_agreement, AgreementBudget};
use quadfact::FiniteField;

fn check(p: u64, k: u32, degs: std::ops::RangeInclusive<usize>) {
    let field = FiniteField::with_default_modulus(p, k).unwrap();
    let r = exhaustive_agreement(&field, degs.clone(), degs, &AgreementBudget::default()).unwrap();
    assert!(r.pass, "{}: {:#?}", r.field, &r.disagreements[..r.disagreements.len().min(5)]);
    assert!(r.pairs_with_factor > 0);
    println!("{} {:?}", r.field, r.per_case);
}

#[test]
fn f2_up_to_degree_four() {
    check(2, 1, 1..=4);
}

#[test]
fn f3_up_to_degree_four() {
    check(3, 1, 1..=4);
}

#[test]
fn f5_cubics() {
    check(5, 1, 3..=3);
}

#[test]
fn f4_up_to_degree_three() {
    check(2, 2, 1..=3);
}
