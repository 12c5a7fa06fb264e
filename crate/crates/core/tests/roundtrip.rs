mod common;

#[test]
fn construct_then_classify() {
    let r = common::round_trip(20, 7);
    println!("{} constructions, {} matched by rebuilding the certificate", r.built, r.rebuilt);
    assert!(r.failures.is_empty(), "{} of {} failed:\n{}", r.failures.len(), r.built, r.failures.join("\n"));
}
