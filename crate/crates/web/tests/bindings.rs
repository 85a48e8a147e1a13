use farey_web::{domain, invariants, membership};
use serde_json::Value;

fn parse(s: Result<String, String>) -> Value {
    serde_json::from_str(&s.unwrap()).unwrap()
}

#[test]
fn domain_has_symbol_and_svg() {
    let v = parse(domain("gamma:2"));
    assert_eq!(v["symbol"], "[-oo 0 1 2 oo | 1 2 2 1]");
    assert!(v["svg"].as_str().unwrap().starts_with("<svg"));
    let v = parse(domain("[-oo 0 oo | e o]"));
    assert_eq!(v["symbol"], "[-oo 0 oo | e o]");
}

#[test]
fn invariants_of_gamma0_11() {
    let v = parse(invariants("gamma0:11"));
    assert_eq!(v["invariants"]["index"], 12);
    assert_eq!(v["invariants"]["genus"], 1);
    assert_eq!(v["generators"].as_array().unwrap().len(), 3);
}

#[test]
fn membership_with_words() {
    let v = parse(membership("gamma:2", "3,-2,2,-1"));
    assert_eq!(v["member"], true);
    assert_eq!(v["word"], "g2");
    let v = parse(membership("gamma:2", "1,1,0,1"));
    assert_eq!(v["member"], false);
    assert!(v["word"].is_null());
}

#[test]
fn errors_are_messages() {
    assert!(domain("gamma:0").unwrap_err().contains("positive integer"));
    assert!(membership("gamma:2", "1,2,3,4")
        .unwrap_err()
        .contains("determinant"));
    assert!(invariants("[-oo 0 oo | 1 1]").is_err());
}
