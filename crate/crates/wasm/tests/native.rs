use serde_json::Value;

use sbl_wasm::{compose_json, gram_json, psi_json};

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn compose_returns_diagram_and_loops() {
    let v = parse(
        &compose_json(
            "J(3,5): (4',2)(3,5')(1,3')(1',2')",
            "J(5,1): (2,1)(4,5)(1',3)",
        )
        .unwrap(),
    );
    assert_eq!(v["diagram"], "J(3,1): (1,1') (2,3)");
    assert_eq!(v["loops"], 1);
    assert!(compose_json("J(1,1): (1,1')", "nonsense").is_err());
}

#[test]
fn gram_reports_determinant() {
    let v = parse(&gram_json(3, "1").unwrap());
    assert_eq!(v["dim"], 3);
    assert_eq!(v["det"], "x^3 - 3*x + 2");
    assert!(gram_json(9, "1").is_err());
    assert!(gram_json(4, "2").is_err());
}

#[test]
fn psi_of_blob_generator() {
    let v = parse(&psi_json("bB(1,1): (1,1')*").unwrap());
    assert_eq!(v["psi"], "J(2,2): (1,2') (2,1')");
}
