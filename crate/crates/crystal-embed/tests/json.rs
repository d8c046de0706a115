use crystal_embed::crystal::*;
use crystal_embed::embedding::Pipeline;
use crystal_embed::json::{Element, JsonError};
use crystal_embed::lusztig::FoldedDatum;
use serde_json::json;

fn round_trip(e: Element) {
    let v = e.to_json();
    assert_eq!(v["model"], e.model_name());
    let back = Element::from_json(&v).unwrap_or_else(|err| panic!("{err}: {v}"));
    assert_eq!(back, e);
    let text = serde_json::to_string(&v).unwrap();
    assert_eq!(Element::from_json(&serde_json::from_str(&text).unwrap()).unwrap(), e);
}

fn shapes() -> Vec<(CartanType, usize, Vec<usize>, bool)> {
    vec![
        (CartanType::C, 3, vec![2, 1], false),
        (CartanType::B, 3, vec![2, 1], false),
        (CartanType::B, 2, vec![1], true),
    ]
}

#[test]
fn kn_and_spinor_round_trip() {
    for (ty, n, mu, spin) in shapes() {
        let p = Pipeline::new(ty, n, &mu, spin);
        for t in generate_graph(&p.kn, p.kn.highest(), GraphOptions::default()).unwrap().nodes {
            let s = p.psi(&t).unwrap();
            round_trip(Element::Kn(p.kn.clone(), t));
            round_trip(Element::Spinor(p.spinor.clone(), s));
        }
    }
}

#[test]
fn verma_and_lusztig_round_trip() {
    for (ty, n, mu, spin) in shapes() {
        let p = Pipeline::new(ty, n, &mu, spin);
        let opts = GraphOptions { max_depth: Some(4), ..Default::default() };
        for v in generate_graph(&p.verma, p.verma.highest(), opts).unwrap().nodes {
            round_trip(Element::Verma(p.verma.clone(), v));
        }
        for d in generate_graph(&p.lusztig, FoldedDatum::zero(n), opts).unwrap().nodes {
            round_trip(Element::Lusztig(p.lusztig, d));
        }
    }
}

#[test]
fn invalid_input_is_rejected() {
    let p = Pipeline::new(CartanType::C, 2, &[1, 1], false);
    let good = Element::Kn(p.kn.clone(), p.kn.highest()).to_json();

    let mut bad = good.clone();
    bad["body"]["rows"] = json!([[2], [1]]);
    assert!(matches!(Element::from_json(&bad), Err(JsonError::Invalid(_))));

    let mut bad = good.clone();
    bad["body"]["rows"] = json!([[1], [5]]);
    assert!(matches!(Element::from_json(&bad), Err(JsonError::Letter(5, 2))));

    let mut bad = good.clone();
    bad["spin"] = json!(true);
    assert!(matches!(Element::from_json(&bad), Err(JsonError::Invalid(_))));

    let mut bad = good.clone();
    bad["model"] = json!("tableau");
    assert!(matches!(Element::from_json(&bad), Err(JsonError::Model(_))));

    let mut bad = good;
    bad.as_object_mut().unwrap().remove("lambda");
    assert!(matches!(Element::from_json(&bad), Err(JsonError::Field("lambda"))));

    let datum = json!({"model": "lusztig", "type": "B", "n": 2, "dplus": [[2, 1, 1]], "dminus": []});
    assert!(matches!(Element::from_json(&datum), Err(JsonError::Invalid(_))));
}
