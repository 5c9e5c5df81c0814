use icrystal::format::*;
use icrystal::suite::{family_instances, random_crystal, random_icrystal};
use icrystal_core::crystal::{b_n, tensor_crystals, t_lambda};
use icrystal_core::icrystal::{bi_pair, bi_vee, make_builtin, ICrystalGraph};
use icrystal_core::itensor::tensor_icrystal_crystal;
use icrystal_core::{CartanSatakeDatum, ExtInt, IExtInt, Sqrt2Scalar, Weight};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

fn roundtrip_icrystal(g: &ICrystalGraph) {
    let text = icrystal_to_json(g);
    let back = icrystal_from_json(&text).unwrap();
    assert_eq!(&back, g);
    assert_eq!(icrystal_to_json(&back), text);
}

#[test]
fn every_builtin_round_trips() {
    for (d, f) in family_instances() {
        roundtrip_icrystal(&make_builtin(&d, &f).unwrap());
    }
}

#[test]
fn random_graphs_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for d in [CartanSatakeDatum::a1(-1), CartanSatakeDatum::a1xa1(), CartanSatakeDatum::a2_flip(2)] {
        for _ in 0..10 {
            let (_, l) = random_icrystal(&mut rng, &d, 20);
            let (_, c) = random_crystal(&mut rng, &d, 20);
            let text = crystal_to_json(&c);
            let back = crystal_from_json(&text).unwrap();
            assert_eq!(back.data(), c.data());
            assert_eq!(crystal_to_json(&back), text);
            roundtrip_icrystal(&tensor_icrystal_crystal(&l, &c).unwrap());
        }
    }
}

#[test]
fn infinities_and_scalars_serialize_by_name() {
    assert_eq!(ext_to_json(ExtInt::NegInf), json!("-inf"));
    assert_eq!(iext_to_json(IExtInt::NegInfEven), json!("-inf_ev"));
    assert_eq!(iext_to_json(IExtInt::NegInfOdd), json!("-inf_odd"));
    for x in [IExtInt::NegInf, IExtInt::NegInfEven, IExtInt::NegInfOdd, IExtInt::Fin(-3)] {
        assert_eq!(iext_from_json(&iext_to_json(x)).unwrap(), x);
    }
    assert!(iext_from_json(&json!("-inf_even")).is_err());
    let z = Sqrt2Scalar::INV_SQRT2;
    assert_eq!(serde_json::to_value(ScalarJson::from(z)).unwrap(), json!({"a": 0, "b": 1, "k": 1}));
    // non-normal input is normalized
    assert_eq!(Sqrt2Scalar::from(ScalarJson { a: 0, b: 2, k: 2 }), z);

    // T_λ over A1 carries −∞ statistics
    let d = CartanSatakeDatum::a1(0);
    let t = t_lambda(&d, &Weight(vec![2])).unwrap();
    let text = crystal_to_json(&t);
    assert!(text.contains("\"-inf\""));
    assert_eq!(crystal_from_json(&text).unwrap().data(), t.data());
}

#[test]
fn datum_files() {
    let d = parse_datum_json(r#"{"gcm": [[2,-1],[-1,2]], "d": [1,1], "tau": [2,1], "s": [3,-2]}"#).unwrap();
    assert_eq!(d.s(0), 3);
    assert_eq!(d.tau(0), 1);
    assert_eq!(DatumJson::from_datum(&d).to_datum().unwrap(), d);
    // s_i + s_τ(i) must be 1 on an adjacent orbit
    assert!(parse_datum_json(r#"{"gcm": [[2,-1],[-1,2]], "d": [1,1], "tau": [2,1], "s": [0,0]}"#).is_err());
    assert!(parse_datum_json(r#"{"gcm": [[2]], "d": [1], "tau": [0], "s": [0]}"#).is_err());
    assert!(parse_datum_json(r#"{"gcm": [[2]], "d": [1], "tau": [1], "s": [0], "extra": 1}"#).is_err());
    let labelled = parse_datum_json(r#"{"labels": ["x","y"], "gcm": [[2,0],[0,2]], "d": [1,1], "tau": [2,1], "s": [0,0], "i_tau": [2]}"#).unwrap();
    assert_eq!(labelled.i_tau(), &[1]);
    let j = serde_json::to_value(DatumJson::from_datum(&labelled)).unwrap();
    assert_eq!(j["labels"], json!(["x", "y"]));
    assert_eq!(j["i_tau"], json!([2]));
    assert_eq!(builtin_datum("A2flip:-1").unwrap(), CartanSatakeDatum::a2_flip(-1));
    assert_eq!(builtin_datum("a1xa1").unwrap(), CartanSatakeDatum::a1xa1());
    assert!(builtin_datum("A3").is_none());
}

#[test]
fn bad_graph_files_are_rejected() {
    let d = CartanSatakeDatum::a1(0);
    let text = crystal_to_json(&b_n(&d, 2).unwrap());
    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["edges"][0]["to"] = json!(9);
    assert!(crystal_from_json(&v.to_string()).is_err());
    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["edges"][0]["i"] = json!("7");
    assert!(crystal_from_json(&v.to_string()).is_err());
    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["schema"] = json!(2);
    assert!(crystal_from_json(&v.to_string()).is_err());
    assert!(matches!(graph_from_json(&text).unwrap(), AnyGraph::Crystal(_)));
    assert!(graph_from_json("{\"kind\": \"poset\"}").is_err());
    // a parity entry where a signed one belongs
    let g = bi_vee(&CartanSatakeDatum::a2_flip(0), 2, 1).unwrap();
    let mut v: Value = serde_json::from_str(&icrystal_to_json(&g)).unwrap();
    v["elements"][0]["wti"] = json!([{"mod2": 1}]);
    assert!(icrystal_from_json(&v.to_string()).is_err());
}

#[test]
fn dot_labels_omit_unit_amplitudes() {
    let d = CartanSatakeDatum::a1(0);
    let dot = icrystal_to_dot(&bi_pair(&d, 2).unwrap());
    assert!(dot.starts_with("digraph icrystal {\n"));
    assert!(dot.contains("n0 -> n1 [label=\"1\"];"));
    assert!(dot.contains("n1 -> n0 [label=\"1\"];"));
    let vee = icrystal_to_dot(&bi_vee(&CartanSatakeDatum::a2_flip(0), 2, 1).unwrap());
    assert!(vee.contains("(1, √2/2)"), "{vee}");
    let neg = icrystal_to_dot(&make_builtin(&d, &icrystal_core::icrystal::BuiltinFamily::Rank1 { n: -2 }).unwrap());
    assert!(neg.contains("n0 -> n0 [label=\"(1, -1)\"];"));
    let c = tensor_crystals(&b_n(&d, 1).unwrap(), &b_n(&d, 1).unwrap()).unwrap();
    let cd = crystal_to_dot(&c);
    // B(2) ⊕ B(0)
    assert_eq!(cd.matches("->").count(), 2);
    // deterministic
    assert_eq!(cd, crystal_to_dot(&c));
}
