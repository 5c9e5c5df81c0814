//! The checked-in graphs against the pictures they come from, read as plain
//! JSON so that no library code sits between the file and the expectation.

use std::collections::BTreeSet;

use icrystal::format::{crystal_from_json, crystal_to_json, icrystal_from_json, icrystal_to_json};
use icrystal::suite::{golden_outputs, EMBEDDED_GOLDENS};
use serde_json::Value;

fn golden(name: &str) -> Value {
    let text = EMBEDDED_GOLDENS.iter().find(|(n, _)| *n == name).unwrap().1;
    serde_json::from_str(text).unwrap()
}

fn names(g: &Value) -> Vec<String> {
    g["elements"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap().to_string()).collect()
}

/// (source name, target name, amplitude (a, b, k)) for every edge.
fn edges(g: &Value) -> BTreeSet<(String, String, (i64, i64, i64))> {
    let ns = names(g);
    g["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            let z = &e["z"];
            let amp = if z.is_null() { (1, 0, 0) } else { (z["a"].as_i64().unwrap(), z["b"].as_i64().unwrap(), z["k"].as_i64().unwrap()) };
            (ns[e["from"].as_u64().unwrap() as usize].clone(), ns[e["to"].as_u64().unwrap() as usize].clone(), amp)
        })
        .collect()
}

#[test]
fn goldens_are_reproduced_byte_for_byte() {
    let fresh = golden_outputs().unwrap();
    assert_eq!(fresh.len(), EMBEDDED_GOLDENS.len());
    for ((n1, got), (n2, want)) in fresh.iter().zip(EMBEDDED_GOLDENS) {
        assert_eq!(n1, n2);
        assert!(got == want, "{n1} drifted from the checked-in file");
    }
}

#[test]
fn b2_tensor_b3_matches_the_picture() {
    let g = golden("b2_tensor_b3.json");
    let mut want = BTreeSet::new();
    // rows b_k of B(2), columns b_l of B(3); move right while φ(b_l) > ε(b_k)
    for k in 0..=2i64 {
        for l in 0..=3i64 {
            let to = if 3 - l > k {
                Some((k, l + 1))
            } else if k < 2 {
                Some((k + 1, l))
            } else {
                None
            };
            if let Some((k2, l2)) = to {
                want.insert((format!("b_{k}⊗b_{l}"), format!("b_{k2}⊗b_{l2}"), (1, 0, 0)));
            }
        }
    }
    assert_eq!(edges(&g), want);
    // the two strings: lengths 6 from b_0⊗b_0 and 2 from b_1⊗b_0
    for e in g["elements"].as_array().unwrap() {
        let n = e["name"].as_str().unwrap();
        let (k, l): (i64, i64) = (n[2..3].parse().unwrap(), n[n.len() - 1..].parse().unwrap());
        assert_eq!(e["wt"][0].as_i64().unwrap(), (2 - 2 * k) + (3 - 2 * l), "{n}");
        let (eps, phi) = (e["eps"][0].as_i64().unwrap(), e["phi"][0].as_i64().unwrap());
        assert_eq!(phi - eps, e["wt"][0].as_i64().unwrap(), "{n}");
    }
    let highest: Vec<_> = g["elements"].as_array().unwrap().iter().filter(|e| e["eps"][0] == 0).map(|e| e["phi"][0].as_i64().unwrap()).collect();
    let mut highest = highest;
    highest.sort_unstable();
    assert_eq!(highest, vec![1, 3, 5]);
}

/// β_i and the B̃_i loop or partner of b_k in B^ı(s) ⊗ B(n), from the three
/// pictures of the A1 example.
fn ai_picture(s: i64, n: i64, k: i64) -> (i64, Option<(i64, i64)>) {
    let a = s.abs();
    let sign = s.signum();
    let tail = |k: i64| (a - n + 2 * k, if s == 0 { None } else { Some((k, sign)) });
    if n < a {
        return tail(k);
    }
    let turn = n - a;
    if k > turn {
        return tail(k);
    }
    if (n - s).rem_euclid(2) == 0 {
        // b_0 alone, then pairs (b_1, b_2), (b_3, b_4), … with β = 2, 2, 4, 4, …
        if k == 0 {
            return (0, None);
        }
        let partner = if k % 2 == 1 { k + 1 } else { k - 1 };
        (2 * ((k + 1) / 2), Some((partner, 1)))
    } else {
        // pairs (b_0, b_1), (b_2, b_3), … with β = 1, 1, 3, 3, …
        let partner = if k % 2 == 0 { k + 1 } else { k - 1 };
        (2 * (k / 2) + 1, Some((partner, 1)))
    }
}

#[test]
fn ai_graphs_match_the_three_pictures() {
    for (file, s) in [("ai_s0.json", 0), ("ai_s1.json", 1), ("ai_s2.json", 2), ("ai_sm2.json", -2)] {
        let doc = golden(file);
        assert_eq!(doc["s"], s);
        let graphs = doc["graphs"].as_array().unwrap();
        assert_eq!(graphs.len(), 7);
        for (n, g) in graphs.iter().enumerate() {
            let n = n as i64;
            let els = g["elements"].as_array().unwrap();
            assert_eq!(els.len() as i64, n + 1);
            let mut want = BTreeSet::new();
            for (k, e) in els.iter().enumerate() {
                let k = k as i64;
                assert_eq!(e["name"], format!("b⊗b_{k}"));
                let (beta, edge) = ai_picture(s, n, k);
                assert_eq!(e["beta"][0].as_i64(), Some(beta), "s={s} n={n} k={k}");
                assert_eq!(e["wti"][0]["mod2"].as_i64(), Some(n.rem_euclid(2)), "s={s} n={n} k={k}");
                if let Some((t, z)) = edge {
                    want.insert((format!("b⊗b_{k}"), format!("b⊗b_{t}"), (z, 0, 0)));
                }
            }
            assert_eq!(edges(g), want, "s={s} n={n}");
            // the last element always has β = |s| + n
            assert_eq!(els[n as usize]["beta"][0].as_i64(), Some(s.abs() + n));
        }
    }
}

#[test]
fn grid_matches_the_picture() {
    let g = golden("grid_m2_n3.json");
    let (m, n) = (2i64, 3i64);
    let mut want = BTreeSet::new();
    for k in 0..=m {
        for l in 0..=n {
            let (k2, l2) = if n - l > m - k { (k, l + 1) } else { (k - 1, l) };
            if k2 >= 0 && l2 <= n {
                want.insert((format!("b_{{{k},{l}}}"), format!("b_{{{k2},{l2}}}"), (1, 0, 0)));
            }
        }
    }
    assert_eq!(edges(&g), want);
    // the drawn arrows
    let e = edges(&g);
    for (a, b) in [("2,3", "1,3"), ("1,2", "0,2"), ("1,3", "0,3"), ("2,0", "2,1"), ("0,0", "0,1")] {
        assert!(e.contains(&(format!("b_{{{a}}}"), format!("b_{{{b}}}"), (1, 0, 0))), "{a} → {b}");
    }
    assert_eq!(names(&g).len(), 12);
}

#[test]
fn goldens_reimport_unchanged() {
    for (name, text) in EMBEDDED_GOLDENS {
        let v: Value = serde_json::from_str(text).unwrap();
        let docs: Vec<Value> = match v.get("graphs") {
            Some(gs) => gs.as_array().unwrap().clone(),
            None => vec![v],
        };
        for d in docs {
            let t = icrystal::format::layout(&d);
            let again = if d["kind"] == "crystal" {
                crystal_to_json(&crystal_from_json(&t).unwrap())
            } else {
                icrystal_to_json(&icrystal_from_json(&t).unwrap())
            };
            assert_eq!(again, t, "{name}");
        }
    }
}
