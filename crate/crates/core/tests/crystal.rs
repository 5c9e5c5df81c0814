use icrystal_core::crystal::*;
use icrystal_core::{CartanSatakeDatum, ExtInt, Weight};

fn a1() -> CartanSatakeDatum {
    CartanSatakeDatum::a1(0)
}

#[test]
fn b3_has_the_stated_statistics() {
    let b = b_n(&a1(), 3).unwrap();
    let wts: Vec<i64> = b.elements().map(|x| b.wt_i(&x, 0)).collect();
    let eps: Vec<ExtInt> = b.elements().map(|x| b.eps(&x, 0)).collect();
    assert_eq!(wts, vec![3, 1, -1, -3]);
    assert_eq!(eps, (0..4).map(ExtInt::Fin).collect::<Vec<_>>());
    assert!(check_crystal_axioms(&b).is_ok());
    assert!(check_seminormal(&b).is_ok());
}

#[test]
fn b2_tensor_b3_is_the_grid() {
    let d = a1();
    let t = tensor_crystals(&b_n(&d, 2).unwrap(), &b_n(&d, 3).unwrap()).unwrap();
    assert!(check_crystal_axioms(&t).is_ok());
    // (k, l) ↦ 4k + l; expected F̃ targets read off the grid picture
    let right = |k: usize, l: usize| Some(4 * k + l + 1);
    let down = |k: usize, l: usize| Some(4 * (k + 1) + l);
    let expected = [
        right(0, 0), right(0, 1), right(0, 2), down(0, 3),
        right(1, 0), right(1, 1), down(1, 2), down(1, 3),
        right(2, 0), None, None, None,
    ];
    for (x, exp) in expected.iter().enumerate() {
        assert_eq!(t.f(&x, 0), *exp, "at {}", t.name(&x));
    }
}

#[test]
fn tensor_with_t_lambda_is_inert() {
    let d = a1();
    let b = b_n(&d, 3).unwrap();
    let t = t_lambda(&d, &Weight(vec![5])).unwrap();
    let bt = tensor_crystals(&b, &t).unwrap();
    assert!(check_crystal_axioms(&bt).is_ok());
    for x in b.elements() {
        assert_eq!(bt.e(&x, 0), b.e(&x, 0));
        assert_eq!(bt.f(&x, 0), b.f(&x, 0));
    }
    let tt = tensor_crystals(&t, &t_lambda(&d, &Weight(vec![-2])).unwrap()).unwrap();
    let t3 = t_lambda(&d, &Weight(vec![3])).unwrap();
    let m = CrystalMorphism { map: vec![Some(0)] };
    assert_eq!(check_crystal_morphism(&tt, &t3, &m), CrystalMorphismClass::Isomorphism);
}

#[test]
fn b1_tensor_b1_components() {
    let d = a1();
    let b1 = b_n(&d, 1).unwrap();
    let t = tensor_crystals(&b1, &b1).unwrap();
    let mut sizes: Vec<usize> = t
        .highest_elements()
        .into_iter()
        .map(|h| highest_weight_component(&t, h, 100).unwrap().graph.len())
        .collect();
    sizes.sort();
    assert_eq!(sizes, vec![1, 3]);
}

#[test]
fn highest_weight_components() {
    let f = CartanSatakeDatum::a2_flip(1);
    let nat = natural(&f).unwrap();
    assert_eq!(nat.data().names, vec!["b_-1", "b_0", "b_1"]);
    assert_eq!(nat.f(&0, 0), Some(1));
    assert_eq!(nat.f(&1, 1), Some(2));
    let t = tensor_crystals(&nat, &nat).unwrap();
    let comp = highest_weight_component(&t, 0, 100).unwrap();
    assert_eq!(comp.graph.len(), 6);
    assert!(check_seminormal(&comp.graph).is_ok());

    let model = HighestWeightModel::new(&a1(), &Weight(vec![5])).unwrap();
    let b5 = model.explicit(1000).unwrap();
    assert_eq!(b5.graph.len(), 6);
    for k in 0..5 {
        assert_eq!(b5.graph.f(&k, 0), Some(k + 1));
    }
    let b0 = HighestWeightModel::new(&a1(), &Weight(vec![0])).unwrap().explicit(10).unwrap();
    assert_eq!(b0.graph.len(), 1);

    // Weyl dimension formula for sl3: (a+1)(b+1)(a+b+2)/2
    for (a, b) in [(1, 0), (0, 1), (1, 1), (2, 1), (2, 2), (3, 1)] {
        let m = HighestWeightModel::new(&f, &Weight(vec![a, b])).unwrap().explicit(10_000).unwrap();
        assert_eq!(m.graph.len() as i64, (a + 1) * (b + 1) * (a + b + 2) / 2);
        assert!(check_crystal_axioms(&m.graph).is_ok());
        assert!(check_seminormal(&m.graph).is_ok());
        let els: Vec<usize> = m.graph.elements().collect();
        assert!(check_s_conditions(&m.graph, &els, 0, 1).is_ok());
        assert!(check_s_consequences(&m.graph, &els, 0, 1).is_ok());
    }
}

#[test]
fn non_highest_seed_is_rejected() {
    let b = b_n(&a1(), 2).unwrap();
    assert!(highest_weight_component(&b, 1, 10).is_err());
    let b = b_n(&a1(), 40).unwrap();
    assert!(matches!(highest_weight_component(&b, 0, 10), Err(icrystal_core::Error::CapExceeded(10))));
}

#[test]
fn corrupted_graph_fails_axiom_four() {
    let b = b_n(&a1(), 3).unwrap();
    let mut data = b.clone().into_data();
    data.f[0][0] = Some(2);
    let bad = CrystalGraph::from_data(b.datum_ref().clone(), data).unwrap();
    let rep = check_crystal_axioms(&bad);
    assert!(rep.has("axiom (4)"), "{rep}");
}

#[test]
fn morphism_classification() {
    let d = a1();
    let b3 = b_n(&d, 3).unwrap();
    assert_eq!(check_crystal_morphism(&b3, &b3, &CrystalMorphism::identity(4)), CrystalMorphismClass::Isomorphism);
    // B(1) → B(3): b_0 ↦ b_0 would break the φ clause.
    let b1 = b_n(&d, 1).unwrap();
    let m = CrystalMorphism { map: vec![Some(0), None] };
    assert!(matches!(check_crystal_morphism(&b1, &b3, &m), CrystalMorphismClass::NotAMorphism(_)));
}

#[test]
fn tensor_associativity_on_small_triples() {
    let f = CartanSatakeDatum::a2_flip(1);
    let nat = natural(&f).unwrap();
    let adj = HighestWeightModel::new(&f, &Weight(vec![1, 1])).unwrap().explicit(100).unwrap().graph;
    let a1d = a1();
    let triples = vec![
        (nat.clone(), adj.clone(), nat.clone()),
        (adj.clone(), nat.clone(), adj.clone()),
        (b_n(&a1d, 2).unwrap(), b_n(&a1d, 1).unwrap(), b_n(&a1d, 3).unwrap()),
        (t_lambda(&a1d, &Weight(vec![2])).unwrap(), b_n(&a1d, 2).unwrap(), b_n(&a1d, 1).unwrap()),
    ];
    for (x, y, z) in triples {
        let l = tensor_crystals(&x, &tensor_crystals(&y, &z).unwrap()).unwrap();
        let r = tensor_crystals(&tensor_crystals(&x, &y).unwrap(), &z).unwrap();
        // same row-major flattening on both sides: ((a,b),c) and (a,(b,c)) share the handle
        let m = CrystalMorphism::identity(l.len());
        assert_eq!(check_crystal_morphism(&l, &r, &m), CrystalMorphismClass::Isomorphism);
    }
}
