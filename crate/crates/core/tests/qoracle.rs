use icrystal_core::crystal::*;
use icrystal_core::icrystal::*;
use icrystal_core::itensor::{induce_icrystal, tensor_icrystal_crystal, InduceMode};
use icrystal_core::qoracle::*;
use icrystal_core::{CartanSatakeDatum, Error, Sqrt2Scalar};

fn lr(terms: &[(i64, i64)]) -> LaurentRational {
    LaurentRational::laurent(terms)
}

/// Same tables on the same handles; names may differ.
fn assert_same_tables(a: &ICrystalGraph, b: &ICrystalGraph, ctx: &str) {
    let (x, y) = (a.data(), b.data());
    assert_eq!(x.wti, y.wti, "{ctx}: weights");
    assert_eq!(x.beta, y.beta, "{ctx}: β");
    assert_eq!(x.btil, y.btil, "{ctx}: B̃");
}

#[test]
fn quantum_symbols() {
    assert_eq!(qint(2), lr(&[(1, 1), (-1, 1)]));
    assert_eq!(qint(-3), lr(&[(2, -1), (0, -1), (-2, -1)]));
    assert!(qint(0).is_zero());
    assert_eq!(brace(0), LaurentRational::int(2));
    assert_eq!(qbinom(4, 2), lr(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]));
    assert!(qbinom(3, 5).is_zero());
    assert_eq!(qfact(3), &qint(2) * &qint(3));
    assert_eq!(bracket_k(3, -1), qint(2));
    assert_eq!(q_symbols(QSymbol::Brace(2)), &LaurentRational::q_pow(2) + &LaurentRational::q_pow(-2));
    assert!(matches!(q_arith(&qint(1), &qint(0), QOp::Div), Err(Error::DivisionByZero)));
    // [2]² = [3] + 1
    assert_eq!(q_arith(&qint(2), &qint(2), QOp::Mul).unwrap(), &qint(3) + &LaurentRational::one());
    for n in -4..=4 {
        assert_eq!(qint(n).bar(), qint(n));
    }
}

#[test]
fn adjacent_norms_match_closed_form_and_table() {
    for s in -1..=2 {
        let d = CartanSatakeDatum::a2_flip(s);
        for nm in 0..=6 {
            for np in (s - 4)..=(s + 4) {
                let m = build_rank_two_module(&d, ModuleParams::Adjacent(nm, np)).unwrap();
                for e in module_norms(&m).unwrap() {
                    assert_eq!(e.recursion, e.closed_form, "s={s} n-={nm} n+={np} k={}", e.k);
                    assert_eq!(e.lt, e.lt_table, "s={s} n-={nm} n+={np} k={}", e.k);
                }
            }
        }
    }
}

#[test]
fn lt_table_spot_values() {
    // n' = n₊ − s between −1 and n₋: √2 from k = n' + 1 on
    assert_eq!(lt_table(3, 1, 0, 1).half_exp, 0);
    assert_eq!(lt_table(3, 1, 0, 2).coeff, Sqrt2Scalar::new(0, 1, 0));
    assert_eq!(lt_table(3, 1, 0, 3).half_exp, 2);
    assert_eq!(lt_table(2, -2, 0, 2), LeadingTerm { coeff: Sqrt2Scalar::ONE, half_exp: 10 });
}

#[test]
fn wrong_parameters_are_rejected() {
    let d = CartanSatakeDatum::a2_flip(1);
    assert!(build_rank_two_module(&d, ModuleParams::Orthogonal(2)).is_err());
    assert!(build_rank_two_module(&d, ModuleParams::Adjacent(-1, 0)).is_err());
    let m = build_rank_two_module(&d, ModuleParams::Adjacent(1, 0)).unwrap();
    let t = tensor_with(&m, &natural_module(&d).unwrap()).unwrap();
    assert!(module_norms(&t).is_err());
    // a perturbed B_τ breaks both the relations and the form
    let mut bad = m.clone();
    bad.b[1].cols[1].insert(0, qint(3));
    assert!(matches!(check_relations(&bad), Err(Error::Relation(_))));
    assert!(matches!(check_contragredient(&bad), Err(Error::Relation(_))));
}

#[test]
fn fixed_point_eigenvalues_and_limits() {
    for s in -3..=3 {
        let d = CartanSatakeDatum::a1(s);
        for m in 0..=5 {
            let lim = oracle_fixed_restriction(&d, m).unwrap();
            let mut got: Vec<i64> = lim
                .components
                .iter()
                .map(|p| match p {
                    ModuleParams::Fixed(c) => *c,
                    _ => unreachable!(),
                })
                .collect();
            got.sort_unstable();
            assert_eq!(got, expected_fixed_eigenvalues(s, m), "s={s} m={m}");
            let bn = b_n(&d, m).unwrap();
            let comb = tensor_icrystal_crystal(&bi_rank1(&d, s).unwrap(), &bn).unwrap();
            assert_same_tables(&lim.graph, &comb, &format!("s={s} m={m}"));
            let ind = induce_icrystal(&bn, InduceMode::Seminormal).unwrap();
            assert!(find_isomorphism(&lim.graph, &ind).unwrap().is_some(), "induced s={s} m={m}");
        }
    }
}

#[test]
fn orthogonal_one_step() {
    let d = CartanSatakeDatum::a1xa1();
    for n in 0..=5 {
        let v = build_rank_two_module(&d, ModuleParams::Orthogonal(n)).unwrap();
        for (j, (mt, mi)) in [(0usize, (0, 1)), (1, (1, 0))] {
            let t = tensor_with(&v, &sl2_pair_module(&d, mt, mi).unwrap()).unwrap();
            let lim = oracle_crystal_limit(&t).unwrap();
            let comb = tensor_icrystal_crystal(&bi_orthogonal(&d, n).unwrap(), &fundamental(&d, j).unwrap()).unwrap();
            assert_same_tables(&lim.graph, &comb, &format!("n={n} j={j}"));
        }
    }
}

#[test]
fn adjacent_natural_matches_tensor_rule() {
    for s in -1..=2 {
        let d = CartanSatakeDatum::a2_flip(s);
        let nat = natural(&d).unwrap();
        for nm in 0..=5 {
            for n in -4..=4 {
                let np = n + s;
                let ctx = format!("s={s} n-={nm} n+={np}");
                let lim = oracle_adjacent_natural(&d, nm, np).unwrap_or_else(|e| panic!("{ctx}: {e}"));
                let comb = tensor_icrystal_crystal(&bi_adjacent(&d, nm, np).unwrap(), &nat).unwrap();
                assert_same_tables(&lim.graph, &comb, &ctx);
                // √2 appears only where a ∨ or ∧ component does
                let (case, fams) = expected_components(&d, nm, np);
                let irrational = lim.graph.graph_edges().iter().any(|e| e.3.parts().1 != 0);
                assert_eq!(irrational, matches!(case, 2 | 4) || (case == 0 && n == 0), "{ctx}");
                let mut want = make_builtin(&d, &fams[0]).unwrap();
                for f in &fams[1..] {
                    want = disjoint_union(&want, &make_builtin(&d, f).unwrap()).unwrap();
                }
                assert!(find_isomorphism(&lim.graph, &want).unwrap().is_some(), "{ctx}: shape");
            }
        }
    }
}
