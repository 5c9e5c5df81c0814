use icrystal_core::binfty::{binfty_e, binfty_stats, canonical_word};
use icrystal_core::crystal::*;
use icrystal_core::icrystal::*;
use icrystal_core::itensor::tensor_icrystal_crystal;
use icrystal_core::projective::*;
use icrystal_core::rootdata::project_weight;
use icrystal_core::{CartanSatakeDatum, Error, IEntry, IExtInt, IWeight, Sqrt2Scalar, Weight, DEFAULT_CAP};

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

fn datums() -> Vec<CartanSatakeDatum> {
    let mut out = vec![CartanSatakeDatum::a1xa1()];
    for s in -2..=2 {
        out.push(CartanSatakeDatum::a1(s));
    }
    for s in -1..=2 {
        out.push(CartanSatakeDatum::a2_flip(s));
    }
    out
}

fn small_weights(d: &CartanSatakeDatum) -> Vec<Weight> {
    match d.rank() {
        1 => (0..=3).map(|a| w(&[a])).collect(),
        _ => vec![w(&[0, 0]), w(&[1, 0]), w(&[0, 1]), w(&[1, 1]), w(&[2, 1])],
    }
}

fn very_strict(m: &StructureMap) -> bool {
    let c = check_icrystal_morphism(&m.src, &m.tgt, &m.map).unwrap();
    c.morphism.is_ok() && c.very_strict
}

#[test]
fn sigma_examples() {
    assert_eq!(compute_sigma(&CartanSatakeDatum::a1(3)), w(&[3]));
    assert_eq!(compute_sigma(&CartanSatakeDatum::a1(-2)), w(&[2]));
    assert_eq!(compute_sigma(&CartanSatakeDatum::a1xa1()), w(&[0, 0]));
    assert_eq!(compute_sigma(&CartanSatakeDatum::a2_flip(1)), w(&[1, 0]));
    assert_eq!(compute_sigma(&CartanSatakeDatum::a2_flip(-2)), w(&[0, 2]));
    assert_eq!(compute_sigma(&CartanSatakeDatum::a2_flip(0)), w(&[0, 0]));
}

#[test]
fn b_lambda_sigma_is_t_sigma_bar_tensor_b_lambda() {
    for d in datums() {
        let tsig = t_zeta(&d, &project_weight(&compute_sigma(&d), &d)).unwrap();
        for lam in small_weights(&d) {
            let (bl, g) = b_lambda_sigma(&d, &lam, DEFAULT_CAP).unwrap();
            let rep = check_icrystal_axioms(&g);
            assert!(rep.is_ok(), "{lam}: {rep}");
            let t = tensor_icrystal_crystal(&tsig, &bl.graph).unwrap();
            let c = check_icrystal_morphism(&g, &t, &ICrystalMorphism::identity(g.len())).unwrap();
            assert_eq!(c.kind(), IMorphismKind::Isomorphism, "{lam}");
        }
    }
}

#[test]
fn t_zeta_tensor_t_mu() {
    for d in datums() {
        for z in -2i64..=2 {
            let zeta = match d.kind(0) {
                icrystal_core::rootdata::OrbitKind::Fixed => IWeight(vec![IEntry::Parity(z.rem_euclid(2) as u8)]),
                _ => IWeight(vec![IEntry::Signed(z)]),
            };
            for mu in [w(&vec![1; d.rank()]), w(&vec![-2; d.rank()]), Weight((0..d.rank() as i64).map(|k| 3 - 2 * k).collect())] {
                let a = tensor_icrystal_crystal(&t_zeta(&d, &zeta).unwrap(), &t_lambda(&d, &mu).unwrap()).unwrap();
                let b = t_zeta(&d, &zeta.add(&project_weight(&mu, &d))).unwrap();
                let c = check_icrystal_morphism(&a, &b, &ICrystalMorphism::identity(1)).unwrap();
                assert_eq!(c.kind(), IMorphismKind::Isomorphism, "{zeta} {mu}");
            }
        }
    }
}

#[test]
fn structure_maps_are_very_strict() {
    for d in datums() {
        for nu in small_weights(&d).into_iter().take(3) {
            let g = gamma_nu(&d, &nu, DEFAULT_CAP).unwrap();
            assert!(very_strict(&g), "γ {nu}");
            assert_eq!(g.map.cols.iter().filter(|c| !c.is_empty()).count(), 1);
        }
        for lam in small_weights(&d) {
            let r = rho_lambda(&d, &lam, DEFAULT_CAP).unwrap();
            assert!(very_strict(&r), "ρ {lam}");
            let s = rho_section(&d, &lam, DEFAULT_CAP).unwrap();
            assert!(very_strict(&s), "section {lam}");
            // ρ_λ undoes the section
            assert_eq!(r.map.compose(&s.map), ICrystalMorphism::identity(s.src.len()), "{lam}");
        }
    }
}

#[test]
fn pi_maps_are_surjective_and_coherent() {
    for d in datums() {
        let ws = small_weights(&d);
        for lam in ws.iter().take(3) {
            for nu in ws.iter().take(2) {
                let p = pi_i_lambda_nu(&d, lam, nu, DEFAULT_CAP).unwrap();
                assert!(very_strict(&p), "π {lam} {nu}");
                let mut hit = vec![false; p.tgt.len()];
                for c in &p.map.cols {
                    for t in c.keys() {
                        hit[*t] = true;
                    }
                }
                assert!(hit.iter().all(|&x| x), "π {lam} {nu} is not onto");
            }
            let nu1 = &ws[1];
            let nu2 = &ws[ws.len() - 1];
            if d.rank() == 2 && lam.get(0) + lam.get(1) > 1 {
                continue;
            }
            let mid = lam + &nu_sym(&d, nu1);
            let a = pi_i_lambda_nu(&d, lam, nu1, DEFAULT_CAP).unwrap();
            let b = pi_i_lambda_nu(&d, &mid, nu2, DEFAULT_CAP).unwrap();
            let c = pi_i_lambda_nu(&d, lam, &(nu1 + nu2), DEFAULT_CAP).unwrap();
            assert_eq!(a.map.compose(&b.map), c.map, "{lam}");
        }
    }
}

#[test]
fn highest_weight_characterization() {
    for d in datums() {
        for nu in small_weights(&d).into_iter().take(4) {
            let rep = check_highest_weight_characterization(&d, &nu, DEFAULT_CAP).unwrap();
            assert!(rep.is_ok(), "{nu}: {rep}");
        }
    }
    // Killing a second element has to be noticed.
    let d = CartanSatakeDatum::a1(1);
    let (_, g) = b_lambda_induced(&d, &(&compute_sigma(&d) + &w(&[2])), DEFAULT_CAP).unwrap();
    let mut data = g.clone().into_data();
    let victim = data.names.len() - 1;
    data.beta[victim] = vec![IExtInt::Fin(0)];
    data.btil[victim] = vec![Vec::new()];
    let broken = ICrystalGraph::from_data(d.clone(), data).unwrap();
    assert!(characterization_report(&broken).has("unique"));
    assert!(matches!(gamma_nu(&d, &w(&[-1]), DEFAULT_CAP), Err(Error::NotDominant(_))));
}

fn words(r: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for x in &layer {
            for i in 0..r {
                let mut y: Vec<usize> = x.clone();
                y.push(i);
                next.push(y);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn one() -> Sqrt2Scalar {
    Sqrt2Scalar::int(1)
}

#[test]
fn diagonal_limit_formulas() {
    let d = CartanSatakeDatum::a1xa1();
    for z in -2..=2 {
        let zeta = IWeight(vec![IEntry::Signed(z)]);
        for word in words(2, 3) {
            let st = binfty_stats(&d, &word).unwrap();
            for i in 0..2 {
                let t = d.tau(i);
                let zi = zeta.at(&d, i).signed();
                let lv = limit_action(&d, &zeta, &word, i, 3, 12).unwrap();
                let beta = (st.phi[i] + zi - st.wt.get(t)).max(st.eps[t]);
                assert_eq!(lv.beta, IExtInt::Fin(beta), "β_{i} on {word:?}, ζ = {z}");
                let want = if st.phi[i] > st.phi[t] - zi {
                    let mut ww = word.clone();
                    ww.push(i);
                    vec![(canonical_word(&d, &ww).unwrap(), one())]
                } else {
                    binfty_e(&d, &word, t).unwrap().map(|x| vec![(x, one())]).unwrap_or_default()
                };
                assert_eq!(lv.btil, want, "B̃_{i} on {word:?}, ζ = {z}");
            }
        }
    }
}

#[test]
fn fixed_point_limit_on_highest_element() {
    for s in -2..=2 {
        let d = CartanSatakeDatum::a1(s);
        for p in 0..2u8 {
            let zeta = IWeight(vec![IEntry::Parity(p)]);
            let lv = limit_action(&d, &zeta, &[], 0, 3, 8).unwrap();
            let odd = (p as i64 - s.abs()).rem_euclid(2) == 1;
            assert_eq!(lv.beta, IExtInt::Fin(odd as i64), "s = {s}, ζ = {p}");
            let want = if odd { vec![(vec![0], one())] } else { vec![] };
            assert_eq!(lv.btil, want);
        }
    }
}

#[test]
fn limit_stabilizes_on_a2_flip() {
    let d = CartanSatakeDatum::a2_flip(1);
    let zeta = IWeight(vec![IEntry::Signed(0)]);
    for word in words(2, 2) {
        for i in 0..2 {
            let a = limit_action(&d, &zeta, &word, i, 3, 8).unwrap();
            assert!(a.level <= 2, "{word:?}");
            let n: Sqrt2Scalar = a.btil.iter().fold(Sqrt2Scalar::ZERO, |acc, (_, z)| acc + *z * *z);
            assert!(n.is_zero() || n.is_one() || n == Sqrt2Scalar::new(1, 0, 1), "{word:?} {n:?}");
        }
    }
    assert!(matches!(limit_action(&d, &zeta, &[0], 0, 50, 3), Err(Error::NoStabilization { .. })));
}
