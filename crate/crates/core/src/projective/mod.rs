//! The projective system B(λ)^σ, its structure maps and the limit
//! ıcrystal T_ζ ⊗ B(∞) obtained from it.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::binfty::canonical_word_in;
use crate::crystal::{BLambda, HighestWeightModel};
use crate::error::{Error, Result};
use crate::icrystal::{ICrystal, ICrystalData, ICrystalGraph, ICrystalMorphism, Vector};
use crate::itensor::{induce_icrystal, tensor_icrystal_crystal, InduceMode, TensorIC};
use crate::report::Report;
use crate::rootdata::{project_weight, CartanSatakeDatum, IExtInt, IWeight, OrbitKind, Sqrt2Scalar, Weight};

/// The weight σ attached to the parameters s_i.
pub fn compute_sigma(d: &CartanSatakeDatum) -> Weight {
    Weight(
        (0..d.rank())
            .map(|i| match d.kind(i) {
                OrbitKind::Fixed => d.s(i).abs(),
                OrbitKind::Orthogonal => 0,
                OrbitKind::Adjacent if d.in_i_tau(i) => d.s(i).max(0),
                OrbitKind::Adjacent => (-d.s(d.tau(i))).max(0),
            })
            .collect(),
    )
}

/// ℬ(0)^σ: a single element of weight σ̄ killed by every B̃_i, with β_i = 0.
pub fn b0_sigma(d: &CartanSatakeDatum) -> Result<ICrystalGraph> {
    let r = d.rank();
    ICrystalGraph::from_data(
        d.clone(),
        ICrystalData {
            names: vec![String::from("b_0^σ")],
            wti: vec![project_weight(&compute_sigma(d), d)],
            beta: vec![vec![IExtInt::Fin(0); r]],
            btil: vec![vec![Vec::new(); r]],
        },
    )
}

/// B(λ)^σ = ℬ(0)^σ ⊗ B(λ). Element k of the result is b_0^σ ⊗ (handle k of B(λ)).
pub fn b_lambda_sigma(d: &CartanSatakeDatum, lambda: &Weight, cap: usize) -> Result<(BLambda, ICrystalGraph)> {
    let bl = HighestWeightModel::new(d, lambda)?.explicit(cap)?;
    let g = tensor_icrystal_crystal(&b0_sigma(d)?, &bl.graph)?;
    Ok((bl, g))
}

/// B(λ) with its induced ıcrystal structure.
pub fn b_lambda_induced(d: &CartanSatakeDatum, lambda: &Weight, cap: usize) -> Result<(BLambda, ICrystalGraph)> {
    let bl = HighestWeightModel::new(d, lambda)?.explicit(cap)?;
    let g = induce_icrystal(&bl.graph, InduceMode::Seminormal)?;
    Ok((bl, g))
}

/// ν + τν.
pub fn nu_sym(d: &CartanSatakeDatum, nu: &Weight) -> Weight {
    nu + &nu.twist(d)
}

/// A map of source elements given by B(∞)-words. Every in-edge word of a
/// source element has to land on the same target (or all on 0).
fn word_map(src: &BLambda, eval: impl Fn(&[usize]) -> Option<usize>) -> Result<ICrystalMorphism> {
    let d = src.graph.datum_ref();
    let mut cols = Vec::with_capacity(src.graph.len());
    for (b, words) in src.in_edge_words().into_iter().enumerate() {
        let mut image: Option<Option<usize>> = None;
        for w in &words {
            let t = eval(w);
            match image {
                None => image = Some(t),
                Some(prev) if prev != t => {
                    return Err(Error::WordInconsistency(format!(
                        "element {} of B({}) via word {}",
                        b,
                        src.lambda,
                        crate::rootdata::fmt_word(d, w)
                    )))
                }
                _ => {}
            }
        }
        let mut col = Vector::new();
        if let Some(Some(t)) = image {
            col.insert(t, Sqrt2Scalar::int(1));
        }
        cols.push(col);
    }
    Ok(ICrystalMorphism { cols })
}

/// A structure map together with its source and target.
#[derive(Debug, Clone)]
pub struct StructureMap {
    pub src: ICrystalGraph,
    pub tgt: ICrystalGraph,
    pub map: ICrystalMorphism,
}

fn check_dominant(w: &Weight) -> Result<()> {
    if !w.is_dominant() {
        return Err(Error::NotDominant(format!("{w}")));
    }
    Ok(())
}

/// γ_ν : B(σ + ν + τν) → ℬ(0)^σ, nonzero only on the highest element.
pub fn gamma_nu(d: &CartanSatakeDatum, nu: &Weight, cap: usize) -> Result<StructureMap> {
    check_dominant(nu)?;
    let lam = &compute_sigma(d) + &nu_sym(d, nu);
    let (bl, src) = b_lambda_induced(d, &lam, cap)?;
    let map = word_map(&bl, |w| w.is_empty().then_some(0))?;
    Ok(StructureMap { src, tgt: b0_sigma(d)?, map })
}

/// ρ_λ : B(σ + λ) → B(λ)^σ, π_{σ+λ}(b) ↦ π_λ(b)^σ.
pub fn rho_lambda(d: &CartanSatakeDatum, lambda: &Weight, cap: usize) -> Result<StructureMap> {
    check_dominant(lambda)?;
    let (bs, src) = b_lambda_induced(d, &(&compute_sigma(d) + lambda), cap)?;
    let (bl, tgt) = b_lambda_sigma(d, lambda, cap)?;
    let map = word_map(&bs, |w| bl.apply_word(w))?;
    Ok(StructureMap { src, tgt, map })
}

/// The embedding B(λ)^σ → B(σ + λ), π_λ(b)^σ ↦ π_{σ+λ}(b).
pub fn rho_section(d: &CartanSatakeDatum, lambda: &Weight, cap: usize) -> Result<StructureMap> {
    check_dominant(lambda)?;
    let (bl, src) = b_lambda_sigma(d, lambda, cap)?;
    let (bs, tgt) = b_lambda_induced(d, &(&compute_sigma(d) + lambda), cap)?;
    let map = word_map(&bl, |w| bs.apply_word(w))?;
    Ok(StructureMap { src, tgt, map })
}

/// π^ı_{λ,ν} : B(λ + ν + τν)^σ → B(λ)^σ.
pub fn pi_i_lambda_nu(d: &CartanSatakeDatum, lambda: &Weight, nu: &Weight, cap: usize) -> Result<StructureMap> {
    check_dominant(lambda)?;
    check_dominant(nu)?;
    let (big, src) = b_lambda_sigma(d, &(lambda + &nu_sym(d, nu)), cap)?;
    let (small, tgt) = b_lambda_sigma(d, lambda, cap)?;
    let map = word_map(&big, |w| small.apply_word(w))?;
    Ok(StructureMap { src, tgt, map })
}

/// Elements b of `g` with β_i(b) = 0 and B̃_i b = 0 for every i.
pub fn killed_elements(g: &ICrystalGraph) -> Vec<usize> {
    let r = g.datum_ref().rank();
    g.elements().filter(|&b| (0..r).all(|i| g.beta_at(b, i) == IExtInt::Fin(0) && g.row(b, i).is_empty())).collect()
}

/// In B(σ + ν + τν), the highest element is the only element killed by
/// every B̃_i with β_i = 0.
pub fn check_highest_weight_characterization(d: &CartanSatakeDatum, nu: &Weight, cap: usize) -> Result<Report> {
    check_dominant(nu)?;
    let (_, g) = b_lambda_induced(d, &(&compute_sigma(d) + &nu_sym(d, nu)), cap)?;
    Ok(characterization_report(&g))
}

/// The characterization on an explicit graph whose element 0 is meant to be highest.
pub fn characterization_report(g: &ICrystalGraph) -> Report {
    let mut rep = Report::new();
    let killed = killed_elements(g);
    if !killed.contains(&0) {
        rep.push("highest", format!("{} is not killed", g.data().names[0]));
    }
    for b in killed.into_iter().filter(|&b| b != 0) {
        rep.push("unique", format!("{} is killed as well", g.data().names[b]));
    }
    rep
}

/// The minimal dominant λ with ¯(σ + λ) = ζ.
pub fn chain_start(d: &CartanSatakeDatum, zeta: &IWeight) -> Result<Weight> {
    if zeta.0.len() != d.i_tau().len() {
        return Err(Error::InvalidParameter("ı-weight has the wrong length".into()));
    }
    let rest = zeta.sub(&project_weight(&compute_sigma(d), d));
    let mut lam = Weight::zero(d.rank());
    for &i in d.i_tau() {
        let e = rest.at(d, i);
        match d.kind(i) {
            OrbitKind::Fixed => lam.0[i] = e.parity() as i64,
            _ => {
                let v = e.signed();
                lam.0[i] = v.max(0);
                lam.0[d.tau(i)] = (-v).max(0);
            }
        }
    }
    debug_assert_eq!(project_weight(&(&compute_sigma(d) + &lam), d), *zeta);
    Ok(lam)
}

/// β_i and B̃_i of t_ζ ⊗ b in the limit, with B(∞) elements named by
/// canonical words. `level` is the first k of the agreeing run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitValue {
    pub beta: IExtInt,
    pub btil: Vec<(Vec<usize>, Sqrt2Scalar)>,
    pub level: usize,
}

fn level_value(d: &CartanSatakeDatum, b0: &ICrystalGraph, lam: &Weight, word: &[usize], i: usize) -> Result<Option<(IExtInt, Vec<(Vec<usize>, Sqrt2Scalar)>)>> {
    let model = HighestWeightModel::new(d, lam)?;
    let Some(b) = model.apply_word(word) else { return Ok(None) };
    let t = TensorIC::new(b0, &model)?;
    let x = (0usize, b);
    let beta = t.beta(&x, i)?;
    let mut out: BTreeMap<Vec<usize>, Sqrt2Scalar> = BTreeMap::new();
    for ((_, y), z) in t.btil(&x, i)? {
        out.insert(canonical_word_in(&model, &y), z);
    }
    Ok(Some((beta, out.into_iter().collect())))
}

/// β_i(t_ζ ⊗ b) and B̃_i(t_ζ ⊗ b) for the element b of B(∞) named by `word`,
/// read off B(λ_k)^σ along λ_{k+1} = λ_k + 2ρ until `agree` consecutive
/// levels coincide.
pub fn limit_action(d: &CartanSatakeDatum, zeta: &IWeight, word: &[usize], i: usize, agree: usize, max_depth: usize) -> Result<LimitValue> {
    if i >= d.rank() || word.iter().any(|&j| j >= d.rank()) {
        return Err(Error::InvalidParameter("index out of range".into()));
    }
    let b0 = b0_sigma(d)?;
    let step = Weight(vec![2; d.rank()]);
    let mut lam = chain_start(d, zeta)?;
    let mut run: Option<((IExtInt, Vec<(Vec<usize>, Sqrt2Scalar)>), usize, usize)> = None;
    for k in 0..=max_depth {
        if let Some(v) = level_value(d, &b0, &lam, word, i)? {
            run = match run {
                Some((prev, start, n)) if prev == v => Some((prev, start, n + 1)),
                _ => Some((v, k, 1)),
            };
            if let Some(((beta, btil), start, n)) = &run {
                if *n >= agree.max(1) {
                    return Ok(LimitValue { beta: *beta, btil: btil.clone(), level: *start });
                }
            }
        }
        lam = &lam + &step;
    }
    Err(Error::NoStabilization {
        depth: max_depth,
        detail: format!("B̃_{} on {}", d.label(i), crate::rootdata::fmt_word(d, word)),
    })
}
