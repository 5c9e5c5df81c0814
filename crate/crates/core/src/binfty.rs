//! B(∞) through stabilized F̃-words: an element is F̃_{i_r} ⋯ F̃_{i_1} b_∞,
//! evaluated inside B(Nρ) for N large enough and cross-checked at N + 1.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::vec::Vec;

use crate::crystal::{BLambda, Crystal, HighestWeightModel};
use crate::error::{Error, Result};
use crate::rootdata::fmt_word;
use crate::rootdata::{CartanSatakeDatum, Weight};

/// Stable statistics of a word in B(∞).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BInftyElement {
    pub word: Vec<usize>,
    pub wt: Weight,
    pub eps: Vec<i64>,
    pub phi: Vec<i64>,
}

/// N = (1 + A_max)(len + 1): each F̃ step moves any φ_j by at most 1 + A_max.
pub fn stabilization_bound(d: &CartanSatakeDatum, len: usize) -> i64 {
    (1 + d.a_max()) * (len as i64 + 1)
}

fn rho_multiple(d: &CartanSatakeDatum, n: i64) -> Weight {
    Weight(alloc::vec![n; d.rank()])
}

fn check_word(d: &CartanSatakeDatum, word: &[usize]) -> Result<()> {
    if let Some(&i) = word.iter().find(|&&i| i >= d.rank()) {
        return Err(Error::InvalidParameter(format!("index {} out of range", i + 1)));
    }
    Ok(())
}

/// π_λ of a word as an element of the lazy model of B(λ), or None for 0.
pub fn binfty_eval(d: &CartanSatakeDatum, word: &[usize], lambda: &Weight) -> Result<Option<Vec<usize>>> {
    check_word(d, word)?;
    Ok(HighestWeightModel::new(d, lambda)?.apply_word(word))
}

fn stats_at(d: &CartanSatakeDatum, word: &[usize], n: i64) -> Result<(Weight, Vec<i64>, Vec<i64>)> {
    let lam = rho_multiple(d, n);
    let model = HighestWeightModel::new(d, &lam)?;
    let b = model.apply_word(word).ok_or_else(|| Error::Instability {
        word: fmt_word(d, word),
        detail: format!("the word dies in B({lam})"),
    })?;
    let wt = &model.wt(&b) - &lam;
    let eps = (0..d.rank()).map(|i| model.eps(&b, i).fin().expect("B(λ) is seminormal")).collect();
    let phi = (0..d.rank()).map(|i| model.phi(&b, i).fin().expect("B(λ) is seminormal") - n).collect();
    Ok((wt, eps, phi))
}

pub fn binfty_stats(d: &CartanSatakeDatum, word: &[usize]) -> Result<BInftyElement> {
    check_word(d, word)?;
    let n = stabilization_bound(d, word.len());
    let (wt, eps, phi) = stats_at(d, word, n)?;
    let again = stats_at(d, word, n + 1)?;
    if again != (wt.clone(), eps.clone(), phi.clone()) {
        return Err(Error::Instability { word: fmt_word(d, word), detail: format!("values differ at N = {n} and N + 1") });
    }
    Ok(BInftyElement { word: word.to_vec(), wt, eps, phi })
}

pub fn in_binfty_lambda(d: &CartanSatakeDatum, word: &[usize], lambda: &Weight) -> Result<bool> {
    Ok(binfty_eval(d, word, lambda)?.is_some())
}

/// Equality in B(∞), decided in B(Nρ) and confirmed in B((N + 1)ρ).
pub fn binfty_equal(d: &CartanSatakeDatum, w1: &[usize], w2: &[usize]) -> Result<bool> {
    check_word(d, w1)?;
    check_word(d, w2)?;
    let n = stabilization_bound(d, w1.len().max(w2.len()));
    let mut verdict = None;
    for m in [n, n + 1] {
        let model = HighestWeightModel::new(d, &rho_multiple(d, m))?;
        let (a, b) = (model.apply_word(w1), model.apply_word(w2));
        if a.is_none() || b.is_none() {
            return Err(Error::Instability { word: fmt_word(d, if a.is_none() { w1 } else { w2 }), detail: format!("dies at N = {m}") });
        }
        let eq = a == b;
        if verdict.is_some_and(|v| v != eq) {
            return Err(Error::Instability { word: fmt_word(d, w1), detail: "equality changes between N and N + 1".into() });
        }
        verdict = Some(eq);
    }
    Ok(verdict.unwrap())
}

fn require_below(lambda: &Weight, mu: &Weight) -> Result<()> {
    if !lambda.is_dominant() || !mu.is_dominant() || (0..lambda.rank()).any(|i| mu.get(i) > lambda.get(i)) {
        return Err(Error::Precondition(format!("need dominant μ = {mu} ≤ λ = {lambda} coordinatewise")));
    }
    Ok(())
}

/// π_λ(word) when the word lies in B(∞;μ), otherwise None.
pub fn b_lambda_mu_member(d: &CartanSatakeDatum, word: &[usize], lambda: &Weight, mu: &Weight) -> Result<Option<Vec<usize>>> {
    require_below(lambda, mu)?;
    if binfty_eval(d, word, mu)?.is_none() {
        return Ok(None);
    }
    binfty_eval(d, word, lambda)
}

/// B(λ;μ) as handles of an explicit B(λ), found by walking B(μ) and B(λ)
/// in lockstep from their highest elements.
pub fn b_lambda_mu(d: &CartanSatakeDatum, lambda: &Weight, mu: &Weight, cap: usize) -> Result<(BLambda, Vec<usize>)> {
    require_below(lambda, mu)?;
    let big = HighestWeightModel::new(d, lambda)?.explicit(cap)?;
    let small = HighestWeightModel::new(d, mu)?.explicit(cap)?;
    let mut image: BTreeMap<usize, usize> = BTreeMap::from([(0, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let y = image[&x];
        for i in 0..d.rank() {
            if let Some(x2) = small.graph.f(&x, i) {
                if let alloc::collections::btree_map::Entry::Vacant(slot) = image.entry(x2) {
                    slot.insert(big.graph.f(&y, i).expect("B(∞;μ) ⊂ B(∞;λ)"));
                    queue.push_back(x2);
                }
            }
        }
    }
    let mut set: Vec<usize> = image.into_values().collect();
    set.sort_unstable();
    Ok((big, set))
}

/// The F̃-word read backwards along the greedy Ẽ-path (smallest index first)
/// from b to the highest element. It only depends on the B(∞) element, since
/// π_λ commutes with Ẽ_i and preserves ε_i.
pub fn canonical_word_in(model: &HighestWeightModel, b: &[usize]) -> Vec<usize> {
    let r = model.datum().rank();
    let mut word = Vec::new();
    let mut x = b.to_vec();
    'outer: loop {
        for i in 0..r {
            if let Some(y) = model.e(&x, i) {
                word.push(i);
                x = y;
                continue 'outer;
            }
        }
        break;
    }
    word.reverse();
    word
}

/// The canonical word of the element a word names.
pub fn canonical_word(d: &CartanSatakeDatum, word: &[usize]) -> Result<Vec<usize>> {
    check_word(d, word)?;
    let n = stabilization_bound(d, word.len());
    let model = HighestWeightModel::new(d, &rho_multiple(d, n))?;
    let b = model.apply_word(word).ok_or_else(|| Error::Instability { word: fmt_word(d, word), detail: format!("dies at N = {n}") })?;
    Ok(canonical_word_in(&model, &b))
}

/// Canonical word of Ẽ_i b, or None when Ẽ_i b = 0.
pub fn binfty_e(d: &CartanSatakeDatum, word: &[usize], i: usize) -> Result<Option<Vec<usize>>> {
    check_word(d, word)?;
    check_word(d, &[i])?;
    let n = stabilization_bound(d, word.len());
    let model = HighestWeightModel::new(d, &rho_multiple(d, n))?;
    let b = model.apply_word(word).ok_or_else(|| Error::Instability { word: fmt_word(d, word), detail: format!("dies at N = {n}") })?;
    Ok(model.e(&b, i).map(|x| canonical_word_in(&model, &x)))
}
