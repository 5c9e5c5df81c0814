//! The verification suite behind `verify-paper` and the acceptance tests.
//!
//! A case expands into items. Items run on a small thread pool and results
//! come back ordered by item id, so output does not depend on scheduling.

use std::collections::{BTreeMap, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Mutex;

use icrystal_core::binfty::{binfty_e, binfty_stats, canonical_word};
use icrystal_core::crystal::*;
use icrystal_core::icrystal::*;
use icrystal_core::itensor::{check_associativity, induce_icrystal, tensor_icrystal_crystal, InduceMode};
use icrystal_core::projective::*;
use icrystal_core::qoracle::*;
use icrystal_core::rootdata::OrbitKind;
use icrystal_core::{CartanSatakeDatum, IEntry, IExtInt, IWeight, Sqrt2Scalar, Weight};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::format::{icrystal_to_json, crystal_to_json};

/// Knobs shared by all cases.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cap: usize,
    pub depth: usize,
    pub threads: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        let threads = std::thread::available_parallelism().map_or(4, |n| n.get());
        SuiteConfig { seed: 0x1c7_57a1, cap: icrystal_core::DEFAULT_CAP, depth: 12, threads }
    }
}

/// Outcome of one item.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItemResult {
    pub case: &'static str,
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

type Outcome = Result<String, String>;
type Check = Box<dyn FnOnce() -> Outcome + Send>;

struct Item {
    id: String,
    check: Check,
}

fn item(id: impl Into<String>, f: impl FnOnce() -> Outcome + Send + 'static) -> Item {
    Item { id: id.into(), check: Box::new(f) }
}

pub const CASES: [&str; 12] =
    ["examples", "tensor", "assoc", "a=-1", "norms", "golden", "a=2", "a=0", "projective", "limit", "diagonal", "s-conditions"];

/// Short description of each case for `--help` style listings.
pub fn describe(case: &str) -> &'static str {
    match case {
        "examples" => "built-in families pass the axioms; junction maps are equivalences",
        "tensor" => "random ıcrystal ⊗ crystal products pass the axioms",
        "assoc" => "random triples tensor associatively",
        "a=-1" => "rank-two oracle equals the tensor rule with the natural crystal",
        "norms" => "norm recursion, closed form and leading-term table agree",
        "golden" => "checked-in graphs are reproduced byte for byte",
        "a=2" => "oracle for fixed points equals tensor and induction",
        "a=0" => "oracle for the diagonal type equals the tensor rule and the grid",
        "projective" => "structure maps are very strict and coherent",
        "limit" => "limit values agree at three consecutive depths",
        "diagonal" => "limit values on the diagonal type follow the closed formulas",
        "s-conditions" => "S-conditions and their consequences hold on B(λ)",
        _ => "",
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

// ---------------------------------------------------------------- runner

fn run_items(case: &'static str, items: Vec<Item>, threads: usize) -> Vec<ItemResult> {
    let n = items.len();
    let queue = Mutex::new(items.into_iter().enumerate().collect::<VecDeque<_>>());
    let done: Mutex<Vec<Option<ItemResult>>> = Mutex::new(vec![None; n]);
    std::thread::scope(|sc| {
        for _ in 0..threads.clamp(1, n.max(1)) {
            sc.spawn(|| loop {
                let Some((k, it)) = queue.lock().unwrap().pop_front() else { break };
                let out = catch_unwind(AssertUnwindSafe(it.check)).unwrap_or_else(|p| {
                    let msg = p
                        .downcast_ref::<String>()
                        .cloned()
                        .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                        .unwrap_or_else(|| "panic".into());
                    Err(format!("panicked: {msg}"))
                });
                let (pass, detail) = match out {
                    Ok(d) => (true, d),
                    Err(d) => (false, d),
                };
                done.lock().unwrap()[k] = Some(ItemResult { case, id: it.id, pass, detail });
            });
        }
    });
    done.into_inner().unwrap().into_iter().map(|r| r.expect("every item ran")).collect()
}

/// Runs the named cases in order; unknown names are an error.
pub fn run_cases(cases: &[&str], cfg: &SuiteConfig) -> Result<Vec<ItemResult>, String> {
    let mut out = Vec::new();
    for c in cases {
        let Some(&name) = CASES.iter().find(|x| *x == c) else {
            return Err(format!("unknown case {c:?}; known cases: {}", CASES.join(", ")));
        };
        out.extend(run_items(name, case_items(name, cfg), cfg.threads));
    }
    Ok(out)
}

fn case_items(case: &str, cfg: &SuiteConfig) -> Vec<Item> {
    match case {
        "examples" => examples_items(),
        "tensor" => tensor_items(cfg.seed, 200),
        "assoc" => assoc_items(cfg.seed, 50),
        "a=-1" => adjacent_oracle_items(),
        "norms" => norm_items(),
        "golden" => golden_items(),
        "a=2" => fixed_oracle_items(),
        "a=0" => diagonal_oracle_items(),
        "projective" => projective_items(cfg.cap),
        "limit" => limit_items(cfg.depth),
        "diagonal" => diagonal_limit_items(cfg.depth),
        "s-conditions" => s_condition_items(),
        _ => unreachable!("checked by run_cases"),
    }
}

// ---------------------------------------------------------------- shared data

/// One datum of each bundled type.
pub fn three_data() -> Vec<CartanSatakeDatum> {
    vec![CartanSatakeDatum::a1(1), CartanSatakeDatum::a1xa1(), CartanSatakeDatum::a2_flip(1)]
}

fn blambda(d: &CartanSatakeDatum, l: &[i64], cap: usize) -> Result<BLambda, String> {
    HighestWeightModel::new(d, &Weight(l.to_vec())).and_then(|m| m.explicit(cap)).map_err(e2s)
}

fn zetas(d: &CartanSatakeDatum) -> Vec<IWeight> {
    let i = d.i_tau()[0];
    match d.kind(i) {
        OrbitKind::Fixed => (0..2).map(|p| IWeight(vec![IEntry::Parity(p)])).collect(),
        _ => (-2..=2).map(|z| IWeight(vec![IEntry::Signed(z)])).collect(),
    }
}

fn words(r: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        let next: Vec<Vec<usize>> = layer
            .iter()
            .flat_map(|x| {
                (0..r).map(move |i| {
                    let mut y = x.clone();
                    y.push(i);
                    y
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn axioms_ok(g: &ICrystalGraph, what: &str) -> Result<(), String> {
    let rep = check_icrystal_axioms(g);
    ensure(rep.is_ok(), || format!("{what}: {rep}"))
}

/// Equal tables after matching elements by name.
pub fn same_by_names(a: &ICrystalGraph, b: &ICrystalGraph) -> Result<(), String> {
    ensure(a.len() == b.len(), || format!("sizes {} and {}", a.len(), b.len()))?;
    let pos: BTreeMap<&str, usize> = b.data().names.iter().enumerate().map(|(k, n)| (n.as_str(), k)).collect();
    let map: Vec<usize> = a
        .data()
        .names
        .iter()
        .map(|n| pos.get(n.as_str()).copied().ok_or_else(|| format!("{n} is missing")))
        .collect::<Result<_, _>>()?;
    for x in a.elements() {
        let y = map[x];
        let name = &a.data().names[x];
        ensure(a.wti_at(x) == b.wti_at(y), || format!("ı-weight of {name}"))?;
        for i in 0..a.datum_ref().rank() {
            ensure(a.beta_at(x, i) == b.beta_at(y, i), || format!("β_{i} of {name}: {} vs {}", a.beta_at(x, i), b.beta_at(y, i)))?;
            let mut row: Vec<(usize, Sqrt2Scalar)> = a.row(x, i).iter().map(|&(t, z)| (map[t], z)).collect();
            row.sort_by_key(|p| p.0);
            ensure(row == b.row(y, i), || format!("B̃_{i} of {name}"))?;
        }
    }
    Ok(())
}

fn same_tables(a: &ICrystalGraph, b: &ICrystalGraph) -> Result<(), String> {
    let (x, y) = (a.data(), b.data());
    ensure(x.wti == y.wti, || "ı-weights differ".into())?;
    ensure(x.beta == y.beta, || "β differs".into())?;
    ensure(x.btil == y.btil, || "B̃ differs".into())
}

// ---------------------------------------------------------------- examples

/// Parameter grids for the eight built-in families.
pub fn family_instances() -> Vec<(CartanSatakeDatum, BuiltinFamily)> {
    let mut out = vec![];
    let mut all = vec![];
    for s in -2..=2 {
        all.push(CartanSatakeDatum::a1(s));
    }
    all.push(CartanSatakeDatum::a1xa1());
    for s in -1..=2 {
        all.push(CartanSatakeDatum::a2_flip(s));
    }
    for d in &all {
        out.push((d.clone(), BuiltinFamily::Trivial));
        for z in zetas(d) {
            out.push((d.clone(), BuiltinFamily::TZeta(z)));
        }
        let i = d.i_tau()[0];
        match d.kind(i) {
            OrbitKind::Fixed => {
                for n in -3..=3 {
                    out.push((d.clone(), BuiltinFamily::Rank1 { n }));
                }
                for n in 1..=3 {
                    out.push((d.clone(), BuiltinFamily::Pair { n }));
                }
            }
            OrbitKind::Orthogonal => {
                for n in 0..=4 {
                    out.push((d.clone(), BuiltinFamily::Orthogonal { n }));
                }
            }
            _ => {
                let s = d.s(i);
                for n_minus in 0..=3 {
                    for n_plus in s - 3..=s + 3 {
                        out.push((d.clone(), BuiltinFamily::Adjacent { n_minus, n_plus }));
                        if n_minus > 0 && n_plus - s > -1 && n_plus - s < n_minus {
                            out.push((d.clone(), BuiltinFamily::Vee { n_minus, n_plus }));
                            out.push((d.clone(), BuiltinFamily::Wedge { n_minus, n_plus }));
                        }
                    }
                }
            }
        }
    }
    out
}

fn family_key(f: &BuiltinFamily) -> &'static str {
    match f {
        BuiltinFamily::Trivial => "trivial",
        BuiltinFamily::TZeta(_) => "t_zeta",
        BuiltinFamily::Rank1 { .. } => "bi_rank1",
        BuiltinFamily::Pair { .. } => "bi_pair",
        BuiltinFamily::Orthogonal { .. } => "bi_orthogonal",
        BuiltinFamily::Adjacent { .. } => "bi_adjacent",
        BuiltinFamily::Vee { .. } => "bi_vee",
        BuiltinFamily::Wedge { .. } => "bi_wedge",
    }
}

fn examples_items() -> Vec<Item> {
    let mut by_family: BTreeMap<&'static str, Vec<(CartanSatakeDatum, BuiltinFamily)>> = BTreeMap::new();
    for (d, f) in family_instances() {
        by_family.entry(family_key(&f)).or_default().push((d, f));
    }
    let mut items = vec![];
    for (key, list) in by_family {
        items.push(item(format!("axioms/{key}"), move || {
            for (d, f) in &list {
                let g = make_builtin(d, f).map_err(e2s)?;
                axioms_ok(&g, &format!("{f:?}"))?;
            }
            Ok(format!("{} instances", list.len()))
        }));
    }
    for key in ["bi_pair", "bi_vee", "bi_wedge"] {
        items.push(item(format!("equivalence/{key}"), move || {
            let mut n = 0;
            for (d, f) in family_instances().into_iter().filter(|(_, f)| family_key(f) == key) {
                let (src, tgt, m) = builtin_equivalence(&d, &f).map_err(e2s)?;
                let c = check_icrystal_morphism(&src, &tgt, &m).map_err(e2s)?;
                ensure(c.kind() == IMorphismKind::Equivalence, || format!("{f:?} classifies as {:?}", c.kind()))?;
                n += 1;
            }
            Ok(format!("{n} equivalences, none an isomorphism"))
        }));
    }
    items.push(item("graph-shapes", || {
        let d = CartanSatakeDatum::a1(0);
        let pair = bi_pair(&d, 2).map_err(e2s)?;
        let e: Vec<(usize, usize)> = pair.graph_edges().iter().map(|e| (e.0, e.2)).collect();
        ensure(e == vec![(0, 1), (1, 0)], || format!("pair edges {e:?}"))?;
        let d = CartanSatakeDatum::a1xa1();
        for n in 0..=4 {
            let g = bi_orthogonal(&d, n).map_err(e2s)?;
            let e: Vec<(usize, usize)> = g.graph_edges().iter().map(|e| (e.0, e.2)).collect();
            let want: Vec<(usize, usize)> = (0..n as usize).map(|k| (k, k + 1)).collect();
            ensure(e == want, || format!("path of length {n}: {e:?}"))?;
        }
        let empty = disjoint_union(&trivial(&d).map_err(e2s)?, &trivial(&d).map_err(e2s)?).map_err(e2s)?;
        ensure(empty.graph_edges().is_empty(), || "trivial union has edges".into())?;
        Ok("2-cycle, paths, edgeless".into())
    }));
    items
}

// ---------------------------------------------------------------- random products

fn random_datum(rng: &mut ChaCha8Rng) -> CartanSatakeDatum {
    match rng.gen_range(0..3) {
        0 => CartanSatakeDatum::a1(rng.gen_range(-3..=3)),
        1 => CartanSatakeDatum::a1xa1(),
        _ => CartanSatakeDatum::a2_flip(rng.gen_range(-2..=3)),
    }
}

/// A random built-in ıcrystal with at most `max` elements.
pub fn random_icrystal(rng: &mut ChaCha8Rng, d: &CartanSatakeDatum, max: usize) -> (String, ICrystalGraph) {
    let zs = zetas(d);
    loop {
        let i = d.i_tau()[0];
        let fam = match (rng.gen_range(0..6), d.kind(i)) {
            (0, _) => BuiltinFamily::Trivial,
            (1, _) => BuiltinFamily::TZeta(zs.choose(rng).unwrap().clone()),
            (2 | 3, OrbitKind::Fixed) => BuiltinFamily::Rank1 { n: rng.gen_range(-6..=6) },
            (_, OrbitKind::Fixed) => BuiltinFamily::Pair { n: rng.gen_range(1..=5) },
            (_, OrbitKind::Orthogonal) => BuiltinFamily::Orthogonal { n: rng.gen_range(0..=8) },
            (2 | 3, _) => {
                let s = d.s(i);
                BuiltinFamily::Adjacent { n_minus: rng.gen_range(0..=6), n_plus: s + rng.gen_range(-4..=4) }
            }
            (k, _) => {
                let s = d.s(i);
                let n_minus = rng.gen_range(1..=5);
                let n_plus = s + rng.gen_range(0..n_minus);
                if k == 4 {
                    BuiltinFamily::Vee { n_minus, n_plus }
                } else {
                    BuiltinFamily::Wedge { n_minus, n_plus }
                }
            }
        };
        let g = make_builtin(d, &fam).expect("parameters are in range");
        if g.len() <= max {
            return (format!("{fam:?}"), g);
        }
    }
}

/// A random built-in crystal with at most `max` elements.
pub fn random_crystal(rng: &mut ChaCha8Rng, d: &CartanSatakeDatum, max: usize) -> (String, CrystalGraph) {
    let r = d.rank();
    loop {
        let (name, c) = match rng.gen_range(0..5) {
            0 => {
                let l: Vec<i64> = (0..r).map(|_| rng.gen_range(-3..=3)).collect();
                (format!("T_{l:?}"), t_lambda(d, &Weight(l)).unwrap())
            }
            1 if r == 1 => {
                let (a, b) = (rng.gen_range(0..=5), rng.gen_range(0..=5));
                (format!("B({a})⊗B({b})"), tensor_crystals(&b_n(d, a).unwrap(), &b_n(d, b).unwrap()).unwrap())
            }
            1 => {
                let (a, b) = (rng.gen_range(0..r), rng.gen_range(0..r));
                let c = tensor_crystals(&fundamental(d, a).unwrap(), &fundamental(d, b).unwrap()).unwrap();
                (format!("B(ϖ{a})⊗B(ϖ{b})"), c)
            }
            _ => {
                let l: Vec<i64> = (0..r).map(|_| rng.gen_range(0..=if r == 1 { 12 } else { 3 })).collect();
                match blambda(d, &l, max) {
                    Ok(b) => (format!("B({l:?})"), b.graph),
                    Err(_) => continue,
                }
            }
        };
        if c.len() <= max {
            return (name, c);
        }
    }
}

fn tensor_items(seed: u64, count: usize) -> Vec<Item> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let d = random_datum(&mut rng);
            let (n1, b1) = random_icrystal(&mut rng, &d, 40);
            let (n2, b2) = random_crystal(&mut rng, &d, 40);
            item(format!("pair-{k:03}"), move || {
                let g = tensor_icrystal_crystal(&b1, &b2).map_err(e2s)?;
                axioms_ok(&g, &format!("{n1} ⊗ {n2}"))?;
                Ok(format!("{n1} ⊗ {n2}: {} elements", g.len()))
            })
        })
        .collect()
}

fn assoc_items(seed: u64, count: usize) -> Vec<Item> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xa550c);
    let mut items = vec![];
    while items.len() < count {
        let d = random_datum(&mut rng);
        let (n1, b1) = random_icrystal(&mut rng, &d, 40);
        let (n2, b2) = random_crystal(&mut rng, &d, 40);
        let (n3, b3) = random_crystal(&mut rng, &d, 40);
        // keep the triple product small enough for the time budget
        if b1.len() * b2.len() * b3.len() > 4000 {
            continue;
        }
        items.push(item(format!("triple-{:03}", items.len()), move || {
            match check_associativity(&b1, &b2, &b3).map_err(e2s)? {
                None => Ok(format!("({n1} ⊗ {n2}) ⊗ {n3}")),
                Some(w) => Err(format!("({n1} ⊗ {n2}) ⊗ {n3}: {} at {}: {}", w.element, w.i, w.detail)),
            }
        }));
    }
    items
}

// ---------------------------------------------------------------- oracle cases

fn adjacent_oracle_items() -> Vec<Item> {
    let mut items = vec![];
    for s in -1..=2 {
        for nm in 0..=5 {
            items.push(item(format!("s={s}/n-={nm}"), move || {
                let d = CartanSatakeDatum::a2_flip(s);
                let nat = natural(&d).map_err(e2s)?;
                let mut seen = [0usize; 6];
                for n in -4..=4 {
                    let np = n + s;
                    let ctx = format!("n+={np}");
                    let lim = oracle_adjacent_natural(&d, nm, np).map_err(|e| format!("{ctx}: {e}"))?;
                    let comb = tensor_icrystal_crystal(&bi_adjacent(&d, nm, np).map_err(e2s)?, &nat).map_err(e2s)?;
                    same_tables(&lim.graph, &comb).map_err(|e| format!("{ctx}: {e}"))?;
                    let (case, fams) = expected_components(&d, nm, np);
                    let irrational = lim.graph.graph_edges().iter().any(|e| e.3.parts().1 != 0);
                    ensure(irrational == (matches!(case, 2 | 4) || (case == 0 && n == 0)), || format!("{ctx}: √2 placement"))?;
                    let mut want = make_builtin(&d, &fams[0]).map_err(e2s)?;
                    for f in &fams[1..] {
                        want = disjoint_union(&want, &make_builtin(&d, f).map_err(e2s)?).map_err(e2s)?;
                    }
                    ensure(find_isomorphism(&lim.graph, &want).map_err(e2s)?.is_some(), || format!("{ctx}: shape {fams:?}"))?;
                    seen[case as usize] += 1;
                }
                Ok(format!("cases hit {seen:?}"))
            }));
        }
    }
    items
}

fn norm_items() -> Vec<Item> {
    let mut items = vec![];
    for s in -1..=2 {
        items.push(item(format!("s={s}"), move || {
            let d = CartanSatakeDatum::a2_flip(s);
            let mut checked = 0;
            let mut roots = 0;
            for nm in 0..=6 {
                for np in (s - 4)..=(s + 4) {
                    let m = build_rank_two_module(&d, ModuleParams::Adjacent(nm, np)).map_err(e2s)?;
                    for e in module_norms(&m).map_err(e2s)? {
                        let ctx = || format!("n-={nm} n+={np} k={}", e.k);
                        ensure(e.recursion == e.closed_form, || format!("{}: {} ≠ {}", ctx(), e.recursion, e.closed_form))?;
                        ensure(e.lt == e.lt_table, || format!("{}: leading term {:?} ≠ {:?}", ctx(), e.lt, e.lt_table))?;
                        roots += usize::from(e.lt.coeff.parts().1 != 0);
                        checked += 1;
                    }
                }
            }
            ensure(roots > 0 || s > 2, || "no √2 leading term was exercised".into())?;
            Ok(format!("{checked} norms, {roots} with √2"))
        }));
    }
    items
}

fn fixed_oracle_items() -> Vec<Item> {
    (-3..=3)
        .map(|s| {
            item(format!("s={s}"), move || {
                let d = CartanSatakeDatum::a1(s);
                for m in 0..=5 {
                    let lim = oracle_fixed_restriction(&d, m).map_err(e2s)?;
                    let mut got: Vec<i64> = lim
                        .components
                        .iter()
                        .map(|p| match p {
                            ModuleParams::Fixed(c) => Ok(*c),
                            other => Err(format!("unexpected component {other:?}")),
                        })
                        .collect::<Result<_, _>>()?;
                    got.sort_unstable();
                    ensure(got == expected_fixed_eigenvalues(s, m), || format!("m={m}: eigenvalues {got:?}"))?;
                    let bn = b_n(&d, m).map_err(e2s)?;
                    let comb = tensor_icrystal_crystal(&bi_rank1(&d, s).map_err(e2s)?, &bn).map_err(e2s)?;
                    same_tables(&lim.graph, &comb).map_err(|e| format!("m={m}: {e}"))?;
                    let ind = induce_icrystal(&bn, InduceMode::Seminormal).map_err(e2s)?;
                    ensure(find_isomorphism(&lim.graph, &ind).map_err(e2s)?.is_some(), || format!("m={m}: induced graph differs"))?;
                }
                Ok("m ≤ 5".into())
            })
        })
        .collect()
}

fn diagonal_oracle_items() -> Vec<Item> {
    let mut items: Vec<Item> = (0..=5)
        .map(|n| {
            item(format!("one-step/n={n}"), move || {
                let d = CartanSatakeDatum::a1xa1();
                let v = build_rank_two_module(&d, ModuleParams::Orthogonal(n)).map_err(e2s)?;
                for (j, (mt, mi)) in [(0usize, (0, 1)), (1, (1, 0))] {
                    let t = tensor_with(&v, &sl2_pair_module(&d, mt, mi).map_err(e2s)?).map_err(e2s)?;
                    let lim = oracle_crystal_limit(&t).map_err(e2s)?;
                    let comb = tensor_icrystal_crystal(&bi_orthogonal(&d, n).map_err(e2s)?, &fundamental(&d, j).map_err(e2s)?)
                        .map_err(e2s)?;
                    same_tables(&lim.graph, &comb).map_err(|e| format!("j={j}: {e}"))?;
                }
                Ok("both fundamentals".into())
            })
        })
        .collect();
    items.push(item("grid/m=2,n=3", || {
        let d = CartanSatakeDatum::a1xa1();
        let v = build_rank_two_module(&d, ModuleParams::Orthogonal(0)).map_err(e2s)?;
        let t = tensor_with(&v, &sl2_pair_module(&d, 2, 3).map_err(e2s)?).map_err(e2s)?;
        let lim = oracle_crystal_limit(&t).map_err(e2s)?;
        // module basis names are v_0 ⊗ b_{k,l}; drop the trivial factor
        let mut data = lim.graph.data().clone();
        for n in &mut data.names {
            *n = n.split_once('⊗').map_or(n.clone(), |(_, r)| r.to_string());
        }
        let renamed = ICrystalGraph::from_data(d, data).map_err(e2s)?;
        same_by_names(&renamed, &grid_icrystal(2, 3).map_err(e2s)?)?;
        Ok(format!("{} components", lim.components.len()))
    }));
    items
}

// ---------------------------------------------------------------- goldens

/// B(λ) on A1×A1 with ⟨h_i, λ⟩ = n and ⟨h_τ(i), λ⟩ = m, induced, and with
/// b named b_{k,l} for k = ε_τ(i)(b), l = ε_i(b).
pub fn grid_icrystal(m: i64, n: i64) -> icrystal_core::error::Result<ICrystalGraph> {
    let d = CartanSatakeDatum::a1xa1();
    let (i, t) = (d.i_tau()[0], d.tau(d.i_tau()[0]));
    let mut l = vec![0; 2];
    l[i] = n;
    l[t] = m;
    let bl = HighestWeightModel::new(&d, &Weight(l))?.explicit(icrystal_core::DEFAULT_CAP)?;
    let g = induce_icrystal(&bl.graph, InduceMode::Seminormal)?;
    let mut data = g.into_data();
    let c = bl.graph.data();
    for b in 0..data.names.len() {
        data.names[b] = format!("b_{{{},{}}}", c.eps[b][t], c.eps[b][i]);
    }
    ICrystalGraph::from_data(d, data)
}

pub const AI_S: [i64; 4] = [0, 1, 2, -2];

fn ai_file(s: i64) -> String {
    if s < 0 {
        format!("ai_sm{}.json", -s)
    } else {
        format!("ai_s{s}.json")
    }
}

/// B^ı(s) ⊗ B(n) over A1 for n = 0, …, 6, in one document.
pub fn ai_document(s: i64) -> icrystal_core::error::Result<String> {
    let d = CartanSatakeDatum::a1(s);
    let mut graphs = vec![];
    for n in 0..=6 {
        let g = tensor_icrystal_crystal(&bi_rank1(&d, s)?, &b_n(&d, n)?)?;
        graphs.push(serde_json::from_str::<Value>(&icrystal_to_json(&g)).expect("own output parses"));
    }
    let doc = serde_json::json!({ "schema": crate::format::SCHEMA, "s": s, "graphs": graphs });
    Ok(crate::format::layout(&doc))
}

/// The golden files as (file name, freshly generated contents).
pub fn golden_outputs() -> icrystal_core::error::Result<Vec<(String, String)>> {
    let d = CartanSatakeDatum::a1(0);
    let mut out = vec![("b2_tensor_b3.json".to_string(), crystal_to_json(&tensor_crystals(&b_n(&d, 2)?, &b_n(&d, 3)?)?))];
    for s in AI_S {
        out.push((ai_file(s), ai_document(s)?));
    }
    out.push(("grid_m2_n3.json".to_string(), icrystal_to_json(&grid_icrystal(2, 3)?)));
    Ok(out)
}

/// The checked-in expectations.
pub const EMBEDDED_GOLDENS: [(&str, &str); 6] = [
    ("b2_tensor_b3.json", include_str!("../tests/golden/b2_tensor_b3.json")),
    ("ai_s0.json", include_str!("../tests/golden/ai_s0.json")),
    ("ai_s1.json", include_str!("../tests/golden/ai_s1.json")),
    ("ai_s2.json", include_str!("../tests/golden/ai_s2.json")),
    ("ai_sm2.json", include_str!("../tests/golden/ai_sm2.json")),
    ("grid_m2_n3.json", include_str!("../tests/golden/grid_m2_n3.json")),
];

fn golden_items() -> Vec<Item> {
    EMBEDDED_GOLDENS
        .iter()
        .map(|&(name, want)| {
            item(name, move || {
                let all = golden_outputs().map_err(e2s)?;
                let got = &all.iter().find(|(n, _)| n == name).ok_or("no generator")?.1;
                if got == want {
                    return Ok(format!("{} bytes", want.len()));
                }
                let line = got.lines().zip(want.lines()).position(|(a, b)| a != b).unwrap_or(got.lines().count().min(want.lines().count()));
                Err(format!("differs from the checked-in file at line {}", line + 1))
            })
        })
        .collect()
}

// ---------------------------------------------------------------- projective

fn small_weights(d: &CartanSatakeDatum) -> Vec<Weight> {
    match d.rank() {
        1 => (0..=2).map(|a| Weight(vec![a])).collect(),
        _ => [[0, 0], [1, 0], [0, 1], [1, 1], [2, 0], [0, 2], [2, 1], [1, 2], [2, 2]].iter().map(|w| Weight(w.to_vec())).collect(),
    }
}

fn very_strict(m: &StructureMap) -> Result<bool, String> {
    let c = check_icrystal_morphism(&m.src, &m.tgt, &m.map).map_err(e2s)?;
    Ok(c.morphism.is_ok() && c.very_strict)
}

fn projective_items(cap: usize) -> Vec<Item> {
    let mut items = vec![];
    for d in three_data() {
        let tag = datum_tag(&d);
        let dd = d.clone();
        items.push(item(format!("{tag}/very-strict"), move || {
            let d = dd;
            let ws = small_weights(&d);
            for nu in ws.iter().take(4) {
                ensure(very_strict(&gamma_nu(&d, nu, cap).map_err(e2s)?)?, || format!("γ_{nu}"))?;
            }
            for lam in ws.iter().take(5) {
                ensure(very_strict(&rho_lambda(&d, lam, cap).map_err(e2s)?)?, || format!("ρ_{lam}"))?;
                for nu in ws.iter().take(3) {
                    ensure(very_strict(&pi_i_lambda_nu(&d, lam, nu, cap).map_err(e2s)?)?, || format!("π_{lam},{nu}"))?;
                }
            }
            Ok("γ, ρ, π".into())
        }));
        let dd = d.clone();
        items.push(item(format!("{tag}/coherence"), move || {
            let d = dd;
            let ws = small_weights(&d);
            let mut n = 0;
            for lam in ws.iter().take(3) {
                for nu1 in ws.iter().skip(1).take(2) {
                    for nu2 in ws.iter().skip(1).take(2) {
                        let mid = lam + &nu_sym(&d, nu1);
                        let a = pi_i_lambda_nu(&d, lam, nu1, cap).map_err(e2s)?;
                        let b = pi_i_lambda_nu(&d, &mid, nu2, cap).map_err(e2s)?;
                        let c = pi_i_lambda_nu(&d, lam, &(nu1 + nu2), cap).map_err(e2s)?;
                        // whole matrices, so every element of every word length
                        ensure(a.map.compose(&b.map) == c.map, || format!("π_{lam},{nu1} ∘ π_{mid},{nu2} ≠ π_{lam},{nu1}+{nu2}"))?;
                        n += 1;
                    }
                }
            }
            Ok(format!("{n} two-step chains"))
        }));
        let dd = d.clone();
        items.push(item(format!("{tag}/highest-weight"), move || {
            let d = dd;
            let mut n = 0;
            for nu in small_weights(&d) {
                if nu.0.iter().any(|&x| x > 2) {
                    continue;
                }
                let rep = check_highest_weight_characterization(&d, &nu, cap).map_err(e2s)?;
                ensure(rep.is_ok(), || format!("ν = {nu}: {rep}"))?;
                n += 1;
            }
            Ok(format!("{n} weights ν"))
        }));
    }
    items
}

pub fn datum_tag(d: &CartanSatakeDatum) -> String {
    match (d.rank(), d.kind(d.i_tau()[0])) {
        (1, _) => format!("A1:{}", d.s(0)),
        (_, OrbitKind::Orthogonal) => "A1xA1".into(),
        _ => format!("A2flip:{}", d.s(0)),
    }
}

fn limit_items(depth: usize) -> Vec<Item> {
    let mut items = vec![];
    for d in three_data() {
        for zeta in zetas(&d) {
            let tag = format!("{}/ζ={zeta}", datum_tag(&d));
            let d = d.clone();
            items.push(item(tag, move || {
                let mut worst = 0;
                let mut n = 0;
                for word in words(d.rank(), 6) {
                    for i in 0..d.rank() {
                        let v = limit_action(&d, &zeta, &word, i, 3, depth).map_err(|e| format!("{word:?}, i={i}: {e}"))?;
                        worst = worst.max(v.level);
                        n += 1;
                    }
                }
                Ok(format!("{n} values, stable from level {worst}"))
            }));
        }
    }
    items
}

fn diagonal_limit_items(depth: usize) -> Vec<Item> {
    (-2..=2)
        .map(|z| {
            item(format!("ζ={z}"), move || {
                let d = CartanSatakeDatum::a1xa1();
                let zeta = IWeight(vec![IEntry::Signed(z)]);
                let one = Sqrt2Scalar::ONE;
                let mut n = 0;
                for word in words(2, 4) {
                    let st = binfty_stats(&d, &word).map_err(e2s)?;
                    for i in 0..2 {
                        let t = d.tau(i);
                        let zi = zeta.at(&d, i).signed();
                        let lv = limit_action(&d, &zeta, &word, i, 3, depth).map_err(e2s)?;
                        let beta = (st.phi[i] + zi - st.wt.get(t)).max(st.eps[t]);
                        ensure(lv.beta == IExtInt::Fin(beta), || format!("β_{i} on {word:?}: {} vs {beta}", lv.beta))?;
                        let want = if st.phi[i] > st.phi[t] - zi {
                            let mut w = word.clone();
                            w.push(i);
                            vec![(canonical_word(&d, &w).map_err(e2s)?, one)]
                        } else {
                            binfty_e(&d, &word, t).map_err(e2s)?.map(|x| vec![(x, one)]).unwrap_or_default()
                        };
                        ensure(lv.btil == want, || format!("B̃_{i} on {word:?}"))?;
                        n += 1;
                    }
                }
                Ok(format!("{n} values"))
            })
        })
        .collect()
}

// ---------------------------------------------------------------- S-conditions

fn s_condition_items() -> Vec<Item> {
    let mut data: Vec<CartanSatakeDatum> = (-2..=3).map(CartanSatakeDatum::a2_flip).collect();
    data.push(CartanSatakeDatum::a1xa1());
    data.into_iter()
        .map(|d| {
            item(datum_tag(&d), move || {
                let mut built = 0;
                for a in 0..=6 {
                    for b in 0..=6 {
                        let Ok(bl) = blambda(&d, &[a, b], 500) else { continue };
                        let elems: Vec<usize> = bl.graph.elements().collect();
                        for (i, j) in s_condition_pairs(&d) {
                            for (x, y) in [(i, j), (j, i)] {
                                let rep = check_s_conditions(&bl.graph, &elems, x, y);
                                ensure(rep.is_ok(), || format!("B({a},{b}): {rep}"))?;
                                let rep = check_s_consequences(&bl.graph, &elems, x, y);
                                ensure(rep.is_ok(), || format!("B({a},{b}): {rep}"))?;
                            }
                        }
                        built += 1;
                    }
                }
                Ok(format!("{built} crystals B(λ)"))
            })
        })
        .collect()
}
