use alloc::format;
use alloc::vec::Vec;

use super::{Crystal, CrystalGraph};
use crate::report::Report;
use crate::rootdata::{CartanSatakeDatum, ExtInt, OrbitKind, Weight};

/// Crystal axioms (1)–(4) plus the partial bijection property of Ẽ, F̃.
pub fn check_crystal_axioms(b: &CrystalGraph) -> Report {
    let d = b.datum_ref();
    let mut rep = Report::new();
    for x in b.elements() {
        let nm = || b.name(&x);
        for i in 0..d.rank() {
            let li = d.label(i);
            let alpha = Weight::simple_root(d, i);
            let (e, f) = (b.e(&x, i), b.f(&x, i));
            if b.phi(&x, i) == ExtInt::NegInf && (e.is_some() || f.is_some()) {
                rep.push("axiom (1)", format!("φ_{li}({}) = -inf but an operator is nonzero", nm()));
            }
            if b.phi(&x, i) != b.eps(&x, i).add(b.wt_i(&x, i)) {
                rep.push(
                    "axiom (2)",
                    format!("φ_{li}({}) = {} ≠ ε + wt = {}", nm(), b.phi(&x, i), b.eps(&x, i).add(b.wt_i(&x, i))),
                );
            }
            if let Some(y) = e {
                if b.wt(&y) != &b.wt(&x) + &alpha {
                    rep.push("axiom (3)", format!("wt(Ẽ_{li} {}) ≠ wt + α", nm()));
                }
                if b.eps(&y, i) != b.eps(&x, i).add(-1) {
                    rep.push("axiom (3)", format!("ε_{li}(Ẽ_{li} {}) ≠ ε − 1", nm()));
                }
                if b.f(&y, i) != Some(x) {
                    rep.push("axiom (3)", format!("F̃_{li} Ẽ_{li} {} ≠ {}", nm(), nm()));
                }
            }
            if let Some(y) = f {
                if b.wt(&y) != &b.wt(&x) - &alpha {
                    rep.push("axiom (4)", format!("wt(F̃_{li} {}) ≠ wt − α", nm()));
                }
                if b.phi(&y, i) != b.phi(&x, i).add(-1) {
                    rep.push("axiom (4)", format!("φ_{li}(F̃_{li} {}) ≠ φ − 1", nm()));
                }
                if b.e(&y, i) != Some(x) {
                    rep.push("axiom (4)", format!("Ẽ_{li} F̃_{li} {} ≠ {}", nm(), nm()));
                }
            }
        }
    }
    rep
}

/// ε_i and φ_i equal the lengths of the Ẽ_i- and F̃_i-strings.
pub fn check_seminormal(b: &CrystalGraph) -> Report {
    let d = b.datum_ref();
    let mut rep = Report::new();
    let n = b.len();
    for x in b.elements() {
        for i in 0..d.rank() {
            let run = |step: &dyn Fn(&usize) -> Option<usize>| {
                let (mut k, mut y) = (0i64, x);
                while let Some(z) = step(&y) {
                    k += 1;
                    y = z;
                    if k as usize > n {
                        return None;
                    }
                }
                Some(k)
            };
            let es = run(&|y| b.e(y, i));
            let fs = run(&|y| b.f(y, i));
            if es.map(ExtInt::Fin) != Some(b.eps(&x, i)) || fs.map(ExtInt::Fin) != Some(b.phi(&x, i)) {
                rep.push(
                    "seminormal",
                    format!("{}: (ε, φ)_{} = ({}, {}) but strings are {:?}, {:?}", b.name(&x), d.label(i), b.eps(&x, i), b.phi(&x, i), es, fs),
                );
            }
        }
    }
    rep
}

/// The pairs (i, τ(i)), i ∈ I_τ, on which the S-conditions are required.
pub fn s_condition_pairs(d: &CartanSatakeDatum) -> Vec<(usize, usize)> {
    d.i_tau().iter().filter(|&&i| d.kind(i) != OrbitKind::Fixed).map(|&i| (i, d.tau(i))).collect()
}

fn diff(a: ExtInt, b: ExtInt) -> Option<i64> {
    Some(a.fin()? - b.fin()?)
}

fn s_pair_ok(d: &CartanSatakeDatum, i: usize, j: usize) -> bool {
    i != j && d.a(i, j) == d.a(j, i) && (d.a(i, j) == 0 || d.a(i, j) == -1)
}

/// Conditions (S1)–(S3)′ for both orders of {i, j}, over the given elements.
/// Statements about differences are skipped when a value is −∞.
pub fn check_s_conditions<C: Crystal>(c: &C, elems: &[C::Elem], i: usize, j: usize) -> Report {
    let d = c.datum();
    let mut rep = Report::new();
    if !s_pair_ok(d, i, j) {
        rep.push("S precondition", format!("a_{{{0},{1}}} and a_{{{1},{0}}} must agree and lie in {{0,-1}}", d.label(i), d.label(j)));
        return rep;
    }
    for &(i, j) in &[(i, j), (j, i)] {
        let a = d.a(i, j);
        let tag = |s: &str| format!("{s}({},{})", d.label(i), d.label(j));
        for b in elems {
            let nm = || c.name(b);
            let ei = c.e(b, i);
            let fi = c.f(b, i);
            if let Some(ei_b) = &ei {
                if let Some(dv) = diff(c.eps(ei_b, j), c.eps(b, j)) {
                    if dv != 0 && dv != -a {
                        rep.push(tag("S1"), format!("ε_j(Ẽ_i {}) − ε_j = {dv}", nm()));
                    }
                }
                if let Some(ejei) = c.e(ei_b, j) {
                    if c.eps(ei_b, j) == c.eps(b, j) {
                        let ej = c.e(b, j);
                        let eiej = ej.as_ref().and_then(|y| c.e(y, i));
                        if eiej.as_ref() != Some(&ejei) {
                            rep.push(tag("S2"), format!("Ẽ_iẼ_j {} ≠ Ẽ_jẼ_i", nm()));
                        }
                        if ej.as_ref().map(|y| c.phi(y, i)) != Some(c.phi(b, i)) {
                            rep.push(tag("S2"), format!("φ_i(Ẽ_j {}) ≠ φ_i", nm()));
                        }
                    }
                    if let Some(ej) = c.e(b, j) {
                        if let Some(eiej) = c.e(&ej, i) {
                            let c1 = diff(c.eps(ei_b, j), c.eps(b, j)) == Some(1);
                            let c2 = diff(c.eps(&ej, i), c.eps(b, i)) == Some(1);
                            if c1 && c2 && eiej == ejei {
                                rep.push(tag("S3"), format!("Ẽ_iẼ_j {} = Ẽ_jẼ_i", nm()));
                            }
                        }
                    }
                }
            }
            if let Some(fi_b) = &fi {
                if let Some(fjfi) = c.f(fi_b, j) {
                    if c.phi(fi_b, j) == c.phi(b, j) {
                        let fj = c.f(b, j);
                        let fifj = fj.as_ref().and_then(|y| c.f(y, i));
                        if fifj.as_ref() != Some(&fjfi) {
                            rep.push(tag("S2'"), format!("F̃_iF̃_j {} ≠ F̃_jF̃_i", nm()));
                        }
                        if fj.as_ref().map(|y| c.eps(y, i)) != Some(c.eps(b, i)) {
                            rep.push(tag("S2'"), format!("ε_i(F̃_j {}) ≠ ε_i", nm()));
                        }
                    }
                    if let Some(fj) = c.f(b, j) {
                        if let Some(fifj) = c.f(&fj, i) {
                            let c1 = diff(c.phi(fi_b, j), c.phi(b, j)) == Some(1);
                            let c2 = diff(c.phi(&fj, i), c.phi(b, i)) == Some(1);
                            if c1 && c2 && fifj == fjfi {
                                rep.push(tag("S3'"), format!("F̃_iF̃_j {} = F̃_jF̃_i", nm()));
                            }
                        }
                    }
                }
            }
        }
    }
    rep
}

/// The four consequences of (S1)–(S3)′, for both orders of {i, j}.
///
/// (3) and (4) are only tested when a_{i,j} = −1. For a_{i,j} = 0 they fail
/// on every crystal where both operators act: in B(ϖ_1 + ϖ_2) of A1×A1,
/// φ_i(Ẽ_j b) = φ_i(b) and φ_j(F̃_i b) = φ_j(b) always.
pub fn check_s_consequences<C: Crystal>(c: &C, elems: &[C::Elem], i: usize, j: usize) -> Report {
    let d = c.datum();
    let mut rep = Report::new();
    if !s_pair_ok(d, i, j) {
        rep.push("S precondition", format!("a_{{{0},{1}}} and a_{{{1},{0}}} must agree and lie in {{0,-1}}", d.label(i), d.label(j)));
        return rep;
    }
    for &(i, j) in &[(i, j), (j, i)] {
        let a = d.a(i, j);
        let tag = |s: &str| format!("deduction {s}({},{})", d.label(i), d.label(j));
        for b in elems {
            let nm = || c.name(b);
            let fi = c.f(b, i);
            if let Some(fi_b) = &fi {
                let dj = diff(c.phi(fi_b, j), c.phi(b, j));
                if let Some(dv) = dj {
                    if dv != 0 && dv != -a {
                        rep.push(tag("(1)"), format!("φ_j(F̃_i {}) − φ_j = {dv}", nm()));
                    }
                }
                if let Some(fjfi) = c.f(fi_b, j) {
                    if dj == Some(1) && diff(c.phi(&fjfi, i), c.phi(b, i)) != Some(-1) {
                        rep.push(tag("(2)"), format!("φ_i(F̃_jF̃_i {}) ≠ φ_i − 1", nm()));
                    }
                }
            }
            if a == 0 {
                continue;
            }
            if let Some(ej) = c.e(b, j) {
                if let Some(eiej) = c.e(&ej, i) {
                    if c.phi(&ej, i) == c.phi(b, i) && c.phi(&eiej, j) != c.phi(b, j) {
                        rep.push(tag("(3)"), format!("φ_j(Ẽ_iẼ_j {}) ≠ φ_j", nm()));
                    }
                }
                if let Some(fi_b) = &fi {
                    let lhs = diff(c.phi(&ej, i), c.phi(b, i)) == Some(-1);
                    let rhs = c.phi(fi_b, j) == c.phi(b, j);
                    if lhs != rhs {
                        rep.push(tag("(4)"), format!("at {}: [φ_i(Ẽ_j b) = φ_i − 1] is {lhs}, [φ_j(F̃_i b) = φ_j] is {rhs}", nm()));
                    }
                }
            }
        }
    }
    rep
}
