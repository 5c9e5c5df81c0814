use alloc::format;
use alloc::string::String;

use super::{as_basis, ICrystalGraph};
use crate::report::Report;
use crate::rootdata::{IExtInt, IWeight, OrbitKind};

/// Every clause of the ıcrystal definition on every (element, i), plus the
/// two derived propositions for a_{i,τ(i)} ∈ {0, −1}.
pub fn check_icrystal_axioms(g: &ICrystalGraph) -> Report {
    let d = g.datum_ref();
    let mut rep = Report::new();
    let nm = |b: usize| g.data().names[b].clone();
    for i in 0..d.rank() {
        let ti = d.tau(i);
        let li = d.label(i);
        let alpha = IWeight::simple_root(d, i);
        let s = d.s(i);
        let wi = |b: usize| g.wti_at(b).at(d, i);
        let beta = |b: usize, j: usize| g.beta_at(b, j);
        // β_i(b) = β_τ(i)(b) + wt^ı_i(b) − s_i
        let lower = |b: usize| beta(b, i) == beta(b, ti).add(wi(b).signed() - s);
        for b in g.elements() {
            let row = g.row(b, i);
            let w = |c: &str, msg: String| (format!("({c}) i={li}"), format!("{}: {msg}", nm(b)));
            let mut push = |c: &str, msg: String| {
                let (a, b) = w(c, msg);
                rep.push(a, b);
            };
            if !beta(b, i).is_fin() && !row.is_empty() {
                push("1", format!("β_i = {} but B̃_i b ≠ 0", beta(b, i)));
            }
            for &(t, z) in row {
                if *g.wti_at(t) != g.wti_at(b).sub(&alpha) {
                    push("2", format!("wt^ı({}) ≠ wt^ı(b) − ᾱ_i", nm(t)));
                }
                if g.entry(t, ti, b) != z {
                    push("2.5", format!("(B̃_i b, {}) = {z} but (b, B̃_τ(i) {}) = {}", nm(t), nm(t), g.entry(t, ti, b)));
                }
            }
            if let Some(t) = as_basis(&g.btil_vec(b, i)) {
                if as_basis(&g.btil_vec(t, ti)) != Some(b) {
                    push("2.6", format!("B̃_τ(i) B̃_i b ≠ b via {}", nm(t)));
                }
            }
            match d.kind(i) {
                OrbitKind::Fixed => {
                    if beta(b, i) == IExtInt::NegInf {
                        push("3a", "β_i = -inf".into());
                    }
                    if let Some(p) = beta(b, i).add(s).parity() {
                        if p != wi(b).parity() {
                            push("3b", format!("β_i + s_i = {} has the wrong parity", beta(b, i).add(s)));
                        }
                    }
                    for &(t, _) in row {
                        if beta(t, i) != beta(b, i) {
                            push("3c", format!("β_i({}) = {} ≠ β_i(b) = {}", nm(t), beta(t, i), beta(b, i)));
                        }
                    }
                }
                OrbitKind::Orthogonal => {
                    if matches!(beta(b, i), IExtInt::NegInfEven | IExtInt::NegInfOdd) {
                        push("4a", format!("β_i = {}", beta(b, i)));
                    }
                    if beta(b, i) != beta(b, ti).add(wi(b).signed()) {
                        push("4b", format!("β_i = {} ≠ β_τ(i) + wt^ı_i = {}", beta(b, i), beta(b, ti).add(wi(b).signed())));
                    }
                    for &(t, _) in row {
                        if as_basis(&g.btil_vec(b, i)) != Some(t) {
                            push("4c", format!("B̃_i b ≠ {}", nm(t)));
                        }
                        if beta(t, i) != beta(b, i).add(-1) {
                            push("4c", format!("β_i({}) ≠ β_i(b) − 1", nm(t)));
                        }
                        if wi(t).signed() != wi(b).signed() - 2 || beta(t, ti) != beta(b, ti).add(1) {
                            push("prop a=0", format!("at B̃_i b = {}", nm(t)));
                        }
                    }
                }
                OrbitKind::Adjacent => {
                    if matches!(beta(b, i), IExtInt::NegInfEven | IExtInt::NegInfOdd) {
                        push("5a", format!("β_i = {}", beta(b, i)));
                    }
                    let base = beta(b, ti).add(wi(b).signed() - s);
                    if beta(b, i) != base && beta(b, i) != base.add(1) {
                        push("5b", format!("β_i = {} vs β_τ(i) + wt^ı_i − s_i = {}", beta(b, i), base));
                    }
                    for &(t, _) in row {
                        if !lower(b) && (as_basis(&g.btil_vec(b, i)) != Some(t) || lower(t)) {
                            push("5c", format!("target {}", nm(t)));
                        }
                        if !lower(t) && beta(t, i) != beta(b, i).add(-1) {
                            push("5d", format!("β_i({}) ≠ β_i(b) − 1", nm(t)));
                        }
                    }
                    check_prop_adjacent(g, i, b, &mut rep);
                }
            }
        }
    }
    rep
}

fn check_prop_adjacent(g: &ICrystalGraph, i: usize, b: usize, rep: &mut Report) {
    let d = g.datum_ref();
    let ti = d.tau(i);
    let s = d.s(i);
    let beta = |b: usize, j: usize| g.beta_at(b, j);
    let wi = |b: usize| g.wti_at(b).at(d, i).signed();
    let lower = |b: usize| beta(b, i) == beta(b, ti).add(wi(b) - s);
    let nm = |b: usize| g.data().names[b].clone();
    let basis_i = as_basis(&g.btil_vec(b, i));
    let basis_t = as_basis(&g.btil_vec(b, ti));
    let mut bad = |k: u8, x: usize| {
        rep.push(format!("prop a=-1 ({k}) i={}", d.label(i)), format!("b = {}, other = {}", nm(b), nm(x)));
    };
    for &(b1, _) in g.row(b, i) {
        if wi(b1) != wi(b) - 3 {
            bad(1, b1);
        }
        if !lower(b) && (basis_i != Some(b1) || beta(b1, i) != beta(b, i).add(-1) || beta(b1, ti) != beta(b, ti).add(2)) {
            bad(2, b1);
        }
        if lower(b) && lower(b1) && (basis_i != Some(b1) || beta(b1, ti) != beta(b, ti).add(1) || beta(b1, i) != beta(b, i).add(-2)) {
            bad(7, b1);
        }
        if lower(b) && !lower(b1) && (beta(b1, ti) != beta(b, ti).add(1) || beta(b1, i) != beta(b, i).add(-1)) {
            bad(8, b1);
        }
    }
    for &(b2, _) in g.row(b, ti) {
        if wi(b2) != wi(b) + 3 {
            bad(5, b2);
        }
        if !lower(b) && !lower(b2) && (basis_t != Some(b2) || beta(b2, i) != beta(b, i).add(1) || beta(b2, ti) != beta(b, ti).add(-2)) {
            bad(3, b2);
        }
        if !lower(b) && lower(b2) && (beta(b2, i) != beta(b, i).add(1) || beta(b2, ti) != beta(b, ti).add(-1)) {
            bad(4, b2);
        }
        if lower(b) && (basis_t != Some(b2) || beta(b2, ti) != beta(b, ti).add(-1) || beta(b2, i) != beta(b, i).add(2)) {
            bad(6, b2);
        }
    }
}
