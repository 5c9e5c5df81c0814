use alloc::vec::Vec;

use super::rule::require_s_conditions;
use crate::crystal::{check_seminormal, Crystal, CrystalGraph};
use crate::error::{Error, Result};
use crate::icrystal::{vec_add, ICrystalData, ICrystalGraph, Vector};
use crate::rootdata::{project_weight, ExtInt, IExtInt, OrbitKind, Sqrt2Scalar};

/// Which closed formulas to use. `Seminormal` needs φ ≥ 0 everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InduceMode {
    General,
    Seminormal,
}

fn unit(b: Option<usize>, z: Sqrt2Scalar) -> Vector<usize> {
    let mut v = Vector::new();
    if let Some(b) = b {
        vec_add(&mut v, b, z);
    }
    v
}

fn pair(x: Option<usize>, y: Option<usize>, z: Sqrt2Scalar) -> Vector<usize> {
    let mut v = unit(x, z);
    if let Some(y) = y {
        vec_add(&mut v, y, z);
    }
    v
}

fn fin(x: i64) -> ExtInt {
    ExtInt::Fin(x)
}

/// The ıcrystal structure on a crystal obtained by identifying b with b₀ ⊗ b.
pub fn induce_icrystal(c: &CrystalGraph, mode: InduceMode) -> Result<ICrystalGraph> {
    require_s_conditions(c)?;
    if mode == InduceMode::Seminormal {
        if let Some(v) = check_seminormal(c).violations.first() {
            return Err(Error::NotSeminormal(v.witness.clone()));
        }
    }
    let d = c.datum_ref();
    let h = Sqrt2Scalar::INV_SQRT2;
    let one = Sqrt2Scalar::ONE;
    let n = c.len();
    let mut beta = alloc::vec![Vec::with_capacity(d.rank()); n];
    let mut btil = alloc::vec![Vec::with_capacity(d.rank()); n];
    for b in c.elements() {
        for i in 0..d.rank() {
            let ti = d.tau(i);
            let s = d.s(i);
            let phi_i = c.phi(&b, i);
            let phi_t = c.phi(&b, ti);
            let wt_t = c.wt_i(&b, ti);
            let (be, v): (IExtInt, Vector<usize>) = match d.kind(i) {
                OrbitKind::Fixed => {
                    let big = phi_i.fin().is_some_and(|p| s.abs() <= p);
                    if !big {
                        (IExtInt::Fin(s.abs() - c.wt_i(&b, i)), unit(Some(b), Sqrt2Scalar::int(s.signum())))
                    } else if s.rem_euclid(2) != phi_i.fin().unwrap().rem_euclid(2) {
                        (c.eps(&b, i).add(1).into(), unit(c.f(&b, i), one))
                    } else {
                        (c.eps(&b, i).into(), unit(c.e(&b, i), one))
                    }
                }
                OrbitKind::Orthogonal => match mode {
                    InduceMode::General => {
                        let top = phi_i.max(fin(0)).max(phi_t);
                        let v = if phi_i > fin(0) && phi_i > phi_t {
                            unit(c.f(&b, i), one)
                        } else if fin(0) > phi_t {
                            Vector::new()
                        } else {
                            unit(c.e(&b, ti), one)
                        };
                        (top.add(-wt_t).into(), v)
                    }
                    InduceMode::Seminormal => {
                        let v = if phi_i > phi_t { unit(c.f(&b, i), one) } else { unit(c.e(&b, ti), one) };
                        (phi_i.max(phi_t).add(-wt_t).into(), v)
                    }
                },
                OrbitKind::Adjacent => {
                    let st = d.s(ti);
                    let ps = phi_t.add(s);
                    let up = c.f(&b, i);
                    let down = c.e(&b, ti);
                    let phi_down = down.map(|x| c.phi(&x, i));
                    let f_line = {
                        let c1 = phi_i == ps.add(1) && up.is_some_and(|x| c.phi(&x, ti) == phi_t.add(1));
                        unit(up, if c1 { h } else { one })
                    };
                    let e_line = |gate: bool| {
                        let c1 = (phi_i == ps && phi_down == Some(phi_i))
                            || (gate && ps == fin(0) && s <= 0 && phi_down.is_some_and(|p| p < fin(0)));
                        let c2 = phi_i == ps && phi_i > fin(0.max(-st)) && phi_down == Some(phi_i.add(-1));
                        if c1 {
                            unit(down, h)
                        } else if c2 {
                            pair(down, up, h)
                        } else {
                            unit(down, one)
                        }
                    };
                    match mode {
                        InduceMode::General => {
                            let m = fin(0.max(s));
                            let top = phi_i.max(m).max(ps);
                            let v = if phi_i > m && phi_i > ps {
                                f_line
                            } else if m > ps {
                                if phi_i == fin(s) && s > 0 {
                                    unit(up, h)
                                } else {
                                    Vector::new()
                                }
                            } else {
                                e_line(true)
                            };
                            (top.add(-s - wt_t).into(), v)
                        }
                        InduceMode::Seminormal => {
                            let v = if phi_i > ps { f_line } else { e_line(false) };
                            (phi_i.max(ps).add(-s - wt_t).into(), v)
                        }
                    }
                }
            };
            beta[b].push(be);
            btil[b].push(v.into_iter().collect());
        }
    }
    let data = ICrystalData {
        names: c.data().names.clone(),
        wti: c.elements().map(|b| project_weight(&c.wt(&b), d)).collect(),
        beta,
        btil,
    };
    ICrystalGraph::from_data(d.clone(), data)
}
