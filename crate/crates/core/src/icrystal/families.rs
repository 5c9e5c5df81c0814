use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{disjoint_union, ICrystalData, ICrystalGraph, ICrystalMorphism, Vector};
use crate::error::{Error, Result};
use crate::rootdata::{CartanSatakeDatum, IEntry, IExtInt, IWeight, OrbitKind, Sqrt2Scalar};

/// Parameters of the built-in ıcrystals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuiltinFamily {
    Trivial,
    TZeta(IWeight),
    Rank1 { n: i64 },
    Pair { n: i64 },
    Orthogonal { n: i64 },
    Adjacent { n_minus: i64, n_plus: i64 },
    Vee { n_minus: i64, n_plus: i64 },
    Wedge { n_minus: i64, n_plus: i64 },
}

pub fn make_builtin(d: &CartanSatakeDatum, fam: &BuiltinFamily) -> Result<ICrystalGraph> {
    match *fam {
        BuiltinFamily::Trivial => trivial(d),
        BuiltinFamily::TZeta(ref z) => t_zeta(d, z),
        BuiltinFamily::Rank1 { n } => bi_rank1(d, n),
        BuiltinFamily::Pair { n } => bi_pair(d, n),
        BuiltinFamily::Orthogonal { n } => bi_orthogonal(d, n),
        BuiltinFamily::Adjacent { n_minus, n_plus } => bi_adjacent(d, n_minus, n_plus),
        BuiltinFamily::Vee { n_minus, n_plus } => bi_vee(d, n_minus, n_plus),
        BuiltinFamily::Wedge { n_minus, n_plus } => bi_wedge(d, n_minus, n_plus),
    }
}

fn sgn(n: i64) -> Sqrt2Scalar {
    Sqrt2Scalar::int(n.signum())
}

fn bad(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

/// B(0) = {b_0} with its canonical ıcrystal structure.
pub fn trivial(d: &CartanSatakeDatum) -> Result<ICrystalGraph> {
    let r = d.rank();
    let mut beta = Vec::with_capacity(r);
    let mut btil = Vec::with_capacity(r);
    for i in 0..r {
        let s = d.s(i);
        match d.kind(i) {
            OrbitKind::Fixed => {
                beta.push(IExtInt::Fin(s.abs()));
                btil.push(if s == 0 { Vec::new() } else { alloc::vec![(0, sgn(s))] });
            }
            OrbitKind::Orthogonal => {
                beta.push(IExtInt::Fin(0));
                btil.push(Vec::new());
            }
            OrbitKind::Adjacent => {
                beta.push(IExtInt::Fin((-s).max(0)));
                btil.push(Vec::new());
            }
        }
    }
    ICrystalGraph::from_data(
        d.clone(),
        ICrystalData { names: alloc::vec!["b_0".into()], wti: alloc::vec![IWeight::zero(d)], beta: alloc::vec![beta], btil: alloc::vec![btil] },
    )
}

/// T_ζ: β is a parity infinity on fixed points and −∞ elsewhere; B̃ = 0.
pub fn t_zeta(d: &CartanSatakeDatum, zeta: &IWeight) -> Result<ICrystalGraph> {
    if zeta.0.len() != d.i_tau().len() {
        return Err(bad("ı-weight has the wrong length".into()));
    }
    let beta = (0..d.rank())
        .map(|i| match d.kind(i) {
            OrbitKind::Fixed if zeta.at(d, i).parity() == d.s(i).rem_euclid(2) as u8 => IExtInt::NegInfEven,
            OrbitKind::Fixed => IExtInt::NegInfOdd,
            _ => IExtInt::NegInf,
        })
        .collect();
    ICrystalGraph::from_data(
        d.clone(),
        ICrystalData {
            names: alloc::vec![format!("t_{zeta}")],
            wti: alloc::vec![zeta.clone()],
            beta: alloc::vec![beta],
            btil: alloc::vec![alloc::vec![Vec::new(); d.rank()]],
        },
    )
}

fn require_rank1_fixed(d: &CartanSatakeDatum) -> Result<()> {
    if d.rank() != 1 || d.kind(0) != OrbitKind::Fixed {
        return Err(bad("this family needs I = {i} with τ(i) = i".into()));
    }
    Ok(())
}

/// B^ı(n), I = {i}: one element, β = |n|, B̃ = sgn(n).
pub fn bi_rank1(d: &CartanSatakeDatum, n: i64) -> Result<ICrystalGraph> {
    require_rank1_fixed(d)?;
    let w = IWeight(alloc::vec![IEntry::Parity((n + d.s(0)).rem_euclid(2) as u8)]);
    let row = if n == 0 { Vec::new() } else { alloc::vec![(0, sgn(n))] };
    ICrystalGraph::from_data(
        d.clone(),
        ICrystalData { names: alloc::vec!["b".into()], wti: alloc::vec![w], beta: alloc::vec![alloc::vec![IExtInt::Fin(n.abs())]], btil: alloc::vec![alloc::vec![row]] },
    )
}

/// B^ı(n;−n) = {b_+, b_−} with B̃ swapping them, n > 0.
pub fn bi_pair(d: &CartanSatakeDatum, n: i64) -> Result<ICrystalGraph> {
    require_rank1_fixed(d)?;
    if n <= 0 {
        return Err(bad(format!("B^ı(n;-n) needs n > 0, got {n}")));
    }
    let w = IWeight(alloc::vec![IEntry::Parity((n + d.s(0)).rem_euclid(2) as u8)]);
    ICrystalGraph::from_data(
        d.clone(),
        ICrystalData {
            names: alloc::vec!["b_+".into(), "b_-".into()],
            wti: alloc::vec![w.clone(), w],
            beta: alloc::vec![alloc::vec![IExtInt::Fin(n)]; 2],
            btil: alloc::vec![alloc::vec![alloc::vec![(1, Sqrt2Scalar::ONE)]], alloc::vec![alloc::vec![(0, Sqrt2Scalar::ONE)]]],
        },
    )
}

/// The representative i and τ(i) of a rank two split datum of the given kind.
fn split_pair(d: &CartanSatakeDatum, kind: OrbitKind) -> Result<(usize, usize)> {
    if d.rank() != 2 || d.kind(0) != kind {
        return Err(bad(format!("this family needs I = {{i, τ(i)}} with a_{{i,τ(i)}} = {}", kind.a())));
    }
    let i = d.i_tau()[0];
    Ok((i, d.tau(i)))
}

/// Element tables for a rank two split family, filled row by row.
struct Builder {
    i: usize,
    t: usize,
    data: ICrystalData,
}

impl Builder {
    fn new(i: usize, t: usize) -> Self {
        Self { i, t, data: ICrystalData { names: Vec::new(), wti: Vec::new(), beta: Vec::new(), btil: Vec::new() } }
    }

    fn push(&mut self, name: String, wi: i64, beta_i: i64, beta_t: i64) {
        self.data.names.push(name);
        self.data.wti.push(IWeight(alloc::vec![IEntry::Signed(wi)]));
        let mut beta = alloc::vec![IExtInt::NegInf; 2];
        beta[self.i] = IExtInt::Fin(beta_i);
        beta[self.t] = IExtInt::Fin(beta_t);
        self.data.beta.push(beta);
        self.data.btil.push(alloc::vec![Vec::new(); 2]);
    }

    fn idx(&self, name: &str) -> Option<usize> {
        self.data.names.iter().position(|n| n == name)
    }

    /// Sets (B̃_j src, tgt) = z when both elements exist.
    fn edge(&mut self, src: &str, j: usize, tgt: &str, z: Sqrt2Scalar) {
        if let (Some(a), Some(b)) = (self.idx(src), self.idx(tgt)) {
            self.data.btil[a][j].push((b, z));
        }
    }

    fn finish(self, d: &CartanSatakeDatum) -> Result<ICrystalGraph> {
        ICrystalGraph::from_data(d.clone(), self.data)
    }
}

/// B^ı(n) for a_{i,τ(i)} = 0: a path b_0 → … → b_n.
pub fn bi_orthogonal(d: &CartanSatakeDatum, n: i64) -> Result<ICrystalGraph> {
    let (i, t) = split_pair(d, OrbitKind::Orthogonal)?;
    if n < 0 {
        return Err(bad(format!("B^ı(n) needs n ≥ 0, got {n}")));
    }
    let mut g = Builder::new(i, t);
    for k in 0..=n {
        g.push(format!("b_{k}"), n - 2 * k, n - k, k);
    }
    for k in 0..=n {
        g.edge(&format!("b_{k}"), i, &format!("b_{}", k + 1), Sqrt2Scalar::ONE);
        g.edge(&format!("b_{k}"), t, &format!("b_{}", k - 1), Sqrt2Scalar::ONE);
    }
    g.finish(d)
}

/// B^ı(n₋, n₊) for a_{i,τ(i)} = −1.
pub fn bi_adjacent(d: &CartanSatakeDatum, n_minus: i64, n_plus: i64) -> Result<ICrystalGraph> {
    let (i, t) = split_pair(d, OrbitKind::Adjacent)?;
    if n_minus < 0 {
        return Err(bad(format!("B^ı(n-,n+) needs n- ≥ 0, got {n_minus}")));
    }
    let (si, st) = (d.s(i), d.s(t));
    let mut g = Builder::new(i, t);
    for k in 0..=n_minus {
        g.push(
            format!("b_{k}"),
            n_minus + n_plus - 3 * k,
            n_minus - k + (n_plus - si - k).max(0),
            k + (-n_plus - st + k).max(0),
        );
    }
    for k in 0..=n_minus {
        g.edge(&format!("b_{k}"), i, &format!("b_{}", k + 1), Sqrt2Scalar::ONE);
        g.edge(&format!("b_{k}"), t, &format!("b_{}", k - 1), Sqrt2Scalar::ONE);
    }
    g.finish(d)
}

fn junction_range(d: &CartanSatakeDatum, i: usize, n_minus: i64, n_plus: i64) -> Result<()> {
    let m = n_plus - d.s(i);
    if n_minus <= 0 || !(-1 < m && m < n_minus) {
        return Err(bad(format!("needs n- > 0 and -1 < n+ - s_i < n-, got n- = {n_minus}, n+ - s_i = {m}")));
    }
    Ok(())
}

const SIGNS: [&str; 2] = ["+", "-"];

/// B^ı(n₋, n₊; ∨): two strings merging at k = n₊ − s_i + 1.
pub fn bi_vee(d: &CartanSatakeDatum, n_minus: i64, n_plus: i64) -> Result<ICrystalGraph> {
    let (i, t) = split_pair(d, OrbitKind::Adjacent)?;
    junction_range(d, i, n_minus, n_plus)?;
    let (si, st) = (d.s(i), d.s(t));
    let m = n_plus - si;
    let h = Sqrt2Scalar::INV_SQRT2;
    let one = Sqrt2Scalar::ONE;
    let mut g = Builder::new(i, t);
    for k in 0..=n_minus {
        let w = n_minus + n_plus - 3 * k;
        if k <= m {
            for sg in SIGNS {
                g.push(format!("b_{{{k},{sg}}}"), w, n_minus + n_plus - si - 2 * k, k);
            }
        } else {
            g.push(format!("b_{k}"), w, n_minus - k, -n_plus - st + 2 * k);
        }
    }
    for k in 0..=n_minus {
        if k <= m {
            for sg in SIGNS {
                let src = format!("b_{{{k},{sg}}}");
                if k == m {
                    g.edge(&src, i, &format!("b_{}", k + 1), h);
                } else {
                    g.edge(&src, i, &format!("b_{{{},{sg}}}", k + 1), one);
                }
                g.edge(&src, t, &format!("b_{{{},{sg}}}", k - 1), one);
            }
        } else {
            let src = format!("b_{k}");
            g.edge(&src, i, &format!("b_{}", k + 1), one);
            if k == m + 1 {
                for sg in SIGNS {
                    g.edge(&src, t, &format!("b_{{{},{sg}}}", k - 1), h);
                }
            } else {
                g.edge(&src, t, &format!("b_{}", k - 1), one);
            }
        }
    }
    g.finish(d)
}

/// B^ı(n₋, n₊; ∧): one string splitting at k = n₊ + s_τ(i).
pub fn bi_wedge(d: &CartanSatakeDatum, n_minus: i64, n_plus: i64) -> Result<ICrystalGraph> {
    let (i, t) = split_pair(d, OrbitKind::Adjacent)?;
    junction_range(d, i, n_minus, n_plus)?;
    let (si, st) = (d.s(i), d.s(t));
    let split = n_plus + st;
    let h = Sqrt2Scalar::INV_SQRT2;
    let one = Sqrt2Scalar::ONE;
    let mut g = Builder::new(i, t);
    for k in 0..=n_minus {
        let w = n_minus + n_plus - 3 * k;
        if k >= split {
            for sg in SIGNS {
                g.push(format!("b_{{{k},{sg}}}"), w, n_minus - k, -n_plus - st + 2 * k);
            }
        } else {
            g.push(format!("b_{k}"), w, n_minus + n_plus - si - 2 * k, k);
        }
    }
    for k in 0..=n_minus {
        if k >= split {
            for sg in SIGNS {
                let src = format!("b_{{{k},{sg}}}");
                g.edge(&src, i, &format!("b_{{{},{sg}}}", k + 1), one);
                if k == split {
                    g.edge(&src, t, &format!("b_{}", k - 1), h);
                } else {
                    g.edge(&src, t, &format!("b_{{{},{sg}}}", k - 1), one);
                }
            }
        } else {
            let src = format!("b_{k}");
            if k == split - 1 {
                for sg in SIGNS {
                    g.edge(&src, i, &format!("b_{{{},{sg}}}", k + 1), h);
                }
            } else {
                g.edge(&src, i, &format!("b_{}", k + 1), one);
            }
            g.edge(&src, t, &format!("b_{}", k - 1), one);
        }
    }
    g.finish(d)
}

/// The stated equivalence onto a family with a junction, as
/// (source, target, matrix). Available for `Pair`, `Vee` and `Wedge`.
pub fn builtin_equivalence(d: &CartanSatakeDatum, fam: &BuiltinFamily) -> Result<(ICrystalGraph, ICrystalGraph, ICrystalMorphism)> {
    let h = Sqrt2Scalar::INV_SQRT2;
    let col = |entries: &[(usize, Sqrt2Scalar)]| -> Vector<usize> { entries.iter().copied().collect() };
    match *fam {
        BuiltinFamily::Pair { n } => {
            let tgt = bi_pair(d, n)?;
            let src = disjoint_union(&bi_rank1(d, n)?, &bi_rank1(d, -n)?)?;
            let cols = alloc::vec![col(&[(0, h), (1, h)]), col(&[(0, h), (1, -h)])];
            Ok((src, tgt, ICrystalMorphism { cols }))
        }
        BuiltinFamily::Vee { n_minus, n_plus } => {
            let tgt = bi_vee(d, n_minus, n_plus)?;
            let i = d.i_tau()[0];
            let si = d.s(i);
            let m = n_plus - si;
            let first = bi_adjacent(d, n_minus, n_plus)?;
            let second = bi_adjacent(d, m, n_minus + si)?;
            let src = disjoint_union(&first, &second)?;
            let at = |nm: String| tgt.find(&nm).expect("element of the ∨ family");
            let mut cols = Vec::new();
            for k in 0..=n_minus {
                cols.push(if k <= m {
                    col(&[(at(format!("b_{{{k},+}}")), h), (at(format!("b_{{{k},-}}")), h)])
                } else {
                    col(&[(at(format!("b_{k}")), Sqrt2Scalar::ONE)])
                });
            }
            for k in 0..=m {
                cols.push(col(&[(at(format!("b_{{{k},+}}")), h), (at(format!("b_{{{k},-}}")), -h)]));
            }
            Ok((src, tgt, ICrystalMorphism { cols }))
        }
        BuiltinFamily::Wedge { n_minus, n_plus } => {
            let tgt = bi_wedge(d, n_minus, n_plus)?;
            let i = d.i_tau()[0];
            let st = d.s(d.tau(i));
            let split = n_plus + st;
            let first = bi_adjacent(d, n_minus, n_plus)?;
            let second = bi_adjacent(d, n_minus - n_plus - st, -n_plus - 2 * st)?;
            let src = disjoint_union(&first, &second)?;
            let at = |nm: String| tgt.find(&nm).expect("element of the ∧ family");
            let mut cols = Vec::new();
            for k in 0..=n_minus {
                cols.push(if k < split {
                    col(&[(at(format!("b_{k}")), Sqrt2Scalar::ONE)])
                } else {
                    col(&[(at(format!("b_{{{k},+}}")), h), (at(format!("b_{{{k},-}}")), h)])
                });
            }
            for k in 0..=(n_minus - n_plus - st) {
                let j = k + split;
                cols.push(col(&[(at(format!("b_{{{j},+}}")), h), (at(format!("b_{{{j},-}}")), -h)]));
            }
            Ok((src, tgt, ICrystalMorphism { cols }))
        }
        _ => Err(bad("no stated equivalence for this family".into())),
    }
}
