use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::linalg::{qvec_add, qvec_scale, qvec_sum, QOperator, QVec};
use super::symbols::{brace, brace_k, qbinom, qfact, qint};
use super::LaurentRational as LR;
use crate::error::{Error, Result};
use crate::rootdata::{project_weight, CartanSatakeDatum, IEntry, IWeight, OrbitKind, Sqrt2Scalar, Weight};

/// The modules the oracle starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleParams {
    /// a = 2: V^ı(n), one-dimensional with B_i = [n].
    Fixed(i64),
    /// a = 0: V^ı(n), the (n+1)-dimensional simple module.
    Orthogonal(i64),
    /// a = −1: V^ı(n₋, n₊).
    Adjacent(i64, i64),
}

/// A finite-dimensional U-module over the rank ≤ 2 datum, on a basis that is
/// orthogonal for the contragredient form.
#[derive(Debug, Clone)]
pub struct UModule {
    pub names: Vec<String>,
    pub wt: Vec<Weight>,
    pub e: Vec<QOperator>,
    pub f: Vec<QOperator>,
    pub gram: Vec<LR>,
}

/// A U^ı-module for the subalgebra generated by B_i, B_{τ(i)}, k_i, on an
/// orthogonal basis. Everything is written in the variable q = q_i.
#[derive(Debug, Clone)]
pub struct RankTwoModule {
    pub datum: CartanSatakeDatum,
    pub label: String,
    /// Set for the simple modules, None for tensor products.
    pub params: Option<ModuleParams>,
    pub names: Vec<String>,
    /// B_j indexed by the datum index j.
    pub b: Vec<QOperator>,
    /// k_i acts by q^{kexp} on each basis vector (0 when a = 2).
    pub kexp: Vec<i64>,
    pub wti: Vec<IWeight>,
    pub gram: Vec<LR>,
    /// Bound on the integer parameters of the simple constituents.
    pub bound: i64,
}

impl RankTwoModule {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn a(&self) -> i64 {
        self.datum.kind(0).a()
    }

    pub fn s(&self) -> i64 {
        self.datum.s(0)
    }

    /// Exponent of k_j on basis vector x.
    pub(crate) fn kexp_j(&self, x: usize, j: usize) -> i64 {
        if j == 0 {
            self.kexp[x]
        } else {
            -self.kexp[x]
        }
    }
}

fn check_datum(d: &CartanSatakeDatum) -> Result<()> {
    let ok = d.i_tau() == [0]
        && match d.kind(0) {
            OrbitKind::Fixed => d.rank() == 1,
            _ => d.rank() == 2 && d.tau(0) == 1,
        };
    if !ok {
        return Err(Error::Precondition("the oracle needs a rank one or two datum with I_τ = {0}".into()));
    }
    Ok(())
}

fn var(e: i64) -> LR {
    LR::q_pow(e)
}

fn basis(k: usize) -> QVec {
    QVec::from([(k, LR::one())])
}

fn single(n: usize, entries: &[(usize, usize, LR)]) -> QOperator {
    let mut op = QOperator::zero(n);
    for (src, tgt, z) in entries {
        qvec_add(&mut op.cols[*src], *tgt, z);
    }
    op
}

/// ℘*(B_j) = c_j · B_{τ(j)} k_j⁻¹, with c_j = q⁻¹ for a = 0 and q^{s_j − 2} for a = −1.
fn wp_factor(d: &CartanSatakeDatum, j: usize) -> LR {
    match d.kind(0) {
        OrbitKind::Orthogonal => var(-1),
        _ => var(d.s(j) - 2),
    }
}

/// Norms of v_k = B_i^{(k)} v₀ from (v_k, v_k) = [k]⁻¹ (v_{k−1}, ℘*(B_i) v_k).
fn gram_by_lowering(d: &CartanSatakeDatum, bt: &QOperator, kexp: &[i64]) -> Result<Vec<LR>> {
    let c = wp_factor(d, 0);
    let mut g = vec![LR::one()];
    for k in 1..kexp.len() {
        let lower = bt.entry(k - 1, k);
        let step = &(&c * &var(-kexp[k])) * &lower;
        g.push((&step * &g[k - 1]).checked_div(&qint(k as i64))?);
    }
    Ok(g)
}

/// The simple module with the given parameters.
pub fn build_rank_two_module(d: &CartanSatakeDatum, p: ModuleParams) -> Result<RankTwoModule> {
    check_datum(d)?;
    let s = d.s(0);
    let (label, names, b, kexp, wti, gram, bound) = match (d.kind(0), p) {
        (OrbitKind::Fixed, ModuleParams::Fixed(n)) => {
            let op = single(1, &[(0, 0, qint(n))]);
            let w = IWeight(vec![IEntry::Parity((n + s).rem_euclid(2) as u8)]);
            (format!("V^ı({n})"), vec![String::from("b")], vec![op], vec![0], vec![w], vec![LR::one()], n.abs())
        }
        (OrbitKind::Orthogonal, ModuleParams::Orthogonal(n)) => {
            if n < 0 {
                return Err(Error::InvalidParameter(format!("n = {n} < 0")));
            }
            let dim = n as usize + 1;
            let mut bi = Vec::new();
            let mut bt = Vec::new();
            for k in 0..dim {
                if k + 1 < dim {
                    bi.push((k, k + 1, qint(k as i64 + 1)));
                }
                if k > 0 {
                    bt.push((k, k - 1, qint(n - k as i64 + 1)));
                }
            }
            let (bi, bt) = (single(dim, &bi), single(dim, &bt));
            let kexp: Vec<i64> = (0..dim as i64).map(|k| n - 2 * k).collect();
            let gram = gram_by_lowering(d, &bt, &kexp)?;
            let wti = kexp.iter().map(|&m| IWeight(vec![IEntry::Signed(m)])).collect();
            let names = (0..dim).map(|k| format!("b_{k}")).collect();
            (format!("V^ı({n})"), names, vec![bi, bt], kexp, wti, gram, n)
        }
        (OrbitKind::Adjacent, ModuleParams::Adjacent(nm, np)) => {
            if nm < 0 {
                return Err(Error::InvalidParameter(format!("n₋ = {nm} < 0")));
            }
            let dim = nm as usize + 1;
            let mut bi = Vec::new();
            let mut bt = Vec::new();
            for k in 0..dim {
                let kk = k as i64;
                if k + 1 < dim {
                    bi.push((k, k + 1, qint(kk + 1)));
                }
                if k > 0 {
                    bt.push((k, k - 1, &qint(nm - kk + 1) * &brace(np - s - kk + 1)));
                }
            }
            let (bi, bt) = (single(dim, &bi), single(dim, &bt));
            let kexp: Vec<i64> = (0..dim as i64).map(|k| nm + np - 3 * k).collect();
            let gram = gram_by_lowering(d, &bt, &kexp)?;
            let wti = kexp.iter().map(|&m| IWeight(vec![IEntry::Signed(m)])).collect();
            let names = (0..dim).map(|k| format!("b_{k}")).collect();
            (format!("V^ı({nm},{np})"), names, vec![bi, bt], kexp, wti, gram, nm.abs() + np.abs() + s.abs() + 2)
        }
        _ => return Err(Error::InvalidParameter("module parameters do not match the datum".into())),
    };
    let m = RankTwoModule { datum: d.clone(), label, params: Some(p), names, b, kexp, wti, gram, bound };
    check_relations(&m)?;
    check_contragredient(&m)?;
    check_highest_vector(&m)?;
    Ok(m)
}

fn eq_or(v: &QVec, w: &QVec, what: impl FnOnce() -> String) -> Result<()> {
    if v != w {
        return Err(Error::Relation(what()));
    }
    Ok(())
}

/// t = B_{τ(i)}B_i − q B_i B_{τ(i)} − [k_i; −s_i].
pub(crate) fn apply_t(m: &RankTwoModule, v: &QVec) -> QVec {
    let s = m.s();
    let a = m.b[1].apply(&m.b[0].apply(v));
    let b = qvec_scale(&m.b[0].apply(&m.b[1].apply(v)), &var(1));
    let mut out = qvec_sum(&a, &qvec_scale(&b, &LR::int(-1)));
    for (x, z) in v {
        qvec_add(&mut out, *x, &(&-z * &qint(m.kexp[*x] - s)));
    }
    out
}

/// The defining relations of the rank-two subalgebra, on every basis vector.
pub fn check_relations(m: &RankTwoModule) -> Result<()> {
    let n = m.dim();
    let s = m.s();
    match m.a() {
        2 => Ok(()),
        0 => {
            for x in 0..n {
                let v = basis(x);
                let lhs = qvec_sum(&m.b[1].apply(&m.b[0].apply(&v)), &qvec_scale(&m.b[0].apply(&m.b[1].apply(&v)), &LR::int(-1)));
                eq_or(&lhs, &qvec_scale(&v, &qint(m.kexp[x])), || format!("[B_τ, B_i] on {}", m.names[x]))?;
                shift_check(m, x, -2)?;
            }
            Ok(())
        }
        _ => {
            let two = qint(2);
            for x in 0..n {
                let v = basis(x);
                for (j, t) in [(0usize, 1usize), (1, 0)] {
                    let bj = &m.b[j];
                    let bt = &m.b[t];
                    let l1 = bj.apply(&bj.apply(&bt.apply(&v)));
                    let l2 = qvec_scale(&bj.apply(&bt.apply(&bj.apply(&v))), &-&two);
                    let l3 = bt.apply(&bj.apply(&bj.apply(&v)));
                    let lhs = qvec_sum(&qvec_sum(&l1, &l2), &l3);
                    // −[2] B_i {k_i; −1−s} resp. −[2] {k_i; −1−s} B_τ
                    let rhs = if j == 0 {
                        qvec_scale(&bj.apply(&v), &(&-&two * &brace_k(m.kexp[x], -1 - s)))
                    } else {
                        let w = bj.apply(&v);
                        let mut out = QVec::new();
                        for (y, z) in &w {
                            qvec_add(&mut out, *y, &(&(&-&two * &brace_k(m.kexp[*y], -1 - s)) * z));
                        }
                        out
                    };
                    eq_or(&lhs, &rhs, || format!("cubic relation for B_{j} on {}", m.names[x]))?;
                }
                shift_check(m, x, -3)?;
                // B_τ B_i^{(k)} = B_i^{(k−1)}(t + [k_i; −s−2(k−1)]) + q^k B_i^{(k)} B_τ
                let mut bik = v.clone();
                let mut bik_prev = QVec::new();
                for k in 1..=3i64 {
                    bik_prev = bik.clone();
                    bik = qvec_scale(&m.b[0].apply(&bik), &qint(k).recip()?);
                    let lhs = m.b[1].apply(&bik);
                    let mut inner = apply_t(m, &v);
                    qvec_add(&mut inner, x, &qint(m.kexp[x] - s - 2 * (k - 1)));
                    let mut r1 = inner;
                    for _ in 0..k - 1 {
                        r1 = m.b[0].apply(&r1);
                    }
                    let r1 = qvec_scale(&r1, &qfact((k - 1) as u32).recip()?);
                    let mut r2 = m.b[1].apply(&v);
                    for _ in 0..k {
                        r2 = m.b[0].apply(&r2);
                    }
                    let r2 = qvec_scale(&r2, &(&var(k) * &qfact(k as u32).recip()?));
                    eq_or(&lhs, &qvec_sum(&r1, &r2), || format!("B_τ B_i^({k}) on {}", m.names[x]))?;
                }
                let _ = bik_prev;
            }
            Ok(())
        }
    }
}

fn shift_check(m: &RankTwoModule, x: usize, by: i64) -> Result<()> {
    for (j, sh) in [(0usize, by), (1, -by)] {
        for y in m.b[j].cols[x].keys() {
            if m.kexp[*y] != m.kexp[x] + sh {
                return Err(Error::Relation(format!("k_i B_{j} on {}", m.names[x])));
            }
        }
    }
    Ok(())
}

/// (B_j x, y) = (x, ℘*(B_j) y) on all basis pairs.
pub fn check_contragredient(m: &RankTwoModule) -> Result<()> {
    let n = m.dim();
    let pairs: Vec<(usize, usize)> = if m.a() == 2 { vec![(0, 0)] } else { vec![(0, 1), (1, 0)] };
    for (j, t) in pairs {
        for y in 0..n {
            // ℘*(B_j) y
            let adj = if m.a() == 2 {
                m.b[0].apply(&basis(y))
            } else {
                qvec_scale(&m.b[t].apply(&basis(y)), &(&wp_factor(&m.datum, j) * &var(-m.kexp_j(y, j))))
            };
            for x in 0..n {
                let lhs = &m.b[j].entry(y, x) * &m.gram[y];
                let rhs = &m.gram[x] * adj.get(&x).unwrap_or(&LR::zero());
                if lhs != rhs {
                    return Err(Error::Relation(format!("form is not contragredient for B_{j} at ({}, {})", m.names[x], m.names[y])));
                }
            }
        }
    }
    Ok(())
}

fn check_highest_vector(m: &RankTwoModule) -> Result<()> {
    if let Some(ModuleParams::Adjacent(nm, np)) = m.params {
        let v = basis(0);
        if !m.b[1].apply(&v).is_empty() {
            return Err(Error::Relation("B_τ v₀ ≠ 0".into()));
        }
        eq_or(&apply_t(m, &v), &qvec_scale(&v, &qint(nm - np + m.s())), || String::from("t v₀"))?;
        if m.kexp[0] != nm + np {
            return Err(Error::Relation("k_i v₀".into()));
        }
    }
    Ok(())
}

/// V_♮ for A2 with the flip: u₋₁ →(i) u₀ →(τ(i)) u₁.
pub fn natural_module(d: &CartanSatakeDatum) -> Result<UModule> {
    check_datum(d)?;
    if d.kind(0) != OrbitKind::Adjacent {
        return Err(Error::Precondition("V_♮ is the A2 natural module".into()));
    }
    let wt = vec![Weight(vec![1, 0]), Weight(vec![-1, 1]), Weight(vec![0, -1])];
    let one = LR::one;
    let u = UModule {
        names: vec!["b_-1".into(), "b_0".into(), "b_1".into()],
        wt,
        e: vec![single(3, &[(1, 0, one())]), single(3, &[(2, 1, one())])],
        f: vec![single(3, &[(0, 1, one())]), single(3, &[(1, 2, one())])],
        gram: vec![one(), one(), one()],
    };
    check_umodule(d, &u)?;
    Ok(u)
}

fn sl2_parts(m: i64) -> Result<(Vec<(usize, usize, LR)>, Vec<(usize, usize, LR)>, Vec<LR>)> {
    let dim = m as usize + 1;
    let mut e = Vec::new();
    let mut f = Vec::new();
    let mut g = vec![LR::one()];
    for k in 0..dim {
        let kk = k as i64;
        if k + 1 < dim {
            f.push((k, k + 1, qint(kk + 1)));
        }
        if k > 0 {
            e.push((k, k - 1, qint(m - kk + 1)));
            // (x_k, x_k) = [k]⁻¹ q⁻¹ q^{−(m−2k)} [m−k+1] (x_{k−1}, x_{k−1})
            let step = &var(-1 - (m - 2 * kk)) * &qint(m - kk + 1);
            g.push((&step * &g[k - 1]).checked_div(&qint(kk))?);
        }
    }
    Ok((e, f, g))
}

/// V(m) for sl2 (a = 2), on x_k = F^{(k)} x₀.
pub fn sl2_module(d: &CartanSatakeDatum, m: i64) -> Result<UModule> {
    check_datum(d)?;
    if d.kind(0) != OrbitKind::Fixed || m < 0 {
        return Err(Error::Precondition("sl2 module needs a fixed point and m ≥ 0".into()));
    }
    let dim = m as usize + 1;
    let (e, f, gram) = sl2_parts(m)?;
    let u = UModule {
        names: (0..dim).map(|k| format!("b_{k}")).collect(),
        wt: (0..dim as i64).map(|k| Weight(vec![m - 2 * k])).collect(),
        e: vec![single(dim, &e)],
        f: vec![single(dim, &f)],
        gram,
    };
    check_umodule(d, &u)?;
    Ok(u)
}

/// V(m, n) for sl2 × sl2 (a = 0), on x_{k,l} = F_τ^{(k)} F_i^{(l)} x₀₀ with
/// ⟨h_i, wt⟩ = n − 2l and ⟨h_τ, wt⟩ = m − 2k.
pub fn sl2_pair_module(d: &CartanSatakeDatum, m: i64, n: i64) -> Result<UModule> {
    check_datum(d)?;
    if d.kind(0) != OrbitKind::Orthogonal || m < 0 || n < 0 {
        return Err(Error::Precondition("pair module needs a = 0 and m, n ≥ 0".into()));
    }
    let (et, ft, gt) = sl2_parts(m)?;
    let (ei, fi, gi) = sl2_parts(n)?;
    let (dm, dn) = (m as usize + 1, n as usize + 1);
    let idx = |k: usize, l: usize| k * dn + l;
    let lift_i = |v: &[(usize, usize, LR)]| -> Vec<(usize, usize, LR)> {
        (0..dm).flat_map(|k| v.iter().map(move |(a, b, z)| (idx(k, *a), idx(k, *b), z.clone()))).collect()
    };
    let lift_t = |v: &[(usize, usize, LR)]| -> Vec<(usize, usize, LR)> {
        (0..dn).flat_map(|l| v.iter().map(move |(a, b, z)| (idx(*a, l), idx(*b, l), z.clone()))).collect()
    };
    let dim = dm * dn;
    let mut names = Vec::new();
    let mut wt = Vec::new();
    let mut gram = Vec::new();
    for k in 0..dm {
        for l in 0..dn {
            names.push(format!("b_{{{k},{l}}}"));
            wt.push(Weight(vec![n - 2 * l as i64, m - 2 * k as i64]));
            gram.push(&gt[k] * &gi[l]);
        }
    }
    let u = UModule {
        names,
        wt,
        e: vec![single(dim, &lift_i(&ei)), single(dim, &lift_t(&et))],
        f: vec![single(dim, &lift_i(&fi)), single(dim, &lift_t(&ft))],
        gram,
    };
    check_umodule(d, &u)?;
    Ok(u)
}

/// [E_j, F_j] = [⟨h_j, wt⟩] and (E_j x, y) = (x, q⁻¹F_jK_j y).
fn check_umodule(d: &CartanSatakeDatum, u: &UModule) -> Result<()> {
    let n = u.names.len();
    for j in 0..d.rank() {
        for x in 0..n {
            let v = basis(x);
            let lhs = qvec_sum(&u.e[j].apply(&u.f[j].apply(&v)), &qvec_scale(&u.f[j].apply(&u.e[j].apply(&v)), &LR::int(-1)));
            eq_or(&lhs, &qvec_scale(&v, &qint(u.wt[x].get(j))), || format!("[E_{j}, F_{j}] on {}", u.names[x]))?;
            for y in 0..n {
                let lhs = &u.e[j].entry(y, x) * &u.gram[y];
                let rhs = &u.gram[x] * &(&u.f[j].entry(x, y) * &var(u.wt[y].get(j) - 1));
                if lhs != rhs {
                    return Err(Error::Relation(format!("U-module form at ({}, {})", u.names[x], u.names[y])));
                }
            }
        }
    }
    Ok(())
}

/// M ⊗ U through Δ(B_j) = B_j ⊗ K_j⁻¹ + 1 ⊗ F_j + k_j⁻¹ ⊗ ς_j E_{τ(j)} K_j⁻¹,
/// with ς_j = q⁻¹, 1, q^{s_j} for a = 2, 0, −1.
pub fn tensor_with(m: &RankTwoModule, u: &UModule) -> Result<RankTwoModule> {
    let d = &m.datum;
    let (n1, n2) = (m.dim(), u.names.len());
    let idx = |x: usize, y: usize| x * n2 + y;
    let r = d.rank();
    let a = m.a();
    let varsigma = |j: usize| match a {
        2 => var(-1),
        0 => LR::one(),
        _ => var(d.s(j)),
    };
    let mut b = Vec::new();
    for j in 0..r {
        let t = d.tau(j);
        let mut op = QOperator::zero(n1 * n2);
        for x in 0..n1 {
            for y in 0..n2 {
                let col = &mut op.cols[idx(x, y)];
                let kinv = var(-u.wt[y].get(j));
                for (x2, z) in &m.b[j].cols[x] {
                    qvec_add(col, idx(*x2, y), &(z * &kinv));
                }
                for (y2, z) in &u.f[j].cols[y] {
                    qvec_add(col, idx(x, *y2), z);
                }
                let pre = &(&var(-m.kexp_j(x, j)) * &varsigma(j)) * &kinv;
                for (y2, z) in &u.e[t].cols[y] {
                    qvec_add(col, idx(x, *y2), &(&pre * z));
                }
            }
        }
        b.push(op);
    }
    let mut names = Vec::new();
    let mut kexp = Vec::new();
    let mut wti = Vec::new();
    let mut gram = Vec::new();
    for x in 0..n1 {
        for y in 0..n2 {
            names.push(format!("{}⊗{}", m.names[x], u.names[y]));
            let w = &u.wt[y];
            kexp.push(if a == 2 { 0 } else { m.kexp[x] + w.get(0) - w.get(1) });
            wti.push(m.wti[x].add(&project_weight(w, d)));
            gram.push(&m.gram[x] * &u.gram[y]);
        }
    }
    let spread = u.wt.iter().flat_map(|w| w.0.iter()).map(|v| v.abs()).max().unwrap_or(0);
    let out = RankTwoModule {
        datum: d.clone(),
        label: format!("{} ⊗ {}", m.label, "U"),
        params: None,
        names,
        b,
        kexp,
        wti,
        gram,
        bound: m.bound + 2 * spread + 2,
    };
    check_relations(&out)?;
    check_contragredient(&out)?;
    Ok(out)
}

/// lt(x) = c · q^{h/2} with c ∈ ℤ[1/√2].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeadingTerm {
    pub coeff: Sqrt2Scalar,
    pub half_exp: i64,
}

/// The positive square root of the leading term of a norm.
pub fn lt_of_norm(n: &LR) -> Result<LeadingTerm> {
    let (c, e) = n.leading_term().ok_or_else(|| Error::Decomposition("zero norm".into()))?;
    let coeff = Sqrt2Scalar::signed_sqrt(1, &c).ok_or_else(|| Error::Decomposition(format!("leading coefficient {c} has no square root in ℤ[1/√2]")))?;
    Ok(LeadingTerm { coeff, half_exp: e })
}

/// One row of [`module_norms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormEntry {
    pub k: i64,
    pub recursion: LR,
    pub closed_form: LR,
    pub lt: LeadingTerm,
    pub lt_table: LeadingTerm,
}

/// The closed form q^{k(−n₋−n₊+3k/2+s−1/2)} [n₋ choose k] ∏_{l=1}^k {n₊−s−l+1}.
pub fn norm_closed_form(nm: i64, np: i64, s: i64, k: i64) -> LR {
    let e = k * (-2 * nm - 2 * np + 3 * k + 2 * s - 1) / 2;
    let mut acc = &var(e) * &qbinom(nm, k);
    for l in 1..=k {
        acc = &acc * &brace(np - s - l + 1);
    }
    acc
}

/// The case table for lt(v_k).
pub fn lt_table(nm: i64, np: i64, s: i64, k: i64) -> LeadingTerm {
    let n = np - s;
    let one = Sqrt2Scalar::int(1);
    if n >= nm || (-1 < n && n < nm && k < n + 1) {
        LeadingTerm { coeff: one, half_exp: 0 }
    } else if -1 < n && n < nm {
        LeadingTerm { coeff: Sqrt2Scalar::new(0, 1, 0), half_exp: (k - n - 1) * (k - n) }
    } else {
        LeadingTerm { coeff: one, half_exp: k * (k - 2 * n - 1) }
    }
}

/// (v_k, v_k) for a simple a = −1 module, by recursion and in closed form.
pub fn module_norms(m: &RankTwoModule) -> Result<Vec<NormEntry>> {
    let Some(ModuleParams::Adjacent(nm, np)) = m.params else {
        return Err(Error::Precondition("norms are tabulated for V^ı(n₋, n₊) only".into()));
    };
    let s = m.s();
    (0..=nm)
        .map(|k| {
            let recursion = m.gram[k as usize].clone();
            Ok(NormEntry { k, closed_form: norm_closed_form(nm, np, s, k), lt: lt_of_norm(&recursion)?, lt_table: lt_table(nm, np, s, k), recursion })
        })
        .collect()
}

pub(crate) fn sign_of_rational(c: &BigRational) -> i32 {
    if c.is_negative() {
        -1
    } else if c.numer() == &BigInt::from(0) {
        0
    } else {
        1
    }
}
