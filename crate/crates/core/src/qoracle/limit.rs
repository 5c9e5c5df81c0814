use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;

use super::linalg::{injective_at_three, null_space, qvec_add, QVec};
use super::module::{apply_t, build_rank_two_module, natural_module, sign_of_rational, sl2_module, tensor_with, ModuleParams, RankTwoModule};
use super::symbols::qint;
use super::LaurentRational as LR;
use crate::error::{Error, Result};
use crate::icrystal::{BuiltinFamily, ICrystalData, ICrystalGraph};
use crate::rootdata::{CartanSatakeDatum, IExtInt, Sqrt2Scalar};

/// A simple constituent together with its string w₀, B_i w₀, B_i² w₀, ….
#[derive(Debug, Clone)]
pub struct OracleComponent {
    pub params: ModuleParams,
    pub string: Vec<QVec>,
}

/// The crystal limit of a module together with its constituents.
#[derive(Debug, Clone)]
pub struct OracleLimit {
    pub graph: ICrystalGraph,
    pub components: Vec<ModuleParams>,
}

fn dec(msg: impl Into<alloc::string::String>) -> Error {
    Error::Decomposition(msg.into())
}

fn group_by<K: Ord + Copy>(n: usize, key: impl Fn(usize) -> K) -> BTreeMap<K, Vec<usize>> {
    let mut out: BTreeMap<K, Vec<usize>> = BTreeMap::new();
    for x in 0..n {
        out.entry(key(x)).or_default().push(x);
    }
    out
}

fn from_coords(g: &[usize], c: &[LR]) -> QVec {
    let mut v = QVec::new();
    for (x, z) in g.iter().zip(c) {
        qvec_add(&mut v, *x, z);
    }
    v
}

fn dense(rows: &[usize], v: &QVec) -> Result<Vec<LR>> {
    if v.keys().any(|k| !rows.contains(k)) {
        return Err(dec("operator leaves the weight space"));
    }
    Ok(rows.iter().map(|r| v.get(r).cloned().unwrap_or_else(LR::zero)).collect())
}

/// Kernel of `op` restricted to the span of `g`.
fn kernel(g: &[usize], images: &[QVec]) -> Vec<QVec> {
    let mut rows: Vec<usize> = images.iter().flat_map(|v| v.keys().copied()).collect();
    rows.sort_unstable();
    rows.dedup();
    let mat: Vec<Vec<LR>> = rows.iter().map(|r| images.iter().map(|v| v.get(r).cloned().unwrap_or_else(LR::zero)).collect()).collect();
    null_space(&mat, g.len()).iter().map(|c| from_coords(g, c)).collect()
}

fn string_from(m: &RankTwoModule, w: QVec, len: i64) -> Result<Vec<QVec>> {
    if len < 0 {
        return Err(dec("negative string length"));
    }
    let mut out = vec![w];
    for k in 1..=len + 1 {
        // B_i^k w: the divided power only rescales, and the limit normalizes
        let next = m.b[0].apply(out.last().expect("nonempty"));
        if k == len + 1 {
            if !next.is_empty() {
                return Err(dec("string is longer than its highest weight allows"));
            }
        } else {
            if next.is_empty() {
                return Err(dec("string ends early"));
            }
            out.push(next);
        }
    }
    Ok(out)
}

/// Splits the module into simple constituents, each of multiplicity one.
pub fn decompose(m: &RankTwoModule) -> Result<Vec<OracleComponent>> {
    let r = m.bound;
    let s = m.s();
    let mut out = Vec::new();
    match m.a() {
        2 => {
            for (_, g) in group_by(m.dim(), |x| m.wti[x].0[0].parity()) {
                let mut found = 0;
                for c in -r..=r {
                    let mut mat = vec![vec![LR::zero(); g.len()]; g.len()];
                    for (col, &x) in g.iter().enumerate() {
                        let mut img = m.b[0].cols[x].clone();
                        qvec_add(&mut img, x, &-&qint(c));
                        for (row, z) in dense(&g, &img)?.into_iter().enumerate() {
                            mat[row][col] = z;
                        }
                    }
                    if injective_at_three(&mat, g.len()) {
                        continue;
                    }
                    let ker = null_space(&mat, g.len());
                    if ker.len() > 1 {
                        return Err(dec(format!("eigenvalue [{c}] has multiplicity {}", ker.len())));
                    }
                    if let Some(v) = ker.first() {
                        found += 1;
                        out.push(OracleComponent { params: ModuleParams::Fixed(c), string: vec![from_coords(&g, v)] });
                    }
                }
                if found != g.len() {
                    return Err(dec("B is not diagonalizable with eigenvalues [c], |c| within the bound"));
                }
            }
        }
        a => {
            for (kx, g) in group_by(m.dim(), |x| m.kexp[x]) {
                let images: Vec<QVec> = g.iter().map(|&x| m.b[1].cols[x].clone()).collect();
                let ker = kernel(&g, &images);
                if ker.is_empty() {
                    continue;
                }
                if a == 0 {
                    if ker.len() > 1 {
                        return Err(dec(format!("k-eigenvalue q^{kx} has multiplicity {}", ker.len())));
                    }
                    let w = ker.into_iter().next().expect("one vector");
                    out.push(OracleComponent { params: ModuleParams::Orthogonal(kx), string: string_from(m, w, kx)? });
                    continue;
                }
                let tk: Vec<Vec<LR>> = ker.iter().map(|v| dense(&g, &apply_t(m, v))).collect::<Result<_>>()?;
                let kd: Vec<Vec<LR>> = ker.iter().map(|v| dense(&g, v)).collect::<Result<_>>()?;
                let mut found = 0;
                for b in -r..=r {
                    let qb = qint(b);
                    let mat: Vec<Vec<LR>> = (0..g.len()).map(|row| (0..ker.len()).map(|c| &tk[c][row] - &(&qb * &kd[c][row])).collect()).collect();
                    if injective_at_three(&mat, ker.len()) {
                        continue;
                    }
                    let sol = null_space(&mat, ker.len());
                    if sol.len() > 1 {
                        return Err(dec(format!("t-eigenvalue [{b}] has multiplicity {}", sol.len())));
                    }
                    let Some(x) = sol.first() else { continue };
                    found += 1;
                    let mut w = QVec::new();
                    for (c, z) in x.iter().enumerate() {
                        for (y, u) in &ker[c] {
                            qvec_add(&mut w, *y, &(z * u));
                        }
                    }
                    if (kx + b - s).rem_euclid(2) != 0 {
                        return Err(dec("parameters are not integral"));
                    }
                    let (nm, np) = ((kx + b - s) / 2, (kx - b + s) / 2);
                    out.push(OracleComponent { params: ModuleParams::Adjacent(nm, np), string: string_from(m, w, nm)? });
                }
                if found != ker.len() {
                    return Err(dec("t is not diagonalizable on the highest weight space"));
                }
            }
        }
    }
    let total: usize = out.iter().map(|c| c.string.len()).sum();
    if total != m.dim() {
        return Err(dec(format!("constituents span {total} of {} dimensions", m.dim())));
    }
    Ok(out)
}

fn norm(m: &RankTwoModule, v: &QVec) -> LR {
    let mut acc = LR::zero();
    for (x, z) in v {
        acc = &acc + &(&(z * z) * &m.gram[*x]);
    }
    acc
}

/// Coordinates of w/lt(w) in the basis x_b/lt(x_b), at q = ∞.
fn limit_vector(m: &RankTwoModule, w: &QVec) -> Result<BTreeMap<usize, Sqrt2Scalar>> {
    let (cw, mw) = norm(m, w).leading_term().ok_or_else(|| dec("isotropic vector"))?;
    let mut out = BTreeMap::new();
    for (b, z) in w {
        let (c, e) = z.leading_term().expect("stored entries are nonzero");
        let (cb, mb) = m.gram[*b].leading_term().ok_or_else(|| dec("isotropic basis vector"))?;
        let half = 2 * e + mb - mw;
        if half > 0 {
            return Err(dec(format!("coefficient of {} diverges at q = ∞", m.names[*b])));
        }
        if half < 0 {
            continue;
        }
        let sq: BigRational = &c * &c * &cb / &cw;
        let v = Sqrt2Scalar::signed_sqrt(sign_of_rational(&c), &sq).ok_or_else(|| dec(format!("limit coefficient √({sq}) is not in ℤ[1/√2]")))?;
        if !v.is_zero() {
            out.insert(*b, v);
        }
    }
    Ok(out)
}

/// (β_j, image index under B̃_j as an offset in the string and its sign).
fn column_rule(m: &RankTwoModule, p: ModuleParams, k: i64) -> Vec<(i64, Option<(i64, Sqrt2Scalar)>)> {
    let one = Sqrt2Scalar::ONE;
    match p {
        ModuleParams::Fixed(c) => {
            let sg = Sqrt2Scalar::int(c.signum());
            vec![(c.abs(), if c == 0 { None } else { Some((0, sg)) })]
        }
        ModuleParams::Orthogonal(n) => vec![
            (n - k, (k < n).then_some((1, one))),
            (k, (k > 0).then_some((-1, one))),
        ],
        ModuleParams::Adjacent(nm, np) => {
            let (si, st) = (m.s(), m.datum.s(1));
            vec![
                (nm - k + (np - si - k).max(0), (k < nm).then_some((1, one))),
                (k + (-np - st + k).max(0), (k > 0).then_some((-1, one))),
            ]
        }
    }
}

/// The ıcrystal obtained at q = ∞ from the normalized strings of the
/// constituents, expressed on the orthonormal basis x_b/lt(x_b).
pub fn oracle_crystal_limit(m: &RankTwoModule) -> Result<OracleLimit> {
    let comps = decompose(m)?;
    let n = m.dim();
    let rank = m.datum.rank();
    // columns of P, with (component, position) labels
    let mut cols = Vec::new();
    let mut label = Vec::new();
    for (ci, c) in comps.iter().enumerate() {
        for (k, w) in c.string.iter().enumerate() {
            cols.push(limit_vector(m, w)?);
            label.push((ci, k));
        }
    }
    for a in 0..n {
        for b in a..n {
            let mut dot = Sqrt2Scalar::ZERO;
            for (x, z) in &cols[a] {
                if let Some(y) = cols[b].get(x) {
                    dot = dot + *z * *y;
                }
            }
            let want = if a == b { Sqrt2Scalar::ONE } else { Sqrt2Scalar::ZERO };
            if dot != want {
                return Err(dec("limit vectors are not orthonormal"));
            }
        }
    }
    let start: Vec<usize> = comps.iter().scan(0, |acc, c| {
        let s = *acc;
        *acc += c.string.len();
        Some(s)
    }).collect();
    let rules: Vec<Vec<(i64, Option<(i64, Sqrt2Scalar)>)>> = label.iter().map(|&(ci, k)| column_rule(m, comps[ci].params, k as i64)).collect();
    // rows of P: basis b ↦ Σ_c P[b][c] col_c
    let mut rows: Vec<Vec<(usize, Sqrt2Scalar)>> = vec![Vec::new(); n];
    for (c, col) in cols.iter().enumerate() {
        for (b, z) in col {
            rows[*b].push((c, *z));
        }
    }
    let mut beta = Vec::with_capacity(n);
    let mut btil = Vec::with_capacity(n);
    for b in 0..n {
        let mut bb = Vec::with_capacity(rank);
        let mut tt = Vec::with_capacity(rank);
        for j in 0..rank {
            let betas: Vec<i64> = rows[b].iter().map(|(c, _)| rules[*c][j].0).collect();
            if betas.windows(2).any(|w| w[0] != w[1]) {
                return Err(dec(format!("β_{j} is not constant on the support of {}", m.names[b])));
            }
            bb.push(IExtInt::Fin(betas[0]));
            let mut img: BTreeMap<usize, Sqrt2Scalar> = BTreeMap::new();
            for (c, z) in &rows[b] {
                if let Some((off, sg)) = rules[*c][j].1 {
                    let (ci, k) = label[*c];
                    let tgt = start[ci] + (k as i64 + off) as usize;
                    for (y, u) in &cols[tgt] {
                        let e = img.entry(*y).or_insert(Sqrt2Scalar::ZERO);
                        *e = *e + *z * sg * *u;
                    }
                }
            }
            tt.push(img.into_iter().filter(|(_, z)| !z.is_zero()).collect());
        }
        beta.push(bb);
        btil.push(tt);
    }
    let graph = ICrystalGraph::from_data(m.datum.clone(), ICrystalData { names: m.names.clone(), wti: m.wti.clone(), beta, btil })?;
    Ok(OracleLimit { graph, components: comps.into_iter().map(|c| c.params).collect() })
}

/// V^ı(n₋, n₊) ⊗ V_♮ for the A2 flip, through the crystal limit.
pub fn oracle_adjacent_natural(d: &CartanSatakeDatum, nm: i64, np: i64) -> Result<OracleLimit> {
    let v = build_rank_two_module(d, ModuleParams::Adjacent(nm, np))?;
    oracle_crystal_limit(&tensor_with(&v, &natural_module(d)?)?)
}

/// V(m) as a module for the rank one fixed-point subalgebra.
pub fn oracle_fixed_restriction(d: &CartanSatakeDatum, m: i64) -> Result<OracleLimit> {
    let v = build_rank_two_module(d, ModuleParams::Fixed(d.s(0)))?;
    oracle_crystal_limit(&tensor_with(&v, &sl2_module(d, m)?)?)
}

/// The eigenvalues of B on V(m) for a = 2, as signed integers c meaning [c].
pub fn expected_fixed_eigenvalues(s: i64, m: i64) -> Vec<i64> {
    let sg = if s < 0 { -1 } else { 1 };
    let a = s.abs();
    let mut out = Vec::new();
    if m < a {
        out.extend((0..=m).map(|l| sg * (a - m + 2 * l)));
    } else {
        if (m - a) % 2 == 0 {
            out.push(0);
            for l in 1..=(m - a) / 2 {
                out.extend([2 * l, -2 * l]);
            }
        } else {
            for l in 1..=(m - a + 1) / 2 {
                out.extend([2 * l - 1, -(2 * l - 1)]);
            }
        }
        out.extend((m - a + 1..=m).map(|l| sg * (a - m + 2 * l)));
    }
    out.sort_unstable();
    out
}

/// Which of the six regimes V^ı(n₋, n₊) ⊗ V_♮ falls in, numbered 0 for n₋ = 0
/// and 1–5 by the position of n₊ − s_i against n₋, and the families of its
/// components.
pub fn expected_components(d: &CartanSatakeDatum, nm: i64, np: i64) -> (u8, Vec<BuiltinFamily>) {
    use BuiltinFamily::{Adjacent, Vee, Wedge};
    let n = np - d.s(0);
    let adj = |a: i64, b: i64| Adjacent { n_minus: a, n_plus: b };
    if nm == 0 {
        return if n == 0 { (0, vec![Vee { n_minus: 1, n_plus: np }]) } else { (0, vec![adj(1, np), adj(0, np + 1)]) };
    }
    let three = vec![adj(nm + 1, np), adj(nm, np + 1), adj(nm - 1, np - 1)];
    if n > nm {
        (1, three)
    } else if n == nm {
        (2, vec![Vee { n_minus: nm + 1, n_plus: np }, adj(nm - 1, np - 1)])
    } else if n > -1 {
        (3, three)
    } else if n == -1 {
        (4, vec![adj(nm + 1, np), Wedge { n_minus: nm, n_plus: np + 1 }])
    } else {
        (5, three)
    }
}
