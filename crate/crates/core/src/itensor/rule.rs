use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::crystal::{check_s_conditions, s_condition_pairs, Crystal, CrystalGraph};
use crate::error::{Error, Result};
use crate::icrystal::{as_basis, materialize_icrystal, norm2, vec_add, ICrystal, ICrystalGraph, Vector};
use crate::report::Report;
use crate::rootdata::{project_weight, CartanSatakeDatum, ExtInt, IExtInt, IWeight, OrbitKind, Sqrt2Scalar};

/// The statistics F_i, B_i, E_i of b₁ ⊗ b₂.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorStats {
    pub f: IExtInt,
    pub b: IExtInt,
    pub e: IExtInt,
}

/// Which of F, B, E is strictly dominant, in the priority F, then B, then E.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    F,
    B,
    E,
}

/// The branch of the rule that produced B̃_i b. `case` is 0 for the
/// default line and k for the k-th listed special line; `ambiguous` marks
/// inputs where two special lines both apply (the first one is used).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Branch {
    pub regime: Regime,
    pub case: u8,
    pub ambiguous: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleOutcome<E> {
    pub beta: IExtInt,
    pub btil: Vector<E>,
    pub stats: TensorStats,
    pub branch: Branch,
}

fn s_eff(d: &CartanSatakeDatum, i: usize) -> i64 {
    if d.kind(i) == OrbitKind::Orthogonal {
        0
    } else {
        d.s(i)
    }
}

fn same_datum(a: &CartanSatakeDatum, b: &CartanSatakeDatum) -> Result<()> {
    if a != b {
        return Err(Error::DatumMismatch);
    }
    Ok(())
}

pub fn tensor_stats<A: ICrystal, B: Crystal>(left: &A, b1: &A::Elem, right: &B, b2: &B::Elem, i: usize) -> Result<TensorStats> {
    let d = left.datum();
    same_datum(d, right.datum())?;
    let beta = left.beta(b1, i)?;
    let phi = right.phi(b2, i);
    if d.kind(i) == OrbitKind::Fixed {
        // −∞ carries no parity, so no bump when φ_i = −∞
        let f = match phi {
            ExtInt::NegInf => IExtInt::NegInf,
            ExtInt::Fin(p) => IExtInt::Fin(p + i64::from(beta.add(1).parity() == Some(p.rem_euclid(2) as u8))),
        };
        return Ok(TensorStats { f, b: beta, e: phi.into() });
    }
    let shift = s_eff(d, i) - left.wti(b1).at(d, i).signed();
    Ok(TensorStats {
        f: phi.into(),
        b: beta.add(shift),
        e: IExtInt::from(right.phi(b2, d.tau(i))).add(shift),
    })
}

fn regime(st: &TensorStats) -> Result<Regime> {
    Ok(if st.f.gt(st.b)? && st.f.gt(st.e)? {
        Regime::F
    } else if st.b.gt(st.e)? {
        Regime::B
    } else {
        Regime::E
    })
}

fn left_part<E1: Clone + Ord, E2: Clone + Ord>(v: &Vector<E1>, b2: &E2, z: Sqrt2Scalar) -> Vector<(E1, E2)> {
    let mut out = Vector::new();
    for (b, w) in v {
        vec_add(&mut out, (b.clone(), b2.clone()), *w * z);
    }
    out
}

fn right_part<E1: Clone + Ord, E2: Clone + Ord>(b1: &E1, b2: Option<E2>, z: Sqrt2Scalar) -> Vector<(E1, E2)> {
    let mut out = Vector::new();
    if let Some(b2) = b2 {
        vec_add(&mut out, (b1.clone(), b2), z);
    }
    out
}

fn sum<E: Ord>(mut a: Vector<E>, b: Vector<E>) -> Vector<E> {
    for (e, z) in b {
        vec_add(&mut a, e, z);
    }
    a
}

/// β_i(b₁ ⊗ b₂) and B̃_i(b₁ ⊗ b₂) by the full case analysis.
pub fn local_rule<A: ICrystal, B: Crystal>(
    left: &A,
    b1: &A::Elem,
    right: &B,
    b2: &B::Elem,
    i: usize,
) -> Result<RuleOutcome<(A::Elem, B::Elem)>> {
    let d = left.datum();
    let st = tensor_stats(left, b1, right, b2, i)?;
    let reg = regime(&st)?;
    let top = st.f.max(st.b)?.max(st.e)?;
    let ti = d.tau(i);
    let h = Sqrt2Scalar::INV_SQRT2;
    let one = Sqrt2Scalar::ONE;
    let kind = d.kind(i);
    let beta = match kind {
        OrbitKind::Fixed => top.add(-right.wt_i(b2, i)),
        _ => top.add(left.wti(b1).at(d, i).signed() - s_eff(d, i) - right.wt_i(b2, ti)),
    };
    let bt1 = || left.btil(b1, i);
    let up = || right.f(b2, i);
    let down = || right.e(b2, if kind == OrbitKind::Fixed { i } else { ti });
    let plain = |case: u8| Branch { regime: reg, case, ambiguous: false };
    if kind != OrbitKind::Adjacent {
        let btil = match reg {
            Regime::F => right_part(b1, up(), one),
            Regime::B => left_part(&bt1()?, b2, one),
            Regime::E => right_part(b1, down(), one),
        };
        return Ok(RuleOutcome { beta, btil, stats: st, branch: plain(0) });
    }
    let beta_t = left.beta(b1, ti)?;
    let phi_i = right.phi(b2, i);
    let phi_t = right.phi(b2, ti);
    let (btil, branch) = match reg {
        Regime::F => {
            let f2 = up();
            let c1 = st.f == st.e.add(1) && f2.as_ref().is_some_and(|x| right.phi(x, ti) == phi_t.add(1));
            let z = if c1 { h } else { one };
            (right_part(b1, f2, z), plain(u8::from(c1)))
        }
        Regime::B => {
            let v = bt1()?;
            let c1 = st.b == st.e.add(1)
                && match as_basis(&v) {
                    Some(x) => left.beta(&x, i)? == left.beta(b1, i)?.add(-2),
                    None => false,
                };
            let c2 = st.f == st.b && st.b != beta_t;
            if c1 {
                (left_part(&v, b2, h), Branch { regime: reg, case: 1, ambiguous: c2 })
            } else if c2 {
                (sum(left_part(&v, b2, h), right_part(b1, up(), h)), plain(2))
            } else {
                (left_part(&v, b2, one), plain(0))
            }
        }
        Regime::E => {
            let e2 = down();
            let phi_e = e2.as_ref().map(|x| right.phi(x, i));
            let c1 = (st.e == st.f && phi_e == Some(phi_i))
                || (st.e == st.b && st.b == beta_t && phi_e.is_some_and(|p| IExtInt::from(p).try_cmp(st.e).map(|o| o.is_lt()).unwrap_or(false)));
            let c2 = st.e == st.f && st.f.gt(beta_t)? && phi_e == Some(phi_i.add(-1));
            if c1 {
                (right_part(b1, e2, h), Branch { regime: reg, case: 1, ambiguous: c2 })
            } else if c2 {
                (sum(right_part(b1, e2, h), right_part(b1, up(), h)), plain(2))
            } else {
                (right_part(b1, e2, one), plain(0))
            }
        }
    };
    Ok(RuleOutcome { beta, btil, stats: st, branch })
}

/// B₁ ⊗ B₂ evaluated lazily. The S-conditions on the right factor are the
/// caller's responsibility; [`build_tensor`] checks them.
#[derive(Debug, Clone)]
pub struct TensorIC<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: ICrystal, B: Crystal> TensorIC<A, B> {
    pub fn new(left: A, right: B) -> Result<Self> {
        same_datum(left.datum(), right.datum())?;
        Ok(Self { left, right })
    }

    pub fn rule(&self, b: &(A::Elem, B::Elem), i: usize) -> Result<RuleOutcome<(A::Elem, B::Elem)>> {
        local_rule(&self.left, &b.0, &self.right, &b.1, i)
    }
}

impl<A: ICrystal, B: Crystal> ICrystal for TensorIC<A, B> {
    type Elem = (A::Elem, B::Elem);

    fn datum(&self) -> &CartanSatakeDatum {
        self.left.datum()
    }

    fn wti(&self, b: &Self::Elem) -> IWeight {
        self.left.wti(&b.0).add(&project_weight(&self.right.wt(&b.1), self.datum()))
    }

    fn beta(&self, b: &Self::Elem, i: usize) -> Result<IExtInt> {
        Ok(self.rule(b, i)?.beta)
    }

    fn btil(&self, b: &Self::Elem, i: usize) -> Result<Vector<Self::Elem>> {
        Ok(self.rule(b, i)?.btil)
    }

    fn name(&self, b: &Self::Elem) -> String {
        format!("{}⊗{}", self.left.name(&b.0), self.right.name(&b.1))
    }
}

/// Errors unless `c` satisfies (S1)–(S3)′ on every pair i, τ(i) that needs them.
pub(crate) fn require_s_conditions(c: &CrystalGraph) -> Result<()> {
    let elems: Vec<usize> = c.elements().collect();
    for (i, j) in s_condition_pairs(c.datum_ref()) {
        let rep = check_s_conditions(c, &elems, i, j);
        if let Some(v) = rep.violations.first() {
            return Err(Error::SCondition(format!("{}: {}", v.clause, v.witness)));
        }
    }
    Ok(())
}

/// An explicit tensor product with the branch taken for every (element, i).
#[derive(Debug, Clone)]
pub struct TensorBuild {
    pub graph: ICrystalGraph,
    pub branches: Vec<Vec<Branch>>,
}

impl TensorBuild {
    /// (element, i) where two special lines of the rule applied at once.
    pub fn ambiguities(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (b, row) in self.branches.iter().enumerate() {
            for (i, br) in row.iter().enumerate() {
                if br.ambiguous {
                    out.push((b, i));
                }
            }
        }
        out
    }
}

/// Row-major elements: b₁ ⊗ b₂ has handle b₁·|B₂| + b₂.
pub fn build_tensor(b1: &ICrystalGraph, b2: &CrystalGraph) -> Result<TensorBuild> {
    same_datum(b1.datum_ref(), b2.datum_ref())?;
    require_s_conditions(b2)?;
    let t = TensorIC::new(b1, b2)?;
    let elems: Vec<(usize, usize)> = b1.elements().flat_map(|x| b2.elements().map(move |y| (x, y))).collect();
    let graph = materialize_icrystal(&t, &elems)?;
    let mut branches = Vec::with_capacity(elems.len());
    for e in &elems {
        branches.push((0..b1.datum_ref().rank()).map(|i| t.rule(e, i).map(|r| r.branch)).collect::<Result<Vec<_>>>()?);
    }
    Ok(TensorBuild { graph, branches })
}

pub fn tensor_icrystal_crystal(b1: &ICrystalGraph, b2: &CrystalGraph) -> Result<ICrystalGraph> {
    Ok(build_tensor(b1, b2)?.graph)
}

/// Checks that ‖B̃_i b‖² is what the branch predicts from its summands, and
/// that it lies in {0, ½, 1} with ½ exactly on single 1/√2 lines whenever
/// B̃ on the left factor sends basis elements to basis elements or 0.
pub fn check_column_norms(b1: &ICrystalGraph, b2: &CrystalGraph) -> Result<Report> {
    let build = build_tensor(b1, b2)?;
    let d = b1.datum_ref();
    let n2 = b2.len();
    let half = Sqrt2Scalar::new(1, 0, 1);
    let mut rep = Report::new();
    let basis_left = b1.elements().all(|x| (0..d.rank()).all(|i| {
        let v = b1.btil_vec(x, i);
        v.is_empty() || as_basis(&v).is_some()
    }));
    for b in build.graph.elements() {
        let (x, y) = (b / n2, b % n2);
        for i in 0..d.rank() {
            let br = build.branches[b][i];
            let actual = norm2(&build.graph.btil_vec(b, i));
            let kind = d.kind(i);
            let ti = if kind == OrbitKind::Fixed { i } else { d.tau(i) };
            let n_up = Sqrt2Scalar::int(i64::from(b2.f(&y, i).is_some()));
            let n_down = Sqrt2Scalar::int(i64::from(b2.e(&y, ti).is_some()));
            let n_left = norm2(&b1.btil_vec(x, i));
            let base = match br.regime {
                Regime::F => n_up,
                Regime::B if br.case == 2 => n_left + n_up,
                Regime::B => n_left,
                Regime::E if br.case == 2 => n_down + n_up,
                Regime::E => n_down,
            };
            let expected = if br.case > 0 && kind == OrbitKind::Adjacent { half * base } else { base };
            let nm = &build.graph.data().names[b];
            if actual != expected {
                rep.push(format!("norm i={}", i + 1), format!("{nm}: {actual} vs branch {expected}"));
            }
            if basis_left && !actual.is_zero() {
                let single = kind == OrbitKind::Adjacent && br.case == 1;
                let want = if single { half } else { Sqrt2Scalar::ONE };
                if actual != want {
                    rep.push(format!("norm class i={}", i + 1), format!("{nm}: {actual}"));
                }
            }
        }
    }
    Ok(rep)
}

/// The identities for β_{τ(i)}(b) + wt^ı_i(b) − s_i in terms of the
/// statistics at i, for every i with a_{i,τ(i)} = −1.
pub fn check_estimate(b1: &ICrystalGraph, b2: &CrystalGraph) -> Result<Report> {
    let d = b1.datum_ref();
    require_s_conditions(b2)?;
    let t = TensorIC::new(b1, b2)?;
    let mut rep = Report::new();
    for x in b1.elements() {
        for y in b2.elements() {
            let b = (x, y);
            for i in (0..d.rank()).filter(|&i| d.kind(i) == OrbitKind::Adjacent) {
                let ti = d.tau(i);
                let s = d.s(i);
                let st = tensor_stats(&b1, &x, &b2, &y, i)?;
                let lhs = t.beta(&b, ti)?.add(t.wti(&b).at(d, i).signed() - s);
                let on_edge = st.b == b1.beta_at(x, ti);
                let bb = if on_edge { st.b } else { st.b.add(-1) };
                let shift = b1.wti_at(x).at(d, i).signed() - s - b2.wt_i(&y, ti);
                let rhs = st.e.add(-1).max(bb)?.max(st.f)?.add(shift);
                if lhs != rhs {
                    let case = if on_edge { "(1)" } else { "(2)" };
                    rep.push(format!("estimate {case} i={}", i + 1), format!("{}: {lhs} vs {rhs}", t.name(&b)));
                }
            }
        }
    }
    Ok(rep)
}
