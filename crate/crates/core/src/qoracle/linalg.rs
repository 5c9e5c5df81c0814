use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::LaurentRational as LR;

/// A sparse vector over ℚ(q) with no zero entries.
pub type QVec = BTreeMap<usize, LR>;

/// A linear operator given by the images of the basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QOperator {
    pub cols: Vec<QVec>,
}

pub(crate) fn qvec_add(v: &mut QVec, k: usize, z: &LR) {
    if z.is_zero() {
        return;
    }
    let sum = match v.get(&k) {
        Some(x) => x + z,
        None => z.clone(),
    };
    if sum.is_zero() {
        v.remove(&k);
    } else {
        v.insert(k, sum);
    }
}

pub(crate) fn qvec_scale(v: &QVec, z: &LR) -> QVec {
    if z.is_zero() {
        return QVec::new();
    }
    v.iter().map(|(k, x)| (*k, x * z)).collect()
}

pub(crate) fn qvec_sum(a: &QVec, b: &QVec) -> QVec {
    let mut out = a.clone();
    for (k, x) in b {
        qvec_add(&mut out, *k, x);
    }
    out
}

impl QOperator {
    pub fn zero(n: usize) -> Self {
        Self { cols: alloc::vec![QVec::new(); n] }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn apply(&self, v: &QVec) -> QVec {
        let mut out = QVec::new();
        for (k, x) in v {
            for (t, y) in &self.cols[*k] {
                qvec_add(&mut out, *t, &(x * y));
            }
        }
        out
    }

    pub fn entry(&self, row: usize, col: usize) -> LR {
        self.cols[col].get(&row).cloned().unwrap_or_else(LR::zero)
    }
}

/// A basis of the null space of the dense matrix `m` (rows × ncols).
///
/// Elimination is fraction-free (Bareiss), so polynomial input keeps
/// polynomial entries of controlled degree and no gcd is taken.
pub(crate) fn null_space(m: &[Vec<LR>], ncols: usize) -> Vec<Vec<LR>> {
    let mut a: Vec<Vec<LR>> = m.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    let mut prev = LR::one();
    for col in 0..ncols {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, p);
        let piv = a[row][col].clone();
        for r in 0..a.len() {
            if r != row {
                let f = a[r][col].clone();
                for c in 0..ncols {
                    let t = &(&a[r][c] * &piv) - &(&a[row][c] * &f);
                    a[r][c] = t.div_exact(&prev).unwrap_or_else(|| t.checked_div(&prev).expect("pivot is nonzero"));
                }
            }
        }
        prev = piv;
        pivots.push(col);
        row += 1;
    }
    // every pivot ends up equal to the last one, up to the skipped columns
    let last = pivots.iter().enumerate().next_back().map(|(r, &pc)| a[r][pc].clone()).unwrap_or_else(LR::one);
    let ratio = |p: &LR| last.div_exact(p).unwrap_or_else(|| last.checked_div(p).expect("pivot is nonzero"));
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![LR::zero(); ncols];
        v[free] = last.clone();
        for (r, &pc) in pivots.iter().enumerate() {
            if !a[r][free].is_zero() {
                v[pc] = -&(&a[r][free] * &ratio(&a[r][pc]));
            }
        }
        out.push(v);
    }
    out
}

/// True when the matrix has full column rank at q = 3, which forces full
/// column rank over ℚ(q). A cheap test before [`null_space`].
pub(crate) fn injective_at_three(m: &[Vec<LR>], ncols: usize) -> bool {
    let q = BigRational::from_integer(BigInt::from(3));
    let mut a: Vec<Vec<BigRational>> = Vec::with_capacity(m.len());
    for row in m {
        let mut r = Vec::with_capacity(ncols);
        for z in row {
            match z.eval_at(&q) {
                Some(v) => r.push(v),
                None => return false,
            }
        }
        a.push(r);
    }
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else { return false };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            if !a[r][col].is_zero() {
                let f = &a[r][col] / &a[rank][col];
                for c in col..ncols {
                    let t = &a[rank][c] * &f;
                    a[r][c] -= t;
                }
            }
        }
        rank += 1;
    }
    rank == ncols
}
