use super::LaurentRational as LR;
use crate::error::{Error, Result};

/// [n] = (qⁿ − q⁻ⁿ)/(q − q⁻¹), in the variable q = q_i.
pub fn qint(n: i64) -> LR {
    let m = n.abs();
    let terms: alloc::vec::Vec<(i64, i64)> = (0..m).map(|k| (m - 1 - 2 * k, n.signum())).collect();
    LR::laurent(&terms)
}

/// [n]! for n ≥ 0.
pub fn qfact(n: u32) -> LR {
    (1..=n as i64).fold(LR::one(), |acc, k| &acc * &qint(k))
}

/// The q-binomial [m choose k]; zero unless 0 ≤ k ≤ m.
pub fn qbinom(m: i64, k: i64) -> LR {
    if k < 0 || m < 0 || k > m {
        return LR::zero();
    }
    // product form, which stays a Laurent polynomial
    let mut acc = LR::one();
    for j in 0..k {
        acc = &acc * &qint(m - j);
    }
    acc.checked_div(&qfact(k as u32)).expect("[k]! ≠ 0")
}

/// {a} = q^a + q^{−a}.
pub fn brace(a: i64) -> LR {
    &LR::q_pow(a) + &LR::q_pow(-a)
}

/// [k_i; a] on the k_i-eigenvalue q^m, which is [m + a].
pub fn bracket_k(m: i64, a: i64) -> LR {
    qint(m + a)
}

/// {k_i; a} on the k_i-eigenvalue q^m, which is {m + a}.
pub fn brace_k(m: i64, a: i64) -> LR {
    brace(m + a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QSymbol {
    QInt(i64),
    QFact(u32),
    QBinom(i64, i64),
    Brace(i64),
    /// [k_i; a] evaluated at k_i = q^m.
    BracketK { m: i64, a: i64 },
}

pub fn q_symbols(s: QSymbol) -> LR {
    match s {
        QSymbol::QInt(n) => qint(n),
        QSymbol::QFact(n) => qfact(n),
        QSymbol::QBinom(m, k) => qbinom(m, k),
        QSymbol::Brace(a) => brace(a),
        QSymbol::BracketK { m, a } => bracket_k(m, a),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn q_arith(x: &LR, y: &LR, op: QOp) -> Result<LR> {
    match op {
        QOp::Add => Ok(x + y),
        QOp::Sub => Ok(x - y),
        QOp::Mul => Ok(x * y),
        QOp::Div => {
            if y.is_zero() {
                return Err(Error::DivisionByZero);
            }
            x.checked_div(y)
        }
    }
}
