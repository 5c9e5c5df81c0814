use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Unvalidated input for [`CartanSatakeDatum::validate`]. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawDatum {
    pub labels: Option<Vec<String>>,
    pub gcm: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    pub tau: Vec<usize>,
    pub s: Vec<i64>,
    pub i_tau: Option<Vec<usize>>,
}

/// The value of a_{i,τ(i)}, which decides which family of rules applies at i.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitKind {
    /// τ(i) = i, a_{i,τ(i)} = 2.
    Fixed,
    /// a_{i,τ(i)} = 0.
    Orthogonal,
    /// a_{i,τ(i)} = −1.
    Adjacent,
}

impl OrbitKind {
    pub fn a(self) -> i64 {
        match self {
            OrbitKind::Fixed => 2,
            OrbitKind::Orthogonal => 0,
            OrbitKind::Adjacent => -1,
        }
    }
}

/// A validated quasi-split Satake datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanSatakeDatum {
    labels: Vec<String>,
    gcm: Vec<Vec<i64>>,
    d: Vec<i64>,
    tau: Vec<usize>,
    s: Vec<i64>,
    i_tau: Vec<usize>,
    orbit_of: Vec<usize>,
}

impl CartanSatakeDatum {
    /// Checks every invariant and returns the datum, or the first violation.
    pub fn validate(raw: RawDatum) -> Result<Self> {
        let n = raw.gcm.len();
        let bad = |m: String| Err(Error::InvalidDatum(m));
        if n == 0 {
            return bad("empty index set".into());
        }
        for (i, row) in raw.gcm.iter().enumerate() {
            if row.len() != n {
                return bad(format!("gcm row {} has length {}, expected {}", i + 1, row.len(), n));
            }
        }
        if raw.d.len() != n || raw.tau.len() != n || raw.s.len() != n {
            return bad(format!("d, tau and s must all have length {}", n));
        }
        let labels = match raw.labels {
            Some(l) if l.len() != n => return bad(format!("{} labels for rank {}", l.len(), n)),
            Some(l) => l,
            None => (1..=n).map(|i| i.to_string()).collect(),
        };
        let a = &raw.gcm;
        for i in 0..n {
            if a[i][i] != 2 {
                return bad(format!("a_{{{0},{0}}} = {1} ≠ 2", labels[i], a[i][i]));
            }
            if raw.d[i] <= 0 {
                return bad(format!("d_{} = {} is not positive", labels[i], raw.d[i]));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && a[i][j] > 0 {
                    return bad(format!("a_{{{},{}}} = {} > 0", labels[i], labels[j], a[i][j]));
                }
                if raw.d[i] * a[i][j] != raw.d[j] * a[j][i] {
                    return bad(format!("d a not symmetric at ({}, {})", labels[i], labels[j]));
                }
            }
        }
        let tau = raw.tau;
        for i in 0..n {
            if tau[i] >= n {
                return bad(format!("tau({}) out of range", labels[i]));
            }
        }
        for i in 0..n {
            if tau[tau[i]] != i {
                return bad(format!("tau is not an involution at {}", labels[i]));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if a[tau[i]][tau[j]] != a[i][j] {
                    return bad(format!("a_{{tau(i),tau(j)}} ≠ a_{{i,j}} at ({}, {})", labels[i], labels[j]));
                }
            }
        }
        for i in 0..n {
            let ait = a[i][tau[i]];
            if ![2, 0, -1].contains(&ait) {
                return bad(format!("a_{{i,tau(i)}} = {} ∉ {{2,0,-1}} at {}", ait, labels[i]));
            }
            if ait == 0 && raw.s[i] != 0 {
                return bad(format!("s_i ≠ 0 with a_{{i,tau(i)}} = 0 at {}", labels[i]));
            }
            if ait == -1 && raw.s[i] + raw.s[tau[i]] != 1 {
                return bad(format!("s_i + s_{{tau(i)}} ≠ 1 at ({}, {})", labels[i], labels[tau[i]]));
            }
        }
        let i_tau = match raw.i_tau {
            Some(reps) => {
                let mut seen = alloc::vec![false; n];
                for &r in &reps {
                    if r >= n {
                        return bad(format!("i_tau entry {} out of range", r + 1));
                    }
                    if seen[r] || seen[tau[r]] {
                        return bad(format!("i_tau has two members of the orbit of {}", labels[r]));
                    }
                    seen[r] = true;
                    seen[tau[r]] = true;
                }
                if let Some(i) = (0..n).find(|&i| !seen[i]) {
                    return bad(format!("i_tau misses the orbit of {}", labels[i]));
                }
                let mut reps = reps;
                reps.sort_unstable();
                reps
            }
            None => (0..n).filter(|&i| i <= tau[i]).collect(),
        };
        let mut orbit_of = alloc::vec![0; n];
        for (k, &r) in i_tau.iter().enumerate() {
            orbit_of[r] = k;
            orbit_of[tau[r]] = k;
        }
        Ok(Self { labels, gcm: raw.gcm, d: raw.d, tau, s: raw.s, i_tau, orbit_of })
    }

    pub fn to_raw(&self) -> RawDatum {
        RawDatum {
            labels: Some(self.labels.clone()),
            gcm: self.gcm.clone(),
            d: self.d.clone(),
            tau: self.tau.clone(),
            s: self.s.clone(),
            i_tau: Some(self.i_tau.clone()),
        }
    }

    /// Type A1 with parameter s.
    pub fn a1(s: i64) -> Self {
        Self::validate(RawDatum {
            labels: None,
            gcm: alloc::vec![alloc::vec![2]],
            d: alloc::vec![1],
            tau: alloc::vec![0],
            s: alloc::vec![s],
            i_tau: None,
        })
        .expect("A1 is valid")
    }

    /// A1 × A1 with the swap, the diagonal type.
    pub fn a1xa1() -> Self {
        Self::validate(RawDatum {
            labels: None,
            gcm: alloc::vec![alloc::vec![2, 0], alloc::vec![0, 2]],
            d: alloc::vec![1, 1],
            tau: alloc::vec![1, 0],
            s: alloc::vec![0, 0],
            i_tau: None,
        })
        .expect("A1xA1 is valid")
    }

    /// A2 with the diagram flip and s = (s1, 1 − s1).
    pub fn a2_flip(s1: i64) -> Self {
        Self::validate(RawDatum {
            labels: None,
            gcm: alloc::vec![alloc::vec![2, -1], alloc::vec![-1, 2]],
            d: alloc::vec![1, 1],
            tau: alloc::vec![1, 0],
            s: alloc::vec![s1, 1 - s1],
            i_tau: None,
        })
        .expect("A2 flip is valid")
    }

    pub fn rank(&self) -> usize {
        self.gcm.len()
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.gcm[i][j]
    }

    pub fn gcm(&self) -> &[Vec<i64>] {
        &self.gcm
    }

    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    pub fn tau(&self, i: usize) -> usize {
        self.tau[i]
    }

    pub fn s(&self, i: usize) -> i64 {
        self.s[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Chosen orbit representatives, sorted.
    pub fn i_tau(&self) -> &[usize] {
        &self.i_tau
    }

    pub fn in_i_tau(&self, i: usize) -> bool {
        self.i_tau[self.orbit_of[i]] == i
    }

    /// Position of the τ-orbit of i inside `i_tau`.
    pub fn orbit(&self, i: usize) -> usize {
        self.orbit_of[i]
    }

    pub fn kind(&self, i: usize) -> OrbitKind {
        match self.gcm[i][self.tau[i]] {
            2 => OrbitKind::Fixed,
            0 => OrbitKind::Orthogonal,
            _ => OrbitKind::Adjacent,
        }
    }

    /// Largest |a_{i,j}| with i ≠ j, or 0 in rank one.
    pub fn a_max(&self) -> i64 {
        let n = self.rank();
        let mut m = 0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    m = m.max(self.gcm[i][j].abs());
                }
            }
        }
        m
    }
}
