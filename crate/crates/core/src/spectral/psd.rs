//! Exact positive-semidefiniteness with re-verifiable certificates.
//!
//! The decision is a rational LDLᵀ factorization with symmetric pivoting on
//! the largest remaining diagonal entry. A successful run yields the
//! factorization itself (the PSD witness); a failed pivot step yields an
//! exact vector with negative quadratic form, obtained by pushing the
//! offending reduced-space direction back through the partial factors.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{rational_from_string, rational_to_string, Rational, RationalSymMatrix};

mod ratstr {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_to_string(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        rational_from_string(&s).map_err(serde::de::Error::custom)
    }
}

mod ratvec {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(rational_to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        strs.iter()
            .map(|s| rational_from_string(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

mod ratmat {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(
            v.iter()
                .map(|row| row.iter().map(rational_to_string).collect::<Vec<_>>()),
        )
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let strs = Vec::<Vec<String>>::deserialize(d)?;
        strs.iter()
            .map(|row| {
                row.iter()
                    .map(|s| rational_from_string(s).map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

/// PSD witness: `M = P L D Lᵀ Pᵀ` with unit-lower-triangular `L` and
/// non-negative diagonal `D`. `perm[k]` is the original index at pivot
/// position `k`; `l[i]` holds the strictly-lower entries of row `i`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LdlFactorization {
    pub n: usize,
    pub perm: Vec<usize>,
    #[serde(with = "ratmat")]
    pub l: Vec<Vec<Rational>>,
    #[serde(with = "ratvec")]
    pub d: Vec<Rational>,
}

/// NOT_PSD witness: an exact vector with `x^T M x = value < 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NegativeWitness {
    #[serde(with = "ratvec")]
    pub x: Vec<Rational>,
    #[serde(with = "ratstr")]
    pub value: Rational,
}

/// Exact PSD verdict with a re-verifiable witness either way.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PsdCertificate {
    Psd { factorization: LdlFactorization },
    NotPsd { witness: NegativeWitness },
}

impl PsdCertificate {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdCertificate::Psd { .. })
    }

    /// Re-verify the certificate against the matrix it claims to describe,
    /// entirely in exact arithmetic.
    pub fn verify(&self, m: &RationalSymMatrix) -> bool {
        match self {
            PsdCertificate::Psd { factorization: f } => {
                let n = m.n();
                if f.n != n || f.perm.len() != n || f.d.len() != n || f.l.len() != n {
                    return false;
                }
                let mut seen = vec![false; n];
                for &p in &f.perm {
                    if p >= n || seen[p] {
                        return false;
                    }
                    seen[p] = true;
                }
                if f.d.iter().any(|d| d.is_negative()) {
                    return false;
                }
                if f.l.iter().enumerate().any(|(i, row)| row.len() != i) {
                    return false;
                }
                let lv = |i: usize, k: usize| -> Rational {
                    match k.cmp(&i) {
                        std::cmp::Ordering::Less => f.l[i][k].clone(),
                        std::cmp::Ordering::Equal => Rational::from_integer(1.into()),
                        std::cmp::Ordering::Greater => Rational::zero(),
                    }
                };
                for i in 0..n {
                    for j in 0..=i {
                        let mut acc = Rational::zero();
                        for k in 0..=j {
                            acc += lv(i, k) * lv(j, k) * &f.d[k];
                        }
                        if &acc != m.get(f.perm[i], f.perm[j]) {
                            return false;
                        }
                    }
                }
                true
            }
            PsdCertificate::NotPsd { witness } => {
                witness.x.len() == m.n()
                    && m.quadratic_form(&witness.x) == witness.value
                    && witness.value.is_negative()
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).unwrap()
    }
}

/// Exact PSD decision by pivoted rational LDLᵀ.
pub fn psd_exact(m: &RationalSymMatrix) -> PsdCertificate {
    let n = m.n();
    let mut perm: Vec<usize> = (0..n).collect();
    // Working matrix in position space: a[i][j] = reduced M[perm[i]][perm[j]].
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    // Row i of l accumulates one entry per completed pivot step, ending at
    // exactly i strictly-lower entries.
    let mut l: Vec<Vec<Rational>> = vec![Vec::new(); n];
    let mut d: Vec<Rational> = Vec::with_capacity(n);

    for k in 0..n {
        // Pivot: largest remaining diagonal, ties to the lowest original index.
        let mut best = k;
        for i in k + 1..n {
            let better = a[i][i] > a[best][best]
                || (a[i][i] == a[best][best] && perm[i] < perm[best]);
            if better {
                best = i;
            }
        }
        if a[best][best].is_positive() {
            if best != k {
                perm.swap(k, best);
                a.swap(k, best);
                for row in a.iter_mut() {
                    row.swap(k, best);
                }
                // Rows of l hold exactly k processed columns at this point.
                l.swap(k, best);
            }
            let pivot = a[k][k].clone();
            for i in k + 1..n {
                let lik = &a[i][k] / &pivot;
                if !lik.is_zero() {
                    for j in k + 1..=i {
                        let sub = &lik * &a[j][k];
                        a[i][j] -= &sub;
                        if i != j {
                            let v = a[i][j].clone();
                            a[j][i] = v;
                        }
                    }
                }
                l[i].push(lik);
            }
            d.push(pivot);
        } else {
            // Max diagonal <= 0. Either the tail is all zero (PSD) or we can
            // exhibit a direction with negative quadratic form.
            let reduced = |y: &[Rational]| -> Vec<Rational> {
                // Solve Lᵀ u = (0,…,0,y) downward from position k-1.
                let mut u = vec![Rational::zero(); n];
                u[k..n].clone_from_slice(&y[k..n]);
                for r in (0..k).rev() {
                    let mut acc = Rational::zero();
                    for s in r + 1..n {
                        if s < l.len() && r < l[s].len() && !u[s].is_zero() {
                            acc += &l[s][r] * &u[s];
                        }
                    }
                    u[r] = -acc;
                }
                let mut x = vec![Rational::zero(); n];
                for (pos, &orig) in perm.iter().enumerate() {
                    x[orig] = u[pos].clone();
                }
                x
            };

            // Any strictly negative diagonal: unit direction suffices.
            if let Some(j) = (k..n).find(|&j| a[j][j].is_negative()) {
                let mut y = vec![Rational::zero(); n];
                y[j] = Rational::from_integer(1.into());
                let x = reduced(&y);
                let value = m.quadratic_form(&x);
                debug_assert!(value.is_negative());
                return PsdCertificate::NotPsd {
                    witness: NegativeWitness { x, value },
                };
            }
            // All diagonals zero: a nonzero off-diagonal kills PSD-ness.
            let mut bad = None;
            'scan: for i in k..n {
                for j in i + 1..n {
                    if !a[i][j].is_zero() {
                        bad = Some((i, j));
                        break 'scan;
                    }
                }
            }
            match bad {
                Some((i, j)) => {
                    let mut y = vec![Rational::zero(); n];
                    y[i] = if a[i][j].is_positive() {
                        -Rational::from_integer(1.into())
                    } else {
                        Rational::from_integer(1.into())
                    };
                    y[j] = Rational::from_integer(1.into());
                    let x = reduced(&y);
                    let value = m.quadratic_form(&x);
                    debug_assert!(value.is_negative());
                    return PsdCertificate::NotPsd {
                        witness: NegativeWitness { x, value },
                    };
                }
                None => {
                    // Zero tail: finish with zero pivots.
                    for i in k + 1..n {
                        l[i].resize(i, Rational::zero());
                    }
                    for _ in k..n {
                        d.push(Rational::zero());
                    }
                    return PsdCertificate::Psd {
                        factorization: LdlFactorization { n, perm, l, d },
                    };
                }
            }
        }
    }
    PsdCertificate::Psd {
        factorization: LdlFactorization { n, perm, l, d },
    }
}
