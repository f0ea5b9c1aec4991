//! Exact symmetric matrices over arbitrary-precision rationals.

use num_bigint::BigInt;
use num_traits::Zero;

pub type Rational = num_rational::BigRational;

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p/q` rendering used by every JSON artifact.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_from_string(s: &str) -> Result<Rational, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
    let d: BigInt = den.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
    if d.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(Rational::new(n, d))
}

/// Dense symmetric matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSymMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RationalSymMatrix {
    pub fn zeros(n: usize) -> Self {
        RationalSymMatrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    /// Build from integer rows; panics if the rows are not square and
    /// symmetric (construction sites always produce symmetric data).
    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut m = RationalSymMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "row {i} has wrong length");
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, rows[j][i], "matrix not symmetric at ({i},{j})");
                m.entries[i * n + j] = rat(v);
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set_sym(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v.clone();
        self.entries[j * self.n + i] = v;
    }

    /// Quadratic form `x^T M x`, exactly.
    pub fn quadratic_form(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.n);
        let mut acc = Rational::zero();
        for i in 0..self.n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                if !x[j].is_zero() {
                    acc += &x[i] * &x[j] * self.get(i, j);
                }
            }
        }
        acc
    }

    /// Determinant by rational Gaussian elimination.
    pub fn determinant(&self) -> Rational {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = Rational::from_integer(BigInt::from(1));
        for k in 0..n {
            // Find a pivot row.
            let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
                return Rational::zero();
            };
            if p != k {
                for c in 0..n {
                    a.swap(k * n + c, p * n + c);
                }
                det = -det;
            }
            let pivot = a[k * n + k].clone();
            det *= &pivot;
            for r in k + 1..n {
                let factor = &a[r * n + k] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for c in k..n {
                    let sub = &factor * &a[k * n + c];
                    a[r * n + c] -= sub;
                }
            }
        }
        det
    }

    /// Human-readable rows for CLI display.
    pub fn display_rows(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let r = self.get(i, j);
                        if r.is_integer() {
                            r.numer().to_string()
                        } else {
                            rational_to_string(r)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn rows_as_strings(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| rational_to_string(self.get(i, j))).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_of_small_matrices() {
        let m = RationalSymMatrix::from_integer_rows(&[vec![2, 2], vec![2, 1]]);
        assert_eq!(m.determinant(), rat(-2));
        let id = RationalSymMatrix::from_integer_rows(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(id.determinant(), rat(1));
    }

    #[test]
    fn quadratic_form_matches_hand_computation() {
        let m = RationalSymMatrix::from_integer_rows(&[vec![1, 2], vec![2, 2]]);
        let x = vec![rat(2), rat(-1)];
        // 4*1 + 2*2*(-1)*2 + 1*2 = -2
        assert_eq!(m.quadratic_form(&x), rat(-2));
    }

    #[test]
    fn string_roundtrip() {
        for s in ["3/4", "-7/2", "5", "0/9"] {
            let r = rational_from_string(s).unwrap();
            let back = rational_from_string(&rational_to_string(&r)).unwrap();
            assert_eq!(r, back);
        }
        assert!(rational_from_string("1/0").is_err());
        assert!(rational_from_string("x").is_err());
    }
}
