//! Floating symmetric eigensolver: Householder tridiagonalization followed
//! by implicit-shift QL, in the classic EISPACK/Jama arrangement, without
//! eigenvector accumulation. Accuracy on adjacency matrices (norm <= 3,
//! n <= a few hundred) is far inside the 1e-9 contract.

use crate::{Error, Graph};

/// Non-increasing list of real eigenvalues.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Spectrum { values }
    }

    /// Eigenvalues, largest first.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> f64 {
        self.values[0]
    }

    pub fn min(&self) -> f64 {
        *self.values.last().unwrap()
    }

    /// Cluster eigenvalues within `tol` and return one representative per
    /// cluster (the cluster mean), largest first.
    pub fn distinct(&self, tol: f64) -> Vec<f64> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.values.len() {
            let mut j = i + 1;
            while j < self.values.len() && (self.values[j - 1] - self.values[j]).abs() <= tol {
                j += 1;
            }
            let mean = self.values[i..j].iter().sum::<f64>() / (j - i) as f64;
            out.push(mean);
            i = j;
        }
        out
    }

    /// Values strictly inside the open interval, with a guard band of `tol`
    /// at both ends.
    pub fn inside_open_interval(&self, lo: f64, hi: f64, tol: f64) -> Vec<f64> {
        self.values
            .iter()
            .copied()
            .filter(|&v| v > lo + tol && v < hi - tol)
            .collect()
    }

    /// CSV rendering: `index,eigenvalue` rows, largest first.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,eigenvalue\n");
        for (i, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{i},{v:.12}\n"));
        }
        out
    }
}

/// Householder reduction of a symmetric matrix to tridiagonal form,
/// returning (diagonal, subdiagonal). Destroys `a`.
fn tridiagonalize(a: &mut [Vec<f64>]) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if i > 1 {
            let scale: f64 = (0..=l).map(|k| a[i][k].abs()).sum();
            if scale == 0.0 {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                let f = a[i][l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                let mut f_acc = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[j][k] * a[i][k];
                    }
                    for k in j + 1..=l {
                        g += a[k][j] * a[i][k];
                    }
                    e[j] = g / h;
                    f_acc += e[j] * a[i][j];
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] -= f * e[k] + g * a[i][k];
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    for i in 0..n {
        d[i] = a[i][i];
    }
    e[0] = 0.0;
    (d, e)
}

/// Implicit-shift QL on a symmetric tridiagonal matrix; eigenvalues land in
/// `d`, unsorted.
fn ql_implicit(d: &mut [f64], e: &mut [f64]) -> Result<(), Error> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 100 {
                return Err(Error::EigenConvergence);
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            let sign_r = if g >= 0.0 { r } else { -r };
            g = d[m] - d[l] + e[l] / (g + sign_r);
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                f = (d[i] - g) * s + 2.0 * c * b;
                p = s * f;
                d[i + 1] = g + p;
                g = c * f - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Eigenvalues of a dense symmetric matrix, largest first.
pub fn symmetric_eigenvalues(matrix: &[Vec<f64>]) -> Result<Spectrum, Error> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let (mut d, mut e) = tridiagonalize(&mut a);
    ql_implicit(&mut d, &mut e)?;
    Ok(Spectrum::from_values(d))
}

/// Adjacency eigenvalues of a graph, largest first, accurate to 1e-9.
pub fn eigenvalues(g: &Graph) -> Result<Spectrum, Error> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let a: Vec<Vec<f64>> = g
        .adjacency_matrix()
        .into_iter()
        .map(|row| row.into_iter().map(|x| x as f64).collect())
        .collect();
    symmetric_eigenvalues(&a)
}

/// Smallest adjacency eigenvalue.
pub fn min_eigenvalue(g: &Graph) -> Result<f64, Error> {
    Ok(eigenvalues(g)?.min())
}

/// Cauchy interlacing: with eigenvalues in non-increasing order and `t`
/// vertices deleted, checks `lam_g[i] >= lam_h[i] >= lam_g[i + t]` for all
/// valid `i`, within 1e-8.
pub fn interlacing_check(g: &Graph, deleted: &[usize]) -> Result<bool, Error> {
    const TOL: f64 = 1e-8;
    let h = g.delete_vertices(deleted)?;
    if h.n() == 0 {
        return Ok(true);
    }
    let lam_g = eigenvalues(g)?;
    let lam_h = eigenvalues(&h)?;
    let t = g.n() - h.n();
    let ok = (0..h.n()).all(|i| {
        lam_g.values()[i] + TOL >= lam_h.values()[i]
            && lam_h.values()[i] + TOL >= lam_g.values()[i + t]
    });
    Ok(ok)
}
