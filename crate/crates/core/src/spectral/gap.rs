//! The exact gap decision `A² - I ⪰ 0`, associated matrices of rooted
//! multigraphs, and the closed-form spectra backing the KS/GM cross-checks.

use super::eigen::{eigenvalues, Spectrum};
use super::psd::{psd_exact, PsdCertificate};
use super::rational::RationalSymMatrix;
use crate::multigraph::RootedMultigraph;
use crate::{Error, Graph};

/// Associated matrix of a rooted multigraph: `A + 2I`, with the diagonal
/// entry of every root lowered from 2 to 1. Off-diagonal entries are edge
/// multiplicities.
pub fn associated_matrix(gr: &RootedMultigraph) -> RationalSymMatrix {
    let n = gr.base().n();
    let mut rows = vec![vec![0i64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = if i == j {
                if gr.is_root(i) {
                    1
                } else {
                    2
                }
            } else {
                gr.base().multiplicity(i, j) as i64
            };
        }
    }
    RationalSymMatrix::from_integer_rows(&rows)
}

/// `A² - I` over the integers.
pub fn walk_matrix_minus_identity(g: &Graph) -> RationalSymMatrix {
    let a = g.adjacency_matrix();
    let n = g.n();
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            rows[i][j] = (0..n).map(|k| a[i][k] * a[k][j]).sum::<i64>() - i64::from(i == j);
        }
    }
    RationalSymMatrix::from_integer_rows(&rows)
}

/// Exactly decide whether the spectrum avoids the open interval `(-1, 1)`:
/// true iff `A² - I` is positive semidefinite. Eigenvalues of ±1 are
/// allowed. The certificate re-verifies against `A² - I`.
pub fn gap_avoids_unit_interval(g: &Graph) -> (bool, PsdCertificate) {
    let m = walk_matrix_minus_identity(g);
    let cert = psd_exact(&m);
    (cert.is_psd(), cert)
}

/// Closed-form GM spectrum: ±1 with multiplicity `n` together with
/// ±sqrt(5 + 4 cos(2 pi i / n)) for `0 <= i < n`.
pub fn gm_spectrum_closed_form(n: usize) -> Result<Spectrum, Error> {
    if n < 1 {
        return Err(Error::ParameterRange {
            name: "n",
            value: n as i64,
            allowed: "n >= 1",
        });
    }
    let mut values = Vec::with_capacity(4 * n);
    for _ in 0..n {
        values.push(1.0);
        values.push(-1.0);
    }
    for i in 0..n {
        let r = (5.0 + 4.0 * (2.0 * std::f64::consts::PI * i as f64 / n as f64).cos()).sqrt();
        values.push(r);
        values.push(-r);
    }
    Ok(Spectrum::from_values(values))
}

fn sets_equal_within(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.iter().all(|x| b.iter().any(|y| (x - y).abs() <= tol))
        && b.iter().all(|y| a.iter().any(|x| (x - y).abs() <= tol))
}

/// Check that the distinct eigenvalues of `gm(2n)` equal the distinct
/// eigenvalues of `ks(n)` together with -3, clustering at `tol`.
pub fn verify_ks_gm_relation(n: usize, tol: f64) -> Result<bool, Error> {
    let gm_vals = eigenvalues(&crate::families::gm(2 * n)?)?.distinct(tol);
    let mut ks_vals = eigenvalues(&crate::families::ks(n)?)?.distinct(tol);
    if !ks_vals.iter().any(|v| (v + 3.0).abs() <= tol) {
        ks_vals.push(-3.0);
    }
    Ok(sets_equal_within(&gm_vals, &ks_vals, tol))
}
