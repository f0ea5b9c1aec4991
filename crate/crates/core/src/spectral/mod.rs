//! Spectral computations, exact and floating.
//!
//! The open-interval gap decision is made in exact rational arithmetic
//! (an LDLᵀ certificate for `A² - I ⪰ 0`); the floating eigensolver backs
//! spectra displays, closed-form cross-checks and interlacing tests.

pub mod eigen;
pub mod gap;
pub mod psd;
pub mod rational;

pub use eigen::{eigenvalues, interlacing_check, min_eigenvalue, Spectrum};
pub use gap::{
    associated_matrix, gap_avoids_unit_interval, gm_spectrum_closed_form, verify_ks_gm_relation,
};
pub use psd::{psd_exact, LdlFactorization, NegativeWitness, PsdCertificate};
pub use rational::{rational_from_string, rational_to_string, Rational, RationalSymMatrix};
