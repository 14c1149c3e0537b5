//! Gram points, critical-line zeros of the Riemann zeta function, and the
//! sequence/window statistics built on top of them.
//!
//! The crate is organised as a pipeline:
//!
//! * [`special`] — the Riemann-Siegel theta function, its derivatives, and
//!   the real function `Z(t)` whose sign changes locate critical-line zeros;
//! * [`gram`] — Gram points `t_n` solving `theta(t_n) = pi*(n-1)` and Gram
//!   intervals `G_n = (t_{n-1}, t_n]`;
//! * [`zeros`] — verified, contiguous tables of zero ordinates with count
//!   certification, ingestion and on-disk caching;
//! * [`sequences`] — per-index derived quantities (`delta_n`, `delta(n)`,
//!   `q_n`, `e_n`, `S` at Gram points and at ordinates, multiplicities);
//! * [`stats`] — window counts, moments with predicted main terms, empirical
//!   CDFs against the Gaussian, extremes and multiplicity statistics.
//!
//! Indexing convention: throughout the crate `t_n` is the Gram point with
//! `theta(t_n) = pi*(n-1)`, so the classical Gram point `g_m` equals
//! `t_{m+1}`. With this convention `N(t_n) = n` exactly when `S(t_n) = 0`,
//! and the first zero `gamma_1 = 14.1347...` lies in `G_1 = (9.6669, 17.8456]`.

pub mod gram;
mod rs_coeffs;
pub mod sequences;
pub mod special;
pub mod stats;
pub mod zeros;

/// Version tag for on-disk caches; bump when the numeric kernel changes in a
/// way that affects computed ordinates.
pub const KERNEL_VERSION: u32 = 1;

/// Library-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{quantity} = {value} below admissible minimum {min}")]
    Domain {
        quantity: &'static str,
        value: f64,
        min: f64,
    },
    #[error("no convergence for {what} after {iterations} iterations (last value {last})")]
    Convergence {
        what: &'static str,
        iterations: u32,
        last: f64,
    },
    #[error(
        "unresolved block ({t_lo}, {t_hi}]: expected {expected} sign changes, found {found} \
         after subdivision to {panels} panels"
    )]
    UnresolvedBlock {
        t_lo: f64,
        t_hi: f64,
        expected: u64,
        found: u64,
        panels: u64,
    },
    #[error("count certification failed at t = {t}: table has {table_count}, scan forces {forced}")]
    Certification {
        t: f64,
        table_count: u64,
        forced: u64,
    },
    #[error("index {index} not covered by the zero table")]
    TableGap { index: u64 },
    #[error("height {t} not covered by the zero table")]
    RangeGap { t: f64 },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("non-monotone ordinate at line {line}")]
    NonMonotone { line: usize },
    #[error("empty input: no ordinates found")]
    EmptyInput,
    #[error("checksum mismatch: expected {expected}, computed {computed}")]
    Checksum { expected: String, computed: String },
    #[error("unsupported table format version: {found}")]
    VersionMismatch { found: String },
    #[error("window ({start}, {end}] not covered by certified data")]
    WindowUncovered { start: u64, end: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
