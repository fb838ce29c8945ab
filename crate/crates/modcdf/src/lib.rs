//! Modulation format classification from the amplitude distribution of
//! received symbols.
//!
//! A coherent receiver that supports several QAM formats has to learn which
//! one the transmitter is using before it can run format-dependent DSP. This
//! crate implements an amplitude-based classifier for that stage: it compares
//! the empirical CDF of the received signal's mean-normalized amplitude
//! against reference CDFs emulated for each candidate format at the known
//! OSNR, and picks the candidate with the smallest average CDF distance.
//! Because the feature is the amplitude alone, the decision is unaffected by
//! frequency offset and laser phase noise, so classification can run before
//! carrier recovery.
//!
//! The crate provides:
//!
//! - the five candidate alphabets (4/8/16/32/64-QAM) at unit average power
//!   ([`constellation`]),
//! - an AWGN channel with rotation impairments for synthesizing received
//!   blocks at a target OSNR ([`channel`]),
//! - amplitude-CDF feature extraction and reference CDFs, both Monte Carlo
//!   and analytic Rician-mixture ([`feature`], [`rician`]),
//! - the minimum-average-distance decision rule ([`classifier`]),
//! - a seeded Monte Carlo experiment harness and the `modcdf` CLI
//!   ([`harness`], [`io`]).
//!
//! # Quick start
//!
//! ```
//! use modcdf::channel::{simulate_block, ChannelConfig};
//! use modcdf::classifier::{build_reference_bank, classify, BankConfig};
//! use modcdf::constellation::ModulationFormat;
//! use modcdf::feature::AmplitudeGrid;
//!
//! // Synthesize 2000 received 16-QAM symbols at 18 dB OSNR, 32 GBd.
//! let config = ChannelConfig {
//!     osnr_db: 18.0,
//!     seed: 7,
//!     ..ChannelConfig::default()
//! };
//! let block = simulate_block(ModulationFormat::Qam16, 2000, &config).unwrap();
//!
//! // Classify against references emulated at the same (known) OSNR.
//! let bank_cfg = BankConfig {
//!     osnr_db: 18.0,
//!     ..BankConfig::default()
//! };
//! let bank = build_reference_bank(&bank_cfg, &AmplitudeGrid::default()).unwrap();
//! let result = classify(&block, &bank).unwrap();
//! assert_eq!(result.decision, ModulationFormat::Qam16);
//! ```

pub mod channel;
pub mod classifier;
pub mod constellation;
pub mod feature;
pub mod harness;
pub mod io;
pub mod rician;

#[cfg(doctest)]
mod book;

/// Crate version, recorded in experiment output for provenance.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Errors produced by this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter is outside its documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// Input data admits no meaningful feature (for example an all-zero block).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    /// Two CDFs sampled on different grids were compared.
    #[error("CDF grids differ; distances require a shared amplitude grid")]
    GridMismatch,
    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    /// A sample-block file does not conform to its format.
    #[error("{path}:{line}: {message}")]
    FileFormat {
        path: String,
        line: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
