//! IO companion to `chevalier-core`: JSON file formats, reference tables,
//! the acceptance verification battery, and helpers shared with the CLI
//! binary.

pub mod json;
pub mod tables;
pub mod verify;

/// Default sampling seed for the verification suites; the `CHEVALIER_SEED`
/// environment variable overrides it.
pub const DEFAULT_SEED: u64 = 2026;

/// Resolve the suite seed from the environment.
pub fn seed_from_env() -> u64 {
    std::env::var("CHEVALIER_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}
