//! Verification campaigns, reference data checks and sweep output.

mod campaigns;
mod config;
mod report;
mod sweep;

pub use campaigns::{
    oeis_check, verify_theorem, ReferenceSequence, TheoremId, A321195_PREFIX, ANOMALY_MINIMUM,
    ANOMALY_N, ANOMALY_WITNESS,
};
pub use config::Config;
pub use report::{CaseRecord, Summary, VerificationReport};
pub use sweep::{emit_sweep, sweep, write_sweep_csv, Sweep, SweepRow};
