//! Builtin graph properties, bound verification sweeps and report types
//! behind the `property-lab` command.

pub mod analyze;
pub mod builtins;
pub mod commands;
pub mod error;
pub mod input;
pub mod verify;

pub use analyze::{analyze, AnalysisReport};
pub use builtins::{builtin, registry, BuiltinProperty};
pub use commands::{classes, monotone_check, witness, ClassListing, MonotoneReport, WitnessOutput};
pub use error::{LabError, Result};
pub use input::{load, parse_bytes, LoadedProperty};
pub use verify::{verify, Mode, VerificationReport, VerifyConfig};

/// Version of every JSON report layout.
pub const SCHEMA: u32 = 1;
