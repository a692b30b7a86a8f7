//! Command-line front end for the eqschub engine: root-system listings,
//! single restriction and product queries, and cached positivity sweeps.

pub mod error;
pub mod render;
pub mod sweep;
pub mod system;

pub use error::CliError;
pub use sweep::{run_sweep, SweepConfig, SweepFailure, SweepReport};
pub use system::{load_system, KindArg};
