//! Sweeps, critical-time tables and plots for the `tripartite` model.
//!
//! Every command writes a CSV whose first lines are `# key=value`
//! metadata, followed by a header row and data rows. Floats carry 17
//! significant digits so the files can serve as regression data.

use std::path::{Path, PathBuf};

pub mod critical;
pub mod figures;
pub mod plot;
pub mod sweep;

pub use critical::cmd_critical;
pub use plot::cmd_plot;
pub use sweep::{cmd_sweep, SweepSpec};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Model(#[from] tripartite::Error),
}

impl CliError {
    /// 2 for bad input, 3 for filesystem failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Model(_) => 2,
            CliError::Io { .. } => 3,
        }
    }

    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// `{:.16e}`: 17 significant digits, round-trips through `f64::from_str`.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{x:.16e}")
    }
}

pub(crate) fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| CliError::io(path, e))
}
