use minkruled_core::GeometryError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("geometry error: {0}")]
    Geometry(#[from] GeometryError),
    #[error("sampling failed at grid index ({i}, {j}), s = {s}: {source}")]
    Sampling { i: usize, j: usize, s: f64, source: GeometryError },
    #[error("I/O error: {0}")]
    Io(String),
}

impl CliError {
    pub fn config(field: &str, msg: impl std::fmt::Display) -> Self {
        CliError::Config(format!("{field}: {msg}"))
    }
}
