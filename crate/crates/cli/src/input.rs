use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::ValueEnum;
use fano_core::embed::classical_rotation;
use fano_core::kirkman15::sts15_61;
use fano_core::orient::{orient, qr_orientation, OrientedFano};
use fano_core::steiner::{cyclic_sts, triple};
use fano_core::{Orientation, RotationSystem, TripleSystem};
use serde::de::DeserializeOwned;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}:{column}: malformed JSON: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}:{line}:{column}: invalid {what}: {message}")]
    Invalid {
        path: PathBuf,
        what: &'static str,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Logic(String),
}

impl CliError {
    /// 1 for well-formed input that violates an invariant, 2 for I/O, syntax
    /// and usage problems.
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Invalid { .. } | CliError::Logic(_) => ExitCode::from(1),
            _ => ExitCode::from(2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    B1,
    B2,
    Sts61,
    ClassicalRotation,
    QrOrientation,
}

impl Builtin {
    fn name(self) -> String {
        self.to_possible_value().map_or_else(|| "?".into(), |v| v.get_name().to_string())
    }
}

pub fn b1() -> TripleSystem {
    cyclic_sts(7, &[triple(0, 1, 3)]).expect("013 generates a Fano plane")
}

pub fn b2() -> TripleSystem {
    cyclic_sts(7, &[triple(0, 1, 5)]).expect("015 generates a Fano plane")
}

fn read_json<T: DeserializeOwned>(path: &Path, what: &'static str) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| {
        let (line, column) = (e.line(), e.column());
        let message = strip_position(&e.to_string());
        match e.classify() {
            serde_json::error::Category::Data => CliError::Invalid {
                path: path.to_path_buf(),
                what,
                line,
                column,
                message,
            },
            _ => CliError::Parse {
                path: path.to_path_buf(),
                line,
                column,
                message,
            },
        }
    })
}

/// serde_json appends " at line L column C"; the CLI prints it as a prefix.
fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}

pub fn design(file: Option<&Path>, builtin: Option<Builtin>) -> Result<TripleSystem, CliError> {
    match (file, builtin) {
        (Some(path), _) => read_json(path, "design"),
        (None, Some(Builtin::B1)) => Ok(b1()),
        (None, Some(Builtin::B2)) => Ok(b2()),
        (None, Some(Builtin::Sts61)) => Ok(sts15_61()),
        (None, Some(Builtin::QrOrientation)) => Ok(qr_orientation().plane().clone()),
        (None, Some(other)) => Err(CliError::Usage(format!("builtin {} is not a design", other.name()))),
        (None, None) => Err(CliError::Usage("give --design FILE or --builtin NAME".into())),
    }
}

pub fn rotation(file: Option<&Path>, builtin: Option<Builtin>) -> Result<RotationSystem, CliError> {
    match (file, builtin) {
        (Some(path), _) => read_json(path, "rotation"),
        (None, Some(Builtin::ClassicalRotation) | None) => Ok(classical_rotation()),
        (None, Some(other)) => Err(CliError::Usage(format!("builtin {} is not a rotation", other.name()))),
    }
}

/// An orientation file is read against `plane` (B1 unless a design is given).
pub fn oriented(file: &Path, plane: TripleSystem) -> Result<OrientedFano, CliError> {
    let o: Orientation = read_json(file, "orientation")?;
    orient(&plane, o).map_err(|e| CliError::Logic(format!("{}: {e}", file.display())))
}
