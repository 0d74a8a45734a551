//! Model and string files.

use std::fs;
use std::path::Path;

use chisq_mine::Model;

use crate::error::CliError;

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

/// Reads a string file, dropping one trailing newline.
pub fn read_string_file(path: &Path) -> Result<String, CliError> {
    let mut text = read_text(path)?;
    if text.ends_with('\n') {
        text.pop();
        if text.ends_with('\r') {
            text.pop();
        }
    }
    Ok(text)
}

pub fn read_model_file(path: &Path) -> Result<Model, CliError> {
    read_text(path)?
        .parse()
        .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

/// `--model FILE`, or `--model empirical` to estimate frequencies from `text`.
pub fn resolve_model(arg: &str, text: &str) -> Result<Model, CliError> {
    if arg == "empirical" {
        Ok(Model::empirical(text)?)
    } else {
        read_model_file(Path::new(arg))
    }
}
