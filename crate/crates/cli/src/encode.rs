//! Numeric series to up/down strings.

use crate::error::CliError;

/// `"1"` where the next value is strictly greater, `"0"` otherwise.
pub fn encode_updown(series: &[f64]) -> Result<String, CliError> {
    if series.len() < 2 {
        return Err(CliError::Data(format!(
            "need at least 2 values to encode, got {}",
            series.len()
        )));
    }
    if let Some(i) = series.iter().position(|x| !x.is_finite()) {
        return Err(CliError::Data(format!(
            "value {} on row {} is not finite",
            series[i],
            i + 1
        )));
    }
    Ok(series
        .windows(2)
        .map(|w| if w[1] > w[0] { '1' } else { '0' })
        .collect())
}

/// Parses a single-column CSV. A first line that is not a number is taken
/// as a header; blank lines are ignored.
pub fn parse_series(text: &str) -> Result<Vec<f64>, CliError> {
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let field = line.trim();
        if field.is_empty() {
            continue;
        }
        if field.contains(',') {
            return Err(CliError::Data(format!(
                "line {}: expected a single column, got {field:?}",
                i + 1
            )));
        }
        match field.parse::<f64>() {
            Ok(v) => values.push(v),
            Err(_) if i == 0 => {}
            Err(_) => {
                return Err(CliError::Data(format!(
                    "line {}: {field:?} is not a number",
                    i + 1
                )))
            }
        }
    }
    Ok(values)
}
