//! Argument readers. Structured arguments accept the text grammar, inline
//! JSON (anything starting with `{`), or `@path` to read either from a file.

use std::fs;

use fliess_core::{parse_pair, parse_series, Coeff, Error, PiecewiseConstantSignal, Series, SeriesPair};

use crate::CliError;

fn load(arg: &str) -> Result<String, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| CliError::io(path, e)),
        None => Ok(arg.trim().to_string()),
    }
}

fn json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(CliError::json)
}

fn same_trunc(found: usize, trunc: usize) -> Result<(), CliError> {
    if found != trunc {
        return Err(Error::TruncationMismatch { left: found, right: trunc }.into());
    }
    Ok(())
}

pub fn series(arg: &str, trunc: usize) -> Result<Series, CliError> {
    let text = load(arg)?;
    if text.starts_with('{') {
        let s: Series = json(&text)?;
        same_trunc(s.trunc(), trunc)?;
        return Ok(s);
    }
    Ok(parse_series(&text, trunc)?)
}

pub fn pair(arg: &str, trunc: usize) -> Result<SeriesPair, CliError> {
    let text = load(arg)?;
    if text.starts_with('{') {
        let p: SeriesPair = json(&text)?;
        same_trunc(p.trunc(), trunc)?;
        return Ok(p);
    }
    Ok(parse_pair(&text, trunc)?)
}

pub fn signal(arg: &str) -> Result<PiecewiseConstantSignal, CliError> {
    json(&load(arg)?)
}

pub fn rational(arg: &str) -> Result<Coeff, CliError> {
    Ok(fliess_core::coeff::parse(arg)?)
}
