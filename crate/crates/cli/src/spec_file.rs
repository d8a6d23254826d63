//! Plain-text file formats: the key=value code-spec file and
//! one-word-per-line symbol files. Field elements are written as their
//! base-p integer encodings.

use std::fs;
use std::path::Path;

use qbch_core::field::FieldDescriptor;
use qbch_core::matrix::MatRingElem;
use qbch_core::qbch::{BlockWord, QuasiBchSpec};

use crate::CliError;

/// Serializes a spec: parameters, the `F_{q^s}` field block, and the root
/// matrix entries row-major.
pub fn write_spec(spec: &QuasiBchSpec, path: &Path) -> Result<(), CliError> {
    let modulus = spec
        .field()
        .modulus()
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let gamma = spec
        .gamma()
        .to_ints()
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let text = format!(
        "q={}\ns={}\nl={}\nm={}\ndelta={}\np={}\nd={}\nmodulus={}\ngamma={}\n",
        spec.q(),
        spec.s(),
        spec.ell(),
        spec.m(),
        spec.delta(),
        spec.q(),
        spec.s(),
        modulus,
        gamma,
    );
    fs::write(path, text)
        .map_err(|e| CliError::param(format!("cannot write {}: {e}", path.display())))
}

fn parse_u64(map: &[(String, String)], key: &str) -> Result<u64, CliError> {
    let raw = map
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v)
        .ok_or_else(|| CliError::param(format!("spec file is missing `{key}`")))?;
    raw.parse()
        .map_err(|_| CliError::param(format!("invalid value for `{key}`: {raw}")))
}

fn parse_list(map: &[(String, String)], key: &str) -> Result<Vec<u64>, CliError> {
    let raw = map
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v)
        .ok_or_else(|| CliError::param(format!("spec file is missing `{key}`")))?;
    raw.split(',')
        .map(|tok| {
            tok.trim()
                .parse()
                .map_err(|_| CliError::param(format!("invalid entry in `{key}`: {tok}")))
        })
        .collect()
}

/// Parses and fully validates a code-spec file.
pub fn read_spec(path: &Path) -> Result<QuasiBchSpec, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::param(format!("cannot read {}: {e}", path.display())))?;
    let mut map = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(CliError::param(format!(
                "{}:{}: expected key=value",
                path.display(),
                idx + 1
            )));
        };
        map.push((k.trim().to_string(), v.trim().to_string()));
    }
    let q = parse_u64(&map, "q")?;
    let s = parse_u64(&map, "s")? as usize;
    let l = parse_u64(&map, "l")? as usize;
    let m = parse_u64(&map, "m")? as usize;
    let delta = parse_u64(&map, "delta")? as usize;
    let p = parse_u64(&map, "p")?;
    let d = parse_u64(&map, "d")? as usize;
    if p != q || d != s {
        return Err(CliError::param(
            "field block must describe F_{q^s}: expected p=q and d=s".to_string(),
        ));
    }
    let modulus = parse_list(&map, "modulus")?;
    let field = FieldDescriptor::new(p, d, modulus)
        .map_err(|e| CliError::param(format!("invalid field block: {e}")))?;
    let gamma_ints = parse_list(&map, "gamma")?;
    let gamma = MatRingElem::from_ints(&field, l, &gamma_ints)
        .map_err(|e| CliError::param(format!("invalid gamma: {e}")))?;
    QuasiBchSpec::build(q, s, l, m, delta, Some(gamma))
        .map_err(|e| CliError::param(format!("invalid code spec: {e}")))
}

/// Reads a symbol file: one word per line, whitespace-separated integers,
/// `width` symbols per line.
pub fn read_words(path: &Path, width: usize) -> Result<Vec<Vec<u64>>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::param(format!("cannot read {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let symbols = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u64>().map_err(|_| {
                    CliError::param(format!(
                        "{}:{}: invalid symbol `{tok}`",
                        path.display(),
                        idx + 1
                    ))
                })
            })
            .collect::<Result<Vec<u64>, CliError>>()?;
        if symbols.len() != width {
            return Err(CliError::param(format!(
                "{}:{}: expected {} symbols, found {}",
                path.display(),
                idx + 1,
                width,
                symbols.len()
            )));
        }
        out.push(symbols);
    }
    Ok(out)
}

pub fn format_word(symbols: &[u64]) -> String {
    symbols
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn word_to_line(word: &BlockWord) -> String {
    format_word(word.symbols())
}
