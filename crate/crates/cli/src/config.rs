//! Flat `key = value` configuration files merged beneath command-line flags.

use std::fs;
use std::path::Path;

use crate::error::CliError;

/// Parses `key = value` lines. Blank lines and lines starting with `#` are
/// ignored; keys are flag names without the leading dashes.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>, CliError> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| CliError::Usage {
            flag: "--config".into(),
            msg: format!("line {}: expected key=value", lineno + 1),
        })?;
        let key = key.trim().trim_start_matches("--");
        if key.is_empty() || key == "config" {
            return Err(CliError::Usage { flag: "--config".into(), msg: format!("line {}: invalid key '{key}'", lineno + 1) });
        }
        out.push((key.to_string(), value.trim().to_string()));
    }
    Ok(out)
}

/// Finds the `--config` value, if any, in raw arguments.
fn config_path(args: &[String]) -> Result<Option<(usize, usize, String)>, CliError> {
    for (i, a) in args.iter().enumerate() {
        if a == "--config" {
            let v = args.get(i + 1).ok_or_else(|| CliError::Usage { flag: "--config".into(), msg: "missing value".into() })?;
            return Ok(Some((i, 2, v.clone())));
        }
        if let Some(v) = a.strip_prefix("--config=") {
            return Ok(Some((i, 1, v.to_string())));
        }
    }
    Ok(None)
}

/// Rewrites `args` so that file settings appear right after the subcommand
/// name and explicit flags, which come later, take precedence.
pub fn merge_config(mut args: Vec<String>, subcommands: &[&str]) -> Result<Vec<String>, CliError> {
    let Some((at, len, path)) = config_path(&args)? else {
        return Ok(args);
    };
    args.drain(at..at + len);
    let text = fs::read_to_string(Path::new(&path))
        .map_err(|e| CliError::Usage { flag: "--config".into(), msg: format!("{path}: {e}") })?;
    let pairs = parse_config(&text)?;
    let Some(sub) = args.iter().skip(1).position(|a| subcommands.contains(&a.as_str())) else {
        return Ok(args);
    };
    let insert_at = sub + 2;
    let extra: Vec<String> = pairs
        .into_iter()
        .flat_map(|(k, v)| match v.as_str() {
            "false" => vec![],
            "" | "true" => vec![format!("--{k}")],
            _ => vec![format!("--{k}"), v],
        })
        .collect();
    args.splice(insert_at..insert_at, extra);
    Ok(args)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_pairs_and_comments() {
        let pairs = parse_config("# comment\n model = (surd 1)\n\nheights=10,50\n").unwrap();
        assert_eq!(pairs, vec![("model".into(), "(surd 1)".into()), ("heights".into(), "10,50".into())]);
        assert!(parse_config("novalue").is_err());
        assert!(parse_config("config = x").is_err());
    }

    #[test]
    fn file_values_precede_flags() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.cfg");
        fs::write(&path, "model = (surd 1)\nheights = 5,10\n").unwrap();
        let args = strings(&["frechet", "--config", path.to_str().unwrap(), "growth", "--heights", "3"]);
        let merged = merge_config(args, &["growth"]).unwrap();
        assert_eq!(merged, strings(&["frechet", "growth", "--model", "(surd 1)", "--heights", "5,10", "--heights", "3"]));
    }
}
