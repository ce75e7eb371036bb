//! Run configuration: a simple key=value file overridable by flags
//! (flags win). Reproducible suites depend on every knob being pinned here.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use silverline_core::algebraic::parse_rational;
use silverline_core::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "text" => Ok(Self::Text),
            other => Err(Error::Precondition(format!("unknown output format: {other}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Target width for isolating intervals (default 10^-20).
    pub precision_width: BigRational,
    /// Per-operation degree bounds, e.g. "mu" and "dichotomy".
    pub degree_bounds: BTreeMap<String, usize>,
    pub tile_counts: usize,
    pub output_format: OutputFormat,
    pub digits: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        let mut degree_bounds = BTreeMap::new();
        degree_bounds.insert("mu".to_string(), 10);
        degree_bounds.insert("dichotomy".to_string(), 10);
        Self {
            precision_width: BigRational::new(BigInt::one(), BigInt::from(10u8).pow(20)),
            degree_bounds,
            tile_counts: 50,
            output_format: OutputFormat::Json,
            digits: 12,
        }
    }
}

impl RunConfig {
    /// Parses `key=value` lines; `#` starts a comment. Unknown keys error so
    /// typos never silently fall back to defaults.
    pub fn load(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Precondition(format!("cannot read config {}: {e}", path.display())))?;
        let mut cfg = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Precondition(format!("config line {} is not key=value", lineno + 1)))?;
            cfg.set(key.trim(), value.trim())?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), Error> {
        match key {
            "precision_width" => {
                self.precision_width = parse_rational(value)
                    .ok_or_else(|| Error::Precondition(format!("bad rational: {value}")))?;
            }
            "tile_counts" => {
                self.tile_counts = value
                    .parse()
                    .map_err(|_| Error::Precondition(format!("bad integer: {value}")))?;
            }
            "output_format" => self.output_format = OutputFormat::parse(value)?,
            "digits" => {
                self.digits = value
                    .parse()
                    .map_err(|_| Error::Precondition(format!("bad integer: {value}")))?;
            }
            _ => {
                if let Some(op) = key.strip_prefix("degree_bound.") {
                    let bound: usize = value
                        .parse()
                        .map_err(|_| Error::Precondition(format!("bad integer: {value}")))?;
                    self.degree_bounds.insert(op.to_string(), bound);
                } else {
                    return Err(Error::Precondition(format!("unknown config key: {key}")));
                }
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), Error> {
        use num_traits::Signed;
        if !self.precision_width.is_positive() {
            return Err(Error::Precondition("precision_width must be > 0".into()));
        }
        if self.tile_counts == 0 {
            return Err(Error::Precondition("tile_counts must be >= 1".into()));
        }
        for (op, b) in &self.degree_bounds {
            if *b == 0 {
                return Err(Error::Precondition(format!("degree_bound.{op} must be >= 1")));
            }
        }
        Ok(())
    }

    pub fn degree_bound(&self, op: &str) -> usize {
        self.degree_bounds.get(op).copied().unwrap_or(10)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn file_then_flag_precedence() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "digits=8 # comment\ndegree_bound.mu=6\noutput_format=csv").unwrap();
        let mut cfg = RunConfig::load(f.path()).unwrap();
        assert_eq!(cfg.digits, 8);
        assert_eq!(cfg.degree_bound("mu"), 6);
        assert_eq!(cfg.output_format, OutputFormat::Csv);
        // Flags win.
        cfg.set("digits", "12").unwrap();
        assert_eq!(cfg.digits, 12);
    }

    #[test]
    fn unknown_keys_rejected() {
        let mut cfg = RunConfig::default();
        assert!(cfg.set("typo_key", "1").is_err());
        assert!(cfg.set("precision_width", "0").is_ok());
        assert!(cfg.validate().is_err());
    }
}
