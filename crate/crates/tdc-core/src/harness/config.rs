//! Suite configuration: flat `key = value` text with `#` comments. Ranges
//! are written `lo..hi` and are inclusive on both ends.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("malformed line {0}: expected 'key = value'")]
    MalformedLine(usize),
    #[error("unknown key {0:?}")]
    UnknownKey(String),
    #[error("bad value {value:?} for key {key:?}")]
    BadValue { key: String, value: String },
    #[error("empty range for key {0:?}")]
    EmptyRange(String),
}

/// Inclusive integer range.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct InclusiveRange {
    pub lo: usize,
    pub hi: usize,
}

impl InclusiveRange {
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

/// Instance families, per-theorem parameter ranges, and budgets for a suite
/// run. Node budgets keep reports deterministic; wall-clock budgets are
/// deliberately absent here.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub budget_nodes: u64,
    pub paths: InclusiveRange,
    pub cycles: InclusiveRange,
    pub stars: InclusiveRange,
    pub completes: InclusiveRange,
    pub randoms: usize,
    pub random_max_n: usize,
    pub henning_max_n: usize,
    pub k_exact: InclusiveRange,
    pub k_formula: InclusiveRange,
    pub m_formula: InclusiveRange,
    pub sub_max_vertices: usize,
    pub hunt_samples: usize,
    pub hunt_max_n: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            budget_nodes: 50_000_000,
            paths: InclusiveRange { lo: 2, hi: 16 },
            cycles: InclusiveRange { lo: 3, hi: 16 },
            stars: InclusiveRange { lo: 3, hi: 6 },
            completes: InclusiveRange { lo: 3, hi: 5 },
            randoms: 5,
            random_max_n: 8,
            henning_max_n: 10,
            k_exact: InclusiveRange { lo: 2, hi: 4 },
            k_formula: InclusiveRange { lo: 9, hi: 13 },
            m_formula: InclusiveRange { lo: 1, hi: 6 },
            sub_max_vertices: 16,
            hunt_samples: 8,
            hunt_max_n: 5,
        }
    }
}

fn parse_range(key: &str, value: &str) -> Result<InclusiveRange, ConfigError> {
    let bad = || ConfigError::BadValue {
        key: key.to_string(),
        value: value.to_string(),
    };
    let (lo, hi) = match value.split_once("..") {
        Some((lo, hi)) => (
            lo.trim().parse::<usize>().map_err(|_| bad())?,
            hi.trim().parse::<usize>().map_err(|_| bad())?,
        ),
        None => {
            let v = value.parse::<usize>().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(ConfigError::EmptyRange(key.to_string()));
    }
    Ok(InclusiveRange { lo, hi })
}

impl SuiteConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut config = SuiteConfig::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or(ConfigError::MalformedLine(i + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = || ConfigError::BadValue {
                key: key.to_string(),
                value: value.to_string(),
            };
            match key {
                "seed" => config.seed = value.parse().map_err(|_| bad())?,
                "budget_nodes" => config.budget_nodes = value.parse().map_err(|_| bad())?,
                "paths" => config.paths = parse_range(key, value)?,
                "cycles" => config.cycles = parse_range(key, value)?,
                "stars" => config.stars = parse_range(key, value)?,
                "completes" => config.completes = parse_range(key, value)?,
                "randoms" => config.randoms = value.parse().map_err(|_| bad())?,
                "random_max_n" => config.random_max_n = value.parse().map_err(|_| bad())?,
                "henning_max_n" => config.henning_max_n = value.parse().map_err(|_| bad())?,
                "k_exact" => config.k_exact = parse_range(key, value)?,
                "k_formula" => config.k_formula = parse_range(key, value)?,
                "m_formula" => config.m_formula = parse_range(key, value)?,
                "sub_max_vertices" => config.sub_max_vertices = value.parse().map_err(|_| bad())?,
                "hunt_samples" => config.hunt_samples = value.parse().map_err(|_| bad())?,
                "hunt_max_n" => config.hunt_max_n = value.parse().map_err(|_| bad())?,
                other => return Err(ConfigError::UnknownKey(other.to_string())),
            }
        }
        if config.paths.lo < 2 {
            return Err(ConfigError::BadValue {
                key: "paths".into(),
                value: "paths must start at 2".into(),
            });
        }
        if config.cycles.lo < 3 {
            return Err(ConfigError::BadValue {
                key: "cycles".into(),
                value: "cycles must start at 3".into(),
            });
        }
        if config.stars.lo < 1 || config.completes.lo < 1 {
            return Err(ConfigError::BadValue {
                key: "stars/completes".into(),
                value: "family parameters must be >= 1".into(),
            });
        }
        if config.k_exact.lo < 2 || config.k_formula.lo < 9 {
            return Err(ConfigError::BadValue {
                key: "k ranges".into(),
                value: "k_exact starts at 2, k_formula at 9".into(),
            });
        }
        Ok(config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_overrides_and_comments() {
        let text = "# suite\nseed = 7\npaths = 2..8   # short\nrandoms = 0\n";
        let config = SuiteConfig::parse(text).unwrap();
        assert_eq!(config.seed, 7);
        assert_eq!(config.paths, InclusiveRange { lo: 2, hi: 8 });
        assert_eq!(config.randoms, 0);
        assert_eq!(config.cycles, SuiteConfig::default().cycles);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SuiteConfig::parse("nonsense").is_err());
        assert!(SuiteConfig::parse("mystery = 4").is_err());
        assert!(SuiteConfig::parse("paths = 9..3").is_err());
        assert!(SuiteConfig::parse("k_formula = 5..13").is_err());
        assert!(SuiteConfig::parse("stars = 0..2").is_err());
    }
}
