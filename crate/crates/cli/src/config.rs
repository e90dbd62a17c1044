//! Optional key=value configuration file. Explicit command-line flags take
//! precedence over configuration entries.

use std::collections::HashMap;
use std::path::Path;

const KNOWN_KEYS: &[&str] = &[
    "Z", "z", "mass", "alpha", "n", "l", "m", "axis", "range", "family", "measures", "tol",
    "format", "out", "r_min", "r_max", "points", "spacing",
];

#[derive(Debug, Default, Clone)]
pub struct Config {
    entries: HashMap<String, String>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
        let mut entries = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                format!(
                    "config line {} is not key=value: {raw:?}",
                    lineno + 1
                )
            })?;
            let key = key.trim().to_string();
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(format!("unknown config key {key:?} on line {}", lineno + 1));
            }
            entries.insert(key, value.trim().to_string());
        }
        Ok(Config { entries })
    }

    fn raw(&self, key: &str) -> Option<&str> {
        if key == "Z" {
            return self
                .entries
                .get("Z")
                .or_else(|| self.entries.get("z"))
                .map(String::as_str);
        }
        self.entries.get(key).map(String::as_str)
    }

    pub fn get_f64(&self, key: &str) -> Result<Option<f64>, String> {
        self.raw(key)
            .map(|v| {
                v.parse::<f64>()
                    .map_err(|_| format!("config key {key} is not a number: {v:?}"))
            })
            .transpose()
    }

    pub fn get_i64(&self, key: &str) -> Result<Option<i64>, String> {
        self.raw(key)
            .map(|v| {
                v.parse::<i64>()
                    .map_err(|_| format!("config key {key} is not an integer: {v:?}"))
            })
            .transpose()
    }

    pub fn get_usize(&self, key: &str) -> Result<Option<usize>, String> {
        self.raw(key)
            .map(|v| {
                v.parse::<usize>()
                    .map_err(|_| format!("config key {key} is not a count: {v:?}"))
            })
            .transpose()
    }

    pub fn get_string(&self, key: &str) -> Option<String> {
        self.raw(key).map(str::to_string)
    }
}
