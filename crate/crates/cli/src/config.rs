//! Settings resolved as flag > environment > config file > default.

use std::collections::HashMap;
use std::env;
use std::fs;
use std::path::PathBuf;

pub const DEFAULT_PRECISION: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub cache_dir: Option<PathBuf>,
    pub network: bool,
    pub precision: usize,
    pub fixtures: Option<PathBuf>,
}

#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub config: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub network: Option<bool>,
    pub precision: Option<usize>,
    pub fixtures: Option<PathBuf>,
}

pub fn parse_bool(s: &str) -> Option<bool> {
    match s.trim().to_ascii_lowercase().as_str() {
        "on" | "true" | "1" | "yes" => Some(true),
        "off" | "false" | "0" | "no" => Some(false),
        _ => None,
    }
}

/// `key = value` lines; `#` starts a comment.
pub fn parse_file(text: &str) -> Result<HashMap<String, String>, String> {
    let mut out = HashMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(format!("config line {}: expected key=value", i + 1));
        };
        let k = k.trim().to_string();
        if !matches!(k.as_str(), "cache_dir" | "network" | "precision" | "fixtures") {
            return Err(format!("config line {}: unknown key {k:?}", i + 1));
        }
        out.insert(k, v.trim().to_string());
    }
    Ok(out)
}

fn default_cache_dir() -> Option<PathBuf> {
    env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .map(|d| d.join("fcl"))
}

/// `env` is passed in so precedence can be tested without touching the process.
pub fn resolve(flags: &Overrides, env: &dyn Fn(&str) -> Option<String>) -> Result<Config, String> {
    let path = flags.config.clone().or_else(|| env("FCL_CONFIG").map(PathBuf::from));
    let file = match path {
        Some(p) => {
            let text = fs::read_to_string(&p).map_err(|e| format!("cannot read config {}: {e}", p.display()))?;
            parse_file(&text)?
        }
        None => HashMap::new(),
    };
    let pick = |env_key: &str, file_key: &str| env(env_key).or_else(|| file.get(file_key).cloned());

    let network = match flags.network {
        Some(b) => b,
        None => match pick("FCL_NETWORK", "network") {
            Some(s) => parse_bool(&s).ok_or_else(|| format!("bad network setting {s:?}"))?,
            None => false,
        },
    };
    let precision = match flags.precision {
        Some(p) => p,
        None => match pick("FCL_PRECISION", "precision") {
            Some(s) => s.trim().parse().map_err(|_| format!("bad precision {s:?}"))?,
            None => DEFAULT_PRECISION,
        },
    };
    let cache_dir =
        flags.cache_dir.clone().or_else(|| pick("FCL_CACHE_DIR", "cache_dir").map(PathBuf::from)).or_else(default_cache_dir);
    let fixtures = flags.fixtures.clone().or_else(|| pick("FCL_FIXTURES", "fixtures").map(PathBuf::from));
    Ok(Config { cache_dir, network, precision, fixtures })
}
