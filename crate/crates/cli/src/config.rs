use std::path::Path;

use serde::Deserialize;

use crate::commands::CliError;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub field: Option<String>,
    pub json: Option<bool>,
    pub budget: Option<u64>,
    pub max_pairs: Option<u64>,
}

impl Config {
    pub fn load(path: Option<&Path>) -> Result<Config, CliError> {
        let Some(path) = path else { return Ok(Config::default()) };
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}
