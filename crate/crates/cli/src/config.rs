use std::path::Path;
use std::sync::Arc;

use qtorus::{Error, PairingSpec};
use serde::{Deserialize, Serialize};

/// The JSON description of an algebra. Only entries above the diagonal are
/// read; the lower triangle may be zero or the antisymmetric completion.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraConfig {
    pub rank: usize,
    pub root_of_unity_order: u64,
    pub zeta_exponents: Vec<Vec<i64>>,
    pub generic_parameter_count: usize,
    pub generic_exponents: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug)]
pub enum ConfigError {
    Io(String),
    Parse { field: String, message: String },
    Invalid(Error),
}

impl ConfigError {
    pub fn field(&self) -> Option<String> {
        match self {
            ConfigError::Io(_) => None,
            ConfigError::Parse { field, .. } => Some(field.clone()),
            ConfigError::Invalid(Error::InvalidSpec { field, .. }) => Some(field.clone()),
            ConfigError::Invalid(_) => None,
        }
    }
}

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConfigError::Io(m) => write!(f, "cannot read config: {m}"),
            ConfigError::Parse { field, message } => write!(f, "config field `{field}`: {message}"),
            ConfigError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl AlgebraConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let field = e.path().to_string();
            ConfigError::Parse {
                field,
                message: e.into_inner().to_string(),
            }
        })
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_spec(&self) -> Result<Arc<PairingSpec>, ConfigError> {
        if self.generic_exponents.len() != self.generic_parameter_count {
            return Err(ConfigError::Invalid(Error::InvalidSpec {
                field: "generic_exponents".into(),
                message: format!(
                    "expected {} matrices (generic_parameter_count), found {}",
                    self.generic_parameter_count,
                    self.generic_exponents.len()
                ),
            }));
        }
        PairingSpec::new(
            self.rank,
            self.root_of_unity_order,
            &self.zeta_exponents,
            &self.generic_exponents,
        )
        .map_err(ConfigError::Invalid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_field_paths() {
        let bad = r#"{"rank": 2, "root_of_unity_order": 1, "zeta_exponents": [[0, "x"], [0, 0]],
                      "generic_parameter_count": 0, "generic_exponents": []}"#;
        let err = AlgebraConfig::from_json(bad).unwrap_err();
        assert_eq!(err.field().as_deref(), Some("zeta_exponents[0][1]"));

        let missing = r#"{"rank": 2}"#;
        assert!(AlgebraConfig::from_json(missing).is_err());

        let count = r#"{"rank": 2, "root_of_unity_order": 1, "zeta_exponents": [[0, 0], [0, 0]],
                        "generic_parameter_count": 1, "generic_exponents": []}"#;
        let cfg = AlgebraConfig::from_json(count).unwrap();
        assert_eq!(
            cfg.to_spec().unwrap_err().field().as_deref(),
            Some("generic_exponents")
        );
    }

    #[test]
    fn valid_config() {
        let ok = r#"{"rank": 2, "root_of_unity_order": 3, "zeta_exponents": [[0, 1], [0, 0]],
                     "generic_parameter_count": 0, "generic_exponents": []}"#;
        let spec = AlgebraConfig::from_json(ok).unwrap().to_spec().unwrap();
        assert_eq!(spec.rank(), 2);
    }
}
