use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactla::{Field, DEFAULT_CHAR};

use super::{path_algebra_from_strs, Algebra, Quiver};

fn default_char() -> u32 {
    DEFAULT_CHAR
}

fn default_cap() -> usize {
    16
}

/// Algebra input format: a bound quiver with relations in the relation grammar.
///
/// ```json
/// {"field_char": 32003,
///  "quiver": {"vertices": ["1","2"], "arrows": [{"name": "a", "from": "1", "to": "2"}]},
///  "relations": [],
///  "length_cap": 8}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    #[serde(default = "default_char")]
    pub field_char: u32,
    pub quiver: Quiver,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default = "default_cap")]
    pub length_cap: usize,
}

impl AlgebraSpec {
    pub fn from_json(text: &str) -> Result<AlgebraSpec> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn build(&self) -> Result<Arc<Algebra>> {
        let field = Field::new(self.field_char)?;
        let rels: Vec<&str> = self.relations.iter().map(String::as_str).collect();
        path_algebra_from_strs(&self.quiver, &rels, self.length_cap, field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_builds() {
        let text = r#"{"quiver": {"vertices": ["1","2"], "arrows": [{"name":"a","from":"1","to":"2"}]}}"#;
        let spec = AlgebraSpec::from_json(text).unwrap();
        assert_eq!(spec.field_char, DEFAULT_CHAR);
        assert_eq!(spec.build().unwrap().dim(), 3);
        let back: AlgebraSpec = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(back, spec);
    }

    #[test]
    fn rejects_bad_input() {
        let bad_char = r#"{"field_char": 12, "quiver": {"vertices": ["1"]}}"#;
        assert!(AlgebraSpec::from_json(bad_char).unwrap().build().is_err());
        let bad_arrow = r#"{"quiver": {"vertices": ["1"], "arrows": [{"name":"a","from":"1","to":"9"}]}}"#;
        assert!(AlgebraSpec::from_json(bad_arrow).is_err());
    }
}
