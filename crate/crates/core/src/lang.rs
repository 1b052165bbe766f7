use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Programming language of a subject repository or file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubjectLanguage {
    Python,
    Java,
}

impl SubjectLanguage {
    pub const ALL: [SubjectLanguage; 2] = [SubjectLanguage::Python, SubjectLanguage::Java];

    pub fn as_str(self) -> &'static str {
        match self {
            SubjectLanguage::Python => "python",
            SubjectLanguage::Java => "java",
        }
    }

    /// Classify strictly by file extension.
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()? {
            "py" => Some(SubjectLanguage::Python),
            "java" => Some(SubjectLanguage::Java),
            _ => None,
        }
    }
}

impl fmt::Display for SubjectLanguage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SubjectLanguage {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "python" | "py" => Ok(SubjectLanguage::Python),
            "java" => Ok(SubjectLanguage::Java),
            other => Err(format!("unknown subject language `{other}`")),
        }
    }
}
