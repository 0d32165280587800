//! Source units: one input file, or one function extracted from a file.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Languages understood by the front end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Language {
    #[serde(rename = "C")]
    C,
    #[serde(rename = "C++")]
    Cpp,
    #[serde(rename = "Fortran")]
    Fortran,
}

impl Language {
    pub const ALL: [Language; 3] = [Language::C, Language::Cpp, Language::Fortran];

    pub fn name(self) -> &'static str {
        match self {
            Language::C => "C",
            Language::Cpp => "C++",
            Language::Fortran => "Fortran",
        }
    }

    /// Default extension mapping used by corpus ingestion.
    ///
    /// Only free-form Fortran extensions are recognised; fixed-form sources
    /// (`.f`, `.for`, `.f77`) are not handled by the Fortran front end.
    pub fn from_extension(ext: &str) -> Option<Language> {
        match ext {
            "c" | "h" => Some(Language::C),
            "cc" | "cpp" | "cxx" | "c++" | "hh" | "hpp" | "hxx" | "C" | "H" => Some(Language::Cpp),
            "f90" | "f95" | "f03" | "f08" | "F90" | "F95" | "F03" | "F08" => {
                Some(Language::Fortran)
            }
            _ => None,
        }
    }

    pub fn from_path(path: &Path) -> Option<Language> {
        path.extension()
            .and_then(|e| e.to_str())
            .and_then(Language::from_extension)
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Language {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "c" => Ok(Language::C),
            "c++" | "cpp" | "cxx" => Ok(Language::Cpp),
            "fortran" | "f90" | "f" => Ok(Language::Fortran),
            _ => Err(Error::UnsupportedLanguage(s.to_string())),
        }
    }
}

/// One input file or extracted function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceUnit {
    pub id: String,
    pub language: Language,
    /// Path or repo/file locator the text came from.
    pub origin: String,
    pub text: String,
}

impl SourceUnit {
    pub fn new(
        id: impl Into<String>,
        language: Language,
        origin: impl Into<String>,
        text: impl Into<String>,
    ) -> Self {
        SourceUnit {
            id: id.into(),
            language,
            origin: origin.into(),
            text: text.into(),
        }
    }

    /// Builds a unit from raw bytes, replacing invalid UTF-8 sequences.
    pub fn from_bytes(
        id: impl Into<String>,
        language: Language,
        origin: impl Into<String>,
        bytes: &[u8],
    ) -> Self {
        SourceUnit::new(id, language, origin, String::from_utf8_lossy(bytes).into_owned())
    }

    pub fn byte_len(&self) -> usize {
        self.text.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extension_mapping() {
        assert_eq!(Language::from_extension("f90"), Some(Language::Fortran));
        assert_eq!(Language::from_extension("c"), Some(Language::C));
        assert_eq!(Language::from_extension("hpp"), Some(Language::Cpp));
        assert_eq!(Language::from_extension("md"), None);
        assert_eq!(Language::from_extension("f"), None);
    }

    #[test]
    fn language_names_round_trip() {
        for lang in Language::ALL {
            assert_eq!(lang.name().parse::<Language>().unwrap(), lang);
            let json = serde_json::to_string(&lang).unwrap();
            assert_eq!(serde_json::from_str::<Language>(&json).unwrap(), lang);
        }
        assert!("cobol".parse::<Language>().is_err());
    }

    #[test]
    fn lossy_decoding() {
        let u = SourceUnit::from_bytes("x", Language::C, "x.c", b"int a\xff;");
        assert!(u.text.contains('\u{FFFD}'));
    }
}
