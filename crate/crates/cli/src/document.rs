//! The sectioned input format.
//!
//! ```text
//! # comment
//! [foliation]
//! P = -y
//! Q = x
//! [divisor]
//! zero = x*y*(x-y)
//! pole = x+y
//! [params]
//! lambda = 2
//! [projective]
//! A = y*z
//! B = lambda*x*z
//! C = -(lambda+1)*x*y
//! curve = x*y*z
//! points = 1:0:0; 0:1:0; 0:0:1
//! ```

use std::collections::BTreeMap;

use folia_core::poly::{parse_poly_with, parse_rational, PolyError, VARIABLES};
use folia_core::projective::{
    ProjectiveCurve, ProjectiveError, ProjectiveFoliation, ProjectivePoint,
};
use folia_core::{BalancedEquation, FoliationGerm, GermError, Poly, Rational};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {key}: {source}")]
    Expression {
        line: usize,
        key: String,
        source: PolyError,
    },
    #[error("parameter {name}: {message}")]
    Parameter { name: String, message: String },
    #[error("missing [{section}] {key}")]
    Missing {
        section: &'static str,
        key: &'static str,
    },
    #[error("a document holds either a [foliation] or a [projective] block, not both")]
    BothBlocks,
    #[error("[foliation]: {0}")]
    Germ(#[from] GermError),
    #[error("[projective]: {0}")]
    Projective(#[from] ProjectiveError),
}

/// An entry and the line it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub line: usize,
    pub text: String,
}

const SECTIONS: [(&str, &[&str]); 4] = [
    ("foliation", &["P", "Q"]),
    ("divisor", &["zero", "pole"]),
    ("projective", &["A", "B", "C", "curve", "points"]),
    ("params", &[]),
];

/// The document before any expression is parsed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawDocument {
    sections: BTreeMap<String, BTreeMap<String, Entry>>,
}

impl RawDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let mut doc = RawDocument::default();
        let mut current: Option<String> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(name) = content.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                let name = match name.trim() {
                    "germ" => "foliation",
                    n => n,
                };
                if !SECTIONS.iter().any(|(s, _)| *s == name) {
                    return Err(DocumentError::Syntax {
                        line,
                        message: format!("unknown section [{name}]"),
                    });
                }
                if doc.sections.contains_key(name) {
                    return Err(DocumentError::Syntax {
                        line,
                        message: format!("section [{name}] appears twice"),
                    });
                }
                doc.sections.insert(name.to_string(), BTreeMap::new());
                current = Some(name.to_string());
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                return Err(DocumentError::Syntax {
                    line,
                    message: "expected `key = value`".into(),
                });
            };
            let Some(section) = &current else {
                return Err(DocumentError::Syntax {
                    line,
                    message: "entry outside of a section".into(),
                });
            };
            let key = key.trim();
            let allowed = SECTIONS
                .iter()
                .find(|(s, _)| s == section)
                .expect("known")
                .1;
            if section != "params" && !allowed.contains(&key) {
                return Err(DocumentError::Syntax {
                    line,
                    message: format!("unknown key `{key}` in [{section}]"),
                });
            }
            let entries = doc.sections.get_mut(section).expect("section exists");
            if entries.contains_key(key) {
                return Err(DocumentError::Syntax {
                    line,
                    message: format!("`{key}` given twice"),
                });
            }
            entries.insert(
                key.to_string(),
                Entry {
                    line,
                    text: value.trim().to_string(),
                },
            );
        }
        Ok(doc)
    }

    pub fn has_section(&self, name: &str) -> bool {
        self.sections.contains_key(name)
    }

    fn get(&self, section: &str, key: &str) -> Option<&Entry> {
        self.sections.get(section)?.get(key)
    }

    /// Parameters of the `[params]` section overridden by `overrides`.
    pub fn params(
        &self,
        overrides: &[(String, String)],
    ) -> Result<BTreeMap<String, Rational>, DocumentError> {
        let mut texts: BTreeMap<String, String> = self
            .sections
            .get("params")
            .map(|s| s.iter().map(|(k, e)| (k.clone(), e.text.clone())).collect())
            .unwrap_or_default();
        for (k, v) in overrides {
            texts.insert(k.clone(), v.clone());
        }
        let mut out = BTreeMap::new();
        for (name, text) in texts {
            let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                && !(name.len() == 1 && VARIABLES.contains(&name.chars().next().unwrap()));
            if !valid {
                return Err(DocumentError::Parameter {
                    name,
                    message: "not a valid parameter name".into(),
                });
            }
            let value = parse_rational(&text).map_err(|e| DocumentError::Parameter {
                name: name.clone(),
                message: e.to_string(),
            })?;
            out.insert(name, value);
        }
        Ok(out)
    }
}

pub fn parse_param(arg: &str) -> Result<(String, String), String> {
    let (k, v) = arg
        .split_once('=')
        .ok_or_else(|| format!("expected NAME=VALUE, got `{arg}`"))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

/// A document with every expression parsed and validated.
#[derive(Clone, Debug)]
pub struct Document {
    pub params: BTreeMap<String, Rational>,
    pub foliation: Option<FoliationGerm>,
    pub balanced: Option<BalancedEquation>,
    pub projective: Option<ProjectiveBlock>,
}

#[derive(Clone, Debug)]
pub struct ProjectiveBlock {
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
    pub curve: Option<ProjectiveCurve>,
    pub points: Vec<ProjectivePoint>,
}

impl ProjectiveBlock {
    pub fn foliation(&self) -> Result<ProjectiveFoliation, ProjectiveError> {
        ProjectiveFoliation::new(self.a.clone(), self.b.clone(), self.c.clone())
    }
}

fn points(entry: &Entry) -> Result<Vec<ProjectivePoint>, DocumentError> {
    let err = |message: String| DocumentError::Syntax {
        line: entry.line,
        message,
    };
    let mut out = Vec::new();
    for item in entry
        .text
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
    {
        let inner = item.trim_start_matches('[').trim_end_matches(']');
        let parts: Vec<&str> = if inner.contains(':') {
            inner.split(':').collect()
        } else {
            inner.split(',').collect()
        };
        if parts.len() != 3 {
            return Err(err(format!("point `{item}` needs three coordinates")));
        }
        let mut coords = Vec::with_capacity(3);
        for p in parts {
            coords.push(parse_rational(p).map_err(|e| err(format!("point `{item}`: {e}")))?);
        }
        let coords: [Rational; 3] = coords.try_into().expect("three coordinates");
        out.push(ProjectivePoint::new(coords).map_err(|e| err(format!("point `{item}`: {e}")))?);
    }
    Ok(out)
}

impl Document {
    pub fn parse(text: &str, overrides: &[(String, String)]) -> Result<Self, DocumentError> {
        let raw = RawDocument::parse(text)?;
        if raw.has_section("foliation") && raw.has_section("projective") {
            return Err(DocumentError::BothBlocks);
        }
        let params = raw.params(overrides)?;
        let expr = |section: &'static str,
                    key: &'static str,
                    arity: usize|
         -> Result<Option<Poly>, DocumentError> {
            match raw.get(section, key) {
                None => Ok(None),
                Some(e) => parse_poly_with(&e.text, arity, &params)
                    .map(Some)
                    .map_err(|source| DocumentError::Expression {
                        line: e.line,
                        key: key.to_string(),
                        source,
                    }),
            }
        };
        let required = |section: &'static str, key: &'static str, arity: usize| {
            expr(section, key, arity)?.ok_or(DocumentError::Missing { section, key })
        };

        let foliation = if raw.has_section("foliation") {
            let p = required("foliation", "P", 2)?;
            let q = required("foliation", "Q", 2)?;
            Some(FoliationGerm::new(p, q)?)
        } else {
            None
        };
        let balanced = if raw.has_section("divisor") {
            let f = required("divisor", "zero", 2)?;
            let h = expr("divisor", "pole", 2)?;
            Some(BalancedEquation::from_polys(f, h)?)
        } else {
            None
        };
        let projective = if raw.has_section("projective") {
            Some(ProjectiveBlock {
                a: required("projective", "A", 3)?,
                b: required("projective", "B", 3)?,
                c: required("projective", "C", 3)?,
                curve: expr("projective", "curve", 3)?
                    .map(ProjectiveCurve::new)
                    .transpose()?,
                points: raw
                    .get("projective", "points")
                    .map(points)
                    .transpose()?
                    .unwrap_or_default(),
            })
        } else {
            None
        };
        Ok(Document {
            params,
            foliation,
            balanced,
            projective,
        })
    }
}
