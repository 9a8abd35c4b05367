//! Structured results of invariant computations and theorem checks.

use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not applicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(i64),
    Bool(bool),
    Text(String),
    List(Vec<Value>),
    Map(Fields),
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<u32> for Value {
    fn from(v: u32) -> Self {
        Value::Int(v as i64)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<Fields> for Value {
    fn from(v: Fields) -> Self {
        Value::Map(v)
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(v: Vec<T>) -> Self {
        Value::List(v.into_iter().map(Into::into).collect())
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(v: Option<T>) -> Self {
        match v {
            Some(v) => v.into(),
            None => Value::Text("infinite".into()),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Int(v) => s.serialize_i64(*v),
            Value::Bool(v) => s.serialize_bool(*v),
            Value::Text(v) => s.serialize_str(v),
            Value::List(v) => s.collect_seq(v),
            Value::Map(v) => v.serialize(s),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Bool(v) => write!(f, "{v}"),
            Value::Text(v) => f.write_str(v),
            Value::List(v) => {
                f.write_str("[")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("]")
            }
            Value::Map(v) => {
                f.write_str("{")?;
                for (i, (k, x)) in v.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{k}: {x}")?;
                }
                f.write_str("}")
            }
        }
    }
}

/// Named values kept in insertion order; serialized as a JSON object.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Fields(pub Vec<(String, Value)>);

impl Fields {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, name: &str, value: impl Into<Value>) {
        let value = value.into();
        match self.0.iter_mut().find(|(k, _)| k == name) {
            Some(slot) => slot.1 = value,
            None => self.0.push((name.to_string(), value)),
        }
    }

    pub fn with(mut self, name: &str, value: impl Into<Value>) -> Self {
        self.set(name, value);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.0.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn int(&self, name: &str) -> Option<i64> {
        match self.get(name)? {
            Value::Int(v) => Some(*v),
            _ => None,
        }
    }

    pub fn bool(&self, name: &str) -> Option<bool> {
        match self.get(name)? {
            Value::Bool(v) => Some(*v),
            _ => None,
        }
    }
}

impl Serialize for Fields {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub inputs: Fields,
    pub invariants: Fields,
    pub assertions: Vec<Assertion>,
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

impl CheckReport {
    pub fn new(check: &str) -> Self {
        CheckReport {
            check: check.to_string(),
            inputs: Fields::new(),
            invariants: Fields::new(),
            assertions: Vec::new(),
            verdict: Verdict::NotApplicable,
            reasons: Vec::new(),
        }
    }

    pub fn input(&mut self, name: &str, value: impl Into<Value>) {
        self.inputs.set(name, value);
    }

    pub fn set(&mut self, name: &str, value: impl Into<Value>) {
        self.invariants.set(name, value);
    }

    pub fn assert(&mut self, name: &str, holds: bool, detail: impl Into<String>) {
        self.assertions.push(Assertion {
            name: name.to_string(),
            holds,
            detail: detail.into(),
        });
    }

    pub fn reason(&mut self, text: impl Into<String>) {
        self.reasons.push(text.into());
    }

    pub fn assertion(&self, name: &str) -> Option<bool> {
        self.assertions
            .iter()
            .find(|a| a.name == name)
            .map(|a| a.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.assertions.iter().all(|a| a.holds)
    }

    /// Pass when every assertion holds, Fail otherwise.
    pub fn conclude(&mut self) {
        self.verdict = if self.all_hold() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
    }
}

fn render(f: &mut fmt::Formatter<'_>, indent: usize, key: &str, value: &Value) -> fmt::Result {
    let pad = " ".repeat(indent);
    let inline = value.to_string();
    let nested = matches!(value, Value::List(_) | Value::Map(_));
    if !nested || inline.len() <= 72 {
        return writeln!(f, "{pad}{key} = {inline}");
    }
    writeln!(f, "{pad}{key}:")?;
    match value {
        Value::List(items) => {
            for (i, item) in items.iter().enumerate() {
                render(f, indent + 2, &format!("[{i}]"), item)?;
            }
        }
        Value::Map(fields) => {
            for (k, v) in &fields.0 {
                render(f, indent + 2, k, v)?;
            }
        }
        _ => unreachable!(),
    }
    Ok(())
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.check, self.verdict)?;
        for (title, fields) in [("inputs", &self.inputs), ("invariants", &self.invariants)] {
            if !fields.0.is_empty() {
                writeln!(f, "{title}:")?;
                for (k, v) in &fields.0 {
                    render(f, 2, k, v)?;
                }
            }
        }
        if !self.assertions.is_empty() {
            writeln!(f, "assertions:")?;
            for a in &self.assertions {
                let mark = if a.holds { "ok  " } else { "FAIL" };
                writeln!(f, "  [{mark}] {}: {}", a.name, a.detail)?;
            }
        }
        for r in &self.reasons {
            writeln!(f, "note: {r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields_keep_order_and_overwrite() {
        let mut f = Fields::new().with("b", 1usize).with("a", true);
        f.set("b", 2i64);
        assert_eq!(f.0.len(), 2);
        assert_eq!(f.int("b"), Some(2));
        assert_eq!(f.bool("a"), Some(true));
    }

    #[test]
    fn verdict_from_assertions() {
        let mut r = CheckReport::new("demo");
        r.assert("one", true, "1 = 1");
        r.conclude();
        assert_eq!(r.verdict, Verdict::Pass);
        r.assert("two", false, "1 = 2");
        r.conclude();
        assert_eq!(r.verdict, Verdict::Fail);
        let text = r.to_string();
        assert!(text.starts_with("demo: fail"));
        assert!(text.contains("[FAIL] two"));
    }

    #[test]
    fn values_render() {
        let v: Value = vec![Some(3usize), None].into();
        assert_eq!(v.to_string(), "[3, infinite]");
        let m: Value = Fields::new().with("mu", 4usize).into();
        assert_eq!(m.to_string(), "{mu: 4}");
    }
}
