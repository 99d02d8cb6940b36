use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "1";

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub verdicts: BTreeMap<String, Value>,
    pub witnesses: BTreeMap<String, Value>,
    pub invariants: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            schema: SCHEMA,
            command: command.into(),
            verdicts: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            invariants: BTreeMap::new(),
            timing_ms: None,
        }
    }

    pub fn verdict(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.verdicts.insert(key.into(), serde_json::to_value(v).unwrap());
        self
    }

    pub fn witness(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.witnesses.insert(key.into(), serde_json::to_value(v).unwrap());
        self
    }

    pub fn invariant(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.invariants.insert(key.into(), serde_json::to_value(v).unwrap());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        for (title, map) in [("verdicts", &self.verdicts), ("witnesses", &self.witnesses), ("invariants", &self.invariants)] {
            if map.is_empty() {
                continue;
            }
            writeln!(out, "{title}:").unwrap();
            for (k, v) in map {
                writeln!(out, "  {k}: {}", plain(v)).unwrap();
            }
        }
        if let Some(t) = self.timing_ms {
            writeln!(out, "time: {t} ms").unwrap();
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "n/a".into(),
        Value::Array(xs) => format!("[{}]", xs.iter().map(plain).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_is_keyed_and_versioned() {
        let mut r = Report::new("check f I");
        r.verdict("burch", true).invariant("betti", [1, 2, 4]);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], "1");
        assert_eq!(v["verdicts"]["burch"], true);
        assert!(v.get("timing_ms").is_none());
        assert!(r.to_text().contains("betti: [1, 2, 4]"));
    }
}
