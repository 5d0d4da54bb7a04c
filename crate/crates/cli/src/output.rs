use std::io::{self, Write};

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MethodValue {
    pub method: String,
    pub value: String,
}

/// One result line (or block, in text mode).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub op: String,
    pub args: Vec<(String, String)>,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub methods: Option<Vec<MethodValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    op: &'a str,
    args: serde_json::Map<String, serde_json::Value>,
    value: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    methods: Option<&'a [MethodValue]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<&'a str>,
}

impl OutputRecord {
    pub fn new(op: &str, args: Vec<(&str, String)>, value: impl ToString) -> Self {
        OutputRecord {
            op: op.to_string(),
            args: args.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            value: value.to_string(),
            methods: None,
            verdict: None,
        }
    }

    /// Attaches per-method values; the verdict is `OK` iff all are equal.
    pub fn with_methods(mut self, methods: Vec<(&str, String)>) -> Self {
        let agree = methods.windows(2).all(|w| w[0].1 == w[1].1);
        self.verdict = Some(if agree { "OK" } else { "MISMATCH" }.to_string());
        self.methods = Some(
            methods
                .into_iter()
                .map(|(m, v)| MethodValue { method: m.to_string(), value: v })
                .collect(),
        );
        self
    }

    pub fn mismatch(&self) -> bool {
        self.verdict.as_deref() == Some("MISMATCH")
    }

    pub fn to_json(&self) -> String {
        let args = self
            .args
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        let rec = JsonRecord {
            op: &self.op,
            args,
            value: &self.value,
            methods: self.methods.as_deref(),
            verdict: self.verdict.as_deref(),
        };
        serde_json::to_string(&rec).expect("plain strings serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = self.value.clone();
        if let Some(methods) = &self.methods {
            let width = methods.iter().map(|m| m.method.len()).max().unwrap_or(0);
            for m in methods {
                out += &format!("\n{:<width$}  {}", m.method, m.value);
            }
        }
        if let Some(v) = &self.verdict {
            out += &format!("\nverdict {v}");
        }
        out
    }

    pub fn emit(&self, json: bool) -> io::Result<()> {
        let mut stdout = io::stdout().lock();
        if json {
            writeln!(stdout, "{}", self.to_json())
        } else {
            writeln!(stdout, "{}", self.to_text())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let rec = OutputRecord::new("sumrule", vec![("k", "2".into())], "24")
            .with_methods(vec![("operator", "24".into()), ("bruteforce", "24".into())]);
        let v: serde_json::Value = serde_json::from_str(&rec.to_json()).unwrap();
        assert_eq!(v["op"], "sumrule");
        assert_eq!(v["args"]["k"], "2");
        assert_eq!(v["value"], "24");
        assert_eq!(v["methods"][1]["method"], "bruteforce");
        assert_eq!(v["verdict"], "OK");
        let plain = OutputRecord::new("3j", vec![], "1/6");
        assert_eq!(plain.to_json(), r#"{"op":"3j","args":{},"value":"1/6"}"#);
        assert_eq!(plain.to_text(), "1/6");
    }

    #[test]
    fn mismatch_verdict() {
        let rec = OutputRecord::new("x", vec![], "1").with_methods(vec![("a", "1".into()), ("b", "2".into())]);
        assert!(rec.mismatch());
        assert!(rec.to_text().ends_with("verdict MISMATCH"));
    }
}
