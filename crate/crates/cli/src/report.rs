use serde_json::{json, Map, Value};

/// The outcome of one command, printable as text or JSON.
pub struct Report {
    op: String,
    inputs: Vec<String>,
    result: Value,
    text: String,
    certificates: Map<String, Value>,
    positive: bool,
}

impl Report {
    pub fn new(op: &str, inputs: &[&str], result: Value, text: impl Into<String>) -> Self {
        Report {
            op: op.to_string(),
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            result,
            text: text.into(),
            certificates: Map::new(),
            positive: true,
        }
    }

    /// A decision that came out negative ("not special", "not equal", ...).
    pub fn negative(mut self) -> Self {
        self.positive = false;
        self
    }

    pub fn cert(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.certificates.insert(key.to_string(), value.into());
        self
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn to_json(&self) -> Value {
        json!({
            "op": self.op,
            "inputs": self.inputs,
            "result": self.result,
            "certificates": self.certificates,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = self.text.clone();
        for (key, value) in &self.certificates {
            let shown = match value {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("\n{key}: {shown}"));
        }
        out
    }
}
