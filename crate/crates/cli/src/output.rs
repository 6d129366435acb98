use clap::ValueEnum;
use heegner_core::Rational;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// A command's full result: echo, parameters, payload and the code paths
/// that produced it. All numbers are exact strings.
pub struct Record {
    pub command: &'static str,
    pub parameters: Map<String, Value>,
    pub result: Value,
    pub provenance: Vec<&'static str>,
}

impl Record {
    pub fn new(command: &'static str) -> Self {
        Record { command, parameters: Map::new(), result: Value::Null, provenance: Vec::new() }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), Value::String(value.to_string()));
        self
    }

    pub fn to_json(&self) -> String {
        let v = json!({
            "command": self.command,
            "parameters": self.parameters,
            "result": self.result,
            "provenance": self.provenance,
        });
        serde_json::to_string_pretty(&v).expect("values serialize")
    }
}

/// `(numerator, denominator)` of a reduced rational as strings.
pub fn fraction_parts(r: &Rational) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}

/// `q`, `q^2`, `q^(4/3)`.
pub fn qpow(e: &Rational) -> String {
    if e.is_integer() {
        match e.to_integer().to_string().as_str() {
            "0" => String::new(),
            "1" => "q".into(),
            s => format!("q^{s}"),
        }
    } else {
        format!("q^({e})")
    }
}

/// Plain rendering `c0 + c1 q + ...` of `(exponent, coefficient)` terms.
pub fn render_series<'a>(terms: impl Iterator<Item = (Rational, &'a Rational)>) -> String {
    let mut out = String::new();
    for (e, c) in terms {
        let neg = c < &Rational::from_integer(0.into());
        let abs = if neg { -c.clone() } else { c.clone() };
        let q = qpow(&e);
        let body = match (q.is_empty(), abs.is_integer() && abs.to_integer() == 1.into()) {
            (true, _) => abs.to_string(),
            (false, true) => q,
            (false, false) => format!("{abs}{q}"),
        };
        if out.is_empty() {
            out = if neg { format!("-{body}") } else { body };
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}
