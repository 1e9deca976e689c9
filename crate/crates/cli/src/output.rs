//! Number formatting and record emission.

use std::io::{self, Write};

use serde_json::{Map, Value};

/// Decimal text with 17 significant digits, which round-trips every `f64`.
///
/// Positional notation is used for moderate magnitudes, scientific otherwise.
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0.0".into()
        } else {
            "0.0".into()
        };
    }
    let sci = format!("{x:.16e}");
    let exp: i32 = sci[sci.find('e').expect("exponent") + 1..]
        .parse()
        .expect("integer exponent");
    if (-5..16).contains(&exp) {
        format!("{x:.prec$}", prec = (16 - exp) as usize)
    } else {
        sci
    }
}

/// One CSV line, comma separated, no quoting (fields never contain commas).
pub fn csv_line<W: Write + ?Sized>(w: &mut W, fields: &[String]) -> io::Result<()> {
    writeln!(w, "{}", fields.join(","))
}

/// Ordered flat JSON object builder. Numbers are stored as decimal strings.
#[derive(Debug, Default, Clone)]
pub struct Record(Map<String, Value>);

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn num(mut self, key: &str, x: f64) -> Self {
        self.0.insert(key.into(), Value::String(fmt_num(x)));
        self
    }

    pub fn int(mut self, key: &str, n: u64) -> Self {
        self.0.insert(key.into(), Value::String(n.to_string()));
        self
    }

    pub fn text(mut self, key: &str, s: &str) -> Self {
        self.0.insert(key.into(), Value::String(s.into()));
        self
    }

    pub fn flag(mut self, key: &str, b: bool) -> Self {
        self.0.insert(key.into(), Value::Bool(b));
        self
    }

    pub fn angles(self, prefix: &str, a: [f64; 4]) -> Self {
        let names = ["alpha", "beta", "gamma", "delta"];
        names
            .iter()
            .zip(a)
            .fold(self, |r, (n, x)| r.num(&format!("{prefix}{n}"), x))
    }

    pub fn into_value(self) -> Value {
        Value::Object(self.0)
    }
}

pub fn write_json<W: Write + ?Sized>(w: &mut W, v: &Value) -> io::Result<()> {
    let text = serde_json::to_string_pretty(v).map_err(io::Error::other)?;
    writeln!(w, "{text}")
}
