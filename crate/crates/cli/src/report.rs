//! JSON report emission: one object per invocation, floats printed with 17
//! significant digits.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::{Map, Value};

/// Ordered set of named results. Keys are exactly the requested measure or
/// check names.
#[derive(Debug, Default, Clone, PartialEq)]
pub struct MeasureReport {
    entries: Map<String, Value>,
}

impl MeasureReport {
    pub fn insert(&mut self, key: &str, value: Value) {
        self.entries.insert(key.to_string(), value);
    }

    /// True when every number in the report is finite.
    pub fn all_finite(&self) -> bool {
        fn finite(v: &Value) -> bool {
            match v {
                Value::Number(n) => n.as_f64().is_some_and(f64::is_finite),
                Value::Array(a) => a.iter().all(finite),
                Value::Object(o) => o.values().all(finite),
                Value::Null => false,
                _ => true,
            }
        }
        self.entries.values().all(finite)
    }

    /// Compact JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut buf = Vec::new();
        let mut ser = serde_json::Serializer::with_formatter(&mut buf, SigDigits);
        self.entries.serialize(&mut ser).expect("report serializes");
        buf.push(b'\n');
        String::from_utf8(buf).expect("JSON is UTF-8")
    }
}

/// Converts a finite float to a JSON number; non-finite values become `null`
/// and are caught by [`MeasureReport::all_finite`].
pub fn num(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

/// `x` with exactly 17 significant digits: positional for decimal exponents
/// in `[-5, 16)`, scientific otherwise.
pub fn format_sig17(x: f64) -> String {
    if x == 0.0 {
        return "0.0000000000000000".to_string();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..16).contains(&exp) {
        format!("{:.*}", (16 - exp) as usize, x)
    } else {
        format!("{mantissa}e{exp}")
    }
}

struct SigDigits;

impl Formatter for SigDigits {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(format_sig17(value).as_bytes())
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}
