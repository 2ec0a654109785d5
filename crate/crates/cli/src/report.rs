//! Results as printed by the tool, in plain text or JSON.
//!
//! JSON numbers use the shortest decimal that reads back to the same double,
//! so `Report::from_json(&r.to_json()) == r` bit for bit. Non-finite values
//! have no JSON number form and are written as the strings `"NaN"`,
//! `"Infinity"` and `"-Infinity"`.

use std::fmt::{self, Write as _};

use flatdual::{Coefficient, DiffResult};
use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

/// An `f64` with a JSON encoding for every value, equal by bit pattern
/// (all NaNs are equal to each other).
#[derive(Debug, Clone, Copy)]
pub struct JsonReal(pub f64);

impl PartialEq for JsonReal {
    fn eq(&self, other: &Self) -> bool {
        self.0.to_bits() == other.0.to_bits() || (self.0.is_nan() && other.0.is_nan())
    }
}

impl Serialize for JsonReal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v = self.0;
        if v.is_finite() {
            s.serialize_f64(v)
        } else if v.is_nan() {
            s.serialize_str("NaN")
        } else if v > 0.0 {
            s.serialize_str("Infinity")
        } else {
            s.serialize_str("-Infinity")
        }
    }
}

impl<'de> Deserialize<'de> for JsonReal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct RealVisitor;

        impl Visitor<'_> for RealVisitor {
            type Value = JsonReal;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number or one of \"NaN\", \"Infinity\", \"-Infinity\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<JsonReal, E> {
                Ok(JsonReal(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonReal, E> {
                Ok(JsonReal(v as f64))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonReal, E> {
                Ok(JsonReal(v as f64))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonReal, E> {
                match v {
                    "NaN" => Ok(JsonReal(f64::NAN)),
                    "Infinity" => Ok(JsonReal(f64::INFINITY)),
                    "-Infinity" => Ok(JsonReal(f64::NEG_INFINITY)),
                    _ => Err(E::invalid_value(de::Unexpected::Str(v), &self)),
                }
            }
        }

        d.deserialize_any(RealVisitor)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JsonComplex {
    pub re: JsonReal,
    pub im: JsonReal,
}

impl From<Coefficient> for JsonComplex {
    fn from(c: Coefficient) -> Self {
        JsonComplex {
            re: JsonReal(c.re),
            im: JsonReal(c.im),
        }
    }
}

impl From<JsonComplex> for Coefficient {
    fn from(c: JsonComplex) -> Self {
        Coefficient::new(c.re.0, c.im.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// `derivatives`, `gradient`, `jacobian` or `hessian`.
    pub kind: String,
    pub point: Vec<JsonComplex>,
    /// Row-major.
    pub values: Vec<JsonComplex>,
    pub shape: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nest: Option<u64>,
    pub elapsed_s: JsonReal,
    pub finite: bool,
}

impl Report {
    pub fn derivatives(
        point: Coefficient,
        table: &[Coefficient],
        nest: u64,
        elapsed_s: f64,
    ) -> Self {
        Self::new(
            "derivatives",
            &[point],
            table,
            vec![table.len()],
            Some(nest),
            elapsed_s,
        )
    }

    pub fn from_diff(r: &DiffResult, elapsed_s: f64) -> Self {
        Self::new(
            r.kind.name(),
            &r.point,
            &r.values,
            r.shape.clone(),
            None,
            elapsed_s,
        )
    }

    fn new(
        kind: &str,
        point: &[Coefficient],
        values: &[Coefficient],
        shape: Vec<usize>,
        nest: Option<u64>,
        elapsed_s: f64,
    ) -> Self {
        Report {
            kind: kind.to_string(),
            point: point.iter().map(|&c| c.into()).collect(),
            values: values.iter().map(|&c| c.into()).collect(),
            finite: values.iter().all(|c| is_finite(*c)),
            shape,
            nest,
            elapsed_s: JsonReal(elapsed_s),
        }
    }

    pub fn values(&self) -> Vec<Coefficient> {
        self.values.iter().map(|&c| c.into()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Human-readable form with 17 significant digits per component.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        let values = self.values();
        match (self.kind.as_str(), self.shape.as_slice()) {
            ("derivatives", _) => {
                if let Some(n) = self.nest.filter(|&n| n > 1) {
                    let _ = writeln!(out, "nest: {n}");
                }
                let _ = writeln!(out, "   k  D^k f");
                for (k, v) in values.iter().enumerate() {
                    let _ = writeln!(out, "{k:>4}  {}{}", format_complex(*v), flag(*v));
                }
            }
            (kind, [rows, cols]) => {
                let _ = writeln!(out, "--- {kind} ({rows} x {cols}) ---");
                for (i, row) in values.chunks(*cols).enumerate() {
                    let _ = writeln!(out, "row {i}:");
                    for v in row {
                        let _ = writeln!(out, "  {}{}", format_complex(*v), flag(*v));
                    }
                }
            }
            (kind, _) => {
                let _ = writeln!(out, "--- {kind} ---");
                for (i, v) in values.iter().enumerate() {
                    let _ = writeln!(out, "{i:>4}  {}{}", format_complex(*v), flag(*v));
                }
            }
        }
        let _ = writeln!(out, "elapsed time (s): {:.6}", self.elapsed_s.0);
        out
    }
}

fn is_finite(c: Coefficient) -> bool {
    c.re.is_finite() && c.im.is_finite()
}

fn flag(c: Coefficient) -> &'static str {
    if is_finite(c) {
        ""
    } else {
        "  (non-finite)"
    }
}

/// `a+bi` with both parts in 17-significant-digit scientific notation. The
/// result parses back as a complex literal.
pub fn format_complex(c: Coefficient) -> String {
    let sign = if c.im.is_sign_negative() { '-' } else { '+' };
    format!("{:.16e}{sign}{:.16e}i", c.re, c.im.abs())
}
