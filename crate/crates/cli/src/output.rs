//! JSON emission with reproducible float formatting.
//!
//! Every floating-point number is serialized in scientific notation with 17
//! significant digits, which round-trips f64 exactly, so re-running a command
//! with the same flags and seed reproduces byte-identical output. Non-finite
//! values (which only diagnostic paths can produce) serialize as null.

use std::io;

use serde::Serialize;

pub struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        if value.is_finite() {
            write!(writer, "{:.16e}", value)
        } else {
            writer.write_all(b"null")
        }
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.write_f64(writer, value as f64)
    }
}

pub fn to_json(value: &impl Serialize) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SciFormatter);
    value
        .serialize(&mut ser)
        .expect("report values serialize as JSON");
    String::from_utf8(out).expect("serializer emits UTF-8")
}

pub fn fmt_f64(value: f64) -> String {
    if value.is_finite() {
        format!("{:.16e}", value)
    } else {
        "null".to_string()
    }
}
