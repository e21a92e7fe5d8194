//! CSV rows shared by the tabular commands.
//!
//! Schema: `x,ids_empirical,ids_closed,is_rational_point`. Numbers carry 15
//! significant digits in scientific notation; missing values are empty.

use std::io;

use serde::Deserialize;

pub const HEADER: [&str; 4] = ["x", "ids_empirical", "ids_closed", "is_rational_point"];

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct Row {
    pub x: f64,
    pub ids_empirical: Option<f64>,
    pub ids_closed: Option<f64>,
    #[serde(deserialize_with = "de_flag")]
    pub is_rational_point: bool,
}

fn de_flag<'de, D: serde::Deserializer<'de>>(d: D) -> Result<bool, D::Error> {
    let v = u8::deserialize(d)?;
    match v {
        0 => Ok(false),
        1 => Ok(true),
        _ => Err(serde::de::Error::custom(format!("flag must be 0 or 1, got {v}"))),
    }
}

/// Fifteen significant digits.
pub fn fmt_num(v: f64) -> String {
    format!("{v:.14e}")
}

pub fn write_csv<W: io::Write>(rows: &[Row], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for r in rows {
        let opt = |v: Option<f64>| v.map(fmt_num).unwrap_or_default();
        w.write_record([
            fmt_num(r.x),
            opt(r.ids_empirical),
            opt(r.ids_closed),
            if r.is_rational_point { "1" } else { "0" }.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_csv_string(rows: &[Row]) -> String {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf).expect("writing CSV to memory cannot fail");
    String::from_utf8(buf).expect("CSV output is ASCII")
}

pub fn read_csv(text: &str) -> csv::Result<Vec<Row>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.deserialize().collect()
}
