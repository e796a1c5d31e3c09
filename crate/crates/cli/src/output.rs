use std::io::{self, Write};

use serde_json::Value;

/// One command result: the JSON document and its tabular form.
pub struct Output {
    pub doc: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// False when a checked claim does not hold.
    pub ok: bool,
}

impl Output {
    pub fn new(doc: Value, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        Output {
            doc,
            header,
            rows,
            ok: true,
        }
    }
}

pub fn emit(out: &Output, csv: bool) -> io::Result<()> {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    if csv {
        let mut w = csv::Writer::from_writer(lock);
        w.write_record(&out.header)?;
        for r in &out.rows {
            w.write_record(r)?;
        }
        w.flush()
    } else {
        serde_json::to_writer(&mut lock, &out.doc)?;
        writeln!(lock)
    }
}
