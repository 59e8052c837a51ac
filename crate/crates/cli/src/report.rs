//! Output in the two supported formats.

use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// Tab-separated tables and `key: value` blocks.
    Text,
    /// One JSON document; fields in declaration order, floats round-trip.
    Json,
}

pub struct Emitter {
    format: Format,
}

impl Emitter {
    pub fn new(format: Format) -> Self {
        Emitter { format }
    }

    /// Writes `value` as JSON, or the text produced by `text`.
    pub fn emit<T: Serialize + ?Sized>(&self, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        match self.format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut lock, value)?;
                writeln!(lock)?;
            }
            Format::Text => lock.write_all(text().as_bytes())?,
        }
        Ok(())
    }
}
