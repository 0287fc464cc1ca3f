use serde_json::Value;

use crate::config::Format;

pub struct Report {
    pub json: Value,
    pub text: String,
    /// All computed verifications hold.
    pub pass: bool,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("report serializes"),
            Format::Text => self.text.clone(),
        }
    }
}
